# PRUEBAS DE LAS REALIZACIONES DE TIPO A (LODAY Y REALIZACIÓN ORIENTADA)

import pytest
from hypothesis import given

from src.core.dihedral import act, identity
from src.core.polygon import catalan_number, enumerate_triangulations, from_diagonals
from src.core.realization_a import (
  all_orientations, associahedron_vertices, canonical_orientation, delta_weight, edge_directions,
  from_edge_directions, hl_vertex, hl_weight, label_polygon, loday_vertex, parse_up_set,
  transport_isometry, up_down_sets,
)
from src.models import DihedralElement, Orientation, OrientationError, PolygonError
from tests.conftest import orientation_and_triangulation, triangulations

LODAY_K4 = {(1, 2, 3), (2, 1, 3), (3, 1, 2), (1, 4, 1), (3, 2, 1)}

# ========================================================================================================
#                                          PESOS DE LODAY
# ========================================================================================================

def test_square_weights(square):
  assert delta_weight(square, 1) == 1
  assert delta_weight(square, 2) == 2


def test_pentagon_weights(pentagon_fan):
  assert delta_weight(pentagon_fan, 3) == 3
  assert delta_weight(from_diagonals(3, [(0, 2), (2, 4)]), 2) == 4


def test_loday_vertices():
  assert loday_vertex(from_diagonals(2, [(0, 2)])) == (1, 2)
  assert loday_vertex(from_diagonals(2, [(1, 3)])) == (2, 1)
  assert loday_vertex(from_diagonals(3, [(0, 2), (0, 3)])) == (1, 2, 3)
  assert loday_vertex(from_diagonals(3, [(0, 2), (2, 4)])) == (1, 4, 1)


@given(triangulations())
def test_weights_are_positive(triangulation):
  assert all(delta_weight(triangulation, j) >= 1 for j in range(1, triangulation.n + 1))

# ========================================================================================================
#                                          ORIENTACIONES
# ========================================================================================================

def test_up_down_sets():
  assert up_down_sets(canonical_orientation(4)) == ([1, 2, 3, 4], [])
  assert up_down_sets(Orientation(5, (2, 4))) == ([1, 3, 5], [2, 4])
  assert up_down_sets(Orientation(3, (2,))) == ([1, 3], [2])


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 4), (6, 16)])
def test_orientation_counts(n, count):
  orientations = all_orientations(n)
  assert len(orientations) == len(set(orientations)) == count
  assert orientations == sorted(orientations)


@pytest.mark.parametrize("text", ["1", "5", "2,x", "2,2", "0"])
def test_parse_up_set_errors(text):
  with pytest.raises(OrientationError):
    parse_up_set(text, 5)


def test_parse_up_set():
  assert parse_up_set("4,2", 5) == Orientation(5, (2, 4))
  assert parse_up_set("", 5).is_canonical
  assert parse_up_set(None, 2).is_canonical


@pytest.mark.parametrize("n", range(1, 7))
def test_edge_directions_round_trip(n):
  for orientation in all_orientations(n):
    assert from_edge_directions(n, edge_directions(orientation)) == orientation


def test_edge_directions_length_checked():
  with pytest.raises(OrientationError):
    from_edge_directions(4, (True,))

# ========================================================================================================
#                                         ETIQUETADO
# ========================================================================================================

def test_labels():
  assert label_polygon(Orientation(5, (2, 4))).label_of_position == (0, 1, 3, 5, 6, 4, 2)
  assert label_polygon(Orientation(3, (2,))).label_of_position == (0, 1, 3, 4, 2)
  assert label_polygon(canonical_orientation(4)).label_of_position == (0, 1, 2, 3, 4, 5)


def test_labeling_is_bijection():
  polygon = label_polygon(Orientation(5, (2, 4)))
  assert all(polygon.position(polygon.label(p)) == p for p in range(polygon.m))

# ========================================================================================================
#                                       PESOS DE LA REALIZACIÓN ORIENTADA
# ========================================================================================================

def test_hl_example(pentagon_fan):
  orientation = Orientation(3, (2,))
  assert [hl_weight(orientation, pentagon_fan, l) for l in (1, 2, 3)] == [1, 1, 2]
  assert hl_vertex(orientation, pentagon_fan) == (1, 3, 2)


def test_hl_weight_errors(pentagon_fan, square):
  with pytest.raises(PolygonError):
    hl_weight(Orientation(3, (2,)), pentagon_fan, 4)
  with pytest.raises(PolygonError):
    hl_vertex(Orientation(3, (2,)), square)


@given(triangulations())
def test_canonical_orientation_gives_loday(triangulation):
  assert hl_vertex(canonical_orientation(triangulation.n), triangulation) == loday_vertex(triangulation)


@pytest.mark.parametrize("triangulation", enumerate_triangulations(5), ids=str)
def test_hl_weight_bounds(triangulation):
  orientation = Orientation(5, (2, 4))
  for l in range(1, 6):
    assert 1 <= hl_weight(orientation, triangulation, l) <= l * (6 - l)


@given(orientation_and_triangulation())
def test_vertices_lie_on_hyperplane(sample):
  orientation, triangulation = sample
  n = orientation.n
  assert sum(hl_vertex(orientation, triangulation)) == n * (n + 1) // 2

# ========================================================================================================
#                                     ISOMETRÍA DE TRANSPORTE
# ========================================================================================================

@pytest.mark.parametrize("n", range(1, 7))
def test_canonical_transport_is_identity(n):
  orientation = canonical_orientation(n)
  assert all(transport_isometry(orientation, j) == identity(n + 2) for j in range(1, n + 1))


def test_transport_example():
  orientation = Orientation(3, (2,))
  isometry = transport_isometry(orientation, 2)
  assert isometry == DihedralElement(5, True, 1)
  for triangulation in enumerate_triangulations(3):
    assert hl_weight(orientation, triangulation, 2) == delta_weight(act(isometry, triangulation), 2)


def test_transport_out_of_range():
  with pytest.raises(PolygonError):
    transport_isometry(canonical_orientation(3), 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_transport_label_condition(n):
  for orientation in all_orientations(n):
    polygon = label_polygon(orientation)
    for j in range(1, n + 1):
      isometry = transport_isometry(orientation, j)
      assert isometry(polygon.position(j)) == j
      for position in range(polygon.m):
        assert (polygon.label(position) < j) == (isometry(position) < j)


@given(orientation_and_triangulation())
def test_transport_identity(sample):
  orientation, triangulation = sample
  for j in range(1, orientation.n + 1):
    isometry = transport_isometry(orientation, j)
    assert hl_weight(orientation, triangulation, j) == delta_weight(act(isometry, triangulation), j)

# ========================================================================================================
#                                    VÉRTICES DEL ASOCIAEDRO
# ========================================================================================================

def test_loday_k4():
  assert set(associahedron_vertices(canonical_orientation(3))) == LODAY_K4
  assert associahedron_vertices(canonical_orientation(2)) == [(1, 2), (2, 1)]


@pytest.mark.parametrize("n", [*range(1, 8), pytest.param(8, marks=pytest.mark.slow)])
def test_injectivity_for_every_orientation(n):
  for orientation in all_orientations(n):
    assert len(set(associahedron_vertices(orientation))) == catalan_number(n)


@pytest.mark.parametrize("n", [*range(1, 7), pytest.param(7, marks=pytest.mark.slow), pytest.param(8, marks=pytest.mark.slow)])
def test_canonical_orientation_matches_loday_exhaustively(n):
  orientation = canonical_orientation(n)
  for triangulation in enumerate_triangulations(n):
    assert hl_vertex(orientation, triangulation) == loday_vertex(triangulation)
