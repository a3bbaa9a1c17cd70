# PRUEBAS DE LAS REALIZACIONES DE TIPO B (W_n Y CICLOEDRO)

import math
from fractions import Fraction

import pytest

from src.core.centroid import barycenter
from src.core.dihedral import act, all_elements
from src.core.polygon import enumerate_triangulations, from_diagonals
from src.core.realization_b import (
  all_symmetric_orientations, cyclohedron_vertices, enumerate_symmetric_triangulations,
  hyperoctahedral_elements, is_centrally_symmetric, is_symmetric_orientation, longest_element,
  permutahedron_b_vertices,
)
from src.models import Orientation, OrientationError, PolygonError, SignedPermutation

# ========================================================================================================
#                                     GRUPO HIPEROCTAÉDRICO
# ========================================================================================================

def test_w1():
  assert [e.sigma for e in hyperoctahedral_elements(1)] == [(1, 2), (2, 1)]
  assert permutahedron_b_vertices(1) == [(1, 2), (2, 1)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_w_n_order(n):
  elements = hyperoctahedral_elements(n)
  assert len(set(elements)) == len(elements) == 2 ** n * math.factorial(n)
  assert longest_element(n) in elements


@pytest.mark.parametrize("sigma", [(1, 2, 4, 3), (1, 2, 3), (1, 1), (2, 2, 3, 3)])
def test_signed_permutation_validation(sigma):
  with pytest.raises(ValueError):
    SignedPermutation(sigma)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_permutahedron_b_barycenter(n):
  assert barycenter(permutahedron_b_vertices(n)) == (Fraction(2 * n + 1, 2),) * (2 * n)

# ========================================================================================================
#                                 TRIANGULACIONES SIMÉTRICAS
# ========================================================================================================

def test_symmetry_examples(square):
  assert is_centrally_symmetric(square)
  assert not is_centrally_symmetric(from_diagonals(4, [(0, 2), (0, 3), (0, 4)]))
  assert is_centrally_symmetric(from_diagonals(4, [(0, 2), (0, 3), (3, 5)]))


def test_symmetry_needs_even_polygon(pentagon_fan):
  with pytest.raises(PolygonError):
    is_centrally_symmetric(pentagon_fan)


@pytest.mark.parametrize("n, count", [(1, 2), (2, 6), (3, 20), (4, 70)])
def test_symmetric_counts(n, count):
  assert len(enumerate_symmetric_triangulations(n)) == count == math.comb(2 * n, n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_symmetric_set_is_closed_under_dihedral_group(n):
  symmetric = set(enumerate_symmetric_triangulations(n))
  for triangulation in enumerate_triangulations(2 * n):
    for g in all_elements(2 * n + 2):
      assert (act(g, triangulation) in symmetric) == (triangulation in symmetric)

# ========================================================================================================
#                                   ORIENTACIONES SIMÉTRICAS
# ========================================================================================================

def test_symmetric_orientation_examples():
  assert is_symmetric_orientation(Orientation(4, (2,)))
  assert is_symmetric_orientation(Orientation(4, (3,)))
  assert not is_symmetric_orientation(Orientation(4, (2, 3)))
  assert not is_symmetric_orientation(Orientation(4))


def test_symmetric_orientation_needs_even_rank():
  with pytest.raises(OrientationError):
    is_symmetric_orientation(Orientation(3))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_all_symmetric_orientations(n):
  orientations = all_symmetric_orientations(n)
  assert len(set(orientations)) == len(orientations) == 2 ** (n - 1)
  assert all(is_symmetric_orientation(o) for o in orientations)

# ========================================================================================================
#                                           CICLOEDRO
# ========================================================================================================

def test_cyclohedron_n1():
  assert cyclohedron_vertices(Orientation(2)) == [(1, 2), (2, 1)]


def test_cyclohedron_rejects_asymmetric_orientation():
  with pytest.raises(OrientationError):
    cyclohedron_vertices(Orientation(4, (2, 3)))


@pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_cyclohedron_barycenter(n):
  expected = (Fraction(2 * n + 1, 2),) * (2 * n)
  for orientation in all_symmetric_orientations(n):
    vertices = cyclohedron_vertices(orientation)
    assert len(vertices) == math.comb(2 * n, n)
    assert barycenter(vertices) == expected
