# MÓDULO DE CENTROS DE GRAVEDAD EXACTOS
# Calcula baricentros racionales sin redondeo y comprueba las identidades de suma sobre órbitas
# Cada comprobación devuelve un VerificationReport con testigo cuando falla

from fractions import Fraction
from itertools import permutations
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger as log

from ..models import Orientation, Triangulation, VerificationReport, VerificationInputError
from .dihedral import act, all_elements, reflection_s, rotation
from .realization_a import LatticePoint, delta_weight, hl_vertex

# Punto con coordenadas racionales reducidas
RationalPoint = Tuple[Fraction, ...]

# Aplicación T -> vértice; por defecto hl_vertex con la orientación dada
VertexMap = Callable[[Triangulation], LatticePoint]

# ========================================================================================================
#                                          BARICENTRO
# ========================================================================================================

def barycenter(points: Sequence[Sequence[int]]) -> RationalPoint:
  # PROMEDIO EXACTO COORDENADA A COORDENADA DE UNA LISTA NO VACÍA DE PUNTOS ENTEROS
  if len(points) == 0:
    raise VerificationInputError("No se puede calcular el baricentro de un conjunto vacío")
  dimension = len(points[0])
  for point in points:
    if len(point) != dimension:
      raise VerificationInputError(f"Dimensiones distintas: {len(point)} y {dimension}")

  # dtype object conserva enteros de Python de precisión arbitraria
  matrix = np.empty((len(points), dimension), dtype=object)
  for row, point in enumerate(points):
    matrix[row, :] = [int(c) for c in point]
  totals = matrix.sum(axis=0)
  return tuple(Fraction(int(total), len(points)) for total in totals)


def expected_center(dimension: int, numerator: int) -> RationalPoint:
  # PUNTO (numerator/2, ..., numerator/2); (n+1)/2 EN TIPO A Y (2n+1)/2 EN TIPO B
  return tuple(Fraction(numerator, 2) for _ in range(dimension))


def format_point(point: Sequence[Fraction]) -> List[str]:
  # Fracciones "p/q" sin pasar por flotantes
  return [f"{c.numerator}/{c.denominator}" for c in point]

# ========================================================================================================
#                                        PERMUTAEDRO TIPO A
# ========================================================================================================

def permutahedron_vertices(n: int) -> List[LatticePoint]:
  # LOS n! PUNTOS (σ(1), ..., σ(n)) EN ORDEN LEXICOGRÁFICO
  if n < 1:
    raise ValueError(f"n debe ser al menos 1, recibido {n}")
  return list(permutations(range(1, n + 1)))

# ========================================================================================================
#                                    SUMA DE PESOS SOBRE D_{n+2}
# ========================================================================================================

def group_images(triangulation: Triangulation) -> List[Triangulation]:
  # f·T PARA CADA f ∈ D_{n+2}, CON MULTIPLICIDAD
  return [act(g, triangulation) for g in all_elements(triangulation.m)]


def check_weight_orbit_sum(
  n: int,
  triangulation: Triangulation,
  j: int,
  images: Optional[Sequence[Triangulation]] = None,
) -> VerificationReport:
  # COMPRUEBA Σ_f δ_j(f·T) = (n+1)(n+2)
  images = images if images is not None else group_images(triangulation)
  total = sum(delta_weight(image, j) for image in images)
  expected = (n + 1) * (n + 2)
  parameters = {"n": n, "triangulation": str(triangulation), "j": j}
  if total == expected:
    return VerificationReport("weight_orbit_sum", parameters)
  return VerificationReport("weight_orbit_sum", parameters, passed=False, witness={
    "triangulation": str(triangulation), "j": j, "lhs": total, "rhs": expected,
  })


def check_coordinate_orbit_sum(
  orientation: Orientation,
  triangulation: Triangulation,
  j: int,
  images: Optional[Sequence[Triangulation]] = None,
  vertex: Optional[VertexMap] = None,
) -> VerificationReport:
  # COMPRUEBA Σ_f x_j(f·T) = (n+1)(n+2) PARA LA ORIENTACIÓN DADA
  n = orientation.n
  vertex = vertex or (lambda t: hl_vertex(orientation, t))
  images = images if images is not None else group_images(triangulation)
  total = sum(vertex(image)[j - 1] for image in images)
  expected = (n + 1) * (n + 2)
  parameters = {"n": n, "up": list(orientation.up), "triangulation": str(triangulation), "j": j}
  if total == expected:
    return VerificationReport("coordinate_orbit_sum", parameters)
  return VerificationReport("coordinate_orbit_sum", parameters, passed=False, witness={
    "triangulation": str(triangulation), "j": j, "lhs": total, "rhs": expected,
  })

# ========================================================================================================
#                                    BARICENTRO DE UNA ÓRBITA
# ========================================================================================================

def _check_closed(members: Sequence[Triangulation]) -> None:
  # La órbita debe ser estable por una rotación y una reflexión, que generan D_m
  if not members:
    raise VerificationInputError("Órbita vacía")
  m = members[0].m
  member_set = set(members)
  generators = (rotation(m, 1), reflection_s(m, 0))
  for member in members:
    for generator in generators:
      if act(generator, member) not in member_set:
        raise VerificationInputError(f"El conjunto no es cerrado bajo D_{m}: falta la imagen de {member}")


def check_orbit_barycenter(
  orientation: Orientation,
  members: Sequence[Triangulation],
  vertex: Optional[VertexMap] = None,
  check_name: str = "orbit_barycenter",
) -> VerificationReport:
  # COMPRUEBA QUE EL BARICENTRO DE {M_A(T) : T ∈ O} SEA ((n+1)/2, ...)
  _check_closed(members)
  vertex = vertex or (lambda t: hl_vertex(orientation, t))
  ordered = sorted(members, key=lambda t: t.diagonals)
  center = barycenter([vertex(t) for t in ordered])
  expected = expected_center(orientation.n, orientation.n + 1)
  parameters = {
    "n": orientation.n,
    "up": list(orientation.up),
    "orbit": str(ordered[0]),
    "orbit_size": len(ordered),
  }
  if center == expected:
    return VerificationReport(check_name, parameters)
  log.debug(f"Órbita {ordered[0]} con baricentro {format_point(center)}")
  return VerificationReport(check_name, parameters, passed=False, witness={
    "orbit": [str(t) for t in ordered],
    "barycenter": format_point(center),
    "expected": format_point(expected),
  })


def check_point_barycenter(
  check_name: str,
  parameters: dict,
  points: Sequence[Sequence[int]],
  expected: RationalPoint,
) -> VerificationReport:
  # COMPARA EL BARICENTRO DE UN CONJUNTO DE VÉRTICES CON SU FORMA CERRADA
  center = barycenter(points)
  if center == expected:
    return VerificationReport(check_name, parameters)
  return VerificationReport(check_name, parameters, passed=False, witness={
    "vertex_count": len(points),
    "barycenter": format_point(center),
    "expected": format_point(expected),
  })
