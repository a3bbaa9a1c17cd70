# MÓDULO DE REALIZACIONES DE TIPO B
# Genera el grupo hiperoctaédrico W_n, los vértices del permutaedro de tipo B,
# las triangulaciones centralmente simétricas, las orientaciones simétricas y el cicloedro

from itertools import permutations, product
from typing import List

from loguru import logger as log

from ..models import Orientation, SignedPermutation, Triangulation, OrientationError, PolygonError
from .dihedral import act, half_turn
from .polygon import enumerate_triangulations
from .realization_a import LatticePoint, hl_vertex

# ========================================================================================================
#                                     GRUPO HIPEROCTAÉDRICO
# ========================================================================================================

def hyperoctahedral_elements(n: int) -> List[SignedPermutation]:
  # LOS 2^n · n! ELEMENTOS DE W_n EN ORDEN LEXICOGRÁFICO
  if n < 1:
    raise ValueError(f"n debe ser al menos 1, recibido {n}")
  size = 2 * n
  elements = []
  for base in permutations(range(1, n + 1)):
    for flips in product((False, True), repeat=n):
      # σ(i) elige un valor de cada par {a, 2n+1-a}; la segunda mitad queda determinada
      head = [size + 1 - a if flip else a for a, flip in zip(base, flips)]
      tail = [size + 1 - value for value in reversed(head)]
      elements.append(SignedPermutation(tuple(head + tail)))
  return sorted(elements)


def longest_element(n: int) -> SignedPermutation:
  # w_0 = (2n, 2n-1, ..., 1)
  return SignedPermutation(tuple(range(2 * n, 0, -1)))


def permutahedron_b_vertices(n: int) -> List[LatticePoint]:
  # PUNTOS (σ(1), ..., σ(2n)) ∈ R^{2n} PARA σ ∈ W_n
  return [element.sigma for element in hyperoctahedral_elements(n)]

# ========================================================================================================
#                                 TRIANGULACIONES SIMÉTRICAS
# ========================================================================================================

def is_centrally_symmetric(triangulation: Triangulation) -> bool:
  # T ES FIJA POR LA MEDIA VUELTA (ROTACIÓN DE m/2 POSICIONES)
  if triangulation.m % 2:
    raise PolygonError(f"El {triangulation.m}-ágono tiene un número impar de vértices")
  return act(half_turn(triangulation.m), triangulation) == triangulation


def enumerate_symmetric_triangulations(n: int) -> List[Triangulation]:
  # TRIANGULACIONES CENTRALMENTE SIMÉTRICAS DEL (2n+2)-ÁGONO, EN ORDEN DE ENUMERACIÓN
  if n < 1:
    raise PolygonError(f"n debe ser al menos 1, recibido {n}")
  symmetric = [t for t in enumerate_triangulations(2 * n) if is_centrally_symmetric(t)]
  log.debug(f"{len(symmetric)} triangulaciones simétricas del {2 * n + 2}-ágono")
  return symmetric

# ========================================================================================================
#                                   ORIENTACIONES SIMÉTRICAS
# ========================================================================================================

def is_symmetric_orientation(orientation: Orientation) -> bool:
  # PARA CADA j EN {2, ..., 2n-1} EXACTAMENTE UNO DE j Y 2n+1-j ES UP
  rank = orientation.n
  if rank % 2:
    raise OrientationError(f"Una orientación simétrica necesita rango par, recibido {rank}")
  return all(
    orientation.is_up(j) != orientation.is_up(rank + 1 - j)
    for j in range(2, rank)
  )


def all_symmetric_orientations(n: int) -> List[Orientation]:
  # LAS 2^{n-1} ORIENTACIONES SIMÉTRICAS DE Γ_{2n-1}, ORDENADAS POR SU LISTA UP
  rank = 2 * n
  orientations = []
  for choices in product((False, True), repeat=n - 1):
    up = []
    for j, lower_is_up in zip(range(2, n + 1), choices):
      up.append(j if lower_is_up else rank + 1 - j)
    orientations.append(Orientation(n=rank, up=tuple(up)))
  return sorted(orientations)

# ========================================================================================================
#                                     VÉRTICES DEL CICLOEDRO
# ========================================================================================================

def cyclohedron_vertices(orientation: Orientation) -> List[LatticePoint]:
  # VÉRTICES {M_A(T) : T CENTRALMENTE SIMÉTRICA} PARA UNA ORIENTACIÓN SIMÉTRICA DE RANGO 2n
  if not is_symmetric_orientation(orientation):
    raise OrientationError(f"La orientación up={list(orientation.up)} no es simétrica")
  n = orientation.n // 2
  vertices = [hl_vertex(orientation, t) for t in enumerate_symmetric_triangulations(n)]
  if len(set(vertices)) != len(vertices):
    raise OrientationError(f"Vértices repetidos en el cicloedro para up={list(orientation.up)}")
  return vertices
