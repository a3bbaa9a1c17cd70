# MÓDULO DEL POLÍGONO REGULAR Y SUS TRIANGULACIONES
# Construye triangulaciones canónicas del (n+2)-ágono a partir de diagonales no cruzadas
# Enumera todas las triangulaciones en orden lexicográfico y calcula los números de Catalan

import math
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from loguru import logger as log

from ..models import Diagonal, Triangle, Triangulation, PolygonError

# ========================================================================================================
#                                         DETECTAR CRUCE
# ========================================================================================================

def is_crossing(d1: Diagonal, d2: Diagonal, m: int) -> bool:
  # DETERMINA SI DOS DIAGONALES DEL m-ÁGONO SE CRUZAN EN SU INTERIOR
  # Compartir un extremo no cuenta como cruce
  d1.validate(m)
  d2.validate(m)
  return _interleaved(d1.as_tuple(), d2.as_tuple())


def _interleaved(p: Tuple[int, int], q: Tuple[int, int]) -> bool:
  # a < c < b < d o c < a < d < b, con todos los extremos distintos
  (a, b), (c, d) = p, q
  return a < c < b < d or c < a < d < b

# ========================================================================================================
#                                     CONSTRUIR TRIANGULACIÓN
# ========================================================================================================

def from_diagonals(n: int, diagonals: Iterable) -> Triangulation:
  # CONSTRUYE LA TRIANGULACIÓN CANÓNICA A PARTIR DE n-1 DIAGONALES NO CRUZADAS
  # Acepta objetos Diagonal o pares (a, b) en cualquier orden
  if n < 1:
    raise PolygonError(f"n debe ser al menos 1, recibido {n}")
  m = n + 2

  normalized: Set[Diagonal] = set()
  for item in diagonals:
    diagonal = item if isinstance(item, Diagonal) else Diagonal.of(*item)
    diagonal.validate(m)
    if diagonal in normalized:
      raise PolygonError(f"Diagonal {diagonal.as_tuple()} repetida")
    normalized.add(diagonal)

  if len(normalized) != n - 1:
    raise PolygonError(f"Se esperaban {n - 1} diagonales, recibidas {len(normalized)}")

  ordered = tuple(sorted(normalized))
  for index, first in enumerate(ordered):
    for second in ordered[index + 1:]:
      if _interleaved(first.as_tuple(), second.as_tuple()):
        raise PolygonError(f"Las diagonales {first.as_tuple()} y {second.as_tuple()} se cruzan")

  return _build(n, ordered)


def _build(n: int, ordered: Tuple[Diagonal, ...]) -> Triangulation:
  # Deriva Δ_j(T) = (menor vecino < j, j, mayor vecino > j) para cada j en [1, n]
  m = n + 2
  neighbours: Dict[int, List[int]] = {v: [(v - 1) % m, (v + 1) % m] for v in range(m)}
  for diagonal in ordered:
    neighbours[diagonal.a].append(diagonal.b)
    neighbours[diagonal.b].append(diagonal.a)

  triangles = []
  for j in range(1, n + 1):
    lower = min(v for v in neighbours[j] if v < j)
    upper = max(v for v in neighbours[j] if v > j)
    triangles.append(Triangle(lower, j, upper))

  return Triangulation(n=n, diagonals=ordered, triangles=tuple(triangles))

# ========================================================================================================
#                                      OBTENER TRIÁNGULO Δ_j
# ========================================================================================================

def triangle_at(triangulation: Triangulation, j: int) -> Triangle:
  # DEVUELVE EL ÚNICO TRIÁNGULO DE T CON VÉRTICE MEDIO A_j
  if not 1 <= j <= triangulation.n:
    raise PolygonError(f"Índice j={j} fuera de [1, {triangulation.n}]")
  return triangulation.triangles[j - 1]

# ========================================================================================================
#                                   ENUMERAR TRIANGULACIONES
# ========================================================================================================

@lru_cache(maxsize=None)
def _arc_triangulations(a: int, b: int) -> Tuple[FrozenSet[Tuple[int, int]], ...]:
  # Triangulaciones del subpolígono A_a, A_{a+1}, ..., A_b apoyadas sobre el lado (a, b)
  if b - a < 2:
    return (frozenset(),)

  result = []
  for c in range(a + 1, b):
    # el lado (a, b) pertenece a un único triángulo (a, c, b)
    apex = set()
    if c - a >= 2:
      apex.add((a, c))
    if b - c >= 2:
      apex.add((c, b))
    for left in _arc_triangulations(a, c):
      for right in _arc_triangulations(c, b):
        result.append(left | right | frozenset(apex))
  return tuple(result)


@lru_cache(maxsize=16)
def _enumerate_cached(n: int) -> Tuple[Triangulation, ...]:
  raw = sorted(tuple(sorted(diagonals)) for diagonals in _arc_triangulations(0, n + 1))
  triangulations = tuple(
    _build(n, tuple(Diagonal(a, b) for a, b in pairs))
    for pairs in raw
  )
  log.debug(f"Enumeradas {len(triangulations)} triangulaciones para n={n}")
  return triangulations


def enumerate_triangulations(n: int) -> List[Triangulation]:
  # ENUMERA TODAS LAS TRIANGULACIONES DEL (n+2)-ÁGONO EN ORDEN LEXICOGRÁFICO
  # El resultado tiene exactamente C_n elementos sin duplicados
  if n < 1:
    raise PolygonError(f"n debe ser al menos 1, recibido {n}")
  return list(_enumerate_cached(n))

# ========================================================================================================
#                                       NÚMEROS COMBINATORIOS
# ========================================================================================================

def catalan_number(n: int) -> int:
  return math.comb(2 * n, n) // (n + 1)


def central_binomial(n: int) -> int:
  return math.comb(2 * n, n)
