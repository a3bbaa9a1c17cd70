# MÓDULO DE REALIZACIONES DE TIPO A
# Calcula pesos y vértices de Loday, orientaciones de Γ_{n-1}, el etiquetado up/down del polígono,
# los pesos y vértices de la realización orientada y la isometría de transporte r_j

from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from loguru import logger as log

from ..models import (
  DihedralElement, LabeledPolygon, Orientation, Triangulation,
  LabelingError, OrientationError, PolygonError,
)
from .polygon import enumerate_triangulations, triangle_at

# Punto de R^n con coordenadas enteras exactas
LatticePoint = Tuple[int, ...]

# ========================================================================================================
#                                        PESOS DE LODAY
# ========================================================================================================

def delta_weight(triangulation: Triangulation, j: int) -> int:
  # PESO δ_j(T) = (j-i)(k-j) DEL TRIÁNGULO Δ_j(T) = A_i A_j A_k
  triangle = triangle_at(triangulation, j)
  return (j - triangle.i) * (triangle.k - j)


def loday_vertex(triangulation: Triangulation) -> LatticePoint:
  # VÉRTICE M(T) = (δ_1(T), ..., δ_n(T))
  return tuple(
    (t.j - t.i) * (t.k - t.j)
    for t in triangulation.triangles
  )

# ========================================================================================================
#                                          ORIENTACIONES
# ========================================================================================================

def canonical_orientation(n: int) -> Orientation:
  return Orientation(n=n, up=())


def all_orientations(n: int) -> List[Orientation]:
  # LAS 2^{n-2} ORIENTACIONES DE Γ_{n-1} EN ORDEN LEXICOGRÁFICO DE SU LISTA UP
  interior = list(range(2, n))
  return sorted(
    Orientation(n=n, up=subset)
    for size in range(len(interior) + 1)
    for subset in combinations(interior, size)
  )


def parse_up_set(text: str, n: int) -> Orientation:
  # LEE LA SINTAXIS "2,4" DE LA CLI; VACÍO SIGNIFICA ORIENTACIÓN CANÓNICA
  if text is None or not text.strip():
    return canonical_orientation(n)
  try:
    elements = [int(part) for part in text.split(",")]
  except ValueError:
    raise OrientationError(f"Conjunto up mal formado: '{text}'")
  if len(set(elements)) != len(elements):
    raise OrientationError(f"Conjunto up con elementos repetidos: '{text}'")
  return Orientation(n=n, up=tuple(elements))


def up_down_sets(orientation: Orientation) -> Tuple[List[int], List[int]]:
  # PARTICIÓN DE [n] EN ELEMENTOS DOWN Y UP
  up = list(orientation.up)
  down = [i for i in range(1, orientation.n + 1) if i not in orientation.up]
  return down, up


def edge_directions(orientation: Orientation) -> Tuple[bool, ...]:
  # True en la posición i-2 si la arista {τ_{i-1}, τ_i} va de τ_i a τ_{i-1}, i = 2..n-1
  return tuple(orientation.is_up(i) for i in range(2, orientation.n))


def from_edge_directions(n: int, directions: Sequence[bool]) -> Orientation:
  if len(directions) != max(n - 2, 0):
    raise OrientationError(f"Γ_{n - 1} tiene {max(n - 2, 0)} aristas, recibidas {len(directions)}")
  return Orientation(n=n, up=tuple(i for i, flag in zip(range(2, n), directions) if flag))

# ========================================================================================================
#                                      ETIQUETAR EL POLÍGONO
# ========================================================================================================

@lru_cache(maxsize=None)
def label_polygon(orientation: Orientation) -> LabeledPolygon:
  # A_0 LLEVA 0; EN SENTIDO ANTIHORARIO: DOWN CRECIENTES, LUEGO n+1, LUEGO UP DECRECIENTES
  down, up = up_down_sets(orientation)
  labels = tuple([0] + down + [orientation.n + 1] + sorted(up, reverse=True))
  positions = [0] * len(labels)
  for position, label in enumerate(labels):
    positions[label] = position
  return LabeledPolygon(n=orientation.n, label_of_position=labels, position_of_label=tuple(positions))

# ========================================================================================================
#                                       PESOS DE LA REALIZACIÓN ORIENTADA
# ========================================================================================================

def _labeled_triangles(polygon: LabeledPolygon, triangulation: Triangulation) -> Dict[int, Tuple[int, int]]:
  # Para cada etiqueta l en [1, n], posiciones (p_k, p_m) del triángulo con etiquetas k < l < m
  result: Dict[int, Tuple[int, int]] = {}
  for triangle in triangulation.triangles:
    by_label = sorted(triangle.as_tuple(), key=polygon.label)
    low, middle, high = by_label
    result[polygon.label(middle)] = (low, high)
  return result


def _arc_edges(polygon: LabeledPolygon, start: int, end: int, avoid: int, l: int, below: bool) -> int:
  # Número de lados del arco de start a end que no pasa por avoid
  # Todos los vértices interiores deben tener etiqueta < l (below) o > l
  m = polygon.m
  forward = (end - start) % m
  if (avoid - start) % m < forward:
    step, length = -1, m - forward
  else:
    step, length = 1, forward

  for offset in range(1, length):
    label = polygon.label((start + step * offset) % m)
    if (label >= l) if below else (label <= l):
      raise LabelingError(f"Arco de {start} a {end} pasa por la etiqueta {label} (l={l})")
  return length


def hl_weight(orientation: Orientation, triangulation: Triangulation, l: int) -> int:
  # PESO ω_l(T): LADOS HACIA EL VÉRTICE k POR ETIQUETAS < l, POR LADOS HACIA m POR ETIQUETAS > l
  if not 1 <= l <= orientation.n:
    raise PolygonError(f"Índice l={l} fuera de [1, {orientation.n}]")
  _check_sizes(orientation, triangulation)
  polygon = label_polygon(orientation)
  return _hl_weight(polygon, _labeled_triangles(polygon, triangulation), l)


def _hl_weight(polygon: LabeledPolygon, triangles: Dict[int, Tuple[int, int]], l: int) -> int:
  if l not in triangles:
    raise LabelingError(f"Ningún triángulo tiene etiquetas k < {l} < m")
  position_k, position_m = triangles[l]
  position_l = polygon.position(l)
  lower = _arc_edges(polygon, position_l, position_k, position_m, l, below=True)
  upper = _arc_edges(polygon, position_l, position_m, position_k, l, below=False)
  return lower * upper


def hl_vertex(orientation: Orientation, triangulation: Triangulation) -> LatticePoint:
  # VÉRTICE M_A(T): x_j = ω_j SI j ES DOWN, n+1-ω_j SI j ES UP
  _check_sizes(orientation, triangulation)
  polygon = label_polygon(orientation)
  triangles = _labeled_triangles(polygon, triangulation)
  n = orientation.n
  coords = []
  for j in range(1, n + 1):
    weight = _hl_weight(polygon, triangles, j)
    coords.append(n + 1 - weight if orientation.is_up(j) else weight)
  return tuple(coords)


def _check_sizes(orientation: Orientation, triangulation: Triangulation) -> None:
  if orientation.n != triangulation.n:
    raise PolygonError(f"Orientación de rango {orientation.n} con triangulación de n={triangulation.n}")

# ========================================================================================================
#                                     ISOMETRÍA DE TRANSPORTE
# ========================================================================================================

def transport_isometry(orientation: Orientation, j: int) -> DihedralElement:
  # ISOMETRÍA r_j QUE ENVÍA EL VÉRTICE ETIQUETADO j A A_j PRESERVANDO "ETIQUETA < j"
  n = orientation.n
  if not 1 <= j <= n:
    raise PolygonError(f"Índice j={j} fuera de [1, {n}]")
  polygon = label_polygon(orientation)
  m = polygon.m

  if not orientation.is_up(j):
    # rotación de A_l hacia A_j
    return DihedralElement(m, False, j - polygon.position(j))

  # reflexión que envía el vértice del mayor down menor que j hacia A_0
  down, _ = up_down_sets(orientation)
  alpha = max(d for d in down if d < j)
  return DihedralElement(m, True, polygon.position(alpha))

# ========================================================================================================
#                                   VÉRTICES DEL ASOCIAEDRO
# ========================================================================================================

def associahedron_vertices(orientation: Orientation) -> List[LatticePoint]:
  # VÉRTICES {M_A(T)} EN EL ORDEN DE ENUMERACIÓN DE LAS TRIANGULACIONES
  vertices = [hl_vertex(orientation, t) for t in enumerate_triangulations(orientation.n)]
  if len(set(vertices)) != len(vertices):
    raise LabelingError(f"La aplicación M_A no es inyectiva para n={orientation.n}, up={orientation.up}")
  log.debug(f"Asociaedro n={orientation.n} up={orientation.up}: {len(vertices)} vértices")
  return vertices
