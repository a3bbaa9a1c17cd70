# MÓDULO DEL GRUPO DIEDRAL D_m
# Implementa la acción del grupo sobre posiciones de vértices y sobre triangulaciones
# Calcula órbitas, estabilizadores y la partición de todas las triangulaciones en órbitas

from dataclasses import dataclass
from typing import Dict, List, Tuple

from loguru import logger as log

from ..models import DihedralElement, Triangulation, PolygonError
from .polygon import enumerate_triangulations, from_diagonals

# ========================================================================================================
#                                      CONSTRUIR ELEMENTOS
# ========================================================================================================

def identity(m: int) -> DihedralElement:
  return DihedralElement(m, False, 0)


def rotation(m: int, t: int) -> DihedralElement:
  return DihedralElement(m, False, t)


def half_turn(m: int) -> DihedralElement:
  # Simetría central del polígono; sólo existe como rotación para m par
  if m % 2:
    raise PolygonError(f"El {m}-ágono no tiene media vuelta sobre vértices")
  return DihedralElement(m, False, m // 2)


def reflection_s(m: int, k: int) -> DihedralElement:
  # REFLEXIÓN s_k QUE ENVÍA A_x A A_{n+3+k-x}, ES DECIR x -> (k+1-x) mod m
  if m < 3:
    raise PolygonError(f"El grupo diedral necesita m >= 3, recibido {m}")
  return DihedralElement(m, True, k + 1)


def all_elements(m: int) -> List[DihedralElement]:
  # DEVUELVE LOS 2m ELEMENTOS: PRIMERO LAS m ROTACIONES Y LUEGO LAS m REFLEXIONES
  if m < 3:
    raise PolygonError(f"El grupo diedral necesita m >= 3, recibido {m}")
  return [DihedralElement(m, reflect, t) for reflect in (False, True) for t in range(m)]

# ========================================================================================================
#                                      OPERACIONES DE GRUPO
# ========================================================================================================

def compose(g: DihedralElement, h: DihedralElement) -> DihedralElement:
  # COMPOSICIÓN g∘h: PRIMERO h, LUEGO g
  if g.m != h.m:
    raise PolygonError(f"No se pueden componer elementos de D_{g.m} y D_{h.m}")
  if not g.reflect:
    return DihedralElement(g.m, h.reflect, g.t + h.t)
  # g(x) = t_g - x
  return DihedralElement(g.m, not h.reflect, g.t - h.t)


def inverse(g: DihedralElement) -> DihedralElement:
  if g.reflect:
    return g
  return DihedralElement(g.m, False, -g.t)


def apply_vertex(g: DihedralElement, x: int) -> int:
  # APLICA g A LA POSICIÓN x DEL POLÍGONO
  if not 0 <= x < g.m:
    raise PolygonError(f"Posición {x} fuera del {g.m}-ágono")
  return g(x)

# ========================================================================================================
#                                   ACCIÓN SOBRE TRIANGULACIONES
# ========================================================================================================

def act(g: DihedralElement, triangulation: Triangulation) -> Triangulation:
  # IMAGEN g·T: SE APLICA g A CADA EXTREMO Y SE RECANONIZA
  if g.m != triangulation.m:
    raise PolygonError(f"Elemento de D_{g.m} aplicado a un {triangulation.m}-ágono")
  if g.is_identity:
    return triangulation
  images = [(g(d.a), g(d.b)) for d in triangulation.diagonals]
  return from_diagonals(triangulation.n, images)


def orbit(triangulation: Triangulation) -> List[Triangulation]:
  # ÓRBITA {g·T : g ∈ D_m} SIN DUPLICADOS EN ORDEN CANÓNICO
  images = {act(g, triangulation) for g in all_elements(triangulation.m)}
  return sorted(images, key=lambda t: t.diagonals)


def stabilizer(triangulation: Triangulation) -> List[DihedralElement]:
  # SUBGRUPO DE ELEMENTOS QUE FIJAN T, EN ORDEN CANÓNICO
  return [g for g in all_elements(triangulation.m) if act(g, triangulation) == triangulation]

# ========================================================================================================
#                                    DESCOMPOSICIÓN EN ÓRBITAS
# ========================================================================================================

@dataclass(frozen=True)
class OrbitSummary:
  # Órbita identificada por su miembro lexicográficamente menor
  representative: Triangulation
  members: Tuple[Triangulation, ...]
  stabilizer_order: int

  @property
  def orbit_id(self) -> str:
    return str(self.representative)


def orbit_decomposition(n: int) -> List[OrbitSummary]:
  # PARTICIONA TODAS LAS TRIANGULACIONES DEL (n+2)-ÁGONO EN ÓRBITAS DE D_{n+2}
  seen: Dict[Triangulation, int] = {}
  summaries: List[OrbitSummary] = []

  for triangulation in enumerate_triangulations(n):
    if triangulation in seen:
      continue
    members = tuple(orbit(triangulation))
    for member in members:
      seen[member] = len(summaries)
    # la enumeración es lexicográfica, así que el primero no visto es el menor de su órbita
    summaries.append(OrbitSummary(
      representative=members[0],
      members=members,
      stabilizer_order=len(stabilizer(triangulation)),
    ))

  log.debug(f"n={n}: {len(summaries)} órbitas de tamaños {[len(s.members) for s in summaries]}")
  return summaries
