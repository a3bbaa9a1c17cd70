# MÓDULO DE VERIFICACIÓN EXHAUSTIVA DE LOS TEOREMAS DE CENTRO DE GRAVEDAD
# Divide el trabajo en barridos independientes (uno por tipo de identidad y valor de n)
# Ejecuta los barridos en línea o en un pool de procesos controlado por semáforo

import asyncio
import json
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Tuple

import pandas as pd
from loguru import logger as log

from ..models import Orientation, Perturbation, Triangulation, VerificationReport, VerificationInputError
from ..utils.constants import VerifyConfig
from .centroid import (
  VertexMap, check_coordinate_orbit_sum, check_orbit_barycenter,
  check_point_barycenter, check_weight_orbit_sum, expected_center,
  group_images, permutahedron_vertices,
)
from .dihedral import act, all_elements, orbit_decomposition, stabilizer
from .polygon import catalan_number, central_binomial, enumerate_triangulations
from .realization_a import (
  all_orientations, canonical_orientation, delta_weight, hl_vertex, hl_weight, label_polygon,
  loday_vertex, transport_isometry,
)
from .realization_b import (
  all_symmetric_orientations, enumerate_symmetric_triangulations, is_centrally_symmetric,
  permutahedron_b_vertices,
)

# Una tarea es (nombre del barrido, n); se serializa hacia los procesos del pool
Task = Tuple[str, int]

# ========================================================================================================
#                                   APLICACIÓN DE VÉRTICES CON CACHÉ
# ========================================================================================================

def vertex_map(orientation: Orientation, perturbation: Optional[Perturbation] = None) -> VertexMap:
  # DEVUELVE T -> M_A(T) MEMOIZADA, CON LA PERTURBACIÓN APLICADA SI CORRESPONDE
  cache: Dict[Triangulation, Tuple[int, ...]] = {}
  target = None
  if perturbation is not None and perturbation.applies_to(orientation.n, orientation.up):
    target = enumerate_triangulations(orientation.n)[perturbation.triangulation_index]

  def vertex(triangulation: Triangulation) -> Tuple[int, ...]:
    if triangulation not in cache:
      point = hl_vertex(orientation, triangulation)
      if triangulation == target:
        index = perturbation.coordinate - 1
        point = point[:index] + (point[index] + perturbation.delta,) + point[index + 1:]
      cache[triangulation] = point
    return cache[triangulation]

  return vertex


def _fail(check_name: str, parameters: dict, **witness) -> VerificationReport:
  return VerificationReport(check_name, parameters, passed=False, witness=witness)

# ========================================================================================================
#                                   BARRIDO: TRIANGULACIONES Y ÓRBITAS
# ========================================================================================================

def _sweep_triangulations(n: int, config: VerifyConfig, perturbation: Optional[Perturbation]) -> List[VerificationReport]:
  # CONTEO DE CATALAN, PARTICIÓN EN ÓRBITAS, ÓRBITA-ESTABILIZADOR Y ACUERDO LODAY CON LA ORIENTACIÓN CANÓNICA
  reports = []
  triangulations = enumerate_triangulations(n)
  group_order = 2 * (n + 2)

  expected = catalan_number(n)
  if len(triangulations) == expected and len(set(triangulations)) == expected:
    reports.append(VerificationReport("catalan_count", {"n": n}))
  else:
    reports.append(_fail("catalan_count", {"n": n}, count=len(triangulations), expected=expected))

  orbits = orbit_decomposition(n)
  covered = [member for summary in orbits for member in summary.members]
  if len(covered) == len(set(covered)) == len(triangulations):
    reports.append(VerificationReport("orbit_partition", {"n": n}))
  else:
    reports.append(_fail("orbit_partition", {"n": n}, covered=len(covered), distinct=len(set(covered)), total=len(triangulations)))

  for summary in orbits:
    for member in summary.members:
      stabilizer_order = len(stabilizer(member))
      parameters = {"n": n, "triangulation": str(member)}
      if len(summary.members) * stabilizer_order == group_order:
        reports.append(VerificationReport("orbit_stabilizer", parameters))
      else:
        reports.append(_fail("orbit_stabilizer", parameters,
          orbit_size=len(summary.members), stabilizer_order=stabilizer_order, expected=group_order))

  canonical = canonical_orientation(n)
  mismatch = next((t for t in triangulations if hl_vertex(canonical, t) != loday_vertex(t)), None)
  if mismatch is None:
    reports.append(VerificationReport("loday_agreement", {"n": n}))
  else:
    reports.append(_fail("loday_agreement", {"n": n}, triangulation=str(mismatch),
      hl_vertex=list(hl_vertex(canonical, mismatch)), loday_vertex=list(loday_vertex(mismatch))))
  return reports

# ========================================================================================================
#                                  BARRIDO: REALIZACIONES DE TIPO A
# ========================================================================================================

def _sweep_realizations(n: int, config: VerifyConfig, perturbation: Optional[Perturbation]) -> List[VerificationReport]:
  # BARICENTRO GLOBAL, INYECTIVIDAD E HIPERPLANO PARA CADA ORIENTACIÓN; BARICENTRO POR ÓRBITA
  reports = []
  triangulations = enumerate_triangulations(n)
  orbits = orbit_decomposition(n) if n <= config.orbit_centroid_max_n else []
  hyperplane = n * (n + 1) // 2

  for orientation in all_orientations(n):
    vertex = vertex_map(orientation, perturbation)
    parameters = {"n": n, "up": list(orientation.up)}
    vertices = [vertex(t) for t in triangulations]

    reports.append(check_point_barycenter(
      "global_barycenter", parameters, vertices, expected_center(n, n + 1)))

    if len(set(vertices)) == len(vertices):
      reports.append(VerificationReport("injectivity", parameters))
    else:
      seen: Dict[Tuple[int, ...], Triangulation] = {}
      for t, point in zip(triangulations, vertices):
        if point in seen:
          reports.append(_fail("injectivity", parameters,
            first=str(seen[point]), second=str(t), vertex=list(point)))
          break
        seen[point] = t

    off_plane = next(((t, p) for t, p in zip(triangulations, vertices) if sum(p) != hyperplane), None)
    if off_plane is None:
      reports.append(VerificationReport("hyperplane", parameters))
    else:
      reports.append(_fail("hyperplane", parameters,
        triangulation=str(off_plane[0]), vertex=list(off_plane[1]), lhs=sum(off_plane[1]), rhs=hyperplane))

    for summary in orbits:
      reports.append(check_orbit_barycenter(orientation, summary.members, vertex=vertex))
  return reports

# ========================================================================================================
#                                 BARRIDO: SUMAS SOBRE EL GRUPO DIEDRAL
# ========================================================================================================

def _sweep_weight_sums(n: int, config: VerifyConfig, perturbation: Optional[Perturbation]) -> List[VerificationReport]:
  reports = []
  for triangulation in enumerate_triangulations(n):
    images = group_images(triangulation)
    for j in range(1, n + 1):
      reports.append(check_weight_orbit_sum(n, triangulation, j, images=images))
  return reports


def _sweep_coordinate_sums(n: int, config: VerifyConfig, perturbation: Optional[Perturbation]) -> List[VerificationReport]:
  reports = []
  triangulations = enumerate_triangulations(n)
  images = {t: group_images(t) for t in triangulations}
  for orientation in all_orientations(n):
    vertex = vertex_map(orientation, perturbation)
    for triangulation in triangulations:
      for j in range(1, n + 1):
        reports.append(check_coordinate_orbit_sum(
          orientation, triangulation, j, images=images[triangulation], vertex=vertex))
  return reports

# ========================================================================================================
#                                  BARRIDO: ISOMETRÍA DE TRANSPORTE
# ========================================================================================================

def _sweep_transport(n: int, config: VerifyConfig, perturbation: Optional[Perturbation]) -> List[VerificationReport]:
  # ω_j(T) = δ_j(r_j·T) Y CONDICIÓN DE ETIQUETAS DE r_j, UN REPORTE POR (ORIENTACIÓN, j)
  reports = []
  triangulations = enumerate_triangulations(n)
  for orientation in all_orientations(n):
    polygon = label_polygon(orientation)
    for j in range(1, n + 1):
      isometry = transport_isometry(orientation, j)
      parameters = {"n": n, "up": list(orientation.up), "j": j}

      bad_position = next(
        (p for p in range(polygon.m) if (polygon.label(p) < j) != (isometry(p) < j)),
        None,
      )
      image_ok = isometry(polygon.position(j)) == j
      if bad_position is None and image_ok:
        reports.append(VerificationReport("transport_labels", parameters))
      else:
        reports.append(_fail("transport_labels", parameters, isometry=str(isometry),
          position=bad_position, image_of_label_j=isometry(polygon.position(j))))

      failure = None
      for t in triangulations:
        lhs, rhs = hl_weight(orientation, t, j), delta_weight(act(isometry, t), j)
        if lhs != rhs:
          failure = (t, lhs, rhs)
          break
      if failure is None:
        reports.append(VerificationReport("transport_identity", parameters))
      else:
        reports.append(_fail("transport_identity", parameters, triangulation=str(failure[0]),
          isometry=str(isometry), lhs=failure[1], rhs=failure[2]))
  return reports

# ========================================================================================================
#                                     BARRIDO: PERMUTAEDRO TIPO A
# ========================================================================================================

def _sweep_permutahedron(n: int, config: VerifyConfig, perturbation: Optional[Perturbation]) -> List[VerificationReport]:
  vertices = permutahedron_vertices(n)
  return [check_point_barycenter("permutahedron_a_barycenter", {"n": n}, vertices, expected_center(n, n + 1))]

# ========================================================================================================
#                                          BARRIDO: TIPO B
# ========================================================================================================

def _sweep_type_b(n: int, config: VerifyConfig, perturbation: Optional[Perturbation]) -> List[VerificationReport]:
  # CONTEO Y CLAUSURA DE SIMÉTRICAS, BARICENTROS DEL CICLOEDRO (GLOBAL Y POR ÓRBITA), PERMUTAEDRO B
  reports = []
  rank = 2 * n
  symmetric = enumerate_symmetric_triangulations(n)
  parameters = {"n": n}

  expected_count = central_binomial(n)
  if len(symmetric) == expected_count:
    reports.append(VerificationReport("symmetric_count", parameters))
  else:
    reports.append(_fail("symmetric_count", parameters, count=len(symmetric), expected=expected_count))

  symmetric_set = set(symmetric)
  escape = None
  for t in enumerate_triangulations(rank):
    for g in all_elements(rank + 2):
      if (act(g, t) in symmetric_set) != (t in symmetric_set):
        escape = (t, g)
        break
    if escape:
      break
  if escape is None:
    reports.append(VerificationReport("symmetric_closure", parameters))
  else:
    reports.append(_fail("symmetric_closure", parameters, triangulation=str(escape[0]), element=str(escape[1])))

  symmetric_orbits = [s for s in orbit_decomposition(rank) if is_centrally_symmetric(s.representative)]
  for orientation in all_symmetric_orientations(n):
    vertex = vertex_map(orientation, perturbation)
    reports.append(check_point_barycenter(
      "cyclohedron_barycenter", {"n": n, "up": list(orientation.up)},
      [vertex(t) for t in symmetric], expected_center(rank, rank + 1)))
    for summary in symmetric_orbits:
      reports.append(check_orbit_barycenter(
        orientation, summary.members, vertex=vertex, check_name="cyclohedron_orbit_barycenter"))

  if n <= config.permutahedron_b_max_n:
    reports.append(check_point_barycenter(
      "permutahedron_b_barycenter", parameters, permutahedron_b_vertices(n), expected_center(rank, rank + 1)))
  return reports

# ========================================================================================================
#                                      PLANIFICACIÓN DE TAREAS
# ========================================================================================================

SWEEPS: Dict[str, Callable[[int, VerifyConfig, Optional[Perturbation]], List[VerificationReport]]] = {
  "triangulations": _sweep_triangulations,
  "realizations": _sweep_realizations,
  "weight_sums": _sweep_weight_sums,
  "coordinate_sums": _sweep_coordinate_sums,
  "transport": _sweep_transport,
  "permutahedron": _sweep_permutahedron,
  "type_b": _sweep_type_b,
}


def plan_tasks(max_n: int, config: VerifyConfig) -> List[Task]:
  # LISTA DE (BARRIDO, n) RESPETANDO LAS COTAS DE CADA BARRIDO
  caps = {
    "triangulations": max_n,
    "realizations": max_n,
    "weight_sums": min(max_n, config.weight_sum_max_n),
    "coordinate_sums": min(max_n, config.coordinate_sum_max_n),
    "transport": min(max_n, config.transport_max_n),
    "permutahedron": min(max_n, config.permutahedron_max_n),
    "type_b": min(max_n // 2, config.type_b_max_n),
  }
  return [(sweep, n) for sweep, cap in caps.items() for n in range(1, cap + 1)]


def run_sweep(sweep: str, n: int, config: VerifyConfig, perturbation: Optional[Perturbation] = None) -> List[VerificationReport]:
  # EJECUTA UN BARRIDO; UNA EXCEPCIÓN SE CONVIERTE EN REPORTE FALLIDO
  try:
    reports = SWEEPS[sweep](n, config, perturbation)
    log.debug(f"Barrido {sweep} n={n}: {len(reports)} reportes")
    return reports
  except Exception as e:
    log.error(f"Error en barrido {sweep} n={n}: {e}")
    return [_fail("sweep_error", {"sweep": sweep, "n": n}, error=f"{type(e).__name__}: {e}")]

# ========================================================================================================
#                                        EJECUCIÓN CONCURRENTE
# ========================================================================================================

async def _run_concurrently(tasks: List[Task], jobs: int, config: VerifyConfig,
                            perturbation: Optional[Perturbation]) -> List[VerificationReport]:
  # REPARTE LAS TAREAS EN UN POOL DE PROCESOS CON UN SEMÁFORO DE jobs
  loop = asyncio.get_running_loop()
  semaphore = asyncio.Semaphore(jobs)
  completed = 0

  with ProcessPoolExecutor(max_workers=jobs) as pool:

    async def run_single(task: Task) -> List[VerificationReport]:
      nonlocal completed
      async with semaphore:
        result = await loop.run_in_executor(pool, run_sweep, task[0], task[1], config, perturbation)
        completed += 1
        log.info(f"[{completed}/{len(tasks)}] {task[0]} n={task[1]} completado")
        return result

    results = await asyncio.gather(*(run_single(task) for task in tasks), return_exceptions=True)

  reports: List[VerificationReport] = []
  for task, result in zip(tasks, results):
    if isinstance(result, Exception):
      log.error(f"Excepción en tarea {task}: {result}")
      reports.append(_fail("sweep_error", {"sweep": task[0], "n": task[1]}, error=str(result)))
    else:
      reports.extend(result)
  return reports

# ========================================================================================================
#                                          VERIFICAR TODO
# ========================================================================================================

def report_sort_key(report: VerificationReport) -> Tuple[str, str]:
  return report.check_name, json.dumps(report.parameters, sort_keys=True)


def validate_perturbation(perturbation: Perturbation) -> None:
  if perturbation.n < 1:
    raise VerificationInputError(f"Perturbación con n={perturbation.n}")
  count = catalan_number(perturbation.n)
  if not 0 <= perturbation.triangulation_index < count:
    raise VerificationInputError(f"Índice de triangulación {perturbation.triangulation_index} fuera de [0, {count})")
  if not 1 <= perturbation.coordinate <= perturbation.n:
    raise VerificationInputError(f"Coordenada {perturbation.coordinate} fuera de [1, {perturbation.n}]")


def verify_all(
  max_n: int,
  config: Optional[VerifyConfig] = None,
  jobs: int = 1,
  perturbation: Optional[Perturbation] = None,
) -> List[VerificationReport]:
  # EJECUTA TODAS LAS VERIFICACIONES HASTA max_n Y DEVUELVE LOS REPORTES ORDENADOS
  if max_n < 1:
    raise VerificationInputError(f"max_n debe ser al menos 1, recibido {max_n}")
  config = config or VerifyConfig()
  if perturbation is not None:
    validate_perturbation(perturbation)
    if perturbation.n > max_n:
      raise VerificationInputError(f"La perturbación usa n={perturbation.n} > max_n={max_n}")

  tasks = plan_tasks(max_n, config)
  log.info(f"Verificando hasta n={max_n}: {len(tasks)} tareas con {jobs} proceso(s)")

  if jobs <= 1:
    reports = [report for sweep, n in tasks for report in run_sweep(sweep, n, config, perturbation)]
  else:
    reports = asyncio.run(_run_concurrently(tasks, jobs, config, perturbation))

  reports.sort(key=report_sort_key)
  failed = sum(1 for report in reports if not report.passed)
  if failed:
    log.warning(f"{failed} de {len(reports)} verificaciones fallaron")
  else:
    log.info(f"{len(reports)} verificaciones exitosas")
  return reports

# ========================================================================================================
#                                        RESUMEN DE REPORTES
# ========================================================================================================

def summarize_reports(reports: List[VerificationReport]) -> pd.DataFrame:
  # TABLA POR VERIFICACIÓN CON TOTAL, EXITOSAS Y FALLIDAS
  frame = pd.DataFrame(
    [{"check": r.check_name, "passed": r.passed} for r in reports],
    columns=["check", "passed"],
  )
  summary = frame.groupby("check", sort=True)["passed"].agg(total="count", passed="sum").reset_index()
  summary["passed"] = summary["passed"].astype(int)
  summary["failed"] = summary["total"] - summary["passed"]
  return summary
