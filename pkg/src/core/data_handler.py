import json
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import aiofiles
from loguru import logger as log

from ..models import OutputDocument, Orientation, VerificationReport, OrientationError, PolygonError
from ..utils.exporters import DocumentExporter
from .centroid import barycenter, format_point, permutahedron_vertices
from .dihedral import orbit_decomposition
from .realization_a import LatticePoint, associahedron_vertices, hl_vertex, parse_up_set
from .realization_b import cyclohedron_vertices, is_centrally_symmetric, permutahedron_b_vertices

# ========================================================================================================
#                                     MANEJADOR DE DOCUMENTOS
# ========================================================================================================

# Construye los conjuntos de vértices que muestra y exporta la CLI
# La opción --n es siempre la dimensión ambiente: n en tipo A y 2n (par) en tipo B
class PolytopeDataHandler:

  def __init__(self, exporter: Optional[DocumentExporter] = None):
    self.exporter = exporter or DocumentExporter()

# ========================================================================================================
#                                        RESOLVER ORIENTACIÓN
# ========================================================================================================

  def resolve(self, kind: str, dimension: int, up_text: Optional[str]) -> Tuple[int, Orientation]:
    # VALIDA n Y EL CONJUNTO UP; DEVUELVE (n DEL DOCUMENTO, ORIENTACIÓN DE RANGO dimension)
    if dimension < 1:
      raise PolygonError(f"n debe ser al menos 1, recibido {dimension}")

    if kind in ("cyclohedron", "permutahedron-b"):
      if dimension % 2:
        raise OrientationError(f"Tipo B necesita rango de Coxeter par, recibido {dimension}")
      n = dimension // 2
    else:
      n = dimension

    orientation = parse_up_set(up_text, dimension)
    if kind.startswith("permutahedron") and orientation.up:
      raise OrientationError("Los permutaedros no dependen de una orientación; omite --up")
    return n, orientation

# ========================================================================================================
#                                         CALCULAR VÉRTICES
# ========================================================================================================

  def vertices(self, kind: str, dimension: int, up_text: Optional[str] = None) -> List[LatticePoint]:
    n, orientation = self.resolve(kind, dimension, up_text)
    if kind == "permutahedron-a":
      return permutahedron_vertices(n)
    if kind == "permutahedron-b":
      return permutahedron_b_vertices(n)
    if kind == "associahedron":
      return associahedron_vertices(orientation)
    if kind == "cyclohedron":
      return cyclohedron_vertices(orientation)
    raise ValueError(f"Tipo de politopo desconocido: {kind}")

# ========================================================================================================
#                                        CALCULAR ÓRBITAS
# ========================================================================================================

  def orbits(self, kind: str, dimension: int, up_text: Optional[str] = None) -> List[Dict]:
    # ÓRBITAS DE D_{n+2} CON MIEMBROS, ORDEN DEL ESTABILIZADOR Y CENTROIDE DE SUS VÉRTICES
    if kind not in ("associahedron", "cyclohedron"):
      raise ValueError(f"El tipo {kind} no se parametriza por triangulaciones")
    _, orientation = self.resolve(kind, dimension, up_text)
    if kind == "cyclohedron":
      # valida la simetría antes de recorrer las órbitas
      cyclohedron_vertices(orientation)

    result = []
    for summary in orbit_decomposition(orientation.n):
      if kind == "cyclohedron" and not is_centrally_symmetric(summary.representative):
        continue
      points = [hl_vertex(orientation, t) for t in summary.members]
      result.append({
        "members": [str(t) for t in summary.members],
        "stabilizer_order": summary.stabilizer_order,
        "centroid": format_point(barycenter(points)),
      })
    log.debug(f"{len(result)} órbitas para {kind} n={dimension}")
    return result

# ========================================================================================================
#                                        CONSTRUIR DOCUMENTO
# ========================================================================================================

  def build_document(self, kind: str, dimension: int, up_text: Optional[str] = None,
                     include_orbits: bool = False) -> OutputDocument:
    # REÚNE VÉRTICES, CENTROIDE EXACTO Y ÓRBITAS OPCIONALES
    n, orientation = self.resolve(kind, dimension, up_text)
    vertices = self.vertices(kind, dimension, up_text)
    document = OutputDocument(
      n=n,
      kind=kind,
      up=list(orientation.up),
      vertices=[list(v) for v in vertices],
      centroid=format_point(barycenter(vertices)),
      orbits=self.orbits(kind, dimension, up_text) if include_orbits else None,
    )
    log.info(f"Documento {kind} n={n}: {len(vertices)} vértices")
    return document

# ========================================================================================================
#                                           GUARDAR ARCHIVOS
# ========================================================================================================

  async def save_document(self, document: OutputDocument, fmt: str, path: Path) -> Path:
    # ESCRIBE EL DOCUMENTO DE FORMA ASÍNCRONA EN EL FORMATO PEDIDO
    data = self.exporter.export(document, fmt)
    return await self._write(Path(path), data)

  async def save_reports(self, reports: Sequence[VerificationReport], path: Path) -> Path:
    # GUARDA TODOS LOS REPORTES DE VERIFICACIÓN COMO JSON
    payload = {
      "passed": all(report.passed for report in reports),
      "reports": [report.to_dict() for report in reports],
    }
    data = (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode('utf-8')
    return await self._write(Path(path), data)

  async def _write(self, path: Path, data: bytes) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    async with aiofiles.open(path, 'wb') as f:
      await f.write(data)
    log.info(f"Archivo guardado: {path}")
    return path
