# MÓDULO DE EXPORTACIÓN DE DOCUMENTOS A MÚLTIPLES FORMATOS
# Genera JSON, CSV y Excel en memoria a partir de un OutputDocument
# Los números son enteros exactos y los centroides viajan como cadenas "p/q"

import json
from io import BytesIO, StringIO
from typing import Dict, List

import pandas as pd
from loguru import logger as log

from ..models import OutputDocument

# formatos soportados por la CLI
EXPORT_FORMATS = ("json", "csv", "xlsx")

# ====================================================================================================================
#                                           CLASE PRINCIPAL DE EXPORTACIÓN
# ====================================================================================================================

class DocumentExporter:
  # EXPORTA DOCUMENTOS DE VÉRTICES A BYTES LISTOS PARA ESCRIBIR
  # Todo se procesa en memoria sin archivos temporales

  def export(self, document: OutputDocument, fmt: str) -> bytes:
    # DESPACHA AL CODIFICADOR DEL FORMATO PEDIDO
    if fmt == "json":
      return self.to_json_bytes(document)
    if fmt == "csv":
      return self.to_csv_bytes(document)
    if fmt == "xlsx":
      return self.to_excel_bytes(document)
    raise ValueError(f"Formato no soportado: {fmt}")

  # ====================================================================================================================
  #                                         GENERAR JSON
  # ====================================================================================================================

  def to_json_bytes(self, document: OutputDocument) -> bytes:
    # JSON CON ORDEN DE CLAVES FIJO Y SALTO DE LÍNEA FINAL
    json_content = json.dumps(document.to_dict(), indent=2, ensure_ascii=False) + "\n"
    json_bytes = json_content.encode('utf-8')
    log.info(f"JSON generado: {len(json_bytes)} bytes")
    return json_bytes

  # ====================================================================================================================
  #                                         GENERAR CSV
  # ====================================================================================================================

  def to_csv_bytes(self, document: OutputDocument) -> bytes:
    # CABECERA x1,...,xd Y UNA FILA ENTERA POR VÉRTICE
    frame = vertices_frame(document)
    csv_bytes = frame.to_csv(index=False, lineterminator="\n").encode('utf-8')
    log.info(f"CSV generado: {len(csv_bytes)} bytes, {len(frame)} vértices")
    return csv_bytes

  # ====================================================================================================================
  #                                         GENERAR EXCEL
  # ====================================================================================================================

  def to_excel_bytes(self, document: OutputDocument) -> bytes:
    # LIBRO CON HOJAS vertices, centroid Y orbits (SI HAY ÓRBITAS)
    output = BytesIO()
    with pd.ExcelWriter(output, engine='xlsxwriter') as writer:
      sheets = {
        "vertices": vertices_frame(document),
        "centroid": pd.DataFrame({
          "coordinate": [f"x{i + 1}" for i in range(document.dimension)],
          "value": document.centroid,
        }),
      }
      if document.orbits is not None:
        sheets["orbits"] = pd.DataFrame([
          {
            "orbit": index,
            "size": len(orbit["members"]),
            "stabilizer_order": orbit["stabilizer_order"],
            "members": " ".join(orbit["members"]),
            "centroid": ", ".join(orbit["centroid"]),
          }
          for index, orbit in enumerate(document.orbits)
        ])

      for name, frame in sheets.items():
        frame.to_excel(writer, sheet_name=name, index=False)
        # ajustar ancho de columnas según contenido, con tope
        worksheet = writer.sheets[name]
        for idx, col in enumerate(frame.columns):
          longest = frame[col].astype(str).map(len).max() if len(frame) else 0
          worksheet.set_column(idx, idx, min(max(longest, len(str(col))) + 3, 50))

    excel_bytes = output.getvalue()
    log.info(f"Excel generado: {len(excel_bytes)} bytes")
    return excel_bytes

# ====================================================================================================================
#                                         TABLAS Y LECTURA
# ====================================================================================================================

def vertices_frame(document: OutputDocument) -> pd.DataFrame:
  columns = [f"x{i + 1}" for i in range(document.dimension)]
  return pd.DataFrame(document.vertices, columns=columns, dtype="int64")


def read_csv_vertices(data: bytes) -> List[List[int]]:
  # LEE LOS VÉRTICES DE UN CSV EXPORTADO
  frame = pd.read_csv(StringIO(data.decode('utf-8')), dtype="int64")
  return frame.values.tolist()


def read_json_vertices(data: bytes) -> List[List[int]]:
  payload: Dict = json.loads(data.decode('utf-8'))
  return [list(vertex) for vertex in payload["vertices"]]


def read_excel_vertices(data: bytes) -> List[List[int]]:
  # USA openpyxl PARA RELEER LA HOJA DE VÉRTICES; LOS ERRORES DE LECTURA SE PROPAGAN
  frame = pd.read_excel(BytesIO(data), sheet_name="vertices", engine="openpyxl")
  return frame.astype("int64").values.tolist()
