# PRUEBAS DEL MANEJADOR DE DOCUMENTOS Y DE LA EXPORTACIÓN JSON, CSV Y EXCEL

import asyncio
import json
import zipfile

import pytest

from src.core.data_handler import PolytopeDataHandler
from src.models import OrientationError, OutputDocument, PolygonError
from src.utils.exporters import DocumentExporter, read_csv_vertices, read_excel_vertices, read_json_vertices


@pytest.fixture
def handler():
  return PolytopeDataHandler()

# ========================================================================================================
#                                        RESOLVER Y CONSTRUIR
# ========================================================================================================

def test_resolve_type_b_dimension(handler):
  n, orientation = handler.resolve("cyclohedron", 4, "2")
  assert n == 2
  assert orientation.n == 4 and orientation.up == (2,)


@pytest.mark.parametrize("kind, dimension, up, error", [
  ("cyclohedron", 3, "", OrientationError),
  ("cyclohedron", 4, "2,3", OrientationError),
  ("associahedron", 0, "", PolygonError),
  ("associahedron", 5, "2,x", OrientationError),
  ("permutahedron-a", 4, "2", OrientationError),
])
def test_invalid_requests(handler, kind, dimension, up, error):
  with pytest.raises(error):
    handler.vertices(kind, dimension, up)


def test_vertices_by_kind(handler):
  assert handler.vertices("permutahedron-a", 2) == [(1, 2), (2, 1)]
  assert handler.vertices("permutahedron-b", 2) == [(1, 2), (2, 1)]
  assert handler.vertices("associahedron", 2) == [(1, 2), (2, 1)]
  assert handler.vertices("cyclohedron", 2) == [(1, 2), (2, 1)]


def test_orbits(handler):
  orbits = handler.orbits("associahedron", 4, "2")
  assert sorted(len(o["members"]) for o in orbits) == [2, 6, 6]
  assert all(o["centroid"] == ["5/2"] * 4 for o in orbits)
  cyclic = handler.orbits("cyclohedron", 4, "3")
  assert sum(len(o["members"]) for o in cyclic) == 6


def test_orbits_need_triangulations(handler):
  with pytest.raises(ValueError):
    handler.orbits("permutahedron-a", 3)


def test_build_document(handler):
  document = handler.build_document("associahedron", 5, "2,4")
  assert document.centroid == ["3/1"] * 5
  assert document.up == [2, 4]
  assert len(document.vertices) == 42
  assert document.orbits is None
  assert "orbits" not in document.to_dict()


def test_document_dimension_is_validated():
  with pytest.raises(ValueError):
    OutputDocument(n=1, kind="cyclohedron", up=[], vertices=[[1]], centroid=["1/1"])

# ========================================================================================================
#                                            FORMATOS
# ========================================================================================================

def test_json_layout(handler):
  document = handler.build_document("associahedron", 3, "", include_orbits=True)
  payload = json.loads(DocumentExporter().to_json_bytes(document))
  assert list(payload) == ["n", "kind", "up", "vertices", "centroid", "orbits"]
  assert payload["centroid"] == ["2/1", "2/1", "2/1"]
  assert payload["orbits"][0]["stabilizer_order"] == 2


def test_csv_layout(handler):
  document = handler.build_document("associahedron", 2)
  assert DocumentExporter().to_csv_bytes(document) == b"x1,x2\n1,2\n2,1\n"


def test_csv_json_and_excel_agree(handler):
  document = handler.build_document("cyclohedron", 4, "2", include_orbits=True)
  exporter = DocumentExporter()
  from_json = read_json_vertices(exporter.export(document, "json"))
  assert read_csv_vertices(exporter.export(document, "csv")) == from_json
  assert read_excel_vertices(exporter.export(document, "xlsx")) == from_json
  assert from_json == document.vertices


def test_corrupt_excel_raises():
  with pytest.raises(zipfile.BadZipFile):
    read_excel_vertices(b"no es un libro de Excel")


def test_unknown_format(handler):
  with pytest.raises(ValueError):
    DocumentExporter().export(handler.build_document("associahedron", 2), "off")


def test_save_document_is_deterministic(handler, tmp_path):
  document = handler.build_document("associahedron", 4, "3")
  first = asyncio.run(handler.save_document(document, "json", tmp_path / "a" / "doc.json"))
  second = asyncio.run(handler.save_document(document, "json", tmp_path / "b" / "doc.json"))
  assert first.read_bytes() == second.read_bytes()
