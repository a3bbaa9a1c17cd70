from dataclasses import dataclass
from typing import Any, Dict, List, Optional

# Tipos de politopo exportables y si viven en R^n o en R^{2n}
POLYTOPE_KINDS = {
  "permutahedron-a": 1,
  "permutahedron-b": 2,
  "associahedron": 1,
  "cyclohedron": 2,
}

# ========================================================================================================
#                                    MODELO DE DOCUMENTO DE SALIDA
# ========================================================================================================

@dataclass
class OutputDocument:
  # Conjunto de vértices de un politopo con su centroide exacto y, opcionalmente, sus órbitas
  n: int
  kind: str
  up: List[int]
  vertices: List[List[int]]
  centroid: List[str] # Fracciones "p/q"
  orbits: Optional[List[Dict[str, Any]]] = None # {members, stabilizer_order, centroid}

  def __post_init__(self):
    if self.kind not in POLYTOPE_KINDS:
      raise ValueError(f"Tipo de politopo desconocido: {self.kind}")
    dimension = self.dimension
    for vertex in self.vertices:
      if len(vertex) != dimension:
        raise ValueError(f"Vértice {vertex} no tiene dimensión {dimension}")
    if len(self.centroid) != dimension:
      raise ValueError(f"Centroide de longitud {len(self.centroid)}, se esperaba {dimension}")

  @property
  def dimension(self) -> int:
    return self.n * POLYTOPE_KINDS[self.kind]

  def to_dict(self) -> Dict[str, Any]:
    # Orden de claves fijo para salida determinista
    data: Dict[str, Any] = {
      "n": self.n,
      "kind": self.kind,
      "up": list(self.up),
      "vertices": [list(vertex) for vertex in self.vertices],
      "centroid": list(self.centroid),
    }
    if self.orbits is not None:
      data["orbits"] = self.orbits
    return data
