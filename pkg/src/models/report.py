from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

# ========================================================================================================
#                                      MODELO DE REPORTE
# ========================================================================================================

@dataclass
class VerificationReport:
  # Resultado de una verificación: identidad comprobada, parámetros y testigo si falla
  check_name: str
  parameters: Dict[str, Any] = field(default_factory=dict)
  passed: bool = True
  witness: Optional[Dict[str, Any]] = None # Entrada fallida y ambos lados de la identidad

  def __post_init__(self):
    if self.passed and self.witness is not None:
      raise ValueError(f"{self.check_name}: un reporte exitoso no lleva testigo")
    if not self.passed and self.witness is None:
      raise ValueError(f"{self.check_name}: un reporte fallido necesita testigo")

  def to_dict(self) -> Dict[str, Any]:
    return {
      "check": self.check_name,
      "parameters": self.parameters,
      "passed": self.passed,
      "witness": self.witness,
    }

# ========================================================================================================
#                                    MODELO DE PERTURBACIÓN
# ========================================================================================================

@dataclass(frozen=True)
class Perturbation:
  # Inyección de fallas: suma delta a una coordenada del vértice de una triangulación
  n: int
  triangulation_index: int # Índice en el orden de enumeración
  coordinate: int # Coordenada 1..n
  delta: int = 1
  up: Optional[Tuple[int, ...]] = None # None aplica a todas las orientaciones

  def applies_to(self, n: int, up: Tuple[int, ...]) -> bool:
    return self.n == n and (self.up is None or tuple(self.up) == tuple(up))
