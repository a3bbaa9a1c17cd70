from dataclasses import dataclass
from typing import Tuple

from .errors import OrientationError

# ========================================================================================================
#                                       MODELO DE ORIENTACIÓN
# ========================================================================================================

@dataclass(frozen=True, order=True)
class Orientation:
  # Orientación del grafo de Coxeter Γ_{n-1} codificada por su conjunto "up"
  # i es up si la arista {τ_{i-1}, τ_i} va de τ_i a τ_{i-1}; 1 y n siempre son down

  n: int
  up: Tuple[int, ...] = () # Elementos up ordenados, subconjunto de {2, ..., n-1}

  def __post_init__(self):
    if self.n < 1:
      raise OrientationError(f"Rango inválido: n={self.n}")
    normalized = tuple(sorted(set(self.up)))
    for element in normalized:
      if not 2 <= element <= self.n - 1:
        raise OrientationError(f"Elemento up {element} fuera de {{2, ..., {self.n - 1}}}")
    object.__setattr__(self, "up", normalized)

  @property
  def is_canonical(self) -> bool:
    return not self.up

  def is_up(self, element: int) -> bool:
    return element in self.up

# ========================================================================================================
#                                    MODELO DE POLÍGONO ETIQUETADO
# ========================================================================================================

@dataclass(frozen=True)
class LabeledPolygon:
  # Biyección entre posiciones A_0..A_{n+1} y etiquetas 0..n+1 inducida por una orientación
  n: int
  label_of_position: Tuple[int, ...]
  position_of_label: Tuple[int, ...]

  @property
  def m(self) -> int:
    return self.n + 2

  def label(self, position: int) -> int:
    return self.label_of_position[position]

  def position(self, label: int) -> int:
    return self.position_of_label[label]
