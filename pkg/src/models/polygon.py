from dataclasses import dataclass, field
from typing import Tuple

from .errors import PolygonError

# ========================================================================================================
#                                        MODELO DE DIAGONAL
# ========================================================================================================

@dataclass(frozen=True, order=True)
class Diagonal:
  # Cuerda entre dos vértices no adyacentes del m-ágono, guardada con a < b
  a: int
  b: int

  def validate(self, m: int) -> None:
    # VERIFICA QUE LA DIAGONAL SEA VÁLIDA PARA UN POLÍGONO DE m VÉRTICES
    if not (0 <= self.a < self.b < m):
      raise PolygonError(f"Diagonal {self.as_tuple()} fuera del polígono de {m} vértices")
    if self.b - self.a < 2 or (self.a == 0 and self.b == m - 1):
      raise PolygonError(f"({self.a},{self.b}) es un lado del polígono, no una diagonal")

  @classmethod
  def of(cls, x: int, y: int) -> "Diagonal":
    # Normaliza el par no ordenado
    return cls(min(x, y), max(x, y))

  def as_tuple(self) -> Tuple[int, int]:
    return (self.a, self.b)

# ========================================================================================================
#                                        MODELO DE TRIÁNGULO
# ========================================================================================================

@dataclass(frozen=True, order=True)
class Triangle:
  # Triángulo A_i A_j A_k con i < j < k; j es el vértice medio que lo indexa
  i: int
  j: int
  k: int

  def as_tuple(self) -> Tuple[int, int, int]:
    return (self.i, self.j, self.k)

# ========================================================================================================
#                                      MODELO DE TRIANGULACIÓN
# ========================================================================================================

@dataclass(frozen=True)
class Triangulation:
  # Triangulación del (n+2)-ágono en forma canónica
  # La igualdad y el hash dependen sólo de n y de las diagonales ordenadas

  n: int # Número de triángulos; el polígono tiene m = n+2 vértices
  diagonals: Tuple[Diagonal, ...] # n-1 diagonales ordenadas lexicográficamente
  triangles: Tuple[Triangle, ...] = field(compare=False, repr=False) # triangles[j-1] = Δ_j(T)

  @property
  def m(self) -> int:
    return self.n + 2

  def diagonal_pairs(self) -> Tuple[Tuple[int, int], ...]:
    return tuple(d.as_tuple() for d in self.diagonals)

  def __str__(self) -> str:
    # Formato de salida de la CLI: lista de diagonales
    return "[" + ", ".join(f"({a},{b})" for a, b in self.diagonal_pairs()) + "]"
