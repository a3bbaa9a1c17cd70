from dataclasses import dataclass
from typing import Tuple

# ========================================================================================================
#                                  MODELO DE PERMUTACIÓN CON SIGNO
# ========================================================================================================

@dataclass(frozen=True, order=True)
class SignedPermutation:
  # Elemento de W_n visto como σ ∈ S_{2n} con σ(i) + σ(2n+1-i) = 2n+1
  sigma: Tuple[int, ...] # Imagen en una línea (σ(1), ..., σ(2n))

  def __post_init__(self):
    size = len(self.sigma)
    if size == 0 or size % 2:
      raise ValueError(f"Una permutación con signo necesita longitud par, recibida {size}")
    if sorted(self.sigma) != list(range(1, size + 1)):
      raise ValueError(f"{self.sigma} no es una biyección de [{size}]")
    for i in range(size // 2):
      if self.sigma[i] + self.sigma[size - 1 - i] != size + 1:
        raise ValueError(f"{self.sigma} no conmuta con w_0 en la posición {i + 1}")

  @property
  def n(self) -> int:
    return len(self.sigma) // 2
