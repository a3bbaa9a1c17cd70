from dataclasses import dataclass

# ========================================================================================================
#                                     MODELO DE ELEMENTO DIEDRAL
# ========================================================================================================

@dataclass(frozen=True, order=True)
class DihedralElement:
  # Isometría del m-ágono regular en forma canónica (reflect, t)
  # Rotación: x -> (x + t) mod m ; reflexión: x -> (t - x) mod m

  m: int
  reflect: bool
  t: int

  def __post_init__(self):
    # normalizar el desplazamiento para que la igualdad sea estructural
    object.__setattr__(self, "t", self.t % self.m)

  def __call__(self, x: int) -> int:
    if self.reflect:
      return (self.t - x) % self.m
    return (x + self.t) % self.m

  @property
  def is_identity(self) -> bool:
    return not self.reflect and self.t == 0

  def __str__(self) -> str:
    kind = "s" if self.reflect else "r"
    return f"{kind}{self.t}"
