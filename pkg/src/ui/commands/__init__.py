# ========================================================================================================
#                                        IMPORTACIONES DEL MÓDULO
# ========================================================================================================

# Un módulo por subcomando; cada uno expone render(args, handler, config) -> código de salida
from . import barycenter, enumeration, export, orbits, verify, vertices

__all__ = ['barycenter', 'enumeration', 'export', 'orbits', 'verify', 'vertices']
