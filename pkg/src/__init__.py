from .core import PolytopeDataHandler, verify_all

# versión actual del proyecto para tracking de releases
__version__ = "1.0.0"

# lista de elementos públicos disponibles para importación externa
# define API pública del paquete completo
__all__ = ['PolytopeDataHandler', 'verify_all']
