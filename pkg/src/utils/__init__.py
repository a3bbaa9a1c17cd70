# MÓDULO DE INICIALIZACIÓN PARA UTILIDADES DEL SISTEMA
# Centraliza importación de componentes de utilidad para fácil acceso
# Proporciona punto de entrada único para configuración, logging y exportación

from .constants import AppConfig, PathConfig, VerifyConfig, load_config
from .exporters import EXPORT_FORMATS, DocumentExporter
from .logger import setup_logging

# lista de elementos públicos disponibles para importación externa
# define API pública del módulo utils
__all__ = [
  'AppConfig',         # configuración completa leída de config.json
  'PathConfig',        # configuración de rutas del sistema
  'VerifyConfig',      # topes por barrido de verificación
  'load_config',       # función para leer config.json
  'EXPORT_FORMATS',    # formatos aceptados por export
  'DocumentExporter',  # clase para exportar documentos a múltiples formatos
  'setup_logging',     # función para inicializar sistema de logs
]
