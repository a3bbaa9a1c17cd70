# MÓDULO DE CONSTANTES Y CONFIGURACIÓN GLOBAL DEL SISTEMA
# Define rutas principales del proyecto y carga config.json con valores por defecto
# Centraliza los límites de las verificaciones exhaustivas

import json
import os
from dataclasses import MISSING, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, Optional

from loguru import logger as log

# ====================================================================================================================
#                                            CONFIGURACIÓN DE RUTAS
# ====================================================================================================================

# calcular directorio raíz del proyecto subiendo 3 niveles desde este archivo
PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent

# archivo de configuración principal, sobreescribible por variable de entorno
CONFIG_ENV_VAR = "CENTROID_CONFIG"
DEFAULT_CONFIG_PATH = PROJECT_ROOT / "config.json"

# ====================================================================================================================
#                                        CLASE DE CONFIGURACIÓN DE RUTAS
# ====================================================================================================================

class PathConfig:
  # CENTRALIZA TODAS LAS RUTAS PRINCIPALES DEL PROYECTO
  # Las rutas relativas de config.json se resuelven contra la raíz del proyecto

  def __init__(self, output_dir: str = "output", log_dir: str = "logs"):
    self.OUTPUT_DIR = _resolve(output_dir)
    self.LOGS_DIR = _resolve(log_dir)
    self.LOG_FILE = self.LOGS_DIR / "app.log"

  def output_path(self, path: str) -> Path:
    # Las rutas relativas de --out y --report van dentro de OUTPUT_DIR
    candidate = Path(path)
    return candidate if candidate.is_absolute() else self.OUTPUT_DIR / candidate


def _resolve(path: str) -> Path:
  candidate = Path(path)
  return candidate if candidate.is_absolute() else PROJECT_ROOT / candidate

# ====================================================================================================================
#                                      CONFIGURACIÓN DE VERIFICACIONES
# ====================================================================================================================

@dataclass(frozen=True)
class VerifyConfig:
  # Cotas superiores de n para cada barrido exhaustivo de verify_all
  max_n: int = 6
  orbit_centroid_max_n: int = 7 # baricentro por órbita, todas las orientaciones
  weight_sum_max_n: int = 7 # Σ_f δ_j(f·T)
  coordinate_sum_max_n: int = 6 # Σ_f x_j(f·T)
  transport_max_n: int = 6 # ω_j(T) = δ_j(r_j·T)
  permutahedron_max_n: int = 6
  type_b_max_n: int = 4
  permutahedron_b_max_n: int = 3


@dataclass(frozen=True)
class AppConfig:
  output_dir: str = "output"
  log_dir: str = "logs"
  log_level: str = "INFO"
  default_jobs: int = 1
  verify: VerifyConfig = field(default_factory=VerifyConfig)

  @property
  def paths(self) -> PathConfig:
    return PathConfig(self.output_dir, self.log_dir)

# ====================================================================================================================
#                                           CARGAR CONFIGURACIÓN
# ====================================================================================================================

def load_config(path: Optional[Path] = None) -> AppConfig:
  # CARGA config.json; LAS CLAVES AUSENTES TOMAN SU VALOR POR DEFECTO
  config_path = Path(path or os.environ.get(CONFIG_ENV_VAR) or DEFAULT_CONFIG_PATH)

  if not config_path.exists():
    log.warning(f"Archivo de configuración no encontrado: {config_path}, usando valores por defecto")
    return AppConfig()

  try:
    with open(config_path, 'r', encoding='utf-8') as f:
      raw = json.load(f)
  except (OSError, json.JSONDecodeError) as e:
    log.error(f"Error leyendo {config_path}: {e}")
    return AppConfig()

  if not isinstance(raw, dict):
    log.warning(f"{config_path} debe contener un objeto JSON, usando valores por defecto")
    return AppConfig()

  raw_verify = raw.get("verify", {})
  if not isinstance(raw_verify, dict):
    log.warning("La sección verify debe ser un objeto, usando cotas por defecto")
    raw_verify = {}

  verify = VerifyConfig(**_known_keys(VerifyConfig, raw_verify))
  top = _known_keys(AppConfig, {key: value for key, value in raw.items() if key != "verify"})
  log.debug(f"Configuración cargada desde {config_path}")
  return AppConfig(verify=verify, **top)


def _known_keys(cls, raw: Dict[str, Any]) -> Dict[str, Any]:
  # Ignora con aviso las claves desconocidas y los valores de tipo incorrecto
  # El tipo esperado es el del valor por defecto de cada campo
  expected = {f.name: type(f.default) for f in fields(cls) if f.default is not MISSING}
  known: Dict[str, Any] = {}
  for key, value in raw.items():
    if key not in expected:
      log.warning(f"Clave de configuración desconocida ignorada: {key}")
      continue
    kind = expected[key]
    # bool es subclase de int
    if not isinstance(value, kind) or isinstance(value, bool):
      log.warning(f"Valor inválido para {key}: {value!r} (se esperaba {kind.__name__}), usando el valor por defecto")
      continue
    known[key] = value
  return known
