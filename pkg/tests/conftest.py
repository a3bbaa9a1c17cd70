# CONFIGURACIÓN COMPARTIDA DE PRUEBAS
# Perfiles de hypothesis, fixtures de triangulaciones conocidas y configuración aislada en tmp_path

import json
import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from src.core.polygon import enumerate_triangulations, from_diagonals
from src.core.realization_a import all_orientations

# ========================================================================================================
#                                       PERFILES DE HYPOTHESIS
# ========================================================================================================

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("ci", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("dev", max_examples=15, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# ========================================================================================================
#                                           ESTRATEGIAS
# ========================================================================================================

def triangulations(max_n: int = 6):
  # n ALEATORIO Y UNA TRIANGULACIÓN CUALQUIERA DEL (n+2)-ÁGONO
  return st.integers(min_value=1, max_value=max_n).flatmap(
    lambda n: st.sampled_from(enumerate_triangulations(n))
  )


def orientation_and_triangulation(max_n: int = 6):
  # PAR (ORIENTACIÓN, TRIANGULACIÓN) DEL MISMO RANGO
  return st.integers(min_value=1, max_value=max_n).flatmap(
    lambda n: st.tuples(st.sampled_from(all_orientations(n)), st.sampled_from(enumerate_triangulations(n)))
  )

# ========================================================================================================
#                                             FIXTURES
# ========================================================================================================

@pytest.fixture
def square():
  return from_diagonals(2, [(0, 2)])


@pytest.fixture
def pentagon_fan():
  return from_diagonals(3, [(0, 2), (0, 3)])


@pytest.fixture
def config_file(tmp_path):
  # config.json CON RUTAS ABSOLUTAS DENTRO DE tmp_path
  path = tmp_path / "config.json"
  path.write_text(json.dumps({
    "output_dir": str(tmp_path / "output"),
    "log_dir": str(tmp_path / "logs"),
    "log_level": "WARNING",
    "default_jobs": 1,
    "verify": {"max_n": 3},
  }), encoding="utf-8")
  return path
