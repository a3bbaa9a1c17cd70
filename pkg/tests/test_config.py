# PRUEBAS DE LA CARGA DE CONFIGURACIÓN

import json

from src.utils.constants import CONFIG_ENV_VAR, PROJECT_ROOT, AppConfig, VerifyConfig, load_config


def test_missing_file_uses_defaults(tmp_path):
  assert load_config(tmp_path / "absent.json") == AppConfig()


def test_partial_file_keeps_defaults(config_file):
  config = load_config(config_file)
  assert config.log_level == "WARNING"
  assert config.verify.max_n == 3
  assert config.verify.type_b_max_n == VerifyConfig().type_b_max_n
  assert config.paths.LOGS_DIR == config_file.parent / "logs"


def test_unknown_keys_are_ignored(tmp_path):
  path = tmp_path / "config.json"
  path.write_text(json.dumps({"log_level": "DEBUG", "regions": [], "verify": {"speed": 3}}), encoding="utf-8")
  config = load_config(path)
  assert config.log_level == "DEBUG"
  assert config.verify == VerifyConfig()


def test_invalid_json_falls_back(tmp_path):
  path = tmp_path / "config.json"
  path.write_text("{not json", encoding="utf-8")
  assert load_config(path) == AppConfig()


def test_environment_variable(config_file, monkeypatch):
  monkeypatch.setenv(CONFIG_ENV_VAR, str(config_file))
  assert load_config().verify.max_n == 3


def test_relative_paths_resolve_against_project_root():
  assert AppConfig().paths.OUTPUT_DIR == PROJECT_ROOT / "output"


def test_repository_config_matches_defaults():
  assert load_config(PROJECT_ROOT / "config.json") == AppConfig()


def test_non_object_file_falls_back(tmp_path):
  path = tmp_path / "config.json"
  path.write_text(json.dumps([{"log_level": "DEBUG"}]), encoding="utf-8")
  assert load_config(path) == AppConfig()


def test_non_object_verify_section_keeps_defaults(tmp_path):
  path = tmp_path / "config.json"
  path.write_text(json.dumps({"log_level": "DEBUG", "verify": 5}), encoding="utf-8")
  config = load_config(path)
  assert config.log_level == "DEBUG"
  assert config.verify == VerifyConfig()


def test_wrongly_typed_values_are_dropped(tmp_path):
  path = tmp_path / "config.json"
  path.write_text(json.dumps({
    "default_jobs": "4",
    "log_level": 10,
    "verify": {"max_n": True, "type_b_max_n": 3},
  }), encoding="utf-8")
  config = load_config(path)
  assert config.default_jobs == 1
  assert config.log_level == "INFO"
  assert config.verify.max_n == VerifyConfig().max_n
  assert config.verify.type_b_max_n == 3


def test_relative_output_paths_land_in_output_dir(config_file):
  paths = load_config(config_file).paths
  assert paths.output_path("doc.json") == paths.OUTPUT_DIR / "doc.json"
  assert paths.output_path(str(config_file)) == config_file
