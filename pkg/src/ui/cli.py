# APLICACIÓN PRINCIPAL DE LÍNEA DE COMANDOS PARA POLITOPOS Y CENTROS DE GRAVEDAD
# Configura el parser, inicializa logging y despacha a los módulos de cada comando
# Códigos de salida: 0 éxito, 1 verificación fallida, 2 error de uso

import argparse
import sys
from typing import List, Optional

from loguru import logger as log

from src.core.data_handler import PolytopeDataHandler
from src.models import POLYTOPE_KINDS
from src.ui.commands import barycenter, enumeration, export, orbits, verify, vertices
from src.ui.exit_codes import EXIT_OK, EXIT_USAGE
from src.utils import EXPORT_FORMATS, load_config, setup_logging

# ====================================================================================================================
#                                             CONSTRUIR PARSER
# ====================================================================================================================

def _add_polytope_options(parser: argparse.ArgumentParser) -> None:
  # OPCIONES COMUNES PARA SELECCIONAR UN POLITOPO
  parser.add_argument("--n", type=int, required=True,
                      help="dimensión ambiente: n en tipo A, 2n (par) en tipo B")
  parser.add_argument("--up", default="", help="conjunto up de la orientación, p. ej. 2,4")
  parser.add_argument("--type", choices=["a", "b"], default="a", dest="type_",
                      help="a: asociaedro, b: cicloedro")
  parser.add_argument("--kind", choices=sorted(POLYTOPE_KINDS), default=None,
                      help="tipo de politopo explícito; tiene prioridad sobre --type")


def build_parser() -> argparse.ArgumentParser:
  parser = argparse.ArgumentParser(
    prog="centroid",
    description="Vértices exactos de permutaedros, asociaedros y cicloedros y verificación de sus centros de gravedad",
  )
  parser.add_argument("--config", default=None, help="ruta alternativa a config.json")
  verbosity = parser.add_mutually_exclusive_group()
  verbosity.add_argument("--verbose", action="store_true", help="logs DEBUG en consola")
  verbosity.add_argument("--quiet", action="store_true", help="sólo advertencias y errores")

  commands = parser.add_subparsers(dest="command", required=True)

  enumerate_parser = commands.add_parser("enumerate", help="lista las triangulaciones del (n+2)-ágono")
  enumerate_parser.add_argument("--n", type=int, required=True)
  enumerate_parser.add_argument("--symmetric", action="store_true",
                                help="sólo las centralmente simétricas (n par)")

  vertices_parser = commands.add_parser("vertices", help="coordenadas de los vértices")
  _add_polytope_options(vertices_parser)

  orbits_parser = commands.add_parser("orbits", help="descomposición en órbitas diedrales")
  _add_polytope_options(orbits_parser)

  barycenter_parser = commands.add_parser("barycenter", help="centroide exacto como p/q")
  _add_polytope_options(barycenter_parser)

  verify_parser = commands.add_parser("verify", help="verificación exhaustiva de los teoremas")
  verify_parser.add_argument("--max-n", type=int, default=None, dest="max_n")
  verify_parser.add_argument("--jobs", type=int, default=None, help="número máximo de procesos")
  verify_parser.add_argument("--report", default=None, help="archivo JSON con todos los reportes")
  verify_parser.add_argument("--inject-fault", default=None, dest="inject_fault", metavar="N:T:J",
                             help="suma 1 a la coordenada J del vértice de la triangulación T (n=N)")

  export_parser = commands.add_parser("export", help="escribe un documento JSON, CSV o Excel")
  _add_polytope_options(export_parser)
  export_parser.add_argument("--format", choices=EXPORT_FORMATS, required=True, dest="fmt")
  export_parser.add_argument("--out", required=True)
  export_parser.add_argument("--orbits", action="store_true", dest="include_orbits",
                             help="incluye la descomposición en órbitas")
  return parser

# ====================================================================================================================
#                                              EJECUTAR COMANDO
# ====================================================================================================================

HANDLERS = {
  "enumerate": enumeration.render,
  "vertices": vertices.render,
  "orbits": orbits.render,
  "barycenter": barycenter.render,
  "verify": verify.render,
  "export": export.render,
}


def resolve_kind(args: argparse.Namespace) -> str:
  # --kind GANA; SI NO, --type a|b ELIGE ASOCIAEDRO O CICLOEDRO
  if getattr(args, "kind", None):
    return args.kind
  return "cyclohedron" if getattr(args, "type_", "a") == "b" else "associahedron"


def run(argv: Optional[List[str]] = None) -> int:
  # PUNTO DE ENTRADA: DEVUELVE EL CÓDIGO DE SALIDA EN LUGAR DE TERMINAR EL PROCESO
  parser = build_parser()
  try:
    args = parser.parse_args(argv)
  except SystemExit as e:
    return EXIT_OK if e.code in (0, None) else EXIT_USAGE

  config = load_config(args.config)
  level = "DEBUG" if args.verbose else "WARNING" if args.quiet else config.log_level
  setup_logging(level=level, log_file=config.paths.LOG_FILE)

  if hasattr(args, "type_"):
    args.kind = resolve_kind(args)

  try:
    return HANDLERS[args.command](args, PolytopeDataHandler(), config)
  except ValueError as e:
    log.error(f"Error de uso: {e}")
    print(f"error: {e}", file=sys.stderr)
    return EXIT_USAGE


def main() -> None:
  sys.exit(run())


if __name__ == "__main__":
  main()
