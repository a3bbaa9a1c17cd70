# MÓDULO DEL COMANDO enumerate
# Lista una triangulación por línea como su lista de diagonales

from loguru import logger as log

from src.core.polygon import enumerate_triangulations
from src.core.realization_b import enumerate_symmetric_triangulations
from src.models import PolygonError
from src.ui.exit_codes import EXIT_OK


def render(args, handler, config) -> int:
  # --symmetric FILTRA LAS CENTRALMENTE SIMÉTRICAS DEL (n+2)-ÁGONO, CON n PAR
  if args.symmetric:
    if args.n % 2:
      raise PolygonError(f"El ({args.n}+2)-ágono no tiene triangulaciones centralmente simétricas: n debe ser par")
    triangulations = enumerate_symmetric_triangulations(args.n // 2)
  else:
    triangulations = enumerate_triangulations(args.n)

  for triangulation in triangulations:
    print(triangulation)
  log.info(f"{len(triangulations)} triangulaciones listadas")
  return EXIT_OK
