# MÓDULO DEL COMANDO barycenter
# Imprime el centroide exacto como fracciones p/q separadas por espacios

from src.core.centroid import barycenter, format_point
from src.ui.exit_codes import EXIT_OK


def render(args, handler, config) -> int:
  center = barycenter(handler.vertices(args.kind, args.n, args.up))
  print(" ".join(format_point(center)))
  return EXIT_OK
