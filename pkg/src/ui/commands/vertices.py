# MÓDULO DEL COMANDO vertices
# Imprime un vértice por línea con coordenadas enteras

from typing import Sequence

from src.ui.exit_codes import EXIT_OK


def format_vertex(vertex: Sequence[int]) -> str:
  return "(" + ",".join(str(c) for c in vertex) + ")"


def render(args, handler, config) -> int:
  for vertex in handler.vertices(args.kind, args.n, args.up):
    print(format_vertex(vertex))
  return EXIT_OK
