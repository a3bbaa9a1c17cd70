# MÓDULO DEL COMANDO export
# Construye el OutputDocument y lo escribe en JSON, CSV o Excel

import asyncio

from src.ui.exit_codes import EXIT_OK


def render(args, handler, config) -> int:
  document = handler.build_document(args.kind, args.n, args.up, include_orbits=args.include_orbits)
  path = asyncio.run(handler.save_document(document, args.fmt, config.paths.output_path(args.out)))
  print(path)
  return EXIT_OK
