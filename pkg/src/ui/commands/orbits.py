# MÓDULO DEL COMANDO orbits
# Muestra cada órbita diedral con tamaño, orden del estabilizador, centroide y miembros

from src.ui.exit_codes import EXIT_OK


def render(args, handler, config) -> int:
  orbits = handler.orbits(args.kind, args.n, args.up)
  for index, orbit in enumerate(orbits, start=1):
    print(
      f"orbit {index}: size={len(orbit['members'])} "
      f"stabilizer={orbit['stabilizer_order']} "
      f"centroid={' '.join(orbit['centroid'])}"
    )
    for member in orbit["members"]:
      print(f"  {member}")
  return EXIT_OK
