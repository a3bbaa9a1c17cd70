# MÓDULO DEL COMANDO verify
# Ejecuta verify_all, imprime el resumen por verificación y los testigos de cada falla
# Sale con 1 si alguna verificación falla

import asyncio
import json
from typing import Optional

from loguru import logger as log

from src.core.verifier import summarize_reports, verify_all
from src.models import Perturbation, VerificationInputError
from src.ui.exit_codes import EXIT_OK, EXIT_VERIFICATION_FAILED

# ====================================================================================================================
#                                        LEER INYECCIÓN DE FALLAS
# ====================================================================================================================

def parse_fault(text: Optional[str]) -> Optional[Perturbation]:
  # FORMATO N:T:J, CON T EL ÍNDICE DE LA TRIANGULACIÓN Y J LA COORDENADA 1..N
  if not text:
    return None
  try:
    n, index, coordinate = (int(part) for part in text.split(":"))
  except ValueError:
    raise VerificationInputError(f"Falla mal formada '{text}', se esperaba N:T:J")
  return Perturbation(n=n, triangulation_index=index, coordinate=coordinate)

# ====================================================================================================================
#                                              RENDERIZAR
# ====================================================================================================================

def render(args, handler, config) -> int:
  max_n = args.max_n if args.max_n is not None else config.verify.max_n
  jobs = args.jobs if args.jobs is not None else config.default_jobs
  if jobs < 1:
    raise VerificationInputError(f"--jobs debe ser al menos 1, recibido {jobs}")

  reports = verify_all(max_n, config=config.verify, jobs=jobs, perturbation=parse_fault(args.inject_fault))

  print(summarize_reports(reports).to_string(index=False))
  failures = [report for report in reports if not report.passed]
  for report in failures:
    print(f"FAIL {report.check_name} {json.dumps(report.parameters)}")
    print(f"  witness: {json.dumps(report.witness)}")

  if args.report:
    asyncio.run(handler.save_reports(reports, config.paths.output_path(args.report)))

  if failures:
    print(f"FAILED: {len(failures)} of {len(reports)} checks")
    log.warning(f"Verificación fallida hasta n={max_n}")
    return EXIT_VERIFICATION_FAILED

  print(f"PASSED: {len(reports)} checks")
  return EXIT_OK
