# ========================================================================================================
#                                       ERRORES DEL DOMINIO
# ========================================================================================================

# Todas las validaciones de entrada son ValueError para que la CLI las traduzca a código 2


class PolygonError(ValueError):
  # Diagonal inválida, cruce, conteo incorrecto, tamaño de polígono distinto o índice fuera de rango
  pass


class OrientationError(ValueError):
  # Conjunto "up" inválido, orientación no simétrica o rango impar para tipo B
  pass


class VerificationInputError(ValueError):
  # Entrada vacía o irregular para baricentros, órbita no cerrada bajo la acción
  pass


class LabelingError(RuntimeError):
  # Arco o triángulo inexistente en el polígono etiquetado: indica un bug interno
  pass
