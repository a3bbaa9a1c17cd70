from .polygon import Diagonal, Triangle, Triangulation
from .dihedral_element import DihedralElement
from .orientation import Orientation, LabeledPolygon
from .signed_permutation import SignedPermutation
from .report import VerificationReport, Perturbation
from .document import OutputDocument, POLYTOPE_KINDS
from .errors import PolygonError, OrientationError, VerificationInputError, LabelingError

# ========================================================================================================
#                                       EXPORTACIONES PÚBLICAS
# ========================================================================================================

# Define las clases disponibles para importación externa
__all__ = [
  'Diagonal', 'Triangle', 'Triangulation',
  'DihedralElement',
  'Orientation', 'LabeledPolygon',
  'SignedPermutation',
  'VerificationReport', 'Perturbation',
  'OutputDocument', 'POLYTOPE_KINDS',
  'PolygonError', 'OrientationError', 'VerificationInputError', 'LabelingError',
]
