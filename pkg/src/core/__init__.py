# ========================================================================================================
#                                        IMPORTACIONES DEL MÓDULO
# ========================================================================================================

from .polygon import enumerate_triangulations, from_diagonals, is_crossing, triangle_at, catalan_number
from .dihedral import act, compose, inverse, orbit, stabilizer, orbit_decomposition, reflection_s, rotation
from .realization_a import delta_weight, loday_vertex, label_polygon, hl_weight, hl_vertex, transport_isometry
from .realization_b import (
  enumerate_symmetric_triangulations, is_symmetric_orientation, cyclohedron_vertices, permutahedron_b_vertices,
)
from .centroid import barycenter, check_weight_orbit_sum, check_coordinate_orbit_sum, check_orbit_barycenter
from .verifier import verify_all, summarize_reports
from .data_handler import PolytopeDataHandler

# ========================================================================================================
#                                       EXPORTACIONES PÚBLICAS
# ========================================================================================================

# Define las funciones y clases disponibles para importación externa
__all__ = [
  'enumerate_triangulations', 'from_diagonals', 'is_crossing', 'triangle_at', 'catalan_number',
  'act', 'compose', 'inverse', 'orbit', 'stabilizer', 'orbit_decomposition', 'reflection_s', 'rotation',
  'delta_weight', 'loday_vertex', 'label_polygon', 'hl_weight', 'hl_vertex', 'transport_isometry',
  'enumerate_symmetric_triangulations', 'is_symmetric_orientation', 'cyclohedron_vertices',
  'permutahedron_b_vertices',
  'barycenter', 'check_weight_orbit_sum', 'check_coordinate_orbit_sum', 'check_orbit_barycenter',
  'verify_all', 'summarize_reports',
  'PolytopeDataHandler',
]
