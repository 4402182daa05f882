from .classes import (CuspClass, EdgeClass, cusp_of_vertex, even_completion, require_torus_cusps,
                      trace_cusp_classes, trace_edge_classes)
from .symmetry import Symmetry, apply_quad_permutation, cusp_stabilizer, induced_quad_permutation, symmetries
from .triangulation import (Triangulation, load_triangulation, parse_triangulation, perm_compose, perm_inverse,
                            perm_parity)

__all__ = [
    'CuspClass', 'EdgeClass', 'cusp_of_vertex', 'even_completion', 'require_torus_cusps', 'trace_cusp_classes',
    'trace_edge_classes', 'Symmetry', 'apply_quad_permutation', 'cusp_stabilizer', 'induced_quad_permutation',
    'symmetries', 'Triangulation', 'load_triangulation', 'parse_triangulation', 'perm_compose', 'perm_inverse',
    'perm_parity'
]
