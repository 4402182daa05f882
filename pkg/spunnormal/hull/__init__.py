from .cone import Cone, ConeRays, cone_faces, cone_intersect, extreme_rays, is_subcone
from .linalg import RationalVector, as_vector, nullspace, rank, rref, solve
from .lp import FarkasCertificate, LPProblem, LPResult, lp_feasible

__all__ = [
    'Cone', 'ConeRays', 'cone_faces', 'cone_intersect', 'extreme_rays', 'is_subcone', 'RationalVector', 'as_vector',
    'nullspace', 'rank', 'rref', 'solve', 'FarkasCertificate', 'LPProblem', 'LPResult', 'lp_feasible'
]
