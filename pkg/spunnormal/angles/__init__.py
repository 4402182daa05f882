from .semi_angle import (CertificateReport, SemiAngleStructure, angle_polytope, certify_essential, dual_surfaces,
                         find_dual_semiangle, is_semi_angle_structure)

__all__ = [
    'CertificateReport', 'SemiAngleStructure', 'angle_polytope', 'certify_essential', 'dual_surfaces',
    'find_dual_semiangle', 'is_semi_angle_structure'
]
