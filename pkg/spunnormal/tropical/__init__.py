from .correspondence import CorrespondenceReport, correspondence_report, normal_to_xi, xi_to_normal
from .degenerations import (CentreSquarePath, ConstantPath, EqualGrowthPath, FlatTetrahedraPath, GoldenRatioPath,
                            ShapePath)
from .fan import (DualFan, PreVariety, fan_contains, max_attained_twice, prevariety, prevariety_from_rows,
                  spherical_dual)
from .probe import ProbeResult, log_limit_probe, working_digits
from .supports import SupportSet, gluing_supports, parameter_supports

__all__ = [
    'CorrespondenceReport', 'correspondence_report', 'normal_to_xi', 'xi_to_normal', 'CentreSquarePath',
    'ConstantPath', 'EqualGrowthPath', 'FlatTetrahedraPath', 'GoldenRatioPath', 'ShapePath', 'DualFan', 'PreVariety',
    'fan_contains', 'max_attained_twice', 'prevariety', 'prevariety_from_rows', 'spherical_dual', 'ProbeResult',
    'log_limit_probe', 'working_digits', 'SupportSet', 'gluing_supports', 'parameter_supports'
]
