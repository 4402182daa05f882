from .gluing import (ExponentVector, GluingSystem, ShapeAssignment, edge_rows, evaluate_row, holonomy_derivative,
                     parameter_rows)
from .nz import (NZRow, PeripheralCurves, gluing_system, ingest_nz, load_nz_document, nz_edge_rows, nz_to_exponent,
                 peripheral_rows, relabel_exponent)
from .qmatching import CnMatrix, SlopeFunctional, qmatching_direct, qmatching_from_A, slope_functionals

__all__ = [
    'ExponentVector', 'GluingSystem', 'ShapeAssignment', 'edge_rows', 'evaluate_row', 'holonomy_derivative',
    'parameter_rows', 'NZRow', 'PeripheralCurves', 'gluing_system', 'ingest_nz', 'load_nz_document', 'nz_edge_rows',
    'nz_to_exponent', 'peripheral_rows', 'relabel_exponent', 'CnMatrix', 'SlopeFunctional', 'qmatching_direct',
    'qmatching_from_A', 'slope_functionals'
]
