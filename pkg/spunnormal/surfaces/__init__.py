from .complex import (AdmissiblePattern, Cell, PFComplex, center_point, enumerate_pf, haken_sum, is_admissible,
                      is_compatible, midpoint, minimal_representative, satisfies_matching, vertex_solutions)
from .coordinates import BoundaryCoordinate, BoundaryFunctionals, boundary_coordinate, boundary_functionals
from .export import (EXPORTER_TYPES, BaseExporter, CsvExporter, JsonExporter, ReferenceMatch, ReferenceTable,
                     TableExporter, VertexRow, load_reference, match_reference, read_vertex_table, write_vertex_table)
from .orbits import arc_midpoints, orbit_of, orbits

__all__ = [
    'AdmissiblePattern', 'Cell', 'PFComplex', 'center_point', 'enumerate_pf', 'haken_sum', 'is_admissible',
    'is_compatible', 'midpoint', 'minimal_representative', 'satisfies_matching', 'vertex_solutions',
    'BoundaryCoordinate', 'BoundaryFunctionals', 'boundary_coordinate', 'boundary_functionals', 'EXPORTER_TYPES',
    'BaseExporter', 'CsvExporter', 'JsonExporter', 'ReferenceMatch', 'ReferenceTable', 'TableExporter', 'VertexRow',
    'load_reference', 'match_reference', 'read_vertex_table', 'write_vertex_table', 'arc_midpoints', 'orbit_of',
    'orbits'
]
