from spunnormal.fixtures import WHL, fixture_path
from spunnormal.tri import load_triangulation

from .registry import triangulation_component_funcs


@triangulation_component_funcs.register(name='whitehead_link')
def get_triangulation_components():

    def triangulation_builder():
        return load_triangulation(fixture_path(WHL))

    expected = dict(n=4, edge_degrees=(4, 8, 8, 4), num_cusps=2, symmetry_order=8)
    return triangulation_builder, expected
