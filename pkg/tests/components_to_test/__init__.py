from . import figure_eight, one_tetrahedron, whitehead_link
