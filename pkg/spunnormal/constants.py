#!/usr/bin/env python
# -*- encoding: utf-8 -*-

# edge pairs of a tetrahedron, in the canonical order used for tracing
EDGE_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

# label index of each edge pair: 0 ~ z ~ q, 1 ~ z' ~ q', 2 ~ z'' ~ q''
QUAD_OF_EDGE = {
    (0, 1): 0,
    (2, 3): 0,
    (0, 3): 1,
    (1, 2): 1,
    (0, 2): 2,
    (1, 3): 2,
}

# the two edge pairs carrying each label
EDGES_OF_QUAD = {
    0: ((0, 1), (2, 3)),
    1: ((0, 3), (1, 2)),
    2: ((0, 2), (1, 3)),
}

SHAPE_SYMBOLS = ('z', "z'", "z''")
QUAD_SYMBOLS = ('q', "q'", "q''")

# one block of C_n
C1 = ((0, 1, -1), (-1, 0, 1), (1, -1, 0))

NUM_THREADS_ENV = 'SPUNNORMAL_NUM_THREADS'

# command line exit codes
EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_COMPUTATION = 3
EXIT_IO = 4

# shapes closer than this to 0 or 1 are degenerate
SHAPE_TOLERANCE = 1e-12
EVALUATION_TOLERANCE = 1e-9
