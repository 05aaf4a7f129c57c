"""Frozen expected catalogs for small sizes.

Summands are written as their radical filtrations: a tuple of layers, each
layer the sorted tuple of vertices (with multiplicity) it contains.  These
are exactly the columns of the displayed composition series, top first.
"""

P1_2 = ((1,), (2,))
P2_2 = ((2,), (1,), (2,))

# tilting modules, n=2: vertices in word order, then arrows (src, dst, coordinate)
TILT_N2_VERTICES = {
    (1, 2): (P1_2, P2_2),
    (2, 1): (((2,),), P2_2),
}
TILT_N2_ARROWS = {((1, 2), (2, 1), 1)}

P1_3 = ((1,), (2,), (3,))
P2_3 = ((2,), (1, 3), (2,), (3,))
P3_3 = ((3,), (2,), (1, 3), (2,), (3,))
RAD_P1_3 = ((2,), (3,))
RAD_P2_3 = ((1, 3), (2,), (3,))
W_3 = ((3,), (2,), (3,))  # the middle summand of the two longest-word ideals
S3_3 = ((3,),)

TILT_N3_VERTICES = {
    (1, 2, 3): (P1_3, P2_3, P3_3),
    (2, 1, 3): (RAD_P1_3, P2_3, P3_3),
    (1, 3, 2): (P1_3, RAD_P2_3, P3_3),
    (3, 1, 2): (RAD_P1_3, W_3, P3_3),
    (2, 3, 1): (S3_3, RAD_P2_3, P3_3),
    (3, 2, 1): (S3_3, W_3, P3_3),
}
TILT_N3_ARROWS = {
    ((1, 2, 3), (2, 1, 3), 1),
    ((1, 2, 3), (1, 3, 2), 2),
    ((2, 1, 3), (3, 1, 2), 2),
    ((1, 3, 2), (2, 3, 1), 1),
    ((3, 1, 2), (3, 2, 1), 1),
    ((2, 3, 1), (3, 2, 1), 2),
}

# support pairs, n=2: nonzero slots in slot order, plus the support complement
STT_N2_VERTICES = {
    (1, 2, 3): ((P1_2, P2_2), ()),
    (2, 1, 3): ((((2,),), P2_2), ()),
    (1, 3, 2): ((P1_2, ((1,),)), ()),
    (3, 1, 2): ((((2,),),), (1,)),
    (2, 3, 1): ((((1,),),), (2,)),
    (3, 2, 1): ((), (1, 2)),
}
STT_N2_ARROWS = {
    ((1, 2, 3), (2, 1, 3), 1),
    ((1, 2, 3), (1, 3, 2), 2),
    ((2, 1, 3), (3, 1, 2), 2),
    ((1, 3, 2), (2, 3, 1), 1),
    ((3, 1, 2), (3, 2, 1), 1),
    ((2, 3, 1), (3, 2, 1), 2),
}

# the weak left order on degree 4, as displayed: arrows go from shorter to
# longer words, so the Hasse quiver of the order is the reverse
DISPLAY_ORDER_DEG4 = [
    (1, 2, 3, 4), (2, 1, 3, 4), (1, 3, 2, 4), (1, 2, 4, 3),
    (3, 1, 2, 4), (2, 3, 1, 4), (2, 1, 4, 3), (1, 4, 2, 3), (1, 3, 4, 2),
    (4, 1, 2, 3), (3, 2, 1, 4), (2, 4, 1, 3), (3, 1, 4, 2), (1, 4, 3, 2),
    (2, 3, 4, 1),
    (4, 2, 1, 3), (4, 1, 3, 2), (3, 4, 1, 2), (3, 2, 4, 1), (2, 4, 3, 1),
    (4, 3, 1, 2), (4, 2, 3, 1), (3, 4, 2, 1), (4, 3, 2, 1),
]
DISPLAY_ARROWS_DEG4 = [
    (1, 2), (1, 3), (1, 4), (2, 5), (2, 7), (3, 6), (3, 8), (4, 7), (4, 9),
    (5, 10), (5, 11), (6, 11), (6, 12), (7, 13), (8, 12), (8, 14), (9, 14),
    (9, 15), (10, 16), (10, 17), (11, 16), (13, 17), (13, 19), (12, 18),
    (15, 19), (14, 20), (15, 20), (16, 21), (17, 22), (18, 21), (18, 23),
    (19, 22), (20, 23), (21, 24), (22, 24), (23, 24),
]

# support pairs, n=3: vertex k carries the pair of the k-th displayed
# permutation of degree 4 above; nonzero slots in slot order
BAR_P1_3 = ((1,), (2,))
BAR_P2_3 = ((2,), (1,))
S1_3 = ((1,),)
S2_3 = ((2,),)

STT_N3_VERTICES_BY_DISPLAY_INDEX = {
    1: ((P1_3, P2_3, P3_3), ()),
    2: ((RAD_P1_3, P2_3, P3_3), ()),
    3: ((P1_3, RAD_P2_3, P3_3), ()),
    4: ((P1_3, P2_3, BAR_P2_3), ()),
    5: ((RAD_P1_3, W_3, P3_3), ()),
    6: ((S3_3, RAD_P2_3, P3_3), ()),
    7: ((RAD_P1_3, P2_3, BAR_P2_3), ()),
    8: ((P1_3, RAD_P2_3, S1_3), ()),
    9: ((P1_3, BAR_P1_3, BAR_P2_3), ()),
    10: ((RAD_P1_3, W_3), (1,)),
    11: ((S3_3, W_3, P3_3), ()),
    12: ((S3_3, RAD_P2_3, S1_3), ()),
    13: ((RAD_P1_3, S2_3, BAR_P2_3), ()),
    14: ((P1_3, BAR_P1_3, S1_3), ()),
    15: ((BAR_P1_3, BAR_P2_3), (3,)),
    16: ((S3_3, W_3), (1,)),
    17: ((RAD_P1_3, S2_3), (1,)),
    18: ((S1_3, S3_3), (2,)),
    19: ((S2_3, BAR_P2_3), (3,)),
    20: ((BAR_P1_3, S1_3), (3,)),
    21: ((S3_3,), (1, 2)),
    22: ((S2_3,), (1, 3)),
    23: ((S1_3,), (2, 3)),
    24: ((), (1, 2, 3)),
}

# the four-step mutation chain from the free module, n=4
P1_4 = ((1,), (2,), (3,), (4,))
P2_4 = ((2,), (1, 3), (2, 4), (3,), (4,))
P3_4 = ((3,), (2, 4), (1, 3), (2, 4), (3,), (4,))
P4_4 = ((4,), (3,), (2, 4), (1, 3), (2, 4), (3,), (4,))
BAR_P1_4 = ((1,), (2,), (3,))
BAR_P2_4 = ((2,), (1, 3), (2,))
BAR_P3_4 = ((3,), (2,), (1,))

MUTATION_CHAIN_N4 = [
    ((P1_4, P2_4, P3_4, P4_4), ()),
    ((P1_4, P2_4, P3_4, BAR_P3_4), ()),
    ((P1_4, P2_4, BAR_P2_4, BAR_P3_4), ()),
    ((P1_4, BAR_P1_4, BAR_P2_4, BAR_P3_4), ()),
    ((BAR_P1_4, BAR_P2_4, BAR_P3_4), (4,)),
]
