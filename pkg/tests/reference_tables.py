"""Tables for G_n at small n, transcribed from published data.

Rows are keyed by n.  Strata rows are zero-padded to five levels and
component rows to six.
"""

# n -> (a_1, ..., a_5)
STRATA = {
    1: (1, 0, 0, 0, 0),
    2: (2, 0, 0, 0, 0),
    3: (2, 1, 0, 0, 0),
    4: (3, 2, 0, 0, 0),
    5: (2, 5, 0, 0, 0),
    6: (4, 6, 1, 0, 0),
    7: (2, 11, 2, 0, 0),
    8: (4, 13, 5, 0, 0),
    9: (3, 17, 10, 0, 0),
    10: (4, 22, 15, 1, 0),
    11: (2, 27, 25, 2, 0),
    12: (6, 29, 37, 5, 0),
    13: (2, 37, 52, 10, 0),
    14: (4, 44, 67, 20, 0),
    15: (4, 44, 97, 30, 1),
    16: (5, 55, 117, 52, 2),
    17: (2, 59, 154, 77, 5),
    18: (6, 68, 184, 117, 10),
    19: (2, 71, 235, 162, 20),
    20: (6, 81, 277, 227, 36),
}

# n -> (j_0, j_1, j_2, |E|)
JUMPS = {
    1: (0, 0, 0, 0),
    2: (1, 0, 0, 1),
    3: (0, 2, 0, 2),
    4: (1, 4, 0, 5),
    5: (7, 2, 0, 9),
    6: (7, 8, 2, 17),
    7: (14, 14, 0, 28),
    8: (19, 26, 2, 47),
    9: (37, 34, 2, 73),
    10: (54, 52, 8, 114),
    11: (84, 82, 4, 170),
    12: (119, 118, 16, 253),
    13: (179, 174, 12, 365),
    14: (245, 252, 28, 525),
    15: (370, 336, 32, 738),
    16: (491, 486, 56, 1033),
    17: (698, 666, 58, 1422),
    18: (940, 900, 108, 1948),
    19: (1292, 1226, 116, 2634),
    20: (1709, 1650, 186, 3545),
}

# n -> (comp_1, ..., comp_6)
COMPONENTS = {
    1: (1, 0, 0, 0, 0, 0),
    2: (1, 0, 0, 0, 0, 0),
    3: (2, 1, 0, 0, 0, 0),
    4: (3, 1, 0, 0, 0, 0),
    5: (2, 1, 0, 0, 0, 0),
    6: (4, 1, 1, 0, 0, 0),
    7: (2, 1, 1, 0, 0, 0),
    8: (4, 2, 1, 0, 0, 0),
    9: (3, 3, 1, 0, 0, 0),
    10: (4, 4, 1, 1, 0, 0),
    11: (2, 7, 1, 1, 0, 0),
    12: (6, 10, 1, 1, 0, 0),
    13: (2, 11, 1, 1, 0, 0),
    14: (4, 16, 1, 1, 0, 0),
    15: (4, 18, 1, 1, 1, 0),
    16: (5, 24, 1, 1, 1, 0),
    17: (2, 24, 1, 1, 1, 0),
    18: (6, 33, 2, 1, 1, 0),
    19: (2, 33, 3, 1, 1, 0),
    20: (6, 42, 3, 1, 1, 0),
    21: (4, 42, 5, 1, 1, 1),
    22: (4, 53, 9, 1, 1, 1),
    23: (2, 50, 11, 1, 1, 1),
    24: (8, 69, 16, 1, 1, 1),
    25: (3, 57, 23, 1, 1, 1),
}

LEVEL_MATRIX_20 = (
    (0, 4, 6, 0, 0),
    (4, 41, 214, 76, 0),
    (6, 214, 606, 980, 104),
    (0, 76, 980, 942, 452),
    (0, 0, 104, 452, 120),
)

# r -> (|V|, internal edges, components, min degree, max degree) at n = 20
SUMMARY_20 = {
    1: (6, 0, 6, 1, 2),
    2: (81, 41, 42, 3, 6),
    3: (277, 606, 3, 7, 11),
    4: (227, 942, 1, 13, 17),
    5: (36, 120, 1, 21, 23),
}

SKIP_TWO_FIRST = {(1, 3): 6, (2, 4): 10, (3, 5): 15, (4, 6): 21}
JUMP_TWO_FIRST = 6
STRATUM_3_FIRST_DISCONNECTED = 18
