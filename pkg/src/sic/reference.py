"""Reference constants compiled from published tabulations.

Nothing here is computed by this library: these are best-known parameter
records and rate values for comparison and documentation.  The (z,u) code
constructions behind KNOWN_ZU_CODE_SIZES in particular are not implemented
here.
"""

# Best known (size t, length N) pairs of superimposed (z,u)-codes.
KNOWN_ZU_CODE_SIZES: dict[tuple[int, int], list[tuple[int, int]]] = {
    (2, 2): [(8, 14), (9, 18), (10, 20), (12, 22), (16, 26), (18, 30), (22, 34),
             (24, 37), (32, 43), (40, 50), (48, 59), (56, 65), (64, 68), (80, 76),
             (112, 96), (128, 100), (144, 109), (512, 126)],
    (3, 2): [(7, 21), (8, 28), (10, 30), (16, 42), (21, 56), (24, 76), (49, 147)],
    (4, 2): [(11, 55), (13, 65), (17, 68), (22, 77), (25, 100), (47, 205), (64, 252)],
    (5, 2): [(11, 55), (16, 120), (26, 130), (48, 246), (62, 330), (78, 434), (121, 605)],
    (6, 2): [(20, 190), (25, 210), (49, 294), (63, 385), (79, 497), (117, 792), (169, 1014)],
    (7, 2): [(26, 260), (50, 350), (64, 448), (80, 568), (118, 882), (164, 1308), (256, 1800)],
    (8, 2): [(16, 120), (32, 496), (65, 520), (81, 648), (119, 981), (165, 1430), (256, 2040)],
    (9, 2): [(38, 703), (82, 738), (120, 1090), (166, 1562), (250, 2531), (282, 2933),
             (361, 3249)],
    (3, 3): [(7, 35), (8, 54), (11, 66), (16, 112), (22, 176), (23, 399), (121, 660)],
    (4, 3): [(12, 220), (13, 253), (23, 253), (24, 532), (169, 3289)],
    (5, 3): [(16, 560), (19, 612), (25, 700), (31, 3951), (50, 8830), (256, 8960)],
    (6, 3): [(17, 680), (20, 816), (26, 910), (32, 4683), (51, 10008), (361, 15504)],
    (7, 3): [(19, 969), (21, 1071), (27, 1170), (52, 11313), (529, 25740)],
    (8, 3): [(20, 1140), (21, 1330), (22, 1386), (53, 12757), (729, 73125)],
    (9, 3): [(22, 1540), (23, 1771), (45, 14190), (54, 14352), (729, 81900)],
}

# Best known lower bounds on the rate of designs that must distinguish all
# defective sets of size exactly s under the unit threshold, s = 2..8.
# The producing non-asymptotic formulas are out of scope here.
EXACT_SIZE_DESIGN_LOWER: dict[int, float] = {
    2: 0.302, 3: 0.142, 4: 0.082, 5: 0.053, 6: 0.037, 7: 0.027, 8: 0.021,
}

# Nontrivial upper bound on the same rate at s = 2 (external result).
EXACT_SIZE_DESIGN_UPPER_S2 = 0.4998
