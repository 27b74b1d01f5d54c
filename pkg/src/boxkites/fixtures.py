"""Golden reference tables for the sedenion and pathion box-kite system.

These are the tabulations this package is expected to reproduce, held as
literal data so that transcription errors stay separable from computation
errors.  The verification suite (boxkites.verify) checks every fixture at
least once per full run.
"""

from __future__ import annotations

# The seven octonion triples in canonical order: positively oriented as
# written, sorted by first then second entry.
O_TRIPS = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
)

# The twenty-eight sedenion triples, row-major as conventionally tabled
# (each row: one low index, partners ascending), positively oriented as
# written.  First column is the 8-ball of the matching strut constant.
S_TRIPS = (
    (1, 8, 9), (1, 11, 10), (1, 13, 12), (1, 14, 15),
    (2, 8, 10), (2, 9, 11), (2, 14, 12), (2, 15, 13),
    (3, 8, 11), (3, 10, 9), (3, 15, 12), (3, 13, 14),
    (4, 8, 12), (4, 9, 13), (4, 10, 14), (4, 11, 15),
    (5, 8, 13), (5, 12, 9), (5, 10, 15), (5, 14, 11),
    (6, 8, 14), (6, 15, 9), (6, 12, 10), (6, 11, 13),
    (7, 8, 15), (7, 9, 14), (7, 13, 10), (7, 12, 11),
)

# Strut table: GoTo tuple (sails ABC, ADE, FDB, FCE as 1-based positions in
# O_TRIPS) and the six vertex assessors per strut constant.
STRUT_TABLE = {
    1: {
        "goto": (7, 6, 4, 5),
        "vertices": {"A": (3, 10), "B": (6, 15), "C": (5, 12),
                     "D": (4, 13), "E": (7, 14), "F": (2, 11)},
    },
    2: {
        "goto": (3, 2, 6, 7),
        "vertices": {"A": (1, 11), "B": (7, 13), "C": (6, 12),
                     "D": (4, 14), "E": (5, 15), "F": (3, 9)},
    },
    3: {
        "goto": (5, 4, 2, 3),
        "vertices": {"A": (2, 9), "B": (5, 14), "C": (7, 12),
                     "D": (4, 15), "E": (6, 13), "F": (1, 10)},
    },
    4: {
        "goto": (1, 3, 5, 7),
        "vertices": {"A": (1, 13), "B": (2, 14), "C": (3, 15),
                     "D": (7, 11), "E": (6, 10), "F": (5, 9)},
    },
    5: {
        "goto": (4, 1, 6, 3),
        "vertices": {"A": (2, 15), "B": (4, 9), "C": (6, 11),
                     "D": (3, 14), "E": (1, 12), "F": (7, 10)},
    },
    6: {
        "goto": (6, 1, 2, 5),
        "vertices": {"A": (3, 13), "B": (4, 10), "C": (7, 9),
                     "D": (1, 15), "E": (2, 12), "F": (5, 11)},
    },
    7: {
        "goto": (2, 1, 4, 7),
        "vertices": {"A": (1, 14), "B": (4, 11), "C": (5, 10),
                     "D": (2, 13), "E": (3, 12), "F": (6, 9)},
    },
}

# Automorpheme axis sets quoted for box-kite I's four sails.
AUTOMORPHEMES = {
    (3, 6, 5): frozenset({3, 6, 5, 9, 10, 12, 15}),
    (3, 4, 7): frozenset({3, 4, 7, 9, 10, 13, 14}),
    (2, 4, 6): frozenset({2, 4, 6, 9, 11, 13, 15}),
    (2, 5, 7): frozenset({2, 5, 7, 9, 11, 12, 14}),
}

# The six-step zero progression around box-kite I's ABC sail, starting on
# the slash diagonal at A.  Entries are ((o, hi, orientation), (o, hi,
# orientation)) per product.
SIX_CYCLE_ABC_BK1 = (
    ((3, 10, 1), (6, 15, -1)),
    ((6, 15, -1), (5, 12, 1)),
    ((5, 12, 1), (3, 10, -1)),
    ((3, 10, -1), (6, 15, 1)),
    ((6, 15, 1), (5, 12, -1)),
    ((5, 12, -1), (3, 10, 1)),
)

# Generic mock-octonion table over (R, 8, X, S, F, a, f, A), normalized to
# explicit signs.
MOCK_OCTONION_AF = (
    ("+R", "+8", "+X", "+S", "+F", "+a", "+f", "+A"),
    ("+8", "-R", "+S", "-X", "+a", "-F", "-A", "+f"),
    ("+X", "-S", "-R", "+8", "+f", "+A", "-F", "-a"),
    ("+S", "+X", "-8", "-R", "+A", "-f", "+a", "-F"),
    ("+F", "-a", "-f", "-A", "-R", "+8", "+X", "+S"),
    ("+a", "+F", "-A", "+f", "-8", "-R", "-S", "+X"),
    ("+f", "+A", "+F", "-a", "-X", "+S", "-R", "-8"),
    ("+A", "-f", "+a", "+F", "-S", "-X", "+8", "-R"),
)

# The 16 x 16 switching yard over (R, 8, X, S, F, a, f, A, E, b, e, B, D, c,
# d, C), normalized to explicit signs; "0" marks an annihilating pairing.
SWITCHING_YARD = (
    ("+R", "+8", "+X", "+S", "+F", "+a", "+f", "+A", "+E", "+b", "+e", "+B", "+D", "+c", "+d", "+C"),
    ("+8", "-R", "+S", "-X", "+a", "-F", "-A", "+f", "+b", "-E", "-B", "+e", "+c", "-D", "-C", "+d"),
    ("+X", "-S", "-R", "+8", "+f", "+A", "-F", "-a", "+e", "+B", "-E", "-b", "+d", "+C", "-D", "-c"),
    ("+S", "+X", "-8", "-R", "+A", "-f", "+a", "-F", "+B", "-e", "+b", "-E", "+C", "-d", "+c", "-D"),
    ("+F", "-a", "-f", "-A", "-R", "+8", "+X", "+S", "-c", "-D", "0", "0", "+b", "+E", "0", "0"),
    ("+a", "+F", "-A", "+f", "-8", "-R", "-S", "+X", "-D", "+c", "0", "0", "+E", "-b", "0", "0"),
    ("+f", "+A", "+F", "-a", "-X", "+S", "-R", "-8", "0", "0", "-C", "-d", "0", "0", "+B", "+e"),
    ("+A", "-f", "+a", "+F", "-S", "-X", "+8", "-R", "0", "0", "-d", "+C", "0", "0", "+e", "-B"),
    ("+E", "-b", "-e", "-B", "+c", "+D", "0", "0", "-R", "+8", "+X", "+S", "-a", "-F", "0", "0"),
    ("+b", "+E", "-B", "+e", "+D", "-c", "0", "0", "-8", "-R", "-S", "+X", "-F", "+a", "0", "0"),
    ("+e", "+B", "+E", "-b", "0", "0", "+C", "+d", "-X", "+S", "-R", "-8", "0", "0", "-A", "-f"),
    ("+B", "-e", "+b", "+E", "0", "0", "+d", "-C", "-S", "-X", "+8", "-R", "0", "0", "-f", "+A"),
    ("+D", "-c", "-d", "-C", "-b", "-E", "0", "0", "+a", "+F", "0", "0", "-R", "+8", "+X", "+S"),
    ("+c", "+D", "-C", "+d", "-E", "+b", "0", "0", "+F", "-a", "0", "0", "-8", "-R", "-S", "+X"),
    ("+d", "+C", "+D", "-c", "0", "0", "-B", "-e", "0", "0", "+A", "+f", "-X", "+S", "-R", "-8"),
    ("+C", "-d", "+c", "+D", "0", "0", "-e", "+B", "0", "0", "+f", "-A", "-S", "-X", "+8", "-R"),
)

# The two coherent diagonal triples of each sail, in the quoted block order.
QUIZZICAL_TRIPLES = {
    "ABC": (("A", "B", "C"), ("a", "b", "c")),
    "ADE": (("A", "d", "e"), ("a", "D", "E")),
    "FCE": (("F", "c", "E"), ("f", "C", "e")),
    "FDB": (("F", "D", "b"), ("f", "d", "B")),
}

# Trigram bit codes per sail (bits are slot-order edge signs, "-" as 0).
TRIGRAM_UNSWITCHED = {"ABC": "000", "FDB": "011", "ADE": "101", "FCE": "110"}
TRIGRAM_SWITCHED = {"ABC": "111", "FDB": "100", "ADE": "010", "FCE": "001"}

# Tray-rack squares with their alternating edge-sign patterns.  The middle
# circuit is quoted as A-C+F-E+, but A, C, F, E is not one of the
# octahedron's squares (its diagonal C-E is an edge, not a strut); the
# square consistent with both the geometry and the printed sign pattern is
# A-B+F-E+, used here.
TRAY_RACKS = (
    (("B", "C", "E", "D"), (-1, 1, -1, 1)),
    (("A", "B", "F", "E"), (-1, 1, -1, 1)),
    (("A", "D", "F", "C"), (1, -1, 1, -1)),
)

# Synchronization table: per strut constant and sail (slot order), the four
# index triples the sail carries.  Orientations are recomputed, not
# transcribed.
SYNC_TABLE = {
    1: {
        "ABC": ((3, 6, 5), (3, 15, 12), (10, 6, 12), (10, 15, 5)),
        "ADE": ((3, 4, 7), (3, 13, 14), (10, 4, 14), (10, 13, 7)),
        "FCE": ((2, 5, 7), (2, 12, 14), (11, 5, 14), (11, 12, 7)),
        "FDB": ((2, 4, 6), (2, 13, 15), (11, 4, 15), (11, 13, 6)),
    },
    2: {
        "ABC": ((1, 7, 6), (1, 13, 12), (11, 7, 12), (11, 13, 6)),
        "ADE": ((1, 4, 5), (1, 14, 15), (11, 4, 15), (11, 14, 5)),
        "FCE": ((3, 6, 5), (3, 12, 15), (9, 6, 15), (9, 12, 5)),
        "FDB": ((3, 4, 7), (3, 14, 13), (9, 4, 13), (9, 14, 7)),
    },
    3: {
        "ABC": ((2, 5, 7), (2, 14, 12), (9, 5, 12), (9, 14, 7)),
        "ADE": ((2, 4, 6), (2, 15, 13), (9, 4, 13), (9, 15, 6)),
        "FCE": ((1, 7, 6), (1, 12, 13), (10, 7, 13), (10, 12, 6)),
        "FDB": ((1, 4, 5), (1, 15, 14), (10, 4, 14), (10, 15, 5)),
    },
    4: {
        "ABC": ((1, 2, 3), (1, 14, 15), (13, 2, 15), (13, 14, 3)),
        "ADE": ((1, 7, 6), (1, 11, 10), (13, 7, 10), (13, 11, 6)),
        "FCE": ((5, 3, 6), (5, 15, 10), (9, 3, 10), (9, 15, 6)),
        "FDB": ((5, 7, 2), (5, 11, 14), (9, 7, 14), (9, 11, 2)),
    },
    5: {
        "ABC": ((2, 4, 6), (2, 9, 11), (15, 4, 11), (15, 9, 6)),
        "ADE": ((2, 3, 1), (2, 14, 12), (15, 3, 12), (15, 14, 1)),
        "FCE": ((7, 6, 1), (7, 11, 12), (10, 6, 12), (10, 11, 1)),
        "FDB": ((7, 3, 4), (7, 14, 9), (10, 3, 9), (10, 14, 4)),
    },
    6: {
        "ABC": ((3, 4, 7), (3, 10, 9), (13, 4, 9), (13, 10, 7)),
        "ADE": ((3, 1, 2), (3, 15, 12), (13, 1, 12), (13, 15, 2)),
        "FCE": ((5, 7, 2), (5, 9, 12), (11, 7, 12), (11, 9, 2)),
        "FDB": ((5, 1, 4), (5, 15, 10), (11, 1, 10), (11, 15, 4)),
    },
    7: {
        "ABC": ((1, 4, 5), (1, 11, 10), (14, 4, 10), (14, 11, 5)),
        "ADE": ((1, 2, 3), (1, 13, 12), (14, 2, 12), (14, 13, 3)),
        "FCE": ((6, 5, 3), (6, 10, 12), (9, 5, 12), (9, 10, 3)),
        "FDB": ((6, 2, 4), (6, 13, 11), (9, 2, 11), (9, 13, 4)),
    },
}

# The fourteen pathion assessors for (n=5, s=1), in the quoted
# nested-parentheses order (outermost pairs are struts).
PATHION_S1_ASSESSORS = (
    (2, 19), (4, 21), (6, 23), (8, 25), (10, 27), (12, 29), (14, 31),
    (15, 30), (13, 28), (11, 26), (9, 24), (7, 22), (5, 20), (3, 18),
)

# The seven pathion box-kites for s=1, as rows of low indices per letter
# A..F (high index is low xor 17).  First row is the lifted base-line kite.
PATHION_S1_ROWS = (
    (3, 6, 5, 4, 7, 2),
    (3, 10, 9, 8, 11, 2),
    (3, 13, 14, 15, 12, 2),
    (5, 12, 9, 8, 13, 4),
    (5, 14, 11, 10, 15, 4),
    (6, 11, 13, 12, 10, 7),
    (6, 15, 9, 8, 14, 7),
)

# The three pathion box-kites for s=9, full assessor pairs per letter A..F.
PATHION_S9_KITES = (
    {"A": (2, 27), "B": (8, 17), "C": (10, 19),
     "D": (3, 26), "E": (1, 24), "F": (11, 18)},
    {"A": (4, 29), "B": (8, 17), "C": (12, 21),
     "D": (5, 28), "E": (1, 24), "F": (13, 20)},
    {"A": (7, 30), "B": (8, 17), "C": (15, 22),
     "D": (6, 31), "E": (1, 24), "F": (14, 23)},
)

# Stated pathion census: 7 kites per strut constant through 8, 3 above, a
# quoted grand total of 84 against the componentwise arithmetic of 77.
PATHION_CENSUS_CLAIMS = {
    "per_s_low": 7,
    "per_s_high": 3,
    "stated_total": 84,
    "arithmetic_total": 77,
}

# Every fixture above, for coverage accounting in the verification suite.
REGISTRY = {
    "O_TRIPS": "seven octonion triples, canonical order",
    "S_TRIPS": "twenty-eight sedenion triples",
    "STRUT_TABLE": "strut table: GoTo tuples and vertices per strut constant",
    "AUTOMORPHEMES": "quoted automorpheme axis sets for box-kite I",
    "SIX_CYCLE_ABC_BK1": "zero progression around box-kite I's ABC sail",
    "MOCK_OCTONION_AF": "generic mock-octonion table for the A-F strut",
    "SWITCHING_YARD": "16 x 16 switching yard table",
    "QUIZZICAL_TRIPLES": "coherent diagonal triples per sail",
    "TRIGRAM_UNSWITCHED": "trigram codes, zero-division state",
    "TRIGRAM_SWITCHED": "trigram codes, switched state",
    "TRAY_RACKS": "tray-rack squares and sign patterns",
    "SYNC_TABLE": "synchronization table of sail triples",
    "PATHION_S1_ASSESSORS": "pathion assessor list for s=1",
    "PATHION_S1_ROWS": "seven pathion box-kites for s=1",
    "PATHION_S9_KITES": "three pathion box-kites for s=9",
    "PATHION_CENSUS_CLAIMS": "pathion census counts and totals",
}
