"""Reference values the checkers compare against.

Printed determinant prefixes, degree tables, leading-coefficient tables,
and generating-function numerators; the checkers recompute everything
from scratch and diff against these.  One entry is known to disagree with
the computed tables: REF_D41_VARIANT[1] is -4 while the order-1
determinant of that family is +4 (see the conj5 checker, which pins the
computed value and flags the reference entry).
"""

from __future__ import annotations

from fractions import Fraction

F = Fraction

# ---------------------------------------------------------------------------
# determinant sequence prefixes (Catalan families)

REF_D31 = [1, 3, 3, -1, -6, -6, 1, 9, 9, -1, -12, -12]
REF_D3_M2 = [1, 0, 0, -1, -3, -3, 1, 6, 6, -1, -9, -9]
REF_D41 = [1, 4, -4, -20, 9, 56, -16, -120, 25, 220, -36, -364]
REF_D4_M3 = [1, 0, 0, 0, 1, 4, -4, -20, 9, 56, -16, -120, 25]

# the variant listing of the same family; entry 1 is the known bad value
REF_D41_VARIANT = [1, -4, -4, -20, 9, 56, -16, -120, 25, 220, -36, -364, 49]
REF_D60 = [1, 1, -9, -4, -4, 45, 9, 9, -126, -16, -16, 270, 25]
REF_D8_M1 = [1, 0, -1, -16, 4, 0, -4, -80, 9, 0, -9, -224, 16, 0, -16]
REF_D10_M2 = [1, 0, 0, -1, 25, 4, 0, 0, -4, 125, 9, 0, 0, -9, 350, 16, 0, 0, -16]

# the two printed 2-row periodic displays for the odd families at shifts -k, 1-k
REF_D3_M1_ROW = [1, 0, -1, -1, 0, 1, 1, 0, -1]
REF_D30_ROW = [1, 1, 0, -1, -1, 0, 1, 1, 0]
REF_D5_M2_ROW = [1, 0, 0, -1, 0, 1, 0, 0, -1, 0]
REF_D5_M1_ROW = [1, 0, -1, 0, 0, 1, 0, -1, 0, 0]

# odd families at shift 0
REF_D30_PREFIX = [1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1]
REF_D50_PREFIX = [1, 1, -5, 0, 5, 1, 1, -10, 0, 10, 1, 1, -15, 0, 15, 1, 1, -20, 0, 20, 1, 1]
REF_D70_PREFIX = [1, 1, -14, -49, 0, 49, 329, -1, -1, -315, 196, 0, -196, -1687, 1, 1]

# the three-fold family sampled on the residue-1 progression, shifts 0, 1, 2
REF_D3M_AT_RESIDUE1 = {
    0: [1, -1, 1, -1, 1, -1, 1, -1, 1],
    1: [3, -6, 9, -12, 15, -18, 21, -24, 27],
    2: [9, -36, 81, -144, 225, -324, 441, -576, 729],
}

# ---------------------------------------------------------------------------
# degree tables for the residue-class polynomials at shift 0
# (row key = family index, values for j = 2, 3, ...; -1 marks the zero polynomial)

EVEN_DEGREE_TABLE = {
    6: [3],
    8: [6, 6],
    10: [9, 10, 9],
    12: [12, 15, 15, 12],
    14: [15, 20, 21, 20, 15],
    16: [18, 25, 28, 28, 25, 18],
    18: [21, 30, 35, 36, 35, 30, 21],
}

ODD_DEGREE_TABLE = {
    3: [-1],
    5: [1, -1, 1],
    7: [3, 2, -1, 2, 3],
    9: [5, 6, 3, -1, 3, 6, 5],
    11: [7, 10, 9, 4, -1, 4, 9, 10, 7],
}

# ---------------------------------------------------------------------------
# normalized leading coefficients, even families (j = 2, 3, ...)

A_TABLE = {
    6: [F(-1, 3)],
    8: [F(1, 45), F(-1, 45)],
    10: [F(-2, 945), F(1, 4725), F(2, 945)],
    12: [F(1, 4725), F(1, 4465125), F(-1, 4465125), F(1, 4725)],
    14: [F(-2, 93555), F(1, 2210236875), F(-1, 46414974375), F(-1, 2210236875), F(-2, 93555)],
}

# the same coefficients written as integer multiples of the reciprocal
# double-factorial product; note the (12, j=2) sign disagrees with A_TABLE
A_PHI_TABLE = {
    6: [-1],
    8: [1, -1],
    10: [-10, 1, 10],
    12: [-945, 1, -1, 945],
    14: [-992250, 21, -1, -21, -992250],
}

# normalized leading coefficients, odd families (j = 2, 3, ...)

B_TABLE = {
    3: [F(0)],
    5: [F(-1), F(0), F(1)],
    7: [F(1, 3), F(-1), F(0), F(1), F(1, 3)],
    9: [F(-2, 15), F(1, 45), F(1), F(0), F(-1), F(1, 45), F(2, 15)],
    11: [F(17, 315), F(1, 4725), F(-2, 945), F(1), F(0), F(-1), F(-2, 945), F(-1, 4725), F(17, 315)],
    13: [
        F(-62, 2835), F(1, 297675), F(-1, 4465125), F(-1, 4725), F(-1), F(0),
        F(1), F(-1, 4725), F(1, 4465125), F(1, 297675), F(62, 2835),
    ],
}

# ---------------------------------------------------------------------------
# generating-function numerators (coefficient lists, constant term first)

P2_NUMERATORS = {
    0: [1],
    1: [1],
    2: [1, 1],
    3: [1, 7, 7, 1],
    4: [1, 31, 187, 330, 187, 31, 1],
}

P4_NUMERATORS = {
    -1: [1],
    0: [1, 1],
    1: [1, 4, 0, -4, -1],
    2: [1, 14, 13, -111, -119, 119, 111, -13, -14, -1],
    3: [
        1, 48, 242, -1760, -7960, 10112, 47918, -9680, -84370,
        -9680, 47918, 10112, -7960, -1760, 242, 48, 1,
    ],
}

P6_NUMERATORS = {
    -2: [1],
    -1: [1, 0, -1],
    0: [1, 1, -9, 0, 0, 9, -1, -1],
    1: [1, 6, -69, -1, 63, 561, -8, -609, -609, -8, 561, 63, -1, -69, 6, 1],
}

# P numerators for the shift 3-k at family indices 8 and 10
P8_SHIFT_M1 = [1, 0, -1, -16, 0, 0, 0, -16, -1, 0, 1]
P10_SHIFT_M2 = [1, 0, 0, -1, 25, 0, 0, 0, 0, 25, -1, 0, 0, 1]

# odd family index 3: factored numerators as (coefficients, power) products
Q3_FACTORED = {
    -1: (((1, 0, -1), 1),),
    0: (((1, 1), 2), ((1, -1, 1), 1)),
    1: (((1, 1), 5), ((1, -1, 1), 2)),
    2: (((1, -1), 1), ((1, 1), 8), ((1, -1, 1), 3), ((1, 5, 1), 1)),
}
