"""The concrete seeds: the two 6-vertex initial seeds for the weight-graded
subalgebras, the two 8-vertex double-Bruhat-cell seeds they are carved from,
and the two comparison seeds, together with their function assignments,
degree tables, closed-form belt degrees and milestone values.

A handful of printed values are corrected here, each with a FLAG note; the
verification suite reports every such correction as `flagged` rather than
silently adopting either reading.
"""

from __future__ import annotations

from typing import Optional

from .mutation import DegreeVector, ExchangeMatrix, Seed

# ---------------------------------------------------------------------------
# FLAG notes (each surfaces as a `flagged` check in the verification report)
#
# B1_B33: the printed table for the first 6-vertex seed has entry (3,3) = 1;
#   a loop-free quiver and a skew-symmetrizable principal part force 0, and
#   the frozen restriction of the mutated 8-vertex seed confirms 0.
# CHAIN_S1S2W2: the printed chain for Delta_s1s2_w2 applies (f2+)^3, but the
#   target weight differs by 3*alpha1, so the weight-consistent chain applies
#   (f1+)^3 (the weight-diagram route agrees).
# FIG1_X0: the printed diagram arrow out of X0 is labelled f2; the weights
#   force f1, and f2+ X0 = 0.
# CM11_SIGN: the closed form for the (-1,1) arrow count states equality of
#   consecutive even/odd indices; iterating the recurrence gives equality up
#   to sign (even index = minus the following odd one).
# D1_EVEN_BRANCH: the closed form for d1 at odd belt index 2r+1 with r >= 0
#   even states first component r/2+1; the recurrence and the bridge give
#   r/2+2 (the r < 0 milestones hold as printed).
# G2_BRANCH_SWAP: the closed form for g2 at odd belt index 2r+1 swaps the
#   (p,q) parts of its two r >= 0 branches relative to the recurrence; the
#   n parts are as printed.
# DEG_INIT_SWAP: the stated initial values for the d-recurrence assign
#   (2,2,1) to vertex 2 and (3,3,2) to vertex 3; the belt base has (3,3,2) at
#   vertex 2 and (2,2,1) at vertex 3 (forced by homogeneity), matching the
#   closed forms.
# ---------------------------------------------------------------------------


UNDER_NAMES_1 = ("x1", "x2", "x3", "xm1", "xm2", "xm3")
UNDER_NAMES_2 = ("y1", "y2", "y3", "ym1", "ym2", "ym3")
BFZ_NAMES = ("x1", "x2", "x3", "x4", "xm1", "xm2", "x5", "x6")

UNDER_LABELS = (1, 2, 3, -1, -2, -3)
BFZ_LABELS = (1, 2, 3, 4, -1, -2, 5, 6)


def _em(labels, n, rows) -> ExchangeMatrix:
    return ExchangeMatrix(tuple(labels), n, tuple(tuple(r) for r in rows))


# 6-vertex seed matrices (entry (3,3) of the first corrected per B1_B33)
B1_UNDER = _em(UNDER_LABELS, 3, [
    (0, -3, 1),
    (1, 0, -1),
    (-1, 3, 0),
    (1, 0, 0),
    (-1, 1, 0),
    (0, -3, 2),
])
B1_UNDER_PRINTED_DIAGONAL = 1  # the printed (3,3) entry

B2_UNDER = _em(UNDER_LABELS, 3, [
    (0, -1, 1),
    (3, 0, -3),
    (-1, 1, 0),
    (1, 0, 0),
    (-3, 1, 0),
    (0, -1, 2),
])

# 8-vertex double-Bruhat seeds, from their valued quivers
B1_BFZ = _em(BFZ_LABELS, 4, [
    (0, -3, 1, 0),
    (1, 0, -1, 1),
    (-1, 3, 0, -3),
    (0, -1, 1, 0),
    (1, 0, 0, 0),
    (-1, 1, 0, 0),
    (0, 0, -1, 3),
    (0, 0, 0, -1),
])

B2_BFZ = _em(BFZ_LABELS, 4, [
    (0, -1, 1, 0),
    (3, 0, -3, 1),
    (-1, 1, 0, -1),
    (0, -1, 3, 0),
    (-3, 1, 0, 0),
    (1, 0, 0, 0),
    (0, 0, -1, 1),
    (0, 0, 0, -1),
])

# comparison seeds
B1_GLS = _em(UNDER_LABELS, 3, [
    (0, -3, 1),
    (1, 0, -1),
    (-1, 3, 0),
    (1, 0, 0),
    (-1, 1, 0),
    (0, 0, 1),
])

B2_GLS = _em(UNDER_LABELS, 3, [
    (0, -1, 1),
    (3, 0, -3),
    (-1, 1, 0),
    (1, 0, 0),
    (-3, 1, 0),
    (0, 0, 1),
])

# vertex classes carrying the triple valuation (matrix rows with the +-3
# entries on cross-class pairs); case 1 has it on the odd-labelled side,
# case 2 on the even-labelled side.
TRIPLE_CLASS = {
    ("under", 1): frozenset({1, 3, -1, -3}),
    ("under", 2): frozenset({2, -2}),
    ("bfz", 1): frozenset({1, 3, -1, 5}),
    ("bfz", 2): frozenset({2, 4, -1, 6}),
    ("gls", 1): frozenset({1, 3, -1, -3}),
    ("gls", 2): frozenset({2, -2}),
}


# function assignments: seed variable -> registry name
ASSIGN_UNDER_1 = {
    "x1": "Delta_s2s1s2s1_w1",
    "x2": "X2",
    "x3": "Delta_s2s1_w1",
    "xm1": "Delta_w0_w1",
    "xm2": "X-2",
    "xm3": "Delta_w1",
}

ASSIGN_UNDER_2 = {
    "y1": "Delta_s1s2s1s2_w2",
    "y2": "F(1,1)",
    "y3": "Delta_s1s2_w2",
    "ym1": "Delta_w0_w2",
    "ym2": "F1(0,0)",
    "ym3": "Delta_w2",
}

ASSIGN_BFZ_1 = {
    "x1": "Delta_s2s1s2s1_w1",
    "x2": "Delta_s2s1s2_w2",
    "x3": "Delta_s2s1_w1",
    "x4": "Delta_s2_w2",
    "xm1": "Delta_w0_w1",
    "xm2": "Delta_w0_w2",
    "x5": "Delta_w1",
    "x6": "Delta_w2",
}

ASSIGN_BFZ_2 = {
    "x1": "Delta_s1s2s1s2_w2",
    "x2": "Delta_s1s2s1_w1",
    "x3": "Delta_s1s2_w2",
    "x4": "Delta_s1_w1",
    "xm1": "Delta_w0_w1",
    "xm2": "Delta_w0_w2",
    "x5": "Delta_w2",
    "x6": "Delta_w1",
}

ASSIGN_GLS_1 = {
    "x1": "X1_GLS",
    "x2": "X2_GLS",
    "x3": "Delta_s1_w1",
    "xm1": "Delta_w0_w1",
    "xm2": "X-2",
    "xm3": "Delta_w1",
}

ASSIGN_GLS_2 = {
    "y1": "Y1_GLS",
    "y2": "F(2,1)",
    "y3": "Delta_s2_w2",
    "ym1": "Delta_w0_w2",
    "ym2": "F1(0,0)",
    "ym3": "Delta_w2",
}


def _deg(n, p, q) -> DegreeVector:
    return DegreeVector(n, p, q)


# stated tri-degrees of the initial extended clusters
DEGREES_UNDER_1 = {
    1: _deg(1, -1, -1), 2: _deg(3, 3, 1), 3: _deg(1, 1, 0),
    -1: _deg(1, -2, -1), -2: _deg(3, 0, 0), -3: _deg(1, 2, 1),
}

DEGREES_UNDER_2 = {
    1: _deg(1, -3, -1), 2: _deg(1, 1, 1), 3: _deg(1, 0, 1),
    -1: _deg(1, -3, -2), -2: _deg(1, 0, 0), -3: _deg(1, 3, 2),
}

# stated initial values of the degree recurrence (vertices 2 and 3 swapped
# relative to the belt base; see DEG_INIT_SWAP)
STATED_RECURRENCE_INIT_1 = {1: _deg(1, -1, -1), 2: _deg(2, 2, 1), 3: _deg(3, 3, 2)}
STATED_RECURRENCE_INIT_2 = {1: _deg(1, -3, -1), 2: _deg(1, 2, 1), 3: _deg(2, 3, 2)}


def seed_under(case: int) -> Seed:
    return Seed.initial(B1_UNDER if case == 1 else B2_UNDER,
                        UNDER_NAMES_1 if case == 1 else UNDER_NAMES_2)


def seed_bfz(case: int) -> Seed:
    return Seed.initial(B1_BFZ if case == 1 else B2_BFZ, BFZ_NAMES)


def seed_gls(case: int) -> Seed:
    return Seed.initial(B1_GLS if case == 1 else B2_GLS,
                        UNDER_NAMES_1 if case == 1 else UNDER_NAMES_2)


def belt_base(case: int) -> Seed:
    """mu_2 mu_3 of the 6-vertex initial seed: the bipartite belt base."""
    return seed_under(case).apply([3, 2])


def assignment(kind: str, case: int) -> dict:
    table = {
        ("under", 1): ASSIGN_UNDER_1, ("under", 2): ASSIGN_UNDER_2,
        ("bfz", 1): ASSIGN_BFZ_1, ("bfz", 2): ASSIGN_BFZ_2,
        ("gls", 1): ASSIGN_GLS_1, ("gls", 2): ASSIGN_GLS_2,
    }
    return dict(table[(kind, case)])


def initial_degrees(case: int) -> dict:
    return dict(DEGREES_UNDER_1 if case == 1 else DEGREES_UNDER_2)


# vertex correspondence used when freezing vertex 2 of the mutated 8-vertex
# seed: (kept BFZ vertex -> 6-vertex label); the two vertices linked only to
# the newly frozen one are dropped.
FREEZE_MAP = {
    1: {1: 1, 3: 3, 4: 2, -1: -1, 2: -2, 5: -3},
    2: {1: 1, 3: 3, 4: 2, -2: -1, 2: -2, 5: -3},
}
FREEZE_DROP = {1: (-2, 6), 2: (-1, 6)}


# ---------------------------------------------------------------------------
# closed-form belt degrees
#
# d_i(r) below is the tri-degree of the vertex-i variable of the belt seed at
# index r (case 1); g_i(r) is the case-2 analogue.  Both satisfy
# d_1(2r) = d_1(2r-1), d_2(2r) = d_2(2r-1), d_3(2r+1) = d_3(2r).
# Returns (degree, corrected) where `corrected` marks a branch whose printed
# form disagrees with the recurrence (see D1_EVEN_BRANCH, G2_BRANCH_SWAP).


def closed_degree(case: int, vertex: int, r: int):
    if case == 1:
        return _closed_d(vertex, r)
    return _closed_g(vertex, r)


def _closed_d(vertex: int, s: int):
    if vertex == 1:
        if s % 2 == 0:
            return _closed_d(1, s - 1)
        r = (s - 1) // 2
        if r >= 0 and r % 2 == 0:
            return _deg(r // 2 + 2, 1, 1), True  # printed: r/2 + 1
        if r > 0:
            return _deg((r + 1) // 2, 1, 0), False
        if r == -2:
            return _deg(1, 1, 1), False
        if r % 2 != 0:
            return _deg((1 - r) // 2, -1, -1), False
        return _deg(-r // 2 - 1, -1, 0), False
    if vertex == 2:
        if s % 2 == 0:
            return _closed_d(2, s - 1)
        r = (s - 1) // 2
        if r >= 0 and r % 2 == 0:
            return _deg(3 * r // 2 + 3, 3, 1), False
        if r > 0:
            return _deg(3 * (r + 1) // 2 + 3, 3, 2), False
        if r == -1:
            return _deg(3, 3, 2), False
        if r % 2 == 0:
            return _deg(-3 * r // 2, -3, -2), False
        return _deg(-3 * (r + 1) // 2, -3, -1), False
    if vertex == 3:
        if s % 2 != 0:
            return _closed_d(3, s - 1)
        r = s // 2
        if r >= 0:
            return _deg(2 + r, 2, 1), False
        if r == -1:
            return _deg(2, 0, 0), False
        return _deg(-r, -2, -1), False
    raise ValueError("vertex must be 1, 2 or 3")


def _closed_g(vertex: int, s: int):
    if vertex == 1:
        if s % 2 == 0:
            return _closed_g(1, s - 1)
        r = (s - 1) // 2
        if r >= 0 and r % 2 == 0:
            return _deg(r // 2 + 2, 3, 1), False
        if r > 0:
            return _deg((r + 1) // 2, 0, 1), False
        if r == -2:
            return _deg(1, 3, 1), False
        if r % 2 != 0:
            return _deg((1 - r) // 2, -3, -1), False
        return _deg(-r // 2 - 1, 0, -1), False
    if vertex == 2:
        if s % 2 == 0:
            return _closed_g(2, s - 1)
        r = (s - 1) // 2
        if r >= 0 and r % 2 == 0:
            return _deg(r // 2 + 1, 1, 1), True   # printed: (.., 2, 1)
        if r > 0:
            return _deg((r + 3) // 2, 2, 1), True  # printed: (.., 1, 1)
        if r == -1:
            return _deg(1, 2, 1), False
        if r % 2 == 0:
            return _deg(-r // 2, -2, -1), False
        return _deg(-(r + 1) // 2, -1, -1), False
    if vertex == 3:
        if s % 2 != 0:
            return _closed_g(3, s - 1)
        r = s // 2
        if r >= 0:
            return _deg(2 + r, 3, 2), False
        if r == -1:
            return _deg(2, 0, 0), False
        return _deg(-r, -3, -2), False
    raise ValueError("vertex must be 1, 2 or 3")


# milestone degrees, as printed
MILESTONES = {
    (1, 1, -3): _deg(1, 1, 1),
    (1, 1, -7): _deg(1, -1, 0),
    (2, 1, -3): _deg(1, 3, 1),
    (2, 1, -7): _deg(1, 0, -1),
    (2, 2, -5): _deg(1, -1, -1),
    (2, 2, -3): _deg(1, -2, -1),
}

U_SEQUENCE = [1, 3, 2]   # applied to the case-2 belt base, U sits at vertex 2
Z_SEQUENCE = [2, 3, 2]   # applied to the case-2 belt base, Z sits at vertex 2
U_DEGREE = _deg(1, 1, 0)
Z_DEGREE = _deg(1, -1, 0)
