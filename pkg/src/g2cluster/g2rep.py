"""Exact symbolic model of the group G2 through its 7-dimensional representation.

The weight basis is ordered highest first; in fundamental-weight coordinates
the basis lines carry (1,0), (-1,1), (2,-1), (0,0), (-2,1), (1,-1), (-1,0).
The Cartan pairing is fixed so that the first fundamental weight equals
2a1 + a2 and the second equals 3a1 + 2a2 in the simple roots; all stated
degree tables force this convention.

Regular functions on the group are polynomials in the 49 matrix entries
g11..g77.  Raising and lowering operators act as derivations induced by right
multiplication; generalized minors come both from right translation by Weyl
lifts and from the lowering chains, and the two constructions are checked
against each other when the registry is built.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional, Sequence, Union

from .laurent import EvaluationError, LaurentPoly
from .mutation import DegreeVector, nullspace

# -- Cartan data -------------------------------------------------------------

# pairing[i][j] = <alpha_{j+1}, coroot of alpha_{i+1}>
CARTAN = ((2, -3), (-1, 2))

# basis-line weights as (<mu, a1 coroot>, <mu, a2 coroot>)
FUND_WEIGHTS = ((1, 0), (-1, 1), (2, -1), (0, 0), (-2, 1), (1, -1), (-1, 0))

ENTRY_VARS = tuple(f"g{a}{b}" for a in range(1, 8) for b in range(1, 8))
SYMBOLIC_VARS = ("u", "v", "t1", "t2", "t3", "t4", "t5", "t6")
TORUS_VARS = ("u", "v")

MatrixLike = tuple  # 7x7 tuple of tuples, entries Fraction or LaurentPoly


class RepresentationError(Exception):
    pass


class NotHomogeneous(RepresentationError):
    """A function failed the weight-vector check during degree inference."""


# -- small exact matrix helpers ----------------------------------------------


def mat_from_entries(entries: Mapping, size: int = 7) -> MatrixLike:
    zero = Fraction(0)
    return tuple(tuple(Fraction(entries.get((r, c), zero)) for c in range(size))
                 for r in range(size))


def mat_identity(size: int = 7) -> MatrixLike:
    return tuple(tuple(Fraction(1 if r == c else 0) for c in range(size))
                 for r in range(size))


def mat_mul(a: MatrixLike, b: MatrixLike) -> MatrixLike:
    size = len(a)
    bt = tuple(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = row[0] * col[0]
            for x, y in zip(row[1:], col[1:]):
                acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_add(a: MatrixLike, b: MatrixLike) -> MatrixLike:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: MatrixLike, c) -> MatrixLike:
    return tuple(tuple(x * c for x in row) for row in a)


def mat_is_zero(a: MatrixLike) -> bool:
    return all(not x for row in a for x in row)


def bracket(a: MatrixLike, b: MatrixLike) -> MatrixLike:
    ab = mat_mul(a, b)
    ba = mat_mul(b, a)
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(ab, ba))


def mat_det(a: MatrixLike) -> Fraction:
    m = [list(row) for row in a]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


# -- Chevalley generators ------------------------------------------------------


@lru_cache(maxsize=None)
def chevalley_matrices() -> dict:
    """The six generators e1, e2, f1, f2, h1, h2 on the weight basis.

    The lone nontrivial normalisation is the middle root string, where the
    lowering operator carries coefficient 2 on its first step; that choice
    makes every labelled coefficient of the weight diagrams a literal matrix
    entry.
    """
    e1 = mat_from_entries({(0, 1): 1, (2, 3): 1, (3, 4): 2, (5, 6): 1})
    f1 = mat_from_entries({(1, 0): 1, (3, 2): 2, (4, 3): 1, (6, 5): 1})
    e2 = mat_from_entries({(1, 2): 1, (4, 5): 1})
    f2 = mat_from_entries({(2, 1): 1, (5, 4): 1})
    h1 = mat_from_entries({(i, i): w[0] for i, w in enumerate(FUND_WEIGHTS)})
    h2 = mat_from_entries({(i, i): w[1] for i, w in enumerate(FUND_WEIGHTS)})
    return {"e1": e1, "e2": e2, "f1": f1, "f2": f2, "h1": h1, "h2": h2}


@lru_cache(maxsize=None)
def invariant_form() -> MatrixLike:
    """The symmetric bilinear form preserved by the group, up to scale.

    Solved from X^T G + G X = 0 over the six generators; the solution space
    is one-dimensional, normalised so the (1,7) entry is 1.
    """
    gens = chevalley_matrices()
    rows = []
    for X in gens.values():
        for a in range(7):
            for c in range(7):
                row = [Fraction(0)] * 49
                for k in range(7):
                    row[7 * k + c] += X[k][a]      # (X^T G)[a][c]
                    row[7 * a + k] += X[k][c]      # (G X)[a][c]
                rows.append(row)
    basis = nullspace(rows)
    if len(basis) != 1:
        raise RepresentationError(f"invariant form space has dim {len(basis)}")
    vec = basis[0]
    G = tuple(tuple(vec[7 * r + c] for c in range(7)) for r in range(7))
    scale = 1 / G[0][6]
    G = mat_scale(G, scale)
    if any(G[r][c] != G[c][r] for r in range(7) for c in range(7)):
        raise RepresentationError("invariant form is not symmetric")
    return G


# -- group elements ------------------------------------------------------------


@dataclass(frozen=True)
class GroupPoint:
    """A group element built from generators; entries are Fractions or
    Laurent polynomials in evaluation parameters."""

    matrix: MatrixLike
    word: tuple = ()

    def __matmul__(self, other: "GroupPoint") -> "GroupPoint":
        a, b = _coerce_pair(self.matrix, other.matrix)
        return GroupPoint(mat_mul(a, b), self.word + other.word)

    def is_symbolic(self) -> bool:
        return any(isinstance(x, LaurentPoly) for row in self.matrix for x in row)


def _coerce_pair(a: MatrixLike, b: MatrixLike):
    ring = None
    for m in (a, b):
        for row in m:
            for x in row:
                if isinstance(x, LaurentPoly):
                    ring = x.varnames
                    break
    if ring is None:
        return a, b

    def lift(m):
        return tuple(tuple(x if isinstance(x, LaurentPoly)
                           else LaurentPoly.constant(x, ring) for x in row)
                     for row in m)

    return lift(a), lift(b)


def identity_point() -> GroupPoint:
    return GroupPoint(mat_identity(), ())


def one_param(i: int, t, lower: bool = False) -> GroupPoint:
    """exp(t e_i), or exp(t f_i) when lower; exact since the generator is
    nilpotent."""
    gens = chevalley_matrices()
    X = gens[("f" if lower else "e") + str(i)]
    if isinstance(t, LaurentPoly):
        one = LaurentPoly.one(t.varnames)
        acc = tuple(tuple(LaurentPoly.constant(x, t.varnames) for x in row)
                    for row in mat_identity())
    else:
        t = Fraction(t)
        acc = mat_identity()
    power = X
    tk = t
    k = 1
    fact = 1
    while not mat_is_zero(power):
        acc = mat_add(acc, mat_scale(power, tk * Fraction(1, fact)))
        power = mat_mul(power, X)
        k += 1
        fact *= k
        tk = tk * t
        if k > 8:
            raise RepresentationError("generator is not nilpotent")
    kind = ("y" if lower else "x") + str(i)
    return GroupPoint(acc, (f"{kind}({t})",))


def torus_element(u, v) -> GroupPoint:
    """Diagonal element scaling the weight-mu line by u^<mu,a1v> v^<mu,a2v>."""
    symbolic = isinstance(u, LaurentPoly) or isinstance(v, LaurentPoly)
    if not symbolic and (u == 0 or v == 0):
        raise RepresentationError("torus parameters must be nonzero")
    entries = {}
    for idx, (a, b) in enumerate(FUND_WEIGHTS):
        entries[(idx, idx)] = (u ** a) * (v ** b)
    if symbolic:
        ring = (u if isinstance(u, LaurentPoly) else v).varnames
        mat = tuple(tuple(entries.get((r, c), LaurentPoly.zero(ring))
                          for c in range(7)) for r in range(7))
    else:
        mat = mat_from_entries(entries)
    return GroupPoint(mat, (f"h({u},{v})",))


# -- Weyl group ----------------------------------------------------------------

# simple reflections on fundamental-weight coordinates
_S1 = ((-1, 0), (1, 1))   # (a,b) -> (-a, a+b)
_S2 = ((1, 3), (0, -1))   # (a,b) -> (a+3b, -b)


def _wapply(mat, vec):
    return (mat[0][0] * vec[0] + mat[0][1] * vec[1],
            mat[1][0] * vec[0] + mat[1][1] * vec[1])


def _wmul(m1, m2):
    return tuple(tuple(sum(m1[r][k] * m2[k][c] for k in range(2))
                       for c in range(2)) for r in range(2))


@lru_cache(maxsize=None)
def _weyl_lengths() -> dict:
    lengths = {((1, 0), (0, 1)): 0}
    frontier = [((1, 0), (0, 1))]
    while frontier:
        nxt = []
        for w in frontier:
            for s in (_S1, _S2):
                ws = _wmul(w, s)
                if ws not in lengths:
                    lengths[ws] = lengths[w] + 1
                    nxt.append(ws)
        frontier = nxt
    if len(lengths) != 12:
        raise RepresentationError("Weyl group enumeration failed")
    return lengths


def weyl_length(word: Sequence[int]) -> int:
    w = ((1, 0), (0, 1))
    for i in word:
        w = _wmul(w, _S1 if i == 1 else _S2)
    return _weyl_lengths()[w]


@lru_cache(maxsize=None)
def weyl_lift(i: int) -> GroupPoint:
    """The standard lift x_i(-1) y_i(1) x_i(-1) of the simple reflection."""
    p = one_param(i, -1) @ one_param(i, 1, lower=True) @ one_param(i, -1)
    return GroupPoint(p.matrix, (f"s{i}~",))


def weyl_lift_word(word: Sequence[int]) -> GroupPoint:
    word = tuple(word)
    if weyl_length(word) != len(word):
        raise RepresentationError(f"word {word} is not reduced")
    point = identity_point()
    for i in word:
        point = point @ weyl_lift(i)
    return point


# -- regular functions ---------------------------------------------------------


def entry_function(a: int, b: int) -> LaurentPoly:
    return LaurentPoly.variable(f"g{a}{b}", ENTRY_VARS)


def _entry_index(a: int, b: int) -> int:
    return 7 * (a - 1) + (b - 1)


def delta_omega1() -> LaurentPoly:
    """Coefficient of the highest weight line: the (1,1) entry."""
    return entry_function(1, 1)


def delta_omega2() -> LaurentPoly:
    """2x2 minor on rows {1,2} and columns {1,2}: the highest vector of the
    second fundamental module inside the exterior square."""
    return (entry_function(1, 1) * entry_function(2, 2)
            - entry_function(1, 2) * entry_function(2, 1))


def right_translate(F: LaurentPoly, M: MatrixLike) -> LaurentPoly:
    """Substitution g -> g.M on the entry polynomial ring."""
    linear = {}
    for a in range(1, 8):
        for b in range(1, 8):
            terms = {}
            for k in range(1, 8):
                c = M[k - 1][b - 1]
                if c:
                    exps = [0] * 49
                    exps[_entry_index(a, k)] = 1
                    terms[tuple(exps)] = c
            linear[(a, b)] = LaurentPoly(ENTRY_VARS, terms)
    out = LaurentPoly.zero(ENTRY_VARS)
    cache = {}
    for exps, coeff in F.terms.items():
        term = LaurentPoly.constant(coeff, ENTRY_VARS)
        for idx, e in enumerate(exps):
            if not e:
                continue
            a, b = divmod(idx, 7)
            key = (idx, e)
            p = cache.get(key)
            if p is None:
                p = linear[(a + 1, b + 1)] ** e
                cache[key] = p
            term = term * p
        out = out + term
    return out


def _derive(F: LaurentPoly, X: MatrixLike) -> LaurentPoly:
    """Derivation g_ab -> (g.X)_ab, extended by the Leibniz rule."""
    out: dict = {}
    for exps, coeff in F.terms.items():
        for idx, e in enumerate(exps):
            if not e:
                continue
            a, b = divmod(idx, 7)
            for k in range(7):
                x = X[k][b]
                if not x:
                    continue
                new = list(exps)
                new[idx] -= 1
                new[7 * a + k] += 1
                key = tuple(new)
                c = coeff * e * x
                acc = out.get(key)
                if acc is None:
                    out[key] = c
                else:
                    s = acc + c
                    if s:
                        out[key] = s
                    else:
                        del out[key]
    return LaurentPoly(ENTRY_VARS, out)


def lowering_derivation(i: int, F: LaurentPoly) -> LaurentPoly:
    return _derive(F, chevalley_matrices()[f"f{i}"])


def raising_derivation(i: int, F: LaurentPoly) -> LaurentPoly:
    return _derive(F, chevalley_matrices()[f"e{i}"])


def generalized_minor(i: int, word: Sequence[int]) -> LaurentPoly:
    """Minor attached to the i-th fundamental weight moved by the given
    reduced word: right translation by the word's lift."""
    base = delta_omega1() if i == 1 else delta_omega2()
    return right_translate(base, weyl_lift_word(word).matrix)


# -- named function registry -----------------------------------------------------

MINOR_WORDS_1 = {
    "Delta_w1": (),
    "Delta_s1_w1": (1,),
    "Delta_s2s1_w1": (2, 1),
    "Delta_s1s2s1_w1": (1, 2, 1),
    "Delta_s2s1s2s1_w1": (2, 1, 2, 1),
    "Delta_w0_w1": (1, 2, 1, 2, 1, 2),
}

MINOR_WORDS_2 = {
    "Delta_w2": (),
    "Delta_s2_w2": (2,),
    "Delta_s1s2_w2": (1, 2),
    "Delta_s2s1s2_w2": (2, 1, 2),
    "Delta_s1s2s1s2_w2": (1, 2, 1, 2),
    "Delta_w0_w2": (2, 1, 2, 1, 2, 1),
}


def _build_registry() -> dict:
    """Construct every named function with its recipe.

    Minors come from the lowering chains; the translation construction is
    compared against them in `minor_translation_mismatches` (empty in this
    basis).  Two chain steps are weight-corrected relative to their printed
    operator labels; the verification suite reports both.
    """
    f1 = lambda F: lowering_derivation(1, F)
    f2 = lambda F: lowering_derivation(2, F)
    reg: dict = {}

    def put(name, poly, recipe):
        reg[name] = (poly, recipe)

    put("Delta_w1", delta_omega1(), "entry (1,1)")
    put("Delta_s1_w1", f1(reg["Delta_w1"][0]), "f1+ Delta_w1")
    put("Delta_s2s1_w1", f2(reg["Delta_s1_w1"][0]), "f2+ Delta_s1_w1")
    put("X0", f1(reg["Delta_s2s1_w1"][0]) * Fraction(1, 2),
        "1/2 f1+ f2+ f1+ Delta_w1")
    put("Delta_s1s2s1_w1", f1(reg["X0"][0]),
        "1/2 (f1+)^2 Delta_s2s1_w1")
    put("Delta_s2s1s2s1_w1", f2(reg["Delta_s1s2s1_w1"][0]),
        "f2+ Delta_s1s2s1_w1")
    put("Delta_w0_w1", f1(reg["Delta_s2s1s2s1_w1"][0]),
        "f1+ Delta_s2s1s2s1_w1")

    put("Delta_w2", delta_omega2(), "2x2 minor rows {1,2} cols {1,2}")
    put("Delta_s2_w2", f2(reg["Delta_w2"][0]), "f2+ Delta_w2")
    d1s2 = f1(f1(f1(reg["Delta_s2_w2"][0]))) * Fraction(1, 6)
    put("Delta_s1s2_w2", d1s2,
        "1/6 (f1+)^3 Delta_s2_w2 (weight-corrected; printed operator is f2)")
    put("Delta_s2s1s2_w2", f2(f2(d1s2)) * Fraction(1, 2),
        "1/2 (f2+)^2 Delta_s1s2_w2")
    put("Delta_s1s2s1s2_w2",
        f1(f1(f1(reg["Delta_s2s1s2_w2"][0]))) * Fraction(1, 6),
        "1/6 (f1+)^3 Delta_s2s1s2_w2")
    put("Delta_w0_w2", f2(reg["Delta_s1s2s1s2_w2"][0]),
        "f2+ Delta_s1s2s1s2_w2")

    put("F(2,1)", f1(reg["Delta_s2_w2"][0]) * Fraction(1, 3),
        "1/3 f1+ Delta_s2_w2")
    put("F(1,1)", f1(reg["F(2,1)"][0]) * Fraction(1, 2),
        "1/2 f1+ F(2,1)  (= Y2 = 1/6 (f1+)^2 f2+ Delta_w2)")
    put("F(1,0)", f2(reg["F(1,1)"][0]), "f2+ F(1,1)")
    f100 = f1(reg["F(1,0)"][0]) * 2 - f2(reg["Delta_s1s2_w2"][0])
    put("F1(0,0)", f100, "(2 f1+ f2+ - f2+ f1+) F(1,1)  (= Y-2)")
    put("F2(0,0)", (f2(reg["Delta_s1s2_w2"][0]) - f100) * Fraction(1, 2),
        "1/2 (f2+ Delta_s1s2_w2 - F1(0,0))")
    put("F(-1,0)", f1(reg["F1(0,0)"][0]), "f1+ F1(0,0)")
    put("F(-1,-1)", f2(reg["F(-1,0)"][0]), "f2+ F(-1,0)")
    put("F(-2,-1)", f1(reg["F(-1,-1)"][0]) * Fraction(1, 2),
        "1/2 f1+ F(-1,-1)")

    put("Y2", reg["F(1,1)"][0], "alias of F(1,1)")
    put("Y-2", reg["F1(0,0)"][0], "alias of F1(0,0)")

    Dw1 = reg["Delta_w1"][0]
    Ds1 = reg["Delta_s1_w1"][0]
    Ds2s1 = reg["Delta_s2s1_w1"][0]
    Ds1s2s1 = reg["Delta_s1s2s1_w1"][0]
    Ds2s1s2s1 = reg["Delta_s2s1s2s1_w1"][0]
    Dw0w1 = reg["Delta_w0_w1"][0]
    X0 = reg["X0"][0]
    put("X2", Ds1 * Ds2s1 * Ds2s1 - Dw1 * Ds2s1 * X0 - Dw1 * Dw1 * Ds2s1s2s1,
        "Delta_s1_w1 Delta_s2s1_w1^2 - Delta_w1 Delta_s2s1_w1 X0"
        " - Delta_w1^2 Delta_s2s1s2s1_w1")
    put("X-2",
        X0 * (Dw1 * Dw0w1 + Ds1 * Ds2s1s2s1)
        - Dw1 * Ds1s2s1 * Ds2s1s2s1 - Ds1 * Ds2s1 * Dw0w1,
        "X0 (Delta_w1 Delta_w0_w1 + Delta_s1_w1 Delta_s2s1s2s1_w1)"
        " - Delta_w1 Delta_s1s2s1_w1 Delta_s2s1s2s1_w1"
        " - Delta_s1_w1 Delta_s2s1_w1 Delta_w0_w1")
    put("X1_GLS", Ds1 * X0 - Dw1 * Ds1s2s1,
        "Delta_s1_w1 X0 - Delta_w1 Delta_s1s2s1_w1")
    put("X2_GLS", Ds2s1 * Ds1 * Ds1 - 2 * Dw1 * Ds1 * X0 + Dw1 * Dw1 * Ds1s2s1,
        "Delta_s2s1_w1 Delta_s1_w1^2 - 2 Delta_w1 Delta_s1_w1 X0"
        " + Delta_w1^2 Delta_s1s2s1_w1")
    put("Y1_GLS",
        reg["F(2,1)"][0] * reg["F(1,0)"][0]
        - reg["Delta_s2_w2"][0] * reg["F1(0,0)"][0],
        "F(2,1) F(1,0) - Delta_s2_w2 F1(0,0)")
    return reg


@lru_cache(maxsize=None)
def _registry() -> dict:
    return _build_registry()


def named_function(name: str) -> LaurentPoly:
    reg = _registry()
    if name not in reg:
        raise KeyError(f"unknown function {name!r}")
    return reg[name][0]


def registry_listing() -> dict:
    """name -> construction recipe, for audit export."""
    return {name: recipe for name, (poly, recipe) in sorted(_registry().items())}


def minor_translation_mismatches() -> list:
    """Names whose translation construction disagrees with the chain one."""
    bad = []
    for table, i in ((MINOR_WORDS_1, 1), (MINOR_WORDS_2, 2)):
        for name, word in table.items():
            if generalized_minor(i, word) != named_function(name):
                bad.append(name)
    return bad


# -- evaluation -----------------------------------------------------------------


def evaluate_function(F: LaurentPoly, g) -> Union[Fraction, LaurentPoly]:
    """Substitute the entries of a group point (or raw matrix) into F."""
    mat = g.matrix if isinstance(g, GroupPoint) else g
    flat = [x for row in mat for x in row]
    symbolic = any(isinstance(x, LaurentPoly) for x in flat)
    if symbolic:
        ring = next(x for x in flat if isinstance(x, LaurentPoly)).varnames
        flat = [x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x, ring)
                for x in flat]
        total = LaurentPoly.zero(ring)
        one = LaurentPoly.one(ring)
    else:
        total = Fraction(0)
        one = Fraction(1)
    cache: dict = {}
    for exps, coeff in F.terms.items():
        term = one * coeff
        for idx, e in enumerate(exps):
            if not e:
                continue
            key = (idx, e)
            p = cache.get(key)
            if p is None:
                p = flat[idx] ** e
                cache[key] = p
            term = term * p
        total = total + term
    return total


# -- random points ----------------------------------------------------------------

_PARAM_POOL = tuple(Fraction(num, den)
                    for num in list(range(-9, 0)) + list(range(1, 10))
                    for den in range(1, 5))


def random_group_point(rng: random.Random, length: int = 8) -> GroupPoint:
    """Product of `length` random generators with parameters from a fixed
    rational pool; deterministic given the generator state."""
    point = identity_point()
    for _ in range(length):
        kind = rng.randrange(5)
        if kind == 4:
            point = point @ torus_element(rng.choice(_PARAM_POOL),
                                          rng.choice(_PARAM_POOL))
        else:
            i = 1 + (kind & 1)
            point = point @ one_param(i, rng.choice(_PARAM_POOL),
                                      lower=kind >= 2)
    return point


def random_dense_point(rng: random.Random) -> GroupPoint:
    """Random point of the dense double cell: a full lowering word, a torus
    element, then a full raising word.  At such points the minors attached to
    extreme weights are generically nonzero, unlike under short unstructured
    generator words."""
    point = identity_point()
    for i in (1, 2, 1, 2, 1, 2):
        point = point @ one_param(i, rng.choice(_PARAM_POOL), lower=True)
    point = point @ torus_element(rng.choice(_PARAM_POOL),
                                  rng.choice(_PARAM_POOL))
    for i in (1, 2, 1, 2, 1, 2):
        point = point @ one_param(i, rng.choice(_PARAM_POOL))
    return point


@lru_cache(maxsize=None)
def symbolic_torus() -> GroupPoint:
    u = LaurentPoly.variable("u", TORUS_VARS)
    v = LaurentPoly.variable("v", TORUS_VARS)
    return torus_element(u, v)


@lru_cache(maxsize=None)
def symbolic_dense_point() -> GroupPoint:
    """h(u,v) x1(t1) x2(t2) x1(t3) x2(t4) x1(t5) x2(t6): a parametrisation of a
    dense subset of the Borel, enough to separate left-invariant functions."""
    u = LaurentPoly.variable("u", SYMBOLIC_VARS)
    v = LaurentPoly.variable("v", SYMBOLIC_VARS)
    point = torus_element(u, v)
    for k, i in enumerate((1, 2, 1, 2, 1, 2), start=1):
        t = LaurentPoly.variable(f"t{k}", SYMBOLIC_VARS)
        point = point @ one_param(i, t)
    return point


# -- degree inference --------------------------------------------------------------


def _monomial_or_raise(value: LaurentPoly, what: str) -> tuple:
    exps = value.monomial_exponents()
    if exps is None:
        raise NotHomogeneous(f"{what} is not a monomial: {value.format()}")
    return exps


def weight_from_right_exponents(a: int, b: int) -> tuple:
    """Solve mu = p a1 + q a2 from (<mu,a1v>, <mu,a2v>) = (a, b)."""
    return (2 * a + 3 * b, a + 2 * b)


def infer_degree(F: LaurentPoly, rng: random.Random,
                 case: Optional[int] = None) -> DegreeVector:
    """Tri-degree (n, p, q) of a weight function.

    n comes from the left torus action, (p, q) from the right one; both
    symbolic evaluations must be monomials in (u, v).  The probe point is
    resampled while F vanishes on it.
    """
    for _ in range(64):
        g0 = random_dense_point(rng)
        base = evaluate_function(F, g0)
        if base:
            break
    else:
        raise RepresentationError("could not find a nonvanishing point")
    h = symbolic_torus().matrix
    left = evaluate_function(F, mat_mul(h, _coerce_pair(h, g0.matrix)[1]))
    A, B = _monomial_or_raise(left, "left torus evaluation")
    right = evaluate_function(F, mat_mul(_coerce_pair(h, g0.matrix)[1], h))
    a, b = _monomial_or_raise(right, "right torus evaluation")
    p, q = weight_from_right_exponents(a, b)
    if case == 1 or (case is None and B == 0):
        if B != 0:
            raise NotHomogeneous(f"left character u^{A} v^{B} is not a power of u")
        return DegreeVector(A, p, q)
    if case == 2 or (case is None and A == 0):
        if A != 0:
            raise NotHomogeneous(f"left character u^{A} v^{B} is not a power of v")
        return DegreeVector(B, p, q)
    raise NotHomogeneous(f"mixed left character u^{A} v^{B}")
