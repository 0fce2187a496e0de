"""Exact sparse multivariate Laurent polynomials over arbitrary-precision rationals.

A polynomial is a finitely supported map from exponent vectors (one signed
integer per variable) to nonzero ``Fraction`` coefficients.  Values are
immutable and canonical: two equal polynomials hold identical term maps, so
they can be compared directly and shared freely between threads.

The term order is graded lexicographic over the fixed variable order; it is
used both for division and for the canonical text form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

# Exponents stay tiny in practice (belt depth <= ~40); anything near this
# bound signals a runaway computation, not a legitimate value.
EXPONENT_LIMIT = 1 << 30


class LaurentError(ArithmeticError):
    """Base class for Laurent-ring failures."""


class VariableMismatchError(LaurentError):
    """Operands live over different variable tuples."""


class InexactDivisionError(LaurentError):
    """Division left a nonzero remainder: the quotient is not Laurent."""


class DivisionByZeroError(LaurentError):
    """Division by the zero polynomial."""


class EvaluationError(LaurentError):
    """Bad substitution, e.g. zero raised to a negative power."""


def _grlex(exps: tuple) -> tuple:
    return (sum(exps), exps)


class LaurentPoly:
    __slots__ = ("varnames", "_terms")

    def __init__(self, varnames: Sequence[str], terms: Mapping[tuple, Scalar]):
        vn = tuple(varnames)
        clean = {}
        width = len(vn)
        for exps, coeff in terms.items():
            c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            if not c:
                continue
            e = tuple(exps)
            if len(e) != width:
                raise VariableMismatchError(
                    f"exponent vector of length {len(e)} in a ring of {width} variables")
            if any(abs(x) > EXPONENT_LIMIT for x in e):
                raise LaurentError("exponent overflow")
            clean[e] = c
        object.__setattr__(self, "varnames", vn)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, varnames: Sequence[str]) -> "LaurentPoly":
        return cls(varnames, {})

    @classmethod
    def constant(cls, value: Scalar, varnames: Sequence[str]) -> "LaurentPoly":
        return cls(varnames, {(0,) * len(tuple(varnames)): Fraction(value)})

    @classmethod
    def one(cls, varnames: Sequence[str]) -> "LaurentPoly":
        return cls.constant(1, varnames)

    @classmethod
    def variable(cls, name: str, varnames: Sequence[str]) -> "LaurentPoly":
        vn = tuple(varnames)
        i = vn.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(vn)))
        return cls(vn, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, exps: Sequence[int], varnames: Sequence[str],
                 coeff: Scalar = 1) -> "LaurentPoly":
        return cls(varnames, {tuple(exps): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self) -> Mapping[tuple, Fraction]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.varnames == other.varnames and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(other, self.varnames)
        return NotImplemented

    def __hash__(self):
        return hash((self.varnames, frozenset(self._terms.items())))

    def monomial_exponents(self) -> Optional[tuple]:
        """Exponent vector if this is a single nonzero term, else None."""
        if len(self._terms) != 1:
            return None
        return next(iter(self._terms))

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self._terms:
            return Fraction(0)
        exps = self.monomial_exponents()
        if exps is None or any(exps):
            raise LaurentError("not a constant")
        return self._terms[exps]

    def _check_same_ring(self, other: "LaurentPoly") -> None:
        if self.varnames != other.varnames:
            raise VariableMismatchError(
                f"{self.varnames} vs {other.varnames}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.varnames)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_ring(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            acc = out.get(e)
            if acc is None:
                out[e] = c
            else:
                s = acc + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return self._raw(self.varnames, out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self.varnames, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.varnames)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return LaurentPoly.zero(self.varnames)
            return self._raw(self.varnames,
                             {e: k * c for e, k in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_ring(other)
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(map(int.__add__, e1, e2))
                c = c1 * c2
                acc = out.get(e)
                if acc is None:
                    out[e] = c
                else:
                    s = acc + c
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return self._raw(self.varnames, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return LaurentPoly.one(self.varnames)
        if k < 0:
            exps = self.monomial_exponents()
            if exps is None:
                raise LaurentError("negative power of a non-monomial")
            c = self._terms[exps]
            inv = self._raw(self.varnames,
                            {tuple(-x for x in exps): 1 / c})
            return inv ** (-k)
        base, acc = self, None
        while k:
            if k & 1:
                acc = base if acc is None else acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                raise DivisionByZeroError("division by zero scalar")
            return self * (1 / c)
        if isinstance(other, LaurentPoly):
            return self.exact_div(other)
        return NotImplemented

    @classmethod
    def _raw(cls, varnames, terms):
        # internal: terms already canonical (no zeros, right width)
        obj = cls.__new__(cls)
        object.__setattr__(obj, "varnames", varnames)
        object.__setattr__(obj, "_terms", terms)
        return obj

    # -- exact division ----------------------------------------------------

    def exact_div(self, den: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self/den in the Laurent ring.

        Both operands are shifted by their componentwise minimal exponents so
        the computation happens in the ordinary polynomial ring, then long
        division under the graded-lex order runs against the single divisor.
        A leading term not divisible by the divisor's leading term can never
        cancel later, so it aborts the division immediately.

        Raises InexactDivisionError when no Laurent quotient exists.
        """
        self._check_same_ring(den)
        if not den._terms:
            raise DivisionByZeroError("division by zero polynomial")
        if not self._terms:
            return LaurentPoly.zero(self.varnames)

        width = len(self.varnames)

        def shift(poly):
            mins = [min(e[i] for e in poly._terms) for i in range(width)]
            shifted = {tuple(x - m for x, m in zip(e, mins)): c
                       for e, c in poly._terms.items()}
            return mins, shifted

        nmin, num = shift(self)
        dmin, dshift = shift(den)

        dlead = max(dshift, key=_grlex)
        dlc = dshift[dlead]
        dtail = [(e, c) for e, c in dshift.items() if e != dlead]

        quo: dict = {}
        rem = dict(num)
        while rem:
            rlead = max(rem, key=_grlex)
            t = tuple(map(int.__sub__, rlead, dlead))
            if any(x < 0 for x in t):
                raise InexactDivisionError(
                    f"leading term {rlead} not divisible by {dlead}")
            c = rem[rlead] / dlc
            quo[t] = c
            del rem[rlead]
            for e, dc in dtail:
                key = tuple(map(int.__add__, t, e))
                acc = rem.get(key)
                s = (acc - c * dc) if acc is not None else -c * dc
                if s:
                    rem[key] = s
                elif acc is not None:
                    del rem[key]

        offset = tuple(n - d for n, d in zip(nmin, dmin))
        out = {tuple(map(int.__add__, e, offset)): c for e, c in quo.items()}
        return self._raw(self.varnames, out)

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point.

        Every variable occurring in a term must be assigned; a zero value
        under a negative exponent raises EvaluationError.
        """
        values = []
        for name in self.varnames:
            v = assignment.get(name)
            values.append(None if v is None else Fraction(v))
        total = Fraction(0)
        cache: dict = {}
        for exps, coeff in self._terms.items():
            term = coeff
            for i, e in enumerate(exps):
                if not e:
                    continue
                v = values[i]
                if v is None:
                    raise EvaluationError(f"no value for {self.varnames[i]}")
                key = (i, e)
                p = cache.get(key)
                if p is None:
                    if v == 0 and e < 0:
                        raise EvaluationError(
                            f"zero raised to negative power in {self.varnames[i]}")
                    p = v ** e
                    cache[key] = p
                term = term * p
            total += term
        return total

    def substitute(self, values: Mapping[str, "LaurentPoly"]) -> "LaurentPoly":
        """Substitute polynomials for the variables.

        All substituted values must live in one common ring.  A variable
        occurring with a negative exponent must receive an invertible value,
        i.e. a single monomial.
        """
        target = None
        vals = []
        for name in self.varnames:
            v = values.get(name)
            if v is not None:
                if target is None:
                    target = v.varnames
                elif v.varnames != target:
                    raise VariableMismatchError("substituted values disagree on ring")
            vals.append(v)
        if target is None:
            raise EvaluationError("no substitution values provided")
        out = LaurentPoly.zero(target)
        cache: dict = {}
        for exps, coeff in self._terms.items():
            term = LaurentPoly.constant(coeff, target)
            for i, e in enumerate(exps):
                if not e:
                    continue
                v = vals[i]
                if v is None:
                    raise EvaluationError(f"no value for {self.varnames[i]}")
                key = (i, e)
                p = cache.get(key)
                if p is None:
                    p = v ** e
                    cache[key] = p
                term = term * p
            out = out + term
        return out

    # -- canonical text form -------------------------------------------------

    def format(self) -> str:
        """Canonical text: terms sorted leading-first, coefficients as num/den."""
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms, key=_grlex, reverse=True):
            factors = [str(self._terms[exps])]
            for name, e in zip(self.varnames, exps):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    __str__ = format

    def __repr__(self):
        return f"LaurentPoly({self.format()!r})"


def variables(varnames: Sequence[str]) -> tuple:
    """The generators of the Laurent ring on `varnames`, in order."""
    vn = tuple(varnames)
    return tuple(LaurentPoly.variable(name, vn) for name in vn)


def parse(text: str, varnames: Sequence[str]) -> LaurentPoly:
    """Inverse of LaurentPoly.format."""
    vn = tuple(varnames)
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(vn)
    index = {name: i for i, name in enumerate(vn)}
    terms: dict = {}
    for chunk in text.split(" + "):
        factors = chunk.strip().split("*")
        try:
            coeff = Fraction(factors[0])
            factors = factors[1:]
        except ValueError:
            coeff = Fraction(1)
        exps = [0] * len(vn)
        for f in factors:
            name, _, power = f.partition("^")
            if name not in index:
                raise LaurentError(f"unknown variable {name!r}")
            exps[index[name]] += int(power) if power else 1
        key = tuple(exps)
        coeff = terms.get(key, Fraction(0)) + coeff
        if coeff:
            terms[key] = coeff
        elif key in terms:
            del terms[key]
    return LaurentPoly(vn, terms)
