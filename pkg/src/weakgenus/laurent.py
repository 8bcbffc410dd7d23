"""Exact integer Laurent polynomials in one and two variables.

This module is the coefficient arithmetic underneath every knot invariant in
the package: one-variable Laurent polynomials (Jones, Q, Conway, Alexander),
two-variable ones (HOMFLY in the l/m convention), canonical residues in
finite quotient rings, and the compact text notation used to print and parse
coefficient lists.

Conventions for the text notation:

- coefficients are listed from the minimal to the maximal degree;
- if the minimal degree is negative and the maximal positive, the absolute
  term is wrapped in square brackets, e.g. ``-1 3 [4] 2``;
- otherwise the minimal degree is recorded in braces before the list,
  e.g. ``{0}-3 0 -2 -3 1 -5 2 -4``.

Both forms (with or without enclosing parentheses) are accepted by
:func:`parse_bracket`.
"""

from __future__ import annotations

import cmath
from math import comb
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class LaurentError(ValueError):
    """Raised for malformed polynomial input or unsupported reductions."""


class LaurentPoly:
    """An integer Laurent polynomial in one variable.

    Stored as a map exponent -> coefficient with no explicit zeros.
    Instances behave as immutable values; all arithmetic returns new objects.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        c: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, v in items:
            if v:
                c[e] = c.get(e, 0) + v
                if not c[e]:
                    del c[e]
        self._c = c

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], min_deg: int = 0) -> "LaurentPoly":
        return cls({min_deg + i: c for i, c in enumerate(coeffs)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._c.items()))

    @property
    def min_deg(self) -> int:
        if not self._c:
            raise LaurentError("zero polynomial has no degree")
        return min(self._c)

    @property
    def max_deg(self) -> int:
        if not self._c:
            raise LaurentError("zero polynomial has no degree")
        return max(self._c)

    @property
    def span(self) -> int:
        return self.max_deg - self.min_deg

    def coeffs(self) -> list[int]:
        """Dense coefficient list from min to max degree ([] for zero)."""
        if not self._c:
            return []
        lo, hi = self.min_deg, self.max_deg
        return [self._c.get(e, 0) for e in range(lo, hi + 1)]

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
            if not c[e]:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly({0: other}) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {e: v * other for e, v in self._c.items()}
            return out
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: v for e, v in c.items() if v}
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._c) == 1:
                ((e, v),) = self._c.items()
                if v in (1, -1):
                    return LaurentPoly({e * n: 1 if v == 1 or n % 2 == 0 else -1})
            raise LaurentError("negative powers only for unit monomials")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x**k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    def conjugate(self) -> "LaurentPoly":
        """Substitute x -> 1/x."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {-e: v for e, v in self._c.items()}
        return out

    # -- evaluation and substitution -------------------------------------

    def eval_complex(self, point: complex) -> complex:
        """Numerically evaluate at a nonzero complex point.

        Horner evaluation on the non-negative part plus Horner in 1/point on
        the negative part keeps the evaluation stable on the unit circle.
        """
        if point == 0:
            raise LaurentError("cannot evaluate a Laurent polynomial at 0")
        pos = 0j
        neg = 0j
        if self._c:
            hi = max(max(self._c), 0)
            lo = min(min(self._c), 0)
            for e in range(hi, 0, -1):
                pos = (pos + self._c.get(e, 0)) * point
            inv = 1 / point
            for e in range(lo, 0):
                neg = (neg + self._c.get(e, 0)) * inv
        return pos + neg + self._c.get(0, 0)

    def substitute_symmetric(self) -> "LaurentPoly":
        """Exact substitution x -> z + 1/z.

        The result is conjugation-symmetric in z.  Requires no negative
        exponents is *not* assumed: x**-1 is not a polynomial in z + 1/z,
        so negative input exponents raise.
        """
        if self._c and self.min_deg < 0:
            raise LaurentError("substitute_symmetric needs a polynomial with no negative exponents")
        out = LaurentPoly()
        for e, v in self._c.items():
            row = LaurentPoly({e - 2 * i: comb(e, i) for i in range(e + 1)}) if e else LaurentPoly.one()
            out = out + row * v
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({format_bracket(self)!r})"


class LaurentPoly2:
    """An integer Laurent polynomial in two variables (l, m)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        c: dict[tuple[int, int], int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, v in items:
            if v:
                key = (int(e[0]), int(e[1]))
                c[key] = c.get(key, 0) + v
                if not c[key]:
                    del c[key]
        self._c = c

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, coeff: int, lexp: int = 0, mexp: int = 0) -> "LaurentPoly2":
        return cls({(lexp, mexp): coeff})

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def coeff(self, lexp: int, mexp: int) -> int:
        return self._c.get((lexp, mexp), 0)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._c.items()))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._c == ({(0, 0): other} if other else {})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2({(0, 0): other})
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
            if not c[e]:
                del c[e]
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2({(0, 0): other})
        return self + (-other)

    def __mul__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            if not other:
                return LaurentPoly2()
            out = LaurentPoly2.__new__(LaurentPoly2)
            out._c = {e: v * other for e, v in self._c.items()}
            return out
        c: dict[tuple[int, int], int] = {}
        for (a1, b1), v1 in self._c.items():
            for (a2, b2), v2 in other._c.items():
                e = (a1 + a2, b1 + b2)
                c[e] = c.get(e, 0) + v1 * v2
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._c = {e: v for e, v in c.items() if v}
        return out

    __rmul__ = __mul__

    def shift(self, lk: int, mk: int) -> "LaurentPoly2":
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._c = {(a + lk, b + mk): v for (a, b), v in self._c.items()}
        return out

    def max_deg_m(self) -> int:
        if not self._c:
            raise LaurentError("zero polynomial has no degree")
        return max(b for _, b in self._c)

    def min_deg_m(self) -> int:
        if not self._c:
            raise LaurentError("zero polynomial has no degree")
        return min(b for _, b in self._c)

    def m_support(self) -> set[int]:
        return {b for _, b in self._c}

    def m_coefficient(self, mexp: int) -> LaurentPoly:
        """The coefficient of m**mexp as a Laurent polynomial in l."""
        return LaurentPoly({a: v for (a, b), v in self._c.items() if b == mexp})

    def substitute_units(self, l_unit_exp: int, l_unit_sign_period: int, m_poly_sign: int, m_exp: int):
        raise NotImplementedError

    def __repr__(self) -> str:
        terms = ", ".join(f"l^{a} m^{b}: {v}" for (a, b), v in self.items())
        return f"LaurentPoly2({{{terms}}})"


# -- quotient-ring residues ------------------------------------------------


@dataclass(frozen=True)
class Residue:
    """A canonical representative of a polynomial in a finite quotient ring.

    ``ring_tag`` describes the quotient; ``rep`` is the unique canonical
    remainder (an honest polynomial of degree below the modulus degree).
    Residues compare equal iff tags and representatives agree.
    """

    ring_tag: str
    rep: LaurentPoly

    def key(self) -> tuple:
        return (self.ring_tag, tuple(sorted(self.rep._c.items())))

    def __str__(self) -> str:
        return format_bracket(self.rep)


def cyclotomic_quotient_modulus(k: int, step: int) -> LaurentPoly:
    """The modulus (t**(2k) - 1)/(t**step - 1) as an honest polynomial."""
    if step not in (2, 4):
        raise LaurentError("step must be 2 or 4")
    if (2 * k) % step:
        raise LaurentError("step must divide 2k")
    return LaurentPoly({step * j: 1 for j in range(2 * k // step)})


def polydiv_rem(p: LaurentPoly, m: LaurentPoly) -> LaurentPoly:
    """Remainder of p (no negative exponents) modulo m (leading coeff +-1)."""
    rem = dict(p._c)
    md = m.max_deg
    lead = m.coeff(md)
    if lead not in (1, -1):
        raise LaurentError("modulus must have unit leading coefficient")
    for e in range(max(rem, default=0), md - 1, -1):
        v = rem.get(e, 0)
        if not v:
            continue
        q = v * lead
        for me, mv in m._c.items():
            ee = e - md + me
            rem[ee] = rem.get(ee, 0) - q * mv
            if not rem[ee]:
                del rem[ee]
    return LaurentPoly(rem)


def reduce_cyclotomic(p: LaurentPoly, k: int, step: int = 2) -> Residue:
    """Canonical residue of p modulo (t**(2k)-1)/(t**step-1).

    The modulus divides t**(2k) - 1, so t**(2k) = 1 in the quotient and
    negative exponents fold away via t**-1 = t**(2k-1).
    """
    if k < 1:
        raise LaurentError("k must be >= 1")
    if k == 1 and step == 2:
        return Residue(f"cyc[k={k},step={step}]", LaurentPoly())
    m = cyclotomic_quotient_modulus(k, step)
    folded: dict[int, int] = {}
    for e, v in p._c.items():
        ee = e % (2 * k)
        folded[ee] = folded.get(ee, 0) + v
    rep = polydiv_rem(LaurentPoly(folded), m)
    return Residue(f"cyc[k={k},step={step}]", rep)


def reduce_int_trunc(p: LaurentPoly, k: int, degree_cap: int) -> Residue:
    """Residue of p modulo the ideal (k, z**degree_cap).

    Coefficients land in {0..k-1}; exponents >= degree_cap are dropped.
    Input must have no negative exponents (knot Q polynomials do not).
    """
    if p._c and p.min_deg < 0:
        raise LaurentError("reduce_int_trunc needs a polynomial with no negative exponents")
    rep = LaurentPoly({e: v % k for e, v in p._c.items() if e < degree_cap})
    return Residue(f"inttrunc[k={k},cap={degree_cap}]", rep)


def reduce_poly2_l(p: LaurentPoly2, modulus: LaurentPoly) -> LaurentPoly2:
    """Reduce the l-variable of a two-variable polynomial modulo modulus(l).

    The modulus must have unit constant and leading coefficients so that l is
    invertible in the quotient; negative l-exponents are folded using
    l**-1 = l**(d-1) * (unit combination) via repeated multiplication by the
    relation l**order = 1 when the modulus divides l**order - 1.
    """
    # Find the smallest order with modulus | l**order - 1 (all our moduli
    # divide (i l)**(2k) - 1, hence l**(4k) - 1).
    order = None
    for cand in range(modulus.max_deg + 1, 8 * modulus.max_deg + 9):
        if polydiv_rem(LaurentPoly({cand: 1, 0: -1}), modulus).is_zero():
            order = cand
            break
    if order is None:
        raise LaurentError("modulus does not divide l**n - 1 for small n")
    by_m: dict[int, dict[int, int]] = {}
    for (a, b), v in p._c.items():
        row = by_m.setdefault(b, {})
        aa = a % order
        row[aa] = row.get(aa, 0) + v
    out: dict[tuple[int, int], int] = {}
    for b, row in by_m.items():
        rem = polydiv_rem(LaurentPoly(row), modulus)
        for a, v in rem._c.items():
            out[(a, b)] = v
    return LaurentPoly2(out)


# -- text notation -----------------------------------------------------------


def format_bracket(p: LaurentPoly) -> str:
    """Coefficient-list notation; see the module docstring for the format."""
    if p.is_zero():
        return "{0}0"
    lo, hi = p.min_deg, p.max_deg
    coeffs = p.coeffs()
    if lo < 0 < hi:
        parts = []
        for i, c in enumerate(coeffs):
            e = lo + i
            parts.append(f"[{c}]" if e == 0 else str(c))
        return " ".join(parts)
    return "{%d}%s" % (lo, " ".join(str(c) for c in coeffs))


def parse_bracket(text: str) -> LaurentPoly:
    """Parse the coefficient-list notation, including the inline
    parenthesized form used in printed residue lists."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if not s:
        raise LaurentError("empty polynomial text")
    min_deg = None
    if s.startswith("{"):
        close = s.index("}")
        try:
            min_deg = int(s[1:close])
        except ValueError as exc:
            raise LaurentError(f"bad minimal degree in {text!r}") from exc
        s = s[close + 1:].strip()
    tokens = s.replace(",", " ").split()
    if not tokens:
        raise LaurentError(f"no coefficients in {text!r}")
    coeffs: list[int] = []
    zero_at = None
    for i, tok in enumerate(tokens):
        if tok.startswith("[") and tok.endswith("]"):
            if zero_at is not None:
                raise LaurentError(f"two bracketed terms in {text!r}")
            zero_at = i
            tok = tok[1:-1]
        try:
            coeffs.append(int(tok))
        except ValueError as exc:
            raise LaurentError(f"bad coefficient {tok!r} in {text!r}") from exc
    if min_deg is None:
        if zero_at is None:
            raise LaurentError(f"no degree anchor in {text!r}")
        min_deg = -zero_at
    elif zero_at is not None and min_deg != -zero_at:
        raise LaurentError(f"inconsistent degree anchors in {text!r}")
    return LaurentPoly.from_coeffs(coeffs, min_deg)


def parse_residue(text: str, ring_tag: str) -> Residue:
    return Residue(ring_tag, parse_bracket(text))
