"""Pochhammer products f_k = (q^k; q^k)_inf, Ramanujan theta functions, and
the Jacobi triple product as a checkable identity.

All expansions live in the exact-integer domain.  The bilateral sums
(pentagonal numbers for f_k, squares for phi, triangular numbers for psi)
need only O(sqrt(order)) terms; truncated products are used for quotient
building blocks via :func:`product_of_binomials`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .series import Series

_FACTOR_RE = re.compile(r"f(\d+)\^(-?\d+)")


class EtaQuotient:
    """A finite product prod_k f_k^{e_k}.

    Duplicate scales merge on construction and zero exponents drop, so two
    quotients denoting the same product compare equal.  The canonical text
    form reads ``f1^-11 * f2^4 * f3^6 * f4^1``.
    """

    __slots__ = ("factors",)

    def __init__(self, factors=()):
        merged: dict[int, int] = {}
        for k, e in factors:
            if k < 1:
                raise ValueError(f"scale must be a positive integer, got {k}")
            merged[k] = merged.get(k, 0) + e
        self.factors = tuple((k, merged[k]) for k in sorted(merged) if merged[k])

    def to_text(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"f{k}^{e}" for k, e in self.factors)

    @classmethod
    def from_text(cls, text: str) -> "EtaQuotient":
        text = text.strip()
        if text == "1":
            return cls()
        factors = []
        for part in text.split("*"):
            m = _FACTOR_RE.fullmatch(part.strip())
            if not m:
                raise ValueError(f"bad eta-quotient factor {part.strip()!r}")
            factors.append((int(m.group(1)), int(m.group(2))))
        return cls(factors)

    def __eq__(self, other):
        if not isinstance(other, EtaQuotient):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"EtaQuotient({self.to_text()!r})"


def pochhammer(k: int, order: int) -> Series:
    """(q^k; q^k)_inf by the pentagonal-number sum.

    Expands sum_{n in Z} (-1)^n q^{k n (3n+1)/2}; every coefficient is
    -1, 0 or +1.
    """
    if k < 1:
        raise ValueError(f"scale must be a positive integer, got {k}")
    if order <= 0:
        return Series.zero(0)
    coeffs = [0] * order
    coeffs[0] = 1
    n = 1
    while True:
        lo = k * n * (3 * n - 1) // 2
        if lo >= order:
            break
        sign = -1 if n & 1 else 1
        coeffs[lo] += sign
        hi = k * n * (3 * n + 1) // 2
        if hi < order:
            coeffs[hi] += sign
        n += 1
    return Series(coeffs)


def eta_quotient(spec, order: int) -> Series:
    """Expand an :class:`EtaQuotient` (or factor list) to the given order.

    Positive powers multiply into the numerator, negative powers into a
    denominator which is inverted once; the empty quotient expands to 1.
    """
    if not isinstance(spec, EtaQuotient):
        spec = EtaQuotient(spec)
    num = Series.one(order)
    den = Series.one(order)
    for k, e in spec.factors:
        p = pochhammer(k, order)
        if e > 0:
            num = num * p ** e
        else:
            den = den * p ** (-e)
    return num * den.invert()


def phi(order: int) -> Series:
    """phi(q) = sum_{n in Z} q^(n^2) = 1 + 2q + 2q^4 + 2q^9 + ..."""
    coeffs = [0] * order
    if order:
        coeffs[0] = 1
    n = 1
    while n * n < order:
        coeffs[n * n] = 2
        n += 1
    return Series(coeffs)


def psi(order: int) -> Series:
    """psi(q) = sum_{n >= 0} q^(n(n+1)/2) = 1 + q + q^3 + q^6 + ..."""
    coeffs = [0] * order
    n = 0
    while n * (n + 1) // 2 < order:
        coeffs[n * (n + 1) // 2] = 1
        n += 1
    return Series(coeffs)


@dataclass(frozen=True)
class ThetaSpec:
    """The theta function f(q^r, q^s); f(-q^r, -q^s) when ``negated``."""

    r: int
    s: int
    negated: bool = False

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ValueError("theta exponents must be positive integers")


def theta_sum(spec: ThetaSpec, order: int) -> Series:
    """Bilateral sum f(a, b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}
    with a = +-q^r, b = +-q^s (the signs equal)."""
    coeffs = [0] * order
    if order:
        coeffs[0] = 1
    r, s = spec.r, spec.s
    n = 1
    while True:
        tri_hi = n * (n + 1) // 2
        tri_lo = n * (n - 1) // 2
        e_pos = r * tri_hi + s * tri_lo
        e_neg = r * tri_lo + s * tri_hi
        if e_pos >= order and e_neg >= order:
            break
        sign = -1 if (spec.negated and n & 1) else 1
        if e_pos < order:
            coeffs[e_pos] += sign
        if e_neg < order:
            coeffs[e_neg] += sign
        n += 1
    return Series(coeffs)


def product_of_binomials(terms, order: int) -> Series:
    """prod (1 + sign * q^exponent) over (exponent, sign) pairs, truncated.

    Exponents must be positive; factors whose exponent is >= order are
    congruent to 1 and are skipped.
    """
    coeffs = [0] * order
    if order:
        coeffs[0] = 1
    for e, sign in terms:
        if e < 1:
            raise ValueError(f"binomial factor exponent must be >= 1, got {e}")
        if e >= order:
            continue
        # multiply in place; downward scan keeps the untouched tail intact
        for i in range(order - 1, e - 1, -1):
            c = coeffs[i - e]
            if c:
                coeffs[i] += c if sign > 0 else -c
    return Series(coeffs)


def triple_product(spec: ThetaSpec, order: int) -> Series:
    """The triple-product form of f(a, b):
    (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf with a = +-q^r, b = +-q^s.

    With base = r + s this is the product of (1 +- q^{r + base n}),
    (1 +- q^{s + base n}) and (1 - q^{base (n+1)}) over n >= 0.
    """
    base = spec.r + spec.s
    sign = -1 if spec.negated else 1
    terms = []
    for lead in (spec.r, spec.s):
        e = lead
        while e < order:
            terms.append((e, sign))
            e += base
    e = base
    while e < order:
        terms.append((e, -1))
        e += base
    return product_of_binomials(terms, order)


def jacobi_triple_product_check(spec: ThetaSpec, order: int) -> bool:
    """Whether the bilateral theta sum equals its triple-product form."""
    return theta_sum(spec, order) == triple_product(spec, order)
