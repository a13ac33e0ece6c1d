"""Truncated formal power series with exact or modular integer coefficients.

A series holds exactly ``order`` coefficients, one per exponent of q starting
at 0, and is trusted only for exponents below ``order``.  Every operation
truncates to the smallest order among its operands and never extrapolates, so
precision loss is impossible to miss.

Coefficients are plain Python integers.  The coefficient domain is either
exact (``modulus is None``) or the residue ring mod m, with residues kept in
``[0, m)``.  Mixing the exact domain with a modular one, or two different
moduli, raises ``ValueError`` instead of coercing silently.

Instances are immutable by convention: operations return new series.
"""

from __future__ import annotations


class Series:
    """sum_{n < order} coeffs[n] * q^n, exact or mod ``modulus``."""

    __slots__ = ("coeffs", "order", "modulus")

    def __init__(self, coeffs, modulus: int | None = None):
        if modulus is not None and modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        if modulus is None:
            self.coeffs = tuple(coeffs)
        else:
            self.coeffs = tuple(c % modulus for c in coeffs)
        self.order = len(self.coeffs)
        self.modulus = modulus

    # -- construction ------------------------------------------------------

    @classmethod
    def _make(cls, coeffs, modulus):
        # internal fast path: coeffs already normalized for the domain
        s = object.__new__(cls)
        s.coeffs = tuple(coeffs)
        s.order = len(s.coeffs)
        s.modulus = modulus
        return s

    @classmethod
    def zero(cls, order: int, modulus: int | None = None) -> "Series":
        return cls((0,) * order, modulus)

    @classmethod
    def one(cls, order: int, modulus: int | None = None) -> "Series":
        return cls.monomial(0, order, modulus=modulus)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1,
                 modulus: int | None = None) -> "Series":
        """coeff * q**exponent truncated to ``order``."""
        if exponent < 0:
            raise ValueError(f"exponent must be >= 0, got {exponent}")
        coeffs = [0] * order
        if exponent < order:
            coeffs[exponent] = coeff
        return cls(coeffs, modulus)

    # -- domain ------------------------------------------------------------

    def _domain_name(self) -> str:
        return "exact" if self.modulus is None else f"mod {self.modulus}"

    def _join(self, other: "Series") -> int | None:
        if self.modulus != other.modulus:
            raise ValueError("coefficient domain mismatch: "
                             f"{self._domain_name()} vs {other._domain_name()}")
        return self.modulus

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        m = self._join(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        if m is None:
            out = [a[i] + b[i] for i in range(n)]
        else:
            out = [(a[i] + b[i]) % m for i in range(n)]
        return Series._make(out, m)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        m = self._join(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        if m is None:
            out = [a[i] - b[i] for i in range(n)]
        else:
            out = [(a[i] - b[i]) % m for i in range(n)]
        return Series._make(out, m)

    def __neg__(self):
        m = self.modulus
        if m is None:
            return Series._make([-c for c in self.coeffs], None)
        return Series._make([(-c) % m for c in self.coeffs], m)

    def _scaled(self, k: int) -> "Series":
        m = self.modulus
        if m is None:
            return Series._make([k * c for c in self.coeffs], None)
        return Series._make([(k * c) % m for c in self.coeffs], m)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._scaled(other)
        if not isinstance(other, Series):
            return NotImplemented
        m = self._join(other)
        n = min(self.order, other.order)
        a = self.coeffs[:n]
        b = other.coeffs[:n]
        # schoolbook convolution; run the sparser operand on the outside
        if sum(1 for c in a if c) > sum(1 for c in b if c):
            a, b = b, a
        out = [0] * n
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b[:n - i]):
                    if d:
                        out[i + j] += c * d
        if m is not None:
            out = [c % m for c in out]
        return Series._make(out, m)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self._scaled(other)
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.invert() ** (-exponent)
        result = Series.one(self.order, self.modulus)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert(self) -> "Series":
        """Multiplicative inverse: self * self.invert() == 1 to full order.

        The constant term must be a unit: +-1 exactly, or coprime to the
        modulus.  The recurrence only touches nonzero coefficients of self,
        so inverting a sparse series (a Pochhammer product, say) is cheap.
        """
        n = self.order
        m = self.modulus
        if n == 0:
            return self
        c0 = self.coeffs[0]
        if m is None:
            if c0 not in (1, -1):
                raise ValueError(
                    f"constant term must be +1 or -1 to invert exactly, got {c0}")
            inv0 = c0
        else:
            try:
                inv0 = pow(c0, -1, m)
            except ValueError:
                raise ValueError(
                    f"constant term {c0} is not invertible mod {m}") from None
        support = [(k, c) for k, c in enumerate(self.coeffs) if k and c]
        out = [0] * n
        out[0] = inv0 % m if m is not None else inv0
        for i in range(1, n):
            acc = 0
            for k, c in support:
                if k > i:
                    break
                acc += c * out[i - k]
            v = -inv0 * acc
            out[i] = v % m if m is not None else v
        return Series._make(out, m)

    # -- reindexing ----------------------------------------------------------

    def scale_exponent(self, k: int) -> "Series":
        """Replace q by q**k: coefficient of q^(k*n) becomes coeffs[n].

        The result is trusted up to ``order * k``: exponents that are not
        multiples of k are exactly zero.
        """
        if k < 1:
            raise ValueError(f"scale factor must be >= 1, got {k}")
        if k == 1:
            return self
        out = [0] * (self.order * k)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * k] = c
        return Series._make(out, self.modulus)

    def dissect(self, m: int, r: int) -> "Series":
        """Extract the exponent class r mod m: result[n] = coeffs[m*n + r]."""
        if m < 1:
            raise ValueError(f"dissection modulus must be >= 1, got {m}")
        if not 0 <= r < m:
            raise ValueError(f"residue must satisfy 0 <= r < {m}, got {r}")
        n = (self.order - r + m - 1) // m if self.order > r else 0
        return Series._make([self.coeffs[m * i + r] for i in range(n)],
                            self.modulus)

    def shift(self, k: int) -> "Series":
        """Multiply by q**k; the k new leading coefficients are exact zeros."""
        if k < 0:
            raise ValueError(f"shift must be >= 0, got {k}")
        if k == 0:
            return self
        return Series._make((0,) * k + self.coeffs, self.modulus)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(
                f"cannot extend a series of order {self.order} to {order}")
        if order == self.order:
            return self
        return Series._make(self.coeffs[:order], self.modulus)

    def reduce_mod(self, modulus: int) -> "Series":
        """Reduce an exact series into the residue ring mod ``modulus``."""
        if self.modulus is not None:
            raise ValueError("series is already modular; "
                             "reduce_mod applies to exact series")
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        return Series._make([c % modulus for c in self.coeffs], modulus)

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*q^{i}")
            if len(terms) == 8:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        dom = f", mod {self.modulus}" if self.modulus is not None else ""
        return f"<Series {body} + O(q^{self.order}){dom}>"
