"""Machine-checked replay of the 5-dissection chain behind the mod-24
congruences for ped on step-225 progressions.

Each step is a :class:`ProofStep` comparing two independently built series:

* the five-dissection of f1 through the Rogers-Ramanujan quotient R(q),
* the generating function of ped(9n+7) as 12 f2^4 f3^6 f4 / f1^11,
* its collapse to 12 f1 f6 f12 modulo 24,
* the q^{5n+4} extraction giving the ped(45n+43) series as 12 q^3 f5 f30 f60,
* the vanishing of that series on exponent classes 0, 1, 2, 4 mod 5 -- which
  is exactly the four congruences ped(225n + 43/88/133/223) = 0 (mod 24), and
* the q^{5n+3} extraction that reproduces 12 f1 f6 f12, closing the
  self-similar loop ped(9n+7) = ped(225n+178) (mod 24), iterated to the
  family ped(9 * 25^k n + (57 * 25^k - 1)/8).

Steps that compare series are exact to their truncation order; the family
steps scan the combinatorial DP oracle instead.  Pochhammer expansions are
reached through the module handle ``etatheta`` so tests can corrupt a single
coefficient at one spot and watch the chain notice.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import etatheta
from .partitions import family_offset, ped_table
from .report import RunEntry
from .series import Series

# the eta quotients the chain is made of
PED_GF = etatheta.EtaQuotient([(4, 1), (1, -1)])
PED_9N7_GF = etatheta.EtaQuotient([(2, 4), (3, 6), (4, 1), (1, -11)])
TRIPLE_1_6_12 = etatheta.EtaQuotient([(1, 1), (6, 1), (12, 1)])
TRIPLE_5_30_60 = etatheta.EtaQuotient([(5, 1), (30, 1), (60, 1)])

# the four 5-dissection residues of the ped(45n+43) series and the
# progressions they correspond to
THEOREM_RESIDUES = ((0, 43), (1, 88), (2, 133), (4, 223))


@dataclass
class ProofStep:
    """One checkable identity: passes iff lhs - rhs vanishes.

    ``modulus`` selects a congruence check (coefficientwise divisibility)
    instead of exact equality; ``None`` means exact.  ``checked`` describes
    the verified range and defaults to the common truncation order.
    """

    label: str
    lhs: Series
    rhs: Series
    modulus: int | None = None
    checked: str = ""

    def __post_init__(self):
        if not self.checked:
            self.checked = f"order {self.order}"

    @property
    def order(self) -> int:
        return min(self.lhs.order, self.rhs.order)

    def first_mismatch(self) -> tuple[int, int] | None:
        diff = self.lhs - self.rhs
        m = self.modulus
        for i, c in enumerate(diff.coeffs):
            r = c % m if m is not None else c
            if r:
                return (i, r)
        return None

    def passes(self) -> bool:
        return self.first_mismatch() is None

    def to_entry(self) -> RunEntry:
        mismatch = self.first_mismatch()
        return RunEntry(label=self.label, kind="proof-step",
                        status="fail" if mismatch else "pass",
                        checked=self.checked, witness=mismatch)


def shifted_pochhammer(first: int, step: int, order: int) -> Series:
    """(q^first; q^step)_inf = prod_{n >= 0} (1 - q^(first + step n)).

    ``first`` must be positive: an exponent of zero would put the factor
    (1 - q^0) = 0 into the product.
    """
    if first < 1:
        raise ValueError(f"first exponent must be >= 1, got {first}")
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    return etatheta.product_of_binomials(
        ((e, -1) for e in range(first, order, step)), order)


@dataclass(frozen=True)
class RSeries:
    """The Rogers-Ramanujan quotient R(q) and its reciprocal."""

    r: Series
    r_inv: Series


def rogers_ramanujan(order: int) -> RSeries:
    """R(q) = (q; q^5)(q^4; q^5) / ((q^2; q^5)(q^3; q^5)), plus 1/R(q).

    Both quotients of shifted Pochhammer products have constant term 1, so
    they invert exactly over the integers.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    num = shifted_pochhammer(1, 5, order) * shifted_pochhammer(4, 5, order)
    den = shifted_pochhammer(2, 5, order) * shifted_pochhammer(3, 5, order)
    return RSeries(r=num * den.invert(), r_inv=den * num.invert())


def verify_f1_five_dissection(order: int = 500) -> ProofStep:
    """f1 = f25 * (R(q^5)^-1 - q - q^2 * R(q^5)), exact integers.

    With R(q) = (q; q^5)(q^4; q^5) / ((q^2; q^5)(q^3; q^5)), the reciprocal
    leads: the orientation with R(q^5) first fails at q^5 (-1 against +1),
    so the two positions are not interchangeable.
    """
    sub = rogers_ramanujan(max(1, (order + 4) // 5))
    r5 = sub.r.scale_exponent(5)
    r5_inv = sub.r_inv.scale_exponent(5)
    inner = r5_inv - Series.monomial(1, r5.order) - r5.shift(2)
    lhs = etatheta.pochhammer(1, order)
    rhs = etatheta.pochhammer(25, order) * inner
    return ProofStep("f1 = f25 * (R(q^5)^-1 - q - q^2 * R(q^5))", lhs, rhs)


def verify_ped9n7_generating_function(order: int = 400) -> ProofStep:
    """The q^{9n+7} part of the ped series equals 12 f2^4 f3^6 f4 / f1^11,
    exactly.  The constant term is ped(7) = 12."""
    ped_series = etatheta.eta_quotient(PED_GF, 9 * order)
    lhs = ped_series.dissect(9, 7)
    rhs = 12 * etatheta.eta_quotient(PED_9N7_GF, order)
    return ProofStep("ped(9n+7) series = 12 * f2^4 f3^6 f4 / f1^11", lhs, rhs)


def verify_mod24_reduction(order: int = 500) -> ProofStep:
    """12 f2^4 f3^6 f4 / f1^11 = 12 f1 f6 f12 (mod 24): the exact integer
    difference is divisible by 24 coefficientwise."""
    lhs = 12 * etatheta.eta_quotient(PED_9N7_GF, order)
    rhs = 12 * etatheta.eta_quotient(TRIPLE_1_6_12, order)
    return ProofStep("12 * f2^4 f3^6 f4 / f1^11 = 12 * f1 f6 f12 (mod 24)",
                     lhs, rhs, modulus=24)


def _ped45n43_series(order: int) -> Series:
    """The ped(45n+43) series mod 24: q^{5n+4} part of 12 f1 f6 f12."""
    base = 12 * etatheta.eta_quotient(TRIPLE_1_6_12, 5 * order + 1)
    return base.reduce_mod(24).dissect(5, 4)


def verify_extraction_5n4(order: int = 400) -> ProofStep:
    """Extracting q^{5n+4} from 12 f1 f6 f12 mod 24 yields
    12 q^3 f5 f30 f60 mod 24."""
    lhs = _ped45n43_series(order)
    inner = 12 * etatheta.eta_quotient(TRIPLE_5_30_60, max(order - 3, 0))
    rhs = inner.reduce_mod(24).shift(3)
    return ProofStep("ped(45n+43) series = 12 * q^3 f5 f30 f60 (mod 24)",
                     lhs, rhs, modulus=24)


def verify_theorem_residues(order: int = 400) -> list[ProofStep]:
    """The ped(45n+43) series vanishes mod 24 on exponent classes 0, 1, 2
    and 4 mod 5 -- the four step-225 congruences, restated at series level."""
    series = _ped45n43_series(order)
    steps = []
    for residue, offset in THEOREM_RESIDUES:
        piece = series.dissect(5, residue)
        steps.append(ProofStep(
            f"ped(225n+{offset}) series vanishes (mod 24)",
            piece, Series.zero(piece.order, 24), modulus=24))
    return steps


def verify_self_similarity(order: int = 400) -> ProofStep:
    """Extracting q^{5n+3} from 12 q^3 f5 f30 f60 mod 24 returns
    12 f1 f6 f12 mod 24, restarting the chain one level up."""
    product = 12 * etatheta.eta_quotient(TRIPLE_5_30_60, 5 * order)
    lhs = product.reduce_mod(24).shift(3).dissect(5, 3)
    rhs = (12 * etatheta.eta_quotient(TRIPLE_1_6_12, order)).reduce_mod(24)
    return ProofStep("q^{5n+3} extraction returns 12 * f1 f6 f12 (mod 24)",
                     lhs, rhs, modulus=24)


def verify_family(k: int, n_limit: int, table=None) -> ProofStep:
    """ped(9n+7) = ped(9 * 25^k * n + (57 * 25^k - 1)/8) (mod 24) for
    0 <= n <= n_limit, against the combinatorial DP oracle.

    Also recomputes the offset by iterating n -> 25n + 19 from (9, 7) and
    insists it matches the closed form.
    """
    if k < 1:
        raise ValueError(f"family index must be >= 1, got {k}")
    step, offset, modulus = family_offset("theorem-family", k)
    a, b = 9, 7
    for _ in range(k):
        a, b = 25 * a, 19 * a + b
    if (a, b) != (step, offset):
        raise ArithmeticError(
            f"family iteration gives ({a}, {b}), closed form ({step}, {offset})")
    if table is None:
        table = ped_table(step * n_limit + offset, modulus=modulus)
    lhs = table.progression(9, 7, n_limit, modulus=modulus)
    rhs = table.progression(step, offset, n_limit, modulus=modulus)
    return ProofStep(
        f"ped(9n+7) = ped({step}n+{offset}) (mod 24), DP oracle",
        lhs, rhs, modulus=modulus, checked=f"n <= {n_limit}")


def series_proof_steps(order: int = 400) -> list[ProofStep]:
    """The series-level identity chain, in proof order."""
    steps = [
        verify_f1_five_dissection(order),
        verify_ped9n7_generating_function(order),
        verify_mod24_reduction(order),
        verify_extraction_5n4(order),
    ]
    steps.extend(verify_theorem_residues(order))
    steps.append(verify_self_similarity(order))
    return steps


def run_proof_chain(order: int = 400,
                    family_checks=((1, 100), (2, 10))) -> list[ProofStep]:
    """Series steps plus DP-oracle scans of the self-similar family."""
    steps = series_proof_steps(order)
    for k, n_limit in family_checks:
        steps.append(verify_family(k, n_limit))
    return steps
