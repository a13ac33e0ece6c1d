"""Combinatorial ground truth: ped(n) tables built by knapsack DP.

ped(n) counts the partitions of n whose even parts are all distinct (odd
parts unrestricted).  Tables are computed purely combinatorially -- an
unbounded knapsack over the odd parts followed by a 0/1 knapsack over the
even parts -- with no series expansion involved, so they serve as an
independent oracle for the q-series side of the package.

Exact tables use Python integers (ped grows superpolynomially); modular
tables run the same DP on int64 numpy arrays, which keeps the ~20k-index
scans needed for the step-225 progressions well under a second.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .report import RunEntry
from .series import Series

FAMILY_KINDS = ("theorem-family", "ahs-family-1", "ahs-family-2", "ahs-family-3")

_INT64_GUARD = 1 << 62


class PedTable:
    """values[n] = ped(n) for 0 <= n <= n_max, exact or mod ``modulus``."""

    __slots__ = ("values", "modulus")

    def __init__(self, values, modulus: int | None = None):
        if len(values) == 0:
            raise ValueError("a table needs at least the n = 0 entry")
        if modulus is not None and modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.values = values
        self.modulus = modulus

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        return int(self.values[n])

    def reduce(self, modulus: int) -> "PedTable":
        """Entrywise reduction; an existing modulus must be a multiple of it."""
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        if self.modulus is not None and self.modulus % modulus:
            raise ValueError(
                f"cannot reduce a mod-{self.modulus} table mod {modulus}")
        if isinstance(self.values, np.ndarray):
            return PedTable(self.values % modulus, modulus)
        return PedTable([v % modulus for v in self.values], modulus)

    def progression(self, step: int, offset: int, n_limit: int,
                    modulus: int | None = None) -> Series:
        """Series whose n-th coefficient is values[step*n + offset], n <= n_limit."""
        top = step * n_limit + offset
        if top > self.n_max:
            raise ValueError(
                f"table holds n <= {self.n_max}; progression needs ped({top})")
        mod = modulus if modulus is not None else self.modulus
        if modulus is not None and self.modulus is not None \
                and self.modulus % modulus:
            raise ValueError(
                f"table modulus {self.modulus} is not a multiple of {modulus}")
        vals = [int(self.values[step * n + offset]) for n in range(n_limit + 1)]
        return Series(vals, mod)

    def to_series(self, order: int | None = None,
                  modulus: int | None = None) -> Series:
        if order is None:
            order = len(self.values)
        return self.progression(1, 0, order - 1, modulus=modulus)

    def to_text(self) -> str:
        """One ``n<TAB>value`` line per entry, for external cross-checking."""
        return "\n".join(f"{n}\t{int(v)}" for n, v in enumerate(self.values))


def _ped_exact(n_max: int) -> list[int]:
    values = [0] * (n_max + 1)
    values[0] = 1
    for part in range(1, n_max + 1, 2):        # odd parts, unbounded
        for n in range(part, n_max + 1):
            values[n] += values[n - part]
    for part in range(2, n_max + 1, 2):        # even parts, at most once
        for n in range(n_max, part - 1, -1):
            values[n] += values[n - part]
    return values


_CHUNK_ROWS = 64


def _unbounded_part(v: np.ndarray, k: int) -> None:
    """In place, v[j] += v[j-k] for ascending j: part k, any multiplicity.

    Equivalently a running sum down each residue class mod k.  Small parts
    reshape to (rows, k) for one axis-0 accumulate; large parts walk
    k-aligned chunks upward, so each add reads the chunk just updated.
    """
    n = len(v)
    if n // k > _CHUNK_ROWS:
        full = (n // k) * k
        head = v[:full].reshape(-1, k)
        np.add.accumulate(head, axis=0, out=head)
        tail = n - full
        if tail:
            v[full:] += v[full - k:full - k + tail]
    else:
        for start in range(k, n, k):
            end = min(start + k, n)
            v[start:end] += v[start - k:end - k]


def _zero_one_part(v: np.ndarray, k: int) -> None:
    """In place, v[j] += v[j-k] against pre-update values: part k, 0/1.

    Chunks walk downward so every source chunk is still unmodified.
    """
    n = len(v)
    for start in range(((n - 1) // k) * k, k - 1, -k):
        end = min(start + k, n)
        v[start:end] += v[start - k:end - k]


def _ped_mod(n_max: int, modulus: int) -> np.ndarray:
    # Entries stay exact int64 between lazy reductions; ``bound`` tracks a
    # worst-case entry, re-tightened from the actual max before paying for
    # a full reduction.
    n = n_max + 1
    v = np.zeros(n, dtype=np.int64)
    v[0] = 1
    bound = modulus - 1
    for k in range(1, n, 2):
        rows = (n + k - 1) // k
        if bound * rows >= _INT64_GUARD:
            bound = int(v.max())
            if bound * rows >= _INT64_GUARD:
                v %= modulus
                bound = modulus - 1
        _unbounded_part(v, k)
        bound *= rows
    v %= modulus
    bound = modulus - 1
    for k in range(2, n, 2):
        if bound * 2 >= _INT64_GUARD:
            v %= modulus
            bound = modulus - 1
        _zero_one_part(v, k)
        bound *= 2
    v %= modulus
    return v


def ped_table(n_max: int, modulus: int | None = None) -> PedTable:
    """DP table of ped(n): odd parts unbounded, then even parts 0/1."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if modulus is None:
        return PedTable(_ped_exact(n_max), None)
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    return PedTable(_ped_mod(n_max, modulus), modulus)


def four_regular_table(n_max: int) -> PedTable:
    """Partitions of n with no part divisible by 4, by unbounded knapsack."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    values = [0] * (n_max + 1)
    values[0] = 1
    for part in range(1, n_max + 1):
        if part % 4 == 0:
            continue
        for n in range(part, n_max + 1):
            values[n] += values[n - part]
    return PedTable(values, None)


@dataclass(frozen=True)
class CongruenceClaim:
    """ped(step*n + offset) = 0 (mod modulus) for all n >= 0."""

    step: int
    offset: int
    modulus: int
    status: str = "theorem"     # "theorem" | "conjecture"
    label: str = ""

    def __post_init__(self):
        if self.step < 1:
            raise ValueError(f"step must be >= 1, got {self.step}")
        if self.offset < 0:
            raise ValueError(f"offset must be >= 0, got {self.offset}")
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if self.status not in ("theorem", "conjecture"):
            raise ValueError(f"unknown claim status {self.status!r}")

    def describe(self) -> str:
        if self.label:
            return self.label
        text = f"ped({self.step}n+{self.offset}) = 0 (mod {self.modulus})"
        if self.status == "conjecture":
            text += " [conjecture]"
        return text


def check_claim(claim: CongruenceClaim, table: PedTable,
                n_limit: int) -> RunEntry:
    """Scan ped(step*n + offset) mod ``claim.modulus`` for 0 <= n <= n_limit.

    Passes when every residue vanishes; a conjecture-status claim can reach
    at most "empirical-pass".  Otherwise the entry fails with the smallest
    witness n and its residue.
    """
    top = claim.step * n_limit + claim.offset
    if top > table.n_max:
        raise ValueError(
            f"table holds n <= {table.n_max}; claim scan needs ped({top})")
    if table.modulus is not None and table.modulus % claim.modulus:
        raise ValueError(
            f"table modulus {table.modulus} is not a multiple of "
            f"claim modulus {claim.modulus}")
    witness = None
    for n in range(n_limit + 1):
        residue = table[claim.step * n + claim.offset] % claim.modulus
        if residue:
            witness = (n, residue)
            break
    if witness is not None:
        status = "fail"
    elif claim.status == "conjecture":
        status = "empirical-pass"
    else:
        status = "pass"
    return RunEntry(label=claim.describe(), kind="claim", status=status,
                    checked=f"n <= {n_limit}", witness=witness)


def check_equivalence(table: PedTable, left: tuple[int, int],
                      right: tuple[int, int], modulus: int, n_limit: int,
                      label: str = "") -> RunEntry:
    """Scan ped(a1*n + b1) = ped(a2*n + b2) (mod modulus) for n <= n_limit."""
    (a1, b1), (a2, b2) = left, right
    top = max(a1 * n_limit + b1, a2 * n_limit + b2)
    if top > table.n_max:
        raise ValueError(
            f"table holds n <= {table.n_max}; equivalence scan needs ped({top})")
    if table.modulus is not None and table.modulus % modulus:
        raise ValueError(
            f"table modulus {table.modulus} is not a multiple of {modulus}")
    witness = None
    for n in range(n_limit + 1):
        diff = (table[a1 * n + b1] - table[a2 * n + b2]) % modulus
        if diff:
            witness = (n, diff)
            break
    label = label or (f"ped({a1}n+{b1}) = ped({a2}n+{b2}) (mod {modulus})")
    return RunEntry(label=label, kind="claim",
                    status="fail" if witness else "pass",
                    checked=f"n <= {n_limit}", witness=witness)


def family_offset(kind: str, parameter: int) -> tuple[int, int, int]:
    """Exact (step, offset, modulus) of the indexed congruence family.

    The offsets are of the form (c * power - 1) / 8 with the division always
    exact; a nonzero remainder would mean the closed form is wrong, so it
    raises rather than rounding.
    """
    if parameter < 1:
        raise ValueError(f"family parameter must be >= 1, got {parameter}")
    if kind == "theorem-family":
        power = 5 ** (2 * parameter)
        step, numer, modulus = 9 * power, 57 * power - 1, 24
    elif kind == "ahs-family-1":
        power = 3 ** (2 * parameter + 1)
        step, numer, modulus = 3 * power, 11 * power - 1, 2
    elif kind == "ahs-family-2":
        power = 3 ** (2 * parameter)
        step, numer, modulus = 3 * power, 17 * power - 1, 6
    elif kind == "ahs-family-3":
        power = 3 ** (2 * parameter + 1)
        step, numer, modulus = 3 * power, 19 * power - 1, 6
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    offset, rem = divmod(numer, 8)
    if rem:
        raise ArithmeticError(
            f"family offset {numer}/8 is not exact for {kind}, "
            f"parameter {parameter}")
    return step, offset, modulus
