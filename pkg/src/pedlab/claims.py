"""Claim sets: built-in congruence lists and the line-oriented claim file.

File format, one directive per line, ``#`` comments and blank lines ignored:

    A B M theorem|conjecture [label...]
    family KIND PARAMETER [N_LIMIT] [label...]

A plain line asserts ped(A*n + B) = 0 (mod M).  A family line names one
member of an indexed family; KIND is one of ``theorem-family`` (the
self-similar mod-24 equivalence, checked as ped(9n+7) = ped(An+B)),
``ahs-family-1``, ``ahs-family-2`` or ``ahs-family-3`` (vanishing
congruences mod 2 / 6 / 6).  N_LIMIT caps that family's scan depth; without
it the scan-wide limit applies.  Anything else on a line is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import FAMILY_KINDS, CongruenceClaim


class ClaimParseError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyDirective:
    kind: str
    parameter: int
    n_limit: int | None = None
    label: str = ""

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.parameter < 1:
            raise ValueError(f"family parameter must be >= 1, got {self.parameter}")
        if self.n_limit is not None and self.n_limit < 0:
            raise ValueError(f"family n_limit must be >= 0, got {self.n_limit}")


@dataclass
class ClaimSet:
    name: str
    claims: list[CongruenceClaim] = field(default_factory=list)
    families: list[FamilyDirective] = field(default_factory=list)

    def __post_init__(self):
        if not self.claims and not self.families:
            raise ClaimParseError(f"{self.name}: no claims found")


def _ahs_set() -> ClaimSet:
    claims = [
        CongruenceClaim(3, 2, 2),
        CongruenceClaim(9, 4, 4),
        CongruenceClaim(9, 7, 12),
    ]
    families = [FamilyDirective(kind, 1)
                for kind in ("ahs-family-1", "ahs-family-2", "ahs-family-3")]
    return ClaimSet("ahs", claims, families)


def _theorem1_set() -> ClaimSet:
    claims = [CongruenceClaim(225, b, 24) for b in (43, 88, 133, 223)]
    # the k = 2 member steps by 5625; its scan depth is pinned so the default
    # run keeps the DP table small
    families = [FamilyDirective("theorem-family", 1),
                FamilyDirective("theorem-family", 2, n_limit=10)]
    return ClaimSet("theorem1", claims, families)


def _conjecture_set() -> ClaimSet:
    claims = [CongruenceClaim(225, b, 192, status="conjecture")
              for b in (43, 88, 133, 223)]
    return ClaimSet("conjecture192", claims, [])


def _all_set() -> ClaimSet:
    parts = [_ahs_set(), _theorem1_set(), _conjecture_set()]
    return ClaimSet("all",
                    [c for p in parts for c in p.claims],
                    [f for p in parts for f in p.families])


_BUILTINS = {
    "ahs": _ahs_set,
    "theorem1": _theorem1_set,
    "conjecture192": _conjecture_set,
    "all": _all_set,
}

BUILTIN_SET_NAMES = tuple(sorted(_BUILTINS))


def builtin_claim_set(name: str) -> ClaimSet:
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise ClaimParseError(
            f"unknown builtin claim set {name!r}; "
            f"choose from {', '.join(BUILTIN_SET_NAMES)}") from None


def parse_claim_lines(lines, name: str = "claims") -> ClaimSet:
    claims: list[CongruenceClaim] = []
    families: list[FamilyDirective] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            if tokens[0] == "family":
                if len(tokens) < 3:
                    raise ValueError("family line needs KIND and PARAMETER")
                kind = tokens[1]
                parameter = int(tokens[2])
                rest = tokens[3:]
                n_limit = None
                if rest and rest[0].lstrip("+").isdigit():
                    n_limit = int(rest[0])
                    rest = rest[1:]
                families.append(FamilyDirective(kind, parameter, n_limit,
                                                " ".join(rest)))
            else:
                if len(tokens) < 4:
                    raise ValueError("claim line needs A B M STATUS")
                step, offset, modulus = (int(t) for t in tokens[:3])
                claims.append(CongruenceClaim(step, offset, modulus,
                                              tokens[3], " ".join(tokens[4:])))
        except (ValueError, ArithmeticError) as exc:
            raise ClaimParseError(f"{name}:{lineno}: {exc}") from None
    if not claims and not families:
        raise ClaimParseError(f"{name}: no claims found")
    return ClaimSet(name, claims, families)


def load_claim_file(path) -> ClaimSet:
    with open(path, encoding="utf-8") as handle:
        return parse_claim_lines(handle, name=str(path))
