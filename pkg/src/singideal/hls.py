"""Depth-truncated one-point-compactification groupoid over a group and a
subgroup family: one non-Hausdorff unit at infinity carrying the whole
group, and finitely many discrete levels each carrying a copy of the
coset groupoid.

Every algebraic verdict (limit sets, the dangerous-point test, lifting of
integer witnesses to functions vanishing on the dense Hausdorff part)
depends only on the coset constraints, which are level-independent, so a
small truncation depth already decides everything checkable here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groupoid import build_coset_groupoid
from .groups import FiniteGroup, SubgroupFamily, left_coset
from .ideals import check_witness

INFINITY = "inf"


class NotAWitnessError(ValueError):
    """The supplied element fails a coset-sum constraint."""


@dataclass(frozen=True)
class TruncatedHLS:
    group: FiniteGroup
    family: SubgroupFamily
    depth: int
    level_groupoids: tuple            # depth references to one immutable copy
    infinity_arrows: tuple            # (gamma, "inf") for each group element
    basic_neighborhoods: dict         # (gamma, cutoff) -> frozenset of points

    @property
    def units(self) -> tuple:
        """The unit at infinity followed by (subgroup, level) pairs."""
        out = [(0, INFINITY)]
        for level in range(1, self.depth + 1):
            out.extend((sub, level) for sub in self.family.members)
        return tuple(out)

    def basic_neighborhood(self, gamma: int, cutoff: int) -> frozenset:
        return self.basic_neighborhoods[(gamma, cutoff)]


def build_hls(group: FiniteGroup, family: SubgroupFamily, depth: int) -> TruncatedHLS:
    """Truncate the level index at ``depth``, keeping the infinity fibre exact."""
    if not family.members:
        raise ValueError("family must be non-empty")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    level = build_coset_groupoid(group, family)
    neighborhoods = {}
    for gamma in group.elements():
        translates = {left_coset(group, gamma, sub) for sub in family.members}
        for cutoff in range(1, depth + 1):
            pts = {(gamma, INFINITY)}
            for coset in translates:
                pts.update((coset, n) for n in range(cutoff, depth + 1))
            neighborhoods[(gamma, cutoff)] = frozenset(pts)
    return TruncatedHLS(
        group=group,
        family=family,
        depth=depth,
        level_groupoids=tuple([level] * depth),
        infinity_arrows=tuple((g, INFINITY) for g in group.elements()),
        basic_neighborhoods=neighborhoods,
    )


def limit_set(hls: TruncatedHLS, tail_subgroup: Sequence[int]) -> frozenset:
    """Limit set at infinity of the constant-tail unit sequence ((X, n))_n.

    Evaluated against the basic neighborhoods: (gamma, inf) is a limit
    point iff every one of its neighborhoods absorbs the tail.
    """
    sub = tuple(sorted(tail_subgroup))
    if sub not in hls.family.members:
        raise ValueError(f"{sub} is not a member of the family")
    tail_point = (sub, hls.depth)
    out = set()
    for gamma in hls.group.elements():
        if all(tail_point in hls.basic_neighborhood(gamma, cutoff)
               for cutoff in range(1, hls.depth + 1)):
            out.add((gamma, INFINITY))
    return frozenset(out)


def essential_fiber(hls: TruncatedHLS) -> SubgroupFamily:
    """Maximal limit sets of constant-tail unit sequences, as subgroups.

    For finite families every convergent unit sequence has an eventually
    constant subgroup subnet, so constant tails exhaust the fibre.
    """
    subs = set()
    for sub in hls.family.members:
        pts = limit_set(hls, sub)
        subs.add(tuple(sorted(g for g, _ in pts)))
    return SubgroupFamily(hls.group, tuple(sorted(subs, key=lambda s: (len(s), s))))


def is_extremely_dangerous(hls: TruncatedHLS) -> bool:
    """True iff the trivial subgroup is missing from the essential fibre."""
    return (0,) not in essential_fiber(hls).members


@dataclass(frozen=True)
class SingularCandidate:
    """A function on the truncation: values at infinity plus level values.

    ``level_values`` maps (coset elements, level) to rationals and is zero
    below the cutoff by construction.
    """

    hls: TruncatedHLS
    infinity_values: tuple
    level_values: dict
    cutoff: int


def singular_function_from_witness(hls: TruncatedHLS, witness, cutoff: int) -> SingularCandidate:
    """Lift an integer kernel element: value b(gamma) at (gamma, inf) and the
    coset sum of b at each level point from the cutoff on.

    For a genuine witness every level value vanishes while the infinity
    values do not, which is the finite rendering of a non-zero function
    whose zero set is dense.
    """
    coeffs = tuple(getattr(witness, "coeffs", witness))
    if len(coeffs) != hls.group.order:
        raise ValueError("witness length must equal the group order")
    if not 1 <= cutoff <= hls.depth:
        raise ValueError("cutoff must lie between 1 and the depth")
    if all(c == 0 for c in coeffs):
        raise NotAWitnessError("witness must be non-zero")
    if not check_witness(hls.group, hls.family, coeffs):
        raise NotAWitnessError("element fails a coset-sum constraint")
    level_values = {}
    gpd = hls.level_groupoids[0]
    for arrow in gpd.arrows:
        total = sum((coeffs[x] for x in arrow.payload), Fraction(0))
        for n in range(1, hls.depth + 1):
            level_values[(arrow.payload, n)] = total if n >= cutoff else Fraction(0)
    return SingularCandidate(hls, coeffs, level_values, cutoff)


def verify_singular(hls: TruncatedHLS, candidate: SingularCandidate) -> bool:
    """True iff the candidate vanishes on every level arrow (the dense
    Hausdorff part) but not at infinity."""
    if candidate.hls is not hls:
        raise ValueError("candidate lives on a different truncation")
    if any(v != 0 for v in candidate.level_values.values()):
        return False
    return any(v != 0 for v in candidate.infinity_values)


def hls_report(hls: TruncatedHLS, witness=None) -> dict:
    """JSON-ready summary: dangerous-point verdict, fibre, witness lift."""
    fiber = essential_fiber(hls)
    report = {
        "depth": hls.depth,
        "extremely_dangerous": is_extremely_dangerous(hls),
        "essential_fiber": [list(sub) for sub in fiber.members],
        "witness_lifted": False,
        "verify_singular": None,
    }
    if witness is not None:
        candidate = singular_function_from_witness(hls, witness, cutoff=1)
        report["witness_lifted"] = True
        report["verify_singular"] = verify_singular(hls, candidate)
    return report
