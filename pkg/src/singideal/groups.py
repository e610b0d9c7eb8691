"""Finite groups as Cayley tables, subgroup machinery, conjugation, cosets.

Elements are integers 0..order-1 with the identity fixed at index 0.
Constructors define canonical element orderings (cyclic: residues,
products: mixed radix with the leftmost factor most significant,
symmetric: lexicographic permutations) so that kernels, witnesses and
reports downstream are reproducible byte for byte.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 5040
DEFAULT_LATTICE_CAP = 48

# exhaustive associativity validation is O(n^3); generated tables are
# correct by construction, so only explicit tables pay above this size
_ASSOC_CHECK_CAP = 512


class GroupTableError(ValueError):
    """A supplied Cayley table violates a group axiom."""


class SizeCapError(ValueError):
    """A requested construction or enumeration exceeds its size cap."""


class FamilyNotInvariantError(ValueError):
    """A subgroup family is not conjugation invariant and auto-closure is off."""


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``table[a, b]`` is the index of the product a*b, the identity is
    index 0 and ``inverse[a]`` is the index of a^-1.
    """

    __slots__ = ("order", "table", "inverse", "name")

    def __init__(self, table, name: str = "G", check_associativity: Optional[bool] = None):
        table = np.ascontiguousarray(np.asarray(table, dtype=np.int32))
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise GroupTableError("Cayley table must be square")
        n = int(table.shape[0])
        if n == 0:
            raise GroupTableError("empty Cayley table")
        if table.min() < 0 or table.max() >= n:
            raise GroupTableError("table entries out of range")
        idx = np.arange(n, dtype=np.int32)
        if not np.array_equal(table[0], idx) or not np.array_equal(table[:, 0], idx):
            raise GroupTableError("index 0 is not a two-sided identity")
        # Latin square: every row and column is a permutation
        if not (np.array_equal(np.sort(table, axis=1), np.tile(idx, (n, 1)))
                and np.array_equal(np.sort(table, axis=0), np.tile(idx[:, None], (1, n)))):
            raise GroupTableError("table rows/columns are not permutations")
        inv = np.empty(n, dtype=np.int32)
        for a in range(n):
            hits = np.nonzero(table[a] == 0)[0]
            inv[a] = hits[0]
            if table[inv[a], a] != 0:
                raise GroupTableError(f"element {a} has no two-sided inverse")
        if check_associativity is None:
            check_associativity = n <= _ASSOC_CHECK_CAP
        if check_associativity:
            for a in range(n):
                if not np.array_equal(table[table[a]], table[a][table]):
                    raise GroupTableError(f"associativity fails involving element {a}")
        table.setflags(write=False)
        inv.setflags(write=False)
        self.order = n
        self.table = table
        self.inverse = inv
        self.name = name

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = int(self.table[x, g])
            k += 1
        return k

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


# ---------------------------------------------------------------------------
# constructors

def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic order must be >= 1")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, name=f"C{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on lexicographically ordered permutation tuples; (p*q)(i) = p[q[i]]."""
    if not 1 <= n <= 5:
        raise ValueError("symmetric groups are supported for 1 <= n <= 5")
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return FiniteGroup(table, name=f"S{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; element f*n + k encodes flip^f rot^k."""
    if n < 1:
        raise ValueError("dihedral parameter must be >= 1")

    def mul(a, b):
        k1, f1 = a % n, a // n
        k2, f2 = b % n, b // n
        k = (k1 - k2) % n if f1 else (k1 + k2) % n
        return (f1 ^ f2) * n + k

    table = [[mul(a, b) for b in range(2 * n)] for a in range(2 * n)]
    return FiniteGroup(table, name=f"D{n}")


_Q8_AXIS = ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))
_Q8_SIGN = ((0, 0, 0, 0), (0, 1, 0, 1), (0, 1, 1, 0), (0, 0, 1, 1))


def quaternion_group() -> FiniteGroup:
    """Q8 with element 2*axis + sign over the ordered basis 1, i, j, k."""

    def mul(a, b):
        s1, x1 = a & 1, a >> 1
        s2, x2 = b & 1, b >> 1
        # sign rule: i*j = k, j*k = i, k*i = j, squares of i,j,k are -1
        sign_flip = _Q8_SIGN[x1][x2] if x1 and x2 else 0
        return 2 * _Q8_AXIS[x1][x2] + (s1 ^ s2 ^ sign_flip)

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    return FiniteGroup(table, name="Q8")


def direct_product(factors: Sequence[FiniteGroup], max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Direct product with mixed-radix element indexing, leftmost factor most significant."""
    if not factors:
        return cyclic(1)
    order = 1
    for g in factors:
        order *= g.order
    if order > max_order:
        raise SizeCapError(f"product order {order} exceeds cap {max_order}")
    table = np.zeros((1, 1), dtype=np.int64)
    for g in factors:
        m = g.order
        # index (a, x) -> a*m + x
        table = (table[:, None, :, None] * m + np.asarray(g.table, dtype=np.int64)[None, :, None, :])
        table = table.reshape(table.shape[0] * m, table.shape[2] * m)
    name = " x ".join(g.name for g in factors)
    return FiniteGroup(table, name=name)


def cayley_group(table, name: str = "cayley", max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    table = np.asarray(table)
    if table.ndim != 2 or table.shape[0] > max_order:
        raise SizeCapError(f"explicit table order exceeds cap {max_order}")
    return FiniteGroup(table, name=f"{name}[{table.shape[0]}]", check_associativity=True)


def make_group(spec: dict, max_order: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from a JSON-style specification dict.

    Supported kinds: {"kind": "cyclic", "n": 6}, {"kind": "product",
    "factors": [...]}, {"kind": "symmetric", "n": 4}, {"kind":
    "dihedral", "n": 5}, {"kind": "quaternion8"}, {"kind": "cayley",
    "table": [[...]]}.
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ValueError("group spec must be a dict with a 'kind' key")
    kind = spec["kind"]
    if kind == "cyclic":
        n = int(spec["n"])
        if n > max_order:
            raise SizeCapError(f"order {n} exceeds cap {max_order}")
        return cyclic(n)
    if kind == "product":
        factors = [make_group(f, max_order=max_order) for f in spec["factors"]]
        return direct_product(factors, max_order=max_order)
    if kind == "symmetric":
        return symmetric_group(int(spec["n"]))
    if kind == "dihedral":
        n = int(spec["n"])
        if 2 * n > max_order:
            raise SizeCapError(f"order {2 * n} exceeds cap {max_order}")
        return dihedral(n)
    if kind == "quaternion8":
        return quaternion_group()
    if kind == "cayley":
        return cayley_group(spec["table"], max_order=max_order)
    raise ValueError(f"unknown group kind {kind!r}")


# ---------------------------------------------------------------------------
# subgroups

def subgroup_generated(group: FiniteGroup, gens: Iterable[int]) -> tuple:
    """Smallest subgroup containing ``gens``, as a sorted index tuple."""
    gens = sorted(set(gens))
    for g in gens:
        if not 0 <= g < group.order:
            raise IndexError(f"generator {g} out of range for order {group.order}")
    elems = {0, *gens}
    gen_set = sorted(elems)
    frontier = list(elems)
    table = group.table
    while frontier:
        new = []
        for b in frontier:
            for a in gen_set:
                c = int(table[a, b])
                if c not in elems:
                    elems.add(c)
                    new.append(c)
        frontier = new
    return tuple(sorted(elems))


def is_subgroup(group: FiniteGroup, elems: Sequence[int]) -> bool:
    s = set(elems)
    if 0 not in s:
        return False
    return all(group.mul(a, b) in s for a in s for b in s)


def enumerate_subgroups(group: FiniteGroup, max_order: int = DEFAULT_LATTICE_CAP) -> list:
    """All subgroups, each once, sorted by size then lexicographically."""
    if group.order > max_order:
        raise SizeCapError(
            f"subgroup enumeration capped at order {max_order}; got {group.order}")
    found = {(0,)}
    frontier = [(0,)]
    while frontier:
        new = []
        for sub in frontier:
            have = set(sub)
            for g in range(1, group.order):
                if g in have:
                    continue
                bigger = subgroup_generated(group, sub + (g,))
                if bigger not in found:
                    found.add(bigger)
                    new.append(bigger)
        frontier = new
    return sorted(found, key=lambda s: (len(s), s))


def conjugate_subgroup(group: FiniteGroup, g: int, sub: Sequence[int]) -> tuple:
    return tuple(sorted(group.conjugate(g, x) for x in sub))


@dataclass(frozen=True)
class SubgroupFamily:
    """A conjugation-invariant set of subgroups in canonical sorted form."""

    group: FiniteGroup
    members: tuple

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, sub) -> bool:
        return tuple(sub) in self.members


def _canonical_members(subs: Iterable[Sequence[int]]) -> tuple:
    return tuple(sorted({tuple(sorted(s)) for s in subs}, key=lambda s: (len(s), s)))


def make_family(group: FiniteGroup, subgroups: Iterable[Sequence[int]],
                auto_close: bool = True) -> SubgroupFamily:
    """Canonicalize a set of subgroups into a conjugation-invariant family.

    Families that are not invariant are closed under conjugation with a
    warning unless ``auto_close`` is False, in which case they are rejected.
    """
    members = _canonical_members(subgroups)
    for sub in members:
        if not is_subgroup(group, sub):
            raise ValueError(f"{sub} is not a subgroup")
    closed = _canonical_members(
        conjugate_subgroup(group, g, sub) for sub in members for g in group.elements())
    if closed != members:
        if not auto_close:
            raise FamilyNotInvariantError(
                "subgroup family is not conjugation invariant")
        warnings.warn("subgroup family was not conjugation invariant; "
                      "closed it under conjugation", stacklevel=2)
        members = closed
    return SubgroupFamily(group, members)


def conjugation_closure(group: FiniteGroup, seeds: Iterable[Sequence[int]]) -> SubgroupFamily:
    """Smallest conjugation-invariant family containing the seed subgroups."""
    seeds = [tuple(sorted(s)) for s in seeds]
    for sub in seeds:
        if not is_subgroup(group, sub):
            raise ValueError(f"{sub} is not a subgroup")
    members = _canonical_members(
        conjugate_subgroup(group, g, sub) for sub in seeds for g in group.elements())
    return SubgroupFamily(group, members)


def minimal_subgroups(group: FiniteGroup) -> SubgroupFamily:
    """The cyclic subgroups of prime order, as an invariant family."""
    members = set()
    for g in range(1, group.order):
        if _is_prime(group.element_order(g)):
            members.add(subgroup_generated(group, (g,)))
    return SubgroupFamily(group, _canonical_members(members))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def normal_closure_subgroup(group: FiniteGroup, family: SubgroupFamily) -> tuple:
    """Subgroup generated by all members and their conjugates; normal in the group."""
    if not family.members:
        raise ValueError("family must be non-empty")
    gens = set()
    for sub in family.members:
        gens.update(sub)
        for g in group.elements():
            gens.update(conjugate_subgroup(group, g, sub))
    return subgroup_generated(group, gens)


# ---------------------------------------------------------------------------
# cosets

class Coset(NamedTuple):
    elements: tuple
    representative: int
    subgroup: tuple


def left_coset(group: FiniteGroup, g: int, sub: Sequence[int]) -> tuple:
    return tuple(sorted(int(group.table[g, x]) for x in sub))


def cosets_of_subgroup(group: FiniteGroup, sub: Sequence[int]) -> list:
    """Left cosets of one subgroup, ordered by smallest representative."""
    sub = tuple(sorted(sub))
    seen = set()
    out = []
    for g in group.elements():
        elems = left_coset(group, g, sub)
        if elems not in seen:
            seen.add(elems)
            out.append(Coset(elems, elems[0], sub))
    return out


def distinct_cosets(group: FiniteGroup, family: SubgroupFamily) -> list:
    """All left cosets g*X over the family, deduplicated.

    Cosets of distinct subgroups are distinct as sets, so the result is
    ordered by family member (size then lexicographic) and, within a
    member, by smallest representative.
    """
    if not family.members:
        raise ValueError("family must be non-empty")
    out = []
    for sub in family.members:
        out.extend(cosets_of_subgroup(group, sub))
    return out


def subgroup_as_group(group: FiniteGroup, sub: Sequence[int]) -> FiniteGroup:
    """The subgroup as a standalone group, re-indexed in sorted element order."""
    sub = tuple(sorted(sub))
    if not is_subgroup(group, sub):
        raise ValueError(f"{sub} is not a subgroup")
    pos = {x: i for i, x in enumerate(sub)}
    table = [[pos[group.mul(a, b)] for b in sub] for a in sub]
    return FiniteGroup(table, name=f"{group.name}|{list(sub)}")


def restrict_family(group: FiniteGroup, sub: Sequence[int],
                    family: SubgroupFamily) -> SubgroupFamily:
    """The family of intersections with a subgroup, re-indexed inside it."""
    sub = tuple(sorted(sub))
    inner = subgroup_as_group(group, sub)
    pos = {x: i for i, x in enumerate(sub)}
    sub_set = set(sub)
    members = {tuple(sorted(pos[x] for x in sub_set & set(m))) for m in family.members}
    return SubgroupFamily(inner, _canonical_members(members))


def parse_family(group: FiniteGroup, spec: dict, auto_close: bool = True) -> SubgroupFamily:
    """Build a family from a JSON-style spec.

    Supported forms: {"subgroups": [[0,3], ...]}, {"minimal": true},
    {"conjugacy_class_of": [0,3]}.
    """
    if not isinstance(spec, dict):
        raise ValueError("family spec must be a dict")
    if spec.get("minimal"):
        return minimal_subgroups(group)
    if "conjugacy_class_of" in spec:
        seed = tuple(sorted(int(x) for x in spec["conjugacy_class_of"]))
        if not is_subgroup(group, seed):
            raise ValueError(f"{seed} is not a subgroup")
        return conjugation_closure(group, [seed])
    if "subgroups" in spec:
        subs = [tuple(int(x) for x in s) for s in spec["subgroups"]]
        return make_family(group, subs, auto_close=auto_close)
    raise ValueError("family spec needs 'subgroups', 'minimal' or 'conjugacy_class_of'")
