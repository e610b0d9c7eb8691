"""Shared catalog of groups and subgroup families used across the suite."""

from __future__ import annotations

import numpy as np
import pytest

from singideal.groups import (FiniteGroup, conjugation_closure,
                              cyclic, dihedral, direct_product,
                              enumerate_subgroups, quaternion_group,
                              symmetric_group)


@pytest.fixture(scope="session", autouse=True)
def warm_jit_kernels():
    """Compile the jitted kernels up front so runtime budgets measure the
    algorithms, not a first-call JIT."""
    from singideal import _kernels
    _kernels.gram_power_iteration(np.eye(2), 1e-10, 10)
    _kernels.rank_mod_p(np.eye(2, dtype=np.int64), _kernels.CERT_PRIME)


def build_catalog():
    groups = [cyclic(n) for n in range(1, 13)]
    groups += [
        direct_product([cyclic(2), cyclic(2)]),
        direct_product([cyclic(2), cyclic(2), cyclic(2)]),
        direct_product([cyclic(2), cyclic(4)]),
        symmetric_group(3),
        symmetric_group(4),
        dihedral(4),
        dihedral(5),
        quaternion_group(),
    ]
    return groups


def conjugacy_class_families(group: FiniteGroup):
    """One conjugation-invariant family per conjugacy class of subgroups."""
    families = {}
    for sub in enumerate_subgroups(group):
        fam = conjugation_closure(group, [sub])
        families[fam.members] = fam
    return [families[k] for k in sorted(families)]


@pytest.fixture(scope="session")
def catalog():
    return build_catalog()


@pytest.fixture(scope="session")
def catalog_cases(catalog):
    """Every (group, single-conjugacy-class family) pair in the catalog."""
    cases = []
    for group in catalog:
        for fam in conjugacy_class_families(group):
            cases.append((group, fam))
    return cases
