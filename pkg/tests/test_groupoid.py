"""Coset groupoid structure, convolution, and the coset-sum oracle."""

import random
from fractions import Fraction

import pytest

from singideal.groupoid import (GroupoidFunction, build_coset_groupoid,
                                convolve, delta, involution,
                                kernel_of_q_basis, kernel_of_q_dimension,
                                q_map, reduction_groupoid, restrict_function,
                                unit_indicator)
from singideal.groups import (conjugation_closure, cyclic, direct_product,
                              make_family, minimal_subgroups,
                              subgroup_generated, symmetric_group)
from singideal.ideals import algebraic_ideal_kernel
from singideal.exact import same_subspace
from singideal.sampling import random_coeffs, random_groupoid_function


def transposition_family(s3):
    t = next(g for g in s3.elements() if s3.element_order(g) == 2)
    return conjugation_closure(s3, [subgroup_generated(s3, (t,))])


def arrow_by_payload(gpd, payload):
    return next(a.index for a in gpd.arrows if a.payload == tuple(payload))


def test_group_case_is_the_group():
    s3 = symmetric_group(3)
    gpd = build_coset_groupoid(s3, make_family(s3, [(0,)]))
    assert len(gpd.units) == 1 and gpd.num_arrows() == 6
    # composition table is the group table up to the singleton encoding
    for a in gpd.arrows:
        for b in gpd.arrows:
            prod = gpd.compose(a.index, b.index)
            assert gpd.arrows[prod].payload == (s3.mul(a.payload[0], b.payload[0]),)


def test_whole_group_family_single_arrow():
    g6 = cyclic(6)
    gpd = build_coset_groupoid(g6, make_family(g6, [tuple(range(6))]))
    assert len(gpd.units) == 1 and gpd.num_arrows() == 1


def test_s3_coset_groupoid_shape_and_axioms():
    s3 = symmetric_group(3)
    gpd = build_coset_groupoid(s3, transposition_family(s3))
    assert len(gpd.units) == 3 and gpd.num_arrows() == 9
    gpd.check_axioms()
    # units of the groupoid are exactly the family members
    unit_payloads = {gpd.arrows[gpd.unit_arrows[u]].payload
                     for u in range(len(gpd.units))}
    assert unit_payloads == set(transposition_family(s3).members)


def test_groupoid_axiom_suite_catalog(catalog_cases):
    for group, family in catalog_cases:
        if group.order > 12:
            continue
        gpd = build_coset_groupoid(group, family)
        gpd.check_axioms()


def test_q_map_examples():
    s3 = symmetric_group(3)
    fam = transposition_family(s3)
    gpd = build_coset_groupoid(s3, fam)
    qe = q_map(s3, fam, [1, 0, 0, 0, 0, 0], gpd)
    units = set(gpd.unit_arrows)
    assert all((qe.values[i] == 1) == (i in units) for i in range(9))

    g2 = cyclic(2)
    fam2 = make_family(g2, [(0, 1)])
    qz = q_map(g2, fam2, [1, -1])
    assert qz.is_zero()

    g6 = cyclic(6)
    fam6 = make_family(g6, [(0, 3)])
    gpd6 = build_coset_groupoid(g6, fam6)
    q1 = q_map(g6, fam6, [0, 1, 0, 0, 0, 0], gpd6)
    target = arrow_by_payload(gpd6, (1, 4))
    assert q1.values[target] == 1 and sum(abs(v) for v in q1.values) == 1


def test_q_map_is_a_star_homomorphism():
    rng = random.Random(5)
    for group, family in [(symmetric_group(3), None), (cyclic(6), (0, 3))]:
        fam = transposition_family(group) if family is None else make_family(group, [family])
        gpd = build_coset_groupoid(group, fam)
        n = group.order
        for _ in range(8):
            a = random_coeffs(rng, n)
            b = random_coeffs(rng, n)
            prod = [Fraction(0)] * n
            for x in range(n):
                for y in range(n):
                    prod[group.mul(x, y)] += a[x] * b[y]
            lhs = convolve(gpd, q_map(group, fam, a, gpd), q_map(group, fam, b, gpd))
            rhs = q_map(group, fam, tuple(prod), gpd)
            assert lhs.values == rhs.values
            star = tuple(a[group.inv(g)] for g in range(n))
            assert involution(gpd, q_map(group, fam, a, gpd)).values == \
                q_map(group, fam, star, gpd).values


def test_convolution_examples():
    g6 = cyclic(6)
    fam = make_family(g6, [(0, 3)])
    gpd = build_coset_groupoid(g6, fam)
    d14 = delta(gpd, arrow_by_payload(gpd, (1, 4)))
    out = convolve(gpd, d14, d14)
    assert out.values[arrow_by_payload(gpd, (2, 5))] == 1
    assert sum(abs(v) for v in out.values) == 1
    # unit indicator is a left identity
    rng = random.Random(1)
    f = random_groupoid_function(rng, gpd)
    assert convolve(gpd, unit_indicator(gpd), f).values == f.values
    assert convolve(gpd, f, unit_indicator(gpd)).values == f.values


def test_group_case_convolution_matches_group_algebra():
    s3 = symmetric_group(3)
    fam = make_family(s3, [(0,)])
    gpd = build_coset_groupoid(s3, fam)
    pos = {g: arrow_by_payload(gpd, (g,)) for g in s3.elements()}
    rng = random.Random(9)
    for _ in range(10):
        a = random_coeffs(rng, 6)
        b = random_coeffs(rng, 6)
        prod = [Fraction(0)] * 6
        for x in range(6):
            for y in range(6):
                prod[s3.mul(x, y)] += a[x] * b[y]
        fa = GroupoidFunction(gpd, tuple(a[g] for g in range(6)))
        fb = GroupoidFunction(gpd, tuple(b[g] for g in range(6)))
        out = convolve(gpd, fa, fb)
        assert all(out.values[pos[g]] == prod[g] for g in range(6))


def test_convolve_rejects_mismatched_groupoid():
    g2 = cyclic(2)
    gpd1 = build_coset_groupoid(g2, make_family(g2, [(0, 1)]))
    gpd2 = build_coset_groupoid(g2, make_family(g2, [(0,)]))
    f1 = unit_indicator(gpd1)
    f2 = unit_indicator(gpd2)
    with pytest.raises(ValueError):
        convolve(gpd1, f1, f2)


def test_kernel_of_q_examples():
    g6 = cyclic(6)
    assert kernel_of_q_dimension(g6, make_family(g6, [(0,)])) == 0
    g2 = cyclic(2)
    assert kernel_of_q_dimension(g2, make_family(g2, [(0, 1)])) == 1
    v4 = direct_product([cyclic(2), cyclic(2)])
    assert kernel_of_q_dimension(v4, minimal_subgroups(v4)) == 0


def test_q_kernel_matches_algebraic_kernel(catalog_cases):
    for group, family in catalog_cases:
        if group.order > 12:
            continue
        qb = kernel_of_q_basis(group, family)
        ab = algebraic_ideal_kernel(group, family)
        assert same_subspace(qb, ab)


def test_reduction_groupoid():
    s3 = symmetric_group(3)
    gpd = build_coset_groupoid(s3, transposition_family(s3))
    red, kept = reduction_groupoid(gpd, [0, 1])
    red.check_axioms()
    assert len(red.units) == 2
    assert all(gpd.arrows[a].source in (0, 1) and gpd.arrows[a].range in (0, 1)
               for a in kept)
    f = unit_indicator(gpd)
    rf = restrict_function(red, kept, f)
    assert sum(rf.values) == 2
    with pytest.raises(ValueError):
        reduction_groupoid(gpd, [])


def test_groupoid_json_dump():
    g6 = cyclic(6)
    gpd = build_coset_groupoid(g6, make_family(g6, [(0, 3)]))
    dump = gpd.to_json_dict()
    assert len(dump["arrows"]) == 3
    assert dump["units"] == [[0, 3]]
    assert len(dump["compose"]) == 3 and len(dump["compose"][0]) == 3
