from fractions import Fraction as F
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from hecke_blocks.blocks_r1 import gamma_set, residue_classes
from hecke_blocks.clifford import (
    GrpnParams,
    Label,
    approx_classes,
    approx_equivalent,
    grpn_blocks,
    index_set,
    label_of,
    lift_params,
    orbit_period,
    shift,
    verify_full_period_claim,
    verify_shift_translation,
    verify_shift_translation_q1,
)
from hecke_blocks.multipartition import enumerate_multipartitions
from hecke_blocks.report import BlockReport, check_partition
from hecke_blocks.residue import HeckeParamsG1, RationalAngle, generic_params, residue_equivalent
from hecke_blocks.unionfind import UnionFind

SYMBOLIC = ("l1", "l2", "l3", "l4", "l5", "l6")


# Oracles


def conjugacy_class_count(r, p, n):
    """Classes of G(r,p,n) by brute force; elements send e_i to zeta^a_i e_sigma(i)."""
    elems = [
        (s, a)
        for s in permutations(range(n))
        for a in product(range(r), repeat=n)
        if sum(a) % p == 0
    ]

    def mul(g, h):
        (s, a), (t, b) = g, h
        return tuple(s[t[i]] for i in range(n)), tuple((b[i] + a[t[i]]) % r for i in range(n))

    def inv(g):
        s, a = g
        s_inv = [0] * n
        for i, x in enumerate(s):
            s_inv[x] = i
        return tuple(s_inv), tuple((-a[s_inv[i]]) % r for i in range(n))

    seen, classes = set(), 0
    for g in elems:
        if g in seen:
            continue
        classes += 1
        seen.update(mul(mul(x, g), inv(x)) for x in elems)
    return classes


def star_classes(n, r, p):
    """Classes of P x Z/p under (lam, j) ~ (lam[1], j) and (lam, j) ~ (lam, j + d_lam)."""
    pairs = [(mp, j) for mp in enumerate_multipartitions(n, r) for j in range(p)]
    uf = UnionFind(pairs)
    for mp, j in pairs:
        uf.union((mp, j), (shift(mp, 1, p), j))
        uf.union((mp, j), (mp, (j + orbit_period(mp, p)[1]) % p))
    return uf.classes(pairs)


# shift


def test_worked_shift_example():
    assert shift(SYMBOLIC, 1, 3) == ("l2", "l3", "l1", "l5", "l6", "l4")
    assert shift(SYMBOLIC, 2, 3) == ("l3", "l1", "l2", "l6", "l4", "l5")
    assert shift(SYMBOLIC, 3, 3) == SYMBOLIC
    assert shift(SYMBOLIC, 0, 3) == SYMBOLIC


def test_shift_rejects_bad_p():
    with pytest.raises(ValueError):
        shift(((1,), (), ()), 1, 2)


@pytest.mark.parametrize("r,p", [(2, 2), (4, 2), (4, 4), (6, 3), (3, 3), (3, 1)])
@pytest.mark.parametrize("n", range(0, 5))
def test_shift_group_law_and_period(n, r, p):
    for lam in enumerate_multipartitions(n, r):
        assert shift(lam, p, p) == lam
        for i in range(-p, p + 1):
            assert shift(lam, i + p, p) == shift(lam, i, p)
            for j in range(p):
                assert shift(shift(lam, i, p), j, p) == shift(lam, i + j, p)
        period, d_lam = orbit_period(lam, p)
        assert p % period == 0 and period * d_lam == p
        assert all(shift(lam, m, p) != lam for m in range(1, period))
        assert shift(lam, 2 * period + 1, p) == shift(lam, 1, p)


def test_orbit_period_examples():
    assert orbit_period(((1,), (1,), (1,)), 3) == (1, 3)
    assert orbit_period(((1,), ()), 2) == (2, 1)
    assert orbit_period(((1,), (1,)), 2) == (1, 2)
    assert orbit_period(((1,), (), (1,), ()), 2) == (2, 1)


# index_set


def test_index_set_examples():
    assert len(index_set(1, 2, 2)) == 1
    labels = index_set(2, 2, 2)
    assert len(labels) == 4
    assert [(l.rep, l.j, l.period) for l in labels] == [
        (((2,), ()), 0, 2),
        (((1, 1), ()), 0, 2),
        (((1,), (1,)), 0, 1),
        (((1,), (1,)), 1, 1),
    ]
    assert [l.rep for l in index_set(3, 2, 1)] == list(enumerate_multipartitions(3, 2))
    assert all(l.j == 0 for l in index_set(3, 2, 1))


def test_index_set_n0_is_single_label():
    for r, p in [(2, 2), (4, 2), (4, 4), (3, 1)]:
        assert index_set(0, r, p) == [Label(((),) * r, 0, 1, 1)]
        assert len(index_set(0, r, p)) == conjugacy_class_count(r, p, 0)


@pytest.mark.parametrize("r,p", [(2, 1), (2, 2), (3, 3), (4, 2), (4, 4), (6, 3), (6, 2)])
@pytest.mark.parametrize("n", range(1, 4))
def test_index_set_matches_star_classes(n, r, p):
    labels = index_set(n, r, p)
    classes = star_classes(n, r, p)
    assert len(labels) == len(classes)
    canon = {label_of(mp, j, p) for cls in classes for mp, j in cls}
    assert canon == set(labels)
    for cls in classes:
        assert len({label_of(mp, j, p) for mp, j in cls}) == 1
    orbit_sum = sum(p // l.period for l in labels if l.j == 0)
    assert orbit_sum == len(labels)


@pytest.mark.parametrize(
    "r,p,n",
    [(1, 1, 3), (2, 2, 1), (2, 2, 2), (2, 2, 3), (2, 1, 2), (3, 3, 2), (4, 2, 2), (4, 4, 2), (3, 3, 3), (4, 2, 3)],
)
def test_label_count_equals_conjugacy_classes(r, p, n):
    assert len(index_set(n, r, p)) == conjugacy_class_count(r, p, n)


# lift_params


def test_lift_examples():
    lifted = lift_params(GrpnParams(2, 2, 2, F(1, 2)))
    assert lifted.k == (F(0),)
    assert [str(a) for a in lifted.Q_angles] == ["0/1", "1/2"]

    lifted = lift_params(GrpnParams(2, 6, 3, F(1, 4), (F(1, 5),)))
    expected = [RationalAngle(F(j, 3)) for j in range(3)] + [RationalAngle(F(1, 5) + F(1, 2) + F(j, 3)) for j in range(3)]
    assert list(lifted.Q_angles) == expected

    gp = GrpnParams(2, 3, 1, F(1, 4), (F(1, 5), F(2, 7)))
    assert lift_params(gp) == HeckeParamsG1(3, F(1, 4), (F(1, 5), F(2, 7)))


@pytest.mark.parametrize("r,p", [(2, 2), (4, 2), (6, 3), (6, 2), (8, 4), (3, 1)])
def test_lift_root_multiset(r, p):
    d = r // p
    gp = GrpnParams(1, r, p, F(1, 7), tuple(F(c, 11) for c in range(1, d)))
    lifted = lift_params(gp)
    assert sorted(lifted.Q_angles) == sorted(gp.x_angle(c) + F(j, p) for c in range(d) for j in range(p))
    powers = sorted(p * a for a in lifted.Q_angles)
    assert powers == sorted(p * gp.x_angle(c) for c in range(d) for _ in range(p))


def test_grpn_param_validation():
    with pytest.raises(ValueError):
        GrpnParams(2, 3, 2, F(1, 2))
    with pytest.raises(ValueError):
        GrpnParams(2, 4, 2, F(1, 2))  # needs one k
    assert GrpnParams(2, 4, 2, "1/2", ("1/3",)).k == (F(1, 3),)


# approx_equivalent


def test_approx_examples():
    gp = GrpnParams(2, 2, 2, F(1, 2))
    lam = ((2,), ())
    assert approx_equivalent(lam, lam, gp)
    assert approx_equivalent(lam, shift(lam, 1, 2), gp)
    assert approx_equivalent(((2,), ()), ((), (2,)), gp)


SWEEP = [
    GrpnParams(0, 2, 2, F(1, 2)),
    GrpnParams(0, 4, 2, F(1, 3), (F(1, 6),)),
    GrpnParams(0, 2, 2, F(1, 3)),
    GrpnParams(0, 2, 2, 0),
    GrpnParams(0, 4, 2, F(1, 2), (0,)),
    GrpnParams(0, 4, 2, 0, (0,)),
    GrpnParams(0, 4, 4, F(1, 2)),
    GrpnParams(0, 3, 3, F(1, 3)),
    GrpnParams(0, 2, 1, F(1, 2), (0,)),
]


def _at(gp, n):
    return GrpnParams(n, gp.r, gp.p, gp.h, gp.k)


@pytest.mark.parametrize("gp", SWEEP, ids=str)
@pytest.mark.parametrize("n", range(0, 4))
def test_approx_is_equivalence_and_matches_classes(gp, n):
    gp = _at(gp, n)
    mps = enumerate_multipartitions(n, gp.r)
    rel = {(a, b): approx_equivalent(a, b, gp) for a in mps for b in mps}
    for a in mps:
        assert rel[a, a]
        for j in range(gp.p):
            assert rel[a, shift(a, j, gp.p)]
        for b in mps:
            assert rel[a, b] == rel[b, a]
            if rel[a, b]:
                assert all(rel[a, c] for c in mps if rel[b, c])
    classes = approx_classes(gp)
    index = {mp: i for i, c in enumerate(classes) for mp in c}
    for (a, b), value in rel.items():
        assert value == (index[a] == index[b])


@pytest.mark.parametrize("gp", SWEEP, ids=str)
@pytest.mark.parametrize("n", range(0, 5))
def test_gamma_shift_stable_and_shift_compatible(gp, n):
    gp = _at(gp, n)
    lifted = lift_params(gp)
    gamma = gamma_set(n, gp.r, lifted)
    mps = enumerate_multipartitions(n, gp.r)
    for lam in gamma:
        assert all(shift(lam, i, gp.p) in gamma for i in range(gp.p))
    if n <= 3:
        for a in mps:
            for b in mps:
                same = residue_equivalent(a, b, lifted)
                for i in range(gp.p):
                    assert residue_equivalent(shift(a, i, gp.p), shift(b, i, gp.p), lifted) == same


# grpn_blocks


def test_grpn_block_examples():
    report = grpn_blocks(GrpnParams(2, 2, 2, F(1, 2)))
    assert len(report.classes) == 1 and len(report.classes[0]) == 4
    generic = GrpnParams(2, 2, 2, generic_params(2, 2).h)
    report = grpn_blocks(generic)
    assert len(report.classes) == 4 and all(len(b) == 1 for b in report.classes)
    assert len(grpn_blocks(GrpnParams(0, 4, 2, F(1, 2), (0,))).classes) == 1


def _grpn_structure(gp):
    report = grpn_blocks(gp)
    labels = index_set(gp.n, gp.r, gp.p)
    check_partition(report.classes, labels)
    lifted = lift_params(gp)
    gamma = gamma_set(gp.n, gp.r, lifted)
    classes = approx_classes(gp, residue_classes(gp.n, gp.r, lifted).classes)
    for block in report.classes:
        reps = {l.rep for l in block}
        if any(rep in gamma for rep in reps):
            assert len(block) == 1
        else:
            [cls] = [c for c in classes if reps <= set(c)]
            expected = {l for l in labels if l.rep in cls}
            assert set(block) == expected
    return report


@pytest.mark.parametrize("gp", SWEEP, ids=str)
@pytest.mark.parametrize("n", range(0, 5))
def test_grpn_block_structure(gp, n):
    _grpn_structure(_at(gp, n))


@pytest.mark.parametrize("params", [HeckeParamsG1(2, F(1, 2), (0,)), HeckeParamsG1(3, F(1, 3), (F(1, 6), 0)), HeckeParamsG1(2, 0, (F(1, 2),))], ids=str)
@pytest.mark.parametrize("n", range(0, 5))
def test_p1_reduces_to_residue_classes(params, n):
    gp = GrpnParams(n, params.r, 1, params.h, params.k)
    report = grpn_blocks(gp)
    assert [[l.rep for l in b] for b in report.classes] == residue_classes(n, params.r, params).classes
    assert all(l.j == 0 and l.period == 1 for l in report.labels())


def test_gamma_orbit_with_several_labels_splits():
    # ((1),(1)) is shift-fixed, so it carries labels <0> and <1>; under generic
    # parameters each is its own block.
    gp = GrpnParams(2, 2, 2, F(1, 11))
    report = grpn_blocks(gp)
    assert [Label(((1,), (1,)), 0, 1, 2)] in report.classes
    assert [Label(((1,), (1,)), 1, 1, 2)] in report.classes


def test_grpn_json_round_trip():
    report = grpn_blocks(GrpnParams(3, 4, 2, F(1, 2), (F(1, 3),)))
    text = report.to_json()
    again = BlockReport.from_json(text)
    assert again.to_json() == text
    assert again.classes == report.classes
    data = report.to_dict()
    assert data["p"] == 2 and data["d"] == 2
    assert set(data["blocks"][0][0]) == {"rep", "j", "period"}


# verification helpers


def test_shift_translation_examples():
    gp = GrpnParams(2, 2, 2, F(1, 2))
    rep = verify_shift_translation(2, gp)
    assert rep.passed and rep.checked == 5 * 2
    with pytest.raises(ValueError):
        verify_shift_translation(2, GrpnParams(2, 2, 2, 0))
    with pytest.raises(ValueError):
        verify_shift_translation_q1(2, gp)
    assert verify_shift_translation_q1(3, GrpnParams(3, 4, 2, 0, (0,))).passed


def test_full_period_claim_examples():
    rep = verify_full_period_claim(2, GrpnParams(2, 2, 2, F(1, 2)))
    assert rep.passed and rep.checked == 1
    rep = verify_full_period_claim(3, GrpnParams(3, 3, 3, F(1, 13)))
    assert rep.passed and rep.checked == 0


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([(2, 2), (4, 2), (4, 4), (3, 3), (6, 3)]),
    st.integers(0, 3),
    st.fractions(min_value=0, max_value=1, max_denominator=8),
    st.lists(st.fractions(min_value=0, max_value=1, max_denominator=8), min_size=2, max_size=2),
)
def test_translation_and_claim_random(rp, n, h, ks):
    r, p = rp
    gp = GrpnParams(n, r, p, h, tuple(ks[: r // p - 1]))
    check = verify_shift_translation if lift_params(gp).regime == "circle" else verify_shift_translation_q1
    assert check(n, gp).passed
    assert verify_full_period_claim(n, gp).passed
