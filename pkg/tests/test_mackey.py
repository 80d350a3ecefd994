"""Mackey functors: constructors, axioms, filtrations, sub/quotients.

Corrupted-functor tests rebuild a preset with one map replaced and
expect the axiom report to localize the failure.  Filtration tests pit
the implementation against hand-computed kernels and closures on C2,
then assert the order-theoretic properties on larger groups.
"""

import pytest

from slicekit.abelian import (
    AbHom,
    cyclic_group,
    free_group,
    subgroup_generated,
)
from slicekit.errors import DomainError
from slicekit.mackey import (
    MackeyFunctor,
    SubMackey,
    burnside_mackey,
    check_mackey_axioms,
    constant_mackey,
    fixed_point_mackey,
    full_submackey,
    hill_filtration,
    inflate_mackey,
    mackey_preset,
    order_generated_filtration,
    quotient_mackey,
    reg_coh,
    regular_action_mackey,
    restrict_mackey,
    sign_action_mackey,
    sub_as_mackey,
    sub_mackey_generated,
    zero_submackey,
)
from slicekit.groups import quotient_group, subgroup_lattice

E_ID = "0.1"       # trivial subgroup of the degree-2 model of C2
C2_ID = "0.1-1.0"  # the whole group


# ---------------------------------------------------------------------------
# constructors

def test_burnside_trivial_group(groups):
    M = burnside_mackey(groups["trivial"])
    only = next(iter(M.levels))
    assert M.levels[only].invariant_factors() == (1, ())


def test_burnside_c2_maps(groups):
    M = burnside_mackey(groups["C2"])
    assert M.levels[E_ID].invariant_factors() == (1, ())
    assert M.levels[C2_ID].invariant_factors() == (2, ())
    # basis at level C2 is ([C2/e], [C2/C2]); restriction counts points
    assert M.res_map(C2_ID, E_ID).matrix == ((2, 1),)
    # transfer is induction: [e/e] -> [C2/e]
    assert M.tr_map(C2_ID, E_ID).matrix == ((1,), (0,))


def test_burnside_s3_level_rank(groups, lattices):
    M = burnside_mackey(groups["S3"])
    top = lattices["S3"].subgroups[-1]
    assert M.levels[top.id].invariant_factors() == (4, ())


def test_constant_mackey_maps(groups):
    G = groups["C2"]
    M = constant_mackey(G, free_group(1))
    assert M.res_map(C2_ID, E_ID).matrix == ((1,),)
    assert M.tr_map(C2_ID, E_ID).matrix == ((2,),)
    M2 = constant_mackey(G, cyclic_group(2))
    assert M2.tr_map(C2_ID, E_ID).is_zero()


def test_constant_double_coset_value(groups):
    # res o tr at H=C2, J=K=e equals multiplication by 2
    M = constant_mackey(groups["C2"], free_group(1))
    comp = M.res_map(C2_ID, E_ID) @ M.tr_map(C2_ID, E_ID)
    assert comp.matrix == ((2,),)


def test_fixed_point_trivial_action_is_constant(groups):
    for name in ("C2", "S3"):
        G = groups[name]
        M = fixed_point_mackey(G, [((1,),) for _ in G.generators], dim=1)
        C = constant_mackey(G, free_group(1))
        assert set(M.levels) == set(C.levels)
        for key in M.res:
            assert M.res[key].matrix == C.res[key].matrix
            assert M.tr[key].matrix == C.tr[key].matrix


def test_fixed_point_sign_action(groups):
    M = sign_action_mackey(groups["C2"])
    assert M.levels[E_ID].invariant_factors() == (1, ())
    assert M.levels[C2_ID].invariant_factors() == (0, ())


def test_fixed_point_regular_action(groups):
    M = regular_action_mackey(groups["C2"])
    assert M.levels[C2_ID].invariant_factors() == (1, ())
    # the norm generator restricts to the all-ones vector
    assert M.res_map(C2_ID, E_ID).matrix == ((1,), (1,))


def test_fixed_point_rejects_non_action(groups):
    with pytest.raises(DomainError):
        fixed_point_mackey(groups["C2"], [((2,),)])
    with pytest.raises(DomainError):
        fixed_point_mackey(groups["C2"], [])
    with pytest.raises(DomainError):
        fixed_point_mackey(groups["C2"], [((1, 0),)])


# ---------------------------------------------------------------------------
# axiom checking

def test_axioms_pass_on_constructors(groups):
    for name in ("trivial", "C2", "C3", "V4", "S3"):
        G = groups[name]
        assert check_mackey_axioms(burnside_mackey(G)).passed
        assert check_mackey_axioms(constant_mackey(G, free_group(1))).passed
    assert str(check_mackey_axioms(burnside_mackey(groups["C2"]))) == "PASS"


def test_axioms_detect_corrupted_transfer(groups):
    M = constant_mackey(groups["C2"], free_group(1))
    tr = dict(M.tr)
    tr[(C2_ID, E_ID)] = AbHom(M.levels[E_ID], M.levels[C2_ID], ((1,),),
                              _checked=True)
    bad = MackeyFunctor(M.group, M.levels, M.res, tr, M.conj)
    report = check_mackey_axioms(bad)
    assert not report.passed
    text = str(report)
    assert "double coset" in text
    assert "H=G" in text and "J=1" in text and "K=1" in text


def test_axioms_detect_corrupted_restriction(groups):
    M = burnside_mackey(groups["C2"])
    res = dict(M.res)
    res[(C2_ID, E_ID)] = AbHom(M.levels[C2_ID], M.levels[E_ID], ((1, 1),),
                               _checked=True)
    bad = MackeyFunctor(M.group, M.levels, res, M.tr, M.conj)
    assert not check_mackey_axioms(bad).passed


def test_hand_built_geometric_functor_passes(geometric_c2):
    assert check_mackey_axioms(geometric_c2).passed


# ---------------------------------------------------------------------------
# sub functors and generation

def test_sub_mackey_generated_empty_is_zero(groups, functors):
    M = functors[("C2", "burnside")]
    S = sub_mackey_generated(M, [])
    assert S.is_zero()


def test_sub_mackey_generated_constant_example(groups):
    M = constant_mackey(groups["C2"], free_group(1))
    S = sub_mackey_generated(M, [M.element(E_ID, (1,))])
    assert S.levels[E_ID].is_full()
    want = subgroup_generated(M.levels[C2_ID], [(2,)])
    assert S.levels[C2_ID].same_subgroup(want)


def test_sub_mackey_generated_burnside_example(groups, functors):
    M = functors[("C2", "burnside")]
    S = sub_mackey_generated(M, [M.element(E_ID, (1,))])
    want = subgroup_generated(M.levels[C2_ID], [(1, 0)])
    assert S.levels[C2_ID].same_subgroup(want)


def test_sub_mackey_closure_detection(groups, functors):
    M = functors[("C2", "burnside")]
    # level C2 generated by [C2/C2] alone is not closed under res
    bad = SubMackey(M, {
        E_ID: subgroup_generated(M.levels[E_ID], []),
        C2_ID: subgroup_generated(M.levels[C2_ID], [(0, 1)]),
    })
    violations = bad.closure_violations()
    assert violations and any("res" in v for v in violations)
    assert not bad.is_closed()


def test_sub_mackey_contains_and_equals(groups, functors):
    M = functors[("C2", "burnside")]
    full = full_submackey(M)
    zero = zero_submackey(M)
    mid = hill_filtration(M, 2)
    assert full.contains(mid) and mid.contains(zero)
    assert not zero.contains(mid)
    assert mid.equals(hill_filtration(M, 2))


# ---------------------------------------------------------------------------
# quotients

def test_quotient_extremes(groups, functors):
    M = functors[("C2", "burnside")]
    Q = quotient_mackey(M, zero_submackey(M), verify=True)
    for hid in M.levels:
        assert Q.levels[hid].invariant_factors() == M.levels[hid].invariant_factors()
    Z = quotient_mackey(M, full_submackey(M), verify=True)
    assert Z.is_zero()


def test_quotient_burnside_by_hill(groups, functors):
    M = functors[("C2", "burnside")]
    Q = quotient_mackey(M, hill_filtration(M, 2), verify=True)
    assert Q.levels[E_ID].invariant_factors() == (1, ())
    assert Q.levels[C2_ID].invariant_factors() == (1, ())


def test_quotient_rejects_unclosed(groups, functors):
    M = functors[("C2", "burnside")]
    bad = SubMackey(M, {
        E_ID: subgroup_generated(M.levels[E_ID], []),
        C2_ID: subgroup_generated(M.levels[C2_ID], [(0, 1)]),
    })
    with pytest.raises(DomainError):
        quotient_mackey(M, bad)


def test_sub_as_mackey_roundtrip(groups, functors):
    M = functors[("C2", "burnside")]
    S = hill_filtration(M, 2)
    N = sub_as_mackey(S)
    assert check_mackey_axioms(N).passed
    assert N.levels[E_ID].is_zero()
    assert N.levels[C2_ID].invariant_factors() == (1, ())


# ---------------------------------------------------------------------------
# filtrations

def test_hill_extremes(functors):
    for key in (("C2", "burnside"), ("S3", "constant-Z"), ("V4", "fixed-sign")):
        M = functors[key]
        n = M.group.order
        assert hill_filtration(M, 1).is_full()
        assert hill_filtration(M, 0).is_full()
        assert hill_filtration(M, n + 1).is_zero()
        assert hill_filtration(M, n + 5).is_zero()


def test_hill_burnside_c2_kernel(functors):
    M = functors[("C2", "burnside")]
    F2 = hill_filtration(M, 2)
    assert F2.levels[E_ID].is_zero()
    want = subgroup_generated(M.levels[C2_ID], [(1, -2)])
    assert F2.levels[C2_ID].same_subgroup(want)


def test_hill_constant_z_vanishes_above_one(functors):
    M = functors[("C2", "constant-Z")]
    assert hill_filtration(M, 2).is_zero()


def test_hill_nesting_vanishing_closure(functors):
    for key in (("C4", "burnside"), ("S3", "fixed-regular"),
                ("V4", "constant-Z2")):
        M = functors[key]
        lat = M.lattice
        prev = hill_filtration(M, 1)
        for k in range(2, M.group.order + 2):
            cur = hill_filtration(M, k)
            assert prev.contains(cur)
            assert cur.is_closed()
            for H in lat.subgroups:
                if H.order < k:
                    assert cur.levels[H.id].is_zero()
            prev = cur


def test_hill_vanishing_hypothesis_gives_full(geometric_c2):
    # M concentrated at the top level of C2: F^2 recovers all of M
    assert hill_filtration(geometric_c2, 2).is_full()


def test_hill_vanishing_hypothesis_derived_instances(functors):
    # F^k of (the functor presented by F^k M) is everything, since the
    # sub-functor vanishes below order k by construction
    for key in (("C4", "burnside"), ("S3", "burnside")):
        M = functors[key]
        for k in (2, M.group.order):
            N = sub_as_mackey(hill_filtration(M, k))
            assert hill_filtration(N, k).is_full()


def test_hill_commutes_with_restriction(functors, lattices):
    M = functors[("S3", "burnside")]
    for H in lattices["S3"].subgroups:
        MH = restrict_mackey(M, H)
        for k in range(1, H.order + 2):
            FH = hill_filtration(MH, k)
            F = hill_filtration(M, k)
            for hid in FH.levels:
                assert FH.levels[hid].same_subgroup(F.levels[hid])


def test_order_generated_extremes(functors):
    for key in (("C2", "burnside"), ("S3", "constant-Z")):
        M = functors[key]
        assert order_generated_filtration(M, M.group.order).is_full()
        assert order_generated_filtration(M, 0).is_zero()


def test_order_generated_constant_example(groups):
    from fractions import Fraction
    M = constant_mackey(groups["C2"], free_group(1))
    F1 = order_generated_filtration(M, 1)
    assert F1.levels[E_ID].is_full()
    want = subgroup_generated(M.levels[C2_ID], [(2,)])
    assert F1.levels[C2_ID].same_subgroup(want)
    # fractional cutoffs floor to the largest realizable order
    F_half = order_generated_filtration(M, Fraction(3, 2))
    for hid in F1.levels:
        assert F_half.levels[hid].same_subgroup(F1.levels[hid])


def test_order_generated_monotone(functors):
    for key in (("S3", "burnside"), ("Q8", "constant-Z")):
        M = functors[key]
        prev = order_generated_filtration(M, 0)
        for c in range(1, M.group.order + 1):
            cur = order_generated_filtration(M, c)
            assert cur.contains(prev)
            assert cur.is_closed()
            prev = cur


def test_reg_coh_examples(functors, lattices):
    M = functors[("C2", "burnside")]
    triv = lattices["C2"].subgroups[0]
    whole = lattices["C2"].subgroups[-1]
    assert reg_coh(M, triv).is_full()
    assert reg_coh(M, whole).invariant_factors() == (1, ())
    Mc = functors[("C2", "constant-Z")]
    assert reg_coh(Mc, whole).is_zero()


def test_reg_coh_matches_hill(functors, lattices):
    for key in (("C4", "burnside"), ("S3", "fixed-sign"),
                ("V4", "fixed-regular")):
        M = functors[key]
        for H in lattices[key[0]].subgroups:
            rc = reg_coh(M, H)
            F = hill_filtration(M, H.order)
            assert rc.same_subgroup(F.levels[H.id])


# ---------------------------------------------------------------------------
# restriction and inflation

def test_restrict_to_whole_is_identity(functors, lattices):
    M = functors[("S3", "burnside")]
    whole = lattices["S3"].subgroups[-1]
    assert restrict_mackey(M, whole) is M


def test_restrict_to_trivial(functors, lattices):
    M = functors[("S3", "burnside")]
    triv = lattices["S3"].subgroups[0]
    R = restrict_mackey(M, triv)
    assert len(R.levels) == 1
    only = next(iter(R.levels))
    assert R.levels[only].invariant_factors() == (1, ())


def test_restrict_burnside_s3_to_c3(groups, functors, lattices):
    M = functors[("S3", "burnside")]
    C3 = next(s for s in lattices["S3"].subgroups if s.order == 3)
    R = restrict_mackey(M, C3)
    assert check_mackey_axioms(R).passed
    B = burnside_mackey(R.group)
    assert set(R.levels) == set(B.levels)
    for hid in R.levels:
        assert R.levels[hid].invariant_factors() == B.levels[hid].invariant_factors()
    for key in R.res:
        assert R.res[key].matrix == B.res[key].matrix
        assert R.tr[key].matrix == B.tr[key].matrix


def test_inflate_burnside_c4_over_c2(groups, lattices):
    G = groups["C4"]
    N = next(s for s in lattices["C4"].subgroups if s.order == 2)
    qdata = quotient_group(G, N)
    Mq = burnside_mackey(qdata.group)
    M = inflate_mackey(Mq, qdata, G)
    assert check_mackey_axioms(M).passed
    lat = lattices["C4"]
    by_order = {lat.subgroup(s).order: s for s in lat.ids()}
    assert M.levels[by_order[1]].is_zero()
    assert M.levels[by_order[2]].invariant_factors() == (1, ())
    assert M.levels[by_order[4]].invariant_factors() == (2, ())


# ---------------------------------------------------------------------------
# presets

def test_mackey_preset_tokens(groups):
    G = groups["C2"]
    assert mackey_preset(G, "burnside").levels[C2_ID].invariant_factors() == (2, ())
    assert mackey_preset(G, "constant-Z").levels[C2_ID].invariant_factors() == (1, ())
    assert mackey_preset(G, "constant-Z6").levels[C2_ID].invariant_factors() == (0, (6,))
    assert mackey_preset(G, "fixed-sign").levels[C2_ID].is_zero()
    with pytest.raises(DomainError):
        mackey_preset(G, "nonsense")


def test_element_validation(functors):
    M = functors[("C2", "burnside")]
    x = M.element(C2_ID, (1, 0))
    assert x.subgroup_id == C2_ID
    with pytest.raises(DomainError):
        M.element(C2_ID, (1,))
    with pytest.raises(DomainError):
        M.element("bogus", (1,))
