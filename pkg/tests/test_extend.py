import numpy as np
import pytest

from ringlab import action, core, extend, ideals
from ringlab.errors import CapExceeded, IncompatibleInstance


def prime_subring(T):
    return core.subring_closure(T, [])


def diag_handle(T):
    A, _ = T.meta["factors"]
    return core.SubringHandle(T, [core.prod_encode(T, i, i)
                                  for i in range(A.order)])


def base_of_idealization(T):
    R = T.meta["base"]
    return core.SubringHandle(T, [core.ideal_encode(T, i, 0)
                                  for i in range(R.order)])


def subfield_handle(T, q):
    """Elements with t^q = t: the subfield of order q of a finite field."""
    mem = [i for i in range(T.order) if T.pow(i, q) == i]
    return core.SubringHandle(T, mem)


def f9():
    return core.make_gf(3, 2)


def test_minimal_f2_in_f4():
    F4 = core.make_gf(2, 2)
    assert extend.is_minimal_extension(prime_subring(F4))


def test_minimal_diag_f5():
    F5 = core.make_gf(5, 1)
    T = core.product(F5, F5)
    assert extend.is_minimal_extension(diag_handle(T))


def test_not_minimal_f2_in_f16():
    F16 = core.make_gf(2, 4)
    assert not extend.is_minimal_extension(prime_subring(F16))


def test_minimal_raises_on_equal():
    Z6 = core.make_zmod(6)
    with pytest.raises(IncompatibleInstance):
        extend.is_minimal_extension(core.as_handle(Z6))


def test_classify_inert_f2_f4():
    F4 = core.make_gf(2, 2)
    rep = extend.classify_extension(prime_subring(F4))
    assert rep.kind == "MinimalInert"
    assert rep.conductor.is_zero()
    assert rep.crucial_max.is_zero()
    assert rep.witnesses["residue_bottom_order"] == 2
    assert rep.witnesses["residue_top_order"] == 4


def test_classify_decomposed_diag_f9():
    F9 = f9()
    T = core.product(F9, F9)
    rep = extend.classify_extension(diag_handle(T))
    assert rep.kind == "MinimalDecomposed"
    assert rep.conductor.is_zero()
    n1 = sorted(core.prod_encode(T, i, 0) for i in range(9))
    n2 = sorted(core.prod_encode(T, 0, j) for j in range(9))
    got = {tuple(rep.witnesses["N1"].members),
           tuple(rep.witnesses["N2"].members)}
    assert got == {tuple(n1), tuple(n2)}


def test_classify_ramified_idealization():
    F9 = f9()
    T = core.idealization(F9, core.module_over_self(F9))
    rep = extend.classify_extension(base_of_idealization(T))
    assert rep.kind == "MinimalRamified"
    assert rep.conductor.is_zero()
    expect_n = sorted(core.ideal_encode(T, 0, j) for j in range(9))
    assert list(rep.witnesses["N"].members) == expect_n
    assert rep.witnesses["dimension"] == 2


def test_classify_trivial_equal():
    Z6 = core.make_zmod(6)
    rep = extend.classify_extension(core.as_handle(Z6))
    assert rep.kind == "TrivialEqual"
    assert rep.conductor.size == 6


def test_classify_not_minimal():
    F16 = core.make_gf(2, 4)
    rep = extend.classify_extension(prime_subring(F16))
    assert rep.kind == "NotMinimal"


def test_critical_ideal_of_decomposed():
    F9 = f9()
    T = core.product(F9, F9)
    crit = extend.critical_ideal(diag_handle(T))
    assert crit is not None and crit.is_zero()


def test_critical_ideal_of_ramified():
    F9 = f9()
    T = core.idealization(F9, core.module_over_self(F9))
    crit = extend.critical_ideal(base_of_idealization(T))
    assert crit is not None and crit.is_zero()


def test_triple_product_scan():
    F2 = core.make_gf(2, 1)
    T = core.product(core.product(F2, F2), F2)
    R = prime_subring(T)
    assert R.order == 2
    rep = extend.classify_extension(R)
    assert rep.kind == "NotMinimal"
    # the scan itself: every colon is zero here, so the critical ideal is
    # the zero ideal even though the extension is not minimal
    crit = extend.critical_ideal(R)
    assert crit is not None and crit.is_zero()


def test_intermediate_rings_of_minimal_extension():
    F4 = core.make_gf(2, 2)
    R = prime_subring(F4)
    S = extend.intermediate_rings(R)
    assert len(S) == 2
    assert S[0].same_members(R) and S[1].is_full()


def test_intermediate_rings_f2_f16():
    F16 = core.make_gf(2, 4)
    S = extend.intermediate_rings(prime_subring(F16))
    assert [s.order for s in S] == [2, 4, 16]


def test_intermediate_rings_trivial():
    Z6 = core.make_zmod(6)
    S = extend.intermediate_rings(core.as_handle(Z6))
    assert len(S) == 1


def test_intermediate_cap():
    F9 = f9()
    T = core.product(F9, F9)
    with pytest.raises(CapExceeded):
        extend.intermediate_rings(diag_handle(T), cap=64)
    assert len(extend.intermediate_rings(diag_handle(T), cap=96)) == 2


def test_integral_witnesses_f3_f9():
    F9 = f9()
    R = prime_subring(F9)
    ok, wit = extend.is_integral_extension(R, degree_cap=2)
    assert ok
    for t in range(9):
        coeffs = wit[t]
        assert extend._eval_monic(F9, coeffs, t) == F9.zero
        if R.mask[t]:
            assert len(coeffs) == 1
        else:
            assert len(coeffs) == 2  # degree-2 witness found by search


def test_integral_fallback_power_cycle():
    F9 = f9()
    R = prime_subring(F9)
    ok, wit = extend.is_integral_extension(R, degree_cap=1)
    assert ok
    g = F9.elem("(0,1)")
    assert extend._eval_monic(F9, wit[g], g) == F9.zero
    assert len(wit[g]) > 2  # fallback witness, not the quadratic one


def test_integral_closure_is_everything():
    F4 = core.make_gf(2, 2)
    R = prime_subring(F4)
    assert extend.integral_closure_in(R).is_full()
    assert not extend.is_integrally_closed(R)
    assert extend.is_integrally_closed(core.as_handle(F4))


def test_integral_closure_diag():
    F5 = core.make_gf(5, 1)
    T = core.product(F5, F5)
    assert extend.integral_closure_in(diag_handle(T)).is_full()


def test_extension_filter_is_unit_only():
    F5 = core.make_gf(5, 1)
    T = core.product(F5, F5)
    R = diag_handle(T)
    filt = extend.extension_filter(R)
    assert len(filt) == 1 and filt[0].size == R.order
    assert not extend.is_perfect_localization(R)


def test_perfect_localization_trivial():
    Z6 = core.make_zmod(6)
    assert extend.is_perfect_localization(core.as_handle(Z6))


def test_gabriel_filter_axioms():
    Z4 = core.make_zmod(4)
    unit = ideals.unit_ideal(Z4)
    two = ideals.ideal_generated(Z4, [2])
    zero = ideals.zero_ideal(Z4)
    assert extend.is_gabriel_filter(Z4, [unit])
    # fails upward closure: 0 in filter but (2) missing
    assert not extend.is_gabriel_filter(Z4, [zero, unit])
    # fails the colon axiom: (0:j) lands in the filter for all j in (2),
    # which would force 0 into the filter
    assert not extend.is_gabriel_filter(Z4, [two, unit])
    # a field's full lattice does satisfy all three
    F5 = core.make_gf(5, 1)
    assert extend.is_gabriel_filter(F5, ideals.all_ideals(F5))


def test_filter_contraction_on_diag():
    F9 = f9()
    T = core.product(F9, F9)
    G = action.close_group([action.componentwise(
        T, action.frobenius(F9), action.frobenius(F9))])
    assert extend.filter_contraction_check(diag_handle(T), G)


def test_inc_pair_finite_cases():
    F4 = core.make_gf(2, 2)
    assert extend.is_inc_pair(prime_subring(F4))
    F16 = core.make_gf(2, 4)
    assert extend.is_inc_pair(prime_subring(F16))
    F5 = core.make_gf(5, 1)
    T = core.product(F5, F5)
    assert extend.is_inc_pair(diag_handle(T))


def test_normal_pair_finite_cases():
    F4 = core.make_gf(2, 2)
    assert not extend.is_normal_pair(prime_subring(F4))
    assert extend.is_normal_pair(core.as_handle(F4))


def test_idealization_minimality_matches_simple_module():
    """Minimality of R(+)M over R(+)0 tracks simplicity of M exactly."""
    cases = []
    F3 = core.make_gf(3, 1)
    cases.append((F3, core.module_over_self(F3), True))
    F9 = f9()
    cases.append((F9, core.module_over_self(F9), True))
    Z4 = core.make_zmod(4)
    cases.append((Z4, core.module_over_self(Z4), False))
    Z2, proj = core.quotient_ring(Z4, [0, 2])
    cases.append((Z4, core.module_via_quotient_scalars(Z4, Z2, proj), True))
    for R, M, expect in cases:
        T = core.idealization(R, M)
        simple = core.is_simple_module(M)
        assert simple == expect
        minimal = extend.is_minimal_extension(base_of_idealization(T))
        assert minimal == simple


def test_classification_agrees_with_oracle_on_subfields():
    F16 = core.make_gf(2, 4)
    F4_in = subfield_handle(F16, 4)
    rep = extend.classify_extension(F4_in)
    assert rep.kind == "MinimalInert"
    assert extend.is_minimal_extension(F4_in)
