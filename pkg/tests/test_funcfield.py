import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab import polys
from ringlab.errors import (ConstructionError, IncompatibleInstance,
                            SampleInadequate)
from ringlab.funcfield import (INF, DVRWitness, RationalFunction, SubstAction,
                               critical_ideal_witness, default_fixed_probes,
                               default_probes, dvr_membership,
                               fixed_membership, group_norm,
                               integrally_closed_fixed_check, invariance_check,
                               maximal_ideal_membership,
                               normal_pair_fixed_check, parse_rational,
                               perfect_localization_fixed_check,
                               random_rationals, scale_gen, subst_apply,
                               translate_gen, valuation,
                               valuation_axioms_check,
                               valuation_pair_fixed_check)


def oracle_multiplicity(f, center, p):
    """Largest k with center^k dividing f, by building the powers outright."""
    k = 0
    power = tuple(center)
    while not polys.pmod(f, power, p):
        k += 1
        power = polys.pmul(power, center, p)
    return k


def oracle_valuation(V, t):
    if t.is_zero():
        return INF
    return (oracle_multiplicity(t.num, V.center, V.p)
            - oracle_multiplicity(t.den, V.center, V.p))


def vx(p):
    return DVRWitness(p, polys.PX)


def scaling(p, a):
    return SubstAction(p, [scale_gen(p, a)])


def test_canonical_form_collapses_common_factors():
    a = parse_rational("(x^2-1)/(x-1)", 3)
    b = parse_rational("x+1", 3)
    assert a == b and hash(a) == hash(b)
    assert a.den == polys.PONE


def test_canonical_form_monic_denominator():
    t = RationalFunction(5, (1,), (0, 2))
    assert t.den == polys.PX and t.num == (3,)
    assert str(t) == "(3)/(x)"


def test_zero_is_zero_over_one():
    z = RationalFunction(5, (0,), (0, 3))
    assert z.is_zero() and z.den == polys.PONE
    t = parse_rational("(x^2+1)/(x+2)", 5)
    assert (t - t) == z


def test_field_arithmetic():
    p = 5
    x = RationalFunction.x(p)
    one = RationalFunction.const(p, 1)
    t = one / x
    assert t * x == one
    assert x ** -2 == one / (x * x)
    with pytest.raises(ZeroDivisionError):
        one / (t - t)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(p, (1,), ())


def test_parse_round_trips():
    for text in ["x", "1/x", "(x^4+1)/(x^2)", "(2x+1)/(x^2+x+1)", "3"]:
        t = parse_rational(text, 5)
        assert parse_rational(str(t), 5) == t
    with pytest.raises(ValueError):
        parse_rational("x/x/x", 5)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=4),
       st.lists(st.integers(0, 4), min_size=1, max_size=4),
       st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_distributivity(aa, bb, cc):
    p = 5
    s = RationalFunction(p, aa)
    t = RationalFunction(p, bb)
    r = RationalFunction(p, cc, (1, 1))
    assert (s + t) * r == s * r + t * r


def test_valuation_examples():
    V = vx(5)
    assert valuation(V, parse_rational("(x^2)/(x+1)", 5)) == 2
    assert valuation(V, parse_rational("1/x", 5)) == -1
    assert valuation(V, parse_rational("(x^3+x)/(x^2)", 5)) == -1
    assert valuation(V, RationalFunction.const(5, 0)) == INF


def test_valuation_matches_oracle():
    for p, center in [(5, polys.PX), (5, (2, 0, 1)), (7, polys.PX)]:
        V = DVRWitness(p, center)
        for t in random_rationals(p, 50, seed=3):
            assert V.valuation(t) == oracle_valuation(V, t)


def test_membership_predicates():
    V = vx(3)
    one = RationalFunction.const(3, 1)
    assert dvr_membership(V, one) and not maximal_ideal_membership(V, one)
    assert not dvr_membership(V, parse_rational("1/x", 3))
    assert maximal_ideal_membership(V, parse_rational("x/(x+1)", 3))


def test_dvr_rejects_bad_centers():
    with pytest.raises(ConstructionError, match="reducible"):
        DVRWitness(2, (1, 0, 1))  # x^2+1 = (x+1)^2 over F_2
    with pytest.raises(ConstructionError, match="monic"):
        DVRWitness(5, (0, 2))
    with pytest.raises(ConstructionError, match="degree"):
        DVRWitness(5, (3,))


def test_subst_group_orders():
    assert scaling(5, 2).order == 4
    assert scaling(7, 3).order == 6
    affine = SubstAction(5, [scale_gen(5, 2), translate_gen(5, 1)])
    assert affine.order == 20
    for p in (5, 7):
        for a in range(1, p):
            n = SubstAction(p, [(a, 0), (1, 1)]).order
            assert p * (p - 1) % n == 0
    with pytest.raises(ConstructionError):
        SubstAction(5, [(0, 1)])


def test_subst_apply_and_fixed():
    p = 5
    G = scaling(p, 2)
    x4 = parse_rational("x^4", p)
    assert fixed_membership(G, x4)
    assert not fixed_membership(G, RationalFunction.x(p))
    assert subst_apply((2, 0), RationalFunction.x(p)) == parse_rational("2x", p)
    trivial = SubstAction(p, [])
    assert fixed_membership(trivial, RationalFunction.x(p))


def test_invariance_check():
    V = vx(5)
    assert invariance_check(V, scaling(5, 2))
    assert not invariance_check(V, SubstAction(5, [translate_gen(5, 1)]))
    assert invariance_check(V, SubstAction(5, []))
    # a center whose valuation ring scalings move
    W = DVRWitness(5, (2, 0, 1))
    assert not invariance_check(W, scaling(5, 2))


def test_group_norm_is_fixed_uniformizer():
    V = vx(5)
    G = scaling(5, 2)
    u = group_norm(V, G)
    assert u == RationalFunction(5, (0, 0, 0, 0, 4))
    assert G.is_fixed(u)
    assert V.valuation(u) == 4


def test_default_probes_span():
    V = vx(5)
    vals = {V.valuation(r) for r in default_probes(V)}
    assert set(range(-6, 7)) <= vals
    G = scaling(5, 2)
    fixed = default_fixed_probes(V, G)
    assert all(G.is_fixed(r) for r in fixed)
    fvals = {V.valuation(r) for r in fixed}
    assert {4 * k for k in range(-6, 7)} <= fvals


def test_critical_ideal_witness_consistent():
    V = vx(5)
    probes = default_probes(V)
    assert critical_ideal_witness(V, parse_rational("1/x", 5), probes)
    assert critical_ideal_witness(V, parse_rational("1/(x^2)", 5), probes)
    x = RationalFunction.x(5)
    t = parse_rational("1/(x^2)", 5)
    # x itself misses the colon but its square lands in it
    assert not V.contains(x * t)
    assert V.contains(x * x * t)


def test_critical_ideal_witness_errors():
    V = vx(5)
    with pytest.raises(IncompatibleInstance):
        critical_ideal_witness(V, RationalFunction.x(5), default_probes(V))
    thin = [RationalFunction.x(5) ** k for k in range(-1, 2)]
    with pytest.raises(SampleInadequate, match="insufficient probe span"):
        critical_ideal_witness(V, parse_rational("1/x", 5), thin)


def test_valuation_axioms_on_random_pairs():
    for p, center in [(5, polys.PX), (5, (2, 0, 1)), (7, polys.PX)]:
        V = DVRWitness(p, center)
        pairs = list(zip(random_rationals(p, 300, seed=1),
                         random_rationals(p, 300, seed=2)))
        assert valuation_axioms_check(V, pairs)


def test_valuation_pair_fixed_check_positive():
    assert valuation_pair_fixed_check(vx(5), scaling(5, 2))
    assert valuation_pair_fixed_check(vx(7), scaling(7, 3))


def test_valuation_pair_fixed_check_preconditions():
    V = vx(5)
    with pytest.raises(IncompatibleInstance):
        valuation_pair_fixed_check(V, SubstAction(5, []))
    with pytest.raises(IncompatibleInstance):
        valuation_pair_fixed_check(V, SubstAction(5, [translate_gen(5, 1)]))
    G = scaling(5, 2)
    with pytest.raises(SampleInadequate):
        valuation_pair_fixed_check(V, G, samples=[RationalFunction.x(5)])
    u = group_norm(V, G)
    with pytest.raises(SampleInadequate, match="value group"):
        valuation_pair_fixed_check(V, G, samples=[u ** 2, u ** 0])


def test_integrally_closed_fixed_check():
    assert integrally_closed_fixed_check(vx(5), scaling(5, 2))
    assert integrally_closed_fixed_check(vx(7), scaling(7, 3))
    # the obstruction in isolation: v(t^n) = n v(t) beats any lower terms
    V = vx(5)
    t = parse_rational("1/(x^4)", 5)
    u = group_norm(V, scaling(5, 2))
    value = t * t + u * t + u
    assert V.valuation(value) == 2 * V.valuation(t)


def test_perfect_localization_fixed_check():
    assert perfect_localization_fixed_check(vx(5), scaling(5, 2))
    assert perfect_localization_fixed_check(vx(7), scaling(7, 3))


def test_normal_pair_fixed_check_passes():
    assert normal_pair_fixed_check(vx(5), scaling(5, 2)) == "pass"
    assert normal_pair_fixed_check(vx(7), scaling(7, 3)) == "pass"


def test_normal_pair_inconclusive_is_first_class():
    V = vx(5)
    G = scaling(5, 2)
    u = group_norm(V, G)
    # ring samples {1, u^2} can never multiply u^-2 up to valuation -4
    verdict = normal_pair_fixed_check(V, G, seeds=[[u ** -2]],
                                      samples=[u ** -2, u ** 0, u ** 2])
    assert verdict == "inconclusive"
