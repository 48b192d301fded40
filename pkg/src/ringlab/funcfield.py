"""Exact arithmetic in F_p(x) with discrete valuations at irreducible centers.

This is the infinite counterpart of the finite-ring side of the package: a
valuation ring V inside the rational function field K = F_p(x) gives an
integrally closed minimal extension V in K that no finite ring can model.
V and its maximal ideal are never enumerated; membership goes through the
valuation predicate, and every group-level statement is certified on finite,
deterministic probe sets.
"""

from __future__ import annotations

import math
import random

from . import polys
from .errors import ConstructionError, IncompatibleInstance, SampleInadequate

INF = math.inf
GROUP_ORDER_CAP = 100_000
DEFAULT_SPAN = 6
RADICAL_POWER_CAP = 64
CLOSURE_ROUNDS = 8
CLOSURE_CAP = 512


class RationalFunction:
    """A quotient of polynomials over F_p in canonical form.

    The denominator is monic and coprime to the numerator, and zero is 0/1,
    so equality and hashing are structural.
    """

    __slots__ = ("p", "num", "den")

    def __init__(self, p, num, den=polys.PONE):
        num = polys.ptrim(tuple(c % p for c in num))
        den = polys.ptrim(tuple(c % p for c in den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = polys.PONE
        else:
            g = polys.pgcd(num, den, p)
            if polys.pdeg(g) > 0:
                num = polys.pdivmod(num, g, p)[0]
                den = polys.pdivmod(den, g, p)[0]
            lead_inv = pow(den[-1], -1, p)
            num = polys.pscale(num, lead_inv, p)
            den = polys.pscale(den, lead_inv, p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def const(cls, p, c):
        return cls(p, (c % p,))

    @classmethod
    def x(cls, p):
        return cls(p, polys.PX)

    def is_zero(self):
        return not self.num

    def _check_field(self, other):
        if not isinstance(other, RationalFunction):
            raise TypeError("expected a RationalFunction")
        if other.p != self.p:
            raise IncompatibleInstance("mixed characteristics")

    def __add__(self, other):
        self._check_field(other)
        p = self.p
        num = polys.padd(polys.pmul(self.num, other.den, p),
                         polys.pmul(other.num, self.den, p), p)
        return RationalFunction(p, num, polys.pmul(self.den, other.den, p))

    def __neg__(self):
        return RationalFunction(self.p, polys.pneg(self.num, self.p), self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_field(other)
        p = self.p
        return RationalFunction(p, polys.pmul(self.num, other.num, p),
                                polys.pmul(self.den, other.den, p))

    def __truediv__(self, other):
        self._check_field(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        p = self.p
        return RationalFunction(p, polys.pmul(self.num, other.den, p),
                                polys.pmul(self.den, other.num, p))

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("integer exponent required")
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.p, self.den, self.num) ** (-n)
        out = RationalFunction.const(self.p, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, RationalFunction) and self.p == other.p
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.p, self.num, self.den))

    def __str__(self):
        if self.den == polys.PONE:
            return polys.poly_str(self.num)
        return f"({polys.poly_str(self.num)})/({polys.poly_str(self.den)})"

    def __repr__(self):
        return f"RationalFunction(p={self.p}, {self})"


def parse_rational(text, p):
    """Parse '(x^4+1)/(x^2)', 'x', or '1/x' into a RationalFunction."""
    s = text.replace(" ", "")
    depth, slash = 0, -1
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if slash != -1:
                raise ValueError(f"more than one top-level '/' in {text!r}")
            slash = i
    if slash == -1:
        return RationalFunction(p, _parse_part(s, p))
    return RationalFunction(p, _parse_part(s[:slash], p),
                            _parse_part(s[slash + 1:], p))


def _parse_part(s, p):
    if s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            depth += (ch == "(") - (ch == ")")
            if depth == 0 and i < len(s) - 1:
                break
        else:
            s = s[1:-1]
    return polys.parse_poly(s, p)


def _vadd(a, b):
    if a == INF or b == INF:
        return INF
    return a + b


class DVRWitness:
    """The valuation ring of F_p(x) at a monic irreducible center.

    V = {t : v(t) >= 0} and m = {t : v(t) > 0} exist only through the
    valuation predicate; the witness never enumerates them.
    """

    def __init__(self, p, center):
        if isinstance(center, str):
            center = polys.parse_poly(center, p)
        center = polys.ptrim(tuple(c % p for c in center))
        if polys.pdeg(center) < 1:
            raise ConstructionError("center must have degree >= 1")
        if center[-1] != 1:
            raise ConstructionError(f"center {polys.poly_str(center)} is not monic")
        factor = polys.irreducible_factor(center, p)
        if factor is not None:
            raise ConstructionError(
                f"center {polys.poly_str(center)} is reducible: "
                f"factor {polys.poly_str(factor)}")
        self.p = p
        self.center = center

    def _ord(self, f):
        """How many times the center divides a nonzero polynomial."""
        n = 0
        while True:
            q, r = polys.pdivmod(f, self.center, self.p)
            if r:
                return n
            f = q
            n += 1

    def valuation(self, t):
        if t.p != self.p:
            raise IncompatibleInstance("mixed characteristics")
        if t.is_zero():
            return INF
        return self._ord(t.num) - self._ord(t.den)

    def contains(self, t):
        return self.valuation(t) >= 0

    def in_max_ideal(self, t):
        return self.valuation(t) > 0

    def uniformizer(self):
        return RationalFunction(self.p, self.center)

    def __repr__(self):
        return f"DVRWitness(p={self.p}, center={polys.poly_str(self.center)})"


def valuation(V, t):
    return V.valuation(t)


def dvr_membership(V, t):
    return V.contains(t)


def maximal_ideal_membership(V, t):
    return V.in_max_ideal(t)


def valuation_axioms_check(V, pairs):
    """Multiplicativity and the ultrametric law on given pairs.

    Also checks the surjectivity witnesses v(f) = 1 and v(1/f) = -1, so a
    passing run certifies the value group is all of Z.
    """
    f = V.uniformizer()
    if V.valuation(f) != 1 or V.valuation(f ** -1) != -1:
        return False
    for s, t in pairs:
        vs, vt = V.valuation(s), V.valuation(t)
        if V.valuation(s * t) != _vadd(vs, vt):
            return False
        if V.valuation(s + t) < min(vs, vt):
            return False
    return True


def random_rationals(p, count, seed=0, max_deg=3):
    """Deterministic sample of rational functions, zero included."""
    rng = random.Random(f"funcfield:{p}:{seed}")
    out = []
    for _ in range(count):
        num = [rng.randrange(p) for _ in range(rng.randrange(max_deg + 1) + 1)]
        den = [rng.randrange(p) for _ in range(rng.randrange(max_deg) + 1)]
        den.append(rng.randrange(1, p))
        out.append(RationalFunction(p, num, den))
    return out


class SubstAction:
    """A finite group of substitutions x -> a*x + b acting on F_p(x)."""

    def __init__(self, p, generators, cap=GROUP_ORDER_CAP):
        self.p = p
        gens = []
        for a, b in generators:
            a, b = a % p, b % p
            if a == 0:
                raise ConstructionError("substitution needs an invertible slope")
            gens.append((a, b))
        self.generators = tuple(gens)
        elems = {(1, 0)}
        frontier = list(elems)
        while frontier:
            nxt = []
            for a1, b1 in frontier:
                for a2, b2 in gens:
                    e = ((a1 * a2) % p, (a1 * b2 + b1) % p)
                    if e not in elems:
                        elems.add(e)
                        nxt.append(e)
            if len(elems) > cap:
                raise ConstructionError("group closure exceeded the cap")
            frontier = nxt
        self.elements = tuple(sorted(elems))

    @property
    def order(self):
        return len(self.elements)

    def is_trivial(self):
        return self.order == 1

    def is_scaling(self):
        return all(b == 0 for _, b in self.elements)

    def apply(self, elem, t):
        return subst_apply(elem, t)

    def is_fixed(self, t):
        return all(subst_apply(g, t) == t for g in self.generators)

    def __repr__(self):
        gens = ", ".join(f"x->{a}x+{b}" for a, b in self.generators)
        return f"SubstAction(p={self.p}, order={self.order}, gens=[{gens}])"


def subst_apply(elem, t):
    """Apply x -> a*x + b to a rational function by substitution."""
    a, b = elem
    p = t.p
    sub = polys.ptrim((b % p, a % p))
    return RationalFunction(p, polys.pcompose(t.num, sub, p),
                            polys.pcompose(t.den, sub, p))


def fixed_membership(G, t):
    return G.is_fixed(t)


def scale_gen(p, a):
    if a % p == 0:
        raise ConstructionError("scaling by zero is not invertible")
    return (a % p, 0)


def translate_gen(p, b):
    return (1, b % p)


def invariance_check(V, G):
    """Whether the valuation ring is carried into itself by every generator.

    For x -> a*x + b this is exact: V at center f is invariant iff f(ax+b)
    is an associate of f.
    """
    p = V.p
    for a, b in G.generators:
        sub = polys.ptrim((b, a))
        moved = polys.pcompose(V.center, sub, p)
        if polys.pmonic(moved, p) != V.center:
            return False
    return True


def group_norm(V, G):
    """The product of sigma(center) over the whole group.

    Fixed by construction; when V is invariant its valuation is |G|, which
    makes it the natural uniformizer of the fixed level.
    """
    p = V.p
    out = RationalFunction.const(p, 1)
    for a, b in G.elements:
        sub = polys.ptrim((b, a))
        out = out * RationalFunction(p, polys.pcompose(V.center, sub, p))
    return out


def default_probes(V, seed=0, span=DEFAULT_SPAN):
    """Deterministic probes with valuations covering [-span, span]."""
    rng = random.Random(f"probes:{V.p}:{V.center}:{seed}")
    f = V.uniformizer()
    probes = [f ** k for k in range(-span, span + 1)]
    for _ in range(8):
        k = rng.randrange(-span, span + 1)
        c = rng.randrange(1, V.p)
        probes.append((f ** k) * (f + RationalFunction.const(V.p, c)))
    return probes


def default_fixed_probes(V, G, seed=0, span=DEFAULT_SPAN):
    """Deterministic G-fixed probes with valuations covering [-span*d, span*d].

    Built from the group norm of the center, then each probe is re-verified
    fixed rather than trusted by construction.
    """
    if not invariance_check(V, G):
        raise IncompatibleInstance("valuation ring is not invariant under the action")
    u = group_norm(V, G)
    d = G.order
    if V.valuation(u) != d:
        raise ConstructionError("group norm has unexpected valuation")
    rng = random.Random(f"fixed-probes:{V.p}:{V.center}:{seed}")
    probes = [u ** k for k in range(-span, span + 1)]
    for _ in range(8):
        k = rng.randrange(-span, span + 1)
        c = rng.randrange(1, V.p)
        probes.append((u ** k) * (u + RationalFunction.const(V.p, c)))
    for r in probes:
        if not G.is_fixed(r):
            raise SampleInadequate(f"generated probe {r} is not fixed")
    return probes


def critical_ideal_witness(V, t, probes, unit=1):
    """Certify on probes that the common radical of the colons is m.

    For each probe r this compares the valuation predicates for membership
    in (V : t) and in its radical against direct arithmetic (multiply out,
    test containment), so the two routes check each other.  `unit` is the
    value-group generator: 1 for V in K, the scaling order at fixed level.
    """
    vt = V.valuation(t)
    if vt == INF or vt >= 0:
        raise IncompatibleInstance("t must lie outside the valuation ring")
    finite_vals = {V.valuation(r) for r in probes if not r.is_zero()}
    need = {k * unit for k in range(-3, 4)}
    missing = sorted(need - finite_vals)
    if missing:
        raise SampleInadequate(f"insufficient probe span: missing valuations {missing}")
    for r in probes:
        vr = V.valuation(r)
        colon_pred = vr >= -vt
        colon_direct = V.contains(r) and V.contains(r * t)
        if colon_pred != colon_direct:
            return False
        rad_pred = V.in_max_ideal(r)
        rad_direct = False
        if V.contains(r):
            power = r
            for _ in range(RADICAL_POWER_CAP):
                if V.contains(power * t):
                    rad_direct = True
                    break
                power = power * r
        if rad_pred != rad_direct:
            return False
    return True


def _require_scaling_setup(V, G):
    if not invariance_check(V, G):
        raise IncompatibleInstance("valuation ring is not invariant under the action")
    if not G.is_scaling() or G.is_trivial():
        raise IncompatibleInstance("need a nontrivial scaling group")


def _checked_fixed(G, samples):
    for r in samples:
        if not G.is_fixed(r):
            raise SampleInadequate(f"sample {r} is not fixed by the action")
    return samples


def valuation_pair_fixed_check(V, G, samples=None, seed=0):
    """Certify on fixed samples that (V^G, m^G) is a valuation pair of K^G.

    Checks the value group is d*Z for d the scaling order, re-runs the
    valuation axioms on sample pairs, exhibits the pair property (for each
    sampled t outside V^G, a fixed r in m^G with r*t a unit of V^G), and
    runs the critical-ideal certificate inside the fixed field.
    """
    _require_scaling_setup(V, G)
    d = G.order
    if samples is None:
        samples = default_fixed_probes(V, G, seed)
    _checked_fixed(G, samples)
    finite = [V.valuation(r) for r in samples if not r.is_zero()]
    if any(v % d for v in finite):
        return False
    if d not in {abs(v) for v in finite}:
        raise SampleInadequate("no sample of valuation d; value group undetermined")
    for s in samples:
        for t in samples:
            vs, vt = V.valuation(s), V.valuation(t)
            if V.valuation(s * t) != _vadd(vs, vt):
                return False
            if V.valuation(s + t) < min(vs, vt):
                return False
    outside = [t for t in samples if not t.is_zero() and not V.contains(t)]
    for t in outside:
        r = t ** -1
        ok = (G.is_fixed(r) and V.in_max_ideal(r)
              and V.contains(r * t) and not V.in_max_ideal(r * t))
        if not ok:
            return False
    for t in outside:
        if not critical_ideal_witness(V, t, samples, unit=d):
            return False
    return True


def integrally_closed_fixed_check(V, G, samples=None, degree_cap=3, seed=0,
                                  budget=48):
    """Certify on fixed samples that V^G is integrally closed in K^G.

    For sampled t outside V^G no monic relation with sampled V^G
    coefficients can vanish: the top term's valuation n*v(t) strictly
    undercuts every lower term, and that inequality is re-verified
    arithmetically on each evaluated relation.
    """
    _require_scaling_setup(V, G)
    if samples is None:
        samples = default_fixed_probes(V, G, seed)
    _checked_fixed(G, samples)
    ring_samples = [r for r in samples if V.contains(r)]
    if not ring_samples:
        raise SampleInadequate("no samples inside the fixed valuation ring")
    rng = random.Random(f"monic:{V.p}:{seed}")
    for t in samples:
        if t.is_zero():
            continue
        vt = V.valuation(t)
        if vt >= 0:
            if not (V.contains(t) and G.is_fixed(t)):
                return False
            continue
        powers = [RationalFunction.const(V.p, 1)]
        for _ in range(degree_cap):
            powers.append(powers[-1] * t)
        for n in range(1, degree_cap + 1):
            tuples = _coefficient_tuples(ring_samples, n, budget, rng)
            for coeffs in tuples:
                value = powers[n]
                for i, c in enumerate(coeffs):
                    value = value + c * powers[i]
                if value.is_zero():
                    return False
                if V.valuation(value) != n * vt:
                    return False
    return True


def _coefficient_tuples(pool, n, budget, rng):
    total = len(pool) ** n
    if total <= budget:
        def gen():
            idx = [0] * n
            while True:
                yield tuple(pool[i] for i in idx)
                j = 0
                while j < n and idx[j] == len(pool) - 1:
                    idx[j] = 0
                    j += 1
                if j == n:
                    return
                idx[j] += 1
        return gen()
    return (tuple(rng.choice(pool) for _ in range(n)) for _ in range(budget))


def perfect_localization_fixed_check(V, G, samples=None, seed=0):
    """Certify on fixed samples that the fixed level is a perfect localization.

    First re-checks per sample that V in K is one (a power of the center
    lands in each colon and is invertible), then exhibits, for each fixed t
    outside V^G, a fixed r in the colon together with an explicit inverse.
    """
    _require_scaling_setup(V, G)
    d = G.order
    if samples is None:
        samples = default_fixed_probes(V, G, seed)
    _checked_fixed(G, samples)
    f = V.uniformizer()
    u = group_norm(V, G)
    one = RationalFunction.const(V.p, 1)
    for t in samples:
        if t.is_zero() or V.contains(t):
            continue
        k = -V.valuation(t)
        if not (V.contains((f ** k) * t) and (f ** k) * (f ** -k) == one):
            return False
        m = (k + d - 1) // d
        r, s = u ** m, u ** -m
        ok = (G.is_fixed(r) and G.is_fixed(s) and V.contains(r)
              and V.contains(r * t) and r * s == one)
        if not ok:
            return False
    return True


def normal_pair_fixed_check(V, G, seeds=None, samples=None, seed=0,
                            rounds=CLOSURE_ROUNDS, cap=CLOSURE_CAP):
    """Sampled normal-pair evidence for (V^G, K^G).

    Each seed set is grown by bounded multiplicative closure against the
    sampled V^G elements.  A seed set inside V^G must stay there and V^G
    must look integrally closed; a seed escaping V^G must reach valuation
    -d, the fixed-level uniformizer inverse, from which every sampled
    negative-valuation probe is a power.  Verdicts are the strings 'pass',
    'fail', and 'inconclusive'; a bound running out is inconclusive, never
    a failure.
    """
    _require_scaling_setup(V, G)
    d = G.order
    if samples is None:
        samples = default_fixed_probes(V, G, seed)
    _checked_fixed(G, samples)
    ring_samples = [r for r in samples if V.contains(r) and not r.is_zero()]
    if seeds is None:
        u = group_norm(V, G)
        seeds = [[u ** -1], [u ** -3], [u, u ** -1], [u ** 2]]
    verdicts = []
    for seed_set in seeds:
        _checked_fixed(G, seed_set)
        escaping = [t for t in seed_set if not t.is_zero() and not V.contains(t)]
        if not escaping:
            inside = all(V.contains(a * b) and V.contains(a + b)
                         for a in list(seed_set) + ring_samples
                         for b in list(seed_set) + ring_samples)
            if not inside:
                verdicts.append("fail")
            elif integrally_closed_fixed_check(V, G, samples, seed=seed,
                                               budget=24):
                verdicts.append("pass")
            else:
                verdicts.append("fail")
            continue
        results = [_reaches_valuation(V, t, ring_samples, -d, rounds, cap)
                   for t in escaping]
        if all(r == "yes" for r in results):
            verdicts.append("pass")
        elif any(r == "cap" for r in results):
            verdicts.append("inconclusive")
        else:
            verdicts.append("inconclusive")
    if "fail" in verdicts:
        return "fail"
    if "inconclusive" in verdicts:
        return "inconclusive"
    return "pass"


def _reaches_valuation(V, t, base, target, rounds, cap):
    """Grow {t} multiplicatively against base, hunting a given valuation."""
    closure = {t} | set(base)
    frontier = {t}
    for _ in range(rounds):
        if any(V.valuation(c) == target for c in closure):
            return "yes"
        new = set()
        for a in frontier:
            for b in base:
                prod = a * b
                if prod not in closure:
                    new.add(prod)
        closure |= new
        frontier = new
        if len(closure) > cap:
            return "cap"
        if not frontier:
            break
    if any(V.valuation(c) == target for c in closure):
        return "yes"
    return "no-within-bound"
