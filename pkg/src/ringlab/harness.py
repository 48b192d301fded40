"""Instance catalog and one verifier per invariance result.

Every checker evaluates its hypotheses individually, reports all of them,
and only claims a conclusion when every hypothesis holds.  Verdict statuses:
"pass", "fail", "hypothesis-violation", "inconclusive".  Finite conclusions
are exhaustive; function-field conclusions are certified on seeded probe
sets and say so through the confidence field.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from functools import cached_property

import numpy as np

from . import action, core, exprs, extend, funcfield, ideals
from .errors import (ConstructionError, IncompatibleInstance, RingLabError,
                     SampleInadequate)

SCHEMA = "ringlab/1"
STATUSES = ("pass", "fail", "hypothesis-violation", "inconclusive")
INC_SWEEP_CAP = 64
SYMMETRIZE_TARGET = 30
SYMMETRIZE_ATTEMPTS = 2000
FIXED_OUTSIDE_CAP = 4


def _jsonable(x):
    """Coerce witness payloads to plain JSON types, deterministically."""
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, funcfield.RationalFunction):
        return str(x)
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        raise RingLabError(f"float {x!r} would break byte-stable reports")
    return str(x)


class Verdict:
    """Outcome of one checker on one instance.

    Conclusions exist only when every hypothesis holds; a violation verdict
    names the first failing hypothesis.  Runtime is kept on the object but
    never serialized, so identical instance + seed gives identical bytes.
    """

    def __init__(self, theorem, instance, claim, hypotheses, status,
                 conclusion=None, witnesses=None, confidence="exhaustive",
                 seed=0):
        if status not in STATUSES:
            raise RingLabError(f"unknown status {status!r}")
        if confidence not in ("exhaustive", "probes"):
            raise RingLabError(f"unknown confidence {confidence!r}")
        hypotheses = {str(k): bool(v) for k, v in hypotheses.items()}
        if status == "hypothesis-violation":
            if all(hypotheses.values()):
                raise RingLabError("violation verdict with no failed hypothesis")
            if conclusion is not None:
                raise RingLabError("violation verdict must not claim a conclusion")
        else:
            if not all(hypotheses.values()):
                raise RingLabError(f"{status} verdict with a failed hypothesis")
        if status == "pass" and conclusion is None:
            raise RingLabError("pass verdict without a conclusion")
        self.theorem = theorem
        self.instance = instance
        self.claim = claim
        self.hypotheses = hypotheses
        self.status = status
        self.conclusion = _jsonable(conclusion)
        self.witnesses = _jsonable(witnesses or {})
        self.confidence = confidence
        self.seed = int(seed)
        self.runtime = 0.0

    @property
    def first_failed_hypothesis(self):
        for name, held in self.hypotheses.items():
            if not held:
                return name
        return None

    def to_dict(self):
        out = {"theorem": self.theorem,
               "instance": self.instance,
               "claim": self.claim,
               "status": self.status,
               "confidence": self.confidence,
               "hypotheses": self.hypotheses,
               "conclusion": self.conclusion,
               "witnesses": self.witnesses,
               "seed": self.seed}
        if self.status == "hypothesis-violation":
            out["first_failed_hypothesis"] = self.first_failed_hypothesis
        return out

    def __repr__(self):
        return f"Verdict({self.theorem} on {self.instance}: {self.status})"


def _violation(tid, inst, claim, hyps, witnesses=None,
               confidence="exhaustive", seed=0):
    return Verdict(tid, inst.name, claim, hyps, "hypothesis-violation",
                   witnesses=witnesses, confidence=confidence, seed=seed)


def _outcome(tid, inst, claim, hyps, ok, conclusion, witnesses=None,
             confidence="exhaustive", seed=0):
    return Verdict(tid, inst.name, claim, hyps, "pass" if ok else "fail",
                   conclusion=conclusion, witnesses=witnesses,
                   confidence=confidence, seed=seed)


# ------------------------------------------------------------------ instances

class FiniteContext:
    kind = "finite"

    def __init__(self, inst):
        self.T = exprs.build_ring(inst.ring)
        self.R = exprs.build_subring(self.T, inst.subring)
        self.G = exprs.build_action(self.T, inst.action)

    @cached_property
    def invariant(self):
        return action.is_invariant_subring(self.R, self.G)

    @cached_property
    def fixed_mask(self):
        return self.G.fixed_mask()

    @cached_property
    def TG(self):
        return core.SubringHandle(self.T, np.flatnonzero(self.fixed_mask))

    @cached_property
    def rg_members(self):
        return self.R.members[self.fixed_mask[self.R.members]]

    @cached_property
    def RG(self):
        return core.SubringHandle(self.T, self.rg_members)

    @cached_property
    def fixed_pair(self):
        """(S, handle of fixed(R) inside S, to_ambient) with S = fixed(T)."""
        S, inner, to_amb, _ = core.handle_within(self.TG, self.rg_members)
        return S, inner, to_amb

    @property
    def fixed_proper(self):
        return self.rg_members.size < self.TG.members.size

    @cached_property
    def conductor(self):
        return ideals.conductor(self.R)

    @cached_property
    def fixed_conductor_members(self):
        """Conductor of the fixed extension, as ambient indices."""
        S, inner, to_amb = self.fixed_pair
        small = ideals.conductor(inner)
        return np.sort(to_amb[small.members])

    @cached_property
    def m_members(self):
        """The conductor contraction, ambient indices."""
        M = self.conductor
        return M.members[self.fixed_mask[M.members]]

    @cached_property
    def residue_char(self):
        """Characteristic of fixed(R) / conductor contraction."""
        m = ideals.Ideal(self.RG, self.m_members)
        Q, _ = ideals.quotient_by_ideal(m)
        return Q.char()

    @cached_property
    def orbit_sizes_R(self):
        return action.orbit_sizes(self.G, self.R.members)

    @cached_property
    def char_offender(self):
        """An element of R whose orbit size the residue char divides."""
        p = self.residue_char
        for t, n in self.orbit_sizes_R.items():
            if n % p == 0:
                return t
        return None

    @cached_property
    def ambient_report(self):
        return extend.classify_extension(self.R)

    @cached_property
    def fixed_report(self):
        _, inner, _ = self.fixed_pair
        return extend.classify_extension(inner)

    @cached_property
    def ambient_minimal(self):
        if self.R.is_full():
            return False
        return extend.is_minimal_extension(self.R)

    @cached_property
    def ambient_integral(self):
        ok, _ = extend.is_integral_extension(self.R, degree_cap=2)
        return ok

    def labels(self, members):
        return [self.T.labels[int(i)] for i in members]


class FuncContext:
    kind = "funcfield"

    def __init__(self, inst):
        self.V, self.span = exprs.build_funcfield(inst.ring)
        if inst.subring is not None:
            raise ConstructionError(
                "function-field instances take no subring spec: the "
                "valuation ring is the base")
        self.G = exprs.build_subst_action(self.V.p, inst.action)
        self._memo = {}

    @cached_property
    def invariant(self):
        return funcfield.invariance_check(self.V, self.G)

    @cached_property
    def scaling(self):
        return self.G.is_scaling() and not self.G.is_trivial()

    @cached_property
    def norm(self):
        return funcfield.group_norm(self.V, self.G)

    def _cache(self, name, seed, fn):
        key = (name, seed)
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    def probes(self, seed):
        return self._cache("probes", seed, lambda: funcfield.default_probes(
            self.V, seed=seed, span=self.span))

    def fixed_probes(self, seed):
        return self._cache(
            "fixed_probes", seed,
            lambda: funcfield.default_fixed_probes(self.V, self.G, seed=seed,
                                                   span=self.span))

    def ambient_critical(self, seed):
        return self._cache(
            "ambient_critical", seed,
            lambda: all(funcfield.critical_ideal_witness(
                self.V, t, self.probes(seed), unit=1)
                for t in self.probes(seed) if not self.V.contains(t)))

    def monic_obstruction(self, seed):
        return self._cache(
            "monic_obstruction", seed,
            lambda: _ambient_monic_obstruction(self.V, self.probes(seed)))

    def minimal_evidence(self, seed):
        return self._cache(
            "minimal_evidence", seed,
            lambda: _ambient_minimal_evidence(self.V, self.probes(seed)))

    def max_ideal_fixed(self, seed):
        return self._cache(
            "max_ideal_fixed", seed,
            lambda: _max_ideal_orbit_fixed(self.V, self.G, self.probes(seed)))

    def critical_transfer(self, seed):
        """Fixed-level colon-radical certificates, capped outside sample."""
        def run():
            fp = self.fixed_probes(seed)
            outs = [t for t in fp if not self.V.contains(t)]
            outs = outs[:FIXED_OUTSIDE_CAP]
            if not outs:
                raise SampleInadequate("no fixed probe outside the base")
            ok = all(funcfield.critical_ideal_witness(
                self.V, t, fp, unit=self.G.order) for t in outs)
            return ok, len(outs)
        return self._cache("critical_transfer", seed, run)


class Instance:
    """One catalog or user entry: a construction, a subring, an action."""

    FIELDS = ("name", "ring", "subring", "action", "checks", "seed", "tags",
              "expected")

    def __init__(self, name, ring, subring=None, action=(), checks=(),
                 seed=None, tags=(), expected=None):
        self.name = str(name)
        self.ring = str(ring)
        self.subring = subring
        self.action = list(action)
        self.checks = list(checks)
        self.seed = None if seed is None else int(seed)
        self.tags = tuple(tags)
        self.expected = dict(expected or {})
        self._ctx = None

    @property
    def kind(self):
        return "funcfield" if exprs.is_funcfield_expr(self.ring) else "finite"

    def context(self):
        if self._ctx is None:
            cls = FuncContext if self.kind == "funcfield" else FiniteContext
            self._ctx = cls(self)
        return self._ctx

    def default_checks(self):
        kind = self.kind
        return [tid for tid, (kinds, _, _) in CHECKERS.items()
                if kind in kinds]

    def to_dict(self):
        return {"name": self.name, "ring": self.ring,
                "subring": self.subring, "action": self.action,
                "checks": self.checks, "seed": self.seed,
                "tags": list(self.tags), "expected": self.expected}

    @classmethod
    def from_dict(cls, doc, name="instance"):
        if not isinstance(doc, dict):
            raise ConstructionError("instance document must be a JSON object")
        unknown = set(doc) - set(cls.FIELDS)
        if unknown:
            raise ConstructionError(
                f"unknown instance field(s): {sorted(unknown)}")
        if "ring" not in doc or not isinstance(doc["ring"], str):
            raise ConstructionError('instance field "ring" must be a string')
        checks = doc.get("checks", [])
        if not isinstance(checks, list):
            raise ConstructionError('instance field "checks" must be a list')
        for tid in checks:
            if tid not in CHECKERS:
                raise ConstructionError(f"unknown theorem id {tid!r}")
        acts = doc.get("action", [])
        if not isinstance(acts, list):
            raise ConstructionError('instance field "action" must be a list')
        seed = doc.get("seed")
        if seed is not None and not isinstance(seed, int):
            raise ConstructionError('instance field "seed" must be an integer')
        return cls(doc.get("name", name), doc["ring"], doc.get("subring"),
                   acts, checks, seed, doc.get("tags", ()),
                   doc.get("expected"))

    def __repr__(self):
        return f"Instance({self.name})"


# ----------------------------------------------------------------- checker kit

CHECKERS = {}


def _register(tid, kinds, claim):
    def deco(fn):
        CHECKERS[tid] = (frozenset(kinds), claim, fn)
        return fn
    return deco


def _orbit_poly(T, roots):
    """Coefficients of prod (X - r), low degree first, monic."""
    coeffs = [T.one]
    for r in roots:
        nxt = [T.zero] * (len(coeffs) + 1)
        neg_r = int(T.neg[r])
        for i, c in enumerate(coeffs):
            nxt[i + 1] = int(T.add[nxt[i + 1], c])
            nxt[i] = int(T.add[nxt[i], T.mul[neg_r, c]])
        coeffs = nxt
    return coeffs


def _eval_poly(T, coeffs, t):
    acc = T.zero
    for c in reversed(coeffs):
        acc = int(T.add[T.mul[acc, int(t)], c])
    return acc


def _orbit_poly_rf(p, roots):
    one = funcfield.RationalFunction.const(p, 1)
    zero = funcfield.RationalFunction.const(p, 0)
    coeffs = [one]
    for r in roots:
        nxt = [zero] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - r * c
        coeffs = nxt
    return coeffs


def _eval_poly_rf(p, coeffs, t):
    acc = funcfield.RationalFunction.const(p, 0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _unit_in(T, handle, e):
    """Does e have an inverse inside the given subring?"""
    row = T.mul[int(e), handle.members]
    return bool((row == T.one).any())


def _colon_members_in_fixed(ctx, t):
    """(fixed(R) : t) inside the ambient ring, as a sorted index array."""
    keep = ctx.RG.mask[ctx.T.mul[ctx.rg_members, int(t)]]
    return ctx.rg_members[keep]


def _strip_private(cert):
    return {k: v for k, v in cert.items() if not k.startswith("_")}


def _ambient_monic_obstruction(V, probes, degree_cap=3, budget=12):
    """Sampled evidence that nothing outside V is integral over V.

    For t with v(t) < 0, any monic value t^n + sum c_i t^i with c_i in V
    keeps valuation n v(t), hence never vanishes.
    """
    inside = [r for r in probes if V.contains(r)][:3]
    outside = [t for t in probes if not V.contains(t)][:3]
    if not inside or not outside:
        raise SampleInadequate("probe set lacks an inside/outside mix")
    for t in outside:
        vt = V.valuation(t)
        powers = [funcfield.RationalFunction.const(V.p, 1)]
        for _ in range(degree_cap):
            powers.append(powers[-1] * t)
        for n in range(1, degree_cap + 1):
            tried = 0
            for coeffs in itertools.product(inside, repeat=n):
                if tried >= budget:
                    break
                tried += 1
                val = powers[n]
                for i, c in enumerate(coeffs):
                    val = val + c * powers[i]
                if val.is_zero() or V.valuation(val) != n * vt:
                    return False
    return True


def _ambient_minimal_evidence(V, probes):
    """Every sampled t outside V reaches valuation -1 against inside probes."""
    inside = [r for r in probes if V.contains(r)]
    outside = [t for t in probes if not V.contains(t)][:3]
    if not outside:
        raise SampleInadequate("no probe outside the valuation ring")
    for t in outside:
        if funcfield._reaches_valuation(V, t, inside, -1, 8, 512) != "yes":
            return False
    return True


def _ambient_perfect_evidence(V, probes):
    """(V : t) generates everything: f^k t lands in V with exact inverse."""
    f = V.uniformizer()
    one = funcfield.RationalFunction.const(V.p, 1)
    for t in probes:
        if V.contains(t):
            continue
        k = -V.valuation(t)
        r = f ** k
        s = f ** -k
        if not (V.contains(r) and V.contains(r * t)):
            return False
        if not (r * s == one):
            return False
    return True


def _max_ideal_orbit_fixed(V, G, probes):
    """sigma(m) = m tested by membership agreement on every probe."""
    for sigma in G.elements:
        for r in probes:
            if r.is_zero():
                continue
            moved = funcfield.subst_apply(sigma, r)
            if V.in_max_ideal(moved) != V.in_max_ideal(r):
                return False
    return True


# ------------------------------------------------------------------- checkers

@_register("lemma_2_1", ("finite", "funcfield"),
           "the big ring is integral over its fixed ring: each element is a "
           "root of a monic polynomial with fixed coefficients")
def _check_lemma_2_1(ctx, inst, seed):
    tid, claim = "lemma_2_1", CHECKERS["lemma_2_1"][1]
    hyps = {"group_locally_finite": True}
    if ctx.kind == "finite":
        T, G = ctx.T, ctx.G
        fixed = ctx.fixed_mask
        ok, max_deg, sample = True, 0, []
        for t in range(T.order):
            orb = action.orbit(t, G)
            coeffs = _orbit_poly(T, [int(x) for x in orb.members])
            good = (all(fixed[c] for c in coeffs)
                    and _eval_poly(T, coeffs, t) == T.zero)
            ok = ok and good
            max_deg = max(max_deg, orb.size)
            if len(sample) < 3:
                sample.append({"element": T.labels[t],
                               "monic_degree": orb.size,
                               "coefficients": [T.labels[c] for c in coeffs]})
        conclusion = {"integral_over_fixed_ring": ok,
                      "elements_checked": T.order,
                      "max_witness_degree": max_deg}
        return _outcome(tid, inst, claim, hyps, ok, conclusion,
                        {"sample_witnesses": sample}, "exhaustive", seed)
    V, G = ctx.V, ctx.G
    ok, sample = True, []
    for t in ctx.probes(seed):
        roots = [funcfield.subst_apply(s, t) for s in G.elements]
        coeffs = _orbit_poly_rf(V.p, roots)
        good = (all(G.is_fixed(c) for c in coeffs)
                and _eval_poly_rf(V.p, coeffs, t).is_zero())
        ok = ok and good
        if len(sample) < 2:
            sample.append({"element": str(t), "monic_degree": G.order,
                           "coefficients": [str(c) for c in coeffs]})
    conclusion = {"integral_over_fixed_ring": ok,
                  "probes_checked": len(ctx.probes(seed)),
                  "max_witness_degree": G.order}
    return _outcome(tid, inst, claim, hyps, ok, conclusion,
                    {"sample_witnesses": sample}, "probes", seed)


def _conductor_hyps(ctx):
    return {"subring_invariant": ctx.invariant,
            "conductor_maximal": ideals.is_maximal(ctx.conductor)}


@_register("lemma_2_2a", ("finite",),
           "with a maximal conductor and a proper fixed extension, the fixed "
           "conductor equals the conductor contraction")
def _check_lemma_2_2a(ctx, inst, seed):
    tid, claim = "lemma_2_2a", CHECKERS["lemma_2_2a"][1]
    hyps = _conductor_hyps(ctx)
    hyps["fixed_extension_proper"] = ctx.fixed_proper
    wit = {"conductor": ctx.labels(ctx.conductor.members),
           "contraction": ctx.labels(ctx.m_members)}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)
    M = ctx.conductor
    in_tg = M.members[ctx.TG.mask[M.members]]
    contractions_agree = np.array_equal(in_tg, ctx.m_members)
    equal = np.array_equal(ctx.fixed_conductor_members, ctx.m_members)
    wit["fixed_conductor"] = ctx.labels(ctx.fixed_conductor_members)
    conclusion = {"fixed_conductor_is_contraction": equal,
                  "contractions_to_both_fixed_rings_agree":
                      contractions_agree}
    return _outcome(tid, inst, claim, hyps, equal and contractions_agree,
                    conclusion, wit, "exhaustive", seed)


@_register("lemma_2_2b", ("finite",),
           "a maximal conductor has singleton orbit")
def _check_lemma_2_2b(ctx, inst, seed):
    tid, claim = "lemma_2_2b", CHECKERS["lemma_2_2b"][1]
    hyps = _conductor_hyps(ctx)
    wit = {"conductor": ctx.labels(ctx.conductor.members)}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)
    orb = action.ideal_orbit(ctx.conductor, ctx.G)
    conclusion = {"orbit_is_singleton": len(orb) == 1,
                  "orbit_size": len(orb)}
    return _outcome(tid, inst, claim, hyps, len(orb) == 1, conclusion, wit,
                    "exhaustive", seed)


@_register("lemma_2_2c", ("finite",),
           "every prime of the big ring containing a maximal conductor "
           "contracts exactly to it")
def _check_lemma_2_2c(ctx, inst, seed):
    tid, claim = "lemma_2_2c", CHECKERS["lemma_2_2c"][1]
    hyps = _conductor_hyps(ctx)
    wit = {"conductor": ctx.labels(ctx.conductor.members)}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)
    M = ctx.conductor
    over, ok = [], True
    for N in ideals.spec(ctx.T):
        if not N.mask[M.members].all():
            continue
        contraction = N.members[ctx.R.mask[N.members]]
        agrees = np.array_equal(contraction, M.members)
        ok = ok and agrees
        over.append({"prime": ctx.labels(N.members),
                     "contracts_to_conductor": agrees})
    conclusion = {"all_primes_over_conductor_contract_to_it": ok,
                  "primes_over_conductor": len(over)}
    return _outcome(tid, inst, claim, hyps, ok, conclusion,
                    {**wit, "primes": over}, "exhaustive", seed)


@_register("prop_2_3", ("finite",),
           "fixing commutes with reduction modulo a maximal ideal of "
           "singleton orbit when the residue characteristic divides no "
           "orbit size")
def _check_prop_2_3(ctx, inst, seed):
    tid, claim = "prop_2_3", CHECKERS["prop_2_3"][1]
    hyps = {"subring_invariant": ctx.invariant,
            "group_locally_finite": True}
    if not ctx.invariant:
        hyps["some_maximal_ideal_qualifies"] = False
        return _violation(tid, inst, claim, hyps, None, "exhaustive", seed)
    results = []
    for M in ideals.max_ideals(ctx.R):
        res = action.fixed_quotient_iso_check(ctx.R, M, ctx.G)
        res["ideal"] = ctx.labels(M.members)
        results.append(res)
    qualifying = [r for r in results if all(r["hypotheses"].values())]
    hyps["some_maximal_ideal_qualifies"] = bool(qualifying)
    wit = {"per_ideal": [{k: v for k, v in r.items() if k != "iso"}
                         for r in results]}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)
    ok = all(r["status"] == "pass" for r in qualifying)
    conclusion = {"isomorphism_on_every_qualifying_ideal": ok,
                  "qualifying_ideals": len(qualifying)}
    wit["isomorphisms"] = [r.get("iso") for r in qualifying]
    return _outcome(tid, inst, claim, hyps, ok, conclusion, wit,
                    "exhaustive", seed)


@_register("lemma_2_4", ("finite",),
           "a fixed element written over the subring rewrites, up to an "
           "integer multiplier, with fixed coefficients")
def _check_lemma_2_4(ctx, inst, seed):
    tid, claim = "lemma_2_4", CHECKERS["lemma_2_4"][1]
    T, G = ctx.T, ctx.G
    domain = not ideals.has_zero_divisors(T)
    char = T.char()
    sizes = action.orbit_sizes(G)
    char_coprime = all(n % char != 0 for n in sizes.values())
    cond_a = domain and char_coprime
    order_elem = action.int_mult(T, G.order, T.one)
    cond_b = T.is_unit(order_elem)
    hyps = {"subring_invariant": ctx.invariant,
            "domain_with_coprime_orbit_sizes_or_group_order_unit":
                cond_a or cond_b}
    wit = {"domain": domain, "orbit_sizes_coprime_to_char": char_coprime,
           "group_order_unit": cond_b}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)

    rng = random.Random(f"symmetrize:{inst.name}:{seed}")
    fixed = np.flatnonzero(ctx.fixed_mask)
    modes = ["full-group"] if cond_b else []
    if cond_a:
        modes.append("orbit")
    certs, replays_ok, attempts = [], True, 0
    while len(certs) < SYMMETRIZE_TARGET and attempts < SYMMETRIZE_ATTEMPTS:
        attempts += 1
        k = rng.randint(1, 3)
        terms = [(int(rng.choice(ctx.R.members)), int(rng.choice(fixed)))
                 for _ in range(k)]
        t = T.zero
        for r, u in terms:
            t = int(T.add[t, T.mul[r, u]])
        if not ctx.fixed_mask[t]:
            continue
        mode = modes[len(certs) % len(modes)]
        if mode == "orbit" and t == T.zero:
            continue
        cert = action.symmetrize_representation(t, terms, ctx.R, G, mode=mode)
        if cert["status"] != "ok":
            continue
        replays_ok = replays_ok and action.replay_symmetrization(T, cert)
        certs.append(cert)
    ok = replays_ok and len(certs) >= 20
    conclusion = {"certificates": len(certs),
                  "all_replayed_exactly": replays_ok,
                  "modes_exercised": sorted({c["mode"] for c in certs})}
    wit["certificates"] = [_strip_private(c) for c in certs]
    return _outcome(tid, inst, claim, hyps, ok, conclusion, wit,
                    "exhaustive", seed)


@_register("thm_2_5_consistency", ("finite",),
           "a proper minimal integral extension has a maximal conductor and "
           "matches exactly one of the inert, decomposed, ramified cases")
def _check_thm_2_5(ctx, inst, seed):
    tid, claim = "thm_2_5_consistency", CHECKERS["thm_2_5_consistency"][1]
    hyps = {"extension_proper": not ctx.R.is_full(),
            "extension_minimal": ctx.ambient_minimal,
            "extension_integral": ctx.ambient_integral}
    if not all(hyps.values()):
        wit = {"kind": ctx.ambient_report.kind}
        return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)
    report = ctx.ambient_report
    kind_ok = report.kind in ("MinimalInert", "MinimalDecomposed",
                              "MinimalRamified")
    conductor_max = ideals.is_maximal(report.conductor)
    crucial_ok = (report.crucial_max is not None
                  and report.crucial_max.same(report.conductor))
    ok = kind_ok and conductor_max and crucial_ok
    conclusion = {"kind": report.kind,
                  "exactly_one_case_matched": kind_ok,
                  "conductor_maximal": conductor_max,
                  "crucial_ideal_is_conductor": crucial_ok}
    return _outcome(tid, inst, claim, hyps, ok, conclusion,
                    report.to_dict(), "exhaustive", seed)


@_register("thm_2_6", ("finite",),
           "a minimal integral extension passes to a fixed-ring minimal "
           "extension of the same case, with the conductor contraction as "
           "crucial ideal")
def _check_thm_2_6(ctx, inst, seed):
    tid, claim = "thm_2_6", CHECKERS["thm_2_6"][1]
    hyps = {"subring_invariant": ctx.invariant,
            "extension_minimal": ctx.ambient_minimal,
            "extension_integral": ctx.ambient_integral,
            "conductor_maximal": ideals.is_maximal(ctx.conductor),
            "fixed_extension_proper": ctx.fixed_proper,
            "residue_char_divides_no_orbit_size": ctx.char_offender is None}
    wit = {"conductor": ctx.labels(ctx.conductor.members),
           "contraction": ctx.labels(ctx.m_members),
           "residue_char": ctx.residue_char}
    if ctx.char_offender is not None:
        wit["offending_orbit"] = {
            "element": ctx.T.labels[ctx.char_offender],
            "size": ctx.orbit_sizes_R[ctx.char_offender]}
    if not ctx.fixed_proper:
        wit["fixed_rings"] = {
            "fixed_subring_order": int(ctx.rg_members.size),
            "fixed_big_ring_order": int(ctx.TG.members.size)}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)
    ambient, fixed = ctx.ambient_report, ctx.fixed_report
    same_kind = fixed.kind == ambient.kind
    crucial = (fixed.crucial_max is not None
               and np.array_equal(ctx.fixed_conductor_members, ctx.m_members))
    ok = same_kind and crucial
    conclusion = {"fixed_kind": fixed.kind,
                  "same_kind_as_ambient": same_kind,
                  "fixed_crucial_ideal_is_conductor_contraction": crucial}
    wit["ambient_classification"] = ambient.to_dict()
    wit["fixed_classification"] = fixed.to_dict()
    return _outcome(tid, inst, claim, hyps, ok, conclusion, wit,
                    "exhaustive", seed)


@_register("example_2_8", ("finite",),
           "the collapse family: the extension is minimal yet the fixed "
           "rings coincide, so the properness hypothesis is not removable")
def _check_example_2_8(ctx, inst, seed):
    tid, claim = "example_2_8", CHECKERS["example_2_8"][1]
    char_ok = ctx.char_offender is None
    hyps = {"subring_invariant": ctx.invariant,
            "extension_minimal": ctx.ambient_minimal,
            "extension_integral": ctx.ambient_integral,
            "some_descent_hypothesis_fails":
                not (ctx.fixed_proper and char_ok)}
    wit = {"fixed_subring_order": int(ctx.rg_members.size),
           "fixed_big_ring_order": int(ctx.TG.members.size)}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)
    equal = not ctx.fixed_proper
    violated = ("fixed_extension_proper" if not ctx.fixed_proper
                else "residue_char_divides_no_orbit_size")
    conclusion = {"fixed_rings_equal": equal,
                  "violated_descent_hypothesis": violated}
    return _outcome(tid, inst, claim, hyps, equal, conclusion, wit,
                    "exhaustive", seed)


@_register("lemma_3_1", ("finite", "funcfield"),
           "the critical ideal contracts to the critical ideal of the "
           "proper fixed extension")
def _check_lemma_3_1(ctx, inst, seed):
    tid, claim = "lemma_3_1", CHECKERS["lemma_3_1"][1]
    if ctx.kind == "finite":
        crit = None if ctx.R.is_full() else extend.critical_ideal(ctx.R)
        hyps = {"subring_invariant": ctx.invariant,
                "critical_ideal_exists": crit is not None,
                "fixed_extension_proper": ctx.fixed_proper}
        wit = {}
        if crit is not None:
            wit["critical_ideal"] = ctx.labels(crit.members)
        if not all(hyps.values()):
            return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)
        contraction = crit.members[ctx.fixed_mask[crit.members]]
        S, inner, to_amb = ctx.fixed_pair
        fixed_crit = extend.critical_ideal(inner)
        exists = fixed_crit is not None
        equal = exists and np.array_equal(np.sort(to_amb[fixed_crit.members]),
                                          contraction)
        conclusion = {"fixed_critical_ideal_exists": exists,
                      "fixed_critical_ideal_is_contraction": equal}
        wit["contraction"] = ctx.labels(contraction)
        if exists:
            wit["fixed_critical_ideal"] = ctx.labels(
                to_amb[fixed_crit.members])
        return _outcome(tid, inst, claim, hyps, exists and equal, conclusion,
                        wit, "exhaustive", seed)
    hyps = {"valuation_ring_invariant": ctx.invariant,
            "scaling_action": ctx.scaling}
    if not (ctx.invariant and ctx.scaling):
        return _violation(tid, inst, claim, hyps, None, "probes", seed)
    hyps["critical_ideal_exists"] = ctx.ambient_critical(seed)
    hyps["fixed_extension_proper"] = True
    wit = {"fixed_outside_witness": str(ctx.norm ** -1)}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "probes", seed)
    ok, certs = ctx.critical_transfer(seed)
    conclusion = {"fixed_critical_ideal_is_contraction": ok,
                  "fixed_colon_radical_certificates": certs}
    return _outcome(tid, inst, claim, hyps, ok, conclusion, wit,
                    "probes", seed)


@_register("lemma_3_2", ("finite", "funcfield"),
           "a maximal critical ideal is carried to itself by the whole group")
def _check_lemma_3_2(ctx, inst, seed):
    tid, claim = "lemma_3_2", CHECKERS["lemma_3_2"][1]
    if ctx.kind == "finite":
        crit = None if ctx.R.is_full() else extend.critical_ideal(ctx.R)
        hyps = {"subring_invariant": ctx.invariant,
                "critical_ideal_exists": crit is not None,
                "critical_ideal_maximal":
                    crit is not None and ideals.is_maximal(crit)}
        wit = {}
        if crit is not None:
            wit["critical_ideal"] = ctx.labels(crit.members)
        if not all(hyps.values()):
            return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)
        orb = action.ideal_orbit(crit, ctx.G)
        conclusion = {"orbit_is_singleton": len(orb) == 1,
                      "orbit_size": len(orb)}
        return _outcome(tid, inst, claim, hyps, len(orb) == 1, conclusion,
                        wit, "exhaustive", seed)
    hyps = {"valuation_ring_invariant": ctx.invariant}
    if not ctx.invariant:
        return _violation(tid, inst, claim, hyps, None, "probes", seed)
    hyps["critical_ideal_exists"] = ctx.ambient_critical(seed)
    hyps["critical_ideal_maximal"] = True
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, None, "probes", seed)
    singleton = ctx.max_ideal_fixed(seed)
    conclusion = {"orbit_is_singleton": singleton,
                  "probes_checked": len(ctx.probes(seed))}
    return _outcome(tid, inst, claim, hyps, singleton, conclusion, None,
                    "probes", seed)


@_register("lemma_3_4_witness", ("funcfield",),
           "for a valuation pair a critical ideal exists exactly when the "
           "value group has rank one, and it is the positive-valuation ideal")
def _check_lemma_3_4(ctx, inst, seed):
    tid, claim = "lemma_3_4_witness", CHECKERS["lemma_3_4_witness"][1]
    V = ctx.V
    half = funcfield.random_rationals(V.p, 400, seed=seed)
    pairs = list(zip(half[:200], half[200:]))
    axioms = funcfield.valuation_axioms_check(V, pairs)
    hyps = {"valuation_pair_on_samples": axioms}
    wit = {"pairs_checked": len(pairs),
           "uniformizer": str(V.uniformizer())}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "probes", seed)
    crit = ctx.ambient_critical(seed)
    vals = sorted({V.valuation(t) for t in ctx.probes(seed)
                   if not t.is_zero()})
    conclusion = {"value_group_is_integers": axioms,
                  "critical_ideal_is_positive_valuation_ideal": crit,
                  "observed_valuations": vals}
    return _outcome(tid, inst, claim, hyps, crit, conclusion, wit,
                    "probes", seed)


@_register("prop_3_5", ("funcfield",),
           "a valuation pair with invariant maximal ideal and proper fixed "
           "extension descends to a valuation pair of the fixed rings")
def _check_prop_3_5(ctx, inst, seed):
    tid, claim = "prop_3_5", CHECKERS["prop_3_5"][1]
    V, G = ctx.V, ctx.G
    hyps = {"group_locally_finite": True,
            "valuation_ring_invariant": ctx.invariant,
            "scaling_action": ctx.scaling}
    if not (ctx.invariant and ctx.scaling):
        return _violation(tid, inst, claim, hyps, None, "probes", seed)
    half = funcfield.random_rationals(V.p, 200, seed=seed)
    pairs = list(zip(half[:100], half[100:]))
    hyps["ambient_valuation_pair"] = funcfield.valuation_axioms_check(V, pairs)
    hyps["max_ideal_orbit_singleton"] = ctx.max_ideal_fixed(seed)
    hyps["fixed_extension_proper"] = True
    wit = {"fixed_outside_witness": str(ctx.norm ** -1),
           "group_order": G.order}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "probes", seed)
    ok = funcfield.valuation_pair_fixed_check(V, G, seed=seed)
    conclusion = {"fixed_valuation_pair": ok,
                  "value_group": f"{G.order}Z"}
    return _outcome(tid, inst, claim, hyps, ok, conclusion, wit,
                    "probes", seed)


@_register("thm_3_6", ("funcfield",),
           "an integrally closed minimal extension descends to an "
           "integrally closed minimal extension of the fixed rings")
def _check_thm_3_6(ctx, inst, seed):
    tid, claim = "thm_3_6", CHECKERS["thm_3_6"][1]
    V, G = ctx.V, ctx.G
    hyps = {"group_locally_finite": True,
            "valuation_ring_invariant": ctx.invariant,
            "scaling_action": ctx.scaling}
    if not (ctx.invariant and ctx.scaling):
        return _violation(tid, inst, claim, hyps, None, "probes", seed)
    hyps["ambient_integrally_closed"] = ctx.monic_obstruction(seed)
    hyps["ambient_minimal"] = ctx.minimal_evidence(seed)
    hyps["fixed_extension_proper"] = True
    wit = {"fixed_outside_witness": str(ctx.norm ** -1),
           "group_order": G.order}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "probes", seed)
    pair = funcfield.valuation_pair_fixed_check(V, G, seed=seed)
    closed = funcfield.integrally_closed_fixed_check(V, G, seed=seed)
    transfer, _ = ctx.critical_transfer(seed)
    ok = pair and closed and transfer
    conclusion = {"fixed_rank_one_valuation_pair": pair,
                  "fixed_integrally_closed": closed,
                  "critical_ideal_transfers": transfer,
                  "value_group": f"{G.order}Z"}
    return _outcome(tid, inst, claim, hyps, ok, conclusion, wit,
                    "probes", seed)


@_register("prop_4_1", ("finite", "funcfield"),
           "an integral extension stays integral on fixed rings")
def _check_prop_4_1(ctx, inst, seed):
    tid, claim = "prop_4_1", CHECKERS["prop_4_1"][1]
    if ctx.kind == "finite":
        hyps = {"subring_invariant": ctx.invariant,
                "group_locally_finite": True,
                "extension_integral": ctx.ambient_integral}
        if not all(hyps.values()):
            return _violation(tid, inst, claim, hyps, None, "exhaustive", seed)
        S, inner, _ = ctx.fixed_pair
        ok, wits = extend.is_integral_extension(inner, degree_cap=2)
        outside = [(t, coeffs) for t, coeffs in sorted(wits.items())
                   if not inner.mask[t]]
        sample = [{"element": S.labels[t],
                   "monic_coefficients": [S.labels[c] for c in coeffs]}
                  for t, coeffs in outside[:6]]
        conclusion = {"fixed_extension_integral": ok,
                      "witnessed_elements": len(outside)}
        return _outcome(tid, inst, claim, hyps, ok, conclusion,
                        {"sample_witnesses": sample}, "exhaustive", seed)
    V = ctx.V
    t = V.uniformizer() ** -1
    hyps = {"group_locally_finite": True, "extension_integral": False}
    wit = {"obstruction": {
        "element": str(t),
        "reason": "monic values keep valuation n v(t) < 0, so none vanish"}}
    return _violation(tid, inst, claim, hyps, wit, "probes", seed)


@_register("prop_4_2", ("finite", "funcfield"),
           "an integrally closed extension stays integrally closed on "
           "fixed rings")
def _check_prop_4_2(ctx, inst, seed):
    tid, claim = "prop_4_2", CHECKERS["prop_4_2"][1]
    if ctx.kind == "finite":
        hyps = {"subring_invariant": ctx.invariant,
                "ambient_integrally_closed":
                    extend.is_integrally_closed(ctx.R)}
        if not all(hyps.values()):
            return _violation(tid, inst, claim, hyps, None, "exhaustive", seed)
        _, inner, _ = ctx.fixed_pair
        ok = extend.is_integrally_closed(inner)
        conclusion = {"fixed_integrally_closed": ok}
        return _outcome(tid, inst, claim, hyps, ok, conclusion, None,
                        "exhaustive", seed)
    V, G = ctx.V, ctx.G
    hyps = {"valuation_ring_invariant": ctx.invariant,
            "scaling_action": ctx.scaling}
    if not (ctx.invariant and ctx.scaling):
        return _violation(tid, inst, claim, hyps, None, "probes", seed)
    hyps["ambient_integrally_closed"] = ctx.monic_obstruction(seed)
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, None, "probes", seed)
    ok = funcfield.integrally_closed_fixed_check(V, G, seed=seed)
    conclusion = {"fixed_integrally_closed": ok}
    return _outcome(tid, inst, claim, hyps, ok, conclusion, None,
                    "probes", seed)


@_register("prop_4_3", ("finite",),
           "a minimal extension descends when the group order is a unit in "
           "the subring and the fixed extension is proper")
def _check_prop_4_3(ctx, inst, seed):
    tid, claim = "prop_4_3", CHECKERS["prop_4_3"][1]
    T = ctx.T
    order_elem = action.int_mult(T, ctx.G.order, T.one)
    unit_in_R = _unit_in(T, ctx.R, order_elem)
    hyps = {"subring_invariant": ctx.invariant,
            "group_finite": True,
            "group_order_unit_in_subring": unit_in_R,
            "extension_minimal": ctx.ambient_minimal,
            "fixed_extension_proper": ctx.fixed_proper}
    wit = {"group_order": ctx.G.order,
           "group_order_unit_in_subring": unit_in_R,
           "group_order_unit_in_big_ring": T.is_unit(order_elem)}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)
    _, inner, _ = ctx.fixed_pair
    ok = extend.is_minimal_extension(inner)
    conclusion = {"fixed_extension_minimal": ok}
    return _outcome(tid, inst, claim, hyps, ok, conclusion, wit,
                    "exhaustive", seed)


@_register("cor_4_4", ("finite",),
           "an integral or integrally closed minimal extension descends "
           "with its flavor when the group order is a unit")
def _check_cor_4_4(ctx, inst, seed):
    tid, claim = "cor_4_4", CHECKERS["cor_4_4"][1]
    T = ctx.T
    order_elem = action.int_mult(T, ctx.G.order, T.one)
    unit_in_R = _unit_in(T, ctx.R, order_elem)
    integral = ctx.ambient_integral
    closed = extend.is_integrally_closed(ctx.R)
    hyps = {"subring_invariant": ctx.invariant,
            "group_finite": True,
            "group_order_unit_in_subring": unit_in_R,
            "extension_minimal": ctx.ambient_minimal,
            "fixed_extension_proper": ctx.fixed_proper,
            "integral_or_integrally_closed": integral or closed}
    wit = {"ambient_integral": integral,
           "ambient_integrally_closed": closed}
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)
    _, inner, _ = ctx.fixed_pair
    checks = {"fixed_extension_minimal": extend.is_minimal_extension(inner)}
    if integral:
        checks["fixed_integral"] = extend.is_integral_extension(
            inner, degree_cap=2)[0]
    if closed:
        checks["fixed_integrally_closed"] = extend.is_integrally_closed(inner)
    ok = all(checks.values())
    return _outcome(tid, inst, claim, hyps, ok, checks, wit,
                    "exhaustive", seed)


@_register("lemma_4_6", ("finite", "funcfield"),
           "an ideal that generates the big ring contracts to an ideal that "
           "generates the fixed big ring")
def _check_lemma_4_6(ctx, inst, seed):
    tid, claim = "lemma_4_6", CHECKERS["lemma_4_6"][1]
    if ctx.kind == "finite":
        hyps = {"subring_invariant": ctx.invariant,
                "group_strongly_locally_finite": True}
        if not all(hyps.values()):
            return _violation(tid, inst, claim, hyps, None, "exhaustive", seed)
        filt = extend.extension_filter(ctx.R)
        ok = extend.filter_contraction_check(ctx.R, ctx.G)
        conclusion = {"every_contraction_generates": ok,
                      "ambient_filter_size": len(filt)}
        wit = {"ambient_filter": [ctx.labels(I.members) for I in filt]}
        return _outcome(tid, inst, claim, hyps, ok, conclusion, wit,
                        "exhaustive", seed)
    V, G = ctx.V, ctx.G
    hyps = {"valuation_ring_invariant": ctx.invariant,
            "scaling_action": ctx.scaling,
            "group_strongly_locally_finite": True}
    if not (ctx.invariant and ctx.scaling):
        return _violation(tid, inst, claim, hyps, None, "probes", seed)
    u, d = ctx.norm, G.order
    one = funcfield.RationalFunction.const(V.p, 1)
    certs, ok = [], True
    for t in ctx.fixed_probes(seed):
        if V.contains(t):
            continue
        k = -V.valuation(t)
        m = -(-k // d)
        r, s = u ** m, u ** -m
        good = (V.contains(r) and V.contains(r * t) and G.is_fixed(r)
                and G.is_fixed(s) and r * s == one)
        ok = ok and good
        certs.append({"outside_element": str(t),
                      "contraction_member": str(r),
                      "exact_inverse": str(s)})
    conclusion = {"every_contraction_generates": ok,
                  "certificates": len(certs)}
    return _outcome(tid, inst, claim, hyps, ok and bool(certs), conclusion,
                    {"certificates": certs}, "probes", seed)


@_register("thm_4_7", ("finite", "funcfield"),
           "the generating-ideal filter stays Gabriel on fixed rings and the "
           "fixed extension is again a perfect localization")
def _check_thm_4_7(ctx, inst, seed):
    tid, claim = "thm_4_7", CHECKERS["thm_4_7"][1]
    if ctx.kind == "finite":
        hyps = {"subring_invariant": ctx.invariant,
                "group_strongly_locally_finite": True}
        if not ctx.invariant:
            return _violation(tid, inst, claim, hyps, None, "exhaustive", seed)
        filt = extend.extension_filter(ctx.R)
        hyps["ambient_filter_gabriel"] = extend.is_gabriel_filter(ctx.R, filt)
        hyps["ambient_perfect_localization"] = \
            extend.is_perfect_localization(ctx.R)
        wit = {"ambient_filter": [ctx.labels(I.members) for I in filt]}
        if not all(hyps.values()):
            return _violation(tid, inst, claim, hyps, wit, "exhaustive", seed)
        _, inner, _ = ctx.fixed_pair
        fixed_filt = extend.extension_filter(inner)
        gabriel = extend.is_gabriel_filter(inner, fixed_filt)
        perfect = extend.is_perfect_localization(inner)
        identity = True
        for x in ctx.TG.members:
            cr = ideals.colon(ctx.R, int(x)).members
            lhs = cr[ctx.fixed_mask[cr]]
            identity = identity and np.array_equal(
                lhs, _colon_members_in_fixed(ctx, int(x)))
        ok = gabriel and perfect and identity
        conclusion = {"fixed_filter_gabriel": gabriel,
                      "fixed_perfect_localization": perfect,
                      "colon_contraction_identity": identity}
        wit["fixed_filter_size"] = len(fixed_filt)
        return _outcome(tid, inst, claim, hyps, ok, conclusion, wit,
                        "exhaustive", seed)
    V, G = ctx.V, ctx.G
    hyps = {"valuation_ring_invariant": ctx.invariant,
            "scaling_action": ctx.scaling,
            "group_strongly_locally_finite": True}
    if not (ctx.invariant and ctx.scaling):
        return _violation(tid, inst, claim, hyps, None, "probes", seed)
    hyps["ambient_perfect_localization"] = _ambient_perfect_evidence(
        V, ctx.probes(seed))
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, None, "probes", seed)
    ok = funcfield.perfect_localization_fixed_check(V, G, seed=seed)
    fp = ctx.fixed_probes(seed)
    identity, pairs = True, 0
    for x in fp:
        if V.contains(x):
            continue
        for r in fp:
            pairs += 1
            in_colon_cap_fixed = (V.contains(r) and V.contains(r * x)
                                  and G.is_fixed(r))
            in_fixed_colon = (V.contains(r) and G.is_fixed(r)
                              and V.contains(r * x) and G.is_fixed(r * x))
            identity = identity and (in_colon_cap_fixed == in_fixed_colon)
    conclusion = {"fixed_perfect_localization": ok,
                  "colon_contraction_identity": identity,
                  "colon_membership_samples": pairs}
    return _outcome(tid, inst, claim, hyps, ok and identity, conclusion,
                    None, "probes", seed)


@_register("prop_4_9", ("finite",),
           "an incomparability pair stays an incomparability pair on "
           "fixed rings")
def _check_prop_4_9(ctx, inst, seed):
    tid, claim = "prop_4_9", CHECKERS["prop_4_9"][1]
    hyps = {"subring_invariant": ctx.invariant,
            "group_locally_finite": True}
    if not ctx.invariant:
        return _violation(tid, inst, claim, hyps, None, "exhaustive", seed)
    if ctx.T.order > INC_SWEEP_CAP:
        return Verdict(tid, inst.name, claim, hyps, "inconclusive",
                       witnesses={"reason": "ambient order above the "
                                            "intermediate-ring sweep cap",
                                  "order": ctx.T.order,
                                  "cap": INC_SWEEP_CAP},
                       confidence="exhaustive", seed=seed)
    hyps["ambient_inc_pair"] = extend.is_inc_pair(ctx.R)
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, None, "exhaustive", seed)
    _, inner, _ = ctx.fixed_pair
    ok = extend.is_inc_pair(inner)
    conclusion = {"fixed_inc_pair": ok}
    return _outcome(tid, inst, claim, hyps, ok, conclusion, None,
                    "exhaustive", seed)


@_register("cor_4_10", ("finite", "funcfield"),
           "a normal pair stays a normal pair on fixed rings")
def _check_cor_4_10(ctx, inst, seed):
    tid, claim = "cor_4_10", CHECKERS["cor_4_10"][1]
    if ctx.kind == "finite":
        hyps = {"subring_invariant": ctx.invariant,
                "group_locally_finite": True}
        if not ctx.invariant:
            return _violation(tid, inst, claim, hyps, None, "exhaustive", seed)
        if ctx.T.order > INC_SWEEP_CAP:
            return Verdict(tid, inst.name, claim, hyps, "inconclusive",
                           witnesses={"reason": "ambient order above the "
                                                "intermediate-ring sweep cap",
                                      "order": ctx.T.order,
                                      "cap": INC_SWEEP_CAP},
                           confidence="exhaustive", seed=seed)
        hyps["ambient_normal_pair"] = extend.is_normal_pair(ctx.R)
        if not all(hyps.values()):
            return _violation(tid, inst, claim, hyps, None, "exhaustive", seed)
        _, inner, _ = ctx.fixed_pair
        ok = extend.is_normal_pair(inner)
        conclusion = {"fixed_normal_pair": ok}
        return _outcome(tid, inst, claim, hyps, ok, conclusion, None,
                        "exhaustive", seed)
    V, G = ctx.V, ctx.G
    hyps = {"valuation_ring_invariant": ctx.invariant,
            "scaling_action": ctx.scaling,
            "group_locally_finite": True}
    if not (ctx.invariant and ctx.scaling):
        return _violation(tid, inst, claim, hyps, None, "probes", seed)
    hyps["ambient_normal_pair"] = (ctx.monic_obstruction(seed)
                                   and ctx.minimal_evidence(seed))
    if not all(hyps.values()):
        return _violation(tid, inst, claim, hyps, None, "probes", seed)
    verdict = funcfield.normal_pair_fixed_check(V, G, seed=seed)
    if verdict == "inconclusive":
        return Verdict(tid, inst.name, claim, hyps, "inconclusive",
                       witnesses={"reason": "bounded closure could not "
                                            "decide every seed set"},
                       confidence="probes", seed=seed)
    conclusion = {"fixed_normal_pair": verdict == "pass"}
    return _outcome(tid, inst, claim, hyps, verdict == "pass", conclusion,
                    None, "probes", seed)


THEOREM_IDS = tuple(CHECKERS)


# ------------------------------------------------------------------- dispatch

def verify(theorem_id, instance, seed=0):
    """Run one checker on one instance; the instance seed wins if set."""
    if theorem_id not in CHECKERS:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    kinds, _, fn = CHECKERS[theorem_id]
    if instance.kind not in kinds:
        raise IncompatibleInstance(
            f"{theorem_id} applies to {'/'.join(sorted(kinds))} instances, "
            f"but {instance.name} is {instance.kind}")
    eff_seed = instance.seed if instance.seed is not None else int(seed)
    start = time.perf_counter()
    verdict = fn(instance.context(), instance, eff_seed)
    verdict.runtime = time.perf_counter() - start
    return verdict


def verify_all(instance, seed=0):
    checks = instance.checks or instance.default_checks()
    return [verify(tid, instance, seed) for tid in checks]


def run_catalog(seed=0, instances=None):
    out = []
    for inst in (instances if instances is not None else catalog()):
        out.extend(verify_all(inst, seed))
    return out


def report_json(verdicts, seed=0):
    """Byte-stable JSON report; sorted verdicts, sorted keys, no runtimes."""
    docs = sorted((v.to_dict() for v in verdicts),
                  key=lambda d: (d["instance"], d["theorem"]))
    doc = {"schema": SCHEMA, "seed": int(seed), "verdicts": docs}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def summary_table(verdicts):
    rows = sorted((v.instance, v.theorem, v.status, v.confidence)
                  for v in verdicts)
    w_inst = max((len(r[0]) for r in rows), default=8)
    w_thm = max((len(r[1]) for r in rows), default=7)
    lines = []
    for inst, thm, status, conf in rows:
        tag = status.upper()
        if status == "pass" and conf == "probes":
            tag = "PASS-on-probes"
        lines.append(f"{inst:<{w_inst}}  {thm:<{w_thm}}  {tag}")
    return "\n".join(lines)


# -------------------------------------------------------------------- catalog

FINITE_POSITIVE_CHECKS = [
    "lemma_2_1", "lemma_2_2a", "lemma_2_2b", "lemma_2_2c", "prop_2_3",
    "lemma_2_4", "thm_2_5_consistency", "thm_2_6", "lemma_3_1", "lemma_3_2",
    "prop_4_1", "prop_4_2", "prop_4_3", "cor_4_4", "lemma_4_6", "thm_4_7",
    "prop_4_9", "cor_4_10"]
COLLAPSE_CHECKS = [
    "lemma_2_1", "prop_2_3", "lemma_2_4", "thm_2_5_consistency", "thm_2_6",
    "example_2_8", "lemma_3_1", "prop_4_1", "prop_4_3", "lemma_4_6",
    "prop_4_9"]
FUNCFIELD_CHECKS = [
    "lemma_2_1", "lemma_3_1", "lemma_3_2", "lemma_3_4_witness", "prop_3_5",
    "thm_3_6", "prop_4_1", "prop_4_2", "lemma_4_6", "thm_4_7", "cor_4_10"]


def catalog():
    """The shipped instances: positives, collapses, and negative tests."""
    return [
        Instance("trivial-equal", "zmod(6)", {"gens": ["1"]}, ["identity"],
                 ["lemma_2_1", "thm_2_5_consistency", "prop_4_1", "prop_4_2",
                  "lemma_4_6", "thm_4_7", "prop_4_9", "cor_4_10"],
                 expected={"ambient_kind": "TrivialEqual"}),
        Instance("inert-positive", "gf(2,6)",
                 {"gens": ["(0,1,1,1,0,0)"]},
                 ["compose(frobenius,frobenius)"],
                 FINITE_POSITIVE_CHECKS,
                 expected={"ambient_kind": "MinimalInert",
                           "fixed_kind": "MinimalInert"}),
        Instance("decomposed-positive", "prod(gf(3,2),gf(3,2))", "diag",
                 ["componentwise(frobenius,frobenius)"],
                 FINITE_POSITIVE_CHECKS,
                 expected={"ambient_kind": "MinimalDecomposed",
                           "fixed_kind": "MinimalDecomposed"}),
        Instance("ramified-positive", "idealization(gf(3,2),self)", "base",
                 ["idealization(frobenius)"],
                 FINITE_POSITIVE_CHECKS,
                 expected={"ambient_kind": "MinimalRamified",
                           "fixed_kind": "MinimalRamified"}),
        Instance("inert-collapse", "gf(2,2)", {"gens": []}, ["frobenius"],
                 COLLAPSE_CHECKS, tags=["collapse"],
                 expected={"ambient_kind": "MinimalInert"}),
        Instance("decomposed-collapse", "prod(gf(5,1),gf(5,1))", "diag",
                 ["swap"], COLLAPSE_CHECKS, tags=["collapse"],
                 expected={"ambient_kind": "MinimalDecomposed"}),
        Instance("ramified-collapse", "idealization(gf(5,1),self)", "base",
                 ["module_negation"], COLLAPSE_CHECKS, tags=["collapse"],
                 expected={"ambient_kind": "MinimalRamified"}),
        Instance("char-violation", "idealization(gf(2,2),self)", "base",
                 ["idealization(frobenius)"],
                 ["lemma_2_1", "prop_2_3", "lemma_2_4",
                  "thm_2_5_consistency", "thm_2_6", "prop_4_1", "prop_4_3",
                  "lemma_4_6"],
                 tags=["char-violation"],
                 expected={"ambient_kind": "MinimalRamified"}),
        Instance("moved-subring", "prod(gf(3,2),gf(3,2))",
                 {"gens": ["((0,1),(0,0))"]}, ["swap"],
                 ["thm_2_6"], tags=["negative-test"]),
        Instance("funcfield-5-2", "funcfield(5,x,6)", None, ["scale(2)"],
                 FUNCFIELD_CHECKS),
        Instance("funcfield-7-3", "funcfield(7,x,6)", None, ["scale(3)"],
                 FUNCFIELD_CHECKS),
        Instance("moved-valuation", "funcfield(5,x,6)", None,
                 ["translate(1)"],
                 ["lemma_2_1", "lemma_3_4_witness", "lemma_3_1", "lemma_3_2",
                  "prop_3_5", "thm_3_6"],
                 tags=["negative-test"]),
    ]
