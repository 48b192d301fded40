"""Automorphism groups acting on finite rings.

Provides validated ring automorphisms, group closure, orbits with both
hat-sum conventions (orbit sum over distinct orbit members vs. sum over all
group elements), fixed subrings, induced actions on quotients, the explicit
fixed-quotient isomorphism check, and the coefficient-symmetrization
algorithm with replayable certificates.
"""

from __future__ import annotations

import numpy as np

from ringlab import core, ideals
from ringlab.errors import CapExceeded, ConstructionError

GROUP_ORDER_CAP = 100_000


class Automorphism:
    """A ring automorphism given as a permutation of element indices."""

    def __init__(self, ambient, perm, name="map", check=True):
        self.ambient = ambient
        self.perm = core._freeze(perm)
        self.name = name
        if check:
            bad = self.violation()
            if bad is not None:
                raise ConstructionError(f"{name} is not an automorphism: {bad}")

    def violation(self):
        R, p = self.ambient, self.perm
        if p.shape != (R.order,):
            return "wrong length"
        if not np.array_equal(np.sort(p), np.arange(R.order)):
            return "not a bijection"
        if p[R.one] != R.one:
            return f"does not fix 1 = {R.labels[R.one]}"
        bad = p[R.add] != R.add[p[:, None], p[None, :]]
        if bad.any():
            i, j = (int(x) for x in np.argwhere(bad)[0])
            return (f"additive law fails at ({R.labels[i]},{R.labels[j]})")
        bad = p[R.mul] != R.mul[p[:, None], p[None, :]]
        if bad.any():
            i, j = (int(x) for x in np.argwhere(bad)[0])
            return (f"multiplicative law fails at ({R.labels[i]},{R.labels[j]})")
        return None

    def __call__(self, i):
        return int(self.perm[i])

    def compose(self, other):
        """self after other."""
        if self.ambient is not other.ambient:
            raise ConstructionError("automorphisms of different rings")
        return Automorphism(self.ambient, self.perm[other.perm],
                            name=f"{self.name}*{other.name}", check=False)

    def inverse(self):
        inv = np.empty_like(self.perm)
        inv[self.perm] = np.arange(self.perm.size)
        return Automorphism(self.ambient, inv, name=f"{self.name}^-1",
                            check=False)

    def is_identity(self):
        return bool((self.perm == np.arange(self.perm.size)).all())

    def key(self):
        return self.perm.tobytes()

    def __repr__(self):
        return f"Automorphism({self.name} on {self.ambient.construction})"


def identity_automorphism(R):
    return Automorphism(R, np.arange(R.order), name="id", check=False)


def power_map(R, e, name=None):
    """x -> x^e; validated, so non-automorphic powers are rejected."""
    perm = np.array([R.pow(i, e) for i in range(R.order)], dtype=np.intc)
    return Automorphism(R, perm, name=name or f"pow{e}")


def frobenius(R):
    """x -> x^p for p = char(R); rejected when not bijective or not a hom."""
    p = R.char()
    if not core._is_prime(p):
        raise ConstructionError(f"characteristic {p} is not prime")
    return power_map(R, p, name="frobenius")


def swap(T):
    """(a,b) -> (b,a) on a product of two equal-order rings."""
    A, B = T.meta["factors"]
    if A.order != B.order:
        raise ConstructionError("swap needs factors of equal order")
    t = np.arange(T.order)
    perm = (t % B.order) * B.order + t // B.order
    return Automorphism(T, perm, name="swap")


def componentwise(T, sigma_a, sigma_b):
    """(a,b) -> (sigma_a(a), sigma_b(b)) on a product ring."""
    A, B = T.meta["factors"]
    t = np.arange(T.order)
    perm = sigma_a.perm[t // B.order] * B.order + sigma_b.perm[t % B.order]
    name = f"({sigma_a.name},{sigma_b.name})"
    return Automorphism(T, perm, name=name)


def module_negation(T):
    """(r|m) -> (r|-m) on an idealization; always an automorphism."""
    M = T.meta["module"]
    t = np.arange(T.order)
    perm = (t // M.order) * M.order + M.neg[t % M.order]
    return Automorphism(T, perm, name="negate-module")


def idealization_map(T, base_auto, module_perm, name=None):
    """(r|m) -> (base_auto(r)|module_perm(m)) on an idealization, validated.

    Covers maps like (a,b) -> (a^p, b^p): applying a base automorphism to
    both coordinates of R(+)R is one when p-th powering is additive.
    """
    M = T.meta["module"]
    t = np.arange(T.order)
    module_perm = np.asarray(module_perm)
    perm = base_auto.perm[t // M.order] * M.order + module_perm[t % M.order]
    return Automorphism(T, perm, name=name or f"({base_auto.name}|map)")


class ActionGroup:
    """A finite group of automorphisms, closed and canonically ordered."""

    def __init__(self, ambient, members, generators):
        self.ambient = ambient
        self.members = tuple(sorted(members, key=lambda a: a.key()))
        self.generators = tuple(generators)
        self.perms = np.stack([a.perm for a in self.members])
        self.perms.setflags(write=False)

    @property
    def order(self):
        return len(self.members)

    def is_trivial(self):
        return self.order == 1

    def fixed_mask(self):
        return (self.perms == np.arange(self.ambient.order)[None, :]).all(axis=0)

    def __repr__(self):
        return (f"ActionGroup(order {self.order} on "
                f"{self.ambient.construction})")


def close_group(gens, cap=GROUP_ORDER_CAP):
    """Close a generator list under composition and inverse."""
    if not gens:
        raise ConstructionError("need at least one generator")
    R = gens[0].ambient
    for g in gens:
        if g.ambient is not R:
            raise ConstructionError("generators live on different rings")
        bad = g.violation()
        if bad is not None:
            raise ConstructionError(f"generator {g.name}: {bad}")
    ident = identity_automorphism(R)
    found = {ident.key(): ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                b = g.compose(a)
                if b.key() not in found:
                    found[b.key()] = b
                    fresh.append(b)
                    if len(found) > cap:
                        raise CapExceeded(f"group closure exceeds cap {cap}")
        frontier = fresh
    # inverses are automatic in a finite closed monoid of bijections
    return ActionGroup(R, list(found.values()), gens)


def is_invariant_subring(handle, G):
    """sigma(R) inside R for every generator; enough for the whole group."""
    for g in G.generators:
        if not handle.mask[g.perm[handle.members]].all():
            return False
    return True


class OrbitRecord:
    """Orbit data of one element under an ActionGroup.

    orbit_sum adds each distinct orbit member once; group_sum adds sigma(t)
    over every group element (the finite-group convention).
    """

    def __init__(self, element, members, size, orbit_sum, group_sum,
                 orbit_prod):
        self.element = element
        self.members = members
        self.size = size
        self.orbit_sum = orbit_sum
        self.group_sum = group_sum
        self.orbit_prod = orbit_prod

    def __repr__(self):
        return f"OrbitRecord(t={self.element}, n={self.size})"


def orbit(t, G):
    R = G.ambient
    images = G.perms[:, int(t)]
    members = np.unique(images)
    osum = R.zero
    oprod = R.one
    for x in members:
        osum = int(R.add[osum, x])
        oprod = int(R.mul[oprod, x])
    gsum = R.zero
    for x in images:
        gsum = int(R.add[gsum, x])
    return OrbitRecord(int(t), members, int(members.size), osum, gsum, oprod)


def orbit_sizes(G, elements=None):
    """n_t for each requested element (default: the whole ambient ring)."""
    if elements is None:
        elements = np.arange(G.ambient.order)
    return {int(t): int(np.unique(G.perms[:, int(t)]).size) for t in elements}


def fixed_subring(ring_or_handle, G):
    """The subring of G-fixed elements of S, as a handle in S's ambient ring."""
    S = core.as_handle(ring_or_handle)
    if S.ambient is not G.ambient:
        raise ConstructionError("handle and group live on different rings")
    if not is_invariant_subring(S, G):
        raise ConstructionError("subring is not invariant under the group")
    fixed = G.fixed_mask()
    members = S.members[fixed[S.members]]
    return core.SubringHandle(S.ambient, members)  # check: must be a subring


def ideal_orbit(I, G):
    """Distinct images sigma(I), sorted by member key."""
    seen = {}
    for a in G.members:
        J = ideals.ideal_image(a, I)
        seen.setdefault(J.key(), J)
    return sorted(seen.values(), key=lambda J: J.key())


def quotient_action(ring_or_handle, M, G):
    """Quotient by an ideal with singleton orbit, with the induced action.

    Returns (Q, proj, induced_group).
    """
    dom = core.as_handle(ring_or_handle)
    orbit_of_M = ideal_orbit(M, G)
    if len(orbit_of_M) != 1:
        raise ConstructionError(
            f"ideal orbit has {len(orbit_of_M)} members, not a singleton")
    Q, proj = ideals.quotient_by_ideal(M)
    gens = []
    for g in G.generators:
        qperm = np.full(Q.order, -1, dtype=np.intc)
        for r in dom.members:
            src, dst = proj[r], proj[g.perm[r]]
            if qperm[src] >= 0 and qperm[src] != dst:
                raise ConstructionError("induced map is not well-defined")
            qperm[src] = dst
        gens.append(Automorphism(Q, qperm, name=f"induced-{g.name}"))
    return Q, proj, close_group(gens)


def int_mult(R, n, x):
    """n.x = x + ... + x (n times) by doubling; n >= 0."""
    acc, base = R.zero, int(x)
    while n > 0:
        if n & 1:
            acc = int(R.add[acc, base])
        base = int(R.add[base, base])
        n >>= 1
    return acc


def fixed_quotient_iso_check(ring_or_handle, M, G):
    """Explicitly build fixed(R)/(M cap fixed(R)) -> fixed(R/M) and verify it.

    Returns a dict with individually evaluated hypotheses, the overall
    status, and the isomorphism as coset-label pairs when it exists.
    Hypotheses: M maximal; singleton ideal orbit; the residue characteristic
    divides no orbit size in R.
    """
    dom = core.as_handle(ring_or_handle)
    R = dom.ambient
    RG = fixed_subring(dom, G)
    m_small = ideals.Ideal(RG, RG.members[M.mask[RG.members]])
    QR, projR = ideals.quotient_by_ideal(m_small)

    hyps = {}
    hyps["ideal_is_maximal"] = ideals.is_maximal(M)
    hyps["ideal_orbit_is_singleton"] = len(ideal_orbit(M, G)) == 1
    p = QR.char()
    sizes = orbit_sizes(G, dom.members)
    offender = next((t for t, n in sizes.items() if n % p == 0), None)
    hyps["char_divides_no_orbit_size"] = offender is None

    out = {"hypotheses": hyps, "residue_char": p}
    if offender is not None:
        out["offending_orbit"] = {"element": R.labels[offender],
                                  "size": sizes[offender]}
    if not all(hyps.values()):
        out["status"] = "hypothesis-violation"
        return out

    Q, proj, Gq = quotient_action(dom, M, G)
    QG = fixed_subring(Q, Gq)
    phi = np.full(QR.order, -1, dtype=np.intc)
    ok = True
    for r in RG.members:
        src, dst = projR[r], proj[r]
        if phi[src] >= 0 and phi[src] != dst:
            ok = False  # not well-defined
        phi[src] = dst
    if (phi < 0).any():
        ok = False
    if ok:
        image = np.unique(phi)
        ok = (image.size == QR.order                      # injective
              and image.size == QG.order                  # right size
              and bool(QG.mask[image].all())              # lands in fixed part
              and phi[QR.zero] == Q.zero and phi[QR.one] == Q.one
              and not (phi[QR.add] != Q.add[phi[:, None], phi[None, :]]).any()
              and not (phi[QR.mul] != Q.mul[phi[:, None], phi[None, :]]).any())
    out["status"] = "pass" if ok else "fail"
    if ok:
        out["iso"] = [[QR.labels[i], Q.labels[phi[i]]]
                      for i in range(QR.order)]
    return out


def symmetrize_representation(t, terms, R_handle, G, mode="orbit"):
    """Rewrite t = sum r_i u_i with fixed coefficients, up to a multiplier.

    Inputs: t a G-fixed element of the ambient ring T; terms a list of
    (r_i, u_i) with r_i in R and u_i G-fixed; R_handle an invariant subring.
    Returns a certificate dict: m, terms as (m_i, r_i', u_i) with every r_i'
    in fixed(R), such that m.t = sum m_i.(r_i' u_i) holds in T; replay with
    replay_symmetrization.

    Orbit mode follows the stagewise construction: hit the identity with one
    coset representative per orbit member of the first unfixed coefficient
    and add up, which turns that coefficient into its orbit sum; repeat.  The
    running value m.t must stay nonzero (for nonzero t); if it vanishes the
    certificate reports a hypothesis failure instead of a result.  Full-group
    mode sums over every group element at once: m = |G| and each coefficient
    becomes its group sum, fixed by symmetry, with no nonzero requirement.
    """
    T = G.ambient
    if R_handle.ambient is not T:
        raise ConstructionError("subring handle not over the action's ring")
    if not is_invariant_subring(R_handle, G):
        raise ConstructionError("subring is not invariant")
    fixed = G.fixed_mask()
    t = int(t)
    if not fixed[t]:
        raise ConstructionError("t is not fixed by the group")
    coeffs = [int(r) for r, _ in terms]
    us = [int(u) for _, u in terms]
    for r in coeffs:
        if not R_handle.mask[r]:
            raise ConstructionError("coefficient outside the subring")
    for u in us:
        if not fixed[u]:
            raise ConstructionError("a u_i is not fixed by the group")
    acc = T.zero
    for r, u in zip(coeffs, us):
        acc = int(T.add[acc, T.mul[r, u]])
    if acc != t:
        raise ConstructionError("t = sum r_i u_i fails to verify")

    cert = {"mode": mode, "t": T.labels[t], "status": "ok"}
    if mode == "full-group":
        cert["convention"] = "group-sum"
        m = G.order
        out_terms = []
        for r, u in zip(coeffs, us):
            gs = orbit(r, G).group_sum
            out_terms.append((1, gs, u))
    elif mode == "orbit":
        cert["convention"] = "orbit-sum"
        m = 1
        stage_mult = [1] * len(coeffs)
        snapshots = [None] * len(coeffs)
        primes = list(coeffs)
        for i in range(len(primes)):
            if not fixed[primes[i]]:
                ob = orbit(primes[i], G)
                reps = []
                seen = set()
                for a in G.members:
                    img = int(a.perm[primes[i]])
                    if img not in seen:
                        seen.add(img)
                        reps.append(a)
                stage_mult[i] = ob.size
                m *= ob.size
                for j in range(len(primes)):
                    s = T.zero
                    for a in reps:
                        s = int(T.add[s, a.perm[primes[j]]])
                    primes[j] = s
                if t != T.zero and int_mult(T, m, t) == T.zero:
                    cert["status"] = "hypothesis-failure"
                    cert["reason"] = (f"running value {m}.t vanished; the "
                                      "nonzero requirement fails here")
                    cert["m"] = m
                    return cert
            # fixed from here on: later stages only scale this slot
            snapshots[i] = primes[i]
        out_terms = []
        for i, u in enumerate(us):
            m_i = 1
            for j in range(i + 1, len(coeffs)):
                m_i *= stage_mult[j]
            out_terms.append((m_i, snapshots[i], u))
    else:
        raise ConstructionError(f"unknown mode {mode!r}")

    RG_mask = R_handle.mask & fixed
    for _, rp, _ in out_terms:
        if not RG_mask[rp]:
            raise ConstructionError("averaged coefficient escaped fixed(R)")
    cert["m"] = m
    cert["terms"] = [(mi, T.labels[rp], T.labels[u]) for mi, rp, u in out_terms]
    cert["_indices"] = (t, [(mi, rp, u) for mi, rp, u in out_terms])
    if not replay_symmetrization(T, cert):
        raise ConstructionError("certificate failed to replay")
    return cert


def replay_symmetrization(T, cert):
    """Re-verify a symmetrization certificate by table evaluation alone."""
    t, terms = cert["_indices"]
    lhs = int_mult(T, cert["m"], t)
    rhs = T.zero
    for mi, rp, u in terms:
        rhs = int(T.add[rhs, int_mult(T, mi, int(T.mul[rp, u]))])
    return lhs == rhs
