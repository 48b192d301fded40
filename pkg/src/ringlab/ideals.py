"""Ideal arithmetic for finite rings and their subrings.

An Ideal always remembers the ring it is an ideal of (the domain, possibly a
subring handle inside a larger ambient ring) while storing member indices in
the ambient ring's index space, so ideals of R inside T compose freely with
the ambient tables.
"""

from __future__ import annotations

import numpy as np

from ringlab import _kernels, core
from ringlab.errors import CapExceeded, ConstructionError

IDEAL_LATTICE_CAP = 10000


class Ideal:
    """An ideal of a ring-or-subring, as a sorted ambient index set."""

    def __init__(self, domain, members, check=True):
        self.domain = core.as_handle(domain)
        self.ring = self.domain.ambient
        self.members = np.unique(np.asarray(members, dtype=np.intp))
        self.members.setflags(write=False)
        mask = np.zeros(self.ring.order, dtype=bool)
        mask[self.members] = True
        mask.setflags(write=False)
        self.mask = mask
        if check:
            bad = self.violation()
            if bad is not None:
                raise ConstructionError(f"not an ideal: {bad}")

    def violation(self):
        R, m = self.ring, self.members
        if not self.domain.mask[m].all():
            return "members outside the domain ring"
        if not self.mask[R.zero]:
            return "missing zero"
        if m.size and not self.mask[R.neg[m]].all():
            return "not closed under negation"
        if m.size and not self.mask[R.add[np.ix_(m, m)]].all():
            return "not closed under addition"
        if m.size and not self.mask[R.mul[np.ix_(self.domain.members, m)]].all():
            return "does not absorb ring multiplication"
        return None

    @property
    def size(self):
        return int(self.members.size)

    def is_proper(self):
        return self.size < self.domain.order

    def is_zero(self):
        return self.size == 1

    def contains(self, i):
        return bool(self.mask[i])

    def same(self, other):
        return self.ring is other.ring and np.array_equal(self.members,
                                                          other.members)

    def key(self):
        return self.members.tobytes()

    def labels(self):
        return [self.ring.labels[i] for i in self.members]

    def __repr__(self):
        return f"Ideal({self.size} of {self.domain.order})"


def ideal_generated(ring_or_handle, gens):
    """Smallest ideal of the (sub)ring containing gens."""
    dom = core.as_handle(ring_or_handle)
    R = dom.ambient
    gens = set(int(g) for g in gens) | {R.zero}
    if not dom.mask[list(gens)].all():
        raise ConstructionError("generators outside the domain ring")
    members = _kernels.close_ideal(R.add, R.neg, R.mul,
                                   dom.members.astype(np.intc),
                                   np.asarray(sorted(gens), dtype=np.intc))
    return Ideal(dom, members, check=False)


def zero_ideal(ring_or_handle):
    dom = core.as_handle(ring_or_handle)
    return Ideal(dom, [dom.ambient.zero], check=False)


def unit_ideal(ring_or_handle):
    dom = core.as_handle(ring_or_handle)
    return Ideal(dom, dom.members, check=False)


def all_ideals(ring_or_handle):
    """Every ideal of the (sub)ring.

    The lattice is generated by principal ideals under pairwise sum, so a
    join fixpoint over principal seeds is exhaustive.  Results are sorted by
    (size, members) for determinism.
    """
    dom = core.as_handle(ring_or_handle)
    R = dom.ambient
    found = {}
    z = zero_ideal(dom)
    found[z.key()] = z
    principals = []
    for g in dom.members:
        I = ideal_generated(dom, [int(g)])
        if I.key() not in found:
            found[I.key()] = I
        principals.append(I)
    frontier = list(found.values())
    while frontier:
        fresh = []
        for I in frontier:
            for P in principals:
                # I + P is again an ideal: elementwise sums suffice
                J = Ideal(dom, np.unique(R.add[np.ix_(I.members, P.members)]),
                          check=False)
                key = J.key()
                if key not in found:
                    found[key] = J
                    fresh.append(J)
                    if len(found) > IDEAL_LATTICE_CAP:
                        raise CapExceeded("ideal lattice exceeds cap")
        frontier = fresh
    out = sorted(found.values(), key=lambda I: (I.size, tuple(I.members)))
    return out


def quotient_by_ideal(I):
    """Materialize domain/I.

    Returns (Q, proj) where proj maps ambient ring indices to Q indices, -1
    outside the domain.
    """
    dom = I.domain
    if dom.is_full():
        Q, proj = core.quotient_ring(dom.ambient, I.members)
        return Q, proj
    S, to_amb, from_amb = core.extract_subring(dom)
    Q, proj_s = core.quotient_ring(S, from_amb[I.members])
    proj = np.full(dom.ambient.order, -1, dtype=np.intc)
    proj[to_amb] = proj_s[from_amb[to_amb]]
    return Q, proj


def has_zero_divisors(Q):
    nz = np.arange(Q.order) != Q.zero
    return bool((Q.mul[np.ix_(nz, nz)] == Q.zero).any())


def is_field(Q):
    if Q.order < 2:
        return False
    nz = np.flatnonzero(np.arange(Q.order) != Q.zero)
    return bool((Q.mul[nz] == Q.one).any(axis=1).all())


def is_prime(I):
    """Primality by definition on the quotient: proper and no zero divisors."""
    if not I.is_proper():
        return False
    Q, _ = quotient_by_ideal(I)
    return not has_zero_divisors(Q)


def is_maximal(I):
    """Maximality by definition on the quotient: it is a field."""
    if not I.is_proper():
        return False
    Q, _ = quotient_by_ideal(I)
    return is_field(Q)


def spec(ring_or_handle):
    """All prime ideals, sorted by (size, members)."""
    return [I for I in all_ideals(ring_or_handle) if is_prime(I)]


def max_ideals(ring_or_handle):
    """All maximal ideals, sorted by (size, members)."""
    return [I for I in all_ideals(ring_or_handle) if is_maximal(I)]


def radical(ring_or_handle, I):
    """{r in the (sub)ring : some power r^m lies in I}, m bounded by |ring|.

    The power sequence of any element cycles within |ring| steps, so the
    bound is exhaustive.
    """
    dom = core.as_handle(ring_or_handle)
    R = dom.ambient
    if not isinstance(I, Ideal):
        I = Ideal(dom, I)
    out = []
    for r in dom.members:
        x = int(r)
        seen = set()
        for _ in range(R.order):
            if I.mask[x]:
                out.append(int(r))
                break
            if x in seen:
                break
            seen.add(x)
            x = int(R.mul[x, r])
    return Ideal(dom, out)


def colon(handle, t):
    """(R :_R t) = {r in R : r*t in R}, an ideal of R (asserted)."""
    R = core.as_handle(handle)
    T = R.ambient
    keep = R.mask[T.mul[R.members, int(t)]]
    return Ideal(R, R.members[keep])


def conductor(handle):
    """(R :_R T) = {r in R : r*T subset of R}, the largest common ideal."""
    R = core.as_handle(handle)
    T = R.ambient
    keep = R.mask[T.mul[R.members]].all(axis=1)
    return Ideal(R, R.members[keep])


def ideal_image(sigma, I):
    """The pointwise image of an ideal under an automorphism.

    `sigma` may be an Automorphism object or a raw permutation array over the
    ambient ring.  When the ideal lives in a proper subring, the subring must
    be carried into itself.
    """
    perm = getattr(sigma, "perm", sigma)
    perm = np.asarray(perm)
    dom = I.domain
    if not dom.is_full():
        if not dom.mask[perm[dom.members]].all():
            raise ConstructionError("subring is not invariant under the map")
    return Ideal(dom, perm[I.members])
