"""Finite commutative unital rings as explicit operation tables.

Every ring is a pair of order x order index matrices plus distinguished zero
and one.  Constructors produce canonical, deterministic element labels so the
same construction expression always yields the same printable ring.  Rings
are immutable after construction.
"""

from __future__ import annotations

import numpy as np

from ringlab import _kernels, polys
from ringlab.errors import CapExceeded, ConstructionError

RING_ORDER_CAP = 4096
AXIOM_AUTOCHECK_LIMIT = 512


def _freeze(a, dtype=np.intc):
    out = np.ascontiguousarray(np.asarray(a, dtype=dtype))
    out.setflags(write=False)
    return out


class FiniteRing:
    """A finite commutative ring with identity, given by full tables.

    Elements are indices 0..order-1; `labels[i]` is the canonical printable
    form of element i.  Cross-ring indices are meaningless: every operation
    here works within a single ambient ring, and functions taking two rings
    say so explicitly.
    """

    def __init__(self, labels, add_table, mul_table, zero, one,
                 construction, meta=None, check=True):
        self.labels = tuple(str(x) for x in labels)
        self.order = len(self.labels)
        if self.order == 0:
            raise ConstructionError("empty ring")
        if self.order > RING_ORDER_CAP:
            raise CapExceeded(f"ring order {self.order} exceeds cap {RING_ORDER_CAP}")
        self.add = _freeze(add_table)
        self.mul = _freeze(mul_table)
        self.zero = int(zero)
        self.one = int(one)
        self.construction = construction
        self.meta = meta or {}
        if self.order > 1 and self.zero == self.one:
            raise ConstructionError("zero == one in a ring of order > 1")
        if check and self.order <= AXIOM_AUTOCHECK_LIMIT:
            bad = self.axiom_violation()
            if bad is not None:
                raise ConstructionError(f"ring axioms fail: {bad}")
        # additive inverse of i is the unique j with i+j = 0
        rows, cols = np.nonzero(self.add == self.zero)
        neg = np.empty(self.order, dtype=np.intc)
        neg[rows] = cols
        self.neg = _freeze(neg)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != self.order:
            raise ConstructionError("duplicate element labels")

    def axiom_violation(self):
        """Exhaustively scan all ring axioms; None when everything holds."""
        return _kernels.ring_axiom_violation(self.add, self.mul, self.zero, self.one)

    def sub(self, i, j):
        return int(self.add[i, self.neg[j]])

    def pow(self, i, n):
        """i**n by square-and-multiply through the table; n >= 0."""
        acc, base = self.one, int(i)
        while n > 0:
            if n & 1:
                acc = int(self.mul[acc, base])
            base = int(self.mul[base, base])
            n >>= 1
        return acc

    def units_mask(self):
        return (self.mul == self.one).any(axis=1)

    def is_unit(self, i):
        return bool((self.mul[i] == self.one).any())

    def inverse(self, i):
        j = np.flatnonzero(self.mul[i] == self.one)
        if j.size == 0:
            raise ConstructionError(f"{self.labels[i]} is not a unit")
        return int(j[0])

    def char(self):
        """Additive order of 1."""
        n, x = 1, self.one
        while x != self.zero:
            x = int(self.add[x, self.one])
            n += 1
        return n

    def label(self, i):
        return self.labels[i]

    def elem(self, label):
        try:
            return self.index[label]
        except KeyError:
            raise ConstructionError(
                f"no element {label!r} in {self.construction}") from None

    def __repr__(self):
        return f"FiniteRing({self.construction}, order={self.order})"


class FiniteModule:
    """A module over a FiniteRing, as an abelian-group table plus scalar table.

    scalar[r, m] is the action of ring element r on module element m.
    """

    def __init__(self, base, labels, add_table, scalar_table, zero,
                 construction, check=True):
        self.base = base
        self.labels = tuple(str(x) for x in labels)
        self.order = len(self.labels)
        self.add = _freeze(add_table)
        self.scalar = _freeze(scalar_table)
        self.zero = int(zero)
        self.construction = construction
        if check:
            bad = self.axiom_violation()
            if bad is not None:
                raise ConstructionError(f"module axioms fail: {bad}")
        rows, cols = np.nonzero(self.add == self.zero)
        neg = np.empty(self.order, dtype=np.intc)
        neg[rows] = cols
        self.neg = _freeze(neg)

    def axiom_violation(self):
        bad = _kernels.abelian_group_violation(self.add, self.zero)
        if bad is not None:
            return ("carrier", *bad)
        R, S, A = self.base, self.scalar, self.add
        if S.shape != (R.order, self.order):
            return ("scalar-shape",)
        if (S[R.one] != np.arange(self.order)).any():
            return ("scalar-unital",)
        # r(m+m') = rm+rm'
        if (S[:, A] != A[S[:, :, None], S[:, None, :]]).any():
            return ("scalar-distributes-over-module-add",)
        # (rs)m = r(sm)
        if (S[R.mul] != S[:, S]).any():
            return ("scalar-associative",)
        # (r+s)m = rm+sm
        if (S[R.add] != A[S[:, None, :], S[None, :, :]]).any():
            return ("scalar-distributes-over-ring-add",)
        return None

    def __repr__(self):
        return f"FiniteModule({self.construction}, order={self.order})"


class SubringHandle:
    """A subring of an ambient FiniteRing, stored as a sorted index set."""

    def __init__(self, ambient, members, check=True):
        self.ambient = ambient
        self.members = _freeze(np.unique(np.asarray(members, dtype=np.intp)),
                               dtype=np.intp)
        mask = np.zeros(ambient.order, dtype=bool)
        mask[self.members] = True
        mask.setflags(write=False)
        self.mask = mask
        if check:
            bad = self.violation()
            if bad is not None:
                raise ConstructionError(f"not a subring: {bad}")

    def violation(self):
        R, m = self.ambient, self.members
        if not (self.mask[R.zero] and self.mask[R.one]):
            return "missing zero or one"
        if not self.mask[R.neg[m]].all():
            return "not closed under negation"
        sq = np.ix_(m, m)
        if not self.mask[R.add[sq]].all():
            return "not closed under addition"
        if not self.mask[R.mul[sq]].all():
            return "not closed under multiplication"
        return None

    @property
    def order(self):
        return int(self.members.size)

    def contains(self, i):
        return bool(self.mask[i])

    def is_full(self):
        return self.order == self.ambient.order

    def same_members(self, other):
        return self.ambient is other.ambient and np.array_equal(
            self.members, other.members)

    def labels(self):
        return [self.ambient.labels[i] for i in self.members]

    def __repr__(self):
        return f"SubringHandle({self.order} of {self.ambient.construction})"


def as_handle(ring_or_handle):
    """Normalize a ring-or-subring argument to a SubringHandle."""
    if isinstance(ring_or_handle, SubringHandle):
        return ring_or_handle
    return SubringHandle(ring_or_handle, np.arange(ring_or_handle.order),
                         check=False)


# ---------------------------------------------------------------- constructors

def make_zmod(n):
    """The ring of integers mod n, labels '0'..'n-1'."""
    if n < 1:
        raise ConstructionError("make_zmod needs n >= 1")
    if n > RING_ORDER_CAP:
        raise CapExceeded(f"order {n} exceeds cap {RING_ORDER_CAP}")
    r = np.arange(n)
    add = (r[:, None] + r[None, :]) % n
    mul = (r[:, None] * r[None, :]) % n
    one = 1 % n
    return FiniteRing([str(i) for i in range(n)], add, mul, 0, one,
                      f"zmod({n})", meta={"kind": "zmod", "n": n})


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def gf_label(coeffs, k):
    digits = list(coeffs) + [0] * (k - len(coeffs))
    return "(" + ",".join(str(c) for c in digits) + ")"


def make_gf(p, k, modulus=None):
    """The field GF(p^k), labels = coefficient tuples, lowest degree first.

    Element index i encodes the polynomial with base-p digits of i; in
    particular index 0 is zero and index 1 is one.  The modulus must be monic
    irreducible of degree k; when omitted, the smallest monic irreducible in
    the digit encoding is chosen, so labels are reproducible.
    """
    if not _is_prime(p):
        raise ConstructionError(f"{p} is not prime")
    if k < 1:
        raise ConstructionError("make_gf needs k >= 1")
    n = p ** k
    if n > RING_ORDER_CAP:
        raise CapExceeded(f"order {n} exceeds cap {RING_ORDER_CAP}")
    if modulus is None:
        modulus = polys.default_irreducible(p, k)
    modulus = polys.ptrim(modulus)
    if polys.pdeg(modulus) != k:
        raise ConstructionError(
            f"modulus degree {polys.pdeg(modulus)} != k = {k}")
    if modulus[-1] != 1:
        raise ConstructionError("modulus must be monic")
    factor = polys.irreducible_factor(modulus, p)
    if factor is not None:
        raise ConstructionError(
            f"modulus {polys.poly_str(modulus)} is reducible: "
            f"factor {polys.poly_str(factor)}")

    pp = p ** np.arange(k, dtype=np.int64)
    digits = (np.arange(n)[:, None] // pp[None, :]) % p  # (n, k) ascending

    addd = (digits[:, None, :] + digits[None, :, :]) % p
    add = addd @ pp

    # convolution coefficients, then reduce each x^d by the modulus
    conv = np.zeros((n, n, 2 * k - 1), dtype=np.int64)
    for a in range(k):
        for b in range(k):
            conv[:, :, a + b] += digits[:, a, None] * digits[None, :, b]
    xpow = np.zeros((2 * k - 1, k), dtype=np.int64)
    for d in range(2 * k - 1):
        rem = polys.pmod((0,) * d + (1,), modulus, p)
        for t, c in enumerate(rem):
            xpow[d, t] = c
    muld = np.einsum("ijd,dt->ijt", conv, xpow) % p
    mul = muld @ pp

    labs = [gf_label(polys.ptrim(tuple(int(c) for c in digits[i])), k)
            for i in range(n)]
    cons = f"gf({p},{k},{polys.poly_str(modulus)})"
    meta = {"kind": "gf", "p": p, "k": k, "modulus": modulus}
    return FiniteRing(labs, add, mul, 0, 1, cons, meta=meta)


def gf_element_poly(R, i):
    """Coefficient tuple of element i of a make_gf ring."""
    p, k = R.meta["p"], R.meta["k"]
    digits = []
    for _ in range(k):
        digits.append(i % p)
        i //= p
    return polys.ptrim(tuple(digits))


def product(A, B):
    """Componentwise product ring on pairs; index = i*|B| + j."""
    n = A.order * B.order
    if n > RING_ORDER_CAP:
        raise CapExceeded(f"order {n} exceeds cap {RING_ORDER_CAP}")
    nb = B.order
    ia = np.arange(A.order)
    ib = np.arange(nb)
    # tables act independently on the two digits
    addA = A.add[ia[:, None], ia[None, :]]
    addB = B.add[ib[:, None], ib[None, :]]
    add = (np.kron(addA, np.ones((nb, nb), dtype=np.int64)) * nb
           + np.tile(addB, (A.order, A.order)))
    mul = (np.kron(A.mul[ia[:, None], ia[None, :]],
                   np.ones((nb, nb), dtype=np.int64)) * nb
           + np.tile(B.mul[ib[:, None], ib[None, :]], (A.order, A.order)))
    labs = [f"({la},{lb})" for la in A.labels for lb in B.labels]
    zero = A.zero * nb + B.zero
    one = A.one * nb + B.one
    cons = f"prod({A.construction},{B.construction})"
    meta = {"kind": "product", "factors": (A, B)}
    return FiniteRing(labs, add, mul, zero, one, cons, meta=meta)


def prod_encode(R, i, j):
    return i * R.meta["factors"][1].order + j


def prod_decode(R, t):
    nb = R.meta["factors"][1].order
    return t // nb, t % nb


def module_over_self(R):
    """R as a module over itself."""
    return FiniteModule(R, R.labels, R.add, R.mul, R.zero,
                        f"self({R.construction})")


def module_via_quotient_scalars(R, Q, proj):
    """Q as an R-module through a ring surjection proj: R -> Q.

    Covers actions like Z/4 on Z/2 via r*m = (r mod 2)m.
    """
    return FiniteModule(R, Q.labels, Q.add, Q.mul[proj], Q.zero,
                        f"module({Q.construction} over {R.construction})")


def idealization(R, M):
    """The ring R(+)M on pairs: (r,m)(r',m') = (rr', rm'+r'm).

    Index = r*|M| + m; identity (1,0); 0(+)M is a square-zero ideal.
    """
    if M.base is not R:
        raise ConstructionError("module base is not the given ring")
    n = R.order * M.order
    if n > RING_ORDER_CAP:
        raise CapExceeded(f"order {n} exceeds cap {RING_ORDER_CAP}")
    nm = M.order
    t = np.arange(n)
    r, m = t // nm, t % nm
    add = R.add[r[:, None], r[None, :]] * nm + M.add[m[:, None], m[None, :]]
    mul = (R.mul[r[:, None], r[None, :]] * nm
           + M.add[M.scalar[r[:, None], m[None, :]],
                   M.scalar[r[None, :], m[:, None]]])
    labs = [f"({R.labels[i]}|{M.labels[j]})" for i in range(R.order)
            for j in range(nm)]
    zero = R.zero * nm + M.zero
    one = R.one * nm + M.zero
    cons = f"idealization({R.construction},{M.construction})"
    meta = {"kind": "idealization", "base": R, "module": M}
    return FiniteRing(labs, add, mul, zero, one, cons, meta=meta)


def ideal_encode(R, i, j):
    return i * R.meta["module"].order + j


def ideal_decode(R, t):
    nm = R.meta["module"].order
    return t // nm, t % nm


# ------------------------------------------------------------------- closures

def subring_closure(T, seed):
    """Smallest subring of T containing seed (zero and one are always added)."""
    seed = np.asarray(
        sorted(set(int(s) for s in seed) | {T.zero, T.one}), dtype=np.intc)
    members = _kernels.close_subring(T.add, T.mul, T.neg, seed)
    return SubringHandle(T, members, check=False)


def is_simple_module(M):
    """True iff M has no proper nonzero submodule.

    Any proper nonzero submodule contains a nonzero cyclic one, so scanning
    cyclic submodules is exhaustive.
    """
    if M.order <= 1:
        raise ConstructionError("zero module rejected")
    for m in range(M.order):
        if m == M.zero:
            continue
        sub = _kernels.close_submodule(M.add, M.neg, M.scalar,
                                       np.array([M.zero, m], dtype=np.intc))
        if sub.size != M.order:
            return False
    return True


def extract_subring(handle):
    """Materialize a SubringHandle as a standalone FiniteRing.

    Returns (S, to_ambient, from_ambient): to_ambient[i] is the ambient index
    of S-element i; from_ambient maps ambient indices back (-1 outside).
    """
    T, mem = handle.ambient, handle.members
    from_amb = np.full(T.order, -1, dtype=np.intc)
    from_amb[mem] = np.arange(mem.size)
    add = from_amb[T.add[np.ix_(mem, mem)]]
    mul = from_amb[T.mul[np.ix_(mem, mem)]]
    labs = [T.labels[i] for i in mem]
    cons = f"subring[{mem.size}]({T.construction})"
    S = FiniteRing(labs, add, mul, int(from_amb[T.zero]), int(from_amb[T.one]),
                   cons, meta={"kind": "subring", "ambient": T}, check=False)
    from_amb.setflags(write=False)
    return S, mem.copy(), from_amb


def quotient_ring(R, ideal_members):
    """R / I for an ideal given by its member indices.

    Returns (Q, proj) with proj[i] = index of the coset of i.  Coset labels
    are '[l]' for the minimal-index representative l.
    """
    imask = np.zeros(R.order, dtype=bool)
    imask[np.asarray(ideal_members, dtype=np.intp)] = True
    if not imask[R.zero]:
        raise ConstructionError("ideal must contain zero")
    proj = np.full(R.order, -1, dtype=np.intc)
    reps = []
    for i in range(R.order):
        if proj[i] >= 0:
            continue
        coset = R.add[i][imask]  # i + I
        proj[coset] = len(reps)
        reps.append(i)
    reps = np.asarray(reps, dtype=np.intp)
    add = proj[R.add[np.ix_(reps, reps)]]
    mul = proj[R.mul[np.ix_(reps, reps)]]
    labs = [f"[{R.labels[i]}]" for i in reps]
    cons = f"quotient({R.construction},{int(imask.sum())})"
    Q = FiniteRing(labs, add, mul, int(proj[R.zero]), int(proj[R.one]), cons,
                   meta={"kind": "quotient", "base": R, "reps": reps})
    proj.setflags(write=False)
    return Q, proj


def handle_within(outer_handle, inner_members):
    """Re-express a nested subring chain inner <= outer <= T.

    Materializes outer as a standalone ring S and returns
    (S, inner_as_handle_in_S, to_ambient, from_ambient).
    """
    S, to_amb, from_amb = extract_subring(outer_handle)
    inner_members = np.asarray(inner_members, dtype=np.intp)
    mapped = from_amb[inner_members]
    if (mapped < 0).any():
        raise ConstructionError("inner members are not inside the outer ring")
    inner = SubringHandle(S, mapped)
    return S, inner, to_amb, from_amb


# --------------------------------------------------------------- isomorphisms

def _greedy_generators(R):
    """A small generating set: extend {0,1} one element at a time."""
    handle = subring_closure(R, [])
    gens = []
    while handle.order < R.order:
        nxt = int(np.flatnonzero(~handle.mask)[0])
        gens.append(nxt)
        handle = subring_closure(R, gens)
    return gens


def _closure_trace(R, gens):
    """Replayable construction of all of R from {0,1} + gens.

    Returns a list of (op, i, j) where op is 'add'/'mul'/'neg'/'gen'/'base'
    and i, j refer to earlier trace positions; entry k defines element k of a
    growth sequence covering R.
    """
    pos = {R.zero: 0, R.one: 1}
    seq = [R.zero, R.one]
    trace = [("base", R.zero, -1), ("base", R.one, -1)]
    for g in gens:
        if g not in pos:
            pos[g] = len(seq)
            seq.append(g)
            trace.append(("gen", g, -1))
    head = 0
    while head < len(seq):
        x = seq[head]
        head += 1
        cands = [("neg", int(R.neg[x]), pos[x], -1)]
        for y in seq[: head]:
            cands.append(("add", int(R.add[x, y]), pos[x], pos[y]))
            cands.append(("mul", int(R.mul[x, y]), pos[x], pos[y]))
        for op, v, i, j in cands:
            if v not in pos:
                pos[v] = len(seq)
                seq.append(v)
                trace.append((op, i, j))
    if len(seq) != R.order:
        raise ConstructionError("generators do not generate")  # greedy prevents this
    return seq, trace


def _element_profile(R, i):
    """Cheap isomorphism invariants of an element."""
    add_ord, x = 1, i
    while x != R.zero:
        x = int(R.add[x, i])
        add_ord += 1
    # multiplicative order when a unit, else 0; nilpotency index, else 0
    mul_ord = 0
    if R.is_unit(i):
        mul_ord, x = 1, i
        while x != R.one:
            x = int(R.mul[x, i])
            mul_ord += 1
    nil = 0
    x, seen = i, set()
    for step in range(1, R.order + 1):
        if x == R.zero:
            nil = step
            break
        if x in seen:
            break
        seen.add(x)
        x = int(R.mul[x, i])
    idem = R.mul[i, i] == i
    return (add_ord, mul_ord, nil, bool(idem))


def find_ring_isomorphism(A, B):
    """A bijection perm with perm[a op b] = perm[a] op perm[b], or None.

    Exhaustive generator-image search with invariant filtering; intended for
    desk-scale orders.
    """
    if A.order != B.order:
        return None
    if A.order == 1:
        return np.zeros(1, dtype=np.intc)
    gens = _greedy_generators(A)
    seq, trace = _closure_trace(A, gens)
    profiles_B = {}
    cand_lists = []
    for g in gens:
        pa = _element_profile(A, g)
        if pa not in profiles_B:
            profiles_B[pa] = [j for j in range(B.order)
                              if _element_profile(B, j) == pa]
        cand_lists.append(profiles_B[pa])

    def replay(images):
        vals = []
        it = iter(images)
        for op, i, j in trace:
            if op == "base":
                vals.append(B.zero if i == A.zero else B.one)
            elif op == "gen":
                vals.append(next(it))
            elif op == "neg":
                vals.append(int(B.neg[vals[i]]))
            elif op == "add":
                vals.append(int(B.add[vals[i], vals[j]]))
            else:
                vals.append(int(B.mul[vals[i], vals[j]]))
        if len(set(vals)) != B.order:
            return None
        perm = np.empty(A.order, dtype=np.intc)
        perm[seq] = vals
        if (perm[A.add] != B.add[perm[:, None], perm[None, :]]).any():
            return None
        if (perm[A.mul] != B.mul[perm[:, None], perm[None, :]]).any():
            return None
        return perm

    def search(k, picked):
        if k == len(cand_lists):
            return replay(picked)
        for c in cand_lists[k]:
            out = search(k + 1, picked + [c])
            if out is not None:
                return out
        return None

    return search(0, [])
