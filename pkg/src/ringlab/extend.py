"""Extension analysis: minimality, the integral trichotomy, critical ideals,
intermediate rings, integrality, Gabriel filters, INC and normal pairs.

The extension R in T is always passed as a SubringHandle whose ambient ring
is T.  The brute-force minimality oracle and the case classification are run
independently and any disagreement raises, since the classification itself
is the statement under test.
"""

from __future__ import annotations

import numpy as np

from ringlab import action, core, ideals
from ringlab.errors import CapExceeded, ConstructionError, IncompatibleInstance

INTERMEDIATE_CAP = 64
COEFF_SEARCH_BUDGET = 4096

KINDS = ("NotAnExtension", "TrivialEqual", "NotMinimal", "MinimalInert",
         "MinimalDecomposed", "MinimalRamified", "MinimalIntegrallyClosed")


class ExtensionReport:
    """Classification result for one extension."""

    def __init__(self, kind, conductor=None, crucial_max=None, witnesses=None,
                 critical=None):
        if kind not in KINDS:
            raise ConstructionError(f"unknown kind {kind}")
        self.kind = kind
        self.conductor = conductor
        self.crucial_max = crucial_max
        self.witnesses = witnesses or {}
        self.critical = critical

    def to_dict(self):
        def ideal_labels(I):
            return None if I is None else I.labels()

        out = {"kind": self.kind,
               "conductor": ideal_labels(self.conductor),
               "crucial_maximal_ideal": ideal_labels(self.crucial_max),
               "critical_ideal": ideal_labels(self.critical)}
        wit = {}
        for k, v in self.witnesses.items():
            wit[k] = v.labels() if isinstance(v, ideals.Ideal) else v
        out["witnesses"] = wit
        return out

    def __repr__(self):
        return f"ExtensionReport({self.kind})"


def is_minimal_extension(handle):
    """No intermediate ring: adjoining any outside element fills T."""
    T = handle.ambient
    if handle.is_full():
        raise IncompatibleInstance("extension is trivial: R = T")
    for u in np.flatnonzero(~handle.mask):
        grown = core.subring_closure(T, list(handle.members) + [int(u)])
        if not grown.is_full():
            return False
    return True


def intermediate_rings(handle, cap=INTERMEDIATE_CAP):
    """All rings S with R <= S <= T, by one-generator escalation.

    Any intermediate S is reached: a chain R, R[u1], R[u1,u2], ... of
    closures inside S strictly grows to S, and each step is one of the
    explored edges.  Candidates are escalated in label order.
    """
    T = handle.ambient
    if T.order > cap:
        raise CapExceeded(
            f"intermediate enumeration needs |T| <= {cap}, got {T.order}")
    start = core.subring_closure(T, handle.members)
    if not start.same_members(handle):
        raise ConstructionError("handle is not closed")
    found = {handle.members.tobytes(): handle}
    frontier = [handle]
    order_of = {i: lab for i, lab in enumerate(T.labels)}
    while frontier:
        fresh = []
        for S in frontier:
            outside = sorted((int(u) for u in np.flatnonzero(~S.mask)),
                             key=lambda u: order_of[u])
            for u in outside:
                grown = core.subring_closure(T, list(S.members) + [u])
                key = grown.members.tobytes()
                if key not in found:
                    found[key] = grown
                    fresh.append(grown)
        frontier = fresh
    return sorted(found.values(), key=lambda S: (S.order, tuple(S.members)))


# ------------------------------------------------------------- classification

def _natural_residue_iso(R, C, N):
    """Is r + C -> r + N an isomorphism R/C -> T/N?

    Injective iff R cap N = C; then surjective iff the sizes match.  The map
    is a ring homomorphism by construction, so set tests suffice.
    """
    T = R.ambient
    r_cap_n = R.members[N.mask[R.members]]
    if not np.array_equal(r_cap_n, C.members):
        return False
    return R.order * N.size == T.order * C.size


def _probe_inert(R, C_T):
    """Conductor maximal in T and R/C in T/C a minimal field extension."""
    T = R.ambient
    if not ideals.is_maximal(C_T):
        return None
    Tq, proj = ideals.quotient_by_ideal(C_T)
    Rbar = core.SubringHandle(Tq, np.unique(proj[R.members]))
    S, _, _ = core.extract_subring(Rbar)
    if not ideals.is_field(S) or not ideals.is_field(Tq):
        return None
    if Rbar.is_full() or not is_minimal_extension(Rbar):
        return None
    return {"residue_bottom_order": S.order, "residue_top_order": Tq.order}


def _probe_decomposed(R, C, maxes_T):
    """Two maximal ideals over the conductor with isomorphic residues."""
    T = R.ambient
    for i in range(len(maxes_T)):
        for j in range(i + 1, len(maxes_T)):
            N1, N2 = maxes_T[i], maxes_T[j]
            inter = np.flatnonzero(N1.mask & N2.mask)
            if not np.array_equal(inter, np.asarray(C.members)):
                continue
            if (_natural_residue_iso(R, C, N1)
                    and _natural_residue_iso(R, C, N2)):
                return {"N1": N1, "N2": N2}
    return None


def _probe_ramified(R, C, maxes_T):
    """One maximal N with N^2 <= C < N, T/C two-dimensional over R/C."""
    T = R.ambient
    for N in maxes_T:
        prods = np.unique(T.mul[np.ix_(N.members, N.members)])
        Nsq = ideals.ideal_generated(T, prods)
        if not C.mask[Nsq.members].all():
            continue
        if C.size >= N.size or not N.mask[C.members].all():
            continue
        if T.order * C.size != (R.order) ** 2:  # |T/C| = |R/C|^2
            continue
        if not _natural_residue_iso(R, C, N):
            continue
        # exhaustive basis search: some t makes {1, t} span T/C over R/C
        C_T = ideals.Ideal(T, C.members)
        Tq, proj = ideals.quotient_by_ideal(C_T)
        rbar = np.unique(proj[R.members])
        spanned = False
        span_witness = None
        for t in range(Tq.order):
            span = np.unique(Tq.add[np.ix_(rbar, Tq.mul[rbar, t])])
            if span.size == Tq.order:
                spanned = True
                span_witness = Tq.labels[t]
                break
        if spanned:
            return {"N": N, "dimension": 2, "basis_second": span_witness}
    return None


def classify_extension(handle):
    """Full report for R in T: trichotomy checked against the brute oracle.

    A minimal finite extension must match exactly one of the three integral
    cases; zero or several matches is a hard error by design, because the
    trichotomy itself is under test.
    """
    R = handle
    T = R.ambient
    if R.is_full():
        return ExtensionReport("TrivialEqual",
                               conductor=ideals.unit_ideal(R))
    C = ideals.conductor(R)
    # the conductor is an ideal of T as well; the constructor asserts it
    C_T = ideals.Ideal(T, C.members)
    crit = critical_ideal(R)
    if not is_minimal_extension(R):
        return ExtensionReport("NotMinimal", conductor=C, critical=crit)
    if not ideals.is_maximal(C):
        raise ConstructionError(
            "minimal finite extension with non-maximal conductor: "
            "classification contract broken")
    maxes_T = ideals.max_ideals(T)
    probes = {
        "MinimalInert": _probe_inert(R, C_T),
        "MinimalDecomposed": _probe_decomposed(R, C, maxes_T),
        "MinimalRamified": _probe_ramified(R, C, maxes_T),
    }
    hits = [k for k, v in probes.items() if v is not None]
    if len(hits) != 1:
        raise ConstructionError(
            f"trichotomy matched {hits or 'nothing'} on a minimal extension")
    kind = hits[0]
    return ExtensionReport(kind, conductor=C, crucial_max=C,
                           witnesses=probes[kind], critical=crit)


def critical_ideal(handle):
    """Common radical of all colon ideals (R : t), t outside R, if any.

    When it exists it is asserted prime.
    """
    R = handle
    T = R.ambient
    outside = np.flatnonzero(~R.mask)
    if outside.size == 0:
        return None
    common = None
    for t in outside:
        I = ideals.colon(R, int(t))
        rad = ideals.radical(R, I)
        if common is None:
            common = rad
        elif not common.same(rad):
            return None
    if not ideals.is_prime(common):
        raise ConstructionError("critical ideal exists but is not prime")
    return common


# ---------------------------------------------------------------- integrality

def _eval_monic(T, coeffs, t):
    """x^d + sum coeffs[i] x^i at x = t, coefficients as T indices."""
    val = T.pow(t, len(coeffs))
    for i, c in enumerate(coeffs):
        val = int(T.add[val, T.mul[c, T.pow(t, i)]])
    return val


def _power_cycle_witness(R, t):
    T = R.ambient
    seen = {}
    x, k = T.one, 0
    while x not in seen:
        seen[x] = k
        x = int(T.mul[x, t])
        k += 1
    n, m = seen[x], k
    coeffs = [T.zero] * m
    coeffs[n] = int(T.neg[T.one])
    return tuple(coeffs)


def is_integral_extension(handle, degree_cap=2):
    """Monic witness over R for every t in T.  Always true on finite rings.

    Low-degree witnesses are searched exhaustively when the budget allows;
    the power-cycle witness x^m - x^n is the fallback.
    """
    R = handle
    T = R.ambient
    witnesses = {}
    mem = [int(i) for i in R.members]
    for t in range(T.order):
        if R.mask[t]:
            witnesses[t] = (int(T.neg[t]),)
        else:
            found = None
            for d in range(2, degree_cap + 1):
                if R.order ** d > COEFF_SEARCH_BUDGET:
                    break
                for combo in _tuples(mem, d):
                    if _eval_monic(T, combo, t) == T.zero:
                        found = combo
                        break
                if found:
                    break
            witnesses[t] = found or _power_cycle_witness(R, t)
        if _eval_monic(T, witnesses[t], t) != T.zero:
            raise ConstructionError("integrality witness failed to verify")
    return True, witnesses


def _tuples(pool, d):
    if d == 0:
        yield ()
        return
    for rest in _tuples(pool, d - 1):
        for x in pool:
            yield rest + (x,)


def integral_closure_in(handle):
    """Elements of T integral over R; all of T when T is finite (asserted)."""
    R = handle
    T = R.ambient
    for t in range(T.order):
        coeffs = _power_cycle_witness(R, t)
        if _eval_monic(T, coeffs, t) != T.zero:
            raise ConstructionError(
                "finite element without a power-cycle witness")
    return core.as_handle(T)


def is_integrally_closed(handle):
    return integral_closure_in(handle).order == handle.order


# ------------------------------------------------ Gabriel filters, flat epis

def extension_filter(handle):
    """{I ideal of R : I.T = T}, exhaustively over the ideal lattice."""
    R = handle
    T = R.ambient
    out = []
    for I in ideals.all_ideals(R):
        if ideals.ideal_generated(T, I.members).size == T.order:
            out.append(I)
    return out


def _colon_by_element(R, I, j):
    """(I : j) = {r in R : r j in I}, an ideal of R."""
    T = R.ambient
    keep = I.mask[T.mul[R.members, int(j)]]
    return ideals.Ideal(R, R.members[keep])


def is_gabriel_filter(ring_or_handle, filt):
    """Evaluate the three filter axioms exhaustively over the ideal lattice:
    upward closure, closure under intersection, and the colon axiom."""
    R = core.as_handle(ring_or_handle)
    lattice = ideals.all_ideals(R)
    fkeys = {I.key() for I in filt}
    for I in filt:
        for J in lattice:
            if J.mask[I.members].all() and J.key() not in fkeys:
                return False  # axiom (i)
    for I in filt:
        for J in filt:
            inter = ideals.Ideal(R, np.flatnonzero(I.mask & J.mask),
                                 check=False)
            if inter.key() not in fkeys:
                return False  # axiom (ii)
    for I in lattice:
        if I.key() in fkeys:
            continue
        for J in filt:
            if all(_colon_by_element(R, I, j).key() in fkeys
                   for j in J.members):
                return False  # axiom (iii) would force I into the filter
    return True


def is_perfect_localization(handle):
    """Flat-epimorphism criterion: (R : t) T = T for every t in T."""
    R = handle
    T = R.ambient
    for t in range(T.order):
        I = ideals.colon(R, t)
        if ideals.ideal_generated(T, I.members).size != T.order:
            return False
    return True


def filter_contraction_check(handle, G):
    """Contractions I cap fixed(R) stay in the fixed-level filter."""
    R = handle
    T = R.ambient
    RG = action.fixed_subring(R, G)
    TG = action.fixed_subring(T, G)
    for I in extension_filter(R):
        J = ideals.Ideal(RG, I.members[RG.mask[I.members]])
        if ideals.ideal_generated(TG, J.members).size != TG.order:
            return False
    return True


# ------------------------------------------------------- INC and normal pairs

def is_inc_pair(handle, cap=INTERMEDIATE_CAP):
    """Incomparability for R <= S over every intermediate ring S."""
    R = handle
    for S in intermediate_rings(R, cap=cap):
        primes = ideals.spec(S)
        for a in range(len(primes)):
            for b in range(len(primes)):
                if a == b:
                    continue
                q, qp = primes[a], primes[b]
                if not qp.mask[q.members].all():
                    continue  # q not inside q'
                ca = q.members[R.mask[q.members]]
                cb = qp.members[R.mask[qp.members]]
                if np.array_equal(ca, cb) and not q.same(qp):
                    return False
    return True


def is_normal_pair(handle, cap=INTERMEDIATE_CAP):
    """Every intermediate ring integrally closed in T."""
    for S in intermediate_rings(handle, cap=cap):
        if not is_integrally_closed(S):
            return False
    return True
