"""Vectorized fallback kernels, used when the compiled extension is absent.

Same contracts as ringlab._kernels._native.  The triple-loop checks are
blocked over the first axis to keep peak memory flat for order-256 tables.
"""

from __future__ import annotations

import numpy as np

_BLOCK = 16


def _first_bad_triple(kind, blk0, mismatch):
    a, b, c = (int(x) for x in np.argwhere(mismatch)[0])
    return (kind, blk0 + a, b, c)


def ring_axiom_violation(add, mul, zero, one):
    """First violated commutative-unital-ring axiom, or None.

    Returns (kind, i, j, k) with unused positions set to -1.  Exhaustive over
    all ordered pairs/triples.
    """
    n = add.shape[0]
    rng = np.arange(n)
    for name, tab in (("add", add), ("mul", mul)):
        if tab.shape != (n, n):
            return (f"{name}-shape", -1, -1, -1)
        if tab.min() < 0 or tab.max() >= n:
            i, j = (int(x) for x in np.argwhere((tab < 0) | (tab >= n))[0])
            return (f"{name}-range", i, j, -1)
        bad = tab != tab.T
        if bad.any():
            i, j = (int(x) for x in np.argwhere(bad)[0])
            return (f"{name}-comm", i, j, -1)
    if (add[zero] != rng).any():
        return ("add-zero", int(np.flatnonzero(add[zero] != rng)[0]), -1, -1)
    if not (add == zero).any(axis=1).all():
        return ("add-inverse", int(np.flatnonzero(~(add == zero).any(axis=1))[0]), -1, -1)
    if (mul[one] != rng).any():
        return ("mul-one", int(np.flatnonzero(mul[one] != rng)[0]), -1, -1)
    for lo in range(0, n, _BLOCK):
        blk = slice(lo, min(lo + _BLOCK, n))
        for name, tab in (("add", add), ("mul", mul)):
            lhs = tab[tab[blk]]            # tab[tab[a,b], c]
            rhs = tab[blk][:, tab]         # tab[a, tab[b,c]]
            bad = lhs != rhs
            if bad.any():
                return _first_bad_triple(f"{name}-assoc", lo, bad)
        mblk = mul[blk]
        lhs = mblk[:, add]                 # mul[a, add[b,c]]
        rhs = add[mblk[:, :, None], mblk[:, None, :]]
        bad = lhs != rhs
        if bad.any():
            return _first_bad_triple("distrib", lo, bad)
    return None


def abelian_group_violation(table, zero):
    """First violated abelian-group axiom for an addition table, or None."""
    n = table.shape[0]
    rng = np.arange(n)
    if table.shape != (n, n) or table.min() < 0 or table.max() >= n:
        return ("range", -1, -1, -1)
    bad = table != table.T
    if bad.any():
        i, j = (int(x) for x in np.argwhere(bad)[0])
        return ("comm", i, j, -1)
    if (table[zero] != rng).any():
        return ("zero", int(np.flatnonzero(table[zero] != rng)[0]), -1, -1)
    if not (table == zero).any(axis=1).all():
        return ("inverse", int(np.flatnonzero(~(table == zero).any(axis=1))[0]), -1, -1)
    for lo in range(0, n, _BLOCK):
        blk = slice(lo, min(lo + _BLOCK, n))
        bad = table[table[blk]] != table[blk][:, table]
        if bad.any():
            return _first_bad_triple("assoc", lo, bad)
    return None


def _closure(mask, passes):
    while True:
        new = passes(mask)
        if new is mask or (new == mask).all():
            return mask
        mask = new


def close_subring(add, mul, neg, seed):
    """Indices of the smallest subset containing seed closed under +, -, *.

    The caller seeds zero and one.
    """
    n = add.shape[0]
    mask = np.zeros(n, dtype=bool)
    mask[np.asarray(seed, dtype=np.intp)] = True

    def grow(m):
        idx = np.flatnonzero(m)
        out = m.copy()
        out[neg[idx]] = True
        sq = np.ix_(idx, idx)
        out[add[sq].ravel()] = True
        out[mul[sq].ravel()] = True
        return out if (out != m).any() else m

    return np.flatnonzero(_closure(mask, grow))


def close_ideal(add, neg, mul, ring_members, seed):
    """Indices of the smallest ring_members-ideal containing seed.

    Closed under addition and negation, and absorbs products with every
    element of ring_members.  The caller seeds zero.
    """
    n = add.shape[0]
    ring_members = np.asarray(ring_members, dtype=np.intp)
    mask = np.zeros(n, dtype=bool)
    mask[np.asarray(seed, dtype=np.intp)] = True

    def grow(m):
        idx = np.flatnonzero(m)
        out = m.copy()
        out[neg[idx]] = True
        out[add[np.ix_(idx, idx)].ravel()] = True
        out[mul[np.ix_(ring_members, idx)].ravel()] = True
        return out if (out != m).any() else m

    return np.flatnonzero(_closure(mask, grow))


def close_submodule(madd, mneg, smul, seed):
    """Indices of the smallest submodule containing seed.

    smul is the full scalar table (ring order x module order); closure is
    under module addition, negation, and every scalar row.
    """
    n = madd.shape[0]
    mask = np.zeros(n, dtype=bool)
    mask[np.asarray(seed, dtype=np.intp)] = True

    def grow(m):
        idx = np.flatnonzero(m)
        out = m.copy()
        out[mneg[idx]] = True
        out[madd[np.ix_(idx, idx)].ravel()] = True
        out[smul[:, idx].ravel()] = True
        return out if (out != m).any() else m

    return np.flatnonzero(_closure(mask, grow))
