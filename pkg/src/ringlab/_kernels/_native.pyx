# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: exhaustive axiom scans and closure fixpoints.

API matches ringlab._kernels._pure; either module may serve as the backend.
"""

import numpy as np


def ring_axiom_violation(const int[:, :] add, const int[:, :] mul, int zero, int one):
    """First violated commutative-unital-ring axiom, or None."""
    cdef int n = add.shape[0]
    cdef int i, j, k, v
    if add.shape[1] != n:
        return ("add-shape", -1, -1, -1)
    if mul.shape[0] != n or mul.shape[1] != n:
        return ("mul-shape", -1, -1, -1)
    for i in range(n):
        for j in range(n):
            v = add[i, j]
            if v < 0 or v >= n:
                return ("add-range", i, j, -1)
            v = mul[i, j]
            if v < 0 or v >= n:
                return ("mul-range", i, j, -1)
    for i in range(n):
        for j in range(i + 1, n):
            if add[i, j] != add[j, i]:
                return ("add-comm", i, j, -1)
            if mul[i, j] != mul[j, i]:
                return ("mul-comm", i, j, -1)
    for i in range(n):
        if add[zero, i] != i:
            return ("add-zero", i, -1, -1)
    for i in range(n):
        v = 0
        for j in range(n):
            if add[i, j] == zero:
                v = 1
                break
        if v == 0:
            return ("add-inverse", i, -1, -1)
    for i in range(n):
        if mul[one, i] != i:
            return ("mul-one", i, -1, -1)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if add[add[i, j], k] != add[i, add[j, k]]:
                    return ("add-assoc", i, j, k)
                if mul[mul[i, j], k] != mul[i, mul[j, k]]:
                    return ("mul-assoc", i, j, k)
                if mul[i, add[j, k]] != add[mul[i, j], mul[i, k]]:
                    return ("distrib", i, j, k)
    return None


def abelian_group_violation(const int[:, :] table, int zero):
    """First violated abelian-group axiom for an addition table, or None."""
    cdef int n = table.shape[0]
    cdef int i, j, k, v
    if table.shape[1] != n:
        return ("range", -1, -1, -1)
    for i in range(n):
        for j in range(n):
            v = table[i, j]
            if v < 0 or v >= n:
                return ("range", i, j, -1)
    for i in range(n):
        for j in range(i + 1, n):
            if table[i, j] != table[j, i]:
                return ("comm", i, j, -1)
    for i in range(n):
        if table[zero, i] != i:
            return ("zero", i, -1, -1)
    for i in range(n):
        v = 0
        for j in range(n):
            if table[i, j] == zero:
                v = 1
                break
        if v == 0:
            return ("inverse", i, -1, -1)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i, j], k] != table[i, table[j, k]]:
                    return ("assoc", i, j, k)
    return None


cdef inline int _push(int v, char* mask, int* mem, int* count) noexcept:
    if mask[v] == 0:
        mask[v] = 1
        mem[count[0]] = v
        count[0] += 1
    return 0


def close_subring(const int[:, :] add, const int[:, :] mul, const int[:] neg, seed):
    """Indices of the smallest subset containing seed closed under +, -, *."""
    cdef int n = add.shape[0]
    mask_arr = np.zeros(n, dtype=np.int8)
    mem_arr = np.empty(n, dtype=np.intc)
    cdef char[:] mask = mask_arr
    cdef int[:] mem = mem_arr
    cdef int count = 0, head = 0
    cdef int x, y, j
    for x in np.asarray(seed, dtype=np.intc):
        _push(x, &mask[0], &mem[0], &count)
    while head < count:
        x = mem[head]
        head += 1
        _push(neg[x], &mask[0], &mem[0], &count)
        j = 0
        while j < count:
            y = mem[j]
            _push(add[x, y], &mask[0], &mem[0], &count)
            _push(mul[x, y], &mask[0], &mem[0], &count)
            j += 1
    out = mem_arr[:count].copy()
    out.sort()
    return out.astype(np.intp)


def close_ideal(const int[:, :] add, const int[:] neg, const int[:, :] mul, ring_members, seed):
    """Smallest additive subgroup containing seed absorbing ring_members."""
    cdef int n = add.shape[0]
    ring_arr = np.asarray(ring_members, dtype=np.intc)
    cdef const int[:] ring = ring_arr
    cdef int nring = ring.shape[0]
    mask_arr = np.zeros(n, dtype=np.int8)
    mem_arr = np.empty(n, dtype=np.intc)
    cdef char[:] mask = mask_arr
    cdef int[:] mem = mem_arr
    cdef int count = 0, head = 0
    cdef int x, j
    for x in np.asarray(seed, dtype=np.intc):
        _push(x, &mask[0], &mem[0], &count)
    while head < count:
        x = mem[head]
        head += 1
        _push(neg[x], &mask[0], &mem[0], &count)
        j = 0
        while j < count:
            _push(add[x, mem[j]], &mask[0], &mem[0], &count)
            j += 1
        for j in range(nring):
            _push(mul[ring[j], x], &mask[0], &mem[0], &count)
    out = mem_arr[:count].copy()
    out.sort()
    return out.astype(np.intp)


def close_submodule(const int[:, :] madd, const int[:] mneg, const int[:, :] smul, seed):
    """Smallest subset containing seed closed under +, -, and all scalars."""
    cdef int n = madd.shape[0]
    cdef int nring = smul.shape[0]
    mask_arr = np.zeros(n, dtype=np.int8)
    mem_arr = np.empty(n, dtype=np.intc)
    cdef char[:] mask = mask_arr
    cdef int[:] mem = mem_arr
    cdef int count = 0, head = 0
    cdef int x, j
    for x in np.asarray(seed, dtype=np.intc):
        _push(x, &mask[0], &mem[0], &count)
    while head < count:
        x = mem[head]
        head += 1
        _push(mneg[x], &mask[0], &mem[0], &count)
        j = 0
        while j < count:
            _push(madd[x, mem[j]], &mask[0], &mem[0], &count)
            j += 1
        for j in range(nring):
            _push(smul[j, x], &mask[0], &mem[0], &count)
    out = mem_arr[:count].copy()
    out.sort()
    return out.astype(np.intp)
