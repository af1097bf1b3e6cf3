# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled short-vector enumeration; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef int _popcount(unsigned long long v) nogil:
    cdef int c = 0
    while v:
        v &= v - 1
        c += 1
    return c


cdef void _rec(int k, int n, long long budget, unsigned long long odd,
               long long *lo, long long *hi, long long *w, long long *suffix,
               unsigned long long *masks, int *pars, int nmask,
               long long *x, list out):
    cdef long long v, rest
    cdef int j
    if k == n:
        if budget != 0:
            return
        for j in range(nmask):
            if (_popcount(odd & masks[j]) & 1) != pars[j]:
                return
        out.append(tuple([x[j] for j in range(n)]))
        return
    if budget > suffix[k]:
        return
    for v in range(lo[k], hi[k] + 1):
        rest = budget - w[k] * v * v
        if rest < 0:
            continue
        x[k] = v
        if v & 1:
            _rec(k + 1, n, rest, odd | (1ULL << k), lo, hi, w, suffix, masks, pars, nmask, x, out)
        else:
            _rec(k + 1, n, rest, odd, lo, hi, w, suffix, masks, pars, nmask, x, out)
    x[k] = 0


def norm_vectors(lo, hi, weights, target, masks, parities):
    cdef int n = len(lo)
    cdef int nmask = len(masks)
    cdef int k
    cdef long long a, b, wk
    cdef long long *clo = <long long *>malloc(n * sizeof(long long) + 1)
    cdef long long *chi = <long long *>malloc(n * sizeof(long long) + 1)
    cdef long long *cw = <long long *>malloc(n * sizeof(long long) + 1)
    cdef long long *cx = <long long *>malloc(n * sizeof(long long) + 1)
    cdef long long *suf = <long long *>malloc((n + 1) * sizeof(long long))
    cdef unsigned long long *cm = <unsigned long long *>malloc(nmask * sizeof(unsigned long long) + 1)
    cdef int *cp = <int *>malloc(nmask * sizeof(int) + 1)
    out = []
    try:
        for k in range(n):
            clo[k] = lo[k]
            chi[k] = hi[k]
            cw[k] = weights[k]
            cx[k] = 0
        suf[n] = 0
        for k in range(n - 1, -1, -1):
            a = clo[k]
            b = chi[k]
            wk = cw[k]
            suf[k] = suf[k + 1] + (wk * a * a if a * a > b * b else wk * b * b)
        for k in range(nmask):
            cm[k] = masks[k]
            cp[k] = parities[k]
        if target >= 0:
            _rec(0, n, target, 0, clo, chi, cw, suf, cm, cp, nmask, cx, out)
    finally:
        free(clo); free(chi); free(cw); free(cx); free(suf); free(cm); free(cp)
    return out
