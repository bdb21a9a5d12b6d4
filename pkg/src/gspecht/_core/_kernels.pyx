# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p dense kernels: matmul and reduced row echelon form.

Mirrors gspecht._core.pykernels exactly (same pivot choices, same
results); only the inner loops are compiled.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

IMPL = "cython"


cdef long long _inv_mod(long long x, long long p):
    # Fermat: x**(p-2) mod p for prime p, x != 0.
    cdef long long result = 1
    cdef long long base = x % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def matmul_mod(cnp.ndarray[cnp.int64_t, ndim=2] a,
               cnp.ndarray[cnp.int64_t, ndim=2] b,
               long long p):
    """(a @ b) mod p, entries in 0..p-1."""
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t k = a.shape[1]
    cdef Py_ssize_t n = b.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=2] c = np.zeros((m, n), dtype=np.int64)
    cdef Py_ssize_t i, j, t
    cdef long long acc, aik
    for i in range(m):
        for t in range(k):
            aik = a[i, t]
            if aik == 0:
                continue
            for j in range(n):
                c[i, j] += aik * b[t, j]
        for j in range(n):
            c[i, j] %= p
    return c


def rref_mod(a, long long p):
    """Reduced row echelon form over F_p; returns (rref, pivot columns)."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] r = np.array(a, dtype=np.int64) % p
    cdef Py_ssize_t m = r.shape[0]
    cdef Py_ssize_t n = r.shape[1]
    cdef Py_ssize_t row = 0, col, i, j, k
    cdef long long inv, factor, tmp
    pivots = []
    for col in range(n):
        if row == m:
            break
        k = -1
        for i in range(row, m):
            if r[i, col] != 0:
                k = i
                break
        if k == -1:
            continue
        if k != row:
            for j in range(n):
                tmp = r[row, j]
                r[row, j] = r[k, j]
                r[k, j] = tmp
        inv = _inv_mod(r[row, col], p)
        if inv != 1:
            for j in range(n):
                r[row, j] = (r[row, j] * inv) % p
        for i in range(m):
            if i == row:
                continue
            factor = r[i, col]
            if factor == 0:
                continue
            for j in range(n):
                r[i, j] = (r[i, j] - factor * r[row, j]) % p
                if r[i, j] < 0:
                    r[i, j] += p
        pivots.append(col)
        row += 1
    return r, pivots
