"""Pure-python (numpy) implementations of the mod-p dense kernels.

Same contract as the compiled module `_kernels`: int64 matrices with
entries already reduced to 0..p-1, deterministic leftmost-pivot reduced
row echelon form.  No partial pivoting: arithmetic is exact.
"""

import numpy as np

IMPL = "python"


def matmul_mod(a, b, p):
    """(a @ b) mod p for int64 arrays with entries in 0..p-1.

    Entries are < p <= 2**31 and inner dimensions stay desk-scale here, so
    the int64 accumulator cannot overflow.
    """
    return (a @ b) % p


def rref_mod(a, p):
    """Reduced row echelon form over F_p.

    Returns (r, pivots): r is the RREF with unit pivots and zeros above
    and below each pivot, pivots is the list of pivot column indices
    (leftmost-first, so pivots land on the lowest possible columns).
    """
    r = np.array(a, dtype=np.int64, copy=True) % p
    m, n = r.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        k = row + int(nz[0])
        if k != row:
            r[[row, k]] = r[[k, row]]
        inv = pow(int(r[row, col]), p - 2, p)
        r[row] = (r[row] * inv) % p
        col_vals = r[:, col].copy()
        col_vals[row] = 0
        mask = col_vals != 0
        if mask.any():
            r[mask] = (r[mask] - np.outer(col_vals[mask], r[row])) % p
        pivots.append(col)
        row += 1
    return r, pivots
