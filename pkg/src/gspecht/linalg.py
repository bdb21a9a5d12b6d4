"""Exact dense linear algebra over a prime field F_p.

Matrices are numpy int64 arrays with entries reduced to 0..p-1.  Built on
the kernels in gspecht._core; every routine is deterministic (leftmost
pivots, no magnitude-based pivoting).  Also houses the small dense
polynomial toolkit (coefficient lists, ascending degree) used for minimal
polynomials and generalized eigenprojections.
"""

import numpy as np

from gspecht._core import matmul_mod, rref_mod


class LinearAlgebraError(RuntimeError):
    """Inconsistent system / singular matrix where invertibility was required."""


def arr(data, p=None):
    a = np.asarray(data, dtype=np.int64)
    return a % p if p is not None else a


def identity(n):
    return np.eye(n, dtype=np.int64)


def zeros(m, n):
    return np.zeros((m, n), dtype=np.int64)


def matmul(a, b, p):
    return matmul_mod(np.ascontiguousarray(a), np.ascontiguousarray(b), p)


def matmul_many(mats, p):
    out = mats[0]
    for m in mats[1:]:
        out = matmul(out, m, p)
    return out


def matpow(a, k, p):
    n = a.shape[0]
    out = identity(n)
    base = a % p
    while k > 0:
        if k & 1:
            out = matmul(out, base, p)
        base = matmul(base, base, p)
        k >>= 1
    return out


def rref(a, p):
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    return rref_mod(np.ascontiguousarray(a, dtype=np.int64), p)


def rank(a, p):
    return len(rref(a, p)[1])


def row_space_basis(a, p):
    r, pivots = rref(a, p)
    return r[: len(pivots)], pivots


def reduce_against(r, pivots, v, p):
    """Reduce vector v against an RREF basis; result has zeros at pivot columns."""
    v = v % p
    for i, c in enumerate(pivots):
        coef = int(v[c])
        if coef:
            v = (v - coef * r[i]) % p
    return v


def in_row_space(r, pivots, v, p):
    return not reduce_against(r, pivots, v, p).any()


def solve(a, b, p):
    """Solve a @ x = b exactly (b may be a matrix); free variables set to 0.

    Raises LinearAlgebraError if the system is inconsistent.
    """
    b2 = b.reshape(-1, 1) if b.ndim == 1 else b
    m, n = a.shape
    aug = np.concatenate([a % p, b2 % p], axis=1)
    r, pivots = rref(aug, p)
    x = zeros(n, b2.shape[1])
    for i, c in enumerate(pivots):
        if c >= n:
            raise LinearAlgebraError("inconsistent linear system")
        x[c] = r[i, n:]
    return x[:, 0] if b.ndim == 1 else x


def inv(a, p):
    n = a.shape[0]
    aug = np.concatenate([a % p, identity(n)], axis=1)
    r, pivots = rref(aug, p)
    if pivots != list(range(n)):
        raise LinearAlgebraError("matrix is singular mod %d" % p)
    return r[:, n:]


def is_invertible(a, p):
    return rank(a, p) == a.shape[0]


def null_space(a, p):
    """Basis of the right kernel, one solution vector per row."""
    m, n = a.shape
    r, pivots = rref(a, p)
    free = [c for c in range(n) if c not in pivots]
    basis = zeros(len(free), n)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, c]) % p
    return basis


def is_nilpotent(a, p):
    return not matpow(a, a.shape[0], p).any()


# ---------------------------------------------------------------------------
# dense polynomials over F_p: list of coefficients, ascending degree
# ---------------------------------------------------------------------------

def poly_trim(f):
    while len(f) > 1 and f[-1] == 0:
        f = f[:-1]
    return f


def poly_mul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return poly_trim(out)


def poly_divmod(f, g, p):
    f = list(f)
    g = poly_trim(list(g))
    if g == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    dg = len(g) - 1
    ginv = pow(g[-1], p - 2, p)
    q = [0] * max(1, len(f) - dg)
    while len(poly_trim(f)) - 1 >= dg and poly_trim(f) != [0]:
        f = poly_trim(f)
        shift = len(f) - 1 - dg
        c = (f[-1] * ginv) % p
        q[shift] = c
        for j, b in enumerate(g):
            f[shift + j] = (f[shift + j] - c * b) % p
    return poly_trim(q), poly_trim(f)


def poly_xgcd(f, g, p):
    """Extended gcd: returns (d, u, v) with u*f + v*g = d, d monic."""
    r0, r1 = poly_trim(list(f)), poly_trim(list(g))
    u0, u1 = [1], [0]
    v0, v1 = [0], [1]
    while r1 != [0]:
        q, r = poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, poly_trim([(a - b) % p for a, b in
                                zip_pad(u0, poly_mul(q, u1, p))])
        v0, v1 = v1, poly_trim([(a - b) % p for a, b in
                                zip_pad(v0, poly_mul(q, v1, p))])
    lc = r0[-1]
    if lc != 1:
        c = pow(lc, p - 2, p)
        r0 = [(a * c) % p for a in r0]
        u0 = [(a * c) % p for a in u0]
        v0 = [(a * c) % p for a in v0]
    return r0, u0, v0


def zip_pad(f, g):
    n = max(len(f), len(g))
    return zip(f + [0] * (n - len(f)), g + [0] * (n - len(g)))


def poly_eval_matrix(f, a, p):
    """Evaluate polynomial f at the square matrix a (Horner)."""
    n = a.shape[0]
    out = (identity(n) * (f[-1] % p)) % p
    for c in reversed(f[:-1]):
        out = matmul(out, a, p)
        out = (out + identity(n) * (c % p)) % p
    return out


def minimal_polynomial(a, p):
    """Monic minimal polynomial of a square matrix over F_p (ascending coeffs)."""
    n = a.shape[0]
    if n == 0:
        return [0, 1]
    powers = [identity(n)]
    while True:
        k = len(powers)
        stacked = np.stack([m.reshape(-1) for m in powers] )
        r, pivots = rref(stacked, p)
        if len(pivots) < k:
            # powers[k-1] is dependent on the earlier ones: solve for coeffs
            lhs = np.stack([m.reshape(-1) for m in powers[:-1]]).T
            rhs = powers[-1].reshape(-1)
            coeffs = solve(lhs, rhs, p)
            f = [(-int(c)) % p for c in coeffs] + [1]
            return poly_trim(f)
        powers.append(matmul(powers[-1], a, p))
