"""Specht modules inside the quotient by the cell ideal.

For a shape mu, the cell ideal is spanned by the cellular elements of all
strictly dominating shapes; the module is the cyclic submodule of the
quotient generated by the image of the shape's cellular generator, with
the standard basis indexed by standard tableaux.  Everything is realized
as exact coordinate vectors over F_p on the monomial basis of the regular
representation.
"""

from dataclasses import dataclass, field

import numpy as np

from gspecht import linalg
from gspecht.combinatorics import (AlgebraParams, Multipartition, Tableau,
                                   initial_tableau, multipartitions, residue_sequence,
                                   standard_tableaux, strictly_dominates, tableau_bruhat,
                                   w_of_tableau)
from gspecht.errors import ConventionError
from gspecht.hecke import RegularRep, murphy_element, murphy_pair
from gspecht.permutations import canonical_reduced_word


def cellular_vectors(rep: RegularRep, nu: Multipartition):
    """Coordinate vectors of all cellular basis elements of shape nu,
    cached on the representation."""
    cache = getattr(rep, "_cellular_cache", None)
    if cache is None:
        cache = {}
        rep._cellular_cache = cache
    if nu not in cache:
        tabs = standard_tableaux(nu)
        vecs = [(s, t, rep.vector(murphy_pair(rep.engine, s, t)))
                for s in tabs for t in tabs]
        cache[nu] = vecs
    return cache[nu]


def cell_ideal(rep: RegularRep, mu: Multipartition, check_stability: bool = True):
    """Row-space data (rref, pivots) of the ideal spanned by cellular
    elements of shapes strictly dominating mu."""
    params = rep.params
    vectors = []
    for nu in multipartitions(rep.d, params.level):
        if strictly_dominates(nu, mu):
            vectors.extend(v for _, _, v in cellular_vectors(rep, nu))
    if vectors:
        mat = np.stack(vectors)
    else:
        mat = linalg.zeros(0, rep.dim)
    rref, pivots = linalg.rref(mat, params.p)
    basis = rref[: len(pivots)]
    if check_stability and len(pivots):
        gens = (rep.lmul_t_mats + rep.lmul_x_mats
                + rep.rmul_t_mats + rep.rmul_x_mats)
        for g in gens:
            image = linalg.matmul(basis, g.T, params.p)
            for row in image:
                if not linalg.in_row_space(basis, pivots, row, params.p):
                    raise ConventionError(
                        f"cell ideal of {mu.to_text()} is not two-sided stable")
    return basis, pivots


@dataclass
class SpechtModule:
    """Exact matrix realization on the standard basis (canonical order)."""

    mu: Multipartition
    params: AlgebraParams
    tableaux: list
    t_mats: list = field(repr=False)
    x_mats: list = field(repr=False)
    # quotient bookkeeping, kept for building further vectors in z-coordinates
    proj: np.ndarray = field(repr=False, default=None)
    lift: np.ndarray = field(repr=False, default=None)
    z_cols: np.ndarray = field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return len(self.tableaux)

    def generator_vector(self) -> np.ndarray:
        """z-coordinates of the cyclic generator (the initial tableau's
        basis vector)."""
        v = np.zeros(self.dim, dtype=np.int64)
        v[0] = 1
        return v

    def apply_t_word(self, word, vec) -> np.ndarray:
        for r in reversed(tuple(word)):
            vec = linalg.matmul(self.t_mats[r - 1], vec.reshape(-1, 1),
                                self.params.p).reshape(-1)
        return vec


def specht_module(rep: RegularRep, mu: Multipartition) -> SpechtModule:
    """Build the module: quotient by the cell ideal, spin closure of the
    generator, standard basis, and generator matrices in that basis."""
    params = rep.params
    p = params.p
    kernel, pivots = cell_ideal(rep, mu)
    n_amb = rep.dim
    nonpivots = [c for c in range(n_amb) if c not in pivots]
    q = len(nonpivots)
    proj = linalg.zeros(q, n_amb)
    for j, c in enumerate(nonpivots):
        proj[j, c] = 1
    for i, c in enumerate(pivots):
        proj[:, c] = (-kernel[i, nonpivots]) % p
    lift = linalg.zeros(n_amb, q)
    for j, c in enumerate(nonpivots):
        lift[c, j] = 1

    def quotient_op(mat):
        return linalg.matmul(linalg.matmul(proj, mat, p), lift, p)

    tq = [quotient_op(m) for m in rep.lmul_t_mats]
    xq = [quotient_op(m) for m in rep.lmul_x_mats]

    z_gen = linalg.matmul(proj, rep.vector(murphy_element(rep.engine, mu)).reshape(-1, 1),
                          p).reshape(-1)

    tabs = standard_tableaux(mu)
    z_vecs = []
    for t in tabs:
        vec = z_gen
        for r in reversed(canonical_reduced_word(w_of_tableau(t))):
            vec = linalg.matmul(tq[r - 1], vec.reshape(-1, 1), p).reshape(-1)
        z_vecs.append(vec)
    z_cols = np.stack(z_vecs).T if z_vecs else linalg.zeros(q, 0)

    if linalg.rank(z_cols.T, p) != len(tabs):
        raise ConventionError(
            f"standard vectors of {mu.to_text()} are linearly dependent")

    closure = _spin_closure(z_gen, tq + xq, p)
    if closure.shape[0] != len(tabs):
        raise ConventionError(
            f"module dimension {closure.shape[0]} != standard tableau count "
            f"{len(tabs)} for {mu.to_text()}")
    stacked = np.concatenate([closure, z_cols.T % p], axis=0)
    if linalg.rank(stacked, p) != len(tabs):
        raise ConventionError(
            f"standard vectors do not span the cyclic module for {mu.to_text()}")

    t_mats = [linalg.solve(z_cols, linalg.matmul(m, z_cols, p), p) for m in tq]
    x_mats = [linalg.solve(z_cols, linalg.matmul(m, z_cols, p), p) for m in xq]
    return SpechtModule(mu=mu, params=params, tableaux=tabs,
                        t_mats=t_mats, x_mats=x_mats,
                        proj=proj, lift=lift, z_cols=z_cols)


def _spin_closure(seed, operator_mats, p):
    """RREF basis of the smallest subspace containing seed and stable
    under the given operators (deterministic breadth-first sweep)."""
    mat = seed.reshape(1, -1) % p
    basis, pivots = linalg.row_space_basis(mat, p)
    frontier = basis
    while frontier.shape[0]:
        images = [linalg.matmul(g, frontier.T, p).T for g in operator_mats]
        new_rows = []
        for img in images:
            for row in img:
                reduced = linalg.reduce_against(basis, pivots, row, p)
                if reduced.any():
                    new_rows.append(row)
        if not new_rows:
            break
        stacked = np.concatenate([basis, np.stack(new_rows)], axis=0)
        basis, pivots = linalg.row_space_basis(stacked, p)
        frontier = np.stack(new_rows)
    return basis


def check_lz1(module: SpechtModule) -> dict:
    """Eigenvalue check: each X_r fixes the generator with eigenvalue
    xi^(r-th residue of the initial tableau).  Returns per-r status."""
    params = module.params
    seq = residue_sequence(initial_tableau(module.mu), params)
    z = module.generator_vector()
    report = {}
    for r in range(1, module.mu.size + 1):
        lhs = linalg.matmul(module.x_mats[r - 1], z.reshape(-1, 1), params.p).reshape(-1)
        rhs = (params.field.xi_pow(seq[r - 1]) * z) % params.p
        report[f"x_eigenvalue_{r}"] = bool(not (lhs - rhs).any())
    return report


def standard_expansion(module: SpechtModule, tab: Tableau) -> np.ndarray:
    """Coordinates, in the standard basis, of the vector obtained by acting
    with the tableau's permutation word on the generator.  Defined for any
    bijective filling of the shape."""
    vec = module.apply_t_word(canonical_reduced_word(w_of_tableau(tab)),
                              module.generator_vector())
    return vec


def check_standard_support(module: SpechtModule, tab: Tableau) -> bool:
    """The expansion of a (possibly non-standard) tableau vector is
    supported on standard tableaux below it in the Bruhat order."""
    coords = standard_expansion(module, tab)
    for t, c in zip(module.tableaux, coords):
        if c and not tableau_bruhat(t, tab):
            return False
    return True
