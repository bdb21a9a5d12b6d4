"""Exact arithmetic in the cyclotomic Hecke algebra over F_p.

Elements are sparse integer combinations of the Ariki-Koike basis
monomials T_w X_1^{a_1}..X_d^{a_d} with 0 <= a_r < l, stored as
{(w, a): coeff} with w a one-line tuple and a an exponent tuple.  The
rewriting engine normalizes products generator by generator:

  * T_r T_w collapses by the length rule (quadratic relation),
  * an X passes a T by the one-step exchange identities derived from the
    braid-polynomial relation (validated as matrix identities on the
    regular representation, see relation_report),
  * X_1^l is reduced by the cyclotomic polynomial, and X_s^l for s > 1 via
    the substitution X_s = xi^{-1} T_{s-1} X_{s-1} T_{s-1} in the power
    form X_s^l = xi^{-1} T X_{s-1}^l T + (1 - xi^{-1}) sum_j X_s^j
    X_{s-1}^{l-j} T (T = T_{s-1}), which strictly lowers the tower index,
    so the recursion terminates.
"""

import itertools

import numpy as np

from gspecht import linalg
from gspecht.combinatorics import AlgebraParams, Multipartition, Tableau, w_of_tableau
from gspecht.errors import ParameterError, ResourceLimitError
from gspecht.permutations import (canonical_reduced_word, identity_perm, inverse,
                                  length, mult_left_s)


def _add_term(acc: dict, key, coeff: int, p: int):
    c = (acc.get(key, 0) + coeff) % p
    if c:
        acc[key] = c
    else:
        acc.pop(key, None)


def _merge(acc: dict, other: dict, scale: int, p: int):
    for key, c in other.items():
        _add_term(acc, key, c * scale, p)


class HeckeEngine:
    """Normal forms and products for one (params, d)."""

    def __init__(self, params: AlgebraParams, d: int):
        if params.field.mode != "prime":
            raise ParameterError("the algebra engine needs a prime field (e >= 2)")
        self.params = params
        self.d = d
        self.l = params.level
        self.p = params.p
        self.xi = params.field.xi
        self.xi_inv = params.field.inv(self.xi)
        self.zero_exp = (0,) * d
        self.id_perm = identity_perm(d)
        # cyclotomic reduction: prod_m (X - xi^{k_m}) = X^l + sum c_j X^j
        poly = [1]
        for k in params.charge:
            root = params.field.xi_pow(k)
            poly = [(c_lo - root * c_hi) % self.p
                    for c_lo, c_hi in zip([0] + poly, poly + [0])]
        assert poly[-1] == 1 and len(poly) == self.l + 1
        self._cyc_tail = poly[:-1]  # X_1^l = -sum_j tail[j] X_1^j
        self._push_cache: dict = {}
        self._word_cache: dict = {}
        self._len_cache: dict = {}
        self._xl_nf_cache: dict = {}

    # -- permutation bookkeeping -------------------------------------------

    def word(self, w: tuple) -> tuple:
        try:
            return self._word_cache[w]
        except KeyError:
            wd = canonical_reduced_word(w)
            self._word_cache[w] = wd
            return wd

    def perm_length(self, w: tuple) -> int:
        try:
            return self._len_cache[w]
        except KeyError:
            n = length(w)
            self._len_cache[w] = n
            return n

    # -- elements ------------------------------------------------------------

    def one(self) -> dict:
        return {(self.id_perm, self.zero_exp): 1}

    def t_gen(self, r: int) -> dict:
        return {(mult_left_s(r, self.id_perm), self.zero_exp): 1}

    def x_gen(self, s: int) -> dict:
        return self.lmul_x(s, self.one())

    def scalar(self, c: int) -> dict:
        c %= self.p
        return {(self.id_perm, self.zero_exp): c} if c else {}

    # -- generator multiplications --------------------------------------------

    def lmul_t(self, r: int, elem: dict) -> dict:
        out: dict = {}
        p, xi = self.p, self.xi
        for (w, a), c in elem.items():
            sw = mult_left_s(r, w)
            if self.perm_length(sw) > self.perm_length(w):
                _add_term(out, (sw, a), c, p)
            else:
                _add_term(out, (w, a), c * (xi - 1), p)
                _add_term(out, (sw, a), c * xi, p)
        return out

    def _push_x(self, s: int, w: tuple) -> dict:
        """X_s T_w as {(u, t): coeff} meaning sum coeff T_u X_t."""
        key = (s, w)
        try:
            return self._push_cache[key]
        except KeyError:
            pass
        p, xi = self.p, self.xi
        if w == self.id_perm:
            result = {(w, s): 1}
        else:
            r = self.word(w)[0]
            wp = mult_left_s(r, w)

            def absorb_t(terms: dict) -> dict:
                out: dict = {}
                for (u, t), c in terms.items():
                    su = mult_left_s(r, u)
                    if self.perm_length(su) > self.perm_length(u):
                        _add_term(out, (su, t), c, p)
                    else:
                        _add_term(out, (u, t), c * (xi - 1), p)
                        _add_term(out, (su, t), c * xi, p)
                return out

            if s != r and s != r + 1:
                result = absorb_t(self._push_x(s, wp))
            elif s == r:
                inner = self._push_x(r + 1, wp)
                result = absorb_t(inner)
                _merge(result, inner, -(xi - 1), p)
            else:  # s == r + 1
                result = absorb_t(self._push_x(r, wp))
                _merge(result, self._push_x(r + 1, wp), xi - 1, p)
        self._push_cache[key] = result
        return result

    def lmul_x(self, s: int, elem: dict) -> dict:
        out: dict = {}
        p = self.p
        for (w, a), c in elem.items():
            for (u, t), cc in self._push_x(s, w).items():
                a2 = list(a)
                a2[t - 1] += 1
                a2 = tuple(a2)
                coeff = (c * cc) % p
                if not coeff:
                    continue
                if a2[t - 1] < self.l:
                    _add_term(out, (u, a2), coeff, p)
                else:
                    _merge(out, self._monomial_nf(u, a2), coeff, p)
        return out

    def xl_normal_form(self, t: int) -> dict:
        """Normal form of X_t^l.

        Index 1 is the cyclotomic relation; higher indices descend via
        X_t^l = xi^{-1} T X_{t-1}^l T + (1-xi^{-1}) sum_{j=1}^{l-1}
        X_t^j X_{t-1}^{l-j} T with T = T_{t-1}, a consequence of the
        one-step exchange identities (machine-validated downstream).
        """
        try:
            return self._xl_nf_cache[t]
        except KeyError:
            pass
        p, l = self.p, self.l
        if t == 1:
            out: dict = {}
            base = [0] * self.d
            for j, cj in enumerate(self._cyc_tail):
                if cj:
                    base[0] = j
                    _add_term(out, (self.id_perm, tuple(base)), -cj, p)
            base[0] = 0
        else:
            prev = self.xl_normal_form(t - 1)
            out = self._rmul_t(prev, t - 1)
            out = self.lmul_t(t - 1, out)
            out = {key: (c * self.xi_inv) % p for key, c in out.items()}
            coeff = (1 - self.xi_inv) % p
            for j in range(1, l):
                a = [0] * self.d
                a[t - 1] = j
                a[t - 2] = l - j
                term = self._rmul_t({(self.id_perm, tuple(a)): 1}, t - 1)
                _merge(out, term, coeff, p)
        self._xl_nf_cache[t] = out
        return out

    def _monomial_nf(self, u: tuple, a: tuple) -> dict:
        """Normal form of T_u X^a where some slots of a may reach 2l-2.

        The X block is commutative, so excess powers split off directly:
        with t the largest overflowing slot, T_u X^a = T_u X_t^l X^(a-l e_t)
        and X_t^l is replaced by its stored normal form.  The recursion
        terminates because the slot-mass vector (a_d, ..., a_1) decreases
        lexicographically at every splice.
        """
        t = 0
        for i in range(self.d, 0, -1):
            if a[i - 1] >= self.l:
                t = i
                break
        if t == 0:
            return {(u, a): 1}
        rest = list(a)
        rest[t - 1] -= self.l
        elem = self.rmul_xmono(self.xl_normal_form(t), tuple(rest))
        for r in reversed(self.word(u)):
            elem = self.lmul_t(r, elem)
        return elem

    def rmul_xmono(self, elem: dict, c: tuple) -> dict:
        """elem * X^c for a pure exponent vector (commutative in the X block)."""
        if not any(c):
            return elem
        out: dict = {}
        p = self.p
        for (w, b), coeff in elem.items():
            total = tuple(bi + ci for bi, ci in zip(b, c))
            if all(x < self.l for x in total):
                _add_term(out, (w, total), coeff, p)
            else:
                _merge(out, self._monomial_nf(w, total), coeff, p)
        return out

    def _rmul_t(self, elem: dict, r: int) -> dict:
        """elem * T_r.

        Pushes T_r left through the X block with the closed two-slot
        rules: with X = X_r, X' = X_{r+1}, b = a_r, c = a_{r+1},

          X^b X'^c T = T X^c X'^b
                       - (xi-1) sum_{i=0}^{b-1} X^{i+c} X'^{b-i}
                       + (xi-1) sum_{m=1}^{c}   X^{b+c-m} X'^m

        then combines T_w T_r by the length rule.  Slot r can overflow up
        to 2l-3; the excess is reduced through xl_normal_form(r).
        """
        p, xi, l = self.p, self.xi, self.l
        out: dict = {}

        def emit(w, exps, coeff):
            exps = tuple(exps)
            if exps[r - 1] < l:
                _add_term(out, (w, exps), coeff, p)
            else:
                _merge(out, self._monomial_nf(w, exps), coeff, p)

        for (w, a), c in elem.items():
            b, cc = a[r - 1], a[r]
            wsr = tuple(w[i] if i not in (r - 1, r) else w[r if i == r - 1 else r - 1]
                        for i in range(self.d))  # w * s_r: swap positions r, r+1
            swapped = list(a)
            swapped[r - 1], swapped[r] = cc, b
            if self.perm_length(wsr) > self.perm_length(w):
                emit(wsr, swapped, c)
            else:
                emit(w, swapped, (c * (xi - 1)) % p)
                emit(wsr, swapped, (c * xi) % p)
            for i in range(b):
                ex = list(a)
                ex[r - 1], ex[r] = i + cc, b - i
                emit(w, ex, (-c * (xi - 1)) % p)
            for m in range(1, cc + 1):
                ex = list(a)
                ex[r - 1], ex[r] = b + cc - m, m
                emit(w, ex, (c * (xi - 1)) % p)
        return out

    # -- products ---------------------------------------------------------------

    def apply_monomial(self, w: tuple, a: tuple, elem: dict) -> dict:
        """T_w X^a * elem."""
        for s in range(self.d, 0, -1):
            for _ in range(a[s - 1]):
                elem = self.lmul_x(s, elem)
        for r in reversed(self.word(w)):
            elem = self.lmul_t(r, elem)
        return elem

    def product(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for (w, a), c in x.items():
            _merge(out, self.apply_monomial(w, a, y), c, self.p)
        return out

    def star(self, x: dict) -> dict:
        """Anti-automorphism fixing each generator and reversing products."""
        out: dict = {}
        for (w, a), c in x.items():
            elem = {(inverse(w), self.zero_exp): 1}
            for s in range(self.d, 0, -1):
                for _ in range(a[s - 1]):
                    elem = self.lmul_x(s, elem)
            _merge(out, elem, c, self.p)
        return out

    def t_word_element(self, w: tuple) -> dict:
        return {(w, self.zero_exp): 1}

    def element_str(self, elem: dict) -> str:
        """Debug dump: 'c * T[w] * X^a' terms in basis order."""
        if not elem:
            return "0"
        bits = []
        for (w, a), c in sorted(elem.items(),
                                key=lambda kv: (self.perm_length(kv[0][0]),) + kv[0]):
            wpart = "T[" + ",".join(map(str, w)) + "]"
            xpart = "".join(f"*X{s + 1}^{e}" for s, e in enumerate(a) if e)
            bits.append(f"{c} * {wpart}{xpart}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# Regular representation
# ---------------------------------------------------------------------------

class RegularRep:
    """Left and right multiplication operators on the monomial basis."""

    def __init__(self, params: AlgebraParams, d: int, max_dim: int = 4000):
        self.engine = HeckeEngine(params, d)
        self.params = params
        self.d = d
        l, p = params.level, params.p
        dim = l**d
        for k in range(2, d + 1):
            dim *= k
        if dim > max_dim:
            raise ResourceLimitError(
                f"regular representation dimension {dim} exceeds bound {max_dim}")
        self.dim = dim
        perms = sorted(itertools.permutations(range(1, d + 1)),
                       key=lambda w: (length(w), w))
        exps = list(itertools.product(range(l), repeat=d))
        self.basis = [(w, a) for w in perms for a in exps]
        self.index = {mono: i for i, mono in enumerate(self.basis)}
        eng = self.engine
        self.lmul_t_mats = [self._operator(lambda x, r=r: eng.lmul_t(r, x))
                            for r in range(1, d)]
        self.lmul_x_mats = [self._operator(lambda x, s=s: eng.lmul_x(s, x))
                            for s in range(1, d + 1)]
        self.rmul_t_mats = [self._operator(lambda x, r=r: eng.product(x, eng.t_gen(r)))
                            for r in range(1, d)]
        self.rmul_x_mats = [self._operator(lambda x, s=s: eng.product(x, eng.x_gen(s)))
                            for s in range(1, d + 1)]

    def _operator(self, fn) -> np.ndarray:
        mat = linalg.zeros(self.dim, self.dim)
        for j, mono in enumerate(self.basis):
            for key, c in fn({mono: 1}).items():
                mat[self.index[key], j] = c
        return mat

    def vector(self, elem: dict) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        for key, c in elem.items():
            v[self.index[key]] = c
        return v

    def element(self, vec) -> dict:
        return {self.basis[i]: int(c) for i, c in enumerate(vec) if c}

    def word_matrix(self, word) -> np.ndarray:
        """Left multiplication by T_{r_1}..T_{r_m} for a word (r_1..r_m)."""
        out = linalg.identity(self.dim)
        for r in word:
            out = linalg.matmul(out, self.lmul_t_mats[r - 1], self.params.p)
        return out


def matrix_relation_checks(t_mats, x_mats, params: AlgebraParams) -> dict:
    """Defining relations and derived exchange identities as exact matrix
    identities, for any matrix realization.  Returns name -> bool."""
    p = params.p
    xi = params.field.xi
    d = len(x_mats)
    lt, lx = t_mats, x_mats
    dim = x_mats[0].shape[0] if d else 1
    eye = linalg.identity(dim)
    mm = lambda a, b: linalg.matmul(a, b, p)
    checks = {}

    for r in range(d):
        for s in range(r + 1, d):
            checks[f"x_commute_{r + 1}_{s + 1}"] = not (mm(lx[r], lx[s]) - mm(lx[s], lx[r])).any()
    for r in range(d):
        checks[f"x_invertible_{r + 1}"] = linalg.is_invertible(lx[r], p)
    for r in range(1, d):
        tr, xr, xr1 = lt[r - 1], lx[r - 1], lx[r]
        checks[f"braid_poly_{r}"] = not (mm(mm(tr, xr), tr) - (xi * xr1) % p).any()
        checks[f"quadratic_{r}"] = not (mm(tr, tr) - ((xi - 1) * tr + xi * eye) % p).any()
        checks[f"exchange_up_{r}"] = not (
            mm(xr1, tr) - (mm(tr, xr) + (xi - 1) * xr1) % p).any()
        checks[f"exchange_down_{r}"] = not (
            mm(xr, tr) - (mm(tr, xr1) - (xi - 1) * xr1) % p).any()
        for s in range(1, d + 1):
            if s not in (r, r + 1):
                checks[f"tx_commute_{r}_{s}"] = not (
                    mm(tr, lx[s - 1]) - mm(lx[s - 1], tr)).any()
    for r in range(1, d - 1):
        lhs = mm(mm(lt[r - 1], lt[r]), lt[r - 1])
        rhs = mm(mm(lt[r], lt[r - 1]), lt[r])
        checks[f"braid_{r}"] = not (lhs - rhs).any()
    for r in range(1, d):
        for s in range(r + 2, d):
            checks[f"t_commute_{r}_{s}"] = not (
                mm(lt[r - 1], lt[s - 1]) - mm(lt[s - 1], lt[r - 1])).any()
    if d >= 1:
        cyc = eye
        for k in params.charge:
            cyc = mm(cyc, (lx[0] - params.field.xi_pow(k) * eye) % p)
        checks["cyclotomic"] = not cyc.any()
    return checks


def relation_report(rep: RegularRep) -> dict:
    """Relation suite on the regular representation, including the
    commutation of all left with all right multiplication operators."""
    p = rep.params.p
    mm = lambda a, b: linalg.matmul(a, b, p)
    checks = matrix_relation_checks(rep.lmul_t_mats, rep.lmul_x_mats, rep.params)
    for i, left in enumerate(rep.lmul_t_mats + rep.lmul_x_mats):
        for j, right in enumerate(rep.rmul_t_mats + rep.rmul_x_mats):
            checks[f"left_right_commute_{i}_{j}"] = not (mm(left, right) - mm(right, left)).any()
    return checks


# ---------------------------------------------------------------------------
# Cellular elements
# ---------------------------------------------------------------------------

def row_stabilizer(mu: Multipartition):
    """All permutations preserving each row of the initial tableau, as
    one-line tuples."""
    t0 = Tableau.initial(mu)
    rows = [row for comp in t0.entries for row in comp]
    d = mu.size
    per_row = [list(itertools.permutations(row)) for row in rows]
    out = []
    for choice in itertools.product(*per_row):
        w = [0] * d
        for row, img in zip(rows, choice):
            for src, dst in zip(row, img):
                w[src - 1] = dst
        out.append(tuple(w))
    return sorted(out)


def row_symmetrizer(engine: HeckeEngine, mu: Multipartition) -> dict:
    return {(w, engine.zero_exp): 1 for w in row_stabilizer(mu)}


def charge_product(engine: HeckeEngine, mu: Multipartition) -> dict:
    """prod_{m=2..l} prod_{s=1..(|mu^(1)|+..+|mu^(m-1)|)} (X_s - xi^{k_m})."""
    params = engine.params
    elem = engine.one()
    cum = 0
    for m in range(1, params.level):
        cum += sum(mu.components[m - 1])
        root = params.field.xi_pow(params.charge[m])
        for s in range(1, cum + 1):
            factor = engine.x_gen(s)
            _merge(factor, engine.scalar(1), -root, engine.p)
            elem = engine.product(elem, factor)
    return elem


def murphy_element(engine: HeckeEngine, mu: Multipartition) -> dict:
    """Row symmetrizer times the charge product for the shape mu."""
    return engine.product(row_symmetrizer(engine, mu), charge_product(engine, mu))


def murphy_pair(engine: HeckeEngine, s: Tableau, t: Tableau) -> dict:
    """Cellular element attached to a pair of standard tableaux of one shape."""
    if s.shape != t.shape:
        raise ParameterError("cellular pair needs tableaux of equal shape")
    m_nu = murphy_element(engine, s.shape)
    left = engine.t_word_element(w_of_tableau(s))
    right = engine.star(engine.t_word_element(w_of_tableau(t)))
    return engine.product(left, engine.product(m_nu, right))
