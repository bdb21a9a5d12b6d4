"""Multipartitions, tableaux, residues, degrees, orders, Garnir data, and
the root-lattice arithmetic they feed.

Conventions: nodes are (row, col, component) with 1-based entries; the
diagram is read component by component, row by row ("reading order"), and
"earlier/later" always refers to that order.  A node (a, b, m) has residue
charge[m] + b - a, taken in Z/eZ for e >= 2 and in Z for e = 0.
"""

from dataclasses import dataclass
from functools import lru_cache

from gspecht.errors import ParameterError
from gspecht.laurent import LaurentPoly
from gspecht.permutations import bruhat_leq, canonical_reduced_word, length
from gspecht.scalars import FieldSpec, default_prime


# ---------------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraParams:
    """Level, charge (k_1..k_l) and base field; e is taken from the field.

    The dominant weight is carried implicitly by the charge multiset:
    its pairing with a simple root indexed by i is the number of charge
    entries equal to i.
    """

    charge: tuple
    field: FieldSpec

    def __post_init__(self):
        if len(self.charge) < 1:
            raise ParameterError("level must be >= 1")
        e = self.field.e
        charge = tuple(k % e if e >= 2 else int(k) for k in self.charge)
        object.__setattr__(self, "charge", charge)

    @classmethod
    def make(cls, e: int, charge, p: int | None = None, xi=None) -> "AlgebraParams":
        """Convenience constructor; picks the default prime when e >= 2."""
        charge = tuple(int(k) for k in charge)
        if e == 0:
            spec = FieldSpec.rational() if xi is None else FieldSpec.rational(xi)
        else:
            spec = FieldSpec.prime_field(p if p is not None else default_prime(e), e, xi)
        return cls(charge=charge, field=spec)

    @property
    def e(self) -> int:
        return self.field.e

    @property
    def p(self) -> int | None:
        return self.field.p

    @property
    def level(self) -> int:
        return len(self.charge)

    def canon_residue(self, i: int) -> int:
        return i % self.e if self.e >= 2 else i

    def residue_set(self):
        """All residues (e >= 2 only)."""
        if self.e == 0:
            raise ParameterError("residue set is infinite for e = 0")
        return range(self.e)

    def weight_mult(self, i: int) -> int:
        """Pairing of the dominant weight with the simple root at residue i."""
        i = self.canon_residue(i)
        return sum(1 for k in self.charge if k == i)


def cartan(i: int, j: int, e: int) -> int:
    """Symmetric Cartan integer of the cyclic (e >= 2) or infinite (e = 0) quiver."""
    if e == 0:
        if i == j:
            return 2
        return -1 if abs(i - j) == 1 else 0
    diff = (i - j) % e
    if diff == 0:
        return 2
    if e == 2:
        return -2  # j = i+1 = i-1: double edge
    return -1 if diff in (1, e - 1) else 0


def residue(node, params: AlgebraParams) -> int:
    a, b, m = node
    return params.canon_residue(params.charge[m - 1] + b - a)


# ---------------------------------------------------------------------------
# Multipartitions
# ---------------------------------------------------------------------------

class Multipartition:
    """Tuple of partitions (weakly decreasing rows, no trailing zeros)."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = []
        for comp in components:
            rows = [int(x) for x in comp]
            while rows and rows[-1] == 0:
                rows.pop()
            if any(x <= 0 for x in rows):
                raise ParameterError(f"nonpositive part in component {comp}")
            if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
                raise ParameterError(f"component {comp} is not weakly decreasing")
            comps.append(tuple(rows))
        self.components = tuple(comps)

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.components)

    def __eq__(self, other):
        return isinstance(other, Multipartition) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"Multipartition({self.to_text()!r})"

    # -- text format shared with the CLI: "3,1|_|4,2" ----------------------

    def to_text(self) -> str:
        return "|".join(",".join(str(x) for x in c) if c else "_"
                        for c in self.components)

    @classmethod
    def from_text(cls, text: str, level: int | None = None) -> "Multipartition":
        if text.strip() == "":
            comps = [()] * (level or 1)
            return cls(comps)
        parts = text.split("|")
        comps = []
        for pos, chunk in enumerate(parts, start=1):
            chunk = chunk.strip()
            if chunk in ("_", ""):
                comps.append(())
                continue
            try:
                rows = tuple(int(x) for x in chunk.split(","))
            except ValueError:
                raise ParameterError(
                    f"component {pos} ({chunk!r}) is not a comma-separated part list")
            comps.append(rows)
        mp = cls(comps)
        if level is not None and mp.level != level:
            raise ParameterError(
                f"multipartition has {mp.level} components, expected {level}")
        return mp

    # -- diagram ------------------------------------------------------------

    def row(self, m: int, a: int) -> int:
        """Length of row a of component m (0 when the row is absent)."""
        comp = self.components[m - 1]
        return comp[a - 1] if a <= len(comp) else 0

    def contains(self, node) -> bool:
        a, b, m = node
        return 1 <= m <= self.level and a >= 1 and 1 <= b <= self.row(m, a)

    def nodes(self):
        """All nodes in reading order."""
        out = []
        for m, comp in enumerate(self.components, start=1):
            for a, ln in enumerate(comp, start=1):
                out.extend((a, b, m) for b in range(1, ln + 1))
        return out

    def removable_nodes(self):
        """Removable nodes, top to bottom in the diagram."""
        out = []
        for m, comp in enumerate(self.components, start=1):
            for a, ln in enumerate(comp, start=1):
                below = comp[a] if a < len(comp) else 0
                if ln > below:
                    out.append((a, ln, m))
        return out

    def addable_nodes(self):
        """Addable nodes, top to bottom in the diagram."""
        out = []
        for m, comp in enumerate(self.components, start=1):
            for a in range(1, len(comp) + 2):
                here = comp[a - 1] if a <= len(comp) else 0
                above = comp[a - 2] if a >= 2 else None
                if above is None or above > here:
                    out.append((a, here + 1, m))
        return out

    def remove(self, node) -> "Multipartition":
        a, b, m = node
        if node not in self.removable_nodes():
            raise ParameterError(f"node {node} is not removable from {self.to_text()}")
        comps = [list(c) for c in self.components]
        comps[m - 1][a - 1] -= 1
        return Multipartition(comps)

    def add(self, node) -> "Multipartition":
        a, b, m = node
        if node not in self.addable_nodes():
            raise ParameterError(f"node {node} is not addable to {self.to_text()}")
        comps = [list(c) for c in self.components]
        if a <= len(comps[m - 1]):
            comps[m - 1][a - 1] += 1
        else:
            comps[m - 1].append(1)
        return Multipartition(comps)


@lru_cache(maxsize=None)
def _partitions_of(n: int):
    if n == 0:
        return [()]
    out = []
    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, maxpart), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()
    rec(n, n, [])
    return out


@lru_cache(maxsize=None)
def multipartitions(d: int, level: int):
    """All level-l multipartitions of d, in a fixed deterministic order."""
    if level == 1:
        return tuple(Multipartition([p]) for p in _partitions_of(d))
    out = []
    for first in range(d, -1, -1):
        for p in _partitions_of(first):
            for rest in multipartitions(d - first, level - 1):
                out.append(Multipartition((p,) + rest.components))
    return tuple(out)


# -- dominance on (multi)compositions ---------------------------------------

def dominates(mu_rows, nu_rows) -> bool:
    """Dominance on multicompositions given as sequences of row-length lists.

    Partial sums include all earlier components in full.
    """
    if len(mu_rows) != len(nu_rows):
        raise ParameterError("dominance needs equal levels")
    if sum(map(sum, mu_rows)) != sum(map(sum, nu_rows)):
        raise ParameterError("dominance needs equal sizes")
    base_mu = base_nu = 0
    for cm, cn in zip(mu_rows, nu_rows):
        sm, sn = base_mu, base_nu
        for c in range(max(len(cm), len(cn))):
            sm += cm[c] if c < len(cm) else 0
            sn += cn[c] if c < len(cn) else 0
            if sm < sn:
                return False
        base_mu, base_nu = sm, sn
    return True


def dominance(mu, nu) -> bool:
    """mu dominates nu (both Multipartition or raw row-list sequences)."""
    mu_rows = mu.components if isinstance(mu, Multipartition) else mu
    nu_rows = nu.components if isinstance(nu, Multipartition) else nu
    return dominates(mu_rows, nu_rows)


def strictly_dominates(mu, nu) -> bool:
    mu_rows = mu.components if isinstance(mu, Multipartition) else mu
    nu_rows = nu.components if isinstance(nu, Multipartition) else nu
    if tuple(map(tuple, mu_rows)) == tuple(map(tuple, nu_rows)):
        return False
    return dominates(mu_rows, nu_rows)


# ---------------------------------------------------------------------------
# Root lattice: contents and defects
# ---------------------------------------------------------------------------

class RootVector:
    """Element of the positive root lattice: residue -> multiplicity."""

    __slots__ = ("mult",)

    def __init__(self, mult=None):
        self.mult = {int(i): int(v) for i, v in (mult or {}).items() if v}

    def __eq__(self, other):
        return isinstance(other, RootVector) and self.mult == other.mult

    def __hash__(self):
        return hash(tuple(sorted(self.mult.items())))

    def __repr__(self):
        return f"RootVector({self.mult!r})"

    def height(self) -> int:
        return sum(self.mult.values())

    def minus_simple(self, i: int) -> "RootVector":
        out = dict(self.mult)
        out[i] = out.get(i, 0) - 1
        if out[i] < 0:
            raise ParameterError(f"coefficient of alpha_{i} would become negative")
        return RootVector(out)


def content(mu: Multipartition, params: AlgebraParams) -> RootVector:
    mult = {}
    for node in mu.nodes():
        i = residue(node, params)
        mult[i] = mult.get(i, 0) + 1
    return RootVector(mult)


def sym_form(alpha: RootVector, beta: RootVector, e: int) -> int:
    """Normalized invariant form on the root lattice (finite support)."""
    return sum(va * vb * cartan(i, j, e)
               for i, va in alpha.mult.items()
               for j, vb in beta.mult.items())


def weight_pairing(alpha: RootVector, params: AlgebraParams) -> int:
    """Pairing of the dominant weight with alpha."""
    return sum(v * params.weight_mult(i) for i, v in alpha.mult.items())


def defect(alpha: RootVector, params: AlgebraParams) -> int:
    q = sym_form(alpha, alpha, params.e)
    assert q % 2 == 0
    return weight_pairing(alpha, params) - q // 2


# ---------------------------------------------------------------------------
# Node degrees
# ---------------------------------------------------------------------------

def _diagram_key(node):
    a, b, m = node
    return (m, a, b)


_NODE_DEG_CACHE: dict = {}


def node_degree(mu: Multipartition, node, params: AlgebraParams) -> int:
    """Signed count for a removable node: addable minus removable nodes of
    the same residue strictly below it."""
    key = (mu.components, node, params.e, params.charge, "deg")
    try:
        return _NODE_DEG_CACHE[key]
    except KeyError:
        pass
    if node not in mu.removable_nodes():
        raise ParameterError(f"node {node} is not removable from {mu.to_text()}")
    i = residue(node, params)
    here = _diagram_key(node)
    add = sum(1 for B in mu.addable_nodes()
              if _diagram_key(B) > here and residue(B, params) == i)
    rem = sum(1 for A in mu.removable_nodes()
              if _diagram_key(A) > here and residue(A, params) == i)
    val = add - rem
    _NODE_DEG_CACHE[key] = val
    return val


def node_codegree(mu: Multipartition, node, params: AlgebraParams) -> int:
    """Signed count for an addable node: addable minus removable nodes of
    the same residue strictly above it."""
    key = (mu.components, node, params.e, params.charge, "codeg")
    try:
        return _NODE_DEG_CACHE[key]
    except KeyError:
        pass
    if node not in mu.addable_nodes():
        raise ParameterError(f"node {node} is not addable to {mu.to_text()}")
    i = residue(node, params)
    here = _diagram_key(node)
    add = sum(1 for B in mu.addable_nodes()
              if _diagram_key(B) < here and residue(B, params) == i)
    rem = sum(1 for A in mu.removable_nodes()
              if _diagram_key(A) < here and residue(A, params) == i)
    val = add - rem
    _NODE_DEG_CACHE[key] = val
    return val


def residue_degree(mu: Multipartition, i: int, params: AlgebraParams) -> int:
    """Addable minus removable nodes of residue i over the whole diagram."""
    i = params.canon_residue(i)
    add = sum(1 for B in mu.addable_nodes() if residue(B, params) == i)
    rem = sum(1 for A in mu.removable_nodes() if residue(A, params) == i)
    return add - rem


# ---------------------------------------------------------------------------
# Tableaux
# ---------------------------------------------------------------------------

class Tableau:
    """Bijective filling of a multipartition diagram by 1..d."""

    __slots__ = ("shape", "entries", "_pos")

    def __init__(self, shape: Multipartition, entries):
        self.shape = shape
        self.entries = tuple(tuple(tuple(row) for row in comp) for comp in entries)
        pos = {}
        for m, comp in enumerate(self.entries, start=1):
            for a, row in enumerate(comp, start=1):
                for b, v in enumerate(row, start=1):
                    pos[v] = (a, b, m)
        if sorted(pos) != list(range(1, shape.size + 1)):
            raise ParameterError("filling is not a bijection onto 1..d")
        for m, comp in enumerate(self.entries, start=1):
            if tuple(len(row) for row in comp) != shape.components[m - 1]:
                raise ParameterError("filling does not match the shape")
        self._pos = pos

    @classmethod
    def initial(cls, shape: Multipartition) -> "Tableau":
        """The row-reading filling: 1..d along successive rows, top to bottom."""
        entries = []
        k = 1
        for comp in shape.components:
            rows = []
            for ln in comp:
                rows.append(tuple(range(k, k + ln)))
                k += ln
            entries.append(tuple(rows))
        return cls(shape, entries)

    @classmethod
    def from_reading_word(cls, shape: Multipartition, word) -> "Tableau":
        word = list(word)
        entries = []
        k = 0
        for comp in shape.components:
            rows = []
            for ln in comp:
                rows.append(tuple(word[k:k + ln]))
                k += ln
            entries.append(tuple(rows))
        return cls(shape, entries)

    def position(self, entry: int):
        return self._pos[entry]

    def reading_word(self) -> tuple:
        """Entries in reading order; equals the one-line notation of the
        permutation sending the initial tableau to this one."""
        return tuple(v for comp in self.entries for row in comp for v in row)

    def __eq__(self, other):
        return (isinstance(other, Tableau) and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return f"Tableau({self.to_text()!r})"

    def to_text(self) -> str:
        return "|".join(
            "/".join(",".join(str(v) for v in row) for row in comp) if comp else "_"
            for comp in self.entries)

    def is_row_strict(self) -> bool:
        return all(row[i] < row[i + 1]
                   for comp in self.entries for row in comp
                   for i in range(len(row) - 1))

    def is_column_strict(self) -> bool:
        for comp in self.entries:
            for a in range(len(comp) - 1):
                upper, lower = comp[a], comp[a + 1]
                if any(upper[b] > lower[b] for b in range(len(lower))):
                    return False
        return True

    def is_standard(self) -> bool:
        return self.is_row_strict() and self.is_column_strict()

    def apply_simple(self, r: int) -> "Tableau":
        """Swap the entries r and r+1."""
        swap = {r: r + 1, r + 1: r}
        entries = tuple(tuple(tuple(swap.get(v, v) for v in row) for row in comp)
                        for comp in self.entries)
        return Tableau(self.shape, entries)

    def restricted_shape(self, a: int):
        """Row lengths of the subtableau of entries <= a (zeros kept)."""
        return tuple(tuple(sum(1 for v in row if v <= a) for row in comp)
                     for comp in self.entries)

    def restrict(self) -> "Tableau":
        """Remove the largest entry (which must sit at a removable node)."""
        d = self.shape.size
        node = self._pos[d]
        shape = self.shape.remove(node)
        a, b, m = node
        comps = [list(map(list, comp)) for comp in self.entries]
        comps[m - 1][a - 1].pop()
        if not comps[m - 1][a - 1]:
            comps[m - 1].pop(a - 1)
        return Tableau(shape, comps)


def residue_sequence(t: Tableau, params: AlgebraParams) -> tuple:
    return tuple(residue(t.position(r), params) for r in range(1, t.shape.size + 1))


def w_of_tableau(t: Tableau) -> tuple:
    """Permutation sending the initial tableau to t, in one-line notation."""
    return t.reading_word()


def tableau_length(t: Tableau) -> int:
    return length(w_of_tableau(t))


def tableau_word(t: Tableau) -> tuple:
    """Canonical reduced word of the tableau's permutation."""
    return canonical_reduced_word(w_of_tableau(t))


@lru_cache(maxsize=None)
def _standard_words(components) -> tuple:
    """Reading words of all standard tableaux of the given shape, sorted."""
    mu = Multipartition(components)
    d = mu.size
    if d == 0:
        return ((),)
    words = []
    seen_shapes = {}
    for node in mu.removable_nodes():
        smaller = mu.remove(node)
        # reading-order slot of the removed node inside mu
        slot = mu.nodes().index(node)
        for sub in _standard_words(smaller.components):
            word = list(sub)
            word.insert(slot, d)
            words.append(tuple(word))
    words.sort()
    return tuple(words)


def standard_tableaux(mu: Multipartition):
    """All standard tableaux, lexicographic by reading word (initial first)."""
    return [Tableau.from_reading_word(mu, w) for w in _standard_words(mu.components)]


def initial_tableau(mu: Multipartition) -> Tableau:
    return Tableau.initial(mu)


# -- degrees of tableaux ------------------------------------------------------

def degree(t: Tableau, params: AlgebraParams) -> int:
    """Recursive degree: walk entries d..1, summing the removable-node counts."""
    if not t.is_standard():
        raise ParameterError("degree is defined for standard tableaux only")
    total = 0
    shape = t.shape
    for k in range(shape.size, 0, -1):
        node = t.position(k)
        total += node_degree(shape, node, params)
        shape = shape.remove(node)
    return total


def codegree(t: Tableau, params: AlgebraParams) -> int:
    """Dual recursion: counts are taken in the shape with the node removed."""
    if not t.is_standard():
        raise ParameterError("codegree is defined for standard tableaux only")
    total = 0
    shape = t.shape
    for k in range(shape.size, 0, -1):
        node = t.position(k)
        shape = shape.remove(node)
        total += node_codegree(shape, node, params)
    return total


# -- orders -------------------------------------------------------------------

def tableau_bruhat(s: Tableau, t: Tableau) -> bool:
    """s <= t in the Bruhat order on tableaux (subword criterion)."""
    if s.shape != t.shape:
        raise ParameterError("tableaux of different shapes are incomparable")
    return bruhat_leq(w_of_tableau(s), w_of_tableau(t))


def tableau_dominance(s: Tableau, t: Tableau) -> bool:
    """Prefix-shape criterion: every restriction of s dominates that of t.

    Equivalent to tableau_bruhat on row-strict tableaux of equal shape;
    the equivalence is cross-validated exhaustively in the test suite.
    """
    if s.shape != t.shape:
        raise ParameterError("tableaux of different shapes are incomparable")
    d = s.shape.size
    return all(dominates(s.restricted_shape(a), t.restricted_shape(a))
               for a in range(1, d + 1))


# -- weak Bruhat graph ---------------------------------------------------------

def has_edge(t: Tableau, r: int) -> bool:
    """True when swapping r, r+1 yields a standard tableau with r moving later."""
    pa = t.position(r)
    pb = t.position(r + 1)
    if _diagram_key(pa) > _diagram_key(pb):
        return False
    if pa[2] == pb[2] and (pa[0] == pb[0] or pa[1] == pb[1]):
        return False  # adjacent in a row or column: swap is not standard
    return True


def is_terminal(t: Tableau, r: int) -> bool:
    """True when some edge colored r points at t in the weak Bruhat graph."""
    pa = t.position(r)
    pb = t.position(r + 1)
    if _diagram_key(pa) < _diagram_key(pb):
        return False
    if pa[2] == pb[2] and (pa[0] == pb[0] or pa[1] == pb[1]):
        return False
    return True


def weak_bruhat_graph(mu: Multipartition):
    """Colored edge list (t, r, s) with s = t after swapping r, r+1."""
    edges = []
    for t in standard_tableaux(mu):
        for r in range(1, mu.size):
            if has_edge(t, r):
                edges.append((t, r, t.apply_simple(r)))
    return edges


# -- Garnir belts and tableaux --------------------------------------------------

def garnir_belt(mu: Multipartition, a: int, b: int, n: int):
    """Belt nodes: the tail of row a from column b on, plus the head of
    row a+1 through column b, within component n."""
    if not (mu.contains((a, b, n)) and mu.contains((a + 1, b, n))):
        raise ParameterError(
            f"({a},{b},{n}) needs both it and the node below inside {mu.to_text()}")
    row_a = [(a, c, n) for c in range(b, mu.row(n, a) + 1)]
    row_b = [(a + 1, g, n) for g in range(1, b + 1)]
    return row_a + row_b


def garnir_tableau(mu: Multipartition, a: int, b: int, n: int) -> Tableau:
    """Initial tableau outside the belt; belt filled with its own initial
    entries redistributed in increasing order along the belt's columns
    (left to right, top to bottom within a column)."""
    belt = garnir_belt(mu, a, b, n)
    t0 = Tableau.initial(mu)
    belt_entries = sorted(t0.entries[n - 1][aa - 1][bb - 1] for (aa, bb, nn) in belt)
    by_column = sorted(belt, key=lambda node: (node[1], node[0]))
    fill = dict(zip(by_column, belt_entries))
    comps = [list(map(list, comp)) for comp in t0.entries]
    for (aa, bb, nn), v in fill.items():
        comps[nn - 1][aa - 1][bb - 1] = v
    return Tableau(mu, comps)


def garnir_positions(mu: Multipartition):
    """All (a, b, n) with the node and the one below it in the diagram."""
    out = []
    for n, comp in enumerate(mu.components, start=1):
        for a in range(1, len(comp)):
            for b in range(1, comp[a] + 1):
                out.append((a, b, n))
    return out


# -- characters-adjacent helper -------------------------------------------------

def shape_character(mu: Multipartition, params: AlgebraParams):
    """Map residue sequence -> Laurent polynomial counting standard tableaux
    by degree."""
    out = {}
    for t in standard_tableaux(mu):
        seq = residue_sequence(t, params)
        out[seq] = out.get(seq, LaurentPoly.zero()) + LaurentPoly.q_power(degree(t, params))
    return out
