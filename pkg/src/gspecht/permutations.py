"""Symmetric group utilities: one-line notation, lengths, reduced words,
and the Bruhat order.

A permutation w of {1..d} is a tuple of length d with w[i-1] = w(i).
The canonical reduced word of w is produced by repeatedly multiplying on
the right by s_r for the smallest descent r, collecting r, and reversing
the collected list at the end; it is the unique choice used everywhere a
"preferred" word is needed, so that all outputs are reproducible.
"""

from functools import lru_cache


def identity_perm(d: int) -> tuple:
    return tuple(range(1, d + 1))


def compose(u: tuple, w: tuple) -> tuple:
    """(u o w)(i) = u(w(i))."""
    return tuple(u[w[i] - 1] for i in range(len(w)))


def inverse(w: tuple) -> tuple:
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def length(w: tuple) -> int:
    """Coxeter length = inversion count."""
    d = len(w)
    return sum(1 for i in range(d) for j in range(i + 1, d) if w[i] > w[j])


def mult_right_s(w: tuple, r: int) -> tuple:
    """w * s_r: exchanges the entries in positions r, r+1 (1-based)."""
    lst = list(w)
    lst[r - 1], lst[r] = lst[r], lst[r - 1]
    return tuple(lst)


def mult_left_s(r: int, w: tuple) -> tuple:
    """s_r * w: exchanges the values r, r+1."""
    swap = {r: r + 1, r + 1: r}
    return tuple(swap.get(v, v) for v in w)


def from_word(word, d: int) -> tuple:
    w = identity_perm(d)
    for r in reversed(word):
        w = mult_right_s(w, r)  # building s_{r_1}...s_{r_m} right to left
    return w


def canonical_reduced_word(w: tuple) -> tuple:
    """Deterministic reduced word: smallest descent, right multiplication."""
    word = []
    cur = w
    while True:
        for r in range(1, len(cur)):
            if cur[r - 1] > cur[r]:
                word.append(r)
                cur = mult_right_s(cur, r)
                break
        else:
            break
    return tuple(reversed(word))


def descents_left(w: tuple):
    """Values r with length(s_r w) < length(w), i.e. r appears after r+1."""
    pos = inverse(w)
    return [r for r in range(1, len(w)) if pos[r - 1] > pos[r]]


def bruhat_leq(u: tuple, w: tuple) -> bool:
    """Bruhat order via the subword characterization.

    Scans one fixed reduced word of w using the lifting property: with
    s = first letter, u <= w iff min(u, su) <= sw.
    """
    if len(u) != len(w):
        raise ValueError("permutations of different ranks")
    if length(u) > length(w):
        return False
    x = u
    for r in canonical_reduced_word(w):
        # s_r is a left descent of the remaining suffix of w by construction
        pos_r = x.index(r)
        pos_r1 = x.index(r + 1)
        if pos_r > pos_r1:
            x = mult_left_s(r, x)
    return x == identity_perm(len(u))


def count_reduced_words(w: tuple) -> int:
    @lru_cache(maxsize=None)
    def cnt(v: tuple) -> int:
        ds = descents_left(v)
        if not ds:
            return 1
        return sum(cnt(mult_left_s(r, v)) for r in ds)

    return cnt(w)


def all_reduced_words(w: tuple):
    """All reduced words of w, in lexicographic order of the words."""
    d = len(w)
    out = []

    def rec(v, prefix):
        ds = descents_left(v)
        if not ds:
            out.append(tuple(prefix))
            return
        for r in ds:
            prefix.append(r)
            rec(mult_left_s(r, v), prefix)
            prefix.pop()

    rec(w, [])
    return out


def cycles(w: tuple):
    """Disjoint cycle decomposition, fixed points omitted; for display/tests."""
    seen = set()
    out = []
    for i in range(1, len(w) + 1):
        if i in seen or w[i - 1] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = w[i - 1]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = w[j - 1]
        out.append(tuple(cyc))
    return out
