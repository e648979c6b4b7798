"""
Symmetric-group combinatorics: one-line permutations, words in the simple
transpositions, inversion sets, descents, Bruhat order, pattern avoidance,
and the dictionary between Hessenberg functions and codominant permutations.

Permutations are plain tuples of 1-based entries, w = (w(1), ..., w(n)).
The generator s_i (i = 1..n-1) is the transposition (i, i+1); multiplying
by s_i on the right swaps positions i, i+1, on the left it swaps the
values i, i+1.

>>> multiply((2, 1, 3), (1, 3, 2))
(2, 3, 1)
>>> length((4, 2, 1, 3))
4
>>> reduced_word((3, 4, 1, 2))
(2, 1, 3, 2)
"""

from __future__ import annotations

from itertools import combinations, permutations

from . import config

__all__ = [
    "Perm", "Word", "Transposition",
    "identity", "check_permutation", "multiply", "inverse", "length",
    "apply_s_right", "apply_s_left", "apply_transposition_left",
    "left_inversions", "left_descents", "right_descents",
    "right_inversions", "bruhat_leq", "rank_matrix", "weak_left_leq",
    "reduced_word", "evaluate_word", "is_reduced",
    "avoids_patterns", "cycle_type",
    "check_hessenberg", "codominant_from_hessenberg", "hessenberg_from_skew",
    "all_hessenberg_functions", "all_permutations", "transpositions",
    "PermTable", "perm_table",
]

Perm = tuple
Word = tuple
Transposition = tuple


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def check_permutation(w) -> Perm:
    w = tuple(w)
    n = len(w)
    if n < 1 or sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation in one-line notation: {w}")
    return w


def multiply(u: Perm, w: Perm) -> Perm:
    """(u*w)(i) = u(w(i)); function composition, u after w."""
    if len(u) != len(w):
        raise ValueError(f"size mismatch: {len(u)} vs {len(w)}")
    return tuple(u[x - 1] for x in w)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def length(w: Perm) -> int:
    """Number of inversion pairs i < j with w(i) > w(j).

    >>> length((1, 2, 3, 4)), length((4, 3, 2, 1))
    (0, 6)
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def apply_s_right(w: Perm, i: int) -> Perm:
    """w * s_i: swap positions i, i+1 (1-based i <= n-1)."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def apply_s_left(w: Perm, i: int) -> Perm:
    """s_i * w: swap the values i, i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def apply_transposition_left(w: Perm, t: Transposition) -> Perm:
    """(a b) * w for a transposition t = (a, b): swap the values a, b."""
    a, b = t
    return tuple(b if x == a else a if x == b else x for x in w)


def left_inversions(w: Perm) -> frozenset:
    """All (i, j), i < j, whose values appear out of order in w.

    These are exactly the transpositions t with length(t*w) < length(w);
    there are length(w) of them.
    """
    inv = inverse(w)
    n = len(w)
    return frozenset((i, j) for i in range(1, n) for j in range(i + 1, n + 1)
                     if inv[i - 1] > inv[j - 1])


def left_descents(w: Perm) -> frozenset:
    """Generator indices i with length(s_i * w) < length(w)."""
    inv = inverse(w)
    return frozenset(i for i in range(1, len(w))
                     if inv[i - 1] > inv[i])


def right_descents(w: Perm) -> frozenset:
    """Generator indices i with length(w * s_i) < length(w)."""
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def rank_matrix(w: Perm):
    """r[i][j] = #{k <= i : w(k) <= j}, for i, j = 1..n (0-padded borders)."""
    n = len(w)
    r = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            r[i][j] = r[i - 1][j] + (1 if w[i - 1] <= j else 0)
    return r


def bruhat_leq(u: Perm, w: Perm) -> bool:
    """Bruhat order on S_n via the rank-matrix criterion.

    u <= w iff every rank count of u dominates the one of w; this is an
    O(n^2) test, checked against the exponential subword characterization
    in the test suite.
    """
    if len(u) != len(w):
        raise ValueError(f"size mismatch: {len(u)} vs {len(w)}")
    ru, rw = rank_matrix(u), rank_matrix(w)
    n = len(u)
    return all(ru[i][j] >= rw[i][j]
               for i in range(1, n + 1) for j in range(1, n + 1))


def right_inversions(w: Perm) -> frozenset:
    """All position pairs (i, j), i < j, with w(i) > w(j); these are the
    transpositions t with length(w*t) < length(w)."""
    n = len(w)
    return frozenset((i, j) for i in range(1, n) for j in range(i + 1, n + 1)
                     if w[i - 1] > w[j - 1])


def weak_left_leq(u: Perm, w: Perm) -> bool:
    """Weak left order: u <=_L w iff w = x*u with lengths adding.

    Equivalent to containment of right inversion sets.
    """
    return right_inversions(u) <= right_inversions(w)


def reduced_word(w: Perm) -> Word:
    """A reduced word for w, deterministic: repeatedly strip the
    smallest-index left descent, so w = s_{i1} s_{i2} ... s_{ik}.

    >>> evaluate_word(reduced_word((3, 4, 1, 2)), 4)
    (3, 4, 1, 2)
    """
    word = []
    while True:
        ds = left_descents(w)
        if not ds:
            return tuple(word)
        i = min(ds)
        word.append(i)
        w = apply_s_left(w, i)


def evaluate_word(word: Word, n: int) -> Perm:
    """The product s_{i1} s_{i2} ... s_{ik} as a permutation of [n]."""
    w = identity(n)
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index out of range: {i} (n={n})")
        w = apply_s_right(w, i)
    return w


def is_reduced(word: Word, n: int) -> bool:
    return length(evaluate_word(word, n)) == len(word)


def avoids_patterns(w: Perm, patterns) -> bool:
    """True iff no subsequence of w is order-isomorphic to any pattern.

    >>> avoids_patterns((4, 5, 3, 1, 2), [(3, 4, 1, 2), (4, 2, 3, 1)])
    False
    """
    patterns = [check_permutation(p) for p in patterns]
    if not patterns:
        raise ValueError("patterns must be nonempty")
    n = len(w)
    for p in patterns:
        k = len(p)
        if k > n:
            continue
        target = tuple(sorted(range(k), key=lambda i: p[i]))
        for positions in combinations(range(n), k):
            vals = [w[i] for i in positions]
            if tuple(sorted(range(k), key=lambda i: vals[i])) == target:
                return False
    return True


def cycle_type(w: Perm) -> tuple:
    """Cycle lengths of w as a partition (weakly decreasing).

    >>> cycle_type((2, 1, 4, 3))
    (2, 2)
    """
    n = len(w)
    seen = [False] * n
    sizes = []
    for start in range(n):
        if seen[start]:
            continue
        size = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = w[i] - 1
            size += 1
        sizes.append(size)
    return tuple(sorted(sizes, reverse=True))


# -- Hessenberg functions ---------------------------------------------------

def check_hessenberg(m) -> tuple:
    """Validate m(j) >= j, m nondecreasing, m(n) = n."""
    m = tuple(int(x) for x in m)
    n = len(m)
    ok = (n >= 1 and m[-1] == n
          and all(m[j] >= j + 1 for j in range(n))
          and all(m[j + 1] >= m[j] for j in range(n - 1)))
    if not ok:
        raise ValueError(f"not a Hessenberg function: {m}")
    return m


def codominant_from_hessenberg(m) -> Perm:
    """The lexicographically greatest w with w(i) <= m(i) for all i.

    Greedy: at each position take the largest unused value that fits.
    The result always avoids the patterns 3412 and 4231.

    >>> codominant_from_hessenberg((2, 3, 4, 4))
    (2, 3, 4, 1)
    """
    m = check_hessenberg(m)
    used = set()
    out = []
    for cap in m:
        x = cap
        while x in used:
            x -= 1
        used.add(x)
        out.append(x)
    return tuple(out)


def hessenberg_from_skew(lam, mu, n: int):
    """The column-wise bound m(j) = max{i : i - lam_i + mu_j - j <= 0}
    attached to a skew shape, zero-padding both partitions to length n.

    Returns the Hessenberg function, or None in the degenerate case where
    the bound fails m(j) >= j (which signals that no permutation fits the
    shape; with mu contained in lam this does not occur).
    """
    lam = tuple(lam) + (0,) * (n - len(lam))
    mu = tuple(mu) + (0,) * (n - len(mu))
    if len(lam) != n or len(mu) != n:
        raise ValueError(f"partitions too long for n={n}: {lam}, {mu}")
    if any(mu[i] > lam[i] for i in range(n)):
        raise ValueError(f"mu is not contained in lam: {mu} vs {lam}")
    m = []
    for j in range(1, n + 1):
        fits = [i for i in range(1, n + 1) if i - lam[i - 1] + mu[j - 1] - j <= 0]
        if not fits:
            return None
        m.append(max(fits))
    try:
        return check_hessenberg(m)
    except ValueError:
        return None


def all_hessenberg_functions(n: int):
    """All Hessenberg functions on [n], lexicographically (Catalan many)."""
    def rec(prefix, j):
        if j == n:
            yield tuple(prefix)
            return
        lo = max(j + 1, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            if j == n - 1 and v != n:
                continue
            yield from rec(prefix + [v], j + 1)
    yield from rec([], 0)


def all_permutations(n: int):
    return (tuple(p) for p in permutations(range(1, n + 1)))


def transpositions(n: int):
    """All (i, j) with 1 <= i < j <= n."""
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


# -- indexed tables ---------------------------------------------------------

class PermTable:
    """All of S_n indexed by (length, lex) order, with multiplication tables.

    The enumeration cores (binary-word scans, parabolic modules, trace
    tables) run on integer indices into this table instead of tuples.

    Attributes:
        perms:   index -> one-line tuple, sorted by (length, entries)
        index:   one-line tuple -> index
        lengths: index -> Coxeter length
        rmult:   rmult[p][i-1] = index of perms[p] * s_i
        lmult:   lmult[p][i-1] = index of s_i * perms[p]
        inv:     index of the inverse permutation
    """

    def __init__(self, n: int, limit: int | None = None):
        config.check_n(n, limit)
        self.n = n
        perms = sorted(all_permutations(n), key=lambda w: (length(w), w))
        self.perms = perms
        self.index = {w: p for p, w in enumerate(perms)}
        self.lengths = [length(w) for w in perms]
        self.rmult = [[self.index[apply_s_right(w, i)] for i in range(1, n)]
                      for w in perms]
        self.lmult = [[self.index[apply_s_left(w, i)] for i in range(1, n)]
                      for w in perms]
        self.inv = [self.index[inverse(w)] for w in perms]

    def __len__(self):
        return len(self.perms)


_tables: dict = {}


def perm_table(n: int, limit: int | None = None) -> PermTable:
    """Shared per-n table (insert-if-absent; entries are immutable)."""
    table = _tables.get(n)
    if table is None:
        table = _tables.setdefault(n, PermTable(n, limit))
    return table


if __name__ == "__main__":
    import doctest
    doctest.testmod()
