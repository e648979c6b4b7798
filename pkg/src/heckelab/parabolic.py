"""
Parabolic quotients of S_n and induced characters of Hecke elements.

For J a set of simple-transposition indices, W_J is the Young subgroup
they generate and JW denotes the minimal-length representatives of the
right cosets W_J \\ w, ordered by (length, one-line notation).  The right
action w ._J s keeps w when ws leaves JW and moves to ws otherwise; it
extends to an action of H_n on the free module over JW, and the trace of
right multiplication by a is the induced character c_J(a).

Two independent routes to c_J of a product (1+T_{s_1})...(1+T_{s_k}) are
implemented:

  * the trace route, multiplying sparse per-generator matrices, and
  * the binary-word route, counting fixed points of the up/down maps
    phi_{J,s,1}(w) = max(w ._J s, w), phi_{J,s,0}(w) = min(w ._J s, w)
    composed along the word, weighted by q^(number of 1s).

A third enumeration runs over all of W rather than JW: a binary word b is
*good* for w if the composite of the absolute up/down maps fixes w and
every left descent of w inside J is witnessed by a step where right
multiplication by the letter equals left multiplication by the descent.
Summing q^(number of 1s) over good pairs gives the same character, and
projecting good pairs to coset minima is a bijection onto the quotient
fixed-point pairs.  Good pairs also carry a sequence of positive roots
(one per 1-bit) certifying an affine cell of that dimension.

Everything here is exact and deterministic; the hot loops run on integer
indices from `coxeter.perm_table`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import (
    Perm, PermTable, Word, apply_s_left, apply_s_right, identity,
    left_descents, left_inversions, perm_table,
)
from .hecke import HeckeElement
from .laurentq import ONE, ZERO, LaurentQ

__all__ = [
    "ParabolicQuotient", "parabolic_quotient", "min_coset_rep",
    "dot_action", "hecke_dot_matrix", "induced_character", "trace_table",
    "bott_samelson_character", "phi", "bin_set",
    "good_words", "good_word_character", "good_word_characters_all_j",
    "kappa", "derive_root_sequence", "is_good_sequence",
    "young_subgroup_generators", "all_parabolic_subsets",
]


def _check_j(n: int, J) -> frozenset:
    J = frozenset(int(j) for j in J)
    if any(not 1 <= j <= n - 1 for j in J):
        raise ValueError(f"invalid generator indices for n={n}: {sorted(J)}")
    return J


def min_coset_rep(w: Perm, J) -> Perm:
    """The minimal-length element of W_J w (strip left descents in J)."""
    J = _check_j(len(w), J)
    while True:
        ds = left_descents(w) & J
        if not ds:
            return w
        w = apply_s_left(w, min(ds))


@dataclass(frozen=True)
class ParabolicQuotient:
    """The set JW of minimal right-coset representatives, in a fixed order."""
    n: int
    J: frozenset
    reps: tuple
    index: dict = field(repr=False)

    def __len__(self):
        return len(self.reps)

    def __contains__(self, w):
        return tuple(w) in self.index


class _QuotientTable:
    """Index-level data for one (n, J): local numbering of JW, the dot
    action, and the induced-module action of each T_s."""

    def __init__(self, n: int, J: frozenset):
        tbl = perm_table(n)
        self.tbl = tbl
        self.n = n
        self.J = J
        jlist = sorted(J)
        reps = []
        for gi in range(len(tbl)):
            li = tbl.lengths[gi]
            if all(tbl.lengths[tbl.lmult[gi][j - 1]] > li for j in jlist):
                reps.append(gi)
        self.reps = reps  # table order is (length, lex) already
        self.loc = {gi: i for i, gi in enumerate(reps)}
        # dot[i][s-1]: local index of reps[i] ._J s
        self.dot = []
        for gi in reps:
            row = []
            for s in range(n - 1):
                ws = tbl.rmult[gi][s]
                row.append(self.loc.get(ws, self.loc[gi]))
            self.dot.append(row)
        # action[s-1][i]: the row of right multiplication by T_s at basis
        # vector i, as ((target, kind), ...) with kind 0 -> 1, 1 -> q,
        # 2 -> q-1
        self.action = []
        for s in range(n - 1):
            rows = []
            for i, gi in enumerate(reps):
                ws = tbl.rmult[gi][s]
                j = self.loc.get(ws)
                if j is None:
                    rows.append(((i, 1),))
                elif tbl.lengths[ws] > tbl.lengths[gi]:
                    rows.append(((j, 0),))
                else:
                    rows.append(((j, 1), (i, 2)))
            self.action.append(rows)


_quotients: dict = {}


def _quotient_table(n: int, J: frozenset) -> _QuotientTable:
    key = (n, J)
    qt = _quotients.get(key)
    if qt is None:
        qt = _quotients.setdefault(key, _QuotientTable(n, J))
    return qt


def parabolic_quotient(n: int, J) -> ParabolicQuotient:
    """The quotient JW with reps sorted by (length, one-line notation)."""
    J = _check_j(n, J)
    qt = _quotient_table(n, J)
    reps = tuple(qt.tbl.perms[gi] for gi in qt.reps)
    return ParabolicQuotient(n, J, reps, {w: i for i, w in enumerate(reps)})


def dot_action(w: Perm, s: int, Q: ParabolicQuotient) -> Perm:
    """w ._J s = ws if ws stays in JW, else w.  Requires w in JW."""
    w = tuple(w)
    if not 1 <= s <= Q.n - 1:
        raise ValueError(f"generator index out of range: {s}")
    if w not in Q.index:
        raise ValueError(f"{w} is not a minimal coset representative")
    ws = apply_s_right(w, s)
    return ws if ws in Q.index else w


def hecke_dot_matrix(s: int, Q: ParabolicQuotient):
    """The matrix of right multiplication by T_s on the quotient module,
    rows and columns in the order of Q.reps.

    Row w reads: q*[w] when ws leaves JW; [ws] when ws is a longer rep;
    q*[ws] + (q-1)*[w] when ws is a shorter rep.  At J = {} this is the
    regular representation of T_s.
    """
    if not 1 <= s <= Q.n - 1:
        raise ValueError(f"generator index out of range: {s}")
    qt = _quotient_table(Q.n, Q.J)
    m = len(qt.reps)
    kinds = (ONE, LaurentQ({2: 1}), LaurentQ({2: 1, 0: -1}))
    out = [[ZERO] * m for _ in range(m)]
    for i, row in enumerate(qt.action[s - 1]):
        for j, kind in row:
            out[i][j] = out[i][j] + kinds[kind]
    return out


# -- trace tables ------------------------------------------------------------

def _min_right_descent(tbl: PermTable, gi: int):
    li = tbl.lengths[gi]
    for s in range(tbl.n - 1):
        if tbl.lengths[tbl.rmult[gi][s]] < li:
            return s
    return None


def _build_trace_table(n: int, J: frozenset) -> dict:
    """trace of right multiplication by T_z on the quotient module, for
    every z in S_n, as a dict z -> LaurentQ.

    Walks the right weak order as a tree (parent strips the smallest
    right descent), carrying the sparse matrix of T_(prefix) along each
    branch so every matrix is built exactly once.
    """
    tbl = perm_table(n)
    qt = _quotient_table(n, J)
    action = qt.action
    m = len(qt.reps)
    traces: list = [None] * len(tbl)

    def trace_of(mat) -> dict:
        total: dict = {}
        for i, row in enumerate(mat):
            p = row.get(i)
            if p:
                for e, c in p.items():
                    s = total.get(e, 0) + c
                    if s:
                        total[e] = s
                    else:
                        total.pop(e, None)
        return total

    def apply_gen(mat, s):
        act = action[s]
        out = []
        for row in mat:
            new: dict = {}
            for c, p in row.items():
                for c2, kind in act[c]:
                    tgt = new.get(c2)
                    if tgt is None:
                        tgt = new[c2] = {}
                    if kind == 0:
                        for e, v in p.items():
                            tgt[e] = tgt.get(e, 0) + v
                    elif kind == 1:
                        for e, v in p.items():
                            tgt[e + 1] = tgt.get(e + 1, 0) + v
                    else:
                        for e, v in p.items():
                            tgt[e + 1] = tgt.get(e + 1, 0) + v
                            tgt[e] = tgt.get(e, 0) - v
            clean = {}
            for c2, tgt in new.items():
                tgt = {e: v for e, v in tgt.items() if v}
                if tgt:
                    clean[c2] = tgt
            out.append(clean)
        return out

    import sys
    depth_need = n * (n - 1) // 2 + 50
    if sys.getrecursionlimit() < depth_need:
        sys.setrecursionlimit(depth_need + 1000)

    def walk(gi, mat):
        # one matrix alive per tree level
        traces[gi] = trace_of(mat)
        li = tbl.lengths[gi]
        for s in range(n - 1):
            us = tbl.rmult[gi][s]
            if tbl.lengths[us] > li and _min_right_descent(tbl, us) == s:
                walk(us, apply_gen(mat, s))

    walk(tbl.index[identity(n)], [{i: {0: 1}} for i in range(m)])

    return {tbl.perms[gi]: LaurentQ({2 * e: c for e, c in t.items()})
            for gi, t in enumerate(traces)}


_trace_tables: dict = {}


def trace_table(n: int, J) -> dict:
    """Cached per-(n, J) table of T_z traces on the quotient module."""
    J = _check_j(n, J)
    key = (n, J)
    t = _trace_tables.get(key)
    if t is None:
        t = _trace_tables.setdefault(key, _build_trace_table(n, J))
    return t


def induced_character(a: HeckeElement, J) -> LaurentQ:
    """c_J(a): the trace of right multiplication by a on the quotient
    module, extended linearly over the T-basis support of a."""
    table = trace_table(a.n, J)
    total = ZERO
    for w, c in a.terms.items():
        total = total + c * table[w]
    return total


# -- binary-word enumeration ---------------------------------------------------

def _word_indices(sigma: Word, n: int) -> list:
    sigma = tuple(int(s) for s in sigma)
    if any(not 1 <= s <= n - 1 for s in sigma):
        raise ValueError(f"word {sigma} has letters outside 1..{n - 1}")
    return [s - 1 for s in sigma]


def bott_samelson_character(sigma: Word, J, n: int) -> LaurentQ:
    """c_J of the product (1+T_{s_1})...(1+T_{s_k}), by counting binary
    words fixing each quotient element under the up/down composites,
    weighted by q^(number of 1s)."""
    J = _check_j(n, J)
    qt = _quotient_table(n, J)
    sig = _word_indices(sigma, n)
    tbl, dot = qt.tbl, qt.dot
    lengths = tbl.lengths
    reps = qt.reps
    k = len(sig)
    counts = [0] * (k + 1)

    def scan(start: int) -> None:
        # iterative DFS over (depth, state, ones)
        todo = [(0, start, 0)]
        while todo:
            i, u, ones = todo.pop()
            if i == k:
                if u == start:
                    counts[ones] += 1
                continue
            s = sig[i]
            v = dot[u][s]
            if v == u:
                # ws leaves JW: both bits stay at u
                todo.append((i + 1, u, ones + 1))
                todo.append((i + 1, u, ones))
            elif lengths[reps[v]] > lengths[reps[u]]:
                todo.append((i + 1, v, ones + 1))
                todo.append((i + 1, u, ones))
            else:
                todo.append((i + 1, u, ones + 1))
                todo.append((i + 1, v, ones))

    for start in range(len(reps)):
        scan(start)
    return LaurentQ({2 * e: c for e, c in enumerate(counts) if c})


def phi(w: Perm, sigma: Word, b, J=None) -> Perm:
    """Apply the up/down composite to w: at step i go to
    max(w ._J s_i, w) when b_i = 1, to the min when b_i = 0.  With J
    absent the absolute version on all of W is used (every ws counts)."""
    w = tuple(w)
    n = len(w)
    sigma = tuple(sigma)
    b = tuple(int(x) for x in b)
    if len(b) != len(sigma):
        raise ValueError("binary word and letter word differ in length")
    if set(b) - {0, 1}:
        raise ValueError(f"not a binary word: {b}")
    _word_indices(sigma, n)
    if J is None:
        for s, bit in zip(sigma, b):
            ws = apply_s_right(w, s)
            longer = w[s - 1] < w[s]
            if bit:
                w = ws if longer else w
            else:
                w = w if longer else ws
        return w
    Q = parabolic_quotient(n, J)
    if w not in Q.index:
        raise ValueError(f"{w} is not a minimal coset representative")
    for s, bit in zip(sigma, b):
        ws = dot_action(w, s, Q)
        if ws == w:
            continue
        longer = w[s - 1] < w[s]
        if bit:
            w = ws if longer else w
        else:
            w = w if longer else ws
    return w


def bin_set(w: Perm, sigma: Word, J, n: int | None = None) -> set:
    """All binary words whose quotient composite fixes w (w must lie in
    JW).  Exponential in len(sigma)."""
    w = tuple(w)
    n = len(w) if n is None else n
    J = _check_j(n, J)
    qt = _quotient_table(n, J)
    sig = _word_indices(sigma, n)
    start = qt.loc.get(qt.tbl.index[w])
    if start is None:
        raise ValueError(f"{w} is not a minimal coset representative")
    tbl, dot, reps = qt.tbl, qt.dot, qt.reps
    lengths = tbl.lengths
    out = set()
    k = len(sig)

    def rec(i, u, bits):
        if i == k:
            if u == start:
                out.add(tuple(bits))
            return
        s = sig[i]
        v = dot[u][s]
        if v == u:
            up, down = u, u
        elif lengths[reps[v]] > lengths[reps[u]]:
            up, down = v, u
        else:
            up, down = u, v
        bits.append(1)
        rec(i + 1, up, bits)
        bits[-1] = 0
        rec(i + 1, down, bits)
        bits.pop()

    rec(0, start, [])
    return out


# -- good words ---------------------------------------------------------------

def _good_scan(tbl: PermTable, sig: list, w_gi: int, targets: list,
               collect_words: bool = False):
    """Core scan for one starting permutation.

    Walks all binary words under the absolute up/down dynamics and
    returns, for the words whose endpoint is the start, either
    stats[(witness_mask, ones)] -> count, or the explicit words grouped
    by witness mask when collect_words is set.

    targets: generator indices (0-based) whose witness condition
    "u s_(step) = target u at some step" is tracked as a bitmask.
    """
    rmult, lmult, lengths = tbl.rmult, tbl.lmult, tbl.lengths
    k = len(sig)
    full_stats: dict = {}
    tmask = list(enumerate(targets))

    def rec(i, u, ones, mask, bits):
        if i == k:
            if u == w_gi:
                key = (mask, ones)
                if collect_words:
                    full_stats.setdefault(key, []).append(tuple(bits))
                else:
                    full_stats[key] = full_stats.get(key, 0) + 1
            return
        s = sig[i]
        us = rmult[u][s]
        for t_bit, t in tmask:
            if not (mask >> t_bit) & 1 and lmult[u][t] == us:
                mask |= 1 << t_bit
        if lengths[us] > lengths[u]:
            up, down = us, u
        else:
            up, down = u, us
        if collect_words:
            bits.append(1)
            rec(i + 1, up, ones + 1, mask, bits)
            bits[-1] = 0
            rec(i + 1, down, ones, mask, bits)
            bits.pop()
        else:
            rec(i + 1, up, ones + 1, mask, bits)
            rec(i + 1, down, ones, mask, bits)

    rec(0, w_gi, 0, 0, [] if collect_words else None)
    return full_stats


def good_words(w: Perm, sigma: Word, J) -> set:
    """All binary words good for w: the absolute composite fixes w and
    every left descent of w lying in J is witnessed at some step."""
    w = tuple(w)
    n = len(w)
    J = _check_j(n, J)
    tbl = perm_table(n)
    sig = _word_indices(sigma, n)
    targets = sorted(s - 1 for s in (left_descents(w) & J))
    stats = _good_scan(tbl, sig, tbl.index[w], targets, collect_words=True)
    full = (1 << len(targets)) - 1
    out = set()
    for (mask, _ones), words in stats.items():
        if mask == full:
            out.update(words)
    return out


def good_word_character(sigma: Word, J, n: int) -> LaurentQ:
    """Sum of q^(number of 1s) over all good pairs (w, b), w in S_n."""
    J = _check_j(n, J)
    tbl = perm_table(n)
    sig = _word_indices(sigma, n)
    k = len(sig)
    counts = [0] * (k + 1)
    for gi in range(len(tbl)):
        targets = sorted(s - 1 for s in left_descents(tbl.perms[gi]) & J)
        full = (1 << len(targets)) - 1
        for (mask, ones), cnt in _good_scan(tbl, sig, gi, targets).items():
            if mask == full:
                counts[ones] += cnt
    return LaurentQ({2 * e: c for e, c in enumerate(counts) if c})


def good_word_characters_all_j(sigma: Word, n: int) -> dict:
    """The good-word character for every subset J at once.

    One scan per starting permutation tracks witness bits for all left
    descents; each J then reads off the words whose witnessed set covers
    its own descents.  Returns {frozenset J: LaurentQ}.
    """
    tbl = perm_table(n)
    sig = _word_indices(sigma, n)
    k = len(sig)
    subsets = all_parabolic_subsets(n)
    counts = {J: [0] * (k + 1) for J in subsets}
    for gi in range(len(tbl)):
        desc = sorted(s - 1 for s in left_descents(tbl.perms[gi]))
        dpos = {s: i for i, s in enumerate(desc)}
        stats = _good_scan(tbl, sig, gi, desc)
        for J in subsets:
            need = 0
            for j in J:
                if j - 1 in dpos:
                    need |= 1 << dpos[j - 1]
            row = counts[J]
            for (mask, ones), cnt in stats.items():
                if mask & need == need:
                    row[ones] += cnt
    return {J: LaurentQ({2 * e: c for e, c in enumerate(cs) if c})
            for J, cs in counts.items()}


def all_parabolic_subsets(n: int) -> list:
    """All subsets of {1..n-1} as frozensets, in a deterministic order."""
    gens = list(range(1, n))
    out = []
    for bits in range(1 << len(gens)):
        out.append(frozenset(g for i, g in enumerate(gens) if (bits >> i) & 1))
    return sorted(out, key=lambda J: (len(J), sorted(J)))


def _check_good(w: Perm, sigma: Word, b, J) -> list:
    """Validate that b is good for w; return the path w_0..w_k."""
    w = tuple(w)
    n = len(w)
    sigma = tuple(sigma)
    b = tuple(int(x) for x in b)
    path = [w]
    u = w
    for s, bit in zip(sigma, b):
        ws = apply_s_right(u, s)
        longer = u[s - 1] < u[s]
        if bit:
            u = ws if longer else u
        else:
            u = u if longer else ws
        path.append(u)
    if u != w:
        raise ValueError(f"{b} does not fix {w} along {sigma}")
    J = _check_j(n, J)
    for t in left_descents(w) & J:
        if not any(apply_s_right(path[i], sigma[i]) ==
                   apply_s_left(path[i], t) for i in range(len(sigma))):
            raise ValueError(
                f"{b} is not good for {w}: descent {t} has no witness step")
    return path


def kappa(w: Perm, b, sigma: Word, J):
    """Project a good pair (w, b) to (min coset representative, b).

    This map is a bijection onto the pairs (wbar, b) with wbar in JW
    fixed by the quotient composite of b.
    """
    _check_good(w, sigma, b, J)
    wbar = min_coset_rep(tuple(w), J)
    return wbar, tuple(int(x) for x in b)


def derive_root_sequence(w: Perm, sigma: Word, b, J) -> tuple:
    """The positive roots read off the 1-steps of a good pair.

    At the i-th position with b_i = 1 the step satisfies
    t * w_(i-1) = w_(i-1) * s_i for a unique transposition t, namely the
    one swapping the values at positions s_i, s_i + 1 of w_(i-1); the
    sequence of those t (as sorted pairs) is returned.
    """
    path = _check_good(w, sigma, b, J)
    sigma = tuple(sigma)
    out = []
    for i, bit in enumerate(int(x) for x in b):
        if bit:
            u = path[i]
            s = sigma[i]
            a, c = u[s - 1], u[s]
            out.append((a, c) if a < c else (c, a))
    return tuple(out)


def is_good_sequence(delta, u: Perm, J=None) -> bool:
    """Certificate check for a sequence of positive roots against u.

    Roots are pairs (i, j), i < j, standing for e_i - e_j; the inversion
    roots of u are its left inversions.  The sequence is good for u if
    every inversion root g of u either appears in delta, or g is not
    simple and for each simple root a with g - a a root outside the
    inversion set there is an index where g - a occurs in delta with no
    earlier occurrence of a.

    J restricts the ambient group: u must lie in W_J (for roots g inside
    W_J the relevant simple roots stay inside W_J automatically).
    """
    u = tuple(u)
    n = len(u)
    delta = [tuple(r) for r in delta]
    for i, j in delta:
        if not 1 <= i < j <= n:
            raise ValueError(f"not a positive root for n={n}: {(i, j)}")
    if J is not None:
        J = _check_j(n, J)
        if min_coset_rep(u, J) != identity(n):
            raise ValueError(f"{u} does not lie in the parabolic subgroup")
    inv = left_inversions(u)

    def witnessed(rem, alpha):
        for idx, d in enumerate(delta):
            if d == rem:
                return alpha not in delta[:idx]
        return False

    for g in inv:
        if g in delta:
            continue
        i, j = g
        if j - i == 1:
            return False
        for alpha, rem in (((i, i + 1), (i + 1, j)), ((j - 1, j), (i, j - 1))):
            if rem not in inv and not witnessed(rem, alpha):
                return False
    return True


def young_subgroup_generators(parts, n: int) -> frozenset:
    """The generator set J with W_J the Young subgroup S_parts: all
    indices except the partial sums of the composition."""
    if sum(parts) != n:
        raise ValueError(f"{parts} is not a composition of {n}")
    cuts = set()
    acc = 0
    for p in parts[:-1]:
        acc += p
        cuts.add(acc)
    return frozenset(i for i in range(1, n) if i not in cuts)
