"""
Independent brute-force oracles used to freeze expected values.

Nothing here imports the implementation strategies it is checking:
Bruhat order comes from subword enumeration, symmetric functions from
explicit monomial expansion in n variables (semistandard tableaux for
Schur), coloring counts from direct enumeration.
"""

from itertools import combinations, permutations, product

from heckelab.coxeter import evaluate_word


def subword_bruhat_leq(u, w) -> bool:
    """u <= w iff u appears as a subword product of one reduced word of w."""
    word = _any_reduced_word(w)
    n = len(w)
    for k in range(len(word) + 1):
        for idx in combinations(range(len(word)), k):
            if evaluate_word(tuple(word[i] for i in idx), n) == u:
                return True
    return False


def _any_reduced_word(w):
    # bubble-sort word: sorting w to the identity uses exactly inv(w)
    # adjacent swaps, so the reversed swap sequence is reduced
    target = tuple(w)
    w = list(w)
    n = len(w)
    word = []
    for i in range(n):
        for j in range(n - 1, i, -1):
            if w[j - 1] > w[j]:
                w[j - 1], w[j] = w[j], w[j - 1]
                word.append(j)
    word.reverse()
    assert evaluate_word(tuple(word), n) == target
    return tuple(word)


# -- monomial expansions -------------------------------------------------------

def poly_mul(a: dict, b: dict, nvars: int) -> dict:
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
            if not out[e]:
                del out[e]
    return out


def _unit(nvars):
    return {(0,) * nvars: 1}


def expand_e(k: int, nvars: int) -> dict:
    out = {}
    for idx in combinations(range(nvars), k):
        e = tuple(1 if i in idx else 0 for i in range(nvars))
        out[e] = 1
    return out


def expand_h(k: int, nvars: int) -> dict:
    out = {}
    for idx in combinations(range(nvars + k - 1), k):
        e = [0] * nvars
        prev = -1
        # stars and bars
        for pos_i, pos in enumerate(idx):
            e[pos - pos_i] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + 1
    return out


def expand_p(k: int, nvars: int) -> dict:
    return {tuple(k if i == j else 0 for i in range(nvars)): 1
            for j in range(nvars)}


def expand_m(lam, nvars: int) -> dict:
    lam = tuple(lam)
    if len(lam) > nvars:
        return {}
    padded = lam + (0,) * (nvars - len(lam))
    return {e: 1 for e in set(permutations(padded))}


def ssyt_fillings(lam, nvars: int):
    """All semistandard fillings of lam with entries in 1..nvars."""
    lam = tuple(lam)
    rows = len(lam)

    def rec(r, above, acc):
        if r == rows:
            yield acc
            return
        width = lam[r]

        def fill(c, row):
            if c == width:
                yield from rec(r + 1, row, acc + [tuple(row)])
                return
            lo = row[c - 1] if c else 1
            if above is not None and c < len(above):
                lo = max(lo, above[c] + 1)
            for v in range(lo, nvars + 1):
                yield from fill(c + 1, row + [v])

        yield from fill(0, [])

    yield from rec(0, None, [])


def expand_s(lam, nvars: int) -> dict:
    out = {}
    for filling in ssyt_fillings(lam, nvars):
        e = [0] * nvars
        for row in filling:
            for v in row:
                e[v - 1] += 1
        e = tuple(e)
        out[e] = out.get(e, 0) + 1
    return out


def expand_basis_element(basis: str, lam, nvars: int) -> dict:
    lam = tuple(lam)
    if basis == "m":
        return expand_m(lam, nvars)
    if basis == "s":
        return expand_s(lam, nvars)
    single = {"e": expand_e, "h": expand_h, "p": expand_p}[basis]
    out = _unit(nvars)
    for k in lam:
        out = poly_mul(out, single(k, nvars), nvars)
    return out


def count_syt(lam) -> int:
    """Standard Young tableaux by brute-force growth."""
    lam = tuple(lam)
    n = sum(lam)

    def rec(shape):
        if sum(shape) == n:
            return 1
        count = 0
        for r in range(len(lam)):
            above = shape[r - 1] if r else n + 1
            if shape[r] < lam[r] and shape[r] < above:
                count += rec(shape[:r] + (shape[r] + 1,) + shape[r + 1:])
        return count

    return rec((0,) * len(lam))


# -- graph colorings ----------------------------------------------------------

def count_proper_colorings(n: int, edges, k: int) -> int:
    total = 0
    for kappa in product(range(k), repeat=n):
        if all(kappa[i - 1] != kappa[j - 1] for i, j in edges):
            total += 1
    return total


def monomials_of_shape(lam, k: int) -> int:
    """m_lam evaluated at x_1 = ... = x_k = 1, rest 0."""
    lam = tuple(lam)
    if len(lam) > k:
        return 0
    padded = lam + (0,) * (k - len(lam))
    return len(set(permutations(padded)))
