"""
Indifference graphs and their coloring generating functions.

A Hessenberg function m (nondecreasing, m(j) >= j, m(n) = n) determines
the graph on [n] with edges {i, j} for i < j <= m(i); these are exactly
the indifference graphs.  Two q-weighted sums over colorings kappa, each
weighted by q^(number of edges with kappa(i) < kappa(j) for i < j), are
computed by exact enumeration with palette [n]:

  * `csf_q` over proper colorings only (backtracking);
  * `llt_direct` over all n^n colorings.

A degree-n symmetric function is determined by its monomials in n
variables, so palette n loses nothing; the enumeration asserts that the
collected monomials are constant on permutation orbits before reporting
the monomial-basis coefficients.

`chss_check` compares omega(csf_q) against the Frobenius character of the
Kazhdan-Lusztig element of the codominant permutation of m, the two sides
computed through fully independent pipelines.  `llt_plethysm` produces
the same object as `llt_direct` for codominant permutations through the
plethystic substitution x -> x/(q-1), and is defined for every
permutation.  `conjecture_scan` reports (never asserts) positivity and
log-concavity patterns of the h-expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import config
from .coxeter import Perm, check_hessenberg, codominant_from_hessenberg, length
from .hecke import kl_context
from .laurentq import LaurentFrac, LaurentQ
from .symfunc import SymFunc, frobenius_character, omega

__all__ = [
    "IndifferenceGraph", "csf_q", "llt_direct", "llt_plethysm",
    "chss_check", "conjecture_scan", "ScanRow",
]


@dataclass(frozen=True)
class IndifferenceGraph:
    """The graph on [n] with edges {i,j}, i < j <= m(i)."""
    n: int
    edges: frozenset

    @staticmethod
    def from_hessenberg(m) -> "IndifferenceGraph":
        m = check_hessenberg(m)
        n = len(m)
        edges = frozenset((i, j) for i in range(1, n + 1)
                          for j in range(i + 1, m[i - 1] + 1))
        return IndifferenceGraph(n, edges)

    def neighbors_below(self, j: int) -> list:
        return [i for i in range(1, j) if (i, j) in self.edges]


def _coerce_graph(g) -> IndifferenceGraph:
    if isinstance(g, IndifferenceGraph):
        return g
    return IndifferenceGraph.from_hessenberg(g)


def _collect_monomials(n: int, vectors: dict) -> SymFunc:
    """Turn {exponent vector: coefficient} into a monomial-basis SymFunc,
    asserting the data is symmetric (constant on sorting orbits)."""
    by_partition: dict = {}
    for vec, poly in vectors.items():
        lam = tuple(sorted((e for e in vec if e), reverse=True))
        by_partition.setdefault(lam, {})[vec] = poly
    coeffs = {}
    for lam, orbit in by_partition.items():
        polys = list(orbit.values())
        first = polys[0]
        if any(p != first for p in polys[1:]):
            raise AssertionError(
                f"coloring sum is not symmetric at shape {lam}; "
                "this indicates a bug, not a mathematical possibility")
        # the orbit must be complete: every distinct rearrangement appears
        import math
        mult: dict = {}
        zeros = n - len(lam)
        for e in lam:
            mult[e] = mult.get(e, 0) + 1
        mult[0] = zeros
        orbit_size = math.factorial(n)
        for m in mult.values():
            orbit_size //= math.factorial(m)
        if len(orbit) != orbit_size:
            raise AssertionError(f"incomplete monomial orbit at {lam}")
        if first:
            coeffs[lam] = first
    return SymFunc("m", n, coeffs)


def csf_q(g, budget: int | None = None) -> SymFunc:
    """The proper-coloring sum with ascent statistic, in the monomial
    basis: sum over proper kappa: [n] -> [n] of q^(ascents) x_kappa."""
    g = _coerce_graph(g)
    n = g.n
    config.check_n(n, budget if budget is not None
                   else config.DEFAULTS.csf_max_n, what="n")
    below = [g.neighbors_below(j) for j in range(n + 1)]
    vectors: dict = {}
    color = [0] * (n + 1)  # color[v] for v = 1..n
    counts = [0] * n       # multiplicity of each color in the current prefix

    def rec(v: int, asc: int):
        if v > n:
            vec = tuple(counts)
            d = vectors.get(vec)
            if d is None:
                d = vectors[vec] = {}
            d[asc] = d.get(asc, 0) + 1
            return
        nbrs = below[v]
        for c in range(1, n + 1):
            ok = True
            up = 0
            for u in nbrs:
                cu = color[u]
                if cu == c:
                    ok = False
                    break
                if cu < c:
                    up += 1
            if ok:
                color[v] = c
                counts[c - 1] += 1
                rec(v + 1, asc + up)
                counts[c - 1] -= 1
        color[v] = 0

    rec(1, 0)
    polys = {vec: LaurentQ({2 * e: c for e, c in d.items()})
             for vec, d in vectors.items()}
    return _collect_monomials(n, polys)


def llt_direct(g, budget: int | None = None) -> SymFunc:
    """The all-colorings sum with ascent statistic (n^n colorings)."""
    g = _coerce_graph(g)
    n = g.n
    config.check_n(n, budget if budget is not None
                   else config.DEFAULTS.llt_direct_max_n, what="n")
    edges = sorted(g.edges)
    vectors: dict = {}
    for kappa in product(range(1, n + 1), repeat=n):
        asc = sum(1 for i, j in edges if kappa[i - 1] < kappa[j - 1])
        counts = [0] * n
        for c in kappa:
            counts[c - 1] += 1
        vec = tuple(counts)
        d = vectors.get(vec)
        if d is None:
            d = vectors[vec] = {}
        d[asc] = d.get(asc, 0) + 1
    polys = {vec: LaurentQ({2 * e: c for e, c in d.items()})
             for vec, d in vectors.items()}
    return _collect_monomials(n, polys)


def llt_plethysm(w: Perm, budget: int | None = None) -> SymFunc:
    """(q-1)^n omega(ch(B_w))[x/(q-1)] in the Schur basis, where B_w is
    the integral Kazhdan-Lusztig element of w.  Denominators introduced
    by the power-sum rescaling must clear exactly."""
    from .symfunc import plethysm_scale
    w = tuple(w)
    n = len(w)
    config.check_n(n, budget, what="n")
    ch = frobenius_character(kl_context(n).element(w))
    scaled = plethysm_scale(omega(ch), "divide")
    qm1n = (LaurentQ({2: 1, 0: -1})) ** n
    cleared = scaled.map_coeffs(
        lambda c: (c * qm1n).clear() if isinstance(c, LaurentFrac)
        else c * qm1n)
    return cleared.to_basis("s")


def chss_check(m, budget: int | None = None):
    """Compare ch(B_(w_m)) with omega(csf_q(G_m)) through independent
    pipelines; returns (equal, lhs, rhs) in the monomial basis."""
    m = check_hessenberg(m)
    w = codominant_from_hessenberg(m)
    lhs = frobenius_character(kl_context(len(m)).element(w))
    rhs = omega(csf_q(m, budget=budget)).to_basis("m")
    return lhs == rhs, lhs, rhs


@dataclass(frozen=True)
class ScanRow:
    """One permutation's verdicts in a conjecture scan."""
    w: Perm
    kind: str
    ok: bool
    detail: str


def conjecture_scan(kind: str, n: int, budget: int | None = None) -> list:
    """Scan all of S_n and report one row per permutation; verdicts are
    reported, never asserted.

    kinds:
      h-positivity:   all h-coefficients of ch(B_w) have nonnegative
                      integer q-coefficients
      log-concavity:  every h-coefficient of ch(B_w) is log-concave in q
      shifted-e:      all e-coefficients of the plethystic LLT of w are
                      nonnegative after substituting q -> q + 1
                      (convention: plain e-expansion of LLT(w) at q+1)
    """
    if kind not in ("h-positivity", "log-concavity", "shifted-e"):
        raise ValueError(f"unknown scan kind {kind!r}")
    config.check_n(n, budget, what="n")
    from .coxeter import all_permutations
    ctx = kl_context(n)
    rows = []
    for w in sorted(all_permutations(n), key=lambda u: (length(u), u)):
        if kind == "shifted-e":
            f = llt_plethysm(w).to_basis("e")
            shifted = f.map_coeffs(lambda c: c.substitute_q_shift())
            bad = [lam for lam, c in shifted.coeffs.items()
                   if any(x < 0 for x in c.q_coefficients())]
            ok = not bad
            detail = "all shifted e-coefficients nonnegative" if ok else \
                "negative shifted e-coefficient at " + _plist(bad)
        else:
            h = frobenius_character(ctx.element(w)).to_basis("h")
            if kind == "h-positivity":
                bad = [lam for lam, c in h.coeffs.items()
                       if not c.is_q_polynomial()
                       or any(x < 0 for x in c.q_coefficients())]
                ok = not bad
                detail = "h-positive" if ok else \
                    "negative h-coefficient at " + _plist(bad)
            else:
                bad = [lam for lam, c in h.coeffs.items()
                       if not c.is_log_concave()]
                ok = not bad
                detail = "all h-coefficients log-concave" if ok else \
                    "not log-concave at " + _plist(bad)
        rows.append(ScanRow(w, kind, ok, detail))
    return rows


def _plist(lams) -> str:
    return ", ".join("(" + ",".join(map(str, lam)) + ")"
                     for lam in sorted(lams, reverse=True))
