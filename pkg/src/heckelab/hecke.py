"""
The Hecke algebra H_n of S_n over Laurent polynomials in v = q^(1/2).

Elements are finitely supported maps from permutations to LaurentQ in the
standard basis {T_w}, with

    T_u T_w = T_{uw}            when lengths add,
    T_s^2   = (q-1) T_s + q     for a simple transposition s.

The bar involution sends q^(1/2) to q^(-1/2) and T_w to the inverse of
T_{w^{-1}}.  `KLContext` computes the integral Kazhdan-Lusztig elements

    B_w := q^(len(w)/2) C'_w = sum_{z <= w} P_{z,w}(q) T_z

by the classical recursion on a left descent, with mu-correction terms;
bar invariance and the degree bound deg P_{z,w} < (len(w)-len(z))/2 are
then checked as postconditions.  The table is memoized per n behind a
size guard.
"""

from __future__ import annotations

from . import config
from .coxeter import (
    Perm, Word, apply_s_left, apply_s_right, evaluate_word, identity,
    inverse, left_descents, length, reduced_word, right_descents,
)
from .laurentq import ONE, ZERO, LaurentQ, Q, q_power

__all__ = [
    "HeckeElement", "KLContext", "kl_context",
    "bott_samelson_product", "springer_decomposition",
]

_QM1 = Q - ONE  # q - 1


class HeckeElement:
    """A finitely supported sum of T_w with LaurentQ coefficients.

    Immutable by convention.  All permutations in the support share the
    same n.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, LaurentQ):
                    c = LaurentQ({0: c})
                if c:
                    if len(w) != n:
                        raise ValueError(f"size mismatch: {w} in H_{n}")
                    clean[w] = c
        self.terms = clean

    # -- constructors --------------------------------------------------

    @staticmethod
    def t_basis(n: int, w: Perm) -> "HeckeElement":
        return HeckeElement(n, {tuple(w): ONE})

    @staticmethod
    def unit(n: int) -> "HeckeElement":
        return HeckeElement.t_basis(n, identity(n))

    @staticmethod
    def zero(n: int) -> "HeckeElement":
        return HeckeElement(n)

    # -- linear structure ------------------------------------------------

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        d = dict(self.terms)
        for w, c in other.terms.items():
            s = d.get(w, ZERO) + c
            if s:
                d[w] = s
            else:
                d.pop(w, None)
        out = HeckeElement.__new__(HeckeElement)
        out.n, out.terms = self.n, d
        return out

    def __neg__(self) -> "HeckeElement":
        out = HeckeElement.__new__(HeckeElement)
        out.n = self.n
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        if not isinstance(c, LaurentQ):
            c = LaurentQ({0: c})
        if not c:
            return HeckeElement.zero(self.n)
        out = HeckeElement.__new__(HeckeElement)
        out.n = self.n
        out.terms = {w: x * c for w, x in self.terms.items()}
        return out

    def __eq__(self, other):
        return (isinstance(other, HeckeElement)
                and self.n == other.n and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, w: Perm) -> LaurentQ:
        return self.terms.get(tuple(w), ZERO)

    def _check(self, other):
        if not isinstance(other, HeckeElement) or other.n != self.n:
            raise ValueError("mixing elements of different Hecke algebras")

    # -- products ----------------------------------------------------------

    def mul_ts_right(self, i: int) -> "HeckeElement":
        """Right multiplication by T_{s_i}.

        T_w T_s = T_{ws} when ws is longer, else (q-1) T_w + q T_{ws}.
        """
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"generator index out of range: {i}")
        d = {}
        for w, c in self.terms.items():
            ws = apply_s_right(w, i)
            if w[i - 1] < w[i]:  # ws longer
                s = d.get(ws, ZERO) + c
                if s:
                    d[ws] = s
                else:
                    d.pop(ws, None)
            else:
                s = d.get(ws, ZERO) + c * Q
                if s:
                    d[ws] = s
                else:
                    d.pop(ws, None)
                s = d.get(w, ZERO) + c * _QM1
                if s:
                    d[w] = s
                else:
                    d.pop(w, None)
        out = HeckeElement.__new__(HeckeElement)
        out.n, out.terms = self.n, d
        return out

    def mul_ts_left(self, i: int) -> "HeckeElement":
        """Left multiplication by T_{s_i}."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"generator index out of range: {i}")
        d = {}
        for w, c in self.terms.items():
            sw = apply_s_left(w, i)
            if w.index(i) < w.index(i + 1):  # sw longer
                s = d.get(sw, ZERO) + c
            else:
                s = d.get(sw, ZERO) + c * Q
                t = d.get(w, ZERO) + c * _QM1
                if t:
                    d[w] = t
                else:
                    d.pop(w, None)
            if s:
                d[sw] = s
            else:
                d.pop(sw, None)
        out = HeckeElement.__new__(HeckeElement)
        out.n, out.terms = self.n, d
        return out

    def mul(self, other: "HeckeElement") -> "HeckeElement":
        """Algebra product, extending bilinearly over reduced words of the
        right factor's support."""
        self._check(other)
        out = HeckeElement.zero(self.n)
        for w, c in sorted(other.terms.items()):
            part = self.scale(c)
            for i in reduced_word(w):
                # w = s_{i1}...s_{ik} stripped from the left, so right
                # multiplication applies the letters in word order
                part = part.mul_ts_right(i)
            out = out + part
        return out

    def mul_word_right(self, word: Word) -> "HeckeElement":
        part = self
        for i in word:
            part = part.mul_ts_right(i)
        return part

    # -- bar involution -----------------------------------------------------

    def bar_involution(self) -> "HeckeElement":
        """The ring involution with q^(1/2) -> q^(-1/2), T_w -> (T_{w^-1})^-1."""
        out = HeckeElement.zero(self.n)
        for w, c in self.terms.items():
            out = out + _t_bar(self.n, w).scale(c.bar())
        return out

    # -- rendering / serialization -------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (length(kv[0]), kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for w, c in self.sorted_terms():
            name = "T[%s]" % ",".join(str(x) for x in w)
            if c == ONE:
                bits.append(name)
            elif len(c.c) > 1:
                bits.append(f"({c})*{name}")
            else:
                bits.append(f"{c}*{name}")
        return " + ".join(bits)

    def __repr__(self):
        return f"HeckeElement(n={self.n}, {len(self.terms)} terms)"

    def to_json(self) -> dict:
        return {"n": self.n,
                "terms": [{"perm": list(w), "coeff": c.to_json()}
                          for w, c in self.sorted_terms()]}

    @staticmethod
    def from_json(data: dict) -> "HeckeElement":
        n = int(data["n"])
        terms = {}
        for item in data["terms"]:
            w = tuple(int(x) for x in item["perm"])
            terms[w] = LaurentQ.from_json(item["coeff"])
        return HeckeElement(n, terms)


# inverse of T_{w^{-1}}, memoized per n: these are the images of T_w under
# the bar involution before conjugating coefficients
_t_bar_cache: dict = {}


def _t_bar(n: int, w: Perm) -> HeckeElement:
    cache = _t_bar_cache.setdefault(n, {})
    elem = cache.get(w)
    if elem is None:
        u = inverse(w)
        elem = HeckeElement.unit(n)
        qinv = q_power(-1)
        qinv_m1 = qinv - ONE
        for i in reversed(reduced_word(u)):
            # T_s^{-1} = q^{-1} T_s + (q^{-1} - 1) T_e
            elem = elem.mul_ts_right(i).scale(qinv) + elem.scale(qinv_m1)
        cache[w] = elem
    return elem


def bott_samelson_product(word: Word, n: int) -> HeckeElement:
    """The product (1 + T_{s_1})(1 + T_{s_2})...(1 + T_{s_k}) in the T-basis.

    The word need not be reduced.
    """
    out = HeckeElement.unit(n)
    for i in word:
        out = out + out.mul_ts_right(i)
    return out


class KLContext:
    """Kazhdan-Lusztig data for one symmetric group S_n.

    `element(w)` returns the integral basis element
    B_w = q^(len(w)/2) C'_w expanded in the T-basis; `polynomial(u, w)`
    reads off P_{u,w}(q).  Elements are built by recursion on the smallest
    left descent (a right-descent recursion is available for
    cross-checking; both produce the same basis).
    """

    def __init__(self, n: int, limit: int | None = None, verify: bool = True):
        config.check_n(n, limit)
        self.n = n
        self.verify = verify
        self._elements: dict = {}
        self._elements_right: dict = {}

    # -- core recursion -----------------------------------------------------

    def element(self, w: Perm) -> HeckeElement:
        """B_w = q^(len(w)/2) C'_w as a T-basis element."""
        w = tuple(w)
        out = self._elements.get(w)
        if out is not None:
            return out
        if len(w) != self.n:
            raise ValueError(f"size mismatch: {w} in S_{self.n}")
        ds = left_descents(w)
        if not ds:
            out = HeckeElement.unit(self.n)
        else:
            s = min(ds)
            wp = apply_s_left(w, s)
            base = self.element(wp)
            # B_s * B_{w'} = B_w + sum mu(z, w') v^(len(w)-len(z)) B_z
            # over z < w' with s a left descent of z
            out = base.mul_ts_left(s) + base
            lw = length(w)
            for z in sorted(base.terms, key=length, reverse=True):
                if z == wp or s not in left_descents(z):
                    continue
                m = self._mu_from(base, z, length(wp))
                if m:
                    out = out - self.element(z).scale(
                        LaurentQ({lw - length(z): m}))
            if self.verify:
                self._verify(w, out)
        self._elements[w] = out
        return out

    @staticmethod
    def _mu_from(element: HeckeElement, z: Perm, lw: int):
        """mu(z, w) = coefficient of q^((len(w)-len(z)-1)/2) in P_{z,w}."""
        d = lw - length(z) - 1
        if d % 2:
            return 0
        return element.terms[z].coeff(d)

    def _verify(self, w: Perm, out: HeckeElement) -> None:
        lw = length(w)
        for z, p in out.terms.items():
            if not p.is_q_polynomial():
                raise AssertionError(f"P_({z},{w}) is not a q-polynomial: {p}")
            if z != w and p.max_vexp() >= lw - length(z):
                raise AssertionError(f"degree bound fails for P_({z},{w}): {p}")
        if out.terms.get(w) != ONE:
            raise AssertionError(f"leading coefficient of B_{w} is not 1")

    def element_right_recursion(self, w: Perm) -> HeckeElement:
        """Same element computed by recursing on the smallest right descent;
        kept as an independent cross-check of the descent choice."""
        w = tuple(w)
        out = self._elements_right.get(w)
        if out is not None:
            return out
        ds = right_descents(w)
        if not ds:
            out = HeckeElement.unit(self.n)
        else:
            s = min(ds)
            wp = apply_s_right(w, s)
            base = self.element_right_recursion(wp)
            out = base.mul_ts_right(s) + base
            lw = length(w)
            for z in sorted(base.terms, key=length, reverse=True):
                if z == wp or s not in right_descents(z):
                    continue
                m = self._mu_from(base, z, length(wp))
                if m:
                    out = out - self.element_right_recursion(z).scale(
                        LaurentQ({lw - length(z): m}))
        self._elements_right[w] = out
        return out

    # -- derived data ---------------------------------------------------------

    def polynomial(self, u: Perm, w: Perm) -> LaurentQ:
        """The Kazhdan-Lusztig polynomial P_{u,w}(q); requires u <= w."""
        u, w = tuple(u), tuple(w)
        p = self.element(w).terms.get(u)
        if p is None:
            from .coxeter import bruhat_leq
            if not bruhat_leq(u, w):
                raise ValueError(f"{u} is not below {w} in Bruhat order")
            return ZERO
        return p

    def mu(self, u: Perm, w: Perm):
        return self._mu_from(self.element(w), tuple(u), length(w))

    def expand_cprime(self, a: HeckeElement) -> dict:
        """Expand a = sum_w coeff(w) B_w by triangular elimination in
        descending length order; round-trips through `element`."""
        residue = a
        out = {}
        while residue.terms:
            w = max(residue.terms, key=lambda z: (length(z), z))
            c = residue.terms[w]
            out[w] = c
            residue = residue - self.element(w).scale(c)
        return out

    # -- persistence ------------------------------------------------------------

    def to_json(self) -> dict:
        return {"format": "heckelab-kl-cache", "version": 1, "n": self.n,
                "elements": {
                    ",".join(map(str, w)): {
                        ",".join(map(str, z)): p.to_json()
                        for z, p in sorted(elem.terms.items())}
                    for w, elem in sorted(self._elements.items())}}

    def load_json(self, data: dict) -> None:
        if (data.get("format") != "heckelab-kl-cache"
                or data.get("version") != 1 or data.get("n") != self.n):
            raise ValueError("unrecognized KL cache payload")
        for ws, terms in data["elements"].items():
            w = tuple(int(x) for x in ws.split(","))
            elem = HeckeElement(self.n, {
                tuple(int(x) for x in zs.split(",")): LaurentQ.from_json(p)
                for zs, p in terms.items()})
            self._elements[w] = elem


_contexts: dict = {}


def kl_context(n: int, limit: int | None = None) -> KLContext:
    """Shared per-n context (insert-if-absent discipline)."""
    ctx = _contexts.get(n)
    if ctx is None:
        ctx = _contexts.setdefault(n, KLContext(n, limit))
    return ctx


def springer_decomposition(word: Word, n: int,
                           ctx: KLContext | None = None) -> dict:
    """Expand the product prod (1 + T_{s_i}) over a reduced word in the
    Kazhdan-Lusztig basis.

    Returns {u: Q_u} with  prod (1+T_{s_i}) = sum_u Q_u B_u,  so that
    Q_u = q^((len(w)-len(u))/2) P_u(q^(1/2)) where the P_u are the
    multiplicity series of the decomposition: each Q_u is a polynomial in
    v with nonnegative integer coefficients, palindromic about
    (len(w)-len(u))/2, and Q_w = 1 for the top element.
    """
    word = tuple(word)
    w = evaluate_word(word, n)
    if length(w) != len(word):
        raise ValueError(f"word {word} is not reduced")
    if ctx is None:
        ctx = kl_context(n)
    return ctx.expand_cprime(bott_samelson_product(word, n))
