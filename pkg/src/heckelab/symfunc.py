"""
Symmetric functions of one homogeneous degree over the Laurent ring in
q^(1/2): the classical bases e, h, p, m, s, exact transitions between
them, the omega involution, Hall pairing, Frobenius characters of Hecke
elements, immanants, and the power-sum rescaling used by the plethystic
substitution x -> x/(q-1).

Conversions route through the Schur basis.  The Kostka matrix (h_mu =
sum_lambda K[lambda][mu] s_lambda = transition also used for s -> m) is
built by iterated Pieri multiplication and inverted by back-substitution
along the dominance-compatible order; power sums convert through the
character table, computed by the Murnaghan-Nakayama rule on beta-sets.
Only the s -> p direction introduces rational scalars (1/z_mu).

Partitions are weakly decreasing tuples of positive integers.  Where a
total order is needed, partitions of n are listed in descending
lexicographic order, which refines dominance.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import config
from .coxeter import cycle_type
from .hecke import HeckeElement
from .laurentq import ONE, ZERO, LaurentFrac, LaurentQ, q_power
from .parabolic import induced_character, young_subgroup_generators

__all__ = [
    "Partition", "partitions", "check_partition", "conjugate_partition",
    "z_mu", "class_size", "sign_partition", "dominates",
    "CharacterTable", "character_table", "murnaghan_nakayama",
    "SymFunc", "omega", "hall_inner_product", "frobenius_character",
    "multiply", "newton_check", "jacobi_trudi", "immanant", "z_matrix",
    "plethysm_scale",
]

Partition = tuple

BASES = ("e", "h", "p", "m", "s")


# -- partition utilities -----------------------------------------------------

@lru_cache(maxsize=None)
def partitions(n: int) -> tuple:
    """Partitions of n in descending lexicographic order (refines
    dominance: larger parts first).

    >>> partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return tuple(rec(n, n))


def check_partition(lam) -> Partition:
    lam = tuple(int(x) for x in lam)
    if any(a <= 0 for a in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {lam}")
    return lam


def conjugate_partition(lam) -> Partition:
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a >= i) for i in range(1, lam[0] + 1))


def z_mu(mu) -> int:
    """The centralizer order: prod i^(m_i) m_i! over multiplicities."""
    z = 1
    mult: dict = {}
    for a in mu:
        mult[a] = mult.get(a, 0) + 1
    for a, m in mult.items():
        z *= a ** m
        for i in range(1, m + 1):
            z *= i
    return z


def class_size(mu) -> int:
    """Number of permutations of cycle type mu: n!/z_mu."""
    n = sum(mu)
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return fact // z_mu(mu)


def sign_partition(mu) -> int:
    """(-1)^(n - number of parts)."""
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def dominates(lam, mu) -> bool:
    """lam >= mu in dominance order (partial sums dominate)."""
    a = b = 0
    la, mb = list(lam), list(mu)
    k = max(len(la), len(mb))
    la += [0] * (k - len(la))
    mb += [0] * (k - len(mb))
    for x, y in zip(la, mb):
        a += x
        b += y
        if a < b:
            return False
    return True


# -- character table -----------------------------------------------------------

@lru_cache(maxsize=None)
def _mn_beta(beta: tuple, mu: tuple) -> int:
    """Murnaghan-Nakayama on a beta-set (sorted strictly decreasing)."""
    if not mu:
        return 1
    k = mu[0]
    rest = mu[1:]
    bset = set(beta)
    total = 0
    for pos, b in enumerate(beta):
        t = b - k
        if t < 0 or t in bset:
            continue
        crossings = sum(1 for c in beta if t < c < b)
        newbeta = tuple(sorted((set(beta) - {b}) | {t}, reverse=True))
        term = _mn_beta(newbeta, rest)
        total += -term if crossings % 2 else term
    return total


def murnaghan_nakayama(lam, mu) -> int:
    """The irreducible character value chi^lam(mu)."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"sizes differ: {lam} vs {mu}")
    m = len(lam)
    beta = tuple(lam[i] + (m - 1 - i) for i in range(m))
    return _mn_beta(beta, mu)


class CharacterTable:
    """All chi^lam(mu) for one n, with rows and columns over
    ``partitions(n)``."""

    def __init__(self, n: int):
        self.n = n
        parts = partitions(n)
        self.parts = parts
        self.values = {(lam, mu): murnaghan_nakayama(lam, mu)
                       for lam in parts for mu in parts}

    def chi(self, lam, mu) -> int:
        return self.values[(tuple(lam), tuple(mu))]


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    return CharacterTable(n)


# -- Kostka numbers via Pieri ----------------------------------------------------

def _pieri_row(nu: Partition, k: int):
    """Shapes lam obtained from nu by adding a horizontal strip of size k."""
    nu = tuple(nu)
    rows = len(nu) + 1
    out = []

    def rec(i, prev_new, remaining, acc):
        # prev_new: the part chosen for row i-1, bounding row i from above
        if i == rows:
            if remaining == 0:
                out.append(tuple(a for a in acc if a))
            return
        old = nu[i] if i < len(nu) else 0
        upper = min(prev_new, old + remaining)
        # horizontal strip: new_i between old_i and old_(i-1)
        prev_old = nu[i - 1] if i >= 1 else None
        for new in range(old, upper + 1):
            if i >= 1 and new > nu[i - 1]:
                break
            rec(i + 1, new, remaining - (new - old), acc + [new])

    rec(0, nu[0] + k if nu else k, k, [])
    return out


@lru_cache(maxsize=None)
def _kostka(n: int) -> dict:
    """K[lam][mu] with h_mu = sum K[lam][mu] s_lam and
    s_lam = sum K[lam][mu] m_mu."""
    parts = partitions(n)
    K = {lam: {} for lam in parts}
    for mu in parts:
        expans = {(): 1}
        for k in mu:
            nxt: dict = {}
            for nu, c in expans.items():
                for lam in _pieri_row(nu, k):
                    nxt[lam] = nxt.get(lam, 0) + c
            expans = nxt
        for lam, c in expans.items():
            K[lam][mu] = c
    return K


# -- the SymFunc value type --------------------------------------------------------

class SymFunc:
    """A homogeneous symmetric function tagged with its basis.

    coeffs maps partitions of ``degree`` to LaurentQ (or LaurentFrac on
    the plethysm path).  Immutable by convention.
    """

    __slots__ = ("basis", "degree", "coeffs")

    def __init__(self, basis: str, degree: int, coeffs=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.degree = degree
        clean = {}
        if coeffs:
            for lam, c in coeffs.items():
                lam = check_partition(lam)
                if sum(lam) != degree:
                    raise ValueError(f"{lam} is not a partition of {degree}")
                if isinstance(c, (int, Fraction)):
                    c = LaurentQ({0: c})
                if c:
                    clean[lam] = c
        self.coeffs = clean

    @staticmethod
    def basis_element(basis: str, lam) -> "SymFunc":
        lam = check_partition(lam)
        return SymFunc(basis, sum(lam), {lam: ONE})

    # -- linear structure ----------------------------------------------------

    def _check(self, other):
        if (not isinstance(other, SymFunc) or other.basis != self.basis
                or other.degree != self.degree):
            raise ValueError("mixing different bases or degrees; convert first")

    def __add__(self, other):
        self._check(other)
        d = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = d.get(lam, ZERO) + c
            if s:
                d[lam] = s
            else:
                d.pop(lam, None)
        out = SymFunc.__new__(SymFunc)
        out.basis, out.degree, out.coeffs = self.basis, self.degree, d
        return out

    def __neg__(self):
        out = SymFunc.__new__(SymFunc)
        out.basis, out.degree = self.basis, self.degree
        out.coeffs = {lam: -c for lam, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        if isinstance(c, (int, Fraction)):
            c = LaurentQ({0: c})
        d = {}
        for lam, x in self.coeffs.items():
            p = x * c
            if p:
                d[lam] = p
        out = SymFunc.__new__(SymFunc)
        out.basis, out.degree, out.coeffs = self.basis, self.degree, d
        return out

    def map_coeffs(self, f) -> "SymFunc":
        d = {}
        for lam, x in self.coeffs.items():
            y = f(x)
            if y:
                d[lam] = y
        out = SymFunc.__new__(SymFunc)
        out.basis, out.degree, out.coeffs = self.basis, self.degree, d
        return out

    def __eq__(self, other):
        return (isinstance(other, SymFunc) and self.basis == other.basis
                and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, lam) -> LaurentQ:
        return self.coeffs.get(tuple(lam), ZERO)

    # -- basis conversion -------------------------------------------------------

    def to_basis(self, target: str, budget: int | None = None) -> "SymFunc":
        if target not in BASES:
            raise ValueError(f"unknown basis {target!r}")
        if target == self.basis:
            return self
        config.check_n(self.degree,
                       budget if budget is not None
                       else config.DEFAULTS.symfunc_max_degree,
                       what="degree")
        in_s = self._to_schur()
        if target == "s":
            return in_s
        return in_s._schur_to(target)

    def _to_schur(self) -> "SymFunc":
        n, parts = self.degree, partitions(self.degree)
        out: dict = {}
        if self.basis == "s":
            return self
        if self.basis in ("h", "e"):
            K = _kostka(n)
            for mu, c in self.coeffs.items():
                for lam in parts:
                    k = K[lam].get(mu, 0)
                    if k:
                        tgt = conjugate_partition(lam) if self.basis == "e" else lam
                        _acc(out, tgt, c * k)
        elif self.basis == "p":
            chi = character_table(n)
            for mu, c in self.coeffs.items():
                for lam in parts:
                    k = chi.chi(lam, mu)
                    if k:
                        _acc(out, lam, c * k)
        elif self.basis == "m":
            # solve sum_lam b_lam K[lam][mu] = c_mu by back-substitution
            # (K is unitriangular against the descending-lex order)
            K = _kostka(n)
            need = dict(self.coeffs)
            b: dict = {}
            for lam in parts:  # descending lex; lam can only involve mu <= lam
                c = need.get(lam, ZERO)
                if c:
                    b[lam] = c
                    for mu, k in K[lam].items():
                        if mu != lam:
                            _acc(need, mu, c * (-k))
                    need.pop(lam, None)
            out = b
        return SymFunc("s", n, out)

    def _schur_to(self, target: str) -> "SymFunc":
        n, parts = self.degree, partitions(self.degree)
        out: dict = {}
        if target == "m":
            K = _kostka(n)
            for lam, c in self.coeffs.items():
                for mu, k in K[lam].items():
                    _acc(out, mu, c * k)
        elif target in ("h", "e"):
            # b_lam = sum_mu K[lam][mu] x_mu with K unitriangular; solve
            # for x ascending in lex order, whose smaller entries are known
            K = _kostka(n)
            need = {lam: c for lam, c in self.coeffs.items()}
            if target == "e":
                need = {conjugate_partition(lam): c for lam, c in need.items()}
            x: dict = {}
            for mu in reversed(parts):
                c = need.get(mu, ZERO)
                for nu, k in K[mu].items():
                    if nu != mu and nu in x:
                        c = c - x[nu] * k
                if c:
                    x[mu] = c
            out = x
        elif target == "p":
            chi = character_table(n)
            for mu in parts:
                total = ZERO
                for lam, c in self.coeffs.items():
                    k = chi.chi(lam, mu)
                    if k:
                        total = total + c * k
                total = total * Fraction(1, z_mu(mu))
                if total:
                    out[mu] = total
        return SymFunc(target, n, out)

    # -- rendering / serialization -----------------------------------------------

    def sorted_coeffs(self):
        return [(lam, self.coeffs[lam])
                for lam in partitions(self.degree) if lam in self.coeffs]

    def __str__(self):
        return self._render(latex=False)

    def latex(self) -> str:
        return self._render(latex=True)

    def _render(self, latex: bool) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for lam, c in self.sorted_coeffs():
            sub = ",".join(str(a) for a in lam)
            name = f"{self.basis}_{{{sub}}}" if latex else f"{self.basis}[{sub}]"
            cs = c.latex() if isinstance(c, LaurentQ) and latex else str(c)
            simple = isinstance(c, LaurentQ) and len(c.c) == 1
            if cs == "1":
                bits.append(name)
            elif simple:
                bits.append(f"{cs}{name}" if latex else f"{cs}*{name}")
            else:
                bits.append(f"({cs}){name}" if latex else f"({cs})*{name}")
        return ("+" if latex else " + ").join(bits)

    def __repr__(self):
        return f"SymFunc({self.basis!r}, {self.degree}, {len(self.coeffs)} terms)"

    def to_json(self) -> dict:
        return {"basis": self.basis, "degree": self.degree,
                "coeffs": [{"partition": list(lam), "coeff": c.to_json()}
                           for lam, c in self.sorted_coeffs()]}

    @staticmethod
    def from_json(data: dict) -> "SymFunc":
        coeffs = {tuple(item["partition"]): LaurentQ.from_json(item["coeff"])
                  for item in data["coeffs"]}
        return SymFunc(data["basis"], int(data["degree"]), coeffs)


def _acc(d: dict, key, val) -> None:
    s = d.get(key, ZERO) + val
    if s:
        d[key] = s
    else:
        d.pop(key, None)


# -- classical operations ------------------------------------------------------

def omega(f: SymFunc) -> SymFunc:
    """The involution with omega(e_lam) = h_lam, omega(p_k) = (-1)^(k-1) p_k,
    omega(s_lam) = s_(lam transposed)."""
    if f.basis == "e":
        return SymFunc("h", f.degree, f.coeffs)
    if f.basis == "h":
        return SymFunc("e", f.degree, f.coeffs)
    if f.basis == "p":
        return SymFunc("p", f.degree,
                       {lam: (c if sign_partition(lam) > 0 else -c)
                        for lam, c in f.coeffs.items()})
    if f.basis == "s":
        return SymFunc("s", f.degree,
                       {conjugate_partition(lam): c
                        for lam, c in f.coeffs.items()})
    return omega(f.to_basis("s")).to_basis("m")


def hall_inner_product(f: SymFunc, g: SymFunc) -> LaurentQ:
    """The pairing with orthonormal Schur basis."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    fs, gs = f.to_basis("s"), g.to_basis("s")
    total = ZERO
    for lam, c in fs.coeffs.items():
        d = gs.coeffs.get(lam)
        if d:
            total = total + c * d
    return total


def frobenius_character(a: HeckeElement) -> SymFunc:
    """ch(a) in the monomial basis: the m_lam coefficient is the induced
    character of a from the Young subgroup S_lam (trivial module); in the
    Schur basis the coefficients become the irreducible character values."""
    n = a.n
    out = {}
    for lam in partitions(n):
        c = induced_character(a, young_subgroup_generators(lam, n))
        if c:
            out[lam] = c
    return SymFunc("m", n, out)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product, via the power-sum basis (rational scalars may appear in
    intermediate coefficients; the result is exact)."""
    fp, gp = f.to_basis("p"), g.to_basis("p")
    out: dict = {}
    for lam, c in fp.coeffs.items():
        for mu, d in gp.coeffs.items():
            key = tuple(sorted(lam + mu, reverse=True))
            _acc(out, key, c * d)
    return SymFunc("p", f.degree + g.degree, out).to_basis(f.basis)


# -- immanants and determinantal identities ---------------------------------------

def _entry_terms(entry):
    """Normalize a matrix entry to (basis, {partition: coeff}) in a
    multiplicative basis, or (None, scalar) for ring scalars."""
    if isinstance(entry, (int, Fraction)):
        return None, LaurentQ({0: entry})
    if isinstance(entry, LaurentQ):
        return None, entry
    if isinstance(entry, SymFunc):
        if entry.basis not in ("e", "h", "p"):
            raise ValueError("matrix entries must use a multiplicative basis")
        return entry.basis, dict(entry.coeffs)
    raise ValueError(f"unsupported matrix entry: {entry!r}")


def immanant(chi_label, matrix, budget: int | None = None) -> SymFunc:
    """Imm_chi(A) = sum_w chi(w) prod_i A[i][w(i)] for the irreducible
    character labelled by a partition of the matrix size.

    Entries may be scalars or symmetric functions in one shared
    multiplicative basis ({e, h, p}); the result must come out
    homogeneous.  Cost is n! products.
    """
    k = len(matrix)
    if any(len(row) != k for row in matrix):
        raise ValueError("matrix is not square")
    config.check_n(k, budget if budget is not None
                   else config.DEFAULTS.immanant_max_n, what="matrix size")
    chi_label = check_partition(chi_label)
    if sum(chi_label) != k:
        raise ValueError(f"character label {chi_label} does not match size {k}")
    chi = character_table(k)

    basis = None
    rows = []
    for row in matrix:
        cells = []
        for entry in row:
            b, data = _entry_terms(entry)
            if b is not None:
                if basis is None:
                    basis = b
                elif basis != b:
                    raise ValueError("matrix entries mix bases")
            cells.append((b, data))
        rows.append(cells)
    if basis is None:
        basis = "p"

    from itertools import permutations as iperm
    total: dict = {}
    for w in iperm(range(k)):
        cval = chi.chi(chi_label, cycle_type(tuple(x + 1 for x in w)))
        if not cval:
            continue
        # expand the product of the selected entries
        acc = {(): LaurentQ({0: cval})}
        dead = False
        for i in range(k):
            b, data = rows[i][w[i]]
            if b is None:
                if not data:
                    dead = True
                    break
                acc = {key: c * data for key, c in acc.items()}
            else:
                nxt: dict = {}
                for part, d in data.items():
                    for key, c in acc.items():
                        merged = tuple(sorted(key + part, reverse=True))
                        _acc(nxt, merged, c * d)
                acc = nxt
        if dead:
            continue
        for key, c in acc.items():
            _acc(total, key, c)
    degrees = {sum(key) for key in total}
    if not degrees:
        return SymFunc(basis, 0, {})
    if len(degrees) > 1:
        raise ValueError(f"inhomogeneous immanant: degrees {sorted(degrees)}")
    return SymFunc(basis, degrees.pop(), total)


def jacobi_trudi(lam, mu=()) -> SymFunc:
    """The skew Schur function as the h-determinant
    det(h_(lam_i - mu_j + j - i)), returned in the h-basis."""
    lam = check_partition(lam) if lam else ()
    mu = check_partition(mu) if mu else ()
    k = max(len(lam), len(mu))
    if any((mu[i] if i < len(mu) else 0) > (lam[i] if i < len(lam) else 0)
           for i in range(k)):
        raise ValueError(f"{mu} is not contained in {lam}")
    if k == 0:
        return SymFunc("h", 0, {(): ONE})
    lamp = tuple(lam) + (0,) * (k - len(lam))
    mup = tuple(mu) + (0,) * (k - len(mu))

    from itertools import permutations as iperm
    total: dict = {}
    for w in iperm(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k)
                  if w[i] > w[j])
        sign = -1 if inv % 2 else 1
        part = []
        dead = False
        for i in range(k):
            d = lamp[i] - mup[w[i]] + w[i] - i
            if d < 0:
                dead = True
                break
            if d > 0:
                part.append(d)
        if dead:
            continue
        key = tuple(sorted(part, reverse=True))
        _acc(total, key, LaurentQ({0: sign}))
    return SymFunc("h", sum(lam) - sum(mu), total)


def z_matrix(n: int):
    """The n x n matrix with p_(j-i+1) on and above the diagonal, the
    integers 1..n-1 on the subdiagonal, zeros below; its determinant is
    n! e_n and its permanent n! h_n."""
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j >= i:
                row.append(SymFunc.basis_element("p", (j - i + 1,)))
            elif j == i - 1:
                row.append(i - 1)
            else:
                row.append(0)
        rows.append(row)
    return rows


def newton_check(n: int, budget: int | None = None) -> bool:
    """Verify the factorial expansions of e_n and h_n through power sums
    and through the determinant/permanent of `z_matrix`, by exact
    expansion; raises on the first failing identity."""
    config.check_n(n, budget, what="n")
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    en = {mu: LaurentQ({0: class_size(mu) * sign_partition(mu)})
          for mu in partitions(n)}
    hn = {mu: LaurentQ({0: class_size(mu)}) for mu in partitions(n)}
    e_ref = SymFunc("e", n, {(n,): fact}).to_basis("p")
    h_ref = SymFunc("h", n, {(n,): fact}).to_basis("p")
    if SymFunc("p", n, en) != e_ref:
        raise AssertionError("power-sum expansion of n! e_n failed")
    if SymFunc("p", n, hn) != h_ref:
        raise AssertionError("power-sum expansion of n! h_n failed")
    if n >= 1:
        zn = z_matrix(n)
        det = immanant((1,) * n, zn, budget=budget)
        per = immanant((n,), zn, budget=budget)
        if det.to_basis("p") != e_ref:
            raise AssertionError("determinant form of n! e_n failed")
        if per.to_basis("p") != h_ref:
            raise AssertionError("permanent form of n! h_n failed")
    return True


# -- plethystic rescaling --------------------------------------------------------

def plethysm_scale(f: SymFunc, mode: str) -> SymFunc:
    """Rescale power sums: p_k -> p_k (q^k - 1) ("times") or
    p_k / (q^k - 1) ("divide"), extended multiplicatively over p_lam and
    linearly.  The two modes are mutually inverse.

    In divide mode coefficients may leave the polynomial ring; they are
    returned as exact fractions and must be cleared by the caller
    (`SymFunc.map_coeffs` with `LaurentFrac.clear`) after the compensating
    multiplication.
    """
    if mode not in ("times", "divide"):
        raise ValueError(f"unknown mode {mode!r}")
    fp = f.to_basis("p")
    out = {}
    for lam, c in fp.coeffs.items():
        factor = ONE
        for k in lam:
            factor = factor * (q_power(k) - ONE)
        if mode == "times":
            out[lam] = (c * factor if not isinstance(c, LaurentFrac)
                        else c * LaurentFrac(factor))
        else:
            if isinstance(c, LaurentFrac):
                out[lam] = c * LaurentFrac(ONE, factor)
            else:
                out[lam] = LaurentFrac(c, factor)
    res = SymFunc.__new__(SymFunc)
    res.basis, res.degree = "p", fp.degree
    res.coeffs = {lam: c for lam, c in out.items() if c}
    return res


if __name__ == "__main__":
    import doctest
    doctest.testmod()
