"""
Exact Laurent polynomials in v = q^(1/2), the coefficient ring for the
whole package.

A value is a finitely supported map from integer v-exponents to exact
coefficients (Python ints, or `fractions.Fraction` where rational scalars
are unavoidable).  The variable q is represented by v-exponent 2, so the
statement "f is a polynomial in q" means "all v-exponents of f are even
and nonnegative".  Keeping a single integer exponent avoids half-integer
bookkeeping: every formula we need becomes integral in v.

>>> print(Q * Q - ONE)
-1+q^2
>>> print((Q - ONE) * (Q + ONE))
-1+q^2
>>> print(V ** 3)
q^{3/2}
>>> print(q_power(2).bar())
q^{-2}
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "LaurentQ", "LaurentFrac",
    "ZERO", "ONE", "Q", "V",
    "q_power", "v_power", "from_q_coefficients", "gauss_number",
]

Coeff = "int | Fraction"


def _norm_coeff(c):
    """Collapse integral Fractions back to int."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class LaurentQ:
    """A Laurent polynomial in v = q^(1/2) with exact coefficients.

    Immutable by convention: no method mutates ``self``.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _norm_coeff(c)
                if c:
                    d[int(e)] = c
        self.c = d

    # -- constructors ------------------------------------------------

    @staticmethod
    def term(coeff, vexp: int) -> "LaurentQ":
        return LaurentQ({vexp: coeff})

    def __repr__(self):
        return f"LaurentQ({self.c!r})"

    # -- ring structure ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentQ({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = dict(self.c)
        for e, c in other.c.items():
            s = _norm_coeff(d.get(e, 0) + c)
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        out = LaurentQ.__new__(LaurentQ)
        out.c = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentQ.__new__(LaurentQ)
        out.c = {e: -c for e, c in self.c.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.c, other.c
        if len(a) > len(b):
            a, b = b, a
        d = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                s = _norm_coeff(d.get(e, 0) + c1 * c2)
                if s:
                    d[e] = s
                else:
                    d.pop(e, None)
        out = LaurentQ.__new__(LaurentQ)
        out.c = d
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined here")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.c == other.c

    def __bool__(self):
        return bool(self.c)

    # -- inspection ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def coeff(self, vexp: int):
        return self.c.get(vexp, 0)

    def min_vexp(self) -> int:
        return min(self.c)

    def max_vexp(self) -> int:
        return max(self.c)

    def shift(self, vexp: int) -> "LaurentQ":
        """Multiply by v^vexp."""
        out = LaurentQ.__new__(LaurentQ)
        out.c = {e + vexp: c for e, c in self.c.items()}
        return out

    def bar(self) -> "LaurentQ":
        """The involution v -> 1/v (that is, q^(1/2) -> q^(-1/2))."""
        out = LaurentQ.__new__(LaurentQ)
        out.c = {-e: c for e, c in self.c.items()}
        return out

    def subs_v(self, x):
        """Evaluate at a concrete value of v (exactly; x may be Fraction)."""
        total = 0
        for e, c in self.c.items():
            total += c * (Fraction(x) ** e if e < 0 else x ** e)
        return _norm_coeff(total)

    def is_q_polynomial(self) -> bool:
        """True iff all v-exponents are even and nonnegative."""
        return all(e >= 0 and e % 2 == 0 for e in self.c)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.c.values())

    def q_coefficients(self) -> list:
        """Coefficient list [c0, c1, ...] in q, lowest degree first.

        >>> from_q_coefficients([2, 6, 2]).q_coefficients()
        [2, 6, 2]
        """
        if not self.c:
            return []
        if not self.is_q_polynomial():
            raise ValueError(f"not a polynomial in q: {self}")
        top = self.max_vexp() // 2
        return [self.c.get(2 * k, 0) for k in range(top + 1)]

    def substitute_q_shift(self) -> "LaurentQ":
        """The substitution q -> q + 1 (input must be a polynomial in q)."""
        coeffs = self.q_coefficients()
        out = ZERO
        qp1 = Q + ONE
        for k in reversed(range(len(coeffs))):
            out = out * qp1 + coeffs[k]
        return out

    # -- shape predicates ----------------------------------------------

    def is_palindromic(self, center) -> bool:
        """True iff coefficients are symmetric about q^center.

        ``center`` may be a half-integer; internally c = 2*center must be
        an integer v-exponent.

        >>> from_q_coefficients([2, 6, 2]).is_palindromic(1)
        True
        >>> (ONE + Q).is_palindromic(0)
        False
        """
        c2 = Fraction(center) * 2
        if c2.denominator != 1:
            return False
        c2 = int(c2)
        return all(self.c.get(c2 + k, 0) == self.c.get(c2 - k, 0)
                   for e in self.c for k in (e - c2, c2 - e))

    def is_unimodal_nonneg(self) -> bool:
        """True iff q-coefficients are nonnegative and rise then fall.

        >>> from_q_coefficients([1, 2, 2, 2, 1]).is_unimodal_nonneg()
        True
        >>> from_q_coefficients([1, 0, 0, 1]).is_unimodal_nonneg()
        False
        """
        cs = self.q_coefficients()
        if any(c < 0 for c in cs):
            return False
        falling = False
        for prev, nxt in zip(cs, cs[1:]):
            if nxt < prev:
                falling = True
            elif nxt > prev and falling:
                return False
        return True

    def is_log_concave(self) -> bool:
        """True iff c_k^2 >= c_{k-1} c_{k+1} for all interior k.

        >>> from_q_coefficients([1, 2, 1]).is_log_concave()
        True
        >>> from_q_coefficients([1, 1, 3]).is_log_concave()
        False
        """
        cs = self.q_coefficients()
        return all(cs[k] * cs[k] >= cs[k - 1] * cs[k + 1]
                   for k in range(1, len(cs) - 1))

    # -- division -------------------------------------------------------

    def exact_div(self, other) -> "LaurentQ":
        """Divide exactly by another LaurentQ; raise if a remainder is left."""
        other = self._coerce(other)
        q, r = _divmod_laurent(self, other)
        if r.c:
            raise ValueError(f"inexact division: {self} by {other}")
        return q

    # -- rendering and serialization -------------------------------------

    def __str__(self):
        return self._render(latex=False)

    def latex(self) -> str:
        return self._render(latex=True)

    def _render(self, latex: bool) -> str:
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            c = self.c[e]
            if e == 0:
                mono = ""
            else:
                num = Fraction(e, 2)
                if num == 1:
                    mono = "q"
                else:
                    es = str(num)
                    if latex:
                        mono = "q^" + (es if len(es) == 1 else "{%s}" % es)
                    else:
                        mono = "q^" + (es if "/" not in es and "-" not in es
                                       else "{%s}" % es)
            if mono == "":
                parts.append(("+", str(c)) if c > 0 else ("-", str(-c)))
            elif c == 1:
                parts.append(("+", mono))
            elif c == -1:
                parts.append(("-", mono))
            elif c > 0:
                parts.append(("+", f"{c}{mono}"))
            else:
                parts.append(("-", f"{-c}{mono}"))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, part in parts[1:]:
            text += sign + part
        return text

    def to_json(self) -> dict:
        return {"v": {str(e): str(self.c[e]) for e in sorted(self.c)}}

    @staticmethod
    def from_json(data: dict) -> "LaurentQ":
        out = {}
        for e, c in data["v"].items():
            out[int(e)] = Fraction(c) if "/" in c else int(c)
        return LaurentQ(out)


def _divmod_laurent(a: LaurentQ, b: LaurentQ):
    """Long division a = q*b + r, working in v after clearing valuations."""
    if not b.c:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a.c:
        return ZERO, ZERO
    sa, sb = a.min_vexp(), b.min_vexp()
    ra = dict(a.shift(-sa).c)
    rb = b.shift(-sb).c
    db = max(rb)
    lead = rb[db]
    quot = {}
    while ra and max(ra) >= db:
        da = max(ra)
        f = Fraction(ra[da], lead) if not isinstance(ra[da], Fraction) \
            else ra[da] / lead
        f = _norm_coeff(f)
        quot[da - db] = f
        for e, c in rb.items():
            t = e + da - db
            s = _norm_coeff(ra.get(t, 0) - f * c)
            if s:
                ra[t] = s
            else:
                ra.pop(t, None)
    return LaurentQ(quot).shift(sa - sb), LaurentQ(ra).shift(sa)


def poly_gcd(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    """Monic gcd over Q[v], up to units (v-powers are units here)."""
    if not a.c:
        x = b
    elif not b.c:
        x = a
    else:
        x, y = a.shift(-a.min_vexp()), b.shift(-b.min_vexp())
        while y.c:
            x, y = y, _divmod_laurent(x, y)[1]
            if y.c:
                y = y.shift(-y.min_vexp())
    if not x.c:
        return ZERO
    x = x.shift(-x.min_vexp())
    lead = x.c[x.max_vexp()]
    return x if lead == 1 else x * Fraction(1, lead)


class LaurentFrac:
    """A ratio of two LaurentQ values.

    Normal form: the denominator is a polynomial in v with valuation 0,
    monic, and coprime to the numerator.  This is the escape hatch used
    by the power-sum rescaling of the plethysm pipeline, where division
    by q^k - 1 is required before denominators clear again.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentQ, den: LaurentQ = None):
        if den is None:
            den = ONE
        if not den.c:
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.c and g != ONE:
            num = num.exact_div(g)
            den = den.exact_div(g)
        shift = den.min_vexp() if den.c else 0
        if shift:
            den = den.shift(-shift)
            num = num.shift(-shift)
        lead = den.c[den.max_vexp()]
        if lead != 1:
            inv = Fraction(1, lead)
            den = den * inv
            num = num * inv
        self.num = num
        self.den = den

    def __add__(self, other):
        other = _coerce_frac(other)
        if other is None:
            return NotImplemented
        return LaurentFrac(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return LaurentFrac(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_frac(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = _coerce_frac(other)
        if other is None:
            return NotImplemented
        return LaurentFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce_frac(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def clear(self) -> LaurentQ:
        """Return the numerator, asserting the denominator has cleared."""
        if self.den != ONE:
            raise ValueError(f"denominator did not clear: {self.den}")
        return self.num

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"LaurentFrac({self.num!r}, {self.den!r})"


def _coerce_frac(x):
    if isinstance(x, LaurentFrac):
        return x
    if isinstance(x, LaurentQ):
        return LaurentFrac(x)
    if isinstance(x, (int, Fraction)):
        return LaurentFrac(LaurentQ({0: x}))
    return None


def q_power(k: int) -> LaurentQ:
    """q^k as a LaurentQ (v-exponent 2k)."""
    return LaurentQ({2 * k: 1})


def v_power(k: int) -> LaurentQ:
    return LaurentQ({k: 1})


def from_q_coefficients(coeffs) -> LaurentQ:
    """Build a q-polynomial from its coefficient list, constant term first."""
    return LaurentQ({2 * k: c for k, c in enumerate(coeffs)})


def gauss_number(k: int) -> LaurentQ:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    return from_q_coefficients([1] * k)


ZERO = LaurentQ()
ONE = LaurentQ({0: 1})
Q = LaurentQ({2: 1})
V = LaurentQ({1: 1})


if __name__ == "__main__":
    import doctest
    doctest.testmod()
