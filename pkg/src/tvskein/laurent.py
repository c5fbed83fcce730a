"""Exact arithmetic in Z[A, A^-1] (rational coefficients permitted).

Every symbolic quantity in the engine ultimately lives here: the bracket
variable A, the loop value delta = -A^2 - A^-2, twist factors mu = -A^3,
bracket polynomials of diagrams, and the entries of transfer matrices.
Polynomials are stored sparsely as {exponent: coefficient} with no zero
coefficients, so equality is exact and canonical.

The involution ``bar`` sends A to A^-1 and fixes the rationals.

``LaurentFrac`` is the fraction field, needed for Jones-Wenzl projector
coefficients and for linear algebra over the Laurent ring.
"""

from __future__ import annotations

from fractions import Fraction


def _coeff(c):
    """Coerce ints/Fractions; pass through exotic coefficient objects."""
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    return c


class LaurentPoly:
    """A finite sum sum_k c_k A^k with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                c = _coeff(c)
                if e in d:
                    c = d[e] + c
                if c:
                    d[e] = c
                elif e in d:
                    del d[e]
        self.terms = d

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def one():
        return LaurentPoly({0: 1})

    @staticmethod
    def const(c):
        return LaurentPoly({0: c})

    @staticmethod
    def monomial(exp, coeff=1):
        return LaurentPoly({exp: coeff})

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def min_exp(self):
        return min(self.terms) if self.terms else 0

    def max_exp(self):
        return max(self.terms) if self.terms else 0

    def coeff(self, exp):
        return self.terms.get(exp, Fraction(0))

    def as_rational(self):
        """Return the constant value if this is a constant, else None."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) == {0}:
            return self.terms[0]
        return None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        d = dict(self.terms)
        for e, c in other.terms.items():
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            elif e in d:
                del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_laurent(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly()
            out = LaurentPoly.__new__(LaurentPoly)
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        d = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = d.get(e, 0) + c1 * c2
                if s:
                    d[e] = s
                elif e in d:
                    del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = d
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) == 1:
                (e, c), = self.terms.items()
                return LaurentPoly({e * n: Fraction(1) / c ** (-n)})
            raise ValueError("negative power of a non-monomial Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def bar(self):
        """The involution A -> A^-1."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {-e: c for e, c in self.terms.items()}
        return out

    def subs_power(self, m):
        """Substitute A -> A^m (m a nonzero integer)."""
        if m == 0:
            raise ValueError("substitution exponent must be nonzero")
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e * m: c for e, c in self.terms.items()}
        return out

    def exact_div(self, other):
        """Divide by ``other``, raising ValueError if not exact."""
        other = _as_laurent(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        num = dict(self.terms)
        lead = other.max_exp()
        lead_c = other.terms[lead]
        low_bound = self.min_exp() - other.min_exp()
        quot = {}
        while num:
            e = max(num)
            q = num[e] / lead_c
            qe = e - lead
            if qe < low_bound:
                raise ValueError("Laurent division is not exact")
            quot[qe] = q
            for e2, c2 in other.terms.items():
                en = qe + e2
                s = num.get(en, 0) - q * c2
                if s:
                    num[en] = s
                elif en in num:
                    del num[en]
        return LaurentPoly(quot)

    def divides(self, other):
        try:
            _as_laurent(other).exact_div(self)
            return True
        except (ValueError, ZeroDivisionError, ArithmeticError):
            return False

    def __eq__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- evaluation ---------------------------------------------------

    def eval_complex(self, a):
        return sum(complex(c) * a ** e for e, c in self.terms.items())

    # -- text form ----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            neg = c < 0
            c = abs(c)
            if e == 0:
                body = _fmt_coeff(c)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if c == 1 else f"{_fmt_coeff(c)}*{var}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"

    @staticmethod
    def parse(text):
        """Parse the canonical text form (inverse of ``str``)."""
        s = text.replace(" ", "")
        if not s or s == "0":
            return LaurentPoly()
        # split into signed terms
        terms = []
        i = 0
        cur = ""
        while i < len(s):
            ch = s[i]
            if ch in "+-" and cur and cur[-1] not in "+-^":
                terms.append(cur)
                cur = ch
            else:
                cur += ch
            i += 1
        terms.append(cur)
        out = {}
        for t in terms:
            sign = 1
            while t and t[0] in "+-":
                if t[0] == "-":
                    sign = -sign
                t = t[1:]
            if not t:
                raise ValueError(f"malformed term in {text!r}")
            if "A" in t:
                coeff_s, _, rest = t.partition("A")
                coeff_s = coeff_s.rstrip("*")
                coeff = Fraction(coeff_s) if coeff_s else Fraction(1)
                if rest.startswith("^"):
                    exp = int(rest[1:])
                elif rest == "":
                    exp = 1
                else:
                    raise ValueError(f"malformed term in {text!r}")
            else:
                coeff = Fraction(t)
                exp = 0
            out[exp] = out.get(exp, 0) + sign * coeff
        return LaurentPoly(out)


def _fmt_coeff(c):
    return str(c)


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly({0: x})
    return NotImplemented


# -- distinguished elements -------------------------------------------

A = LaurentPoly({1: 1})
ONE = LaurentPoly.one()
DELTA = LaurentPoly({2: -1, -2: -1})       # loop value -A^2 - A^-2
MU = LaurentPoly({3: -1})                  # positive-kink factor -A^3


def quantum_int(n):
    """[n] = (A^2n - A^-2n)/(A^2 - A^-2), a Laurent polynomial."""
    if n < 0:
        return -quantum_int(-n)
    # [n] = A^(2n-2) + A^(2n-6) + ... + A^(2-2n)
    return LaurentPoly({2 * n - 2 - 4 * k: 1 for k in range(n)})


def bracket_e(s):
    """<e_s> = (-1)^s [s+1], the closed loop colored s."""
    v = quantum_int(s + 1)
    return -v if s % 2 else v


def mu_eig(s):
    """mu(s) = (-1)^s A^(s^2+2s), the positive twist eigenvalue on e_s."""
    return LaurentPoly({s * s + 2 * s: -1 if s % 2 else 1})


# -- ordinary polynomial helpers over Q[A] ----------------------------
# Used by gcd computation for the fraction field. Internally a Laurent
# polynomial is shifted so its minimum exponent is zero.


def _to_dense(p):
    """LaurentPoly -> (shift, dense coefficient list low->high)."""
    if p.is_zero():
        return 0, []
    lo, hi = p.min_exp(), p.max_exp()
    return lo, [p.coeff(e) for e in range(lo, hi + 1)]


def _from_dense(shift, coeffs):
    return LaurentPoly({shift + i: c for i, c in enumerate(coeffs) if c})


def _dense_divmod(num, den):
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    q = [Fraction(0)] * max(0, len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i] / lead
        if c:
            q[i - dn] = c
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    while num and not num[-1]:
        num.pop()
    return q, num


def _to_int_primitive(coeffs):
    """Fraction list -> primitive integer list (content stripped)."""
    from math import gcd, lcm
    if not coeffs:
        return []
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _int_pseudo_rem(a, b):
    """Pseudo-remainder of integer coefficient lists (dense, low->high)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db:
        if not a[-1]:
            a.pop()
            if not a:
                return []
            continue
        la = a[-1]
        from math import gcd
        g = gcd(la, lb)
        ma, mb = lb // g, la // g
        # a = ma * a - mb * x^(da-db) * b
        shift = len(a) - 1 - db
        a = [ma * c for c in a]
        for j, bc in enumerate(b):
            a[shift + j] -= mb * bc
        while a and not a[-1]:
            a.pop()
        if not a:
            return []
    return a


def poly_gcd(p, q):
    """Monic gcd of two Laurent polynomials, as an ordinary poly in A.

    Powers of A are units in the Laurent ring, so the gcd is defined up
    to units; we return the monic ordinary-polynomial representative
    with nonzero constant term.  Computed by a primitive PRS over Z.
    """
    from math import gcd as igcd
    _, a = _to_dense(p)
    _, b = _to_dense(q)
    a = _to_int_primitive(a)
    b = _to_int_primitive(b)
    while b:
        r = _int_pseudo_rem(a, b)
        g = 0
        for x in r:
            g = igcd(g, x)
        if g > 1:
            r = [x // g for x in r]
        a, b = b, r
    if not a:
        return LaurentPoly()
    k = 0
    while not a[k]:
        k += 1
    a = a[k:]
    lead = Fraction(a[-1])
    return LaurentPoly({i: c / lead for i, c in enumerate(a) if c})


class LaurentFrac:
    """Element of the fraction field Q(A), reduced on construction."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = _as_laurent(num)
        den = ONE if den is None else _as_laurent(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = LaurentPoly(), ONE
            return
        if not _reduced:
            g = poly_gcd(num, den)
            if g.max_exp() > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            # normalise: denominator monic with min exponent 0
            shift = LaurentPoly({-den.min_exp(): Fraction(1) / den.terms[den.max_exp()]})
            num = num * shift
            den = den * shift
        self.num, self.den = num, den

    @staticmethod
    def zero():
        return LaurentFrac(0)

    @staticmethod
    def one():
        return LaurentFrac(1)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentFrac(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = LaurentFrac.__new__(LaurentFrac)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_frac(other) - self

    def __mul__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentFrac(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_frac(other) / self

    def inv(self):
        return LaurentFrac(self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = LaurentFrac.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def bar(self):
        return LaurentFrac(self.num.bar(), self.den.bar())

    def as_laurent(self):
        """Return the underlying LaurentPoly, raising if not integral."""
        return self.num.exact_div(self.den)

    def __eq__(self, other):
        other = _as_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((hash(self.num), hash(self.den)))

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"LaurentFrac({self})"


def _as_frac(x):
    if isinstance(x, LaurentFrac):
        return x
    if isinstance(x, (int, Fraction, LaurentPoly)):
        return LaurentFrac(x)
    return NotImplemented
