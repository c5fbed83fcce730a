"""Univariate polynomial algebra over a coefficient ring.

The characteristic polynomial Gamma of a flat transfer matrix drives
everything downstream: power sums of its roots give the invariants of
finite cyclic covers (Newton's identities / the linear recursion), the
composed product combines levels (tensor of similarity classes), and
root-of-unity certificates witness periodicity of the underlying maps.

Polynomials are dense, lowest degree first, over any ring descriptor
from ``rings``; the root-multiset product is computed exactly through a
resultant (determinant of Q~(x, C_P) for the companion matrix C_P), so
no numerical root extraction enters the exact path.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from .cyclo import CycloElem
from .rings import ring_of


class RingPoly:
    """Dense polynomial sum_k c_k x^k over a coefficient ring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        cs = [ring.coerce(c) if not _same_ring(c, ring) else c for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.ring = ring
        self.coeffs = cs

    @staticmethod
    def from_roots_free(ring, coeffs):
        return RingPoly(ring, coeffs)

    @staticmethod
    def zero(ring):
        return RingPoly(ring, [])

    @staticmethod
    def one(ring):
        return RingPoly(ring, [ring.one])

    @staticmethod
    def x(ring):
        return RingPoly(ring, [ring.zero, ring.one])

    @staticmethod
    def x_minus(ring, root):
        return RingPoly(ring, [-ring.coerce(root), ring.one])

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def leading(self):
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.ring.zero

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ring.zero

    def normalized(self):
        """Strip the highest power of x dividing the polynomial."""
        if not self.coeffs:
            return self
        k = 0
        while _is_zero(self.coeffs[k]):
            k += 1
        return RingPoly(self.ring, self.coeffs[k:])

    def __add__(self, other):
        other = self._co(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RingPoly(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self):
        return RingPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._co(other))

    def __mul__(self, other):
        if not isinstance(other, RingPoly):
            c = self.ring.coerce(other)
            return RingPoly(self.ring, [x * c for x in self.coeffs])
        other = self._co(other)
        if self.is_zero() or other.is_zero():
            return RingPoly.zero(self.ring)
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if not _is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return RingPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = RingPoly.one(self.ring)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, RingPoly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and \
            all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(hash(c) if not isinstance(c, Fraction) else c
                          for c in self.coeffs))

    def _co(self, other):
        if isinstance(other, RingPoly):
            return other
        return RingPoly(self.ring, [self.ring.coerce(other)])

    def __call__(self, value):
        """Horner evaluation at a ring element (or compatible object)."""
        if not self.coeffs:
            return self.ring.zero
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def eval_matrix(self, mat):
        """Evaluate at a square RingMatrix (Cayley-Hamilton checks)."""
        from .matring import RingMatrix
        acc = RingMatrix.zero(self.ring, mat.rows, mat.rows)
        for c in reversed(self.coeffs):
            acc = acc * mat + RingMatrix.identity(self.ring, mat.rows) * c
        return acc

    def divmod(self, other):
        """Polynomial division; requires a field-like coefficient ring."""
        other = self._co(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        inv_lead = self.ring.inv(other.leading())
        rem = list(self.coeffs)
        dn = other.degree()
        q = [self.ring.zero] * max(0, len(rem) - dn)
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i] * inv_lead
            if _is_zero(c):
                continue
            q[i - dn] = c
            for j, d in enumerate(other.coeffs):
                rem[i - dn + j] = rem[i - dn + j] - c * d
        return RingPoly(self.ring, q), RingPoly(self.ring, rem)

    def monic(self):
        if self.is_zero():
            return self
        inv_lead = self.ring.inv(self.leading())
        return RingPoly(self.ring, [c * inv_lead for c in self.coeffs])

    def gcd(self, other):
        a, b = self, self._co(other)
        while not b.is_zero():
            _, r = a.divmod(b)
            a, b = b, r
        return a.monic() if not a.is_zero() else a

    def bar(self):
        return RingPoly(self.ring, [self.ring.bar(c) for c in self.coeffs])

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            if k == 0:
                parts.append(f"({c})")
            else:
                xs = "x" if k == 1 else f"x^{k}"
                parts.append(xs if c == self.ring.one else f"({c})*{xs}")
        return " + ".join(parts)

    def __repr__(self):
        return f"RingPoly[{self.ring.name}]({self})"


def _is_zero(c):
    if isinstance(c, (int, Fraction)):
        return c == 0
    z = getattr(c, "is_zero", None)
    return z() if callable(z) else not c


def _same_ring(c, ring):
    try:
        return ring_of(c) is ring or ring_of(c).name == ring.name
    except TypeError:
        return False


# -- power sums ---------------------------------------------------------


class PowerSumSeries:
    """Values s_d = sum of d-th root powers, d >= 1, over the ring."""

    def __init__(self, ring, values):
        self.ring = ring
        self.values = list(values)

    def __getitem__(self, d):
        if d < 1 or d > len(self.values):
            raise IndexError(f"s_{d} not computed")
        return self.values[d - 1]

    def __len__(self):
        return len(self.values)


def power_sums(gamma, d_max):
    """Power sums of the root multiset of a monic ``gamma`` up to d_max.

    Newton's identities produce s_1..s_deg; beyond the degree the s_d
    satisfy the linear recursion whose characteristic polynomial is
    gamma itself.
    """
    if not gamma.is_monic():
        raise ValueError("power sums need a monic polynomial")
    ring = gamma.ring
    r = gamma.degree()
    # e_i = (-1)^i coeff_(r-i), elementary symmetric functions
    e = [ring.coerce((-1) ** i) * gamma.coeff(r - i) for i in range(r + 1)]
    s = []
    for d in range(1, d_max + 1):
        if d <= r:
            acc = ring.zero
            for i in range(1, d):
                acc = acc + e[i] * s[d - i - 1] * ((-1) ** (i + 1))
            acc = acc + e[d] * ((-1) ** (d + 1) * d)
            s.append(acc)
        else:
            acc = ring.zero
            for i in range(1, r + 1):
                acc = acc + e[i] * s[d - i - 1] * ((-1) ** (i + 1))
            s.append(acc)
    return PowerSumSeries(ring, s)


# -- composed (tensor) product -------------------------------------------


def tensor_product(p, q):
    """Monic polynomial whose roots are the pairwise products of roots.

    Computed exactly as det(Q~(x, C_P)) where C_P is the companion
    matrix of P over R[x] and Q~ is the homogenisation of Q; the
    determinant is division-free, so any commutative coefficient ring
    works.
    """
    if not (p.is_monic() and q.is_monic()):
        raise ValueError("tensor product needs monic polynomials")
    from .matring import RingMatrix, berkowitz_det

    ring = p.ring
    n, m = p.degree(), q.degree()
    if n == 0 or m == 0:
        return RingPoly.one(ring)

    class _PolyRing:
        is_field = False
        name = f"({ring.name})[x]"

        @property
        def zero(self):
            return RingPoly.zero(ring)

        @property
        def one(self):
            return RingPoly.one(ring)

        def coerce(self, v):
            if isinstance(v, RingPoly):
                return v
            return RingPoly(ring, [ring.coerce(v)])

    S = _PolyRing()
    x = RingPoly.x(ring)
    # companion matrix of p over S
    comp = RingMatrix.zero(S, n, n)
    for i in range(1, n):
        comp[i, i - 1] = S.one
    for i in range(n):
        comp[i, n - 1] = S.coerce(-p.coeff(i))
    # homogenised Q evaluated at y = comp:  sum_j q_(m-j) x^(m-j) comp^j
    acc = RingMatrix.zero(S, n, n)
    ypow = RingMatrix.identity(S, n)
    for j in range(0, m + 1):
        acc = acc + ypow * S.coerce((x ** (m - j)) * q.coeff(m - j))
        if j < m:
            ypow = ypow * comp
    det = berkowitz_det(acc)
    assert det.is_monic(), "composed product lost monicity"
    return det


# -- numeric roots ---------------------------------------------------------


def derivative(poly):
    return RingPoly(poly.ring, [poly.coeffs[k] * k
                                for k in range(1, len(poly.coeffs))])


def numeric_roots(gamma, root_index=1, tol=1e-9):
    """Complex roots of gamma under the chosen embedding of k_p.

    Repeated roots are split off exactly (gcd with the derivative over
    the coefficient field) before any numerics, so multiple roots come
    back at full accuracy with exact multiplicities.  Deterministic
    ordering by (modulus, argument); each root satisfies
    |gamma(root)| < 1e-8 after Newton polishing.
    """
    if gamma.is_zero():
        raise ValueError("numeric roots of the zero polynomial")
    if gamma.degree() < 1:
        return []
    if gamma.ring.is_field and gamma.degree() >= 2:
        g = gamma.monic().gcd(derivative(gamma))
        if g.degree() > 0:
            simple, _ = gamma.monic().divmod(g)
            out = _numeric_simple(simple, root_index) + \
                numeric_roots(g.monic(), root_index, tol)
            out.sort(key=lambda z: (round(abs(z), 9), round(cmath.phase(z), 9)))
            return out
    return _numeric_simple(gamma, root_index)


def _numeric_simple(gamma, root_index):
    import numpy as np

    cs = []
    for c in gamma.coeffs:
        if isinstance(c, CycloElem):
            cs.append(c.embed(root_index))
        elif isinstance(c, (int, Fraction)):
            cs.append(complex(c))
        else:
            cs.append(c.eval_complex(cmath.exp(1j * cmath.pi * root_index)))
    if len(cs) == 1:
        return []
    roots = np.roots(list(reversed(cs)))

    def f(z):
        acc = cs[-1]
        for c in reversed(cs[:-1]):
            acc = acc * z + c
        return acc

    def fp(z):
        acc = 0
        for k in range(len(cs) - 1, 0, -1):
            acc = acc * z + k * cs[k]
        return acc

    polished = []
    for z in roots:
        z = complex(z)
        for _ in range(50):
            d = fp(z)
            if abs(d) < 1e-14:
                break
            step = f(z) / d
            z -= step
            if abs(step) < 1e-15:
                break
        polished.append(z)
    for z in polished:
        assert abs(f(z)) < 1e-8, "root polishing failed"
    polished.sort(key=lambda z: (round(abs(z), 9), round(cmath.phase(z), 9)))
    return polished


# -- root-of-unity periodicity ----------------------------------------------


def root_periodicity(gamma, bound):
    """Least m <= bound with every root of gamma an m-th root of unity.

    Decided exactly: strip gcd(gamma, x^m - 1) factors until nothing
    is left (multiplicity is allowed, so the radical is what must
    divide x^m - 1).  Returns None if no m <= bound works.
    """
    if not gamma.is_monic() or _is_zero(gamma.constant_term()):
        raise ValueError("periodicity needs a monic polynomial with "
                         "nonzero constant term")
    ring = gamma.ring
    if not ring.is_field:
        raise ValueError("periodicity is decided over a field")
    if gamma.degree() == 0:
        return 1
    for m in range(1, bound + 1):
        xm1 = RingPoly(ring, [-ring.one] + [ring.zero] * (m - 1) + [ring.one])
        h = gamma
        while h.degree() > 0:
            g = h.gcd(xm1)
            if g.degree() == 0:
                break
            h, rem = h.divmod(g)
            assert rem.is_zero()
        else:
            return m
        if h.degree() == 0:
            return m
    return None
