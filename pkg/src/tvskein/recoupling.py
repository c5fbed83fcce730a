"""Jones-Wenzl projectors, colored webs, and recoupling coefficients.

The projector f_n is built by the Wenzl recursion inside the 2n-point
Temperley-Lieb algebra with coefficients in Q(A); it is idempotent and
killed by every cap-cup generator, and its closed trace is
<e_n> = (-1)^n [n+1].

Colored evaluations come in two flavours that check each other:

* closed formulas for the theta net and the tetrahedral net, written in
  quantum factorials and evaluated exactly in Q(A) (the results are
  honest Laurent polynomials, which the code verifies by exact
  division), and
* a brute-force web engine that builds the same nets out of cups, caps
  and literal projector insertions and evaluates the Kauffman bracket.

The tetrahedron tet(A,B,E; D,C,F) has vertex triples (A,B,E), (A,C,F),
(B,C,D), (E,F,D); a zero on the first edge degenerates it to a theta.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentFrac, LaurentPoly, bracket_e, mu_eig, quantum_int
from .skein import SkeinEngine


class ColorError(ValueError):
    """Inadmissible color data (bad triple or vanishing quantum integer)."""


# -- Temperley-Lieb algebra over Q(A) ---------------------------------------
# An element of TL_n is a dict {diagram: LaurentFrac} where a diagram is a
# matching of 2n points: 0..n-1 the inputs (left to right), n..2n-1 the
# outputs (left to right).


def tl_identity(n):
    return {tuple(list(range(n, 2 * n)) + list(range(n))): LaurentFrac.one()}


def tl_e(n, i):
    """The cap-cup generator e_i joining inputs/outputs i, i+1."""
    m = {}
    pairs = {}
    pairs[i], pairs[i + 1] = i + 1, i
    pairs[n + i], pairs[n + i + 1] = n + i + 1, n + i
    for k in range(n):
        if k not in (i, i + 1):
            pairs[k] = n + k
            pairs[n + k] = k
    diag = tuple(pairs[k] for k in range(2 * n))
    return {diag: LaurentFrac.one()}


def tl_compose(x, y, n, delta=None):
    """Stack y after x (x's outputs glued to y's inputs)."""
    delta = delta or LaurentFrac(LaurentPoly({2: -1, -2: -1}))
    out = {}
    for d1, c1 in x.items():
        for d2, c2 in y.items():
            diag, loops = _glue_diagrams(d1, d2, n)
            coeff = c1 * c2
            for _ in range(loops):
                coeff = coeff * delta
            cur = out.get(diag)
            out[diag] = coeff if cur is None else cur + coeff
    return {d: c for d, c in out.items() if not c.is_zero()}


def _glue_diagrams(d1, d2, n):
    """Glue d1's outputs to d2's inputs; return (diagram, closed loops)."""
    pairs = {}
    mid_seen = [False] * n

    def follow(side, point):
        # side 1: look up d1 at `point`; side 2: look up d2
        while True:
            if side == 1:
                q = d1[point]
                if q < n:
                    return ("in", q)
                mid_seen[q - n] = True
                side, point = 2, q - n
            else:
                q = d2[point]
                if q >= n:
                    return ("out", q - n)
                mid_seen[q] = True
                side, point = 1, n + q

    done = set()
    for kind, idx, side, point in \
            [("in", i, 1, i) for i in range(n)] + \
            [("out", k, 2, n + k) for k in range(n)]:
        a = idx if kind == "in" else n + idx
        if a in done:
            continue
        ek, ei = follow(side, point)
        b = ei if ek == "in" else n + ei
        pairs[a] = b
        pairs[b] = a
        done.add(a)
        done.add(b)
    loops = 0
    for m in range(n):
        if mid_seen[m]:
            continue
        loops += 1
        cur = m
        while not mid_seen[cur]:
            mid_seen[cur] = True
            q = d2[cur]
            mid_seen[q] = True
            cur = d1[n + q] - n
    diag = tuple(pairs[k] for k in range(2 * n))
    return diag, loops


def check_color_at_level(n, p):
    """Raise unless f_n specializes to level p ([k]_p != 0 for k <= n)."""
    from .cyclo import reduce_to_kp
    for k in range(1, n + 1):
        if reduce_to_kp(quantum_int(k), p).is_zero():
            raise ColorError(
                f"[{k}] vanishes at level {p}: color {n} is not admissible")


@lru_cache(maxsize=None)
def jones_wenzl(n):
    """The Jones-Wenzl projector f_n in TL_n over Q(A)."""
    if n < 0:
        raise ColorError("negative color")
    if n in (0, 1):
        return tl_identity(max(n, 0)) if n else {(): LaurentFrac.one()}
    prev = jones_wenzl(n - 1)
    # embed f_(n-1) in TL_n by adding a through strand on the right
    emb = {}
    for d, c in prev.items():
        m = 2 * (n - 1)
        remap = {}
        for k in range(m):
            v = d[k]
            kk = k if k < n - 1 else k + 1
            vv = v if v < n - 1 else v + 1
            remap[kk] = vv
        remap[n - 1] = 2 * n - 1
        remap[2 * n - 1] = n - 1
        emb[tuple(remap[k] for k in range(2 * n))] = c
    # loop value of f_k is (-1)^k [k+1], so the Wenzl coefficient
    # -Delta_(n-2)/Delta_(n-1) comes out as +[n-1]/[n]
    coef = LaurentFrac(quantum_int(n - 1)) / LaurentFrac(quantum_int(n))
    mid = tl_compose(tl_compose(emb, tl_e(n, n - 2), n), emb, n)
    out = dict(emb)
    for d, c in mid.items():
        cur = out.get(d)
        val = c * coef
        out[d] = val if cur is None else cur + val
    return {d: c for d, c in out.items() if not c.is_zero()}


def tl_trace(x, n):
    """Markov trace: close all strands around; returns a LaurentFrac."""
    delta = LaurentFrac(LaurentPoly({2: -1, -2: -1}))
    total = LaurentFrac.zero()
    for d, c in x.items():
        # close input i with output i
        seen = [False] * (2 * n)
        loops = 0
        for s in range(2 * n):
            if seen[s]:
                continue
            loops += 1
            cur = s
            while not seen[cur]:
                seen[cur] = True
                p = d[cur]
                seen[p] = True
                cur = p + n if p < n else p - n
        val = c
        for _ in range(loops):
            val = val * delta
        total = total + val
    return total


# -- projector insertion in the skein engine --------------------------------


def proj_block_terms(n):
    """f_n as splice blocks: list of (block matching, LaurentFrac coeff).

    Block indices: inputs 0..n-1 then outputs n..2n-1, matching the
    engine's splice convention directly.
    """
    return [(d, c) for d, c in jones_wenzl(n).items()]


@lru_cache(maxsize=None)
def proj_block_terms_scaled(n):
    """f_n cleared of denominators: (terms over Z[A,A^-1], denominator).

    The common denominator is assembled by exact lcm over the reduced
    projector coefficients, so web evaluations can run over the Laurent
    ring and divide once at the end.
    """
    from .laurent import poly_gcd

    terms = jones_wenzl(n)
    den = LaurentPoly.one()
    for c in terms.values():
        g = poly_gcd(den, c.den)
        den = den * c.den.exact_div(g) if g.max_exp() > 0 else den * c.den
    scaled = []
    for d, c in terms.items():
        scaled.append((d, c.num * den.exact_div(c.den)))
    return tuple(scaled), den


class WebEngine(SkeinEngine):
    """Skein engine with projector insertion.

    Runs over Z[A,A^-1] with denominator-cleared projectors; the running
    denominator is tracked separately and divided out once at the end,
    which avoids a fraction reduction at every state merge.
    """

    def __init__(self):
        from .rings import ZA
        super().__init__(ZA)
        self.denominator = LaurentPoly.one()

    def proj(self, states, pos, n):
        terms, den = proj_block_terms_scaled(n)
        self.denominator = self.denominator * den
        out = {}
        for block, coeff in terms:
            res = self.apply_block(states, pos, n, n, block, coeff)
            for m, c in res.items():
                self._merge(out, m, c)
        return {m: c for m, c in out.items() if not _w_zero(c)}

    def block(self, states, pos, c_in, c_out, pairs):
        return self.apply_block(states, pos, c_in, c_out, pairs)

    def value(self, states):
        """The closed evaluation as a reduced element of Q(A)."""
        num = states.get((), LaurentPoly())
        return LaurentFrac(num, self.denominator)


def _w_zero(x):
    z = getattr(x, "is_zero", None)
    return z() if callable(z) else not x


# -- colored web programs -----------------------------------------------------


def _check_adm(a, b, c):
    if (a + b + c) % 2:
        raise ColorError(f"triple ({a},{b},{c}) has odd sum")
    if a > b + c or b > a + c or c > a + b:
        raise ColorError(f"triple ({a},{b},{c}) fails the triangle inequality")


def create_block(a, b, c):
    """Planar matching creating bundles [a, b, c] from nothing."""
    _check_adm(a, b, c)
    x = (a + b - c) // 2     # a-b mutual
    y = (b + c - a) // 2     # b-c mutual
    z = (a + c - b) // 2     # a-c mutual (outermost)
    W = a + b + c
    pairs = {}
    for t in range(z):
        pairs[t] = W - 1 - t
        pairs[W - 1 - t] = t
    for t in range(x):
        pairs[a - 1 - t] = a + t
        pairs[a + t] = a - 1 - t
    for t in range(y):
        pairs[a + b - 1 - t] = a + b + t
        pairs[a + b + t] = a + b - 1 - t
    return tuple(pairs[k] for k in range(W))


def split_block(x, y, z):
    """Consume an x-bundle, produce adjacent bundles [y, z]."""
    _check_adm(x, y, z)
    m = (y + z - x) // 2
    ty, tz = y - m, z - m
    pairs = {}
    for t in range(ty):
        pairs[t] = x + t
        pairs[x + t] = t
    for t in range(m):
        pairs[x + y - 1 - t] = x + y + t
        pairs[x + y + t] = x + y - 1 - t
    for t in range(tz):
        pairs[ty + t] = x + y + m + t
        pairs[x + y + m + t] = ty + t
    return tuple(pairs[k] for k in range(x + y + z))


def merge_block(y, z, x):
    """Consume adjacent bundles [y, z], produce an x-bundle."""
    _check_adm(x, y, z)
    m = (y + z - x) // 2
    ty, tz = y - m, z - m
    W_in = y + z
    pairs = {}
    for t in range(ty):
        pairs[t] = W_in + t
        pairs[W_in + t] = t
    for t in range(m):
        pairs[y - 1 - t] = y + t
        pairs[y + t] = y - 1 - t
    for t in range(tz):
        pairs[y + m + t] = W_in + ty + t
        pairs[W_in + ty + t] = y + m + t
    return tuple(pairs[k] for k in range(y + z + x))


def theta_web(a, b, c):
    """Theta net value by literal web evaluation (the oracle)."""
    _check_adm(a, b, c)
    eng = WebEngine()
    states = {(): eng.ring.one}
    states = eng.block(states, 0, 0, a + b + c, create_block(a, b, c))
    if a:
        states = eng.proj(states, 0, a)
    if b:
        states = eng.proj(states, a, b)
    if c:
        states = eng.proj(states, a + b, c)
    states = eng.block(states, 0, a + b + c, 0, create_block(a, b, c))
    return eng.value(states)


def tet_web(A, B, E, D, C, F):
    """Tetrahedral net by literal web evaluation (the oracle)."""
    for tri in ((A, B, E), (A, C, F), (B, C, D), (E, F, D)):
        _check_adm(*tri)
    eng = WebEngine()
    states = {(): eng.ring.one}
    states = eng.block(states, 0, 0, B + A + E, create_block(B, A, E))
    for pos, col in ((0, B), (B, A), (B + A, E)):
        if col:
            states = eng.proj(states, pos, col)
    states = eng.block(states, B, A, C + F, split_block(A, C, F))
    for pos, col in ((B, C), (B + C, F)):
        if col:
            states = eng.proj(states, pos, col)
    states = eng.block(states, 0, B + C, D, merge_block(B, C, D))
    if D:
        states = eng.proj(states, 0, D)
    states = eng.block(states, 0, D + F + E, 0, create_block(D, F, E))
    return eng.value(states)


# -- closed formulas ----------------------------------------------------------


@lru_cache(maxsize=None)
def qfact(n):
    """Quantum factorial [n]! in Z[A,A^-1]."""
    out = LaurentPoly.one()
    for k in range(1, n + 1):
        out = out * quantum_int(k)
    return out


@lru_cache(maxsize=None)
def theta(a, b, c):
    """Theta net value, an element of Q(A)."""
    _check_adm(a, b, c)
    m = (a + b - c) // 2
    n = (b + c - a) // 2
    p = (a + c - b) // 2
    num = LaurentFrac(qfact(m + n + p + 1)) * LaurentFrac(qfact(m)) \
        * LaurentFrac(qfact(n)) * LaurentFrac(qfact(p))
    den = LaurentFrac(qfact(m + n)) * LaurentFrac(qfact(n + p)) \
        * LaurentFrac(qfact(m + p))
    val = num / den
    if (m + n + p) % 2:
        val = -val
    return val


@lru_cache(maxsize=None)
def tet(A, B, E, D, C, F):
    """Tetrahedral net value, an element of Q(A).

    Vertex triples: (A,B,E), (A,C,F), (B,C,D), (E,F,D).
    """
    tris = ((A, B, E), (A, C, F), (B, C, D), (E, F, D))
    for tri in tris:
        _check_adm(*tri)
    a_list = [sum(t) // 2 for t in tris]
    total = A + B + C + D + E + F
    b_list = [(total - A - D) // 2, (total - B - F) // 2, (total - C - E) // 2]
    interior = LaurentFrac.one()
    for bj in b_list:
        for ai in a_list:
            interior = interior * LaurentFrac(qfact(bj - ai))
    edges = LaurentFrac.one()
    for e in (A, B, C, D, E, F):
        edges = edges * LaurentFrac(qfact(e))
    acc = LaurentFrac.zero()
    for z in range(max(a_list), min(b_list) + 1):
        num = LaurentFrac(qfact(z + 1))
        den = LaurentFrac.one()
        for ai in a_list:
            den = den * LaurentFrac(qfact(z - ai))
        for bj in b_list:
            den = den * LaurentFrac(qfact(bj - z))
        term = num / den
        if z % 2:
            term = -term
        acc = acc + term
    return interior / edges * acc


def full_twist(r, i, j):
    """mu(r)/(mu(i) mu(j)): one full twist on an (i,j) pair in channel r."""
    num = mu_eig(r)
    den = mu_eig(i) * mu_eig(j)
    # monomials: divide exactly
    (e1, c1), = num.terms.items()
    (e2, c2), = den.terms.items()
    return LaurentPoly({e1 - e2: Fraction(c1) / c2})


def unknot_value(r):
    """<r> = (-1)^r [r+1], the r-colored unknot."""
    return bracket_e(r)
