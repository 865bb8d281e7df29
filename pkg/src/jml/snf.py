"""Smith normal form over K[t] for a field K, with invertible transforms.

`smithNormalForm(ring, A)` returns S with S.D = S.U * A * S.V diagonal,
monic invariant factors in divisibility order, and the inverses S.Uinv,
S.Vinv maintained alongside (every elementary operation applies its inverse
to the tracked inverse matrix, so no back-substitution is ever needed).

The kernel and cokernel extraction used by the homology pipeline:
  * right kernel of A = columns r.. of V (r = rank),
  * a presentation of coker(A) reads off the invariant factors directly.

`rootClasses` refines the invariant factors into pairwise-coprime squarefree
class polynomials with their multiplicity profile along the chain; a linear
class t - lam recovers classical eigenvalue data, an irreducible quadratic
class queries a Galois orbit without leaving Q(i).
"""

from fractions import Fraction
from math import gcd, lcm

from .linalg import Mat, matMul
from .poly import (Poly, gcdFreeBasis, polyGcd, polyXgcd, squarefreePart,
                   stripUnits)
from .poly import multiplicityAt as _polyMultiplicityAt


def _content(polys):
    """Positive rational content of a family of Q(i)-polynomials; None when
    empty/zero or when coefficients are not Q(i) scalars."""
    nums, dens = [], []
    for p in polys:
        for s in p.coeffs:
            if not hasattr(s, "re"):
                return None
            for q in (s.re, s.im):
                if q:
                    nums.append(abs(q.numerator))
                    dens.append(q.denominator)
    if not nums:
        return None
    g = 0
    for x in nums:
        g = gcd(g, x)
    m = 1
    for x in dens:
        m = lcm(m, x)
    return Fraction(g, m)


class SmithForm:
    __slots__ = ("ring", "U", "D", "V", "Uinv", "Vinv", "rank",
                 "invariantFactors")

    def __init__(self, ring, U, D, V, Uinv, Vinv, rank, invariantFactors):
        self.ring = ring
        self.U = U
        self.D = D
        self.V = V
        self.Uinv = Uinv
        self.Vinv = Vinv
        self.rank = rank
        self.invariantFactors = invariantFactors


def polyMatFromScalar(ring, a):
    return Mat(a.m, a.n, [[ring.const(x) for x in row] for row in a.rows])


def charMatrix(ring, a):
    """t*I - a for a square scalar matrix a."""
    assert a.m == a.n
    t = Poly.t(ring.field)
    rows = []
    for i in range(a.m):
        row = []
        for j in range(a.n):
            p = -ring.const(a.rows[i][j])
            if i == j:
                p = p + t
            row.append(p)
        rows.append(row)
    return Mat(a.m, a.n, rows)


class _Worker:
    def __init__(self, ring, a):
        self.ring = ring
        self.d = a.copy()
        self.u = Mat.identity(ring, a.m)
        self.uinv = Mat.identity(ring, a.m)
        self.v = Mat.identity(ring, a.n)
        self.vinv = Mat.identity(ring, a.n)

    # each op applies E to D and U (rows) or V (cols), and E^-1 to the
    # tracked inverse on the other side

    def rowSwap(self, i, j):
        if i == j:
            return
        for m in (self.d, self.u):
            m.rows[i], m.rows[j] = m.rows[j], m.rows[i]
        for r in self.uinv.rows:
            r[i], r[j] = r[j], r[i]

    def colSwap(self, i, j):
        if i == j:
            return
        for r in self.d.rows:
            r[i], r[j] = r[j], r[i]
        for r in self.v.rows:
            r[i], r[j] = r[j], r[i]
        m = self.vinv
        m.rows[i], m.rows[j] = m.rows[j], m.rows[i]

    def rowAdd(self, i, j, c):
        """row_i += c * row_j."""
        if c.isZero():
            return
        for m in (self.d, self.u):
            m.rows[i] = [x + c * y for x, y in zip(m.rows[i], m.rows[j])]
        for r in self.uinv.rows:
            r[j] = r[j] - c * r[i]

    def colAdd(self, j, k, c):
        """col_j += c * col_k."""
        if c.isZero():
            return
        for r in self.d.rows:
            r[j] = r[j] + c * r[k]
        for r in self.v.rows:
            r[j] = r[j] + c * r[k]
        m = self.vinv
        m.rows[k] = [x - c * y for x, y in zip(m.rows[k], m.rows[j])]

    def rowScale(self, i, c):
        """row_i *= c for a unit (nonzero constant) c."""
        inv = Poly.const(self.ring.field, c.coeffs[0].inverse())
        c = Poly.const(self.ring.field, c.coeffs[0])
        for m in (self.d, self.u):
            m.rows[i] = [c * x for x in m.rows[i]]
        for r in self.uinv.rows:
            r[i] = inv * r[i]

    def colScale(self, j, c):
        inv = Poly.const(self.ring.field, c.coeffs[0].inverse())
        c = Poly.const(self.ring.field, c.coeffs[0])
        for m in (self.d, self.v):
            for r in m.rows:
                r[j] = c * r[j]
        m = self.vinv
        m.rows[j] = [inv * x for x in m.rows[j]]

    # rational-content normalization: scaling a row or column of D by a
    # nonzero rational is an elementary unit operation, and doing it after
    # every reduction step is what keeps coefficient bit-length polynomial
    # (the unnormalized remainder chains blow up exponentially)

    def normalizeRow(self, i):
        c = _content(self.d.rows[i])
        if c is not None and c != 1:
            unit = (self.ring.field.one * c).inverse()
            self.rowScale(i, Poly.const(self.ring.field, unit))

    def normalizeCol(self, j):
        c = _content([r[j] for r in self.d.rows])
        if c is not None and c != 1:
            unit = (self.ring.field.one * c).inverse()
            self.colScale(j, Poly.const(self.ring.field, unit))

    # 2x2 unimodular transforms from extended gcd: turn (d, e) into (g, 0)
    # in one step instead of a remainder ping-pong, which keeps entry
    # degrees additive instead of multiplicative

    def rowTransform2(self, p, i, m00, m01, m10, m11):
        """rows (p, i) <- (m00*row_p + m01*row_i, m10*row_p + m11*row_i);
        the matrix [[m00,m01],[m10,m11]] must have determinant 1."""
        for m in (self.d, self.u):
            rp, ri = m.rows[p], m.rows[i]
            m.rows[p] = [m00 * x + m01 * y for x, y in zip(rp, ri)]
            m.rows[i] = [m10 * x + m11 * y for x, y in zip(rp, ri)]
        for r in self.uinv.rows:
            x, y = r[p], r[i]
            r[p] = m11 * x - m10 * y
            r[i] = -m01 * x + m00 * y

    def colTransform2(self, p, j, m00, m10, m01, m11):
        """cols (p, j) <- (m00*col_p + m10*col_j, m01*col_p + m11*col_j);
        determinant m00*m11 - m10*m01 must be 1."""
        for m in (self.d, self.v):
            for r in m.rows:
                x, y = r[p], r[j]
                r[p] = m00 * x + m10 * y
                r[j] = m01 * x + m11 * y
        vi = self.vinv
        rp, rj = vi.rows[p], vi.rows[j]
        vi.rows[p] = [m11 * x - m01 * y for x, y in zip(rp, rj)]
        vi.rows[j] = [-m10 * x + m00 * y for x, y in zip(rp, rj)]


def _minDegreeEntry(d, p):
    best = None
    for i in range(p, d.m):
        for j in range(p, d.n):
            e = d.rows[i][j]
            if e.isZero():
                continue
            deg = e.degree()
            if best is None or deg < best[0]:
                best = (deg, i, j)
    return best


def smithNormalForm(ring, a, check=True):
    """Smith form over K[t].  Entries of `a` are Poly over ring.field."""
    w = _Worker(ring, a)
    p = 0
    limit = min(a.m, a.n)
    while p < limit:
        found = _minDegreeEntry(w.d, p)
        if found is None:
            break
        _, bi, bj = found
        w.rowSwap(p, bi)
        w.colSwap(p, bj)
        # clear row and column at p; each full pass either finishes or
        # strictly drops the pivot degree (it becomes a proper gcd)
        while True:
            for i in range(p + 1, a.m):
                e = w.d.rows[i][p]
                if e.isZero():
                    continue
                d = w.d.rows[p][p]
                q, r = e.divmod(d)
                if r.isZero():
                    w.rowAdd(i, p, -q)
                else:
                    g, s, t = polyXgcd(d, e)
                    w.rowTransform2(p, i, s, t,
                                    -e.exactDiv(g), d.exactDiv(g))
                    w.normalizeRow(p)
                w.normalizeRow(i)
            colClean = True
            for j in range(p + 1, a.n):
                e = w.d.rows[p][j]
                if e.isZero():
                    continue
                d = w.d.rows[p][p]
                q, r = e.divmod(d)
                if r.isZero():
                    w.colAdd(j, p, -q)
                else:
                    g, s, t = polyXgcd(d, e)
                    w.colTransform2(p, j, s, t,
                                    -e.exactDiv(g), d.exactDiv(g))
                    w.normalizeCol(p)
                    colClean = False
                w.normalizeCol(j)
            if colClean and all(w.d.rows[i][p].isZero()
                                for i in range(p + 1, a.m)):
                break
        # enforce divisibility of the remaining block by the pivot
        pivot = w.d.rows[p][p]
        offender = None
        for i in range(p + 1, a.m):
            for j in range(p + 1, a.n):
                if not (w.d.rows[i][j] % pivot).isZero():
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            w.rowAdd(p, offender, Poly.one(ring.field))
            w.normalizeRow(p)
            continue  # redo pivot p
        w.rowScale(p, Poly.const(ring.field, pivot.lead().inverse()))
        p += 1
    rank = p
    factors = [w.d.rows[k][k] for k in range(rank)]
    out = SmithForm(ring, w.u, w.d, w.v, w.uinv, w.vinv, rank, factors)
    if check:
        _validate(ring, a, out)
    return out


def _validate(ring, a, s):
    assert matMul(ring, s.U, s.Uinv) == Mat.identity(ring, a.m)
    assert matMul(ring, s.V, s.Vinv) == Mat.identity(ring, a.n)
    d = matMul(ring, matMul(ring, s.U, a), s.V)
    assert d == s.D, "U*A*V != D"
    for i in range(d.m):
        for j in range(d.n):
            if i != j:
                assert d.rows[i][j].isZero()
    for k in range(len(s.invariantFactors) - 1):
        assert (s.invariantFactors[k + 1] % s.invariantFactors[k]).isZero(), \
            "invariant factors out of divisibility order"
    for f in s.invariantFactors:
        assert not f.isZero() and f.lead() == ring.field.one


def kernelColumns(ring, s, n):
    """Right-kernel basis of the original matrix: columns rank.. of V."""
    return [s.V.column(j) for j in range(s.rank, n)]


def nontrivialFactors(factors):
    """Invariant factors with unit content (t-powers, constants) stripped,
    keeping only nonconstant ones."""
    out = []
    for f in factors:
        g = stripUnits(f)
        if g.degree() > 0:
            out.append(g)
    return out


def rootClasses(factors):
    """Pairwise-coprime squarefree classes appearing in the factors, with the
    multiplicity of each class along the chain.

    Returns a list of (classPoly, [m_1, ..., m_s]) where m_k is the
    multiplicity in the k-th (nonunit) factor; the profile is non-decreasing.

    Only constants count as units here, so a factor t contributes the class
    t (eigenvalue 0).  When the factors are divisors over the Laurent ring,
    where t itself is a unit, normalize with nontrivialFactors first.
    """
    polys = [f.monic() for f in factors if f.degree() > 0]
    if not polys:
        return []
    sqfree = [squarefreePart(f) for f in polys]
    classes = gcdFreeBasis(sqfree)
    out = []
    for q in classes:
        profile = [_polyMultiplicityAt(f, q) for f in polys]
        assert all(profile[k] <= profile[k + 1]
                   for k in range(len(profile) - 1))
        out.append((q, profile))
    return out


def snfOverPoly(ring, a, check=True):
    """Spec-facing name for smithNormalForm."""
    return smithNormalForm(ring, a, check=check)


def multiplicityAt(factors, lam):
    """Multiset (sorted list) of multiplicities of (t - lam) in the
    invariant-factor chain, zeros dropped; empty when lam is not a root."""
    out = []
    for f in factors:
        if f.degree() < 1:
            continue
        m = _polyMultiplicityAt(f.monic(), Poly.linear(f.field, lam))
        if m:
            out.append(m)
    return sorted(out)


def maxClassMultiplicity(factors, q):
    """Largest Jordan-type multiplicity of the class q in the factor chain."""
    qm = q.monic()
    if qm.degree() < 1:
        raise ValueError("class polynomial must be nonconstant")
    g = polyGcd(qm, qm.derivative())
    if g.degree() > 0:
        raise ValueError("class polynomial must be squarefree")
    polys = [f.monic() for f in factors if f.degree() > 0]
    if not polys:
        return 0
    return max(_polyMultiplicityAt(f, qm) for f in polys)
