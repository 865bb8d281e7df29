"""Finite twisted chain complexes and their homology.

A complex is built from cell counts and boundary incidence lists: for each
k-cell, a list of (face index, integer coefficient, GroupToken).  The block
of the boundary matrix at (face, cell) is coefficient * evalToken(token) in
the requested mode, so the same incidence data yields the complex over K at
a specialization lambda (star-at-lambda) or over L (star-Laurent).

The d.d = 0 check runs on every construction and is the sole witness that
the preferred-lift/translation data was consistent; it aborts with the
offending degree otherwise.
"""

from .errors import InputError
from .gauss import QI, Scalar
from .linalg import (Mat, columnSpacePivots, extendToComplement, hcat,
                     kernelBasis, matMul, matScale, rank, solve)
from .poly import LaurentRing, PolyRing
from .snf import nontrivialFactors, smithNormalForm


class TwistedComplex:
    """ring tag K (at a lambda) or L; boundaries[k]: C_k -> C_{k-1}."""

    def __init__(self, ringTag, ring, lam, dim, counts, boundaries):
        self.ringTag = ringTag
        self.ring = ring
        self.lam = lam
        self.dim = dim
        self.counts = list(counts)
        self.boundaries = boundaries

    @property
    def top(self):
        return len(self.counts) - 1

    def chainDim(self, k):
        if 0 <= k <= self.top:
            return self.dim * self.counts[k]
        return 0

    def boundary(self, k):
        """The matrix of d_k, with correct (possibly empty) shape."""
        if 1 <= k <= self.top:
            return self.boundaries[k]
        if k <= 0:
            return Mat.zero(self.ring, 0, self.chainDim(0) if k == 0 else 0)
        return Mat.zero(self.ring, self.chainDim(self.top), 0)


def buildComplex(counts, incidences, rep, mode, lam=None):
    """counts: cell counts per degree; incidences[k][j]: list of
    (faceIndex, coeff, token) for the j-th k-cell, k = 1..top."""
    n = rep.dim
    if mode == "star-laurent":
        ring, tag = LaurentRing(QI), "L"
    elif mode == "star-at-lambda":
        if lam is None:
            raise InputError("star-at-lambda mode needs a lambda")
        ring = QI if isinstance(lam, Scalar) else lam.field
        tag = "K"
    else:
        raise InputError("unsupported complex mode %r" % (mode,))

    boundaries = {}
    for k in range(1, len(counts)):
        rows, cols = n * counts[k - 1], n * counts[k]
        out = Mat.zero(ring, rows, cols)
        perCell = incidences.get(k, [])
        if len(perCell) != counts[k]:
            raise InputError("degree %d: %d incidence lists for %d cells"
                             % (k, len(perCell), counts[k]))
        for j, inc in enumerate(perCell):
            for (face, coeff, token) in inc:
                if not (0 <= face < counts[k - 1]):
                    raise InputError("degree %d cell %d: face %d out of range"
                                     % (k, j, face))
                if mode == "star-laurent":
                    block = rep.evalStarLaurent(token, ring)
                    block = matScale(ring.const(Scalar(coeff)), block)
                else:
                    block = matScale(ring.one * coeff,
                                     rep.evalStarAt(token, lam))
                for bi in range(n):
                    row = out.rows[face * n + bi]
                    for bj in range(n):
                        row[j * n + bj] = row[j * n + bj] + \
                            block.rows[bi][bj]
        boundaries[k] = out

    cx = TwistedComplex(tag, ring, lam, n, counts, boundaries)
    for k in range(2, len(counts)):
        prod = matMul(ring, cx.boundary(k - 1), cx.boundary(k))
        if not prod.isZero():
            raise InputError("boundary squared is nonzero in degree %d" % k)
    return cx


class HomologyK:
    """Per-degree dimensions with deterministic cycle representatives and a
    coordinate solver for arbitrary cycles."""

    def __init__(self, field, dims, reps, imageCols):
        self.field = field
        self.dims = dims
        self._reps = reps
        self._imageCols = imageCols

    def basisColumns(self, k):
        """Mat whose columns are the chosen representative cycles of H_k."""
        return self._reps[k]

    def coords(self, k, vec):
        """Coordinates of a cycle's class in the degree-k basis."""
        reps = self._reps[k]
        img = self._imageCols[k]
        width = img.n + reps.n
        if width == 0:
            if any(vec):
                raise InputError("nonzero cycle in a trivial homology degree")
            return []
        sol = solve(self.field, hcat([img, reps]), vec)
        if sol is None:
            raise InputError("vector is not a cycle in degree %d" % (k,))
        return sol[img.n:]


def homologyOverK(cx):
    if cx.ringTag != "K":
        raise InputError("homologyOverK needs a K-specialized complex")
    field = cx.ring
    dims, reps, imageCols = [], [], []
    for k in range(cx.top + 1):
        ck = cx.chainDim(k)
        cycles = kernelBasis(field, cx.boundary(k))
        nxt = cx.boundary(k + 1)
        pivots = columnSpacePivots(nxt)
        img = Mat(ck, len(pivots),
                  [[nxt.rows[i][j] for j in pivots] for i in range(ck)])
        chosen = extendToComplement(field,
                                    [img.column(j) for j in range(img.n)],
                                    cycles, ck)
        repMat = Mat(ck, len(chosen),
                     [[cycles[j][i] for j in chosen] for i in range(ck)])
        dims.append(len(chosen))
        reps.append(repMat)
        imageCols.append(img)
        assert len(chosen) == len(cycles) - rank(nxt)
    return HomologyK(field, dims, reps, imageCols)


class HomologyL:
    """Per-degree free rank and elementary divisor chain (monic, t-free)."""

    def __init__(self, degrees):
        self.degrees = degrees  # list of (freeRank, [Poly])

    def freeRank(self, k):
        if 0 <= k < len(self.degrees):
            return self.degrees[k][0]
        return 0

    def divisors(self, k):
        if 0 <= k < len(self.degrees):
            return self.degrees[k][1]
        return []


def clearLaurentMatrix(ring, a):
    """Multiply a Laurent matrix globally by t^N so all entries land in
    K[t]; a single unit scaling, so kernels are unchanged and cokernel
    divisors change only by stripped powers of t."""
    low = 0
    for row in a.rows:
        for e in row:
            if not e.isZero():
                low = min(low, e.low)
    shift = -low
    rows = [[e.poly.shift(e.low + shift) for e in row] for row in a.rows]
    return Mat(a.m, a.n, rows)


def homologyOverL(cx):
    if cx.ringTag != "L":
        raise InputError("homologyOverL needs an L-coefficient complex")
    pring = PolyRing(QI)
    degrees = []
    for k in range(cx.top + 1):
        ck = cx.chainDim(k)
        dk = clearLaurentMatrix(pring, cx.boundary(k))
        dk1 = clearLaurentMatrix(pring, cx.boundary(k + 1))
        s = smithNormalForm(pring, dk)
        z = ck - s.rank
        coords = matMul(pring, s.Vinv, dk1)
        for i in range(s.rank):
            assert all(e.isZero() for e in coords.rows[i]), \
                "image not contained in kernel; boundary data inconsistent"
        y = Mat(z, dk1.n, [row[:] for row in coords.rows[s.rank:]])
        sy = smithNormalForm(pring, y)
        free = z - sy.rank
        divisors = nontrivialFactors(sy.invariantFactors)
        degrees.append((free, divisors))
    return HomologyL(degrees)
