"""Monodromy chain map of a fiber self-map and its Jordan data.

The self-map data mirrors boundary incidences: for each k-cell, a list of
(target cell, integer coefficient, translation token w) describing where the
preferred lift of the cell is carried.  The chain-map blocks evaluate the
token u^-1 * w, where u is the chosen loop crossing the torus direction
once: replacing the lift by h.phi and u by h*u changes w to h*w, so
u^-1 * w is unchanged letter by letter and the matrices are reproducible
regardless of the lift choice.

The boundary-compatibility check d A = A d in every degree is a hard
failure: it is the one witness that the incidence data describes a cellular
map at all.
"""

import warnings

from .errors import InputError
from .gauss import Scalar
from .linalg import Mat, inverse, matMul, matScale, rank
from .poly import Poly, PolyRing
from .snf import (charMatrix, maxClassMultiplicity, multiplicityAt,
                  rootClasses, smithNormalForm)
from .tokens import GroupToken


def _coerceScale(ring, tag, coeff):
    if tag == "L":
        return ring.const(Scalar(coeff))
    return ring.one * coeff


def _evalInMode(cx, rep, token):
    if cx.ringTag == "L":
        return rep.evalStarLaurent(token, cx.ring)
    return rep.evalStarAt(token, cx.lam)


def buildChainMapA(cx, rep, phiIncidences, u):
    """Square matrices A_k over cx's ring with blocks coeff * E(u^-1 w)."""
    n = rep.dim
    uinv = u.inverse()
    maps = {}
    for k in range(cx.top + 1):
        ck = cx.counts[k]
        perCell = phiIncidences.get(k, [])
        if len(perCell) != ck:
            raise InputError("self-map degree %d: %d lists for %d cells"
                             % (k, len(perCell), ck))
        out = Mat.zero(cx.ring, n * ck, n * ck)
        for j, inc in enumerate(perCell):
            for (target, coeff, w) in inc:
                if not (0 <= target < ck):
                    raise InputError(
                        "self-map degree %d cell %d: target %d out of range"
                        % (k, j, target))
                block = matScale(_coerceScale(cx.ring, cx.ringTag, coeff),
                                 _evalInMode(cx, rep, uinv * w))
                for bi in range(n):
                    row = out.rows[target * n + bi]
                    for bj in range(n):
                        row[j * n + bj] = row[j * n + bj] + \
                            block.rows[bi][bj]
        maps[k] = out
    for k in range(1, cx.top + 1):
        lhs = matMul(cx.ring, cx.boundary(k), maps[k])
        rhs = matMul(cx.ring, maps[k - 1], cx.boundary(k))
        if lhs.rows != rhs.rows:
            raise InputError(
                "self-map is not a chain map in degree %d" % (k,))
    return maps


def inducedOnHomology(cx, h, maps):
    """Matrix of each A_k on the chosen homology basis.  Non-invertible
    results are legal (the map need not be a homotopy equivalence) and only
    draw a warning."""
    if cx.ringTag != "K":
        raise InputError("induced map needs a K-specialized complex")
    out = {}
    for k in range(cx.top + 1):
        reps = h.basisColumns(k)
        cols = []
        for j in range(reps.n):
            image = [sum((maps[k].rows[i][r] * reps.rows[r][j]
                          for r in range(reps.m)), cx.ring.zero)
                     for i in range(reps.m)]
            cols.append(h.coords(k, image))
        mat = Mat(reps.n, reps.n,
                  [[cols[j][i] for j in range(reps.n)]
                   for i in range(reps.n)])
        if reps.n and rank(mat) < reps.n:
            warnings.warn("induced map on homology is singular in "
                          "degree %d" % (k,))
        out[k] = mat
    return out


class DegreeSpectrum:
    """Invariant factors of t*I - phiStar_k with root-class refinement."""

    def __init__(self, field, dimH, factors):
        self.field = field
        self.dimH = dimH
        self.factors = factors
        self.classes = rootClasses(factors)
        assert sum(f.degree() for f in factors) == dimH

    def blockMultiset(self, lam):
        """Jordan block sizes at eigenvalue lam, ascending; [] if absent."""
        if isinstance(lam, Scalar):
            return multiplicityAt(self.factors, lam)
        field = lam.field
        lifted = tuple(
            Poly(field, [field.embed(c) for c in f.coeffs])
            for f in self.factors)
        return multiplicityAt(lifted, lam)

    def maxBlock(self, lam):
        sizes = self.blockMultiset(lam)
        return sizes[-1] if sizes else 0

    def classMaxBlock(self, q):
        """Largest block over the root class of a squarefree q."""
        return maxClassMultiplicity(self.factors, q)


class JordanSpectrum:
    def __init__(self, degrees):
        self.degrees = degrees

    def degree(self, k):
        return self.degrees[k]

    def maxBlock(self, k, lam):
        if not (0 <= k < len(self.degrees)):
            return 0
        return self.degrees[k].maxBlock(lam)

    def classMaxBlock(self, k, q):
        if not (0 <= k < len(self.degrees)):
            return 0
        return self.degrees[k].classMaxBlock(q)


def jordanSpectrum(phiStar, field):
    """Jordan data of the square matrices phiStar[k] over their field,
    computed through invariant factors of the characteristic matrix; no
    eigenvector chains are ever built."""
    ring = PolyRing(field)
    degrees = []
    for k in sorted(phiStar):
        m = phiStar[k]
        if m.m != m.n:
            raise InputError("monodromy matrix in degree %d is not square"
                             % (k,))
        if m.m == 0:
            degrees.append(DegreeSpectrum(field, 0, ()))
            continue
        s = smithNormalForm(ring, charMatrix(ring, m))
        factors = tuple(f for f in s.invariantFactors if f.degree() > 0)
        degrees.append(DegreeSpectrum(field, m.m, factors))
    return JordanSpectrum(degrees)


class PhiSplit:
    def __init__(self, aCirc, phiStar, phiStarCirc, bMaps):
        self.aCirc = aCirc
        self.phiStar = phiStar
        self.phiStarCirc = phiStarCirc
        self.bMaps = bMaps

    def bScalar(self, k):
        """The scalar mu with B_k = mu * I, or None if B_k is not scalar."""
        b = self.bMaps[k]
        if b.n == 0:
            return None
        mu = b.rows[0][0]
        zero = mu - mu
        for i in range(b.n):
            for j in range(b.n):
                if b.rows[i][j] != (mu if i == j else zero):
                    return None
        return mu


def phiCircSplit(cx, rep, phiIncidences, u, h):
    """Split A into the basepoint-preserving part (blocks coeff * E(w))
    and the deck translation by u; verify on homology that
    phiStar = B^-1 . phiStarCirc, where B is the induced action of u.

    Requires the u-translation to commute with every boundary matrix; the
    split is refused otherwise, since A-circle would not be a chain map."""
    if cx.ringTag != "K":
        raise InputError("the split is computed on a K-specialized complex")
    n = rep.dim
    uBlock = rep.evalStarAt(u, cx.lam)
    diag = {}
    for k in range(cx.top + 1):
        ck = cx.counts[k]
        d = Mat.zero(cx.ring, n * ck, n * ck)
        for c in range(ck):
            for bi in range(n):
                for bj in range(n):
                    d.rows[c * n + bi][c * n + bj] = uBlock.rows[bi][bj]
        diag[k] = d
    for k in range(1, cx.top + 1):
        lhs = matMul(cx.ring, cx.boundary(k), diag[k])
        rhs = matMul(cx.ring, diag[k - 1], cx.boundary(k))
        if lhs.rows != rhs.rows:
            raise InputError("translation by u does not commute with the "
                             "boundary in degree %d; no split" % (k,))

    aMaps = buildChainMapA(cx, rep, phiIncidences, u)
    aCirc = buildChainMapA(cx, rep, phiIncidences, GroupToken.identity())
    phiStar = inducedOnHomology(cx, h, aMaps)
    phiStarCirc = inducedOnHomology(cx, h, aCirc)
    bMaps = inducedOnHomology(cx, h, diag)
    for k in range(cx.top + 1):
        binv = inverse(cx.ring, bMaps[k])
        recomposed = matMul(cx.ring, binv, phiStarCirc[k])
        if recomposed.rows != phiStar[k].rows:
            raise InputError("split decomposition failed to recompose the "
                             "monodromy in degree %d" % (k,))
    return PhiSplit(aCirc, phiStar, phiStarCirc, bMaps)
