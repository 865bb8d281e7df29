"""Massey-type length invariants from literal r-chain towers.

Over the twisted cochain complex C*(rho_lam) of a Delta complex with
distinguished closed integer 1-cochain theta (required to cup-square to
zero at cochain level), an r-chain in degree k is a tuple (w_1, ..., w_r)
of k-cochains with

    d w_1 = 0,    d w_i = theta ~ w_{i-1}   (2 <= i <= r).

  MZ_r^k = classes of w_1 over all r-chains
  MB_r^k = classes of theta ~ z_{r-1} over (r-1)-chains z in degree k-1
  MH_r^k = MZ_r^k / MB_r^k
  Delta_r [w_1] = [theta ~ w_r] : MH_r^k -> MH_r^{k+1}
  M_k = largest r <= dim H^k + 1 with Delta_r^k != 0 (0 if none, or H^k=0).

Everything is plain linear algebra: towers are kernels of a block system,
the M*-spaces are coordinate spans inside the chosen H^k basis, and Delta_r
is assembled column by column from witness towers.
"""

from .delta import lamField
from .errors import InputError
from .linalg import (Mat, blockMat, columnSpacePivots, extendToComplement,
                     kernelBasis, matMul, matScale, matVec, rank, solve)


def _colsMat(cols, m):
    return Mat(m, len(cols), [[c[i] for c in cols] for i in range(m)])


class MasseyAnalysis:
    """Tower data for one (delta complex, representation, lambda)."""

    def __init__(self, dc, rep, lam):
        if not lam:
            raise InputError("massey products need lambda != 0")
        dc.validate(rep)
        bad = dc.thetaSquareOffenders()
        if bad:
            raise InputError("theta does not cup-square to zero at cochain "
                             "level (2-simplex %d)" % bad[0])
        self.field = lamField(lam)
        self.top = dc.top
        self.dims = [dc.counts[p] * rep.dim for p in range(self.top + 1)]
        zeroOut = Mat(0, self.dims[self.top], [])
        self.ds = dc.cochainMatrices(rep, lam) + [zeroOut]
        self.cups = dc.cupThetaMatrices(rep, lam) + [zeroOut]
        for k in range(self.top):
            assert matMul(self.field, self.cups[k + 1], self.cups[k]).isZero()
        self.bounds, self.hReps, self._coordsMats = [], [], []
        for k in range(self.top + 1):
            img = []
            if k >= 1:
                d = self.ds[k - 1]
                img = [d.column(j) for j in columnSpacePivots(d)]
            cocycles = kernelBasis(self.field, self.ds[k])
            chosen = extendToComplement(self.field, img, cocycles,
                                        self.dims[k])
            reps = [cocycles[i] for i in chosen]
            self.bounds.append(img)
            self.hReps.append(reps)
            self._coordsMats.append(_colsMat(img + reps, self.dims[k]))
        self._towers, self._spaces, self._mh, self._deltas = {}, {}, {}, {}

    def hDim(self, k):
        if 0 <= k <= self.top:
            return len(self.hReps[k])
        return 0

    def classCoords(self, k, vec):
        """Coordinates of the class [vec] in the chosen H^k basis."""
        assert not any(matVec(self.field, self.ds[k], vec))
        x = solve(self.field, self._coordsMats[k], vec)
        assert x is not None
        return x[len(self.bounds[k]):]

    def towerBasis(self, k, r):
        """Kernel basis of the stacked r-chain system in degree k; each
        element is the concatenation (w_1, ..., w_r)."""
        key = (k, r)
        if key not in self._towers:
            if k < 0 or k > self.top or self.dims[k] == 0:
                self._towers[key] = []
            else:
                d, cup = self.ds[k], matScale(-self.field.one, self.cups[k])
                grid = [[None] * r for _ in range(r)]
                for i in range(r):
                    grid[i][i] = d
                    if i:
                        grid[i][i - 1] = cup
                system = blockMat(self.field, grid, [d.m] * r,
                                  [self.dims[k]] * r)
                self._towers[key] = kernelBasis(self.field, system)
        return self._towers[key]

    def _space(self, k, r):
        """(zCols, bCols, towers): H^k coordinates of MZ_r^k and MB_r^k,
        with the towers behind the MZ columns."""
        key = (k, r)
        if key not in self._spaces:
            dk = self.dims[k] if 0 <= k <= self.top else 0
            towers = self.towerBasis(k, r)
            zCols = [self.classCoords(k, t[:dk]) for t in towers]
            bCols = []
            if r >= 2 and k >= 1:
                dprev = self.dims[k - 1]
                for t in self.towerBasis(k - 1, r - 1):
                    val = matVec(self.field, self.cups[k - 1], t[-dprev:])
                    bCols.append(self.classCoords(k, val))
            self._spaces[key] = (zCols, bCols, towers)
        return self._spaces[key]

    def mzDim(self, k, r):
        zCols, _, _ = self._space(k, r)
        return rank(_colsMat(zCols, self.hDim(k)))

    def mbDim(self, k, r):
        _, bCols, _ = self._space(k, r)
        return rank(_colsMat(bCols, self.hDim(k)))

    def mbInsideMz(self, k, r):
        zCols, bCols, _ = self._space(k, r)
        h = self.hDim(k)
        return rank(_colsMat(zCols + bCols, h)) == \
            rank(_colsMat(zCols, h))

    def mhDim(self, k, r):
        zCols, bCols, _ = self._space(k, r)
        h = self.hDim(k)
        return rank(_colsMat(bCols + zCols, h)) - \
            rank(_colsMat(bCols, h))

    def _mhData(self, k, r):
        """(witness towers, solver matrix, #MB columns) for the chosen
        complement basis of MH_r^k inside span(MB + MZ)."""
        key = (k, r)
        if key not in self._mh:
            zCols, bCols, towers = self._space(k, r)
            h = self.hDim(k)
            chosen = extendToComplement(self.field, bCols, zCols, h)
            mhTowers = [towers[i] for i in chosen]
            solver = _colsMat(bCols + [zCols[i] for i in chosen], h)
            self._mh[key] = (mhTowers, solver, len(bCols))
        return self._mh[key]

    def deltaMatrix(self, k, r):
        """Delta_r : MH_r^k -> MH_r^{k+1} on the chosen bases."""
        key = (k, r)
        if key not in self._deltas:
            srcTowers, _, _ = self._mhData(k, r)
            tgt = self.mhDim(k + 1, r) if k + 1 <= self.top else 0
            if tgt == 0:
                self._deltas[key] = Mat(0, len(srcTowers), [])
            else:
                _, solver, nb = self._mhData(k + 1, r)
                dk = self.dims[k]
                cols = []
                for t in srcTowers:
                    val = matVec(self.field, self.cups[k], t[-dk:])
                    x = solve(self.field, solver, self.classCoords(k + 1,
                                                                   val))
                    assert x is not None
                    cols.append(x[nb:])
                self._deltas[key] = _colsMat(cols, tgt)
        return self._deltas[key]

    def masseyLength(self, k):
        """(M_k, witness tower or None).  The witness attains the maximal
        nonzero Delta_r on the chosen MH basis."""
        h = self.hDim(k)
        if h == 0:
            return 0, None
        best, witness = 0, None
        for r in range(1, h + 2):
            mat = self.deltaMatrix(k, r)
            if not mat.isZero():
                best = r
                j = next(j for j in range(mat.n)
                         if any(mat.rows[i][j] for i in range(mat.m)))
                tower = self._mhData(k, r)[0][j]
                dk = self.dims[k]
                witness = [tower[i * dk:(i + 1) * dk] for i in range(r)]
        return best, witness

    def degreeReport(self, k):
        h = self.hDim(k)
        cutoff = h + 1 if h else 0
        table = {r: (self.mzDim(k, r), self.mbDim(k, r), self.mhDim(k, r))
                 for r in range(1, cutoff + 1)}
        mk, witness = self.masseyLength(k)
        return {"degree": k, "hDim": h, "cutoff": cutoff, "length": mk,
                "spaces": table, "witness": witness}

    def consistencyFlags(self, r):
        """Machine checks on Delta_r across all degrees: the square is
        zero, its homology has the dimensions of MH_{r+1}, and its ranks
        match the kernel-image formula."""
        squares = all(matMul(self.field, self.deltaMatrix(k + 1, r),
                             self.deltaMatrix(k, r)).isZero()
                      for k in range(self.top))
        homology, ranks = True, True
        for k in range(self.top + 1):
            rk = self.deltaMatrix(k, r)
            kerDim = rk.n - rank(rk)
            imPrev = rank(self.deltaMatrix(k - 1, r)) if k else 0
            if kerDim - imPrev != self.mhDim(k, r + 1):
                homology = False
            zNext, _, _ = self._space(k, r + 1)
            _, bCols, _ = self._space(k, r)
            h = self.hDim(k)
            if rank(rk) != self.mzDim(k, r) - rank(_colsMat(zNext + bCols,
                                                            h)):
                ranks = False
        return {"deltaSquaresToZero": squares,
                "homologyMatchesNextLevel": homology,
                "rankMatchesTowerDrop": ranks}


def masseyLength(dc, rep, lam, k):
    """(M_k, per-degree report) at lambda."""
    analysis = MasseyAnalysis(dc, rep, lam)
    report = analysis.degreeReport(k)
    return report["length"], report


def deltaROperator(dc, rep, lam, r):
    """({degree: matrix of Delta_r}, consistency flags) at lambda."""
    analysis = MasseyAnalysis(dc, rep, lam)
    mats = {k: analysis.deltaMatrix(k, r) for k in range(analysis.top + 1)}
    return mats, analysis.consistencyFlags(r)


def masseyReport(dc, rep, lam, degrees=None):
    """Per-degree reports plus consistency flags for every level up to the
    largest cutoff; degrees restricts which k are reported."""
    analysis = MasseyAnalysis(dc, rep, lam)
    ks = range(analysis.top + 1) if degrees is None else \
        [k for k in degrees if 0 <= k <= analysis.top]
    reports = [analysis.degreeReport(k) for k in ks]
    rMax = max([d["cutoff"] for d in reports] or [0])
    flags = {r: analysis.consistencyFlags(r) for r in range(1, rMax + 1)}
    return {"degrees": reports, "flags": flags,
            "lengths": [d["length"] for d in reports]}
