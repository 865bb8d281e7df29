"""Exact dense linear algebra over any field object from `gauss`.

Matrices carry their shape explicitly (`Mat.m`, `Mat.n`) so that the empty
shapes that show up constantly in chain complexes (no cells in a degree,
trivial homology) behave correctly instead of collapsing to ambiguous [].
All algorithms are fraction-exact Gaussian elimination; nothing here is
numeric.
"""


class Mat:
    """A dense m-by-n matrix over a field, stored as a list of row lists."""

    __slots__ = ("m", "n", "rows")

    def __init__(self, m, n, rows):
        self.m = m
        self.n = n
        self.rows = rows
        assert len(rows) == m and all(len(r) == n for r in rows)

    @staticmethod
    def fromRows(rows, n=None):
        m = len(rows)
        if n is None:
            if m == 0:
                raise ValueError("need explicit ncols for a 0-row matrix")
            n = len(rows[0])
        return Mat(m, n, [list(r) for r in rows])

    @staticmethod
    def zero(field, m, n):
        z = field.zero
        return Mat(m, n, [[z] * n for _ in range(m)])

    @staticmethod
    def identity(field, n):
        z, o = field.zero, field.one
        return Mat(n, n, [[o if i == j else z for j in range(n)]
                          for i in range(n)])

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        return (isinstance(other, Mat) and other.m == self.m
                and other.n == self.n and other.rows == self.rows)

    def __repr__(self):
        return "Mat(%d,%d,%r)" % (self.m, self.n, self.rows)

    def copy(self):
        return Mat(self.m, self.n, [list(r) for r in self.rows])

    def column(self, j):
        return [self.rows[i][j] for i in range(self.m)]

    def isZero(self):
        return not any(any(x for x in row) for row in self.rows)


def transpose(a):
    return Mat(a.n, a.m, [[a.rows[i][j] for i in range(a.m)]
                          for j in range(a.n)])


def matAdd(a, b):
    assert a.m == b.m and a.n == b.n
    return Mat(a.m, a.n, [[x + y for x, y in zip(ra, rb)]
                          for ra, rb in zip(a.rows, b.rows)])


def matSub(a, b):
    assert a.m == b.m and a.n == b.n
    return Mat(a.m, a.n, [[x - y for x, y in zip(ra, rb)]
                          for ra, rb in zip(a.rows, b.rows)])


def matScale(c, a):
    return Mat(a.m, a.n, [[c * x for x in row] for row in a.rows])


def matMul(field, a, b):
    assert a.n == b.m, "shape mismatch %dx%d * %dx%d" % (a.m, a.n, b.m, b.n)
    z = field.zero
    out = [[z] * b.n for _ in range(a.m)]
    for i in range(a.m):
        ra = a.rows[i]
        oi = out[i]
        for k in range(a.n):
            x = ra[k]
            if not x:
                continue
            rb = b.rows[k]
            for j in range(b.n):
                if rb[j]:
                    oi[j] = oi[j] + x * rb[j]
    return Mat(a.m, b.n, out)


def matVec(field, a, v):
    assert a.n == len(v)
    z = field.zero
    out = []
    for row in a.rows:
        s = z
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def hcat(blocks):
    blocks = [b for b in blocks]
    assert blocks
    m = blocks[0].m
    assert all(b.m == m for b in blocks)
    n = sum(b.n for b in blocks)
    rows = [[] for _ in range(m)]
    for b in blocks:
        for i in range(m):
            rows[i].extend(b.rows[i])
    return Mat(m, n, rows)


def vcat(blocks):
    blocks = [b for b in blocks]
    assert blocks
    n = blocks[0].n
    assert all(b.n == n for b in blocks)
    rows = []
    for b in blocks:
        rows.extend(list(r) for r in b.rows)
    return Mat(len(rows), n, rows)


def blockMat(field, grid, rowDims, colDims):
    """Assemble a block matrix; grid[i][j] is a Mat or None (zero block)."""
    rows = []
    for i, rdim in enumerate(rowDims):
        blocks = []
        for j, cdim in enumerate(colDims):
            b = grid[i][j]
            if b is None:
                b = Mat.zero(field, rdim, cdim)
            assert b.m == rdim and b.n == cdim
            blocks.append(b)
        if blocks:
            rows.append(hcat(blocks))
        else:
            rows.append(Mat.zero(field, rdim, 0))
    if not rows:
        return Mat.zero(field, 0, sum(colDims))
    return vcat(rows)


def rowReduce(a):
    """In-place-free RREF.  Returns (R, pivotColumns)."""
    r = a.copy()
    pivots = []
    lead = 0
    for col in range(r.n):
        if lead >= r.m:
            break
        sel = None
        for i in range(lead, r.m):
            if r.rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        r.rows[lead], r.rows[sel] = r.rows[sel], r.rows[lead]
        inv = r.rows[lead][col].inverse()
        r.rows[lead] = [inv * x for x in r.rows[lead]]
        for i in range(r.m):
            if i != lead and r.rows[i][col]:
                c = r.rows[i][col]
                r.rows[i] = [x - c * y for x, y in zip(r.rows[i],
                                                       r.rows[lead])]
        pivots.append(col)
        lead += 1
    return r, pivots


def rank(a):
    _, pivots = rowReduce(a)
    return len(pivots)


def kernelBasis(field, a):
    """Basis of the right kernel of a, as a list of length-n vectors.

    Deterministic: free variables in increasing column order, each set to 1.
    """
    r, pivots = rowReduce(a)
    pivotSet = set(pivots)
    free = [j for j in range(a.n) if j not in pivotSet]
    basis = []
    for f in free:
        v = [field.zero] * a.n
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -r.rows[i][f]
        basis.append(v)
    return basis


def solve(field, a, b):
    """One solution x of a x = b, or None if inconsistent."""
    aug = Mat(a.m, a.n + 1,
              [list(row) + [b[i]] for i, row in enumerate(a.rows)])
    r, pivots = rowReduce(aug)
    if a.n in pivots:
        return None
    x = [field.zero] * a.n
    for i, p in enumerate(pivots):
        x[p] = r.rows[i][a.n]
    return x


def solveMany(field, a, b):
    """One solution X of a X = b (matrix right-hand side), or None."""
    aug = hcat([a, b])
    r, pivots = rowReduce(aug)
    if any(p >= a.n for p in pivots):
        return None
    x = Mat.zero(field, a.n, b.n)
    for i, p in enumerate(pivots):
        for j in range(b.n):
            x.rows[p][j] = r.rows[i][a.n + j]
    return x


def inverse(field, a):
    assert a.m == a.n
    aug = hcat([a, Mat.identity(field, a.n)])
    r, pivots = rowReduce(aug)
    if pivots != list(range(a.n)):
        raise ZeroDivisionError("singular matrix")
    return Mat(a.n, a.n, [row[a.n:] for row in r.rows])


def det(field, a):
    """Determinant by exact fraction-free-enough elimination over a field."""
    assert a.m == a.n
    n = a.n
    if n == 0:
        return field.one
    r = [list(row) for row in a.rows]
    d = field.one
    for col in range(n):
        sel = None
        for i in range(col, n):
            if r[i][col]:
                sel = i
                break
        if sel is None:
            return field.zero
        if sel != col:
            r[col], r[sel] = r[sel], r[col]
            d = -d
        d = d * r[col][col]
        inv = r[col][col].inverse()
        for i in range(col + 1, n):
            if r[i][col]:
                c = r[i][col] * inv
                r[i] = [x - c * y for x, y in zip(r[i], r[col])]
    return d


def rankAndKernel(field, a):
    """(rank, kernelBasis) for a matrix over a field; the kernel basis is the
    deterministic reduced-echelon one from kernelBasis."""
    ker = kernelBasis(field, a)
    return a.n - len(ker), ker


def columnSpacePivots(a):
    """Indices of a deterministic maximal independent set of columns."""
    _, pivots = rowReduce(a)
    return pivots


def extendToComplement(field, base, candidates, n):
    """Greedily pick candidates (vectors of length n) that grow span(base).

    Returns the list of chosen indices, in candidate order.  Deterministic.
    """
    cols = [list(v) for v in base]
    chosen = []
    currentRank = rank(Mat.fromRows(cols, n)) if cols else 0
    for idx, v in enumerate(candidates):
        trial = cols + [list(v)]
        if rank(Mat.fromRows(trial, n)) > currentRank:
            cols = trial
            currentRank += 1
            chosen.append(idx)
    return chosen
