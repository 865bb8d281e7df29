"""Ordered Delta complexes with flat edge tokens and the prism torus model.

A p-simplex has ordered vertices v_0 < ... < v_p and faces face_i = (drop
vertex i); the front edge is [v_0, v_1] (the iterated last face) and the
back face is face_0.  Edge tokens transport preferred lifts from tail to
head and compose left to right along the vertex order, so flatness on a
2-simplex reads  g_front * g_back = g_long.

Cochains are twisted by the plain evaluation mode rho_lam (multiplicative):

    (d y)(sigma)       = rho_lam(g_front) y(face_0 sigma)
                         + sum_{i>=1} (-1)^i y(face_i sigma)
    (theta ~ y)(sigma) = theta(front edge) rho_lam(g_front) y(face_0 sigma)

where theta is a distinguished integer 1-cochain.  theta must differ from
xi(token) by an exact integer 1-cochain; the default is xi(token) itself.

buildTorusDelta models the mapping torus of a simplicial self-map phi of a
fiber with flat edge tokens: each p-prism over a preferred lift splits into
level chains, level-1 cells are glued back through phi, and the crossing
edges pick up one vertical token per fiber vertex.
"""

from .errors import InputError
from .gauss import QI, Scalar
from .linalg import Mat, matMul, matScale
from .tokens import GroupToken


def lamField(lam):
    """Field object a Scalar or extension-field lambda lives in."""
    if isinstance(lam, Scalar):
        return QI
    return lam.field


def fieldInt(field, k):
    """The integer k as an element of field."""
    s = Scalar(k)
    return field.embed(s) if hasattr(field, "embed") else s


def _accumBlock(mat, bi, bj, n, block):
    for a in range(n):
        row = mat.rows[bi * n + a]
        src = block.rows[a]
        for b in range(n):
            col = bj * n + b
            row[col] = row[col] + src[b]


def _accumScaledIdentity(mat, bi, bj, n, c):
    for a in range(n):
        col = bj * n + a
        row = mat.rows[bi * n + a]
        row[col] = row[col] + c


class SimplicialFiber:
    """Ordered simplicial complex, closed under faces, one token per edge.

    simplices: dict p -> list of strictly increasing vertex tuples (p >= 1).
    edgeTokens[e] transports from tail to head of the e-th edge; tokens on a
    fiber must have xi = 0 under any representation they are used with.
    """

    def __init__(self, vertices, simplices, edgeTokens):
        self.vertices = int(vertices)
        if self.vertices <= 0:
            raise InputError("fiber needs at least one vertex")
        top = max([p for p in simplices if simplices[p]] or [0])
        self.simplices = {p: [tuple(s) for s in simplices.get(p, ())]
                          for p in range(1, top + 1)}
        self.index = {p: {s: i for i, s in enumerate(cells)}
                      for p, cells in self.simplices.items()}
        for p, cells in self.simplices.items():
            if len(self.index[p]) != len(cells):
                raise InputError("duplicate %d-simplex in fiber" % p)
            for s in cells:
                if len(s) != p + 1:
                    raise InputError("%d-simplex %r has %d vertices"
                                     % (p, s, len(s)))
                if any(v < 0 or v >= self.vertices for v in s):
                    raise InputError("vertex out of range in simplex %r"
                                     % (s,))
                if any(s[i] >= s[i + 1] for i in range(p)):
                    raise InputError("simplex %r is not strictly increasing"
                                     % (s,))
                if p >= 2:
                    for i in range(p + 1):
                        f = s[:i] + s[i + 1:]
                        if f not in self.index[p - 1]:
                            raise InputError("fiber is not closed under "
                                             "faces: %r misses %r" % (s, f))
        edges = self.simplices.get(1, [])
        if len(edgeTokens) != len(edges):
            raise InputError("fiber has %d edges but %d edge tokens"
                             % (len(edges), len(edgeTokens)))
        self.edgeTokens = list(edgeTokens)
        self.top = top

    def cells(self, p):
        if p == 0:
            return [(v,) for v in range(self.vertices)]
        return self.simplices.get(p, [])

    def count(self, p):
        if p == 0:
            return self.vertices
        return len(self.simplices.get(p, ()))

    def edgeToken(self, x, y):
        """Transport token from vertex x to vertex y along their edge."""
        if x == y:
            return GroupToken.identity()
        a, b = (x, y) if x < y else (y, x)
        e = self.index.get(1, {}).get((a, b))
        if e is None:
            raise InputError("fiber has no edge (%d, %d)" % (a, b))
        tok = self.edgeTokens[e]
        return tok if x < y else tok.inverse()


def selfMapOffender(m, phi):
    """First simplex where phi fails to be a strictly order-monotone
    simplicial self-map, as (p, simplex, reason), or None."""
    if len(phi) != m.vertices:
        raise InputError("self-map table has %d entries, expected %d"
                         % (len(phi), m.vertices))
    if any(v < 0 or v >= m.vertices for v in phi):
        raise InputError("self-map sends a vertex out of range")
    for p in range(1, m.top + 1):
        for s in m.cells(p):
            img = tuple(phi[v] for v in s)
            if any(img[i] >= img[i + 1] for i in range(p)):
                return (p, s, "is not strictly order-monotone on")
            if img not in m.index[p]:
                return (p, s, "does not send to a simplex the")
    return None


def propagateVerticals(m, phi, u):
    """Vertical tokens v(b) with v(b) t(phi b, phi c) = t(b, c) v(c), solved
    along a spanning forest with roots set to u.  Leftover cycle equations
    are caught later by the flatness check."""
    verts = [None] * m.vertices
    adj = [[] for _ in range(m.vertices)]
    for a, b in m.cells(1):
        adj[a].append(b)
        adj[b].append(a)
    for root in range(m.vertices):
        if verts[root] is not None:
            continue
        verts[root] = u
        queue = [root]
        while queue:
            b = queue.pop(0)
            for c in adj[b]:
                if verts[c] is None:
                    verts[c] = (m.edgeToken(b, c).inverse() * verts[b]
                                * m.edgeToken(phi[b], phi[c]))
                    queue.append(c)
    return verts


def buildTorusDelta(m, phi, u, verticals=None):
    """Delta model of the mapping torus of (m, phi).

    phi must send every simplex to a simplex of the same dimension with
    strictly increasing vertex images; otherwise the fiber has to be
    barycentrically subdivided first (see torusDeltaWithSubdivision).
    Vertical tokens default to the spanning-forest propagation from u.
    """
    off = selfMapOffender(m, phi)
    if off is not None:
        p, s, why = off
        raise InputError("self-map %s %d-simplex %r; barycentrically "
                         "subdivide the fiber first" % (why, p, s))
    verts = list(verticals) if verticals is not None \
        else propagateVerticals(m, phi, u)
    if len(verts) != m.vertices:
        raise InputError("need one vertical token per fiber vertex")

    top = m.top
    chainList = [[] for _ in range(top + 2)]
    chainIndex = [dict() for _ in range(top + 2)]

    def addChain(p, c):
        chainIndex[p][c] = len(chainList[p])
        chainList[p].append(c)

    for v in range(m.vertices):
        addChain(0, ((v, 0),))
    for p in range(1, top + 2):
        for s in m.cells(p):
            addChain(p, tuple((v, 0) for v in s))
            for j in range(p):
                addChain(p, tuple((s[i], 0 if i <= j else 1)
                                  for i in range(p + 1)))
        for s in m.cells(p - 1):
            for j in range(p):
                addChain(p, tuple((s[i], 0) for i in range(j + 1))
                         + tuple((s[i], 1) for i in range(j, p)))

    def faceOf(p, chain, i):
        nc = chain[:i] + chain[i + 1:]
        if min(level for _, level in nc) == 1:
            nc = tuple((phi[v], 0) for v, _ in nc)
        idx = chainIndex[p - 1].get(nc)
        if idx is None:
            raise InputError("prism face %r of %r is not a cell"
                             % (nc, chain))
        return idx

    faces = {p: [tuple(faceOf(p, c, i) for i in range(p + 1))
                 for c in chainList[p]]
             for p in range(1, top + 2)}

    tokens, theta = [], []
    for (x, _), (y, ly) in chainList[1]:
        if ly == 0:
            tokens.append(m.edgeToken(x, y))
            theta.append(0)
        elif x == y:
            tokens.append(verts[x])
            theta.append(1)
        else:
            tokens.append(m.edgeToken(x, y) * verts[y])
            theta.append(1)

    counts = [len(chainList[p]) for p in range(top + 2)]
    for p in range(1, top + 2):
        assert counts[p] == (p + 1) * m.count(p) + p * m.count(p - 1)
    return DeltaComplex(counts, faces, tokens, theta)


def subdivideFiber(m):
    """Barycentric subdivision with transported edge tokens.

    Vertices of the subdivision are the simplices of m ordered by
    (dimension, index); a p-simplex is a strictly nested flag.  The token
    on the edge (sigma-hat, tau-hat), sigma a proper face of tau, is the
    inverse of the transport from the first vertex of tau to the first
    vertex of sigma.  Returns (sd, labels) with labels[j] = (p, index).
    """
    labels = [(0, v) for v in range(m.vertices)]
    for p in range(1, m.top + 1):
        labels += [(p, i) for i in range(m.count(p))]
    vertexSets, anchor = [], []
    for p, i in labels:
        s = m.cells(p)[i]
        vertexSets.append(frozenset(s))
        anchor.append(s[0])
    n = len(labels)
    above = [[k for k in range(n)
              if labels[j][0] < labels[k][0] and vertexSets[j] < vertexSets[k]]
             for j in range(n)]
    flags = {1: [(j, k) for j in range(n) for k in above[j]]}
    for p in range(2, m.top + 1):
        flags[p] = [f + (k,) for f in flags[p - 1] for k in above[f[-1]]]
    tokens = [m.edgeToken(anchor[k], anchor[j]).inverse()
              for j, k in flags[1]]
    return SimplicialFiber(n, flags, tokens), labels


def inducedSubdividedMap(m, labels, phi):
    """Vertex map on the subdivision: each barycenter goes to the
    barycenter of the image simplex."""
    offsets, start = {}, 0
    for p in range(m.top + 1):
        offsets[p] = start
        start += m.count(p)
    out = []
    for p, i in labels:
        s = m.cells(p)[i]
        img = tuple(sorted(set(phi[v] for v in s)))
        if len(img) != p + 1:
            raise InputError("self-map collapses %d-simplex %r; the "
                             "subdivided map is degenerate" % (p, s))
        k = m.index[p].get(img) if p else img[0]
        if k is None:
            raise InputError("self-map does not send %d-simplex %r to a "
                             "simplex" % (p, s))
        out.append(offsets[p] + k)
    return out


def torusDeltaWithSubdivision(m, phi, u, verticals=None):
    """buildTorusDelta, barycentrically subdividing the fiber once when phi
    is not order-compatible.  Returns (deltaComplex, subdivided)."""
    if selfMapOffender(m, phi) is None:
        return buildTorusDelta(m, phi, u, verticals), False
    sd, labels = subdivideFiber(m)
    phiSd = inducedSubdividedMap(m, labels, phi)
    return buildTorusDelta(sd, phiSd, u), True


class DeltaComplex:
    """Ordered Delta complex: counts per dimension, face tables, one group
    token per edge, and a distinguished integer 1-cochain theta.

    faces[p][i] is the (p+1)-tuple of face indices of the i-th p-simplex
    (face_j drops vertex j), so faces[1][e] = (head, tail).  validate
    checks, against a representation: token flatness on every 2-simplex,
    and that theta - xi(token) is an exact integer 1-cochain.  theta=None
    defaults to xi(token) at validation time.
    """

    def __init__(self, counts, faces, edgeTokens, theta=None):
        self.counts = [int(c) for c in counts]
        if not self.counts or any(c < 0 for c in self.counts):
            raise InputError("bad cell counts %r" % (counts,))
        self.top = len(self.counts) - 1
        self.faces = {p: [tuple(f) for f in faces.get(p, ())]
                      for p in range(1, self.top + 1)}
        for p in range(1, self.top + 1):
            if len(self.faces[p]) != self.counts[p]:
                raise InputError("degree %d has %d cells but %d face tuples"
                                 % (p, self.counts[p], len(self.faces[p])))
            for i, f in enumerate(self.faces[p]):
                if len(f) != p + 1:
                    raise InputError("%d-simplex %d has %d faces, expected %d"
                                     % (p, i, len(f), p + 1))
                if any(j < 0 or j >= self.counts[p - 1] for j in f):
                    raise InputError("face index out of range on "
                                     "%d-simplex %d" % (p, i))
        edges = self.counts[1] if self.top >= 1 else 0
        if len(edgeTokens) != edges:
            raise InputError("%d edges but %d edge tokens"
                             % (edges, len(edgeTokens)))
        self.edgeTokens = list(edgeTokens)
        if theta is not None:
            theta = [int(x) for x in theta]
            if len(theta) != edges:
                raise InputError("theta must assign an integer to each edge")
        self.theta = theta

    def frontEdge(self, p, i):
        """Index of the edge [v_0, v_1] of the i-th p-simplex."""
        while p > 1:
            i = self.faces[p][i][p]
            p -= 1
        return i

    def validate(self, rep):
        """Check flatness and the theta invariants under rep; fills the
        default theta = xi(token) when none was given."""
        xis = [rep.xiOf(tok) for tok in self.edgeTokens]
        if self.theta is None:
            self.theta = list(xis)
        diffs = [self.theta[e] - xis[e] for e in range(len(xis))]
        pot = [None] * self.counts[0]
        if self.top >= 1:
            adj = [[] for _ in range(self.counts[0])]
            for e, (head, tail) in enumerate(self.faces[1]):
                adj[tail].append((head, diffs[e]))
                adj[head].append((tail, -diffs[e]))
            for root in range(self.counts[0]):
                if pot[root] is not None:
                    continue
                pot[root] = 0
                queue = [root]
                while queue:
                    a = queue.pop(0)
                    for b, d in adj[a]:
                        if pot[b] is None:
                            pot[b] = pot[a] + d
                            queue.append(b)
            for e, (head, tail) in enumerate(self.faces[1]):
                if pot[head] - pot[tail] != diffs[e]:
                    raise InputError("theta is not cohomologous to the "
                                     "crossing-degree cochain (edge %d)" % e)
        if self.top >= 2:
            mats = [rep.plainProduct(tok) for tok in self.edgeTokens]
            for s, (f0, f1, f2) in enumerate(self.faces[2]):
                if xis[f2] + xis[f0] != xis[f1] \
                        or matMul(QI, mats[f2], mats[f0]) != mats[f1]:
                    raise InputError("edge tokens are not flat on "
                                     "2-simplex %d" % s)
                assert self.theta[f0] - self.theta[f1] + self.theta[f2] == 0
        return self

    def thetaSquareOffenders(self):
        """2-simplices where theta(front edge) * theta(back edge) != 0,
        i.e. where the cochain theta ~ theta fails to vanish."""
        if self.theta is None:
            raise InputError("validate against a representation first")
        out = []
        for s in range(self.counts[2] if self.top >= 2 else 0):
            front = self.frontEdge(2, s)
            back = self.faces[2][s][0]
            if self.theta[front] * self.theta[back]:
                out.append(s)
        return out

    def cochainMatrices(self, rep, lam):
        """Twisted cochain differentials [d_0, ..., d_{top-1}] at lambda,
        d_p : C^p -> C^{p+1}, machine-checked to square to zero."""
        self.validate(rep)
        field, n = lamField(lam), rep.dim
        em = [rep.evalPlain(tok, lam) for tok in self.edgeTokens]
        ds = []
        for p in range(self.top):
            mat = Mat.zero(field, self.counts[p + 1] * n, self.counts[p] * n)
            for s in range(self.counts[p + 1]):
                fs = self.faces[p + 1][s]
                _accumBlock(mat, s, fs[0], n, em[self.frontEdge(p + 1, s)])
                for i in range(1, p + 2):
                    sign = field.one if i % 2 == 0 else -field.one
                    _accumScaledIdentity(mat, s, fs[i], n, sign)
            ds.append(mat)
        for p in range(len(ds) - 1):
            if not matMul(field, ds[p + 1], ds[p]).isZero():
                raise InputError("cochain differential does not square to "
                                 "zero out of degree %d" % p)
        return ds

    def cupThetaMatrices(self, rep, lam):
        """Left cup product by theta as matrices Theta_p : C^p -> C^{p+1}."""
        self.validate(rep)
        field, n = lamField(lam), rep.dim
        em = [rep.evalPlain(tok, lam) for tok in self.edgeTokens]
        mats = []
        for p in range(self.top):
            mat = Mat.zero(field, self.counts[p + 1] * n, self.counts[p] * n)
            for s in range(self.counts[p + 1]):
                e = self.frontEdge(p + 1, s)
                if self.theta[e]:
                    block = matScale(fieldInt(field, self.theta[e]), em[e])
                    _accumBlock(mat, s, self.faces[p + 1][s][0], n, block)
            mats.append(mat)
        return mats
