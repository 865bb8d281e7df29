"""Univariate polynomial arithmetic over an exact field.

`Poly` stores ascending coefficients over a field object (Q(i) or an
extension).  `LaurentPoly` is t^low * Poly; the torsion pipeline clears
negative powers globally, runs Smith reduction in K[t], and strips unit
t-powers at the end, so heavy arithmetic stays in Poly.
"""


class Poly:
    """Polynomial with ascending coefficient tuple; zero poly has coeffs (0,)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = list(coeffs)
        while len(cs) > 1 and not cs[-1]:
            cs.pop()
        if not cs:
            cs = [field.zero]
        self.field = field
        self.coeffs = tuple(cs)

    @staticmethod
    def const(field, c):
        return Poly(field, [c])

    @staticmethod
    def zero(field):
        return Poly(field, [field.zero])

    @staticmethod
    def one(field):
        return Poly(field, [field.one])

    @staticmethod
    def t(field):
        return Poly(field, [field.zero, field.one])

    @staticmethod
    def linear(field, lam):
        """t - lam."""
        return Poly(field, [-lam, field.one])

    def degree(self):
        if len(self.coeffs) == 1 and not self.coeffs[0]:
            return -1
        return len(self.coeffs) - 1

    def lead(self):
        return self.coeffs[-1]

    def isZero(self):
        return self.degree() == -1

    def isConstant(self):
        return self.degree() <= 0

    def isOne(self):
        return self.degree() == 0 and self.coeffs[0] == self.field.one

    def monic(self):
        if self.isZero():
            return self
        inv = self.lead().inverse()
        return Poly(self.field, [inv * c for c in self.coeffs])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return Poly(self.field, [x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        z = self.field.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def scale(self, c):
        return Poly(self.field, [c * x for x in self.coeffs])

    def shift(self, k):
        """Multiply by t^k (k >= 0)."""
        if self.isZero():
            return self
        return Poly(self.field, [self.field.zero] * k + list(self.coeffs))

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        return Poly.const(self.field, other)

    def divmod(self, other):
        other = self._coerce(other)
        if other.isZero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [self.field.zero] * max(len(self.coeffs) - len(other.coeffs) + 1, 1)
        rem = list(self.coeffs)
        dDeg = other.degree()
        lead = other.lead().inverse()
        for k in range(len(rem) - dDeg - 1, -1, -1):
            c = rem[k + dDeg] * lead
            if c:
                q[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Poly(self.field, q), Poly(self.field, rem[:dDeg] or
                                         [self.field.zero])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exactDiv(self, other):
        q, r = self.divmod(other)
        if not r.isZero():
            raise ValueError("non-exact polynomial division")
        return q

    def derivative(self):
        if self.isConstant():
            return Poly.zero(self.field)
        return Poly(self.field,
                    [self.coeffs[k] * k for k in range(1, len(self.coeffs))])

    def evalAt(self, x):
        """Horner evaluation; x may live in any algebra over the field."""
        acc = x - x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.isZero()

    def __repr__(self):
        return "Poly(%r)" % (list(self.coeffs),)


class PolyRing:
    """Ring context for matrices with Poly entries (zero/one for linalg)."""

    def __init__(self, field):
        self.field = field
        self.zero = Poly.zero(field)
        self.one = Poly.one(field)

    def const(self, c):
        return Poly.const(self.field, c)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.field == self.field

    def __hash__(self):
        return hash(("PolyRing", self.field))


def polyGcd(a, b):
    """Monic gcd; gcd(0,0) = 0.

    Remainders are renormalized to monic each step: without that, the
    coefficient bit-length of the remainder sequence grows exponentially in
    the degree and desk-scale inputs already stall.
    """
    a, b = a.monic(), b.monic()
    while not b.isZero():
        a, b = b, (a % b).monic()
    return a


def polyXgcd(a, b):
    """(g, s, t) with s*a + t*b = g, g monic (or zero).  Remainders are
    monic-normalized each step to keep coefficients small."""
    r0, r1 = a, b
    s0, s1 = Poly.one(a.field), Poly.zero(a.field)
    t0, t1 = Poly.zero(a.field), Poly.one(a.field)
    while not r1.isZero():
        q, r = r0.divmod(r1)
        s2 = s0 - q * s1
        t2 = t0 - q * t1
        if not r.isZero():
            lead = r.lead().inverse()
            r, s2, t2 = r.scale(lead), s2.scale(lead), t2.scale(lead)
        r0, r1 = r1, r
        s0, s1 = s1, s2
        t0, t1 = t1, t2
    if not r0.isZero() and r0.lead() != a.field.one:
        lead = r0.lead().inverse()
        r0, s0, t0 = r0.scale(lead), s0.scale(lead), t0.scale(lead)
    return r0, s0, t0


def squarefreePart(f):
    if f.degree() <= 0:
        return Poly.one(f.field)
    g = polyGcd(f, f.derivative())
    return f.exactDiv(g).monic()


def squarefreeDecomposition(f):
    """Yun's algorithm: [(p_i, i)] with f = lead * prod p_i^i, p_i squarefree,
    pairwise coprime, nonconstant."""
    if f.degree() <= 0:
        return []
    f = f.monic()
    d = f.derivative()
    a = polyGcd(f, d)
    b = f.exactDiv(a)
    c = d.exactDiv(a)
    e = c - b.derivative()
    out = []
    i = 1
    while b.degree() > 0:
        ai = polyGcd(b, e)
        if ai.degree() > 0:
            out.append((ai, i))
        b = b.exactDiv(ai)
        c = e.exactDiv(ai)
        e = c - b.derivative()
        i += 1
    return out


def multiplicityAt(f, q):
    """Largest e with q^e dividing f (q nonconstant); infinite only if f = 0,
    which is rejected."""
    if f.isZero():
        raise ValueError("multiplicity in the zero polynomial is undefined")
    if q.degree() <= 0:
        raise ValueError("multiplicity divisor must be nonconstant")
    e = 0
    while True:
        quo, rem = f.divmod(q)
        if not rem.isZero():
            return e
        f = quo
        e += 1


def gcdFreeBasis(polys):
    """Refine monic nonconstant polys into a pairwise-coprime monic set whose
    products generate the same divisibility data.  Deterministic order."""
    basis = []
    queue = [p.monic() for p in polys if p.degree() > 0]
    while queue:
        p = queue.pop(0)
        if p.degree() <= 0:
            continue
        placed = False
        for k in range(len(basis)):
            g = polyGcd(p, basis[k])
            if g.degree() <= 0:
                continue
            b = basis[k]
            parts = []
            bRest = b.exactDiv(g)
            pRest = p.exactDiv(g)
            basis[k] = g
            if bRest.degree() > 0:
                parts.append(bRest)
            if pRest.degree() > 0:
                parts.append(pRest)
            queue = parts + queue
            placed = True
            break
        if not placed:
            basis.append(p)
    # split repeated content: elements may still share factors among
    # themselves after one pass; iterate until pairwise coprime
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                g = polyGcd(basis[i], basis[j])
                if g.degree() > 0 and (g != basis[i] or g != basis[j]):
                    pieces = []
                    for q in (basis[i].exactDiv(g), basis[j].exactDiv(g), g):
                        if q.degree() > 0:
                            pieces.append(q)
                    rest = [basis[k] for k in range(len(basis))
                            if k not in (i, j)]
                    basis = rest + pieces
                    changed = True
                    break
            if changed:
                break
    # dedupe
    out = []
    for p in basis:
        if all(p != q for q in out):
            out.append(p)
    out.sort(key=lambda p: (p.degree(), [((c.re, c.im) if hasattr(c, "re")
                                          else str(c)) for c in p.coeffs]))
    return out


class LaurentRing:
    """Ring context for matrices with LaurentPoly entries."""

    def __init__(self, field):
        self.field = field
        self.zero = LaurentPoly(0, Poly.zero(field))
        self.one = LaurentPoly(0, Poly.one(field))

    def const(self, c):
        return LaurentPoly(0, Poly.const(self.field, c))

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and other.field == self.field

    def __hash__(self):
        return hash(("LaurentRing", self.field))


class LaurentPoly:
    """t^low * poly with poly(0) != 0 unless the whole thing is zero."""

    __slots__ = ("low", "poly")

    def __init__(self, low, poly):
        if poly.isZero():
            low = 0
        else:
            k = 0
            while not poly.coeffs[k]:
                k += 1
            if k:
                poly = Poly(poly.field, poly.coeffs[k:])
                low += k
        self.low = low
        self.poly = poly

    @staticmethod
    def fromPoly(poly):
        return LaurentPoly(0, poly)

    @staticmethod
    def monomial(field, c, k):
        return LaurentPoly(k, Poly.const(field, c))

    @staticmethod
    def zero(field):
        return LaurentPoly(0, Poly.zero(field))

    @property
    def field(self):
        return self.poly.field

    def isZero(self):
        return self.poly.isZero()

    def isUnit(self):
        return self.poly.degree() == 0

    def __add__(self, other):
        if self.isZero():
            return other
        if other.isZero():
            return self
        low = min(self.low, other.low)
        return LaurentPoly(low, self.poly.shift(self.low - low) +
                           other.poly.shift(other.low - low))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentPoly(self.low, -self.poly)

    def __mul__(self, other):
        return LaurentPoly(self.low + other.low, self.poly * other.poly)

    def scale(self, c):
        return LaurentPoly(self.low, self.poly.scale(c))

    def evalAt(self, x):
        """Evaluate with t := x, x invertible in its algebra."""
        v = self.poly.evalAt(x)
        if self.low == 0:
            return v
        return v * (x ** self.low if self.low > 0
                    else x.inverse() ** (-self.low))

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self.poly == other.poly
        return NotImplemented

    def __hash__(self):
        return hash((self.low, self.poly))

    def __bool__(self):
        return not self.isZero()

    def __repr__(self):
        return "LaurentPoly(t^%d * %r)" % (self.low, self.poly)


def stripUnits(p):
    """Normalize a Poly divisor: drop t^k factors and make monic."""
    if p.isZero():
        return p
    k = 0
    while not p.coeffs[k]:
        k += 1
    return Poly(p.field, p.coeffs[k:]).monic()


def formatPoly(p, var="t"):
    from .gauss import formatScalar
    if p.isZero():
        return "0"
    terms = []
    for k in range(p.degree(), -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        cs = formatScalar(c) if hasattr(c, "re") else str(c)
        needParen = ("+" in cs[1:]) or ("-" in cs[1:]) or ("i" in cs)
        if k == 0:
            terms.append("(%s)" % cs if needParen else cs)
            continue
        tPart = var if k == 1 else "%s^%d" % (var, k)
        if cs == "1":
            terms.append(tPart)
        elif cs == "-1":
            terms.append("-" + tPart)
        else:
            coeff = "(%s)" % cs if needParen else cs
            terms.append("%s*%s" % (coeff, tPart))
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out
