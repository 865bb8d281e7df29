"""Exact scalar arithmetic.

The base coefficient field is K = Q(i), represented by a pair of
`fractions.Fraction` values.  Everything downstream (matrices, polynomials,
Smith forms, homology) is generic over a small field protocol: a field object
exposes `zero` and `one`, and its elements support `+ - * /`, `==`, `bool`
(truth = nonzero) and hashing.  `ExtensionField` provides K[x]/(p) for a monic
polynomial p asserted irreducible by the caller, so that eigenvalue classes
given only by their minimal polynomial can be evaluated exactly.
"""

from fractions import Fraction


class Scalar:
    """An element a + b*i of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.re * other.re - self.im * other.im,
                      self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return "Scalar(%r)" % (formatScalar(self),)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    return NotImplemented


class GaussField:
    """Field object for K = Q(i)."""

    zero = Scalar(0)
    one = Scalar(1)

    def __call__(self, re=0, im=0):
        return Scalar(re, im)

    def __repr__(self):
        return "QQ(i)"

    def __eq__(self, other):
        return isinstance(other, GaussField)

    def __hash__(self):
        return hash("QQ(i)")


QI = GaussField()


def _formatFraction(q):
    return str(q)


def formatScalar(s):
    """Render a Scalar as 'a/b', 'c/d*i', or 'a/b+c/d*i' (denominator 1 elided)."""
    if s.im == 0:
        return _formatFraction(s.re)
    if s.im == 1:
        imPart = "i"
    elif s.im == -1:
        imPart = "-i"
    else:
        imPart = _formatFraction(s.im) + "*i"
    if s.re == 0:
        return imPart
    if s.im > 0 and not imPart.startswith("-"):
        return _formatFraction(s.re) + "+" + imPart
    return _formatFraction(s.re) + imPart


def parseScalar(text):
    """Parse the formats produced by formatScalar, plus obvious variants.

    Accepts integers, fractions 'a/b', pure imaginary 'i', '-i', 'c/d*i',
    and combinations 'a/b+c/d*i' / 'a/b-c/d*i'.  Whitespace is ignored.
    """
    if isinstance(text, int):
        return Scalar(text)
    t = text.replace(" ", "")
    if not t:
        raise ValueError("empty scalar literal")
    # split into real and imaginary summands at a top-level + or - (not the
    # leading sign and not the sign inside an exponent-free fraction)
    terms = []
    start = 0
    for k in range(1, len(t)):
        if t[k] in "+-" and t[k - 1] not in "+-/*":
            terms.append(t[start:k])
            start = k
    terms.append(t[start:])
    if len(terms) > 2:
        raise ValueError("bad scalar literal: %r" % (text,))
    re = Fraction(0)
    im = Fraction(0)
    seenRe = seenIm = False
    for term in terms:
        if "i" in term:
            if seenIm:
                raise ValueError("bad scalar literal: %r" % (text,))
            seenIm = True
            body = term.replace("*i", "").replace("i", "")
            if body in ("", "+"):
                im += Fraction(1)
            elif body == "-":
                im += Fraction(-1)
            else:
                im += Fraction(body)
        else:
            if seenRe:
                raise ValueError("bad scalar literal: %r" % (text,))
            seenRe = True
            re += Fraction(term)
    return Scalar(re, im)


class ExtElement:
    """Element of K[x]/(p): a coefficient tuple of length deg(p)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)
        assert len(self.coeffs) == field.degree

    def _check(self, other):
        if isinstance(other, ExtElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("mixed extension fields")
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return self.field.embed(other)
        return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field,
                          [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field,
                          [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field, self.field.mulmod(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __neg__(self):
        return ExtElement(self.field, [-a for a in self.coeffs])

    def inverse(self):
        return ExtElement(self.field, self.field.invmod(self.coeffs))

    def __truediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return "ExtElement(%r)" % (list(map(formatScalar, self.coeffs)),)


def _polyDivmod(num, den):
    """Exact divmod of Scalar coefficient lists (ascending order)."""
    num = list(num)
    dDeg = len(den) - 1
    while dDeg > 0 and not den[dDeg]:
        dDeg -= 1
    lead = den[dDeg]
    quot = [Scalar(0)] * max(len(num) - dDeg, 0)
    for k in range(len(num) - dDeg - 1, -1, -1):
        c = num[k + dDeg] / lead
        if c:
            quot[k] = c
            for j in range(dDeg + 1):
                num[k + j] = num[k + j] - c * den[j]
    rem = num[:dDeg]
    while len(rem) > 1 and not rem[-1]:
        rem.pop()
    if not rem:
        rem = [Scalar(0)]
    return quot, rem


class ExtensionField:
    """K[x]/(p) for a monic p over Q(i), asserted irreducible by the caller.

    Irreducibility is not decided here; a squarefreeness check (gcd with the
    derivative) catches the grossest mistakes, and every inverse computation
    will raise if a zero divisor is hit.
    """

    def __init__(self, modulus):
        mod = [c if isinstance(c, Scalar) else Scalar(c) for c in modulus]
        while len(mod) > 1 and not mod[-1]:
            mod.pop()
        if len(mod) < 2:
            raise ValueError("modulus must have degree >= 1")
        lead = mod[-1]
        mod = [c / lead for c in mod]
        self.modulus = tuple(mod)
        self.degree = len(mod) - 1
        # squarefree sanity: gcd(p, p') must be constant
        deriv = [mod[k] * k for k in range(1, len(mod))]
        g = _coeffGcd(list(mod), deriv)
        if len(g) > 1:
            raise ValueError("modulus is not squarefree")
        self.zero = ExtElement(self, [Scalar(0)] * self.degree)
        self.one = ExtElement(self, [Scalar(1)] + [Scalar(0)] * (self.degree - 1))
        self.generator = ExtElement(
            self, [Scalar(0), Scalar(1)] + [Scalar(0)] * (self.degree - 2))

    def embed(self, s):
        if isinstance(s, (int, Fraction)):
            s = Scalar(s)
        return ExtElement(self, [s] + [Scalar(0)] * (self.degree - 1))

    def fromCoeffs(self, coeffs):
        cs = [c if isinstance(c, Scalar) else Scalar(c) for c in coeffs]
        if len(cs) > self.degree:
            _, cs = _polyDivmod(cs, list(self.modulus))
        cs = cs + [Scalar(0)] * (self.degree - len(cs))
        return ExtElement(self, cs[: self.degree])

    def mulmod(self, a, b):
        n = self.degree
        prod = [Scalar(0)] * (2 * n - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = prod[i + j] + ai * bj
        _, rem = _polyDivmod(prod, list(self.modulus))
        rem = list(rem) + [Scalar(0)] * (n - len(rem))
        return tuple(rem[:n])

    def invmod(self, a):
        """Extended Euclid in K[x]: find s with s*a = 1 mod p."""
        if not any(a):
            raise ZeroDivisionError("inverse of zero extension element")
        a = list(a)
        while len(a) > 1 and not a[-1]:
            a.pop()
        r0, r1 = list(self.modulus), a
        s0, s1 = [Scalar(0)], [Scalar(1)]
        while any(r1):
            q, r = _polyDivmod(r0, r1)
            r0, r1 = r1, r
            s2 = _polySub(s0, _polyMul(q, s1))
            s0, s1 = s1, s2
            if len(r1) == 1 and not r1[0]:
                break
        if len(r0) != 1:
            raise ZeroDivisionError("zero divisor: modulus not irreducible")
        inv = [c / r0[0] for c in s0]
        _, inv = _polyDivmod(inv, list(self.modulus))
        inv = list(inv) + [Scalar(0)] * (self.degree - len(inv))
        return tuple(inv[: self.degree])

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return "QQ(i)[x]/(%s)" % (
            ", ".join(formatScalar(c) for c in self.modulus),)


def _polyMul(a, b):
    out = [Scalar(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def _polySub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Scalar(0)] * (n - len(a))
    b = list(b) + [Scalar(0)] * (n - len(b))
    out = [x - y for x, y in zip(a, b)]
    while len(out) > 1 and not out[-1]:
        out.pop()
    return out


def _coeffGcd(a, b):
    def trim(p):
        p = list(p)
        while len(p) > 1 and not p[-1]:
            p.pop()
        return p

    a, b = trim(a), trim(b)
    if len(b) == 1 and not b[0]:
        return a
    while any(b):
        _, r = _polyDivmod(a, b)
        a, b = b, trim(r)
        if len(b) == 1 and not b[0]:
            break
    return a
