"""Group elements as evaluable tokens.

No group ever exists abstractly here: a token is a formal product of
generator symbols and literal (matrix, degree) factors, and every pipeline
consumes only the pair (rho(g), xi(g)).  Three evaluation modes:

  * star-at-lam:   E(g) = lam^xi(g) * rho(g)^T, an antirepresentation
                   (E(gh) = E(h) E(g)) over the chosen field,
  * star-Laurent:  E(g) = t^xi(g) * rho(g)^T over L = K[t, t^-1],
  * plain-at-lam:  rho_lam(g) = lam^xi(g) * rho(g), an ordinary
                   representation (used by the cochain pipeline).

The transpose realizes the conjugate antirepresentation; entries stay exact
and no complex conjugation is applied, which changes no Jordan/Nil/Massey
integer.
"""

from .errors import InputError
from .gauss import QI, Scalar, formatScalar, parseScalar
from .linalg import Mat, inverse, matScale, transpose
from .poly import LaurentPoly, LaurentRing, Poly


class GroupToken:
    """Formal product of atoms: ("g", name, +-1) or ("m", matrixTuple, xi)."""

    __slots__ = ("atoms",)

    def __init__(self, atoms=()):
        self.atoms = tuple(atoms)

    @staticmethod
    def identity():
        return GroupToken()

    @staticmethod
    def word(letters):
        """From ["a", "b^-1", ...]."""
        atoms = []
        for s in letters:
            if s.endswith("^-1"):
                atoms.append(("g", s[:-3], -1))
            else:
                atoms.append(("g", s, 1))
        return GroupToken(atoms)

    @staticmethod
    def literal(mat, xi):
        frozen = tuple(tuple(row) for row in mat.rows)
        return GroupToken((("m", frozen, xi),))

    def __mul__(self, other):
        return GroupToken(self.atoms + other.atoms)

    def inverse(self):
        out = []
        for atom in reversed(self.atoms):
            if atom[0] == "g":
                out.append(("g", atom[1], -atom[2]))
            else:
                m = Mat.fromRows([list(r) for r in atom[1]])
                inv = inverse(QI, m)
                out.append(("m", tuple(tuple(r) for r in inv.rows),
                            -atom[2]))
        return GroupToken(out)

    def isIdentityWord(self):
        return not self.atoms

    def __eq__(self, other):
        return isinstance(other, GroupToken) and other.atoms == self.atoms

    def __hash__(self):
        return hash(self.atoms)

    def __repr__(self):
        parts = []
        for atom in self.atoms:
            if atom[0] == "g":
                parts.append(atom[1] + ("" if atom[2] == 1 else "^-1"))
            else:
                parts.append("<literal xi=%d>" % atom[2])
        return "GroupToken(%s)" % ("*".join(parts) or "1")

    def toJSON(self):
        out = []
        for atom in self.atoms:
            if atom[0] == "g":
                out.append(atom[1] if atom[2] == 1 else atom[1] + "^-1")
            else:
                out.append({"matrix": [[formatScalar(x) for x in row]
                                       for row in atom[1]],
                            "xi": atom[2]})
        return out

    @staticmethod
    def fromJSON(items):
        atoms = []
        for it in items:
            if isinstance(it, str):
                if it.endswith("^-1"):
                    atoms.append(("g", it[:-3], -1))
                else:
                    atoms.append(("g", it, 1))
            elif isinstance(it, dict):
                rows = [[parseScalar(x) for x in row] for row in it["matrix"]]
                atoms.append(("m", tuple(tuple(r) for r in rows),
                              int(it["xi"])))
            else:
                raise InputError("bad token item: %r" % (it,))
        return GroupToken(atoms)


class Representation:
    """Generator table name -> (invertible matrix over K, integer xi)."""

    def __init__(self, dim, images, relators=()):
        """images: ordered dict-like of name -> (Mat, xi)."""
        self.dim = dim
        self.names = list(images.keys())
        self.mats = {}
        self.invs = {}
        self.xis = {}
        for name, (mat, xi) in images.items():
            if mat.m != dim or mat.n != dim:
                raise InputError("generator %r image is %dx%d, expected %d"
                                 % (name, mat.m, mat.n, dim))
            try:
                inv = inverse(QI, mat)
            except ZeroDivisionError:
                raise InputError("generator %r image is singular" % (name,))
            self.mats[name] = mat
            self.invs[name] = inv
            self.xis[name] = int(xi)
        for rel in relators:
            self.checkRelator(rel)

    def checkRelator(self, rel):
        if self.xiOf(rel) != 0:
            raise InputError("relator %r has nonzero xi" % (rel,))
        m = self.evalPlain(rel, QI.one)
        if m != Mat.identity(QI, self.dim):
            raise InputError("relator %r does not evaluate to the identity"
                             % (rel,))

    def _atomData(self, atom):
        """(matrix, xi) of a single atom in plain (non-transposed) form."""
        if atom[0] == "g":
            name = atom[1]
            if name not in self.mats:
                raise InputError("undeclared generator %r" % (name,))
            if atom[2] == 1:
                return self.mats[name], self.xis[name]
            return self.invs[name], -self.xis[name]
        frozen, xi = atom[1], atom[2]
        m = Mat.fromRows([list(r) for r in frozen])
        if m.m != self.dim or m.n != self.dim:
            raise InputError("literal matrix is %dx%d, expected %d"
                             % (m.m, m.n, self.dim))
        return m, xi

    def xiOf(self, token):
        total = 0
        for atom in token.atoms:
            if atom[0] == "g":
                name = atom[1]
                if name not in self.xis:
                    raise InputError("undeclared generator %r" % (name,))
                total += atom[2] * self.xis[name]
            else:
                total += atom[2]
        return total

    def plainProduct(self, token):
        """rho(g) over K, ignoring xi (multiplicative, left to right)."""
        out = Mat.identity(QI, self.dim)
        from .linalg import matMul
        for atom in token.atoms:
            m, _ = self._atomData(atom)
            out = matMul(QI, out, m)
        return out

    def evalPlain(self, token, lam):
        """lam^xi(g) * rho(g) over the field of lam."""
        if not lam:
            raise InputError("plain evaluation needs lambda != 0")
        field, embed = _fieldOf(lam)
        m = _embedMat(field, embed, self.plainProduct(token))
        return matScale(_lamPower(lam, self.xiOf(token)), m)

    def evalStarAt(self, token, lam):
        """lam^xi(g) * rho(g)^T over the field of lam (antimultiplicative)."""
        if not lam:
            raise InputError("star-at-lambda needs lambda != 0")
        field, embed = _fieldOf(lam)
        m = _embedMat(field, embed, transpose(self.plainProduct(token)))
        return matScale(_lamPower(lam, self.xiOf(token)), m)

    def evalStarLaurent(self, token, ring=None):
        """t^xi(g) * rho(g)^T over L."""
        ring = ring or LaurentRing(QI)
        m = transpose(self.plainProduct(token))
        xi = self.xiOf(token)
        return Mat(self.dim, self.dim,
                   [[LaurentPoly(xi, Poly.const(QI, x)) for x in row]
                    for row in m.rows])


def _fieldOf(lam):
    """(field, embed) pair for a Scalar or extension-field lambda."""
    if isinstance(lam, Scalar):
        return QI, lambda s: s
    field = lam.field
    return field, field.embed


def _embedMat(field, embed, m):
    return Mat(m.m, m.n, [[embed(x) for x in row] for row in m.rows])


def _lamPower(lam, k):
    if k >= 0:
        return lam ** k
    return lam.inverse() ** (-k)


def evalToken(token, rep, mode, lam=None):
    """Spec-facing dispatcher over the three evaluation modes."""
    if mode == "star-at-lambda":
        return rep.evalStarAt(token, lam)
    if mode == "star-laurent":
        return rep.evalStarLaurent(token)
    if mode == "plain-at-lambda":
        return rep.evalPlain(token, lam)
    raise InputError("unknown evaluation mode %r" % (mode,))
