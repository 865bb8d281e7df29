import random
from fractions import Fraction

import pytest

from jml.errors import InputError
from jml.gauss import ExtensionField, QI, Scalar
from jml.linalg import Mat, matMul, transpose
from jml.poly import LaurentPoly, Poly
from jml.tokens import GroupToken, Representation, evalToken


def mat(rows):
    return Mat.fromRows([[Scalar(x) if isinstance(x, (int, Fraction)) else x
                          for x in row] for row in rows])


def heisRep():
    # pi_1 of the mapping torus of T^2 under [[1,1],[0,1]]: a, b in the fiber
    # (xi = 0), u the section (xi = 1); rank-1 trivial images
    return Representation(1, {
        "a": (mat([[1]]), 0),
        "b": (mat([[1]]), 0),
        "u": (mat([[1]]), 1),
    })


def rank2Rep():
    return Representation(2, {
        "a": (mat([[1, 1], [0, 1]]), 0),
        "b": (mat([[0, -1], [1, 0]]), 0),
        "u": (mat([[2, 1], [1, 1]]), 1),
    })


def randomToken(rng, names, maxLen=4):
    letters = []
    for _ in range(rng.randint(0, maxLen)):
        n = rng.choice(names)
        letters.append(n if rng.random() < 0.5 else n + "^-1")
    return GroupToken.word(letters)


def test_token_algebra_and_json_roundtrip():
    t = GroupToken.word(["a", "b^-1"])
    s = GroupToken.word(["u"])
    assert (t * s).toJSON() == ["a", "b^-1", "u"]
    assert GroupToken.fromJSON(["a", "b^-1", "u"]) == t * s
    assert t.inverse().toJSON() == ["b", "a^-1"]
    assert GroupToken.identity().isIdentityWord()
    lit = GroupToken.literal(mat([[2]]), 3)
    back = GroupToken.fromJSON(lit.toJSON())
    assert back == lit
    assert lit.inverse().toJSON() == [{"matrix": [["1/2"]], "xi": -3}]


def test_xi_additivity():
    rep = heisRep()
    rng = random.Random(1)
    for _ in range(40):
        g = randomToken(rng, rep.names)
        h = randomToken(rng, rep.names)
        assert rep.xiOf(g * h) == rep.xiOf(g) + rep.xiOf(h)
        assert rep.xiOf(g.inverse()) == -rep.xiOf(g)


def test_evaluation_modes_basic():
    rep = Representation(1, {"u": (mat([[1]]), 1)})
    tok = GroupToken.word(["u"])
    lam3 = Scalar(3)
    assert evalToken(tok, rep, "star-at-lambda", lam3) == mat([[3]])
    laurent = evalToken(tok, rep, "star-laurent")
    assert laurent.rows[0][0] == LaurentPoly(1, Poly.one(QI))
    a = mat([[1, 2], [3, 4]])
    rep2 = Representation(2, {"g": (a, 0)})
    got = evalToken(GroupToken.word(["g"]), rep2, "star-at-lambda",
                    Scalar(5))
    assert got == transpose(a)


def test_antimultiplicativity_random():
    rep = rank2Rep()
    rng = random.Random(2718)
    lam = Scalar(Fraction(3, 2))
    for _ in range(60):
        g = randomToken(rng, rep.names)
        h = randomToken(rng, rep.names)
        lhs = rep.evalStarAt(g * h, lam)
        rhs = matMul(QI, rep.evalStarAt(h, lam), rep.evalStarAt(g, lam))
        assert lhs == rhs
        # plain mode is multiplicative instead
        assert rep.evalPlain(g * h, lam) == matMul(
            QI, rep.evalPlain(g, lam), rep.evalPlain(h, lam))


def test_specialization_compatibility():
    # substituting t := lam into star-Laurent equals star-at-lam
    rep = rank2Rep()
    rng = random.Random(99)
    for lam in (Scalar(1), Scalar(-1), Scalar(Fraction(2, 3)), Scalar(0, 1)):
        for _ in range(20):
            g = randomToken(rng, rep.names)
            laur = rep.evalStarLaurent(g)
            spec = Mat(laur.m, laur.n,
                       [[e.evalAt(lam) for e in row] for row in laur.rows])
            assert spec == rep.evalStarAt(g, lam)


def test_inverse_evaluates_to_matrix_inverse():
    rep = rank2Rep()
    rng = random.Random(7)
    lam = Scalar(2)
    for _ in range(30):
        g = randomToken(rng, rep.names)
        prod = matMul(QI, rep.evalStarAt(g, lam),
                      rep.evalStarAt(g.inverse(), lam))
        assert prod == Mat.identity(QI, 2)


def test_extension_field_lambda():
    rep = heisRep()
    F = ExtensionField([Scalar(1), Scalar(-3), Scalar(1)])
    x = F.generator
    tok = GroupToken.word(["u", "u"])
    got = rep.evalStarAt(tok, x)
    assert got.rows[0][0] == x * x
    gotInv = rep.evalStarAt(tok.inverse(), x)
    assert gotInv.rows[0][0] == (x * x).inverse()


def test_relator_checking():
    # abelian relation holds for commuting images
    rep = Representation(1, {"a": (mat([[2]]), 0), "b": (mat([[3]]), 0)},
                         relators=[GroupToken.word(
                             ["a", "b", "a^-1", "b^-1"])])
    assert rep.dim == 1
    with pytest.raises(InputError):
        Representation(2, {"a": (mat([[1, 1], [0, 1]]), 0),
                           "b": (mat([[0, -1], [1, 0]]), 0)},
                       relators=[GroupToken.word(["a", "b", "a^-1", "b^-1"])])
    with pytest.raises(InputError):
        Representation(1, {"u": (mat([[1]]), 1)},
                       relators=[GroupToken.word(["u"])])


def test_error_paths():
    rep = heisRep()
    with pytest.raises(InputError):
        rep.evalStarAt(GroupToken.word(["z"]), Scalar(1))
    with pytest.raises(InputError):
        rep.evalStarAt(GroupToken.word(["a"]), Scalar(0))
    with pytest.raises(InputError):
        Representation(1, {"a": (mat([[0]]), 0)})
    with pytest.raises(InputError):
        evalToken(GroupToken.identity(), rep, "sideways")
    with pytest.raises(InputError):
        rep.evalPlain(GroupToken.literal(mat([[1, 0], [0, 1]]), 0),
                      Scalar(1))


def test_literal_atoms_mix_with_generators():
    rep = rank2Rep()
    lam = Scalar(3)
    lit = GroupToken.literal(mat([[0, 1], [1, 0]]), 2)
    g = GroupToken.word(["a"]) * lit
    # xi = 0 + 2
    assert rep.xiOf(g) == 2
    expected = matMul(QI, mat([[9, 0], [0, 9]]),
                      transpose(matMul(QI, mat([[1, 1], [0, 1]]),
                                       mat([[0, 1], [1, 0]]))))
    assert rep.evalStarAt(g, lam) == expected
