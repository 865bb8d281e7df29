import random
from fractions import Fraction

from jml.gauss import ExtensionField, QI, Scalar
from jml.linalg import (Mat, blockMat, det, extendToComplement, hcat, inverse,
                        kernelBasis, matMul, matSub, matVec, rank, rowReduce,
                        solve, solveMany, transpose, vcat)


def randScalar(rng):
    return Scalar(Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                  Fraction(rng.randint(-6, 6), rng.randint(1, 4)))


def randMat(rng, m, n, field=QI, sparse=0.3):
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            if rng.random() < sparse:
                row.append(field.zero)
            else:
                row.append(field.embed(randScalar(rng))
                           if hasattr(field, "embed") else randScalar(rng))
        rows.append(row)
    return Mat(m, n, rows)


def test_mul_identity_assoc():
    rng = random.Random(11)
    for _ in range(30):
        m, k, n, p = (rng.randint(0, 5) for _ in range(4))
        a = randMat(rng, m, k)
        b = randMat(rng, k, n)
        c = randMat(rng, n, p)
        assert matMul(QI, matMul(QI, a, b), c) == matMul(QI, a, matMul(QI, b, c))
        assert matMul(QI, Mat.identity(QI, m), a) == a
        assert matMul(QI, a, Mat.identity(QI, k)) == a


def test_rank_nullity_and_kernel():
    rng = random.Random(22)
    for _ in range(60):
        m, n = rng.randint(0, 6), rng.randint(0, 6)
        a = randMat(rng, m, n)
        ker = kernelBasis(QI, a)
        assert rank(a) + len(ker) == n
        for v in ker:
            assert all(not x for x in matVec(QI, a, v))
        if ker:
            assert rank(Mat.fromRows(ker, n)) == len(ker)


def test_solve_and_solveMany():
    rng = random.Random(33)
    for _ in range(40):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        a = randMat(rng, m, n)
        x = [randScalar(rng) for _ in range(n)]
        b = matVec(QI, a, x)
        sol = solve(QI, a, b)
        assert sol is not None
        assert matVec(QI, a, sol) == b
        big = randMat(rng, n, 3)
        rhs = matMul(QI, a, big)
        solM = solveMany(QI, a, rhs)
        assert solM is not None
        assert matMul(QI, a, solM) == rhs


def test_solve_detects_inconsistent():
    a = Mat.fromRows([[Scalar(1), Scalar(2)], [Scalar(2), Scalar(4)]])
    assert solve(QI, a, [Scalar(1), Scalar(3)]) is None


def test_inverse_and_det():
    rng = random.Random(44)
    done = 0
    while done < 25:
        n = rng.randint(1, 5)
        a = randMat(rng, n, n, sparse=0.15)
        if not det(QI, a):
            continue
        done += 1
        ai = inverse(QI, a)
        assert matMul(QI, a, ai) == Mat.identity(QI, n)
        b = randMat(rng, n, n, sparse=0.15)
        assert det(QI, matMul(QI, a, b)) == det(QI, a) * det(QI, b)


def test_det_transpose_and_singular():
    rng = random.Random(55)
    for _ in range(25):
        n = rng.randint(0, 5)
        a = randMat(rng, n, n)
        assert det(QI, a) == det(QI, transpose(a))
    sing = Mat.fromRows([[Scalar(1), Scalar(2)], [Scalar(2), Scalar(4)]])
    assert not det(QI, sing)


def test_extension_field_linalg():
    F = ExtensionField([Scalar(1), Scalar(-3), Scalar(1)])
    x = F.generator
    a = Mat.fromRows([[x, F.one], [F.one, x - 3]])
    # det = x(x-3) - 1 = x^2 - 3x - 1 = -2 (since x^2 = 3x - 1)
    assert det(F, a) == F.embed(-2)
    ai = inverse(F, a)
    assert matMul(F, a, ai) == Mat.identity(F, 2)
    sing = Mat.fromRows([[x, F.one], [x * x, x]])
    assert rank(sing) == 1
    ker = kernelBasis(F, sing)
    assert len(ker) == 1
    assert all(not c for c in matVec(F, sing, ker[0]))


def test_empty_shapes():
    a = Mat.zero(QI, 0, 4)
    assert rank(a) == 0
    assert len(kernelBasis(QI, a)) == 4
    b = Mat.zero(QI, 3, 0)
    prod = matMul(QI, b, Mat.zero(QI, 0, 2))
    assert prod == Mat.zero(QI, 3, 2)
    assert det(QI, Mat.zero(QI, 0, 0)) == Scalar(1)
    assert solve(QI, Mat.zero(QI, 0, 3), []) == [Scalar(0)] * 3


def test_block_assembly():
    rng = random.Random(66)
    a = randMat(rng, 2, 3)
    b = randMat(rng, 2, 2)
    c = randMat(rng, 1, 3)
    g = blockMat(QI, [[a, b], [c, None]], [2, 1], [3, 2])
    assert g.m == 3 and g.n == 5
    assert g.rows[0][:3] == a.rows[0] and g.rows[0][3:] == b.rows[0]
    assert g.rows[2][:3] == c.rows[0]
    assert all(not x for x in g.rows[2][3:])
    assert hcat([a, b]) == blockMat(QI, [[a, b]], [2], [3, 2])
    assert vcat([a, c]) == blockMat(QI, [[a], [c]], [2, 1], [3])


def test_rowreduce_idempotent_and_complement():
    rng = random.Random(77)
    for _ in range(20):
        a = randMat(rng, 4, 5)
        r, piv = rowReduce(a)
        r2, piv2 = rowReduce(r)
        assert r == r2 and piv == piv2
    base = [[Scalar(1), Scalar(0), Scalar(0)]]
    cands = [[Scalar(2), Scalar(0), Scalar(0)],
             [Scalar(0), Scalar(1), Scalar(0)],
             [Scalar(1), Scalar(1), Scalar(0)],
             [Scalar(0), Scalar(0), Scalar(5)]]
    assert extendToComplement(QI, base, cands, 3) == [1, 3]
