import random
from fractions import Fraction

import pytest

from jml.delta import DeltaComplex, buildTorusDelta, torusDeltaWithSubdivision
from jml.errors import InputError
from jml.examples import circleFiber, heisenbergDelta, heisenbergRep, pointFiber
from jml.gauss import ExtensionField, Scalar
from jml.linalg import Mat, matVec
from jml.massey import (MasseyAnalysis, deltaROperator, masseyLength,
                        masseyReport)
from jml.tokens import GroupToken, Representation


def sc(x, im=0):
    return Scalar(x, im)


def wd(*names):
    return GroupToken.word(list(names))


IDT = GroupToken.identity()
UTOK = wd("u")


def rep1(**gens):
    images = {n: (Mat(1, 1, [[sc(v)]]), xi) for n, (v, xi) in gens.items()}
    return Representation(1, images)


def torusDelta():
    return buildTorusDelta(circleFiber(), [0, 1, 2], UTOK)


def circleDelta():
    return buildTorusDelta(pointFiber(), [0], UTOK)


def checkTower(an, k, witness):
    assert not any(matVec(an.field, an.ds[k], witness[0]))
    for i in range(1, len(witness)):
        lhs = matVec(an.field, an.ds[k], witness[i])
        rhs = matVec(an.field, an.cups[k], witness[i - 1])
        assert lhs == rhs
    value = matVec(an.field, an.cups[k], witness[-1])
    assert not any(matVec(an.field, an.ds[k + 1], value))


def test_torus_lengths():
    rep = rep1(a=(1, 0), u=(1, 1))
    an = MasseyAnalysis(torusDelta(), rep, sc(1))
    assert [an.masseyLength(k)[0] for k in range(3)] == [1, 1, 0]
    assert [an.hDim(k) for k in range(3)] == [1, 2, 1]
    flat = MasseyAnalysis(torusDelta(), rep, sc(2))
    assert [flat.masseyLength(k)[0] for k in range(3)] == [0, 0, 0]
    assert [flat.hDim(k) for k in range(3)] == [0, 0, 0]


def test_rotation_model_matches_torus():
    rep = rep1(a=(1, 0), u=(1, 1))
    dc, subdivided = torusDeltaWithSubdivision(circleFiber(), [1, 2, 0],
                                               UTOK)
    assert subdivided
    an = MasseyAnalysis(dc, rep, sc(1))
    assert [an.masseyLength(k)[0] for k in range(3)] == [1, 1, 0]


def test_circle_lengths_follow_holonomy():
    rep = rep1(u=(2, 1))
    dc = circleDelta()
    an = MasseyAnalysis(dc, rep, sc(Fraction(1, 2)))
    assert [an.masseyLength(k)[0] for k in range(2)] == [1, 0]
    dead = MasseyAnalysis(dc, rep, sc(1))
    assert [dead.masseyLength(k)[0] for k in range(2)] == [0, 0]


def test_extension_field_class_point():
    rep = Representation(
        2, {"u": (Mat.fromRows([[sc(2), sc(1)], [sc(1), sc(1)]]), 1)})
    ext = ExtensionField([sc(1), sc(-3), sc(1)])  # t^2 - 3t + 1
    an = MasseyAnalysis(circleDelta(), rep, ext.generator)
    assert an.hDim(0) == 1 and an.masseyLength(0)[0] == 1
    off = MasseyAnalysis(circleDelta(), rep, sc(1))
    assert off.hDim(0) == 0 and off.masseyLength(0)[0] == 0


def test_heisenberg_degree_one_length_two():
    an = MasseyAnalysis(heisenbergDelta(), heisenbergRep(), sc(1))
    assert [an.hDim(k) for k in range(4)] == [1, 2, 2, 1]
    assert [an.masseyLength(k)[0] for k in range(4)] == [1, 2, 1, 0]
    assert (an.mzDim(1, 2), an.mbDim(1, 2), an.mhDim(1, 2)) == (2, 1, 1)
    assert an.mhDim(1, 3) == 0
    mk, witness = an.masseyLength(1)
    assert mk == 2 and len(witness) == 2
    checkTower(an, 1, witness)
    gone = MasseyAnalysis(heisenbergDelta(), heisenbergRep(), sc(-1))
    assert [gone.masseyLength(k)[0] for k in range(4)] == [0, 0, 0, 0]


def test_consistency_flags_hold():
    cases = [
        (torusDelta(), rep1(a=(1, 0), u=(1, 1)), sc(1)),
        (heisenbergDelta(), heisenbergRep(), sc(1)),
        (heisenbergDelta(), heisenbergRep(sc(1), sc(2)), sc(Fraction(1, 2))),
    ]
    for dc, rep, lam in cases:
        an = MasseyAnalysis(dc, rep, lam)
        for r in (1, 2, 3):
            assert all(an.consistencyFlags(r).values())


def test_tower_space_monotonicity():
    for dc, rep in ((torusDelta(), rep1(a=(1, 0), u=(1, 1))),
                    (heisenbergDelta(), heisenbergRep())):
        an = MasseyAnalysis(dc, rep, sc(1))
        for k in range(an.top + 1):
            for r in (1, 2, 3):
                assert an.mzDim(k, r + 1) <= an.mzDim(k, r)
                assert an.mbDim(k, r + 1) >= an.mbDim(k, r)
                assert an.mbInsideMz(k, r)


def test_theta_gauge_choice_does_not_change_lengths():
    rng = random.Random(11)
    faces = {1: [(1, 0), (1, 0)]}
    tokens = [UTOK, IDT]
    rep = rep1(u=(3, 1))
    lam = sc(Fraction(1, 3))
    base = MasseyAnalysis(DeltaComplex([2, 2], faces, tokens), rep, lam)
    lengths = [base.masseyLength(k)[0] for k in range(2)]
    assert lengths == [1, 0]
    for _ in range(5):
        d = rng.randint(-3, 3)
        gauged = DeltaComplex([2, 2], faces, tokens, [1 + d, d])
        an = MasseyAnalysis(gauged, rep, lam)
        assert [an.masseyLength(k)[0] for k in range(2)] == lengths


def test_module_level_operations():
    dc, rep, lam = heisenbergDelta(), heisenbergRep(), sc(1)
    mk, report = masseyLength(dc, rep, lam, 1)
    assert mk == 2 and report["hDim"] == 2 and report["cutoff"] == 3
    assert report["spaces"][2] == (2, 1, 1)
    mats, flags = deltaROperator(dc, rep, lam, 2)
    assert not mats[1].isZero() and all(flags.values())
    full = masseyReport(dc, rep, lam)
    assert full["lengths"] == [1, 2, 1, 0]
    assert all(all(f.values()) for f in full["flags"].values())


def test_theta_square_precondition():
    faces = {1: [(0, 0), (0, 0)], 2: [(0, 1, 0)]}
    dc = DeltaComplex([1, 2, 1], faces, [UTOK, wd("u", "u")])
    rep = rep1(u=(2, 1))
    dc.validate(rep)
    assert dc.thetaSquareOffenders() == [0]
    with pytest.raises(InputError, match="cup-square"):
        MasseyAnalysis(dc, rep, sc(1))


def test_lambda_zero_rejected():
    with pytest.raises(InputError, match="lambda != 0"):
        MasseyAnalysis(circleDelta(), rep1(u=(2, 1)), sc(0))
