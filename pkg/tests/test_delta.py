from fractions import Fraction

import pytest

from jml.delta import (DeltaComplex, SimplicialFiber, buildTorusDelta,
                       inducedSubdividedMap, lamField, selfMapOffender,
                       subdivideFiber, torusDeltaWithSubdivision)
from jml.errors import InputError
from jml.gauss import Scalar
from jml.linalg import Mat, kernelBasis, matAdd, matMul, rank
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


def rep2(a, xiA, u, xiU):
    images = {"a": (Mat.fromRows(a), xiA), "u": (Mat.fromRows(u), xiU)}
    return Representation(2, images)


def pointFiber():
    return SimplicialFiber(1, {}, [])


def circle3():
    # tokens chosen so the loop e01 + e12 - e02 transports to a
    return SimplicialFiber(3, {1: [(0, 1), (1, 2), (0, 2)]},
                           [IDT, IDT, wd("a^-1")])


def cohomDims(dc, rep, lam):
    ds = dc.cochainMatrices(rep, lam)
    field, n = lamField(lam), rep.dim
    dims = []
    for k in range(dc.top + 1):
        z = len(kernelBasis(field, ds[k])) if k < dc.top \
            else dc.counts[k] * n
        b = rank(ds[k - 1]) if k >= 1 else 0
        dims.append(z - b)
    return dims


def test_point_fiber_gives_circle():
    dc = buildTorusDelta(pointFiber(), [0], UTOK)
    assert dc.counts == [1, 1]
    assert dc.edgeTokens == [UTOK]
    rep = rep1(u=(2, 1))
    dc.validate(rep)
    assert dc.theta == [1]
    assert cohomDims(dc, rep, sc(Fraction(1, 2))) == [1, 1]
    assert cohomDims(dc, rep, sc(1)) == [0, 0]


def test_torus_prism_counts_and_trivial_dims():
    dc = buildTorusDelta(circle3(), [0, 1, 2], UTOK)
    assert dc.counts == [3, 9, 6]
    rep = rep1(a=(1, 0), u=(1, 1))
    dc.validate(rep)
    assert sum(dc.theta) == 6
    assert dc.theta == [rep.xiOf(tok) for tok in dc.edgeTokens]
    assert dc.thetaSquareOffenders() == []
    assert cohomDims(dc, rep, sc(1)) == [1, 2, 1]
    assert cohomDims(dc, rep, sc(2)) == [0, 0, 0]


def test_torus_prism_rank_two_euler():
    mats = ([[sc(1), sc(0)], [sc(0), sc(-1)]],
            [[sc(2), sc(0)], [sc(0), sc(3)]])
    rep = rep2(mats[0], 0, mats[1], 1)
    dc = buildTorusDelta(circle3(), [0, 1, 2], UTOK)
    for lam in (sc(1), sc(Fraction(1, 2)), sc(0, 1)):
        dims = cohomDims(dc, rep, lam)
        assert dims[0] - dims[1] + dims[2] == 0


def test_cup_theta_leibniz():
    dc = buildTorusDelta(circle3(), [0, 1, 2], UTOK)
    for rep in (rep1(a=(1, 0), u=(1, 1)), rep1(a=(-1, 0), u=(3, 1))):
        for lam in (sc(1), sc(2)):
            ds = dc.cochainMatrices(rep, lam)
            cups = dc.cupThetaMatrices(rep, lam)
            field = lamField(lam)
            for p in range(dc.top - 1):
                both = matAdd(matMul(field, ds[p + 1], cups[p]),
                              matMul(field, cups[p + 1], ds[p]))
                assert both.isZero()


def test_rotation_needs_subdivision():
    m = circle3()
    phi = [1, 2, 0]
    off = selfMapOffender(m, phi)
    assert off is not None and off[1] == (1, 2)
    with pytest.raises(InputError, match=r"\(1, 2\)"):
        buildTorusDelta(m, phi, UTOK)
    dc, subdivided = torusDeltaWithSubdivision(m, phi, UTOK)
    assert subdivided
    assert dc.counts == [6, 18, 12]
    rep = rep1(a=(1, 0), u=(1, 1))
    dc.validate(rep)
    assert cohomDims(dc, rep, sc(1)) == [1, 2, 1]
    assert cohomDims(dc, rep, sc(3)) == [0, 0, 0]


def test_subdivision_transports_the_loop():
    sd, labels = subdivideFiber(circle3())
    assert sd.vertices == 6 and sd.count(1) == 6
    assert labels == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
    rep = rep1(a=(5, 0), u=(1, 1))
    walk = (sd.edgeToken(0, 3) * sd.edgeToken(3, 1) * sd.edgeToken(1, 4)
            * sd.edgeToken(4, 2) * sd.edgeToken(2, 5) * sd.edgeToken(5, 0))
    assert rep.plainProduct(walk) == Mat(1, 1, [[sc(5)]])


def test_identity_prism_with_noncommuting_rep_is_not_flat():
    # propagated verticals force rho(a) rho(u) = rho(u) rho(a) on the
    # leftover cycle edge; a noncommuting rep must be rejected
    rep = rep2([[sc(1), sc(1)], [sc(0), sc(1)]],
               0, [[sc(1), sc(0)], [sc(0), sc(2)]], 1)
    dc = buildTorusDelta(circle3(), [0, 1, 2], UTOK)
    with pytest.raises(InputError, match="not flat"):
        dc.validate(rep)


def test_hand_built_flatness_violation():
    faces = {1: [(0, 0)] * 3, 2: [(1, 2, 0)]}
    tokens = [wd("a"), wd("b"), wd("c")]
    dc = DeltaComplex([1, 3, 1], faces, tokens)
    rep = rep1(a=(2, 0), b=(3, 0), c=(5, 0))
    with pytest.raises(InputError, match="not flat on 2-simplex 0"):
        dc.validate(rep)
    good = DeltaComplex([1, 3, 1], faces, [wd("a"), wd("b"), wd("a", "b")])
    good.validate(rep)
    assert good.frontEdge(2, 0) == 0 and good.faces[2][0][0] == 1


def test_theta_must_be_cohomologous_to_xi():
    faces = {1: [(1, 0), (1, 0)]}
    tokens = [UTOK, IDT]
    rep = rep1(u=(2, 1))
    DeltaComplex([2, 2], faces, tokens, [2, 1]).validate(rep)
    with pytest.raises(InputError, match="not cohomologous"):
        DeltaComplex([2, 2], faces, tokens, [2, 0]).validate(rep)


def test_structural_checks():
    with pytest.raises(InputError, match="face index out of range"):
        DeltaComplex([1, 1], {1: [(0, 1)]}, [UTOK])
    with pytest.raises(InputError, match="edge tokens"):
        DeltaComplex([1, 2], {1: [(0, 0), (0, 0)]}, [UTOK])
    with pytest.raises(InputError, match="not strictly increasing"):
        SimplicialFiber(2, {1: [(1, 1)]}, [IDT])
    with pytest.raises(InputError, match="closed under faces"):
        SimplicialFiber(3, {1: [(0, 1)], 2: [(0, 1, 2)]}, [IDT])


def test_self_map_image_must_be_a_simplex():
    path = SimplicialFiber(4, {1: [(0, 1), (1, 2), (2, 3)]},
                           [IDT, IDT, IDT])
    off = selfMapOffender(path, [0, 2, 3, 3])
    assert off is not None and "does not send" in off[2]
    with pytest.raises(InputError, match="simplex"):
        buildTorusDelta(path, [0, 2, 3, 3], UTOK)


def test_collapsing_map_rejected_even_after_subdivision():
    m = circle3()
    with pytest.raises(InputError, match="collapses"):
        torusDeltaWithSubdivision(m, [0, 0, 1], UTOK)
