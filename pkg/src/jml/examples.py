"""Bundled example models: fibers, cellular self-maps, representations,
and one hand-built Delta complex.

The CW fiber data uses the twisted chain conventions of complexes.py:
incidences[k][j] lists (faceIndex, integerCoefficient, token) for the j-th
k-cell.  Self-maps use the monodromy.py convention: phiIncidences[k][j]
lists (targetIndex, integerCoefficient, translationToken).
"""

from .delta import DeltaComplex, SimplicialFiber
from .gauss import Scalar
from .linalg import Mat
from .tokens import GroupToken, Representation


def _wd(*names):
    return GroupToken.word(list(names))


IDT = GroupToken.identity()


def pointFiber():
    return SimplicialFiber(1, {}, [])


def circleFiber():
    """3-vertex circle; the loop e01 + e12 - e02 transports to a."""
    return SimplicialFiber(3, {1: [(0, 1), (1, 2), (0, 2)]},
                           [IDT, IDT, _wd("a^-1")])


def circleCW():
    """One 0-cell, one 1-cell carrying the loop a."""
    counts = [1, 1]
    incidences = {1: [[(0, 1, _wd("a")), (0, -1, IDT)]]}
    return counts, incidences


def torusCW():
    """One 0-cell, loops a and b, one 2-cell along [a, b]."""
    counts = [1, 2, 1]
    incidences = {
        1: [[(0, 1, _wd("a")), (0, -1, IDT)],
            [(0, 1, _wd("b")), (0, -1, IDT)]],
        2: [[(0, 1, IDT), (0, -1, _wd("a", "b", "a^-1")),
             (1, 1, _wd("a")), (1, -1, _wd("a", "b", "a^-1", "b^-1"))]],
    }
    return counts, incidences


def identityCWMap(counts):
    return {k: [[(j, 1, IDT)] for j in range(counts[k])]
            for k in range(len(counts))}


def rotationCWMap():
    """Rotation of the circle: homotopic to the identity, but the 1-cell
    image picks up the loop as a translation token."""
    return {0: [[(0, 1, IDT)]], 1: [[(0, 1, _wd("a"))]]}


def heisenbergCWMap():
    """a -> a, b -> a b on the torus: H_1 matrix [[1, 1], [0, 1]]."""
    return {0: [[(0, 1, IDT)]],
            1: [[(0, 1, IDT)],
                [(0, 1, IDT), (1, 1, _wd("a"))]],
            2: [[(0, 1, _wd("a"))]]}


def anosovCWMap():
    """a -> a^2 b, b -> a b on the torus: H_1 matrix [[2, 1], [1, 1]]."""
    return {0: [[(0, 1, IDT)]],
            1: [[(0, 1, IDT), (0, 1, _wd("a")), (1, 1, _wd("a", "a"))],
                [(0, 1, IDT), (1, 1, _wd("a"))]],
            2: [[(0, 1, _wd("a"))]]}


def heisenbergRelators():
    """[a, b] = 1,  u a u^-1 = a,  u b u^-1 = a b."""
    return [_wd("a", "b", "a^-1", "b^-1"),
            _wd("u", "a", "u^-1", "a^-1"),
            _wd("u", "b", "u^-1", "b^-1", "a^-1")]


def heisenbergRep(beta=Scalar(1), mu=Scalar(1)):
    """Rank-1 representations factor through a -> 1; b and u are free."""
    one = Mat(1, 1, [[Scalar(1)]])
    images = {"a": (one, 0),
              "b": (Mat(1, 1, [[beta]]), 0),
              "u": (Mat(1, 1, [[mu]]), 1)}
    return Representation(1, images, heisenbergRelators())


def heisenbergDelta():
    """One-vertex Delta model of the mapping torus of [[1, 1], [0, 1]].

    The fiber torus is triangulated with edges a, a^-1 b and diagonal b;
    crossing edges are u, b u, a u and the long diagonal a b u.  Six
    tetrahedra fill the sheared prisms over the two fiber triangles.
    Edges: 0 A=[a]  1 B0=[b]  2 B1=[a^-1 b]  3 U=[u]  4 Dyz=[b u]
           5 Dxz=[a u]  6 S=[a b u];  theta marks the level drop.
    """
    faces = {
        1: [(0, 0)] * 7,
        2: [(2, 1, 0), (0, 1, 2), (3, 4, 1), (2, 4, 3),
            (3, 5, 0), (0, 5, 3), (4, 6, 0), (5, 6, 1),
            (1, 6, 3), (0, 6, 4), (2, 6, 5), (5, 4, 2)],
        3: [(11, 7, 6, 0), (4, 2, 11, 1), (5, 9, 7, 2),
            (1, 9, 8, 3), (3, 10, 6, 4), (0, 10, 8, 5)],
    }
    tokens = [_wd("a"), _wd("b"), _wd("a^-1", "b"), _wd("u"),
              _wd("b", "u"), _wd("a", "u"), _wd("a", "b", "u")]
    theta = [0, 0, 0, 1, 1, 1, 1]
    return DeltaComplex([1, 7, 12, 6], faces, tokens, theta)


def _cells(incidences):
    """Incidence or self-map tables in document form."""
    return {str(k): [[[f, c, t.toJSON()] for (f, c, t) in cell]
                     for cell in cells]
            for k, cells in incidences.items()}


def _simplicialJSON(fiber, phi, verticals=None):
    block = {"vertices": fiber.vertices,
             "simplices": {str(p): [list(s) for s in cells]
                           for p, cells in fiber.simplices.items()},
             "edgeTokens": [t.toJSON() for t in fiber.edgeTokens],
             "phiVertexMap": list(phi)}
    if verticals is not None:
        block["verticals"] = [t.toJSON() for t in verticals]
    return block


def _deltaJSON(dc):
    return {"counts": list(dc.counts),
            "faces": {str(p): [list(f) for f in cells]
                      for p, cells in dc.faces.items()},
            "edgeTokens": [t.toJSON() for t in dc.edgeTokens],
            "theta": list(dc.theta)}


def _rankOneRep(relators=(), **xiAndValue):
    gens = {}
    for name, (value, xi) in xiAndValue.items():
        gens[name] = {"matrix": [[value]], "xi": xi}
    block = {"dim": 1, "generators": gens}
    if relators:
        block["relators"] = [r.toJSON() for r in relators]
    return block


def pointDocument():
    cw = ([1], {})
    return {
        "schema": "jml/1",
        "name": "point",
        "description": "point fiber with trivial holonomy; the torus is a "
                       "circle and everything concentrates at lambda 1",
        "representation": _rankOneRep(u=("1", 1)),
        "complexM": {"counts": cw[0], "incidences": _cells(cw[1])},
        "phiTilde": _cells(identityCWMap(cw[0])),
        "u": ["u"],
        "simplicial": _simplicialJSON(pointFiber(), [0]),
        "queries": {"lambdas": ["1", "2", "-1"]},
    }


def pointMuDocument():
    cw = ([1], {})
    return {
        "schema": "jml/1",
        "name": "point-mu",
        "description": "point fiber, u acts by 2; the spectrum sits at "
                       "lambda 1/2 after the star twist",
        "representation": _rankOneRep(u=("2", 1)),
        "complexM": {"counts": cw[0], "incidences": _cells(cw[1])},
        "phiTilde": _cells(identityCWMap(cw[0])),
        "u": ["u"],
        "simplicial": _simplicialJSON(pointFiber(), [0]),
        "queries": {"lambdas": ["1/2", "1", "2"]},
    }


def pointAnosovDocument():
    cw = ([1], {})
    return {
        "schema": "jml/1",
        "name": "point-anosov",
        "description": "point fiber, u acts by [[2,1],[1,1]]; the spectrum "
                       "is an irrational Galois orbit, queried by its class "
                       "polynomial",
        "representation": {
            "dim": 2,
            "generators": {"u": {"matrix": [["2", "1"], ["1", "1"]],
                                 "xi": 1}},
        },
        "complexM": {"counts": cw[0], "incidences": _cells(cw[1])},
        "phiTilde": _cells(identityCWMap(cw[0])),
        "u": ["u"],
        "simplicial": _simplicialJSON(pointFiber(), [0]),
        "queries": {"lambdas": ["1", "3", "-1"],
                    "classes": [["1", "-3", "1"]]},
    }


def _circleRelators():
    return [_wd("a", "u", "a^-1", "u^-1")]


def circleIdDocument():
    counts, incidences = circleCW()
    return {
        "schema": "jml/1",
        "name": "circle-id",
        "description": "circle fiber, identity map, trivial holonomy; the "
                       "torus is T^2",
        "representation": _rankOneRep(_circleRelators(),
                                      a=("1", 0), u=("1", 1)),
        "complexM": {"counts": counts, "incidences": _cells(incidences)},
        "phiTilde": _cells(identityCWMap(counts)),
        "u": ["u"],
        "simplicial": _simplicialJSON(circleFiber(), [0, 1, 2]),
        "directX": {
            "counts": [1, 2, 1],
            "incidences": {
                "1": [[[0, 1, ["a"]], [0, -1, []]],
                      [[0, 1, ["u"]], [0, -1, []]]],
                "2": [[[0, 1, []], [0, -1, ["a", "u", "a^-1"]],
                       [1, 1, ["a"]],
                       [1, -1, ["a", "u", "a^-1", "u^-1"]]]],
            },
        },
        "queries": {"lambdas": ["1", "2", "-1"]},
    }


def circleRotationDocument():
    counts, incidences = circleCW()
    return {
        "schema": "jml/1",
        "name": "circle-rotation",
        "description": "circle fiber rotated one step; homotopic to the "
                       "identity, and the answers must match circle-id",
        "representation": _rankOneRep(_circleRelators(),
                                      a=("1", 0), u=("1", 1)),
        "complexM": {"counts": counts, "incidences": _cells(incidences)},
        "phiTilde": _cells(rotationCWMap()),
        "u": ["u"],
        "simplicial": _simplicialJSON(circleFiber(), [1, 2, 0]),
        "queries": {"lambdas": ["1", "2", "-1"]},
    }


def circleNegDocument():
    counts, incidences = circleCW()
    return {
        "schema": "jml/1",
        "name": "circle-neg",
        "description": "circle fiber with holonomy -1; the local system "
                       "has no invariants and every answer is zero",
        "representation": _rankOneRep(_circleRelators(),
                                      a=("-1", 0), u=("1", 1)),
        "complexM": {"counts": counts, "incidences": _cells(incidences)},
        "phiTilde": _cells(identityCWMap(counts)),
        "u": ["u"],
        "simplicial": _simplicialJSON(circleFiber(), [0, 1, 2]),
        "queries": {"lambdas": ["1", "-1", "2"]},
    }


def heisenbergDocument():
    counts, incidences = torusCW()
    return {
        "schema": "jml/1",
        "name": "heisenberg",
        "description": "torus fiber sheared by [[1,1],[0,1]]; a nontrivial "
                       "Jordan block of size 2 at lambda 1 in degree 1",
        "representation": _rankOneRep(heisenbergRelators(),
                                      a=("1", 0), b=("1", 0), u=("1", 1)),
        "complexM": {"counts": counts, "incidences": _cells(incidences)},
        "phiTilde": _cells(heisenbergCWMap()),
        "u": ["u"],
        "delta": _deltaJSON(heisenbergDelta()),
        "queries": {"lambdas": ["1", "-1", "2"]},
    }


def anosovRelators():
    """[a, b] = 1,  u a u^-1 = a^2 b,  u b u^-1 = a b."""
    return [_wd("a", "b", "a^-1", "b^-1"),
            _wd("u", "a", "u^-1", "b^-1", "a^-1", "a^-1"),
            _wd("u", "b", "u^-1", "b^-1", "a^-1")]


def anosovDocument():
    counts, incidences = torusCW()
    return {
        "schema": "jml/1",
        "name": "anosov",
        "description": "torus fiber stretched by [[2,1],[1,1]]; the degree "
                       "1 spectrum is the class of t^2 - 3t + 1",
        "representation": _rankOneRep(anosovRelators(),
                                      a=("1", 0), b=("1", 0), u=("1", 1)),
        "complexM": {"counts": counts, "incidences": _cells(incidences)},
        "phiTilde": _cells(anosovCWMap()),
        "u": ["u"],
        "queries": {"lambdas": ["1", "3", "-1"],
                    "classes": [["1", "-3", "1"]]},
    }


def splitBDocument():
    counts, incidences = circleCW()
    return {
        "schema": "jml/1",
        "name": "split-b",
        "description": "circle fiber, identity map, rank-2 holonomy "
                       "diag(1,-1) with non-scalar u action diag(2,3); only "
                       "the first coordinate survives, at lambda 1/2",
        "representation": {
            "dim": 2,
            "generators": {
                "a": {"matrix": [["1", "0"], ["0", "-1"]], "xi": 0},
                "u": {"matrix": [["2", "0"], ["0", "3"]], "xi": 1},
            },
            "relators": [r.toJSON() for r in _circleRelators()],
        },
        "complexM": {"counts": counts, "incidences": _cells(incidences)},
        "phiTilde": _cells(identityCWMap(counts)),
        "u": ["u"],
        "simplicial": _simplicialJSON(circleFiber(), [0, 1, 2]),
        "queries": {"lambdas": ["1/2", "1/3", "1"]},
    }


def corruptPhiTildeDocument():
    doc = heisenbergDocument()
    doc["name"] = "corrupt-phitilde-heisenberg"
    doc["description"] = ("heisenberg with the a-translate dropped from the "
                          "image of b; still a chain map, but the monodromy "
                          "loses its Jordan block and the Delta model "
                          "disagrees")
    doc["phiTilde"]["1"][1] = [[1, 1, ["a"]]]
    return doc


def corruptBoundaryDocument():
    counts, incidences = torusCW()
    doc = {
        "schema": "jml/1",
        "name": "corrupt-boundary-heisenberg",
        "description": "heisenberg at b -> 2 with a doubled face "
                       "coefficient; the boundary no longer squares to zero",
        "representation": _rankOneRep(heisenbergRelators(),
                                      a=("1", 0), b=("2", 0), u=("1", 1)),
        "complexM": {"counts": counts, "incidences": _cells(incidences)},
        "phiTilde": _cells(heisenbergCWMap()),
        "u": ["u"],
        "queries": {"lambdas": ["1"]},
    }
    doc["complexM"]["incidences"]["2"][0][2] = [1, 2, ["a"]]
    return doc


def corruptChainMapDocument():
    doc = splitBDocument()
    doc["name"] = "corrupt-chainmap-splitb"
    doc["description"] = ("split-b with the 1-cell image doubled; d A and "
                          "A d no longer agree, so the data is not a "
                          "cellular map")
    doc["phiTilde"]["1"][0] = [[0, 2, []]]
    return doc


def corruptDeltaFlatnessDocument():
    counts, incidences = torusCW()
    doc = {
        "schema": "jml/1",
        "name": "corrupt-delta-flatness",
        "description": "heisenberg at b -> 2 with the crossing edge token "
                       "replaced by b u; the edge tokens fail flatness once "
                       "the representation can see b",
        "representation": _rankOneRep(heisenbergRelators(),
                                      a=("1", 0), b=("2", 0), u=("1", 1)),
        "complexM": {"counts": counts, "incidences": _cells(incidences)},
        "phiTilde": _cells(heisenbergCWMap()),
        "u": ["u"],
        "delta": _deltaJSON(heisenbergDelta()),
        "queries": {"lambdas": ["1"]},
    }
    doc["delta"]["edgeTokens"][3] = ["b", "u"]
    return doc


def corruptDirectXDocument():
    doc = circleIdDocument()
    doc["name"] = "corrupt-directx-circle"
    doc["description"] = ("circle-id with a direct total-space model whose "
                          "2-cell crosses the torus direction twice; its "
                          "divisors disagree with the cone")
    doc["directX"] = {
        "counts": [1, 2, 1],
        "incidences": {
            "1": [[[0, 1, ["a"]], [0, -1, []]],
                  [[0, 1, ["u"]], [0, -1, []]]],
            "2": [[[0, 1, []], [0, -1, ["a", "u", "u", "a^-1"]],
                   [1, 1, ["a"]], [1, -1, ["a", "u", "u", "a^-1", "u^-1",
                                           "u^-1"]]]],
        },
    }
    return doc


BUNDLED = {
    "point": pointDocument,
    "point-mu": pointMuDocument,
    "point-anosov": pointAnosovDocument,
    "circle-id": circleIdDocument,
    "circle-rotation": circleRotationDocument,
    "circle-neg": circleNegDocument,
    "heisenberg": heisenbergDocument,
    "anosov": anosovDocument,
    "split-b": splitBDocument,
}

CORRUPTED = {
    "corrupt-phitilde-heisenberg": corruptPhiTildeDocument,
    "corrupt-boundary-heisenberg": corruptBoundaryDocument,
    "corrupt-chainmap-splitb": corruptChainMapDocument,
    "corrupt-delta-flatness": corruptDeltaFlatnessDocument,
    "corrupt-directx-circle": corruptDirectXDocument,
}


def exampleNames():
    return sorted(BUNDLED) + sorted(CORRUPTED)


def exampleDocument(name):
    from .errors import InputError
    maker = BUNDLED.get(name) or CORRUPTED.get(name)
    if maker is None:
        raise InputError("unknown example %r; available: %s"
                         % (name, ", ".join(exampleNames())))
    return maker()
