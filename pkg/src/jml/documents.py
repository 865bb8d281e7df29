"""Input documents (schema jml/1).

A document bundles everything one verification run needs:

  representation   dim, generator -> (exact matrix, xi), relators
  complexM         twisted CW chain data of the fiber (counts, incidences)
  phiTilde         cellular self-map data over the fiber complex
  u                the distinguished crossing generator (xi must be 1)
  simplicial       optional simplicial fiber + vertex self-map (+verticals)
  delta            optional direct Delta model of the total space
  directX          optional direct CW model of the total space over L
  queries          default lambdas, class polynomials, degrees

Scalars are exact strings ("1", "-1/2", "2+3*i"), tokens are word lists in
the generators ("a", "b^-1", or literal {"matrix": ..., "xi": ...} items),
and incidence tables are triples [face, coefficient, token].
"""

import json

from .delta import DeltaComplex, SimplicialFiber
from .errors import InputError
from .gauss import QI, parseScalar
from .linalg import Mat
from .poly import Poly
from .tokens import GroupToken, Representation

SCHEMA = "jml/1"


def _token(items, where):
    if not isinstance(items, list):
        raise InputError("%s: token must be a word list" % where)
    try:
        return GroupToken.fromJSON(items)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("%s: bad token %r (%s)" % (where, items, exc))


def _scalar(text, where):
    try:
        return parseScalar(text if isinstance(text, str) else str(text))
    except (ValueError, TypeError) as exc:
        raise InputError("%s: bad scalar %r (%s)" % (where, text, exc))


def _matrix(rows, dim, where):
    if not isinstance(rows, list) or len(rows) != dim \
            or any(not isinstance(r, list) or len(r) != dim for r in rows):
        raise InputError("%s: matrix must be %dx%d" % (where, dim, dim))
    return Mat(dim, dim, [[_scalar(x, where) for x in r] for r in rows])


def parseRepresentation(block):
    if not isinstance(block, dict):
        raise InputError("representation block must be an object")
    dim = block.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise InputError("representation dim must be a positive integer")
    gens = block.get("generators")
    if not isinstance(gens, dict) or not gens:
        raise InputError("representation needs a generators table")
    images = {}
    for name, spec in gens.items():
        where = "generator %r" % name
        if not isinstance(spec, dict) or "matrix" not in spec:
            raise InputError("%s: need {matrix, xi}" % where)
        mat = _matrix(spec["matrix"], dim, where)
        xi = spec.get("xi", 0)
        if not isinstance(xi, int):
            raise InputError("%s: xi must be an integer" % where)
        images[name] = (mat, xi)
    relators = [_token(r, "relator %d" % i)
                for i, r in enumerate(block.get("relators", []))]
    return Representation(dim, images, relators)


def _parseIncidences(block, where):
    counts = block.get("counts")
    if not isinstance(counts, list) or not counts \
            or any(not isinstance(c, int) or c < 0 for c in counts):
        raise InputError("%s: counts must be nonnegative integers" % where)
    raw = block.get("incidences", {})
    incidences = {}
    for key, cells in raw.items():
        k = int(key)
        if k < 1 or k >= len(counts):
            raise InputError("%s: incidence degree %d out of range"
                             % (where, k))
        parsed = []
        for j, cell in enumerate(cells):
            row = []
            for item in cell:
                if not isinstance(item, list) or len(item) != 3:
                    raise InputError("%s: incidence items are "
                                     "[face, coefficient, token]" % where)
                f, c, tok = item
                row.append((int(f), int(c),
                            _token(tok, "%s cell (%d,%d)" % (where, k, j))))
            parsed.append(row)
        incidences[k] = parsed
    return counts, incidences


def _parsePhi(block, where):
    out = {}
    for key, cells in block.items():
        k = int(key)
        parsed = []
        for j, cell in enumerate(cells):
            row = []
            for item in cell:
                if not isinstance(item, list) or len(item) != 3:
                    raise InputError("%s: image items are "
                                     "[target, coefficient, token]" % where)
                t, c, tok = item
                row.append((int(t), int(c),
                            _token(tok, "%s cell (%d,%d)" % (where, k, j))))
            parsed.append(row)
        out[k] = parsed
    return out


def _parseSimplicial(block):
    vertices = block.get("vertices")
    if not isinstance(vertices, int) or vertices < 1:
        raise InputError("simplicial: vertices must be a positive integer")
    simplices = {int(k): [tuple(s) for s in v]
                 for k, v in block.get("simplices", {}).items()}
    tokens = [_token(t, "simplicial edge %d" % i)
              for i, t in enumerate(block.get("edgeTokens", []))]
    fiber = SimplicialFiber(vertices, simplices, tokens)
    phi = block.get("phiVertexMap")
    if not isinstance(phi, list) or len(phi) != vertices:
        raise InputError("simplicial: phiVertexMap must list one image "
                         "per vertex")
    verticals = block.get("verticals")
    if verticals is not None:
        verticals = [_token(t, "vertical %d" % i)
                     for i, t in enumerate(verticals)]
    return fiber, [int(v) for v in phi], verticals


def _parseDelta(block):
    counts = block.get("counts")
    if not isinstance(counts, list):
        raise InputError("delta: counts must be a list")
    faces = {int(k): [tuple(int(i) for i in f) for f in v]
             for k, v in block.get("faces", {}).items()}
    tokens = [_token(t, "delta edge %d" % i)
              for i, t in enumerate(block.get("edgeTokens", []))]
    theta = block.get("theta")
    return DeltaComplex(counts, faces, tokens, theta)


def _parseQueries(block):
    lambdas = [_scalar(s, "queries.lambdas") for s in block.get("lambdas",
                                                                [])]
    classes = []
    for coeffs in block.get("classes", []):
        poly = Poly(QI, [_scalar(c, "queries.classes") for c in coeffs])
        if poly.degree() < 1:
            raise InputError("queries.classes: class polynomials must have "
                             "degree at least 1")
        classes.append(poly)
    degrees = block.get("degrees")
    if degrees is not None:
        degrees = [int(d) for d in degrees]
    return lambdas, classes, degrees


class Document:
    """Parsed and structurally validated jml/1 document."""

    def __init__(self, data):
        if not isinstance(data, dict):
            raise InputError("document must be a JSON object")
        if data.get("schema") != SCHEMA:
            raise InputError("unsupported schema %r; expected %r"
                             % (data.get("schema"), SCHEMA))
        self.name = data.get("name", "unnamed")
        self.description = data.get("description", "")
        if "representation" not in data:
            raise InputError("document needs a representation block")
        self.rep = parseRepresentation(data["representation"])
        self.u = _token(data.get("u", ["u"]), "u")
        if self.rep.xiOf(self.u) != 1:
            raise InputError("u must have xi=1")
        if "complexM" not in data:
            raise InputError("document needs a complexM block")
        self.counts, self.incidences = _parseIncidences(data["complexM"],
                                                        "complexM")
        self.phiTilde = _parsePhi(data["phiTilde"], "phiTilde") \
            if "phiTilde" in data else None
        if "simplicial" in data:
            self.simplicial = _parseSimplicial(data["simplicial"])
        else:
            self.simplicial = None
        self.delta = _parseDelta(data["delta"]) if "delta" in data else None
        self.directX = _parseIncidences(data["directX"], "directX") \
            if "directX" in data else None
        q = data.get("queries", {})
        self.lambdas, self.classes, self.degrees = _parseQueries(q)
        self.raw = data


def parseDocument(data):
    return Document(data)


def loadsDocument(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("document is not valid JSON: %s" % exc)
    return Document(data)


def loadDocument(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loadsDocument(fh.read())
