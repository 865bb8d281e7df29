"""End-to-end verification over a parsed document.

Three pipelines answer the same question from independent directions:

  P1 monodromy   twisted fiber homology over K, the chain map of the
                 self-map, the induced matrices, their Jordan data.
  P2 torus       the algebraic cone over L = K[t, t^-1], torsion divisors
                 of the torus homology, nilpotency orders.
  P3 products    the Delta model of the torus (given directly or built as
                 the prism over a simplicial fiber), Massey tower lengths
                 per specialization.

For every queried degree k and specialization (a lambda in K or a
squarefree class polynomial) the three answers

  jordan  largest Jordan block of phiStar_k at the specialization
  nil     largest (t - lambda)-multiplicity among divisors of H_k(X; L)
  massey  longest nonvanishing product tower on H^k(X; rho_lambda)

must agree wherever each is defined; runVerification also replays the
degree-aligned divisor match, the exactness and specialization dimension
counts, the cone-versus-Delta dimension comparison, and the optional
direct total-space model.  Any failed cross-check raises
DisagreementError with the full report attached.
"""

import warnings

from .complexes import buildComplex, homologyOverK, homologyOverL
from .delta import torusDeltaWithSubdivision
from .errors import DisagreementError, InputError
from .gauss import QI, ExtensionField, Scalar, formatScalar
from .massey import MasseyAnalysis
from .monodromy import (buildChainMapA, inducedOnHomology, jordanSpectrum,
                        phiCircSplit)
from .poly import formatPoly
from .torus import (buildCone, coneExactnessCheck, prop53Check,
                    torsionAndNil, uctSpecializationCheck)

ALIGNMENT = "monodromy degree k <-> torus homology degree k"
ALL_PIPELINES = ("P1", "P2", "P3")


def _lamKey(lam):
    if isinstance(lam, Scalar):
        return formatScalar(lam)
    return "root of " + formatPoly(_modulusPoly(lam.field))


def _modulusPoly(field):
    from .poly import Poly
    return Poly(QI, list(field.modulus))


def _checkLambda(lam):
    if not lam:
        raise InputError("lambda must be nonzero")
    return lam


class PipelineRun:
    """Caches every intermediate object computed for one document."""

    def __init__(self, doc, pipelines=ALL_PIPELINES):
        self.doc = doc
        self.pipelines = tuple(pipelines)
        for p in self.pipelines:
            if p not in ALL_PIPELINES:
                raise InputError("unknown pipeline %r; available: P1, P2, P3"
                                 % (p,))
        self._cx = {}
        self._h = {}
        self._a = {}
        self._phiStar = {}
        self._coneDims = {}
        self._massey = {}
        self._spectrum = None
        self._torsion = None
        self._coneL = None
        self._deltaModel = False  # not resolved yet; None means unavailable

    # ---- fiber side, specialized at a lambda ----

    def _needPhi(self):
        if self.doc.phiTilde is None:
            raise InputError("document has no self-map data (phiTilde)")

    def cxAt(self, lam):
        key = _lamKey(lam)
        if key not in self._cx:
            self._cx[key] = buildComplex(self.doc.counts, self.doc.incidences,
                                         self.doc.rep, "star-at-lambda",
                                         _checkLambda(lam))
        return self._cx[key]

    def homologyAt(self, lam):
        key = _lamKey(lam)
        if key not in self._h:
            self._h[key] = homologyOverK(self.cxAt(lam))
        return self._h[key]

    def aMapsAt(self, lam):
        self._needPhi()
        key = _lamKey(lam)
        if key not in self._a:
            self._a[key] = buildChainMapA(self.cxAt(lam), self.doc.rep,
                                          self.doc.phiTilde, self.doc.u)
        return self._a[key]

    def phiStarAt(self, lam):
        key = _lamKey(lam)
        if key not in self._phiStar:
            self._phiStar[key] = inducedOnHomology(
                self.cxAt(lam), self.homologyAt(lam), self.aMapsAt(lam))
        return self._phiStar[key]

    def coneDimsAt(self, lam):
        key = _lamKey(lam)
        if key not in self._coneDims:
            cone = buildCone(self.cxAt(lam), self.aMapsAt(lam))
            self._coneDims[key] = homologyOverK(cone).dims
        return self._coneDims[key]

    # ---- global objects ----

    @property
    def one(self):
        return QI.one

    def spectrum(self):
        if self._spectrum is None:
            self._spectrum = jordanSpectrum(self.phiStarAt(self.one), QI)
        return self._spectrum

    def torsion(self):
        if self._torsion is None:
            self._needPhi()
            cxL = buildComplex(self.doc.counts, self.doc.incidences,
                               self.doc.rep, "star-laurent")
            aL = buildChainMapA(cxL, self.doc.rep, self.doc.phiTilde,
                                self.doc.u)
            self._coneL = buildCone(cxL, aL)
            self._torsion = torsionAndNil(self._coneL)
        return self._torsion

    def divisorMatch(self):
        return prop53Check(self.phiStarAt(self.one), self.torsion(), QI)

    def deltaModel(self):
        """(DeltaComplex, subdividedFlag) or None when the document carries
        neither a Delta block nor a simplicial fiber."""
        if self._deltaModel is False:
            if self.doc.delta is not None:
                self.doc.delta.validate(self.doc.rep)
                self._deltaModel = (self.doc.delta, False)
            elif self.doc.simplicial is not None:
                fiber, phi, verticals = self.doc.simplicial
                self._deltaModel = torusDeltaWithSubdivision(
                    fiber, phi, self.doc.u, verticals)
            else:
                self._deltaModel = None
        return self._deltaModel

    def masseyAt(self, lam):
        model = self.deltaModel()
        if model is None:
            return None
        key = _lamKey(lam)
        if key not in self._massey:
            self._massey[key] = MasseyAnalysis(model[0], self.doc.rep,
                                               _checkLambda(lam))
        return self._massey[key]

    # ---- degree bookkeeping ----

    @property
    def fiberTop(self):
        return len(self.doc.counts) - 1

    def defaultDegrees(self):
        if self.doc.degrees is not None:
            return list(self.doc.degrees)
        return list(range(self.fiberTop + 2))


def _checkFiberTokens(doc):
    for cells in doc.incidences.values():
        for cell in cells:
            for (_, _, token) in cell:
                if doc.rep.xiOf(token):
                    raise InputError("fiber incidence token %r has nonzero "
                                     "xi" % (token,))
    if doc.simplicial is not None:
        fiber = doc.simplicial[0]
        for token in fiber.edgeTokens:
            if doc.rep.xiOf(token):
                raise InputError("fiber edge token %r has nonzero xi"
                                 % (token,))


def validateReport(doc):
    """Structural validation: builds everything once and reports the
    derived setup without running the spectral comparisons."""
    run = PipelineRun(doc)
    _checkFiberTokens(doc)
    report = {
        "schema": "jml/1",
        "document": doc.name,
        "alignment": ALIGNMENT,
        "fiber": {"counts": list(doc.counts)},
        "generators": {name: {"xi": doc.rep.xis[name]}
                       for name in doc.rep.names},
        "u": {"xi": doc.rep.xiOf(doc.u)},
    }
    h = run.homologyAt(run.one)
    report["fiber"]["homologyDims"] = list(h.dims)
    if doc.phiTilde is not None:
        run.aMapsAt(run.one)
        report["selfMap"] = {"isChainMap": True}
    model = run.deltaModel()
    if model is not None:
        dc, subdivided = model
        report["deltaModel"] = {
            "counts": list(dc.counts),
            "subdivided": subdivided,
            "thetaSum": sum(dc.theta),
        }
    if doc.directX is not None:
        counts, incidences = doc.directX
        buildComplex(counts, incidences, doc.rep, "star-laurent")
        report["directModel"] = {"counts": list(counts)}
    report["queries"] = {
        "lambdas": [formatScalar(v) for v in doc.lambdas],
        "classes": [formatPoly(q) for q in doc.classes],
    }
    return report


def _rowsForSpec(run, degrees, label, jordanOf, nilOf, masseyOf):
    rows = []
    for k in degrees:
        row = {"degree": k, "at": label}
        values = []
        if "P1" in run.pipelines:
            blocks = jordanOf(k)
            row["jordanBlocks"] = blocks
            row["jordan"] = blocks[-1] if blocks else 0
            values.append(row["jordan"])
        if "P2" in run.pipelines:
            row["nil"] = nilOf(k)
            values.append(row["nil"])
        if "P3" in run.pipelines and masseyOf is not None:
            m = masseyOf(k)
            if m is not None:
                row["massey"] = m
                values.append(m)
        row["agree"] = len(set(values)) <= 1
        rows.append(row)
    return rows


def _directModelCheck(run):
    doc = run.doc
    counts, incidences = doc.directX
    cxL = buildComplex(counts, incidences, doc.rep, "star-laurent")
    direct = homologyOverL(cxL)
    torsion = run.torsion()
    top = max(len(direct.degrees), len(torsion.degrees))
    perDegree = []
    agree = True
    for k in range(top):
        d = [formatPoly(p) for p in direct.divisors(k)]
        c = [formatPoly(p) for p in torsion.divisors(k)]
        free = direct.freeRank(k)
        if free:
            warnings.warn("direct total-space model has free rank %d in "
                          "degree %d" % (free, k))
        ok = d == c
        agree = agree and ok
        perDegree.append({"degree": k, "direct": d, "cone": c,
                          "directFreeRank": free, "agree": ok})
    return {"agree": agree, "perDegree": perDegree}


def _splitReport(run):
    doc = run.doc
    try:
        split = phiCircSplit(run.cxAt(run.one), doc.rep, doc.phiTilde,
                             doc.u, run.homologyAt(run.one))
    except InputError as exc:
        return {"available": False, "reason": str(exc)}
    out = {"available": True, "bScalar": {}}
    for k in sorted(split.phiStar):
        mu = split.bScalar(k)
        out["bScalar"][str(k)] = None if mu is None else formatScalar(mu)
    return out


def runVerification(doc, lambdas=None, classes=None, degrees=None,
                    pipelines=ALL_PIPELINES):
    """The full three-pipeline comparison; returns the report dict or
    raises DisagreementError carrying it under .report."""
    run = PipelineRun(doc, pipelines)
    _checkFiberTokens(doc)
    lambdas = list(doc.lambdas if lambdas is None else lambdas)
    classes = list(doc.classes if classes is None else classes)
    degrees = list(run.defaultDegrees() if degrees is None else degrees)

    report = {
        "schema": "jml/1",
        "document": doc.name,
        "alignment": ALIGNMENT,
        "pipelines": list(run.pipelines),
        "degrees": degrees,
        "rows": [],
        "checks": {},
        "warnings": [],
    }
    failures = []

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")

        spectrum = run.spectrum() if "P1" in run.pipelines else None
        torsion = run.torsion() if "P2" in run.pipelines else None
        model = run.deltaModel() if "P3" in run.pipelines else None

        if spectrum is not None:
            h = run.homologyAt(run.one)
            report["monodromy"] = {
                "homologyDims": list(h.dims),
                "factors": {str(k): [formatPoly(f)
                                     for f in spectrum.degree(k).factors]
                            for k in range(len(spectrum.degrees))},
                "classes": {str(k): [[formatPoly(q), profile]
                                     for q, profile
                                     in spectrum.degree(k).classes]
                            for k in range(len(spectrum.degrees))},
                "split": _splitReport(run),
            }
        if torsion is not None:
            report["torus"] = {
                "freeRanks": [torsion.freeRank(k)
                              for k in range(len(torsion.degrees))],
                "divisors": {str(k): [formatPoly(p)
                                      for p in torsion.divisors(k)]
                             for k in range(len(torsion.degrees))},
            }
        if model is not None:
            report["products"] = {"counts": list(model[0].counts),
                                  "subdivided": model[1]}

        if spectrum is not None and torsion is not None:
            match = run.divisorMatch()
            report["checks"]["divisorMatch"] = {
                "alignment": match.alignment,
                "agree": match.allAgree,
                "perDegree": [
                    {"degree": k,
                     "monodromy": [formatPoly(p) for p in expected],
                     "torus": [formatPoly(p) for p in found],
                     "freeRank": free, "agree": ok}
                    for k, (expected, found, free, ok)
                    in enumerate(match.perDegree)],
            }
            if not match.allAgree:
                failures.append("divisor match")

        exactness = {}
        uct = {}
        productDims = {}
        for lam in lambdas:
            _checkLambda(lam)
            key = _lamKey(lam)
            if spectrum is None or torsion is None:
                break
            coneDims = run.coneDimsAt(lam)
            phiStarLam = run.phiStarAt(lam)
            field = run.cxAt(lam).ring
            exact = coneExactnessCheck(field, coneDims, phiStarLam)
            exactness[key] = exact
            if not all(exact):
                failures.append("cone exactness at %s" % key)
            spec = uctSpecializationCheck(torsion, coneDims, lam)
            uct[key] = spec
            if not all(spec):
                failures.append("specialization count at %s" % key)
            if model is not None:
                analysis = run.masseyAt(lam)
                hDims = [analysis.hDim(k)
                         for k in range(model[0].top + 1)]
                ok = hDims == list(coneDims)
                productDims[key] = {"cone": list(coneDims),
                                    "products": hDims, "agree": ok}
                if not ok:
                    failures.append("product-model dimensions at %s" % key)
        if exactness:
            report["checks"]["coneExactness"] = exactness
            report["checks"]["uctSpecialization"] = uct
        if productDims:
            report["checks"]["productDims"] = productDims

        def blocksAt(point):
            def jordanOf(k):
                if spectrum is None or k >= len(spectrum.degrees):
                    return []
                return spectrum.degree(k).blockMultiset(point)
            return jordanOf

        for lam in lambdas:
            key = _lamKey(lam)
            analysis = run.masseyAt(lam) if model is not None else None

            def masseyOf(k, analysis=analysis):
                if analysis is None or k > analysis.top:
                    return None
                return analysis.masseyLength(k)[0]

            report["rows"] += _rowsForSpec(
                run, degrees, {"lambda": key}, blocksAt(lam),
                (lambda k, lam=lam: torsion.nil(k, lam))
                if torsion is not None else (lambda k: 0),
                masseyOf if model is not None else None)

        for q in classes:
            label = {"class": formatPoly(q)}
            try:
                gen = ExtensionField(list(q.coeffs)).generator
            except ValueError as exc:
                raise InputError("class polynomial %s: %s"
                                 % (formatPoly(q), exc))

            def masseyOf(k, gen=gen, q=q):
                if model is None:
                    return None
                try:
                    analysis = run.masseyAt(gen)
                    if k > analysis.top:
                        return None
                    return analysis.masseyLength(k)[0]
                except ZeroDivisionError:
                    raise InputError("class polynomial %s is not "
                                     "irreducible; product towers need an "
                                     "irreducible class" % (formatPoly(q),))

            report["rows"] += _rowsForSpec(
                run, degrees, label, blocksAt(gen),
                (lambda k, q=q: torsion.classNil(k, q))
                if torsion is not None else (lambda k: 0),
                masseyOf if model is not None else None)

        if doc.directX is not None and torsion is not None:
            direct = _directModelCheck(run)
            report["checks"]["directModel"] = direct
            if not direct["agree"]:
                failures.append("direct total-space model")

        report["warnings"] = sorted({str(w.message) for w in caught})

    for row in report["rows"]:
        if not row["agree"]:
            failures.append("degree %d at %s" % (
                row["degree"], list(row["at"].values())[0]))
    report["agree"] = not failures

    if failures:
        err = DisagreementError("pipelines disagree: " +
                                "; ".join(sorted(set(failures))))
        err.report = report
        raise err
    return report
