"""Command-line interface.

    jml validate  -i doc.json
    jml homology  -i doc.json [--lambda 1 --lambda 1/2]
    jml monodromy -i doc.json [--lambda ...]
    jml torus     -i doc.json [--lambda ...]
    jml massey    -i doc.json [--lambda ...] [--degrees 0,1]
    jml verify    -i doc.json [--lambda ...] [--degrees ...]
                              [--pipelines P1,P2,P3]
    jml examples  [--name heisenberg]

--lambda takes an exact scalar ("1", "-1/2", "2+3*i") or a class
polynomial in t ("t^2-3*t+1"); both may be repeated.  Reports are emitted
as canonical JSON (sorted keys, exact scalar strings, stable bytes) or as
a readable table with --format table.  Exit codes: 0 all checks agree,
1 malformed or inconsistent input, 2 pipelines disagree.
"""

import argparse
import json
import sys

from .documents import loadDocument
from .errors import DisagreementError, InputError
from .examples import exampleDocument, exampleNames
from .gauss import QI, ExtensionField, Scalar, formatScalar, parseScalar
from .linalg import Mat
from .massey import masseyReport
from .pipelines import (ALIGNMENT, PipelineRun, runVerification,
                        validateReport)
from .poly import LaurentPoly, Poly, formatPoly
from .tokens import GroupToken
from .torus import cohomologyViaUCT


def parseClassPoly(text):
    """Polynomials in t with exact coefficients: 't^2-3*t+1',
    '2*t - 1', '(1+i)*t^3 + (2-i)'.  Complex coefficients need parens."""
    s = text.replace(" ", "")
    if not s:
        raise InputError("empty class polynomial")
    pieces, depth, start = [], 0, 0
    for idx, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and idx > start \
                and s[idx - 1] != "^":
            pieces.append(s[start:idx])
            start = idx
    if depth:
        raise InputError("unbalanced parentheses in %r" % text)
    pieces.append(s[start:])
    coeffs = {}
    for piece in pieces:
        sign = QI.one
        body = piece
        if body and body[0] in "+-":
            if body[0] == "-":
                sign = -QI.one
            body = body[1:]
        if not body:
            raise InputError("dangling sign in %r" % text)
        if "t" in body:
            coeffPart, _, powPart = body.partition("t")
            coeffPart = coeffPart.rstrip("*")
            if powPart == "":
                power = 1
            elif powPart.startswith("^"):
                try:
                    power = int(powPart[1:])
                except ValueError:
                    raise InputError("bad term %r in %r" % (piece, text))
            else:
                raise InputError("bad term %r in %r" % (piece, text))
            if power < 0:
                raise InputError("negative power in %r" % text)
        else:
            coeffPart, power = body, 0
        if coeffPart.startswith("(") and coeffPart.endswith(")"):
            coeffPart = coeffPart[1:-1]
        try:
            c = parseScalar(coeffPart) if coeffPart else QI.one
        except ValueError as exc:
            raise InputError("bad coefficient %r in %r (%s)"
                             % (coeffPart, text, exc))
        coeffs[power] = coeffs.get(power, QI.zero) + sign * c
    top = max(coeffs)
    poly = Poly(QI, [coeffs.get(k, QI.zero) for k in range(top + 1)])
    if poly.degree() < 1:
        raise InputError("class polynomial %r must contain t" % text)
    return poly


def parseDegrees(text):
    if not text:
        return None
    try:
        return [int(d) for d in text.split(",")]
    except ValueError:
        raise InputError("bad degree list %r; expected comma-separated "
                         "integers" % text)


def parseSpecializations(texts):
    """Split --lambda values into (scalar lambdas, class polynomials)."""
    lambdas, classes = [], []
    for text in texts or []:
        if "t" in text:
            classes.append(parseClassPoly(text))
        else:
            try:
                lambdas.append(parseScalar(text))
            except ValueError as exc:
                raise InputError("bad lambda %r (%s)" % (text, exc))
    return lambdas, classes


def jsonSafe(x):
    if isinstance(x, dict):
        return {str(k): jsonSafe(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonSafe(v) for v in x]
    if isinstance(x, Scalar):
        return formatScalar(x)
    if isinstance(x, (Poly, LaurentPoly)):
        return formatPoly(x) if isinstance(x, Poly) else repr(x)
    if isinstance(x, Mat):
        return [[jsonSafe(e) for e in row] for row in x.rows]
    if isinstance(x, GroupToken):
        return x.toJSON()
    if hasattr(x, "coeffs") and hasattr(x, "field"):  # extension element
        return formatPoly(Poly(QI, list(x.coeffs)), var="x")
    return x


def _specKey(kind, value):
    if kind == "lambda":
        return formatScalar(value)
    return "root of " + formatPoly(value)


def _lambdasOf(doc, args):
    """Scalar and class queries: command line first, document defaults
    otherwise."""
    lambdas, classes = parseSpecializations(args.lambdas)
    if not lambdas and not classes:
        return list(doc.lambdas), list(doc.classes)
    return lambdas, classes


def cmdValidate(args):
    return validateReport(loadDocument(args.input))


def cmdHomology(args):
    doc = loadDocument(args.input)
    run = PipelineRun(doc)
    torsion = run.torsion()
    cohom = cohomologyViaUCT(torsion)
    nDeg = len(torsion.degrees)
    report = {
        "schema": "jml/1",
        "document": doc.name,
        "fiber": {"counts": list(doc.counts),
                  "homologyDims": list(run.homologyAt(run.one).dims)},
        "torus": {
            "freeRanks": [torsion.freeRank(k) for k in range(nDeg)],
            "divisors": {str(k): [formatPoly(p)
                                  for p in torsion.divisors(k)]
                         for k in range(nDeg)},
        },
        "cohomology": {
            "freeRanks": [cohom.freeRank(k) for k in range(nDeg + 1)],
            "torsionDivisors": {str(k): [formatPoly(p)
                                         for p in cohom.torsionDivisors(k)]
                                for k in range(nDeg + 1)},
        },
    }
    lambdas, _ = _lambdasOf(doc, args)
    dims = {}
    for lam in lambdas:
        dims[formatScalar(lam)] = list(run.coneDimsAt(lam))
    if dims:
        report["specializations"] = dims
    return report


def cmdMonodromy(args):
    doc = loadDocument(args.input)
    run = PipelineRun(doc)
    spectrum = run.spectrum()
    phiStar = run.phiStarAt(run.one)
    report = {
        "schema": "jml/1",
        "document": doc.name,
        "homologyDims": list(run.homologyAt(run.one).dims),
        "phiStar": {str(k): jsonSafe(phiStar[k]) for k in sorted(phiStar)},
        "factors": {str(k): [formatPoly(f)
                             for f in spectrum.degree(k).factors]
                    for k in range(len(spectrum.degrees))},
        "classes": {str(k): [[formatPoly(q), profile] for q, profile
                             in spectrum.degree(k).classes]
                    for k in range(len(spectrum.degrees))},
        "answers": [],
    }
    lambdas, classes = _lambdasOf(doc, args)
    for k in range(len(spectrum.degrees)):
        for lam in lambdas:
            blocks = spectrum.degree(k).blockMultiset(lam)
            report["answers"].append(
                {"degree": k, "at": {"lambda": formatScalar(lam)},
                 "blocks": blocks,
                 "jordan": blocks[-1] if blocks else 0})
        for q in classes:
            report["answers"].append(
                {"degree": k, "at": {"class": formatPoly(q)},
                 "jordan": spectrum.degree(k).classMaxBlock(q)})
    return report


def cmdTorus(args):
    doc = loadDocument(args.input)
    run = PipelineRun(doc)
    torsion = run.torsion()
    match = run.divisorMatch()
    nDeg = len(torsion.degrees)
    report = {
        "schema": "jml/1",
        "document": doc.name,
        "alignment": ALIGNMENT,
        "freeRanks": [torsion.freeRank(k) for k in range(nDeg)],
        "divisors": {str(k): [formatPoly(p) for p in torsion.divisors(k)]
                     for k in range(nDeg)},
        "divisorMatch": {
            "agree": match.allAgree,
            "perDegree": [{"degree": k,
                           "monodromy": [formatPoly(p) for p in exp],
                           "torus": [formatPoly(p) for p in found],
                           "freeRank": free, "agree": ok}
                          for k, (exp, found, free, ok)
                          in enumerate(match.perDegree)],
        },
    }
    if not match.allAgree:
        err = DisagreementError("monodromy and torus divisors disagree")
        err.report = report
        raise err
    return report


def cmdMassey(args):
    doc = loadDocument(args.input)
    run = PipelineRun(doc)
    model = run.deltaModel()
    if model is None:
        raise InputError("document has no simplicial or Delta model; "
                         "product towers need one")
    dc, subdivided = model
    report = {
        "schema": "jml/1",
        "document": doc.name,
        "counts": list(dc.counts),
        "subdivided": subdivided,
        "at": {},
    }
    lambdas, classes = _lambdasOf(doc, args)
    degrees = parseDegrees(args.degrees)
    points = [("lambda", lam) for lam in lambdas]
    for q in classes:
        try:
            gen = ExtensionField(list(q.coeffs)).generator
        except ValueError as exc:
            raise InputError("class polynomial %s: %s"
                             % (formatPoly(q), exc))
        points.append(("class", gen))
    if not points:
        raise InputError("no lambda to evaluate at; pass --lambda or add "
                         "queries to the document")
    for kind, lam in points:
        key = formatScalar(lam) if kind == "lambda" \
            else "root of " + formatPoly(
                Poly(QI, list(lam.field.modulus)))
        try:
            report["at"][key] = jsonSafe(
                masseyReport(dc, doc.rep, lam, degrees=degrees))
        except ZeroDivisionError:
            raise InputError("class polynomial %s is not irreducible; "
                             "product towers need an irreducible class"
                             % (key[len("root of "):],))
    return report


def cmdVerify(args):
    doc = loadDocument(args.input)
    lambdas, classes = parseSpecializations(args.lambdas)
    if not lambdas and not classes:
        lambdas, classes = None, None
    degrees = parseDegrees(args.degrees)
    pipelines = ("P1", "P2", "P3")
    if args.pipelines:
        pipelines = tuple(p.strip() for p in args.pipelines.split(","))
    return runVerification(doc, lambdas=lambdas, classes=classes,
                           degrees=degrees, pipelines=pipelines)


def cmdExamples(args):
    if args.name:
        return exampleDocument(args.name)
    out = []
    for name in exampleNames():
        out.append({"name": name,
                    "description": exampleDocument(name)["description"]})
    return {"schema": "jml/1", "examples": out}


def _renderTable(report, lines=None, prefix=""):
    if lines is None:
        lines = []
        rows = report.get("rows") or report.get("answers")
        if rows:
            cols = ["degree", "at", "jordan", "nil", "massey", "agree"]
            header = [c for c in cols if any(c in r for r in rows)]
            widths = {c: len(c) for c in header}
            rendered = []
            for r in rows:
                cells = {}
                for c in header:
                    v = r.get(c, "")
                    if c == "at":
                        v = list(v.values())[0]
                    cells[c] = _leaf(v) if v != "" else ""
                    widths[c] = max(widths[c], len(cells[c]))
                rendered.append(cells)
            lines.append("  ".join(c.ljust(widths[c]) for c in header))
            for cells in rendered:
                lines.append("  ".join(cells.get(c, "").ljust(widths[c])
                                       for c in header))
            lines.append("")
            rest = {k: v for k, v in report.items()
                    if k not in ("rows", "answers")}
            _renderTable(rest, lines)
            return "\n".join(lines) + "\n"
        _renderTable(report, lines)
        return "\n".join(lines) + "\n"
    if isinstance(report, dict):
        for k in sorted(report, key=str):
            v = report[k]
            if isinstance(v, (dict, list)) and v and not _isLeafList(v):
                lines.append("%s%s:" % (prefix, k))
                _renderTable(v, lines, prefix + "  ")
            else:
                lines.append("%s%s: %s" % (prefix, k, _leaf(v)))
    elif isinstance(report, list):
        for i, v in enumerate(report):
            if isinstance(v, (dict, list)) and v and not _isLeafList(v):
                lines.append("%s- [%d]" % (prefix, i))
                _renderTable(v, lines, prefix + "  ")
            else:
                lines.append("%s- %s" % (prefix, _leaf(v)))
    return lines


def _isLeafList(v):
    return isinstance(v, list) and all(
        not isinstance(e, (dict, list)) for e in v)


def _leaf(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(_leaf(e) for e in v) + "]"
    return str(v)


def _emit(report, args):
    safe = jsonSafe(report)
    if args.format == "table":
        text = _renderTable(safe)
    else:
        text = json.dumps(safe, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parser():
    p = argparse.ArgumentParser(
        prog="jml",
        description="Exact mapping-torus homology: twisted monodromy, "
                    "Laurent torsion, and product-length pipelines with "
                    "cross-verification.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needsInput=True):
        if needsInput:
            sp.add_argument("--input", "-i", required=True,
                            help="document file (schema jml/1)")
        sp.add_argument("--lambda", dest="lambdas", action="append",
                        metavar="VALUE",
                        help="specialization: exact scalar or class "
                             "polynomial in t; repeatable")
        sp.add_argument("--format", choices=("json", "table"),
                        default="json")
        sp.add_argument("--out", help="write the report to a file")

    common(sub.add_parser("validate", help="check a document and report "
                                           "the derived setup"))
    common(sub.add_parser("homology", help="torus homology over L and "
                                           "specialized dimensions"))
    common(sub.add_parser("monodromy", help="induced map, invariant "
                                            "factors, Jordan data"))
    common(sub.add_parser("torus", help="torsion divisors and the "
                                        "degree-aligned divisor match"))
    sp = sub.add_parser("massey", help="product tower lengths and "
                                       "consistency flags")
    common(sp)
    sp.add_argument("--degrees", help="comma-separated degrees")
    sp = sub.add_parser("verify", help="run all pipelines and "
                                       "cross-check every answer")
    common(sp)
    sp.add_argument("--degrees", help="comma-separated degrees")
    sp.add_argument("--pipelines", help="comma-separated subset of "
                                        "P1,P2,P3")
    sp = sub.add_parser("examples", help="list bundled example documents "
                                         "or emit one")
    sp.add_argument("--name", help="bundled document to emit")
    sp.add_argument("--format", choices=("json", "table"), default="json")
    sp.add_argument("--out", help="write the output to a file")
    return p


COMMANDS = {
    "validate": cmdValidate,
    "homology": cmdHomology,
    "monodromy": cmdMonodromy,
    "torus": cmdTorus,
    "massey": cmdMassey,
    "verify": cmdVerify,
    "examples": cmdExamples,
}


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        report = COMMANDS[args.command](args)
    except DisagreementError as exc:
        report = getattr(exc, "report", None)
        if report is not None:
            _emit(report, args)
        print("disagreement: %s" % exc, file=sys.stderr)
        return 2
    except InputError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 1
    _emit(report, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
