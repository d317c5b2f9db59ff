"""Command-line interface: curve files, reports, and the table/invariant harness.

Curve files are JSON objects

    {"cyclotomic_order": N,
     "coefficients": [[...coordinates of a_0...], [...a_1...], ...],
     "label": "..."}

with one row per power of x (constant term first) and each row the power-basis
coordinates of the coefficient in Q(zeta_N), written as "num/den" strings.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time
from fractions import Fraction
from typing import Callable

from . import __version__
from .curves import (
    HyperCurve,
    aut_group,
    conjugate_curve,
    curve_new,
    isomorphisms,
)
from .descent import (
    DEFINABLE_OVER_R,
    FIELD_OF_MODULI_IS_C,
    OBSTRUCTED_OVER_R,
    counterexample_generate,
    counterexample_verify,
    induced_action,
    quotient_coordinate,
    sigma_star,
    weil_search,
)
from .errors import (
    AmbiguousCandidate,
    FieldOfModuliNotReal,
    HyperModuliError,
    NeedsExtension,
    NotSquarefreeError,
    GenusTooSmallError,
    PrecisionError,
    SpecViolation,
    UnsupportedCase,
)
from .fields import CycNum, cyclotomic_field, format_cycnum, gf_make, parse_cycnum
from .moebius import (
    INF,
    AdditiveSubgroupSpec,
    GroupLabel,
    MoebiusMap,
    ParametricFamily,
    centralizer,
    closure,
    conjugate_into_standard,
    cyclic,
    dihedral,
    identify,
    normalizer,
    standard_group,
)
from .polynomials import Poly, RatFunc, moebius_pullback, ratfunc_compose, ratfunc_substitute
from .recognition import DEFAULT_HEIGHT

MAX_PREC = 4096
OK, FAILED, BAD_INPUT, ENGINE_ERROR = 0, 1, 2, 3


class CurveFileError(ValueError):
    pass


# ---------------------------------------------------------------------------
# curve files
# ---------------------------------------------------------------------------

def curve_to_dict(X: HyperCurve) -> dict:
    return {
        "cyclotomic_order": X.N,
        "coefficients": [format_cycnum(c) for c in X.f.coeffs],
        "label": X.label,
    }


def emit_curve_file(X: HyperCurve) -> str:
    rows = [json.dumps(format_cycnum(c)) for c in X.f.coeffs]
    body = ",\n".join("    " + r for r in rows)
    return ("{\n"
            f'  "cyclotomic_order": {X.N},\n'
            '  "coefficients": [\n'
            f"{body}\n"
            "  ],\n"
            f'  "label": {json.dumps(X.label)}\n'
            "}\n")


def parse_curve_file(text: str) -> HyperCurve:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CurveFileError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "cyclotomic_order" not in data or "coefficients" not in data:
        raise CurveFileError("expected keys 'cyclotomic_order' and 'coefficients'")
    N = data["cyclotomic_order"]
    if not isinstance(N, int) or N < 1:
        raise CurveFileError("cyclotomic_order must be a positive integer")
    F = cyclotomic_field(N)
    rows = data["coefficients"]
    if not isinstance(rows, list):
        raise CurveFileError("coefficients must be a list of rows")
    coeffs = []
    for k, row in enumerate(rows):
        if not isinstance(row, list) or not all(isinstance(s, str) for s in row):
            raise CurveFileError(f"row {k}: expected a list of 'num/den' strings")
        try:
            coeffs.append(parse_cycnum(F, row))
        except (ValueError, ZeroDivisionError) as exc:
            raise CurveFileError(f"row {k}: {exc}") from None
    f = Poly(F, coeffs)
    if len(f.coeffs) != len(coeffs):
        raise CurveFileError(f"row {len(coeffs) - 1}: leading coefficient is zero")
    try:
        return curve_new(f, label=str(data.get("label", "")))
    except (NotSquarefreeError, GenusTooSmallError) as exc:
        raise CurveFileError(f"{type(exc).__name__}: {exc}") from None


def parse_gaussian(s: str) -> tuple[Fraction, Fraction]:
    """'a', 'bi', 'a+bi', 'a-bi', 'i' with a, b integers or fractions."""
    s = s.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty coefficient")
    if not s.endswith("i"):
        return Fraction(s), Fraction(0)
    body = s[:-1]
    k = max(body.rfind("+"), body.rfind("-"))
    if k > 0:
        re_part, im_part = body[:k], body[k:]
    else:
        re_part, im_part = "0", body
    im = {"": 1, "+": 1, "-": -1}.get(im_part)
    return Fraction(re_part), Fraction(im_part) if im is None else Fraction(im)


def pretty(a) -> str:
    """Readable form of a field element: sum of c*zetaN^k terms."""
    if a is INF:
        return "oo"
    if not isinstance(a, CycNum):
        c = getattr(a, "c", None)
        if c is None:
            return repr(a)
        # finite field element as a polynomial in the generator g
        terms = [str(v) if k == 0 else (f"{v}*g^{k}" if v != 1 else f"g^{k}").replace("g^1", "g")
                 for k, v in enumerate(c) if v]
        return " + ".join(terms) or "0"
    N = a.field.N
    terms = []
    for k, c in enumerate(a.coeffs):
        if c == 0:
            continue
        base = "" if k == 0 else (f"zeta{N}" if k == 1 else f"zeta{N}^{k}")
        if not base:
            terms.append(str(c))
        elif c == 1:
            terms.append(base)
        elif c == -1:
            terms.append("-" + base)
        else:
            terms.append(f"{c}*{base}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += (" - " + t[1:]) if t.startswith("-") else (" + " + t)
    return out


def pretty_map(M: MoebiusMap) -> str:
    a, b, c, d = (pretty(e) for e in M.entries)
    return f"({a}, {b}; {c}, {d})"


def iso_json(phi) -> dict:
    return {
        "M": [format_cycnum(e) for e in phi.M.entries],
        "lambda": format_cycnum(phi.lam),
        "sign": phi.sign,
    }


def map_json(M: MoebiusMap) -> list:
    return [format_cycnum(e) if isinstance(e, CycNum) else list(e.c) for e in M.entries]


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def clause(name: str, verdict: str, detail: str) -> dict:
    return {"clause": name, "verdict": verdict, "detail": detail}


def make_report(command: str, inputs: dict, clauses: list, witnesses: dict | None = None) -> dict:
    verdict = "fail" if any(c["verdict"] == "fail" for c in clauses) else "pass"
    return {
        "command": command,
        "version": __version__,
        "inputs": inputs,
        "verdict": verdict,
        "clauses": clauses,
        "witnesses": witnesses or {},
    }


_MARK = {"pass": "✓", "fail": "✗", "info": "-"}


def render_text(report: dict) -> str:
    head = f"{report['command']}: {report['verdict'].upper()}"
    summary = report.get("witnesses", {}).get("summary")
    lines = [f"{head} ({summary})" if summary else head]
    for c in report["clauses"]:
        lines.append(f"  [{_MARK.get(c['verdict'], '?')}] {c['clause']}: {c['detail']}")
    table = report.get("witnesses", {}).get("table")
    if table:
        lines.append("  " + " | ".join(table["header"]))
        for row in table["rows"]:
            lines.append("  " + " | ".join(str(x) for x in row))
    if "timing_seconds" in report:
        lines.append(f"  time: {report['timing_seconds']:.2f} s")
    return "\n".join(lines) + "\n"


def digest_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def with_precision(fn: Callable[[int], object], prec: int):
    """Run fn(prec), doubling the precision on PrecisionError up to MAX_PREC."""
    p = prec
    while True:
        try:
            return fn(p), p
        except PrecisionError:
            if p >= MAX_PREC:
                raise
            p = min(2 * p, MAX_PREC)


def _load(path: str) -> tuple[HyperCurve, str]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_curve_file(text), digest_text(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_classify(args) -> dict:
    X, dig = _load(args.curve)
    A, used = with_precision(lambda p: aut_group(X, p, args.height_bound), args.prec)
    label = identify(A.reduced)
    clauses = [
        clause("reduced group", "pass", f"{label}, |G| = {A.reduced.order}"),
        clause("automorphism group", "pass", f"|Aut| = {A.order}, {A.abstract_type()}"),
    ]
    wit = {"label": str(label), "reduced_order": A.reduced.order, "aut_order": A.order,
           "abstract_type": A.abstract_type(),
           "reduced_elements": [map_json(g) for g in A.reduced.sorted()]}
    try:
        U, _ = conjugate_into_standard(A.reduced)
        wit["conjugator"] = map_json(U)
        clauses.append(clause("standard form", "pass", f"U = {pretty_map(U)} conjugates G to standard position"))
    except (NeedsExtension, UnsupportedCase) as exc:
        wit["conjugator"] = None
        clauses.append(clause("standard form", "info", str(exc)))
    inputs = {"curve": args.curve, "digest": dig, "genus": X.genus, "prec": used}
    summary = f"{label}, |Aut| = {A.order}"
    return make_report("classify", inputs, clauses, {"summary": summary, **wit})


def _certificate_table(cert) -> dict:
    rows = []
    for k, (phi, comp) in enumerate(cert.entries):
        rows.append([k, pretty_map(phi.M), f"{phi.sign:+d}", pretty_map(comp.M), f"{comp.sign:+d}",
                     "id" if comp.is_identity() else "not id"])
    return {"header": ["#", "M of phi", "e", "M of phi^c phi", "e", "composite"], "rows": rows}


def cmd_descend(args) -> dict:
    X, dig = _load(args.curve)
    R, used = with_precision(lambda p: weil_search(X, p, args.height_bound), args.prec)
    clauses = [clause("field of moduli", "pass" if R.status != FIELD_OF_MODULI_IS_C else "info",
                      "R (X is isomorphic to its conjugate)" if R.status != FIELD_OF_MODULI_IS_C
                      else "C (no isomorphism X -> X^c)")]
    wit: dict = {"status": R.status}
    if R.status == DEFINABLE_OVER_R:
        clauses.append(clause("weil cocycle", "pass", "some phi: X -> X^c satisfies phi^c o phi = id"))
        wit["cocycle"] = iso_json(R.cocycle)
        if R.f_real is not None:
            Y = curve_new(R.f_real, label=(X.label + " real model").strip())
            ok_real = Y.f.is_real()
            isos, _ = with_precision(lambda p: isomorphisms(X, Y, p, args.height_bound), used)
            ok = ok_real and bool(isos)
            clauses.append(clause("real model", "pass" if ok else "fail",
                                  f"conjugation-fixed model found; {len(isos)} isomorphisms to X"
                                  if ok else "recovered model failed verification"))
            wit["P"] = map_json(R.P)
            wit["real_model"] = curve_to_dict(Y)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(emit_curve_file(Y))
        else:
            clauses.append(clause("real model", "info", R.note or "no y^2 = f model produced"))
            wit["suggested_order"] = R.suggested_order
    elif R.status == OBSTRUCTED_OVER_R:
        cert = R.certificate
        ok = cert.all_nontrivial()
        clauses.append(clause("weil cocycle", "pass" if ok else "fail",
                              f"all {len(cert)} isomorphisms X -> X^c have phi^c o phi != id"))
        wit["table"] = _certificate_table(cert)
        wit["certificate"] = [{"phi": iso_json(p), "composite": iso_json(c)} for p, c in cert.entries]
    inputs = {"curve": args.curve, "digest": dig, "genus": X.genus, "prec": used}
    wit["summary"] = R.status
    return make_report("descend", inputs, clauses, wit)


def cmd_counterexample(args) -> dict:
    coefficients = None
    N = args.N or math.lcm(4, 2 * args.m * args.n)
    if args.coeffs:
        F = cyclotomic_field(N)
        coefficients = []
        for item in args.coeffs.split(";"):
            re, im = parse_gaussian(item)
            coefficients.append(F(re) + F.i * im if N % 4 == 0 else F(re))
    spec, X = counterexample_generate(args.n, args.m, seed=args.seed, coefficients=coefficients, N=N)
    report_v, used = with_precision(
        lambda p: counterexample_verify(spec, X, p, args.height_bound, strict=False), args.prec)
    clauses = [clause(c["clause"], c["verdict"], c["detail"]) for c in report_v["clauses"]]
    inputs = {"n": args.n, "m": args.m, "N": N, "seed": None if coefficients else args.seed,
              "coeffs": args.coeffs, "prec": used}
    wit = {"instance": report_v["instance"], "curve": curve_to_dict(X),
           "clauses": report_v["clauses"],
           "summary": f"genus {X.genus} counterexample, verdict {report_v['verdict']}"}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(emit_curve_file(X))
    return make_report("counterexample", inputs, clauses, wit)


def cmd_isom(args) -> dict:
    X, d1 = _load(args.curve1)
    Y, d2 = _load(args.curve2)
    if X.N != Y.N:
        raise CurveFileError("curves must use the same cyclotomic_order")
    isos, used = with_precision(lambda p: isomorphisms(X, Y, p, args.height_bound), args.prec)
    ok = all(phi.verify() for phi in isos)
    clauses = [clause("isomorphisms", "pass" if ok else "fail",
                      f"{len(isos)} isomorphisms X -> X'" if isos else "X and X' are not isomorphic")]
    wit = {"count": len(isos), "isomorphisms": [iso_json(p) for p in isos]}
    return make_report("isom", {"curve1": args.curve1, "curve2": args.curve2,
                                "digest1": d1, "digest2": d2, "prec": used}, clauses, wit)


def _rf_text(t: RatFunc) -> str:
    def ptxt(p: Poly) -> str:
        terms = []
        for k in range(p.degree, -1, -1):
            c = p.coeff(k)
            if c.is_zero():
                continue
            cs = pretty(c)
            mon = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mon:
                terms.append(cs)
            elif cs == "1":
                terms.append(mon)
            elif cs == "-1":
                terms.append("-" + mon)
            else:
                terms.append(f"({cs})*{mon}" if " " in cs else f"{cs}*{mon}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    den = ptxt(t.den)
    return ptxt(t.num) if den == "1" else f"({ptxt(t.num)})/({den})"


def cmd_quotient(args) -> dict:
    X, dig = _load(args.curve)
    F = X.field
    A, used = with_precision(lambda p: aut_group(X, p, args.height_bound), args.prec)
    G = A.reduced
    label = identify(G)
    clauses = [clause("reduced group", "pass", f"{label}, |G| = {G.order}")]
    wit: dict = {"label": str(label)}
    inputs = {"curve": args.curve, "digest": dig, "prec": used}
    try:
        Q = quotient_coordinate(label, F)
    except UnsupportedCase as exc:
        clauses.append(clause("quotient coordinate", "fail", str(exc)))
        return make_report("quotient", inputs, clauses, wit)
    try:
        std = standard_group(label, F)
        if G == std:
            U, X_std = MoebiusMap.identity(F), X
        else:
            U, _ = conjugate_into_standard(G)
            X_std = curve_new(moebius_pullback(X.f, U.inverse(), X.hom_degree))
    except (NeedsExtension, UnsupportedCase) as exc:
        clauses.append(clause("standard position", "fail", str(exc)))
        return make_report("quotient", inputs, clauses, wit)
    invariant = all(ratfunc_compose(Q.t, g) == Q.t for g in std)
    clauses.append(clause("quotient coordinate", "pass" if invariant else "fail",
                          f"case ({Q.case_label}): t = {_rf_text(Q.t)}, degree {Q.t.degree}"))
    wit["t"] = _rf_text(Q.t)
    wit["conjugator"] = map_json(U)
    try:
        Qs, _ = with_precision(lambda p: sigma_star(X_std, Q, p, args.height_bound), used)
    except FieldOfModuliNotReal as exc:
        clauses.append(clause("sigma*", "info", f"field of moduli is C: {exc}"))
        return make_report("quotient", inputs, clauses, wit)
    R = Qs.sigma_star_t
    clauses.append(clause("sigma*", "pass", f"sigma*(t) = {_rf_text(RatFunc(Poly.x(F)).moebius_apply(R)).replace('x', 't')}"))
    pt = Qs.rational_point
    clauses.append(clause("rational point", "pass" if pt is not None else "info",
                          f"t = {pretty(pt)} is fixed by sigma*" if pt is not None else "no fixed point listed"))
    wit["sigma_star"] = map_json(R)
    wit["rational_point"] = "oo" if pt is INF else (format_cycnum(pt) if pt is not None else None)
    return make_report("quotient", inputs, clauses, wit)


# -- tables -------------------------------------------------------------------

def _case_group(args):
    """(label, field, spec) for a case letter of the subgroup classification."""
    case = args.case
    n, q = args.n, args.q
    if case == "a":
        n = n or 5
        return cyclic(n), cyclotomic_field(max(n, 1) if n > 2 else 1), None
    if case == "b":
        n = n or 3
        return dihedral(n), cyclotomic_field(math.lcm(4, 2 * n)), None
    if case in "cde":
        return GroupLabel({"c": "V4", "d": "A4", "e": "S4"}[case]), cyclotomic_field(4), None
    if case == "f":
        return GroupLabel("A5"), cyclotomic_field(20), None
    if case == "g":
        p = args.p or 3
        Fp = gf_make(p, 1)
        beta = Fp(args.beta if args.beta is not None else -1)
        d = next(k for k in range(1, p) if (beta ** k).is_one())
        spec = AdditiveSubgroupSpec((Fp.one,), beta, d)
        return GroupLabel("BetaA", d=d, a_size=p), Fp, spec
    if case in "hi":
        q = q or 3
        p = next(r for r in range(3, q + 1) if q % r == 0)
        r = round(math.log(q, p))
        F = gf_make(p, 2 * r)  # fixed points of the group live in F_(q^2)
        return GroupLabel("PSL2" if case == "h" else "PGL2", q=q), F, None
    raise ValueError(f"unknown case {case!r}")


def _expected_normalizer(case: str, label: GroupLabel, F):
    if case == "b":
        return dihedral(2 * label.n), standard_group(dihedral(2 * label.n), F)
    if case in "cde":
        s4 = GroupLabel("S4")
        return s4, standard_group(s4, F)
    if case == "f":
        return label, standard_group(label, F)
    if case in "hi":
        pg = GroupLabel("PGL2", q=label.q)
        return pg, standard_group(pg, F)
    return None, None


def cmd_tables(args) -> dict:
    label, F, spec = _case_group(args)
    G = standard_group(label, F, spec)
    clauses = []
    closed = closure(G.elements, field=F) == G
    clauses.append(clause("closure", "pass" if closed else "fail",
                          f"standard group of case ({args.case}) is closed, {G.order} elements"))
    ok_order = G.order == label.order
    clauses.append(clause("order", "pass" if ok_order else "fail", f"|G| = {G.order}, expected {label.order}"))
    got = identify(G)
    clauses.append(clause("identify", "pass" if got == label else "fail", f"identify = {got}, expected {label}"))
    case = args.case
    if case == "a":
        if G.order > 1:
            Nf = normalizer(G)
            ok = isinstance(Nf, ParametricFamily) and Nf.kind == "diagonal+antidiagonal"
            clauses.append(clause("normalizer", "pass" if ok else "fail",
                                  f"N(G_C{label.n}) = {{alpha x, alpha/x}} (parametric family)"))
    elif case == "g":
        clauses.append(clause("normalizer", "info", "no normalizer claim in case (g)"))
    else:
        exp_label, expected = _expected_normalizer(case, label, F)
        Nf = normalizer(G)
        ok = Nf == expected
        name = {"b": f"N(G_D{2 * (label.n or 0)}) = G_D{4 * (label.n or 0)}", "c": "N(G_V4) = G_S4",
                "d": "N(G_A4) = G_S4", "e": "N(G_S4) = G_S4", "f": "N(G_A5) = G_A5",
                "h": f"N(PSL2(F_{label.q})) = PGL2(F_{label.q})",
                "i": f"N(PGL2(F_{label.q})) = PGL2(F_{label.q})"}[case]
        clauses.append(clause("normalizer", "pass" if ok else "fail",
                              f"{name} (order {Nf.order})" if ok else f"{name} fails: order {Nf.order}"))
        if case in "cf":
            Z = centralizer(G)
            if case == "c":
                okz, zname = Z == G, "Z(G_V4) = G_V4"
            else:
                okz, zname = Z.order == 1, "Z(G_A5) = {id}"
            clauses.append(clause("centralizer", "pass" if okz else "fail", f"{zname} (order {Z.order})"))
    inputs = {"case": case, "n": args.n, "q": args.q, "p": args.p, "beta": args.beta, "field": repr(F)}
    return make_report("tables", inputs, clauses, {"summary": str(label)})


def cmd_invariants(args) -> dict:
    case = args.case
    if case not in "bcdgh":
        raise ValueError("invariants supports cases b, c, d, g, h")
    if case == "b" and (args.n or 3) <= 2:
        raise ValueError("case (b) needs n > 2")
    label, F, spec = _case_group(args)
    if case in "cd":
        F = cyclotomic_field(4)
    G = standard_group(label, F, spec)
    Q = quotient_coordinate(label, F, spec)
    clauses = []
    fixed = all(ratfunc_compose(Q.t, U) == Q.t for U in G)
    clauses.append(clause("invariance", "pass" if fixed else "fail",
                          f"t = {_rf_text(Q.t)} fixed by {label} " + ("" if fixed else "NOT ")
                          + f"(degree {Q.t.degree})"))
    clauses.append(clause("degree", "pass" if Q.t.degree == G.order else "fail",
                          f"deg t = {Q.t.degree}, |G| = {G.order}"))
    if case == "c":
        Qf = cyclotomic_field(1)
        maps = [MoebiusMap(*(Qf(v) for v in ent)) for ent in
                ((1, 0, 0, 1), (-1, 0, 0, 1), (2, 12, 1, -2), (2, -12, -1, -2), (2, -12, 1, 2), (2, 12, -1, 2))]
        H = closure(maps, field=Qf)
        ok = H.elements == set(maps) and not H.is_abelian()
        clauses.append(clause("six maps", "pass" if ok else "fail",
                              "six maps close under composition, nonabelian order 6" if ok
                              else f"six maps generate a group of order {H.order}"))
    if case == "d":
        one = Poly.const(F, 1)
        T = RatFunc(Poly.x(F))
        prod = T * ((T * 2 - 12) / (T + 2)) * ((T * 2 + 12) / (-T + 2)) * RatFunc(Poly.const(F, Fraction(1, 4)))
        tp = quotient_coordinate(GroupLabel("V4"), F).t
        ok = ratfunc_substitute(prod, tp) == Q.t
        clauses.append(clause("product formula", "pass" if ok else "fail",
                              "(1/4) t' (2t'-12)/(t'+2) (2t'+12)/(-t'+2) with t' = x^2+x^-2 equals t"
                              if ok else "product formula mismatch"))
    if case == "h":
        sub = F.subfield_elements(round(math.log(label.q, F.p)))
        gens = [MoebiusMap(F.zero, -F.one, F.one, F.zero)] + [MoebiusMap.translation(a, F) for a in sub]
        ok = all(ratfunc_compose(Q.t, g) == Q.t for g in gens)
        clauses.append(clause("generators", "pass" if ok else "fail",
                              f"g(-1/x) = g(x) and g(x+a) = g(x) for a in F_{label.q}"))
    inputs = {"case": case, "n": args.n, "q": args.q, "p": args.p, "beta": args.beta}
    return make_report("invariants", inputs, clauses, {"t": _rf_text(Q.t)})


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

COMMANDS = {
    "classify": cmd_classify,
    "descend": cmd_descend,
    "counterexample": cmd_counterexample,
    "tables": cmd_tables,
    "invariants": cmd_invariants,
    "isom": cmd_isom,
    "quotient": cmd_quotient,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=128, help="initial working precision in bits")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--height-bound", type=int, default=DEFAULT_HEIGHT, dest="height_bound")
    common.add_argument("--timing", action="store_true", help="add wall-clock time to the report")

    parser = argparse.ArgumentParser(prog="hypermoduli", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("classify", "descend", "quotient"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("curve")
        if name == "descend":
            p.add_argument("--out", help="write the real model curve file here")
    p = sub.add_parser("isom", parents=[common])
    p.add_argument("curve1")
    p.add_argument("curve2")
    p = sub.add_parser("counterexample", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--coeffs", help="a_0; a_1; ...; a_m as Gaussian rationals, e.g. '1; 1+2i; 1+2i; 1'")
    p.add_argument("--N", type=int, help="working cyclotomic order (default lcm(4, 2mn))")
    p.add_argument("--out", help="write the curve file here")
    for name in ("tables", "invariants"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--case", required=True, choices=list("abcdefghi"))
        p.add_argument("--n", type=int)
        p.add_argument("--q", type=int)
        p.add_argument("--p", type=int)
        p.add_argument("--beta", type=int)
    return parser


def run(argv=None) -> tuple[int, dict | None, str]:
    """Parse ``argv`` and run; returns (exit code, report, rendered output)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args)
    except (CurveFileError, SpecViolation, ValueError, OSError) as exc:
        return BAD_INPUT, None, f"error: {exc}\n"
    except (PrecisionError, AmbiguousCandidate, NeedsExtension, HyperModuliError) as exc:
        extra = ""
        if isinstance(exc, NeedsExtension) and exc.suggested_order:
            extra = f" (try cyclotomic order {exc.suggested_order})"
        return ENGINE_ERROR, None, f"error: {type(exc).__name__}: {exc}{extra}\n"
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 3)
    text = (json.dumps(report, indent=2, ensure_ascii=False) + "\n") if args.json else render_text(report)
    return (FAILED if report["verdict"] == "fail" else OK), report, text


def main(argv=None) -> int:
    code, _, text = run(argv)
    stream = sys.stderr if code in (BAD_INPUT, ENGINE_ERROR) else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
