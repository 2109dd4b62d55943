"""Worked examples stored as JSON and replayed against the library.

Each fixture file has a ``tag`` naming what it exercises, a ``kind`` that picks
the replay routine, and a ``data`` payload. Polynomials are written as
arithmetic expressions in ``x1, x2, ...`` and evaluated without ``eval``.
"""

from __future__ import annotations

import ast
import json
import re
from collections import Counter
from importlib import resources
from typing import Any, Callable

from .combinat import (
    OrderedSetPartition,
    Subset,
    Tableau,
    add_box_cc,
    add_box_ev,
    add_box_tableau,
    asl_dsl,
    bar_insert,
    comp_n,
    conjugate_by_longest,
    ct,
    ct_J,
    dsi,
    dsic_sets,
    evacuation,
    iota_cc,
    iota_ev,
    iota_tableau,
    is_cct,
    osp_perm_bijection,
    rsk,
    star_insert,
)
from .polyring import Polynomial
from .repdecomp import (
    build_RnI,
    ext,
    hvec_of_subset,
    ind_t,
    make_index,
    realized_spans_equal,
    stability_check,
    subset_of_hvec,
    v_basis,
)
from .report import VerificationReport
from .specht import (
    classical_specht,
    cocharge_monomial,
    f_w,
    groups,
    higher_specht,
    row_orbit_sum,
    specht_quotient,
    stable_truncation,
)

_VARIABLE = re.compile(r"x([1-9][0-9]*)")


class ExpressionError(ValueError):
    """Raised for polynomial expressions outside the supported grammar."""


def evaluate_expression(text: str, nvars: int = 0) -> Polynomial:
    """Evaluate ``text`` built from ``x<i>``, integers, ``+ - *`` and ``**`` by a constant."""
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}") from exc

    def walk(node: ast.AST) -> Polynomial:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return Polynomial.constant(node.value, nvars)
        if isinstance(node, ast.Name):
            m = _VARIABLE.fullmatch(node.id)
            if not m:
                raise ExpressionError(f"unknown name {node.id!r}")
            return Polynomial.variable(int(m.group(1)), nvars)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            inner = walk(node.operand)
            return -inner if isinstance(node.op, ast.USub) else inner
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and type(exp.value) is int and exp.value >= 0):
                    raise ExpressionError("exponents must be non-negative integer literals")
                return walk(node.left) ** exp.value
            ops: dict[type, Callable[[Polynomial, Polynomial], Polynomial]] = {
                ast.Add: lambda a, b: a + b,
                ast.Sub: lambda a, b: a - b,
                ast.Mult: lambda a, b: a * b,
            }
            if type(node.op) in ops:
                return ops[type(node.op)](walk(node.left), walk(node.right))
        raise ExpressionError(f"unsupported syntax: {ast.dump(node)[:60]}")

    return walk(tree)


def load_fixtures() -> list[dict]:
    """All bundled fixtures, sorted by file name."""
    folder = resources.files(__package__) / "data"
    out = []
    for entry in sorted(folder.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            data = json.loads(entry.read_text())
            data.setdefault("file", entry.name)
            out.append(data)
    return out


def _tab(rows) -> Tableau:
    return Tableau.from_rows(rows)


def _summands(n: int, raw) -> Counter:
    return Counter(make_index(_tab(S), h) for S, h in raw)


# replay routines, one per kind


def _replay_cocharge(d: dict, rep: VerificationReport) -> None:
    S = _tab(d["S"])
    J = Subset(d["J"], d["n"])
    rep.expect_equal("Dsi", Subset(d["dsi"], d["n"]), dsi(S), S)
    CJ, C = ct_J(S, J), ct(S)
    rep.expect_equal("ct_J", _tab(d["ct_J"]), CJ, (S, J))
    rep.expect_equal("ct", _tab(d["ct"]), C, S)
    rep.expect_equal("ct_J entry sum", d["ct_J_sum"], sum(CJ.reading_word))
    rep.expect_equal("cocharge", d["ct_sum"], sum(C.reading_word))
    rep.expect_equal("ct_J is a cocharge tableau", d["ct_J_is_cct"], is_cct(CJ))
    rep.expect_equal("ct is a cocharge tableau", d["ct_is_cct"], is_cct(C))
    # values h whose leftmost copy lacks an h-1 strictly above
    failing = []
    for h in sorted(set(CJ.reading_word) - {0}):
        left = min((b for b in CJ.boxes() if CJ[b] == h), key=lambda b: b[1])
        if not any(CJ[b] == h - 1 and b[0] < left[0] for b in CJ.boxes()):
            failing.append(h)
    rep.expect_equal("failing values of ct_J", d["ct_J_failing_values"], failing)


def _replay_composition(d: dict, rep: VerificationReport) -> None:
    for case in d["cases"]:
        J = Subset(case["J"], case["n"])
        rep.expect_equal("comp_n", tuple(case["alpha"]), comp_n(J), J)


def _replay_rsk(d: dict, rep: VerificationReport) -> None:
    w = tuple(d["w"])
    P, Q = rsk(w)
    rep.expect_equal("P", _tab(d["P"]), P, w)
    rep.expect_equal("Q", _tab(d["Q"]), Q, w)
    Qt = evacuation(Q)
    rep.expect_equal("evacuated Q", _tab(d["Qtilde"]), Qt, w)
    rep.expect_equal("Q of conjugated word", Qt, rsk(conjugate_by_longest(w))[1], w)
    rep.expect_equal("conjugated word", tuple(d["conjugated"]), conjugate_by_longest(w), w)
    rep.expect_equal("ct of evacuated Q", _tab(d["ct_Qtilde"]), ct(Qt), w)
    rep.expect_equal("cocharge", d["ct_Qtilde_sum"], sum(ct(Qt).reading_word), w)
    rep.expect_equal("Dsl", Subset(d["dsl"], len(w)), asl_dsl(w)[1], w)


def _replay_iota(d: dict, rep: VerificationReport) -> None:
    w = tuple(d["w"])
    P, Q = rsk(w)
    Qt = evacuation(Q)
    n = len(w)
    rep.expect_equal("iota on P", _tab(d["iota_P"]), iota_tableau(P), w)
    rep.expect_equal("iota on evacuated Q", _tab(d["iota_ev_Qtilde"]), iota_ev(Qt), w)
    rep.expect_equal("iota on cocharge tableau", _tab(d["iota_cc"]), iota_cc(ct(Qt)), w)
    rep.expect_equal("Dsi of evacuated Q", Subset(d["dsi_Qtilde"], n), dsi(Qt), w)
    rep.expect_equal("Dsi after iota", Subset(d["dsi_iota_ev"], n + 1), dsi(iota_ev(Qt)), w)
    rep.expect_equal("reflected descent set", Subset(d["dsic"], n), dsic_sets(Qt)[0], w)


def _replay_corners(d: dict, rep: VerificationReport) -> None:
    T = _tab(d["T"])
    S = evacuation(T)
    C = ct(S)
    for case in d["corners"]:
        v = tuple(case["v"])
        rep.expect_equal("T + v", _tab(case["T_plus"]), add_box_tableau(T, v), v)
        Sp = add_box_ev(S, v)
        rep.expect_equal("S +~ v", _tab(case["S_plus"]), Sp, v)
        rep.expect_equal("C +^ v", _tab(case["C_plus"]), add_box_cc(C, v), v)
        rep.expect_equal("C +^ v = ct(S +~ v)", ct(Sp), add_box_cc(C, v), v)
        n = T.size + 1
        rep.expect_equal("reflected descents after adding v", Subset(case["sets"], n), dsic_sets(Sp)[0], v)


def _replay_specht(d: dict, rep: VerificationReport) -> None:
    w = tuple(d["w"])
    n = len(w)
    P, Q = rsk(w)
    T = _tab(d["T"])
    S = _tab(d["S"])
    rep.expect_equal("P", T, P, w)
    rep.expect_equal("Q", _tab(d["Q"]), Q, w)
    rep.expect_equal("evacuated Q", S, evacuation(Q), w)
    rep.expect_equal("cocharge tableau", _tab(d["C"]), ct(S), w)
    exps, s_stab = cocharge_monomial(T, ct(S))
    mono = evaluate_expression(d["monomial"], n)
    rep.expect_equal("cocharge monomial", mono, Polynomial.monomial(exps, 1, n), w)
    rep.expect_equal("row stabilizer of the monomial", d["s_stab"], s_stab, w)
    orbit = Polynomial(row_orbit_sum(T, exps), n)
    rep.expect_equal("row orbit sum", evaluate_expression(d["orbit_sum"], n), orbit, w)
    col_degrees = Counter(
        tuple(sum(m[i - 1] if i <= len(m) else 0 for i in col) for col in T.columns) for m in orbit.terms
    )
    rep.expect_equal("column degree multiset", Counter(tuple(x) for x in d["orbit_deg_T"]), col_degrees, w)
    if "vanishing_after_columns" in d:
        dead = evaluate_expression(d["vanishing_after_columns"], n)
        for m in dead.terms:
            padded = m + (0,) * (n - len(m))
            rep.check("monomial repeats an exponent inside a column",
                      any(len({padded[i - 1] for i in col}) < len(col) for col in T.columns), m)
    if "column_group_order" in d:
        G = groups(T)
        rep.expect_equal("column group order", d["column_group_order"], G.column_group_order, w)
        rep.expect_equal("extended group index", d["extended_index"],
                         G.extended_order // G.column_group_order, w)
    F = f_w(w).poly
    rep.expect_equal("F_w", evaluate_expression(d["polynomial"], n), F, w)
    rep.expect_equal("F_w has integer coefficients", True, F.has_integer_coefficients(), w)
    for sigma in d.get("invariant_under", []):
        rep.expect_equal("invariance", F, F.act(tuple(sigma)), sigma)


def _replay_quotient(d: dict, rep: VerificationReport) -> None:
    w = tuple(d["w"])
    n = len(w)
    P, _ = rsk(w)
    S = evacuation(rsk(w)[1])
    rep.expect_equal("classical Specht polynomial", evaluate_expression(d["classical"], n), classical_specht(P), w)
    Qp = specht_quotient(P, S)
    rep.expect_equal("quotient", evaluate_expression(d["quotient"], n), Qp, w)
    rep.expect_equal("quotient times classical", f_w(w).poly, Qp * classical_specht(P), w)
    for sigma in d["invariant_under"]:
        rep.expect_equal("quotient invariance", Qp, Qp.act(tuple(sigma)), sigma)
    u = tuple(d["trivial_case_w"])
    Pu, Qu = rsk(u)
    rep.expect_equal("trivial quotient", Polynomial.constant(1, len(u)),
                     specht_quotient(Pu, evacuation(Qu)), u)


def _replay_stable(d: dict, rep: VerificationReport) -> None:
    w = tuple(d["w"])
    n = len(w)
    P, Q = rsk(w)
    S = evacuation(Q)
    rep.expect_equal("iota on T", _tab(d["iota_T"]), iota_tableau(P), w)
    rep.expect_equal("iota on S", _tab(d["iota_S"]), iota_ev(S), w)
    rep.expect_equal("iota on C", _tab(d["iota_C"]), iota_cc(ct(S)), w)
    N = d["N"]
    poly, cert = stable_truncation(w, N)
    rep.expect_equal("stable polynomial", evaluate_expression(d["polynomial"], N), poly, (w, N))
    rep.check("substitution compatibility", cert.substitution_compatible, (w, N))
    rep.check("tail invariance", cert.invariant, (w, N))
    if "s_stab" in d:
        rep.expect_equal("row stabilizer", d["s_stab"],
                         higher_specht(iota_tableau(P), iota_ev(S)).s_stab, w)
    if "quotient" in d:
        Tn = iota_tableau(P)
        q = poly.exact_divide(classical_specht(Tn))
        rep.expect_equal("stable quotient", evaluate_expression(d["quotient"], N), q, (w, N))
    if "constant_up_to" in d:
        M = d["constant_up_to"]
        top, cert = stable_truncation(w, M)
        rep.expect_equal("constant truncation", evaluate_expression(d["polynomial"], M), top, (w, M))
        rep.check("stable from the start", cert.stabilization_index == n, (w, M), n, cert.stabilization_index)


def _replay_hvector(d: dict, rep: VerificationReport) -> None:
    for case in d["cases"]:
        D = Subset(case["D"], case["n"])
        I = Subset(case["I"], case["n"])
        h = tuple(case["h"])
        rep.expect_equal("h-vector of I", h, hvec_of_subset(D, I), case)
        rep.expect_equal("I from its h-vector", I, subset_of_hvec(D, h, case["k"]), case)


def _replay_decomposition(d: dict, rep: VerificationReport) -> None:
    for case in d["cases"]:
        n = case["n"]
        dec = build_RnI(n, case["I"], case["hom"])
        rep.expect_equal("summands", _summands(n, case["summands"]), dec.multiset(), case["I"])
        if "dimension" in case:
            rep.expect_equal("dimension", case["dimension"], dec.dimension, case["I"])
        for (S, h), basis in zip(case["summands"], case.get("bases", [])):
            got = v_basis(make_index(_tab(S), h), n)
            want = [evaluate_expression(b, n) for b in basis]
            rep.check("basis spans", realized_spans_equal(got, want), (S, h), [p.render() for p in want],
                      [p.render() for p in got])


def _replay_operators(d: dict, rep: VerificationReport) -> None:
    for case in d["cases"]:
        n, I = case["n"], Subset(case["I"], case["n"])
        dec = build_RnI(n, I)
        if case["op"] == "ind":
            got = ind_t(dec, case["t"])
            tgt = case["equals"]
            rep.check("Ind_t", got.same_summands(build_RnI(tgt["n"], tgt["I"])), case)
        elif case["op"] == "ext" and "equals" in case:
            tgt = case["equals"]
            rep.check("Ext", ext(dec).same_summands(build_RnI(tgt["n"], tgt["I"])), case)
        elif case["op"] == "ext":
            rep.expect_equal("Ext summands", _summands(n + 1, case["summands"]), ext(dec).multiset(), case)
        elif case["op"] == "ext_images":
            cert = stability_check(I, n, run_recipe=False)
            rep.expect_equal("Ext image sizes", sorted(case["images"]), sorted(cert.ext_images), case)
        else:
            rep.check("known operator", False, case)


def _replay_osp(d: dict, rep: VerificationReport) -> None:
    for case in d["bijections"]:
        I = Subset(case["I"], case["n"])
        words = sorted(osp_perm_bijection(I).values())
        rep.expect_equal("words with descents in I", sorted(tuple(w) for w in case["words"]), words, case["I"])
    ins = d["insertions"]
    p = OrderedSetPartition(tuple(frozenset(b) for b in ins["p"]))
    rep.expect_equal("subset", Subset(ins["I"], p.n), p.subset())
    rep.expect_equal("star insertion", ins["star"], star_insert(p).to_json())
    rep.expect_equal("bar insertion", ins["bar"], bar_insert(p).to_json())
    rep.expect_equal("bar subset", Subset(ins["bar_I"], p.n + 1), bar_insert(p).subset())
    rep.expect_equal("star subset", Subset(ins["I"], p.n + 1), star_insert(p).subset())


REPLAY: dict[str, Callable[[dict, VerificationReport], None]] = {
    "cocharge": _replay_cocharge,
    "composition": _replay_composition,
    "rsk": _replay_rsk,
    "iota": _replay_iota,
    "corners": _replay_corners,
    "specht": _replay_specht,
    "quotient": _replay_quotient,
    "stable": _replay_stable,
    "hvector": _replay_hvector,
    "decomposition": _replay_decomposition,
    "operators": _replay_operators,
    "osp": _replay_osp,
}


def replay(fixture: dict) -> VerificationReport:
    """Replay one fixture; errors are reported as failures, not raised."""
    rep = VerificationReport(fixture.get("tag") or fixture.get("file", "?"))
    if not fixture.get("tag"):
        rep.check("fixture has a tag", False, fixture.get("file"))
        return rep.finish()
    routine = REPLAY.get(fixture.get("kind", ""))
    if routine is None:
        rep.check("fixture kind is known", False, fixture.get("file"), sorted(REPLAY), fixture.get("kind"))
        return rep.finish()
    try:
        routine(fixture["data"], rep)
    except Exception as exc:  # a crash is a failed check
        rep.check("replay runs", False, fixture.get("file"), None, f"{type(exc).__name__}: {exc}")
    return rep.finish()


def fixtures_suite(fixtures: list[dict] | None = None) -> VerificationReport:
    report = VerificationReport("fixtures")
    for fx in load_fixtures() if fixtures is None else fixtures:
        report.merge(replay(fx))
    return report.finish()


def fixture_summary(fixtures: list[dict] | None = None) -> list[dict[str, Any]]:
    """Per-fixture results, for display."""
    return [
        {"tag": fx.get("tag"), "file": fx.get("file"), **{k: v for k, v in replay(fx).to_json().items() if k != "suite"}}
        for fx in (load_fixtures() if fixtures is None else fixtures)
    ]
