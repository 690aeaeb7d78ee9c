"""Command-line interface.

Every command prints one JSON report on standard output and a short
summary on standard error.  The exit code is derived from the report:
0 when every check passed, 1 when one failed, 2 for malformed input and
3 when a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from typing import Any, Callable, Sequence

from . import __version__, limits
from .document import DocBasis, Document, dumps, load, to_json
from .domain_free import DomainFreeAlgebra, check_basis, check_df_axioms, classify, classify_by_basis
from .errors import AxiomViolation, ContractError, MalformedInputError, ResourceLimitError
from .labeled import check_labeled_axioms, check_labeled_continuity, remark1_check

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED, EXIT_LIMIT = 0, 1, 2, 3

_EXIT_FOR_VERDICT = {
    "pass": EXIT_OK,
    "fail": EXIT_FAIL,
    "malformed": EXIT_MALFORMED,
    "resource_limit": EXIT_LIMIT,
}


def exit_code(report: dict) -> int:
    return _EXIT_FOR_VERDICT[report["verdict"]]


def emit_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# --- check -------------------------------------------------------------------


def _basis_result(doc: Document, b: DocBasis) -> tuple[dict, bool]:
    if doc.kind == "domain_free":
        basis = doc.df_basis(b)
        rep = check_basis(doc.algebra, basis)
        body = rep.to_dict()
        flags = body["certifies"]
    else:
        rep = check_labeled_continuity(doc.algebra, doc.labeled_basis(b))
        body = rep.to_dict()
        flags = rep.flags()
    mismatched = sorted(k for k, v in b.expect.items() if flags.get(k) != v)
    body = {"name": b.name, **body}
    if b.expect:
        body["expect"] = dict(b.expect)
        body["expect_met"] = not mismatched
    return body, not mismatched


def check_report(doc: Document) -> dict:
    a = doc.algebra
    report: dict[str, Any] = {"command": "check", "kind": doc.kind, "name": a.name}
    axioms = check_df_axioms(a) if isinstance(a, DomainFreeAlgebra) else check_labeled_axioms(a)
    report["axioms"] = axioms.to_dict()
    ok = axioms.passed
    if ok:
        if isinstance(a, DomainFreeAlgebra):
            lat = classify(a)
            byb = classify_by_basis(a)
            report["classification"] = lat.to_dict()
            report["classification_by_basis"] = byb.flags()
            consistent = lat.flags() == byb.flags() and lat.implications_hold
        else:
            lab = check_labeled_continuity(a, "finite")
            report["classification"] = lab.to_dict()
            report["local_complete_lattices"] = remark1_check(a)
            consistent = lab.implications_hold and report["local_complete_lattices"]
        report["consistent"] = consistent
        ok = ok and consistent
        results = []
        for b in doc.bases:
            body, met = _basis_result(doc, b)
            results.append(body)
            ok = ok and met
        if results:
            report["bases"] = results
    if doc.analytic is not None:
        report["analytic"] = doc.analytic
    report["verdict"] = "pass" if ok else "fail"
    return report


# --- instance ----------------------------------------------------------------


def _instance_document(args) -> Document:
    from .domain_free import Basis
    from .instances import (
        BUNDLED,
        UnitIntervalAnalytic,
        chain_algebra,
        constraint_algebra,
        powerset_algebra,
        singleton_basis,
        soft_set_algebra,
        unit_interval_algebra,
        upsilon_star,
    )

    name = args.name
    meta = {"instance": name}
    if name == "powerset":
        if args.size < 0:
            raise MalformedInputError("--size must be non-negative")
        items = [f"x{i}" for i in range(args.size)]
        alg = powerset_algebra(items)
        bases = [DocBasis("singletons", singleton_basis(items).members)]
        if args.size >= 3:
            ups: Basis = upsilon_star(items, items[1:])
            bases.append(DocBasis(ups.name, ups.members))
        meta["size"] = args.size
        return Document(alg, tuple(bases), None, meta)
    if name == "unit-interval":
        alg = unit_interval_algebra(args.grid)
        analytic = UnitIntervalAnalytic(args.grid)
        note = {
            "instance": "unit-interval",
            "carrier": "[0,1]",
            "sampled_grid": args.grid,
            "classification": analytic.classify().to_dict(),
            "modes": analytic.declared_modes(),
        }
        meta["grid"] = args.grid
        return Document(alg, (), note, meta)
    if name == "soft-set":
        u = [f"u{i + 1}" for i in range(args.universe)]
        e = [f"e{i + 1}" for i in range(args.params)]
        meta.update(universe=args.universe, params=args.params)
        return Document(soft_set_algebra(u, e), (), None, meta)
    if name == "constraint":
        if args.semiring not in BUNDLED:
            raise MalformedInputError(f"unknown semiring {args.semiring!r}; choose from {sorted(BUNDLED)}")
        if args.vars < 0:
            raise MalformedInputError("--vars must be non-negative")
        variables = [f"v{i + 1}" for i in range(args.vars)]
        domain = [str(i) for i in range(args.dom)]
        meta.update(semiring=args.semiring, vars=args.vars, dom=args.dom)
        return Document(constraint_algebra(BUNDLED[args.semiring](), variables, domain), (), None, meta)
    if name == "chain":
        if args.length < 1:
            raise MalformedInputError("--length must be at least 1")
        meta["length"] = args.length
        return Document(chain_algebra(args.length), (), None, meta)
    raise MalformedInputError(f"unknown instance {name!r}")


# --- transform / fnspace / search ---------------------------------------------


def transform_report(doc: Document, direction: str) -> tuple[dict, Document | None]:
    from .transforms import associated_labeled, quotient_domain_free, theorem2_5_check, theorem3_4_check

    wanted = {"labeled": "domain_free", "domain-free": "labeled"}[direction]
    if doc.kind != wanted:
        raise MalformedInputError(f"transform --to {direction} needs a {wanted} document, got {doc.kind}")
    a = doc.algebra
    if isinstance(a, DomainFreeAlgebra):
        out = associated_labeled(a)
        thm = theorem2_5_check(a)
    else:
        out = quotient_domain_free(a)
        thm = theorem3_4_check(a)
    report = {
        "command": "transform",
        "direction": direction,
        "input": a.name,
        "output": out.name,
        "carrier_size": len(out.carrier),
        "theorems": thm.to_dict(),
        "verdict": "pass" if thm.passed else "fail",
    }
    return report, Document(out, (), None, {"derived_from": a.name})


def fnspace_report(d1: Document, d2: Document, weak: bool) -> tuple[dict, Document | None]:
    from .function_space import (
        build_function_space,
        idempotency_check,
        lemma8_crosscheck,
        pointwise_order_check,
        prop3_closure,
        theorem7_identity,
    )

    for d in (d1, d2):
        if d.kind != "domain_free":
            raise MalformedInputError("fnspace needs two domain_free documents")
    try:
        space = build_function_space(d1.algebra, d2.algebra, allow_weak_hypothesis=weak)
    except ContractError as exc:
        return {"command": "fnspace", "error": str(exc), "verdict": "fail"}, None
    a = space.algebra
    axioms = check_df_axioms(a)
    rep = classify(a)
    checks = {
        "axioms": axioms.passed,
        "s_continuous": rep.s_continuous,
        "pointwise_order": pointwise_order_check(space),
        "idempotency": idempotency_check(space),
        "prop3_closure": prop3_closure(space),
        "theorem7_identity": theorem7_identity(space),
        "lemma8_continuous_lattice": lemma8_crosscheck(space),
    }
    report = {
        "command": "fnspace",
        "source": d1.algebra.name,
        "target": d2.algebra.name,
        "weak_hypothesis": space.weak_hypothesis,
        "candidate_maps": space.candidates,
        "functions": len(a.carrier),
        "checks": checks,
        "axioms": axioms.to_dict(),
        "classification": rep.to_dict(),
        "verdict": "pass" if all(checks.values()) else "fail",
    }
    meta = {"source": d1.algebra.name, "target": d2.algebra.name, "weak_hypothesis": space.weak_hypothesis}
    return report, Document(a, (), None, meta)


def search_report(paths: Sequence[str], count: int, seed: int, max_carrier: int) -> dict:
    from .transforms import remark3_search

    pool = []
    for p in paths:
        d = load(p)
        if d.kind != "labeled":
            raise MalformedInputError(f"{p} is not a labeled document")
        pool.append(d.algebra)
    res = remark3_search(pool, count=count, seed=seed, max_carrier=max_carrier)
    return {"command": "search-remark3", "seed": seed, "count": count, **res, "verdict": "pass"}


# --- plumbing ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="infoalg", description="Check and build finite information algebras.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--max-carrier", type=int, help="cap on constructed carrier sizes")
    parser.add_argument("--max-subsets", type=int, help="cap on enumerated subsets")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the axiom suite and classification on a document")
    p.add_argument("path")

    p = sub.add_parser("instance", help="emit a bundled instance as a document")
    p.add_argument("name", choices=["powerset", "unit-interval", "soft-set", "constraint", "chain"])
    p.add_argument("--size", type=int, default=2, help="powerset: |X|")
    p.add_argument("--grid", type=int, default=16, help="unit-interval: grid denominator")
    p.add_argument("--universe", type=int, default=2, help="soft-set: |U|")
    p.add_argument("--params", type=int, default=1, help="soft-set: |E|")
    p.add_argument("--semiring", default="boolean", help="constraint: boolean, fuzzy or truncated-min-plus")
    p.add_argument("--vars", type=int, default=1, help="constraint: number of variables")
    p.add_argument("--dom", type=int, default=2, help="constraint: values per variable")
    p.add_argument("--length", type=int, default=2, help="chain: number of elements")

    p = sub.add_parser("transform", help="domain-free <-> labeled constructions")
    p.add_argument("path")
    p.add_argument("--to", dest="direction", choices=["labeled", "domain-free"], required=True)
    p.add_argument("-o", "--output", help="also write the resulting document here")

    p = sub.add_parser("fnspace", help="build the space of Scott-continuous maps")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--allow-weak-hypothesis", action="store_true")
    p.add_argument("-o", "--output", help="also write the resulting document here")

    p = sub.add_parser("search-remark3", help="look for labeled s-continuous algebras with a non-s-continuous quotient")
    p.add_argument("paths", nargs="*")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--carrier-bound", type=int, default=12, help="largest generated labeled carrier")
    return parser


def _limits_from(args) -> limits.Limits:
    base = limits.Limits.from_env()
    changes = {}
    if args.max_carrier is not None:
        changes["max_carrier"] = args.max_carrier
    if args.max_subsets is not None:
        changes["max_subsets"] = args.max_subsets
    return replace(base, **changes)


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise MalformedInputError(f"cannot write {path}: {exc.strerror}") from None


def run(argv: Sequence[str] | None = None, out: Callable[[str], Any] | None = None,
        err: Callable[[str], Any] | None = None) -> int:
    out = out or sys.stdout.write
    err = err or sys.stderr.write
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    started = time.perf_counter()
    try:
        lim = _limits_from(args)
    except ValueError as exc:
        report: dict = {"command": args.command, "error": str(exc), "verdict": "malformed"}
        out(emit_json(report))
        err(f"error: {exc}\n")
        return exit_code(report)
    document_text = None
    try:
        with limits.using(lim):
            if args.command == "check":
                report = check_report(load(args.path))
            elif args.command == "instance":
                document_text = dumps(_instance_document(args))
                out(document_text)
                err(f"instance {args.name}: emitted\n")
                return EXIT_OK
            elif args.command == "transform":
                report, doc = transform_report(load(args.path), args.direction)
                report = {**report, "document": to_json(doc)}
                if args.output:
                    _write(args.output, dumps(doc))
            elif args.command == "fnspace":
                report, doc = fnspace_report(load(args.source), load(args.target), args.allow_weak_hypothesis)
                if doc is not None:
                    report = {**report, "document": to_json(doc)}
                    if args.output:
                        _write(args.output, dumps(doc))
            else:
                report = search_report(args.paths, args.count, args.seed, args.carrier_bound)
    except MalformedInputError as exc:
        report = {"command": args.command, "error": str(exc), "verdict": "malformed"}
    except ResourceLimitError as exc:
        report = {"command": args.command, "error": str(exc), "verdict": "resource_limit"}
    except (AxiomViolation, ContractError) as exc:
        report = {"command": args.command, "error": str(exc), "verdict": "fail"}
    out(emit_json(report))
    elapsed = time.perf_counter() - started
    summary = f"{args.command}: {report['verdict']} ({elapsed:.2f}s)"
    if "error" in report:
        summary += f": {report['error']}"
    err(summary + "\n")
    return exit_code(report)


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
