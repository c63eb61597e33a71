"""Command-line front end: ``bcmatroid {invariants,check,verify,sweep,export}``.

Exit status is 0 when every requested check passes, 1 when one fails and 2
for usage or input errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
import time
from pathlib import Path

from . import __version__
from .errors import MatroidError, ParseError
from .invariants import bc_f_vector, characteristic_polynomial, f_to_h, h_from_tutte, tutte
from .io import FORMATS, _label, dump_circuits, load
from .lab import ALL_PREDICATES, LEMMA_CHECKS, HCache, complementary_h, g_vector, predicate_report
from .matroid import LinearOrder, Matroid, label_key
from .sweep import FAMILIES, SweepConfig, run_config

TOOL = "bcmatroid"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _csv(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x, key=label_key)
    if isinstance(x, tuple):
        return list(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


_SCALAR_ARRAY = re.compile(r"\[\s*([^\[\]{}]*?)\s*\]", re.S)


def render(report: dict) -> str:
    """Indented JSON with arrays of scalars kept on one line."""
    text = json.dumps(report, indent=2, default=_jsonable)
    return _SCALAR_ARRAY.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text) + "\n"


def _header(command: str) -> dict:
    return {"tool": TOOL, "version": __version__, "command": command}


def _input_section(path: str, fmt: str, M: Matroid) -> dict:
    digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
    return {"format": fmt, "digest": f"sha256:{digest}", "size": M.size, "rank": M.rank(),
            "components": len(M.component_masks()), "loops": sorted(M.loops(), key=label_key),
            "ground": list(M.ground)}


def _parse_order(text: str | None, M: Matroid) -> LinearOrder:
    if text is None:
        return LinearOrder.ascending(M)
    order = LinearOrder(tuple(_label(t) for t in _csv(text)))
    order.positions(M)
    return order


def invariants_section(M: Matroid, order: LinearOrder, cache: HCache) -> tuple[dict, list[str]]:
    """f, h (two routes), chi, Tutte, hbar and g for one matroid."""
    warnings = []
    r = M.rank()
    T = tutte(M, cache.tutte)
    via_tutte = h_from_tutte(M, cache.tutte)
    h_tutte = [via_tutte[r - i] for i in range(r + 1)]
    inv: dict = {"order": list(order.elements)}
    if M.has_loops():
        warnings.append("matroid has loops: broken circuit complex is void, h = 0 and hbar = (0)")
        inv.update(f=None, h={"f_transform": None, "tutte": h_tutte, "trimmed": None},
                   chi=[0] * (r + 1), h_bar=[0], g=None)
    else:
        f = bc_f_vector(M, order)
        h = f_to_h(f)
        chi = characteristic_polynomial(M, order)
        inv.update(f=list(f.entries),
                   h={"f_transform": list(h.full), "tutte": h_tutte, "trimmed": list(h.trimmed)},
                   chi=[chi[r - i] for i in range(r + 1)],
                   h_bar=list(complementary_h(M, cache).entries),
                   g=list(g_vector(M, cache).entries))
        if list(h.full) != h_tutte:
            warnings.append("h-vector routes disagree")
    inv["tutte"] = [list(t) for t in T.sorted_terms()]
    return inv, warnings


def _single(args, command: str):
    start = time.perf_counter()
    mf = load(args.input, args.format)
    M = mf.matroid
    order = _parse_order(getattr(args, "order", None), M)
    cache = HCache()
    report = _header(command)
    report["input"] = _input_section(args.input, mf.format, M)
    inv, warnings = invariants_section(M, order, cache)
    report["invariants"] = inv
    return report, warnings, M, cache, start


def cmd_invariants(args) -> tuple[dict, int]:
    report, warnings, _, _, start = _single(args, "invariants")
    report["warnings"] = warnings
    report["ok"] = "h-vector routes disagree" not in warnings
    report["timings"] = {"total_seconds": round(time.perf_counter() - start, 6)}
    return report, EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_check(args) -> tuple[dict, int]:
    names = _csv(args.predicates)
    for p in names:
        if p not in ALL_PREDICATES:
            raise MatroidError(f"unknown predicate {p!r}; choose from {', '.join(ALL_PREDICATES)}")
    report, warnings, M, _, start = _single(args, "check")
    if M.has_loops():
        warnings.append("predicates hold vacuously for a loopy matroid")
        preds = {p: {"ok": True, "first_violation": None, "vacuous": True} for p in names}
    else:
        rep = predicate_report(report["invariants"]["h"]["trimmed"], names)
        preds = {p: {"ok": rep.outcomes[p], "first_violation": rep.first_violation[p]} for p in names}
    report["predicates"] = preds
    report["warnings"] = warnings
    report["ok"] = all(v["ok"] for v in preds.values())
    report["timings"] = {"total_seconds": round(time.perf_counter() - start, 6)}
    return report, EXIT_OK if report["ok"] else EXIT_FAIL


def _sweep_like(args, command: str, predicates, lemmas) -> tuple[dict, int]:
    cfg = SweepConfig(args.family, args.max_edges, args.max_n, tuple(predicates), tuple(lemmas),
                      args.jobs)
    rep = run_config(cfg)
    report = _header(command)
    body = rep.to_dict(include_timings=True)
    timings = body.pop("timings")
    report.update(body)
    report["ok"] = rep.ok
    report["timings"] = timings
    return report, EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify(args) -> tuple[dict, int]:
    lemmas = _csv(args.lemmas)
    for name in lemmas:
        if name not in LEMMA_CHECKS:
            raise MatroidError(f"unknown lemma check {name!r}; choose from {', '.join(LEMMA_CHECKS)}")
    return _sweep_like(args, "verify", (), lemmas)


def cmd_sweep(args) -> tuple[dict, int]:
    return _sweep_like(args, "sweep", _csv(args.predicates), _csv(args.lemmas or ""))


def cmd_export(args) -> tuple[str, int]:
    return dump_circuits(load(args.input, args.format).matroid), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog=TOOL, description="Broken circuit complexes of matroids.")
    ap.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def io_flags(p):
        p.add_argument("input", help="circuits (.json), graph (.graph/.edges) or matrix (.mat) file")
        p.add_argument("--format", choices=FORMATS)
        p.add_argument("--out", help="write the report here instead of stdout")

    def report_flags(p):
        p.add_argument("--no-timings", action="store_true",
                       help="omit wall-clock timings (byte-identical reruns)")

    def family_flags(p):
        p.add_argument("--family", choices=FAMILIES, default="graphic")
        p.add_argument("--max-edges", type=int, default=7)
        p.add_argument("--max-n", type=int, default=8)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--out")

    p = sub.add_parser("invariants", help="f, h, chi, Tutte, hbar and g of one matroid")
    io_flags(p)
    report_flags(p)
    p.add_argument("--order", help="comma-separated ground set labels, smallest first")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("check", help="shape predicates on the trimmed h-vector")
    io_flags(p)
    report_flags(p)
    p.add_argument("--order")
    p.add_argument("--predicates", default="strongly-flawless",
                   help=f"comma-separated subset of: {', '.join(ALL_PREDICATES)}")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="run identity checkers over a family")
    family_flags(p)
    report_flags(p)
    p.add_argument("--lemmas", required=True, help=f"comma-separated subset of: {', '.join(LEMMA_CHECKS)}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="evaluate predicates over a family")
    family_flags(p)
    report_flags(p)
    p.add_argument("--predicates", default="strongly-flawless")
    p.add_argument("--lemmas", default="")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export", help="write the circuits document of an input")
    io_flags(p)
    p.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        result, code = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MatroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(result, dict):
        if getattr(args, "no_timings", False):
            result.pop("timings", None)
        text = render(result)
    else:
        text = result
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
