"""Command-line entry point.

Exit codes: 0 success / property holds, 1 malformed input or internal
mismatch, 2 resource cap exceeded, 3 property fails or counterexample found.
Character indices in JSON output are 1-based (``chi`` = 1 is the trivial
character); list positions are 0-based.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib.resources import files
from pathlib import Path

from .characters import cached_character_table, format_table, table_to_json
from .holsemigroup import hilbert_basis, verify_theorem1, verify_theorem2
from .induction import monomial_vectors
from .library import resolve_group
from .monomiality import MonomialityReport, is_almost_monomial, is_monomial, verify_witness
from .oracle import check_basis
from .permgroup import DEFAULT_CAP, CapExceeded, GroupError
from .subgroups import SUBGROUP_CAP, subgroup_classes

EXIT_OK, EXIT_ERROR, EXIT_CAP, EXIT_FAILS = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _cache_dir(args):
    if getattr(args, "no_cache", False):
        return None
    env = os.environ.get("HOLSEMI_CACHE")
    return env if env else str(Path.home() / ".cache" / "holsemi")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _group(args):
    return resolve_group(args.group, cap=args.cap)


def _table(G, args):
    return cached_character_table(G, _cache_dir(args))


# -- subcommands -------------------------------------------------------------


def cmd_table(args):
    G = _group(args)
    T = _table(G, args)
    if args.pretty:
        return EXIT_OK, format_table(T)
    return EXIT_OK, table_to_json(T)


def cmd_subgroups(args):
    G = _group(args)
    out = []
    for sc in subgroup_classes(G, args.subgroup_cap):
        out.append({
            "order": sc.order,
            "index": G.order // sc.order,
            "generators": [G.elements[g].cycle_string() for g in sc.generators],
            "normalizer_index": sc.normalizer_index,
        })
    return EXIT_OK, out


def cmd_induce(args):
    G = _group(args)
    T = _table(G, args)
    return EXIT_OK, [
        {"subgroup_order": d.subgroup.order, "subgroup_index_in_list": d.subgroup_index,
         "character_index": d.character_index, "multiplicities": list(d.multiplicities)}
        for d in monomial_vectors(G, T, args.subgroup_cap)
    ]


def _witness(d, T, chi, excl=None):
    return {
        "subgroup_order": d.subgroup.order,
        "subgroup_index_in_list": d.subgroup_index,
        "subgroup_generators": [g.cycle_string() for g in d.subgroup.generators],
        "character_index": d.character_index,
        "multiplicities": list(d.multiplicities),
        "verified": verify_witness(d, T, chi, excl),
    }


def cmd_check(args):
    G = _group(args)
    T = _table(G, args)
    report = MonomialityReport(G, T, monomial_vectors(G, T, args.subgroup_cap))
    out = {"group": args.group, "property": args.property, "degrees": list(T.degrees)}
    if args.property == "monomial":
        res = is_monomial(G, report)
        out["result"] = res.holds
        out["witnesses"] = [{"chi": i + 1, **_witness(d, T, i)} for i, d in sorted(res.witnesses.items())]
        if not res.holds:
            out["failure"] = {"chi": res.failure + 1}
    else:
        res = is_almost_monomial(G, report)
        out["result"] = res.holds
        out["witnesses"] = [{"contains": i + 1, "excludes": j + 1, **_witness(d, T, i, j)}
                            for (i, j), d in sorted(res.witnesses.items())]
        if not res.holds:
            out["failure_pair"] = [res.failure[0] + 1, res.failure[1] + 1]
    if not all(w["verified"] for w in out["witnesses"]):
        raise RuntimeError("a witness failed re-verification")
    return (EXIT_OK if out["result"] else EXIT_FAILS), out


def cmd_hilbert(args):
    v = _int_list(args.orders)
    if not v:
        raise UsageError("--orders needs at least one entry")
    hb = hilbert_basis(v)
    out = {"orders": v, "basis": [list(b) for b in hb.elements], "factorial": len(hb) == len(v)}
    if args.oracle:
        box = max(12, 2 * max(abs(x) for x in v))
        check = check_basis(v, hb.elements, box)
        out["oracle"] = {"box": box, **check}
        if not all(check.values()):
            print("oracle mismatch for Hilbert basis", file=sys.stderr)
            return EXIT_ERROR, out
    return EXIT_OK, out


def cmd_theorem1(args):
    G = _group(args)
    T = _table(G, args)
    data = monomial_vectors(G, T, args.subgroup_cap)
    rep = verify_theorem1(T.degrees, [d.multiplicities for d in data], args.bound)
    out = {"group": args.group, "degrees": list(T.degrees), "bound": args.bound, **rep.to_json()}
    return (EXIT_OK if not rep.counterexamples else EXIT_FAILS), out


def cmd_theorem2(args):
    d = _int_list(args.degrees)
    if not 1 <= args.l <= len(d):
        raise UsageError(f"--l must be between 1 and {len(d)}")
    if d[args.l - 1] > 2:
        raise UsageError(f"d_{args.l} = {d[args.l - 1]} exceeds 2")
    rep = verify_theorem2(d, args.l - 1, args.bound)
    out = {"degrees": d, "l": args.l, "bound": args.bound, **rep.to_json()}
    return (EXIT_OK if not rep.counterexamples else EXIT_FAILS), out


# -- batch -------------------------------------------------------------------


def _ref_label(ref):
    if isinstance(ref, dict):
        return ref.get("name") or "<inline>"
    return str(ref)


def batch_record(ref, bound: int = 3, cap: int = DEFAULT_CAP, subgroup_cap: int = SUBGROUP_CAP,
                 cache_dir: str | None = None) -> dict:
    """Analyze one manifest entry; errors are captured in the record."""
    rec = {"group": _ref_label(ref)}
    try:
        G = resolve_group(ref, cap=cap)
        T = cached_character_table(G, cache_dir)
        report = MonomialityReport(G, T, monomial_vectors(G, T, subgroup_cap))
        mono = is_monomial(G, report)
        almost = is_almost_monomial(G, report)
        rec.update(order=G.order, r=len(T.degrees), degrees=list(T.degrees),
                   monomial=mono.holds, almost_monomial=almost.holds)
        if not almost.holds:
            rec["failure_pair"] = [almost.failure[0] + 1, almost.failure[1] + 1]
        if almost.holds:
            t1 = verify_theorem1(T.degrees, [d.multiplicities for d in report.data], bound)
            rec["theorem1"] = {"bound": bound, "searched": t1.searched, "admissible": t1.admissible,
                               "counterexamples": [list(c) for c in t1.counterexamples],
                               "verified": not t1.counterexamples}
        else:
            rec["theorem1"] = {"bound": bound, "skipped": "group is not almost monomial"}
    except Exception as exc:  # noqa: BLE001 - error isolation per record
        rec["error"] = f"{type(exc).__name__}: {exc}"
    return rec


def _batch_worker(job):
    return batch_record(*job)


def run_batch(manifest, bound=3, cap=DEFAULT_CAP, subgroup_cap=SUBGROUP_CAP, cache_dir=None, jobs=1) -> dict:
    jobs_list = [(ref, bound, cap, subgroup_cap, cache_dir) for ref in manifest]
    if jobs > 1 and len(jobs_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_batch_worker, jobs_list))
    else:
        records = [_batch_worker(j) for j in jobs_list]
    ok = [r for r in records if "error" not in r]
    summary = {
        "groups": len(records),
        "errors": len(records) - len(ok),
        "monomial": sum(1 for r in ok if r["monomial"]),
        "almost_monomial": sum(1 for r in ok if r["almost_monomial"]),
        "theorem1_verified": sum(1 for r in ok if r["theorem1"].get("verified")),
    }
    return {"records": records, "summary": summary}


def cmd_batch(args):
    try:
        manifest = json.loads(Path(args.manifest).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read manifest: {exc}") from None
    if not isinstance(manifest, list):
        raise UsageError("manifest must be a JSON array of group references")
    report = run_batch(manifest, args.bound, args.cap, args.subgroup_cap, _cache_dir(args), args.jobs)
    if args.output:
        Path(args.output).write_text(json.dumps(report, indent=2) + "\n")
    return EXIT_OK, report


# -- parsing and rendering ---------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="aligned text instead of JSON")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the table cache")
    common.add_argument("--bound", type=int, default=3, help="box bound B for order-vector searches")
    common.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for batch runs")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element cap for group closure")
    common.add_argument("--subgroup-cap", type=int, default=SUBGROUP_CAP, help="largest |G| for subgroup search")

    p = argparse.ArgumentParser(prog="holsemi", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, func, helptext in [("table", cmd_table, "character table"),
                                 ("subgroups", cmd_subgroups, "subgroups up to conjugacy"),
                                 ("induce", cmd_induce, "induced linear characters")]:
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("group")
        sp.set_defaults(func=func)

    sp = sub.add_parser("check", parents=[common], help="monomial / almost monomial decision")
    sp.add_argument("group")
    sp.add_argument("--property", choices=["monomial", "almost-monomial"], required=True)
    sp.set_defaults(func=cmd_check)

    hol = sub.add_parser("hol", help="holomorphy semigroup tools")
    holsub = hol.add_subparsers(dest="hol_command", required=True)
    sp = holsub.add_parser("hilbert-basis", parents=[common])
    sp.add_argument("--orders", required=True, help="comma-separated order vector, e.g. -1,2,0")
    sp.set_defaults(func=cmd_hilbert)
    sp = holsub.add_parser("verify-theorem1", parents=[common])
    sp.add_argument("--group", required=True)
    sp.set_defaults(func=cmd_theorem1)
    sp = holsub.add_parser("verify-theorem2", parents=[common])
    sp.add_argument("--degrees", required=True, help="comma-separated character degrees")
    sp.add_argument("--l", type=int, required=True, help="1-based index with d_l <= 2")
    sp.set_defaults(func=cmd_theorem2)

    sp = sub.add_parser("batch", parents=[common], help="analyze every group in a manifest")
    sp.add_argument("manifest")
    sp.add_argument("--output", help="also write the report to this file")
    sp.set_defaults(func=cmd_batch)
    return p


def _join_negative_values(argv):
    """Let ``--orders -1,2`` through argparse, which would read ``-1,2`` as a flag."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--orders", "--degrees"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def render_pretty(obj) -> str:
    if isinstance(obj, str):
        return obj
    if isinstance(obj, list) and obj and all(isinstance(x, dict) for x in obj):
        keys = list(dict.fromkeys(k for x in obj for k in x))
        rows = [keys] + [[_cell(x.get(k, "")) for k in keys] for x in obj]
        widths = [max(len(row[c]) for row in rows) for c in range(len(keys))]
        return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows)
    if isinstance(obj, dict):
        width = max((len(k) for k in obj), default=0)
        lines = []
        for k, val in obj.items():
            if isinstance(val, list) and val and isinstance(val[0], dict):
                lines.append(f"{k}:")
                lines.extend("  " + line for line in render_pretty(val).splitlines())
            else:
                lines.append(f"{k.ljust(width)}  {_cell(val)}")
        return "\n".join(lines)
    return _cell(obj)


def _cell(x) -> str:
    if isinstance(x, (list, dict)):
        return json.dumps(x, separators=(",", ":"))
    return str(x)


def run(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    try:
        code, payload = args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, GroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.pretty:
        sys.stdout.write(render_pretty(payload) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return code


def load_schema(name: str) -> dict:
    """One of the JSON schemas shipped in ``holsemi/schemas``."""
    return json.loads((files("holsemi") / "schemas" / f"{name}.schema.json").read_text())


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
