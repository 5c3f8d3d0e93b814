"""Command-line front end: construction, decoding, simulation, bounds, and
reproduction of the bundled reference tables.

Exit codes: 0 success, 1 verification or diff failure, 2 usage error.
Usage errors also emit machine-readable JSON on stderr. Every JSON/CSV
artifact embeds a run manifest; identical manifests produce byte-identical
artifacts.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Optional

from . import __version__, fixtures
from .balance import (
    POLICY_MULTI,
    POLICY_SINGLE,
    BalancedCode,
    fixed_construct,
    fixed_index_balance,
    mbt_construct,
    mbt_length,
    mfmb_construct,
    min_flip_sets,
    ofmb_construct,
)
from .bitword import BitWord, ResidueSystem, moment, support_between
from .bounds import SWEEP_HEADER, bound_sweep, inner_length
from .channel import (
    FORCED_EVENTS,
    FORCED_NONE,
    FORCED_SUBSTITUTIONS,
    ChannelConfig,
    monte_carlo,
)
from .codebook import (
    DELETION,
    INSERTION,
    Codebook,
    builtin_fixture,
    load_codebook,
    min_distance,
    single_edit_correctable,
)
from .decode import DecodeContext, DecodeError, DecodeOutcome, framed_decode

SCHEMA_VERSION = 1

_SCHEME_FLAGS = {
    "mfmb": "MFMB",
    "ofmb": "OFMB",
    "fixed": "FIXED",
    "mbt": "MBT",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: A003 - argparse API
        print(json.dumps({"error": "usage", "message": message}), file=sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _manifest(subcommand: str, params: dict, digests: dict, seed=None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "momentflip",
        "version": __version__,
        "subcommand": subcommand,
        "parameters": params,
        "input_digests": digests,
        "seed": seed,
    }


def _emit_json(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_text(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _resolve_codebook(spec: str) -> tuple[Codebook, dict]:
    if spec in fixtures.FIXTURE_WORDS:
        return builtin_fixture(spec), {"codebook": f"fixture:{spec}"}
    text = Path(spec).read_text()
    digest = hashlib.sha256(text.encode()).hexdigest()
    return load_codebook(text), {"codebook": f"sha256:{digest}"}


def _load_context(path: str) -> tuple[BalancedCode, DecodeContext, dict]:
    raw = Path(path).read_text()
    digest = {"context": f"sha256:{hashlib.sha256(raw.encode()).hexdigest()}"}
    data = json.loads(raw)
    payload = data.get("balanced_code", data)
    bal = BalancedCode.from_json_dict(payload)
    return bal, DecodeContext.from_balanced(bal), digest


def _support_text(indices) -> str:
    return "{" + ", ".join(str(i) for i in indices) + "}"


def _balance_table(bal: BalancedCode) -> str:
    width = max(len(str(e.original)) for e in bal.entries)
    lines = [f"{'code word':<{width}}  moment  support"]
    rs = bal.rs
    for e in bal.entries:
        lines.append(
            f"{str(e.original):<{width}}  {moment(e.original, rs):>6}  "
            f"{_support_text(e.support.indices)}"
        )
    for w in bal.excluded:
        lines.append(f"{str(w):<{width}}  {moment(w, rs):>6}  excluded")
    return "\n".join(lines) + "\n"


def _cmd_balance(args) -> int:
    cb, digests = _resolve_codebook(args.codebook)
    scheme = _SCHEME_FLAGS[args.scheme]
    if scheme == "OFMB" and (args.m is not None or args.a is not None):
        raise ValueError(
            "the one-flip scheme fixes m = n+1 and selects the residue itself; "
            "drop --m/--a"
        )
    a = 0 if args.a is None else args.a
    if scheme == "MFMB":
        rs = ResidueSystem(cb.n + 1 if args.m is None else args.m, a)
        bal = mfmb_construct(cb, rs, flip_budget=args.budget, policy=args.policy)
    elif scheme == "OFMB":
        bal = ofmb_construct(cb)
    elif scheme == "FIXED":
        rs = ResidueSystem(cb.n + 1 if args.m is None else args.m, a)
        bal = fixed_construct(cb, rs)
    else:  # MBT output is longer than the input, so the default m differs
        n_out = mbt_length(cb.n)
        rs = ResidueSystem(n_out + 1 if args.m is None else args.m, a)
        bal = mbt_construct(cb, rs)
    params = {
        "codebook": args.codebook,
        "scheme": args.scheme,
        "m": bal.rs.modulus,
        "a": bal.rs.target,
        "budget": args.budget,
        "policy": args.policy,
    }
    payload = {
        "manifest": _manifest("balance", params, digests),
        "balanced_code": bal.to_json_dict(),
    }
    _emit_json(payload, args.out)
    if args.table:
        sys.stdout.write(_balance_table(bal))
    return 0


def _cmd_decode(args) -> int:
    bal, ctx, digests = _load_context(args.context)
    received = BitWord.parse(args.received)
    params = {"context": args.context, "received": args.received}
    try:
        outcome = framed_decode(received, ctx)
    except DecodeError as exc:
        outcome = DecodeOutcome("failure", detail={"reason": str(exc)})
    payload = {
        "manifest": _manifest("decode", params, digests),
        "outcome": outcome.to_json_dict(),
    }
    _emit_json(payload, args.out)
    return 0 if outcome.ok else 1


def _cmd_simulate(args) -> int:
    bal, ctx, digests = _load_context(args.context)
    avoid = tuple(int(x) for x in args.avoid.split(",") if x) if args.avoid else ()
    cfg = ChannelConfig(
        p_sub=args.p_sub,
        p_del=args.p_del,
        p_ins=args.p_ins,
        forced_event=args.forced_event,
        forced_subs=args.k,
        sub_avoid=avoid,
    )
    stats = monte_carlo(ctx, cfg, args.trials, args.seed, workers=args.workers)
    params = {
        "context": args.context,
        "trials": args.trials,
        "workers": args.workers,
        "p_sub": args.p_sub,
        "p_del": args.p_del,
        "p_ins": args.p_ins,
        "forced_event": args.forced_event,
        "k": args.k,
        "avoid": list(avoid),
    }
    manifest = _manifest("simulate", params, digests, seed=args.seed)
    payload = {"manifest": manifest, "stats": stats.to_json_dict()}
    _emit_json(payload, args.out)
    if args.csv:
        _append_csv_row(args.csv, manifest, bal, args, stats)
    return 0


_SIM_CSV_HEADER = (
    "scheme,m,a,trials,seed,workers,p_sub,p_del,p_ins,"
    "forced_event,k,failures,frame_error_rate"
)


def _append_csv_row(path: str, manifest: dict, bal, args, stats) -> None:
    p = Path(path)
    fer = stats.failures / stats.trials if stats.trials else 0.0
    row = (
        f"{bal.scheme},{bal.rs.modulus},{bal.rs.target},{args.trials},{args.seed},"
        f"{args.workers},{args.p_sub},{args.p_del},{args.p_ins},"
        f"{args.forced_event},{args.k},{stats.failures},{fer:.6f}\n"
    )
    if not p.exists() or p.stat().st_size == 0:
        head = f"# manifest: {json.dumps(manifest, sort_keys=True)}\n{_SIM_CSV_HEADER}\n"
        p.write_text(head + row)
    else:
        with p.open("a") as fh:
            fh.write(row)


def _sweep_csv(manifest: dict, rows) -> str:
    lines = [f"# manifest: {json.dumps(manifest, sort_keys=True)}", SWEEP_HEADER]
    lines.extend(row.csv() for row in rows)
    return "\n".join(lines) + "\n"


def _cmd_bounds(args) -> int:
    if args.fig:
        n = fixtures.FIG_SWEEP["n"]
        d_lo, d_hi = fixtures.FIG_SWEEP["d_lo"], fixtures.FIG_SWEEP["d_hi"]
    else:
        n = args.n
        if n is None:
            raise ValueError("--n is required unless --fig is given")
        if args.d is not None:
            d_lo = d_hi = args.d
        else:
            if args.d_lo is None or args.d_hi is None:
                raise ValueError("give either --d or both --d-lo and --d-hi")
            d_lo, d_hi = args.d_lo, args.d_hi
    rows = bound_sweep(n, range(d_lo, d_hi + 1))
    params = {"n": n, "d_lo": d_lo, "d_hi": d_hi, "fig": bool(args.fig)}
    manifest = _manifest("bounds", params, {})
    _emit_text(_sweep_csv(manifest, rows), args.out)
    return 0


def _cmd_verify(args) -> int:
    bal, ctx, digests = _load_context(args.context)
    balanced_words = list(bal.balanced_words())
    moments_ok = all(moment(w, bal.rs) == bal.rs.target for w in balanced_words)
    measured = min_distance(Codebook(balanced_words)) if len(balanced_words) >= 2 else None
    d_min_ok = measured == bal.d_min_balanced
    del_verdict = single_edit_correctable(Codebook(balanced_words), DELETION)
    ins_verdict = single_edit_correctable(Codebook(balanced_words), INSERTION)
    verdicts = {
        "moment_class": moments_ok,
        "d_min": {
            "stored": bal.d_min_balanced,
            "measured": measured,
            "ok": d_min_ok,
        },
        "deletion_balls_disjoint": del_verdict.correctable,
        "insertion_balls_disjoint": ins_verdict.correctable,
    }
    all_ok = (
        moments_ok and d_min_ok and del_verdict.correctable and ins_verdict.correctable
    )
    payload = {
        "manifest": _manifest("verify", {"context": args.context}, digests),
        "verdicts": verdicts,
        "all_ok": all_ok,
    }
    _emit_json(payload, args.out)
    return 0 if all_ok else 1


# --- reproduction of the bundled reference tables ---------------------------


def _check(name: str, ok: bool, detail=None) -> dict:
    entry = {"name": name, "pass": bool(ok)}
    if detail is not None:
        entry["detail"] = detail
    return entry


def _reproduce_table1() -> tuple[dict, list[dict]]:
    rs = ResidueSystem(8, 0)
    rows = []
    checks = []
    sigma_ok = True
    supports_ok = True
    minimal_sizes = {}
    for word_text, sigma, listed in fixtures.HAMMING_BALANCE_ROWS:
        word = BitWord.parse(word_text)
        got_sigma = moment(word, rs)
        found = min_flip_sets(word, rs, k_max=3)
        minimal_sizes[word_text] = found.minimal_size
        sigma_ok &= got_sigma == sigma
        for support in listed:
            supports_ok &= len(support) == found.minimal_size
            supports_ok &= tuple(support) in {s.indices for s in found.supports}
        rows.append(
            {
                "word": word_text,
                "sigma": got_sigma,
                "minimal_size": found.minimal_size,
                "minimal_supports": [list(s.indices) for s in found.supports],
                "listed_supports": [list(s) for s in listed],
            }
        )
    two_flip = tuple(w for w, k in minimal_sizes.items() if k == 2)
    checks.append(_check("sigma_column_matches", sigma_ok))
    checks.append(_check("listed_supports_minimal_and_found", supports_ok))
    checks.append(
        _check(
            "two_flip_words",
            two_flip == fixtures.HAMMING_TWO_FLIP_WORDS,
            {"got": list(two_flip), "expected": list(fixtures.HAMMING_TWO_FLIP_WORDS)},
        )
    )
    return {"rows": rows}, checks


def _reproduce_table2() -> tuple[dict, list[dict]]:
    cb = builtin_fixture(fixtures.HAMMING_7_16_3)
    bal = mfmb_construct(cb, ResidueSystem(8, 0), flip_budget=1, policy=POLICY_MULTI)
    got_rows = sorted(
        (str(e.original), moment(e.original, bal.rs), e.support.indices)
        for e in bal.entries
    )
    want_rows = sorted(
        (word, sigma, tuple(support))
        for word, sigma, support in fixtures.HAMMING_VARIANT_ROWS
    )
    got_set = {str(w) for w in bal.balanced_words()}
    want_set = set(fixtures.HAMMING_BALANCED_SET)
    bal_book = Codebook(bal.balanced_words())
    del_ok = single_edit_correctable(bal_book, DELETION).correctable
    ins_ok = single_edit_correctable(bal_book, INSERTION).correctable
    checks = [
        _check("variant_rows_match", got_rows == want_rows),
        _check(
            "balanced_set_matches",
            got_set == want_set,
            {
                "missing": sorted(want_set - got_set),
                "unexpected": sorted(got_set - want_set),
            },
        ),
        _check(
            "excluded_words",
            tuple(str(w) for w in bal.excluded) == fixtures.HAMMING_TWO_FLIP_WORDS,
        ),
        _check("deletion_balls_disjoint", del_ok),
        _check("insertion_balls_disjoint", ins_ok),
    ]
    return {"balanced_code": bal.to_json_dict()}, checks


def _reproduce_table3() -> tuple[dict, list[dict]]:
    rs = ResidueSystem(16, 0)
    fixed_positions = {1, 2, 4, 8}
    rows = []
    sigma_ok = True
    class_ok = True
    inside_fixed_ok = True
    fixed_count_ok = True
    fixed_word_ok = True
    variable_count_ok = True
    variable_support_ok = True
    for word_text, sigma, code1_text, code2_text in fixtures.BCH_BALANCE_ROWS:
        word = BitWord.parse(word_text)
        code1 = BitWord.parse(code1_text)
        code2 = BitWord.parse(code2_text)
        sigma_ok &= moment(word, rs) == sigma
        class_ok &= moment(code1, rs) == 0 and moment(code2, rs) == 0
        diff2 = support_between(word, code2)
        inside_fixed_ok &= set(diff2.indices) <= fixed_positions
        our_fixed, our_support = fixed_index_balance(word, rs)
        fixed_count_ok &= len(our_support) == len(diff2)
        fixed_word_ok &= our_fixed == code2
        diff1 = support_between(word, code1)
        found = min_flip_sets(word, rs, k_max=4)
        variable_count_ok &= found.minimal_size == len(diff1)
        variable_support_ok &= diff1.indices in {s.indices for s in found.supports}
        rows.append(
            {
                "word": word_text,
                "sigma": sigma,
                "variable_flips": len(diff1),
                "fixed_flips": len(diff2),
                "minimal_size": found.minimal_size,
            }
        )
    checks = [
        _check("sigma_column_matches", sigma_ok),
        _check("balanced_columns_in_class", class_ok),
        _check("fixed_column_flips_inside_fixed_indices", inside_fixed_ok),
        _check("fixed_flip_counts_match", fixed_count_ok),
        _check("fixed_words_match", fixed_word_ok),
        _check("variable_flip_counts_minimal", variable_count_ok),
        _check("variable_supports_found", variable_support_ok),
    ]
    return {"rows": rows}, checks


def _reproduce_fig1(manifest: dict) -> tuple[dict, list[dict], str]:
    cfg = fixtures.FIG_SWEEP
    rows = bound_sweep(cfg["n"], range(cfg["d_lo"], cfg["d_hi"] + 1))
    lo, hi = cfg["claimed_region"]
    losing = [r.d for r in rows if lo <= r.d <= hi and r.winner not in ("ofmb", "tie")]
    checks = [
        _check("inner_length", inner_length(cfg["n"]) == cfg["inner_length"]),
        _check(
            "ofmb_at_least_mbt_on_claimed_region",
            not losing,
            {"region": [lo, hi], "mbt_wins_at": losing},
        ),
    ]
    return {"winner_region_claimed": [lo, hi]}, checks, _sweep_csv(manifest, rows)


def _cmd_reproduce(args) -> int:
    params = {"target": args.target}
    manifest = _manifest("reproduce", params, {})
    csv_text = None
    if args.target == "table1":
        artifact, checks = _reproduce_table1()
    elif args.target == "table2":
        artifact, checks = _reproduce_table2()
    elif args.target == "table3":
        artifact, checks = _reproduce_table3()
    else:
        artifact, checks, csv_text = _reproduce_fig1(manifest)
    all_pass = all(c["pass"] for c in checks)
    summary = {"manifest": manifest, "checks": checks, "all_pass": all_pass}
    if csv_text is not None and args.out:
        _emit_text(csv_text, args.out)
    elif csv_text is not None:
        artifact["sweep_csv"] = csv_text
    if args.out and csv_text is None:
        _emit_json({"manifest": manifest, "artifact": artifact}, args.out)
    else:
        summary["artifact"] = artifact
    _emit_json(summary, None)
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="momentflip",
        description=(
            "Turn substitution-correcting block codes into codes that also "
            "correct one insertion or deletion, by flipping bits to balance "
            "the first-order moment."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("balance", help="construct a balanced code")
    p.add_argument("--codebook", required=True, help="file path or fixture name")
    p.add_argument("--scheme", required=True, choices=sorted(_SCHEME_FLAGS))
    p.add_argument("--m", type=int, default=None, help="modulus (default n+1)")
    p.add_argument("--a", type=int, default=None, help="target residue (default 0)")
    p.add_argument("--budget", type=int, default=1, help="flip budget (mfmb)")
    p.add_argument(
        "--policy", choices=(POLICY_SINGLE, POLICY_MULTI), default=POLICY_SINGLE
    )
    p.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p.add_argument(
        "--table", action="store_true", help="also print a word/moment/support table"
    )
    p.set_defaults(func=_cmd_balance)

    p = sub.add_parser("decode", help="decode one received frame")
    p.add_argument("--context", required=True, help="balance JSON artifact")
    p.add_argument("--received", required=True, help="received word (text form)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("simulate", help="run seeded channel trials")
    p.add_argument("--context", required=True, help="balance JSON artifact")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--p-sub", type=float, default=0.0, dest="p_sub")
    p.add_argument("--p-del", type=float, default=0.0, dest="p_del")
    p.add_argument("--p-ins", type=float, default=0.0, dest="p_ins")
    p.add_argument(
        "--forced-event", choices=FORCED_EVENTS, default=FORCED_NONE, dest="forced_event"
    )
    p.add_argument("--k", type=int, default=0, help="substitution count for k_substitutions")
    p.add_argument(
        "--avoid", default="", help="comma-separated positions never substituted"
    )
    p.add_argument("--out", default=None)
    p.add_argument("--csv", default=None, help="append a summary row to this CSV")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("bounds", help="exact bound sweep as CSV")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=int, default=None, help="single distance")
    p.add_argument("--d-lo", type=int, default=None, dest="d_lo")
    p.add_argument("--d-hi", type=int, default=None, dest="d_hi")
    p.add_argument(
        "--fig", action="store_true", help="emit the stock length-265 sweep"
    )
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="oracle checks of a balance artifact")
    p.add_argument("--context", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "reproduce", help="recompute a bundled reference table and diff it"
    )
    p.add_argument("target", choices=("table1", "table2", "table3", "fig1"))
    p.add_argument("--out", default=None, help="write the artifact here")
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
