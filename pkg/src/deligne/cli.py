"""Command-line driver: verification suites, searches, ball files and JSON reports."""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .artin_complex import (ArtinComplex, ChamberBall, downward_flag_check, four_wheel_check,
                            sample_alternating_hexagons, sample_zigzag_hexagons)
from .coxeter import (CoxeterType, coxeter_group, default_triples, verify_gate_suite, verify_pair_gate_suite,
                      verify_projection_location, verify_wall_suite)
from .errors import BallTooLarge, ConfigError, DeligneError
from .freegrp import MAX_ISO_RANK, ls_bruteforce, verify_isomorphism

SCHEMA_VERSION = 1
MAX_RANK = 8


# -- plumbing -----------------------------------------------------------------

def parse_type(text: str) -> CoxeterType:
    try:
        ct = CoxeterType.parse(text)
    except (ValueError, KeyError) as exc:
        raise ConfigError(f"bad group type {text!r}: {exc}") from exc
    if ct.rank > MAX_RANK:
        raise ConfigError(f"rank {ct.rank} above the cap {MAX_RANK}")
    return ct


def nonnegative(name: str, value: int) -> int:
    if value is None or value < 0:
        raise ConfigError(f"--{name} must be a nonnegative integer")
    return value


def require_seed(args) -> int:
    if args.seed is None:
        raise ConfigError("--seed is required for sampled suites")
    return args.seed


def config_of(args) -> dict:
    skip = {"func", "out", "command_path"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def write_atomic(path: str, text: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=target.name, suffix=".tmp")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, target)


def emit(args, result: dict, passed: bool) -> int:
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "version": __version__,
        "command": args.command_path,
        "config": config_of(args),
        "seed": getattr(args, "seed", None),
        "passed": passed,
        "result": result,
    }
    text = json.dumps(report, indent=2, sort_keys=True, default=str) + "\n"
    if getattr(args, "out", None):
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return 0 if passed else 1


def ball_lines(cx: ArtinComplex, chambers) -> str:
    return "".join(json.dumps(f.to_json(), sort_keys=True) + "\n" for f in chambers)


def load_ball(cx: ArtinComplex, radius: int) -> ChamberBall:
    """Chamber ball of the given radius, read from or stored in ``DELIGNE_CACHE_DIR`` when set."""
    cache = os.environ.get("DELIGNE_CACHE_DIR")
    if not cache:
        return cx.chamber_ball(radius)
    path = Path(cache) / f"ball_{cx.ctype.name}_r{radius}.jsonl"
    if path.exists():
        with open(path, encoding="utf-8") as fh:
            chambers = [cx.A.from_json(json.loads(line)) for line in fh if line.strip()]
        return ChamberBall(cx, chambers)
    ball = cx.chamber_ball(radius)
    write_atomic(str(path), ball_lines(cx, ball.chambers))
    return ball


# -- verify -------------------------------------------------------------------

def cmd_verify_coxeter(args) -> int:
    ct = parse_type(args.type)
    W = coxeter_group(ct.name)
    t0 = time.time()
    order = len(W.elements())
    w0_len = W.length(W.w0())
    suites = [
        verify_gate_suite(W, 2),
        verify_pair_gate_suite(W, 2, translate=ct.order() > 24),
        verify_wall_suite(W, None if ct.order() <= 24 else 1000, seed=args.seed or 0),
    ]
    projection = [verify_projection_location(W, t) for t in default_triples(ct)]
    failures = sum(s["failed"] for s in suites) + sum(len(p["counterexamples"]) for p in projection)
    checks = {
        "order": order,
        "order_expected": ct.order(),
        "w0_length": w0_len,
        "reflections": ct.num_reflections(),
    }
    ok = order == ct.order() and w0_len == ct.num_reflections() and failures == 0
    result = {"type": ct.name, **checks, "suites": suites, "projection_location": projection,
              "failures": failures, "seconds": round(time.time() - t0, 3)}
    return emit(args, result, ok)


def cmd_verify_iso(args) -> int:
    if not 3 <= args.n <= MAX_ISO_RANK:
        raise ConfigError(f"--n must lie in 3..{MAX_ISO_RANK}")
    report = verify_isomorphism(args.n)
    return emit(args, report, report["passed"])


# -- search -------------------------------------------------------------------

def read_hexagons(path: str) -> list[dict]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    text = text.strip()
    if not text:
        raise ConfigError("empty hexagon file")
    try:
        if text.startswith("["):
            return json.loads(text)
        return [json.loads(line) for line in text.splitlines() if line.strip()]
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON: {exc}") from exc


def cmd_search(args) -> int:
    radius = nonnegative("search", args.search)
    data = read_hexagons(args.input)
    results = []
    refuted = 0
    cx_cache: dict = {}
    for i, item in enumerate(data):
        name = item.get("type") or args.type
        if not name:
            raise ConfigError(f"hexagon {i} has no group type")
        cx = cx_cache.setdefault(name, ArtinComplex(parse_type(name)))
        try:
            h = cx.hexagon_from_json(item)
        except (DeligneError, KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"hexagon {i} is invalid: {exc}") from exc
        entry = {
            "index": i,
            "embedded": h.is_embedded,
            "degenerate": not h.is_embedded,
            "shadow_edges": len(h.coxeter_shadow()["edges"]),
        }
        if cx.ctype.family == "D":
            entry["classification"] = cx.classify_zigzag(h)
        if args.mode == "center":
            ctype = cx.ctype.parse_generator(args.ctype) if args.ctype else None
            types = [ctype] if ctype else sorted(cx.S)
            z = None
            for c in types:
                z = cx.search_center(h, c, radius)
                if z is not None:
                    break
            entry["center"] = None if z is None else z.to_json()
            targets = list(h.vertices)
        else:
            found = cx.search_quasi_center(h, radius)
            z = None if found is None else found[0]
            entry["quasi_center"] = None if found is None else {"vertex": found[0].to_json(), "parity": found[1]}
            targets = [] if found is None else list(h.vertices)[found[1]::2]
        if z is not None:
            witnesses = [cx.adjacent_witness(z, x) if z != x else z.rep for x in targets]
            valid = all(f is not None and cx.validate_witness(f, z, x) for f, x in zip(witnesses, targets))
            entry["witnesses_valid"] = valid
            entry["witnesses"] = [f.to_json() for f in witnesses]
            refuted += not valid
        entry["outcome"] = "found" if z is not None else "unresolved"
        results.append(entry)
    found = sum(r["outcome"] == "found" for r in results)
    result = {"hexagons": len(results), "found": found, "unresolved": len(results) - found,
              "refuted": refuted, "cases": results}
    return emit(args, result, refuted == 0)


# -- enumerate / generate ----------------------------------------------------

def cmd_enumerate(args) -> int:
    ct = parse_type(args.type)
    radius = nonnegative("radius", args.radius)
    cx = ArtinComplex(ct)
    chambers = list(cx.A.enumerate_ball(radius))
    text = ball_lines(cx, chambers)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_generate(args) -> int:
    ct = parse_type(args.type)
    seed = require_seed(args)
    cx = ArtinComplex(ct)
    if args.family == "alternating":
        if ct.family != "D":
            raise ConfigError("the alternating family lives in D_n")
        hexes = sample_alternating_hexagons(cx, args.samples, seed, ball_radius=args.ball, kmax=args.kmax)
    else:
        hexes = sample_zigzag_hexagons(cx, load_ball(cx, args.ball), args.samples, seed)
    text = "".join(json.dumps(h.to_json(), sort_keys=True) + "\n" for h in hexes)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


# -- suites -------------------------------------------------------------------

def cmd_suite_alternating(args) -> int:
    ct = parse_type(args.type)
    seed = require_seed(args)
    radius = nonnegative("search", args.search)
    cx = ArtinComplex(ct)
    hexes = sample_alternating_hexagons(cx, args.samples, seed, ball_radius=args.ball, kmax=args.kmax)
    cases = []
    for h in hexes:
        z = cx.search_center(h, 2, radius)
        cases.append({"hexagon": h.to_json(), "induced": cx.is_induced(h.vertices),
                      "outcome": "found" if z is not None else "unresolved",
                      "center": None if z is None else z.to_json()})
    found = sum(c["outcome"] == "found" for c in cases)
    result = {"samples": len(cases), "found": found, "unresolved": len(cases) - found, "refuted": 0,
              "unresolved_rate": (len(cases) - found) / len(cases) if cases else 0.0, "cases": cases}
    return emit(args, result, True)


def cmd_suite_zigzag(args) -> int:
    ct = parse_type(args.type)
    if ct.family != "D":
        raise ConfigError("zigzag cycles are defined for D_n")
    seed = require_seed(args)
    radius = nonnegative("search", args.search)
    cx = ArtinComplex(ct)
    hexes = sample_zigzag_hexagons(cx, load_ball(cx, args.ball), args.samples, seed)
    cases = []
    for h in hexes:
        info = cx.classify_zigzag(h)
        parity = info["local_max"][0] % 2
        found = cx.search_quasi_center(h, radius, parities=(parity,))
        cases.append({"hexagon": h.to_json(), "local_max": info["local_max"],
                      "outcome": "found" if found else "unresolved",
                      "quasi_center": None if not found else found[0].to_json()})
    found = sum(c["outcome"] == "found" for c in cases)
    result = {"samples": len(cases), "found": found, "unresolved": len(cases) - found, "refuted": 0,
              "cases": cases}
    return emit(args, result, True)


_SHARED: dict = {}


def _fourwheel_shard(shard: int) -> dict:
    ball, radius, shards = _SHARED["fourwheel"]
    return four_wheel_check(ball, radius, shard=shard, shards=shards)


def cmd_suite_fourwheel(args) -> int:
    ct = parse_type(args.type)
    radius = nonnegative("search", args.search)
    cx = ArtinComplex(ct)
    ball = load_ball(cx, nonnegative("ball", args.ball))
    shards = max(1, args.shards)
    if shards == 1:
        report = four_wheel_check(ball, radius)
    else:
        _SHARED["fourwheel"] = (ball, radius, shards)
        with _fork_pool(shards) as pool:
            parts = list(pool.map(_fourwheel_shard, range(shards)))
        report = merge_reports(parts, keep=("vertices", "edges"))
    return emit(args, report, report["refuted"] == 0)


def _downward_shard(shard: int) -> dict:
    ball, radius, shards = _SHARED["downward"]
    return downward_flag_check(ball, radius, shard=shard, shards=shards)


def cmd_suite_downward_flag(args) -> int:
    ct = parse_type(args.type)
    if ct.family != "D":
        raise ConfigError("the subdivision is defined for D_n")
    radius = nonnegative("search", args.search)
    cx = ArtinComplex(ct)
    ball = load_ball(cx, nonnegative("ball", args.ball))
    shards = max(1, args.shards)
    if shards == 1:
        report = downward_flag_check(ball, radius)
    else:
        _SHARED["downward"] = (ball, radius, shards)
        with _fork_pool(shards) as pool:
            parts = list(pool.map(_downward_shard, range(shards)))
        report = merge_reports(parts, keep=("nodes", "midpoints"))
    return emit(args, report, report["refuted"] == 0)


def cmd_suite_ls(args) -> int:
    try:
        exps = [int(e) for e in args.exps.split(",") if e.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad exponent list {args.exps!r}") from exc
    if not exps or min(exps) < 2:
        raise ConfigError("exponents must be integers >= 2")
    report = ls_bruteforce(nonnegative("maxlen", args.maxlen), exps)
    return emit(args, report, report["violations"] == 0)


def _fork_pool(workers: int) -> ProcessPoolExecutor:
    import multiprocessing
    return ProcessPoolExecutor(max_workers=workers, mp_context=multiprocessing.get_context("fork"))


def merge_reports(parts: list[dict], keep=()) -> dict:
    """Sum the integer counters of shard reports and concatenate their case lists."""
    out: dict = {k: parts[0][k] for k in keep}
    for part in parts:
        for k, v in part.items():
            if k in keep:
                continue
            if isinstance(v, bool):
                out[k] = out.get(k, True) and v
            elif isinstance(v, int):
                out[k] = out.get(k, 0) + v
            elif isinstance(v, list):
                out.setdefault(k, []).extend(v)
            elif isinstance(v, dict):
                acc = out.setdefault(k, {})
                for kk, vv in v.items():
                    acc[kk] = acc.get(kk, 0) + vv
    for k, v in out.items():
        if isinstance(v, list):
            out[k] = sorted(v, key=lambda x: json.dumps(x, sort_keys=True))[:20]
    return out


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="deligne", description=__doc__)
    p.add_argument("--version", action="version", version=f"deligne {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, type_default="D4", out=True):
        sp.add_argument("--type", default=type_default, help="group type such as A3 or D4")
        sp.add_argument("--seed", type=int, default=None)
        if out:
            sp.add_argument("--out", default=None, help="output file (default stdout)")

    verify = sub.add_parser("verify").add_subparsers(dest="what", required=True)
    sp = verify.add_parser("coxeter")
    common(sp)
    sp.set_defaults(func=cmd_verify_coxeter)
    sp = verify.add_parser("iso")
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_verify_iso, seed=None)

    search = sub.add_parser("search").add_subparsers(dest="kind", required=True)
    for kind in ("center", "quasi-center"):
        sp = search.add_parser(kind)
        common(sp, type_default=None)
        sp.add_argument("--input", required=True, help="hexagon JSON or JSON-lines file")
        sp.add_argument("--search", type=int, default=4)
        if kind == "center":
            sp.add_argument("--ctype", default=None, help="center type, for example d2")
        sp.set_defaults(func=cmd_search, mode=kind)

    enum = sub.add_parser("enumerate").add_subparsers(dest="what", required=True)
    sp = enum.add_parser("ball")
    common(sp)
    sp.add_argument("--radius", type=int, default=1)
    sp.set_defaults(func=cmd_enumerate)

    gen = sub.add_parser("generate").add_subparsers(dest="family", required=True)
    for family in ("alternating", "zigzag"):
        sp = gen.add_parser(family)
        common(sp)
        sp.add_argument("--samples", type=int, default=50)
        sp.add_argument("--ball", type=int, default=2 if family == "alternating" else 1)
        sp.add_argument("--kmax", type=int, default=2)
        sp.set_defaults(func=cmd_generate)

    suite = sub.add_parser("suite").add_subparsers(dest="name", required=True)
    sp = suite.add_parser("alternating")
    common(sp)
    sp.add_argument("--samples", type=int, default=50)
    sp.add_argument("--ball", type=int, default=2)
    sp.add_argument("--kmax", type=int, default=2)
    sp.add_argument("--search", type=int, default=4)
    sp.set_defaults(func=cmd_suite_alternating)
    sp = suite.add_parser("zigzag")
    common(sp)
    sp.add_argument("--samples", type=int, default=50)
    sp.add_argument("--ball", type=int, default=1)
    sp.add_argument("--search", type=int, default=3)
    sp.set_defaults(func=cmd_suite_zigzag)
    for name, func in (("fourwheel", cmd_suite_fourwheel), ("downward-flag", cmd_suite_downward_flag)):
        sp = suite.add_parser(name)
        common(sp)
        sp.add_argument("--ball", type=int, default=1)
        sp.add_argument("--search", type=int, default=3)
        sp.add_argument("--shards", type=int, default=1)
        sp.set_defaults(func=func)
    sp = suite.add_parser("ls")
    sp.add_argument("--maxlen", type=int, default=3)
    sp.add_argument("--exps", default="2,3")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_suite_ls, seed=None)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.command_path = " ".join(str(x) for x in (args.command, getattr(args, "what", None) or
                                                   getattr(args, "kind", None) or getattr(args, "family", None) or
                                                   getattr(args, "name", None)) if x)
    try:
        return args.func(args)
    except BallTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConfigError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
