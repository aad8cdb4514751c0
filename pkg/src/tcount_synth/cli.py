"""Command-line front end.

Subcommands: tcount (heuristic synthesis), tcount-provable (exact
decision), gen (fixture and random circuit generation), bench (the
benchmark suites).  Inputs are ".qc" gate lists or ".json" exact
unitaries.  Exit codes: 0 success, 1 invalid input, 2 inconclusive,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time

from .channel import ChannelMatrix, channel_of_unitary
from .circuits import parse_circuit, unitary_of_circuit
from .coset import MemoryBudgetError, build_databases
from .fixtures import (FIXTURE_CIRCUITS, FIXTURE_UNITARIES, random_circuit)
from .heuristic import (FrontierCapError, HeuristicConfig,
                        HeuristicInconclusive, min_t_synth)
from .provable import ProvableConfig, count_t_decide
from .unitary import RingUnitary

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_INCONCLUSIVE = 2
EXIT_RESOURCE_CAP = 3


class InputError(Exception):
    pass


def load_channel(path: str) -> ChannelMatrix:
    try:
        if path.endswith(".qc"):
            with open(path) as fh:
                return channel_of_unitary(unitary_of_circuit(
                    parse_circuit(fh.read())))
        if path.endswith(".json"):
            with open(path) as fh:
                return channel_of_unitary(RingUnitary.from_json(fh.read()))
    except (OSError, ValueError, KeyError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    raise InputError(f"{path}: expected a .qc or .json input")


def cmd_tcount(args) -> int:
    chan = load_channel(args.input)
    cfg = HeuristicConfig(method=args.method,
                          frontier_cap=args.frontier_cap,
                          m_cap=args.m_cap,
                          join_first_two=not args.no_join2,
                          method_fallback=not args.no_fallback)
    telemetry: dict = {}
    try:
        d = min_t_synth(chan, cfg, telemetry)
    except HeuristicInconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except FrontierCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_CAP
    report = {
        "input": args.input,
        "algorithm": "heuristic",
        "parameters": {"method": cfg.method, "frontier_cap": cfg.frontier_cap,
                       "join_first_two": cfg.join_first_two},
        "tcount": d.tcount,
        "paulis": d.pauli_strings(),
        "clifford_channel": d.clifford.to_json_dict(),
        "telemetry": {"max_frontier": telemetry.get("max_frontier"),
                      "levels": telemetry.get("levels"),
                      "wall_ms": telemetry.get("wall_ms")},
    }
    if args.json:
        print(json.dumps(report))
    else:
        print(f"input      {args.input}")
        print(f"tcount     {d.tcount}")
        print(f"paulis     {' '.join(d.pauli_strings()) or '(none)'}")
        print(f"frontier   {telemetry.get('max_frontier')}")
        print(f"wall_ms    {telemetry.get('wall_ms'):.1f}")
    return EXIT_OK


def cmd_tcount_provable(args) -> int:
    chan = load_channel(args.input)
    db_dir = args.db_dir or os.environ.get("TCDB_DIR")
    cfg = ProvableConfig(m=args.m, c=args.c, entry_cap=args.mem_cap,
                         db_dir=db_dir)
    try:
        databases = build_databases(chan.n, cfg.depth, cfg.entry_cap, db_dir)
        t = count_t_decide(chan, cfg, databases)
    except MemoryBudgetError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_CAP
    sizes = [len(db) for db in databases]
    if t is None:
        print(f"NO (> {args.m})")
    elif args.json:
        print(json.dumps({"input": args.input, "algorithm": "provable",
                          "parameters": {"m": args.m, "c": args.c},
                          "tcount": t, "db_sizes": sizes}))
    else:
        print(f"tcount     {t}")
        print(f"db_sizes   {sizes}")
    return EXIT_OK


def cmd_gen(args) -> int:
    name = args.fixture
    if name == "random":
        if args.n is None or args.tgates is None:
            raise InputError("random needs --n and --tgates")
        c = random_circuit(args.n, args.tgates, args.seed)
        payload = c.to_text()
        default = f"random_n{args.n}_t{args.tgates}_s{args.seed}.qc"
    elif name in FIXTURE_CIRCUITS:
        payload = FIXTURE_CIRCUITS[name]().to_text()
        default = f"{name}.qc"
    elif name in FIXTURE_UNITARIES:
        payload = FIXTURE_UNITARIES[name]().to_json()
        default = f"{name}.json"
    else:
        raise InputError(f"unknown fixture {name!r}")
    out = args.out or default
    with open(out, "w") as fh:
        fh.write(payload)
    print(out)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.suite == "table1":
        rows = []
        for name in ("toffoli", "fredkin", "peres", "quantum_or",
                     "negated_toffoli"):
            chan = channel_of_unitary(
                unitary_of_circuit(FIXTURE_CIRCUITS[name]()))
            rows.append(_bench_one(name, chan, args.repeat))
        print(f"{'circuit':<18}{'tcount':>7}{'wall_s':>10}{'frontier':>10}")
        for name, t, wall, frontier in rows:
            print(f"{name:<18}{t:>7}{wall:>10.2f}{frontier:>10}")
        return EXIT_OK
    # table2: random circuits, report mean/std across samples
    print(f"{'n':>3}{'tgates':>8}{'t_mean':>8}{'t_std':>7}"
          f"{'wall_s_mean':>13}{'frontier_max':>14}")
    for n, tgates, samples in ((2, 10, 10), (2, 20, 10), (3, 10, 10)):
        ts, walls, frontiers = [], [], []
        for seed in range(samples):
            chan = channel_of_unitary(
                unitary_of_circuit(random_circuit(n, tgates, seed)))
            for _ in range(args.repeat):
                _, t, wall, frontier = _bench_one("random", chan, 1)
                ts.append(t)
                walls.append(wall)
                frontiers.append(frontier)
        std = statistics.pstdev(ts) if len(ts) > 1 else 0.0
        print(f"{n:>3}{tgates:>8}{statistics.mean(ts):>8.1f}{std:>7.2f}"
              f"{statistics.mean(walls):>13.3f}{max(frontiers):>14}")
    return EXIT_OK


def _bench_one(name: str, chan: ChannelMatrix, repeat: int):
    best_wall = None
    for _ in range(max(repeat, 1)):
        telemetry: dict = {}
        start = time.monotonic()
        d = min_t_synth(chan, HeuristicConfig(), telemetry)
        wall = time.monotonic() - start
        if best_wall is None or wall < best_wall:
            best_wall = wall
    return name, d.tcount, best_wall, telemetry.get("max_frontier")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tcsynth",
                                 description=__doc__.strip().splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tcount", help="heuristic T-count synthesis")
    p.add_argument("input")
    p.add_argument("--method", choices=["A", "B", "C"], default="C")
    p.add_argument("--frontier-cap", type=int, default=4096)
    p.add_argument("--m-cap", type=int, default=None)
    p.add_argument("--no-join2", action="store_true")
    p.add_argument("--no-fallback", action="store_true",
                   help="disable trying the other selection methods at "
                        "each depth before deepening")
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=int, default=1,
                   help="reserved; current searches are single-threaded")
    p.set_defaults(func=cmd_tcount)

    p = sub.add_parser("tcount-provable", help="exact T-count decision")
    p.add_argument("input")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--db-dir", default=None)
    p.add_argument("--mem-cap", type=int, default=2_000_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tcount_provable)

    p = sub.add_parser("gen", help="write a fixture or random circuit")
    p.add_argument("fixture")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--tgates", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a benchmark suite")
    p.add_argument("--suite", choices=["table1", "table2"], default="table1")
    p.add_argument("--repeat", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except MemoryBudgetError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_CAP


if __name__ == "__main__":
    sys.exit(main())
