"""Command-line front end.

Reads an edge list, streams results one per line as they are discovered
(the incremental delay is observable), and optionally reports delay
statistics on stderr.  Exit status: 0 on success, 2 when a structural
guard rejects the input, 1 on I/O or format errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass

from flipdom import driver, oracle
from flipdom.edge_dom import enumerate_min_eds, format_edge_set
from flipdom.graph import GraphFormatError, UnsupportedGraphError, parse_edge_list
from flipdom.mis import enumerate_mis

MODES = (
    "mds-line", "mds-bipartite-line", "mds-girth7", "eds", "mis",
    "oracle-mds", "oracle-eds", "oracle-mis",
)


@dataclass
class RunConfig:
    mode: str
    input: str | None = None      # path, None means stdin
    limit: int | None = None
    count_only: bool = False
    stats: bool = False
    force_general: bool = False


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="flipdom",
        description="Stream minimal dominating / edge dominating sets "
                    "with measured per-output delay.")
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--input", default=None,
                   help="edge-list file (default: standard input)")
    p.add_argument("--limit", type=int, default=None,
                   help="stop after this many results")
    p.add_argument("--count", action="store_true", dest="count_only",
                   help="print only the number of results")
    p.add_argument("--stats", action="store_true",
                   help="report delay statistics on stderr")
    p.add_argument("--force-general", action="store_true",
                   help="use the claw-free generator even on bipartite roots")
    return p


def _format_vset(vs) -> str:
    return " ".join(str(v) for v in vs)


def run(config: RunConfig) -> int:
    if config.limit is not None and config.limit < 1:
        print("error: --limit must be at least 1", file=sys.stderr)
        return 1
    try:
        if config.input is None:
            text = sys.stdin.read()
        else:
            with open(config.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        g = parse_edge_list(text)
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    state = driver.DriverState()
    try:
        if config.mode == "mds-line":
            stream = driver.enumerate_mds_line(g, state=state)
            fmt = _format_vset
        elif config.mode == "mds-bipartite-line":
            stream = driver.enumerate_mds_bipartite_line(g, state=state)
            fmt = _format_vset
        elif config.mode == "mds-girth7":
            stream = driver.enumerate_mds_girth7(g, state=state)
            fmt = _format_vset
        elif config.mode == "eds":
            stream = enumerate_min_eds(
                g, force_general=config.force_general, state=state)
            fmt = format_edge_set
        elif config.mode == "mis":
            state = None
            stream = enumerate_mis(g)
            fmt = _format_vset
        elif config.mode == "oracle-mds":
            state = None
            stream = iter(oracle.brute_mds(g))
            fmt = _format_vset
        elif config.mode == "oracle-mis":
            state = None
            stream = iter(oracle.brute_mis(g))
            fmt = _format_vset
        else:
            state = None
            stream = iter(oracle.brute_eds(g))
            fmt = format_edge_set

        emitted = 0
        t_last = time.perf_counter()
        delay_max = 0.0
        delay_sum = 0.0
        try:
            for item in stream:
                now = time.perf_counter()
                delay_max = max(delay_max, now - t_last)
                delay_sum += now - t_last
                t_last = now
                emitted += 1
                if not config.count_only:
                    print(fmt(item), flush=True)
                if config.limit is not None and emitted >= config.limit:
                    break
        except BrokenPipeError:
            # keep the interpreter's exit flush off the closed pipe
            os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
            return 0
    except UnsupportedGraphError as exc:
        print(f"unsupported input: {exc.reason}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if config.count_only:
        print(emitted, flush=True)
    if config.stats:
        mean = delay_sum / emitted if emitted else 0.0
        parts = [f"emitted={emitted}",
                 f"max_delay_ms={delay_max * 1e3:.3f}",
                 f"mean_delay_ms={mean * 1e3:.3f}"]
        if state is not None:
            st = driver.delay_stats(state)
            parts += [f"max_stack_depth={st.max_stack_depth}",
                      f"ledger_size={st.ledger_size}"]
        print("stats: " + " ".join(parts), file=sys.stderr)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(mode=args.mode, input=args.input, limit=args.limit,
                       count_only=args.count_only, stats=args.stats,
                       force_general=args.force_general)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
