#!/usr/bin/env python3
"""Throughput smoke for the filter -> label -> bucket path.

Streams synthetic pairs through the same functions the pipeline command
uses and reports pairs/second plus peak RSS. Regression-tracked numbers,
not a pass/fail gate.

Usage: python3 scripts/benchmark_throughput.py [--pairs 1000000]
"""
import argparse
import resource
import sys
import time
from pathlib import Path
from random import Random

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from levelforge.corpus import (  # noqa: E402
    FilterConfig,
    ParaphrasePair,
    bucket,
    attach_levels,
    filter_pair,
)
from levelforge.readability import Scheme  # noqa: E402

LONG = [
    "The committee number {i} reviewed the complicated proposal very carefully today.",
    "Scientists number {i} continue to study the consequences of environmental change.",
    "The administration number {i} announced comprehensive policies regarding transportation.",
]
SHORT = [
    "The group number {i} read the plan today.",
    "They number {i} study the changes now.",
    "The leaders number {i} set new travel rules.",
]
SWAP = [
    ("The brave fox number {i} jumped over the lazy dog.",
     "Over the lazy dog the brave fox number {i} jumped."),
    ("The tired child number {i} slept under the warm blanket.",
     "Under the warm blanket the tired child number {i} slept."),
]


def synthetic_pairs(n: int, seed: int = 0):
    rng = Random(seed)
    for i in range(n):
        sim = rng.choice((0.55, 0.65, 0.72, 0.80, 0.85))
        if i % 3 == 2:
            src_t, tgt_t = SWAP[i % len(SWAP)]
            src, tgt = src_t.format(i=i), tgt_t.format(i=i)
        else:
            src = LONG[i % len(LONG)].format(i=i)
            tgt = SHORT[i % len(SHORT)].format(i=i)
        yield ParaphrasePair(id=f"p{i:08d}", source=src, target=tgt, similarity=sim)


def peak_rss_mb() -> float:
    kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    return kb / 1024.0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=1_000_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    fcfg = FilterConfig()
    counts = {"kept": 0, "dropped": 0, "bucketed": 0}

    def kept_stream():
        for pair in synthetic_pairs(args.pairs, args.seed):
            keep, _reason = filter_pair(pair, fcfg)
            if keep:
                counts["kept"] += 1
                yield pair
            else:
                counts["dropped"] += 1

    start = time.perf_counter()
    for pair, reason in attach_levels(kept_stream(), Scheme.FKGL):
        if reason is not None:
            continue
        label, _ = bucket(pair, Scheme.FKGL)
        if label is not None:
            counts["bucketed"] += 1
    elapsed = time.perf_counter() - start

    rate = args.pairs / elapsed
    print(f"pairs processed:  {args.pairs:,}")
    print(f"kept / dropped:   {counts['kept']:,} / {counts['dropped']:,}")
    print(f"bucketed:         {counts['bucketed']:,}")
    print(f"elapsed:          {elapsed:.2f} s")
    print(f"throughput:       {rate:,.0f} pairs/s/core")
    print(f"peak RSS:         {peak_rss_mb():.1f} MB")
    target = 50_000
    status = "meets" if rate >= target else "below"
    print(f"informative target {target:,} pairs/s/core: {status}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
