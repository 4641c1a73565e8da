#!/usr/bin/env python3
"""Timing and agreement study over a random corpus of numerical monoids.

For each sampled monoid the script computes the Apery set of the largest
generator along both routes (definition scan vs staircase), the type set
along both routes, and reports basis sizes and wall-clock times.  Always
exits nonzero if any disagreement shows up, so it doubles as a soak test.

Usage: python scripts/corpus_study.py [--count 50] [--seed 0] [--max-gen 60]
"""

import argparse
import statistics
import sys
import time

from aperykit.apery import apery_delta, type_set
from aperykit.groebner import buchberger, ideal_generators
from aperykit.orders import apery_order
from aperykit.sampling import random_corpus
from aperykit.semigroup import apery_bruteforce, typeset_bruteforce


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--kmin", type=int, default=3)
    parser.add_argument("--kmax", type=int, default=5)
    parser.add_argument("--max-gen", type=int, default=60)
    args = parser.parse_args()

    corpus = random_corpus(args.seed, args.count, args.kmin, args.kmax, args.max_gen)
    rows = []
    mismatches = 0
    for S in corpus:
        k = len(S.generators)
        t0 = time.perf_counter()
        order = apery_order(k, k, S.generators)
        basis = buchberger(ideal_generators(S, order), order)
        report = apery_delta(S, k, basis=basis)
        t_engine = time.perf_counter() - t0

        t0 = time.perf_counter()
        expected = apery_bruteforce(S, S.generators[-1])
        t_oracle = time.perf_counter() - t0

        t0 = time.perf_counter()
        tr = type_set(S)
        t_typeset = time.perf_counter() - t0
        ts_oracle = typeset_bruteforce(S)

        ok = list(report.elements) == expected and list(tr.type_set) == ts_oracle
        mismatches += not ok
        rows.append((S.generators, len(basis.elements), t_engine, t_oracle, t_typeset, ok))

    print(f"{'generators':<24} {'|basis|':>7} {'engine':>8} {'oracle':>8} {'typeset':>8}  ok")
    for gens, nb, te, to, tt, ok in rows:
        print(f"{str(list(gens)):<24} {nb:>7} {te:>7.3f}s {to:>7.3f}s {tt:>7.3f}s  {'yes' if ok else 'NO'}")
    engine_times = [r[2] for r in rows]
    typeset_times = [r[4] for r in rows]
    print(
        f"\n{args.count} monoids, seed {args.seed}: "
        f"engine median {statistics.median(engine_times):.3f}s "
        f"(max {max(engine_times):.3f}s), "
        f"typeset median {statistics.median(typeset_times):.3f}s "
        f"(max {max(typeset_times):.3f}s)"
    )
    if mismatches:
        print(f"{mismatches} DISAGREEMENTS -- this should never happen")
        return 2
    print("all routes agree")
    return 0


if __name__ == "__main__":
    sys.exit(main())
