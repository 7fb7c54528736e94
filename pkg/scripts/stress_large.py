#!/usr/bin/env python3
"""Time and memory profile of construction plus full verification at desk
scale (n = 20 is ~10.5M edges)."""

import argparse
import resource
import time

from cubetrees.construct import construct
from cubetrees.hypercube import DEFAULT_DIMENSION_CAP
from cubetrees.verify import verify_decomposition


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", "--dimension", type=int, default=20)
    parser.add_argument("--cap-override", type=int, default=DEFAULT_DIMENSION_CAP)
    args = parser.parse_args()

    start = time.perf_counter()
    dec = construct(args.dimension, cap=args.cap_override)
    built = time.perf_counter()
    report = verify_decomposition(dec)
    done = time.perf_counter()

    peak_mb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
    print(f"n={dec.n}: {dec.k} trees over {dec.num_edges} edges")
    print(f"construct: {built - start:.2f}s")
    print(f"verify:    {done - built:.2f}s ({'PASS' if report.overall else 'FAIL'})")
    print(f"peak RSS:  {peak_mb:.0f} MB")


if __name__ == "__main__":
    main()
