"""Time the hypercube kernels on both backends.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse

from primeterm import bench
from primeterm.kernels import BACKEND


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    print(f"active kernel backend: {BACKEND}")
    print(bench.report(bench.run(args.repeat)))


if __name__ == "__main__":
    main()
