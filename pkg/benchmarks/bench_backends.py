"""Compare the numba and numpy residue kernels.

    python benchmarks/bench_backends.py --nmax 1000 --table-nmax 200
"""
import argparse

from ocrank.bench import run_benchmarks


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=1)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--nmax", type=int, default=1000)
    ap.add_argument("--table-nmax", type=int, default=200)
    args = ap.parse_args()

    rows = run_benchmarks(args.d, args.k, args.nmax, args.table_nmax)
    by_task = {}
    for r in rows:
        by_task.setdefault((r["task"], r["nmax"]), {})[r["backend"]] = r["seconds"]
    print(f"{'task':28} {'nmax':>6} {'python':>9} {'numba':>9} {'numpy':>9} {'speedup':>8}")
    for (task, nmax), t in by_task.items():
        cells = [f"{t[b]:9.4f}" if b in t else " " * 9 for b in ("python", "numba", "numpy")]
        speed = f"{t['numpy'] / t['numba']:7.1f}x" if t.get("numba") else ""
        print(f"{task:28} {nmax:>6} {' '.join(cells)} {speed:>8}")


if __name__ == "__main__":
    main()
