"""Runtime versus channel count for APTS and GGS at fixed length."""
import argparse

from aptseg.bench import bench_scaling, format_table, stretch
from aptseg.generators import gen_example1


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--length", type=int, default=430)
    ap.add_argument("--counts", default="10,20,40,70,100")
    ap.add_argument("--algos", default="apts,ggs")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    counts = [int(c) for c in args.counts.split(",")]
    algos = args.algos.split(",")
    base = stretch(gen_example1(), args.length)
    rows = bench_scaling(base, counts, algos, seed=args.seed, repeat=args.repeat)
    print(format_table(rows, algos), end="")
    first = rows[0]
    for row in rows[1:]:
        ratios = ", ".join(f"{a} x{row[a] / first[a]:.2f}" for a in algos)
        print(f"# n_x {first['n_x']} -> {row['n_x']}: {ratios}")


if __name__ == "__main__":
    main()
