"""Time the brute-force tree check for growing balls and cross-check edge finders.

    python scripts/oracle_scaling.py 100 250 500 1000
"""
import sys
import time

from lenscap.oracle import build_ball, verify_tree

PAIRWISE_LIMIT = 400


def main(sizes):
    print(f"{'N':>6} {'V':>8} {'E':>8} {'pass':>5} {'verify s':>9} {'pairwise agrees':>16}")
    for n in sizes:
        t = time.perf_counter()
        rep = verify_tree(n)
        dt = time.perf_counter() - t
        agree = "-"
        if n <= PAIRWISE_LIMIT:
            agree = str(build_ball(n, "scan").edges == build_ball(n, "pairwise").edges)
        print(f"{n:>6} {rep.vertex_count:>8} {rep.edge_count:>8} {str(rep.passed):>5} {dt:>9.2f} {agree:>16}")
        if rep.first_counterexample:
            print("   ", rep.first_counterexample)


if __name__ == "__main__":
    main([int(a) for a in sys.argv[1:]] or [50, 100, 200, 400])
