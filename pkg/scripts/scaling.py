"""Time graph construction and atlas computation for growing n.

    python scripts/scaling.py 20 30 40
"""

import sys
import time

from partition_support.atlas import compute_atlas
from partition_support.transfer import build_graph


def main(ns):
    print("n,vertices,edges,graph_s,atlas_s")
    for n in ns:
        t0 = time.perf_counter()
        g = build_graph(n)
        t1 = time.perf_counter()
        compute_atlas(n)
        t2 = time.perf_counter()
        print(f"{n},{len(g.vertices)},{len(g.edges)},{t1 - t0:.2f},{t2 - t1:.2f}", flush=True)


if __name__ == "__main__":
    main([int(a) for a in sys.argv[1:]] or [10, 20, 30, 35, 40])
