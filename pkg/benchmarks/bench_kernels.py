"""Compare the numba kernels against the fallback path.

Each backend runs in its own interpreter because the choice is fixed at
import time by FIBWORDS_NO_NUMBA.

    python benchmarks/bench_kernels.py [--n 20] [--q 3/2] [--gray-q 3 --gray-n 5]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from fibwords import _kernels
from fibwords.core import parse_rational
from fibwords.words import census
from fibwords.graycode import search_1gray

n, q, gq, gn = int(sys.argv[1]), parse_rational(sys.argv[2]), parse_rational(sys.argv[3]), int(sys.argv[4])
census(q, 4); search_1gray(gq, 2)  # warm-up / JIT compile
t0 = time.perf_counter(); c = census(q, n, cap=n); t1 = time.perf_counter()
g = search_1gray(gq, gn); t2 = time.perf_counter()
print(json.dumps({"numba": _kernels.HAS_NUMBA, "census_s": t1 - t0, "gray_s": t2 - t1,
                  "w_n": c.by_length[-1], "gray": g.status, "nodes": g.nodes_expanded}))
"""


def run(env_flag, args):
    env = dict(os.environ)
    if env_flag:
        env["FIBWORDS_NO_NUMBA"] = "1"
    else:
        env.pop("FIBWORDS_NO_NUMBA", None)
    res = subprocess.run([sys.executable, "-c", WORKER, str(args.n), args.q, args.gray_q, str(args.gray_n)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=20)
    ap.add_argument("--q", default="3/2")
    ap.add_argument("--gray-q", default="3")
    ap.add_argument("--gray-n", type=int, default=5)
    args = ap.parse_args()
    fast = run(False, args)
    slow = run(True, args)
    assert fast["w_n"] == slow["w_n"], "backends disagree on the census"
    print(f"census q={args.q} n<={args.n}: w_n={fast['w_n']}")
    print(f"  numba : {fast['census_s']:.3f} s  (active={fast['numba']})")
    print(f"  numpy : {slow['census_s']:.3f} s")
    print(f"gray search q={args.gray_q} n={args.gray_n}: {fast['gray']} ({fast['nodes']} nodes)")
    print(f"  numba : {fast['gray_s']:.4f} s")
    print(f"  python: {slow['gray_s']:.4f} s")


if __name__ == "__main__":
    main()
