"""Compare full trust-funnel phase 1 with the feasibility-only variant.

Both modes reach a nearly feasible point; the full mode also lowers the
objective on the way, which usually shortens phase 2.  Phase 2 is capped
so the demo finishes in a few seconds.

Run with ``python3 demos/compare_modes.py [PROBLEM ...]``.
"""
import sys

from trustfunnel.driver import compare_modes, format_table, run_benchmark
from trustfunnel.params import SolverParams

DEFAULT = ["BT2", "BT3", "BT6", "BT11", "BYRDSPHR", "HS52", "HS77", "HS79", "MARATOS"]


def main(names):
    params = SolverParams(phase2_max_iter=2000)
    rows = run_benchmark(names, params=params, time_limit=None)
    print(format_table(rows))
    print(compare_modes(rows))
    print("\nobjective at the end of phase 1:")
    by = {(r.problem, r.mode): r for r in rows}
    for name in names:
        full, vonly = by[name, "full"], by[name, "v_only"]
        print(f"  {name:9s} full {full.p1_fval:+.4e}   v_only {vonly.p1_fval:+.4e}")


if __name__ == "__main__":
    main(sys.argv[1:] or DEFAULT)
