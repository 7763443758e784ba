"""Audit a run, then show the auditor catching a corrupted trace.

Run with ``python3 demos/audit_run.py [PROBLEM]``.
"""
import dataclasses
import sys

from trustfunnel.audit import audit_phase1, audit_phase2
from trustfunnel.params import SolverParams
from trustfunnel.phase1 import run_phase1
from trustfunnel.phase2 import run_phase2
from trustfunnel.problems import corpus_lookup


def main(name):
    prob = corpus_lookup(name)
    r1 = run_phase1(prob)
    print(audit_phase1(r1.trace).summary())
    if r1.status == "near_feasible":
        r2 = run_phase2(prob, r1.x, SolverParams(phase2_max_iter=5000))
        print(f"phase 2 status {r2.status}")
        print(audit_phase2(r2.trace, r2.eps_feas).summary())

    # let the funnel bound grow by 10% at the second record
    bad = list(r1.trace)
    bad[1] = dataclasses.replace(bad[1], vmax=bad[0].vmax * 1.1)
    print("\nafter corrupting the trace:")
    print(audit_phase1(bad).summary())


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "HS77")
