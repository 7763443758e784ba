"""Solve MARATOS with both phases and show how the iterates move.

Run with ``python3 demos/solve_maratos.py``.
"""
from trustfunnel.driver import RunConfig, run_solver


def main():
    out = run_solver(RunConfig(problem="MARATOS", audit=True))
    r1, r2, row = out

    print("phase 1 (drive the constraint violation down inside the funnel)")
    print(f"{'k':>3} {'kind':12} {'f':>12} {'v':>10} {'vmax':>10} {'|n|':>9} {'|t|':>9}")
    for rec in r1.trace:
        print(f"{rec.k:3d} {rec.kind:12} {rec.f:12.8f} {rec.v:10.2e} {rec.vmax:10.2e} "
              f"{rec.n_norm:9.2e} {rec.t_norm:9.2e}")

    print(f"\nphase 2 at residual level {r2.eps_feas:.1e} (every 10th step)")
    print(f"{'k':>3} {'accepted':8} {'t':>14} {'f':>14} {'|c|':>9}")
    for rec in r2.trace[::10] + [r2.trace[-1]]:
        print(f"{rec.k:3d} {str(rec.accepted):8} {rec.t:14.10f} {rec.f:14.10f} "
              f"{rec.c_norm:9.2e}")

    print(f"\nstatus {out.status}, f = {row.f_final:.8f} (optimum -1), "
          f"relative KKT {row.kkt:.1e}")
    for rep in out.audits:
        print(rep.summary())


if __name__ == "__main__":
    main()
