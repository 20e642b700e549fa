#!/usr/bin/env python3
# End-to-end disk analysis for integral points on a rank-1 elliptic curve.
#
# G = int w0 w1 + a int w0 w0 + b is annihilated down to the algebraic
# function x + a by (d/omega_0)^2; each residue disk then contributes at
# most kappa_p (N_b + 2) zeros, with N_b read off the reduction of x + a.

from fractions import Fraction

from qcbound import ColemanSpec, CurveFunction, CurveModel, kappa
from qcbound.pipeline import run_pipeline

a, b = Fraction(2), Fraction(1)
C = CurveModel("odd", [b, a, 0, 1])        # y^2 = x^3 + 2x + 1
p = 5

spec = ColemanSpec(
    curve=C,
    p=p,
    a_matrix=[[a, 1], [0, 0]],             # int w0 w1 + a int w0 w0
    a_vector=[0, 0],
    h=CurveFunction.const(C, b),
    T=20,
)

result = run_pipeline(spec)
print(f"curve y^2 = x^3 + {a}x + {b}, p = {p}, kappa_p ~ {float(kappa(p)):.6f}")
print(f"{'disk':<10}{'kind':<24}{'N_b':>4}{'bound':>7}  D(G)")
for ana in result.analyses:
    if ana.disk.kind == "infinite":
        continue
    print(f"{str(ana.disk):<10}{ana.disk.kind:<24}{ana.n_b:>4}{ana.bound:>7}  "
          f"{ana.dg_candidate!r} (certified: {ana.certified})")
print()
print(f"disk-sum total bound: {result.total_bound}")
print(f"inner sum of (N_b + N): {result.inner_sum}")
print("note:", result.infinite_note)
