#!/usr/bin/env python3
# Point counting on hyperelliptic reductions and the closed-form bounds.
#
# Counts feed the bound evaluators; every bound is reported both as a
# certified rational (kappa_p rounded up) and as the strict integer below it.

from qcbound import (
    CurveModel,
    cor_potential_good,
    count_points_fp,
    degree_ledger,
    kappa,
    thm1_hyperelliptic,
    thm_integral,
)

# y^2 = x^5 + 1: genus 2, good reduction away from 2 and 5
C = CurveModel("odd", [1, 0, 0, 0, 0, 1])
print("y^2 = x^5 + 1 over small fields:")
for p in (3, 7, 11, 13):
    total, nw, w, inf = count_points_fp(C, p)
    print(f"  p = {p:>2}: total {total:>3} = {nw} non-W + {w} Weierstrass + {inf} infinite")
print()

print("kappa_p (certified upper values):")
for p in (3, 5, 7, 11, 13):
    print(f"  kappa_{p:<2} ~ {float(kappa(p)):.10f}")
print()

# The hyperelliptic rational-point bound at p = 7 with trivial local constants
total, _, w, _ = count_points_fp(C, 7)
rep = thm1_hyperelliptic(2, 7, 1, total, w)
print("hyperelliptic bound at p = 7, prod n_v = 1:")
print(f"  inner = {rep.inputs['inner']}, raw = {float(rep.raw_value):.4f}, integer bound = {rep.integer_bound}")
print()

# Integral points on the odd model (rank-g hypothesis attested by the caller)
rep = thm_integral(2, 7, 1, total - 1, w)
print("integral-point bound at p = 7, prod m_v = 1:")
print(f"  inner = {rep.inputs['inner']}, integer bound = {rep.integer_bound}")
print()

print("uniform potential-good-reduction bound 24g^3 + 228g^2 + 120g + 72:")
for g in range(2, 6):
    print(f"  g = {g}: {cor_potential_good(g).raw_value}")
print()

print("degree ledger, general construction, g = 2:")
for key, value in degree_ledger(2, "general").items():
    print(f"  {key}: {value}")
