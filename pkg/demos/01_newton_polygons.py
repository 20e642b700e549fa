#!/usr/bin/env python3
# Newton polygons of p-adic polynomials and certified zero counts.
#
# The lower convex hull of the points (i, v_p(c_i)) controls the valuations
# of the roots; the length of its slope <= -1 part bounds the number of
# roots z with |z| <= |p|.

from fractions import Fraction

from qcbound import INFINITY, Poly, TruncatedSeries, newton_polygon, zero_count_bound

p = 3

# A polynomial built from roots with known valuations: 3, 9, and 1/3.
# Exactly two roots have valuation >= 1.
f = Poly([1])
for root in (Fraction(3), Fraction(9), Fraction(1, 3)):
    f = f * Poly([-root, 1])

series = TruncatedSeries.from_polynomial(f.coeffs, f.degree + 1)
np_ = newton_polygon(series, p, floor_val=INFINITY)

print("polynomial coefficients (lowest first):")
print("  ", [str(c) for c in series.coeffs])
print("Newton polygon vertices (index, valuation):", list(np_.vertices))
print("edge slopes:", [str(s) for s in np_.slopes()])
print("zero count bound in |z| <= |p|:", zero_count_bound(series, p, floor_val=INFINITY))
print("expected from the factorization: 2  (roots 3 and 9; 1/3 lies outside)")
print()

# Truncated series need a valuation floor for the unknown tail.  The
# certification rule M + h_M < T + floor decides whether the slope <= -1
# part could still move when tail coefficients are revealed.
coeffs = [Fraction(27), Fraction(3), Fraction(0), Fraction(1)]
for T, floor in ((4, 0), (3, 0), (3, -1)):
    s = TruncatedSeries.from_polynomial(coeffs, T)
    poly = newton_polygon(s, p, floor_val=floor)
    print(f"T = {T}, floor = {floor}: vertices {list(poly.vertices)}, certified = {poly.certified}")
