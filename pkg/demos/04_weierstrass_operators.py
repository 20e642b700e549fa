#!/usr/bin/env python3
# Annihilating operators on a genus-2 curve: the determinant construction,
# the search for a nice index set, and the Weierstrass-disk operator with
# its det(B) unit certificates.

from qcbound import (
    CurveFunction,
    CurveModel,
    Poly,
    apply_series,
    build_annihilator,
    check_nice,
    nonweierstrass_chart,
    residue_disks,
    search_nice_S,
    weierstrass_annihilator,
    weierstrass_chart,
    weierstrass_local_annihilator,
)

f = Poly([0, -1, 0, 1]) * Poly([2, 0, 0, 1])       # (x^3 - x)(x^3 + 2)
C = CurveModel("even", f)
p = 7
g = C.genus
print(f"curve: y^2 = (x^3 - x)(x^3 + 2), genus {g}, p = {p}")
print()

# 1. a nice annihilator of the dx-quotients x^i/y on a non-Weierstrass disk
disk = next(d for d in residue_disks(C, p) if d.kind == "affine_nonweierstrass")
chart = nonweierstrass_chart(C, disk, p, 18)
funcs = [chart.expand(CurveFunction.x_power_over_y(C, i)) for i in range(2 * g)]
S = search_nice_S(funcs, p, 14, chart=chart)
D = build_annihilator(S, funcs)
print(f"disk {disk}: nice index set S = {S}, operator order {D.order}")
for i, F in enumerate(funcs):
    out = apply_series(D, F)
    print(f"  D(x^{i}/y expansion) = 0: {out.is_known_zero()}")
print()

# 2. the all-Weierstrass-disks operator and its unit certificates
D1 = weierstrass_annihilator(C, p=p)       # raises if det(B) fails to be a unit
print(f"Weierstrass operator: order {D1.order}, algebraic coefficients")
for disk in residue_disks(C, p):
    if disk.kind != "affine_weierstrass":
        continue
    det_b = D1.leading.value_mod_p(disk.x_bar, 0, p)
    wchart = weierstrass_chart(C, disk, p, 24)
    local = weierstrass_local_annihilator(wchart)
    cert = check_nice(local, p)
    print(f"  disk {disk}: det(B) = {det_b} mod {p}; divided-power local form nice: {cert.ok}")
