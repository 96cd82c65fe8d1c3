"""Smoke test for the lemniscate_py extension module.

Build and install first, e.g. ``maturin develop`` or
``pip install --no-build-isolation .`` from crates/python.
"""

import cmath
import json
import math

import lemniscate_py as lp


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol


def main():
    region = lp.BoothRegion(0.5)
    assert close(region.real_crossing(), 2.0)
    assert close(region.imaginary_crossing(), 2.0 / 3.0)
    assert region.contains(1.99) and not region.contains(2.01)
    assert len(region.boundary(64)) == 64

    z = 0.3 + 0.4j
    assert close(lp.eval_f_alpha(0.5, z), z / (1 - 0.5 * z * z))
    assert close(lp.evaluate_tilde_f(0.0, 0.5), 0.5 * math.exp(0.5))

    s = lp.PowerSeries.f_alpha(0.5, 5)
    assert [c.real for c in s.coeffs] == [0, 1, 0, 0.5, 0, 0.25]
    e = lp.PowerSeries([0, 1], 4).exp()
    assert close(e.coeffs[4], 1 / 24)
    back = lp.PowerSeries.from_json(s.to_json())
    assert back.coeffs == s.coeffs and close(s(z), back(z))

    r = lp.radius_starlike(0.25)
    assert close(r["r_bisect"], 2 * (math.sqrt(2) - 1))
    assert lp.alpha_for_radius(1.0) == 0.0

    assert lp.gn_nonmembership(2, 0.8, 0.0) == ("NotInClass", "i")
    v = lp.membership_test("gn:n=2,c=0.8", 0.0)
    assert v.status == "ViolatedAt" and not v.holds()
    assert json.loads(v.to_json())["status"] == "ViolatedAt"
    assert lp.membership_test("tilde:alpha=0.2", 0.2, grid="0.5,0.9:64").holds()

    b = lp.re_f_over_z_bounds(0.1, 0.0)
    assert b["lower"] == 1.0 and b["upper"] == 1.0
    assert lp.curvature_min(0.1) > 0 > lp.curvature_min(0.2)
    assert close(lp.convexity_check_p(0.25)["k_alpha"], 1 / 3)

    checks = lp.run_suite("radii")
    assert all(passed for _, passed, _ in checks), checks

    try:
        lp.BoothRegion(1.5)
    except ValueError:
        pass
    else:
        raise AssertionError("alpha outside [0, 1) must raise")

    assert cmath.isclose(lp.eval_f_alpha(0.0, 1j), 1j)
    print("smoke test passed")


if __name__ == "__main__":
    main()
