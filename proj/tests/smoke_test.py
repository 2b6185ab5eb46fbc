import math
import sys

import _isodens as iso


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol * (1.0 + abs(b)), (a, b)


def main():
    approx(iso.strip.profile_i(math.pi), 2.0 * math.pi)
    approx(iso.strip.profile_ii(math.pi), 2.0 * math.pi)
    v0 = iso.strip.crossover_v0(2.0)
    assert v0["value"] > math.pi

    area, perim = iso.strip.profile_iii(0.5, 2.0)
    assert area > math.pi and perim > 0.0

    approx(iso.ball.profile_a(math.pi), 2.0 * math.pi)
    area, perim, shape = iso.ball.profile_b(0.3, 2.0)
    assert shape == "convex"
    c = iso.ball.crossover(0.5)
    assert c["v1"]["value"] > 0.5 * math.pi

    y = iso.gaussmod.crossover_y()
    assert 0.15 < y["value"] < 0.16
    approx(iso.gaussmod.dominance_constant(), -0.02251, 1e-3)

    assert iso.line_density_ratio(2.0) < 8.0 * math.pi

    r = iso.oracle_verify("ball:C", 0.5, math.pi / 4.0, segments=10000)
    assert max(r["rel_error"]) < 1e-3

    approx(iso.gauss_mod_total_mass(), 3.2131131218545574, 1e-12)

    results = iso.run_acceptance()
    assert len(results) == 12
    print("python smoke test passed")


if __name__ == "__main__":
    sys.exit(main())
