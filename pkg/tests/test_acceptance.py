"""Acceptance criteria, one test each; every test records a PASS/FAIL line.

The lines are echoed at the end of the pytest run (see conftest.py).
Stretch goals are reported on their own lines and never fail the suite.
"""
import json
import os
import random
import resource
import time

from conftest import ACCEPTANCE_LINES, cached_o, cached_series
from peo import cli
from peo.analysis import (CATALOGUE, DELTA1, DELTA2_FACTOR, TAU1, constant_multiple,
                          discriminant_y, estimate_growth, exact_divide, growth_from_polynomial,
                          supermultiplicative_violations, verify_algebraic)
from peo.exact import count_prime, count_standard, root_word_profile
from peo.golden import O_N, TABLE1
from peo.oracle import (brute_family_counts, brute_orientations, eulerian_maps_count,
                        family_generator, generate_eulerian_maps, maps_series)
from peo.series import divided_difference_poly, poly_mul, poly_trim
from peo.solver import solve
from peo.systems import FAMILIES, build_system

SUBSETS = ("subset", "prime_subset")
SUPERSETS = ("superset", "prime_superset")

def report(num, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line

def stretch(title, ok, detail=""):
    line = f"[{'PASS' if ok else 'MISS'}] stretch: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)

def peak_gb():
    return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 2 ** 20

def run_cli(tmp_path, *argv):
    out = tmp_path / "out.json"
    code = cli.main(list(argv) + ["-o", str(out)])
    return code, json.loads(out.read_text())

def test_criterion_01_standard_exact(tmp_path):
    t0 = time.time()
    code, doc = run_cli(tmp_path, "count", "exact", "--method", "standard", "-n", "11")
    dt = time.time() - t0
    ok = code == 0 and doc["values"] == [str(v) for v in O_N[:12]] and dt < 600
    report(1, "standard recurrence reproduces o_0..o_11", ok,
           f"o_11={doc['values'][-1]}, {dt:.1f}s, peak {peak_gb():.2f} GB")

def test_criterion_02_prime_exact(tmp_path):
    t0 = time.time()
    code, doc = run_cli(tmp_path, "count", "exact", "--method", "prime", "-n", "12")
    dt = time.time() - t0
    ok = code == 0 and doc["values"] == [str(v) for v in O_N[:13]] and dt < 1800
    report(2, "prime recurrence reproduces o_0..o_12", ok,
           f"o_12={doc['values'][-1]}, {dt:.1f}s, peak {peak_gb():.2f} GB")
    t0 = time.time()
    o13 = cached_o(13)
    stretch("o_13 by the prime recurrence", list(o13) == O_N[:14], f"{o13[-1]}, {time.time() - t0:.1f}s")
    if os.environ.get("PEO_STRETCH"):
        t0 = time.time()
        o14 = count_prime(14)
        stretch("o_14 by the prime recurrence", o14 == O_N[:15], f"{o14[-1]}, {time.time() - t0:.1f}s")

def test_criterion_03_table1():
    t0 = time.time()
    bad = []
    for (fam, k), row in TABLE1.items():
        if k <= 3 and cached_series(fam, k, 7)[1:] != tuple(row):
            bad.append(f"{fam} k={k}")
    dt = time.time() - t0
    report(3, "reference family table, k <= 3, n = 1..7", not bad and dt < 300,
           f"{dt:.2f}s" + (f", mismatches {bad}" if bad else ""))
    for fam in ("prime_subset", "prime_superset"):
        got = list(cached_series(fam, 4, 7)[1:])
        stretch(f"reference table row {fam} k=4", got == TABLE1[(fam, 4)], str(got[-1]))

def test_criterion_04_system_sizes():
    want = {("subset", 1): 5, ("subset", 2): 21, ("prime_subset", 1): 6, ("prime_subset", 2): 30,
            ("superset", 1): 3, ("superset", 2): 15, ("prime_superset", 1): 4,
            ("prime_superset", 2): 22}
    got = {key: len(build_system(*key)) for key in want}
    report(4, "equation counts 5, 21, 6, 30, 3, 15, 4, 22", got == want,
           ", ".join(str(v) for v in got.values()))

def test_criterion_05_algebraic_membership():
    N = 50
    cases = [("subset", 1, "subset1"), ("subset", 2, "subset2"),
             ("prime_subset", 1, "prime_subset1"), ("prime_subset", 2, "prime_subset2"),
             ("superset", 1, "superset1"), ("prime_superset", 1, "superset1")]
    results = {f"{f} k={k}": verify_algebraic(list(cached_series(f, k, N)), CATALOGUE[eq])
               for f, k, eq in cases}
    results["Eulerian maps"] = verify_algebraic(maps_series(N, "prime_eq")[0], CATALOGUE["maps"])
    bad = [name for name, chk in results.items() if not chk.holds]
    report(5, "catalogued equations hold modulo t^51", not bad,
           "all hold through 50" if not bad else f"failing: {bad}")

def test_criterion_06_discriminants():
    c = constant_multiple(discriminant_y(CATALOGUE["subset1"]).coeffs, DELTA1.coeffs)
    try:
        exact_divide(discriminant_y(CATALOGUE["subset2"]).coeffs, DELTA2_FACTOR.coeffs)
        divides = True
    except ArithmeticError:
        divides = False
    report(6, "discriminants contain the reference factors", c is not None and divides,
           f"Delta_1 constant {c}, degree-21 factor divides: {divides}")

def test_criterion_07_root_isolation():
    t0 = time.time()
    l1, l2, m1 = (growth_from_polynomial(p) for p in (DELTA1, DELTA2_FACTOR, TAU1))
    ok = abs(l1 - 9.684) <= 1e-3 and abs(l2 - 10.16) <= 1e-2 and abs(m1 - 13.0659) <= 1e-3
    report(7, "growth rates from isolated roots", ok,
           f"lambda1={l1:.5f} lambda2={l2:.5f} mu1={m1:.5f}, {time.time() - t0:.2f}s")

def test_criterion_08_growth_estimates():
    o_est = estimate_growth(cached_o(13)).estimate
    est = {k: estimate_growth(cached_series("prime_subset", k, 60)).estimate for k in (1, 2, 3)}
    mu2 = estimate_growth(cached_series("prime_superset", 2, 60)).estimate
    ok = (12.2 <= o_est <= 12.9
          and abs(est[1] / 10.603 - 1) <= 0.005
          and abs(est[2] / 10.9759 - 1) <= 0.005
          and abs(est[3] / 11.2289 - 1) <= 0.01
          and abs(mu2 / 13.047 - 1) <= 0.01)
    report(8, "non-rigorous growth estimates", ok,
           f"o_n {o_est:.4f}; prime subsets {est[1]:.4f} {est[2]:.4f} {est[3]:.4f}; "
           f"prime superset k=2 {mu2:.4f}")

def test_criterion_09_oracle():
    t0 = time.time()
    maps_ok = all(len(generate_eulerian_maps(n)) == eulerian_maps_count(n) for n in range(8))
    brute_ok = [brute_orientations(n) for n in range(7)] == O_N[:7]
    fam_ok = all(brute_family_counts(f, k, 5) == list(cached_series(f, k, 5))
                 for f in FAMILIES for k in (1, 2))
    incl_ok = True
    for n in range(6):
        for k in (1, 2):
            g = {name: family_generator(name, k).codes(n) for name in ("L", "LL", "U", "UU")}
            incl_ok &= g["L"] <= g["LL"] and g["UU"] <= g["U"]
        incl_ok &= family_generator("UU", 1).codes(n) == family_generator("U", 1).codes(n)
    dt = time.time() - t0
    ok = maps_ok and brute_ok and fam_ok and incl_ok and dt < 1200
    report(9, "brute-force oracle agrees", ok,
           f"maps {maps_ok}, orientations {brute_ok}, families {fam_ok}, inclusions {incl_ok}, {dt:.1f}s")

def _sandwich_failures(N, ks):
    o = cached_o(13)
    bad = []
    for k in ks:
        lo, lb = cached_series("subset", k, N), cached_series("prime_subset", k, N)
        ub, up = cached_series("prime_superset", k, N), cached_series("superset", k, N)
        for n in range(N + 1):
            if not lo[n] <= lb[n] <= ub[n] <= up[n]:
                bad.append(("chain", k, n))
            if n < len(o) and not lb[n] <= o[n] <= ub[n]:
                bad.append(("o_n", k, n))
            if n <= k + 2 and n < len(o) and not lo[n] == up[n] == o[n]:
                bad.append(("band", k, n))
    for fams, sign in ((SUBSETS, 1), (SUPERSETS, -1)):
        for f in fams:
            for k in ks[:-1]:
                a, b = cached_series(f, k, N), cached_series(f, k + 1, N)
                if any(sign * (y - x) < 0 for x, y in zip(a, b)):
                    bad.append(("monotone", f, k))
    return bad

def test_criterion_10_properties():
    checks = {}
    checks["sandwich and equality band"] = not _sandwich_failures(30, [1, 2, 3])
    checks["super-multiplicativity"] = (
        not supermultiplicative_violations(cached_o(13))
        and all(not supermultiplicative_violations(cached_series("prime_subset", k, 60))
                for k in (1, 2, 3)))
    checks["standard = prime"] = count_standard(11) == count_prime(11)
    sym = True
    for n in range(1, 7):
        prof = root_word_profile(n)
        sym &= prof == {w.translate(str.maketrans("01", "10")): c for w, c in prof.items()}
    sol = solve(build_system("prime_superset", 2), 10)
    sym &= all(sol.values[s] == sol.values[s.complement()] for s in sol.system.equations)
    checks["complement symmetry"] = sym
    rng = random.Random(20240601)
    dd = True
    for _ in range(1000):
        p = [rng.randint(-10 ** 9, 10 ** 9) for _ in range(rng.randint(0, 15))]
        k = rng.randint(0, 16)
        rhs = list(p) + [0] * max(0, k + 1 - len(p))
        rhs[k] -= sum(p)
        dd &= poly_mul([-1, 1], divided_difference_poly(p, k)) == poly_trim(rhs)
    checks["divided-difference identity"] = dd
    checks["staged = Picard"] = all(
        solve(build_system(f, k), 30, mode="picard").root_counts() == list(cached_series(f, k, 30))
        for f in FAMILIES for k in (1, 2))
    checks["thread determinism"] = count_prime(12, threads=1) == count_prime(12, threads=4)
    bad = [name for name, ok in checks.items() if not ok]
    report(10, "property suites", not bad, "all hold" if not bad else f"failing: {bad}")
    k4 = not _sandwich_failures(30, [1, 2, 3, 4])
    stretch("k=4 prefixes (N=30) satisfy sandwich, band and monotonicity", k4)
