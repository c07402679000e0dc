"""Development probes: exercise every builder against small hand values
and the brute-force oracle before the test suite freezes expectations.

Not part of the package contract; run as `python scripts/dev_probe.py`.
"""

import sys
import time

from qschur import (
    IdentityId, QPoly, ali_gf_truncated, bounded_gf, certify_range,
    cor1_bounded_sum, dual_sides, even_odd_split_lhs, kursungoz_gf_truncated,
    lhs_schur, q1_quad_value, q1_triple_value, qt_limit_sum,
    recurrence_residual, rhs_schur, schur_counts, schur_gf_oracle,
    schur_product_truncated, summation_formula_sides, summation_limit_sum,
    t0_binomial_sides, t0_half_sum, t0_half_sum_truncated, t0_limit_product,
    verify, warnaar_sides, weight_a, weight_k,
)

GOLDEN = {
    0: {0: 1},
    1: {0: 1, 1: 1, 2: 1},
    2: {0: 1, 1: 1, 2: 1, 3: 1, 4: 1, 5: 2, 6: 1, 7: 1},
    3: {0: 1, 1: 1, 2: 1, 3: 1, 4: 1, 5: 2, 6: 2, 7: 3, 8: 3, 9: 2,
        10: 2, 11: 2, 12: 2, 13: 2, 14: 1, 15: 1},
}


def check(label, ok):
    print("%-46s %s" % (label, "ok" if ok else "FAIL"))
    if not ok:
        sys.exit(1)


t0 = time.time()

# P1: central identity, frozen small polynomials
for N, coeffs in GOLDEN.items():
    want = QPoly.from_q_coeffs(coeffs)
    check("lhs_schur(%d) == golden" % N, lhs_schur(N) == want)
    check("rhs_schur(%d) == golden" % N, rhs_schur(N) == want)
for N in range(9):
    check("lhs == rhs at N=%d" % N, lhs_schur(N) == rhs_schur(N))

# P2: recurrences
for N in range(2, 9):
    check("two-term recurrence N=%d" % N,
          recurrence_residual(IdentityId.REC_ANDREWS, N).is_zero())
for N in range(4, 9):
    check("four-term recurrence N=%d" % N,
          recurrence_residual(IdentityId.REC_L, N).is_zero())
bad = []
for N in range(4, 9):
    for m in range(N + 1):
        for n1 in range(N + 1 - m):
            for n2 in range(N + 1 - m - n1):
                if not recurrence_residual(IdentityId.REC_SUMMAND, N, m, n1, n2).is_zero():
                    bad.append((N, m, n1, n2))
check("summand recurrence sweep N<=8 (bad: %s)" % bad[:4], not bad)

# P3: dual suite; independent oracle is q^(3N^2/2+N/2) * lhs(1/q)
for N in range(9):
    lhs, rhs = dual_sides(N)
    oracle = lhs_schur(N).substitute_q_power(-1).shift(3 * N * N + N)
    check("dual sides N=%d" % N, lhs == rhs)
    check("dual oracle N=%d" % N, lhs == oracle)
for N in range(9):
    lhs, rhs = t0_binomial_sides(N)
    check("t0 binomial N=%d" % N, lhs == rhs)
for N, T in ((10, 10), (14, 12)):
    check("t0 limit window N=%d T=%d" % (N, T),
          t0_half_sum_truncated(N, T) == t0_limit_product(T))
check("t0 window matches exact N=12",
      t0_half_sum_truncated(12, 10) == t0_half_sum(12).truncate(10))

# P4: parity-split limit sums
prod25 = t0_limit_product(25)
for t in (1, 2):
    check("parity-split t=%d T=25" % t, qt_limit_sum(t, 25) == prod25)

# P5: finite summation and the one-variable identity
for M in range(8):
    lhs, rhs = summation_formula_sides(M)
    check("summation M=%d" % M, lhs == rhs)
for L in range(7):
    for a in range(-L, L + 1):
        lhs, rhs = warnaar_sides(L, a)
        if lhs != rhs:
            check("one-variable L=%d a=%d" % (L, a), False)
check("one-variable identity L<=6", True)
s25 = summation_limit_sum(25)
check("summation limit == product T=25", s25 == schur_product_truncated(25))

# P6: bivariate series, three routes and the oracle
T = 30
ali = ali_gf_truncated(T)
kur = kursungoz_gf_truncated(T)
evo = even_odd_split_lhs(T)
orc = schur_gf_oracle(T)
check("chain-indexed == pair-indexed T=30", ali == kur)
check("even-odd split == pair-indexed T=30", evo == kur)
check("chain-indexed == oracle T=30", ali == orc)
check("x=1 == product T=30", ali.at_x_one() == schur_product_truncated(T))
counts = schur_counts(T)
check("counts == product coefficients",
      all(schur_product_truncated(T).coefficient_q(n) == counts[n]
          for n in range(T + 1)))

# P7: bounded series vs oracle, including boundary bounds
for N in (0, 1, 2, 4, 5, 7, 10):
    check("bounded N=%d vs oracle" % N,
          bounded_gf(N, 30) == schur_gf_oracle(30, largest_part=N))
for N in range(1, 6):
    lhs, rhs = cor1_bounded_sum(N)
    check("bounded sum at 3N-1, N=%d" % N, lhs == rhs)

# P8: q=1 values, weights
check("q=1 triple M<=10", all(q1_triple_value(M) == 3 ** M for M in range(11)))
check("q=1 quad M<=10", all(q1_quad_value(M) == 4 ** M for M in range(11)))
check("weight difference", all(
    weight_a(2 * a, 2 * b, m) - weight_k(a, b, m) == 2 * m
    for a in range(8) for b in range(8) for m in range(8)))

print("probes done in %.1fs" % (time.time() - t0))
