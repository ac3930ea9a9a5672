"""Where do the variable entries come from?  It matters more than expected.

The counting story treats a variable entry as nonzero with probability r.
This script looks underneath: the entries draw from a concrete value set
containing 0, either an interval (continuous) or a finite set of rationals
(discrete).  The determinant value of least absolute value that a family
matrix can attain with positive probability behaves very differently in the
two cases, and the matrices attaining it can even be disjoint from their
own binarizations.
"""

from fractions import Fraction

from leastchange import (
    TypeSpec,
    ValueSet,
    attaining_matrices,
    attaining_patterns,
    check_inclusion,
    complement_identity_check,
    counterexample_report,
    least_determinant,
    least_determinant_binary,
)

HALF = Fraction(1, 2)
c2 = TypeSpec("C", 2)

# ---------------------------------------------------------------------------
# Continuous entries in [0, 2]: a unit-diagonal 2x2 can only reach |det| = 1,
# because det = 1 - bc and bc hits any particular nonzero product with
# probability 0.  The attaining matrices are support classes: the identity,
# or one nonzero off-diagonal (shown with * for "any nonzero value").
# ---------------------------------------------------------------------------
interval = ValueSet.continuous(0, 2)
print("continuous [0,2]: least |det| =", least_determinant(c2, interval))
for pattern in attaining_matrices(c2, interval).members:
    rows = []
    for i in (1, 2):
        rows.append(" ".join(
            "*" if (i != j and pattern.entry(i, j)) else str(pattern.entry(i, j))
            for j in (1, 2)
        ))
    print("  " + rows[0] + "\n  " + rows[1] + "\n")

# ---------------------------------------------------------------------------
# Discrete entries {0, 1/2, 2}: now det = 0 is attainable, because 1/2 and 2
# multiply to exactly 1.  Only two matrices manage it.
# ---------------------------------------------------------------------------
xset = ValueSet.discrete([0, HALF, 2])
print("discrete {0,1/2,2}: least |det| =", least_determinant(c2, xset))
for m in attaining_matrices(c2, xset).members:
    print(m, end="\n\n")

# Drop the 2 and nothing multiplies to 1 anymore; the least |det| jumps to a
# value the binarized matrices cannot see (their best is 0, via all-ones).
small = ValueSet.discrete([0, HALF])
print("discrete {0,1/2}: least |det| =", least_determinant(c2, small),
      "but binarized:", least_determinant_binary(c2, small))
print("  attained on the binary side only by:",
      [m.to_lists() for m in attaining_patterns(c2, small).members])

# ---------------------------------------------------------------------------
# For families A and B the binarized attaining patterns over a discrete set
# always contain the continuous ones; for the unit-diagonal family they can
# be entirely disjoint.
# ---------------------------------------------------------------------------
rep_a = check_inclusion("A", 2, xset, interval)
print("\nfamily A: discrete patterns contain continuous ones:", rep_a.holds,
      "| extra:", [m.to_lists() for m in rep_a.difference])
rep_c = check_inclusion("C", 2, ValueSet.discrete([0, 1]), ValueSet.continuous(0, 1))
print("family C over {0,1} vs [0,1]: sets disjoint:", rep_c.disjoint)

# Same instance, one exact identity: P(det = 1, continuous) + P(det = 0,
# discrete) is the constant polynomial 1 in the density r.
comp = complement_identity_check()
print("\ncomplement identity coefficients:",
      comp.continuous_coeffs, "+", comp.discrete_coeffs, "=", comp.sum_coeffs)

# And the full battery of hard-wired counterexamples, recomputed from scratch
# (scaled witnesses sharing one support pattern, dets and permanents, strict
# stratum-size gaps).  Expect a few seconds for the 4^9 assignment scan.
report = counterexample_report()
print(f"counterexample claims: {sum(c.ok for c in report.claims)}"
      f"/{len(report.claims)} pass")
