"""Decompose stretched skew Schur specializations over the divisor basis.

For a modulus m the residue ring Z[q]/(q^m - 1) contains the basis
B_d = (q^m - 1)/(q^(m/d) - 1), one element per divisor d of m.  A
principal specialization that lands in the nonnegative span of that basis
certifies a cyclic group action on the tableaux it counts, with the B_d
coordinate counting the orbits of size d.  Stretching both partitions of
a skew shape by m makes that happen when the variable count is also a
multiple of m, but not in general, as the first example shows.
"""

from skewsieve import Partition, SkewShape, analyze, analyze_shifted


def show(shape, k, m):
    report = analyze(shape, k, m)
    dec = report.decomposition
    print(f"shape {shape} with {k} variables, modulus {m}")
    print(f"  verdict: {dec.verdict.value}")
    if dec.coefficients is not None:
        for d in sorted(dec.coefficients):
            print(f"  coefficient of B_{d}: {dec.coefficients[d]}")
    print(f"  guaranteed nonnegative: {'yes' if report.csp_guaranteed else 'no'}")
    print()


# Stretching (3,3,2,1)/(2,1) by 9 and specializing with only 4 variables
# produces a negative coordinate: no cyclic action of order 9 can explain
# these numbers.
big = SkewShape(Partition([3, 3, 2, 1]).stretch(9), Partition([2, 1]).stretch(9))
show(big, 4, 9)

# Multiplying by powers of q does not rescue it; every shift falls outside
# the basis span entirely.
for i in range(1, 9):
    verdict = analyze_shifted(big, 4, 9, i).verdict
    print(f"  shift q^{i}: {verdict.value}")
print()

# Stretching (3,3,1)/(2,1) by 4 and using 6 variables happens to work even
# though 4 does not divide 6.
show(SkewShape(Partition([3, 3, 1]).stretch(4), Partition([2, 1]).stretch(4)), 6, 4)

# With the variable count a multiple of the modulus the outcome is always
# nonnegative; the orbit reading is printed by show() above.
show(SkewShape(Partition([3, 3, 1]).stretch(4), Partition([2, 1]).stretch(4)), 8, 4)
