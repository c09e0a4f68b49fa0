"""Three closed forms for the partial domain wall partition function.

An n x N lattice whose top boundary arrows are summed over.  The N x N hybrid
determinant, the n x n determinant and the sum over subsets of the column
rapidities all give the same rational number as the lattice sum.
"""
from fractions import Fraction

from pdwpf.determinants import pdwpf_hybrid, pdwpf_kostov, pdwpf_partition_sum
from pdwpf.korepin import Variant, check_property_C, zeta
from pdwpf.sampling import Sampler
from pdwpf.sixvertex import POLYNOMIAL, partition_function

s = Sampler(7)
xs, ys = s.rational_rapidities(2, 5)
print("x =", [str(v) for v in xs])
print("y =", [str(v) for v in ys])

for name, fn in [("hybrid", pdwpf_hybrid), ("n x n", pdwpf_kostov), ("subset sum", pdwpf_partition_sum)]:
    print(f"{name:>11}: {fn(xs, ys)}")
print(f"{'lattice':>11}: {partition_function('pdw-topsum', xs, ys)}")

# Clearing the denominators gives a polynomial; both determinant forms agree
# with the polynomial-weight lattice sum and satisfy the Korepin recursions.
print(zeta(Variant.ZETA1, xs, ys) == zeta(Variant.ZETA2, xs, ys)
      == partition_function("pdw-topsum", xs, ys, POLYNOMIAL))
print(check_property_C(Variant.ZETA2, xs, ys))

# n = 1 has a one-line answer
x = Fraction(3)
print(zeta(Variant.ZETA2, [x], [0, 0]), (x + 1) ** 2 - x ** 2)
