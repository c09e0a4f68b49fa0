"""Domain wall partition functions, by brute force and by determinant.

Run: python3 demos/domain_walls.py
"""
from fractions import Fraction

from pdwpf.determinants import izergin_dwpf
from pdwpf.sixvertex import BoundaryFamily, BoundarySpec, WeightScheme, count_configurations, partition_function

# With every weight set to 1 the lattice sum counts alternating sign matrices.
for N in range(1, 6):
    print(N, count_configurations(BoundarySpec(BoundaryFamily.DWBC, N, N)))

# A 3x3 lattice at generic rational rapidities.
xs = [Fraction(1, 2), Fraction(-3), Fraction(7, 4)]
ys = [Fraction(0), Fraction(5, 3), Fraction(-2, 7)]
lattice = partition_function("dwbc", xs, ys)
print("lattice sum :", lattice)
print("determinant :", izergin_dwpf(xs, ys))

# Trigonometric weights take e^x, e^y and e^gamma, so everything stays rational.
trig = WeightScheme.trigonometric(Fraction(3))
exs, eys = [Fraction(2), Fraction(5, 3)], [Fraction(7), Fraction(1, 2)]
print(partition_function("dwbc", exs, eys, trig) == izergin_dwpf(exs, eys, trig))
