"""Scalar products at numerically solved Bethe roots.

The determinant formula only holds on Bethe roots, so the roots are found by
Newton iteration at 256 bits and the result is compared with the lattice sum
over a 2n x N lattice.  At the roots the n x n determinant vanishes.
"""
import mpmath

from pdwpf.determinants import bethe_check, bethe_solve_numeric, pdwpf_kostov, slavnov_scalar_product
from pdwpf.sampling import Sampler
from pdwpf.sixvertex import RATIONAL, partition_function

mpmath.mp.prec = 256
s = Sampler(3)
xs, ys = s.rational_rapidities(2, 4)
bs = bethe_solve_numeric(2, ys, seed=1)
print("roots:", [mpmath.nstr(b, 15) for b in bs])
print("residual:", mpmath.nstr(max(abs(r) for r in bethe_check(bs, ys, RATIONAL)), 3))

det_value = slavnov_scalar_product(xs, bs, ys)
lattice = partition_function("scalar-product", xs, ys, bs=bs)
print("determinant:", mpmath.nstr(det_value, 20))
print("lattice    :", mpmath.nstr(lattice, 20))
print("n x n determinant at the roots:", mpmath.nstr(abs(pdwpf_kostov(bs, ys)), 3))

# n = 1 with ys = (0, 0) has the exact root -1/2
print(slavnov_scalar_product([3], [mpmath.mpf(-0.5)], [0, 0]))
