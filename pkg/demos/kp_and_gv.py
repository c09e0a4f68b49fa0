"""Both polynomial determinants are discrete KP tau-functions.

Adding copies of a Miwa variable is a discrete time step.  The Hirota-Miwa
equation then holds exactly, while a perturbed tau breaks it.  The last part
applies the one-loop mapping around y = 0 and compares the closed-form
determinant with jet differentiation.
"""
from fractions import Fraction

from pdwpf.gv import gv_map_direct, gv_pdwpf_det, zeta1_jet
from pdwpf.symfun import TauSpec, hirota_miwa_check, kp_bilinear_check, tau_value

xs = [Fraction(2, 3), Fraction(-5, 2)]
ys = [Fraction(1, 4), Fraction(3), Fraction(-7, 5)]
tau = TauSpec.ik(xs, ys)

for mult in [(1, 1, 1), (2, 1, 1), (1, 3, 2)]:
    print(mult, hirota_miwa_check(tau, mult, 0, 1, 2))

broken = hirota_miwa_check(tau, (1, 1, 1), 0, 1, 2, tau=lambda ms: tau_value(tau, ms) + ms[0] ** 2 + 1)
print("perturbed:", broken)
print("bilinear determinant:", kp_bilinear_check(tau, (1, 1, 1), [0, 1, 2]))

g2 = Fraction(1, 10)
for N in (2, 3, 4):
    closed = gv_pdwpf_det(xs, N, g2)
    direct = gv_map_direct(zeta1_jet(xs, N), N, g2)
    print(N, closed[0], closed == direct)
