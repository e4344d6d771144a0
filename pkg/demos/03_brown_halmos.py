"""
The Brown-Halmos identity on H_m
================================

For an operator T on H_m the identity compares

    M_z'^* T M_z'                                        (left side)
    P [(+) sum_j (-1)^j binom(m, j+1) sigma^j(T)] P       (right side)

on tuples of polynomials, where M_z' = delta M_z is the Cauchy dual of the
row M_z, sigma(T) = sum_i M_{z_i} T M_{z_i}^* and P projects onto the range
of M_z^*.  Toeplitz operators with pluriharmonic symbol satisfy it exactly.
"""

from pluritop import PluriharmonicSymbol, Polynomial, QQi, lincomb, toeplitz_op
from pluritop import hmops
from pluritop.suite import random_symbols, suite_params

n, m, d = 2, 3, 3
params = suite_params(n, m, d)  # workspace D = d + 4 + m
print("workspace:", params)

# %% A hand-made symbol f = z_1 + conj(z_2^2)
s = PluriharmonicSymbol(
    Polynomial(n, {(1, 0): QQi(1)}),
    Polynomial(n, {(0, 2): QQi(1)}),
)
T = toeplitz_op(s, params, d + 1)
r = hmops.bh_residual(T, d)
print("T_f:     is_zero =", r.is_zero, " frobenius_sq =", r.frobenius_sq)

# %% Random symbols of degree 3 (seeded)
for i, s in enumerate(random_symbols(n, 3, seed=1)):
    r = hmops.bh_residual(toeplitz_op(s, params, d + 1), d)
    print(f"random #{i}: is_zero = {r.is_zero}")

# %% Something that is not Toeplitz: the projection onto constants
P0 = hmops.graded_projection(params, 0, d + 1)
r = hmops.bh_residual(P0, d)
print("P_0:     is_zero =", r.is_zero, " frobenius_sq =", r.frobenius_sq)
r = hmops.bh_residual(lincomb([1, 1], [T, P0]), d)
print("T + P_0: is_zero =", r.is_zero, " frobenius_sq =", r.frobenius_sq)

# %% With n = m = 1 the identity is the classical M_z^* T M_z = T
p1 = suite_params(1, 1, d)
T1 = toeplitz_op(random_symbols(1, 1, seed=2)[0], p1, d + 1)
print("n = m = 1:", hmops.bh_residual(T1, d).is_zero)
