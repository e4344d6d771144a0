"""
Graded operator sections
========================

Operators are stored column by column.  Each one knows the degrees it accepts
(``d_in``), the degrees it produces (``d_out``) and the range of degree shifts
(``band``), so compositions never silently drop terms.
"""

from fractions import Fraction

from pluritop import SpaceParams, adjoint, compose, frobenius_sq, identity, lincomb, residual
from pluritop import hmops

params = SpaceParams(n=2, m=2, D=7)
d = 4

# %% M_{z_1} and its adjoint for the weighted inner product
M1 = hmops.coordinate(params, 0, d)
A1 = adjoint(M1)
print("M_z1: d_in, d_out, band =", M1.d_in, M1.d_out, M1.band)
print("M_z1^*: d_in, d_out, band =", A1.d_in, A1.d_out, A1.band)

# %% The row operator M_z and its adjoint give a graded multiple of the identity
MMs = hmops.mz_mz_star(params, d)
graded = lincomb(
    [Fraction(j, params.m + j - 1) for j in range(1, d + 1)],
    [hmops.graded_projection(params, j, d) for j in range(1, d + 1)],
)
print("M_z M_z^* = sum_j j/(m+j-1) P_j :", residual(MMs, graded).is_zero)

# %% delta inverts it off the constants: delta M_z M_z^* = I - P_0
I = identity(params, d)
P0 = hmops.graded_projection(params, 0, d)
print("delta M_z M_z^* = I - P_0 :",
      residual(hmops.proj_im_mz(params, d), lincomb([1, -1], [I, P0])).is_zero)

# %% The projection onto the range of M_z^* in H^n
P = hmops.proj_im_mz_star(params, d - 1)
print("P^2 = P:", residual(compose(P, P), P).is_zero, "  P^* = P:", residual(adjoint(P), P).is_zero)
print("||P||_F^2 =", frobenius_sq(P))
