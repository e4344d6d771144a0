"""
The truncated space H_m of the ball
===================================

Functions are Taylor coefficient tables.  The monomials z^alpha are orthogonal,
with ||z^alpha||^2 = 1 / rho_m(alpha); m = 1 is the Drury-Arveson space, m = n
the Hardy space and m = n + 1 the Bergman space.
"""

from fractions import Fraction

from pluritop import Polynomial, QQi, SpaceParams, basis_enumerate, inner_product, kernel_polynomial, rho

# %% The basis: graded, with z_1 the largest variable
n, m = 2, 3
print("basis of degree <= 2:", basis_enumerate(n, 2))

# %% Weights: rho_m(alpha) = (m + |alpha| - 1)! / (alpha! (m - 1)!)
for alpha in basis_enumerate(n, 3):
    print(f"  rho_{m}{alpha} = {rho(m, alpha)}   ||z^alpha||^2 = {1 / rho(m, alpha)}")

# %% Inner products are exact rationals
f = Polynomial(n, {(1, 0): QQi(1), (1, 1): QQi(0, 2)})
g = Polynomial(n, {(1, 1): QQi(Fraction(1, 2)), (0, 0): QQi(5)})
print("<f, g> =", inner_product(f, g, m))
print("<f, f> =", inner_product(f, f, m))

# %% The truncated reproducing kernel reproduces point values exactly
w = [QQi(Fraction(1, 3), Fraction(-1, 2)), QQi(Fraction(1, 4))]
K = kernel_polynomial(SpaceParams(n, m, 4), w)
print("f(w)          =", f(w))
print("<f, K(., w)>  =", inner_product(f, K, m))
