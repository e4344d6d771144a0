"""
Classifying operators and reading off their symbol
==================================================

``classify`` runs the Brown-Halmos test; when it passes, the symbol is read
back as g = (T - T_0)(1), h = T^*(1) and the operator is rebuilt from it as a
consistency check.  The same pipeline runs in float mode.
"""

import json

from pluritop import SpaceParams, classify, lincomb, recover_symbol, toeplitz_op
from pluritop import hmops
from pluritop.jsonio import classification_to_json, dumps, operator_from_json, operator_to_json
from pluritop.suite import random_symbols, suite_params

n, m, d = 2, 2, 3
params = suite_params(n, m, d)
s = random_symbols(n, 1, seed=4)[0]
T = toeplitz_op(s, params, d + 1)

# %% Round trip through JSON, then classify
doc = json.loads(dumps(operator_to_json(T)))
U = operator_from_json(doc)
report = classify(U, d)
print("verdict:", report.verdict.value)
print("recovered g:", report.symbol.g)
print("recovered h:", report.symbol.h)

# %% Homogeneous components: T_k for k > 0 is multiplication by T_k(1)
for k in range(T.band[0], T.band[1] + 1):
    Tk = hmops.homogeneous_component(T, k)
    print(f"T_{k}: Brown-Halmos residual zero = {hmops.bh_residual(Tk, d).is_zero}")

# %% A perturbed operator is rejected
bad = lincomb([1, 1], [T, hmops.graded_projection(params, 1, d + 1)])
print(dumps(classification_to_json(classify(bad, d))))

# %% Float mode: the same symbol with complex doubles
fparams = SpaceParams(n, m, params.D, "float")
Tf = toeplitz_op(s, fparams, d + 1)
r = hmops.bh_residual(Tf, d)
print("float residual:", r.frobenius_sq, " is_zero:", r.is_zero)
print("float recovery g:", recover_symbol(Tf).g)
