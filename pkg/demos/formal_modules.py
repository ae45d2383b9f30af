"""Hazewinkel's formal A-modules: integrality, heights, and the theta identities."""

from slicegap.algebra import QQ, PrimeField
from slicegap.fgl import (formal_A_module, hazewinkel_height, hazewinkel_log, height, logarithm,
                          multiplicative, mu_cn_check, additive)

print("log of x + y - xy:", logarithm(multiplicative(QQ, 6)))
F2 = PrimeField(2)
print("heights over F_2: additive", height(additive(F2, 16), 2), "multiplicative", height(multiplicative(F2, 16), 2))

for e in (1, 2, 3):
    l = hazewinkel_log(e, 8)
    M = formal_A_module(e, 8)
    rep = mu_cn_check(e, cutoff=10)
    print(f"\ne = {e}: A = Z_2[zeta_{2 ** e}], n = {M.n}")
    print("  l(t) =", l)
    print("  [zeta](t) =", M.zeta_series)
    print("  height of F0 mod pi:", hazewinkel_height(e))
    print("  gamma^n F = F-bar:", rep.gamma_n_conjugate, " theta composite:", rep.theta_composite,
          " cocycle:", rep.cocycle)
