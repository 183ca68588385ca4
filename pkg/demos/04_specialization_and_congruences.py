"""Specializing the variable t: theta-power points and roots of unity.

At t = theta^(q^d) the first coordinate of the weight-one series lands on
the single-cuspidal family; at a root zeta of a monic prime it lands on
forms with character, whose expansions are congruent to the false
Eisenstein series modulo (theta - zeta).
"""

from carlitz_vmf.context import Context
from carlitz_vmf.forms import gen_E, gen_fs
from carlitz_vmf.specialize import (RootContext, congruence_check,
                                    enumerate_primes, eval_root_form,
                                    hyperderiv_form, vadic_check)
from carlitz_vmf.vmf import eis1

q = 2
N = 24
ctx = Context(q)
e1 = eis1(ctx, N)

for d in (1, 2):
    s = (q ** d - 1) // (q - 1)
    eta = e1.h1.eval_theta_power(d)
    fs = gen_fs(ctx, s, N)
    print(f"ev at theta^(q^{d}) of [E_1]_1 == -f_{s}:",
          eta.first_difference(-fs.series) is None)

print("\nev at theta of [E_1]_1 == -E:",
      e1.h1.eval_theta_power(0).first_difference(-gen_E(ctx, N).series) is None)

print("\nroots of unity:")
for p in enumerate_primes(ctx, 2):
    rc = RootContext(ctx, p)
    F = eval_root_form(e1, rc)
    rep = congruence_check(rc, N)
    repv = vadic_check(rc, 1, 16)
    print(f"  p={p}: specialized form val {F.series.val()}, "
          f"congruence {rep['ok']}, p-adic divisibility {repv['ok']}")

# higher levels through hyperderivatives in t
rc = RootContext(ctx, (ctx.base_field.zero, ctx.base_field.one))
f2 = hyperderiv_form(e1, 2, rc)
print("\nlevel p^2 form from the first t-hyperderivative:")
print("  series:", f2.series)
print("  the u-coefficient (a = 1 slot) vanishes:",
      f2.series.coeff(1).is_zero())
