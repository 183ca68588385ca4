"""Vectorial Eisenstein series in the unipotent gauge.

The weight-one series is the cyclic generator of everything here.  We
build it, twist it, verify the determinant identity that drives the
structure theorem, and decompose a cuspidal form against the basis
(E_1, tau E_1).
"""

from carlitz_vmf.context import Context
from carlitz_vmf.forms import gen_h
from carlitz_vmf.vmf import (det_pair, eis1, eis_k, eis_q, lambda_q,
                             legendre_fstar, structure_decompose, tau_vmf)

q = 3
N = 24
ctx = Context(q)

e1 = eis1(ctx, N)
print("weight-one series (period-normalized gauge pair):")
print("  h1 =", e1.h1)
print("  h3 =", e1.h3)
print("  constant lambda_1 =", e1.lam, "\n")

# the twist sends weight 1 to weight q, and matches the direct expansion
eqf = eis_q(ctx, N)
print("tau(E_1) == E_q (direct expansion):",
      tau_vmf(e1).first_difference(eqf) is None)

# the determinant of the basis pair is the cusp form h times a unit
det = det_pair(e1, eqf)
h = gen_h(ctx, N)
print("det[E_1, E_q] == lambda_q * h:",
      det.series.eq_to_prec(h.series.scale(lambda_q(ctx))))

# a higher-weight Eisenstein series through the structure theorem
k = 2 * q - 1
ek = eis_k(ctx, k, N)
print(f"\nweight-{k} series built; extracted constant lambda_{k} =", ek.lam)

# decompose the cuspidal h F* against the basis
fstar, d2, d3 = legendre_fstar(ctx, N)
hf = fstar.mul_classical(h)
F, G = structure_decompose(ctx, hf)
print("\nh F* = F * E_1 + G * tau(E_1) with")
print("  F =", F.series)
print("  G =", G.series)
