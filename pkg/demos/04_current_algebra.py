#!/usr/bin/env python3
"""The dual picture: one abelian current, many vanishing products.

Dual to the wheel condition sits the polynomial ring in the Fourier modes
e_0, e_1, ... of a commuting current, modulo the coefficients of the
shifted products e(z) e(tq^(s_1) z) ... .  At t = 1, q = tau the
relations have positive integer coefficients and rewrite every monomial
into admissible ones; generically the same relation vectors are literally
the wheel constraint rows read backwards.
"""

from wheelmac import ParameterSpec, render_scalar
from wheelmac import partitions as pt
from wheelmac.current_algebra import (quotient_dim, reduce_to_admissible,
                                      relation_generic, relation_rootofunity,
                                      residue_profiles)

k, r = 1, 2
print("== root-of-unity relations (k,r) = (1,2) ==")
for d in range(5):
    rel = relation_rootofunity(d, (2,), k, r)
    body = "  +  ".join("%s e_%s" % (c, list(mu))
                        for mu, c in sorted(rel.terms.items(), reverse=True))
    print("  degree %d:  %s = 0" % (d, body))

print()
print("== rewriting e_(2,2) into admissible monomials ==")
out = reduce_to_admissible((2, 2), k, r)
print("  e_(2,2) =",
      "  +  ".join("%s e_%s" % (c, list(mu))
                   for mu, c in sorted(out.terms.items(), reverse=True)))
print("  all admissible:",
      all(pt.is_admissible(mu, k, r, 2) for mu in out.terms))

print()
print("== graded quotient dimensions match the admissible counts ==")
for n in range(1, 5):
    row = [quotient_dim(k, r, n, d) for d in range(9)]
    adm = [pt.count_admissible(k, r, n, d) for d in range(9)]
    print("  n=%d: quotient %s" % (n, row))
    print("       admissible %s" % (adm,))

print()
print("== generic relations are the wheel rows of the dual side ==")
p = ParameterSpec(2, 3)
for nu in residue_profiles(2, 3):
    rel = relation_rootofunity(4, nu, 2, 3)
    if not rel.is_zero():
        print("  nu=%s: %s" % (nu, {mu: str(c) for mu, c in rel.terms.items()}))
rel = relation_generic(3, (0, 1), 2, 3, p)
print("  sigma=(0,1), degree 3:")
for mu, c in sorted(rel.terms.items(), reverse=True):
    print("    e_%s * (%s)" % (list(mu), render_scalar(c)))
