#!/usr/bin/env python3
"""The resonant specialization t^(k+1) q^(r-1) = 1.

With m = gcd(k+1, r-1) the resonance is realized over the one-parameter
field Q(zeta_{r-1})(u) by t = u^((r-1)/m), q = zeta_{r-1} u^(-(k+1)/m).
Exactly the exponent pairs (a, b) = ((r-1)s, (k+1)s) collapse to 1, and
regularity of admissible Macdonald polynomials survives the collapse.
"""

from wheelmac import MacdonaldTable, ParameterSpec, render_scalar, specialize_P
from wheelmac import partitions as pt
from wheelmac.scalars import BiRatFunc, PoleError

for (k, r) in [(1, 2), (1, 3), (2, 3)]:
    p = ParameterSpec(k, r)
    print("== (k, r) = (%d, %d):  m = %d, field Q(zeta_%d)(u) ==" % (k, r, p.m, p.N))
    print("   t =", render_scalar(p.t_value()), "  q =", render_scalar(p.q_value()))
    check = p.t_value() ** (k + 1) * p.q_value() ** (r - 1)
    print("   t^(k+1) q^(r-1) =", render_scalar(check))
    print("   resonant pairs (a,b) with |a|,|b| <= 4:",
          [(a, b) for a in range(-4, 5) for b in range(-4, 5)
           if p.is_resonant(a, b) and (a, b) != (0, 0)])
    print()

p = ParameterSpec(1, 2)
q, t, one = BiRatFunc.q(), BiRatFunc.t(), BiRatFunc.one()
x = (one - t) / (one - q)
print("specializing (1-t)/(1-q) at (k,r) = (1,2):", render_scalar(p.specialize(x)))

print()
print("== admissible partitions specialize without poles ==")
table = MacdonaldTable(2)
for lam in [(2,), (3,), (3, 1)]:
    spec = specialize_P(lam, 2, p, table)
    tag = "admissible" if pt.is_admissible(lam, 1, 2, 2) else "one node off"
    print("P_%s (%s):" % (lam, tag))
    for mu, c in sorted(spec.coeffs.items(), reverse=True):
        print("   m_%-6s %s" % (str(mu), render_scalar(c)))

print()
print("== where regularity is NOT promised, poles can appear ==")
table3 = MacdonaldTable(3)
for lam in [(2, 1), (2, 1, 1), (2, 2, 1)]:
    try:
        specialize_P(lam, 3, p, table3)
        print("P_%s specializes fine" % (lam,))
    except PoleError as exc:
        print("P_%s: %s" % (lam, exc))
