#!/usr/bin/env python3
"""Symmetric polynomials vanishing on the shifted diagonals.

The wheel condition asks a symmetric polynomial to vanish whenever the
first k+1 variables sit on a geometric-like cycle
x_2 = t q^(s_1) x_1, ..., closing up because t^(k+1) q^(r-1) = 1.  The
main theorem identifies this space with the span of the admissible
specialized Macdonald polynomials; here we watch the identification
happen component by component.
"""

from wheelmac import MacdonaldTable, ParameterSpec, dim_J, render_scalar
from wheelmac import partitions as pt
from wheelmac.wheel_ideal import (basis_I, satisfies_wheel, verify_stability,
                                  verify_theorem1, wheel_kernel_basis,
                                  wheel_substitutions)

k, r = 1, 2
p = ParameterSpec(k, r)
print("wheel substitutions for (k,r)=(%d,%d):" % (k, r),
      wheel_substitutions(k, r))
print("   (cumulative exponents sigma; x_{i+1} = t^i q^(sigma_i) x_1)")
print()

print("== dim J vs admissible count, n = 2 ==")
table = MacdonaldTable(2)
for d in range(8):
    dj = dim_J(k, r, 2, d, p)
    adm = pt.enumerate_admissible(k, r, 2, d)
    print("  d=%d: dim J = %d, admissible %s" % (d, dj, adm))

print()
print("== the ideal's own kernel basis at (n,d) = (2,4) ==")
for f in wheel_kernel_basis(k, r, 2, 4, p):
    for mu, c in sorted(f.coeffs.items(), reverse=True):
        print("   m_%-6s %s" % (str(mu), render_scalar(c)))
    print("   satisfies the wheel condition:", satisfies_wheel(f, p))
    print("   stable under the operators:   ", verify_stability(f, p))

print()
print("== the Macdonald side of the same space ==")
for f in basis_I(k, r, 2, 4, p, table):
    for mu, c in sorted(f.coeffs.items(), reverse=True):
        print("   m_%-6s %s" % (str(mu), render_scalar(c)))
    print("   satisfies the wheel condition:", satisfies_wheel(f, p))

print()
print("== a full component report, (k,r,n,d) = (1,3,2,6) ==")
rep = verify_theorem1(1, 3, 2, 6, table=MacdonaldTable(2))
for key, value in sorted(rep.items()):
    print("  %-18s %s" % (key, value))
