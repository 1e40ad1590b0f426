#!/usr/bin/env python3
"""Prefix-bounded quotients and their fermionic-style characters.

C_{b_0..b_{r-2}} counts degree sequences with sliding-window sums at most
k and prefix sums bounded by the b_i; its generating function chi^C obeys
a two-term recursion and equals the character of the corresponding
quotient W of the current algebra, computed here by exact rank.
"""

from wheelmac import ParameterSpec
from wheelmac.current_algebra import (W_space_dim, chi_C,
                                      enumerate_C_sequences, verify_prop302,
                                      verify_recursion)

k, r = 2, 3
print("== admissible degree sequences, (k,r) = (2,3), b = (1,2) ==")
for n, d in [(2, 2), (2, 3), (3, 4)]:
    seqs = enumerate_C_sequences((1, 2), k, r, n, d)
    print("  n=%d d=%d: %s" % (n, d, seqs))

print()
print("== chi^C coefficient table for b = (1,2), v^d z^n ==")
chi = chi_C((1, 2), k, r, 8, 4)
print("      " + "".join("d=%-3d" % d for d in range(9)))
for n in range(5):
    print("  n=%d " % n +
          "".join("%-5d" % chi.coeffs.get((d, n), 0) for d in range(9)))

print()
print("== the character recursion in b_0 ==")
for b in [(1, 1), (1, 2), (2, 2)]:
    print("  b=%s: recursion holds: %s" % (b, verify_recursion(b, k, r, 8, 8)))

print()
print("== W-space dimensions agree with the counting side ==")
p = ParameterSpec(k, r)
for b in [(0, 0), (0, 1), (1, 2), (2, 2)]:
    print("  b=%s: chi^W = chi^C on the truncation: %s"
          % (b, verify_prop302(b, k, r, 6, 3, p)))

print()
print("== a single dimension, spelled out ==")
b = (1, 2)
n, d = 3, 4
print("  dim W_%s at (n,d)=(%d,%d): %d  (counting side: %d)"
      % (b, n, d, W_space_dim(b, k, r, n, d, p),
         chi_C(b, k, r, d, n).coeffs.get((d, n), 0)))
