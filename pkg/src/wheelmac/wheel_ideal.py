"""The wheel-condition ideal J and its Macdonald-polynomial basis I.

A symmetric polynomial f in n >= k+1 variables satisfies the wheel
condition when it vanishes under every substitution

    x_{i+1} = t^i q^(sigma_i) x_1   (i = 1..k),

sigma running over the weakly increasing sequences in {0, ..., r-1}^k
(the cumulative form of the exponents s_1, ..., s_{k+1} >= 0 with
s_1 + ... + s_{k+1} = r - 1).  Only wheels of length k+1 are generated:
longer resonant wheels contain one of these.

dim J on the (n, d) component is computed exactly as the corank of the
constraint matrix whose rows are indexed by (sigma, free monomial) and
whose columns are the monomial-symmetric basis of the component; rows are
cleared to polynomial entries in u and eliminated fraction-free.  The
probe mode evaluates u at a random non-resonant rational first, which can
only overestimate the kernel, so a probe equality that matches the
admissible count is confirmed by the exact path on demand.
"""

import random
from fractions import Fraction
from itertools import combinations_with_replacement

from . import partitions as pt
from .linalg import EchelonBasis, rank_kernel_poly
from .macdonald import CoeffField, MacdonaldTable, apply_D, apply_E, specialize_P
from .scalars import LaurentPoly, ParameterSpec, UniPoly, UniRatFunc
from .symfunc import SymPoly, restrict_derivative, wheel_substitute

__all__ = [
    "wheel_substitutions", "satisfies_wheel", "dim_J", "basis_I",
    "wheel_kernel_basis", "verify_theorem1", "verify_stability",
    "verify_rho_inclusion", "constraint_rows", "random_probe_point",
]


def wheel_substitutions(k, r):
    """All cumulative exponent sequences; count = C(k+r-1, k)."""
    return [tuple(c) for c in combinations_with_replacement(range(r), k)]


def satisfies_wheel(f, p, fld=None):
    """True iff every wheel substitution annihilates f.

    By default f has UniRatFunc coefficients; passing the CoeffField the
    coefficients actually live in (Laurent or numeric) reroutes the
    substitution through that ring.
    """
    if fld is None:
        return all(wheel_substitute(f, sigma, p).is_zero()
                   for sigma in wheel_substitutions(p.k, p.r))
    return all(_wheel_substitute_fld(f, sigma, fld, p.k).is_zero()
               for sigma in wheel_substitutions(p.k, p.r))


def laurent_clear(f, p):
    """Scale a SymPoly over K to Laurent-polynomial coefficients.

    Multiplies by the least common denominator, which changes nothing
    about membership in the wheel ideal.
    """
    den = UniPoly.one(p.N)
    for c in f.coeffs.values():
        g = den.gcd(c.den)
        den = den * c.den.divexact(g)
    out = {}
    for lam, c in f.coeffs.items():
        out[lam] = LaurentPoly.from_unipoly(c.num * den.divexact(c.den))
    return SymPoly(f.n, out)


def constraint_rows(k, r, n, d, p=None, fld=None):
    """Rows of the wheel constraint matrix on the (n, d) component.

    Yields lists indexed like enumerate_partitions(n, d), with UniRatFunc
    entries (or entries evaluated in fld when probing).  Row provenance is
    (sigma, free monomial); redundant rotation copies are kept, the kernel
    does not depend on them.
    """
    p = p or ParameterSpec(k, r)
    plist = pt.enumerate_partitions(n, d)
    index = {lam: i for i, lam in enumerate(plist)}
    one = UniRatFunc.one(p.N) if fld is None else fld.one
    zero = UniRatFunc.zero(p.N) if fld is None else fld.zero
    for sigma in wheel_substitutions(k, r):
        by_monomial = {}
        for lam in plist:
            f = SymPoly.m(lam, n, one)
            if fld is None:
                expansion = wheel_substitute(f, sigma, p)
            else:
                expansion = _wheel_substitute_fld(f, sigma, fld, k)
            for mono, c in expansion.terms.items():
                row = by_monomial.get(mono)
                if row is None:
                    row = by_monomial[mono] = [zero] * len(plist)
                row[index[lam]] = c
        for mono in sorted(by_monomial):
            yield (sigma, mono), by_monomial[mono]


def _wheel_substitute_fld(f, sigma, fld, k):
    """wheel_substitute with the ratios taken from an arbitrary CoeffField."""
    from .symfunc import MonomialExpansion, m_to_monomials
    ratios = [fld.tpow(i) * fld.qpow(sigma[i - 1]) for i in range(1, k + 1)]
    g = m_to_monomials(f)
    out = {}
    for alpha, c in g.terms.items():
        coeff = c
        for i in range(1, k + 1):
            e = alpha[i]
            if e:
                coeff = coeff * ratios[i - 1] ** e
        key = (sum(alpha[: k + 1]),) + alpha[k + 1:]
        w = out.get(key)
        w = coeff if w is None else w + coeff
        if w:
            out[key] = w
        else:
            out.pop(key, None)
    return MonomialExpansion(f.n - k, out)


def _clear_row(row, N):
    """UniRatFunc row -> UniPoly row (denominators here are u-powers)."""
    shift = 0
    for x in row:
        ddeg = x.den.degree()
        if ddeg > shift:
            shift = ddeg
    out = []
    for x in row:
        if x.is_zero():
            out.append(UniPoly.zero(N))
        else:
            out.append(x.num.shift(shift - x.den.degree()))
    return out


def random_probe_point(rng):
    """A rational u0 with |u0| not 0 or 1, so no extra resonances appear."""
    while True:
        num = rng.randint(2, 40)
        den = rng.randint(1, 40)
        if num != den:
            return Fraction(num, den)


def dim_J(k, r, n, d, p=None, mode="exact", seed=0):
    """dim over K of the wheel-condition subspace of Lambda_{n,d}.

    mode="probe" evaluates u at a random rational; the result is an upper
    bound for the exact dimension (minors can only lose rank), computed in
    seconds instead of the exact path's polynomial elimination.
    """
    p = p or ParameterSpec(k, r)
    ncols = len(pt.enumerate_partitions(n, d))
    if n <= k:
        return ncols
    if mode == "probe":
        rng = random.Random(seed)
        fld = CoeffField.numeric(p, random_probe_point(rng))
        ech = EchelonBasis(ncols)
        for _, row in constraint_rows(k, r, n, d, p, fld=fld):
            ech.add(row)
        return ncols - ech.rank
    rows = (_clear_row(row, p.N) for _, row in constraint_rows(k, r, n, d, p))
    rank, _ = rank_kernel_poly(rows, ncols, p.N, need_kernel=False)
    return ncols - rank


def wheel_kernel_basis(k, r, n, d, p=None):
    """Exact basis of J_{n,d} as SymPolys over K (monomial-basis kernel)."""
    p = p or ParameterSpec(k, r)
    plist = pt.enumerate_partitions(n, d)
    if n <= k:
        return [SymPoly.m(lam, n, UniRatFunc.one(p.N)) for lam in plist]
    rows = (_clear_row(row, p.N) for _, row in constraint_rows(k, r, n, d, p))
    _, vecs = rank_kernel_poly(rows, len(plist), p.N)
    out = []
    for vec in vecs:
        wrapped = [UniRatFunc(x, _canonical=True) for x in vec]
        out.append(SymPoly(n, dict(zip(plist, wrapped))))
    return out


def basis_I(k, r, n, d, p=None, table=None):
    """Specialized Macdonald polynomials over the admissible labels."""
    p = p or ParameterSpec(k, r)
    table = table if table is not None else MacdonaldTable(n)
    return [specialize_P(lam, n, p, table)
            for lam in pt.enumerate_admissible(k, r, n, d)]


def verify_theorem1(k, r, n, d, p=None, mode="exact", table=None, seed=0):
    """Check I = J on one component: inclusion witnesses plus dimensions."""
    p = p or ParameterSpec(k, r)
    admissible = pt.enumerate_admissible(k, r, n, d)
    witness_failures = []
    if n > k:
        table = table if table is not None else MacdonaldTable(n)
        fld = CoeffField.laurent(p)
        for lam in admissible:
            f = laurent_clear(specialize_P(lam, n, p, table), p)
            if not satisfies_wheel(f, p, fld):
                witness_failures.append(pt.format_partition(lam))
    dim = dim_J(k, r, n, d, p, mode=mode, seed=seed)
    return {
        "k": k, "r": r, "n": n, "d": d,
        "dim_J": dim,
        "admissible_count": len(admissible),
        "inclusion_ok": not witness_failures,
        "dims_equal": dim == len(admissible),
        "witness_failures": witness_failures,
    }


def verify_stability(f, p, operators=None):
    """Images of f under the Macdonald-type operators stay in J.

    Checks D_n^rho for 1 <= rho <= n and E_m for 0 <= m <= 2.  The input
    (over K) is first rescaled to Laurent-polynomial coefficients, which
    does not move it in or out of the ideal but keeps the operator
    arithmetic free of rational-function normalization.
    """
    if not satisfies_wheel(f, p):
        raise ValueError("input does not satisfy the wheel condition")
    fld = CoeffField.laurent(p)
    g = laurent_clear(f, p)
    n = f.n
    if operators is None:
        operators = [("D", rho) for rho in range(1, n + 1)] + \
                    [("E", m) for m in range(3)]
    for kind, arg in operators:
        image = apply_D(g, arg, fld) if kind == "D" else apply_E(g, arg, fld)
        if not satisfies_wheel(image, p, fld):
            return False
    return True


def verify_rho_inclusion(lam, k, r, n, j_max, p=None, table=None):
    """rho(d^j/dx_n^j P_lam) lies in J^(k,r)_{n-1} for 0 <= j <= j_max."""
    p = p or ParameterSpec(k, r)
    if n < k + 2:
        raise ValueError("need n >= k+2 so the restriction still has a wheel")
    table = table if table is not None else MacdonaldTable(n)
    fld = CoeffField.laurent(p)
    f = laurent_clear(specialize_P(lam, n, p, table), p)
    for j in range(j_max + 1):
        g = restrict_derivative(f, j, fld.one)
        if not satisfies_wheel(g, p, fld):
            return False
    return True
