"""Symmetric polynomials in n variables over an exact scalar ring.

Storage is sparse in the monomial-symmetric basis: a ``SymPoly`` maps
partitions to coefficients, and the dense orbit expansion
(``MonomialExpansion``) is materialized only inside operators and
substitutions.  Coefficients can be any of the scalar types from
``wheelmac.scalars`` (or plain ints/Fractions); the code only relies on
ring arithmetic and truthiness for zero tests.
"""

from fractions import Fraction
from itertools import permutations
from math import factorial

from . import partitions as pt

__all__ = [
    "SymPoly", "MonomialExpansion", "m_to_monomials", "monomials_to_m",
    "sympoly_mul", "wheel_substitute", "restrict_derivative",
    "orbit_of", "eval_monomial_symmetric",
]

_ORBITS = {}


def orbit_of(lam, n):
    """Distinct permutations of lam padded to n slots (the S_n orbit)."""
    key = (tuple(lam), n)
    orb = _ORBITS.get(key)
    if orb is None:
        orb = _ORBITS[key] = sorted(set(permutations(pt.pad(lam, n))))
    return orb


class SymPoly:
    """Element of Lambda_n, keyed by partitions with <= n parts."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = pt.normalize(lam)
            if len(lam) > n:
                raise ValueError("partition %r needs more than %d variables"
                                 % (lam, n))
            if c:
                clean[lam] = c
        self.coeffs = clean

    @classmethod
    def m(cls, lam, n, one=Fraction(1)):
        """The monomial symmetric function m_lam."""
        return cls(n, {pt.normalize(lam): one})

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def degree_components(self):
        """Split into homogeneous pieces: {degree: SymPoly}."""
        out = {}
        for lam, c in self.coeffs.items():
            out.setdefault(pt.size(lam), {})[lam] = c
        return {d: SymPoly(self.n, cs) for d, cs in out.items()}

    def map_coeffs(self, fn):
        return SymPoly(self.n, {lam: fn(c) for lam, c in self.coeffs.items()})

    def __add__(self, other):
        if isinstance(other, SymPoly):
            if other.n != self.n:
                raise ValueError("variable counts differ")
            out = dict(self.coeffs)
            for lam, c in other.coeffs.items():
                w = out.get(lam)
                w = c if w is None else w + c
                if w:
                    out[lam] = w
                else:
                    out.pop(lam, None)
            return SymPoly(self.n, out)
        return NotImplemented

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        return SymPoly(self.n, {lam: c * s for lam, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return sympoly_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        return (isinstance(other, SymPoly) and self.n == other.n
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "SymPoly(%d, 0)" % self.n
        body = " + ".join("(%r)*m[%s]" % (c, ",".join(map(str, lam)))
                          for lam, c in sorted(self.coeffs.items(), reverse=True))
        return "SymPoly(%d, %s)" % (self.n, body)


class MonomialExpansion:
    """Dense-orbit form: {exponent vector of length n: coefficient}."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {a: c for a, c in (terms or {}).items() if c}

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, MonomialExpansion) and self.n == other.n
                and self.terms == other.terms)

    def __add__(self, other):
        if not isinstance(other, MonomialExpansion) or other.n != self.n:
            return NotImplemented
        out = dict(self.terms)
        for a, c in other.terms.items():
            w = out.get(a)
            w = c if w is None else w + c
            if w:
                out[a] = w
            else:
                out.pop(a, None)
        return MonomialExpansion(self.n, out)

    def scale(self, s):
        return MonomialExpansion(self.n, {a: c * s for a, c in self.terms.items()})

    def __repr__(self):
        return "MonomialExpansion(%d, %d terms)" % (self.n, len(self.terms))


def m_to_monomials(f):
    """Expand each m_lam into its orbit sum (coefficient 1 per monomial)."""
    terms = {}
    for lam, c in f.coeffs.items():
        for alpha in orbit_of(lam, f.n):
            w = terms.get(alpha)
            terms[alpha] = c if w is None else w + c
    return MonomialExpansion(f.n, terms)


def monomials_to_m(g, check=True):
    """Inverse of m_to_monomials; rejects non-symmetric input.

    The symmetry check reports a violating transposition, which is the
    error surface the rest of the package relies on to catch operator bugs.
    """
    coeffs = {}
    for alpha, c in g.terms.items():
        lam = tuple(sorted(alpha, reverse=True))
        if lam in coeffs:
            continue
        coeffs[lam] = c
    if check:
        for alpha, c in g.terms.items():
            lam = tuple(sorted(alpha, reverse=True))
            ref = coeffs[lam]
            if c != ref:
                i, j = _violating_transposition(g, alpha)
                raise ValueError(
                    "input not symmetric: swapping x_%d and x_%d changes "
                    "the coefficient of %r" % (i + 1, j + 1, alpha))
        for lam in coeffs:
            orbit = orbit_of(lam, g.n)
            if any(a not in g.terms for a in orbit):
                alpha = next(a for a in orbit if a in g.terms)
                missing = next(a for a in orbit if a not in g.terms)
                i, j = _differing_pair(alpha, missing)
                raise ValueError(
                    "input not symmetric: swapping x_%d and x_%d kills "
                    "the coefficient of %r" % (i + 1, j + 1, alpha))
    return SymPoly(g.n, coeffs)


def _violating_transposition(g, alpha):
    c = g.terms[alpha]
    zero = c - c
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if alpha[i] == alpha[j]:
                continue
            beta = list(alpha)
            beta[i], beta[j] = beta[j], beta[i]
            if g.terms.get(tuple(beta), zero) != c:
                return i, j
    return 0, 1


def _differing_pair(alpha, beta):
    idx = [i for i in range(len(alpha)) if alpha[i] != beta[i]]
    return idx[0], idx[-1]


def expansion_mul(g, h):
    """Product of two expansions over the same variables."""
    if g.n != h.n:
        raise ValueError("variable counts differ")
    out = {}
    a_items = g.terms.items()
    b_items = list(h.terms.items())
    for aa, ca in a_items:
        for bb, cb in b_items:
            key = tuple(x + y for x, y in zip(aa, bb))
            c = ca * cb
            w = out.get(key)
            w = c if w is None else w + c
            if w:
                out[key] = w
            else:
                out.pop(key, None)
    return MonomialExpansion(g.n, out)


def sympoly_mul(f, g):
    """Product in Lambda_n via the monomial-expansion round trip."""
    if f.n != g.n:
        raise ValueError("variable counts differ: %d vs %d" % (f.n, g.n))
    prod = expansion_mul(m_to_monomials(f), m_to_monomials(g))
    # product of symmetric polynomials is symmetric; skip the scan
    return monomials_to_m(prod, check=False)


def wheel_substitute(f, sigma, p):
    """Substitute the wheel x_{i+1} = t^i q^{sigma_i} x_1, i = 1..k.

    sigma is the cumulative exponent sequence (sigma_i = s_1 + ... + s_i),
    weakly increasing inside {0, ..., r-1}; the first k+1 variables
    collapse onto the line through x_1 and the rest stay free.  Returns
    the expansion in the free variables (slot 0 is x_1, then
    x_{k+2}, ..., x_n) with coefficients over the specialized field.
    """
    k, r = p.k, p.r
    sigma = tuple(sigma)
    if len(sigma) != k:
        raise ValueError("sigma must have length k=%d" % k)
    prev = 0
    for s in sigma:
        if s < prev or s > r - 1:
            raise ValueError("sigma must be weakly increasing within 0..r-1: %r"
                             % (sigma,))
        prev = s
    if f.n < k + 1:
        raise ValueError("need at least k+1=%d variables, got %d" % (k + 1, f.n))
    tv = p.t_value()
    qv = p.q_value()
    ratios = [tv ** i * qv ** sigma[i - 1] for i in range(1, k + 1)]
    powcache = [{0: None} for _ in ratios]

    g = m_to_monomials(f)
    nfree = f.n - k
    out = {}
    for alpha, c in g.terms.items():
        coeff = c
        for i in range(1, k + 1):
            e = alpha[i]
            if e:
                cache = powcache[i - 1]
                pw = cache.get(e)
                if pw is None:
                    pw = cache[e] = ratios[i - 1] ** e
                coeff = coeff * pw
        key = (sum(alpha[: k + 1]),) + alpha[k + 1:]
        w = out.get(key)
        w = coeff if w is None else w + coeff
        if w:
            out[key] = w
        else:
            out.pop(key, None)
    return MonomialExpansion(nfree, out)


def restrict_derivative(f, j, one=Fraction(1)):
    """rho(d^j f / dx_n^j): differentiate j times in x_n, set x_n = 0.

    Returns a SymPoly in n-1 variables; the result of applying this to a
    symmetric polynomial is again symmetric, which is asserted.
    """
    if f.n < 2:
        raise ValueError("need at least two variables")
    g = m_to_monomials(f)
    scale = one * factorial(j)
    out = {}
    for alpha, c in g.terms.items():
        if alpha[-1] != j:
            continue
        out[alpha[:-1]] = c * scale
    try:
        return monomials_to_m(MonomialExpansion(f.n - 1, out))
    except ValueError as exc:  # pragma: no cover - would signal a bug
        raise AssertionError("restriction of a symmetric polynomial "
                             "came out asymmetric") from exc


def eval_monomial_symmetric(lam, values, one=Fraction(1)):
    """m_lam evaluated at a concrete list of scalars."""
    n = len(values)
    lam = pt.normalize(lam)
    if len(lam) > n:
        return one * 0
    total = one * 0
    powcache = {}
    for alpha in orbit_of(lam, n):
        prod = one
        for i, e in enumerate(alpha):
            if e:
                pw = powcache.get((i, e))
                if pw is None:
                    pw = powcache[(i, e)] = values[i] ** e
                prod = prod * pw
        total = total + prod
    return total
