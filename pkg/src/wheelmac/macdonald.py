"""Macdonald q-difference operators and Macdonald polynomials.

The operator family D_n^rho acts on symmetric polynomials as

    D_n^rho = sum_{|I|=rho} t^(rho(rho-1)/2)
              prod_{i in I, j notin I} (t x_i - x_j)/(x_i - x_j) . T_I,

with T_I the q-shift of the variables indexed by I, together with the
first-order operators E_m built from the q-derivative.  Everything is
computed on monomial expansions over a common Vandermonde denominator:
each subset contributes a polynomial numerator and the final result is
divided factor by factor with a zero-remainder assertion, so no rational
function arithmetic in the x variables is ever needed.

P_lam itself is found from the eigenvalue problem for D_n^1 by
back-substitution against the dominance-triangular matrix of the operator
in the monomial-symmetric basis, always over the generic field Q(q, t);
specializing the coefficients is a separate, final step.
"""

from collections import namedtuple

from . import partitions as pt
from .scalars import (BiRatFunc, CycloNum, LaurentPoly, PoleError, QTPoly,
                      UniRatFunc, render_scalar, parse_scalar)
from .symfunc import (MonomialExpansion, SymPoly, m_to_monomials,
                      monomials_to_m, sympoly_mul)

__all__ = [
    "CoeffField", "ExactDivisionError", "OperatorResult", "MacdonaldTable",
    "apply_D", "apply_D_result", "apply_E", "eigenvalue_D", "eigenvalue_e1",
    "compute_P", "psi_prime", "psi_dblprime", "verify_pieri", "pieri_failures",
    "integral_form_factor", "check_integrality", "specialize_P",
    "cauchy_row_check", "qpochhammer_ratio",
]


class ExactDivisionError(ArithmeticError):
    """A Vandermonde division left a remainder: an implementation bug."""


OperatorResult = namedtuple("OperatorResult", ["output", "division_exact"])


class CoeffField:
    """The coefficient ring an operator runs over: its 0, 1, q and t.

    Power and q-integer caches are per-instance; instances are cheap and
    callers normally create one per computation.
    """

    __slots__ = ("zero", "one", "q", "t", "from_int", "_qp", "_tp", "_qi")

    def __init__(self, zero, one, q, t, from_int):
        self.zero = zero
        self.one = one
        self.q = q
        self.t = t
        self.from_int = from_int
        self._qp = {0: one, 1: q}
        self._tp = {0: one, 1: t}
        self._qi = {0: zero, 1: one}

    @classmethod
    def generic_poly(cls):
        """Q[q, t] -- enough for operator application and eigenvalues."""
        return cls(QTPoly.zero(), QTPoly.one(), QTPoly.q(), QTPoly.t(),
                   lambda i: QTPoly.term(i))

    @classmethod
    def generic(cls):
        """Q(q, t)."""
        return cls(BiRatFunc.zero(), BiRatFunc.one(), BiRatFunc.q(),
                   BiRatFunc.t(), BiRatFunc.const)

    @classmethod
    def specialized(cls, p):
        """K = Q(zeta_{r-1})(u) at t = u^((r-1)/m), q = omega1 u^(-(k+1)/m)."""
        N = p.N
        return cls(UniRatFunc.zero(N), UniRatFunc.one(N), p.q_value(),
                   p.t_value(), lambda i: UniRatFunc.const(N, i))

    @classmethod
    def laurent(cls, p):
        """Same specialization over Laurent polynomials in u (no fractions).

        Only usable on inputs already cleared of denominators; this is the
        fast lane for the stability and restriction checks.
        """
        N = p.N
        q = LaurentPoly.monomial(N, -p.q_exp, p.omega1)
        t = LaurentPoly.monomial(N, p.t_exp)
        return cls(LaurentPoly.zero(N), LaurentPoly.one(N), q, t,
                   lambda i: LaurentPoly.const(N, i))

    @classmethod
    def root_of_unity(cls, p):
        """Q(zeta_{r-1}) at t = 1, q = tau."""
        N = p.N
        return cls(CycloNum.zero(N), CycloNum.one(N), p.tau,
                   CycloNum.one(N), lambda i: CycloNum.from_rational(N, i))

    @classmethod
    def numeric(cls, p, u0):
        """Probe field: u evaluated at a rational point, over Q(zeta_{r-1})."""
        N = p.N
        return cls(CycloNum.zero(N), CycloNum.one(N),
                   p.q_value().evaluate(u0), p.t_value().evaluate(u0),
                   lambda i: CycloNum.from_rational(N, i))

    def qpow(self, e):
        v = self._qp.get(e)
        if v is None:
            v = self._qp[e] = self.qpow(e - 1) * self.q
        return v

    def tpow(self, e):
        v = self._tp.get(e)
        if v is None:
            v = self._tp[e] = self.tpow(e - 1) * self.t
        return v

    def qint(self, e):
        """[e]_q = 1 + q + ... + q^(e-1) = (q^e - 1)/(q - 1), exactly."""
        v = self._qi.get(e)
        if v is None:
            v = self._qi[e] = self.qint(e - 1) + self.qpow(e - 1)
        return v


# --- raw polynomial kernels on {exponent tuple: coefficient} dicts --------

def _acc(out, key, c):
    w = out.get(key)
    w = c if w is None else w + c
    if w:
        out[key] = w
    else:
        out.pop(key, None)


def _mul_tlinear(terms, i, j, t):
    """(t*x_i - x_j) * P."""
    out = {}
    for a, c in terms.items():
        hi = list(a)
        hi[i] += 1
        _acc(out, tuple(hi), c * t)
        lo = list(a)
        lo[j] += 1
        _acc(out, tuple(lo), -c)
    return out


def _mul_difflinear(terms, a_idx, b_idx):
    """(x_a - x_b) * P."""
    out = {}
    for a, c in terms.items():
        hi = list(a)
        hi[a_idx] += 1
        _acc(out, tuple(hi), c)
        lo = list(a)
        lo[b_idx] += 1
        _acc(out, tuple(lo), -c)
    return out


def _divexact_linear(terms, a_idx, b_idx):
    """P / (x_a - x_b) by synthetic division; raises if inexact."""
    if not terms:
        return terms
    by_e = {}
    for alpha, c in terms.items():
        by_e.setdefault(alpha[a_idx], []).append((alpha, c))
    maxe = max(by_e)
    quot = {}
    carry = {}  # current Q_e, keyed with a-exponent already e
    for e in range(maxe, 0, -1):
        cur = {}
        for alpha, c in by_e.get(e, ()):
            beta = list(alpha)
            beta[a_idx] = e - 1
            _acc(cur, tuple(beta), c)
        for alpha, c in carry.items():
            beta = list(alpha)
            beta[a_idx] = e - 1
            beta[b_idx] += 1
            _acc(cur, tuple(beta), c)
        quot.update(cur)
        carry = cur
    rem = {}
    for alpha, c in by_e.get(0, ()):
        _acc(rem, alpha, c)
    for alpha, c in carry.items():
        beta = list(alpha)
        beta[b_idx] += 1
        _acc(rem, tuple(beta), c)
    if rem:
        raise ExactDivisionError("nonzero remainder dividing by "
                                 "x_%d - x_%d" % (a_idx + 1, b_idx + 1))
    return quot


def _qshift(terms, iset, fld):
    """T_I: multiply the coefficient of x^alpha by q^(sum_{i in I} alpha_i)."""
    out = {}
    for alpha, c in terms.items():
        e = sum(alpha[i] for i in iset)
        out[alpha] = c * fld.qpow(e) if e else c
    return out


def _subset_sign(iset, n):
    """Parity of #{(a, b): a < b, a not in I, b in I}."""
    count = 0
    below = 0
    for x in range(n):
        if x in iset:
            count += below
        else:
            below += 1
    return -1 if count % 2 else 1


def _subsets(n, rho):
    from itertools import combinations
    return combinations(range(n), rho)


def _operator_core(n, local_terms, fld):
    """Assemble sum_I A_I(x;t) h_I over the common Vandermonde denominator.

    local_terms yields (iset, h) pairs where h is already T_I f (or the
    q-derivative payload for E_m); returns the exact quotient.
    """
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    total = {}
    for iset, h, pref in local_terms:
        if not h:
            continue
        for i in iset:
            for j in range(n):
                if j not in iset:
                    h = _mul_tlinear(h, i, j, fld.t)
        for a, b in pairs:
            if (a in iset) == (b in iset):
                h = _mul_difflinear(h, a, b)
        sign = _subset_sign(iset, n)
        if pref is not None:
            for alpha, c in h.items():
                _acc(total, alpha, c * pref if sign > 0 else -(c * pref))
        else:
            for alpha, c in h.items():
                _acc(total, alpha, c if sign > 0 else -c)
    for a, b in pairs:
        total = _divexact_linear(total, a, b)
    return total


def apply_D_result(f, rho, fld):
    """D_n^rho f with the exact-division witness attached."""
    n = f.n
    if not 0 <= rho <= n:
        raise ValueError("need 0 <= rho <= n")
    if rho == 0:
        return OperatorResult(f, True)
    g = m_to_monomials(f).terms
    tpref = fld.tpow(rho * (rho - 1) // 2) if rho > 1 else None

    def local():
        for I in _subsets(n, rho):
            iset = frozenset(I)
            yield iset, _qshift(g, I, fld), tpref

    total = _operator_core(n, local(), fld)
    out = monomials_to_m(MonomialExpansion(n, total))
    return OperatorResult(out, True)


def apply_D(f, rho, fld):
    return apply_D_result(f, rho, fld).output


def apply_E(f, m, fld):
    """E_m f = sum_i x_i^m A_i(x;t) (T_{q,x_i} - 1)/((q-1) x_i) f.

    The q-derivative of a monomial is [e]_q x^(alpha - e_i), which keeps
    every coefficient polynomial in q; no division by q - 1 happens.
    """
    if m < 0:
        raise ValueError("need m >= 0")
    n = f.n
    g = m_to_monomials(f).terms

    def local():
        for i in range(n):
            h = {}
            for alpha, c in g.items():
                e = alpha[i]
                if e:
                    beta = list(alpha)
                    beta[i] += m - 1
                    _acc(h, tuple(beta), c * fld.qint(e))
            yield frozenset((i,)), h, None

    total = _operator_core(n, local(), fld)
    return monomials_to_m(MonomialExpansion(n, total))


def eigenvalue_D(lam, n, fld=None):
    """Coefficient list of prod_i (1 + X q^(lam_i) t^(n-i)) in X."""
    fld = fld or CoeffField.generic_poly()
    lam = pt.pad(pt.normalize(lam), n)
    coeffs = [fld.one]
    for i in range(n):
        v = fld.qpow(lam[i]) * fld.tpow(n - 1 - i)
        nxt = [fld.zero] * (len(coeffs) + 1)
        for e, c in enumerate(coeffs):
            nxt[e] = nxt[e] + c
            nxt[e + 1] = nxt[e + 1] + c * v
        coeffs = nxt
    return coeffs


def eigenvalue_e1(lam, n, fld=None):
    """The D_n^1 eigenvalue sum_i q^(lam_i) t^(n-i)."""
    fld = fld or CoeffField.generic_poly()
    lam = pt.pad(pt.normalize(lam), n)
    acc = fld.zero
    for i in range(n):
        acc = acc + fld.qpow(lam[i]) * fld.tpow(n - 1 - i)
    return acc


class MacdonaldTable:
    """Cache of Macdonald polynomials P_lam over Q(q, t) for fixed n.

    compute_P mutates the table; share a table only under external
    serialization, or give each thread its own.
    """

    def __init__(self, n):
        self.n = n
        self.entries = {}
        self._matrices = {}
        self._eps = {}

    def eps1(self, lam):
        lam = pt.normalize(lam)
        v = self._eps.get(lam)
        if v is None:
            v = self._eps[lam] = eigenvalue_e1(lam, self.n)
        return v

    def component_matrix(self, d):
        """Decreasing-lex partition list of size d and the D_n^1 columns.

        Column nu maps each mu to the QTPoly entry <m_mu> D_n^1 m_nu.
        """
        cached = self._matrices.get(d)
        if cached is not None:
            return cached
        plist = pt.enumerate_partitions(self.n, d)
        fld = CoeffField.generic_poly()
        cols = {}
        for nu in plist:
            image = apply_D(SymPoly.m(nu, self.n, QTPoly.one()), 1, fld)
            cols[nu] = image.coeffs
        cached = self._matrices[d] = (plist, cols)
        return cached

    def compute_P(self, lam):
        lam = pt.normalize(lam)
        if pt.length(lam) > self.n:
            raise ValueError("partition %r does not fit in %d variables"
                             % (lam, self.n))
        got = self.entries.get(lam)
        if got is not None:
            return got
        plist, cols = self.component_matrix(pt.size(lam))
        eps_lam = self.eps1(lam)
        u = {lam: BiRatFunc.one()}
        start = plist.index(lam)
        for mu in plist[start + 1:]:
            acc = BiRatFunc.zero()
            for nu, unu in u.items():
                entry = cols[nu].get(mu)
                if entry is not None:
                    acc = acc + unu * entry
            if acc.is_zero():
                continue
            diff = eps_lam - self.eps1(mu)
            if diff.is_zero():
                raise ExactDivisionError(
                    "equal D_n^1 eigenvalues for %r and %r over Q(q,t)"
                    % (lam, mu))
            u[mu] = acc / BiRatFunc.from_poly(diff)
        result = SymPoly(self.n, u)
        self.entries[lam] = result
        return result

    # -- on-disk cache ------------------------------------------------

    def to_json_dict(self):
        entries = []
        for lam in sorted(self.entries, key=lambda l: (pt.size(l), l)):
            f = self.entries[lam]
            coeffs = [{"mu": pt.format_partition(mu),
                       "value": render_scalar(c)}
                      for mu, c in sorted(f.coeffs.items(), reverse=True)]
            entries.append({"lambda": pt.format_partition(lam),
                            "coefficients": coeffs})
        return {"n": self.n, "entries": entries}

    @classmethod
    def from_json_dict(cls, data):
        table = cls(int(data["n"]))
        for entry in data.get("entries", ()):
            lam = pt.parse_partition(entry["lambda"])
            coeffs = {}
            for item in entry["coefficients"]:
                mu = pt.parse_partition(item["mu"])
                coeffs[mu] = parse_scalar(item["value"], "qt")
            f = SymPoly(table.n, coeffs)
            if coeffs.get(lam) != BiRatFunc.one():
                raise ValueError("cache entry %r is not unitriangular" % (lam,))
            for mu in coeffs:
                if mu != lam and not (pt.size(mu) == pt.size(lam)
                                      and pt.dominance_leq(mu, lam)):
                    raise ValueError("cache entry %r has support %r outside "
                                     "the dominance ideal" % (lam, mu))
            table.entries[lam] = f
        return table


def compute_P(lam, n, table=None):
    table = table if table is not None else MacdonaldTable(n)
    if table.n != n:
        raise ValueError("table was built for n=%d" % table.n)
    return table.compute_P(lam)


def _one_minus_qt(a, b):
    """1 - q^a t^b as a BiRatFunc, any integer exponents."""
    return BiRatFunc.one() - BiRatFunc.qt_monomial(a, b)


def psi_prime(lam, j):
    """Pieri coefficient psi' for adding a node to row j of lam.

    Vanishes exactly when lam_{j-1} = lam_j, i.e. when the new shape is
    not a partition.
    """
    lam = pt.normalize(lam)
    if not 1 <= j <= pt.length(lam) + 1:
        raise ValueError("need 1 <= j <= l(lam)+1")
    lam_j = lam[j - 1] if j <= len(lam) else 0
    out = BiRatFunc.one()
    for i in range(1, j):
        a = lam[i - 1] - lam_j
        num = _one_minus_qt(a - 1, j - i + 1) * _one_minus_qt(a, j - i - 1)
        den = _one_minus_qt(a, j - i) * _one_minus_qt(a - 1, j - i)
        if den.is_zero():
            raise ExactDivisionError("vanishing denominator in psi'")
        out = out * num / den
    return out


def psi_dblprime(lam, j, n):
    """Lowering coefficient psi'' for removing a node from row j of lam."""
    lam = pt.normalize(lam)
    if not 1 <= j <= pt.length(lam):
        raise ValueError("need 1 <= j <= l(lam)")
    if pt.length(lam) > n:
        raise ValueError("partition does not fit in %d variables" % n)
    padded = pt.pad(lam, n)
    lam_j = padded[j - 1]
    out = _one_minus_qt(lam_j, n - j) / _one_minus_qt(1, 0)
    for i in range(j + 1, n + 1):
        a = lam_j - padded[i - 1]
        num = _one_minus_qt(a - 1, i - j + 1) * _one_minus_qt(a, i - j - 1)
        den = _one_minus_qt(a, i - j) * _one_minus_qt(a - 1, i - j)
        if den.is_zero():
            raise ExactDivisionError("vanishing denominator in psi''")
        out = out * num / den
    return out


def _pieri_sum_up(lam, n, table, weight=None):
    """sum_j weight(j) psi'_j P_(lam + node at j), inside Lambda_n."""
    acc = SymPoly.zero(n)
    lam = pt.normalize(lam)
    for j in range(1, pt.length(lam) + 2):
        prev = lam[j - 2] if j >= 2 else None
        cur = lam[j - 1] if j <= len(lam) else 0
        if j >= 2 and prev == cur:
            continue  # psi' = 0, the term is absent
        mu = pt.add_node(lam, j)
        if pt.length(mu) > n:
            continue  # P_mu = 0 in n variables
        coeff = psi_prime(lam, j)
        if weight is not None:
            coeff = coeff * weight(j, cur)
        acc = acc + table.compute_P(mu).scale(coeff)
    return acc


def pieri_failures(lam, n, table=None):
    """Names of the expansion identities that fail for lam (normally none).

    Checks, by exact equality over Q(q, t):
      e1  : e_1 P_lam            = sum_j psi'  P_(add node j)
      E0  : E_0 P_lam            = sum_j psi'' P_(remove node j)
      E2  : E_2 P_lam            = t^(n-1)/(1-q) sum_j (1 - q^(lam_j) t^(1-j))
                                   psi' P_(add node j)
    """
    table = table if table is not None else MacdonaldTable(n)
    lam = pt.normalize(lam)
    if pt.length(lam) > n:
        raise ValueError("partition does not fit")
    fld = CoeffField.generic()
    P = table.compute_P(lam)
    failures = []

    e1 = SymPoly.m((1,), n, BiRatFunc.one())
    if sympoly_mul(e1, P) != _pieri_sum_up(lam, n, table):
        failures.append("e1")

    acc = SymPoly.zero(n)
    for j in range(1, pt.length(lam) + 1):
        if j < len(lam) and lam[j - 1] == lam[j]:
            continue  # psi'' = 0
        mu = pt.remove_node(lam, j)
        acc = acc + table.compute_P(mu).scale(psi_dblprime(lam, j, n))
    if apply_E(P, 0, fld) != acc:
        failures.append("E0")

    pref = (BiRatFunc.t() ** (n - 1)) / (BiRatFunc.one() - BiRatFunc.q())
    rhs = _pieri_sum_up(
        lam, n, table,
        weight=lambda j, lam_j: _one_minus_qt(lam_j, 1 - j))
    if apply_E(P, 2, fld) != rhs.scale(pref):
        failures.append("E2")
    return failures


def verify_pieri(lam, n, table=None):
    return not pieri_failures(lam, n, table)


def integral_form_factor(lam):
    """c_lam(q, t) = prod over cells (i,j) of (1 - q^(arm) t^(leg+1))."""
    lam = pt.normalize(lam)
    conj = pt.conjugate(lam)
    out = QTPoly.one()
    for i, li in enumerate(lam, start=1):
        for j in range(1, li + 1):
            out = out * (QTPoly.one() - QTPoly.term(1, li - j, conj[j - 1] - i + 1))
    return BiRatFunc.from_poly(out)


def check_integrality(lam, n, table=None):
    """True iff c_lam P_lam has polynomial coefficients (in lowest terms)."""
    table = table if table is not None else MacdonaldTable(n)
    c = integral_form_factor(lam)
    P = table.compute_P(lam)
    return all((c * coeff).is_polynomial() for coeff in P.coeffs.values())


def specialize_P(lam, n, p, table=None):
    """P_lam with every coefficient pushed into K = Q(zeta_{r-1})(u).

    Raises PoleError naming the offending coefficient when a denominator
    vanishes; by the regularity lemma this cannot happen for admissible
    partitions or admissible ones changed by a single node.
    """
    table = table if table is not None else MacdonaldTable(n)
    P = table.compute_P(lam)
    out = {}
    for mu, c in P.coeffs.items():
        try:
            out[mu] = p.specialize(c)
        except PoleError:
            raise PoleError(
                "coefficient of m_%s in P_%s has a pole at the (k=%d, r=%d) "
                "specialization" % (pt.format_partition(mu),
                                    pt.format_partition(lam), p.k, p.r))
    return SymPoly(n, out)


def qpochhammer_ratio(m):
    """(t; q)_m / (q; q)_m as a BiRatFunc."""
    num = QTPoly.one()
    den = QTPoly.one()
    for i in range(m):
        num = num * (QTPoly.one() - QTPoly.term(1, i, 1))
        den = den * (QTPoly.one() - QTPoly.term(1, i + 1, 0))
    return BiRatFunc(num, den)


def cauchy_row_check(n, l_max, table=None):
    """Row case of the Cauchy identity, as truncated series in y.

    Compares sum_l P_(l)(x) (t;q)_l/(q;q)_l y^l against
    prod_i (t x_i y; q)_inf / (x_i y; q)_inf expanded through y^l_max via
    the q-binomial series (t z; q)_inf/(z; q)_inf = sum_m (t;q)_m/(q;q)_m z^m.
    """
    table = table if table is not None else MacdonaldTable(n)
    ratios = [qpochhammer_ratio(m) for m in range(l_max + 1)]
    # right-hand side: product over variables of the one-variable series
    rhs = [dict() for _ in range(l_max + 1)]
    rhs[0][(0,) * n] = BiRatFunc.one()
    for i in range(n):
        new = [dict() for _ in range(l_max + 1)]
        for deg, terms in enumerate(rhs):
            for alpha, c in terms.items():
                for m in range(l_max + 1 - deg):
                    beta = list(alpha)
                    beta[i] += m
                    _acc(new[deg + m], tuple(beta), c * ratios[m])
        rhs = new
    for l in range(l_max + 1):
        lhs = m_to_monomials(table.compute_P((l,) if l else ()).scale(ratios[l]))
        if lhs.terms != rhs[l]:
            return False
    return True
