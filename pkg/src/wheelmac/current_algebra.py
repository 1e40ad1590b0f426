"""Commuting currents dual to the wheel condition.

R = K[e_0, e_1, ...] with deg e_i = (1, i).  The ideal of interest is
generated by Fourier coefficients of products of shifted currents

    e(z) e(c_1 z) ... e(c_k z),      c_i = t^i q^(sigma_i),

whose z^d coefficient is  sum_{mu in pi_{k+1,d}} m_mu(1, c_1, ..., c_k) e_mu.
At the root of unity t = 1, q = tau the same generators regroup by residue
profiles nu (counts of the exponents mod r-1) into integer combinations
sum_{mu in K_d(nu)} C_mu e_mu with multinomial C_mu, and the quotient has
the admissible monomials as a basis; reduce_to_admissible realizes the
rewriting walk from the spanning proof.  On top of that sit the prefix-
bounded quotients W_{b_0..b_{r-2}}, their monomial-counting characters and
the character recursion.
"""

import math
from fractions import Fraction

from . import partitions as pt
from .linalg import EchelonBasis, rank_kernel_poly
from .scalars import ParameterSpec, UniPoly, UniRatFunc
from .symfunc import eval_monomial_symmetric
from .wheel_ideal import wheel_substitutions

__all__ = [
    "CurrentVector", "CharSeries", "relation_rootofunity", "relation_generic",
    "residue_profiles", "K_d_nu", "quotient_dim", "reduce_to_admissible",
    "enumerate_C_sequences", "chi_C", "verify_recursion", "W_space_dim",
    "verify_prop302", "ideal_rows",
]


class CurrentVector:
    """Finite combination of monomials e_lam, keys padded to n slots.

    Zero parts matter: e_0 is an honest generator, so (2, 0) is e_2 e_0,
    not e_2.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        for lam, c in (terms or {}).items():
            lam = pt.pad(pt.normalize(lam), n)
            if c:
                clean[lam] = c
        self.terms = clean

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def scale(self, s):
        return CurrentVector(self.n, {k: c * s for k, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, CurrentVector) or other.n != self.n:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            w = out.get(k)
            w = c if w is None else w + c
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return CurrentVector(self.n, out)

    def __eq__(self, other):
        return (isinstance(other, CurrentVector) and self.n == other.n
                and self.terms == other.terms)

    def __repr__(self):
        body = " + ".join("(%r)*e[%s]" % (c, ",".join(map(str, k)))
                          for k, c in sorted(self.terms.items(), reverse=True))
        return "CurrentVector(%d, %s)" % (self.n, body or "0")


def residue_profiles(k, r):
    """All nu = (nu_0..nu_{r-2}) of non-negative integers summing to k+1."""
    out = []

    def rec(slots, left, prefix):
        if slots == 1:
            out.append(tuple(prefix) + (left,))
            return
        for v in range(left + 1):
            prefix.append(v)
            rec(slots - 1, left - v, prefix)
            prefix.pop()

    rec(r - 1, k + 1, [])
    return out


def K_d_nu(d, nu, k, r):
    """Partitions of d with exactly k+1 parts (zeros allowed) whose
    residue-class multiplicities mod r-1 match nu."""
    out = []
    for mu in pt.enumerate_partitions(k + 1, d):
        mu = pt.pad(mu, k + 1)
        counts = [0] * (r - 1)
        for v in mu:
            counts[v % (r - 1)] += 1
        if tuple(counts) == tuple(nu):
            out.append(mu)
    return out


def relation_rootofunity(d, nu, k, r):
    """z^d Fourier coefficient of prod_a e_{1,a+2}(z)^(nu_a) at t=1, q=tau.

    Supported on K_d(nu) with positive integer multinomial coefficients
    C_mu = prod_a nu_a! / prod_{v = a mod r-1} mult_mu(v)!.
    """
    if len(nu) != r - 1 or sum(nu) != k + 1:
        raise ValueError("profile must have r-1 entries summing to k+1")
    terms = {}
    for mu in K_d_nu(d, nu, k, r):
        mult = {}
        for v in mu:
            mult[v] = mult.get(v, 0) + 1
        c = 1
        for a in range(r - 1):
            c *= math.factorial(nu[a])
        for v, m in mult.items():
            c //= math.factorial(m)
        terms[mu] = Fraction(c)
    return CurrentVector(k + 1, terms)


def relation_generic(d, sigma, k, r, p=None):
    """z^d coefficient of e(z) e(c_1 z) ... e(c_k z), c_i = t^i q^(sigma_i)."""
    p = p or ParameterSpec(k, r)
    tv, qv = p.t_value(), p.q_value()
    values = [UniRatFunc.one(p.N)]
    for i in range(1, k + 1):
        values.append(tv ** i * qv ** sigma[i - 1])
    one = UniRatFunc.one(p.N)
    terms = {}
    for mu in pt.enumerate_partitions(k + 1, d):
        c = eval_monomial_symmetric(mu, values, one)
        if c:
            terms[pt.pad(mu, k + 1)] = c
    return CurrentVector(k + 1, terms)


def _merge(a, b):
    return tuple(sorted(a + b, reverse=True))


def ideal_rows(k, r, n, d, p=None, field="rootofunity"):
    """Vectors spanning the (n, d) ideal component, over pi_{n,d}.

    Rows are e_nu * relation(d', .) for every internal degree d' <= d and
    every filler nu in pi_{n-k-1, d-d'}; for field="generic" the relations
    run over the wheel substitution sequences, at the root of unity over
    the residue profiles.
    """
    if n < k + 1:
        return []
    plist = pt.enumerate_partitions(n, d)
    index = {lam: i for i, lam in enumerate(plist)}
    if field == "rootofunity":
        zero = Fraction(0)
        gens = [(dd, relation_rootofunity(dd, nu, k, r))
                for dd in range(d + 1) for nu in residue_profiles(k, r)]
    else:
        p = p or ParameterSpec(k, r)
        zero = UniRatFunc.zero(p.N)
        gens = [(dd, relation_generic(dd, sigma, k, r, p))
                for dd in range(d + 1) for sigma in wheel_substitutions(k, r)]
    rows = []
    for dd, rel in gens:
        if rel.is_zero():
            continue
        for filler in pt.enumerate_partitions(n - k - 1, d - dd):
            filler = pt.pad(filler, n - k - 1)
            row = [zero] * len(plist)
            for mu, c in rel.terms.items():
                key = pt.normalize(_merge(mu, filler))
                row[index[key]] = row[index[key]] + c
            rows.append(row)
    return rows


def _corank_unirat_rows(rows, ncols, N):
    """Corank of UniRatFunc rows via the certified polynomial path."""
    cleared = []
    for row in rows:
        shift = max((x.den.degree() for x in row), default=0)
        cleared.append([x.num.shift(shift - x.den.degree()) if x
                        else UniPoly.zero(N) for x in row])
    rank, _ = rank_kernel_poly(cleared, ncols, N, need_kernel=False)
    return ncols - rank


def quotient_dim(k, r, n, d, p=None, field="rootofunity"):
    """dim of the (n, d) component of R modulo the current relations."""
    ncols = len(pt.enumerate_partitions(n, d))
    if n < k + 1:
        return ncols
    rows = ideal_rows(k, r, n, d, p, field)
    if field == "rootofunity":
        ech = EchelonBasis(ncols)
        for row in rows:
            ech.add(row)
        return ncols - ech.rank
    p = p or ParameterSpec(k, r)
    return _corank_unirat_rows(rows, ncols, p.N)


def reduce_to_admissible(lam, k, r):
    """Rewrite e_lam modulo the t=1, q=tau relations into admissible terms.

    Repeatedly takes the lexicographically largest non-admissible term,
    extracts its first violating window mu (k+1 consecutive parts with
    spread <= r-1), and eliminates e_mu by the relation in which mu is
    the lex-minimal support element.  Every replacement is lex-greater,
    so the walk terminates inside pi_{n,d}.
    """
    lam = tuple(lam)
    n = len(lam)
    current = CurrentVector(n, {lam: Fraction(1)})
    while True:
        worklist = [key for key in current.terms
                    if not pt.is_admissible(key, k, r, n)]
        if not worklist:
            return current
        key = max(worklist)
        coeff = current.terms[key]
        i = next(i for i in range(n - k) if key[i] - key[i + k] <= r - 1)
        mu = key[i: i + k + 1]
        rest = key[:i] + key[i + k + 1:]
        nu = [0] * (r - 1)
        for v in mu:
            nu[v % (r - 1)] += 1
        rel = relation_rootofunity(sum(mu), tuple(nu), k, r)
        if min(rel.terms) != mu:
            raise AssertionError(
                "window %r is not the minimal element of its relation" % (mu,))
        c_mu = rel.terms[mu]
        replacement = {}
        for mu2, c2 in rel.terms.items():
            if mu2 == mu:
                continue
            new_key = _merge(rest, mu2)
            if new_key <= key:
                raise AssertionError("rewriting did not increase %r" % (key,))
            w = replacement.get(new_key, Fraction(0)) - coeff * c2 / c_mu
            replacement[new_key] = w
        current = CurrentVector(
            n, {k2: c2 for k2, c2 in current.terms.items() if k2 != key}) \
            + CurrentVector(n, replacement)


class CharSeries:
    """Truncated power series in (v, z) with non-negative integer entries."""

    __slots__ = ("d_max", "n_max", "coeffs")

    def __init__(self, d_max, n_max, coeffs=None):
        self.d_max = d_max
        self.n_max = n_max
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    def __getitem__(self, key):
        d, n = key
        if d > self.d_max or n > self.n_max:
            raise KeyError("outside truncation")
        return self.coeffs.get((d, n), 0)

    def __eq__(self, other):
        return (isinstance(other, CharSeries) and self.d_max == other.d_max
                and self.n_max == other.n_max and self.coeffs == other.coeffs)

    def __repr__(self):
        return "CharSeries(d<=%d, n<=%d, %d nonzero)" % (
            self.d_max, self.n_max, len(self.coeffs))


def _check_profile(b, k, r):
    b = tuple(b)
    if len(b) != r - 1:
        raise ValueError("profile must have r-1 entries")
    prev = 0
    for x in b:
        if x < prev or x > k:
            raise ValueError("profile must be weakly increasing within 0..k")
        prev = x
    return b


def enumerate_C_sequences(b, k, r, n, d):
    """Degree sequences a with sum a_i = n, sum i a_i = d, sliding window
    sums a_i + ... + a_{i+r-1} <= k, and prefix sums bounded by b."""
    b = _check_profile(b, k, r)
    out = []
    a = []

    def window_ok(val, pos):
        lo = max(0, pos - (r - 1))
        for start in range(lo, pos + 1):
            s = val + sum(a[j] for j in range(start, min(pos, len(a))))
            if s > k:
                return False
        return True

    def rec(pos, left_n, left_d):
        if left_n == 0 and left_d == 0:
            out.append(tuple(a))
            return
        if left_n == 0 or pos > left_d:
            return
        # a_pos can be at most what the window and the weighted degree allow
        top = left_n if pos == 0 else min(left_n, left_d // pos)
        for val in range(top + 1):
            if pos <= r - 2:
                prefix = sum(a) + val
                if prefix > b[pos]:
                    break
            if val and not window_ok(val, pos):
                break
            a.append(val)
            rec(pos + 1, left_n - val, left_d - val * pos)
            a.pop()

    rec(0, n, d)
    return [_trim(seq) for seq in out]


def _trim(seq):
    seq = tuple(seq)
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def chi_C(b, k, r, d_max, n_max):
    """Character of the admissible-sequence set: coefficient of v^d z^n."""
    coeffs = {}
    for n in range(n_max + 1):
        for d in range(d_max + 1):
            cnt = len(enumerate_C_sequences(b, k, r, n, d))
            if cnt:
                coeffs[(d, n)] = cnt
    return CharSeries(d_max, n_max, coeffs)


def verify_recursion(b, k, r, d_max=8, n_max=8):
    """chi_C(b) = chi_C(b with b_0 - 1) + z^(b_0) chi_C(shifted b)(v, vz).

    The (v, vz) substitution sends coefficient (d, n) to (d + n, n); the
    shifted profile is (b_1 - b_0, ..., b_{r-2} - b_0, k - b_0).
    """
    b = _check_profile(b, k, r)
    if b[0] < 1:
        raise ValueError("recursion needs b_0 >= 1")
    lhs = chi_C(b, k, r, d_max, n_max)
    first = chi_C((b[0] - 1,) + b[1:], k, r, d_max, n_max)
    shifted = tuple(x - b[0] for x in b[1:]) + (k - b[0],)
    second = chi_C(shifted, k, r, d_max, n_max)
    for d in range(d_max + 1):
        for n in range(n_max + 1):
            total = first[(d, n)]
            n2 = n - b[0]
            d2 = d - n2
            if n2 >= 0 and 0 <= d2 <= d_max:
                total += second[(d2, n2)]
            if lhs[(d, n)] != total:
                return False
    return True


def _violating_monomials(b, k, r, n, d):
    """Exponent tuples (a_0..a_{r-2}) breaking a prefix bound, inside the
    (n, d) box.  These are the monomial generators of the W-space ideal."""
    b = _check_profile(b, k, r)
    out = []
    a = [0] * (r - 1)

    def rec(pos, cnt, wdeg, violated):
        if pos == r - 1:
            if violated:
                out.append(tuple(a))
            return
        for val in range(n - cnt + 1):
            if pos and wdeg + val * pos > d:
                break
            a[pos] = val
            rec(pos + 1, cnt + val, wdeg + val * pos,
                violated or (sum(a[: pos + 1]) > b[pos]))
        a[pos] = 0

    rec(0, 0, 0, False)
    return out


def W_space_dim(b, k, r, n, d, p=None):
    """dim of the (n, d) component of W_b = R / I_b over K.

    I_b is spanned in the component by the shifted-current relations and
    by the multiples of the prefix-violating monomials in e_0..e_{r-2};
    the latter are unit vectors, so their columns are deleted before the
    relation rows are ranked.
    """
    p = p or ParameterSpec(k, r)
    b = _check_profile(b, k, r)
    plist = pt.enumerate_partitions(n, d)
    index = {lam: i for i, lam in enumerate(plist)}
    killed = set()
    for mono in _violating_monomials(b, k, r, n, d):
        parts = []
        for i in range(r - 2, -1, -1):
            parts.extend([i] * mono[i])
        cnt = len(parts)
        wdeg = sum(parts)
        g = tuple(parts)
        for filler in pt.enumerate_partitions(n - cnt, d - wdeg):
            killed.add(pt.normalize(_merge(g, pt.pad(filler, n - cnt))))
    keep = [i for i, lam in enumerate(plist) if lam not in killed]
    if not keep:
        return 0
    keep_pos = {ci: j for j, ci in enumerate(keep)}
    rows = []
    for row in ideal_rows(k, r, n, d, p, field="generic"):
        proj = [row[ci] for ci in keep]
        if any(proj):
            rows.append(proj)
    if not rows:
        return len(keep)
    return _corank_unirat_rows(rows, len(keep), p.N)


def verify_prop302(b, k, r, d_max=8, n_max=4, p=None):
    """W_space_dim matches the chi_C coefficient on the whole truncation."""
    p = p or ParameterSpec(k, r)
    chi = chi_C(b, k, r, d_max, n_max)
    for n in range(n_max + 1):
        for d in range(d_max + 1):
            if W_space_dim(b, k, r, n, d, p) != chi[(d, n)]:
                return False
    return True
