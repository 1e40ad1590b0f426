"""Exact coefficient arithmetic.

Four layers, each one a field:

  * plain rationals (``fractions.Fraction``),
  * cyclotomic numbers ``CycloNum`` -- elements of Q(zeta_N) in the power
    basis modulo the N-th cyclotomic polynomial,
  * ``UniRatFunc`` -- rational functions in one variable u over Q(zeta_N),
  * ``BiRatFunc`` -- rational functions in (q, t) over Q.

On top of these sits ``ParameterSpec``, the resonant specialization
t = u^((r-1)/m), q = omega1 * u^(-(k+1)/m) with m = gcd(k+1, r-1), which
maps BiRatFunc values into UniRatFunc values and decides which exponent
pairs (a, b) satisfy q^a t^b = 1.

All values are immutable and all operations are pure functions, so
everything here is safe to share between threads.
"""

from fractions import Fraction
from math import gcd

__all__ = [
    "CycloNum", "UniPoly", "UniRatFunc", "LaurentPoly", "QTPoly", "BiRatFunc",
    "ParameterSpec", "MixedFieldError", "PoleError",
    "field_arithmetic", "cyclotomic_polynomial", "euler_phi",
    "qt_gcd", "qt_divexact", "render_scalar", "parse_scalar",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class MixedFieldError(TypeError):
    """Raised when two operands live in different concrete fields."""


class PoleError(ZeroDivisionError):
    """Raised when a denominator vanishes identically under specialization."""


def euler_phi(n):
    result = n
    p, m = 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


_CYCLO_CACHE = {}


def cyclotomic_polynomial(n):
    """Coefficients (ascending, ints) of the n-th cyclotomic polynomial.

    Computed by exact integer division of x^n - 1 by the lower-order
    cyclotomic factors.
    """
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    if n == 1:
        poly = (-1, 1)
    else:
        poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
        for d in range(1, n):
            if n % d == 0:
                poly = _int_poly_divexact(poly, cyclotomic_polynomial(d))
        poly = tuple(poly)
    _CYCLO_CACHE[n] = poly
    return poly


def _int_poly_divexact(num, den):
    # long division in Z[x]; the division is exact for cyclotomic factors
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q, r = divmod(c, den[dn])
            assert r == 0, "inexact cyclotomic division"
            quot[i - dn] = q
            for j in range(dn + 1):
                num[i - dn + j] -= q * den[j]
    assert all(c == 0 for c in num), "nonzero remainder in cyclotomic division"
    return quot


class _CycloField:
    """Per-order tables: phi(N) and the reduction rows for zeta^j, j >= phi."""

    def __init__(self, N):
        self.N = N
        poly = cyclotomic_polynomial(N)
        self.phi = len(poly) - 1
        phi = self.phi
        # zeta^phi = -(a_0 + a_1 zeta + ... + a_{phi-1} zeta^{phi-1})
        base = tuple(Fraction(-c) for c in poly[:phi])
        rows = [base]
        # zeta^(phi+j) for j = 1..phi-2 (enough to reduce any product)
        for _ in range(phi - 2):
            prev = rows[-1]
            shifted = (_ZERO,) + prev[: phi - 1]
            top = prev[phi - 1]
            if top:
                shifted = tuple(s + top * b for s, b in zip(shifted, base))
            rows.append(shifted)
        self.reduction = rows

    _cache = {}

    @classmethod
    def get(cls, N):
        fld = cls._cache.get(N)
        if fld is None:
            fld = cls._cache[N] = cls(N)
        return fld


class CycloNum:
    """An element of Q(zeta_N), stored in the power basis mod Phi_N."""

    __slots__ = ("N", "c")

    def __init__(self, N, coeffs):
        fld = _CycloField.get(N)
        coeffs = tuple(coeffs)
        if len(coeffs) != fld.phi:
            raise ValueError("need exactly phi(N)=%d coefficients" % fld.phi)
        self.N = N
        self.c = coeffs

    @classmethod
    def from_rational(cls, N, value):
        fld = _CycloField.get(N)
        c = [Fraction(value)] + [_ZERO] * (fld.phi - 1)
        return cls(N, c)

    @classmethod
    def zero(cls, N):
        return cls.from_rational(N, 0)

    @classmethod
    def one(cls, N):
        return cls.from_rational(N, 1)

    @classmethod
    def zeta(cls, N, power=1):
        """zeta_N^power as a field element."""
        fld = _CycloField.get(N)
        power %= N
        if power < fld.phi:
            c = [_ZERO] * fld.phi
            c[power] = _ONE
            return cls(N, c)
        if fld.phi == 1:
            # N = 1 (zeta = 1) or N = 2 (zeta = -1)
            return cls(N, (_ONE if N == 1 or power % 2 == 0 else -_ONE,))
        return cls.zeta(N, 1) ** power

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.N != self.N:
                raise MixedFieldError(
                    "cyclotomic orders differ: %d vs %d" % (self.N, other.N))
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(self.N, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.N, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.N, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycloNum(self.N, tuple(-a for a in self.c))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        phi = len(a)
        if phi == 1:
            return CycloNum(self.N, (a[0] * b[0],))
        prod = [_ZERO] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        rows = _CycloField.get(self.N).reduction
        out = prod[:phi]
        for j in range(phi, 2 * phi - 1):
            cj = prod[j]
            if cj:
                row = rows[j - phi]
                for i in range(phi):
                    if row[i]:
                        out[i] += cj * row[i]
        return CycloNum(self.N, out)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi = len(self.c)
        if phi == 1:
            return CycloNum(self.N, (1 / self.c[0],))
        # extended Euclid against Phi_N over Q
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.N)]
        r0, r1 = mod, list(self.c)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                c = [x * inv for x in s1] + [_ZERO] * phi
                return CycloNum(self.N, c[:phi])
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloNum.one(self.N)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self):
        return not any(self.c)

    def __bool__(self):
        return any(self.c)

    def is_rational(self):
        return not any(self.c[1:])

    def rational_value(self):
        assert self.is_rational()
        return self.c[0]

    def multiplicative_order(self, bound=None):
        """Smallest e >= 1 with self^e = 1, or None up to the bound."""
        bound = bound or 4 * self.N
        acc = self
        one = CycloNum.one(self.N)
        for e in range(1, bound + 1):
            if acc == one:
                return e
            acc = acc * self
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash((self.N, self.c))

    def __repr__(self):
        return "CycloNum(%d, %s)" % (self.N, render_scalar(self))


def _frac_poly_divmod(num, den):
    num = list(num)
    while num and not num[-1]:
        num.pop()
    dn = len(den) - 1
    while den[dn] == 0:
        dn -= 1
    inv = 1 / den[dn]
    quot = [_ZERO] * max(len(num) - dn, 0)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q = c * inv
            quot[i - dn] = q
            for j in range(dn + 1):
                num[i - dn + j] -= q * den[j]
    return quot, num[:dn]


def _frac_poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    for j, bj in enumerate(b):
        a[j] -= bj
    return a


class UniPoly:
    """Polynomial in u with CycloNum coefficients (ascending, normalized)."""

    __slots__ = ("N", "c")

    def __init__(self, N, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.N = N
        self.c = tuple(coeffs)

    @classmethod
    def const(cls, N, value):
        if isinstance(value, (int, Fraction)):
            value = CycloNum.from_rational(N, value)
        return cls(N, [value])

    @classmethod
    def zero(cls, N):
        return cls(N, [])

    @classmethod
    def one(cls, N):
        return cls.const(N, 1)

    @classmethod
    def u_power(cls, N, e):
        return cls(N, [CycloNum.zero(N)] * e + [CycloNum.one(N)])

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def degree(self):
        return len(self.c) - 1  # -1 for the zero polynomial

    def leading(self):
        return self.c[-1]

    def trailing_order(self):
        """Multiplicity of the root u = 0."""
        for i, ci in enumerate(self.c):
            if not ci.is_zero():
                return i
        return None

    def __add__(self, other):
        if self.N != other.N:
            raise MixedFieldError("mixed cyclotomic orders")
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = out[i] + bi
        return UniPoly(self.N, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UniPoly(self.N, [-a for a in self.c])

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.N)
        a, b = self.c, other.c
        zero = CycloNum.zero(self.N)
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero():
                for j, bj in enumerate(b):
                    if not bj.is_zero():
                        out[i + j] = out[i + j] + ai * bj
        return UniPoly(self.N, out)

    def scale(self, s):
        return UniPoly(self.N, [a * s for a in self.c])

    def shift(self, e):
        """Multiply by u^e."""
        if self.is_zero() or e == 0:
            return self
        zero = CycloNum.zero(self.N)
        return UniPoly(self.N, [zero] * e + list(self.c))

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        num = list(self.c)
        dn = other.degree()
        inv = other.leading().inverse()
        zero = CycloNum.zero(self.N)
        quot = [zero] * max(len(num) - dn, 0)
        for i in range(len(num) - 1, dn - 1, -1):
            c = num[i]
            if not c.is_zero():
                q = c * inv
                quot[i - dn] = q
                for j in range(dn + 1):
                    num[i - dn + j] = num[i - dn + j] - q * other.c[j]
        return UniPoly(self.N, quot), UniPoly(self.N, num[:dn])

    def divexact(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact univariate division")
        return q

    def monic(self):
        if self.is_zero():
            return self
        lc = self.leading()
        if lc == CycloNum.one(self.N):
            return self
        return self.scale(lc.inverse())

    def gcd(self, other):
        """Monic gcd (u-power fast path, then integer PRS or Euclid).

        Over Q (phi(N) = 1) the polynomials are cleared to integers and the
        primitive-remainder sequence keeps the coefficients small; over a
        genuine cyclotomic field remainders are re-normalized to monic at
        every step.
        """
        a, b = self, other
        if a.is_zero():
            return b.monic()
        if b.is_zero():
            return a.monic()
        # shared power of u can be split off cheaply
        ta, tb = a.trailing_order(), b.trailing_order()
        shared = min(ta, tb)
        if shared:
            a = UniPoly(a.N, a.c[shared:])
            b = UniPoly(b.N, b.c[shared:])
        if a.degree() == 0 or b.degree() == 0:
            g = UniPoly.one(self.N)
        elif _CycloField.get(self.N).phi == 1:
            g = _unipoly_gcd_rational(a, b)
        else:
            while not b.is_zero():
                b = b.monic()
                a, b = b, a.divmod(b)[1]
            g = a.monic()
        return g.shift(shared)

    def evaluate(self, x):
        """Horner evaluation at a CycloNum (or rational) point."""
        if isinstance(x, (int, Fraction)):
            x = CycloNum.from_rational(self.N, x)
        acc = CycloNum.zero(self.N)
        for c in reversed(self.c):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.N == other.N and self.c == other.c

    def __hash__(self):
        return hash((self.N, self.c))

    def __repr__(self):
        return "UniPoly(%d, %s)" % (self.N, render_scalar(self))


class LaurentPoly:
    """Sparse Laurent polynomial in u over Q(zeta_N): {exponent: coeff}.

    The operator kernels run over this ring when everything has been
    cleared of denominators: multiplication by q brings in negative
    u-exponents, and staying Laurent avoids all gcd work.  When the
    cyclotomic field is just Q (phi(N) = 1, i.e. N <= 2) coefficients are
    stored as plain Fractions, which is what makes this the fast lane.
    """

    __slots__ = ("N", "d")

    def __init__(self, N, d=None, _clean=False):
        if not _clean:
            d = {e: _cyclo_slim(N, c) for e, c in (d or {}).items() if c}
        self.N = N
        self.d = d or {}

    @classmethod
    def monomial(cls, N, e, coeff=None):
        if coeff is None:
            coeff = _ONE if _CycloField.get(N).phi == 1 else CycloNum.one(N)
        else:
            coeff = _cyclo_slim(N, coeff)
        if not coeff:
            return cls(N, {}, _clean=True)
        return cls(N, {e: coeff}, _clean=True)

    @classmethod
    def const(cls, N, value):
        if _CycloField.get(N).phi == 1:
            return cls.monomial(N, 0, Fraction(value))
        return cls.monomial(N, 0, CycloNum.from_rational(N, value))

    @classmethod
    def zero(cls, N):
        return cls(N, {}, _clean=True)

    @classmethod
    def one(cls, N):
        return cls.monomial(N, 0)

    @classmethod
    def from_unipoly(cls, poly, shift=0):
        return cls(poly.N, {e + shift: _cyclo_slim(poly.N, c)
                            for e, c in enumerate(poly.c) if c}, _clean=True)

    def to_unirat(self):
        terms = {e: c if isinstance(c, CycloNum)
                 else CycloNum.from_rational(self.N, c)
                 for e, c in self.d.items()}
        return UniRatFunc.from_laurent(self.N, terms)

    def is_zero(self):
        return not self.d

    def __bool__(self):
        return bool(self.d)

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.d:
            return other
        if not other.d:
            return self
        out = dict(self.d)
        for e, c in other.d.items():
            w = out.get(e)
            w = c if w is None else w + c
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        return LaurentPoly(self.N, out, _clean=True)

    def __neg__(self):
        return LaurentPoly(self.N, {e: -c for e, c in self.d.items()},
                           _clean=True)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly.zero(self.N)
            other = LaurentPoly.const(self.N, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.d, other.d
        if not a or not b:
            return LaurentPoly.zero(self.N)
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly(self.N, {ea + eb: ca * cb
                                        for ea, ca in a.items()}, _clean=True)
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly(self.N, {ea + eb: ca * cb
                                        for eb, cb in b.items()}, _clean=True)
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                w = out.get(e)
                w = ca * cb if w is None else w + ca * cb
                if w:
                    out[e] = w
                else:
                    out.pop(e, None)
        return LaurentPoly(self.N, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, e):
        if len(self.d) == 1:
            (ea, ca), = self.d.items()
            return LaurentPoly(self.N, {ea * e: ca ** e}, _clean=True)
        result = LaurentPoly.one(self.N)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly) and self.N == other.N
                and self.d == other.d)

    def __repr__(self):
        return "LaurentPoly(%d, %s)" % (self.N, render_scalar(self.to_unirat()))


def _cyclo_slim(N, c):
    """Coefficients over Q drop the CycloNum wrapper."""
    if isinstance(c, CycloNum):
        if _CycloField.get(N).phi == 1:
            return c.c[0]
        return c
    if _CycloField.get(N).phi == 1:
        return Fraction(c)
    return CycloNum.from_rational(N, c)


def _unipoly_gcd_rational(a, b):
    """gcd over Q via the integer primitive-remainder sequence."""
    N = a.N
    fracs_a = [c.c[0] for c in a.c]
    fracs_b = [c.c[0] for c in b.c]
    ia = _fracs_to_ints(fracs_a)
    ib = _fracs_to_ints(fracs_b)
    g = _iz_gcd(ia, ib)
    lead = Fraction(g[-1])
    return UniPoly(N, [CycloNum.from_rational(N, Fraction(c) / lead) for c in g])


def _fracs_to_ints(fracs):
    denlcm = 1
    for v in fracs:
        denlcm = denlcm * v.denominator // gcd(denlcm, v.denominator)
    return [v.numerator * (denlcm // v.denominator) for v in fracs]


class UniRatFunc:
    """num/den in Q(zeta_N)(u); canonical: coprime, monic denominator."""

    __slots__ = ("N", "num", "den")

    def __init__(self, num, den=None, _canonical=False):
        N = num.N
        if den is None:
            den = UniPoly.one(N)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _canonical:
            if num.is_zero():
                den = UniPoly.one(N)
            else:
                g = num.gcd(den)
                if g.degree() > 0 or g.trailing_order():
                    num = num.divexact(g)
                    den = den.divexact(g)
                lc = den.leading()
                if lc != CycloNum.one(N):
                    inv = lc.inverse()
                    num = num.scale(inv)
                    den = den.scale(inv)
        self.N = N
        self.num = num
        self.den = den

    @classmethod
    def const(cls, N, value):
        return cls(UniPoly.const(N, value), _canonical=True)

    @classmethod
    def zero(cls, N):
        return cls.const(N, 0)

    @classmethod
    def one(cls, N):
        return cls.const(N, 1)

    @classmethod
    def u(cls, N):
        return cls(UniPoly.u_power(N, 1), _canonical=True)

    @classmethod
    def from_laurent(cls, N, terms):
        """Build from a {u-exponent: CycloNum} map, exponents possibly < 0."""
        if not terms:
            return cls.zero(N)
        low = min(terms)
        shift = -low if low < 0 else 0
        zero = CycloNum.zero(N)
        coeffs = [zero] * (max(terms) + shift + 1)
        for e, c in terms.items():
            coeffs[e + shift] = coeffs[e + shift] + c
        return cls(UniPoly(N, coeffs), UniPoly.u_power(N, shift))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num.c)

    def is_one(self):
        return self.den.degree() == 0 and self.num == self.den

    def _coerce(self, other):
        if isinstance(other, UniRatFunc):
            if other.N != self.N:
                raise MixedFieldError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return UniRatFunc.const(self.N, other)
        if isinstance(other, CycloNum):
            if other.N != self.N:
                raise MixedFieldError("mixed cyclotomic orders")
            return UniRatFunc(UniPoly(self.N, (other,) if not other.is_zero() else ()),
                              _canonical=True)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        if self.den == o.den:
            return UniRatFunc(self.num + o.num, self.den)
        g = self.den.gcd(o.den)
        if g.degree() == 0 and not g.trailing_order():
            return UniRatFunc(self.num * o.den + o.num * self.den,
                              self.den * o.den)
        da = self.den.divexact(g)
        db = o.den.divexact(g)
        return UniRatFunc(self.num * db + o.num * da, da * o.den)

    __radd__ = __add__

    def __neg__(self):
        return UniRatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return UniRatFunc.zero(self.N)
        # cross-cancel before multiplying
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        n1 = self.num if g1.degree() == 0 and not g1.trailing_order() else self.num.divexact(g1)
        d2 = o.den if g1.degree() == 0 and not g1.trailing_order() else o.den.divexact(g1)
        n2 = o.num if g2.degree() == 0 and not g2.trailing_order() else o.num.divexact(g2)
        d1 = self.den if g2.degree() == 0 and not g2.trailing_order() else self.den.divexact(g2)
        return UniRatFunc(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return UniRatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = UniRatFunc.one(self.N)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, x):
        den = self.den.evaluate(x)
        if den.is_zero():
            raise ZeroDivisionError("pole at evaluation point")
        return self.num.evaluate(x) / den

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.N, self.num, self.den))

    def __repr__(self):
        return "UniRatFunc(%d, %s)" % (self.N, render_scalar(self))


# ---------------------------------------------------------------------------
# bivariate layer: sparse polynomials and rational functions in (q, t)
# ---------------------------------------------------------------------------

class QTPoly:
    """Sparse polynomial in (q, t) over Q: {(q_exp, t_exp): Fraction}."""

    __slots__ = ("d",)

    def __init__(self, d=None, _clean=False):
        if d is None:
            d = {}
        if not _clean:
            d = {k: Fraction(v) for k, v in d.items() if v}
        self.d = d

    @classmethod
    def term(cls, coeff, qe=0, te=0):
        coeff = Fraction(coeff)
        return cls({(qe, te): coeff} if coeff else {}, _clean=True)

    @classmethod
    def zero(cls):
        return cls({}, _clean=True)

    @classmethod
    def one(cls):
        return cls.term(1)

    @classmethod
    def q(cls):
        return cls.term(1, 1, 0)

    @classmethod
    def t(cls):
        return cls.term(1, 0, 1)

    def is_zero(self):
        return not self.d

    def __bool__(self):
        return bool(self.d)

    def is_one(self):
        return self.d == {(0, 0): _ONE}

    def is_constant(self):
        return not self.d or self.d.keys() == {(0, 0)}

    def constant_value(self):
        return self.d.get((0, 0), _ZERO)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QTPoly.term(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        if not self.d:
            return other
        if not other.d:
            return self
        out = dict(self.d)
        for k, v in other.d.items():
            w = out.get(k)
            if w is None:
                out[k] = v
            else:
                w = w + v
                if w:
                    out[k] = w
                else:
                    del out[k]
        return QTPoly(out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return QTPoly({k: -v for k, v in self.d.items()}, _clean=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QTPoly.term(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return QTPoly.zero()
            other = Fraction(other)
            return QTPoly({k: v * other for k, v in self.d.items()}, _clean=True)
        if not isinstance(other, QTPoly):
            return NotImplemented
        if not self.d or not other.d:
            return QTPoly.zero()
        a, b = self.d, other.d
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for (qa, ta), va in a.items():
            for (qb, tb), vb in b.items():
                k = (qa + qb, ta + tb)
                w = out.get(k)
                if w is None:
                    out[k] = va * vb
                else:
                    w = w + va * vb
                    if w:
                        out[k] = w
                    else:
                        del out[k]
        return QTPoly(out, _clean=True)

    __rmul__ = __mul__

    def mul_term(self, coeff, qe=0, te=0):
        if not coeff:
            return QTPoly.zero()
        coeff = Fraction(coeff)
        return QTPoly({(kq + qe, kt + te): v * coeff
                       for (kq, kt), v in self.d.items()}, _clean=True)

    def __pow__(self, e):
        result = QTPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def leading_key(self):
        """Largest monomial in graded lexicographic order with q > t."""
        return max(self.d, key=lambda k: (k[0] + k[1], k[0]))

    def substitute(self, q_val, t_val, one):
        """Evaluate at arbitrary ring elements (generic, not fast)."""
        acc = None
        for (a, b), v in self.d.items():
            term = one * v * q_val ** a * t_val ** b
            acc = term if acc is None else acc + term
        return acc if acc is not None else one * 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QTPoly.term(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self.d == other.d

    def __hash__(self):
        return hash(frozenset(self.d.items()))

    def __repr__(self):
        return "QTPoly(%s)" % render_scalar(self)


def _qt_split_content(f):
    """Monomial content (min q-exp, min t-exp) and the cleared int dict.

    Returns (qmin, tmin, scale, terms) with terms an integer-coefficient
    dict such that f = scale * q^qmin * t^tmin * terms.
    """
    qmin = min(k[0] for k in f.d)
    tmin = min(k[1] for k in f.d)
    denlcm = 1
    for v in f.d.values():
        denlcm = denlcm * v.denominator // gcd(denlcm, v.denominator)
    numgcd = 0
    terms = {}
    for (a, b), v in f.d.items():
        c = v.numerator * (denlcm // v.denominator)
        terms[(a - qmin, b - tmin)] = c
        numgcd = gcd(numgcd, c)
    if numgcd > 1:
        terms = {k: c // numgcd for k, c in terms.items()}
    return qmin, tmin, Fraction(numgcd, denlcm), terms


def _iz_content(c):
    g = 0
    for x in c:
        g = gcd(g, x)
        if g == 1:
            return 1
    return g


def _iz_gcd(a, b):
    """gcd in Z[t] of int coefficient lists (primitive part convention)."""
    a = [x for x in a]
    b = [x for x in b]
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    if not a:
        return _iz_primitive(b)
    if not b:
        return _iz_primitive(a)
    ca, cb = _iz_content(a), _iz_content(b)
    g0 = gcd(ca, cb)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    while b:
        a = _iz_prem(a, b)
        if a:
            c = _iz_content(a)
            if c > 1:
                a = [x // c for x in a]
        a, b = b, a
    return [x * g0 for x in _iz_primitive(a)]


def _iz_primitive(a):
    c = _iz_content(a)
    if c > 1:
        a = [x // c for x in a]
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _iz_prem(a, b):
    """Pseudo-remainder of a by b in Z[t]."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db:
        if a[-1] == 0:
            a.pop()
            continue
        la = a[-1]
        a = [x * lb for x in a]
        off = len(a) - 1 - db
        for j in range(db + 1):
            a[off + j] -= la * b[j]
        a.pop()
        while a and not a[-1]:
            a.pop()
    return a


def _iz_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _iz_divexact(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            q, r = divmod(a[i], lb)
            assert r == 0, "inexact Z[t] division"
            out[i - db] = q
            for j in range(db + 1):
                a[i - db + j] -= q * b[j]
    assert all(x == 0 for x in a), "inexact Z[t] division"
    return out


def _to_tq_rows(terms):
    """{(qexp, texp): int} -> {qexp: Z[t] coefficient list}."""
    rows = {}
    for (a, b), c in terms.items():
        row = rows.get(a)
        if row is None:
            row = rows[a] = []
        if len(row) <= b:
            row.extend([0] * (b + 1 - len(row)))
        row[b] += c
    for a in list(rows):
        row = rows[a]
        while row and not row[-1]:
            row.pop()
        if not row:
            del rows[a]
    return rows


def _rows_to_terms(rows):
    return {(a, b): c for a, row in rows.items() for b, c in enumerate(row) if c}


def _tq_content(rows):
    """gcd in Z[t] of all q-coefficients."""
    g = []
    for row in rows.values():
        g = _iz_gcd(g, row)
        if g == [1]:
            return g
    return g


def _tq_primitive_gcd(fr, gr):
    """gcd of primitive polynomials in (Z[t])[q] via primitive PRS."""
    if not fr:
        return {k: list(v) for k, v in gr.items()}
    if not gr:
        return {k: list(v) for k, v in fr.items()}
    a = _rows_dense(fr)
    b = _rows_dense(gr)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a = _tq_prem(a, b)
        a = _tq_strip_content(a)
        a, b = b, a
    a = _tq_strip_content(a)
    return {i: row for i, row in enumerate(a) if row}


def _rows_dense(rows):
    n = max(rows) + 1
    out = [[] for _ in range(n)]
    for a, row in rows.items():
        out[a] = list(row)
    return out


def _tq_prem(a, b):
    """Pseudo-remainder in (Z[t])[q]; a, b dense lists of Z[t] polys."""
    a = [list(r) for r in a]
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db:
        if not a[-1]:
            a.pop()
            continue
        la = a[-1]
        a = [_iz_mul(r, lb) for r in a]
        off = len(a) - 1 - db
        for j in range(db + 1):
            prod = _iz_mul(la, b[j])
            row = a[off + j]
            if len(row) < len(prod):
                row.extend([0] * (len(prod) - len(row)))
            for i, p in enumerate(prod):
                row[i] -= p
            while row and not row[-1]:
                row.pop()
            a[off + j] = row
        a.pop()
        while a and not a[-1]:
            a.pop()
    return a


def _tq_strip_content(a):
    g = []
    for row in a:
        g = _iz_gcd(g, row)
        if g == [1]:
            return a
    if not g or g == [1]:
        return a
    return [_iz_divexact(row, g) if row else row for row in a]


_GCD_EVAL_POINTS = (2, 3, 5, -2, 7)


def qt_gcd(f, g):
    """gcd of two QTPolys, normalized with positive graded-lex leading coeff.

    Monomial content is split off first; on the primitive parts a cheap
    evaluation certificate (t -> t0 keeps the q-degree of any common factor,
    so a trivial specialized gcd proves triviality) avoids the PRS in the
    common coprime case.  The PRS itself runs in whichever variable has the
    smaller degree.
    """
    if f.is_zero():
        return _qt_positive(g)
    if g.is_zero():
        return _qt_positive(f)
    qf, tf, _, fterms = _qt_split_content(f)
    qg, tg, _, gterms = _qt_split_content(g)
    qm, tm = min(qf, qg), min(tf, tg)
    if len(fterms) == 1 or len(gterms) == 1:
        return QTPoly.term(1, qm, tm)
    qdeg = max(max(k[0] for k in fterms), max(k[0] for k in gterms))
    tdeg = max(max(k[1] for k in fterms), max(k[1] for k in gterms))
    if tdeg < qdeg:
        fterms = {(b, a): c for (a, b), c in fterms.items()}
        gterms = {(b, a): c for (a, b), c in gterms.items()}
        out = _qt_gcd_primitive(fterms, gterms)
        result = QTPoly({(b + qm, a + tm): Fraction(c) for (a, b), c in out.items()})
    else:
        out = _qt_gcd_primitive(fterms, gterms)
        result = QTPoly({(a + qm, b + tm): Fraction(c) for (a, b), c in out.items()})
    if result.is_zero():
        result = QTPoly.term(1, qm, tm)
    return _qt_positive(result)


def _qt_gcd_primitive(fterms, gterms):
    """gcd of integer term dicts, main variable first in the key."""
    fr = _to_tq_rows(fterms)
    gr = _to_tq_rows(gterms)
    cont = _iz_gcd(_tq_content(fr), _tq_content(gr))
    fq = max(fr)
    gq = max(gr)
    trivial_q = False
    if fq == 0 or gq == 0:
        trivial_q = True
    else:
        for t0 in _GCD_EVAL_POINTS:
            lf = _iz_eval(fr[fq], t0)
            lg = _iz_eval(gr[gq], t0)
            if lf and lg:
                a = [_iz_eval(fr.get(i, []), t0) for i in range(fq + 1)]
                b = [_iz_eval(gr.get(i, []), t0) for i in range(gq + 1)]
                if _int_poly_gcd_is_const(a, b):
                    trivial_q = True
                break
    if trivial_q:
        rows = {0: cont} if cont and cont != [1] else {}
    else:
        pf = {a: _iz_divexact(row, cont) if cont != [1] else row for a, row in fr.items()}
        pg = {a: _iz_divexact(row, cont) if cont != [1] else row for a, row in gr.items()}
        rows = _tq_primitive_gcd(pf, pg)
        if cont != [1]:
            rows = {a: _iz_mul(row, cont) for a, row in rows.items()}
    return {(a, b): c for a, row in rows.items() for b, c in enumerate(row) if c}


def _iz_eval(row, x):
    acc = 0
    for c in reversed(row):
        acc = acc * x + c
    return acc


def _int_poly_gcd_is_const(a, b):
    """True iff gcd of integer-coefficient univariate polys has degree 0."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while b and not b[-1]:
        b.pop()
    while a and not a[-1]:
        a.pop()
    while b:
        _, a = _frac_poly_divmod(a, b)
        while a and not a[-1]:
            a.pop()
        a, b = b, a
    return len(a) == 1


def _qt_positive(f):
    if f.is_zero():
        return f
    if f.d[f.leading_key()] < 0:
        return -f
    return f


def qt_divexact(f, g):
    """Exact division in Q[q, t] (graded-lex long division, remainder 0)."""
    if g.is_one():
        return f
    if f.is_zero():
        return f
    out = {}
    rem = dict(f.d)
    glk = g.leading_key()
    glc = g.d[glk]
    gq, gt = glk
    while rem:
        k = max(rem, key=lambda k: (k[0] + k[1], k[0]))
        v = rem[k]
        a, b = k[0] - gq, k[1] - gt
        if a < 0 or b < 0:
            raise ValueError("inexact bivariate division")
        c = v / glc
        out[(a, b)] = c
        for (q2, t2), v2 in g.d.items():
            kk = (a + q2, b + t2)
            w = rem.get(kk, _ZERO) - c * v2
            if w:
                rem[kk] = w
            else:
                rem.pop(kk, None)
    return QTPoly(out, _clean=True)


class BiRatFunc:
    """num/den in Q(q, t); canonical: coprime, graded-lex-positive denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        if den is None:
            den = QTPoly.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _canonical:
            if num.is_zero():
                den = QTPoly.one()
            elif not den.is_one():
                g = qt_gcd(num, den)
                if not g.is_one():
                    num = qt_divexact(num, g)
                    den = qt_divexact(den, g)
                lk = den.leading_key()
                lc = den.d[lk]
                if den.is_constant():
                    num = num * (1 / lc)
                    den = QTPoly.one()
                elif lc != 1:
                    inv = 1 / lc
                    num = num * inv
                    den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p):
        return cls(p, _canonical=True)

    @classmethod
    def const(cls, value):
        return cls(QTPoly.term(value), _canonical=True)

    @classmethod
    def zero(cls):
        return cls.const(0)

    @classmethod
    def one(cls):
        return cls.const(1)

    @classmethod
    def q(cls):
        return cls(QTPoly.q(), _canonical=True)

    @classmethod
    def t(cls):
        return cls(QTPoly.t(), _canonical=True)

    @classmethod
    def qt_monomial(cls, a, b):
        """q^a t^b for arbitrary integer exponents."""
        num = QTPoly.term(1, max(a, 0), max(b, 0))
        den = QTPoly.term(1, max(-a, 0), max(-b, 0))
        return cls(num, den, _canonical=True)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num.d)

    def is_polynomial(self):
        return self.den.is_one()

    def _coerce(self, other):
        if isinstance(other, BiRatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return BiRatFunc.const(other)
        if isinstance(other, QTPoly):
            return BiRatFunc.from_poly(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        if self.den.is_one() and o.den.is_one():
            return BiRatFunc(self.num + o.num, _canonical=True)
        if self.den == o.den:
            return BiRatFunc(self.num + o.num, self.den)
        g = qt_gcd(self.den, o.den)
        if g.is_one():
            return BiRatFunc(self.num * o.den + o.num * self.den,
                             self.den * o.den)
        da = qt_divexact(self.den, g)
        db = qt_divexact(o.den, g)
        return BiRatFunc(self.num * db + o.num * da, da * o.den)

    __radd__ = __add__

    def __neg__(self):
        return BiRatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return BiRatFunc.zero()
        if self.den.is_one() and o.den.is_one():
            return BiRatFunc(self.num * o.num, _canonical=True)
        g1 = qt_gcd(self.num, o.den)
        g2 = qt_gcd(o.num, self.den)
        n1 = self.num if g1.is_one() else qt_divexact(self.num, g1)
        d2 = o.den if g1.is_one() else qt_divexact(o.den, g1)
        n2 = o.num if g2.is_one() else qt_divexact(o.num, g2)
        d1 = self.den if g2.is_one() else qt_divexact(self.den, g2)
        return BiRatFunc(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return BiRatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = BiRatFunc.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "BiRatFunc(%s)" % render_scalar(self)


class ParameterSpec:
    """The resonant specialization t^(k+1) q^(r-1) = 1.

    Fixes omega1 = zeta_{r-1}, so a single cyclotomic field Q(zeta_{r-1})
    carries every scalar; then t = u^((r-1)/m), q = omega1 u^(-(k+1)/m)
    with m = gcd(k+1, r-1), and q^a t^b = 1 exactly when (a, b) is an
    integer multiple of ((r-1), (k+1)).
    """

    __slots__ = ("k", "r", "m", "N", "omega1", "t_exp", "q_exp")

    def __init__(self, k, r):
        if k < 1:
            raise ValueError("k must be >= 1")
        if r < 2:
            raise ValueError("r must be >= 2")
        self.k = k
        self.r = r
        self.m = gcd(k + 1, r - 1)
        self.N = r - 1
        self.omega1 = CycloNum.zeta(self.N)
        self.t_exp = (r - 1) // self.m
        self.q_exp = (k + 1) // self.m

    @property
    def omega(self):
        return self.omega1 ** ((self.r - 1) // self.m)

    @property
    def tau(self):
        """Primitive (r-1)-th root of unity for the t=1, q=tau specialization."""
        return self.omega1

    def t_value(self):
        return UniRatFunc(UniPoly.u_power(self.N, self.t_exp), _canonical=True)

    def q_value(self):
        return UniRatFunc(UniPoly.const(self.N, 1).scale(self.omega1),
                          UniPoly.u_power(self.N, self.q_exp))

    def qt_laurent(self, a, b):
        """q^a t^b as (u-exponent, cyclotomic coefficient)."""
        return b * self.t_exp - a * self.q_exp, self.omega1 ** a

    def specialize_poly(self, f):
        """Image of a QTPoly as a {u-exponent: CycloNum} Laurent map."""
        terms = {}
        for (a, b), v in f.d.items():
            e, c = self.qt_laurent(a, b)
            c = c * v
            w = terms.get(e)
            w = c if w is None else w + c
            if w.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = w
        return terms

    def specialize(self, x):
        """Map a BiRatFunc into Q(zeta_{r-1})(u); PoleError if den -> 0."""
        if isinstance(x, (int, Fraction)):
            return UniRatFunc.const(self.N, x)
        if isinstance(x, QTPoly):
            x = BiRatFunc.from_poly(x)
        den = self.specialize_poly(x.den)
        if not den:
            raise PoleError("pole at specialization (k=%d, r=%d)" % (self.k, self.r))
        num = self.specialize_poly(x.num)
        return (UniRatFunc.from_laurent(self.N, num)
                / UniRatFunc.from_laurent(self.N, den))

    def is_resonant(self, a, b):
        """True iff q^a t^b = 1 under the specialization."""
        if a % (self.r - 1):
            return False
        s = a // (self.r - 1)
        return b == (self.k + 1) * s

    def __repr__(self):
        return "ParameterSpec(k=%d, r=%d)" % (self.k, self.r)


def specialize_scalar(x, p):
    return p.specialize(x)


def is_resonant(a, b, p):
    return p.is_resonant(a, b)


_OPS = {"add": lambda a, b: a + b, "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b, "div": lambda a, b: a / b}


def field_arithmetic(a, b, op):
    """Dispatch helper for the four field operations on same-field operands."""
    if type(a) is not type(b) and not (
            isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction))):
        raise MixedFieldError("operands live in different fields: %r, %r"
                              % (type(a).__name__, type(b).__name__))
    if op == "div":
        zero = getattr(b, "is_zero", None)
        if (zero() if zero else b == 0):
            raise ZeroDivisionError("division by zero")
    try:
        f = _OPS[op]
    except KeyError:
        raise ValueError("unknown operation %r" % (op,))
    return f(a, b)


# ---------------------------------------------------------------------------
# canonical string rendering and parsing
# ---------------------------------------------------------------------------

def _render_frac(v):
    return str(v)


def _render_terms(terms, varnames):
    """terms: list of (key-tuple, Fraction-or-CycloNum) sorted already."""
    parts = []
    for mono, coeff in terms:
        factors = []
        for name, e in zip(varnames, mono):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append("%s^%d" % (name, e))
        if isinstance(coeff, CycloNum):
            if coeff.is_rational():
                cs = _render_frac(coeff.rational_value())
            else:
                cs = "(" + render_scalar(coeff) + ")"
        else:
            cs = _render_frac(coeff)
        if factors:
            body = "*".join(factors)
            if cs == "1":
                s = body
            elif cs == "-1":
                s = "-" + body
            else:
                s = cs + "*" + body
        else:
            s = cs
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        if s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out


def _render_qtpoly(f):
    if f.is_zero():
        return "0"
    keys = sorted(f.d, key=lambda k: (k[0] + k[1], k[0]), reverse=True)
    return _render_terms([(k, f.d[k]) for k in keys], ("q", "t"))


def _render_cyclo(x):
    if not any(x.c):
        return "0"
    terms = [((e,), c) for e, c in enumerate(x.c) if c]
    terms.sort(key=lambda kv: kv[0], reverse=True)
    return _render_terms(terms, ("z",))


def _render_unipoly(f):
    if f.is_zero():
        return "0"
    terms = [((e,), c) for e, c in enumerate(f.c) if not c.is_zero()]
    terms.sort(key=lambda kv: kv[0], reverse=True)
    return _render_terms(terms, ("u",))


def render_scalar(x):
    """Canonical text form shared by every module's JSON output."""
    if isinstance(x, (int, Fraction)):
        return _render_frac(Fraction(x))
    if isinstance(x, CycloNum):
        return _render_cyclo(x)
    if isinstance(x, QTPoly):
        return _render_qtpoly(x)
    if isinstance(x, UniPoly):
        return _render_unipoly(x)
    if isinstance(x, UniRatFunc):
        if x.den.degree() == 0:
            return _render_unipoly(x.num)
        return "(%s)/(%s)" % (_render_unipoly(x.num), _render_unipoly(x.den))
    if isinstance(x, BiRatFunc):
        if x.den.is_one():
            return _render_qtpoly(x.num)
        return "(%s)/(%s)" % (_render_qtpoly(x.num), _render_qtpoly(x.den))
    raise TypeError("cannot render %r" % (type(x).__name__,))


class _ScalarParser:
    """Recursive-descent parser for the canonical scalar grammar."""

    def __init__(self, text, env, one):
        self.tokens = self._tokenize(text)
        self.pos = 0
        self.env = env
        self.one = one

    @staticmethod
    def _tokenize(text):
        tokens = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                tokens.append(("int", int(text[i:j])))
                i = j
            elif ch.isalpha():
                j = i
                while j < len(text) and text[j].isalnum():
                    j += 1
                tokens.append(("var", text[i:j]))
                i = j
            elif text.startswith("**", i):
                tokens.append(("op", "^"))
                i += 2
            elif ch in "+-*/^()":
                tokens.append(("op", ch))
                i += 1
            else:
                raise ValueError("bad character %r in scalar string" % ch)
        tokens.append(("end", None))
        return tokens

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.peek()[0] != "end":
            raise ValueError("trailing input in scalar string")
        return value

    def expr(self):
        value = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            op = self.next()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() == ("op", "*") or self.peek() == ("op", "/"):
            op = self.next()[1]
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self):
        if self.peek() == ("op", "-"):
            self.next()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.next()
            kind, v = self.next()
            if kind != "int":
                raise ValueError("exponent must be a literal integer")
            return base ** v
        return base

    def atom(self):
        kind, v = self.next()
        if kind == "int":
            return self.one * v
        if kind == "var":
            try:
                return self.env[v]
            except KeyError:
                raise ValueError("unknown variable %r" % v)
        if (kind, v) == ("op", "("):
            value = self.expr()
            if self.next() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return value
        raise ValueError("unexpected token %r" % ((kind, v),))


def parse_scalar(text, kind="qt", N=1):
    """Parse the rendering grammar back into a scalar.

    kind: "rational", "cyclo" (needs N), "u" (UniRatFunc over Q(zeta_N)),
    or "qt" (BiRatFunc).
    """
    if kind == "rational":
        one = Fraction(1)
        env = {}
    elif kind == "cyclo":
        one = CycloNum.one(N)
        env = {"z": CycloNum.zeta(N)}
    elif kind == "u":
        one = UniRatFunc.one(N)
        env = {"u": UniRatFunc.u(N)}
        if euler_phi(N) > 1:
            zeta = UniRatFunc(UniPoly.const(N, 1).scale(CycloNum.zeta(N)),
                              _canonical=True)
            env["z"] = zeta
        elif N == 2:
            env["z"] = -one
        else:
            env["z"] = one
    elif kind == "qt":
        one = BiRatFunc.one()
        env = {"q": BiRatFunc.q(), "t": BiRatFunc.t()}
    else:
        raise ValueError("unknown scalar kind %r" % kind)
    return _ScalarParser(text, env, one).parse()
