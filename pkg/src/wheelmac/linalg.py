"""Exact rank and kernel computation for the constraint matrices.

Three elimination paths:

  * ``rank_bareiss`` -- fraction-free one-step elimination for entries in
    an integral domain (UniPoly rows after clearing denominators, or plain
    Fractions/ints); every division is exact by construction.
  * ``kernel_basis`` / ``EchelonBasis`` -- ordinary Gaussian elimination
    over a field, used where the entries are field elements anyway
    (rational matrices, probe mode over a cyclotomic field).
  * ``rank_kernel_poly`` -- the workhorse for tall matrices over
    Q(zeta_N)[u]: a numeric evaluation of u picks out candidate
    independent rows (independence at a point implies exact independence),
    the candidates are triangularized exactly with row-content stripping,
    the kernel is read off by back-substitution, and every remaining row
    is certified against the kernel by polynomial dot products.  Any row
    failing the certificate joins the candidates and the loop repeats, so
    the output is exact regardless of the evaluation point.

Rows are plain lists; callers choose the entry type.
"""

from fractions import Fraction

from .scalars import UniPoly, UniRatFunc

__all__ = ["rank_bareiss", "rank_of_rows", "kernel_basis", "in_row_span",
           "EchelonBasis", "rank_kernel_poly"]


def _is_zero(x):
    return not x


def rank_bareiss(rows):
    """Rank by Bareiss fraction-free elimination; rows are consumed.

    Entries must support *, -, exact / or divexact (UniPoly) and be from
    an integral domain.
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = None
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if not _is_zero(rows[i][col]):
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            row = rows[i]
            ric = row[col]
            if _is_zero(ric):
                if prev is not None:
                    for j in range(col + 1, ncols):
                        row[j] = _divide(pivot * row[j], prev)
            else:
                for j in range(col + 1, ncols):
                    val = pivot * row[j] - ric * rows[rank][j]
                    row[j] = _divide(val, prev) if prev is not None else val
            row[col] = _zero_like(pivot)
        rank += 1
        prev = pivot
        if rank == len(rows):
            break
    return rank


def _divide(a, b):
    if hasattr(a, "divexact"):
        return a.divexact(b)
    return a / b


def _zero_like(x):
    if isinstance(x, (int, Fraction)):
        return 0
    return x - x


class EchelonBasis:
    """Incremental row echelon form over a field.

    Feeding rows one by one keeps at most rank-many reduced rows around,
    which is what makes the tall constraint matrices cheap.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}  # column -> reduced row with 1 in that column

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        row = list(row)
        for col, prow in self.pivots.items():
            c = row[col]
            if not _is_zero(c):
                for j in range(self.ncols):
                    pj = prow[j]
                    if not _is_zero(pj):
                        row[j] = row[j] - c * pj
        return row

    def add(self, row):
        """Reduce a row against the basis; returns True if rank grew."""
        row = self.reduce(row)
        for col in range(self.ncols):
            if not _is_zero(row[col]):
                inv = row[col]
                row = [x / inv for x in row]
                for prow in self.pivots.values():
                    c = prow[col]
                    if not _is_zero(c):
                        for j in range(self.ncols):
                            if not _is_zero(row[j]):
                                prow[j] = prow[j] - c * row[j]
                self.pivots[col] = row
                return True
        return False


def rank_of_rows(rows, ncols, field=True):
    """Rank of an iterable of rows; field=False switches to Bareiss."""
    if not field:
        return rank_bareiss(list(rows))
    ech = EchelonBasis(ncols)
    for row in rows:
        ech.add(row)
    return ech.rank


def in_row_span(rows, ncols, vector):
    """True iff vector is a linear combination of the given rows."""
    ech = EchelonBasis(ncols)
    for row in rows:
        ech.add(row)
    return all(_is_zero(x) for x in ech.reduce(vector))


def kernel_basis(rows, ncols, one):
    """Basis of the right kernel of the row matrix, over a field.

    Returns a list of length-ncols vectors; ``one`` is the field unit used
    to seed free variables.
    """
    ech = EchelonBasis(ncols)
    for row in rows:
        ech.add(row)
    zero = one - one
    pivots = ech.pivots
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for pc, prow in pivots.items():
            coeff = prow[fc]
            if not _is_zero(coeff):
                vec[pc] = zero - coeff
        basis.append(vec)
    return basis


# -- exact rank/kernel over Q(zeta_N)[u] with numeric row selection --------

_PROBE_POINTS = (Fraction(5, 2), Fraction(7, 3), Fraction(9, 4), Fraction(3),
                 Fraction(11, 5))


def _strip_row_gcd(row):
    g = None
    for x in row:
        if x:
            g = x if g is None else g.gcd(x)
            if g.degree() == 0 and not g.trailing_order():
                return row
    if g is None or (g.degree() == 0 and not g.trailing_order()):
        return row
    return [x.divexact(g) if x else x for x in row]


def _triangularize_poly(rows, ncols):
    """Row echelon by cross-multiplication with content stripping.

    Returns [(pivot column, row)] in increasing pivot order.  Rank is
    preserved because rows are only rescaled and combined.
    """
    rows = [list(r) for r in rows if any(r)]
    tri = []
    for col in range(ncols):
        cands = [i for i, r in enumerate(rows) if r[col]]
        if not cands:
            continue
        piv = min(cands, key=lambda i: (rows[i][col].degree(),
                                        sum(1 for e in rows[i] if e)))
        prow = rows.pop(piv)
        pv = prow[col]
        nxt = []
        for row in rows:
            c = row[col]
            if c:
                row = [pv * row[j] - c * prow[j] for j in range(ncols)]
                row = _strip_row_gcd(row)
            if any(row):
                nxt.append(row)
        rows = nxt
        tri.append((col, prow))
        if not rows:
            break
    return tri


def _poly_kernel_from_triangular(tri, ncols, N):
    """Back-substitute the kernel, cleared to UniPoly coordinates."""
    one = UniRatFunc.one(N)
    zero = one - one
    pivcols = [c for c, _ in tri]
    pivset = set(pivcols)
    free_cols = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for col, row in reversed(tri):
            acc = zero
            for j in range(col + 1, ncols):
                vj = vec[j]
                if row[j] and not vj.is_zero():
                    acc = acc + UniRatFunc(row[j], _canonical=True) * vj
            if not acc.is_zero():
                vec[col] = -acc / UniRatFunc(row[col], _canonical=True)
        # clear denominators so the certificate below is pure polynomial work
        den = UniPoly.one(N)
        for x in vec:
            if not x.is_zero():
                g = den.gcd(x.den)
                den = den * x.den.divexact(g)
        cleared = []
        for x in vec:
            if x.is_zero():
                cleared.append(UniPoly.zero(N))
            else:
                cleared.append(x.num * den.divexact(x.den))
        basis.append(_strip_row_gcd(cleared))
    return basis


def rank_kernel_poly(rows, ncols, N, need_kernel=True):
    """Exact (rank, kernel basis) of a matrix over Q(zeta_N)[u].

    rows: iterable of UniPoly rows.  The kernel vectors come back as
    UniPoly rows (a scalar multiple of the reduced ones, which is all the
    callers need).
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        kernel = []
        if need_kernel:
            one = UniPoly.one(N)
            zero = UniPoly.zero(N)
            for fc in range(ncols):
                vec = [zero] * ncols
                vec[fc] = one
                kernel.append(vec)
        return 0, kernel
    for attempt, u0 in enumerate(_PROBE_POINTS):
        try:
            numeric = [[e.evaluate(u0) for e in row] for row in rows]
            break
        except ZeroDivisionError:  # pragma: no cover - entries are polynomials
            continue
    ech = EchelonBasis(ncols)
    chosen = [i for i, nrow in enumerate(numeric) if ech.add(nrow)]
    chosen_set = set(chosen)
    while True:
        tri = _triangularize_poly([rows[i] for i in chosen], ncols)
        rank = len(tri)
        kernel = _poly_kernel_from_triangular(tri, ncols, N)
        offender = None
        for i, row in enumerate(rows):
            if i in chosen_set:
                continue
            for vec in kernel:
                acc = None
                for a, b in zip(row, vec):
                    if a and b:
                        acc = a * b if acc is None else acc + a * b
                if acc is not None and not acc.is_zero():
                    offender = i
                    break
            if offender is not None:
                break
        if offender is None:
            return rank, kernel if need_kernel else []
        chosen.append(offender)
        chosen_set.add(offender)
