"""Exact linear algebra over Q and Q(t): rank, kernel and image bases.

Two independent elimination routes are provided: fraction-free Bareiss
elimination (on denominator-cleared entries) and plain Gauss-Jordan over the
field.  Pivoting is deterministic (first nonzero entry in row-major order) so
kernel bases are reproducible.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ONE, PONE, PZERO, Scalar, ZERO, pdivmod, pmul, ptrim

FIELD_Q = "QQ"
FIELD_QT = "QQ(t)"


class MixedScalarKindError(ValueError):
    pass


class ExactMatrix:
    """Dense matrix of Scalars with a declared scalar field (QQ or QQ(t))."""

    def __init__(self, rows, cols, entries=None, field=FIELD_Q):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        self.field = field
        self.data = [[ZERO] * cols for _ in range(rows)]
        if entries:
            for (i, j), v in entries.items():
                self[i, j] = v

    @classmethod
    def from_rows(cls, rowdata, field=None):
        rows = len(rowdata)
        cols = len(rowdata[0]) if rowdata else 0
        if field is None:
            field = FIELD_QT if any(_as_scalar(v).depends_on_param()
                                    for row in rowdata for v in row) else FIELD_Q
        m = cls(rows, cols, field=field)
        for i, row in enumerate(rowdata):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                m[i, j] = v
        return m

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def __setitem__(self, ij, v):
        v = _as_scalar(v)
        if self.field == FIELD_Q and v.depends_on_param():
            raise MixedScalarKindError(
                "parameter-dependent entry %s in a rational matrix" % v)
        self.data[ij[0]][ij[1]] = v

    def transpose(self):
        m = ExactMatrix(self.cols, self.rows, field=self.field)
        for i in range(self.rows):
            for j in range(self.cols):
                m.data[j][i] = self.data[i][j]
        return m

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        field = FIELD_QT if FIELD_QT in (self.field, other.field) else FIELD_Q
        out = ExactMatrix(self.rows, other.cols, field=field)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self.data[i][k]
                if a.is_zero():
                    continue
                for j in range(other.cols):
                    b = other.data[k][j]
                    if not b.is_zero():
                        out.data[i][j] = out.data[i][j] + a * b
        return out

    def is_zero(self):
        return all(e.is_zero() for row in self.data for e in row)

    def copy_rows(self):
        return [row[:] for row in self.data]

    def __str__(self):
        return "\n".join("[" + " ".join(str(e) for e in row) + "]"
                         for row in self.data)


def _as_scalar(v):
    if isinstance(v, Scalar):
        return v
    return Scalar.from_fraction(v)


def _rref(rowdata, ncols):
    """Reduced row echelon form in place; returns pivot column list."""
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rowdata)):
            if not rowdata[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        rowdata[r], rowdata[pr] = rowdata[pr], rowdata[r]
        inv = ONE / rowdata[r][c]
        rowdata[r] = [x * inv for x in rowdata[r]]
        for i in range(len(rowdata)):
            if i == r:
                continue
            f = rowdata[i][c]
            if f.is_zero():
                continue
            ri, rr = rowdata[i], rowdata[r]
            rowdata[i] = [ri[j] - f * rr[j] for j in range(ncols)]
        pivots.append(c)
        r += 1
    return pivots


def rank_kernel(m):
    """Rank and a reduced-echelon kernel basis (list of column vectors)."""
    rowdata = m.copy_rows()
    pivots = _rref(rowdata, m.cols)
    rank = len(pivots)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    kernel = []
    for fc in free:
        v = [ZERO] * m.cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            coef = rowdata[r][fc]
            if not coef.is_zero():
                v[pc] = -coef
        kernel.append(v)
    return rank, kernel


def rank(m):
    rowdata = m.copy_rows()
    return len(_rref(rowdata, m.cols))


def image_basis(m):
    """Echelonized basis of the column space (size = rank)."""
    rowdata = m.transpose().copy_rows()
    _rref(rowdata, m.rows)
    return [row for row in rowdata if any(not e.is_zero() for e in row)]


def echelon_span(vectors, length):
    """Echelonize a list of coordinate vectors; returns independent rows."""
    rowdata = [list(v) for v in vectors]
    _rref(rowdata, length)
    return [row for row in rowdata if any(not e.is_zero() for e in row)]


def _clear_row(row):
    """Scale a row of Scalars to polynomial (denominator-free) tuples."""
    den = PONE
    for s in row:
        den = pmul(den, s.den)
    out = []
    for s in row:
        q, r = pdivmod(den, s.den)
        assert not r
        out.append(pmul(s.num, q))
    return out


def bareiss_rank(m):
    """Fraction-free rank: Bareiss elimination on denominator-cleared rows."""
    a = [_clear_row(row) for row in m.data]
    nrows, ncols = m.rows, m.cols
    prev = PONE
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if a[i][c]:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                num = ptrim([x - y for x, y in
                             zip_pad(pmul(piv, a[i][j]), pmul(a[i][c], a[r][j]))])
                q, rem = pdivmod(num, prev)
                assert not rem, "Bareiss division must be exact"
                a[i][j] = q
            a[i][c] = PZERO
        prev = piv
        r += 1
    return r


def zip_pad(a, b):
    n = max(len(a), len(b))
    pad = (Fraction(0),)
    a = a + pad * (n - len(a))
    b = b + pad * (n - len(b))
    return zip(a, b)
