"""Dense exact matrices with Gaussian elimination.

Works over the fields of `fields` and over the dual/bi-dual local rings; pivot
selection asks the ring for a *unit*, which over a field means any nonzero
entry and over a local ring means an invertible constant part.  Reduced row
echelon form (and everything built on it) is only offered over fields, where
it is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Matrix:
    ring: object
    nrows: int
    ncols: int
    entries: tuple  # row-major tuple of row tuples

    def __post_init__(self):
        assert len(self.entries) == self.nrows
        assert all(len(r) == self.ncols for r in self.entries)

    # -- construction ------------------------------------------------------

    @staticmethod
    def build(ring, rows):
        rows = [tuple(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return Matrix(ring, len(rows), ncols, tuple(rows))

    @staticmethod
    def from_rows(ring, rows, ncols):
        """Like build(), but keeps ncols explicit so zero-row matrices work."""
        rows = tuple(tuple(r) for r in rows)
        for r in rows:
            assert len(r) == ncols
        return Matrix(ring, len(rows), ncols, rows)

    @staticmethod
    def identity(ring, n):
        z, o = ring.zero, ring.one
        return Matrix(ring, n, n,
                      tuple(tuple(o if i == j else z for j in range(n))
                            for i in range(n)))

    @staticmethod
    def zeros(ring, nrows, ncols):
        z = ring.zero
        return Matrix(ring, nrows, ncols, ((z,) * ncols,) * nrows)

    @staticmethod
    def scalar(ring, n, s):
        z = ring.zero
        return Matrix(ring, n, n,
                      tuple(tuple(s if i == j else z for j in range(n))
                            for i in range(n)))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._match(other)
        R = self.ring
        return Matrix(R, self.nrows, self.ncols,
                      tuple(tuple(R.add(a, b) for a, b in zip(ra, rb))
                            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._match(other)
        R = self.ring
        return Matrix(R, self.nrows, self.ncols,
                      tuple(tuple(R.sub(a, b) for a, b in zip(ra, rb))
                            for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self):
        R = self.ring
        return Matrix(R, self.nrows, self.ncols,
                      tuple(tuple(R.neg(a) for a in row) for row in self.entries))

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        assert self.ring == other.ring and self.ncols == other.nrows
        R = self.ring
        add, mul, zero = R.add, R.mul, R.zero
        cols = list(zip(*other.entries)) if other.entries else [()] * other.ncols
        out = []
        for row in self.entries:
            new = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    acc = add(acc, mul(a, b))
                new.append(acc)
            out.append(tuple(new))
        return Matrix(R, self.nrows, other.ncols, tuple(out))

    def scale(self, s):
        R = self.ring
        return Matrix(R, self.nrows, self.ncols,
                      tuple(tuple(R.mul(s, a) for a in row) for row in self.entries))

    def transpose(self):
        if not self.entries:
            return Matrix(self.ring, self.ncols, 0, ((),) * self.ncols)
        return Matrix(self.ring, self.ncols, self.nrows, tuple(zip(*self.entries)))

    def conj(self):
        R = self.ring
        return Matrix(R, self.nrows, self.ncols,
                      tuple(tuple(R.conj(a) for a in row) for row in self.entries))

    def conj_t(self):
        return self.conj().transpose()

    # -- pieces ------------------------------------------------------------

    def take_cols(self, j0, j1):
        return Matrix(self.ring, self.nrows, j1 - j0,
                      tuple(row[j0:j1] for row in self.entries))

    def row(self, i):
        return self.entries[i]

    def is_zero(self):
        R = self.ring
        return all(R.is_zero(a) for row in self.entries for a in row)

    def _match(self, other):
        assert self.ring == other.ring
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)


def hstack(*mats):
    first = mats[0]
    assert all(m.nrows == first.nrows and m.ring == first.ring for m in mats)
    rows = tuple(sum((m.entries[i] for m in mats), ())
                 for i in range(first.nrows))
    return Matrix(first.ring, first.nrows, sum(m.ncols for m in mats), rows)


def vstack(*mats):
    first = mats[0]
    assert all(m.ncols == first.ncols and m.ring == first.ring for m in mats)
    rows = sum((m.entries for m in mats), ())
    return Matrix(first.ring, len(rows), first.ncols, rows)


def mul_vec(m, v):
    """Column-vector action: returns tuple m @ v."""
    R = m.ring
    add, mul, zero = R.add, R.mul, R.zero
    assert len(v) == m.ncols
    out = []
    for row in m.entries:
        acc = zero
        for a, b in zip(row, v):
            acc = add(acc, mul(a, b))
        out.append(acc)
    return tuple(out)


def vec_mul(v, m):
    """Row-vector action: returns tuple v @ m."""
    R = m.ring
    add, mul, zero = R.add, R.mul, R.zero
    assert len(v) == m.nrows
    out = [zero] * m.ncols
    for c, row in zip(v, m.entries):
        if R.is_zero(c):
            continue
        out = [add(acc, mul(c, a)) for acc, a in zip(out, row)]
    return tuple(out)


def _eliminate(ring, rows, ncols):
    """In-place reduced echelon pass; pivots only on unit entries.

    Returns the list of pivot columns.  Over a field this is full RREF; over
    a local ring rows without unit entries are left untouched at the bottom.
    """
    add, sub, mul, inv = ring.add, ring.sub, ring.mul, ring.inv
    is_zero, is_unit, one = ring.is_zero, ring.is_unit, ring.one
    pivots = []
    pr = 0
    nrows = len(rows)
    for c in range(ncols):
        pv = None
        for r in range(pr, nrows):
            if is_unit(rows[r][c]):
                pv = r
                break
        if pv is None:
            continue
        rows[pr], rows[pv] = rows[pv], rows[pr]
        head = rows[pr]
        f = head[c]
        if f != one:
            fi = inv(f)
            head = [mul(fi, e) for e in head]
            rows[pr] = head
        for r in range(nrows):
            if r == pr:
                continue
            g = rows[r][c]
            if not is_zero(g):
                row = rows[r]
                rows[r] = [sub(e, mul(g, h)) for e, h in zip(row, head)]
        pivots.append(c)
        pr += 1
        if pr == nrows:
            break
    return pivots


def rref(m):
    """Reduced row echelon form with zero rows dropped; returns (Matrix, rank)."""
    if not m.ring.is_field:
        raise TypeError("rref is canonical over fields only")
    rows = [list(r) for r in m.entries]
    pivots = _eliminate(m.ring, rows, m.ncols)
    r = len(pivots)
    return Matrix(m.ring, r, m.ncols, tuple(tuple(row) for row in rows[:r])), r


def rank(m):
    return rref(m)[1]


def pivot_cols(m):
    """Pivot columns of an already-reduced basis matrix."""
    R = m.ring
    out = []
    for row in m.entries:
        for j, e in enumerate(row):
            if not R.is_zero(e):
                out.append(j)
                break
    return out


def kernel_basis(m):
    """RREF basis (rows) of the right kernel {v : m v = 0}."""
    R = m.ring
    if not R.is_field:
        raise TypeError("kernel_basis over fields only")
    red, r = rref(m)
    pivots = pivot_cols(red)
    pivot_set = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivot_set]
    rows = []
    for j in free:
        v = [R.zero] * m.ncols
        v[j] = R.one
        for i, pc in enumerate(pivots):
            v[pc] = R.neg(red.entries[i][j])
        rows.append(tuple(v))
    out = Matrix(R, len(rows), m.ncols, tuple(rows))
    red_out, _ = rref(out)
    return red_out


def mat_invert(m):
    """Exact inverse; SingularMatrixError if no inverse over the ring."""
    assert m.nrows == m.ncols
    n = m.nrows
    ident = Matrix.identity(m.ring, n)
    rows = [list(a + b) for a, b in zip(m.entries, ident.entries)]
    pivots = _eliminate(m.ring, rows, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrixError("matrix is not invertible")
    return Matrix(m.ring, n, n, tuple(tuple(row[n:]) for row in rows[:n]))


def is_invertible(m):
    if m.nrows != m.ncols:
        return False
    try:
        mat_invert(m)
        return True
    except SingularMatrixError:
        return False


def det(m):
    """Determinant over a field, by elimination with row swaps."""
    R = m.ring
    assert R.is_field and m.nrows == m.ncols
    n = m.nrows
    rows = [list(r) for r in m.entries]
    result = R.one
    for c in range(n):
        pv = None
        for r in range(c, n):
            if not R.is_zero(rows[r][c]):
                pv = r
                break
        if pv is None:
            return R.zero
        if pv != c:
            rows[c], rows[pv] = rows[pv], rows[c]
            result = R.neg(result)
        head = rows[c]
        result = R.mul(result, head[c])
        fi = R.inv(head[c])
        for r in range(c + 1, n):
            g = rows[r][c]
            if not R.is_zero(g):
                f = R.mul(g, fi)
                rows[r] = [R.sub(e, R.mul(f, h)) for e, h in zip(rows[r], head)]
    return result


def parse_matrix(text, ring, ncols=None):
    """Parse "1,0;0,1" with entries in the ring's scalar syntax."""
    text = text.strip()
    if text in ("", "0") and ncols is not None:
        return Matrix.from_rows(ring, (), ncols)
    rows = []
    for chunk in text.split(";"):
        rows.append(tuple(ring.parse(tok) for tok in chunk.split(",")))
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        from .fields import FieldSyntaxError
        raise FieldSyntaxError("ragged matrix literal")
    if ncols is not None and width != ncols:
        from .fields import FieldSyntaxError
        raise FieldSyntaxError("expected %d columns, got %d" % (ncols, width))
    return Matrix.build(ring, rows)


def format_matrix(m):
    R = m.ring
    return ";".join(",".join(R.format(e) for e in row) for row in m.entries)


def random_matrix(ring, nrows, ncols, rng):
    return Matrix(ring, nrows, ncols,
                  tuple(tuple(ring.sample(rng) for _ in range(ncols))
                        for _ in range(nrows)))


def matrix_sort_key(m):
    R = m.ring
    return tuple(R.sort_key(e) for row in m.entries for e in row)


def all_matrices(ring, nrows, ncols):
    """All matrices over a finite field, in sorted scan order."""
    els = sorted(ring.elements(), key=ring.sort_key)
    if len(els) ** (nrows * ncols) > 1_000_000:
        raise ValueError("matrix space too large to enumerate")
    for combo in product(els, repeat=nrows * ncols):
        yield Matrix(ring, nrows, ncols,
                     tuple(tuple(combo[i * ncols + j] for j in range(ncols))
                           for i in range(nrows)))
