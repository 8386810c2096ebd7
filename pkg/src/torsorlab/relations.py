"""Linear relations: subspaces of W + W viewed as multivalued maps.

A relation F <= K^n + K^n is stored by its underlying subspace with the block
convention (input | output).  Composition, inversion, pointwise application,
pointwise difference, 1 +/- F, and the adjoint with respect to a form are all
computed by exact block intersections and projections, so every identity about
them is decidable on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .matrices import Matrix, hstack, vstack
from .subspaces import (Form, Subspace, _assume_rref, make_form, meet,
                        orthocomplement, span_rows, zero_subspace)


@dataclass(frozen=True)
class LinearRelation:
    half: int
    inner: Subspace  # subspace of K^(2*half)

    @property
    def field(self):
        return self.inner.field

    @property
    def dim(self):
        return self.inner.dim

    def dom(self):
        return _project(self.inner, self.half, left=True)

    def im(self):
        return _project(self.inner, self.half, left=False)

    def ker(self):
        """{z : (z, 0) in F}."""
        z = _times_full(zero_subspace(self.field, self.half), self.half, left=False)
        return _project(meet(self.inner, z.inner), self.half, left=True)

    def indef(self):
        """{w : (0, w) in F}."""
        z = _times_full(zero_subspace(self.field, self.half), self.half, left=True)
        return _project(meet(self.inner, z.inner), self.half, left=False)


def relation(half, inner):
    assert inner.ambient == 2 * half
    return LinearRelation(half, inner)


def _project(sub, half, left):
    field = sub.field
    if left:
        rows = [row[:half] for row in sub.basis.entries]
    else:
        rows = [row[half:] for row in sub.basis.entries]
    return span_rows(field, half, rows)


def _times_full(sub, half, left):
    """left: sub x K^half; otherwise K^half x sub (as a relation)."""
    field = sub.field
    eye = Matrix.identity(field, half)
    zero_blk = Matrix.zeros(field, sub.dim, half)
    zero_blk2 = Matrix.zeros(field, half, sub.ambient)
    if left:
        top = hstack(sub.basis, zero_blk)
        bottom = hstack(zero_blk2, eye)
        rows = vstack(top, bottom)
        return LinearRelation(half, _assume_rref(2 * half, rows))
    top = hstack(zero_blk, sub.basis)
    bottom = hstack(eye, zero_blk2)
    return LinearRelation(half, span_rows(field, 2 * half,
                                          bottom.entries + top.entries))


def graph_rel(mat):
    """Relation {(v, mat v)} of an endomorphism matrix."""
    assert mat.nrows == mat.ncols
    basis = hstack(Matrix.identity(mat.ring, mat.nrows), mat.transpose())
    return LinearRelation(mat.nrows, _assume_rref(2 * mat.nrows, basis))


def identity_rel(field, half):
    return graph_rel(Matrix.identity(field, half))


def zero_rel(field, half):
    return graph_rel(Matrix.zeros(field, half, half))


def gen_projection(x, a):
    """P with image x and kernel a: {(z, w) : w in x, w - z in a}.

    x and a need not be complementary; the result is a relation in general and
    an idempotent operator exactly when they are.
    """
    assert x.ambient == a.ambient and x.field == a.field
    n = x.ambient
    field = x.field
    rows = [u + u for u in x.basis.entries]
    zero = (field.zero,) * n
    rows += [tuple(field.neg(e) for e in w) + zero for w in a.basis.entries]
    return LinearRelation(n, span_rows(field, 2 * n, rows))


def inverse_rel(f):
    rows = [row[f.half:] + row[:f.half] for row in f.inner.basis.entries]
    return LinearRelation(f.half, span_rows(f.field, 2 * f.half, rows))


def compose(g, f):
    """g after f: {(u, w) : exists v, (u, v) in f and (v, w) in g}."""
    assert f.half == g.half and f.field == g.field
    n = f.half
    field = f.field
    zero = (field.zero,) * n
    t1 = [row + zero for row in f.inner.basis.entries]
    eye = Matrix.identity(field, n).entries
    t1 += [zero + zero + e for e in eye]
    t2 = [e + zero + zero for e in eye]
    t2 += [zero + row for row in g.inner.basis.entries]
    both = meet(span_rows(field, 3 * n, t1), span_rows(field, 3 * n, t2))
    rows = [row[:n] + row[2 * n:] for row in both.basis.entries]
    return LinearRelation(n, span_rows(field, 2 * n, rows))


def apply_rel(f, z):
    """Pointwise image f(z) = {w : (u, w) in f for some u in z}."""
    assert z.ambient == f.half and z.field == f.field
    zw = _times_full(z, f.half, left=True)
    return _project(meet(f.inner, zw.inner), f.half, left=False)


def difference(f, g):
    """Pointwise difference: {(u, a - b) : (u, a) in f, (u, b) in g}."""
    assert f.half == g.half and f.field == g.field
    n = f.half
    field = f.field
    zero = (field.zero,) * n
    eye = Matrix.identity(field, n).entries
    t1 = [row + zero for row in f.inner.basis.entries]
    t1 += [zero + zero + e for e in eye]
    t2 = [row[:n] + zero + row[n:] for row in g.inner.basis.entries]
    t2 += [zero + e + zero for e in eye]
    both = meet(span_rows(field, 3 * n, t1), span_rows(field, 3 * n, t2))
    rows = [row[:n] + tuple(field.sub(a, b)
                            for a, b in zip(row[n:2 * n], row[2 * n:]))
            for row in both.basis.entries]
    return LinearRelation(n, span_rows(field, 2 * n, rows))


def one_plus_minus(f, plus=True):
    """1 + F (or 1 - F): pushforward of F by (v, w) -> (v, v +/- w)."""
    field = f.field
    n = f.half
    rows = []
    for row in f.inner.basis.entries:
        v, w = row[:n], row[n:]
        if plus:
            new = tuple(field.add(a, b) for a, b in zip(v, w))
        else:
            new = tuple(field.sub(a, b) for a, b in zip(v, w))
        rows.append(v + new)
    return LinearRelation(n, span_rows(field, 2 * n, rows))


def one_plus(f):
    return one_plus_minus(f, plus=True)


def one_minus(f):
    return one_plus_minus(f, plus=False)


@lru_cache(maxsize=None)
def _pairing_form(form, half):
    """Gram of Omega((u,v),(u',v')) = beta(u, v') - beta(v, u') on K^{2n}."""
    b = form.gram
    z = Matrix.zeros(form.field, half, half)
    gram = vstack(hstack(z, b), hstack(-b, z))
    kind = "hermitian" if form.kind == "skew" else "skew"
    return make_form(gram, kind)


def adjoint(f, form):
    """F* = {(v', w') : beta(v', w) = beta(w', v) for all (v, w) in F}."""
    assert form.ambient == f.half
    omega = _pairing_form(form, f.half)
    return LinearRelation(f.half, orthocomplement(f.inner, omega))


def relation_to_json(f):
    from .subspaces import subspace_to_json
    obj = subspace_to_json(f.inner)
    obj["half"] = f.half
    return obj


def relation_from_json(obj):
    from .subspaces import subspace_from_json
    inner = subspace_from_json(obj)
    return LinearRelation(int(obj["half"]), inner)


def random_relation(field, half, rng):
    from .subspaces import random_subspace
    return LinearRelation(half, random_subspace(field, 2 * half, rng))
