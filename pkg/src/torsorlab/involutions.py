"""Involutions of the subspace geometry coming from nondegenerate forms.

An involution here is a map tau(x) = post . (x orthocomplement), where the
orthocomplement is taken for a fixed (skew-)hermitian form and `post` is an
optional invertible operator.  This class of maps is closed under the two
derived constructions used throughout:

* the dual involution, which composes with the operator that is the identity
  on o+ and minus the identity on o- (an automorphism of the product);
* the swap-composed involution tilde, which composes with the block swap j.

Fixed-point sets are the Lagrangian-type subvarieties; the torsors G(inv, a),
the unitary groups U(inv; a, o, b), and the closure of the fixed set under
the pentary product with middle pair (a, tau a) all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fields import CharacteristicTwoError
from .gamma import (dilation, gamma_global, gamma_oracle, m_operator,
                    transversal_tuple)
from .matrices import (Matrix, det, format_matrix, hstack, mat_invert, rank,
                       random_matrix, vstack)
from .reports import Report, describe_value, run_law
from .rng import trial_rng
from .subspaces import (Form, Subspace, all_subspaces, coord_subspace,
                        contains, enumerate_subspaces, graph_minus,
                        is_isotropic, is_transversal, orthocomplement,
                        pushforward, random_subspace, sort_key, span_rows)


class InvolutionError(ValueError):
    pass


@dataclass(frozen=True)
class Involution:
    """x -> post . (x orthocomplement), with post = None meaning identity."""

    form: Form
    post: Matrix = None
    label: str = ""

    @property
    def field(self):
        return self.form.field

    @property
    def ambient(self):
        return self.form.ambient

    def __call__(self, x):
        y = orthocomplement(x, self.form)
        if self.post is None:
            return y
        return pushforward(self.post, y)


@lru_cache(maxsize=None)
def _order_two_ok(inv):
    """Cheap order-2 validation: exhaustive when small, sampled otherwise."""
    field = inv.field
    n = inv.ambient
    if field.size is not None and field.size ** n <= 2 ** 12:
        pool = all_subspaces(field, n)
    else:
        pool = [coord_subspace(field, n, range(k)) for k in range(n + 1)]
        for i in range(12):
            pool.append(random_subspace(field, n, trial_rng(0, i)))
    return all(inv(inv(x)) == x for x in pool)


def involution(form, post=None, label="", check=True):
    """Build an involution, validating invertibility of post and order 2."""
    if post is not None:
        mat_invert(post)
    inv = Involution(form, post, label)
    if check and not _order_two_ok(inv):
        raise InvolutionError("map is not of order two")
    return inv


def ortho_involution(form):
    """Plain orthocomplementation for a nondegenerate form."""
    mat_invert(form.gram)
    return involution(form, None, "perp")


@dataclass(frozen=True)
class BaseTriple:
    o_plus: Subspace
    e: Subspace
    o_minus: Subspace

    @property
    def field(self):
        return self.o_plus.field

    @property
    def ambient(self):
        return self.o_plus.ambient


def base_triple(o_plus, e, o_minus):
    for u, v in ((o_plus, e), (e, o_minus), (o_plus, o_minus)):
        if not is_transversal(u, v):
            raise ValueError("base triple must be pairwise transversal")
    return BaseTriple(o_plus, e, o_minus)


def standard_triple(field, n):
    """o+ = first n coordinates, o- = last n, e = diagonal, in K^{2n}."""
    o_plus = coord_subspace(field, 2 * n, range(n))
    o_minus = coord_subspace(field, 2 * n, range(n, 2 * n))
    rows = []
    for i in range(n):
        v = [field.zero] * (2 * n)
        v[i] = field.one
        v[n + i] = field.one
        rows.append(tuple(v))
    return BaseTriple(o_plus, span_rows(field, 2 * n, rows), o_minus)


def is_standard_triple(bt):
    return bt == standard_triple(bt.field, bt.ambient // 2)


def _base_point_type(inv, bt):
    tp, tm = inv(bt.o_plus), inv(bt.o_minus)
    if tp == bt.o_plus and tm == bt.o_minus:
        return "preserving"
    if tp == bt.o_minus and tm == bt.o_plus:
        return "exchanging"
    return None


def minus_one_op(bt):
    """The automorphism fixing o+ and o- that negates the affine parts."""
    return m_operator(bt.o_plus, bt.o_minus, bt.o_minus, bt.o_plus)


def dual_involution(inv, bt):
    """Compose with the minus-one automorphism of the base pair."""
    kind = _base_point_type(inv, bt)
    if kind is None:
        raise InvolutionError(
            "dual involution needs a base point preserving or exchanging map")
    d = minus_one_op(bt)
    post = d if inv.post is None else d * inv.post
    return involution(inv.form, post, inv.label + "-dual")


def j_map(bt):
    """The swap operator exchanging o+ and o- while fixing the diagonal."""
    return m_operator(bt.o_plus, bt.e, bt.e, bt.o_minus)


def tilde_tau(inv, bt):
    """Compose with j; needs tau fixing o+, o-, and e."""
    if _base_point_type(inv, bt) != "preserving" or inv(bt.e) != bt.e:
        raise InvolutionError(
            "tilde construction needs a unital base point preserving map")
    j = j_map(bt)
    post = j if inv.post is None else j * inv.post
    return involution(inv.form, post, inv.label + "-tilde")


def cayley_rho(bt):
    """Block operator [[1, -1], [1, 1]] on the standard triple."""
    field = bt.field
    if field.char == 2:
        raise CharacteristicTwoError("the transform needs 2 invertible")
    if not is_standard_triple(bt):
        raise ValueError("transform is pinned to the standard triple")
    n = bt.ambient // 2
    i = Matrix.identity(field, n)
    return vstack(hstack(i, -i), hstack(i, i))


def conjugate_map(g, fn):
    """x -> g . fn(g^{-1} x) as a plain callable on subspaces."""
    g_inv = mat_invert(g)
    return lambda x: pushforward(g, fn(pushforward(g_inv, x)))


def maps_equal_on(f, g, pool):
    return all(f(x) == g(x) for x in pool)


# -- fixed points and Lagrangian geometries --------------------------------


def fixed_points(inv):
    """All tau-fixed subspaces, sorted (finite fields, even ambient only).

    Invertible post and gram force every fixed point into the middle
    dimension, so only that layer is enumerated.
    """
    n = inv.ambient
    if n % 2 == 1:
        return ()
    pts = [x for x in enumerate_subspaces(inv.field, n, n // 2) if inv(x) == x]
    return tuple(sorted(pts, key=sort_key))


def isotropic_census(form):
    """Middle-dimension totally isotropic subspaces, by direct filtering."""
    n = form.ambient
    if n % 2 == 1:
        return ()
    pts = [x for x in enumerate_subspaces(form.field, n, n // 2)
           if is_isotropic(x, form)]
    return tuple(sorted(pts, key=sort_key))


@dataclass(frozen=True)
class LagrangianGeometry:
    inv: Involution
    points: tuple

    def __contains__(self, x):
        return self.inv(x) == x

    def __len__(self):
        return len(self.points)


def lagrangian_geometry(inv):
    return LagrangianGeometry(inv, fixed_points(inv))


def census_report(form, suite="lagrangian"):
    """Two independent counts of the middle isotropic layer must agree."""
    inv = ortho_involution(form)
    direct = isotropic_census(form)
    fixed = fixed_points(inv)
    report = Report(suite=suite, law="census-two-paths", cases=1)
    if direct != fixed:
        report.failures = 1
        report.first_counterexample = {
            "direct-count": len(direct), "fixed-count": len(fixed)}
    report.notes = ("count:%d" % len(direct),)
    return report


# -- torsors, groups, tables ------------------------------------------------


@dataclass(frozen=True)
class GroupView:
    """A finite set with a binary product given through the pentary map."""

    elements: tuple
    unit: Subspace

    def index(self, x):
        return self.elements.index(x)


def torsor_product(inv, a):
    ta = inv(a)
    return lambda x, y, z: gamma_global(x, a, y, ta, z)


def torsor_G(inv, a):
    """Fixed subspaces transversal to both a and tau(a), with (x, y, z)."""
    ta = inv(a)
    carrier = tuple(x for x in fixed_points(inv)
                    if is_transversal(x, a) and is_transversal(x, ta))
    return carrier, torsor_product(inv, a)


def group_of_torsor(carrier, product, unit):
    if unit not in carrier:
        raise ValueError("unit must lie in the carrier")
    return GroupView(carrier, unit)


def cayley_table(view, product):
    """Index table t[i][j] = index of elements[i] . elements[j]."""
    els = view.elements
    table = []
    for x in els:
        row = []
        for z in els:
            w = product(x, view.unit, z)
            row.append(els.index(w))
        table.append(tuple(row))
    return tuple(table)


def transported_view(view, g):
    """The element list and unit pushed forward by an invertible operator."""
    return GroupView(tuple(pushforward(g, x) for x in view.elements),
                     pushforward(g, view.unit))


def unitary_group(inv, a, o, b):
    """Members x of the group (U_ab, o) with tau(x) equal to the inverse."""
    for p in (a, o, b):
        if inv(p) != p:
            raise ValueError("parameters must be fixed by the involution")
    if not (is_transversal(o, a) and is_transversal(o, b)):
        raise ValueError("unit must be a common complement")
    field = inv.field
    n = inv.ambient
    if a.dim != b.dim:
        return GroupView((), o), torsor_product_pair(a, b)
    carrier = [x for x in enumerate_subspaces(field, n, n - a.dim)
               if is_transversal(x, a) and is_transversal(x, b)]
    product = torsor_product_pair(a, b)
    members = []
    for x in carrier:
        x_inv = gamma_global(o, a, x, b, o)
        if inv(x) == x_inv:
            members.append(x)
    return GroupView(tuple(members), o), product


def torsor_product_pair(a, b):
    return lambda x, y, z: gamma_global(x, a, y, b, z)


def translation_op(a_chart, bt):
    """Operator adding the chart point a to the group of complements of o+.

    a_chart is the matrix A of the subspace {(Av, v)}; in standard
    coordinates the composite is the block matrix [[1, A], [0, 1]].
    """
    n = bt.ambient // 2
    if a_chart.nrows != n or a_chart.ncols != n:
        raise ValueError("chart parameter must be n x n")
    a_sub = graph_minus(a_chart)
    first = m_operator(bt.o_plus, a_sub, bt.o_minus, bt.o_plus)
    return first * minus_one_op(bt)


# -- report suites -----------------------------------------------------------


def _case(case):
    return {k: describe_value(v) for k, v in case.items()}


def check_order_two(inv, config, suite="involution"):
    field, n = inv.field, inv.ambient

    def cases():
        if config.exhaustive:
            for x in all_subspaces(field, n):
                yield dict(x=x)
        else:
            for i in config.indices():
                yield dict(x=random_subspace(field, n, trial_rng(config.seed, i)))

    return run_law(suite, "order-two", cases(),
                   lambda c: inv(inv(c["x"])) == c["x"], _case,
                   notes=("label:%s" % (inv.label or "anonymous"),))


def check_transversality_preservation(inv, config, suite="involution"):
    field, n = inv.field, inv.ambient

    def cases():
        if config.exhaustive:
            subs = all_subspaces(field, n)
            for x in subs:
                for a in subs:
                    yield dict(x=x, a=a)
        else:
            for i in config.indices():
                rng = trial_rng(config.seed, i)
                yield dict(x=random_subspace(field, n, rng),
                           a=random_subspace(field, n, rng))

    def holds(c):
        return (is_transversal(c["x"], c["a"])
                == is_transversal(inv(c["x"]), inv(c["a"])))

    return run_law(suite, "transversality-preservation", cases(), holds, _case)


def check_antihom_restricted(inv, config, suite="involution"):
    """tau Gamma(x,a,y,b,z) = Gamma(tx,tb,ty,ta,tz) = Gamma(tz,ta,ty,tb,tx)."""
    field, n = inv.field, inv.ambient

    def cases():
        if config.exhaustive:
            subs = all_subspaces(field, n)
            for a in subs:
                for b in subs:
                    if a.dim != b.dim:
                        continue
                    carrier = [x for x in all_subspaces(field, n, n - a.dim)
                               if is_transversal(x, a) and is_transversal(x, b)]
                    for x in carrier:
                        for y in carrier:
                            for z in carrier:
                                yield dict(x=x, a=a, y=y, b=b, z=z)
        else:
            for i in config.indices():
                rng = trial_rng(config.seed, i)
                x, a, y, b, z = transversal_tuple(field, n, rng)
                yield dict(x=x, a=a, y=y, b=b, z=z)

    def holds(c):
        x, a, y, b, z = c["x"], c["a"], c["y"], c["b"], c["z"]
        lhs = inv(gamma_global(x, a, y, b, z))
        if lhs != gamma_global(inv(x), inv(b), inv(y), inv(a), inv(z)):
            return False
        return lhs == gamma_global(inv(z), inv(a), inv(y), inv(b), inv(x))

    return run_law(suite, "restricted-anti-homomorphism", cases(), holds, _case)


def check_antihom_global(inv, config, suite="involution"):
    """The same identity on arbitrary tuples, no transversality at all."""
    field, n = inv.field, inv.ambient

    def cases():
        if config.exhaustive:
            subs = all_subspaces(field, n)
            for x in subs:
                for a in subs:
                    for y in subs:
                        for b in subs:
                            for z in subs:
                                yield dict(x=x, a=a, y=y, b=b, z=z)
        else:
            for i in config.indices():
                rng = trial_rng(config.seed, i)
                draw = lambda: random_subspace(field, n, rng)
                yield dict(x=draw(), a=draw(), y=draw(), b=draw(), z=draw())

    def holds(c):
        x, a, y, b, z = c["x"], c["a"], c["y"], c["b"], c["z"]
        lhs = inv(gamma_global(x, a, y, b, z))
        if lhs != gamma_global(inv(z), inv(a), inv(y), inv(b), inv(x)):
            return False
        return lhs == gamma_global(inv(x), inv(b), inv(y), inv(a), inv(z))

    return run_law(suite, "global-anti-homomorphism", cases(), holds, _case)


def check_duality_inclusion(form, config, suite="involution"):
    """Gamma of complements sits inside the complement of Gamma (inclusion).

    Equality candidates are not asserted here; strictness counts go into the
    notes so genuinely strict cases can be collected.
    """
    field, n = form.field, form.ambient
    report = Report(suite=suite, law="duality-inclusion")
    strict = 0
    for i in config.indices():
        rng = trial_rng(config.seed, i)
        t = tuple(random_subspace(field, n, rng) for _ in range(5))
        x, a, y, b, z = t
        report.cases += 1
        lhs = gamma_global(orthocomplement(x, form), orthocomplement(b, form),
                           orthocomplement(y, form), orthocomplement(a, form),
                           orthocomplement(z, form))
        rhs = orthocomplement(gamma_global(x, a, y, b, z), form)
        if not contains(rhs, lhs):
            report.failures += 1
            if report.first_counterexample is None:
                report.first_counterexample = _case(
                    dict(x=x, a=a, y=y, b=b, z=z))
        elif lhs != rhs:
            strict += 1
    if strict:
        report.notes = ("strict-inclusion-instances:%d" % strict,)
    return report


def check_dilation_compat(inv, config, suite="involution"):
    """tau(dilation_s(x, a, y)) = dilation_conj(s)(tau x, tau a, tau y)."""
    field, n = inv.field, inv.ambient
    if field.size is not None:
        scalars = sorted(field.elements(), key=field.sort_key)
    else:
        scalars = [field.zero, field.one, field.from_int(2), field.from_int(-3)]

    def cases():
        for i in config.indices():
            rng = trial_rng(config.seed, i)
            x, a, y, b, z = transversal_tuple(field, n, rng)
            yield dict(x=x, a=a, y=y)

    def holds(c):
        x, a, y = c["x"], c["a"], c["y"]
        for s in scalars:
            expect = dilation(field.conj(s), inv(x), inv(a), inv(y))
            if inv(dilation(s, x, a, y)) != expect:
                return False
        return True

    return run_law(suite, "dilation-compatibility", cases(), holds, _case)


def verify_involution(inv, level, config, suite="involution"):
    """Full law bundle; level is "restricted" or "global"."""
    if level not in ("restricted", "global"):
        raise ValueError("level must be restricted or global")
    reports = [
        check_order_two(inv, config, suite),
        check_transversality_preservation(inv, config, suite),
        check_antihom_restricted(inv, config, suite),
        check_dilation_compat(inv, config, suite),
    ]
    if level == "global":
        reports.append(check_antihom_global(inv, config, suite))
    return reports


def closure_report(inv, a, gamma_fn=gamma_oracle, suite="lagrangian"):
    """The fixed set is closed under (x, y, z) -> Gamma(x, a, y, tau a, z).

    Membership of the result is decided by tau(result) == result, so no
    lookup in the enumerated fixed set is needed for the check itself.
    """
    ta = inv(a)
    pts = fixed_points(inv)
    report = Report(suite=suite, law="fixed-set-closure",
                    notes=("a:%s" % format_matrix(a.basis),))
    for x in pts:
        for y in pts:
            for z in pts:
                report.cases += 1
                w = gamma_fn(x, a, y, ta, z)
                if inv(w) != w:
                    report.failures += 1
                    if report.first_counterexample is None:
                        report.first_counterexample = _case(
                            dict(x=x, y=y, z=z, result=w))
    return report


def check_torsor_g(inv, a, suite="involution"):
    """Torsor axioms on G(inv, a), plus commutativity when a is fixed."""
    carrier, product = torsor_G(inv, a)
    a_fixed = inv(a) == a
    report = Report(suite=suite, law="fixed-torsor-axioms",
                    notes=("carrier:%d" % len(carrier),))
    for x in carrier:
        for y in carrier:
            report.cases += 1
            ok = product(x, y, y) == x and product(y, y, x) == x
            if ok:
                w = product(x, y, x)
                ok = inv(w) == w and w in carrier
            if not ok:
                report.failures += 1
                if report.first_counterexample is None:
                    report.first_counterexample = _case(dict(x=x, y=y))
    if a_fixed:
        for x in carrier:
            for y in carrier:
                for z in carrier:
                    report.cases += 1
                    if product(x, y, z) != product(z, y, x):
                        report.failures += 1
                        if report.first_counterexample is None:
                            report.first_counterexample = _case(
                                dict(x=x, y=y, z=z))
    return report


def check_opposite_torsor(inv, a, suite="involution"):
    """(x y z) for the parameter a equals (z y x) for the parameter tau a."""
    carrier, product = torsor_G(inv, a)
    op_carrier, op_product = torsor_G(inv, inv(a))
    report = Report(suite=suite, law="opposite-torsor")
    if set(carrier) != set(op_carrier):
        report.cases = 1
        report.failures = 1
        report.first_counterexample = {"carrier-sizes":
                                       [len(carrier), len(op_carrier)]}
        return report
    for x in carrier:
        for y in carrier:
            for z in carrier:
                report.cases += 1
                if product(x, y, z) != op_product(z, y, x):
                    report.failures += 1
                    if report.first_counterexample is None:
                        report.first_counterexample = _case(
                            dict(x=x, y=y, z=z))
    return report


# -- orbit invariants --------------------------------------------------------


def form_invariants(a, form):
    """(rank of the restricted form, square class of its determinant).

    The determinant class is only returned for symmetric bilinear forms over
    fields that expose square classes; it is 0 for a singular restriction
    and None when the class is not defined for the form's kind.
    """
    field = form.field
    restricted = a.basis.conj() * form.gram * a.basis.transpose()
    r = rank(restricted)
    disc = None
    if (form.kind == "hermitian" and field.involution == "identity"
            and hasattr(field, "square_class")):
        d = det(restricted)
        disc = 0 if field.is_zero(d) else field.square_class(d)
    return r, disc


def random_isometry(form, rng):
    """A random invertible operator preserving the form.

    Implemented for ambient 2 over fields with the identity involution:
    determinant-one operators for the skew form, torus and swap elements for
    the split form, hyperbolic rotations and a reflection for diag(1, -1).
    """
    field = form.field
    if form.ambient != 2 or field.involution != "identity":
        raise ValueError("isometry sampling needs ambient 2, plain transpose")
    one, zero = field.one, field.zero
    g = form.gram.entries
    t = field.zero
    while field.is_zero(t):
        t = field.sample(rng)
    t_inv = field.inv(t)
    if form.kind == "skew":
        while True:
            m = random_matrix(field, 2, 2, rng)
            d = det(m)
            if not field.is_zero(d):
                di = field.inv(d)
                top = tuple(field.mul(di, e) for e in m.entries[0])
                return Matrix.build(field, [top, m.entries[1]])
    if field.is_zero(g[0][0]) and g[0][1] == one:
        if rng.below(2) == 0:
            return Matrix.build(field, [[t, zero], [zero, t_inv]])
        return Matrix.build(field, [[zero, t], [t_inv, zero]])
    if field.char == 2:
        if rng.below(2) == 0:
            return Matrix.identity(field, 2)
        return Matrix.build(field, [[zero, one], [one, zero]])
    half = field.inv(field.from_int(2))
    c = field.mul(half, field.add(t, t_inv))
    s = field.mul(half, field.sub(t, t_inv))
    rot = Matrix.build(field, [[c, s], [s, c]])
    if rng.below(2) == 0:
        return rot
    return rot * Matrix.build(field, [[one, zero], [zero, field.neg(one)]])


def check_invariant_transport(form, config, suite="involution"):
    """Isometries preserve the invariants and transport torsor tables."""
    field = form.field
    inv = ortho_involution(form)
    report = Report(suite=suite, law="isometry-transport")
    for i in config.indices():
        rng = trial_rng(config.seed, i)
        g = random_isometry(form, rng)
        a = random_subspace(field, form.ambient, rng)
        report.cases += 1
        b = pushforward(g, a)
        if form_invariants(a, form) != form_invariants(b, form):
            report.failures += 1
            if report.first_counterexample is None:
                report.first_counterexample = _case(dict(a=a, g=g))
            continue
        carrier, product = torsor_G(inv, a)
        if not carrier:
            continue
        view = GroupView(carrier, carrier[0])
        view_b = transported_view(view, g)
        carrier_b, product_b = torsor_G(inv, b)
        same_carrier = set(view_b.elements) == set(carrier_b)
        if not same_carrier or (cayley_table(view, product)
                                != cayley_table(view_b, product_b)):
            report.failures += 1
            if report.first_counterexample is None:
                report.first_counterexample = _case(dict(a=a, g=g))
    return report
