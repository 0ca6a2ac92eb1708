import json
import random

import pytest

from grouplie.cyclo import context
from grouplie.errors import GroupMismatch, IncompatiblePair
from grouplie.groups import (
    catalog,
    conjugacy_data,
    find_character,
    identity_automorphism,
    inversion_automorphism,
    linear_characters,
    parse_group_spec,
)
from grouplie.liealg import (
    GroupAlgebraElement,
    bracket,
    center_basis,
    census_dimension,
    class_projection,
    class_sum,
    convolve,
    derived_algebra_dim,
    left_multiplication_matrix,
    lie_basis,
    make_context,
    plus_fixed_basis,
    skew_project,
    skew_projector_trace,
    star,
)
from grouplie.linalg import CycloMatrix


S3 = catalog("symmetric", 3)
Q8 = catalog("quaternion8")


def random_element(group, rng):
    ctx = context(group.exponent)
    out = GroupAlgebraElement.zero(group)
    for g in group.elements():
        if rng.random() < 0.6:
            out.coeffs[g] = ctx.zeta(rng.randrange(group.exponent)) * rng.randrange(-3, 4)
    return out


def test_convolve_unit_and_deltas():
    rng = random.Random(1)
    a = random_element(S3, rng)
    e = GroupAlgebraElement.delta(S3, 0)
    assert convolve(e, a) == a
    assert convolve(a, e) == a
    for g in (1, 3, 5):
        for h in (2, 4):
            prod = convolve(GroupAlgebraElement.delta(S3, g),
                            GroupAlgebraElement.delta(S3, h))
            assert prod == GroupAlgebraElement.delta(S3, S3.mult[g][h])


def test_convolve_three_cycle_difference_squared():
    # t a 3-cycle: (t - t^2)^2 = t^2 - 2e + t since t^3 = e
    t = 3
    t2 = S3.mult[t][t]
    u = GroupAlgebraElement.delta(S3, t) - GroupAlgebraElement.delta(S3, t2)
    sq = convolve(u, u)
    expected = GroupAlgebraElement.zero(S3)
    ctx = context(S3.exponent)
    expected.coeffs[t2] = ctx.one
    expected.coeffs[0] = ctx.from_fraction(-2)
    expected.coeffs[t] = ctx.one
    assert sq == expected


def test_group_mismatch():
    with pytest.raises(GroupMismatch):
        convolve(GroupAlgebraElement.delta(S3, 0), GroupAlgebraElement.delta(Q8, 0))


def test_bracket_basics():
    rng = random.Random(2)
    a = random_element(S3, rng)
    assert bracket(a, a).is_zero()
    z6 = catalog("cyclic", 6)
    x = random_element(z6, rng)
    y = random_element(z6, rng)
    assert bracket(x, y).is_zero()


def test_bracket_transpositions():
    # [delta_(01), delta_(02)] = delta_((01)(02)) - delta_((02)(01))
    br = bracket(GroupAlgebraElement.delta(S3, 2), GroupAlgebraElement.delta(S3, 5))
    expected = GroupAlgebraElement.delta(S3, S3.mult[2][5]) - \
        GroupAlgebraElement.delta(S3, S3.mult[5][2])
    assert br == expected
    assert sorted(br.support()) == [3, 4]


def test_star_involution_and_antiautomorphism():
    sign = find_character(S3, "sign")
    ctx = make_context(S3, sign)
    rng = random.Random(3)
    e = GroupAlgebraElement.delta(S3, 0)
    assert star(ctx, e) == e
    for _ in range(20):
        a = random_element(S3, rng)
        assert star(ctx, star(ctx, a)) == a
    for _ in range(50):
        a = random_element(S3, rng)
        b = random_element(S3, rng)
        assert star(ctx, convolve(a, b)) == convolve(star(ctx, b), star(ctx, a))


def test_star_on_transposition_with_sign():
    sign = find_character(S3, "sign")
    ctx = make_context(S3, sign)
    d = GroupAlgebraElement.delta(S3, 2)
    assert star(ctx, d) == -d


def test_trace_invariance():
    sign = find_character(S3, "sign")
    ctx = make_context(S3, sign)
    rng = random.Random(4)
    for _ in range(30):
        a = random_element(S3, rng)
        assert star(ctx, a).trace() == a.trace()


def test_incompatible_pair_rejected():
    z4 = catalog("cyclic", 4)
    order4 = next(c for c in linear_characters(z4)
                  if sorted(c.exponents) == [0, 1, 2, 3])
    with pytest.raises(IncompatiblePair):
        make_context(z4, order4, inversion_automorphism(z4))


def test_skew_projector():
    sign = find_character(S3, "sign")
    ctx = make_context(S3, sign)
    rng = random.Random(5)
    for _ in range(20):
        a = random_element(S3, rng)
        p = skew_project(ctx, a)
        assert skew_project(ctx, p) == p
    for s in plus_fixed_basis(ctx):
        assert skew_project(ctx, s).is_zero()


def test_projector_trace_equals_dimension():
    for spec, label, expected in [("symmetric:3", "trivial", 1),
                                  ("symmetric:3", "sign", 4),
                                  ("quaternion8", "trivial", 3)]:
        g = parse_group_spec(spec)
        ctx = make_context(g, find_character(g, label))
        assert skew_projector_trace(ctx) == expected
        assert census_dimension(ctx) == expected


def test_lie_basis_dimensions():
    cases = [
        ("symmetric:3", "trivial", 1),
        ("symmetric:3", "sign", 4),
        ("quaternion8", "trivial", 3),
        ("product:cyclic:2,cyclic:2", "trivial", 0),
    ]
    for spec, label, expected in cases:
        g = parse_group_spec(spec)
        basis = lie_basis(make_context(g, find_character(g, label)))
        assert basis.dim == expected
        assert basis.matrix().rank() == expected
        assert len(basis.generators_meta) == expected


def test_elementary_abelian_all_vanish():
    for r in (1, 2, 3):
        g = catalog("cyclic", 2)
        for _ in range(r - 1):
            g = catalog("direct_product", g, catalog("cyclic", 2))
        ctx = make_context(g, next(c for c in linear_characters(g) if c.is_trivial()))
        assert lie_basis(ctx).dim == 0


def test_basis_vectors_are_skew():
    sign = find_character(S3, "sign")
    ctx = make_context(S3, sign)
    for v in lie_basis(ctx).vectors:
        assert star(ctx, v) == -v


def test_center_generators_are_skew():
    for spec, label in [("symmetric:3", "sign"), ("cyclic:5", "trivial"),
                        ("dihedral:6", "lin1")]:
        g = parse_group_spec(spec)
        ctx = make_context(g, find_character(g, label))
        for v in center_basis(ctx):
            assert star(ctx, v) == -v


def test_center_bases():
    sign = find_character(S3, "sign")
    gens = center_basis(make_context(S3, sign))
    assert len(gens) == 1
    cd = conjugacy_data(S3)
    transp = next(c for c in range(3) if cd.sizes[c] == 3)
    expected = class_sum(S3, cd.classes[transp]).scaled(2)
    assert gens[0] == expected

    z3 = catalog("cyclic", 3)
    gens3 = center_basis(make_context(z3, find_character(z3, "trivial")))
    assert len(gens3) == 1
    d1 = GroupAlgebraElement.delta(z3, 1) - GroupAlgebraElement.delta(z3, 2)
    assert gens3[0] == d1

    assert center_basis(make_context(Q8, find_character(Q8, "trivial"))) == []


def test_class_projection():
    cd = conjugacy_data(S3)
    transp = next(c for c in range(3) if cd.sizes[c] == 3)
    t_c = class_sum(S3, cd.classes[transp])
    assert class_projection(t_c) == t_c

    from fractions import Fraction

    d = GroupAlgebraElement.delta(S3, 3)
    p = class_projection(d)
    c3 = cd.classes[cd.class_of[3]]
    expected = class_sum(S3, c3).scaled(Fraction(1, len(c3)))
    assert p == expected
    assert class_projection(p) == p

    g, h = 3, 2
    diff = GroupAlgebraElement.delta(S3, g) - \
        GroupAlgebraElement.delta(S3, S3.conjugate(h, g))
    assert class_projection(diff).is_zero()


def test_derived_algebra_dims():
    assert derived_algebra_dim(catalog("cyclic", 8)) == 0
    assert derived_algebra_dim(S3) == 3   # 6 - 3 classes
    assert derived_algebra_dim(Q8) == 3   # 8 - 5 classes
    # equals sum of (d^2 - 1) over irreps
    from grouplie.chartable import character_table

    for g in (S3, Q8, catalog("alternating", 4)):
        t = character_table(g)
        assert derived_algebra_dim(g) == sum(d * d - 1 for d in t.degrees)


def test_orthogonality_between_eigenspaces():
    for spec, label in [("symmetric:3", "sign"), ("symmetric:4", "trivial"),
                        ("quaternion8", "trivial")]:
        g = parse_group_spec(spec)
        ctx = make_context(g, find_character(g, label))
        basis = lie_basis(ctx)
        for u in basis.vectors:
            for s in plus_fixed_basis(ctx):
                assert convolve(u, s).trace().is_zero()


def test_anti_self_adjointness_untwisted():
    # rho(u)^T D + D rho(u) = 0 with D = diag(alpha(g)), tau = id
    for spec, label in [("symmetric:3", "sign"), ("cyclic:4", "lin1")]:
        g = parse_group_spec(spec)
        alpha = find_character(g, label)
        ctx = make_context(g, alpha)
        n = g.order
        field = context(g.exponent)
        for u in lie_basis(ctx).vectors:
            rho = left_multiplication_matrix(u)
            for a in range(n):
                for b in range(n):
                    lhs = rho.entries[b][a] * alpha.value(b)
                    rhs = alpha.value(a) * rho.entries[a][b]
                    assert (lhs + rhs).is_zero()


def test_element_json_round_trip():
    rng = random.Random(6)
    a = random_element(S3, rng)
    payload = json.dumps(a.to_json_dict())
    back = GroupAlgebraElement.from_json_dict(S3, json.loads(payload))
    assert back == a
