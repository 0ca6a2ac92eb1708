from fractions import Fraction

import pytest

from grouplie.chartable import (
    CharacterTable,
    _find_prime,
    character_table,
    class_constants,
    regular_character,
)
from grouplie.cyclo import context
from grouplie.errors import PrimeSearchFailed
from grouplie.groups import catalog, conjugacy_data, parse_group_spec


def brute_force_constant(group, cd, i, j, k):
    z = cd.representatives[k]
    return sum(
        1
        for x in cd.classes[i]
        for y in cd.classes[j]
        if group.mult[x][y] == z
    )


def test_class_constants_identity_class():
    s3 = catalog("symmetric", 3)
    cd = conjugacy_data(s3)
    a = class_constants(s3, cd)
    e = cd.class_of[0]
    for j in range(cd.num_classes):
        for k in range(cd.num_classes):
            assert a[e][j][k] == (1 if j == k else 0)


def test_class_constants_transpositions_s3():
    s3 = catalog("symmetric", 3)
    cd = conjugacy_data(s3)
    a = class_constants(s3, cd)
    t = next(c for c in range(cd.num_classes) if cd.sizes[c] == 3)
    e = cd.class_of[0]
    # 3 ways to write the identity as a product of two transpositions
    assert a[t][t][e] == 3
    for i in range(cd.num_classes):
        for j in range(cd.num_classes):
            for k in range(cd.num_classes):
                assert a[i][j][k] == brute_force_constant(s3, cd, i, j, k)


def test_class_constants_representative_independent():
    q8 = catalog("quaternion8")
    cd = conjugacy_data(q8)
    a = class_constants(q8, cd)
    for k, cls in enumerate(cd.classes):
        for z in cls:
            for i in range(cd.num_classes):
                for j in range(cd.num_classes):
                    count = sum(
                        1
                        for x in cd.classes[i]
                        for y in cd.classes[j]
                        if q8.mult[x][y] == z
                    )
                    assert count == a[i][j][k]


def test_class_constants_abelian_zero_one():
    g = catalog("cyclic", 6)
    cd = conjugacy_data(g)
    a = class_constants(g, cd)
    for i in range(6):
        for j in range(6):
            for k in range(6):
                expected = 1 if g.mult[i][j] == k else 0
                assert a[i][j][k] == expected


def test_table_z3():
    z3 = catalog("cyclic", 3)
    t = character_table(z3)
    assert t.degrees == (1, 1, 1)
    ctx = context(3)
    rows = {tuple(v for v in row) for row in t.values}
    expected = {
        tuple(ctx.zeta((k * c) % 3) for c in range(3)) for k in range(3)
    }
    assert rows == expected


def test_table_s3():
    s3 = catalog("symmetric", 3)
    t = character_table(s3)
    assert t.degrees == (1, 1, 2)
    cd = t.class_data
    e = cd.class_of[0]
    transp = next(c for c in range(3) if cd.sizes[c] == 3)
    cyc = next(c for c in range(3) if cd.sizes[c] == 2)
    std = t.values[2]
    assert std[e] == 2 and std[transp] == 0 and std[cyc] == -1


def test_table_q8():
    q8 = catalog("quaternion8")
    t = character_table(q8)
    assert t.degrees == (1, 1, 1, 1, 2)
    two_dim = t.values[4]
    e = t.class_data.class_of[0]
    minus_one = t.class_data.class_of[1]
    assert two_dim[e] == 2 and two_dim[minus_one] == -2
    others = [c for c in range(5) if c not in (e, minus_one)]
    assert all(two_dim[c] == 0 for c in others)


def test_table_s5_degrees():
    t = character_table(catalog("symmetric", 5))
    assert sorted(t.degrees) == [1, 1, 4, 4, 5, 5, 6]
    assert sum(d * d for d in t.degrees) == 120


def test_table_a5_degrees():
    t = character_table(catalog("alternating", 5))
    assert sorted(t.degrees) == [1, 3, 3, 4, 5]


@pytest.mark.parametrize("spec", ["cyclic:12", "dihedral:6", "symmetric:4",
                                  "alternating:4", "frobenius21",
                                  "product:cyclic:2,cyclic:4"])
def test_orthogonality_exact(spec):
    g = parse_group_spec(spec)
    t = character_table(g)
    cd = t.class_data
    k = cd.num_classes
    ctx = t.context()
    assert t.num_irreps == k
    assert sum(d * d for d in t.degrees) == g.order
    assert all(g.order % d == 0 for d in t.degrees)
    for i in range(k):
        for j in range(k):
            acc = ctx.zero
            for c in range(k):
                acc = acc + cd.sizes[c] * t.values[i][c] * t.values[j][c].conj()
            assert acc == (g.order if i == j else 0)
    for c in range(k):
        for cp in range(k):
            acc = ctx.zero
            for i in range(k):
                acc = acc + t.values[i][c] * t.values[i][cp].conj()
            expected = Fraction(g.order, cd.sizes[c]) if c == cp else Fraction(0)
            assert acc == ctx.from_fraction(expected)


@pytest.mark.parametrize("spec", ["symmetric:3", "cyclic:6", "quaternion8",
                                  "dihedral:5"])
def test_reproducible_across_primes(spec):
    g = parse_group_spec(spec)
    t1 = character_table(g)
    p2 = _find_prime(g.exponent, g.order, skip=1)
    t2 = character_table(g, prime=p2)
    assert t1.prime != t2.prime
    assert t1.degrees == t2.degrees
    assert t1.values == t2.values


def test_seed_does_not_change_table():
    g = catalog("dihedral", 4)
    assert character_table(g, seed=0).values == character_table(g, seed=99).values


def test_regular_character():
    for spec in ("symmetric:3", "quaternion8"):
        g = parse_group_spec(spec)
        t = character_table(g)
        reg = regular_character(t)
        e = t.class_data.class_of[0]
        for c, v in enumerate(reg):
            assert v == (g.order if c == e else 0)


def test_prime_search():
    assert _find_prime(4, 8) == 13
    assert _find_prime(4, 8, skip=1) == 17
    # p = 1 (mod m) and p > 2 sqrt(order)
    p = _find_prime(6, 24)
    assert p % 6 == 1 and p * p > 4 * 24


def test_invalid_prime_rejected():
    g = catalog("cyclic", 4)
    with pytest.raises(PrimeSearchFailed):
        character_table(g, prime=7)  # 7 != 1 (mod 4)


def test_charpoly_mod_against_determinant_scan():
    # evaluate det(lambda I - A) by elimination mod p at every lambda and
    # compare against the Hessenberg characteristic polynomial
    import random

    from grouplie.chartable import _charpoly_mod

    def det_mod(mat, p):
        m = [row[:] for row in mat]
        n = len(m)
        det = 1
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c] % p), None)
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det = (det * m[c][c]) % p
            inv = pow(m[c][c], p - 2, p)
            for i in range(c + 1, n):
                f = (m[i][c] * inv) % p
                if f:
                    m[i] = [(a - f * b) % p for a, b in zip(m[i], m[c])]
        return det % p

    rng = random.Random(5)
    p = 101
    for n in (2, 4, 6):
        for _ in range(5):
            a = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
            poly = _charpoly_mod(a, p)
            assert len(poly) == n + 1 and poly[-1] == 1
            for lam in range(0, p, 7):
                shifted = [
                    [((lam if i == j else 0) - a[i][j]) % p for j in range(n)]
                    for i in range(n)
                ]
                val = 0
                for c in reversed(poly):
                    val = (val * lam + c) % p
                assert val == det_mod(shifted, p)
