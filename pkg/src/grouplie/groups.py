"""Finite groups as dense multiplication tables.

Elements are indices 0..n-1 with the identity normalized to 0.  The module
provides validated constructors, a catalog of standard groups, conjugacy
data, linear characters (through the abelianization) and validated
involutive automorphisms.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import cyclo
from .errors import (
    BadParameters,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotHomomorphism,
    NotInvolutive,
    OrderCapExceeded,
    UnknownName,
)

ORDER_CAP = 1024
EXHAUSTIVE_ASSOC_CAP = 256
_ASSOC_SAMPLES = 20000


@dataclass(frozen=True)
class GroupTable:
    """A finite group: multiplication table plus derived element data."""

    name: str
    order: int
    mult: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    exponent: int
    identity: int = 0

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conjugate(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.mult[self.mult[h][g]][self.inverse[h]]

    def elements(self) -> range:
        return range(self.order)

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inverse[g], -k
        out = self.identity
        row = g
        while k:
            if k & 1:
                out = self.mult[out][row]
            row = self.mult[row][row]
            k >>= 1
        return out

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mult[x][g]
            k += 1
        return k

    def is_abelian(self) -> bool:
        cached = self.__dict__.get("_abelian")
        if cached is None:
            cached = all(
                self.mult[a][b] == self.mult[b][a]
                for a in range(self.order)
                for b in range(a + 1, self.order)
            )
            object.__setattr__(self, "_abelian", cached)
        return cached

    def order_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for g in self.elements():
            k = self.element_order(g)
            census[k] = census.get(k, 0) + 1
        return census

    def cyclo_context(self) -> cyclo.CycloContext:
        return cyclo.context(self.exponent)

    def __repr__(self):
        return f"GroupTable({self.name!r}, order={self.order})"


@dataclass(frozen=True)
class ConjugacyData:
    """Conjugacy classes with inverse- and square-class maps."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    inverse_class: tuple[int, ...]
    square_class: tuple[int, ...]
    sizes: tuple[int, ...]
    representatives: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class LinearCharacter:
    """Group homomorphism into the m-th roots of unity, alpha(g) = zeta^exp[g]."""

    conductor: int
    exponents: tuple[int, ...]
    label: str

    def value(self, g: int) -> cyclo.CycloScalar:
        return cyclo.context(self.conductor).zeta(self.exponents[g])

    def conj_value(self, g: int) -> cyclo.CycloScalar:
        return cyclo.context(self.conductor).zeta(-self.exponents[g] % self.conductor)

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def is_real(self) -> bool:
        """True when all values lie in {1, -1}."""
        m = self.conductor
        return all(2 * e % m == 0 for e in self.exponents)

    def pointwise_product(self, other: "LinearCharacter") -> "LinearCharacter":
        m = self.conductor
        exps = tuple((a + b) % m for a, b in zip(self.exponents, other.exponents))
        return LinearCharacter(m, exps, f"{self.label}*{other.label}")

    def kernel_elements(self) -> tuple[int, ...]:
        return tuple(g for g, e in enumerate(self.exponents) if e == 0)


@dataclass(frozen=True)
class InvolutiveAutomorphism:
    """Group automorphism tau with tau o tau = id, stored extensionally."""

    mapping: tuple[int, ...]
    label: str

    def __call__(self, g: int) -> int:
        return self.mapping[g]

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.mapping))


# ---------------------------------------------------------------------------
# constructors


def from_mult_table(table, name: str = "G", *, assoc_samples: int = _ASSOC_SAMPLES) -> GroupTable:
    """Validate a multiplication table and normalize the identity to index 0."""
    n = len(table)
    if n == 0:
        raise BadParameters("empty multiplication table")
    if n > ORDER_CAP:
        raise OrderCapExceeded(f"order {n} exceeds cap {ORDER_CAP}")
    rows = [list(r) for r in table]
    for r in rows:
        if len(r) != n:
            raise BadParameters("multiplication table is not square")
        for x in r:
            if not (0 <= x < n):
                raise BadParameters(f"table entry {x} out of range [0, {n})")

    identity = None
    for e in range(n):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element")
    if identity != 0:
        perm = list(range(n))
        perm[0], perm[identity] = identity, 0
        rows = [[perm[rows[perm[a]][perm[b]]] for b in range(n)] for a in range(n)]
        identity = 0

    arr = np.array(rows, dtype=np.int64)
    if n <= EXHAUSTIVE_ASSOC_CAP:
        for a in range(n):
            left = arr[arr[a]]          # left[b, c] = (a*b)*c
            right = arr[a][arr]         # right[b, c] = a*(b*c)
            if not np.array_equal(left, right):
                b, c = map(int, np.argwhere(left != right)[0])
                raise NotAssociative((a, b, c))
    else:
        rng = random.Random(0xA550C)
        for _ in range(assoc_samples):
            a, b, c = (rng.randrange(n) for _ in range(3))
            if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                raise NotAssociative((a, b, c))

    inverse = []
    for g in range(n):
        inv = next((h for h in range(n) if rows[g][h] == 0 and rows[h][g] == 0), None)
        if inv is None:
            raise NoInverse(g)
        inverse.append(inv)

    mult = tuple(tuple(r) for r in rows)
    group = GroupTable(name, n, mult, tuple(inverse), 1)
    exponent = 1
    for g in range(n):
        exponent = math.lcm(exponent, group.element_order(g))
    return GroupTable(name, n, mult, tuple(inverse), exponent)


def from_permutation_generators(generators, name: str = "G", *, cap: int = ORDER_CAP) -> GroupTable:
    """Breadth-first closure of permutations of {0..k-1} under composition.

    Composition is (p * q)(x) = p(q(x)).
    """
    gens = [tuple(g) for g in generators]
    if not gens:
        raise BadParameters("at least one generator required")
    k = len(gens[0])
    for g in gens:
        if sorted(g) != list(range(k)):
            raise BadParameters(f"generator {g} is not a permutation of 0..{k - 1}")
    ident = tuple(range(k))
    index = {ident: 0}
    elems = [ident]
    queue = [ident]
    while queue:
        p = queue.pop(0)
        for g in gens:
            q = tuple(p[g[i]] for i in range(k))  # p o g
            if q not in index:
                if len(elems) >= cap:
                    raise OrderCapExceeded(f"closure exceeds cap {cap}")
                index[q] = len(elems)
                elems.append(q)
                queue.append(q)
    n = len(elems)
    table = [
        [index[tuple(p[q[i]] for i in range(k))] for q in elems]
        for p in elems
    ]
    return from_mult_table(table, name)


def _permutation_group(perms, name: str) -> GroupTable:
    index = {p: i for i, p in enumerate(perms)}
    k = len(perms[0])
    table = [
        [index[tuple(p[q[i]] for i in range(k))] for q in perms]
        for p in perms
    ]
    return from_mult_table(table, name)


def cyclic_group(n: int) -> GroupTable:
    if not 1 <= n <= ORDER_CAP:
        raise BadParameters(f"cyclic order {n} out of range")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return from_mult_table(table, f"Z/{n}")


def dihedral_group(n: int) -> GroupTable:
    """Symmetries of the regular n-gon, order 2n; element i + n*j is r^i s^j."""
    if n < 3 or 2 * n > ORDER_CAP:
        raise BadParameters(f"dihedral parameter {n} out of range (need 3 <= n)")
    size = 2 * n

    def mul(a, b):
        i1, j1 = a % n, a // n
        i2, j2 = b % n, b // n
        i = (i1 + (i2 if j1 == 0 else -i2)) % n
        return i + n * ((j1 + j2) % 2)

    table = [[mul(a, b) for b in range(size)] for a in range(size)]
    return from_mult_table(table, f"D{n}")


def symmetric_group(n: int) -> GroupTable:
    if not 1 <= n <= 5:
        raise BadParameters("symmetric groups supported for n <= 5")
    perms = sorted(itertools.permutations(range(n)))
    return _permutation_group(perms, f"S{n}")


def alternating_group(n: int) -> GroupTable:
    if not 3 <= n <= 5:
        raise BadParameters("alternating groups supported for 3 <= n <= 5")

    def sign(p):
        s = 1
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                if p[i] > p[j]:
                    s = -s
        return s

    perms = sorted(p for p in itertools.permutations(range(n)) if sign(p) == 1)
    return _permutation_group(perms, f"A{n}")


def quaternion_group() -> GroupTable:
    """Unit quaternions {1,-1,i,-i,j,-j,k,-k}, indexed in that order."""
    units = {0: (1, "e"), 1: (-1, "e"), 2: (1, "i"), 3: (-1, "i"),
             4: (1, "j"), 5: (-1, "j"), 6: (1, "k"), 7: (-1, "k")}
    prod = {
        ("e", "e"): (1, "e"), ("e", "i"): (1, "i"), ("e", "j"): (1, "j"), ("e", "k"): (1, "k"),
        ("i", "e"): (1, "i"), ("j", "e"): (1, "j"), ("k", "e"): (1, "k"),
        ("i", "i"): (-1, "e"), ("j", "j"): (-1, "e"), ("k", "k"): (-1, "e"),
        ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
    }
    encode = {(s, b): idx for idx, (s, b) in units.items()}

    def mul(a, b):
        sa, ba = units[a]
        sb, bb = units[b]
        s, base = prod[(ba, bb)]
        return encode[(sa * sb * s, base)]

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    return from_mult_table(table, "Q8")


def frobenius21_group() -> GroupTable:
    """The nonabelian group of order 21: Z/7 twisted by the order-3 action a -> 2a."""
    def mul(x, y):
        a1, b1 = x % 7, x // 7
        a2, b2 = y % 7, y // 7
        return (a1 + pow(2, b1, 7) * a2) % 7 + 7 * ((b1 + b2) % 3)

    table = [[mul(x, y) for y in range(21)] for x in range(21)]
    return from_mult_table(table, "Z/7:Z/3")


def direct_product(g1: GroupTable, g2: GroupTable, name: str | None = None) -> GroupTable:
    n1, n2 = g1.order, g2.order
    if n1 * n2 > ORDER_CAP:
        raise OrderCapExceeded(f"product order {n1 * n2} exceeds cap {ORDER_CAP}")
    table = [
        [g1.mult[a1][b1] * n2 + g2.mult[a2][b2]
         for b1 in range(n1) for b2 in range(n2)]
        for a1 in range(n1) for a2 in range(n2)
    ]
    return from_mult_table(table, name or f"{g1.name}x{g2.name}")


def semidirect_product(g: GroupTable, tau: InvolutiveAutomorphism,
                       name: str | None = None) -> GroupTable:
    """Extension of g by the order-2 group acting through tau; order 2*#g.

    Element g + i*#g is the pair (g, tau^i); (g, i)(h, j) = (g*tau^i(h), i+j).
    """
    n = g.order
    if 2 * n > ORDER_CAP:
        raise OrderCapExceeded(f"extension order {2 * n} exceeds cap {ORDER_CAP}")

    def mul(x, y):
        a, i = x % n, x // n
        b, j = y % n, y // n
        bb = b if i == 0 else tau.mapping[b]
        return g.mult[a][bb] + n * ((i + j) % 2)

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    return from_mult_table(table, name or f"{g.name}:<{tau.label}>")


def catalog(name: str, *params) -> GroupTable:
    """Construct a named group: cyclic n, dihedral n, symmetric n, alternating n,
    quaternion8, frobenius21, direct_product(groups...), semidirect_product(G, tau)."""
    try:
        if name == "cyclic":
            return cyclic_group(int(params[0]))
        if name == "dihedral":
            return dihedral_group(int(params[0]))
        if name == "symmetric":
            return symmetric_group(int(params[0]))
        if name == "alternating":
            return alternating_group(int(params[0]))
        if name == "quaternion8":
            return quaternion_group()
        if name == "frobenius21":
            return frobenius21_group()
        if name == "direct_product":
            groups = list(params)
            if len(groups) < 2:
                raise BadParameters("direct_product needs at least two factors")
            out = groups[0]
            for h in groups[1:]:
                out = direct_product(out, h)
            return out
        if name == "semidirect_product":
            return semidirect_product(params[0], params[1])
    except IndexError:
        raise BadParameters(f"missing parameters for catalog name {name!r}") from None
    raise UnknownName(f"unknown catalog name {name!r}")


# ---------------------------------------------------------------------------
# conjugacy data


def conjugacy_data(group: GroupTable) -> ConjugacyData:
    cached = group.__dict__.get("_conjugacy")
    if cached is not None:
        return cached
    n = group.order
    class_of = [-1] * n
    classes: list[tuple[int, ...]] = []
    for g in range(n):
        if class_of[g] >= 0:
            continue
        orbit = sorted({group.conjugate(h, g) for h in range(n)})
        idx = len(classes)
        for x in orbit:
            class_of[x] = idx
        classes.append(tuple(orbit))
    reps = tuple(c[0] for c in classes)
    inverse_class = tuple(class_of[group.inverse[r]] for r in reps)
    square_class = tuple(class_of[group.mult[r][r]] for r in reps)
    sizes = tuple(len(c) for c in classes)
    data = ConjugacyData(
        classes=tuple(classes),
        class_of=tuple(class_of),
        inverse_class=inverse_class,
        square_class=square_class,
        sizes=sizes,
        representatives=reps,
    )
    object.__setattr__(group, "_conjugacy", data)
    return data


# ---------------------------------------------------------------------------
# linear characters


def _commutator_subgroup(group: GroupTable) -> tuple[int, ...]:
    n = group.order
    gens = set()
    for g in range(n):
        for h in range(n):
            c = group.mult[group.mult[group.inverse[g]][group.inverse[h]]][group.mult[g][h]]
            gens.add(c)
    return subgroup_closure(group, gens)


def subgroup_closure(group: GroupTable, generators) -> tuple[int, ...]:
    """Elements of the subgroup generated by the given elements (sorted)."""
    elems = {group.identity}
    queue = [group.identity]
    gens = sorted(set(generators))
    while queue:
        x = queue.pop()
        for g in gens:
            y = group.mult[x][g]
            if y not in elems:
                elems.add(y)
                queue.append(y)
    return tuple(sorted(elems))


def subgroup_table(group: GroupTable, elements, name: str | None = None):
    """Reindexed GroupTable on a subgroup plus the embedding into the parent.

    Returns (subgroup, embed) where embed[i] is the parent index of element i.
    """
    embed = tuple(sorted(elements))
    pos = {g: i for i, g in enumerate(embed)}
    table = []
    for a in embed:
        row = []
        for b in embed:
            c = group.mult[a][b]
            if c not in pos:
                raise BadParameters("element set is not closed under multiplication")
            row.append(pos[c])
        table.append(row)
    sub = from_mult_table(table, name or f"{group.name}|{len(embed)}")
    return sub, embed


def kernel_subgroup(group: GroupTable, alpha: LinearCharacter):
    return subgroup_table(group, alpha.kernel_elements(), name=f"Ker({alpha.label})")


def _quotient_table(group: GroupTable, normal_elements: tuple[int, ...]) -> tuple[GroupTable, tuple[int, ...]]:
    """Quotient by a normal subgroup; returns (quotient, coset_of)."""
    n = group.order
    in_k = set(normal_elements)
    coset_of = [-1] * n
    reps = []
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        idx = len(reps)
        reps.append(g)
        for k in in_k:
            coset_of[group.mult[g][k]] = idx
    q = len(reps)
    table = [[coset_of[group.mult[a][b]] for b in reps] for a in reps]
    return from_mult_table(table, f"{group.name}/[,]"), tuple(coset_of)


def _abelian_character_exponents(q_group: GroupTable, m: int) -> list[tuple[int, ...]]:
    """All characters of an abelian group as exponent vectors mod m.

    Characters are extended along a chain of subgroups: adjoining an element
    a of relative order k multiplies the count by k, each extension solving
    k*s = t (mod m) for the exponent s at a.
    """
    n = q_group.order
    in_h = [False] * n
    in_h[0] = True
    h_elems = [0]
    chars: list[dict[int, int]] = [{0: 0}]
    while len(h_elems) < n:
        a = next(g for g in range(n) if not in_h[g])
        k = 1
        x = a
        while not in_h[x]:
            x = q_group.mult[x][a]
            k += 1
        a_to_k = x  # a^k, lands in the current subgroup
        powers = [0]
        for _ in range(k - 1):
            powers.append(q_group.mult[powers[-1]][a])
        new_chars = []
        for chi in chars:
            t = chi[a_to_k]
            assert t % k == 0 and m % k == 0
            base = t // k
            for j in range(k):
                s = (base + j * (m // k)) % m
                ext = dict(chi)
                for u in range(1, k):
                    pu = powers[u]
                    for h in h_elems:
                        ext[q_group.mult[pu][h]] = (u * s + chi[h]) % m
                new_chars.append(ext)
        for u in range(1, k):
            pu = powers[u]
            for h in list(h_elems):
                y = q_group.mult[pu][h]
                if not in_h[y]:
                    in_h[y] = True
                    h_elems.append(y)
        chars = new_chars
    assert len(chars) == n
    return [tuple(chi[g] for g in range(n)) for chi in chars]


def linear_characters(group: GroupTable) -> tuple[LinearCharacter, ...]:
    """All homomorphisms into Q(zeta_m)^x, m the group exponent.

    Computed on the abelianization; the count is the index of the commutator
    subgroup.
    """
    cached = group.__dict__.get("_linear_characters")
    if cached is not None:
        return cached
    m = group.exponent
    commutators = _commutator_subgroup(group)
    quotient, coset_of = _quotient_table(group, commutators)
    exps = _abelian_character_exponents(quotient, m)
    pulled = sorted(tuple(e[coset_of[g]] for g in range(group.order)) for e in exps)
    real_nontrivial = [
        e for e in pulled if any(e) and all(2 * x % m == 0 for x in e)
    ]
    chars = []
    lin_idx = 0
    for e in pulled:
        if not any(e):
            label = "trivial"
        elif len(real_nontrivial) == 1 and e == real_nontrivial[0]:
            label = "sign"
        else:
            lin_idx += 1
            label = f"lin{lin_idx}"
        chars.append(LinearCharacter(m, e, label))
    result = tuple(chars)
    object.__setattr__(group, "_linear_characters", result)
    return result


def find_character(group: GroupTable, label: str) -> LinearCharacter:
    chars = linear_characters(group)
    for c in chars:
        if c.label == label:
            return c
    available = ", ".join(c.label for c in chars)
    raise UnknownName(f"no linear character {label!r} on {group.name}; available: {available}")


# ---------------------------------------------------------------------------
# automorphisms


def validate_automorphism(group: GroupTable, mapping, label: str = "tau") -> InvolutiveAutomorphism:
    n = group.order
    mapping = tuple(mapping)
    if len(mapping) != n or sorted(mapping) != list(range(n)):
        raise BadParameters(f"{label} is not a permutation of 0..{n - 1}")
    for g in range(n):
        for h in range(n):
            if mapping[group.mult[g][h]] != group.mult[mapping[g]][mapping[h]]:
                raise NotHomomorphism((g, h), label)
    for g in range(n):
        if mapping[mapping[g]] != g:
            raise NotInvolutive(g, label)
    return InvolutiveAutomorphism(mapping, label)


def identity_automorphism(group: GroupTable) -> InvolutiveAutomorphism:
    return InvolutiveAutomorphism(tuple(range(group.order)), "id")


def inversion_automorphism(group: GroupTable) -> InvolutiveAutomorphism:
    """g -> g^-1; a homomorphism exactly when the group is abelian."""
    return validate_automorphism(group, group.inverse, "inv")


def conjugation_map(group: GroupTable, h: int) -> tuple[int, ...]:
    return tuple(group.conjugate(h, g) for g in group.elements())


def alpha_tau_compatible(alpha: LinearCharacter, tau: InvolutiveAutomorphism) -> bool:
    return all(alpha.exponents[tau.mapping[g]] == alpha.exponents[g]
               for g in range(len(tau.mapping)))


# ---------------------------------------------------------------------------
# parsing / IO


def group_from_json(data: dict) -> GroupTable:
    name = data.get("name", "G")
    if "table" in data:
        return from_mult_table(data["table"], name)
    if "generators" in data:
        return from_permutation_generators(data["generators"], name)
    raise BadParameters("group JSON needs a 'table' or 'generators' field")


def _load_tau(group: GroupTable, spec: str) -> InvolutiveAutomorphism:
    if spec == "id":
        return identity_automorphism(group)
    if spec == "inv":
        return inversion_automorphism(group)
    path = spec[1:] if spec.startswith("@") else spec
    if spec.startswith("auto:"):
        path = spec[len("auto:"):].lstrip("@")
    mapping = json.loads(Path(path).read_text())
    return validate_automorphism(group, mapping, label=Path(path).stem)


def parse_group_spec(spec: str) -> GroupTable:
    """Resolve a CLI group spec: catalog names, product/semidirect syntax, or
    a JSON file (path ending in .json, optionally prefixed with @)."""
    spec = spec.strip()
    if spec == "quaternion8":
        return quaternion_group()
    if spec == "frobenius21":
        return frobenius21_group()
    if spec.startswith("product:"):
        parts = spec[len("product:"):].split(",")
        return catalog("direct_product", *[parse_group_spec(p) for p in parts])
    if spec.startswith("semidirect:"):
        body = spec[len("semidirect:"):]
        if "," not in body:
            raise BadParameters("semidirect spec needs '<group>,<tau>'")
        gspec, tspec = body.rsplit(",", 1)
        g = parse_group_spec(gspec)
        return semidirect_product(g, _load_tau(g, tspec))
    if spec.startswith("@") or spec.endswith(".json"):
        path = spec[1:] if spec.startswith("@") else spec
        return group_from_json(json.loads(Path(path).read_text()))
    if ":" in spec:
        name, _, arg = spec.partition(":")
        if name in ("cyclic", "dihedral", "symmetric", "alternating"):
            try:
                n = int(arg)
            except ValueError:
                raise BadParameters(f"bad parameter {arg!r} for {name}") from None
            return catalog(name, n)
    raise UnknownName(f"unrecognized group spec {spec!r}")
