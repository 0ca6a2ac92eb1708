"""Group algebra arithmetic over Q(zeta_m) and the twisted skew subalgebra.

The involutive antiautomorphism g -> alpha(g) tau(g)^-1 extends linearly to
the group algebra; its -1 eigenspace is a Lie subalgebra, spanned by the
elements g - alpha(g) tau(g)^-1.  This module builds that basis exactly,
together with the center generators, the class-averaging projection and
the derived algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cyclo
from .errors import CentralityFailed, GroupMismatch, IncompatiblePair
from .groups import (
    GroupTable,
    InvolutiveAutomorphism,
    LinearCharacter,
    alpha_tau_compatible,
    conjugacy_data,
    identity_automorphism,
)
from .linalg import CycloMatrix, RowSpace


class GroupAlgebraElement:
    """Dense coefficient vector over the delta basis of the group algebra."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: GroupTable, coeffs):
        self.group = group
        self.coeffs = list(coeffs)

    @classmethod
    def zero(cls, group: GroupTable) -> "GroupAlgebraElement":
        z = cyclo.context(group.exponent).zero
        return cls(group, [z] * group.order)

    @classmethod
    def delta(cls, group: GroupTable, g: int) -> "GroupAlgebraElement":
        out = cls.zero(group)
        out.coeffs[g] = cyclo.context(group.exponent).one
        return out

    def _check(self, other: "GroupAlgebraElement"):
        if self.group is not other.group and self.group != other.group:
            raise GroupMismatch("elements live over different groups")

    def support(self):
        return [g for g, c in enumerate(self.coeffs) if c]

    def __add__(self, other):
        self._check(other)
        return GroupAlgebraElement(
            self.group, [a + b if b else a for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        self._check(other)
        return GroupAlgebraElement(
            self.group, [a - b if b else a for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return GroupAlgebraElement(self.group, [-a for a in self.coeffs])

    def scaled(self, s) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.group, [a * s if a else a for a in self.coeffs])

    def __eq__(self, other):
        return (
            isinstance(other, GroupAlgebraElement)
            and self.group == other.group
            and self.coeffs == other.coeffs
        )

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def trace(self) -> cyclo.CycloScalar:
        """Coefficient of the identity."""
        return self.coeffs[self.group.identity]

    def to_json_dict(self) -> dict:
        return {str(g): self.coeffs[g].to_json() for g in self.support()}

    @classmethod
    def from_json_dict(cls, group: GroupTable, data: dict) -> "GroupAlgebraElement":
        out = cls.zero(group)
        m = group.exponent
        for key, coeffs in data.items():
            out.coeffs[int(key)] = cyclo.CycloScalar.from_json(m, coeffs)
        return out

    def __repr__(self):
        terms = [f"({self.coeffs[g]})*d{g}" for g in self.support()]
        return " + ".join(terms) if terms else "0"


def convolve(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    a._check(b)
    out = GroupAlgebraElement.zero(a.group)
    mult = a.group.mult
    coeffs = out.coeffs
    for x, ax in enumerate(a.coeffs):
        if ax:
            row = mult[x]
            for y, by in enumerate(b.coeffs):
                if by:
                    z = row[y]
                    coeffs[z] = coeffs[z] + ax * by
    return out


def bracket(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return convolve(a, b) - convolve(b, a)


@dataclass(frozen=True)
class LieContext:
    """Validated (group, alpha, tau) triple; alpha must absorb tau."""

    group: GroupTable
    alpha: LinearCharacter
    tau: InvolutiveAutomorphism

    def __post_init__(self):
        if len(self.tau.mapping) != self.group.order:
            raise IncompatiblePair("tau does not match the group order")
        if not alpha_tau_compatible(self.alpha, self.tau):
            raise IncompatiblePair(
                f"alpha({self.alpha.label}) o tau({self.tau.label}) != alpha; "
                "the antiautomorphism would not be involutive"
            )
        # sigma(g) = tau(g)^-1 is the basis involution underlying the star map
        sigma = tuple(self.group.inverse[t] for t in self.tau.mapping)
        object.__setattr__(self, "sigma", sigma)

    def label(self) -> str:
        return f"alpha={self.alpha.label}, tau={self.tau.label}"


def make_context(group: GroupTable, alpha: LinearCharacter,
                 tau: InvolutiveAutomorphism | None = None) -> LieContext:
    return LieContext(group, alpha, tau if tau is not None else identity_automorphism(group))


def star(ctx: LieContext, a: GroupAlgebraElement) -> GroupAlgebraElement:
    """The involutive antiautomorphism delta_g -> alpha(g) delta_(tau(g)^-1)."""
    out = GroupAlgebraElement.zero(ctx.group)
    sigma = ctx.sigma
    for g, c in enumerate(a.coeffs):
        if c:
            out.coeffs[sigma[g]] = out.coeffs[sigma[g]] + ctx.alpha.value(g) * c
    return out


def skew_project(ctx: LieContext, a: GroupAlgebraElement) -> GroupAlgebraElement:
    """Projection (a - star(a)) / 2 onto the -1 eigenspace."""
    half = Fraction(1, 2)
    return (a - star(ctx, a)).scaled(half)


def skew_projector_trace(ctx: LieContext) -> Fraction:
    """Trace of the projection as a linear map on the group algebra."""
    total = cyclo.context(ctx.group.exponent).zero
    for g in ctx.group.elements():
        total = total + skew_project(ctx, GroupAlgebraElement.delta(ctx.group, g)).coeffs[g]
    return total.as_fraction()


def census_dimension(ctx: LieContext) -> int:
    """Dimension of the skew subalgebra by counting orbits of g -> tau(g)^-1:

    half the moved points, plus fixed points where alpha(g) != 1.
    """
    moved = sum(1 for g in ctx.group.elements() if ctx.sigma[g] != g)
    fixed_nontrivial = sum(
        1 for g in ctx.group.elements()
        if ctx.sigma[g] == g and ctx.alpha.exponents[g] != 0
    )
    assert moved % 2 == 0
    return moved // 2 + fixed_nontrivial


@dataclass(frozen=True)
class LieBasis:
    """Spanning vectors g - alpha(g) tau(g)^-1, one per orbit of the star map."""

    context: LieContext
    vectors: tuple[GroupAlgebraElement, ...]
    generators_meta: tuple[int, ...]
    dim: int

    def matrix(self) -> CycloMatrix:
        ctx = cyclo.context(self.context.group.exponent)
        return CycloMatrix(
            ctx, [v.coeffs for v in self.vectors], cols=self.context.group.order
        )

    def row_space(self) -> RowSpace:
        cached = self.__dict__.get("_row_space")
        if cached is None:
            cached = self.matrix().row_space()
            object.__setattr__(self, "_row_space", cached)
        return cached


def lie_basis(ctx: LieContext) -> LieBasis:
    group = ctx.group
    sigma = ctx.sigma
    seen = [False] * group.order
    vectors = []
    meta = []
    for g in group.elements():
        if seen[g]:
            continue
        seen[g] = True
        s = sigma[g]
        if s == g:
            if ctx.alpha.exponents[g] == 0:
                continue  # delta_g - delta_g = 0
        else:
            seen[s] = True  # partner vector is proportional
        v = GroupAlgebraElement.delta(group, g)
        v.coeffs[s] = v.coeffs[s] - ctx.alpha.value(g)
        vectors.append(v)
        meta.append(g)
    basis = LieBasis(ctx, tuple(vectors), tuple(meta), len(vectors))
    assert basis.dim == census_dimension(ctx)
    return basis


def plus_fixed_basis(ctx: LieContext) -> list[GroupAlgebraElement]:
    """Basis of the +1 eigenspace of the star map."""
    group = ctx.group
    sigma = ctx.sigma
    seen = [False] * group.order
    out = []
    for g in group.elements():
        if seen[g]:
            continue
        seen[g] = True
        s = sigma[g]
        if s == g:
            if ctx.alpha.exponents[g] != 0:
                continue  # delta_g + alpha(g) delta_g = 0 forces alpha(g) = -1 here
        else:
            seen[s] = True
        v = GroupAlgebraElement.delta(group, g)
        v.coeffs[s] = v.coeffs[s] + ctx.alpha.value(g)
        out.append(v)
    return out


def class_sum(group: GroupTable, class_elements) -> GroupAlgebraElement:
    out = GroupAlgebraElement.zero(group)
    one = cyclo.context(group.exponent).one
    for g in class_elements:
        out.coeffs[g] = one
    return out


def tau_class_map(ctx: LieContext) -> tuple[int, ...]:
    """Class-level map c -> class of tau(rep)."""
    cd = conjugacy_data(ctx.group)
    return tuple(cd.class_of[ctx.tau.mapping[r]] for r in cd.representatives)


def sigma_class_map(ctx: LieContext) -> tuple[int, ...]:
    """Class-level involution c -> class of tau(rep)^-1."""
    cd = conjugacy_data(ctx.group)
    return tuple(cd.class_of[ctx.sigma[r]] for r in cd.representatives)


def center_basis(ctx: LieContext, check: bool = True,
                 basis: "LieBasis | None" = None) -> list[GroupAlgebraElement]:
    """Skew class-sum combinations T_c - alpha(c) T_(sigma c), one per orbit.

    Each element is verified central against the full Lie basis.
    """
    group = ctx.group
    cd = conjugacy_data(group)
    sig = sigma_class_map(ctx)
    out = []
    seen = [False] * cd.num_classes
    for c in range(cd.num_classes):
        if seen[c]:
            continue
        seen[c] = True
        sc = sig[c]
        alpha_c = ctx.alpha.value(cd.representatives[c])
        if sc == c:
            if alpha_c == 1:
                continue
        else:
            seen[sc] = True
        v = class_sum(group, cd.classes[c]) - class_sum(group, cd.classes[sc]).scaled(alpha_c)
        out.append(v)
    if check:
        if basis is None:
            basis = lie_basis(ctx)
        for v in out:
            for u in basis.vectors:
                if not bracket(v, u).is_zero():
                    raise CentralityFailed(
                        f"center candidate is not central in context ({ctx.label()})"
                    )
    return out


def class_projection(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """Class-averaging projection onto the center of the group algebra."""
    group = a.group
    cd = conjugacy_data(group)
    out = GroupAlgebraElement.zero(group)
    for c, elems in enumerate(cd.classes):
        acc = cyclo.context(group.exponent).zero
        for g in elems:
            if a.coeffs[g]:
                acc = acc + a.coeffs[g]
        if acc:
            avg = acc * Fraction(1, len(elems))
            for g in elems:
                out.coeffs[g] = avg
    return out


def derived_algebra_dim(group: GroupTable) -> int:
    """Exact rank of the span of all delta-basis brackets: #G - #classes."""
    ctx = cyclo.context(group.exponent)
    rs = RowSpace(ctx, group.order)
    one = ctx.one
    zero = ctx.zero
    seen_pairs = set()
    for g in group.elements():
        for h in group.elements():
            gh = group.mult[g][h]
            hg = group.mult[h][g]
            if gh == hg or (gh, hg) in seen_pairs:
                continue
            seen_pairs.add((gh, hg))
            seen_pairs.add((hg, gh))
            vec = [zero] * group.order
            vec[gh] = one
            vec[hg] = -one
            rs.add(vec)
    return rs.rank


def left_multiplication_matrix(a: GroupAlgebraElement) -> CycloMatrix:
    """Matrix of x -> a * x in the delta basis (column g is a * delta_g)."""
    group = a.group
    ctx = cyclo.context(group.exponent)
    n = group.order
    cols = []
    for g in group.elements():
        cols.append(convolve(a, GroupAlgebraElement.delta(group, g)).coeffs)
    entries = [[cols[g][h] for g in range(n)] for h in range(n)]
    return CycloMatrix(ctx, entries)
