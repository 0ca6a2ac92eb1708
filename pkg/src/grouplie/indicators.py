"""Character indicators and the predicted block decomposition.

Three indicator sums drive everything:

  weighted:  (1/#G) sum_g chi(g^2) conj(alpha(g))
  twisted:   (1/#G) sum_g chi(g tau(g))
  joint:     (1/#G) sum_g conj(alpha(g)) chi(g tau(g))

The joint form specializes to the other two and its sign picks the
orthogonal / symplectic factor type on self-paired irreps.  For irreducible
characters each value is asserted to land in {-1, 0, 1}; anything else
raises IndicatorOutOfRange rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cyclo
from .chartable import CharacterTable
from .errors import AlphaNotReal, IndicatorOutOfRange, PartnerNotFound
from .groups import (
    GroupTable,
    InvolutiveAutomorphism,
    LinearCharacter,
    conjugacy_data,
    identity_automorphism,
)


@dataclass(frozen=True)
class PairingClass:
    """Orbit of an irrep under V -> conj(V) x alpha o tau: size 1 or 2."""

    members: tuple[int, ...]
    kind: str  # "osp" when self-paired, "gl" for swapped pairs


@dataclass(frozen=True)
class Factor:
    kind: str  # "so" | "sp" | "gl"
    n: int     # dimension of the underlying irrep
    dim: int   # contributed Lie algebra dimension

    def render(self) -> str:
        return f"{self.kind}({self.n})"


@dataclass(frozen=True)
class IndicatorReport:
    group_name: str
    order: int
    alpha_label: str
    tau_label: str
    degrees: tuple[int, ...]
    f_alpha: tuple[int, ...]
    c_tau: tuple[int, ...]
    nu: tuple[int, ...]
    partner: tuple[int, ...]
    parity: tuple[str, ...]
    factors: tuple[Factor, ...]
    involutions_plus: int   # |{g : tau(g) = g^-1, alpha(g) = 1}|
    involutions_minus: int  # |{g : tau(g) = g^-1, alpha(g) = -1}|
    dim_m: int
    dim_l_formula: int
    center_dim: int

    @property
    def pairing_classes(self) -> tuple[PairingClass, ...]:
        out = []
        seen = set()
        for i, p in enumerate(self.partner):
            if i in seen:
                continue
            seen.add(i)
            if p == i:
                out.append(PairingClass((i,), "osp"))
            else:
                seen.add(p)
                out.append(PairingClass((i, p), "gl"))
        return tuple(out)

    def factor_of(self, irrep: int) -> Factor:
        for pc, fac in zip(self.pairing_classes, self.factors):
            if irrep in pc.members:
                return fac
        raise PartnerNotFound(f"irrep {irrep} missing from the pairing")

    def to_json_dict(self) -> dict:
        return {
            "group": self.group_name,
            "order": self.order,
            "alpha": self.alpha_label,
            "tau": self.tau_label,
            "irreps": [
                {
                    "degree": self.degrees[i],
                    "F_alpha": self.f_alpha[i],
                    "c_tau": self.c_tau[i],
                    "nu": self.nu[i],
                    "partner": self.partner[i],
                    "parity": self.parity[i],
                    "factor": self.factor_of(i).render(),
                    "factor_dim": self.factor_of(i).dim,
                }
                for i in range(len(self.degrees))
            ],
            "I": self.involutions_plus,
            "J": self.involutions_minus,
            "dim_M": self.dim_m,
            "dim_L_formula": self.dim_l_formula,
            "center_dim": self.center_dim,
        }


def _as_indicator(scaled: cyclo.CycloScalar, n: int, what: str) -> int:
    """Read off v from n*v with v in {-1, 0, 1}; sums stay integral this way."""
    if not scaled:
        return 0
    for target in (-n, n):
        if scaled == target:
            return target // n
    raise IndicatorOutOfRange(f"{n} * {what} = {scaled!r} is outside {{-n, 0, n}}")


def weighted_fs_indicator(table: CharacterTable, alpha: LinearCharacter) -> tuple[int, ...]:
    """Weighted indicator per irrep: (1/#G) sum over classes of
    |c| chi(square class of c) conj(alpha(c))."""
    cd = table.class_data
    n = table.group.order
    weights = [
        alpha.conj_value(cd.representatives[c]) * cd.sizes[c]
        for c in range(cd.num_classes)
    ]
    out = []
    for i in range(table.num_irreps):
        acc = table.context().zero
        for c in range(cd.num_classes):
            acc = acc + weights[c] * table.values[i][cd.square_class[c]]
        out.append(_as_indicator(acc, n, f"F_{alpha.label}(irrep {i})"))
    return tuple(out)


def _twist_weights(table: CharacterTable, alpha: LinearCharacter | None,
                   tau: InvolutiveAutomorphism):
    """Per-class sums of conj(alpha(g)) over g with g*tau(g) in the class."""
    group = table.group
    cd = table.class_data
    ctx = table.context()
    weights = [ctx.zero] * cd.num_classes
    for g in group.elements():
        c = cd.class_of[group.mult[g][tau.mapping[g]]]
        w = ctx.one if alpha is None else alpha.conj_value(g)
        weights[c] = weights[c] + w
    return weights


def kawanaka_indicator(table: CharacterTable, tau: InvolutiveAutomorphism) -> tuple[int, ...]:
    """Twisted indicator per irrep: (1/#G) sum_g chi(g tau(g))."""
    n = table.group.order
    weights = _twist_weights(table, None, tau)
    out = []
    for i in range(table.num_irreps):
        acc = table.context().zero
        for c, w in enumerate(weights):
            if w:
                acc = acc + w * table.values[i][c]
        out.append(_as_indicator(acc, n, f"c_{tau.label}(irrep {i})"))
    return tuple(out)


def joint_indicator(table: CharacterTable, alpha: LinearCharacter,
                    tau: InvolutiveAutomorphism) -> tuple[int, ...]:
    """Joint indicator: (1/#G) sum_g conj(alpha(g)) chi(g tau(g)).

    Specializes to the weighted indicator at tau = id and to the twisted one
    at alpha = trivial.
    """
    n = table.group.order
    weights = _twist_weights(table, alpha, tau)
    out = []
    for i in range(table.num_irreps):
        acc = table.context().zero
        for c, w in enumerate(weights):
            if w:
                acc = acc + w * table.values[i][c]
        out.append(_as_indicator(acc, n, f"nu_({alpha.label},{tau.label})(irrep {i})"))
    return tuple(out)


def pairing(table: CharacterTable, alpha: LinearCharacter,
            tau: InvolutiveAutomorphism) -> tuple[tuple[int, ...], tuple[PairingClass, ...]]:
    """Partner map V -> unique irrep with character alpha * conj(chi) o tau.

    Returns (partner, classes); partner is an involution on irrep indices.
    """
    group = table.group
    cd = table.class_data
    tau_class = tuple(cd.class_of[tau.mapping[r]] for r in cd.representatives)
    alpha_vals = [alpha.value(cd.representatives[c]) for c in range(cd.num_classes)]
    rows = {tuple(v.coeffs for v in row): i for i, row in enumerate(table.values)}
    partner = []
    for i in range(table.num_irreps):
        target = tuple(
            (alpha_vals[c] * table.values[i][tau_class[c]].conj()).coeffs
            for c in range(cd.num_classes)
        )
        j = rows.get(target)
        if j is None:
            raise PartnerNotFound(
                f"no irrep matches alpha * conj(chi_{i}) o tau; table inconsistency"
            )
        partner.append(j)
    for i, j in enumerate(partner):
        if partner[j] != i:
            raise PartnerNotFound("partner map is not an involution")
    classes = []
    seen = set()
    for i, j in enumerate(partner):
        if i in seen:
            continue
        seen.add(i)
        if j == i:
            classes.append(PairingClass((i,), "osp"))
        else:
            seen.add(j)
            classes.append(PairingClass((i, j), "gl"))
    return tuple(partner), tuple(classes)


def involution_counts(group: GroupTable, alpha: LinearCharacter,
                      tau: InvolutiveAutomorphism) -> tuple[int, int]:
    """Counts of g with tau(g) = g^-1 split by alpha(g) = +1 / -1."""
    m = alpha.conductor
    plus = minus = 0
    for g in group.elements():
        if tau.mapping[g] == group.inverse[g]:
            e = alpha.exponents[g]
            if e == 0:
                plus += 1
            elif 2 * e % m == 0:
                minus += 1
            else:
                raise AlphaNotReal(
                    f"alpha({g}) has exponent {e} (mod {m}) on a twisted involution"
                )
    return plus, minus


def predicted_decomposition(table: CharacterTable, alpha: LinearCharacter,
                            tau: InvolutiveAutomorphism):
    """Factor list, predicted dimension and center dimension.

    Self-paired irreps contribute an orthogonal block n(n-1)/2 when the joint
    indicator is +1 and a symplectic block n(n+1)/2 when it is -1; swapped
    pairs contribute a diagonally embedded gl block of dimension n^2.
    """
    nu = joint_indicator(table, alpha, tau)
    partner, classes = pairing(table, alpha, tau)
    factors = []
    dim_m = 0
    for pc in classes:
        i = pc.members[0]
        n = table.degrees[i]
        if pc.kind == "osp":
            if nu[i] == 1:
                fac = Factor("so", n, n * (n - 1) // 2)
            elif nu[i] == -1:
                fac = Factor("sp", n, n * (n + 1) // 2)
            else:
                raise IndicatorOutOfRange(
                    f"self-paired irrep {i} has vanishing joint indicator"
                )
        else:
            if any(nu[j] != 0 for j in pc.members):
                raise IndicatorOutOfRange(
                    f"swapped pair {pc.members} has nonvanishing joint indicator"
                )
            fac = Factor("gl", n, n * n)
        factors.append(fac)
        dim_m += fac.dim
    center_dim = sum(1 for pc in classes if pc.kind == "gl")
    return tuple(factors), dim_m, center_dim, nu, partner


def indicator_report(group: GroupTable, table: CharacterTable,
                     alpha: LinearCharacter,
                     tau: InvolutiveAutomorphism | None = None) -> IndicatorReport:
    tau = tau if tau is not None else identity_automorphism(group)
    factors, dim_m, center_dim, nu, partner = predicted_decomposition(table, alpha, tau)
    f_alpha = weighted_fs_indicator(table, alpha)
    c_tau = kawanaka_indicator(table, tau)
    plus, minus = involution_counts(group, alpha, tau)
    sigma = tuple(group.inverse[t] for t in tau.mapping)
    moved = sum(1 for g in group.elements() if sigma[g] != g)
    fixed_nontrivial = sum(
        1 for g in group.elements() if sigma[g] == g and alpha.exponents[g] != 0
    )
    dim_l_formula = moved // 2 + fixed_nontrivial
    parity = tuple("even" if partner[i] == i else "odd" for i in range(len(partner)))
    return IndicatorReport(
        group_name=group.name,
        order=group.order,
        alpha_label=alpha.label,
        tau_label=tau.label,
        degrees=table.degrees,
        f_alpha=f_alpha,
        c_tau=c_tau,
        nu=nu,
        partner=partner,
        parity=parity,
        factors=factors,
        involutions_plus=plus,
        involutions_minus=minus,
        dim_m=dim_m,
        dim_l_formula=dim_l_formula,
        center_dim=center_dim,
    )


def render_factors(factors) -> str:
    """Compact pretty form, e.g. 'so(1)^4 (+) sp(2)'."""
    counts: list[tuple[str, int]] = []
    for fac in factors:
        key = fac.render()
        if counts and counts[-1][0] == key:
            counts[-1] = (key, counts[-1][1] + 1)
        else:
            counts.append((key, 1))
    parts = [key if mult == 1 else f"{key}^{mult}" for key, mult in counts]
    return " ⊕ ".join(parts) if parts else "0"
