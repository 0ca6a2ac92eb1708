"""Theorem-checking pipeline.

For each (group, alpha, tau) context the exact construction of the skew
subalgebra is compared against the character-theoretic prediction:

  1. dimension by exact rank = dimension by element census = predicted sum
     of factor dimensions;
  2. Lie closure of the constructed basis;
  3. the skew class-sum generators are central, independent, and count
     exactly the predicted center dimension;
  4. #G - 2 dim = I - J (the signed count of twisted involutions);
  5. the class-side and irrep-side fixed-point counts of the star map agree:
     |{c : alpha(c) = 1, c* = c}| - |{c : alpha(c) = -1, c* = c}|
       = |{V : V = partner(V)}|.

A failing check is reported as an implementation bug: the underlying
identities are theorems.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import cyclo
from .chartable import CharacterTable, character_table
from .errors import BadParameters, CentralityFailed, VerificationFailed
from .groups import (
    GroupTable,
    InvolutiveAutomorphism,
    LinearCharacter,
    alpha_tau_compatible,
    catalog,
    conjugacy_data,
    identity_automorphism,
    inversion_automorphism,
    kernel_subgroup,
    linear_characters,
    semidirect_product,
)
from .indicators import (
    Factor,
    IndicatorReport,
    indicator_report,
    kawanaka_indicator,
    weighted_fs_indicator,
)
from .liealg import (
    LieContext,
    bracket,
    center_basis,
    class_sum,
    convolve,
    lie_basis,
    make_context,
    plus_fixed_basis,
    sigma_class_map,
)
from .linalg import CycloMatrix, intersect, row_spaces_equal


@dataclass(frozen=True)
class LieReport:
    group_name: str
    order: int
    alpha_label: str
    tau_label: str
    dim_l_rank: int
    dim_l_formula: int
    dim_m_predicted: int
    center_dim_exact: int
    center_dim_predicted: int
    closure_ok: bool
    centrality_ok: bool
    orthogonality_ok: bool
    dims_ok: bool
    bookkeeping_ok: bool
    class_count_ok: bool
    clifford_ok: bool | None
    kawanaka_ok: bool | None
    factors: tuple[Factor, ...]
    seconds: float

    @property
    def all_ok(self) -> bool:
        required = [
            self.dims_ok,
            self.closure_ok,
            self.centrality_ok,
            self.orthogonality_ok,
            self.bookkeeping_ok,
            self.class_count_ok,
        ]
        optional = [x for x in (self.clifford_ok, self.kawanaka_ok) if x is not None]
        return all(required) and all(optional)

    def first_failure(self) -> str | None:
        for name in ("dims_ok", "closure_ok", "centrality_ok", "orthogonality_ok",
                     "bookkeeping_ok", "class_count_ok", "clifford_ok", "kawanaka_ok"):
            value = getattr(self, name)
            if value is False:
                return name
        return None

    def to_json_dict(self, include_timing: bool = False) -> dict:
        out = {
            "group": self.group_name,
            "order": self.order,
            "alpha": self.alpha_label,
            "tau": self.tau_label,
            "dim_L_rank": self.dim_l_rank,
            "dim_L_formula": self.dim_l_formula,
            "dim_M_predicted": self.dim_m_predicted,
            "center_dim_exact": self.center_dim_exact,
            "center_dim_predicted": self.center_dim_predicted,
            "checks": {
                "dims": self.dims_ok,
                "closure": self.closure_ok,
                "centrality": self.centrality_ok,
                "orthogonality": self.orthogonality_ok,
                "bookkeeping": self.bookkeeping_ok,
                "class_count": self.class_count_ok,
                "clifford": self.clifford_ok,
                "kawanaka": self.kawanaka_ok,
            },
            "factors": [[f.kind, f.n, f.dim] for f in self.factors],
            "all_ok": self.all_ok,
        }
        if include_timing:
            out["seconds"] = round(self.seconds, 6)
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "LieReport":
        checks = data["checks"]
        return cls(
            group_name=data["group"],
            order=data["order"],
            alpha_label=data["alpha"],
            tau_label=data["tau"],
            dim_l_rank=data["dim_L_rank"],
            dim_l_formula=data["dim_L_formula"],
            dim_m_predicted=data["dim_M_predicted"],
            center_dim_exact=data["center_dim_exact"],
            center_dim_predicted=data["center_dim_predicted"],
            closure_ok=checks["closure"],
            centrality_ok=checks["centrality"],
            orthogonality_ok=checks["orthogonality"],
            dims_ok=checks["dims"],
            bookkeeping_ok=checks["bookkeeping"],
            class_count_ok=checks["class_count"],
            clifford_ok=checks["clifford"],
            kawanaka_ok=checks["kawanaka"],
            factors=tuple(Factor(k, n, d) for k, n, d in data["factors"]),
            seconds=0.0,
        )


def _closure_ok(basis) -> bool:
    rs = basis.row_space()
    vecs = basis.vectors
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if not rs.contains(bracket(vecs[i], vecs[j]).coeffs):
                return False
    return True


def _orthogonality_ok(ctx: LieContext, basis) -> bool:
    """Trace form t(u*s) vanishes between the -1 and +1 eigenspaces."""
    for u in basis.vectors:
        for s in plus_fixed_basis(ctx):
            if convolve(u, s).trace():
                return False
    return True


def _center_data(ctx: LieContext, report: IndicatorReport, basis):
    """(exact count, centrality flag, class-count identity flag)."""
    group = ctx.group
    cd = conjugacy_data(group)
    sig = sigma_class_map(ctx)
    try:
        gens = center_basis(ctx, check=True, basis=basis)
        central = True
    except CentralityFailed:
        gens = center_basis(ctx, check=False)
        central = False
    # independence of the full eligible generator set, both orbit orders
    ctx_f = cyclo.context(group.exponent)
    rows = []
    for c in range(cd.num_classes):
        sc = sig[c]
        alpha_c = ctx.alpha.value(cd.representatives[c])
        if sc == c and alpha_c == 1:
            continue
        v = class_sum(group, cd.classes[c]) - class_sum(group, cd.classes[sc]).scaled(alpha_c)
        rows.append(v.coeffs)
    exact = CycloMatrix(ctx_f, rows, cols=group.order).rank() if rows else 0
    if exact != len(gens):
        central = False
    # fixed-class counts vs self-paired irreps
    m = ctx.alpha.conductor
    plus_classes = minus_classes = 0
    for c in range(cd.num_classes):
        if sig[c] == c:
            e = ctx.alpha.exponents[cd.representatives[c]]
            if e == 0:
                plus_classes += 1
            else:
                assert 2 * e % m == 0
                minus_classes += 1
    self_paired = sum(1 for i, p in enumerate(report.partner) if p == i)
    class_count_ok = (plus_classes - minus_classes) == self_paired
    return exact, central, class_count_ok


def verify_theorem(group: GroupTable, alpha: LinearCharacter,
                   tau: InvolutiveAutomorphism | None = None, *,
                   table: CharacterTable | None = None,
                   seed: int = 0,
                   raise_on_failure: bool = True) -> LieReport:
    t0 = time.perf_counter()
    tau = tau if tau is not None else identity_automorphism(group)
    ctx = make_context(group, alpha, tau)
    if table is None:
        table = character_table(group, seed=seed)
    report = indicator_report(group, table, alpha, tau)

    basis = lie_basis(ctx)
    dim_rank = basis.matrix().rank()
    dims_ok = dim_rank == report.dim_l_formula == report.dim_m
    closure = _closure_ok(basis)
    orth = _orthogonality_ok(ctx, basis)
    center_exact, central, class_count_ok = _center_data(ctx, report, basis)
    center_ok = central and center_exact == report.center_dim
    bookkeeping = (group.order - 2 * dim_rank) == (
        report.involutions_plus - report.involutions_minus
    )

    out = LieReport(
        group_name=group.name,
        order=group.order,
        alpha_label=alpha.label,
        tau_label=tau.label,
        dim_l_rank=dim_rank,
        dim_l_formula=report.dim_l_formula,
        dim_m_predicted=report.dim_m,
        center_dim_exact=center_exact,
        center_dim_predicted=report.center_dim,
        closure_ok=closure,
        centrality_ok=center_ok,
        orthogonality_ok=orth,
        dims_ok=dims_ok,
        bookkeeping_ok=bookkeeping,
        class_count_ok=class_count_ok,
        clifford_ok=None,
        kawanaka_ok=None,
        factors=report.factors,
        seconds=time.perf_counter() - t0,
    )
    if raise_on_failure and not out.all_ok:
        raise VerificationFailed(
            out.first_failure() or "unknown",
            f"context ({group.name}, {alpha.label}, {tau.label})",
        )
    return out


@dataclass(frozen=True)
class CliffordResult:
    group_name: str
    alpha_label: str
    kernel_order: int
    dim_kernel: int
    dim_intersection: int
    ok: bool


def verify_clifford(group: GroupTable, alpha: LinearCharacter, *,
                    raise_on_failure: bool = True) -> CliffordResult:
    """Exact subspace equality of L(Ker alpha) and L(G) & L_alpha(G)."""
    if alpha.is_trivial():
        raise BadParameters("clifford check needs a nontrivial character")
    sub, embed = kernel_subgroup(group, alpha)
    trivial = next(c for c in linear_characters(group) if c.is_trivial())

    ctx_f = cyclo.context(group.exponent)
    basis_g = lie_basis(make_context(group, trivial))
    basis_a = lie_basis(make_context(group, alpha))
    mat_g = basis_g.matrix()
    mat_a = basis_a.matrix()
    inter = intersect(mat_g, mat_a)

    sub_trivial = next(c for c in linear_characters(sub) if c.is_trivial())
    rows = []
    for v in lie_basis(make_context(sub, sub_trivial)).vectors:
        big = [ctx_f.zero] * group.order
        for h, coeff in enumerate(v.coeffs):
            if coeff:
                big[embed[h]] = coeff.embed(ctx_f)
        rows.append(big)
    mat_h = CycloMatrix(ctx_f, rows, cols=group.order)

    ok = row_spaces_equal(mat_h, inter)
    result = CliffordResult(
        group_name=group.name,
        alpha_label=alpha.label,
        kernel_order=sub.order,
        dim_kernel=mat_h.rank(),
        dim_intersection=inter.rank(),
        ok=ok,
    )
    if raise_on_failure and not ok:
        raise VerificationFailed("clifford", f"({group.name}, {alpha.label})")
    return result


@dataclass(frozen=True)
class KawanakaResult:
    group_name: str
    tau_label: str
    extension_name: str
    rows: tuple[dict, ...]
    ok: bool


def verify_kawanaka(group: GroupTable, tau: InvolutiveAutomorphism, *,
                    seed: int = 0,
                    table: CharacterTable | None = None,
                    raise_on_failure: bool = True) -> KawanakaResult:
    """Check 2 F_eps(chi) = F_1(Res chi) - c_tau(Res chi) on the tau-extension.

    The extension is G extended by the order-2 group acting through tau; eps
    is its order-2 character with kernel the embedded copy of G.  Split
    restrictions additionally satisfy c_tau(chi+) = c_tau(chi-) and
    F(chi+) = F(chi-).
    """
    ext = semidirect_product(group, tau)
    table_ext = character_table(ext, seed=seed)
    cd_ext = conjugacy_data(ext)
    n = group.order

    eps = None
    for cand in linear_characters(ext):
        if cand.kernel_elements() == tuple(range(n)):
            eps = cand
            break
    if eps is None:
        raise VerificationFailed("kawanaka", "no order-2 character with kernel G")

    f_eps = weighted_fs_indicator(table_ext, eps)

    if table is None:
        table = character_table(group, seed=seed)
    cd = conjugacy_data(group)
    ctx_ext = table_ext.context()

    # per-class count of elements g with g*tau(g) in the class
    twist_counts = [0] * cd.num_classes
    for g in group.elements():
        twist_counts[cd.class_of[group.mult[g][tau.mapping[g]]]] += 1
    gconj_emb = [
        [v.conj().embed(ctx_ext) for v in row] for row in table.values
    ]
    rows = []
    ok = True
    for i in range(table_ext.num_irreps):
        res = [
            table_ext.values[i][cd_ext.class_of[cd.representatives[c]]]
            for c in range(cd.num_classes)
        ]
        # n * F_1 and n * c_tau of the restriction, kept integral
        nf1 = ctx_ext.zero
        for c in range(cd.num_classes):
            nf1 = nf1 + cd.sizes[c] * res[cd.square_class[c]]
        nctau = ctx_ext.zero
        for c in range(cd.num_classes):
            if twist_counts[c]:
                nctau = nctau + twist_counts[c] * res[c]
        identity_ok = ctx_ext.from_fraction(2 * f_eps[i] * n) == nf1 - nctau

        # decompose the restriction into irreducibles of G
        mults = []
        for j in range(table.num_irreps):
            acc = ctx_ext.zero
            for c in range(cd.num_classes):
                acc = acc + cd.sizes[c] * res[c] * gconj_emb[j][c]
            mults.append(acc.as_fraction() / n)
        assert all(mu.denominator == 1 and mu >= 0 for mu in mults)
        components = [j for j, mu in enumerate(mults) if mu]
        split_ok = True
        if len(components) == 2 and all(mults[j] == 1 for j in components):
            jp, jm = components
            ctau_g = kawanaka_indicator(table, tau)
            f1_g = weighted_fs_indicator(table, next(
                c for c in linear_characters(group) if c.is_trivial()
            ))
            split_ok = ctau_g[jp] == ctau_g[jm] and f1_g[jp] == f1_g[jm]
        row_ok = identity_ok and split_ok
        ok = ok and row_ok
        rows.append({
            "irrep": i,
            "degree": table_ext.degrees[i],
            "F_eps": f_eps[i],
            "identity_ok": identity_ok,
            "split_components": components,
            "split_ok": split_ok,
        })

    result = KawanakaResult(group.name, tau.label, ext.name, tuple(rows), ok)
    if raise_on_failure and not ok:
        raise VerificationFailed("kawanaka", f"({group.name}, tau={tau.label})")
    return result


# ---------------------------------------------------------------------------
# catalog and suite


def default_catalog() -> list[GroupTable]:
    """The stock verification targets (orders 2..120)."""
    groups: list[GroupTable] = []
    for k in range(2, 25):
        groups.append(catalog("cyclic", k))
    for k in range(3, 13):
        groups.append(catalog("dihedral", k))
    groups.append(catalog("symmetric", 3))
    groups.append(catalog("symmetric", 4))
    groups.append(catalog("alternating", 4))
    groups.append(catalog("quaternion8"))
    groups.append(catalog("direct_product", catalog("cyclic", 2), catalog("cyclic", 4)))
    groups.append(catalog("direct_product", catalog("cyclic", 2),
                          catalog("cyclic", 2), catalog("cyclic", 2)))
    groups.append(catalog("direct_product", catalog("cyclic", 3), catalog("cyclic", 3)))
    groups.append(catalog("frobenius21"))
    groups.append(catalog("alternating", 5))
    groups.append(catalog("symmetric", 5))
    return groups


def curated_taus(group: GroupTable) -> list[InvolutiveAutomorphism]:
    """Identity everywhere; inversion wherever it is an automorphism."""
    taus = [identity_automorphism(group)]
    if group.is_abelian() and group.exponent > 2:
        taus.append(inversion_automorphism(group))
    return taus


@dataclass
class SuiteResult:
    reports: list[LieReport] = field(default_factory=list)
    clifford: list[CliffordResult] = field(default_factory=list)
    kawanaka: list[KawanakaResult] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return (
            all(r.all_ok for r in self.reports)
            and all(r.ok for r in self.clifford)
            and all(r.ok for r in self.kawanaka)
        )

    @property
    def contexts(self) -> int:
        return len(self.reports)


def run_suite(groups: list[GroupTable] | None = None, *,
              max_order: int | None = None,
              alpha_labels: str | list[str] = "all",
              tau_policy: str | list[InvolutiveAutomorphism] = "default",
              seed: int = 0,
              with_clifford: bool = True,
              with_kawanaka: bool = True) -> SuiteResult:
    """Verify every selected context; failures are collected, not raised.

    tau_policy: "default"/"all" (identity plus inversion where valid), "id",
    "inv", or an explicit list of automorphisms (sensible with one group).
    """
    if groups is None:
        groups = default_catalog()
    if max_order is not None:
        groups = [g for g in groups if g.order <= max_order]
    result = SuiteResult()
    for group in groups:
        table = character_table(group, seed=seed)
        if isinstance(tau_policy, list):
            taus = tau_policy
        elif tau_policy in ("default", "all"):
            taus = curated_taus(group)
        elif tau_policy == "inv":
            taus = [inversion_automorphism(group)]
        else:
            taus = [identity_automorphism(group)]
        chars = linear_characters(group)
        if alpha_labels != "all":
            chars = [c for c in chars if c.label in alpha_labels]
        for tau in taus:
            for alpha in chars:
                if not alpha_tau_compatible(alpha, tau):
                    continue
                result.reports.append(
                    verify_theorem(group, alpha, tau, table=table,
                                   seed=seed, raise_on_failure=False)
                )
            if with_kawanaka and not tau.is_identity() and 2 * group.order <= 256:
                result.kawanaka.append(
                    verify_kawanaka(group, tau, seed=seed, table=table,
                                    raise_on_failure=False)
                )
        if with_clifford:
            for alpha in chars:
                if not alpha.is_trivial():
                    result.clifford.append(
                        verify_clifford(group, alpha, raise_on_failure=False)
                    )
    result.reports.sort(key=lambda r: (r.group_name, r.alpha_label, r.tau_label))
    result.clifford.sort(key=lambda r: (r.group_name, r.alpha_label))
    result.kawanaka.sort(key=lambda r: (r.group_name, r.tau_label))
    return result
