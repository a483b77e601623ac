"""Bredon homology of dihedral Artin groups with coefficients in ``K_q(R[-])``.

The virtually cyclic homology sits in a long exact sequence built from the
proper homology of ``A_n``, of the commensurators ``Comm[H]`` and the
``F[H]``-relative homology of the commensurators.  Its connecting maps
``g_2^i`` are analysed class by class, which yields closed forms:

======  =========================================  ===========================================
cell    n odd                                      n even
======  =========================================  ===========================================
H_3     sum_{H != Z} K_q                           ker g_2^2  (= sum_{H != Z} K_q)
H_2     ker g_2^1  (= sum_{H != Z} K_q)            ker of the class functional on sum K_q
H_1     sum_{H != Z} N_q (+) T_1 (+) T_2           sum_H N_q (+) coker of the class functional
H_0     sum_{H != Z} N_q (+) K_q (+) C-bar         sum_H N_q (+) K_q
======  =========================================  ===========================================

For the default class catalog the even-case functional is onto, so its
cokernel vanishes.  Higher cells are zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Sequence

from . import bhs
from .abelian import (
    OMEGA, ZERO, AbelianGroup, Bounded, ExtNat, GroupValue, bounded, countable_sum,
    direct_sum, is_exact, render, tensor, tor,
)
from .artin import (
    ArtinParameters, ClassCatalog, ClassKind, CommensuratorShape, TreeModel,
    classify_commensurator, default_class_catalog, ordinary_homology, tree_model,
)
from .errors import BredonError, HypothesisError, OutOfRangeError
from .ktheory import KTheoryProfile, get_k
from .snf import IntMatrix

TOP_DEGREE = 3
DEFAULT_SIGNS = (1, 1)


@dataclass
class HomologyReport:
    """Cells ``(i, q) -> H_i^vc(A_n; K_q(R[-]))`` with provenance."""

    ring: str
    n: int
    q_values: list[int] = field(default_factory=list)
    table: dict[tuple[int, int], GroupValue] = field(default_factory=dict)
    trail: dict[tuple[int, int], list[str]] = field(default_factory=dict)
    errors: dict[tuple[int, int], str] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def cell(self, i: int, q: int) -> GroupValue:
        if i > TOP_DEGREE or i < 0:
            return ZERO
        return self.table[(i, q)]

    def set(self, i: int, q: int, value: GroupValue, trail: Sequence[str]) -> None:
        if q not in self.q_values:
            self.q_values.append(q)
        self.table[(i, q)] = value
        self.trail[(i, q)] = list(trail)

    def warn(self, message: str) -> None:
        if message not in self.warnings:
            self.warnings.append(message)

    def note(self, message: str) -> None:
        if message not in self.notes:
            self.notes.append(message)

    def merge(self, other: "HomologyReport") -> None:
        for q in other.q_values:
            if q not in self.q_values:
                self.q_values.append(q)
        self.table.update(other.table)
        self.trail.update(other.trail)
        self.errors.update(other.errors)
        for w in other.warnings:
            self.warn(w)
        for m in other.notes:
            self.note(m)

    @property
    def has_bounded(self) -> bool:
        return any(not is_exact(v) for v in self.table.values())

    def bounded_cells(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.table.items() if not is_exact(v))


# -- small homological helpers ------------------------------------------

def _endpointwise(fn: Callable[[AbelianGroup], AbelianGroup], value: GroupValue) -> GroupValue:
    if isinstance(value, Bounded):
        return bounded(fn(value.lower), fn(value.upper))
    return fn(value)


def uct(h_integral: Callable[[int], AbelianGroup] | Sequence[AbelianGroup], m: GroupValue, i: int
        ) -> GroupValue:
    """``H_i(X; M) = H_i (x) M (+) Tor(H_{i-1}, M)``."""
    def h(j: int) -> AbelianGroup:
        if j < 0:
            return ZERO
        if callable(h_integral):
            return h_integral(j)
        return h_integral[j] if j < len(h_integral) else ZERO

    hi, hlow = h(i), h(i - 1)
    return direct_sum(
        _endpointwise(lambda g: tensor(hi, g), m),
        _endpointwise(lambda g: tor(hlow, g), m),
    )


def tree_mayer_vietoris(model: TreeModel,
                        coeff: GroupValue | Sequence[tuple[GroupValue, IntMatrix]],
                        boundary_matrix: IntMatrix | None = None) -> tuple[GroupValue, GroupValue]:
    """``(H_0, H_1)`` of a tree quotient: cokernel and kernel of edges -> vertices.

    ``coeff`` is either a single group (every orbit carries it and the map is
    ``boundary_matrix``, by default the model's own) or a list of
    ``(group, matrix)`` blocks, one per summand of a split coefficient.
    """
    shape = (len(model.vertex_orbits), len(model.edge_orbits))
    if isinstance(coeff, (AbelianGroup, Bounded)):
        blocks = [(coeff, boundary_matrix if boundary_matrix is not None else model.boundary_matrix())]
    else:
        blocks = list(coeff)
    h0, h1 = [], []
    for group, m in blocks:
        if len(m) != shape[0] or any(len(row) != shape[1] for row in m):
            raise ValueError(f"boundary matrix must be {shape[0]}x{shape[1]} for model {model.name!r}")
        ker, coker = bhs.apply_matrix(m, group, cols=shape[1])
        h1.append(ker)
        h0.append(coker)
    return direct_sum(*h0), direct_sum(*h1)


# -- proper and relative homology of the pieces ---------------------------

def h_fin_an(profile: KTheoryProfile, q: int, params: ArtinParameters, i: int) -> GroupValue:
    """Proper homology of ``A_n`` (torsion-free, so ordinary homology)."""
    if i > TOP_DEGREE - 1:
        return ZERO
    return uct(lambda j: ordinary_homology(params, j), get_k(profile, q), i)


def h_fin_comm(profile: KTheoryProfile, q: int, shape: CommensuratorShape | str,
               params: ArtinParameters, i: int) -> GroupValue:
    shape = CommensuratorShape(shape)
    if shape is CommensuratorShape.WHOLE_GROUP:
        return h_fin_an(profile, q, params, i)
    k = get_k(profile, q)
    return {0: k, 1: countable_sum(k, 2), 2: k}.get(i, ZERO)


def h_fh(profile: KTheoryProfile, q: int, params: ArtinParameters, kind: ClassKind | str,
         i: int) -> GroupValue:
    """Homology of ``Comm[H]`` relative to the family generated by ``H``."""
    kind = ClassKind(kind)
    if i >= 2 or i < 0:
        return ZERO
    if kind is ClassKind.NON_CENTER or params.is_even:
        # line model / one vertex orbit: the boundary vanishes
        h0, h1 = tree_mayer_vietoris(tree_model(params, kind), bhs.k_of_laurent(profile, q).total)
        return h1 if i else h0
    if i == 0:
        return bhs.big_c(profile, q, params.n)
    return bhs.ind_kernel(profile, q, params.n).total


# -- the maps g_2^i ------------------------------------------------------

def _catalog(params: ArtinParameters, catalog: ClassCatalog | None) -> ClassCatalog:
    catalog = catalog if catalog is not None else default_class_catalog(params)
    if not catalog.includes_center:
        raise ValueError("center class required")
    return catalog


def class_coefficients(catalog: ClassCatalog, signs: tuple[int, int] = DEFAULT_SIGNS
                       ) -> list[tuple[int, ExtNat]]:
    """Coefficient ``c_H`` of each non-center pattern in the even-case functional."""
    out = []
    for e in catalog.non_center:
        if len(e.ab_vector) != 2:
            raise ValueError(f"class {e.label!r}: even n needs ab vectors of length 2")
        out.append((signs[0] * e.ab_vector[0] + signs[1] * e.ab_vector[1], e.multiplicity))
    return out


def functional_ker_coker(coefficients: Sequence[tuple[int, ExtNat]], k: GroupValue
                         ) -> tuple[GroupValue, GroupValue]:
    """Kernel and cokernel of ``sum_j K -> K``, ``(x_j) -> sum c_j x_j``.

    Finite multiplicities go through the Smith form.  Each omega-fold block
    contributes a countable sum of copies of ``K`` to the kernel whatever
    its coefficient (differences of coordinates, or everything when the
    coefficient is 0), so the kernel sits between ``ker(finite part) (+)
    sum_w K`` and the whole domain.
    """
    finite_cols = [c for c, m in coefficients if m.is_finite for _ in range(int(m))]
    has_omega = any(m.is_omega for _, m in coefficients)
    all_coeffs = [c for c, _ in coefficients]
    # the cokernel only sees the ideal generated by the coefficients
    g = gcd(*all_coeffs) if all_coeffs else 0
    _, coker = bhs.apply_matrix([[g]], k, cols=1)
    if not finite_cols and not has_omega:
        return ZERO, k
    ker_fin = bhs.apply_matrix([finite_cols], k, cols=len(finite_cols))[0] if finite_cols else ZERO
    if not has_omega:
        return ker_fin, coker
    total = ExtNat(0)
    for _, m in coefficients:
        total = total + m
    lower = direct_sum(ker_fin, countable_sum(k, OMEGA))
    upper = countable_sum(k, total)
    lower = lower.lower if isinstance(lower, Bounded) else lower
    upper = upper.upper if isinstance(upper, Bounded) else upper
    return bounded(lower, upper), coker


def ker_g2_2(profile: KTheoryProfile, q: int, params: ArtinParameters,
             catalog: ClassCatalog | None = None) -> GroupValue:
    catalog = _catalog(params, catalog)
    # even: the center component is an isomorphism onto the codomain, so the
    # kernel is the graph of a map from the remaining summands (splitting);
    # odd: the codomain H_2(A_n; K_q) is 0
    return countable_sum(get_k(profile, q), catalog.non_center_multiplicity)


def ker_g2_1(profile: KTheoryProfile, q: int, params: ArtinParameters,
             catalog: ClassCatalog | None = None, signs: tuple[int, int] = DEFAULT_SIGNS
             ) -> GroupValue:
    catalog = _catalog(params, catalog)
    k = get_k(profile, q)
    if not params.is_even:
        return countable_sum(k, catalog.non_center_multiplicity)
    return functional_ker_coker(class_coefficients(catalog, signs), k)[0]


def coker_g2_1(profile: KTheoryProfile, q: int, params: ArtinParameters,
               catalog: ClassCatalog | None = None, signs: tuple[int, int] = DEFAULT_SIGNS
               ) -> GroupValue:
    catalog = _catalog(params, catalog)
    nq = bhs.n_q_class_term(profile, q)
    kappa = catalog.non_center_multiplicity
    if not params.is_even:
        return direct_sum(countable_sum(nq, kappa), bhs.ind_kernel(profile, q, params.n).total)
    extra = functional_ker_coker(class_coefficients(catalog, signs), get_k(profile, q))[1]
    return direct_sum(countable_sum(nq, kappa + 1), extra)


def coker_g2_0(profile: KTheoryProfile, q: int, params: ArtinParameters,
               catalog: ClassCatalog | None = None) -> GroupValue:
    catalog = _catalog(params, catalog)
    nq = bhs.n_q_class_term(profile, q)
    kappa = catalog.non_center_multiplicity
    k = get_k(profile, q)
    if not params.is_even:
        return direct_sum(countable_sum(nq, kappa), k, bhs.big_c_bar(profile, q, params.n))
    return direct_sum(countable_sum(nq, kappa + 1), k)


# -- assembly ------------------------------------------------------------

def _trails(params: ArtinParameters) -> dict[int, list[str]]:
    if params.is_even:
        return {
            3: ["H3 = ker g2^2", "splitting: center component is the identity",
                "sum over non-central classes of K_q(R)"],
            2: ["H2 = ker g2^1", "center summand injects (g22 identity)",
                "kernel of class functional c_H = s1*alpha_H + s2*beta_H"],
            1: ["H1 = coker g2^1", "sum over all classes of N_q",
                "N_q = K_{q-1}(R) (+) NK_q(R)^2 (Bass-Heller-Swan)", "cokernel of class functional"],
            0: ["H0 = coker g2^0", "sum over all classes of N_q", "(+) K_q(R)",
                "even-center tree model: one vertex orbit, boundary 0"],
        }
    return {
        3: ["H3 = ker g2^2", "g2^2 has zero codomain (H2(A_n) = 0)",
            "sum over non-central classes of K_q(R)"],
        2: ["H2 = ker g2^1", "BHS inclusion split injective per class",
            "sum over non-central classes of K_q(R)"],
        1: ["H1 = coker g2^1", "sum over non-central classes of N_q",
            "N_q = K_{q-1}(R) (+) NK_q(R)^2 (Bass-Heller-Swan)", "T1 = n-torsion of K_{q-1}(R)",
            "T2 <= n-torsion of NK_q(R)^2"],
        0: ["H0 = coker g2^0", "sum over non-central classes of N_q", "(+) K_q(R)",
            "C-bar = coker (2, n) on K_{q-1}(R) (+) Nil quotient",
            "odd-center tree model: vertex orbits C2, Cn"],
    }


def _annotate(report: HomologyReport, params: ArtinParameters, catalog: ClassCatalog,
              signs: tuple[int, int]) -> None:
    if params.degenerate:
        report.warn("n = 2 is degenerate: A_2 = Z^2 is abelian")
    if params.is_even:
        report.note(f"finite free factor of A_n/Z(A_n) taken of order n/2 = {params.n // 2}")
        report.note(f"g21 sign convention (s1, s2) = {signs}")
    if any(not e.is_center for e in catalog.entries):
        for line in catalog.notes:
            report.note(f"class catalog: {line}")


def bredon_vc(profile: KTheoryProfile, q: int, params: ArtinParameters,
              catalog: ClassCatalog | None = None, signs: tuple[int, int] = DEFAULT_SIGNS
              ) -> HomologyReport:
    """One row ``q`` of the virtually cyclic homology table."""
    catalog = _catalog(params, catalog)
    report = HomologyReport(profile.name, params.n)
    trails = _trails(params)
    cells = {
        3: lambda: ker_g2_2(profile, q, params, catalog),
        2: lambda: ker_g2_1(profile, q, params, catalog, signs),
        1: lambda: coker_g2_1(profile, q, params, catalog, signs),
        0: lambda: coker_g2_0(profile, q, params, catalog),
    }
    for i, compute in cells.items():
        try:
            value = compute()
        except OutOfRangeError as exc:
            raise OutOfRangeError(f"cell H_{i}, q={q}: {exc}") from None
        report.set(i, q, value, trails[i])
        if not is_exact(value):
            report.warn(f"H_{i} at q={q} is only bounded: {render(value)}")
    if not params.is_even:
        t1 = bhs.ind_kernel(profile, q, params.n).t1
        if not (is_exact(t1) and t1.is_zero):
            report.warn(
                f"q={q}: T1 = {render(t1)} is nonzero; the (ind_2, ind_n) kernel on K_{{q-1}} "
                "is trivial by coprimality, so H_1 may be overstated"
            )
    _annotate(report, params, catalog, signs)
    report.q_values.sort()
    return report


def e2_page(profile: KTheoryProfile, params: ArtinParameters, q_range: tuple[int, int],
            catalog: ClassCatalog | None = None, signs: tuple[int, int] = DEFAULT_SIGNS
            ) -> HomologyReport:
    """All cells ``E^2_{p,q}``, ``0 <= p <= 3``, over ``q_range`` (inclusive).

    Cells that cannot be computed are recorded in ``errors`` instead of
    aborting the whole page.
    """
    catalog = _catalog(params, catalog)
    lo, hi = q_range
    report = HomologyReport(profile.name, params.n)
    for q in range(lo, hi + 1):
        try:
            report.merge(bredon_vc(profile, q, params, catalog, signs))
        except BredonError as exc:
            if q not in report.q_values:
                report.q_values.append(q)
            for i in range(TOP_DEGREE + 1):
                report.errors[(i, q)] = str(exc)
    report.q_values.sort()
    _annotate(report, params, catalog, signs)
    report.note("columns p >= 4 vanish (virtually cyclic dimension 3)")
    report.note("spectral sequence collapses at latest at E^5")
    return report


@dataclass(frozen=True)
class CorollaryCheck:
    holds: bool
    corner: GroupValue
    report: HomologyReport
    failures: tuple[str, ...] = ()


def k0_corollary_check(profile: KTheoryProfile, params: ArtinParameters,
                       negative_rows: int = 3) -> CorollaryCheck:
    """For regular ``R`` and ``n > 2``: the E2 corner equals ``K_0(R)`` and q < 0 rows vanish."""
    if not profile.regular:
        raise HypothesisError(f"{profile.name} is not regular")
    if params.n <= 2:
        raise HypothesisError("the K_0 statement needs n > 2")
    report = e2_page(profile, params, (-negative_rows, 0))
    failures = []
    corner = report.cell(0, 0)
    if corner != get_k(profile, 0):
        failures.append(f"corner {render(corner)} != K_0 = {render(get_k(profile, 0))}")
    for (i, q), v in sorted(report.table.items()):
        if q < 0 and not (is_exact(v) and v.is_zero):
            failures.append(f"E2[{i},{q}] = {render(v)} is nonzero")
    if report.errors:
        failures.append(f"{len(report.errors)} cells could not be computed")
    for i in range(TOP_DEGREE + 1, TOP_DEGREE + 4):
        if report.cell(i, 0) != ZERO:
            failures.append(f"column {i} nonzero")
    return CorollaryCheck(not failures, corner, report, tuple(failures))


def commensurator_summary(params: ArtinParameters) -> dict[str, str]:
    """Shape of commensurators by class kind (used for report headers)."""
    return {k.value: classify_commensurator(params, k).value for k in ClassKind}
