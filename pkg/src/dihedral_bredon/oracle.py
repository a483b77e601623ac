"""Brute-force cross-checks of the closed forms.

For a catalog truncated to ``k`` classes every map ``g_2^i`` becomes an
explicit integer matrix acting on powers of ``K = K_q(R)`` (the ``K``
type) and of ``L = K_{q-1}(R)`` (the ``L`` type).  Only the determined
components enter: identities, split Bass-Heller-Swan inclusions and
abelianization vectors.  Nil summands are left out and components the
analysis does not determine (the non-central part of ``g_2^2``) are filled
with zeros or with random integers, to show the answer does not depend on
them.

Layout of the ``K``-type matrices, with classes ``H_1, ..., H_{k-1}``
besides the center ``Z`` and ``r = rank H_1(A_n)``:

* ``g_2^2``: ``1 x k`` ``[1, *, ..., *]`` for even ``n`` (the center
  column is the identity), ``0 x (k-1)`` for odd ``n``.
* ``g_2^1``: columns ``(u_H, v_H)`` per class, then ``r`` center columns.
  ``u_H`` (the generator of ``H``) maps to the abelianization of ``H`` in
  the ``H_1(A_n)`` rows; ``v_H`` (the central direction) maps to the
  ``K``-slot of ``K_q(R[Comm[H]/H])`` and to the abelianization of the
  center generator.  The center columns map identically onto ``H_1`` and,
  for even ``n``, onto the center's ``K``-slot by ``s1 x + s2 y``.
* ``g_2^0``: every class maps by 1 to its ``K``-slot and to ``H_0(A_n)``.
  For odd ``n`` the center's target is the cokernel of ``x -> (x, -x)``
  on the two vertex orbits, encoded as an extra relation column.
"""

from __future__ import annotations

import random
from math import gcd
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .abelian import ZERO, AbelianGroup, GroupValue, countable_sum, direct_sum, is_exact, normalize, render
from .artin import ArtinParameters, ClassCatalog, default_class_catalog
from .bhs import apply_matrix
from .engine import DEFAULT_SIGNS, bredon_vc
from .ktheory import KTheoryProfile, get_k, get_nk
from .snf import IntMatrix, matrix_ker_coker, smith_normal_form


@dataclass(frozen=True)
class TruncatedMaps:
    """Integer matrices of ``g_2^2, g_2^1, g_2^0`` for ``k`` classes."""

    k: int
    n: int
    g22: IntMatrix
    g22_cols: int
    g21: IntMatrix
    g21_cols: int
    g20: IntMatrix
    g20_cols: int
    g20_relations: IntMatrix  # extra columns spanning the relations of the odd center target
    l_slots: int  # L-type codomain summands untouched by either map
    center_f_l: IntMatrix | None  # odd center: x -> (2x, -n x) on L, kernel enters H_1, cokernel H_0
    notes: tuple[str, ...] = field(default=())

    def g20_with_relations(self) -> IntMatrix:
        return [row + rel for row, rel in zip(self.g20, self.g20_relations)]


def truncated_g_matrices(profile: KTheoryProfile, q: int, params: ArtinParameters,
                         catalog: ClassCatalog | None, k: int,
                         signs: tuple[int, int] = DEFAULT_SIGNS, seed: int | None = None
                         ) -> TruncatedMaps:
    """Explicit truncations; ``seed`` fills undetermined entries randomly."""
    catalog = (catalog or default_class_catalog(params)).truncate(k)
    classes = [e.ab_vector for e in catalog.expanded_non_center()]
    center_ab = params.center_ab_vector
    r = params.h1_rank
    even = params.is_even
    rng = random.Random(seed) if seed is not None else None
    notes = ["Nil summands excluded (map on them undetermined)"]

    # g_2^2
    if even:
        fill = [rng.randint(-9, 9) if rng else 0 for _ in classes]
        g22, g22_cols = [[1] + fill], len(classes) + 1
        if rng:
            notes.append("undetermined g22 components filled at random")
    else:
        g22, g22_cols = [], len(classes)

    # g_2^1: rows = K-slots (non-center, then even center) + r rows of H_1(A_n)
    slots = len(classes) + (1 if even else 0)
    cols = 2 * len(classes) + r
    g21 = [[0] * cols for _ in range(slots + r)]
    for j, ab in enumerate(classes):
        u, v = 2 * j, 2 * j + 1
        g21[j][v] = 1
        for t in range(r):
            g21[slots + t][u] = ab[t]
            g21[slots + t][v] = center_ab[t]
    for t in range(r):
        g21[slots + t][2 * len(classes) + t] = 1
    if even:
        g21[len(classes)][2 * len(classes)] = signs[0]
        g21[len(classes)][2 * len(classes) + 1] = signs[1]

    # g_2^0: rows = K-slots (non-center, center vertex slot(s)) + H_0(A_n)
    center_slots = 1 if even else 2
    rows0 = len(classes) + center_slots + 1
    g20 = [[0] * (len(classes) + 1) for _ in range(rows0)]
    for j in range(len(classes)):
        g20[j][j] = 1
        g20[rows0 - 1][j] = 1
    g20[len(classes)][len(classes)] = 1
    g20[rows0 - 1][len(classes)] = 1
    rel = [[0] for _ in range(rows0)] if not even else [[] for _ in range(rows0)]
    if not even:
        rel[len(classes)][0], rel[len(classes) + 1][0] = 1, -1

    f_l = None if even else [[2], [-params.n]]
    return TruncatedMaps(k, params.n, g22, g22_cols, g21, cols, g20, len(classes) + 1, rel,
                         slots, f_l, tuple(notes))


def oracle_cells(maps: TruncatedMaps, k_group: GroupValue, l_group: GroupValue) -> dict[int, GroupValue]:
    """``H_3 .. H_0`` of the truncated sequence, by Smith form."""
    h3 = apply_matrix(maps.g22, k_group, cols=maps.g22_cols)[0]
    h2, coker21 = apply_matrix(maps.g21, k_group, cols=maps.g21_cols)
    g20 = maps.g20_with_relations()
    coker20 = apply_matrix(g20, k_group, cols=len(g20[0]))[1]
    l_part = countable_sum(l_group, maps.l_slots)
    h1 = direct_sum(coker21, l_part)
    h0 = direct_sum(coker20, l_part)
    if maps.center_f_l is not None:
        ker_f, coker_f = apply_matrix(maps.center_f_l, l_group, cols=1)
        h1, h0 = direct_sum(h1, ker_f), direct_sum(h0, coker_f)
    return {3: h3, 2: h2, 1: h1, 0: h0}


def _kernel_generators_mod(m: IntMatrix, modulus: int) -> list[list[int]]:
    """Generators of ``{x : m x = 0 mod modulus}`` (``modulus = 0``: over Z)."""
    cols = len(m[0]) if m else 0
    snf = smith_normal_form(m, transforms=True, cols=cols)
    gens = []
    for i in range(cols):
        d = snf.d[i] if i < len(snf.d) else 0
        if modulus == 0:
            scale = 0 if d else 1
        else:
            scale = modulus // gcd(d, modulus)
        if scale:
            gens.append([snf.v[row][i] * scale for row in range(cols)])
    return gens


def is_monomorphism_on(m: IntMatrix, domain_cols: int, group: AbelianGroup) -> bool:
    """Does every kernel element of ``m`` on ``group^cols`` vanish on the first ``domain_cols``?

    This is injectivity of the induced map from the domain into the
    quotient by the span of the remaining (relation) columns.
    """
    if group.has_symbolic or not all(mult.is_finite for _, mult in group.factors):
        raise ValueError("monomorphism check needs a finitely generated group")
    for order in sorted({o for o, _ in group.factors}):
        for g in _kernel_generators_mod(m, order):
            if any((x % order if order else x) for x in g[:domain_cols]):
                return False
    return True


# -- stability scan ------------------------------------------------------

@dataclass(frozen=True)
class CellVerdict:
    i: int
    matches: bool
    first_failure: int | None
    oracle: str
    closed: str

    @property
    def verdict(self) -> str:
        if self.matches:
            return "stable pattern matches closed form"
        return f"mismatch at k={self.first_failure}: oracle {self.oracle} vs closed form {self.closed}"


@dataclass(frozen=True)
class ScanResult:
    ring: str
    n: int
    q: int
    k_values: tuple[int, ...]
    cells: tuple[CellVerdict, ...]
    monomorphism: dict[int, bool]
    per_k: dict[int, dict[int, tuple[str, str]]]
    notes: tuple[str, ...]

    @property
    def all_match(self) -> bool:
        return all(c.matches for c in self.cells) and all(self.monomorphism.values())


def _shadow(profile: KTheoryProfile, q: int) -> tuple[KTheoryProfile, list[str]]:
    nk = get_nk(profile, q)
    if is_exact(nk) and nk.is_zero:
        return profile, []
    table = {key: ZERO for key in profile.nk_table}
    shadow = KTheoryProfile(profile.name + " (Nil dropped)", profile.regular, profile.q_range,
                            profile.k_table, table, profile.notes)
    return shadow, [f"NK_{q}({profile.name}) = {render(nk)} is nonzero; compared on the Nil-free part"]


def stability_scan(profile: KTheoryProfile, q: int, params: ArtinParameters,
                   k_range: Iterable[int], catalog: ClassCatalog | None = None,
                   signs: tuple[int, int] = DEFAULT_SIGNS, seed: int | None = None) -> ScanResult:
    """Compare the truncated oracle with the closed forms on the same ``k`` classes."""
    catalog = catalog or default_class_catalog(params)
    if not catalog.includes_center:
        raise ValueError("center class required")
    k_values = tuple(k_range)
    if not k_values or min(k_values) < 1:
        raise ValueError("center class required")
    shadow, notes = _shadow(profile, q)
    k_group, l_group = get_k(shadow, q), get_k(shadow, q - 1)
    mono: dict[int, bool] = {}
    per_k: dict[int, dict[int, tuple[str, str]]] = {}
    first_fail: dict[int, int] = {}
    for k in k_values:
        maps = truncated_g_matrices(shadow, q, params, catalog, k, signs, seed)
        oracle = oracle_cells(maps, k_group, l_group)
        closed = bredon_vc(shadow, q, params, catalog.truncate(k), signs)
        per_k[k] = {}
        for i in (3, 2, 1, 0):
            o, c = render(oracle[i]), render(closed.cell(i, q))
            per_k[k][i] = (o, c)
            if o != c and i not in first_fail:
                first_fail[i] = k
        exact_k = k_group if isinstance(k_group, AbelianGroup) else k_group.upper
        mono[k] = is_monomorphism_on(maps.g20_with_relations(), maps.g20_cols,
                                     AbelianGroup(exact_k.factors))
    cells = []
    for i in (3, 2, 1, 0):
        bad = first_fail.get(i)
        o, c = per_k[bad if bad else k_values[-1]][i]
        cells.append(CellVerdict(i, bad is None, bad, o, c))
    return ScanResult(profile.name, params.n, q, k_values, tuple(cells), mono, per_k, tuple(notes))


# -- exhaustive check on finite groups -----------------------------------

def _structure_from_counts(counts: dict[int, list[int]]) -> AbelianGroup:
    """``counts[p][j] = log_p |G[p^j]|`` for ``j = 0, 1, ...`` (stabilized at the end)."""
    raw = []
    for p, e in counts.items():
        ge = [e[j] - e[j - 1] for j in range(1, len(e))] + [0]  # factors of order >= p^j
        for j in range(1, len(e)):
            exact = ge[j - 1] - ge[j]
            if exact:
                raw.append((p ** j, exact))
    return normalize(raw)


def _log(x: int, p: int) -> int:
    e = 0
    while x > 1:
        x //= p
        e += 1
    return e


@dataclass(frozen=True)
class FiniteCheck:
    ok: bool
    kernel: AbelianGroup
    cokernel: AbelianGroup
    snf_kernel: AbelianGroup
    snf_cokernel: AbelianGroup

    def __bool__(self) -> bool:
        return self.ok


ELEMENT_CAP = 5000


def finite_group_map_check(m: IntMatrix, k: AbelianGroup, cols: int | None = None) -> FiniteCheck:
    """Enumerate ``K^cols -> K^rows`` element by element and compare with the Smith form."""
    from sympy import factorint

    rows = len(m)
    cols = len(m[0]) if m else (cols or 0)
    if not k.is_finite:
        raise ValueError("finite_group_map_check needs a finite group")
    orders = k.cyclic_orders()
    size = k.order()
    if max(size ** cols, size ** rows) > ELEMENT_CAP:
        raise ValueError(f"enumeration of |K|^{max(rows, cols)} elements exceeds {ELEMENT_CAP}")
    primes = sorted(factorint(size)) if size > 1 else []
    top = {p: max((_log(o, p) for o in orders if o % p == 0), default=0) for p in primes}

    def elements(count):
        return product(*[range(o) for o in orders] * count)

    def image_of(x):
        out = []
        for r in range(rows):
            for t, o in enumerate(orders):
                out.append(sum(m[r][c] * x[c * len(orders) + t] for c in range(cols)) % o)
        return tuple(out)

    kernel, image = [], set()
    for x in elements(cols):
        y = image_of(x)
        image.add(y)
        if not any(y):
            kernel.append(x)

    def scale(v, s):
        return tuple((s * a) % orders[i % len(orders)] for i, a in enumerate(v))

    ker_counts, coker_counts = {}, {}
    for p in primes:
        ker_counts[p], coker_counts[p] = [], []
        for j in range(top[p] + 2):
            pj = p ** j
            ker_counts[p].append(_log(sum(1 for x in kernel if not any(scale(x, pj))), p))
            hits = sum(1 for y in elements(rows) if scale(y, pj) in image)
            coker_counts[p].append(_log(hits // len(image), p))
    ker = _structure_from_counts(ker_counts)
    coker = _structure_from_counts(coker_counts)
    snf_ker, snf_coker = matrix_ker_coker(m, k, cols=cols)
    return FiniteCheck(ker == snf_ker and coker == snf_coker, ker, coker, snf_ker, snf_coker)
