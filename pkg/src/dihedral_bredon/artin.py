"""Structure of the dihedral Artin group ``A_n = <a, b | prod(a,b;n) = prod(b,a;n)>``.

Everything here is a structural fact depending only on ``n`` (and its
parity): the center, the free-product shape of ``A_n / Z(A_n)``, the
shapes of commensurators of infinite cyclic subgroups, the three stock
Bass-Serre tree models, ordinary homology, and the catalog of
commensurability classes that indexes the sums in the homology formulas.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from itertools import islice
from typing import Iterator

from .abelian import OMEGA, ZERO, AbelianGroup, ExtNat, free
from .errors import ProfileError


class Parity(str, Enum):
    ODD = "odd"
    EVEN = "even"


class ClassKind(str, Enum):
    CENTER = "center"
    NON_CENTER = "non_center"


class CommensuratorShape(str, Enum):
    WHOLE_GROUP = "A_n"
    Z2 = "Z^2"


@dataclass(frozen=True)
class FreeProductShape:
    """``C_{a} * C_{b}``; an order of 0 stands for the infinite cyclic factor."""

    orders: tuple[int, int]

    def __str__(self):
        return " * ".join("C_inf" if o == 0 else f"C{o}" for o in self.orders)


@dataclass(frozen=True)
class ArtinParameters:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"dihedral Artin groups need n >= 2, got {self.n!r}")

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if self.n % 2 == 0 else Parity.ODD

    @property
    def is_even(self) -> bool:
        return self.parity is Parity.EVEN

    @property
    def center_generator_exponent(self) -> int:
        """``Z(A_n)`` is generated by ``(ab)^e`` with this ``e``."""
        return self.n // 2 if self.is_even else self.n

    @property
    def quotient(self) -> FreeProductShape:
        # even case: the image of ab has order n/2 modulo the center
        if self.is_even:
            return FreeProductShape((0, self.n // 2))
        return FreeProductShape((2, self.n))

    @property
    def degenerate(self) -> bool:
        """``A_2 = Z^2``: accepted, but outside the range of the K_0 statement."""
        return self.n == 2

    @property
    def h1_rank(self) -> int:
        return 2 if self.is_even else 1

    @property
    def center_ab_vector(self) -> tuple[int, ...]:
        e = self.center_generator_exponent
        return (e, e) if self.is_even else (2 * e,)


def classify_commensurator(params: ArtinParameters, kind: ClassKind | str) -> CommensuratorShape:
    kind = ClassKind(kind)
    if kind is ClassKind.CENTER:
        return CommensuratorShape.WHOLE_GROUP
    return CommensuratorShape.Z2


_EVEN_HOMOLOGY = (free(1), free(2), free(1))


def ordinary_homology(params: ArtinParameters, i: int) -> AbelianGroup:
    """Integral homology ``H_i(A_n)``; the Cayley complex is 2-dimensional."""
    if i < 0:
        raise ValueError("homology degree must be >= 0")
    if params.is_even:
        return _EVEN_HOMOLOGY[i] if i < 3 else ZERO
    return free(1) if i < 2 else ZERO


def ordinary_homology_z2(i: int) -> AbelianGroup:
    """Homology of the torus group ``Z^2``."""
    if i < 0:
        raise ValueError("homology degree must be >= 0")
    return _EVEN_HOMOLOGY[i] if i < 3 else ZERO


def commensurator_homology(params: ArtinParameters, shape: CommensuratorShape, i: int) -> AbelianGroup:
    if shape is CommensuratorShape.WHOLE_GROUP:
        return ordinary_homology(params, i)
    return ordinary_homology_z2(i)


# -- tree models ---------------------------------------------------------

@dataclass(frozen=True)
class TreeModel:
    """Quotient graph of a tree with cocompact action.

    ``vertex_orbits`` / ``edge_orbits`` hold stabilizer descriptors (``"1"``
    for free orbits, ``"C<m>"`` otherwise).  ``boundary[e]`` lists
    ``(vertex_orbit, coefficient)`` pairs describing the cellular boundary
    of edge orbit ``e``.
    """

    name: str
    vertex_orbits: tuple[str, ...]
    edge_orbits: tuple[str, ...]
    boundary: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        if len(self.boundary) != len(self.edge_orbits):
            raise ValueError("one boundary entry per edge orbit is required")
        for terms in self.boundary:
            for v, _ in terms:
                if not 0 <= v < len(self.vertex_orbits):
                    raise ValueError(f"edge boundary references missing vertex orbit {v}")

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertex_orbits) - len(self.edge_orbits)

    def boundary_matrix(self) -> list[list[int]]:
        """Rows indexed by vertex orbits, columns by edge orbits."""
        m = [[0] * len(self.edge_orbits) for _ in self.vertex_orbits]
        for e, terms in enumerate(self.boundary):
            for v, c in terms:
                m[v][e] += c
        return m


def tree_model(params: ArtinParameters, kind: ClassKind | str) -> TreeModel:
    kind = ClassKind(kind)
    if kind is ClassKind.NON_CENTER:
        # the real line with Z acting by shifts
        return TreeModel("line", ("1",), ("1",), (((0, 1), (0, -1)),))
    if params.is_even:
        m = params.n // 2
        return TreeModel("even-center", ("1" if m == 1 else f"C{m}",), ("1",), (((0, 1), (0, -1)),))
    return TreeModel("odd-center", ("C2", f"C{params.n}"), ("1",), (((0, 1), (1, -1)),))


# -- class catalog -------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    label: str
    ab_vector: tuple[int, ...]
    multiplicity: ExtNat
    is_center: bool = False


@dataclass(frozen=True)
class ClassCatalog:
    """Commensurability classes of infinite cyclic subgroups, grouped by pattern."""

    entries: tuple[CatalogEntry, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def includes_center(self) -> bool:
        return any(e.is_center for e in self.entries)

    @property
    def center(self) -> CatalogEntry | None:
        return next((e for e in self.entries if e.is_center), None)

    @property
    def non_center(self) -> tuple[CatalogEntry, ...]:
        return tuple(e for e in self.entries if not e.is_center)

    @property
    def non_center_multiplicity(self) -> ExtNat:
        total = ExtNat(0)
        for e in self.non_center:
            total = total + e.multiplicity
        return total

    def expanded_non_center(self) -> Iterator[CatalogEntry]:
        """Individual classes in catalog order; omega entries repeat forever."""
        for e in self.non_center:
            count = 0
            while e.multiplicity.is_omega or count < int(e.multiplicity):
                yield CatalogEntry(e.label, e.ab_vector, ExtNat(1))
                count += 1

    def truncate(self, k: int) -> "ClassCatalog":
        """Center plus the first ``k - 1`` individual non-center classes."""
        if k < 1 or not self.includes_center:
            raise ValueError("center class required")
        picked = list(islice(self.expanded_non_center(), k - 1))
        merged: list[CatalogEntry] = []
        for e in picked:
            if merged and merged[-1].label == e.label and merged[-1].ab_vector == e.ab_vector:
                last = merged.pop()
                e = CatalogEntry(e.label, e.ab_vector, last.multiplicity + 1)
            merged.append(e)
        return ClassCatalog((self.center, *merged), (f"truncated to {k} classes",))


def default_class_catalog(params: ArtinParameters) -> ClassCatalog:
    center = CatalogEntry("Z(A_n)", params.center_ab_vector, ExtNat(1), True)
    if params.is_even:
        rest = (
            CatalogEntry("<a>", (1, 0), ExtNat(1)),
            CatalogEntry("<b>", (0, 1), ExtNat(1)),
            CatalogEntry("ab-trivial", (0, 0), OMEGA),
        )
    else:
        rest = (
            CatalogEntry("<a>", (1,), ExtNat(1)),
            CatalogEntry("ab-trivial", (0,), OMEGA),
        )
    return ClassCatalog((center, *rest), ("default catalog (assumed class patterns)",))


def validate_catalog(catalog: ClassCatalog, params: ArtinParameters) -> None:
    centers = [e for e in catalog.entries if e.is_center]
    if len(centers) != 1:
        raise ProfileError(f"catalog must contain exactly one center class, found {len(centers)}")
    if centers[0].multiplicity != 1:
        raise ProfileError("the center class has multiplicity 1")
    if centers[0].ab_vector != params.center_ab_vector:
        raise ProfileError(
            f"center ab vector must be {params.center_ab_vector} for n={params.n}, got {centers[0].ab_vector}"
        )
    for e in catalog.entries:
        if len(e.ab_vector) != params.h1_rank:
            raise ProfileError(f"class {e.label!r}: ab vector must have length {params.h1_rank}")
    if not catalog.non_center_multiplicity.is_omega:
        raise ProfileError("non-center classes must have total multiplicity w")


_ROW = re.compile(r"\s*(\w+)\s*=\s*(\([^)]*\)|[^,]+?)\s*(?:,|$)")


def _parse_row(text: str) -> dict[str, str]:
    fields, pos = {}, 0
    text = text.strip()
    while pos < len(text):
        m = _ROW.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse class row near {text[pos:]!r}")
        fields[m[1]] = m[2]
        pos = m.end()
    return fields


def load_catalog(source: str, params: ArtinParameters) -> ClassCatalog:
    """Parse a ``[classes]`` document.

    Each row reads ``ab = (x, y), mult = <n|w>, label = <text>`` with an
    optional ``kind = center``.  Comments start with ``#``.
    """
    entries, section = [], None
    for lineno, line in enumerate(source.splitlines(), 1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if stripped.startswith("["):
            section = stripped.strip("[] ")
            continue
        if section != "classes":
            continue
        try:
            row = _parse_row(stripped)
            if "ab" not in row:
                raise ValueError("row without ab vector")
            ab = tuple(int(x) for x in row["ab"].strip("() ").split(",") if x.strip())
            mult = ExtNat.of(row.get("mult", "1"))
            kind = row.get("kind", "non_center")
            if kind not in ("center", "non_center"):
                raise ValueError(f"kind must be center or non_center, got {kind!r}")
        except ValueError as exc:
            raise ProfileError(str(exc), lineno, 1) from None
        label = row.get("label", f"class{len(entries)}")
        entries.append(CatalogEntry(label, ab, mult, kind == "center"))
    if not entries:
        raise ProfileError("catalog document has no [classes] rows", 1, 1)
    catalog = ClassCatalog(tuple(entries), ("loaded catalog",))
    validate_catalog(catalog, params)
    return catalog


def dump_catalog(catalog: ClassCatalog) -> str:
    lines = ["[classes]"]
    for e in catalog.entries:
        ab = "(" + ", ".join(map(str, e.ab_vector)) + ")"
        kind = ", kind = center" if e.is_center else ""
        lines.append(f"ab = {ab}, mult = {e.multiplicity}, label = {e.label}{kind}")
    return "\n".join(lines) + "\n"
