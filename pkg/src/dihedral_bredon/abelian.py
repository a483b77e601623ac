"""Countably generated abelian groups in primary-decomposition form.

A group is a direct sum of cyclic groups Z and Z/p^k, each with a
multiplicity that is a natural number or the countable cardinal ``w``.
Free summands of unknown rank (``Z^r`` with ``1 <= r <= w``) are carried
symbolically; they only resolve when absorbed into a countable free summand.

Values whose isomorphism type is only known up to a sandwich
``lower <= G <= upper`` are :class:`Bounded`; everywhere a group value is
accepted, either an :class:`AbelianGroup` (exact) or a :class:`Bounded` may
appear.

>>> G = normalize([(48, 1), (0, OMEGA), (0, 3)])
>>> print(G)
(+)_{w} Z (+) Z/16 (+) Z/3
>>> print(tensor(parse_group("Z/4"), parse_group("Z/6")))
Z/2
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import total_ordering
from math import gcd
from typing import Iterable, Union

from sympy import factorint

from .errors import SymbolicRankError

__all__ = [
    "ExtNat",
    "OMEGA",
    "SymbolicRank",
    "AbelianGroup",
    "Bounded",
    "GroupValue",
    "ZERO",
    "Z",
    "cyclic",
    "free",
    "normalize",
    "bounded",
    "direct_sum",
    "countable_sum",
    "tensor",
    "tor",
    "n_torsion",
    "is_exact",
    "render",
    "parse_group",
    "embeds",
]


@total_ordering
class ExtNat:
    """A natural number or the countable cardinal ``w`` (omega)."""

    __slots__ = ("_n",)

    def __init__(self, n: int | None):
        if n is not None:
            n = int(n)
            if n < 0:
                raise ValueError(f"ExtNat must be nonnegative, got {n}")
        self._n = n

    @classmethod
    def of(cls, x: "ExtNat | int | str") -> "ExtNat":
        if isinstance(x, ExtNat):
            return x
        if isinstance(x, str):
            s = x.strip()
            if s in ("w", "ω", "omega", "aleph0"):
                return OMEGA
            return cls(int(s))
        return cls(x)

    @property
    def is_finite(self) -> bool:
        return self._n is not None

    @property
    def is_omega(self) -> bool:
        return self._n is None

    def __int__(self) -> int:
        if self._n is None:
            raise OverflowError("w has no integer value")
        return self._n

    def __index__(self) -> int:
        return int(self)

    def __add__(self, other):
        other = ExtNat.of(other)
        if self._n is None or other._n is None:
            return OMEGA
        return ExtNat(self._n + other._n)

    __radd__ = __add__

    def __mul__(self, other):
        other = ExtNat.of(other)
        if self._n == 0 or other._n == 0:
            return ExtNat(0)
        if self._n is None or other._n is None:
            return OMEGA
        return ExtNat(self._n * other._n)

    __rmul__ = __mul__

    def _key(self):
        return (1, 0) if self._n is None else (0, self._n)

    def __eq__(self, other):
        if isinstance(other, (int, str)) and not isinstance(other, bool):
            try:
                other = ExtNat.of(other)
            except ValueError:
                return NotImplemented
        if not isinstance(other, ExtNat):
            return NotImplemented
        return self._n == other._n

    def __lt__(self, other):
        return self._key() < ExtNat.of(other)._key()

    def __hash__(self):
        # consistent with equality against plain ints and "w"
        return hash("w" if self._n is None else self._n)

    def __bool__(self):
        return self._n != 0

    def __repr__(self):
        return "OMEGA" if self._n is None else f"ExtNat({self._n})"

    def __str__(self):
        return "w" if self._n is None else str(self._n)


OMEGA = ExtNat(None)


@dataclass(frozen=True, order=True)
class SymbolicRank:
    """A free summand Z^name whose rank is only known to lie in [lower, upper]."""

    name: str
    lower: ExtNat = field(default_factory=lambda: ExtNat(1))
    upper: ExtNat = OMEGA

    def __post_init__(self):
        object.__setattr__(self, "lower", ExtNat.of(self.lower))
        object.__setattr__(self, "upper", ExtNat.of(self.upper))
        if not self.name.isidentifier():
            raise ValueError(f"bad symbolic rank name {self.name!r}")
        if self.lower < 1:
            raise ValueError("symbolic ranks must be at least 1")
        if self.upper < self.lower:
            raise ValueError(f"empty rank interval [{self.lower}, {self.upper}]")

    def __str__(self):
        return f"Z^{self.name}[{self.lower}..{self.upper}]"


def _order_key(order: int):
    if order == 0:
        return (0, 0, 0)
    (p, k), = factorint(order).items()
    return (1, p, k)


def _split_order(order: int) -> list[int]:
    if order == 0:
        return [0]
    return [p**k for p, k in sorted(factorint(order).items())]


@dataclass(frozen=True)
class AbelianGroup:
    """Canonical form: sorted ``(order, multiplicity)`` pairs plus symbolic ranks.

    ``order`` is 0 for Z and a prime power otherwise.  No multiplicity is zero.
    Build instances with :func:`normalize` rather than directly.
    """

    factors: tuple[tuple[int, ExtNat], ...] = ()
    symbolic: tuple[SymbolicRank, ...] = ()

    # -- queries ---------------------------------------------------------
    def multiplicity(self, order: int) -> ExtNat:
        for o, m in self.factors:
            if o == order:
                return m
        return ExtNat(0)

    @property
    def free_rank(self) -> ExtNat:
        """Rank of the exactly known free part (symbolic ranks excluded)."""
        return self.multiplicity(0)

    def free_rank_bounds(self) -> tuple[ExtNat, ExtNat]:
        lo = hi = self.free_rank
        for s in self.symbolic:
            lo, hi = lo + s.lower, hi + s.upper
        return lo, hi

    @property
    def is_zero(self) -> bool:
        return not self.factors and not self.symbolic

    @property
    def is_torsion(self) -> bool:
        return self.free_rank == 0 and not self.symbolic

    @property
    def is_finite(self) -> bool:
        return self.is_torsion and all(m.is_finite for _, m in self.factors)

    @property
    def has_symbolic(self) -> bool:
        return bool(self.symbolic)

    def order(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        out = 1
        for o, m in self.factors:
            out *= o ** int(m)
        return out

    def torsion_factors(self) -> list[tuple[int, int, ExtNat]]:
        """``(p, k, multiplicity)`` for every Z/p^k summand."""
        out = []
        for o, m in self.factors:
            if o:
                (p, k), = factorint(o).items()
                out.append((p, k, m))
        return out

    def cyclic_orders(self) -> list[int]:
        """Flat list of cyclic summand orders; requires finite multiplicities."""
        if self.symbolic:
            raise SymbolicRankError("symbolic rank in exact matrix computation")
        out = []
        for o, m in self.factors:
            if m.is_omega:
                raise ValueError(f"{self} has a countably infinite summand")
            out.extend([o] * int(m))
        return out

    # -- arithmetic sugar ------------------------------------------------
    def __add__(self, other):
        return direct_sum(self, other)

    def __mul__(self, kappa):
        return countable_sum(self, kappa)

    __rmul__ = __mul__

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"AbelianGroup({render(self)!r})"


@dataclass(frozen=True)
class Bounded:
    """A group known only to contain ``lower`` and embed in ``upper``."""

    lower: AbelianGroup
    upper: AbelianGroup

    def __post_init__(self):
        if self.lower == self.upper:
            raise ValueError("bounds coincide; use the exact group instead")
        if not embeds(self.lower, self.upper):
            raise ValueError(f"{self.lower} does not embed in {self.upper}")

    def __repr__(self):
        return f"Bounded({render(self.lower)!r}, {render(self.upper)!r})"

    def __add__(self, other):
        return direct_sum(self, other)

    def __mul__(self, kappa):
        return countable_sum(self, kappa)

    __rmul__ = __mul__

    def __str__(self):
        return render(self)


GroupValue = Union[AbelianGroup, Bounded]


def is_exact(value: GroupValue) -> bool:
    return isinstance(value, AbelianGroup)


# -- construction --------------------------------------------------------

def normalize(raw: Iterable[tuple[int, ExtNat | int | str]] = (),
              symbolic: Iterable[SymbolicRank] = ()) -> AbelianGroup:
    """Canonical form of a direct sum of cyclic groups.

    ``raw`` lists ``(order, multiplicity)``; order 0 means Z and composite
    orders are split into prime powers.
    """
    mult: dict[int, ExtNat] = {}
    for order, m in raw:
        if isinstance(order, bool) or int(order) != order:
            raise ValueError(f"cyclic order must be an integer, got {order!r}")
        order = int(order)
        if order < 0:
            raise ValueError(f"negative cyclic order {order}")
        if order == 1:
            raise ValueError("cyclic order 1 is not allowed (trivial group)")
        m = ExtNat.of(m)
        for piece in _split_order(order):
            mult[piece] = mult.get(piece, ExtNat(0)) + m
    syms = []
    for s in symbolic:
        if s.lower == s.upper:
            mult[0] = mult.get(0, ExtNat(0)) + s.lower
        else:
            syms.append(s)
    if mult.get(0, ExtNat(0)).is_omega:
        syms = []
    factors = tuple(sorted(((o, m) for o, m in mult.items() if m), key=lambda t: _order_key(t[0])))
    return AbelianGroup(factors, tuple(sorted(syms)))


def cyclic(order: int, mult: ExtNat | int | str = 1) -> AbelianGroup:
    return normalize([(order, mult)])


def free(rank: ExtNat | int | str = 1) -> AbelianGroup:
    return normalize([(0, rank)])


ZERO = AbelianGroup()
Z = free(1)


def embeds(lower: AbelianGroup, upper: AbelianGroup) -> bool:
    """Necessary condition for ``lower`` to be a subgroup of ``upper``.

    For each prime p and m >= 1 the number of Z/p^j summands with j >= m may
    not grow, and the free rank may not grow.  Symbolic ranks common to both
    sides cancel before the free ranks are compared.
    """
    for p in {p for p, _, _ in lower.torsion_factors()}:
        low = [(k, m) for q, k, m in lower.torsion_factors() if q == p]
        up = [(k, m) for q, k, m in upper.torsion_factors() if q == p]
        for level in {k for k, _ in low}:
            a = sum((m for k, m in low if k >= level), ExtNat(0))
            b = sum((m for k, m in up if k >= level), ExtNat(0))
            if a > b:
                return False
    lsyms, usyms = list(lower.symbolic), list(upper.symbolic)
    for s in list(lsyms):
        if s in usyms:
            usyms.remove(s)
            lsyms.remove(s)
    lo_max = lower.free_rank
    for s in lsyms:
        lo_max = lo_max + s.upper
    up_min = upper.free_rank
    for s in usyms:
        up_min = up_min + s.lower
    return lo_max <= up_min


def bounded(lower: GroupValue, upper: GroupValue) -> GroupValue:
    """Sandwich value; collapses to the exact group when the bounds agree."""
    lower = lower.lower if isinstance(lower, Bounded) else lower
    upper = upper.upper if isinstance(upper, Bounded) else upper
    if lower == upper:
        return lower
    return Bounded(lower, upper)


# -- operations ----------------------------------------------------------

def _sum_exact(a: AbelianGroup, b: AbelianGroup) -> AbelianGroup:
    return normalize(list(a.factors) + list(b.factors), a.symbolic + b.symbolic)


def direct_sum(*values: GroupValue) -> GroupValue:
    """Direct sum; bounds are summed separately and re-sandwiched."""
    lo, up, exact = ZERO, ZERO, True
    for v in values:
        if isinstance(v, Bounded):
            exact = False
            lo, up = _sum_exact(lo, v.lower), _sum_exact(up, v.upper)
        else:
            lo, up = _sum_exact(lo, v), _sum_exact(up, v)
    return lo if exact else bounded(lo, up)


def _scale(a: AbelianGroup, kappa: ExtNat) -> AbelianGroup:
    if kappa == 0:
        return ZERO
    raw = [(o, m * kappa) for o, m in a.factors]
    if kappa.is_omega:
        # w copies of a rank >= 1 free summand is a countable free summand
        raw += [(0, OMEGA) for _ in a.symbolic]
        return normalize(raw)
    return normalize(raw, list(a.symbolic) * int(kappa))


def countable_sum(value: GroupValue, kappa: ExtNat | int | str) -> GroupValue:
    """Direct sum of ``kappa`` copies of ``value``."""
    kappa = ExtNat.of(kappa)
    if isinstance(value, Bounded):
        return bounded(_scale(value.lower, kappa), _scale(value.upper, kappa))
    return _scale(value, kappa)


def _pairwise(a: AbelianGroup, b: AbelianGroup, cell) -> AbelianGroup:
    raw = []
    for oa, ma in a.factors:
        for ob, mb in b.factors:
            o = cell(oa, ob)
            if o != 1:
                raw.append((o, ma * mb))
    return normalize(raw)


def _tensor_cell(oa: int, ob: int) -> int:
    if oa == 0:
        return ob
    if ob == 0:
        return oa
    return gcd(oa, ob)


def _tor_cell(oa: int, ob: int) -> int:
    if oa == 0 or ob == 0:
        return 1
    return gcd(oa, ob)


def _symbolic_tensor(syms, other: AbelianGroup) -> AbelianGroup:
    # Z^r (x) C is r copies of C: representable only if C is free or countable
    if other.symbolic:
        raise SymbolicRankError("tensor of two symbolic ranks")
    raw, out_syms = [], []
    for s in syms:
        for o, m in other.factors:
            if m.is_omega:
                raw.append((o, OMEGA))
            elif o == 0:
                out_syms += [s] * int(m)
            else:
                raise SymbolicRankError(f"Z^{s.name} (x) Z/{o} has unknown finite rank")
    return normalize(raw, out_syms)


def tensor(a: AbelianGroup, b: AbelianGroup) -> AbelianGroup:
    """Tensor product over Z."""
    out = _pairwise(a, b, _tensor_cell)
    if a.symbolic:
        out = _sum_exact(out, _symbolic_tensor(a.symbolic, b))
    if b.symbolic:
        out = _sum_exact(out, _symbolic_tensor(b.symbolic, AbelianGroup(a.factors)))
    return out


def tor(a: AbelianGroup, b: AbelianGroup) -> AbelianGroup:
    """Tor_1 over Z; free and symbolic summands contribute nothing."""
    return _pairwise(a, b, _tor_cell)


def _n_torsion_exact(a: AbelianGroup, n: int) -> AbelianGroup:
    raw = []
    for p, k, m in a.torsion_factors():
        v = 0
        while n % p ** (v + 1) == 0:
            v += 1
        if min(k, v):
            raw.append((p ** min(k, v), m))
    return normalize(raw)


def n_torsion(value: GroupValue, n: int) -> GroupValue:
    """Subgroup of elements killed by ``n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if isinstance(value, Bounded):
        return bounded(_n_torsion_exact(value.lower, n), _n_torsion_exact(value.upper, n))
    return _n_torsion_exact(value, n)


# -- text form -----------------------------------------------------------

SEP = " (+) "


def _render_exact(g: AbelianGroup) -> str:
    parts = []
    for o, m in g.factors:
        base = "Z" if o == 0 else f"Z/{o}"
        if m.is_omega:
            parts.append(f"(+)_{{w}} {base}")
        elif int(m) == 1:
            parts.append(base)
        elif o == 0:
            parts.append(f"Z^{int(m)}")
        else:
            parts.append(f"({base})^{int(m)}")
    at = 1 if g.free_rank else 0
    parts[at:at] = [str(s) for s in g.symbolic]
    return SEP.join(parts) if parts else "0"


def render(value: GroupValue) -> str:
    """Canonical text rendering (the golden-file comparison format)."""
    if isinstance(value, Bounded):
        return f"between({_render_exact(value.lower)} | {_render_exact(value.upper)})"
    return _render_exact(value)


_TOKEN_PATTERNS = [
    (re.compile(r"^0$"), lambda m: ([], [])),
    (re.compile(r"^Z$"), lambda m: ([(0, 1)], [])),
    (re.compile(r"^Z\^(\d+)$"), lambda m: ([(0, int(m[1]))], [])),
    (re.compile(r"^Z\^([A-Za-z_]\w*)\[(\d+|w)\.\.(\d+|w)\]$"),
     lambda m: ([], [SymbolicRank(m[1], ExtNat.of(m[2]), ExtNat.of(m[3]))])),
    (re.compile(r"^Z\^([A-Za-z_]\w*)$"), lambda m: ([], [SymbolicRank(m[1])])),
    (re.compile(r"^Z/(\d+)$"), lambda m: ([(int(m[1]), 1)], [])),
    (re.compile(r"^\(Z/(\d+)\)\^(\d+|w)$"), lambda m: ([(int(m[1]), ExtNat.of(m[2]))], [])),
    (re.compile(r"^\(\+\)_\{w\}\s*Z$"), lambda m: ([(0, OMEGA)], [])),
    (re.compile(r"^\(\+\)_\{w\}\s*Z/(\d+)$"), lambda m: ([(int(m[1]), OMEGA)], [])),
]


def _split_top(text: str) -> list[str]:
    # split on "(+)" separators that are not the "(+)_{w}" prefix
    pieces, cur, i = [], "", 0
    while i < len(text):
        if text.startswith("(+)", i) and not text.startswith("(+)_", i):
            pieces.append(cur)
            cur = ""
            i += 3
            continue
        cur += text[i]
        i += 1
    pieces.append(cur)
    return pieces


def parse_group(text: str) -> GroupValue:
    """Inverse of :func:`render`."""
    text = text.strip()
    if not text:
        raise ValueError("empty group expression")
    m = re.fullmatch(r"between\((.*)\|(.*)\)", text)
    if m:
        return bounded(parse_group(m[1]), parse_group(m[2]))
    raw, syms = [], []
    for token in _split_top(text):
        token = token.strip()
        if not token:
            raise ValueError(f"empty summand in {text!r}")
        for pattern, build in _TOKEN_PATTERNS:
            mm = pattern.match(token)
            if mm:
                r, s = build(mm)
                raw += r
                syms += s
                break
        else:
            raise ValueError(f"cannot parse group summand {token!r}")
    return normalize(raw, syms)
