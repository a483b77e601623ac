"""K-theory profiles of coefficient rings.

A profile tabulates ``K_q(R)`` and the Nil-groups ``NK_q(R)`` over a declared
range of ``q``.  Entries whose value is not known are stored as
:data:`UNKNOWN` and every query on them fails loudly.

Profile documents are small INI-like text files::

    # lower K-theory of the integral group ring of C2
    [meta]
    name = Z[C2]
    regular = false
    q_range = -1..1

    [K]
    -1 = 0
    0 = Z
    1 = (Z/2)^2

    [NK]
    -1 = ?
    0 = 0
    1 = 0

Values use the canonical group rendering (see :func:`abelian.parse_group`);
``?`` marks an unknown entry.  Lines of the form ``K[3] = Z/16 (+) Z/3`` or
``NK[0] = 0`` are accepted in any section.  Keys ``note.<anything>`` in
``[meta]`` carry free-text provenance.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Union

from .abelian import ZERO, GroupValue, cyclic, free, parse_group, render, OMEGA, normalize, SymbolicRank, Bounded
from .errors import OutOfRangeError, ProfileError, UnknownEntryError


class _Unknown:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNKNOWN"

    def __str__(self):
        return "?"


UNKNOWN = _Unknown()
Entry = Union[GroupValue, _Unknown]


def _is_zero(v: Entry) -> bool:
    return v is not UNKNOWN and not isinstance(v, Bounded) and v.is_zero


@dataclass(frozen=True)
class KTheoryProfile:
    name: str
    regular: bool
    q_range: tuple[int, int]
    k_table: Mapping[int, Entry]
    nk_table: Mapping[int, Entry]
    notes: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        lo, hi = self.q_range
        if lo > hi:
            raise ProfileError(f"empty q_range {lo}..{hi}")
        for q in range(lo, hi + 1):
            if q not in self.k_table:
                raise ProfileError(f"missing entry K[{q}]")
            if q not in self.nk_table:
                raise ProfileError(f"missing entry NK[{q}]")
        extra = (set(self.k_table) | set(self.nk_table)) - set(range(lo, hi + 1))
        if extra:
            raise ProfileError(f"entries outside q_range: {sorted(extra)}")
        if self.regular:
            for q, v in self.nk_table.items():
                if not _is_zero(v):
                    raise ProfileError(f"regular ring must have zero NK (NK[{q}] = {v})")
            for q, v in self.k_table.items():
                if q < 0 and not _is_zero(v):
                    raise ProfileError(f"regular ring must have zero negative K (K[{q}] = {v})")

    def covers(self, q: int) -> bool:
        return self.q_range[0] <= q <= self.q_range[1]


def _lookup(profile: KTheoryProfile, table: Mapping[int, Entry], q: int, label: str) -> GroupValue:
    if profile.covers(q):
        v = table[q]
        if v is UNKNOWN:
            raise UnknownEntryError(f"{label}_{q}({profile.name}) is not known")
        return v
    if profile.regular and (q < 0 or label == "NK"):
        return ZERO
    lo, hi = profile.q_range
    raise OutOfRangeError(f"{label}_{q}({profile.name}) is out of declared range {lo}..{hi}")


def get_k(profile: KTheoryProfile, q: int) -> GroupValue:
    return _lookup(profile, profile.k_table, q, "K")


def get_nk(profile: KTheoryProfile, q: int) -> GroupValue:
    return _lookup(profile, profile.nk_table, q, "NK")


# -- built-in rings ------------------------------------------------------

def _z_profile() -> KTheoryProfile:
    k = {0: free(1), 1: cyclic(2), 2: cyclic(2), 3: cyclic(48), 4: ZERO,
         5: free(1), 6: ZERO, 7: cyclic(240)}
    return KTheoryProfile(
        "Z", True, (0, 7), k, {q: ZERO for q in k},
        {"source": "lower and middle K-groups of the integers (Weibel's survey table)"},
    )


def fq_profile(q: int, q_max: int = 24, name: str | None = None) -> KTheoryProfile:
    """Finite field with ``q`` elements: K_{2i-1} = Z/(q^i - 1), K_{2i} = 0 (Quillen)."""
    from sympy import factorint

    if q < 2 or len(factorint(q)) != 1:
        raise ValueError(f"finite fields have prime-power order, got {q}")
    k = {0: free(1)}
    for j in range(1, q_max + 1):
        if j % 2:
            order = q ** ((j + 1) // 2) - 1
            k[j] = cyclic(order) if order > 1 else ZERO
        else:
            k[j] = ZERO
    return KTheoryProfile(
        name or f"F{q}", True, (0, q_max), k, {j: ZERO for j in k},
        {"source": f"Quillen's computation of K_*(F_{q})"},
    )


def _group_ring_profile(name: str, k1, k_minus_1, nk) -> KTheoryProfile:
    k = {1: k1, 0: free(1), -1: k_minus_1}
    nil = {1: nk, 0: nk, -1: UNKNOWN}
    return KTheoryProfile(
        name, False, (-1, 1), k, nil,
        {"K1": "units of the group ring (Oliver, Higman)",
         "K0": "reduced K0 vanishes",
         "K-1": "Carter; symbolic ranks depend on Schur indices",
         "NK": "Weibel's Nil-group computations"},
    )


def _builtins() -> dict[str, KTheoryProfile]:
    countable_z2 = cyclic(2, OMEGA)
    return {
        "Z": _z_profile(),
        "F2": fq_profile(2),
        "Z[C2]": _group_ring_profile("Z[C2]", cyclic(2, 2), ZERO, ZERO),
        "Z[C2xC2]": _group_ring_profile("Z[C2xC2]", cyclic(2, 3),
                                        normalize([], [SymbolicRank("r")]), countable_z2),
        "Z[C4]": _group_ring_profile("Z[C4]", normalize([(2, 1), (4, 1)]),
                                     normalize([], [SymbolicRank("s")]), countable_z2),
    }


BUILTIN_NAMES = ("Z", "F2", "Fq(p^m)", "Z[C2]", "Z[C2xC2]", "Z[C4]")

_FQ = re.compile(r"^(?:F(\d+)|Fq\((\d+)\)|F_(\d+))$")


def builtin(name: str) -> KTheoryProfile:
    """Built-in profile by name: Z, F2, F<q> / Fq(<q>), Z[C2], Z[C2xC2], Z[C4]."""
    table = _builtins()
    if name in table:
        return table[name]
    m = _FQ.match(name)
    if m:
        q = int(next(g for g in m.groups() if g))
        try:
            return fq_profile(q, name=name)
        except ValueError as exc:
            raise KeyError(str(exc)) from None
    raise KeyError(f"unknown ring {name!r}; built-ins are {', '.join(BUILTIN_NAMES)}")


# -- documents -----------------------------------------------------------

_LINE = re.compile(r"^\s*([^=]+?)\s*=\s*(.*?)\s*$")
_TABLE_KEY = re.compile(r"^(K|NK)\[\s*(-?\d+)\s*\]$")


def _parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not m:
        raise ValueError(f"expected a range 'a..b', got {text!r}")
    return int(m[1]), int(m[2])


def _parse_entry(text: str) -> Entry:
    if text == "?":
        return UNKNOWN
    return parse_group(text)


def load_profile(source: str) -> KTheoryProfile:
    """Parse a profile document (see module docstring for the grammar)."""
    meta: dict[str, str] = {}
    tables: dict[str, dict[int, Entry]] = {"K": {}, "NK": {}}
    section = None
    seen_any = False
    for lineno, line in enumerate(source.splitlines(), 1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        seen_any = True
        if stripped.startswith("["):
            m = re.fullmatch(r"\[\s*(\w+)\s*\]", stripped)
            if not m or m[1] not in ("meta", "K", "NK"):
                raise ProfileError(f"unknown section header {stripped!r}", lineno, 1)
            section = m[1]
            continue
        m = _LINE.match(stripped)
        if not m:
            raise ProfileError(f"expected 'key = value', got {stripped!r}", lineno, 1)
        key, value = m[1], m[2]
        col = line.find(value) + 1 if value else None
        tk = _TABLE_KEY.match(key)
        try:
            if tk:
                tables[tk[1]][int(tk[2])] = _parse_entry(value)
            elif section in ("K", "NK") and re.fullmatch(r"-?\d+", key):
                tables[section][int(key)] = _parse_entry(value)
            elif section == "meta":
                meta[key] = value
            else:
                raise ProfileError(f"unexpected key {key!r}", lineno, 1)
        except ValueError as exc:
            if isinstance(exc, ProfileError):
                raise
            raise ProfileError(str(exc), lineno, col) from None
    if not seen_any:
        raise ProfileError("empty profile document", 1, 1)
    for required in ("name", "regular"):
        if required not in meta:
            raise ProfileError(f"missing [meta] key {required!r}")
    regular = meta["regular"].lower()
    if regular not in ("true", "false"):
        raise ProfileError(f"regular must be true or false, got {meta['regular']!r}")
    regular = regular == "true"
    k, nk = tables["K"], tables["NK"]
    if "q_range" in meta:
        try:
            q_range = _parse_range(meta["q_range"])
        except ValueError as exc:
            raise ProfileError(str(exc)) from None
    elif k:
        q_range = (min(k), max(k))
    else:
        raise ProfileError("no K entries and no q_range")
    if regular:
        for q in range(q_range[0], q_range[1] + 1):
            nk.setdefault(q, ZERO)
    notes = {key[5:]: v for key, v in meta.items() if key.startswith("note.")}
    if regular:
        for q, v in k.items():
            if q < 0 and not _is_zero(v):
                raise ProfileError(f"regular ring must have zero negative K (K[{q}] = {v})")
    return KTheoryProfile(meta["name"], regular, q_range, k, nk, notes)


def load_profile_file(path: str | Path) -> KTheoryProfile:
    return load_profile(Path(path).read_text(encoding="utf-8"))


def dump_profile(profile: KTheoryProfile) -> str:
    """Render ``profile`` as a document that :func:`load_profile` reads back."""
    lo, hi = profile.q_range
    lines = ["[meta]", f"name = {profile.name}",
             f"regular = {'true' if profile.regular else 'false'}", f"q_range = {lo}..{hi}"]
    lines += [f"note.{key} = {value}" for key, value in sorted(profile.notes.items())]
    for label, table in (("K", profile.k_table), ("NK", profile.nk_table)):
        lines += ["", f"[{label}]"]
        for q in range(lo, hi + 1):
            v = table[q]
            lines.append(f"{q} = {'?' if v is UNKNOWN else render(v)}")
    return "\n".join(lines) + "\n"
