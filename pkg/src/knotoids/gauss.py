"""Open and cyclic Gauss codes of (virtual) knotoid diagrams.

An open Gauss code lists the classical crossing passages met while walking
the diagram from its tail to its head. Each passage records the crossing
label, whether the walk goes over or under, and the crossing sign. Virtual
crossings are never recorded: the abstract (ribbon) diagram is determined by
the classical passages alone, so virtual moves, the mixed move and the
virtual endpoint move leave the code unchanged.

Sign convention, used by every module in the package::

              ^ under
              |
      ---------------> over          positive crossing (+1)
              |

A crossing is positive when, looking along the understrand, the overstrand
passes from left to right. This is the usual right-handed convention: the
right-handed trefoil has writhe +3. Reading the four strand ends
counterclockwise starting from the incoming understrand gives
``(under in, over out, under out, over in)`` at a positive crossing and
``(under in, over in, under out, over out)`` at a negative one.

Text format (``.gko``): whitespace separated tokens ``[OU]<label>[+-]``,
``#`` comment lines allowed, an empty data line is the trivial knotoid.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import CodeSyntaxError, ValidationError

__all__ = [
    "GaussEntry",
    "OpenGaussCode",
    "CyclicGaussCode",
    "parse_code",
    "parse_cyclic",
    "serialize",
    "validate",
    "canonicalize",
    "product",
    "virtual_closure",
    "relabel",
    "read_gko",
    "write_gko",
    "all_codes",
    "random_code",
]

_TOKEN = re.compile(r"([OU])([1-9][0-9]*)([+-])\Z")


class GaussEntry(NamedTuple):
    label: int
    over: bool
    sign: int

    @property
    def pass_(self) -> str:
        return "O" if self.over else "U"

    def token(self) -> str:
        return f"{'O' if self.over else 'U'}{self.label}{'+' if self.sign > 0 else '-'}"

    @classmethod
    def from_token(cls, token: str) -> GaussEntry:
        m = _TOKEN.match(token)
        if m is None:
            raise CodeSyntaxError(f"bad token {token!r}")
        return cls(int(m.group(2)), m.group(1) == "O", 1 if m.group(3) == "+" else -1)


def O(label: int, sign: int = 1) -> GaussEntry:  # noqa: E743
    return GaussEntry(label, True, sign)


def U(label: int, sign: int = 1) -> GaussEntry:
    return GaussEntry(label, False, sign)


def _as_entries(entries: Iterable) -> tuple[GaussEntry, ...]:
    out = []
    for e in entries:
        if isinstance(e, GaussEntry):
            out.append(e)
        elif isinstance(e, str):
            out.append(GaussEntry.from_token(e))
        else:
            label, pas, sign = e
            if isinstance(pas, str):
                pas = pas.upper() in ("O", "OVER")
            out.append(GaussEntry(int(label), bool(pas), int(sign)))
    return tuple(out)


@dataclass(frozen=True)
class OpenGaussCode:
    """Tail-to-head passage sequence of a virtual knotoid diagram.

    Construction does not validate; use :func:`validate` or :func:`parse_code`.
    Entries may be given as :class:`GaussEntry`, ``(label, "O"|"U", sign)``
    triples or tokens such as ``"O1+"``.
    """

    entries: tuple[GaussEntry, ...] = ()

    def __init__(self, entries: Iterable = ()):
        object.__setattr__(self, "entries", _as_entries(entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[GaussEntry]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def n(self) -> int:
        """Number of classical crossings."""
        return len(self.entries) // 2

    def labels(self) -> list[int]:
        seen = []
        for e in self.entries:
            if e.label not in seen:
                seen.append(e.label)
        return seen

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"OpenGaussCode({serialize(self)!r})"


def _min_rotation(entries: tuple) -> tuple:
    if not entries:
        return entries
    return min(entries[i:] + entries[:i] for i in range(len(entries)))


@dataclass(frozen=True, eq=False)
class CyclicGaussCode:
    """Gauss code of a closed (virtual) knot diagram; equal up to rotation."""

    entries: tuple[GaussEntry, ...] = ()

    def __init__(self, entries: Iterable = ()):
        object.__setattr__(self, "entries", _as_entries(entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[GaussEntry]:
        return iter(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries) // 2

    def rotated(self, k: int) -> CyclicGaussCode:
        if not self.entries:
            return self
        k %= len(self.entries)
        return CyclicGaussCode(self.entries[k:] + self.entries[:k])

    def __eq__(self, other):
        if not isinstance(other, CyclicGaussCode):
            return NotImplemented
        return len(self.entries) == len(other.entries) and _min_rotation(
            self.entries
        ) == _min_rotation(other.entries)

    def __hash__(self):
        return hash(_min_rotation(self.entries))

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"CyclicGaussCode({serialize(self)!r})"


AnyCode = OpenGaussCode | CyclicGaussCode


def serialize(code: AnyCode, canonical: bool = False) -> str:
    """Space separated tokens. With ``canonical`` the labels are renumbered first."""
    if canonical:
        code = canonicalize(code)
    return " ".join(e.token() for e in code.entries)


def _tokens(text: str) -> tuple[GaussEntry, ...]:
    return tuple(GaussEntry.from_token(t) for t in text.split())


def parse_code(text: str) -> OpenGaussCode:
    """Parse a whitespace separated token list and validate it."""
    code = OpenGaussCode(_tokens(text))
    problem = validate(code)
    if problem is not None:
        raise ValidationError(problem)
    return code


def parse_cyclic(text: str) -> CyclicGaussCode:
    code = CyclicGaussCode(_tokens(text))
    problem = validate(code)
    if problem is not None:
        raise ValidationError(problem)
    return code


def validate(code: AnyCode) -> str | None:
    """Return ``None`` if ``code`` is valid, else a description of the first violation."""
    first: dict[int, GaussEntry] = {}
    count: dict[int, int] = {}
    for e in code.entries:
        if not isinstance(e.label, int) or e.label < 1:
            return f"label {e.label!r} is not a positive integer"
        if e.sign not in (1, -1):
            return f"label {e.label}: sign {e.sign!r} is not +1 or -1"
        count[e.label] = count.get(e.label, 0) + 1
        if count[e.label] > 2:
            return f"label {e.label} occurs more than twice"
        if e.label in first:
            prev = first[e.label]
            if prev.over == e.over:
                return f"label {e.label}: pass values equal"
            if prev.sign != e.sign:
                return f"label {e.label}: signs differ"
        else:
            first[e.label] = e
    for label, k in count.items():
        if k != 2:
            return f"label {label} occurs once"
    return None


def is_valid(code: AnyCode) -> bool:
    return validate(code) is None


def relabel_entries(entries: Sequence[GaussEntry]) -> tuple[GaussEntry, ...]:
    """Renumber labels 1, 2, ... in order of first occurrence."""
    mapping: dict[int, int] = {}
    out = []
    for e in entries:
        k = mapping.get(e.label)
        if k is None:
            k = mapping[e.label] = len(mapping) + 1
        out.append(GaussEntry(k, e.over, e.sign))
    return tuple(out)


def cyclic_canonical_entries(entries: tuple[GaussEntry, ...]) -> tuple[GaussEntry, ...]:
    """Smallest relabelled rotation; a complete invariant up to rotation and relabelling."""
    if not entries:
        return entries
    return min(
        relabel_entries(entries[i:] + entries[:i]) for i in range(len(entries))
    )


def canonicalize(code: AnyCode) -> AnyCode:
    """Relabel by first occurrence from the tail.

    Cyclic codes are additionally rotated to the lexicographically smallest
    relabelled rotation, so equal canonical forms mean equal up to rotation
    and relabelling.
    """
    if isinstance(code, CyclicGaussCode):
        return CyclicGaussCode(cyclic_canonical_entries(code.entries))
    return OpenGaussCode(relabel_entries(code.entries))


def relabel(code: AnyCode, mapping: dict[int, int]) -> AnyCode:
    entries = tuple(GaussEntry(mapping[e.label], e.over, e.sign) for e in code.entries)
    return type(code)(entries)


def product(k1: OpenGaussCode, k2: OpenGaussCode) -> OpenGaussCode:
    """Knotoid product: ``k1`` followed by ``k2``, re-canonicalized."""
    shift = max((e.label for e in k1.entries), default=0)
    shifted = tuple(GaussEntry(e.label + shift, e.over, e.sign) for e in k2.entries)
    return canonicalize(OpenGaussCode(k1.entries + shifted))


def virtual_closure(code: OpenGaussCode) -> CyclicGaussCode:
    """Join head to tail through virtual crossings only; the passages are unchanged."""
    return CyclicGaussCode(code.entries)


def read_gko(path: str | Path) -> OpenGaussCode:
    data = None
    for line in Path(path).read_text().splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if data is not None:
            raise CodeSyntaxError(f"{path}: more than one data line")
        data = stripped
    return parse_code(data or "")


def write_gko(code: OpenGaussCode, path: str | Path, comment: str | None = None) -> None:
    lines = [f"# {comment}"] if comment else []
    lines.append(serialize(code, canonical=True))
    Path(path).write_text("\n".join(lines) + "\n")


def _matchings(n: int) -> Iterator[list[int]]:
    """Label sequences of length 2n in first-occurrence order (perfect matchings)."""
    slots = [0] * (2 * n)

    def rec(label: int):
        try:
            i = slots.index(0)
        except ValueError:
            yield list(slots)
            return
        slots[i] = label
        for j in range(i + 1, 2 * n):
            if slots[j] == 0:
                slots[j] = label
                yield from rec(label + 1)
                slots[j] = 0
        slots[i] = 0

    if n == 0:
        yield []
        return
    yield from rec(1)


def all_codes(n: int) -> Iterator[OpenGaussCode]:
    """Every canonical valid open code with exactly ``n`` crossings.

    There are (2n-1)!! * 4**n of them: 1, 4, 48, 960, 26880, ...
    """
    for labels in _matchings(n):
        first_pos = {}
        for i, a in enumerate(labels):
            first_pos.setdefault(a, i)
        for overs in itertools.product((True, False), repeat=n):
            for signs in itertools.product((1, -1), repeat=n):
                entries = []
                for i, a in enumerate(labels):
                    is_first = first_pos[a] == i
                    over = overs[a - 1] if is_first else not overs[a - 1]
                    entries.append(GaussEntry(a, over, signs[a - 1]))
                yield OpenGaussCode(entries)


def random_code(n: int, rng: random.Random | None = None) -> OpenGaussCode:
    """Uniformly random canonical valid open code with ``n`` crossings."""
    rng = rng or random.Random()
    labels = [a for a in range(1, n + 1) for _ in range(2)]
    rng.shuffle(labels)
    over_first = {a: rng.random() < 0.5 for a in range(1, n + 1)}
    sign = {a: rng.choice((1, -1)) for a in range(1, n + 1)}
    seen = set()
    entries = []
    for a in labels:
        over = over_first[a] if a not in seen else not over_first[a]
        seen.add(a)
        entries.append(GaussEntry(a, over, sign[a]))
    return canonicalize(OpenGaussCode(entries))
