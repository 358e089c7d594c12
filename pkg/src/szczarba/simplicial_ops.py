"""Face and degeneracy operators acting on simplices of a standard simplex.

A simplex of ``Delta^m`` is given by its vertex list, a weakly increasing
tuple of integers.  ``d_i`` deletes entry ``i`` and ``s_i`` duplicates it.
Words are written the usual way, leftmost generator applied last::

    >>> op = normalize(parse_word("d_2^2 s_1^2 d_1 s_0"), 2)
    >>> op.is_identity()
    True
    >>> apply(parse_operator("s_0 d_1", 2), (0, 1, 2))
    (0, 0, 2)

Every operator has a unique normal form ``s_{j_1} ... s_{j_t} d_{i_1} ... d_{i_u}``
with ``j_1 > ... > j_t`` and ``i_1 < ... < i_u``.  :func:`normalize` reaches it
by rewriting with the simplicial identities.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Sequence

__all__ = [
    "InvalidWordError",
    "Generator",
    "NormalOperator",
    "d",
    "s",
    "identity",
    "normalize",
    "compose",
    "shift",
    "apply",
    "apply_word",
    "word_codomain",
    "from_vertex_map",
    "parse_word",
    "parse_operator",
    "format_word",
]


class InvalidWordError(ValueError):
    """A word or operator that does not fit the dimensions it is applied to."""


@dataclass(frozen=True)
class Generator:
    kind: str  # "d" or "s"
    index: int

    def __post_init__(self):
        if self.kind not in ("d", "s"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.index < 0:
            raise ValueError(f"negative generator index {self.index}")

    def __str__(self):
        return f"{self.kind}_{self.index}"


def d(i: int) -> Generator:
    return Generator("d", i)


def s(i: int) -> Generator:
    return Generator("s", i)


def _step_dim(g: Generator, dim: int) -> int:
    # dimension after applying g to a dim-simplex
    if g.kind == "d":
        if dim < 1 or g.index > dim:
            raise InvalidWordError(f"{g} cannot act on a {dim}-simplex")
        return dim - 1
    if g.index > dim:
        raise InvalidWordError(f"{g} cannot act on a {dim}-simplex")
    return dim + 1


def word_codomain(word: Sequence[Generator], domain_dim: int) -> int:
    """Dimension reached by applying ``word`` right to left, validating each step."""
    if domain_dim < 0:
        raise InvalidWordError(f"negative domain dimension {domain_dim}")
    dim = domain_dim
    for g in reversed(word):
        dim = _step_dim(g, dim)
    return dim


def apply_word(word: Sequence[Generator], simplex: Sequence[int]) -> tuple[int, ...]:
    """Act by ``word`` one generator at a time (no normalization)."""
    verts = list(simplex)
    if not verts:
        raise InvalidWordError("empty vertex list")
    for g in reversed(word):
        _step_dim(g, len(verts) - 1)
        if g.kind == "d":
            del verts[g.index]
        else:
            verts.insert(g.index, verts[g.index])
    return tuple(verts)


@dataclass(frozen=True)
class NormalOperator:
    """Simplicial operator in normal form.

    ``degeneracies`` is the strictly decreasing block ``s_{j_1} ... s_{j_t}``
    and ``faces`` the strictly increasing block ``d_{i_1} ... d_{i_u}``, so the
    faces act first.  Field-wise equality is operator equality.
    """

    degeneracies: tuple[int, ...]
    faces: tuple[int, ...]
    domain_dim: int

    def __post_init__(self):
        object.__setattr__(self, "degeneracies", tuple(int(j) for j in self.degeneracies))
        object.__setattr__(self, "faces", tuple(int(i) for i in self.faces))
        js, fs = self.degeneracies, self.faces
        if any(a <= b for a, b in zip(js, js[1:])):
            raise InvalidWordError(f"degeneracy indices not strictly decreasing: {js}")
        if any(a >= b for a, b in zip(fs, fs[1:])):
            raise InvalidWordError(f"face indices not strictly increasing: {fs}")
        if fs and fs[0] < 0 or js and js[-1] < 0:
            raise InvalidWordError("negative index")
        # faces delete distinct original vertices; at least one must survive
        if fs and fs[-1] > self.domain_dim or len(fs) > self.domain_dim:
            raise InvalidWordError(f"faces {fs} invalid on dimension {self.domain_dim}")
        mid = self.domain_dim - len(fs)
        # s_j in position r (from the right) acts on dimension mid + r
        for r, j in enumerate(reversed(js)):
            if j > mid + r:
                raise InvalidWordError(f"degeneracies {js} invalid on dimension {mid}")

    @property
    def codomain_dim(self) -> int:
        return self.domain_dim - len(self.faces) + len(self.degeneracies)

    def word(self) -> tuple[Generator, ...]:
        return tuple(s(j) for j in self.degeneracies) + tuple(d(i) for i in self.faces)

    def is_identity(self) -> bool:
        return not self.faces and not self.degeneracies

    def vertex_map(self) -> tuple[int, ...]:
        """The operator's action on the generic simplex ``(0, 1, ..., domain_dim)``."""
        return apply(self, tuple(range(self.domain_dim + 1)))

    def paper_word(self) -> tuple[Generator, ...]:
        """Equivalent word with degeneracies weakly increasing and faces weakly decreasing.

        This is the presentation used in hand calculations, e.g. ``s_0^2``
        rather than ``s_1 s_0`` and ``d_1 d_0`` rather than ``d_0 d_2``.
        """
        degs = [j - r for r, j in enumerate(reversed(self.degeneracies))]
        faces = [i - r for r, i in enumerate(self.faces)]
        return tuple(s(j) for j in degs) + tuple(d(i) for i in reversed(faces))

    def pretty(self, target: str | None = None) -> str:
        return format_word(self.paper_word(), target)

    def to_dict(self) -> dict:
        return {
            "degeneracy_indices": list(self.degeneracies),
            "face_indices": list(self.faces),
            "domain_dim": self.domain_dim,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NormalOperator":
        return cls(tuple(data["degeneracy_indices"]), tuple(data["face_indices"]), data["domain_dim"])

    def __matmul__(self, other: "NormalOperator") -> "NormalOperator":
        return compose(self, other)

    def __str__(self):
        return self.pretty() or "id"


def identity(dim: int) -> NormalOperator:
    return NormalOperator((), (), dim)


# Rewrite rules, each on an adjacent pair (left, right) of the word.  Together
# they move faces to the right of degeneracies, sort faces increasingly and
# degeneracies decreasingly.
def _rewrite_pair(a: Generator, b: Generator) -> list[Generator] | None:
    if a.kind == "d" and b.kind == "d":
        if a.index >= b.index:  # d_i d_j = d_j d_{i+1}
            return [b, d(a.index + 1)]
    elif a.kind == "s" and b.kind == "s":
        if a.index <= b.index:  # s_i s_j = s_{j+1} s_i
            return [s(b.index + 1), a]
    elif a.kind == "d" and b.kind == "s":
        i, j = a.index, b.index
        if i < j:
            return [s(j - 1), d(i)]
        if i == j or i == j + 1:
            return []
        return [s(j), d(i - 1)]
    return None


def normalize(word: Iterable[Generator], domain_dim: int) -> NormalOperator:
    """Normal form of ``word`` acting on ``domain_dim``-simplices.

    Raises :class:`InvalidWordError` if the word does not compose at these
    dimensions.
    """
    word = list(word)
    word_codomain(word, domain_dim)
    changed = True
    while changed:
        changed = False
        pos = 0
        while pos < len(word) - 1:
            repl = _rewrite_pair(word[pos], word[pos + 1])
            if repl is None:
                pos += 1
                continue
            word[pos:pos + 2] = repl
            changed = True
            pos = max(pos - 1, 0)
    degs = tuple(g.index for g in word if g.kind == "s")
    faces = tuple(g.index for g in word if g.kind == "d")
    return NormalOperator(degs, faces, domain_dim)


def compose(outer: NormalOperator, inner: NormalOperator) -> NormalOperator:
    """``outer`` after ``inner``."""
    if inner.codomain_dim != outer.domain_dim:
        raise InvalidWordError(
            f"cannot compose: inner lands in dimension {inner.codomain_dim}, "
            f"outer expects {outer.domain_dim}"
        )
    return normalize(outer.word() + inner.word(), inner.domain_dim)


def shift(op: NormalOperator, amount: int = 1) -> NormalOperator:
    """Add ``amount`` to every index, so the operator leaves the first ``amount`` vertices alone."""
    if amount < 0:
        raise ValueError("shift amount must be non-negative")
    return NormalOperator(
        tuple(j + amount for j in op.degeneracies),
        tuple(i + amount for i in op.faces),
        op.domain_dim + amount,
    )


def apply(op: NormalOperator, simplex: Sequence[int]) -> tuple[int, ...]:
    if len(simplex) != op.domain_dim + 1:
        raise InvalidWordError(
            f"operator on dimension {op.domain_dim} applied to a simplex with {len(simplex)} vertices"
        )
    dropped = set(op.faces)
    verts = [v for pos, v in enumerate(simplex) if pos not in dropped]
    for j in reversed(op.degeneracies):
        verts.insert(j, verts[j])
    return tuple(verts)


def from_vertex_map(vertex_map: Sequence[int], domain_dim: int) -> NormalOperator:
    """The operator sending ``(x_0, ..., x_m)`` to ``(x_{f(0)}, ..., x_{f(c)})``.

    ``vertex_map`` is the weakly increasing map ``f``.
    """
    f = tuple(vertex_map)
    if not f or any(a > b for a, b in zip(f, f[1:])) or f[0] < 0 or f[-1] > domain_dim:
        raise InvalidWordError(f"{f} is not a monotone map into [0, {domain_dim}]")
    image = set(f)
    faces = tuple(v for v in range(domain_dim + 1) if v not in image)
    repeats = [j for j in range(len(f) - 1) if f[j] == f[j + 1]]
    return NormalOperator(tuple(reversed(repeats)), faces, domain_dim)


_TOKEN = re.compile(r"([ds])_\{?(\d+)\}?(?:\^\{?(\d+)\}?)?")


def parse_word(text: str) -> list[Generator]:
    """Parse ``"d_1^3 d_0 s_0^2"`` style notation into a list of generators."""
    text = text.strip()
    word: list[Generator] = []
    pos = 0
    for m in _TOKEN.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"cannot parse {text[pos:m.start()]!r} in {text!r}")
        power = int(m.group(3)) if m.group(3) else 1
        word.extend([Generator(m.group(1), int(m.group(2)))] * power)
        pos = m.end()
    if text[pos:].strip():
        raise ValueError(f"cannot parse {text[pos:]!r} in {text!r}")
    return word


def parse_operator(text: str, domain_dim: int) -> NormalOperator:
    return normalize(parse_word(text), domain_dim)


def format_word(word: Sequence[Generator], target: str | None = None) -> str:
    """Exponent-compressed rendering, optionally followed by the simplex it acts on."""
    parts = []
    for g, run in groupby(word):
        power = len(list(run))
        parts.append(f"{g}^{power}" if power > 1 else str(g))
    if target is not None:
        parts.append(target)
    return " ".join(parts)
