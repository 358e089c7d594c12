"""Hom-posets of the two poset-enriched categories attached to ``Delta^n``.

``C`` side: a morphism ``p -> q`` is a subset ``U`` with ``{p, q} <= U <= {p..q}``,
ordered by reverse inclusion, composed by union.

``G`` side: a morphism ``p -> q`` is a tuple of positions ``(a_q, ..., a_{p+1})``
with ``a_k`` in ``[0, n-k]``; position ``a`` in the chain ``<g_k>^{n-k}`` stands
for ``d_1^{n-k-a} d_0^a g_k``.  Order is componentwise, composition is
concatenation.

Nerve simplices (chains) are plain tuples of poset elements, bottom first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import prod
from typing import Callable, Sequence

from .simplicial_ops import NormalOperator

__all__ = [
    "SubsetMorphism",
    "GHomElement",
    "HomPoset",
    "position_operator",
    "position_label",
    "check_sequence",
    "compose_c",
    "compose_g",
    "seq_to_chain",
    "enumerate_sequences",
    "chain_face",
    "chain_degeneracy",
    "is_chain",
    "is_nondegenerate",
    "enumerate_nerve",
    "hasse_dot",
    "category_dot",
]


def _check_objects(n: int, p: int, q: int) -> None:
    if not 0 <= p <= q <= n:
        raise ValueError(f"need 0 <= p <= q <= n, got n={n}, p={p}, q={q}")


@dataclass(frozen=True)
class SubsetMorphism:
    n: int
    p: int
    q: int
    members: tuple[int, ...]

    def __post_init__(self):
        _check_objects(self.n, self.p, self.q)
        members = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", members)
        if not members or members[0] != self.p or members[-1] != self.q:
            raise ValueError(f"{set(members)} must contain {self.p} and {self.q} as extremes")

    @classmethod
    def from_members(cls, n: int, members: Sequence[int]) -> "SubsetMorphism":
        return cls(n, min(members), max(members), tuple(members))

    def __le__(self, other: "SubsetMorphism") -> bool:
        return set(other.members) <= set(self.members)

    def __lt__(self, other: "SubsetMorphism") -> bool:
        return self <= other and self != other

    def to_list(self) -> list[int]:
        return list(self.members)

    def __str__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


def position_operator(n: int, k: int, a: int) -> NormalOperator:
    """Face operator picking vertex ``a`` of ``g_k``, a ``(n-k)``-simplex."""
    m = n - k
    if not 0 <= a <= m:
        raise ValueError(f"position {a} outside [0, {m}] for k={k}, n={n}")
    return NormalOperator((), tuple(v for v in range(m + 1) if v != a), m)


def position_label(n: int, k: int, a: int) -> str:
    return position_operator(n, k, a).pretty(f"g_{k}")


@dataclass(frozen=True)
class GHomElement:
    n: int
    p: int
    q: int
    positions: tuple[int, ...]  # (a_q, a_{q-1}, ..., a_{p+1})

    def __post_init__(self):
        _check_objects(self.n, self.p, self.q)
        positions = tuple(int(a) for a in self.positions)
        object.__setattr__(self, "positions", positions)
        if len(positions) != self.q - self.p:
            raise ValueError(f"expected {self.q - self.p} positions, got {len(positions)}")
        for k, a in zip(self.ks, positions):
            if not 0 <= a <= self.n - k:
                raise ValueError(f"position a_{k}={a} outside [0, {self.n - k}]")

    @property
    def ks(self) -> range:
        return range(self.q, self.p, -1)

    def component(self, k: int) -> int:
        if not self.p < k <= self.q:
            raise KeyError(k)
        return self.positions[self.q - k]

    def __le__(self, other: "GHomElement") -> bool:
        return all(a <= b for a, b in zip(self.positions, other.positions))

    def __lt__(self, other: "GHomElement") -> bool:
        return self <= other and self != other

    def labels(self) -> list[str]:
        return [position_label(self.n, k, a) for k, a in zip(self.ks, self.positions)]

    def pretty(self) -> str:
        if self.p == self.q:
            return f"id_{self.q}"
        return "(" + ", ".join(self.labels()) + ")"

    def to_list(self) -> list[int]:
        return list(self.positions)

    def __str__(self):
        return self.pretty()


def compose_c(first: SubsetMorphism, second: SubsetMorphism) -> SubsetMorphism:
    """Compose ``first: p -> r`` with ``second: r -> q`` by union."""
    if first.n != second.n or first.q != second.p:
        raise ValueError(f"not composable: {first} then {second}")
    return SubsetMorphism(first.n, first.p, second.q, first.members + second.members)


def compose_g(first: GHomElement, second: GHomElement) -> GHomElement:
    """Compose ``first: p -> r`` with ``second: r -> q``; ``second``'s components lead."""
    if first.n != second.n or first.q != second.p:
        raise ValueError(f"not composable: {first} then {second}")
    return GHomElement(first.n, first.p, second.q, second.positions + first.positions)


def check_sequence(p: int, q: int, seq: Sequence[int]) -> tuple[int, ...]:
    """Validate an injective sequence with entries strictly between ``p`` and ``q``."""
    seq = tuple(seq)
    for x in seq:
        if not p < x < q:
            raise ValueError(f"sequence entry {x} not strictly between {p} and {q}")
    if len(set(seq)) != len(seq):
        raise ValueError(f"sequence {seq} has repeated entries")
    return seq


def seq_to_chain(seq: Sequence[int], n: int, p: int, q: int) -> tuple[SubsetMorphism, ...]:
    """Chain ``{p, i_1..i_l, q} <= {p, i_1..i_{l-1}, q} <= ... <= {p, q}``, bottom first."""
    seq = check_sequence(p, q, seq)
    ell = len(seq)
    return tuple(SubsetMorphism(n, p, q, (p, q) + seq[: ell - j]) for j in range(ell + 1))


def enumerate_sequences(p: int, q: int, ell: int) -> list[tuple[int, ...]]:
    if ell < 0 or ell > q - p - 1:
        return []
    return list(permutations(range(p + 1, q), ell))


def chain_face(j: int, chain: Sequence) -> tuple:
    if not 0 <= j < len(chain) or len(chain) < 2:
        raise IndexError(f"face {j} undefined on a chain of length {len(chain)}")
    return tuple(chain[:j]) + tuple(chain[j + 1:])


def chain_degeneracy(j: int, chain: Sequence) -> tuple:
    if not 0 <= j < len(chain):
        raise IndexError(f"degeneracy {j} undefined on a chain of length {len(chain)}")
    return tuple(chain[: j + 1]) + tuple(chain[j:])


def is_chain(chain: Sequence, leq: Callable = lambda a, b: a <= b) -> bool:
    return all(leq(a, b) for a, b in zip(chain, chain[1:]))


def is_nondegenerate(chain: Sequence) -> bool:
    return all(a != b for a, b in zip(chain, chain[1:]))


@dataclass(frozen=True)
class HomPoset:
    """One hom-poset ``hom(p, q)`` of either category, ``kind`` in {"c", "g"}."""

    kind: str
    n: int
    p: int
    q: int

    def __post_init__(self):
        if self.kind not in ("c", "g"):
            raise ValueError(f"kind must be 'c' or 'g', got {self.kind!r}")
        _check_objects(self.n, self.p, self.q)

    def elements(self) -> list:
        n, p, q = self.n, self.p, self.q
        if self.kind == "c":
            inner = range(p + 1, q)
            subsets = [c for r in range(len(inner) + 1) for c in combinations(inner, r)]
            elems = [SubsetMorphism(n, p, q, (p, q) + c) for c in subsets]
            # bottom (largest subset) first
            return sorted(elems, key=lambda u: (-len(u.members), u.members))
        ranges = [range(n - k + 1) for k in range(q, p, -1)]
        return [GHomElement(n, p, q, pos) for pos in product(*ranges)]

    def size(self) -> int:
        if self.kind == "c":
            return 2 ** max(self.q - self.p - 1, 0)
        return prod(self.n - k + 1 for k in range(self.p + 1, self.q + 1))

    def cover_pairs(self) -> list[tuple]:
        """Pairs ``(a, b)`` with ``a < b`` and nothing strictly between."""
        elems = self.elements()
        pairs = []
        for a in elems:
            for b in elems:
                if a < b and not any(a < c < b for c in elems):
                    pairs.append((a, b))
        return pairs

    def label(self) -> str:
        return f"P_{self.kind.upper()}(Delta^{self.n})({self.p},{self.q})"


def enumerate_nerve(poset: HomPoset, ell: int, nondegenerate_only: bool = False) -> list[tuple]:
    """All chains ``e_0 <= ... <= e_ell`` in ``poset``, lexicographic in element order."""
    if ell < 0:
        return []
    elems = poset.elements()
    above = {
        i: [j for j, b in enumerate(elems) if (elems[i] < b if nondegenerate_only else elems[i] <= b)]
        for i in range(len(elems))
    }
    out: list[tuple] = []

    def extend(chain: list[int]):
        if len(chain) == ell + 1:
            out.append(tuple(elems[i] for i in chain))
            return
        for j in above[chain[-1]]:
            chain.append(j)
            extend(chain)
            chain.pop()

    for i in range(len(elems)):
        extend([i])
    return out


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def hasse_dot(poset: HomPoset) -> str:
    """Graphviz source for the Hasse diagram, arrows pointing up the order."""
    lines = [f'digraph "{poset.label()}" {{', "  rankdir=BT;", "  node [shape=box];"]
    elems = poset.elements()
    index = {e: i for i, e in enumerate(elems)}
    for e, i in index.items():
        lines.append(f'  e{i} [label="{_dot_escape(str(e))}"];')
    for a, b in poset.cover_pairs():
        lines.append(f"  e{index[a]} -> e{index[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _hom_label(poset: HomPoset) -> str:
    elems = poset.elements()
    if all(a <= b for a, b in zip(elems, elems[1:])):
        return " ≤ ".join(map(str, elems))
    return "; ".join(map(str, elems))


def category_dot(kind: str, n: int) -> str:
    """Objects ``0..n`` with an arrow ``p -> q`` per nontrivial hom, labelled by its poset."""
    lines = [f'digraph "P_{kind.upper()}(Delta^{n})" {{', "  rankdir=LR;"]
    for obj in range(n + 1):
        lines.append(f'  o{obj} [label="{obj}", shape=circle];')
    for p in range(n + 1):
        for q in range(p + 1, n + 1):
            label = _dot_escape(_hom_label(HomPoset(kind, n, p, q)))
            lines.append(f'  o{p} -> o{q} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
