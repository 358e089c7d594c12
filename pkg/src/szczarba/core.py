"""The Hinich functor and the Szczarba map on ``C(Delta^n)(p, q)``.

Two independent routes compute the image of a sequence simplex:

* :func:`sz_elementwise` applies :func:`hin_vertex` to every entry of the
  chain.  This is the nerve of a poset map, so it is taken as ground truth.
* :func:`sz_operator_route` builds one simplicial operator ``E_{i,k}`` per
  component from the ``omega``/``alpha`` recursion and evaluates it on the
  generic simplex ``g_k = (0, 1, ..., n-k)``.

:func:`verify_range` compares the two on every instance up to a bound.

Vertex lists are stored bottom first.  In the hand notation
``[x_l ... x_0]`` this puts ``x_0 = q - k`` last.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .categories import (
    GHomElement,
    SubsetMorphism,
    check_sequence,
    compose_g,
    enumerate_sequences,
    seq_to_chain,
)
from .simplicial_ops import NormalOperator, apply, compose, normalize, s, d, shift

__all__ = [
    "DegenerateSequenceError",
    "hin_vertex",
    "hin_indecomposable",
    "hin_by_decomposition",
    "sz_elementwise",
    "omega",
    "alpha",
    "AlphaTable",
    "alpha_table",
    "base_operator",
    "build_operator",
    "SzResult",
    "sz_operator_route",
    "InstanceReport",
    "VerifyReport",
    "verify_instance",
    "iter_instances",
    "verify_range",
    "DEFAULT_MAX_N",
]

DEFAULT_MAX_N = 6


class DegenerateSequenceError(ValueError):
    """A sequence with a repeated entry; only the element-wise route applies."""


def hin_vertex(u: SubsetMorphism) -> GHomElement:
    """Image of ``U`` under Hin.

    For ``U = {u_0 < ... < u_{m+1}}`` the ``k`` component is ``u_{t+1} - k``
    where ``u_{t+1}`` is the least member of ``U`` that is ``>= k``.
    """
    members = u.members
    positions = []
    t = len(members) - 1
    for k in range(u.q, u.p, -1):
        while t > 0 and members[t - 1] >= k:
            t -= 1
        positions.append(members[t] - k)
    return GHomElement(u.n, u.p, u.q, tuple(positions))


def hin_indecomposable(n: int, p: int, q: int) -> GHomElement:
    """``Hin({p, q}) = (d_1^{n-q} g_q, d_1^{n-q} d_0 g_{q-1}, ...)``."""
    return GHomElement(n, p, q, tuple(q - k for k in range(q, p, -1)))


def hin_by_decomposition(u: SubsetMorphism) -> GHomElement:
    """Hin computed by splitting ``U`` into indecomposables and concatenating."""
    m = u.members
    if len(m) == 1:
        return GHomElement(u.n, u.p, u.q, ())
    result = hin_indecomposable(u.n, m[0], m[1])
    for a, b in zip(m[1:], m[2:]):
        result = compose_g(result, hin_indecomposable(u.n, a, b))
    return result


def sz_elementwise(chain: Sequence[SubsetMorphism]) -> dict[int, tuple[int, ...]]:
    """Per-component vertex lists of ``N(Hin)`` on a chain, keyed ``k = q .. p+1``."""
    if not chain:
        raise ValueError("empty chain")
    images = [hin_vertex(u) for u in chain]
    first = chain[0]
    return {k: tuple(img.component(k) for img in images) for k in range(first.q, first.p, -1)}


def omega(p: int, prefix: Sequence[int], entry: int) -> int:
    """Largest element of ``{p} | prefix`` below ``entry``."""
    if entry in prefix:
        raise DegenerateSequenceError(f"{entry} already occurs in {tuple(prefix)}")
    if entry <= p:
        raise ValueError(f"entry {entry} must exceed p={p}")
    return max([p] + [x for x in prefix if x < entry])


def _alpha_steps(k: int, seq: Sequence[int], p: int, q: int) -> list[int]:
    values = [q - k]
    for ell in range(1, len(seq) + 1):
        entry = seq[ell - 1]
        w = omega(p, seq[: ell - 1], entry)
        values.append(entry - k if w < k <= entry else values[-1])
    return values


def alpha(k: int, seq: Sequence[int], p: int, q: int) -> int:
    """``alpha_k(seq)``: the ``k``-position reached after adding every entry of ``seq``."""
    if not p < k <= q:
        raise ValueError(f"k={k} outside ({p}, {q}]")
    for x in seq:
        if not p < x < q:
            raise ValueError(f"sequence entry {x} not strictly between {p} and {q}")
    return _alpha_steps(k, seq, p, q)[-1]


@dataclass(frozen=True)
class AlphaTable:
    """``rows[ell][k]`` is ``alpha_k`` of the length-``ell`` prefix."""

    n: int
    p: int
    q: int
    sequence: tuple[int, ...]
    rows: tuple[dict, ...]
    omegas: tuple[int, ...]  # omegas[ell-1] = omega(prefix of length ell-1, i_ell)

    def value(self, k: int, length: int | None = None) -> int:
        return self.rows[len(self.sequence) if length is None else length][k]

    def row(self, length: int) -> tuple[int, ...]:
        """Values for ``k = q, q-1, ..., p+1``."""
        return tuple(self.rows[length][k] for k in range(self.q, self.p, -1))


def alpha_table(n: int, p: int, q: int, seq: Sequence[int]) -> AlphaTable:
    seq = tuple(seq)
    for x in seq:
        if not p < x < q:
            raise ValueError(f"sequence entry {x} not strictly between {p} and {q}")
    columns = {k: _alpha_steps(k, seq, p, q) for k in range(q, p, -1)}
    for k, vals in columns.items():
        if vals[-1] > n - k:
            raise ValueError(f"alpha_{k} out of range for n={n}")
    rows = tuple({k: columns[k][ell] for k in columns} for ell in range(len(seq) + 1))
    omegas = tuple(omega(p, seq[:ell], seq[ell]) for ell in range(len(seq)))
    return AlphaTable(n, p, q, seq, rows, omegas)


def base_operator(n: int, q: int, k: int) -> NormalOperator:
    """``E_{empty,k} = d_1^{n-q} d_0^{q-k}`` on the ``(n-k)``-simplex ``g_k``."""
    return normalize([d(1)] * (n - q) + [d(0)] * (q - k), n - k)


def build_operator(seq: Sequence[int], k: int, n: int, p: int, q: int) -> NormalOperator:
    """``E_{i,k}`` by induction on the length of ``seq``."""
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        raise DegenerateSequenceError(f"sequence {seq} has repeated entries")
    check_sequence(p, q, seq)
    if not p < k <= q <= n:
        raise ValueError(f"need p < k <= q <= n, got p={p}, k={k}, q={q}, n={n}")
    steps = _alpha_steps(k, seq, p, q)
    op = base_operator(n, q, k)
    for ell in range(1, len(seq) + 1):
        prev, cur = steps[ell - 1], steps[ell]
        if cur == prev:
            op = compose(NormalOperator((0,), (), op.codomain_dim), op)
        elif cur < prev:
            lift = normalize([s(0)] * (cur + 1) + [d(0)] * cur, n - k)
            op = compose(shift(op, 1), lift)
        else:
            raise AssertionError(f"alpha_{k} increased from {prev} to {cur} along {seq}")
    return op


@dataclass(frozen=True)
class SzResult:
    n: int
    p: int
    q: int
    sequence: tuple[int, ...]
    operators: dict = field(hash=False)  # k -> NormalOperator
    vertices: dict = field(hash=False)  # k -> vertex tuple

    @property
    def ks(self) -> range:
        return range(self.q, self.p, -1)

    def pretty(self) -> str:
        return "(" + ", ".join(self.operators[k].pretty(f"g_{k}") for k in self.ks) + ")"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "sequence": list(self.sequence),
            "components": [
                {
                    "k": k,
                    "operator": self.operators[k].to_dict(),
                    "vertices": list(self.vertices[k]),
                    "pretty": self.operators[k].pretty(f"g_{k}"),
                }
                for k in self.ks
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SzResult":
        comps = data["components"]
        return cls(
            data["n"],
            data["p"],
            data["q"],
            tuple(data["sequence"]),
            {c["k"]: NormalOperator.from_dict(c["operator"]) for c in comps},
            {c["k"]: tuple(c["vertices"]) for c in comps},
        )


def sz_operator_route(seq: Sequence[int], n: int, p: int, q: int) -> SzResult:
    seq = tuple(seq)
    operators = {k: build_operator(seq, k, n, p, q) for k in range(q, p, -1)}
    vertices = {k: apply(op, tuple(range(n - k + 1))) for k, op in operators.items()}
    return SzResult(n, p, q, seq, operators, vertices)


@dataclass(frozen=True)
class InstanceReport:
    n: int
    p: int
    q: int
    sequence: tuple[int, ...]
    match: bool
    operator_vertices: dict = field(hash=False)
    elementwise_vertices: dict = field(hash=False)

    def to_dict(self) -> dict:
        def enc(vs):
            return {str(k): list(v) for k, v in vs.items()}

        return {
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "sequence": list(self.sequence),
            "match": self.match,
            "operator_vertices": enc(self.operator_vertices),
            "elementwise_vertices": enc(self.elementwise_vertices),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "InstanceReport":
        def dec(vs):
            return {int(k): tuple(v) for k, v in vs.items()}

        return cls(
            data["n"],
            data["p"],
            data["q"],
            tuple(data["sequence"]),
            data["match"],
            dec(data["operator_vertices"]),
            dec(data["elementwise_vertices"]),
        )


def verify_instance(n: int, p: int, q: int, seq: Sequence[int]) -> InstanceReport:
    seq = tuple(seq)
    by_operator = sz_operator_route(seq, n, p, q).vertices
    by_element = sz_elementwise(seq_to_chain(seq, n, p, q))
    return InstanceReport(n, p, q, seq, by_operator == by_element, by_operator, by_element)


def iter_instances(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        for p in range(n + 1):
            for q in range(p + 1, n + 1):
                for ell in range(q - p):
                    for seq in enumerate_sequences(p, q, ell):
                        yield n, p, q, seq


@dataclass(frozen=True)
class VerifyReport:
    max_n: int
    instances: int
    mismatches: tuple[InstanceReport, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def text(self) -> str:
        lines = [
            f"Szczarba map verification up to n = {self.max_n}",
            f"instances checked: {self.instances}",
            f"{len(self.mismatches)} mismatches",
        ]
        for r in self.mismatches:
            lines.append(
                f"  MISMATCH n={r.n} p={r.p} q={r.q} i={r.sequence}: "
                f"operator {r.operator_vertices} vs element-wise {r.elementwise_vertices}"
            )
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "instances": self.instances,
            "mismatch_count": len(self.mismatches),
            "mismatches": [r.to_dict() for r in self.mismatches],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerifyReport":
        return cls(
            data["max_n"],
            data["instances"],
            tuple(InstanceReport.from_dict(r) for r in data["mismatches"]),
        )


def _verify_n(n: int) -> tuple[int, list[InstanceReport]]:
    count, bad = 0, []
    for inst in iter_instances(n, min_n=n):
        count += 1
        report = verify_instance(*inst)
        if not report.match:
            bad.append(report)
    return count, bad


def verify_range(max_n: int = DEFAULT_MAX_N, workers: int | None = 1) -> VerifyReport:
    """Compare both routes on every ``(n, p, q, i)`` with ``1 <= n <= max_n``.

    ``workers > 1`` splits the work by ``n`` across processes; ``None`` uses
    the CPU count.
    """
    ns = list(range(1, max_n + 1))
    if workers is None:
        workers = os.cpu_count() or 1
    if workers > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(ns))) as pool:
            parts = list(pool.map(_verify_n, ns))
    else:
        parts = [_verify_n(n) for n in ns]
    total = sum(c for c, _ in parts)
    bad = sorted(
        (r for _, rs in parts for r in rs),
        key=lambda r: (r.n, r.p, r.q, len(r.sequence), r.sequence),
    )
    return VerifyReport(max_n, total, tuple(bad))
