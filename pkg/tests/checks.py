"""Exhaustive structural checks shared by the unit and acceptance suites.

Each function returns ``(checked, violations)``.
"""

import itertools
from math import prod

from szczarba.categories import (
    HomPoset,
    chain_degeneracy,
    chain_face,
    compose_c,
    compose_g,
    enumerate_nerve,
    enumerate_sequences,
    seq_to_chain,
)
from szczarba.core import alpha_table, hin_vertex, omega, sz_elementwise, sz_operator_route


def c_homs(max_n):
    for n in range(1, max_n + 1):
        for p, q in itertools.combinations(range(n + 1), 2):
            yield HomPoset("c", n, p, q)


def sequence_chains(max_n):
    for poset in c_homs(max_n):
        n, p, q = poset.n, poset.p, poset.q
        for ell in range(q - p):
            for seq in enumerate_sequences(p, q, ell):
                yield n, p, q, seq


def hin_monotonicity(max_n):
    checked = bad = 0
    for poset in c_homs(max_n):
        elems = poset.elements()
        images = {u: hin_vertex(u) for u in elems}
        for a, b in itertools.product(elems, repeat=2):
            if a <= b:
                checked += 1
                bad += not images[a] <= images[b]
    return checked, bad


def hin_functoriality(max_n):
    checked = bad = 0
    for n in range(1, max_n + 1):
        for p, r, q in itertools.combinations(range(n + 1), 3):
            for u in HomPoset("c", n, p, r).elements():
                for v in HomPoset("c", n, r, q).elements():
                    checked += 1
                    bad += hin_vertex(compose_c(u, v)) != compose_g(hin_vertex(u), hin_vertex(v))
    return checked, bad


def _naturality_chains(poset, max_degenerate_dim):
    for ell in range(max_degenerate_dim + 1):
        yield from enumerate_nerve(poset, ell)
    for ell in range(max_degenerate_dim + 1, poset.q - poset.p):
        yield from enumerate_nerve(poset, ell, nondegenerate_only=True)


def elementwise_naturality(max_n, max_degenerate_dim=2):
    """``sz_elementwise`` commutes with chain faces and degeneracies.

    All chains up to ``max_degenerate_dim`` plus every nondegenerate chain.
    """
    checked = bad = 0
    for poset in c_homs(max_n):
        for c in _naturality_chains(poset, max_degenerate_dim):
            image = sz_elementwise(c)
            for j in range(len(c)):
                checked += 1
                deg = sz_elementwise(chain_degeneracy(j, c))
                bad += deg != {k: chain_degeneracy(j, v) for k, v in image.items()}
                if len(c) > 1:
                    checked += 1
                    face = sz_elementwise(chain_face(j, c))
                    bad += face != {k: chain_face(j, v) for k, v in image.items()}
    return checked, bad


def sz_functoriality(max_n):
    """Union of two composable equal-length chains maps to the concatenation of images."""
    checked = bad = 0
    for n in range(1, max_n + 1):
        for p, r, q in itertools.combinations(range(n + 1), 3):
            for ell in range(min(r - p, q - r)):
                left = [seq_to_chain(s, n, p, r) for s in enumerate_sequences(p, r, ell)]
                right = [seq_to_chain(s, n, r, q) for s in enumerate_sequences(r, q, ell)]
                for a, b in itertools.product(left, right):
                    union = tuple(compose_c(x, y) for x, y in zip(a, b))
                    expected = {**sz_elementwise(b), **sz_elementwise(a)}
                    checked += 1
                    bad += sz_elementwise(union) != expected
            # arbitrary chains, degenerate ones included
            for ell in range(2):
                left = enumerate_nerve(HomPoset("c", n, p, r), ell)
                right = enumerate_nerve(HomPoset("c", n, r, q), ell)
                for a, b in itertools.product(left, right):
                    union = tuple(compose_c(x, y) for x, y in zip(a, b))
                    checked += 1
                    bad += sz_elementwise(union) != {**sz_elementwise(b), **sz_elementwise(a)}
    return checked, bad


def hom_cardinalities(max_n):
    checked = bad = 0
    for n in range(1, max_n + 1):
        for p in range(n + 1):
            for q in range(p + 1, n + 1):
                checked += 2
                bad += len(HomPoset("c", n, p, q).elements()) != 2 ** (q - p - 1)
                bad += len(HomPoset("g", n, p, q).elements()) != prod(n - k + 1 for k in range(p + 1, q + 1))
    return checked, bad


def x0_anchor(max_n):
    """Every component of the image of a sequence chain ends at ``q - k``, on both routes."""
    checked = bad = 0
    for n, p, q, seq in sequence_chains(max_n):
        by_element = sz_elementwise(seq_to_chain(seq, n, p, q))
        by_operator = sz_operator_route(seq, n, p, q).vertices
        for k in range(q, p, -1):
            checked += 1
            bad += by_element[k][-1] != q - k or by_operator[k][-1] != q - k
    return checked, bad


def operator_arity(max_n):
    checked = bad = 0
    for n, p, q, seq in sequence_chains(max_n):
        for k, op in sz_operator_route(seq, n, p, q).operators.items():
            checked += 1
            bad += op.domain_dim != n - k or op.codomain_dim != len(seq)
    return checked, bad


def alpha_monotonicity(max_n):
    """Alpha never increases along prefixes, and drops exactly on ``omega < k <= i_l``."""
    checked = bad = 0
    for n, p, q, seq in sequence_chains(max_n):
        table = alpha_table(n, p, q, seq)
        for ell in range(1, len(seq) + 1):
            w = omega(p, seq[: ell - 1], seq[ell - 1])
            for k in range(q, p, -1):
                prev, cur = table.value(k, ell - 1), table.value(k, ell)
                checked += 1
                bad += cur > prev
                bad += (cur < prev) != (w < k <= seq[ell - 1])
    return checked, bad
