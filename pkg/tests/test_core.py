import itertools
from math import perm

import pytest

import checks
from szczarba.categories import HomPoset, SubsetMorphism, enumerate_nerve, seq_to_chain
from szczarba.core import (
    DegenerateSequenceError,
    SzResult,
    VerifyReport,
    alpha,
    alpha_table,
    base_operator,
    build_operator,
    hin_by_decomposition,
    hin_indecomposable,
    hin_vertex,
    iter_instances,
    omega,
    sz_elementwise,
    sz_operator_route,
    verify_instance,
    verify_range,
)
from szczarba.simplicial_ops import apply, normalize, parse_operator, parse_word


def U(n, *members):
    return SubsetMorphism.from_members(n, members)


def hin_brute(u):
    """Least member of U that is >= k, minus k, for k = q .. p+1."""
    return tuple(min(x for x in u.members if x >= k) - k for k in range(u.q, u.p, -1))


# -- Hin -----------------------------------------------------------------------


def test_hin_on_indecomposables():
    for n in range(1, 6):
        for p, q in itertools.combinations(range(n + 1), 2):
            g = hin_vertex(U(n, p, q))
            assert g.positions == tuple(q - k for k in range(q, p, -1))
            assert g == hin_indecomposable(n, p, q)


def test_hin_worked_example():
    g = hin_vertex(U(5, 0, 2, 4))
    assert (g.p, g.q) == (0, 4)
    assert g.pretty() == "(d_1 g_4, d_1 d_0 g_3, d_1^3 g_2, d_1^3 d_0 g_1)"


def test_hin_on_full_subset():
    g = hin_vertex(U(3, 0, 1, 2, 3))
    assert g.positions == (0, 0, 0)
    assert g.pretty() == "(g_3, d_1 g_2, d_1^2 g_1)"


def test_hin_three_ways_agree():
    for poset in checks.c_homs(6):
        for u in poset.elements():
            assert hin_vertex(u).positions == hin_brute(u)
            assert hin_vertex(u) == hin_by_decomposition(u)


def test_hin_monotone_and_functorial():
    assert checks.hin_monotonicity(5)[1] == 0
    assert checks.hin_functoriality(5)[1] == 0


# -- element-wise route --------------------------------------------------------


def test_elementwise_component_table():
    got = sz_elementwise(seq_to_chain((2, 1), 3, 0, 3))
    assert got == {3: (0, 0, 0), 2: (0, 0, 1), 1: (0, 1, 2)}


def test_elementwise_singleton():
    assert sz_elementwise((U(4, 1, 3),)) == {3: (0,), 2: (1,)}


def test_elementwise_other_ordering():
    # entries of the chain {0,1,2,3} <= {0,1,3} <= {0,3}, read off one by one
    got = sz_elementwise(seq_to_chain((1, 2), 3, 0, 3))
    assert got == {3: (0, 0, 0), 2: (0, 1, 1), 1: (0, 0, 2)}
    assert got[2] == apply(parse_operator("s_1", 1), (0, 1))
    assert got[1] == apply(parse_operator("s_0 d_1", 2), (0, 1, 2))


def test_elementwise_is_natural():
    assert checks.elementwise_naturality(4, max_degenerate_dim=3)[1] == 0


def test_elementwise_accepts_degenerate_chains():
    c = (U(3, 0, 1, 3), U(3, 0, 1, 3), U(3, 0, 3))
    assert sz_elementwise(c) == {3: (0, 0, 0), 2: (1, 1, 1), 1: (0, 0, 2)}


# -- omega and alpha -------------------------------------------------------------


def test_omega_examples():
    assert omega(0, (), 2) == 0
    assert omega(0, (2,), 1) == 0
    assert omega(0, (1, 3), 2) == 1


def test_omega_rejects_repeats():
    with pytest.raises(DegenerateSequenceError):
        omega(0, (2,), 2)


def test_alpha_worked_example():
    n, p, q = 3, 0, 3
    assert [alpha(k, (), p, q) for k in (3, 2, 1)] == [0, 1, 2]
    assert [alpha(k, (2,), p, q) for k in (3, 2, 1)] == [0, 0, 1]
    assert [alpha(k, (2, 1), p, q) for k in (3, 2, 1)] == [0, 0, 0]
    table = alpha_table(n, p, q, (2, 1))
    assert [table.row(ell) for ell in range(3)] == [(0, 1, 2), (0, 0, 1), (0, 0, 0)]
    assert table.omegas == (0, 0)


def test_alpha_matches_elementwise_positions():
    # alpha_k of a prefix is the k-position of Hin on the corresponding subset
    for n, p, q, seq in checks.sequence_chains(5):
        for ell in range(len(seq) + 1):
            img = hin_vertex(SubsetMorphism(n, p, q, (p, q) + tuple(seq[:ell])))
            for k in range(q, p, -1):
                assert alpha(k, seq[:ell], p, q) == img.component(k)


def test_alpha_monotone_along_prefixes():
    assert checks.alpha_monotonicity(5)[1] == 0


def test_alpha_rejects_bad_k():
    with pytest.raises(ValueError):
        alpha(0, (), 0, 3)


# -- operators E_{i,k} -----------------------------------------------------------


def test_base_operator():
    assert base_operator(3, 3, 1) == parse_operator("d_0^2", 2)
    assert base_operator(5, 3, 1) == normalize(parse_word("d_1^2 d_0^2"), 4)


def test_build_operator_examples():
    assert build_operator((), 1, 3, 0, 3) == parse_operator("d_0^2", 2)
    expected = normalize(parse_word("d_2^2 s_1^2 d_1 s_0"), 2)
    assert build_operator((2, 1), 1, 3, 0, 3) == expected
    assert build_operator((2, 1), 3, 3, 0, 3) == parse_operator("s_0^2", 0)


def test_build_operator_intermediate_steps():
    # E_{(2),1} = E'_{empty,1} s_0^2 d_0 and E_{(2),2} = E'_{empty,2} s_0
    assert build_operator((2,), 1, 3, 0, 3) == normalize(parse_word("d_1^2 s_0^2 d_0"), 2)
    assert build_operator((2,), 2, 3, 0, 3) == normalize(parse_word("d_1 s_0"), 1)
    assert build_operator((2,), 3, 3, 0, 3) == parse_operator("s_0", 0)


def test_build_operator_rejects_degenerate_sequence():
    with pytest.raises(DegenerateSequenceError):
        build_operator((1, 1), 1, 4, 0, 3)


def test_operator_arity():
    assert checks.operator_arity(5)[1] == 0


# -- operator route --------------------------------------------------------------


def test_operator_route_examples():
    assert sz_operator_route((2, 1), 3, 0, 3).pretty() == "(s_0^2 g_3, s_0 g_2, g_1)"
    assert sz_operator_route((1, 2), 3, 0, 3).pretty() == "(s_0^2 g_3, s_1 g_2, s_0 d_1 g_1)"


def test_operator_route_empty_sequence_is_hin_of_endpoints():
    for n in range(1, 6):
        for p, q in itertools.combinations(range(n + 1), 2):
            res = sz_operator_route((), n, p, q)
            assert res.vertices == {k: (a,) for k, a in zip(range(q, p, -1), hin_vertex(U(n, p, q)).positions)}


def test_operator_route_rejects_repeats():
    with pytest.raises(DegenerateSequenceError):
        sz_operator_route((1, 1), 3, 0, 3)


def test_sz_result_round_trip():
    res = sz_operator_route((3, 1, 2), 5, 0, 4)
    assert SzResult.from_dict(res.to_dict()) == res
    assert SzResult.from_dict(res.to_dict()).vertices == res.vertices


def test_sz_image_on_full_hom_delta3():
    # vertices of C(Delta^3)(0,3) go to the four highlighted vertices of G(Delta^3)(0,3)
    images = {hin_vertex(u).positions for u in HomPoset("c", 3, 0, 3).elements()}
    assert images == {(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 2)}
    edges = enumerate_nerve(HomPoset("c", 3, 0, 3), 1, nondegenerate_only=True)
    assert len(edges) == 5


# -- verification ------------------------------------------------------------------


def test_verify_instance_example():
    assert verify_instance(3, 0, 3, (2, 1)).match


def test_verify_empty_sequences():
    for n in range(1, 7):
        for p, q in itertools.combinations(range(n + 1), 2):
            assert verify_instance(n, p, q, ()).match


def test_instance_count_is_sum_of_falling_factorials():
    expected = sum(
        perm(q - p - 1, ell)
        for n in range(1, 7)
        for p, q in itertools.combinations(range(n + 1), 2)
        for ell in range(q - p)
    )
    assert sum(1 for _ in iter_instances(6)) == expected == 718


def test_verify_range_small_and_parallel():
    serial = verify_range(5)
    parallel = verify_range(5, workers=2)
    assert serial.ok and serial == parallel
    assert VerifyReport.from_dict(serial.to_dict()) == serial
    assert "0 mismatches" in serial.text()
