import json
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from atomkit.census import involutions
from atomkit.core import SetPermutation, SignedPermutation, parse_signed, signed_permutations
from atomkit.errors import BoundExceeded, NotAnInverseAtom, NotAnInvolution
from atomkit.hecke import SignedInvolution, atoms_brute, hecke_image
from atomkit.orders import atoms_fast, components_A, hasse
from atomkit.structure import (
    Matching,
    is_inverse_atom,
    m_max,
    m_min,
    ncsp,
    nested_data,
    nested_data_B,
    nested_descent_graph,
    one_B,
    recover_involution,
    shape,
    zero_B,
    zero_one_A,
)

P = parse_signed
Z = SignedInvolution.parse
EXAMPLE_W = P("-1,6,7,-2,3,4,8,-9,5")
EXAMPLE_Z = Z("-1,-7,6,4,5,3,-2,-8,-9")


def test_graph_of_54321():
    g = nested_descent_graph((5, 4, 3, 2, 1))
    assert g.vertices == {(5, 4, 3, 2, 1), (3, 2, 1), (5, 2, 1), (5, 4, 1), (5, 4, 3), (1,), (3,), (5,)}
    edges = {(s, d, lab) for s, d, lab in g.edges}
    expected = {
        ((5, 4, 3, 2, 1), (3, 2, 1), (5, 4)),
        ((5, 4, 3, 2, 1), (5, 2, 1), (4, 3)),
        ((5, 4, 3, 2, 1), (5, 4, 1), (3, 2)),
        ((5, 4, 3, 2, 1), (5, 4, 3), (2, 1)),
        ((3, 2, 1), (1,), (3, 2)),
        ((3, 2, 1), (3,), (2, 1)),
        ((5, 2, 1), (1,), (5, 2)),
        ((5, 2, 1), (5,), (2, 1)),
        ((5, 4, 1), (1,), (5, 4)),
        ((5, 4, 1), (5,), (4, 1)),
        ((5, 4, 3), (5,), (4, 3)),
        ((5, 4, 3), (3,), (5, 4)),
    }
    assert edges == expected
    assert g.sink is None and len(g.sinks) == 3


def test_graph_trivial_and_exports():
    g = nested_descent_graph((1, 2, 3))
    assert g.vertices == {(1, 2, 3)} and not g.edges and g.sink == (1, 2, 3)
    g = nested_descent_graph(EXAMPLE_W)
    assert g.sink == (-1, 4, 5)
    data = json.loads(g.to_json())
    assert data["source"] == list(EXAMPLE_W.window)
    assert 'label="8,-9"' in g.to_dot()


def test_graph_rejects_repeats_and_big_words():
    with pytest.raises(ValueError):
        nested_descent_graph((1, 1))
    with pytest.raises(BoundExceeded):
        nested_descent_graph(tuple(range(20, 0, -1)))


def test_nested_example():
    d = nested_data(EXAMPLE_W)
    assert d.ndes == {(8, -9), (7, -2), (6, 3)}
    assert d.nneg == {1}
    assert d.nfix == {4, 5}
    assert d.sink == (-1, 4, 5)
    assert recover_involution(EXAMPLE_W) == EXAMPLE_Z
    ndes_b, nneg_b = nested_data_B(EXAMPLE_W)
    assert ndes_b == {(7, -2), (6, 3)}
    assert nneg_b == {1, 8, 9}


def test_nested_small_examples():
    d = nested_data(SignedPermutation.identity(4))
    assert d.ndes == frozenset() and d.nfix == {1, 2, 3, 4} and d.nneg == frozenset()
    w = P("-3,4,-5,1,-2")
    assert nested_data(w).ndes == {(1, -2), (4, -5)}
    assert recover_involution(w) == Z("-1,-2,-3,-4,-5")
    _, nneg_b = nested_data_B(w)
    assert nneg_b == {1, 2, 4, 5} | nested_data(w).nneg
    assert recover_involution(P("-4,-3,-2,-1")) == Z("-1,-2,-3,-4")
    assert recover_involution(SignedPermutation.identity(3)) == SignedInvolution(SignedPermutation.identity(3))


def test_nested_data_b_unchanged_without_negative_pairs():
    w = P("2,3,1")
    d = nested_data(w)
    assert nested_data_B(w) == (d.ndes, d.nneg)


@pytest.mark.parametrize("n", range(0, 6))
def test_inverse_atom_detection_exact(n):
    # nested data exists exactly for inverse atoms and recovers their involution
    for w in signed_permutations(n):
        inv = w.inverse()
        z = hecke_image(inv)
        is_atom = inv in atoms_brute(z)
        assert is_inverse_atom(w) == is_atom, w
        if is_atom:
            assert recover_involution(w) == z


def test_non_atom_rejected():
    with pytest.raises(NotAnInverseAtom):
        nested_data(P("-2,1,-3"))
    with pytest.raises(NotAnInverseAtom):
        nested_data(P("5,4,3,2,1"))


@pytest.mark.parametrize("n", range(1, 6))
def test_path_independence(n):
    for z in involutions(n):
        for w in atoms_fast(z):
            g = nested_descent_graph(w)
            out = {}
            for s, d, lab in g.edges:
                out.setdefault(s, []).append((d, lab))

            def labels(v):
                if v not in out:
                    return [()]
                return [tuple(sorted((lab,) + rest)) for d, lab in out[v] for rest in labels(d)]

            assert len(set(labels(w.window))) == 1


def test_alphabet_partition():
    for n in range(1, 5):
        for z in involutions(n):
            for w in atoms_fast(z):
                d = nested_data(w)
                letters = [x for lab in d.ndes for x in lab] + sorted(d.nfix) + [-x for x in d.nneg]
                assert sorted(letters) == sorted(w.window)


def test_shape_examples():
    m = shape(EXAMPLE_W)
    assert m.sorted_blocks() == [(-9, -8), (-1, 1), (8, 9)]
    assert str(m) == "{-9,-8} {-1,1} {8,9}"
    z = Z("-1,-2,-3,-4")
    assert shape(zero_B(z)) == m_min(z)
    assert shape(P("1,-4,2,-3")).sorted_blocks() == [(-4, -1), (-3, -2), (1, 4), (2, 3)]


def test_zero_one_a():
    z = SetPermutation.from_cycles(range(1, 8), [(1, 2), (4, 7), (5, 6)])
    zero, one = zero_one_A(z)
    assert zero.images == (2, 1, 3, 7, 4, 6, 5)
    assert one.images == (2, 1, 3, 6, 5, 7, 4)
    z = SetPermutation.from_cycles((1, 2, 4, 5, 6, 7), [(1, 2), (4, 7), (5, 6)])
    zero, one = zero_one_A(z)
    assert zero.images == (2, 1, 7, 4, 6, 5)
    assert one.images == (2, 1, 6, 5, 7, 4)
    e = SetPermutation.from_cycles((1, 2, 3), [])
    assert zero_one_A(e) == (e, e)
    with pytest.raises(NotAnInvolution):
        zero_one_A(SetPermutation.from_cycles((1, 2, 3), [(1, 2, 3)]))


def _brute_ncsp(verts):
    verts = sorted(verts)
    out = set()

    def rec(rest, blocks):
        if not rest:
            m = Matching.from_blocks(blocks, verts)
            if m.is_symmetric() and m.is_noncrossing():
                out.add(tuple(m.sorted_blocks()))
            return
        a = rest[0]
        for b in rest[1:]:
            rec([x for x in rest if x not in (a, b)], blocks + [(a, b)])

    rec(verts, [])
    return sorted(out)


@pytest.mark.parametrize("k", range(0, 6))
def test_ncsp_counts(k):
    z = SignedInvolution(SignedPermutation(tuple(-i for i in range(1, k + 1))))
    ms = ncsp(z)
    assert len(ms) == comb(k, k // 2)
    assert [tuple(m.sorted_blocks()) for m in ms] == _brute_ncsp(list(range(-k, 0)) + list(range(1, k + 1)))
    for m in ms:
        assert m.is_perfect() and m.is_symmetric() and m.is_noncrossing()


def test_ncsp_empty():
    assert [m.sorted_blocks() for m in ncsp(Z("2,1"))] == [[]]


def test_zero_one_b_examples():
    m1 = m_min(EXAMPLE_Z)
    m2 = Matching.from_blocks([(-9, 9), (-8, -1), (1, 8)])
    m3 = Matching.from_blocks([(-9, -8), (-1, 1), (8, 9)])
    assert zero_B(EXAMPLE_Z, m1) == P("-9,-8,7,-2,-1,6,3,4,5")
    assert one_B(EXAMPLE_Z, m1) == P("-9,-8,-1,4,5,6,3,7,-2")
    assert zero_B(EXAMPLE_Z, m2) == P("-9,1,-8,7,-2,6,3,4,5")
    assert one_B(EXAMPLE_Z, m2) == P("-9,1,-8,4,5,6,3,7,-2")
    assert zero_B(EXAMPLE_Z, m3) == P("8,-9,7,-2,-1,6,3,4,5")
    assert one_B(EXAMPLE_Z, m3) == P("-1,4,5,6,3,7,-2,8,-9")
    assert zero_B(EXAMPLE_Z) == P("-9,-8,7,-2,-1,6,3,4,5")
    assert one_B(Z("-1,-2,-3,-4")) == P("1,-2,3,-4")
    assert one_B(Z("-1,-2,-3,-4,-5")) == P("-1,2,-3,4,-5")
    assert m_max(Z("-1,-2")).sorted_blocks() == [(-2, -1), (1, 2)]


def test_bad_matching_rejected():
    with pytest.raises(ValueError):
        zero_B(Z("-1,-2"), Matching.from_blocks([(-2, 1), (-1, 2)]))


@pytest.mark.parametrize("n", range(1, 5))
def test_shape_bijection_on_minimal_elements(n):
    for z in involutions(n):
        comps = components_A(z)
        ms = ncsp(z)
        assert len(comps) == len(ms) == comb(len(z.neg), len(z.neg) // 2)
        shapes = [c.shape for c in comps]
        assert sorted(m.sorted_blocks() for m in shapes) == [m.sorted_blocks() for m in ms]
        d = hasse(z, "ltA")
        for c in comps:
            members = set(c.elements)
            assert [w for w in d.minimal() if w in members] == [zero_B(z, c.shape)]
            assert [w for w in d.maximal() if w in members] == [one_B(z, c.shape)]
            assert all(shape(w) == c.shape for w in c.elements)


@st.composite
def small_involution(draw):
    n = draw(st.integers(1, 6))
    return draw(st.sampled_from(involutions(n)))


@settings(max_examples=60, deadline=None)
@given(small_involution())
def test_zero_one_b_are_atoms(z):
    atoms = set(atoms_fast(z))
    for m in ncsp(z):
        w0, w1 = zero_B(z, m), one_B(z, m)
        assert w0 in atoms and w1 in atoms
        assert shape(w0) == m == shape(w1)
