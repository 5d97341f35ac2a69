import json
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from atomkit.census import involutions
from atomkit.core import SignedPermutation, parse_signed
from atomkit.errors import NotAnInverseAtom, RankMismatch
from atomkit.hecke import SignedInvolution, atoms_brute
from atomkit.orders import (
    EDGE_STYLE,
    ORDERS,
    CoverKind,
    atoms_fast,
    components_A,
    covers,
    down_moves,
    extremes,
    hasse,
    offset_a,
    offset_b,
    poset_probe,
    rank_A,
    rank_B,
    up_moves,
)
from atomkit.structure import is_inverse_atom, ncsp, one_B, zero_B

from . import hasse_goldens as goldens

P = parse_signed
Z = SignedInvolution.parse


def catalan(m):
    return comb(2 * m, m) // (m + 1)


def test_cover_examples():
    assert covers(P("-4,-3,-2,-1"), P("3,-4,-2,-1"), CoverKind.B)
    assert covers(P("-4,-3,-2,-1"), P("-4,2,-3,-1"), CoverKind.B)
    assert not covers(P("-4,-3,-2,-1"), P("-2,3,-4,-1"), CoverKind.B)
    assert covers(P("3,1,2"), P("2,3,1"), CoverKind.A)
    assert covers(P("-3,1,-2"), P("-1,2,-3"), CoverKind.BLACK_B)
    assert covers(P("-3,1,-2"), P("-1,2,-3"), "BB")
    with pytest.raises(RankMismatch):
        covers(P("1"), P("1,2"), CoverKind.A)


@pytest.mark.parametrize("kind", list(CoverKind))
@pytest.mark.parametrize("n", range(1, 5))
def test_moves_agree_with_pattern_tests(kind, n):
    atoms = [w for z in involutions(n) for w in atoms_fast(z)]
    pool = {w.window for w in atoms}
    for w in atoms:
        ups = set(up_moves(w.window, kind))
        for u in pool:
            assert (u in ups) == covers(w, SignedPermutation._trusted(u), kind)
        for u in down_moves(w.window, kind):
            assert covers(SignedPermutation._trusted(u), w, kind)


@pytest.mark.parametrize("n", range(1, 5))
def test_b_is_b_plus_restricted(n):
    for z in involutions(n):
        for v in atoms_fast(z):
            for u in up_moves(v.window, CoverKind.B):
                assert covers(v, SignedPermutation._trusted(u), CoverKind.BPLUS)


@pytest.mark.parametrize("n", range(1, 5))
def test_moves_stay_inside_atoms(n):
    for z in involutions(n):
        atoms = {w.window for w in atoms_fast(z)}
        for w in atoms:
            for kind in CoverKind:
                # strong B moves preserve atoms only downwards
                ups = [] if kind is CoverKind.STRONG_B else list(up_moves(w, kind))
                for u in ups + list(down_moves(w, kind)):
                    assert u in atoms


def test_strong_b_up_can_leave_atoms():
    w = P("3,-2,-1")
    u = P("3,1,-2")
    assert covers(w, u, CoverKind.STRONG_B)
    assert is_inverse_atom(w) and not is_inverse_atom(u)


@pytest.mark.parametrize("n", range(0, 5))
def test_atoms_fast_equals_oracle(n):
    for z in involutions(n):
        assert atoms_fast(z) == sorted(w.inverse() for w in atoms_brute(z))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(involutions(5)))
def test_atoms_fast_random_rank_five(z):
    assert atoms_fast(z) == sorted(w.inverse() for w in atoms_brute(z))


def test_atoms_fast_examples():
    e = SignedInvolution(SignedPermutation.identity(3))
    assert atoms_fast(e) == [e.perm]
    assert {w.window for w in atoms_fast(Z("-1,-2,-3,-4"))} == set(goldens.W4.values())
    assert {w.window for w in atoms_fast(Z("-1,-2,-3,-4,-5"))} == set(goldens.W5.values())
    assert len(atoms_fast(Z("-1,-2,-4,-3"))) == 6


def _labelled(d):
    return {(v.window, w.window, k) for v, w, k in d.edges()}


def test_golden_ltb_four():
    d = hasse(Z("-1,-2,-3,-4"), "ltB")
    assert len(d.elements) == 11
    expected = goldens.edge_set(goldens.W4, goldens.W4_LTB, {"solid": "A", "dashed": "B"})
    assert _labelled(d) == expected
    assert {w.window for w in d.minimal()} == {P("-4,-3,-2,-1").window, P("-4,-3,1,-2").window}
    assert {w.window for w in d.maximal()} == {P("1,-4,2,-3").window, P("1,-2,3,-4").window}


def test_golden_lllb_four():
    d = hasse(Z("-1,-2,-3,-4"), "lllB")
    got = {(v.window, w.window, EDGE_STYLE[k]) for v, w, k in d.edges()}
    assert got == goldens.edge_set(goldens.W4, goldens.W4_LLLB, {s: s for s in ("solid", "dashed", "dotted")})
    assert [w.window for w in d.maximal()] == [P("1,-2,3,-4").window]
    assert [w.window for w in d.minimal()] == [P("-4,-3,-2,-1").window]


def test_golden_llb_five():
    d = hasse(Z("-1,-2,-3,-4,-5"), "llB")
    assert len(d.elements) == 30
    expected = goldens.edge_set(goldens.W5, goldens.W5_LLB, {"solid": "A", "dashed": "B", "dotted": "SB"})
    assert _labelled(d) == expected
    sinks = {goldens.W5[k] for k in ("0", "1c", "1d", "2e", "3a")}
    assert {w.window for w in d.maximal()} == sinks


def test_edge_counts():
    z = Z("-1,-2,-3,-4")
    assert [len(hasse(z, o).covers) for o in ("ltA", "ltB", "llB", "lllB")] == [5, 10, 12, 15]
    e = SignedInvolution(SignedPermutation.identity(2))
    d = hasse(e, "ltB")
    assert len(d.elements) == 1 and not d.covers
    with pytest.raises(ValueError):
        hasse(z, "bogus")


def test_exports():
    d = hasse(Z("-1,-2,-3"), "lllB")
    data = json.loads(d.to_json())
    assert data["order"] == "lllB"
    assert [parse_signed(s) for s in data["elements"]] == list(d.elements)
    dot = d.to_dot()
    assert dot.startswith("digraph lllB {")
    for _, _, k in d.covers:
        assert f"style={EDGE_STYLE[k]}" in dot
    assert dot == hasse(Z("-1,-2,-3"), "lllB").to_dot()


@pytest.mark.parametrize("n", range(1, 6))
def test_catalan_maxima_and_unique_minimum(n):
    for z in involutions(n):
        if n == 5 and hash(z.window) % 4:
            continue
        m = (len(z.neg) + 1) // 2
        lo, hi = extremes(z, "ltB")
        assert len(hi) == catalan(m)
        hi_ll = extremes(z, "llB")
        assert hi_ll[0] == [zero_B(z)]
        assert len(hi_ll[1]) == catalan(m)
        assert extremes(z, "lllB") == ([zero_B(z)], [one_B(z)])


def test_catalan_maxima_rank_five_full():
    z = Z("-1,-2,-3,-4,-5")
    assert len(extremes(z, "ltB")[1]) == 5


def test_rank_examples():
    w = P("-3,4,-5,1,-2")
    assert rank_A(w) == 1 and offset_a(w) == 1
    w = P("1,-5,2,-3,6,-4")
    assert rank_A(w) == 2 and offset_b(w) == 4 and rank_B(w) == 6
    with pytest.raises(NotAnInverseAtom):
        rank_A(P("-2,1,-3"))


@pytest.mark.parametrize("n", range(1, 5))
def test_gradedness(n):
    for z in involutions(n):
        d_a = hasse(z, "ltA")
        for v, w, _ in d_a.edges():
            assert rank_A(w) == rank_A(v) + 1
        minimal = set(d_a.minimal())
        for w in d_a.elements:
            assert (rank_A(w) == 0) == (w in minimal)
        d = hasse(z, "lllB")
        for v, w, _ in d.edges():
            assert rank_B(w) == rank_B(v) + 1
        ranks = {w: rank_B(w) for w in d.elements}
        assert [w for w, r in ranks.items() if r == 0] == [zero_B(z)]
        top = max(ranks.values())
        assert [w for w, r in ranks.items() if r == top] == [one_B(z)]


def test_components_example():
    comps = components_A(Z("-1,-2,-4,-3"))
    assert [len(c.elements) for c in comps] == [3, 3]
    witnesses = sorted(sorted(c.witness.cycles()) for c in comps)
    two_cycles = [[cyc for cyc in w if len(cyc) == 2] for w in witnesses]
    assert sorted(map(sorted, two_cycles)) == [[(-3, 4)], [(-3, 4), (-2, 1)]]
    assert len(components_A(Z("-1,-2,-3,-4"))) == 6


@pytest.mark.parametrize("n", range(1, 5))
def test_component_count(n):
    for z in involutions(n):
        comps = components_A(z)
        assert len(comps) == len(ncsp(z))
        if len(z.neg) <= 1:
            assert len(comps) == 1
        for c in comps:
            assert c.witness.is_involution()


@pytest.mark.parametrize("n", range(1, 5))
def test_component_probes_bounded_graded(n):
    from atomkit.orders import component_probes

    for z in involutions(n):
        for rep in component_probes(z):
            assert rep.graded and rep.bounded and rep.components == 1


def test_probe_examples():
    rep = poset_probe(Z("-1,-2,-3,-4,-5"), "llB")
    assert rep.lower_semilattice and rep.size == 30
    rep = poset_probe(Z("-1,-2,-3,-4"), "ltB", paranoid=True)
    assert rep.chains_consistent is not None
    assert set(rep.as_dict()) >= {"graded", "bounded", "lattice", "lower_semilattice"}


def _leq_matrix(d):
    n = len(d.elements)
    up = [[False] * n for _ in range(n)]
    for i in range(n):
        up[i][i] = True
    for i, j, _ in d.covers:
        up[i][j] = True
    for k in range(n):
        for i in range(n):
            if up[i][k]:
                for j in range(n):
                    if up[k][j]:
                        up[i][j] = True
    return up


def _brute_lower_semilattice(d):
    le = _leq_matrix(d)
    n = len(le)
    for a, b in combinations(range(n), 2):
        lower = [c for c in range(n) if le[c][a] and le[c][b]]
        greatest = [c for c in lower if all(le[x][c] for x in lower)]
        if len(greatest) != 1:
            return False
    return True


@pytest.mark.parametrize("n", range(1, 5))
def test_probe_semilattice_matches_brute(n):
    for z in involutions(n):
        for order in ORDERS:
            d = hasse(z, order)
            assert poset_probe(z, order).lower_semilattice == _brute_lower_semilattice(d)


@pytest.mark.parametrize("n", range(1, 6))
def test_llb_lower_semilattice(n):
    for z in involutions(n):
        assert poset_probe(z, "llB").lower_semilattice
