import pytest
from hypothesis import given, settings, strategies as st

from strata.spaces import (EmptySubspaceError, MalformedInputError, NotOpenError,
                           Subspace, build_from_maximal_simplices, closure,
                           connected_pieces, dimension, from_relations,
                           is_homogeneous, iter_bits, link_of_open, min_open_nbhd,
                           star)

X_SIMPLEX = (0, 1, 3)


def labels(sub):
    return set(sub.labels())


def test_awning_counts(awning):
    by_dim = {}
    for e in awning.elements:
        by_dim[len(e) - 1] = by_dim.get(len(e) - 1, 0) + 1
    assert by_dim == {0: 5, 1: 8, 2: 4}
    assert len(awning.covering_pairs) == 28
    assert dimension(awning) == 2


def test_single_point_space():
    sp = build_from_maximal_simplices([[0]])
    assert len(sp) == 1
    assert sp.covering_pairs == ()
    assert dimension(sp) == 0


def test_full_triangle_counts():
    # 6 vertex-edge incidences plus 3 edge-triangle incidences
    sp = build_from_maximal_simplices([[0, 1, 2]])
    assert len(sp) == 7
    assert len(sp.covering_pairs) == 9


def test_duplicate_vertices_rejected():
    with pytest.raises(MalformedInputError):
        build_from_maximal_simplices([[0, 1, 1]])
    with pytest.raises(MalformedInputError):
        build_from_maximal_simplices([[-1, 2]])
    with pytest.raises(MalformedInputError):
        build_from_maximal_simplices([])


def test_min_open_nbhd(awning):
    assert labels(min_open_nbhd(awning, (1, 3))) == {(1, 3), (0, 1, 3)}
    assert labels(min_open_nbhd(awning, (0, 3))) == {(0, 3), (0, 1, 3), (0, 2, 3)}
    assert labels(min_open_nbhd(awning, X_SIMPLEX)) == {X_SIMPLEX}


def test_closure(awning):
    top = awning.subspace([X_SIMPLEX])
    cl = closure(awning, top)
    assert labels(cl) == {(0,), (1,), (3,), (0, 1), (0, 3), (1, 3), (0, 1, 3)}
    assert closure(awning, cl).mask == cl.mask
    assert closure(awning, awning.full_subspace()).mask == awning.full_mask
    assert closure(awning, awning.subspace([])).mask == 0


def test_link_of_open(awning):
    b = min_open_nbhd(awning, (1, 3))
    assert labels(link_of_open(awning, b)) == {(0,), (3,), (1,), (0, 3), (0, 1)}
    b03 = min_open_nbhd(awning, (0, 3))
    assert labels(link_of_open(awning, b03)) == {
        (0,), (1,), (2,), (3,), (0, 1), (0, 2), (1, 3), (2, 3)}
    assert link_of_open(awning, awning.full_subspace()).mask == 0
    with pytest.raises(NotOpenError):
        link_of_open(awning, awning.subspace([(0,)]))


def test_dimension(awning):
    assert dimension(awning) == 2
    assert dimension(awning.subspace([(0,)])) == 0
    keep = [e for e in awning.elements
            if len(e) <= 2 and e not in ((0, 2), (0, 3))]
    assert dimension(awning.subspace(keep)) == 1
    assert dimension(awning.subspace([])) == -1
    with pytest.raises(EmptySubspaceError):
        dimension(_empty_space())


def _empty_space():
    # dimension of an empty *space* (not subspace) is an error
    from strata.spaces import FiniteSpace
    return FiniteSpace((), (), (), ())


def test_is_homogeneous(awning, strap):
    cl = closure(strap, strap.subspace([(0, 1, 2)]))
    assert is_homogeneous(strap, cl, 2)
    assert not is_homogeneous(strap, strap.full_subspace(), 2)
    assert is_homogeneous(awning, awning.subspace([(0,)]), 0)
    assert is_homogeneous(awning, awning.subspace([]), 5)


def test_connected_pieces(awning, strap):
    one = strap.subspace([(0, 3), (2, 3), (0,), (2,), (3,)])
    assert len(connected_pieces(strap, one)) == 1
    two = awning.subspace([(0,), (1,)])
    assert len(connected_pieces(awning, two)) == 2
    assert connected_pieces(awning, awning.subspace([])) == []


def test_from_relations_general_poset():
    sp = from_relations("abcd", [("a", "b"), ("b", "d"), ("a", "c"), ("c", "d")])
    assert sp.leq("a", "d")
    assert not sp.leq("b", "c")
    assert len(sp.covering_pairs) == 4
    assert dimension(sp) == 2
    with pytest.raises(MalformedInputError):
        from_relations("ab", [("a", "b"), ("b", "a")])


def test_from_relations_recomputes_covers():
    # the redundant (a, c) relation must not become a covering pair
    sp = from_relations("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    pairs = {(sp.elements[i], sp.elements[j]) for i, j in sp.covering_pairs}
    assert pairs == {("a", "b"), ("b", "c")}


# -- property tests ----------------------------------------------------------

simplex_lists = st.lists(
    st.lists(st.integers(0, 6), min_size=1, max_size=4).map(lambda v: sorted(set(v))),
    min_size=1, max_size=5)


@given(simplex_lists)
@settings(max_examples=120, deadline=None)
def test_order_matches_subset_relation(max_simplices):
    sp = build_from_maximal_simplices(max_simplices)
    n = len(sp)
    for i in range(n):
        for j in range(n):
            assert sp.leq(sp.elements[i], sp.elements[j]) == (
                set(sp.elements[i]) <= set(sp.elements[j]))


@given(simplex_lists)
@settings(max_examples=120, deadline=None)
def test_covering_pairs_regenerate_order(max_simplices):
    sp = build_from_maximal_simplices(max_simplices)
    rebuilt = from_relations(
        sp.elements, [(sp.elements[i], sp.elements[j]) for i, j in sp.covering_pairs])
    for i, e in enumerate(sp.elements):
        for f in sp.elements:
            assert rebuilt.leq(e, f) == sp.leq(e, f)
    rebuilt_pairs = {(rebuilt.elements[i], rebuilt.elements[j])
                     for i, j in rebuilt.covering_pairs}
    mine = {(sp.elements[i], sp.elements[j]) for i, j in sp.covering_pairs}
    assert rebuilt_pairs == mine


@given(simplex_lists, st.integers(0, 30))
@settings(max_examples=120, deadline=None)
def test_neighborhood_laws(max_simplices, seed):
    sp = build_from_maximal_simplices(max_simplices)
    x = sp.elements[seed % len(sp)]
    b = min_open_nbhd(sp, x)
    assert x in b
    for y in b.labels():
        assert min_open_nbhd(sp, y).mask & ~b.mask == 0
    u = star(sp, b)
    assert u.mask == b.mask  # B_x is already open
    lk = link_of_open(sp, b)
    assert lk.mask & b.mask == 0
    assert lk.mask | b.mask == closure(sp, b).mask
    assert dimension(Subspace(sp, b.mask)) <= dimension(sp)
