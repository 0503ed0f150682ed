from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from strata.homology import (homology, induced_map, induced_restriction,
                             is_isomorphism, local_chain_complex,
                             order_chain_complex, relative_chain_complex)
from strata.linalg import FieldSpec
from strata.spaces import (NotOpenError, build_from_maximal_simplices,
                           from_relations, min_open_nbhd)

from expected import AWNING_LH_VALUES


def local_dims(space, x, field, top=2):
    h = homology(local_chain_complex(space, min_open_nbhd(space, x), field))
    return h.dim_vector(top)


def test_field_spec_validation():
    FieldSpec(0)
    FieldSpec(7919)
    with pytest.raises(ValueError):
        FieldSpec(4)
    with pytest.raises(ValueError):
        FieldSpec(-3)


def test_relative_complex_of_top_star(awning, gf2):
    cc = relative_chain_complex(awning, min_open_nbhd(awning, (0, 1, 3)), gf2)
    assert cc.dims() == {2: 1}
    assert homology(cc).dim_vector(2) == (0, 0, 1)


def test_relative_complex_generator_counts(awning, gf2):
    cc = relative_chain_complex(awning, min_open_nbhd(awning, (0, 3)), gf2)
    assert cc.dims() == {1: 1, 2: 2}
    assert cc.check_boundary_squares_to_zero()


def test_zero_complex_for_empty_open(awning, gf2):
    cc = relative_chain_complex(awning, awning.subspace([]), gf2)
    assert cc.dims() == {}
    assert homology(cc).total_dim() == 0


def test_requires_open_subspace(awning, gf2):
    with pytest.raises(NotOpenError):
        relative_chain_complex(awning, awning.subspace([(0,)]), gf2)


@pytest.mark.parametrize("x,dims", sorted(AWNING_LH_VALUES.items()))
def test_awning_local_homology(awning, gf2, x, dims):
    assert local_dims(awning, x, gf2) == dims


@pytest.mark.parametrize("p", [0, 2, 3, 5])
def test_awning_values_field_insensitive(awning, p):
    f = FieldSpec(p)
    for x, dims in AWNING_LH_VALUES.items():
        assert local_dims(awning, x, f) == dims


def test_order_complex_point():
    sp = from_relations(["x"], [])
    h = homology(order_chain_complex(sp, sp.full_subspace(), FieldSpec(2)))
    assert h.dim_vector(0) == (1,)


def test_order_complex_matches_simplicial(awning, gf2):
    for x in [(0, 3), (0, 1), (1, 3), (0,), (4,)]:
        u = min_open_nbhd(awning, x)
        hs = homology(relative_chain_complex(awning, u, gf2))
        ho = homology(order_chain_complex(awning, u, gf2))
        assert hs.dim_vector(2) == ho.dim_vector(2)


tiny_simplex_lists = st.lists(
    st.lists(st.integers(0, 4), min_size=1, max_size=3).map(lambda v: sorted(set(v))),
    min_size=1, max_size=3)


@given(tiny_simplex_lists, st.integers(0, 30))
@settings(max_examples=40, deadline=None)
def test_order_complex_matches_simplicial_random(max_simplices, seed):
    sp = build_from_maximal_simplices(max_simplices)
    x = sp.elements[seed % len(sp)]
    u = min_open_nbhd(sp, x)
    field = FieldSpec(2)
    hs = homology(relative_chain_complex(sp, u, field))
    ho = homology(order_chain_complex(sp, u, field))
    top = max(len(e) for e in sp.elements) - 1
    assert hs.dim_vector(top) == ho.dim_vector(top)


def test_induced_identity(awning, gf2):
    m = induced_restriction(awning, (0, 3), (0, 3), gf2)
    assert is_isomorphism(m)


def test_induced_restriction_examples(awning, gf2):
    m = induced_restriction(awning, (0, 3), (0, 1, 3), gf2)
    assert m.degree_dims(2) == (1, 1)
    assert is_isomorphism(m)
    m2 = induced_restriction(awning, (1, 3), (0, 1, 3), gf2)
    assert m2.degree_dims(2) == (0, 1)
    assert not is_isomorphism(m2)
    m3 = induced_restriction(awning, (0, 1), (0, 1, 2), gf2)
    assert m3.degree_dims(2) == (2, 1)
    assert not is_isomorphism(m3)
    with pytest.raises(ValueError):
        induced_restriction(awning, (1, 3), (0, 2, 3), gf2)


def test_induced_map_ignores_representative_choice(awning, gf2):
    u = min_open_nbhd(awning, (0, 3))
    h_src = homology(relative_chain_complex(awning, u, gf2))
    h_tgt = homology(relative_chain_complex(
        awning, min_open_nbhd(awning, (0, 1, 3)), gf2))
    base = induced_map(h_src, h_tgt).matrices

    # perturb a degree-2 representative by a boundary of nothing available;
    # instead shift by another cycle representative combination that is a
    # boundary in degree 1 and check degree-1 output is unaffected
    perturbed = homology(relative_chain_complex(awning, u, gf2))
    for p, reps in perturbed.cycles.items():
        bnds = perturbed.boundaries.get(p, [])
        if reps and bnds:
            reps[0] = [gf2.add(a, b) for a, b in zip(reps[0], bnds[0])]
    again = induced_map(perturbed, h_tgt).matrices
    assert base == again


def test_boundary_detection_full_simplex(gf2):
    for verts in ([0, 1, 2], [0, 1, 2, 3]):
        sp = build_from_maximal_simplices([verts])
        top = tuple(verts)
        d = len(verts) - 1
        for e in sp.elements:
            dims = local_dims(sp, e, gf2, top=d)
            if e == top:
                assert dims == tuple(0 if p < d else 1 for p in range(d + 1))
            else:
                assert dims == tuple(0 for _ in range(d + 1))


simplex_lists = st.lists(
    st.lists(st.integers(0, 5), min_size=1, max_size=4).map(lambda v: sorted(set(v))),
    min_size=1, max_size=4)


@given(simplex_lists, st.integers(0, 40))
@settings(max_examples=60, deadline=None)
def test_boundary_squares_to_zero(max_simplices, seed):
    sp = build_from_maximal_simplices(max_simplices)
    x = sp.elements[seed % len(sp)]
    for field in (FieldSpec(2), FieldSpec(5), FieldSpec(0)):
        cc = relative_chain_complex(sp, min_open_nbhd(sp, x), field)
        assert cc.check_boundary_squares_to_zero()


@given(simplex_lists)
@settings(max_examples=40, deadline=None)
def test_restriction_functoriality(max_simplices):
    from strata.linalg import matmul

    sp = build_from_maximal_simplices(max_simplices)
    field = FieldSpec(2)
    chains = [(x, y, z)
              for x in sp.elements for y in sp.elements for z in sp.elements
              if sp.leq(x, y) and sp.leq(y, z)]
    for x, y, z in chains[:20]:
        mxz = induced_restriction(sp, x, z, field)
        mxy = induced_restriction(sp, x, y, field)
        myz = induced_restriction(sp, y, z, field)
        for p in mxz.matrices:
            dx, dz = mxz.degree_dims(p)
            if dx == 0 or dz == 0:
                continue
            dy = mxy.degree_dims(p)[1]
            if dy == 0:
                via = [[0] * dx for _ in range(dz)]
            else:
                via = matmul(field, myz.matrices[p], mxy.matrices[p])
            assert mxz.matrices[p] == via
