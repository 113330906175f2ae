import random

import pytest

from helpers import seq
from seqcomplex import (
    HypercubeStructure,
    Modulus,
    PeriodicSequence,
    VertexDescriptor,
    VertexKind,
    cube_lc,
    extract_structure,
    games_chan_lc,
    is_hypercube,
    lc,
    lc_from_structure,
    next_lower_hypercube_lc,
    rebalance_blocks,
    standard_decompose,
)
from seqcomplex.errors import (
    EvenP,
    IsVertex,
    NoEligibleExponent,
    NotACube,
    NotAHypercube,
    OddP,
    ZeroSequence,
)

MOD9 = Modulus(3, 2)
MOD27 = Modulus(3, 3)


def test_repeated_pair_is_a_2_hypercube():
    st = extract_structure(seq(MOD27, "110" * 9))
    assert st.m == 2 and st.edges == (1, 2)
    assert st.vertex.kind is VertexKind.TUPLE and st.vertex.q == 0
    assert st.vertex.blocks == ((1,), (1,), (0,))
    assert st.vertex.l == 2 and st.epsilon == 0
    assert lc_from_structure(st, MOD27) == 2 == lc(seq(MOD27, "110" * 9))


def test_repeated_block_pair_has_a_length_1_vertex():
    st = extract_structure(seq(MOD27, "000100100" * 3))
    assert st.m == 1 and st.edges == (2,)
    assert st.vertex.q == 1 and st.vertex.l == 2
    assert st.epsilon == -2
    assert lc_from_structure(st, MOD27) == 6


def test_single_one_is_a_0_hypercube_element():
    st = extract_structure(seq(MOD9, "010000000"))
    assert st.m == 0 and st.edges == () and st.vertex.kind is VertexKind.ELEMENT
    assert st.vertex.l == 1 and st.epsilon == 1
    assert lc_from_structure(st, MOD9) == 9


def test_all_ones_is_the_full_hypercube():
    st = extract_structure(seq(MOD9, "111111111"))
    assert st.m == 2 and st.edges == (0, 1)
    assert lc_from_structure(st, MOD9) == 1


def test_is_hypercube_detects_cancellation():
    assert not is_hypercube(seq(MOD9, "110100100"))
    assert is_hypercube(seq(MOD9, "110000000"))
    with pytest.raises(NotAHypercube):
        extract_structure(seq(MOD9, "110100100"))
    with pytest.raises(ZeroSequence):
        is_hypercube(PeriodicSequence.zeros(MOD9))
    with pytest.raises(EvenP):
        is_hypercube(PeriodicSequence(Modulus(2, 2), 0b0011))


def test_hypercube_census_n9():
    # 4 element classes + 2 weight-2 vertex classes + the 63 length-1 ones
    found = sum(is_hypercube(PeriodicSequence(MOD9, v)) for v in range(1, 512))
    assert found == 9 + 27 + 3 + 1 + 27 + 3 + 63 == 133


def test_structure_complexity_matches_engine_exhaustive_n9():
    for v in range(1, 512):
        s = PeriodicSequence(MOD9, v)
        if not is_hypercube(s):
            continue
        st = extract_structure(s)
        assert lc_from_structure(st, MOD9) == lc(s), v


def test_weight_of_a_hypercube_is_l_times_p_to_m():
    for v in range(1, 512):
        s = PeriodicSequence(MOD9, v)
        if is_hypercube(s):
            st = extract_structure(s)
            assert s.weight == st.vertex.l * 3**st.m, v


def test_next_lower_lc_element():
    st = extract_structure(seq(MOD9, "010000000"))
    assert next_lower_hypercube_lc(st, MOD9) == 7  # smallest exponent is 0


def test_next_lower_lc_tuple_skips_exponent_zero():
    st = extract_structure(seq(MOD9, "110000000"))
    assert next_lower_hypercube_lc(st, MOD9) == 2  # exponent 1, not 0


def test_next_lower_lc_exhausted_raises():
    with pytest.raises(NoEligibleExponent):
        next_lower_hypercube_lc(extract_structure(seq(MOD9, "111111111")), MOD9)
    # a length-q vertex blocks every exponent <= q
    with pytest.raises(NoEligibleExponent):
        next_lower_hypercube_lc(extract_structure(seq(MOD9, "000100100")), MOD9)
    with pytest.raises(NoEligibleExponent):
        next_lower_hypercube_lc(extract_structure(seq(MOD27, "000100100" * 3)), MOD27)


def test_next_lower_is_maximal_over_edge_refinements_n9():
    """next_lower_hypercube_lc is the largest LC below L(h) among hypercubes
    with the same vertex shape and an edge set extending h's, and some
    hypercube attains it.  The scoping matters: without it the element cube
    at L=3 (edges {1}) falls strictly between edges-{0}'s L=7 and its
    next-lower 1, and the weight-2 vertex at L=8 falls between the element
    family's 9 and 7."""
    families: dict[tuple, dict[tuple, int]] = {}
    handles: dict[tuple, HypercubeStructure] = {}
    for v in range(1, 512):
        s = PeriodicSequence(MOD9, v)
        if not is_hypercube(s):
            continue
        st = extract_structure(s)
        key = (st.vertex.kind, st.vertex.q, st.vertex.l)
        families.setdefault(key, {})[st.edges] = lc_from_structure(st, MOD9)
        handles[key + (st.edges,)] = st
    all_lcs = {L for fam in families.values() for L in fam.values()}
    assert all_lcs == {9, 8, 7, 6, 3, 2, 1}
    eligible = 0
    for key, fam in families.items():
        for edges, L in fam.items():
            try:
                lower = next_lower_hypercube_lc(handles[key + (edges,)], MOD9)
            except NoEligibleExponent:
                continue
            eligible += 1
            refinements = [x for e2, x in fam.items() if set(e2) > set(edges)]
            assert refinements and max(refinements) == lower, (key, edges)
    assert eligible == 4
    # the documented gaps that force the refinement scoping
    assert 1 < 3 < 7 and 7 < 8 < 9


def test_vertex_descriptor_validation():
    with pytest.raises(ValueError):
        VertexDescriptor(VertexKind.ELEMENT, q=0)
    with pytest.raises(ValueError):
        VertexDescriptor(VertexKind.TUPLE, q=0)  # blocks missing
    with pytest.raises(ValueError):
        VertexDescriptor(VertexKind.TUPLE, 0, ((1,), (1,), (1,)))  # odd row
    with pytest.raises(ValueError):
        VertexDescriptor(VertexKind.TUPLE, 0, ((0,), (0,), (0,)))  # zero
    v = VertexDescriptor(VertexKind.TUPLE, 1, ((0, 0, 0), (1, 0, 0), (1, 0, 0)))
    assert v.l == 2 and v.epsilon == -2
    assert str(v) == "tuple(q=1, [000,100,100])"


def test_structure_validation():
    el = VertexDescriptor(VertexKind.ELEMENT)
    with pytest.raises(ValueError):
        HypercubeStructure(2, (0,), el)
    with pytest.raises(ValueError):
        HypercubeStructure(2, (1, 0), el)
    assert str(HypercubeStructure(0, (), el)) == "m=0 edges=- vertex=element"


def test_rebalance_blocks():
    out, sources = rebalance_blocks([[1, 1], [1, 0], [1, 0]])
    assert out == ((1, 1), (0, 0), (0, 0))
    assert sources == {0: 0, 1: 0}
    with pytest.raises(IsVertex):
        rebalance_blocks([[1, 0], [1, 0], [0, 0]])
    with pytest.raises(ValueError):
        rebalance_blocks([[1, 0], [1, 0], [1, 0]])


def test_decompose_reference_case():
    dec = standard_decompose(seq(MOD27, "110100100" * 3))
    assert dec.complexities == (8, 6)
    assert [p.to01() for p in dec.parts] == ["110000000" * 3, "000100100" * 3]
    assert (dec.parts[0] ^ dec.parts[1]).to01() == "110100100" * 3
    assert dec.complexities[0] == lc(seq(MOD27, "110100100" * 3))


def test_decompose_period_9_analogue():
    dec = standard_decompose(seq(MOD9, "110100100"))
    assert dec.complexities == (8, 6)
    assert [p.to01() for p in dec.parts] == ["110000000", "000100100"]


def test_decompose_of_a_hypercube_is_itself():
    for text in ("110000000", "010000000", "111111111", "000100100"):
        dec = standard_decompose(seq(MOD9, text))
        assert len(dec.parts) == 1 and dec.parts[0].to01() == text


def test_decompose_invariants_random_n27():
    rng = random.Random(5)
    for _ in range(400):
        s = PeriodicSequence(MOD27, rng.randrange(1, 1 << 27))
        dec = standard_decompose(s)
        acc = 0
        for part, st, L in zip(dec.parts, dec.structures, dec.complexities):
            assert is_hypercube(part)
            assert lc_from_structure(st, MOD27) == L == lc(part)
            acc ^= part.value
        assert acc == s.value
        assert all(a > b for a, b in zip(dec.complexities, dec.complexities[1:]))
        assert dec.complexities[0] == lc(s)


def test_cube_lc_pinned():
    mod4 = Modulus(2, 2)
    assert cube_lc(PeriodicSequence.from_text("1100", mod4)) == (1, (0,), 3)
    assert cube_lc(PeriodicSequence.from_text("1010", mod4)) == (1, (1,), 2)
    assert cube_lc(PeriodicSequence.from_text("1111", mod4)) == (2, (0, 1), 1)
    assert cube_lc(PeriodicSequence.from_text("1000", mod4)) == (0, (), 4)
    with pytest.raises(NotACube):
        cube_lc(PeriodicSequence.from_text("1101", mod4))
    with pytest.raises(NotACube):
        cube_lc(PeriodicSequence.zeros(mod4))
    with pytest.raises(OddP):
        cube_lc(seq(MOD9, "110000000"))


def test_cube_lc_agrees_with_games_chan_exhaustive_n8():
    mod8 = Modulus(2, 3)
    cubes = 0
    for v in range(1, 256):
        s = PeriodicSequence(mod8, v)
        try:
            m, edges, L = cube_lc(s)
        except NotACube:
            continue
        cubes += 1
        assert L == games_chan_lc(s)
        assert s.weight == 1 << m
        assert L == 8 - sum(1 << i for i in edges)
    assert cubes == 8 + (16 + 8 + 4) + (16 + 4 + 2) + 1  # by (m, edges) class
