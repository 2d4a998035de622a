import pytest

from tcslat import embed
from tcslat import exactalg as xa
from tcslat import lattice as lat


def test_k3_lattice_constant():
    L = embed.k3_lattice()
    assert L.rank == 22
    assert L.is_even()
    assert abs(L.det()) == 1
    assert lat.signature(L) == (3, 19)


def test_nikulin_sufficient():
    W = lat.diag_lattice(4, 22)
    assert embed.nikulin_sufficient(W) == "i"
    # No 4's W: rank 12, l = 4 -> criterion (ii)
    W4 = lat.direct_sum(lat.diag_lattice(4, -2), lat.E8(-1), lat.diag_lattice(8, -16))
    assert embed.nikulin_sufficient(W4) == "ii"


def test_nikulin_silent_on_rank18():
    # rank 16 disc (Z/3)^5 block perp a rank 2 block: rank 18, criterion silent
    W = lat.direct_sum(burkhardt_like_stub(), lat.Lattice([[-2, 1], [1, 4]]))
    assert W.rank == 18
    assert embed.nikulin_sufficient(W) is None


def burkhardt_like_stub():
    # any rank-16 even lattice of signature (1,15) with disc (Z/3)^5 serves here;
    # built as the complement of A2(-1) + 2U(3) in the K3 lattice
    from tcslat.blocks import burkhardt_structure

    return burkhardt_structure().n_lattice


def test_necessary_condition():
    N16 = burkhardt_like_stub()
    # N16 perp <m> with 3 | m: rank 17, l = 6 -> 23 > 22 impossible
    W = lat.direct_sum(N16, lat.diag_lattice(6))
    assert not embed.necessary_condition(W)
    W2 = lat.direct_sum(N16, lat.Lattice([[-2, 1], [1, 4]]))
    assert not embed.necessary_condition(W2)
    assert embed.necessary_condition(lat.E8(-1))


def test_uniqueness():
    assert embed.uniqueness(lat.diag_lattice(4, 4))
    W = lat.direct_sum(lat.diag_lattice(4, -2), lat.E8(-1), lat.diag_lattice(8, -16))
    assert embed.uniqueness(W)
    # boundary arithmetic: rank 20 with l = 0 gives 20 + 0 + 2 <= 22 (non-strict)
    W20 = lat.direct_sum(*([lat.U()] * 2), *([lat.E8(-1)] * 2))
    assert embed.uniqueness(W20)
    # one past the boundary: rank 21 with l = 1 fails
    W21 = lat.direct_sum(W20, lat.diag_lattice(-4))
    assert not embed.uniqueness(W21)


def test_construct_embedding_library_44():
    W = lat.diag_lattice(4, 4)
    v = embed.construct_embedding(W, strategy="library")
    assert v.status == embed.EXISTS_CONSTRUCTED
    assert v.primitive is True
    rows = xa.to_lists(v.basis)
    assert rows[0][:4] == [1, 2, 0, 0]
    assert rows[1][:4] == [0, 0, 1, 2]
    assert all(x == 0 for x in rows[0][4:])


def test_construct_embedding_no7_matrix():
    # 2N0 into 3U via the explicit matrix: both N0 copies primitive,
    # cotorsion Z^2 + Z/8
    gram = [[8, 0, 0, 0], [0, -16, 0, 0], [0, 0, 8, 0], [0, 0, 0, -16]]
    W = lat.Lattice(gram)
    v = embed.construct_embedding(W, strategy="library")
    assert v.status == embed.EXISTS_CONSTRUCTED
    assert v.primitive is False
    cot = embed.cotorsion(embed.k3_lattice(), v.basis)
    assert cot == [8]
    # each N0 copy primitive
    amb = embed.k3_lattice()
    for rows in (v.basis[:2], v.basis[2:]):
        assert lat.is_primitive(lat.Sublattice(amb, rows))
    # free rank of 3U/2N0 is 2: rank 6 - 4
    assert xa.rank(v.basis) == 4


def test_construct_embedding_no8_matrix():
    gram = [[4, 4, 0, 0], [4, 0, 0, 0], [0, 0, 4, 4], [0, 0, 4, 0]]
    W = lat.Lattice(gram)
    v = embed.construct_embedding(W, strategy="library")
    assert v.status == embed.EXISTS_CONSTRUCTED
    assert v.primitive is False
    assert embed.cotorsion(embed.k3_lattice(), v.basis) == [4, 4]
    amb = embed.k3_lattice()
    for rows in (v.basis[:2], v.basis[2:]):
        assert lat.is_primitive(lat.Sublattice(amb, rows))


def test_construct_embedding_no11_matrix():
    gram = [[12, 4, 0, 0], [4, 0, 0, 1], [0, 0, 12, 4], [0, 1, 4, 0]]
    W = lat.Lattice(gram)
    v = embed.construct_embedding(W, strategy="library")
    assert v.status == embed.EXISTS_CONSTRUCTED
    assert v.primitive is True
    assert lat.signature(W) == (2, 2)


def test_backtracking_finds_44_in_2u():
    amb = lat.direct_sum(lat.U(), lat.U())
    W = lat.diag_lattice(4, 4)
    v = embed.construct_embedding(W, strategy="backtracking", bound=2, ambient=amb)
    assert v.status == embed.EXISTS_CONSTRUCTED
    assert embed.verify_embedding(W, amb, v.basis) is not None


def test_backtracking_finds_pushout_w_in_3u():
    amb = lat.direct_sum(lat.U(), lat.U(), lat.U())
    W = lat.Lattice([[2, 4, -1], [4, 2, 1], [-1, 1, 2]])  # the rank-3 self-glue pushout
    v = embed.construct_embedding(W, strategy="backtracking", bound=4, ambient=amb)
    assert v.status == embed.EXISTS_CONSTRUCTED
    assert v.primitive is True


def test_backtracking_unknown_is_honest():
    amb = lat.U()
    W = lat.diag_lattice(100)  # needs (1, 50), far beyond the bound
    v = embed.construct_embedding(W, strategy="backtracking", bound=2, ambient=amb)
    assert v.status == embed.UNKNOWN


def test_mod_obstruction():
    T = lat.direct_sum(lat.A2(-1), lat.U(3), lat.U(3))
    assert embed.mod_obstruction(T, 2, 3)
    assert embed.mod_obstruction(T, 8, 3)
    assert not embed.mod_obstruction(T, 4, 3)
    assert embed.mod_obstruction(lat.U(), 3, 2)
    assert not embed.mod_obstruction(lat.diag_lattice(4), 4, 3)


def test_embed_into_complement():
    T = lat.direct_sum(lat.A2(-1), lat.U(3), lat.U(3))
    x = embed.embed_into_complement(T, 4, 3)
    assert x is not None
    assert T.norm(x) == 4
    assert embed.embed_into_complement(lat.U(3), 6, 2) is not None
    assert embed.embed_into_complement(lat.A2(-1), 2, 4) is None


def test_criterion_i_implies_necessary():
    for gram in ([[4]], [[4, 0], [0, 22]], [[-2, 1], [1, 4]]):
        W = lat.Lattice(gram)
        if embed.nikulin_sufficient(W) == "i":
            assert embed.necessary_condition(W)


def test_dimension_mismatch():
    big = lat.direct_sum(*([lat.U()] * 12))
    with pytest.raises(ValueError):
        embed.construct_embedding(big)
