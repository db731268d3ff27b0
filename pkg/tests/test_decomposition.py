import pytest

from loopforge import (
    DataPair,
    NotMiddleRightNuclearError,
    all_t_inner,
    canonical_pair,
    decompose,
    has_automorphism_free_decomposition,
    has_factor_free_decomposition,
    has_schreier_decomposition,
    outer_map,
    precompose_automorphism,
    schreier_data_from_pair,
    schreier_loop,
    shift_transversal,
    t_factorization_check,
    t_is_homomorphism,
    t_restriction,
)
from loopforge.core import LoopTable, identity_perm


@pytest.fixture(scope="module")
def l_s3f(data_s3f):
    return schreier_loop(data_s3f)


G6 = tuple(range(6))


def test_z4_extraction(z4):
    pair = DataPair(LoopTable.cyclic(2), (0, 1), (0, 1))
    data = schreier_data_from_pair(z4, (0, 2), pair)
    # the factor value at (a, a) is the generator of the subgroup {0, 2}
    assert data.f[1][1] == 1
    dec = decompose(z4, (0, 2), pair)
    assert dec.iso == (0, 2, 1, 3)


def test_z4_other_transversal(z4):
    pair = DataPair(LoopTable.cyclic(2), (0, 1), (0, 3))
    data = schreier_data_from_pair(z4, (0, 2), pair)
    assert data.f[1][1] == 1


def test_existence_gate(loop5, l_s3f, z4):
    assert has_schreier_decomposition(z4, (0, 2))
    assert has_schreier_decomposition(l_s3f, G6)
    # the order-5 loop has trivial nuclei, so only the trivial subgroup works
    assert has_schreier_decomposition(loop5, (0,))


def test_decompose_requires_nuclearity(z2, z4):
    # the non-automorphism psi-extension has a normal subgroup copy of Z4
    # that is right but not middle nuclear
    from loopforge.extensions import psi_extension
    L, _ = psi_extension(z2, z4, (identity_perm(4), (0, 2, 1, 3)))
    with pytest.raises(NotMiddleRightNuclearError):
        decompose(L, (0, 1, 2, 3), None)
    assert not has_schreier_decomposition(L, (0, 1, 2, 3))


def test_canonical_round_trip(data_s3f, l_s3f):
    pair = canonical_pair(l_s3f, G6)
    data = schreier_data_from_pair(l_s3f, G6, pair)
    assert data.theta == data_s3f.theta
    assert data.f == data_s3f.f


def test_t_restriction_is_inner_on_subgroup(l_s3f):
    restr = t_restriction(l_s3f, G6)
    assert restr[0] == identity_perm(6)
    assert t_factorization_check(l_s3f, G6)


def test_t_homomorphism_iff_left_nuclear(l_s3f, z4, data_v4):
    assert not t_is_homomorphism(l_s3f, G6)
    assert t_is_homomorphism(z4, (0, 2))
    assert t_is_homomorphism(schreier_loop(data_v4), (0, 1, 2, 3))


def test_all_t_inner(l_s3f, s3):
    ok, witness = all_t_inner(l_s3f, G6)
    assert ok and witness == (0, 6)
    # S3 over A3: the induced maps hit outer automorphism classes
    ok, witness = all_t_inner(s3, (0, 3, 4))
    assert not ok and witness is None
    labels = set(outer_map(s3, (0, 3, 4)).values())
    assert len(labels) == 2


def test_automorphism_free_existence(l_s3f, data_v4):
    ok, pair = has_automorphism_free_decomposition(l_s3f, G6)
    assert ok and set(pair.sigma) == {0, 6}
    ok, pair = has_automorphism_free_decomposition(
        schreier_loop(data_v4), (0, 1, 2, 3))
    assert not ok


def test_factor_free_existence(l_s3f, data_v4):
    ok, _ = has_factor_free_decomposition(l_s3f, G6)
    assert not ok
    ok, pair = has_factor_free_decomposition(schreier_loop(data_v4), (0, 1, 2, 3))
    assert ok


def test_shift_on_z4(z4):
    pair = DataPair(LoopTable.cyclic(2), (0, 1), (0, 1))
    new_pair, data = shift_transversal(z4, (0, 2), pair, (0, 1))
    assert new_pair.sigma == (0, 3)
    assert data.f[1][1] == 1


def test_precompose_identity_is_noop(data_s3f):
    new = precompose_automorphism(data_s3f, (0, 1))
    assert new.theta == data_s3f.theta and new.f == data_s3f.f
