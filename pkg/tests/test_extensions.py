import pytest

from loopforge import (
    BadFamilyError,
    InvalidDataError,
    bruck_extension,
    classify_schreier,
    find_isomorphism,
    group_conditions,
    nucleus,
    schreier_divide,
    schreier_loop,
    trivial_data,
)
from loopforge.core import LoopTable, identity_perm
from loopforge.extensions import SchreierData, psi_extension


def test_data_validation_rejects_bad_theta(z2, z4):
    with pytest.raises(InvalidDataError):
        # (0,1,3,2) is a bijection of Z4 but not an automorphism
        SchreierData(z2, z4, (identity_perm(4), (0, 1, 3, 2)),
                     ((0, 0), (0, 0)))


def test_data_validation_rejects_bad_boundary(z2):
    with pytest.raises(InvalidDataError):
        SchreierData(z2, z2, (identity_perm(2),) * 2, ((0, 1), (0, 0)))


def test_trivial_data_gives_direct_product(z2, z3):
    L = schreier_loop(trivial_data(z2, z3))
    assert L.table == LoopTable.direct_product(z2, z3).table


def test_z4_fixture(data_z4, z4):
    L = schreier_loop(data_z4)
    assert L.is_associative
    assert find_isomorphism(L, z4) is not None


def test_s3f_fixture_nuclei(data_s3f):
    L = schreier_loop(data_s3f)
    assert not L.is_associative
    g_bar = set(range(6))
    assert g_bar <= set(nucleus(L, "middle"))
    assert g_bar <= set(nucleus(L, "right"))
    # embedded u is left nuclear iff it commutes with all factor values;
    # the centralizer of a transposition is the transposition's own subgroup
    assert set(nucleus(L, "left")) & g_bar == {0, 2}


def test_divisions_match_table(data_s3f):
    L = schreier_loop(data_s3f)
    m = 6
    for a in range(12):
        for b in range(12):
            pa, pb = divmod(a, m), divmod(b, m)
            k, v = schreier_divide(data_s3f, "left", pa, pb)
            assert k * m + v == L.ldiv(a, b)
            k, v = schreier_divide(data_s3f, "right", pa, pb)
            assert k * m + v == L.rdiv(a, b)


def test_group_conditions(data_z4, data_s3f):
    assert group_conditions(data_z4) == (True, True)
    eq2, eq3 = group_conditions(data_s3f)
    assert not (eq2 and eq3)


def test_classify(data_s3f, data_v4):
    r = classify_schreier(data_s3f)
    assert r.automorphism_free and not r.factor_free
    assert r.g_bar_middle_nuclear and r.g_bar_right_nuclear
    assert not r.g_bar_left_nuclear and not r.g_bar_nuclear
    r = classify_schreier(data_v4)
    assert r.factor_free and not r.automorphism_free


def test_bruck_extension_twisted(z2):
    # twisting the (a,a) block by the swapped table gives Z4, not V4
    twisted = ((1, 0), (0, 1))
    L = bruck_extension(z2, z2, {(1, 1): twisted})
    assert find_isomorphism(L, LoopTable.cyclic(4)) is not None


def test_bruck_extension_rejects_non_quasigroup(z2):
    with pytest.raises(BadFamilyError):
        bruck_extension(z2, z2, {(1, 1): ((0, 0), (1, 1))})


def test_psi_extension_diagnostics(z2, z4):
    # a multiplicative family of non-automorphisms: right and not middle/left
    psi = (identity_perm(4), (0, 2, 1, 3))
    _, diag = psi_extension(z2, z4, psi)
    assert diag.right_nuclear
    assert diag.multiplicative
    assert not diag.middle_nuclear and not diag.left_nuclear
    assert not diag.all_automorphisms


def test_psi_extension_with_automorphisms(z2, z4):
    psi = (identity_perm(4), (0, 3, 2, 1))
    _, diag = psi_extension(z2, z4, psi)
    assert diag.right_nuclear and diag.middle_nuclear and diag.left_nuclear
