import pytest

from loopforge import (
    LoopTable,
    NoIdentityError,
    NotLatinError,
    automorphisms,
    center,
    commutant,
    commutator_subgroup,
    factor_loop,
    find_isomorphism,
    inner_automorphism,
    is_normal,
    is_subloop,
    left_transversals,
    loop_properties,
    middle_inner,
    nucleus,
    subloop_closure,
    validate_loop,
)
from loopforge.core import compose, identity_perm, invert_perm


def test_validate_rejects_non_latin():
    with pytest.raises(NotLatinError):
        validate_loop([[0, 1], [1, 1]])


def test_validate_rejects_missing_identity():
    with pytest.raises(NoIdentityError):
        validate_loop([[1, 0], [0, 1]])


def test_loop5_is_valid_and_nonassociative(loop5):
    assert validate_loop(loop5.table).order == 5
    assert not loop5.is_associative


def test_divide_definitions(loop5):
    for x in range(5):
        for y in range(5):
            assert loop5.mul(x, loop5.ldiv(x, y)) == y
            assert loop5.mul(loop5.rdiv(x, y), y) == x
    # frozen oracle: the unique z with z*3 = 2, read off column 3
    assert loop5.rdiv(2, 3) == 3


def test_divide_in_groups(z4):
    assert z4.ldiv(1, 3) == 2


def test_middle_inner_in_groups(s3):
    # in a group T_x is conjugation: y -> x.y.x^-1
    for x in range(6):
        t = middle_inner(s3, x)
        for y in range(6):
            assert t[y] == s3.mul(s3.mul(x, y), s3.inv(x))


def test_middle_inner_abelian(z4):
    for x in range(4):
        assert middle_inner(z4, x) == identity_perm(4)


def test_nuclei_group_is_everything(s3):
    for kind in ("left", "middle", "right", "full"):
        assert nucleus(s3, kind) == tuple(range(6))


def test_nuclei_loop5_trivial(loop5):
    for kind in ("left", "middle", "right", "full"):
        assert nucleus(loop5, kind) == (0,)


def test_commutant_and_center(s3):
    assert center(s3) == (0,)
    assert commutant(s3, (0,)) == tuple(range(6))
    a3 = commutator_subgroup(s3)
    assert a3 == (0, 3, 4)
    assert commutant(s3, a3) == (0, 3, 4)


def test_subloop_closure_and_normality(s3):
    a3 = subloop_closure(s3, (3,))
    assert a3 == (0, 3, 4)
    assert is_subloop(s3, a3)
    assert is_normal(s3, a3)
    assert not is_normal(s3, (0, 1))       # a transposition subgroup


def test_factor_loop(s3):
    fl = factor_loop(s3, (0, 3, 4))
    assert fl.quotient.order == 2
    assert fl.cosets[0] == (0, 3, 4)
    for x in range(6):
        for y in range(6):
            assert fl.projection[s3.mul(x, y)] == fl.quotient.mul(
                fl.projection[x], fl.projection[y])


def test_left_transversals(s3):
    ts = list(left_transversals(s3, (0, 3, 4)))
    assert all(0 in t for t in ts)
    assert len(ts) == 3
    assert ts[0] == (0, 1)


def test_loop_properties_flags(z4, loop5, bol8):
    assert loop_properties(z4).associative
    assert loop_properties(z4).right_bol
    assert not loop_properties(loop5).associative
    p = loop_properties(bol8)
    assert p.right_bol and not p.associative


def test_find_isomorphism_and_automorphisms(z4, v4):
    assert find_isomorphism(z4, v4) is None
    assert find_isomorphism(z4, z4) == (0, 1, 2, 3)
    assert len(automorphisms(z4)) == 2
    assert len(automorphisms(v4)) == 6


def test_isomorphism_respects_fixed(s3):
    iso = find_isomorphism(s3, s3, fixed={1: 1})
    assert iso is not None and iso[1] == 1
    assert find_isomorphism(s3, s3, fixed={1: 3}) is None


def test_direct_product(z2, z3):
    p = LoopTable.direct_product(z2, z3)
    assert p.order == 6
    assert find_isomorphism(p, LoopTable.cyclic(6)) is not None
