import pytest

from loopforge import (
    CarrierMismatchError,
    equivalence_oracle,
    equivalent,
    trivial_data,
    wide_equivalent,
)
from loopforge.decomposition import apply_shift


def test_self_equivalence(data_z4):
    assert equivalent(data_z4, data_z4) == (0, 0)
    mu, n = wide_equivalent(data_z4, data_z4)
    assert mu == (0, 1) and n == (0, 0)


def test_z4_not_equivalent_to_direct_product(data_z4, z2):
    product = trivial_data(z2, z2)
    assert equivalent(data_z4, product) is None
    assert wide_equivalent(data_z4, product) is None
    assert not equivalence_oracle(data_z4, product, wide=False)
    assert not equivalence_oracle(data_z4, product, wide=True)


def test_shifted_data_is_equivalent(data_s3f):
    for n in ((0, 1), (0, 2), (0, 5)):
        moved = apply_shift(data_s3f, n)
        assert equivalent(data_s3f, moved) == n
        assert equivalence_oracle(data_s3f, moved, wide=False)
        assert equivalence_oracle(data_s3f, moved, wide=True)


def test_witness_transforms_exactly(data_v4):
    moved = apply_shift(data_v4, (0, 3))
    n = equivalent(data_v4, moved)
    assert n is not None
    back = apply_shift(data_v4, n)
    assert back.theta == moved.theta and back.f == moved.f


def test_carrier_mismatch(data_z4, data_v4):
    with pytest.raises(CarrierMismatchError):
        equivalent(data_z4, data_v4)
