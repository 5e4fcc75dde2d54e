"""Manifold data validation, Chern/Pontryagin conversion, and the product /
connected-sum closure operations."""

from fractions import Fraction

import pytest

from genus_forge.errors import (
    DimensionError,
    InconsistentData,
    InsufficientData,
    UnknownManifold,
)
from genus_forge.genera import genus_value
from genus_forge.manifolds import (
    GenusKind,
    ManifoldData,
    builtin,
    chern_to_pontryagin,
    connected_sum,
    cp,
    hp2,
    k3,
    partitions_of,
    product,
    sphere,
    torus,
)


def test_partitions_of():
    assert list(partitions_of(0)) == [()]
    assert set(partitions_of(4)) == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}


def test_cp3_chern_numbers():
    entry = cp(3)
    assert entry.chern_numbers == {(1, 1, 1): 64, (2, 1): 24, (3,): 4}
    assert entry.complex_dim == 3 and entry.real_dim == 6
    assert entry.spin  # odd n


def test_cp2_pontryagin_via_conversion():
    entry = cp(2)
    assert not entry.spin
    assert entry.pontryagin_or_converted() == {(1,): 3}
    assert chern_to_pontryagin(entry).pontryagin_numbers == {(1,): 3}
    assert chern_to_pontryagin(k3()).pontryagin_numbers == {(1,): -48}
    assert chern_to_pontryagin(torus(4)).pontryagin_numbers == {}


def test_k3_and_hp2_data():
    entry = k3()
    assert entry.chern_numbers == {(2,): 24}
    assert entry.pontryagin_or_converted() == {(1,): -48}
    assert entry.spin and not entry.string
    quat = hp2()
    assert quat.pontryagin_numbers == {(1, 1): 4, (2,): 7}
    assert quat.spin and not quat.string


def test_spheres_and_tori():
    s6 = sphere(6)
    assert s6.pontryagin_numbers == {} and s6.spin and s6.string
    t4 = torus(4)
    assert t4.pontryagin_numbers == {} and t4.chern_numbers == {}
    assert t4.complex_dim == 2
    with pytest.raises(UnknownManifold):
        sphere(3)
    with pytest.raises(UnknownManifold):
        torus(5)
    with pytest.raises(DimensionError):
        cp(0)


def test_builtin_parser():
    assert builtin("CP4").name == "CP4"
    assert builtin("S8").real_dim == 8
    assert builtin("T6").real_dim == 6
    assert builtin("K3").chern_numbers == {(2,): 24}
    assert builtin("HP2").real_dim == 8
    with pytest.raises(UnknownManifold):
        builtin("Gr(2,5)")


def test_validation_rejections():
    with pytest.raises(DimensionError):
        ManifoldData(name="odd", real_dim=5, pontryagin_numbers={})
    with pytest.raises(InconsistentData):
        ManifoldData(name="str-not-spin", real_dim=4, pontryagin_numbers={},
                     spin=False, string=True)
    with pytest.raises(InconsistentData):
        # partition sum exceeds the available weight
        ManifoldData(name="bad-part", real_dim=4, pontryagin_numbers={(2,): 1})
    with pytest.raises(DimensionError):
        # dimension 2 mod 4 cannot carry Pontryagin numbers
        ManifoldData(name="bad-dim", real_dim=6, pontryagin_numbers={(1,): 3})
    with pytest.raises(InsufficientData):
        ManifoldData(name="empty", real_dim=4)
    with pytest.raises(InconsistentData):
        ManifoldData(name="bad-genus", real_dim=4,
                     asserted_genera={"euler": Fraction(2)})
    with pytest.raises(DimensionError):
        # chern data requires the matching complex dimension
        ManifoldData(name="bad-cplx", real_dim=4, chern_numbers={(2,): 24},
                     complex_dim=3)


def test_inconsistent_chern_pontryagin_pair():
    liar = ManifoldData(
        name="lie", real_dim=4, complex_dim=2,
        chern_numbers={(2,): 24}, pontryagin_numbers={(1,): 0},
    )
    with pytest.raises(InconsistentData):
        chern_to_pontryagin(liar)


def test_product_kuenneth():
    prod = product(k3(), k3())
    assert prod.name == "K3xK3"
    assert prod.real_dim == 8
    assert prod.pontryagin_numbers == {(1, 1): 4608, (2,): 2304}
    # multiplicativity oracle
    assert genus_value(prod, GenusKind.AHAT) == 4


def test_product_with_two_mod_four_factor():
    prod = product(torus(2), sphere(6))
    assert prod.real_dim == 8
    assert prod.pontryagin_numbers == {}
    assert prod.spin and prod.string
    assert genus_value(prod, GenusKind.AHAT) == 0
    assert genus_value(prod, GenusKind.SIGNATURE) == 0


def test_product_chern_route():
    prod = product(cp(1), cp(2))
    assert prod.complex_dim == 3
    assert genus_value(prod, GenusKind.TODD) == 1
    both = product(cp(1), cp(1))
    assert genus_value(both, GenusKind.TODD) == 1


def test_product_requires_matching_data():
    asserted_only = ManifoldData(name="A8", real_dim=8, spin=True,
                                 asserted_genera={"ahat": Fraction(1)})
    with pytest.raises(InsufficientData):
        product(k3(), asserted_only)


def test_connected_sum_pontryagin_addition():
    total = connected_sum(k3(), k3())
    assert total.pontryagin_numbers == {(1,): -96}
    assert genus_value(total, GenusKind.AHAT) == 4
    assert genus_value(total, GenusKind.SIGNATURE) == -32


def test_connected_sum_dimension_mismatch():
    with pytest.raises(DimensionError):
        connected_sum(k3(), hp2())


def test_connected_sum_asserted_path():
    t2xs6 = product(torus(2), sphere(6))
    b8 = ManifoldData(name="B8", real_dim=8, spin=True,
                      asserted_genera={"ahat": Fraction(1)})
    total = connected_sum(t2xs6, b8)
    assert genus_value(total, GenusKind.AHAT) == 1
    with pytest.raises(InsufficientData):
        genus_value(total, GenusKind.SIGNATURE)

    with_hp2 = connected_sum(t2xs6, hp2())
    assert genus_value(with_hp2, GenusKind.SIGNATURE) == 1
    assert genus_value(with_hp2, GenusKind.AHAT) == 0


def test_normalization_of_numbers():
    entry = ManifoldData(name="N", real_dim=8,
                         pontryagin_numbers={(1, 1): 4, (2,): 7})
    same = ManifoldData(name="N", real_dim=8,
                        pontryagin_numbers={(1, 1): 4, (2,): 7, (1, 1): 4})
    assert entry.pontryagin_numbers == same.pontryagin_numbers
    dropped = ManifoldData(name="Z", real_dim=8,
                           pontryagin_numbers={(1, 1): 0, (2,): 7})
    assert dropped.pontryagin_numbers == {(2,): 7}
