import pytest

from kronsat.core import KronTriple, Partition, partitions
from kronsat.errors import ParameterError, ShapeError, WeightMismatch
from kronsat.oracle import kron_oracle
from kronsat.reduced import (
    ReducedIndex,
    dagger,
    kron_from_reduced_2x2,
    kron_from_reduced_general,
    murnaghan_littlewood_lr,
    rkron_one_row,
    rkron_stabilized,
)


def test_one_row_example():
    assert rkron_one_row(1, 1, 2, 0) == 1
    assert rkron_one_row(1, 1, 1, 1) == 1
    assert rkron_one_row(1, 1, 1, 0) == 1
    assert rkron_one_row(0, 0, 0, 0) == 1


def test_one_row_symmetric_in_mu_nu():
    for a in range(5):
        for b in range(5):
            for l2 in range(5):
                for l3 in range(l2 + 1):
                    assert rkron_one_row(a, b, l2, l3) == rkron_one_row(b, a, l2, l3)


def test_one_row_rejects_bad_gamma():
    with pytest.raises(ShapeError):
        rkron_one_row(1, 1, 0, 1)


def test_one_row_matches_stable_limit():
    for m in range(4):
        for n in range(4):
            for l2 in range(4):
                for l3 in range(l2 + 1):
                    idx = ReducedIndex(Partition.from_padded((l2, l3)), Partition.from_padded((m,)), Partition.from_padded((n,)))
                    assert rkron_one_row(m, n, l2, l3) == rkron_stabilized(idx)


def test_stable_bound_and_padding():
    idx = ReducedIndex(Partition((2,)), Partition((1,)), Partition((1,)))
    assert idx.stable_bound() == 1 + 1 + 1 + 1 + 4
    assert idx.padded_triple(8) == KronTriple.parse("6,2", "7,1", "7,1")
    with pytest.raises(ShapeError):
        idx.padded_triple(3)


def test_dagger():
    assert dagger(Partition((4, 3, 1)), 1) == ((3, 1), True)
    assert dagger(Partition((4, 3, 1)), 2) == ((5, 1), True)
    assert dagger(Partition((4, 3, 1)), 3) == ((5, 4), True)
    assert dagger(Partition((4, 3, 1)), 4) == ((5, 4, 2), True)


def test_2x2_recovery_matches_oracle():
    for n in range(1, 10):
        for lam in partitions(n, max_length=3):
            for mu in partitions(n, max_length=2):
                for nu in partitions(n, max_length=2):
                    t = KronTriple(lam, mu, nu)
                    assert kron_from_reduced_2x2(t) == kron_oracle(t)


def test_general_recovery_matches_oracle():
    for n in range(1, 5):
        for lam in partitions(n, max_length=4):
            for mu in partitions(n, max_length=2):
                for nu in partitions(n, max_length=2):
                    t = KronTriple(lam, mu, nu)
                    assert kron_from_reduced_general(t, 2, 2) == kron_oracle(t)


def test_general_recovery_parameters():
    t = KronTriple.parse("1", "1", "1")
    with pytest.raises(ParameterError):
        kron_from_reduced_general(t, 1, 1)
    assert kron_from_reduced_general(t, 1, 2) == 1
    with pytest.raises(ShapeError):
        kron_from_reduced_general(KronTriple.parse("1,1,1", "2,1", "2,1"), 1, 2)


def test_murnaghan_littlewood_examples():
    assert murnaghan_littlewood_lr((3, 2, 1), (2, 1), (2, 1)) == 2
    assert murnaghan_littlewood_lr((2, 1), (1,), (1, 1)) == 1
    with pytest.raises(WeightMismatch):
        murnaghan_littlewood_lr((2, 1), (1,), (1,))
