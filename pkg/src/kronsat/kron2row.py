"""Kronecker coefficients for two two-row shapes by lattice-point counting.

For mu, nu with at most two rows (mu_2 >= nu_2) and lam with at most three,
the coefficient is the number of points of the parity lattice L inside
R_plus and the half-plane pair Z, minus the same count for R_minus::

    Z = {x + y <= mu2 + nu2 + 1,  y - x >= mu2 - nu2 + 1}
    L = {x + y = mu2 + nu2 + 1 mod 2}
    R_plus  = [lam3, lam2] x [1 + lam2, 1 + lam2 + lam3]
    R_minus = [lam3, lam2] x [2 + lam1, 2 + lam1 + lam3]
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import KronTriple, Partition
from .errors import EmptyRange, ShapeError


@dataclass(frozen=True)
class RosasGeometry:
    mu2: int
    nu2: int
    lambda1: int
    lambda2: int
    lambda3: int

    @classmethod
    def from_triple(cls, t: KronTriple) -> "RosasGeometry":
        _check_two_row(t)
        mu2, nu2 = t.mu.part(2), t.nu.part(2)
        if mu2 < nu2:
            mu2, nu2 = nu2, mu2
        return cls(mu2, nu2, t.lam.part(1), t.lam.part(2), t.lam.part(3))

    @property
    def z_sum_max(self) -> int:
        return self.mu2 + self.nu2 + 1

    @property
    def z_diff_min(self) -> int:
        return self.mu2 - self.nu2 + 1

    @property
    def parity(self) -> int:
        return (self.mu2 + self.nu2 + 1) % 2

    def in_z(self, x: int, y: int) -> bool:
        return x + y <= self.z_sum_max and y - x >= self.z_diff_min

    def in_l(self, x: int, y: int) -> bool:
        return (x + y) % 2 == self.parity

    @property
    def r_plus(self) -> tuple[int, int, int, int]:
        """(x_lo, x_hi, y_lo, y_hi), closed."""
        l2, l3 = self.lambda2, self.lambda3
        return (l3, l2, 1 + l2, 1 + l2 + l3)

    @property
    def r_minus(self) -> tuple[int, int, int, int]:
        l1, l2, l3 = self.lambda1, self.lambda2, self.lambda3
        return (l3, l2, 2 + l1, 2 + l1 + l3)

    def count(self, rect) -> int:
        """Points of rect n Z n L, one column at a time."""
        x_lo, x_hi, y_lo, y_hi = rect
        total = 0
        for x in range(x_lo, x_hi + 1):
            lo = max(y_lo, x + self.z_diff_min)
            hi = min(y_hi, self.z_sum_max - x)
            if lo <= hi:
                total += segment_parity_count(lo, hi, x, self.parity)
        return total

    def count_bruteforce(self, rect) -> int:
        x_lo, x_hi, y_lo, y_hi = rect
        return sum(
            1
            for x in range(x_lo, x_hi + 1)
            for y in range(y_lo, y_hi + 1)
            if self.in_z(x, y) and self.in_l(x, y)
        )


def _check_two_row(t: KronTriple) -> None:
    if len(t.mu) > 2 or len(t.nu) > 2 or len(t.lam) > 3:
        raise ShapeError(
            f"need l(mu) <= 2, l(nu) <= 2, l(lambda) <= 3; got {t.format()}"
        )


def kron_two_row(t: KronTriple) -> int:
    g = RosasGeometry.from_triple(t)
    plus = g.count(g.r_plus)
    minus = g.count(g.r_minus)
    value = plus - minus
    assert value >= 0, f"negative lattice-point difference for {t.format()}"
    return value


def kron_two_row_bruteforce(t: KronTriple) -> int:
    """Same formula, enumerating every integer point of both rectangles."""
    g = RosasGeometry.from_triple(t)
    return g.count_bruteforce(g.r_plus) - g.count_bruteforce(g.r_minus)


def segment_parity_count(x_lo: int, x_hi: int, y: int, parity: int) -> int:
    """Integer points (x, y) with x_lo <= x <= x_hi and x + y = parity mod 2."""
    if x_lo > x_hi:
        raise EmptyRange(f"empty range [{x_lo}, {x_hi}]")
    # first admissible x at or after x_lo
    first = x_lo if (x_lo + y - parity) % 2 == 0 else x_lo + 1
    if first > x_hi:
        return 0
    return (x_hi - first) // 2 + 1


@dataclass(frozen=True)
class ZeroCertificate:
    """The determinant-twist argument proves the coefficient vanishes."""

    reason: str

    def __bool__(self):
        return False


def length_bound_check(t: KronTriple) -> bool:
    return len(t.lam) <= len(t.mu) * len(t.nu)


def reduce_by_determinants(t: KronTriple, m: int, n: int):
    """Strip the determinant factor (1^{mn}) from lam.

    Returns an equivalent :class:`KronTriple` or a :class:`ZeroCertificate`.
    """
    if m < 1 or n < 1:
        raise ShapeError("m and n must be positive")
    if len(t.mu) > m or len(t.nu) > n or len(t.lam) > m * n:
        raise ShapeError(
            f"need l(mu) <= {m}, l(nu) <= {n}, l(lambda) <= {m * n}; got {t.format()}"
        )
    lam = t.lam.padded(m * n)
    mu = t.mu.padded(m)
    nu = t.nu.padded(n)
    k = lam[-1]
    k1, k2 = m * k, n * k
    if mu[-1] < k2:
        return ZeroCertificate(f"mu_{m} = {mu[-1]} < {k2}")
    if nu[-1] < k1:
        return ZeroCertificate(f"nu_{n} = {nu[-1]} < {k1}")
    return KronTriple(
        Partition.from_padded(x - k for x in lam[:-1]),
        Partition.from_padded(x - k2 for x in mu),
        Partition.from_padded(x - k1 for x in nu),
    )
