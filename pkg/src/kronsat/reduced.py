"""Reduced Kronecker coefficients and recovery of ordinary ones from them."""
from __future__ import annotations

from dataclasses import dataclass

from .core import KronTriple, Partition, weight
from .errors import ParameterError, ShapeError, WeightMismatch
from .kron2row import _check_two_row
from . import oracle

DEFAULT_STABLE_MAX_N = 40


@dataclass(frozen=True)
class ReducedIndex:
    """Index of gbar^gamma_{alpha,beta}; weights are unconstrained."""

    gamma: Partition
    alpha: Partition
    beta: Partition

    def __post_init__(self):
        for name in ("gamma", "alpha", "beta"):
            value = getattr(self, name)
            if not isinstance(value, Partition):
                object.__setattr__(self, name, Partition(value))

    def stable_bound(self) -> int:
        """Smallest n at which the stabilization bound guarantees the limit is reached."""
        a, b, c = self.alpha, self.beta, self.gamma
        return weight(a) + weight(b) + a.part(1) + b.part(1) + 2 * weight(c)

    def padded_triple(self, n: int) -> KronTriple:
        """The triple ((n-|gamma|, gamma), (n-|alpha|, alpha), (n-|beta|, beta))."""
        parts = []
        for p in (self.gamma, self.alpha, self.beta):
            first = n - weight(p)
            if first < p.part(1):
                raise ShapeError(f"n = {n} too small to pad {p.format()}")
            parts.append(Partition.from_padded((first,) + tuple(p)))
        return KronTriple(*parts)


def rkron_one_row(mu2: int, nu2: int, lambda2: int, lambda3: int) -> int:
    """gbar^{(lambda2, lambda3)}_{(mu2),(nu2)} as a count of integer points.

    Counts (x, y) with x >= mu2, y >= 0, lambda2 <= x - y <= lambda2 + lambda3
    and mu2 + nu2 - lambda2 <= x + y <= mu2 + nu2 - lambda3.
    """
    if min(mu2, nu2, lambda2, lambda3) < 0:
        raise ShapeError("indices must be nonnegative")
    if lambda2 < lambda3:
        raise ShapeError(f"need lambda2 >= lambda3, got ({lambda2}, {lambda3})")
    if mu2 < nu2:
        mu2, nu2 = nu2, mu2
    s = mu2 + nu2
    # x, y >= 0 and x + y <= s - lambda3 bound both coordinates
    top = s - lambda3
    count = 0
    for x in range(mu2, top + 1):
        for y in range(0, top - x + 1):
            if s - lambda2 <= x + y and lambda2 <= x - y <= lambda2 + lambda3:
                count += 1
    return count


def dagger(lam: Partition, i: int) -> tuple[tuple[int, ...], bool]:
    """(1+lam_1, ..., 1+lam_{i-1}, lam_{i+1}, lam_{i+2}, ...) and whether it is a partition."""
    if i < 1:
        raise ValueError("i must be positive")
    lam = Partition(lam)
    padded = lam.padded(max(len(lam), i))
    seq = [p + 1 for p in padded[: i - 1]] + list(padded[i:])
    while seq and seq[-1] == 0:
        seq.pop()
    valid = all(p > 0 for p in seq) and all(a >= b for a, b in zip(seq, seq[1:]))
    return tuple(seq), valid


def kron_from_reduced_2x2(t: KronTriple) -> int:
    """Alternating sum of three two-one-row reduced coefficients."""
    _check_two_row(t)
    l1, l2, l3 = t.lam.part(1), t.lam.part(2), t.lam.part(3)
    m2, n2 = t.mu.part(2), t.nu.part(2)
    return (
        rkron_one_row(m2, n2, l2, l3)
        - rkron_one_row(m2, n2, l1 + 1, l3)
        + rkron_one_row(m2, n2, l1 + 1, l2 + 1)
    )


def kron_from_reduced_general(t: KronTriple, l1: int, l2: int, max_n: int = DEFAULT_STABLE_MAX_N) -> int:
    """sum_{i=1}^{l1*l2-1} (-1)^(i+1) gbar^{lam^{+i}}_{mu^{+1}, nu^{+1}}."""
    if l1 * l2 < 2:
        raise ParameterError("the recovery sum is empty unless l1 * l2 >= 2")
    if len(t.mu) > l1 or len(t.nu) > l2 or len(t.lam) > l1 * l2:
        raise ShapeError(
            f"need l(mu) <= {l1}, l(nu) <= {l2}, l(lambda) <= {l1 * l2}; got {t.format()}"
        )
    alpha, _ = dagger(t.mu, 1)
    beta, _ = dagger(t.nu, 1)
    total = 0
    for i in range(1, l1 * l2):
        gamma, valid = dagger(t.lam, i)
        if not valid:
            # cannot happen for a genuine partition: 1 + lam_{i-1} >= lam_{i+1}
            raise AssertionError(f"lambda^dagger{i} of {t.lam.format()} is not a partition")
        term = rkron_stabilized(ReducedIndex(Partition(gamma), Partition(alpha), Partition(beta)), max_n=max_n)
        total += term if i % 2 else -term
    return total


def rkron_stabilized(idx: ReducedIndex, max_n: int = DEFAULT_STABLE_MAX_N, check_next: bool = True) -> int:
    """gbar^gamma_{alpha,beta} as an ordinary coefficient past the stabilization bound.

    The oracle value at the bound n0 is compared with the value at n0 + 1
    when ``check_next`` is set.
    """
    n0 = idx.stable_bound()
    # the padded first row must dominate: n >= |p| + p_1 for each index
    for p in (idx.alpha, idx.beta, idx.gamma):
        assert n0 >= weight(p) + p.part(1), "stable bound below padding threshold"
    value = oracle.kron_oracle(idx.padded_triple(n0), max_n=max_n)
    if check_next:
        nxt = oracle.kron_oracle(idx.padded_triple(n0 + 1), max_n=max_n + 1)
        assert nxt == value, (
            f"not stable at n0 = {n0}: {value} vs {nxt} for "
            f"{idx.gamma.format()}; {idx.alpha.format()}; {idx.beta.format()}"
        )
    return value


def murnaghan_littlewood_lr(lam, mu, nu, max_n: int = DEFAULT_STABLE_MAX_N) -> int:
    """c^lam_{mu,nu} obtained as the reduced coefficient gbar^lam_{mu,nu}."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if weight(lam) != weight(mu) + weight(nu):
        raise WeightMismatch(f"|{lam.format()}| != |{mu.format()}| + |{nu.format()}|")
    return rkron_stabilized(ReducedIndex(lam, mu, nu), max_n=max_n)
