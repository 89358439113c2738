"""Brute-force ground truth from symmetric group characters and tableaux.

Nothing here uses the lattice-point formulas the other modules implement:
characters come from the Murnaghan-Nakayama rule, Kronecker coefficients from
the class-weighted triple character sum, Kostka numbers and
Littlewood-Richardson coefficients from explicit tableau enumeration.
"""
from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .core import KronTriple, Partition, partitions, stretch, weight
from .errors import OracleOverflow, WeightMismatch

DEFAULT_MAX_N = 14

_lock = threading.Lock()


@dataclass(frozen=True)
class ConjugacyClass:
    cycle_type: Partition
    size: int  # n! / z_rho

    @property
    def class_size_factor(self) -> Fraction:
        """1 / z_rho."""
        return Fraction(self.size, factorial(weight(self.cycle_type)))


def z(rho: Partition) -> int:
    """Order of the centralizer of a permutation with cycle type ``rho``."""
    out = 1
    for part, mult in Counter(rho).items():
        out *= part ** mult * factorial(mult)
    return out


@lru_cache(maxsize=None)
def conjugacy_classes(n: int) -> tuple[ConjugacyClass, ...]:
    nf = factorial(n)
    return tuple(ConjugacyClass(rho, nf // z(rho)) for rho in partitions(n))


# --- characters ------------------------------------------------------------

def _beta(shape: tuple) -> tuple:
    """First-column hook lengths (beta numbers) of ``shape``, decreasing."""
    m = len(shape)
    return tuple(p + m - 1 - i for i, p in enumerate(shape))


def _shape(beta: list) -> tuple:
    beta = sorted(beta, reverse=True)
    m = len(beta)
    parts = [b - (m - 1 - i) for i, b in enumerate(beta)]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


@lru_cache(maxsize=None)
def _mn(shape: tuple, rho: tuple) -> int:
    # rho is sorted decreasingly; strip the largest part first so that the
    # remaining suffixes are shared between many cycle types.
    if not rho:
        return 1 if not shape else 0
    r, rest = rho[0], rho[1:]
    beta = _beta(shape)
    present = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in present:
            continue
        # leg length = beta numbers strictly between target and b
        leg = sum(1 for c in beta if target < c < b)
        new = [c for c in beta if c != b] + [target]
        value = _mn(_shape(new), rest)
        total += -value if leg % 2 else value
    return total


def character(lam, rho) -> int:
    """Irreducible character value chi^lam at the class of cycle type rho."""
    lam, rho = Partition(lam), Partition(rho)
    if weight(lam) != weight(rho):
        raise WeightMismatch(f"|{lam.format()}| != |{rho.format()}|")
    return _mn(tuple(lam), tuple(rho))


@lru_cache(maxsize=4096)
def character_vector(lam: tuple) -> tuple:
    """chi^lam on every class of S_n, in the order of :func:`conjugacy_classes`."""
    n = sum(lam)
    return tuple(_mn(lam, tuple(c.cycle_type)) for c in conjugacy_classes(n))


def inner_product(lam, mu) -> Fraction:
    """sum_rho chi^lam(rho) chi^mu(rho) / z_rho."""
    lam, mu = Partition(lam), Partition(mu)
    n = weight(lam)
    if weight(mu) != n:
        raise WeightMismatch("characters of different symmetric groups")
    classes = conjugacy_classes(n)
    total = sum(c.size * a * b for c, a, b in zip(classes, character_vector(lam), character_vector(mu)))
    return Fraction(total, factorial(n))


def kron_oracle(t: KronTriple, max_n: int = DEFAULT_MAX_N) -> int:
    """Kronecker coefficient as sum_rho chi^lam chi^mu chi^nu (rho) / z_rho."""
    n = t.n
    if n > max_n:
        raise OracleOverflow(f"oracle limited to n <= {max_n}, got n = {n}")
    with _lock:
        classes = conjugacy_classes(n)
        a = character_vector(tuple(t.lam))
        b = character_vector(tuple(t.mu))
        c = character_vector(tuple(t.nu))
    total = 0
    for cls, x, y, w in zip(classes, a, b, c):
        if x and y and w:
            total += cls.size * x * y * w
    value, rem = divmod(total, factorial(n))
    assert rem == 0, f"class sum not divisible by n! for {t.format()}"
    assert value >= 0, f"negative multiplicity for {t.format()}"
    return value


def clear_caches() -> None:
    _mn.cache_clear()
    character_vector.cache_clear()
    conjugacy_classes.cache_clear()


# --- tableau enumeration ---------------------------------------------------

def _horizontal_strips(inner: tuple, outer_cap: Partition, size: int):
    """Shapes nu with inner <= nu <= outer_cap and nu/inner a horizontal strip of ``size``."""
    length = len(outer_cap)
    inner = inner + (0,) * (length - len(inner))

    def rec(row, left, acc):
        if row == length:
            if left == 0:
                yield tuple(acc)
            return
        # row may grow up to the row above's old length (horizontal strip),
        # and not past the target shape
        upper = outer_cap[row]
        if row > 0:
            upper = min(upper, inner[row - 1])
        for grow in range(min(left, upper - inner[row]), -1, -1):
            acc.append(inner[row] + grow)
            yield from rec(row + 1, left - grow, acc)
            acc.pop()

    yield from rec(0, size, [])


def kostka(lam, mu) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    lam, mu = Partition(lam), Partition(mu)
    if weight(lam) != weight(mu):
        raise WeightMismatch(f"|{lam.format()}| != |{mu.format()}|")

    def fill(letter, shape):
        if letter == len(mu):
            return 1 if shape == tuple(lam) + (0,) * (len(shape) - len(lam)) else 0
        count = 0
        for nxt in _horizontal_strips(shape, lam, mu[letter]):
            count += fill(letter + 1, nxt)
        return count

    return fill(0, (0,) * len(lam))


def lr_coeff(lam, mu, nu) -> int:
    """Number of Littlewood-Richardson tableaux of shape lam/mu and content nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if weight(lam) != weight(mu) + weight(nu):
        raise WeightMismatch(f"|{lam.format()}| != |{mu.format()}| + |{nu.format()}|")
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        return 0
    inner = mu.padded(len(lam))
    # reading order: rows top to bottom, each row right to left
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r] - 1, inner[r] - 1, -1)]
    filling: dict = {}
    counts = [0] * (len(nu) + 1)

    def rec(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = len(nu)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((r - 1, c))
        lo = above + 1 if above is not None else 1
        total = 0
        for e in range(lo, hi + 1):
            if counts[e] >= nu[e - 1]:
                continue
            if e > 1 and counts[e] + 1 > counts[e - 1]:
                continue
            counts[e] += 1
            filling[(r, c)] = e
            total += rec(idx + 1)
            del filling[(r, c)]
            counts[e] -= 1
        return total

    return rec(0)


def lr_saturation_check(lam, mu, nu, N_max: int) -> bool:
    """Whether positivity of c^lam_{mu,nu} matches positivity of every stretch up to N_max."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    base = lr_coeff(lam, mu, nu) > 0
    return all(
        (lr_coeff(stretch(lam, N), stretch(mu, N), stretch(nu, N)) > 0) == base
        for N in range(1, N_max + 1)
    )
