"""Partitions, triples, exact polynomials and quasipolynomials.

Rationals are :class:`fractions.Fraction` throughout; Python integers are
arbitrary precision, so no count can silently wrap.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import ShapeError, WeightMismatch

Rational = Fraction
Poly = tuple  # tuple[Fraction, ...], coefficient of N**i at index i


class Partition(tuple):
    """A nonincreasing tuple of positive integers.

    Stored without trailing zeros. Use :meth:`from_padded` to build one from a
    sequence that may carry trailing zeros, and :meth:`padded` for the
    opposite direction.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ShapeError(f"partition parts must be positive: {parts}")
            if i and p > parts[i - 1]:
                raise ShapeError(f"partition parts must be nonincreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_padded(cls, parts: Iterable[int]) -> "Partition":
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        return cls(parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse canonical text such as ``"6,4,2"``; ``""`` and ``"0"`` are empty."""
        text = text.strip()
        if text in ("", "0", "()"):
            return cls()
        try:
            parts = [int(tok) for tok in text.strip("()[] ").split(",") if tok.strip()]
        except ValueError as exc:
            raise ShapeError(f"cannot parse partition {text!r}") from exc
        return cls(parts)

    def format(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def weight(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part accessor on the zero-padded view."""
        return self[i - 1] if i <= len(self) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self):
            raise ShapeError(f"{self.format()} has more than {length} parts")
        return tuple(self) + (0,) * (length - len(self))

    def __repr__(self) -> str:
        return f"Partition({self.format()})"


def weight(p: Partition) -> int:
    return sum(p)


def stretch(p: Partition, N: int) -> Partition:
    if N < 1:
        raise ValueError(f"stretch factor must be positive, got {N}")
    return Partition(N * x for x in p)


def add(p: Partition, q: Partition) -> Partition:
    """Termwise sum, padding the shorter partition with zeros."""
    n = max(len(p), len(q))
    return Partition.from_padded(a + b for a, b in zip(Partition(p).padded(n), Partition(q).padded(n)))


def rectangle(N: int, d: int) -> Partition:
    """The partition ``(N^d)``."""
    return Partition((N,) * d) if N > 0 else Partition()


@dataclass(frozen=True)
class KronTriple:
    """Index of a Kronecker coefficient: V_lam inside V_mu (x) V_nu."""

    lam: Partition
    mu: Partition
    nu: Partition

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            value = getattr(self, name)
            if not isinstance(value, Partition):
                object.__setattr__(self, name, Partition(value))
        wl, wm, wn = weight(self.lam), weight(self.mu), weight(self.nu)
        if not wl == wm == wn:
            bad = []
            if wl != wm:
                bad.append(f"|lambda|={wl} vs |mu|={wm}")
            if wl != wn:
                bad.append(f"|lambda|={wl} vs |nu|={wn}")
            if wm != wn:
                bad.append(f"|mu|={wm} vs |nu|={wn}")
            raise WeightMismatch("weights differ: " + "; ".join(bad))

    @classmethod
    def parse(cls, lam: str, mu: str, nu: str) -> "KronTriple":
        return cls(Partition.parse(lam), Partition.parse(mu), Partition.parse(nu))

    @property
    def n(self) -> int:
        return weight(self.lam)

    def stretch(self, N: int) -> "KronTriple":
        return KronTriple(stretch(self.lam, N), stretch(self.mu, N), stretch(self.nu, N))

    def swap(self) -> "KronTriple":
        return KronTriple(self.lam, self.nu, self.mu)

    def key(self) -> tuple:
        return (tuple(self.lam), tuple(self.mu), tuple(self.nu))

    def format(self) -> str:
        return f"({self.lam.format()}) ({self.mu.format()}) ({self.nu.format()})"


# --- polynomials over Q --------------------------------------------------

def poly(coeffs: Iterable) -> Poly:
    """Normalize a coefficient sequence (constant term first)."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_eval(p: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_degree(p: Poly) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(p) - 1


def poly_taylor_shift(p: Poly, c: int) -> Poly:
    """Coefficients of N -> p(N + c)."""
    out = [Fraction(0)] * len(p)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j in range(i + 1):
            out[j] += a * comb(i, j) * Fraction(c) ** (i - j)
    return poly(out)


def poly_format(p: Poly, var: str = "N") -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class QuasiPolynomial:
    """One polynomial per residue class of N modulo the period.

    ``branches[i - 1]`` governs the arguments N with N = i mod period, for
    i = 1..period, so the branch containing N = 1 comes first and
    ``branches[-1]`` covers the multiples of the period.
    """

    branches: tuple

    def __post_init__(self):
        branches = tuple(poly(b) for b in self.branches)
        if not branches:
            raise ValueError("a quasipolynomial needs at least one branch")
        object.__setattr__(self, "branches", branches)

    @classmethod
    def constant(cls, value, period: int = 1) -> "QuasiPolynomial":
        return cls((poly([value]),) * period)

    @property
    def period(self) -> int:
        return len(self.branches)

    @property
    def degree(self) -> int:
        return max(poly_degree(b) for b in self.branches)

    def branch_for(self, N: int) -> Poly:
        return self.branches[(N - 1) % self.period]

    def __call__(self, N: int) -> Fraction:
        return poly_eval(self.branch_for(N), N)

    evaluate = __call__

    def shift(self, c: int) -> "QuasiPolynomial":
        if c < 0:
            raise ValueError("shift must be nonnegative")
        k = self.period
        return QuasiPolynomial(
            tuple(poly_taylor_shift(self.branches[(j + c - 1) % k], c) for j in range(1, k + 1))
        )

    def is_zero(self) -> bool:
        return all(not b for b in self.branches)

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "branches": [[str(c) for c in b] for b in self.branches],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuasiPolynomial":
        q = cls(tuple(tuple(Fraction(c) for c in b) for b in data["branches"]))
        if q.period != data.get("period", q.period):
            raise ValueError("period does not match the number of branches")
        return q

    def format(self) -> str:
        if self.period == 1:
            return poly_format(self.branches[0])
        return "; ".join(
            f"N = {i} mod {self.period}: {poly_format(b)}" for i, b in enumerate(self.branches, 1)
        )


def qp_evaluate(f: QuasiPolynomial, N: int) -> Fraction:
    if N < 1:
        raise ValueError("quasipolynomials are evaluated at N >= 1")
    return f(N)


def qp_shift(f: QuasiPolynomial, c: int) -> QuasiPolynomial:
    return f.shift(c)


@dataclass(frozen=True)
class ShapeDecomposition:
    """Ray data of ``Q*N^2/4 + L*N/2 + Delta(N)`` with Delta depending on parity."""

    Q: int
    L: int
    delta_even: Fraction
    delta_odd: Fraction

    def __call__(self, N: int) -> Fraction:
        delta = self.delta_even if N % 2 == 0 else self.delta_odd
        return Fraction(self.Q * N * N, 4) + Fraction(self.L * N, 2) + delta

    def to_json(self) -> dict:
        return {
            "Q": self.Q,
            "L": self.L,
            "delta_even": str(self.delta_even),
            "delta_odd": str(self.delta_odd),
        }


def partitions(n: int, max_part: int | None = None, max_length: int | None = None):
    """Yield the partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(rest, cap, room):
        if rest == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, room - 1):
                yield (first,) + tail

    for parts in rec(n, max_part, max_length):
        yield Partition(parts)


def to_partition(p: Sequence[int] | Partition) -> Partition:
    return p if isinstance(p, Partition) else Partition.from_padded(p)
