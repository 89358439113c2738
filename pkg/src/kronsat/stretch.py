"""Stretching quasipolynomials N -> g(N lam, N mu, N nu) and the hypothesis checks."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .core import (
    KronTriple,
    Poly,
    QuasiPolynomial,
    ShapeDecomposition,
    poly,
    poly_eval,
)
from .errors import FitMismatch, InsufficientSamples, OracleOverflow, ShapeDecompositionError, VerifyMismatch
from . import kron2row, oracle

DEFAULT_PERIOD = 2
DEFAULT_DEGREE = 2
DEFAULT_CAP = 100


class ExceededCap(NamedTuple):
    """Index search gave up; no shift up to ``cap`` works."""

    cap: int

    def to_json(self):
        return {"exceeded_cap": self.cap}


@dataclass(frozen=True)
class StretchSamples:
    triple: KronTriple
    values: tuple  # ((N, g(N)), ...) for N = 1..N_max
    method: str = "rosas"

    @property
    def n_max(self) -> int:
        return len(self.values)

    def as_list(self) -> list[int]:
        return [v for _, v in self.values]


def _kron_value(t: KronTriple, method: str, max_n: int) -> int:
    if method == "rosas":
        return kron2row.kron_two_row(t)
    if method == "oracle":
        return oracle.kron_oracle(t, max_n=max_n)
    raise ValueError(f"unknown method {method!r}")


def sample_stretch(
    t: KronTriple,
    N_max: int,
    method: str = "auto",
    max_n: int = oracle.DEFAULT_MAX_N,
    cross_check: bool = False,
) -> StretchSamples:
    """g(N lam, N mu, N nu) for N = 1..N_max.

    ``auto`` picks the lattice-point formula when the shapes allow it and the
    character oracle otherwise. With ``cross_check`` both are computed
    wherever both apply.
    """
    if N_max < 1:
        raise ValueError("N_max must be positive")
    two_row = len(t.mu) <= 2 and len(t.nu) <= 2 and len(t.lam) <= 3
    if method == "auto":
        method = "rosas" if two_row else "oracle"
    if method == "oracle" and t.n * N_max > max_n:
        raise OracleOverflow(
            f"stretching to N = {N_max} needs S_{t.n * N_max}, above the oracle limit {max_n}"
        )
    values = []
    for N in range(1, N_max + 1):
        s = t.stretch(N)
        v = _kron_value(s, method, max_n)
        if cross_check and two_row and s.n <= max_n:
            other = oracle.kron_oracle(s, max_n=max_n) if method == "rosas" else kron2row.kron_two_row(s)
            if other != v:
                raise VerifyMismatch(f"methods disagree at N = {N} for {t.format()}: {v} vs {other}")
        values.append((N, v))
    return StretchSamples(t, tuple(values), method)


def _interpolate(points) -> Poly:
    """Exact Lagrange interpolation through (x, y) points."""
    coeffs = [Fraction(0)] * len(points)
    for j, (xj, yj) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for m, (xm, _) in enumerate(points):
            if m == j:
                continue
            # multiply basis by (N - xm)
            basis = [Fraction(0)] + basis
            for i in range(len(basis) - 1):
                basis[i] -= xm * basis[i + 1]
            denom *= xj - xm
        scale = Fraction(yj) / denom
        for i, b in enumerate(basis):
            coeffs[i] += scale * b
    return poly(coeffs)


def fit_quasipolynomial(s: StretchSamples, period: int = DEFAULT_PERIOD, degree: int = DEFAULT_DEGREE) -> QuasiPolynomial:
    """Fit one polynomial of the given degree per residue class, then validate.

    Each class uses its first degree+1 samples for the fit; every later
    sample must agree exactly.
    """
    if period < 1 or degree < 0:
        raise ValueError("period must be positive and degree nonnegative")
    need = period * (degree + 1) + period
    if s.n_max < need:
        raise InsufficientSamples(
            f"period {period}, degree {degree} needs N_max >= {need}, have {s.n_max}"
        )
    table = dict(s.values)
    branches = []
    for residue in range(1, period + 1):
        Ns = [N for N in range(residue, s.n_max + 1, period)]
        fit_pts = [(N, table[N]) for N in Ns[: degree + 1]]
        p = _interpolate(fit_pts)
        for N in Ns[degree + 1:]:
            if poly_eval(p, N) != table[N]:
                raise FitMismatch(
                    f"branch N = {residue} mod {period} of degree {degree} misses N = {N} "
                    f"({poly_eval(p, N)} vs {table[N]}); raise --period or --degree"
                )
        branches.append(p)
    return QuasiPolynomial(tuple(branches))


def decompose_shape(f: QuasiPolynomial) -> ShapeDecomposition:
    """Write f(N) = Q N^2/4 + L N/2 + Delta(N) with Delta depending on parity only."""
    if f.period == 1:
        f = QuasiPolynomial(f.branches * 2)
    if f.period != 2:
        raise ShapeDecompositionError(f"need period 2, got {f.period}")
    if f.degree > 2:
        raise ShapeDecompositionError(f"need degree <= 2, got {f.degree}")
    odd, even = (tuple(b) + (Fraction(0),) * (3 - len(b)) for b in f.branches)
    if odd[1:] != even[1:]:
        raise ShapeDecompositionError("branches differ in their linear or quadratic coefficient")
    Q, L = 4 * odd[2], 2 * odd[1]
    if Q.denominator != 1 or L.denominator != 1:
        raise ShapeDecompositionError(f"Q = {Q} and L = {L} must be integers")
    return ShapeDecomposition(int(Q), int(L), even[0], odd[0])


def check_strong_sh(f: QuasiPolynomial) -> bool:
    """False exactly when f(1) = 0 while the branch containing 1 is not zero."""
    return not (f(1) == 0 and bool(f.branches[0]))


def check_strong_ph2(f: QuasiPolynomial) -> bool:
    return all(c >= 0 for b in f.branches for c in b)


def positive_on(p: Poly, residue: int | None = None, period: int = 1) -> bool:
    """Whether p(n) > 0 at every integer n >= 1 (optionally only n = residue mod period).

    Beyond the Cauchy root bound the sign is that of the leading
    coefficient, so only finitely many integers need checking.
    """
    if not p:
        return False
    lead = p[-1]
    if lead < 0:
        return False
    bound = 1 + max((abs(c / lead) for c in p[:-1]), default=Fraction(0))
    for n in range(1, math.ceil(bound) + 1):
        if residue is not None and (n - residue) % period:
            continue
        if poly_eval(p, n) <= 0:
            return False
    return True


def is_saturated(f: QuasiPolynomial, domain: str = "all") -> bool:
    """Every branch that is not identically zero is positive for all n >= 1.

    ``domain="class"`` only looks at the n in the branch's own residue class.
    """
    if domain not in ("all", "class"):
        raise ValueError(f"unknown saturation domain {domain!r}")
    for i, b in enumerate(f.branches, 1):
        if not b:
            continue
        if domain == "all":
            ok = positive_on(b)
        else:
            ok = positive_on(b, i, f.period)
        if not ok:
            return False
    return True


def saturation_index(f: QuasiPolynomial, cap: int = DEFAULT_CAP, domain: str = "all"):
    for s in range(cap + 1):
        if is_saturated(f.shift(s), domain):
            return s
    return ExceededCap(cap)


def positivity_index(f: QuasiPolynomial, cap: int = DEFAULT_CAP):
    for p in range(cap + 1):
        if check_strong_ph2(f.shift(p)):
            return p
    return ExceededCap(cap)


def shifted_from_shape(shape: ShapeDecomposition, g1: int, N: int) -> Fraction:
    """N^2/4 Q + N/2 (L + Q) + g1, the ray prediction for g(N + 1)."""
    return Fraction(N * N * shape.Q, 4) + Fraction(N * (shape.L + shape.Q), 2) + g1


@dataclass(frozen=True)
class HypothesisReport:
    quasipolynomial: QuasiPolynomial
    strong_sh_holds: bool
    strong_ph2_holds: bool
    saturation_index: object
    positivity_index: object
    saturation_domain: str = "all"
    saturation_index_other: object = None  # under the other domain, only when it differs
    shape: ShapeDecomposition | None = None
    samples: tuple = field(default=(), compare=False)

    def __post_init__(self):
        assert not self.strong_ph2_holds or self.strong_sh_holds

    def to_json(self) -> dict:
        def idx(v):
            return v.to_json() if isinstance(v, ExceededCap) else v

        out = {
            "quasipolynomial": self.quasipolynomial.to_json(),
            "formatted": self.quasipolynomial.format(),
            "strong_sh": self.strong_sh_holds,
            "strong_ph2": self.strong_ph2_holds,
            "saturation_index": idx(self.saturation_index),
            "positivity_index": idx(self.positivity_index),
            "shape": self.shape.to_json() if self.shape else None,
            "samples": [v for _, v in self.samples],
        }
        out["saturation_domain"] = self.saturation_domain
        if self.saturation_index_other is not None:
            other = "class" if self.saturation_domain == "all" else "all"
            out[f"saturation_index_{other}"] = idx(self.saturation_index_other)
        return out


def report_for(
    f: QuasiPolynomial,
    cap: int = DEFAULT_CAP,
    saturation_domain: str = "all",
    samples: tuple = (),
) -> HypothesisReport:
    s_all = saturation_index(f, cap, "all")
    s_class = saturation_index(f, cap, "class")
    primary, other = (s_all, s_class) if saturation_domain == "all" else (s_class, s_all)
    try:
        shape = decompose_shape(f)
    except ShapeDecompositionError:
        shape = None
    return HypothesisReport(
        quasipolynomial=f,
        strong_sh_holds=check_strong_sh(f),
        strong_ph2_holds=check_strong_ph2(f),
        saturation_index=primary,
        positivity_index=positivity_index(f, cap),
        saturation_domain=saturation_domain,
        saturation_index_other=other if other != primary else None,
        shape=shape,
        samples=samples,
    )


def analyze_triple(
    t: KronTriple,
    N_max: int | None = None,
    period: int = DEFAULT_PERIOD,
    degree: int = DEFAULT_DEGREE,
    cap: int = DEFAULT_CAP,
    method: str = "auto",
    saturation_domain: str = "all",
    max_n: int = oracle.DEFAULT_MAX_N,
) -> HypothesisReport:
    """Sample, fit, check both hypotheses and compute both indices."""
    if N_max is None:
        N_max = period * (degree + 2)
    samples = sample_stretch(t, N_max, method=method, max_n=max_n)
    f = fit_quasipolynomial(samples, period, degree)
    return report_for(f, cap, saturation_domain, samples.values)
