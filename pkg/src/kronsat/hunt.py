"""Exhaustive counter-example search over two two-row Kronecker triples.

A triple is parameterized by x = (lam1, lam2, lam3, mu2, nu2); mu1 and nu1
follow from |lam| = |mu| = |nu|. Work is split by lam1 so sweeps can run on
a process pool; results are always returned in lexicographic order.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import KronTriple, Partition
from .errors import ParameterError
from .kron2row import kron_two_row
from .reduced import kron_from_reduced_2x2
from .stretch import (
    DEFAULT_CAP,
    DEFAULT_DEGREE,
    DEFAULT_PERIOD,
    HypothesisReport,
    check_strong_ph2,
    fit_quasipolynomial,
    report_for,
    StretchSamples,
)

DEFAULT_N_MAX = 6

_METHODS = {"rosas": kron_two_row, "reduced": kron_from_reduced_2x2}


@dataclass(frozen=True)
class SearchBox:
    """All triples with l(mu), l(nu) <= 2, l(lam) <= 3 and lam1 <= max_lambda1.

    ``max_weight`` optionally also bounds |lam|.
    """

    max_lambda1: int
    max_weight: int | None = None

    def lambdas(self, lam1: int | None = None):
        firsts = range(1, self.max_lambda1 + 1) if lam1 is None else (lam1,)
        for l1 in firsts:
            for l2 in range(l1 + 1):
                for l3 in range(l2 + 1):
                    if self.max_weight is not None and l1 + l2 + l3 > self.max_weight:
                        continue
                    yield (l1, l2, l3)

    def triples(self, lam1: int | None = None):
        for l1, l2, l3 in self.lambdas(lam1):
            n = l1 + l2 + l3
            lam = Partition.from_padded((l1, l2, l3))
            for mu2 in range(n // 2 + 1):
                mu = Partition.from_padded((n - mu2, mu2))
                for nu2 in range(n // 2 + 1):
                    yield KronTriple(lam, mu, Partition.from_padded((n - nu2, nu2)))

    def __contains__(self, t: KronTriple) -> bool:
        if len(t.mu) > 2 or len(t.nu) > 2 or len(t.lam) > 3:
            return False
        if t.lam.part(1) > self.max_lambda1:
            return False
        return self.max_weight is None or t.n <= self.max_weight


def _values(t: KronTriple, N_max: int, method: str) -> list[int]:
    kron = _METHODS[method]
    return [kron(t.stretch(N)) for N in range(1, N_max + 1)]


def _samples(t, n_fit, method, known=()):
    vals = list(known[:n_fit])
    kron = _METHODS[method]
    for N in range(len(vals) + 1, n_fit + 1):
        vals.append(kron(t.stretch(N)))
    return StretchSamples(t, tuple(enumerate(vals, 1)), method)


def _fit_n(period, degree):
    return period * (degree + 2)


def _sh_slice(args):
    box, lam1, N_max, cap, method, period, degree = args
    hits = []
    for t in box.triples(lam1):
        kron = _METHODS[method]
        if kron(t) != 0:
            continue
        vals = [0] + [kron(t.stretch(N)) for N in range(2, N_max + 1)]
        if not any(vals):
            continue
        s = _samples(t, max(N_max, _fit_n(period, degree)), method, vals)
        f = fit_quasipolynomial(s, period, degree)
        report = report_for(f, cap, samples=s.values)
        # g(1) = 0 with later positive values is only a candidate: the branch
        # through N = 1 may still vanish identically, as for (1,1) (1,1) (1,1)
        if not report.strong_sh_holds:
            hits.append((t, report))
    return hits


def _ph2_slice(args):
    box, lam1, N_max, cap, method, period, degree = args
    hits = []
    n_fit = max(N_max, _fit_n(period, degree))
    for t in box.triples(lam1):
        s = _samples(t, n_fit, method)
        f = fit_quasipolynomial(s, period, degree)
        if check_strong_ph2(f):
            continue
        hits.append((t, report_for(f, cap, samples=s.values)))
    return hits


def _run(worker, box, N_max, cap, method, period, degree, workers):
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}")
    jobs = [(box, l1, N_max, cap, method, period, degree) for l1 in range(1, box.max_lambda1 + 1)]
    if workers is None:
        workers = 1
    if workers == 0:
        workers = os.cpu_count() or 1
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(worker, jobs))
    else:
        chunks = [worker(job) for job in jobs]
    hits = [h for chunk in chunks for h in chunk]
    hits.sort(key=lambda h: h[0].key())
    return hits


def hunt_strong_sh(
    box: SearchBox,
    N_max: int = DEFAULT_N_MAX,
    cap: int = DEFAULT_CAP,
    method: str = "rosas",
    period: int = DEFAULT_PERIOD,
    degree: int = DEFAULT_DEGREE,
    workers: int | None = None,
) -> list[tuple[KronTriple, HypothesisReport]]:
    """Triples whose stretching quasipolynomial is not saturated.

    Candidates are the triples with g = 0 at N = 1 but g > 0 for some
    2 <= N <= N_max; each is then confirmed by fitting its quasipolynomial.
    """
    return _run(_sh_slice, box, N_max, cap, method, period, degree, workers)


def hunt_strong_ph2(
    box: SearchBox,
    N_max: int = DEFAULT_N_MAX,
    cap: int = DEFAULT_CAP,
    method: str = "rosas",
    period: int = DEFAULT_PERIOD,
    degree: int = DEFAULT_DEGREE,
    workers: int | None = None,
) -> list[tuple[KronTriple, HypothesisReport]]:
    """Triples whose fitted stretching quasipolynomial has a negative coefficient."""
    return _run(_ph2_slice, box, N_max, cap, method, period, degree, workers)


# --- the explicit family -----------------------------------------------------

def family_triple(i: int, j: int, k: int) -> KronTriple:
    """lam = (2k-2i-2j, 2i, 2j), mu = (k, k), nu = (k+1, k-1)."""
    if not (i > j > 0):
        raise ParameterError(f"need i > j > 0, got i = {i}, j = {j}")
    if not k > 2 * i + j:
        raise ParameterError(f"need k > 2i + j, got k = {k}")
    return KronTriple(
        Partition((2 * k - 2 * i - 2 * j, 2 * i, 2 * j)),
        Partition((k, k)),
        Partition((k + 1, k - 1)),
    )


def family_value(N: int) -> int:
    """N/2 + 1 for even N, N/2 - 1/2 for odd N."""
    return N // 2 + 1 if N % 2 == 0 else (N - 1) // 2


def verify_theorem1(i: int, j: int, k: int, N_max: int = DEFAULT_N_MAX, method: str = "rosas") -> bool:
    t = family_triple(i, j, k)
    return _values(t, N_max, method) == [family_value(N) for N in range(1, N_max + 1)]


def family_members(box: SearchBox) -> list[KronTriple]:
    """Members of the family inside ``box``, together with their mu <-> nu swaps."""
    out = []
    # lam1 = 2k - 2i - 2j increases with k
    for i in range(2, box.max_lambda1 + 1):
        for j in range(1, i):
            k = 2 * i + j + 1
            while 2 * k - 2 * i - 2 * j <= box.max_lambda1:
                t = family_triple(i, j, k)
                if t in box:
                    out.extend([t, t.swap()])
                k += 1
    out.sort(key=KronTriple.key)
    return out


def sh_classification_holds(t: KronTriple) -> bool:
    """mu2 = nu2 + 1, mu1 = mu2, lam2 = lam3 = 0 mod 2, up to swapping mu and nu."""
    for mu, nu in ((t.mu, t.nu), (t.nu, t.mu)):
        if (
            mu.part(2) == nu.part(2) + 1
            and mu.part(1) == mu.part(2)
            and t.lam.part(2) % 2 == 0
            and t.lam.part(3) % 2 == 0
        ):
            return True
    return False


def ph2_congruence_holds(t: KronTriple) -> bool:
    """lam1 = lam2 = lam3 = mu2 + nu2 + 1 = 0 mod 2."""
    l1, l2, l3 = t.lam.part(1), t.lam.part(2), t.lam.part(3)
    return l1 % 2 == 0 and l2 % 2 == 0 and l3 % 2 == 0 and (t.mu.part(2) + t.nu.part(2) + 1) % 2 == 0
