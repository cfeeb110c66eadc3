"""The 2D Robin spectrum of the square (-pi/2, pi/2)^2.

Eigenvalues are lambda_{p,q}(h) = (alpha_p(h)^2 + alpha_q(h)^2) / pi^2 for
pairs of branch indices (p, q) >= (0, 0).  This module enumerates, sorts,
clusters and labels the spectrum, evaluates counting functions with exact
integer lattice counts at the Neumann/Dirichlet endpoints, checks the
two-sided Weyl estimates, and regenerates the endpoint eigenvalue tables.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import NamedTuple

from . import robin1d

PI = math.pi

#: Relative tolerance within which sorted eigenvalues are clustered.
CLUSTER_RTOL = 1e-9


class ModeLabel(NamedTuple):
    p: int
    q: int


@dataclass(frozen=True)
class Eigenvalue2D:
    label: ModeLabel
    h: float
    value: float


def eigenvalue(label, h: float) -> Eigenvalue2D:
    """lambda_{p,q}(h) = (alpha_p^2 + alpha_q^2)/pi^2.

    Exact integers at the endpoints: p^2 + q^2 at h = 0 and
    (p+1)^2 + (q+1)^2 at h = inf.
    """
    label = ModeLabel(*label)
    h = robin1d.validate_robin_param(h)
    if h == 0.0:
        value = float(label.p ** 2 + label.q ** 2)
    elif math.isinf(h):
        value = float((label.p + 1) ** 2 + (label.q + 1) ** 2)
    else:
        ap = robin1d.alpha(label.p, h)
        aq = robin1d.alpha(label.q, h)
        value = (ap * ap + aq * aq) / (PI * PI)
    return Eigenvalue2D(label=label, h=h, value=value)


@dataclass
class SpectrumTable:
    """Sorted spectrum below a cutoff, with degeneracy clusters and 1-based
    labelling ranges (tied eigenvalues share the full index range)."""

    h: float
    entries: list[Eigenvalue2D]
    clusters: list[list[int]]          # lists of entry indices
    labelling: list[tuple[int, int]]   # per entry: (k_min, k_max)

    def index_range(self, label) -> tuple[int, int]:
        label = ModeLabel(*label)
        for entry, rng in zip(self.entries, self.labelling):
            if entry.label == label:
                return rng
        raise KeyError(f"label {label} not in table")

    def find(self, label) -> Eigenvalue2D:
        label = ModeLabel(*label)
        for entry in self.entries:
            if entry.label == label:
                return entry
        raise KeyError(f"label {label} not in table")

    def cluster_of(self, entry: Eigenvalue2D) -> list[Eigenvalue2D]:
        for cluster in self.clusters:
            if any(self.entries[i] is entry or self.entries[i].label == entry.label
                   for i in cluster):
                return [self.entries[i] for i in cluster]
        raise KeyError(f"entry {entry} not in table")

    def csv_rows(self) -> list[tuple]:
        """Rows (m, n, value, k_min, k_max); exact ints at h in {0, inf}."""
        exact = self.h == 0.0 or math.isinf(self.h)
        rows = []
        for entry, (kmin, kmax) in zip(self.entries, self.labelling):
            value = int(entry.value) if exact else entry.value
            rows.append((entry.label.p, entry.label.q, value, kmin, kmax))
        return rows


def enumerate_spectrum(h: float, lam_max: float,
                       cluster_rtol: float = CLUSTER_RTOL) -> SpectrumTable:
    """All eigenvalues strictly below lam_max, sorted and labelled.

    Completeness: value >= p^2 + q^2, so scanning p^2 + q^2 < lam_max covers
    every contributing pair.  Ties inside a cluster are ordered by (p, q).
    """
    h = robin1d.validate_robin_param(h)
    if lam_max <= 0:
        raise ValueError("lam_max must be positive")
    pmax = int(math.isqrt(int(lam_max)) + 1)
    entries = []
    for p in range(pmax + 1):
        if p * p >= lam_max:
            break
        for q in range(pmax + 1):
            if p * p + q * q >= lam_max:
                break
            ev = eigenvalue((p, q), h)
            if ev.value < lam_max:
                entries.append(ev)
    entries.sort(key=lambda e: (e.value, e.label))

    clusters: list[list[int]] = []
    for i, ev in enumerate(entries):
        if clusters:
            head = entries[clusters[-1][0]].value
            tol = cluster_rtol * max(1.0, abs(head))
            if abs(ev.value - head) <= tol:
                clusters[-1].append(i)
                continue
        clusters.append([i])

    labelling: list[tuple[int, int]] = [()] * len(entries)  # type: ignore
    k = 1
    for cluster in clusters:
        rng = (k, k + len(cluster) - 1)
        for i in cluster:
            labelling[i] = rng
        k += len(cluster)
    return SpectrumTable(h=h, entries=entries, clusters=clusters, labelling=labelling)


def _lattice_count(lam: float, origin: int) -> int:
    """#{(m, n) >= (origin, origin) : m^2 + n^2 < lam} by row scan."""
    if lam <= 2 * origin * origin:
        return 0
    count = 0
    m = origin
    while m * m < lam:
        rest = lam - m * m
        if rest > origin * origin:
            # largest n with n^2 < rest
            n_hi = math.isqrt(int(rest))
            if n_hi * n_hi >= rest:
                n_hi -= 1
            if n_hi >= origin:
                count += n_hi - origin + 1
        m += 1
    return count


def counting_function(h: float, lam: float) -> int:
    """Strict count of eigenvalues below lam at parameter h."""
    h = robin1d.validate_robin_param(h)
    if lam <= 0:
        raise ValueError("lam must be positive")
    if h == 0.0:
        return _lattice_count(lam, origin=0)
    if math.isinf(h):
        return _lattice_count(lam, origin=1)
    table = enumerate_spectrum(h, lam)
    return len(table.entries)


def neumann_counting(lam: float) -> int:
    return _lattice_count(lam, origin=0)


def dirichlet_counting(lam: float) -> int:
    return _lattice_count(lam, origin=1)


@dataclass
class WeylReport:
    lam_max: float
    samples: int
    neumann_violations: list[float]
    dirichlet_violations: list[float]

    @property
    def ok(self) -> bool:
        return not self.neumann_violations and not self.dirichlet_violations


def weyl_bounds_check(lam_max: float, samples: int = 10000) -> WeylReport:
    """Check the two-sided endpoint counting estimates on (2, lam_max]:

        pi/4*lam + 2*floor(sqrt(lam)) + 1 >= N_Neumann(lam) > pi/4*lam
        N_Dirichlet(lam) > pi/4*lam - 2*sqrt(lam) + 1     (lam >= 2)

    Counting functions at the endpoints are exact integer lattice counts, so
    a violation would indicate an enumeration bug, not roundoff.
    """
    if lam_max < 2.0:
        raise ValueError("lam_max must be >= 2")
    neu_bad, dir_bad = [], []
    # Presort the eigenvalue lists once; N(lam) is then a bisection.
    neu_vals = sorted(m * m + n * n
                      for m in range(int(math.isqrt(int(lam_max))) + 2)
                      for n in range(int(math.isqrt(int(lam_max))) + 2)
                      if m * m + n * n < lam_max)
    dir_vals = sorted(m * m + n * n
                      for m in range(1, int(math.isqrt(int(lam_max))) + 2)
                      for n in range(1, int(math.isqrt(int(lam_max))) + 2)
                      if m * m + n * n < lam_max)
    for i in range(samples):
        lam = 2.0 + (lam_max - 2.0) * (i + 1) / samples
        n_neu = bisect_left(neu_vals, lam)
        n_dir = bisect_left(dir_vals, lam)
        quarter = PI / 4.0 * lam
        if not (quarter + 2.0 * math.floor(math.sqrt(lam)) + 1.0 >= n_neu > quarter):
            neu_bad.append(lam)
        if not (n_dir > quarter - 2.0 * math.sqrt(lam) + 1.0):
            dir_bad.append(lam)
    return WeylReport(lam_max=lam_max, samples=samples,
                      neumann_violations=neu_bad, dirichlet_violations=dir_bad)


@dataclass(frozen=True)
class IndexCutoff:
    cutoff: int
    intermediate_bound: float
    lam_cap: float


def index_cutoff(lam_cap: float = 598.0) -> IndexCutoff:
    """Index cutoff implied by the eigenvalue cap lam_cap.

    If lambda_n < lam_cap then n - 1 <= pi/4*lam + 2*floor(sqrt(lam)) + 1,
    so n < pi/4*lam_cap + 2*floor(sqrt(lam_cap)) + 2 and every index at or
    above the returned cutoff is excluded.  For the default cap 598 the
    intermediate bound is below 518.67 and the cutoff is 520.
    """
    bound = PI / 4.0 * lam_cap + 2.0 * math.floor(math.sqrt(lam_cap)) + 1.0
    cutoff = int(math.floor(bound + 1.0)) + 1
    return IndexCutoff(cutoff=cutoff, intermediate_bound=bound, lam_cap=lam_cap)


def endpoint_tables(k_max: int = 129) -> tuple[list[tuple], list[tuple]]:
    """Endpoint eigenvalue tables with integer arithmetic.

    Returns (neumann_rows, dirichlet_rows); each row is
    (m, n, m^2 + n^2, k_min, k_max) and rows keep every entry whose index
    range starts at or below k_max.  Neumann scans (m, n) >= (0, 0),
    Dirichlet scans (m, n) >= (1, 1).
    """
    out = []
    for origin in (0, 1):
        # generous value cap: indices grow ~ pi/4 * value
        cap = int(4.0 / PI * (k_max + 8) * 1.3) + 16
        pairs = [(m, n, m * m + n * n)
                 for m in range(origin, int(math.isqrt(cap)) + 2)
                 for n in range(origin, int(math.isqrt(cap)) + 2)
                 if m * m + n * n <= cap]
        pairs.sort(key=lambda t: (t[2], t[0], t[1]))
        rows = []
        k = 1
        i = 0
        while i < len(pairs):
            j = i
            while j < len(pairs) and pairs[j][2] == pairs[i][2]:
                j += 1
            kmin, kmax = k, k + (j - i) - 1
            if kmin > k_max:
                break
            for m, n, v in pairs[i:j]:
                rows.append((m, n, v, kmin, kmax))
            k = kmax + 1
            i = j
        out.append(rows)
    return out[0], out[1]


def sturm_index_bounds(entry: Eigenvalue2D, table: SpectrumTable) -> tuple[int, int]:
    """(i_n, j_n): min and max branch index over the entry's degeneracy
    cluster.  j_n <= sqrt(lambda) always holds since alpha_j >= j*pi."""
    cluster = table.cluster_of(entry)
    indices = [i for ev in cluster for i in ev.label]
    i_n, j_n = min(indices), max(indices)
    if entry.value > 0 and j_n > math.sqrt(entry.value) * (1 + 1e-12):
        raise AssertionError("index bound j_n exceeds sqrt(lambda)")
    return i_n, j_n
