"""Deterministic redundancy evaluation across the probability range.

For p evenly spread over [1/2, 1), bounds n are drawn pseudo-randomly
per p and the expected code length is compared against entropy, the
optimal Huffman length, or bounded Golomb length.  Ratios are binned and
aggregated.  All randomness comes from a documented splitmix64-style
mixing function keyed by (seed, p index, draw index), so reports are
byte-identical across runs.
"""

import math
from bisect import bisect_left
from dataclasses import dataclass, field

from .bounded import derive_params, expected_length, make_layout
from .codes import golomb_expected_length_bounded
from .oracle import entropy, huffman_expected_length

__all__ = [
    "ExperimentConfig",
    "BinStat",
    "EvalReport",
    "SpotCheck",
    "BIN_EDGES",
    "run_experiment",
    "spot_check",
    "emit_report",
    "iterate_cases",
    "mix64",
    "draw_bound",
]

_INF = math.inf

# high endpoints of the ratio bins, inclusive; last bin is open-ended
BIN_EDGES = {
    "entropy": (0.0, 1e-5, 1e-4, 0.001, 0.005, 0.01, 0.02, 0.03, 0.05, 0.1, 0.5, _INF),
    "huffman": (0.0, 1e-5, 1e-4, 0.001, 0.005, 0.01, 0.02, _INF),
    "golomb": (0.05, 0.1, 0.5, 1.0, _INF),
}

# float ratios this close to zero count as exactly zero (the reference
# and the code length are computed by different summations)
ZERO_EPS = 1e-12

_M64 = (1 << 64) - 1


def mix64(z: int) -> int:
    """splitmix64 state update + finalizer; a 64-bit bijective mix."""
    z = (z + 0x9E3779B97F4A7C15) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def draw_bound(seed: int, p_index: int, draw_index: int, lo: int, hi: int) -> int:
    """Deterministic uniform draw from [lo, hi)."""
    if hi <= lo:
        raise ValueError("empty range")
    x = mix64(mix64(mix64(seed & _M64) ^ p_index) + draw_index)
    return lo + x % (hi - lo)


@dataclass(frozen=True)
class ExperimentConfig:
    num_p: int
    comparison: str
    seed: int = 0
    n_draws_per_p: int = 10

    def __post_init__(self):
        if self.num_p < 1:
            raise ValueError("num_p must be >= 1")
        if self.comparison not in BIN_EDGES:
            raise ValueError("comparison must be one of %s" % sorted(BIN_EDGES))
        if self.n_draws_per_p < 1:
            raise ValueError("n_draws_per_p must be >= 1")


@dataclass
class BinStat:
    high: float
    count: int
    percent: float
    sample_p: float | None
    sample_n: int | None


@dataclass
class EvalReport:
    comparison: str
    num_p: int
    seed: int
    n_draws_per_p: int
    bins: list[BinStat] = field(default_factory=list)
    aggregate_ratio: float = 0.0
    total_cases: int = 0
    skipped: int = 0


@dataclass(frozen=True)
class SpotCheck:
    p: float
    n: int
    comparison: str
    code_length: float
    reference: float
    ratio: float
    bin_high: float


def _n_range(comparison: str, m: int) -> tuple[int, int]:
    lo = 2 if comparison != "entropy" else max(2, (m + 1) // 2)
    return lo, 3 * m


def iterate_cases(cfg: ExperimentConfig):
    """Yield (p_index, draw_index, p, params, n) for every test case."""
    for k in range(cfg.num_p):
        p = 0.5 + k / (2 * cfg.num_p)
        params = derive_params(p)
        lo, hi = _n_range(cfg.comparison, params.m)
        if hi <= lo:
            continue
        for d in range(cfg.n_draws_per_p):
            n = draw_bound(cfg.seed, k, d, lo, hi)
            yield k, d, p, params, n


def _reference(comparison: str, p: float, n: int, m: int) -> float:
    if comparison == "entropy":
        return entropy(p, n)
    if comparison == "huffman":
        return huffman_expected_length(p, n)
    return golomb_expected_length_bounded(p, n, m)


def _ratio(comparison: str, L: float, ref: float) -> float:
    if comparison == "golomb":
        return (ref - L) / ref
    r = (L - ref) / ref
    return 0.0 if r <= ZERO_EPS else r


def run_experiment(cfg: ExperimentConfig) -> EvalReport:
    edges = BIN_EDGES[cfg.comparison]
    counts = [0] * len(edges)
    samples: list[tuple[float, int] | None] = [None] * len(edges)
    sum_code = 0.0
    sum_ref = 0.0
    total = 0
    skipped = 0
    for k in range(cfg.num_p):
        p = 0.5 + k / (2 * cfg.num_p)
        params = derive_params(p)
        lo, hi = _n_range(cfg.comparison, params.m)
        if hi <= lo:
            skipped += cfg.n_draws_per_p
            continue
        for d in range(cfg.n_draws_per_p):
            n = draw_bound(cfg.seed, k, d, lo, hi)
            lay = make_layout(params.m, params.m2, n)
            L = expected_length(p, lay)
            ref = _reference(cfg.comparison, p, n, params.m)
            r = _ratio(cfg.comparison, L, ref)
            b = bisect_left(edges, r)
            counts[b] += 1
            if samples[b] is None:
                samples[b] = (p, n)
            sum_code += L
            sum_ref += ref
            total += 1
    bins = []
    for i, high in enumerate(edges):
        sp, sn = samples[i] if samples[i] is not None else (None, None)
        pct = 100.0 * counts[i] / total if total else 0.0
        bins.append(BinStat(high=high, count=counts[i], percent=pct, sample_p=sp, sample_n=sn))
    agg = sum_code / sum_ref if sum_ref else 0.0
    return EvalReport(
        comparison=cfg.comparison,
        num_p=cfg.num_p,
        seed=cfg.seed,
        n_draws_per_p=cfg.n_draws_per_p,
        bins=bins,
        aggregate_ratio=agg,
        total_cases=total,
        skipped=skipped,
    )


def spot_check(p: float, n: int, comparison: str) -> SpotCheck:
    """Ratio and bin for a single (p, n) case."""
    if comparison not in BIN_EDGES:
        raise ValueError("comparison must be one of %s" % sorted(BIN_EDGES))
    params = derive_params(p)
    lay = make_layout(params.m, params.m2, n)
    L = expected_length(p, lay)
    ref = _reference(comparison, p, n, params.m)
    r = _ratio(comparison, L, ref)
    edges = BIN_EDGES[comparison]
    return SpotCheck(
        p=p, n=n, comparison=comparison, code_length=L, reference=ref,
        ratio=r, bin_high=edges[bisect_left(edges, r)],
    )


def _fmt_edge(e: float) -> str:
    return "inf" if math.isinf(e) else "%g" % e


def emit_report(report: EvalReport, format: str = "markdown") -> str:
    """Deterministic text rendering of a report (csv or markdown)."""
    if format == "csv":
        lines = ["bin_high,percent,sample_p,sample_n"]
        for b in report.bins:
            sp = "" if b.sample_p is None else "%.6f" % b.sample_p
            sn = "" if b.sample_n is None else str(b.sample_n)
            lines.append("%s,%.3f,%s,%s" % (_fmt_edge(b.high), b.percent, sp, sn))
        if report.total_cases:
            lines.append("# aggregate_ratio=%.6f total_cases=%d skipped=%d"
                         % (report.aggregate_ratio, report.total_cases, report.skipped))
        return "\n".join(lines) + "\n"
    if format == "markdown":
        lines = [
            "## Evaluation vs %s (num_p=%d, draws=%d, seed=%d)"
            % (report.comparison, report.num_p, report.n_draws_per_p, report.seed),
            "",
            "| bin high | percent | sample p | sample n |",
            "|---|---|---|---|",
        ]
        for b in report.bins:
            sp = "" if b.sample_p is None else "%.6f" % b.sample_p
            sn = "" if b.sample_n is None else str(b.sample_n)
            lines.append("| %s | %.3f | %s | %s |" % (_fmt_edge(b.high), b.percent, sp, sn))
        lines.append("")
        lines.append("aggregate ratio: %.6f over %d cases (%d skipped)"
                     % (report.aggregate_ratio, report.total_cases, report.skipped))
        return "\n".join(lines) + "\n"
    raise ValueError("format must be 'csv' or 'markdown'")
