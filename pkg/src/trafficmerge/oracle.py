"""Brute-force ground truth.

Everything here is recomputed by exhaustive enumeration of arrival
sequences, encoded as integers with bit ``i`` holding car ``i + 1``.  The
tallies use their own bit-twiddling replay of the lane rule rather than
:func:`trafficmerge.core.simulate`, so the closed forms, the recursions and
the simulator are each checked against something they do not share code
with.

Enumeration shards the ``2**length`` range on its high-order bits; every
shard is reduced to a :class:`collections.Counter` and the counters are
summed, so serial and parallel runs give identical results.

Monte Carlo sampling uses NumPy's ``default_rng`` (PCG64) seeded with the
caller's integer seed.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator

import numpy as np

from . import bijections, classes, counting, expectation, trails
from .core import ArrivalSequence, MergeResult, simulate
from .errors import DomainError, ResourceLimitError

__all__ = [
    "DEFAULT_CAP",
    "MonteCarloEstimate",
    "VerificationReport",
    "brute_lane_sums",
    "enumerate_sequences",
    "monte_carlo_expected",
    "replay",
    "shard_ranges",
    "tally",
    "verify_all",
    "verify_bijections",
    "verify_classes",
    "verify_counts",
    "verify_monte_carlo",
    "verify_phi",
    "verify_psi",
    "verify_step",
    "verify_trail_partition",
]

DEFAULT_CAP = 24


def _check_cap(length: int, cap: int) -> None:
    if length < 0:
        raise DomainError(f"length must be nonnegative, got {length}")
    if length > cap:
        raise ResourceLimitError(f"length {length} exceeds the enumeration cap of {cap}")


def enumerate_sequences(length: int, cap: int = DEFAULT_CAP) -> Iterator[tuple[ArrivalSequence, MergeResult]]:
    """Every sequence of the given length with its simulation, in numeric order."""
    _check_cap(length, cap)
    for value in range(2**length):
        seq = ArrivalSequence.from_int(value, length)
        yield seq, simulate(seq)


def replay(value: int, length: int) -> tuple[int, int, int]:
    """Return ``(left, right, bounces)`` for the integer-encoded sequence."""
    left = right = bounces = 0
    for _ in range(length):
        if value & 1:
            if left < right:
                left += 1
            else:
                right += 1
                bounces += 1
        else:
            right += 1
        value >>= 1
    return left, right, bounces


def shard_ranges(length: int, shard_bits: int) -> list[tuple[int, int]]:
    """Split ``range(2**length)`` into blocks sharing their top ``shard_bits`` bits."""
    shard_bits = max(0, min(shard_bits, length))
    width = 1 << (length - shard_bits)
    return [(s * width, (s + 1) * width) for s in range(1 << shard_bits)]


def _tally_block(args: tuple[int, int, int]) -> Counter:
    length, lo, hi = args
    out: Counter = Counter()
    for value in range(lo, hi):
        left, right, bounces = replay(value, length)
        zeros = length - bin(value).count("1")
        out[(left, right, zeros, bounces)] += 1
    return out


def tally(length: int, workers: int = 1, shard_bits: int | None = None, cap: int = DEFAULT_CAP) -> Counter:
    """Count sequences by ``(n, m, k, bounces)`` = (left, right, zeros, bounces)."""
    _check_cap(length, cap)
    if shard_bits is None:
        shard_bits = 0 if workers <= 1 else max(1, (4 * workers - 1).bit_length())
    jobs = [(length, lo, hi) for lo, hi in shard_ranges(length, shard_bits)]
    total: Counter = Counter()
    if workers <= 1:
        for part in map(_tally_block, jobs):
            total.update(part)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_tally_block, jobs):
                total.update(part)
    return total


def brute_lane_sums(length: int, workers: int = 1) -> tuple[int, list[int]]:
    """``(sum of r over all sequences, [sum of r over sequences with k zeros])``."""
    per_k = [0] * (length + 1)
    for (_, right, zeros, _), count in tally(length, workers).items():
        per_k[zeros] += right * count
    return sum(per_k), per_k


@dataclass
class VerificationReport:
    """Outcome of checking one claim over a parameter range."""

    claim: str
    parameters: dict[str, Any]
    passed: bool = True
    counterexample: Any = None
    compared: int = 0
    details: list[VerificationReport] = field(default_factory=list)

    def check(self, ok: bool, witness: Any) -> None:
        self.compared += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = witness

    def add(self, child: VerificationReport) -> VerificationReport:
        self.details.append(child)
        self.compared += child.compared
        if not child.passed and self.passed:
            self.passed = False
            self.counterexample = {"claim": child.claim, "witness": child.counterexample}
        return child

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "parameters": self.parameters,
            "status": "pass" if self.passed else "fail",
            "counterexample": self.counterexample,
            "compared": self.compared,
            "details": [d.to_dict() for d in self.details],
        }


# ---------------------------------------------------------------- counts


def _brute_tables(max_total: int, workers: int) -> tuple[Counter, Counter, dict[int, Counter]]:
    by_nm: Counter = Counter()
    by_nmk: Counter = Counter()
    by_length: dict[int, Counter] = {}
    for length in range(max_total + 1):
        t = tally(length, workers)
        by_length[length] = t
        for (n, m, k, _), count in t.items():
            by_nm[(n, m)] += count
            by_nmk[(n, m, k)] += count
    return by_nm, by_nmk, by_length


def verify_counts(n_max: int, m_max: int, k_max: int, workers: int = 1, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Check recursions, closed forms and set identities for counts against enumeration."""
    max_total = n_max + m_max
    _check_cap(max_total, cap)
    report = VerificationReport("counts", {"n_max": n_max, "m_max": m_max, "k_max": k_max})
    by_nm, by_nmk, by_length = _brute_tables(max_total, workers)

    sub = VerificationReport("M_n(m): recursive = closed = brute force", {})
    for n in range(n_max + 1):
        for m in range(n, m_max + 1):
            rec, closed, brute = counting.m_count_recursive(n, m), counting.m_count_closed(n, m), by_nm[(n, m)]
            sub.check(rec == closed == brute, {"n": n, "m": m, "recursive": rec, "closed": closed, "brute": brute})
    report.add(sub)

    sub = VerificationReport("M_{n,k}(m): recursive = brute force, closed form where defined", {})
    for n in range(n_max + 1):
        for m in range(n, m_max + 1):
            for k in range(k_max + 1):
                rec, brute = counting.m_count_k_recursive(n, m, k), by_nmk[(n, m, k)]
                witness = {"n": n, "m": m, "k": k, "recursive": rec, "brute": brute}
                sub.check(rec == brute, witness)
                if counting.m_count_k_region(n, m, k) is not None:
                    closed = counting.m_count_k_closed(n, m, k)
                    sub.check(closed == brute, dict(witness, closed=closed))
    report.add(sub)

    sub = VerificationReport("sum over k of M_{n,k}(m) = M_n(m)", {})
    for n in range(n_max + 1):
        for m in range(n, m_max + 1):
            total = sum(counting.m_count_k_recursive(n, m, k) for k in range(m + 1))
            sub.check(total == counting.m_count_recursive(n, m), {"n": n, "m": m, "sum": total})
    report.add(sub)

    union = VerificationReport("|T| = sum of M_{n-i,k}(m+i) = binomial count = brute force", {})
    diff = VerificationReport("M_{n,k}(m) = |T(m-k)| - |T(m-k+1)|", {})
    period = VerificationReport("M_{n,k}(m) = M_{n-1,k+2}(m+1) for m > k+1, m > n > 0", {})
    bounds = VerificationReport("bounce counts lie within the bounce bounds", {})
    for length, t in by_length.items():
        at_least: Counter = Counter()
        for (n, m, k, bounce_count), count in t.items():
            for s in range(1, bounce_count + 1):
                at_least[(k, s)] += count
            bb = counting.bounce_bounds(length, k)
            bounds.check(bounce_count in bb, {"length": length, "k": k, "bounces": bounce_count, "bounds": [bb.lo, bb.hi]})
        for k in range(length + 1):
            for m in range(k + 1, length + 1):
                n = length - m
                if not m > n:
                    continue
                closed = counting.t_count(length, m - k, k)
                summed = sum(counting.m_count_k_recursive(n - i, m + i, k) for i in range(n + 1))
                brute = at_least[(k, m - k)]
                union.check(closed == summed == brute, {"length": length, "m": m, "k": k, "closed": closed, "sum": summed, "brute": brute})
                upper = counting.t_count(length, m - k + 1, k)
                value = counting.m_count_k_recursive(n, m, k)
                diff.check(value == closed - upper, {"n": n, "m": m, "k": k, "value": value, "difference": closed - upper})
                if m > k + 1 and m > n > 0:
                    a, b = by_nmk[(n, m, k)], by_nmk[(n - 1, m + 1, k + 2)]
                    period.check(a == b, {"n": n, "m": m, "k": k, "left": a, "right": b})
    for sub in (union, diff, period, bounds):
        report.add(sub)
    return report


# ---------------------------------------------------------------- bijections


def verify_phi(max_length: int) -> VerificationReport:
    rep = VerificationReport("phi is a bijection with max(phi(b)) = r(b)", {"max_length": max_length})
    for length in range(max_length + 1):
        images = set()
        by_max: Counter = Counter()
        for value in range(2**length):
            seq = ArrivalSequence.from_int(value, length)
            result = simulate(seq)
            coins = bijections.phi(seq)
            images.add(coins.flips)
            top = bijections.max_heads_tails(coins)
            by_max[top] += 1
            rep.check(top == result.r, {"b": str(seq), "c": str(coins), "r": result.r})
            rep.check(bijections.phi_inverse(coins) == seq, {"b": str(seq), "c": str(coins)})
            rep.check(bijections.parity_from_coins(coins) == result.parity.bits, {"b": str(seq), "parity": str(result.parity)})
        rep.check(len(images) == 2**length, {"length": length, "distinct_images": len(images)})
        for m in range((length + 1) // 2, length + 1):
            rep.check(by_max[m] == counting.m_count_closed(length - m, m), {"length": length, "max": m, "coins": by_max[m]})
    return rep


def verify_psi(max_length: int) -> VerificationReport:
    rep = VerificationReport("psi maps T(m+n, m-k, k) bijectively onto B(m+n, n-(m-k)+1)", {"max_length": max_length})
    for length in range(1, max_length + 1):
        table = list(enumerate_sequences(length))
        for k in range(length + 1):
            for m in range(k + 1, length + 1):
                n = length - m
                if not m > n:
                    continue
                s = m - k
                domain = [seq for seq, res in table if seq.zeros == k and res.bounces >= s]
                target_zeros = n - s + 1
                codomain = {seq for seq, _ in table if seq.zeros == target_zeros}
                images = [bijections.psi(seq, s) for seq in domain]
                witness = {"length": length, "m": m, "k": k, "domain": len(domain), "codomain": len(codomain)}
                rep.check(len(set(images)) == len(domain) and set(images) == codomain, witness)
                for seq, img in zip(domain, images):
                    rep.check(img.zeros == target_zeros, {"b": str(seq), "image": str(img)})
                    rep.check(bijections.psi_inverse(img, s) == seq, {"b": str(seq), "image": str(img)})
    return rep


def verify_step(max_length: int) -> VerificationReport:
    rep = VerificationReport("step map is a bijection W(n,m,k) -> W(n-1,m+1,k+2)", {"max_length": max_length})
    for length in range(1, max_length + 1):
        groups: dict[tuple[int, int, int], list[ArrivalSequence]] = {}
        for value in range(2**length):
            seq = ArrivalSequence.from_int(value, length)
            n, m = simulate(seq).endpoint
            groups.setdefault((n, m, seq.zeros), []).append(seq)
        for (n, m, k), members in groups.items():
            if not (m > k + 1 and m > n > 0):
                continue
            target = set(groups.get((n - 1, m + 1, k + 2), []))
            images = [bijections.step_map(seq) for seq in members]
            rep.check(set(images) == target and len(set(images)) == len(members), {"n": n, "m": m, "k": k})
            for seq, img in zip(members, images):
                rep.check(bijections.step_map_inverse(img) == seq, {"b": str(seq), "image": str(img)})
    return rep


def verify_trail_partition(lengths: Iterable[int]) -> VerificationReport:
    """Longest trails are valid and the single-red rho images partition their edges."""
    lengths = list(lengths)
    rep = VerificationReport("rho images partition the longest-trail edge set", {"lengths": lengths})
    for length in lengths:
        trail = trails.longest_trail(length)
        edges = trail.edges
        rep.check(trail.is_valid() and len(edges) == trails.longest_trail_length(length), {"length": length, "trail": len(edges)})
        expected_odd = {length - 1, length} if length % 2 == 0 else set()
        rep.check(trails.odd_degree_vertices(edges) == expected_odd, {"length": length})
        rep.check(trails.trail_to_snake(trail).is_valid(length), {"length": length, "snake": "invalid"})
        seen: list = []
        for seq in trails.single_red_sequences(length):
            image = trails.rho_image(seq)
            rep.check(len(image) == simulate(seq).r, {"b": str(seq), "image": sorted(image)})
            p = seq.bits.index(0) + 1
            for edge in image:
                c, q = trails.rho_inverse(edge, length)
                rep.check(q == p and trails.rho(c, q, length) == edge, {"length": length, "edge": tuple(edge)})
            seen.extend(image)
        rep.check(len(seen) == len(set(seen)) and set(seen) == set(edges), {"length": length, "union": len(set(seen)), "trail": len(edges)})
        rep.check(len(seen) == expectation.right_lane_sum_k(length, 1), {"length": length})
    return rep


def verify_classes(max_length: int) -> VerificationReport:
    rep = VerificationReport("color-blind classes have size 2^t and partition B_l", {"max_length": max_length})
    for length in range(1, max_length + 1):
        parts = classes.partition(length)
        rep.check(sum(c.size for c in parts) == 2**length, {"length": length})
        for cls in parts:
            rep.check(cls.size == 2 ** len(cls.touch_vector) and cls.size % 2 == 0, {"class": str(cls.representative), "size": cls.size})
            built = classes.class_of(cls.representative)
            rep.check(built.members == cls.members, {"class": str(cls.representative)})
    return rep


def verify_bijections(
    max_length: int,
    psi_max: int = 12,
    trail_max: int = 14,
    class_max: int = 14,
    cap: int = DEFAULT_CAP,
) -> VerificationReport:
    _check_cap(max_length, cap)
    report = VerificationReport("bijections", {"max_length": max_length})
    report.add(verify_phi(max_length))
    report.add(verify_psi(min(max_length, psi_max)))
    report.add(verify_step(min(max_length, psi_max)))
    report.add(verify_trail_partition(range(1, min(max_length, trail_max) + 1)))
    report.add(verify_classes(min(max_length, class_max)))
    return report


# ---------------------------------------------------------------- sampling


@dataclass(frozen=True)
class MonteCarloEstimate:
    length: int
    samples: int
    seed: int
    mean: float
    stderr: float

    def within(self, exact: Fraction | float, n_se: float = 3.0) -> bool:
        return abs(self.mean - float(exact)) <= n_se * self.stderr

    def to_dict(self) -> dict:
        return {
            "length": self.length,
            "samples": self.samples,
            "seed": self.seed,
            "mean": self.mean,
            "stderr": None if math.isnan(self.stderr) else self.stderr,
        }


def monte_carlo_expected(length: int, samples: int, seed: int) -> MonteCarloEstimate:
    """Estimate the mean right-lane length from uniformly random sequences."""
    if samples < 1:
        raise DomainError(f"samples must be at least 1, got {samples}")
    if length < 0:
        raise DomainError(f"length must be nonnegative, got {length}")
    rng = np.random.default_rng(seed)
    bits = rng.integers(0, 2, size=(samples, length), dtype=np.int8)
    left = np.zeros(samples, dtype=np.int64)
    right = np.zeros(samples, dtype=np.int64)
    for i in range(length):
        go_left = (bits[:, i] == 1) & (left < right)
        left += go_left
        right += ~go_left
    mean = float(right.mean()) if samples else 0.0
    stderr = float(right.std(ddof=1) / math.sqrt(samples)) if samples > 1 else math.nan
    return MonteCarloEstimate(length, samples, seed, mean, stderr)


def verify_monte_carlo(lengths=(50, 200), samples: int = 100_000, seed: int = 20240601) -> VerificationReport:
    rep = VerificationReport("Monte Carlo mean within 3 standard errors of E[l]", {"lengths": list(lengths), "samples": samples, "seed": seed})
    for length in lengths:
        est = monte_carlo_expected(length, samples, seed)
        exact = expectation.expected_length(length)
        rep.check(est.within(exact), dict(est.to_dict(), exact=float(exact)))
    return rep


def verify_all(
    max_length: int = 14,
    workers: int = 1,
    samples: int = 100_000,
    seed: int = 20240601,
    progress: Callable[[str], None] | None = None,
) -> list[VerificationReport]:
    """Run the whole suite; ``max_length`` bounds every exhaustive check."""
    reports = []

    def run(name: str, fn: Callable[[], VerificationReport]) -> None:
        if progress:
            progress(name)
        reports.append(fn())

    half = max_length // 2
    run("counts", lambda: verify_counts(half, max_length - half, max_length, workers))

    def sums() -> VerificationReport:
        rep = VerificationReport("lane sums R(B_l) and R(l,k) equal enumeration", {"max_length": max_length})
        for length in range(max_length + 1):
            total, per_k = brute_lane_sums(length, workers)
            rep.check(total == expectation.right_lane_sum(length), {"length": length, "brute": total})
            for k, value in enumerate(per_k):
                rep.check(value == expectation.right_lane_sum_k(length, k), {"length": length, "k": k, "brute": value})
        return rep

    run("lane sums", sums)
    run("bijections", lambda: verify_bijections(max_length))
    if samples:
        run("monte carlo", lambda: verify_monte_carlo(samples=samples, seed=seed))
    return reports
