"""Simultaneous prime values of Phi_15, Phi_20, Phi_24, Phi_30 at prime powers.

The hunt walks prime powers ``q`` with ``q = 0, 1, 4 (mod 5)`` in ascending
order.  A range with no hits means "none found up to qMax" and nothing more.
"""
from __future__ import annotations

import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from pathlib import Path

from .primality import Verdict, is_prime, is_prime_power, primes_up_to

# coefficients from degree 8 down to degree 0
_COEFFS = {
    15: (1, -1, 0, 1, -1, 1, 0, -1, 1),
    20: (1, 0, -1, 0, 1, 0, -1, 0, 1),
    24: (1, 0, 0, 0, -1, 0, 0, 0, 1),
    30: (1, 1, 0, -1, -1, -1, 0, 1, 1),
}
SUPPORTED = tuple(sorted(_COEFFS))
# sparsest polynomial first: cheapest rejection
CHECK_ORDER = (24, 20, 15, 30)
RESIDUES = frozenset({0, 1, 4})


def phi_eval(n: int, q: int) -> int:
    """Exact value of the n-th cyclotomic polynomial at ``q`` for n in {15, 20, 24, 30}."""
    try:
        coeffs = _COEFFS[n]
    except KeyError:
        raise ValueError(f"unsupported cyclotomic index {n}; expected one of {SUPPORTED}") from None
    if q < 0:
        raise ValueError("q must be non-negative")
    acc = 0
    for c in coeffs:
        acc = acc * q + c
    return acc


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs a positive integer")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def phi_mobius(n: int, q: int) -> int:
    """``prod_{d | n} (q^d - 1)^mu(n/d)`` for any ``n >= 1`` and ``q >= 2``."""
    if q < 2:
        raise ValueError("Mobius product form needs q >= 2")
    num, den = 1, 1
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num *= q ** d - 1
        elif mu == -1:
            den *= q ** d - 1
    value, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("Mobius product did not divide exactly")
    return value


@dataclass(frozen=True)
class HuntRecord:
    q: int
    p: int
    e: int
    values: dict[int, int]
    prime_flags: dict[int, Verdict]

    @property
    def simultaneous(self) -> bool:
        return all(bool(self.prime_flags.get(n, Verdict.COMPOSITE)) for n in SUPPORTED)

    def log_line(self) -> str:
        vals = " ".join(str(self.values[n]) for n in SUPPORTED)
        verdicts = ",".join(str(self.prime_flags[n]) for n in SUPPORTED)
        return f"{self.q} {self.p} {self.e} {vals} {verdicts}"

    @classmethod
    def parse(cls, line: str) -> HuntRecord:
        parts = line.split()
        if len(parts) != 8:
            raise ValueError(f"hit log line needs 8 fields: {line!r}")
        q, p, e = (int(x) for x in parts[:3])
        values = {n: int(v) for n, v in zip(SUPPORTED, parts[3:7])}
        flags = {n: Verdict(v) for n, v in zip(SUPPORTED, parts[7].split(","))}
        return cls(q, p, e, values, flags)


def hunt_record(q: int) -> HuntRecord:
    """Evaluate and test all four values at ``q`` (no short-circuit)."""
    pe = is_prime_power(q)
    if pe is None:
        raise ValueError(f"{q} is not a prime power")
    values = {n: phi_eval(n, q) for n in SUPPORTED}
    flags = {n: is_prime(values[n]) for n in SUPPORTED}
    return HuntRecord(q, pe[0], pe[1], values, flags)


def prime_powers(lo: int, hi: int) -> Iterator[tuple[int, int, int]]:
    """``(q, p, e)`` for prime powers ``lo <= q <= hi``, ascending."""
    out = []
    for p in primes_up_to(hi):
        q, e = p, 1
        while q <= hi:
            if q >= lo:
                out.append((q, p, e))
            q *= p
            e += 1
    out.sort()
    return iter(out)


def candidates(lo: int, hi: int) -> Iterator[tuple[int, int, int]]:
    """Prime powers in ``[lo, hi]`` with residue 0, 1 or 4 modulo 5."""
    return ((q, p, e) for q, p, e in prime_powers(lo, hi) if q % 5 in RESIDUES)


@dataclass
class HuntSummary:
    scanned: int = 0
    hits: int = 0
    last_q: int | None = None
    records: list[HuntRecord] = field(default_factory=list)
    rejected_by: dict[int, int] = field(default_factory=lambda: {n: 0 for n in CHECK_ORDER})


def hunt(q_max: int, emit: Callable[[HuntRecord], None] | None = None,
         start_after: int | None = None,
         progress: Callable[[int], None] | None = None) -> HuntSummary:
    """Scan candidates ``start_after < q <= q_max``.

    Each candidate stops at its first composite value (order 24, 20, 15, 30).
    Hits are passed to ``emit`` and collected; misses are only counted.
    ``progress`` is called with each finished ``q``, after any ``emit``.
    """
    if q_max < 2:
        raise ValueError("q_max must be at least 2")
    if start_after is not None and start_after > q_max:
        raise ValueError(f"checkpoint {start_after} is beyond q_max {q_max}")
    lo = 2 if start_after is None else start_after + 1
    summary = HuntSummary(last_q=start_after)
    for q, p, e in candidates(lo, q_max):
        summary.scanned += 1
        values: dict[int, int] = {}
        flags: dict[int, Verdict] = {}
        for n in CHECK_ORDER:
            values[n] = phi_eval(n, q)
            flags[n] = is_prime(values[n])
            if not flags[n]:
                summary.rejected_by[n] += 1
                break
        else:
            rec = HuntRecord(q, p, e, values, flags)
            summary.hits += 1
            summary.records.append(rec)
            if emit is not None:
                emit(rec)
        summary.last_q = q
        if progress is not None:
            progress(q)
    return summary


def read_checkpoint(path: str | Path) -> int | None:
    path = Path(path)
    if not path.exists():
        return None
    text = path.read_text().strip()
    return int(text) if text else None


def write_checkpoint(path: str | Path, q: int) -> None:
    path = Path(path)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(f"{q}\n")
    tmp.replace(path)


def run_hunt(q_max: int, log_path: str | Path, checkpoint_path: str | Path | None = None,
             checkpoint_every: int = 500) -> HuntSummary:
    """Resume from the checkpoint, append hits to the log, update the checkpoint.

    The checkpoint is rewritten every ``checkpoint_every`` candidates and at
    the end; hits are flushed to the log before the checkpoint passes them,
    so an interrupted run can be resumed without losing or repeating lines.
    """
    start = read_checkpoint(checkpoint_path) if checkpoint_path else None
    done = 0

    def progress(q: int) -> None:
        nonlocal done
        done += 1
        if checkpoint_path and done % checkpoint_every == 0:
            write_checkpoint(checkpoint_path, q)

    with open(log_path, "a", encoding="utf-8") as log:
        def emit(rec: HuntRecord) -> None:
            log.write(rec.log_line() + "\n")
            log.flush()
        summary = hunt(q_max, emit, start_after=start, progress=progress)
    if checkpoint_path and summary.last_q is not None:
        write_checkpoint(checkpoint_path, summary.last_q)
    return summary
