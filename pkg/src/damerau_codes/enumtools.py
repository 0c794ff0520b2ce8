"""Shared helpers for enumerating syndrome-defined codebooks."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Sequence

from .bitseq import Word

SINGLE_ENUMERATION_CAP = 22
SWEEP_CAP = 14


def check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ValueError(f"length {n} exceeds enumeration cap {cap}")


def weighted_syndrome(x: Word, weights: Sequence[int], modulus: int) -> int:
    """sum(weights[i] * x_{i+1}) mod modulus; weights[i] belongs to position i+1."""
    return sum(w for w, c in zip(weights, x) if c == "1") % modulus


def words_with_syndrome(
    n: int,
    weights: Sequence[int],
    modulus: int,
    target: int,
    parity: int | None = None,
) -> list[Word]:
    """Sorted words x of length n with weighted syndrome ``target`` mod modulus.

    ``parity`` additionally constrains the Hamming weight mod 2.  Uses a
    meet-in-the-middle split for n >= 18 so single enumerations stay usable
    up to the n = 22 cap.
    """
    if len(weights) < n:
        raise ValueError("weight vector shorter than word length")
    if n < 18:
        out = []
        for v in range(1 << n):
            s = 0
            w = 0
            rem = v
            i = n - 1
            while rem:
                if rem & 1:
                    s += weights[i]
                    w += 1
                rem >>= 1
                i -= 1
            if s % modulus != target:
                continue
            if parity is not None and w & 1 != parity:
                continue
            out.append(format(v, f"0{n}b"))
        return out

    half = n // 2
    lo_bits = n - half
    # key: (syndrome mod modulus, weight mod 2) of the low part
    lows: dict[tuple[int, int], list[int]] = defaultdict(list)
    for v in range(1 << lo_bits):
        s = 0
        w = 0
        rem = v
        i = n - 1
        while rem:
            if rem & 1:
                s += weights[i]
                w += 1
            rem >>= 1
            i -= 1
        lows[(s % modulus, w & 1)].append(v)
    out = []
    for hv in range(1 << half):
        s = 0
        w = 0
        rem = hv
        i = half - 1
        while rem:
            if rem & 1:
                s += weights[i]
                w += 1
            rem >>= 1
            i -= 1
        need_s = (target - s) % modulus
        for p in (0, 1) if parity is None else ((parity ^ (w & 1)),):
            for lv in lows.get((need_s, p), ()):
                out.append(format((hv << lo_bits) | lv, f"0{n}b"))
    out.sort()
    return out
