"""Codes correcting one deletion OR one adjacent transposition.

A single weighted syndrome with modulus 6n-3 does both jobs: the weight
vector (1, 2, ..., n-1, 2n-1) yields a single-deletion code, and the same
residue read on the integral side (weights 3, 5, ..., 2n-3, 3n-2, 2n-1)
yields a single-substitution code, so one transposition - which flips exactly
one integral position - is also correctable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitseq import Word, derivative, integral
from .enumtools import SINGLE_ENUMERATION_CAP, check_cap, weighted_syndrome, words_with_syndrome
from .errors import DecodeError


@dataclass(frozen=True)
class SingleEditSpec:
    """One code instance: length n and residue a modulo 6n-3."""

    n: int
    a: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("length must be positive")
        if not 0 <= self.a <= 6 * self.n - 4:
            raise ValueError(f"residue must lie in [0, {6 * self.n - 4}]")

    @property
    def modulus(self) -> int:
        return 6 * self.n - 3

    @property
    def deletion_weights(self) -> tuple[int, ...]:
        n = self.n
        return tuple(range(1, n)) + (2 * n - 1,)

    @property
    def integral_weights(self) -> tuple[int, ...]:
        n = self.n
        if n == 1:
            return (2 * n - 1,)
        return tuple(2 * i + 1 for i in range(1, n - 1)) + (3 * n - 2, 2 * n - 1)


def xd_syndrome(x: Word, n: int) -> int:
    spec = SingleEditSpec(n, 0)
    return weighted_syndrome(x, spec.deletion_weights, spec.modulus)


def xh_syndrome(x: Word, n: int) -> int:
    spec = SingleEditSpec(n, 0)
    return weighted_syndrome(x, spec.integral_weights, spec.modulus)


def xd_contains(x: Word, spec: SingleEditSpec) -> bool:
    """Membership in the deletion-side code."""
    if len(x) != spec.n:
        raise ValueError("length mismatch")
    return xd_syndrome(x, spec.n) == spec.a


def xh_contains(x: Word, spec: SingleEditSpec) -> bool:
    """Membership in the substitution-side (integral) code."""
    if len(x) != spec.n:
        raise ValueError("length mismatch")
    return xh_syndrome(x, spec.n) == spec.a


def enumerate_t_or_d(spec: SingleEditSpec, cap: int = SINGLE_ENUMERATION_CAP) -> list[Word]:
    """All codewords, sorted.  Their integrals automatically satisfy xh_contains."""
    check_cap(spec.n, cap)
    return words_with_syndrome(spec.n, spec.deletion_weights, spec.modulus, spec.a)


def _decode_deletion(z: Word, spec: SingleEditSpec) -> Word:
    candidates = set()
    for k in range(1, spec.n + 1):
        for bit in "01":
            w = z[: k - 1] + bit + z[k - 1 :]
            if xd_syndrome(w, spec.n) == spec.a:
                candidates.add(w)
    if len(candidates) != 1:
        raise DecodeError(
            f"not decodable: {len(candidates)} consistent reinsertions"
        )
    return candidates.pop()


def _decode_transposition(z: Word, spec: SingleEditSpec) -> Word:
    u = list(integral(z))
    diff = (xh_syndrome("".join(u), spec.n) - spec.a) % spec.modulus
    if diff == 0:
        return z
    weights = spec.integral_weights
    for i, h in enumerate(weights):
        if u[i] == "1" and h % spec.modulus == diff:
            u[i] = "0"
            return derivative("".join(u))
        if u[i] == "0" and (-h) % spec.modulus == diff:
            u[i] = "1"
            return derivative("".join(u))
    raise DecodeError("not decodable: no single integral flip matches the syndrome")


def decode_t_or_d(z: Word, spec: SingleEditSpec) -> Word:
    """Recover the codeword from one deletion or one adjacent transposition."""
    if len(z) == spec.n - 1:
        return _decode_deletion(z, spec)
    if len(z) == spec.n:
        return _decode_transposition(z, spec)
    raise DecodeError(f"received length {len(z)}, expected {spec.n} or {spec.n - 1}")
