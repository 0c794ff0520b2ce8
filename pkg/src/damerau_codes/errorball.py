"""Error-ball generators and set-level utilities.

Every generator returns a deduplicated ``frozenset`` of words.  Ball kinds:

======== =============================================================
tag      contents (all "at most" variants include the unedited word)
======== =============================================================
d        at most one single deletion
t        at most one adjacent transposition
t-or-d   union of ``d`` and ``t``
tl       at most ``ell`` adjacent transpositions
tl-d     at most ``ell`` adjacent transpositions, then at most one deletion
d-exact  exactly ``b`` consecutive deletions (excludes the word for b >= 1)
d-atmost a burst of at most ``b`` consecutive deletions
bt       at most one adjacent block transposition of width ``b``
bt-and-d one block deletion and one adjacent block transposition, equal
         sizes t <= b, in either order (plus the unedited word)
======== =============================================================
"""

from __future__ import annotations

import math
import time
from collections.abc import Collection, Iterable
from dataclasses import dataclass

from .bitseq import Word, delete_block, insert, runs, transpose, weight
from .errors import BallSizeError
from .report import VerificationReport

# composition of transposition balls is exponential; guard desk-scale misuse
MAX_BALL_SIZE = 2_000_000

_TAGS_PLAIN = ("d", "t", "t-or-d")
_TAGS_ELL = ("tl", "tl-d")
_TAGS_BLOCK = ("d-exact", "d-atmost", "bt", "bt-and-d")
TAGS = _TAGS_PLAIN + _TAGS_ELL + _TAGS_BLOCK


@dataclass(frozen=True)
class BallKind:
    """Tag plus the parameter the tag requires (``ell`` or ``b``)."""

    tag: str
    ell: int | None = None
    b: int | None = None

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown ball kind {self.tag!r}; know {TAGS}")
        if self.tag in _TAGS_ELL:
            if self.ell is None or self.ell < 0:
                raise ValueError(f"kind {self.tag!r} needs ell >= 0")
            if self.b is not None:
                raise ValueError(f"kind {self.tag!r} takes no b parameter")
        elif self.tag in _TAGS_BLOCK:
            if self.b is None or self.b < 0:
                raise ValueError(f"kind {self.tag!r} needs b >= 0")
            if self.ell is not None:
                raise ValueError(f"kind {self.tag!r} takes no ell parameter")
        elif self.ell is not None or self.b is not None:
            raise ValueError(f"kind {self.tag!r} takes no parameters")

    def __str__(self) -> str:
        if self.tag in _TAGS_ELL:
            return f"{self.tag}({self.ell})"
        if self.tag in _TAGS_BLOCK:
            return f"{self.tag}({self.b})"
        return self.tag


def _deletions(x: Word) -> set[Word]:
    return {x[:i] + x[i + 1 :] for i in range(len(x))}


def _transpositions(x: Word) -> set[Word]:
    return {transpose(x, k) for k in range(1, len(x))}


def _block_deletions(x: Word, b: int) -> set[Word]:
    if b > len(x):
        raise ValueError(f"burst width {b} exceeds word length {len(x)}")
    return {delete_block(x, b, k) for k in range(1, len(x) - b + 2)}


def _block_swaps(x: Word, b: int) -> set[Word]:
    """Words from at most one swap of two adjacent width-b blocks."""
    out = {x}
    for k in range(1, len(x) - 2 * b + 2):
        i = k - 1
        out.add(x[:i] + x[i + b : i + 2 * b] + x[i : i + b] + x[i + 2 * b :])
    return out


def _transposition_closure(start: Iterable[Word], ell: int, cap: int) -> set[Word]:
    seen = set(start)
    frontier = set(seen)
    for _ in range(ell):
        new = set()
        for w in frontier:
            for k in range(1, len(w)):
                if w[k - 1] != w[k]:
                    t = transpose(w, k)
                    if t not in seen:
                        new.add(t)
        seen |= new
        if len(seen) > cap:
            raise BallSizeError(
                f"transposition ball exceeded cap of {cap} words"
            )
        if not new:
            break
        frontier = new
    return seen


def ball(x: Word, kind: BallKind, cap: int = MAX_BALL_SIZE) -> frozenset[Word]:
    """All words reachable from ``x`` under the error budget of ``kind``."""
    if not x:
        raise ValueError("empty word")
    tag = kind.tag
    if tag == "d":
        return frozenset({x} | _deletions(x))
    if tag == "t":
        return frozenset({x} | _transpositions(x))
    if tag == "t-or-d":
        return frozenset({x} | _deletions(x) | _transpositions(x))
    if tag == "tl":
        return frozenset(_transposition_closure([x], kind.ell, cap))
    if tag == "tl-d":
        swapped = _transposition_closure([x], kind.ell, cap)
        out = set(swapped)
        for w in swapped:
            out |= _deletions(w)
        return frozenset(out)
    if tag == "d-exact":
        return frozenset(_block_deletions(x, kind.b))
    if tag == "d-atmost":
        out: set[Word] = set()
        for t in range(kind.b + 1):
            out |= _block_deletions(x, t)
        return frozenset(out)
    if tag == "bt":
        return frozenset(_block_swaps(x, kind.b))
    if tag == "bt-and-d":
        out = {x}
        for t in range(1, kind.b + 1):
            if t > len(x):
                break
            deleted = _block_deletions(x, t)
            for w in deleted:
                out |= _block_swaps(w, t)
            for w in _block_swaps(x, t):
                out |= _block_deletions(w, t)
        return frozenset(out)
    raise AssertionError(f"unhandled tag {tag!r}")


def ball_of_set(words: Collection[Word], kind: BallKind,
                cap: int = MAX_BALL_SIZE) -> frozenset[Word]:
    """Union of ``ball(x, kind)`` over all x in ``words``."""
    if not words:
        raise ValueError("empty set of words")
    out: set[Word] = set()
    for x in words:
        out |= ball(x, kind, cap)
        if len(out) > cap:
            raise BallSizeError(f"ball union exceeded cap of {cap} words")
    return frozenset(out)


def transposition_distance(x: Word, y: Word) -> int | None:
    """Minimum number of adjacent transpositions turning x into y.

    Equals the L1 cost of the order-preserving matching between the two
    one-position sequences; None when the weights differ (unreachable).
    """
    if len(x) != len(y):
        raise ValueError("length mismatch")
    px = [i for i, c in enumerate(x) if c == "1"]
    py = [i for i, c in enumerate(y) if c == "1"]
    if len(px) != len(py):
        return None
    return sum(abs(a - b) for a, b in zip(px, py))


def within_transpositions(x: Word, y: Word, ell: int) -> bool:
    """True iff y is reachable from x with at most ``ell`` transpositions."""
    d = transposition_distance(x, y)
    return d is not None and d <= ell


def pairwise_disjoint(code: Collection[Word], kind: BallKind,
                      code_id: str = "", cap: int = MAX_BALL_SIZE) -> VerificationReport:
    """Check that the ``kind`` balls of all codewords are pairwise disjoint.

    On failure reports the lexicographically smallest witness triple
    (u, v, z) with z in both balls, independent of iteration order.
    """
    start = time.perf_counter()
    codewords = sorted(set(code))
    owner: dict[Word, Word] = {}
    witness: tuple[str, str, str] | None = None
    for u in codewords:
        for z in sorted(ball(u, kind, cap)):
            v = owner.setdefault(z, u)
            if v != u:
                cand = (min(u, v), max(u, v), z)
                if witness is None or cand < witness:
                    witness = cand
    count = len(codewords)
    n = len(codewords[0]) if codewords else 0
    return VerificationReport(
        code_id=code_id or f"codebook(n={n},size={count})",
        kind=str(kind),
        status="pass" if witness is None else "fail",
        witness=witness,
        codeword_count=count,
        measured_redundancy=(n - math.log2(count)) if count else None,
        wall_time_s=time.perf_counter() - start,
    )
