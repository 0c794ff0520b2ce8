"""Primitive operations on binary words.

Words are plain Python strings over {'0', '1'}; position 1 is the leftmost
character, matching the 1-based position convention used by every decoder in
the package.  All functions are pure; none mutates its input.  The text
serialization is the word itself, one word per line, empty line = empty word.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

Word = str


def check_word(w: str) -> Word:
    """Validate that ``w`` is a binary word and return it unchanged."""
    if any(c not in "01" for c in w):
        raise ValueError(f"not a binary word: {w!r}")
    return w


def all_words(n: int) -> Iterable[Word]:
    """Yield all binary words of length ``n`` in lexicographic order."""
    if n < 0:
        raise ValueError("negative length")
    if n == 0:
        yield ""
        return
    for v in range(1 << n):
        yield format(v, f"0{n}b")


def weight(x: Word) -> int:
    """Hamming weight."""
    return x.count("1")


def hamming_distance(x: Word, y: Word) -> int:
    if len(x) != len(y):
        raise ValueError("length mismatch")
    return sum(a != b for a, b in zip(x, y))


def runs(x: Word) -> int:
    """Number of maximal constant substrings."""
    if not x:
        raise ValueError("empty sequence")
    return 1 + sum(1 for a, b in zip(x, x[1:]) if a != b)


def derivative(x: Word) -> Word:
    """Mod-2 difference word: position i holds x_i + x_{i-1} (x_0 = 0)."""
    if not x:
        raise ValueError("empty sequence")
    out = []
    prev = "0"
    for c in x:
        out.append("1" if c != prev else "0")
        prev = c
    return "".join(out)


def integral(x: Word) -> Word:
    """Mod-2 prefix-sum word; two-sided inverse of :func:`derivative`."""
    if not x:
        raise ValueError("empty sequence")
    acc = 0
    out = []
    for c in x:
        acc ^= c == "1"
        out.append("01"[acc])
    return "".join(out)


def insert(y: Word, v: Word, k: int) -> Word:
    """Insert ``v`` into ``y`` so it occupies positions k .. k+len(v)-1."""
    if not 1 <= k <= len(y) + 1:
        raise ValueError(f"insert position {k} out of range for length {len(y)}")
    return y[: k - 1] + v + y[k - 1 :]


def delete_block(y: Word, b: int, k: int) -> Word:
    """Delete ``b`` consecutive symbols of ``y`` starting at position ``k``."""
    if b < 0:
        raise ValueError("negative block length")
    if not 1 <= k <= len(y) - b + 1:
        raise ValueError(
            f"cannot delete {b} symbols at position {k} of a length-{len(y)} word"
        )
    return y[: k - 1] + y[k - 1 + b :]


def transpose(x: Word, k: int) -> Word:
    """Swap the symbols at positions k and k+1."""
    if not 1 <= k <= len(x) - 1:
        raise ValueError(f"transposition position {k} out of range")
    return x[: k - 1] + x[k] + x[k - 1] + x[k + 1 :]


def interleave(x: Word, f: int, b: int) -> Word:
    """The f-th of b interleaved subwords: positions f, f+b, f+2b, ..."""
    if not 1 <= f <= b:
        raise ValueError("interleave index must satisfy 1 <= f <= b")
    if b > len(x):
        raise ValueError("interleave width exceeds word length")
    return x[f - 1 :: b]


def interleave_length(n: int, f: int, b: int) -> int:
    """Length of interleave(x, f, b) for len(x) == n."""
    return (n - f) // b + 1 if n >= f else 0


def merge_interleaves(rows: Sequence[Word]) -> Word:
    """Reassemble a word from its b interleaves (rows[f-1] = interleave f)."""
    b = len(rows)
    if b == 0:
        raise ValueError("no rows to merge")
    n = sum(len(r) for r in rows)
    if [len(r) for r in rows] != [interleave_length(n, f, b) for f in range(1, b + 1)]:
        raise ValueError("row lengths inconsistent with an interleaved word")
    return "".join(rows[i % b][i // b] for i in range(n))


def is_repeating_pattern(v: Word, b: int) -> bool:
    """True iff ``v`` repeats its length-b prefix (last window may be partial)."""
    if not v:
        raise ValueError("empty sequence")
    if b < 1:
        raise ValueError("pattern width must be positive")
    return all(v[i] == v[i - b] for i in range(b, len(v)))
