"""Binary codes against deletions and adjacent transpositions.

Words are plain '0'/'1' strings (position 1 = leftmost character).  The
subpackages cover word primitives (:mod:`.bitseq`), error-ball generators
(:mod:`.errorball`), the code families (:mod:`.single_edit`, :mod:`.td`,
:mod:`.burst`, :mod:`.block_td`), an exhaustive verification harness
(:mod:`.verify`) and a command-line front end (:mod:`.cli`).
"""

from .errors import DecodeError

__version__ = "0.1.0"

__all__ = ["DecodeError", "__version__"]
