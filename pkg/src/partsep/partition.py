"""Bipartitions of qubit labels and their sub-partition refinements.

Qubits are labelled 1..N (letters A, B, C, ... in string form). A
:class:`Partition` keeps its two sides in the order they were written, so
``B|AC`` and ``AC|B`` are distinct values describing the same cut; the side
written first becomes the first qubit of any reduced 4x4 matrix.
"""

from __future__ import annotations

import itertools
import re
import string
from dataclasses import dataclass

from .errors import BadSyntax, EmptySide, Incomplete, IndexOutOfRange, NOutOfRange, Overlap

_LETTERS = string.ascii_uppercase
_SIDE_RE = re.compile(r"[A-Z]+|\d+(?:,\d+)*")


def _letters(indices) -> str:
    return "".join(_LETTERS[k - 1] for k in indices)


@dataclass(frozen=True)
class Partition:
    n: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        left, right = tuple(sorted(self.left)), tuple(sorted(self.right))
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        if not left or not right:
            raise EmptySide("both sides of a partition must be non-empty")
        for k in left + right:
            if not 1 <= k <= self.n:
                raise IndexOutOfRange(f"qubit index {k} outside 1..{self.n}")
        if len(set(left + right)) != len(left) + len(right):
            raise Overlap(f"sides {left} and {right} overlap")
        if len(left) + len(right) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - set(left + right))
            raise Incomplete(f"qubits {missing} are not assigned to either side")

    @property
    def swapped(self) -> bool:
        """True when qubit 1 sits on the right, i.e. not in canonical orientation."""
        return 1 not in self.left

    def canonical(self) -> "Partition":
        return Partition(self.n, self.right, self.left) if self.swapped else self

    def label(self) -> str:
        if self.n > len(_LETTERS):
            return ",".join(map(str, self.left)) + "|" + ",".join(map(str, self.right))
        return f"{_letters(self.left)}|{_letters(self.right)}"

    def __str__(self) -> str:
        return self.label()


def format_partition(p: Partition) -> str:
    return p.label()


def _parse_side(text: str, n: int) -> tuple[int, ...]:
    if not text:
        raise EmptySide("empty side in partition string")
    if not _SIDE_RE.fullmatch(text):
        raise BadSyntax(f"cannot parse partition side {text!r}")
    if text[0].isalpha():
        if n > len(_LETTERS):
            raise BadSyntax("letter syntax supports at most 26 qubits")
        out = tuple(_LETTERS.index(ch) + 1 for ch in text)
    else:
        out = tuple(int(tok) for tok in text.split(","))
    if len(set(out)) != len(out):
        raise Overlap(f"repeated qubit in {text!r}")
    return out


def parse_partition(text: str, n: int) -> Partition:
    """Parse ``"AC|BD"`` or ``"1,3|2,4"``. Whitespace is not allowed."""
    if n < 1:
        raise NOutOfRange("n must be positive")
    if text.count("|") != 1:
        raise BadSyntax(f"expected exactly one '|' in {text!r}")
    a, b = text.split("|")
    return Partition(n, _parse_side(a, n), _parse_side(b, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All ``2**(n-1) - 1`` canonical bipartitions of ``n`` qubits.

    Ordered by size of the side containing qubit 1, then lexicographically.
    """
    if not 2 <= n <= 10:
        raise NOutOfRange(f"n={n} outside 2..10")
    out = []
    rest = range(2, n + 1)
    for size in range(0, n - 1):
        for extra in itertools.combinations(rest, size):
            left = (1,) + extra
            right = tuple(k for k in rest if k not in extra)
            out.append(Partition(n, left, right))
    return out


@dataclass(frozen=True)
class SubSplit:
    """A refinement ``[(r'),(r'')] || [(s'),(s'')]`` of a partition.

    Qubits in the primed sets carry the selecting bit itself, those in the
    double-primed sets carry its complement. Canonical splits always put the
    smallest qubit of each side in the primed set.
    """

    parent: Partition
    r_prime: tuple[int, ...]
    r_dprime: tuple[int, ...]
    s_prime: tuple[int, ...]
    s_dprime: tuple[int, ...]

    def __post_init__(self):
        p = self.parent
        if tuple(sorted(self.r_prime + self.r_dprime)) != p.left:
            raise ValueError("r' and r'' must partition the left side")
        if tuple(sorted(self.s_prime + self.s_dprime)) != p.right:
            raise ValueError("s' and s'' must partition the right side")

    @property
    def is_canonical(self) -> bool:
        return self.parent.left[0] in self.r_prime and self.parent.right[0] in self.s_prime

    def label(self) -> str:
        def side(a, b):
            return f"[({_letters(a) or '∅'}),{'(' + _letters(b) + ')' if b else '∅'}]"
        return side(self.r_prime, self.r_dprime) + "||" + side(self.s_prime, self.s_dprime)

    def __str__(self) -> str:
        return self.label()


def enumerate_canonical_splits(p: Partition) -> list[SubSplit]:
    """The ``2**(N-2)`` non-repeated refinements of ``p``.

    Order is a binary counter over the non-minimal qubits of the left side
    followed by those of the right side (each in ascending order, most
    significant first); a set bit moves the qubit to the double-primed set.
    """
    free = list(p.left[1:]) + list(p.right[1:])
    splits = []
    for bits in itertools.product((0, 1), repeat=len(free)):
        flipped = {k for k, b in zip(free, bits) if b}
        splits.append(SubSplit(
            p,
            tuple(k for k in p.left if k not in flipped),
            tuple(k for k in p.left if k in flipped),
            tuple(k for k in p.right if k not in flipped),
            tuple(k for k in p.right if k in flipped),
        ))
    return splits
