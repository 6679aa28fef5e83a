"""Binary prefix codes: exact Kraft sums, code tries, canonical construction
from lengths and the depth-parity red/blue coloring of code trees.

Codewords are strings over ``"0"`` and ``"1"``. Bit 0 is the upper branch of
a node and bit 1 the lower one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from tricolor.errors import (
    DomainError,
    DuplicateWord,
    KraftViolation,
    PrefixViolation,
    format_rational,
)

__all__ = [
    "CodeTree",
    "Node",
    "NodeColor",
    "LeafInfo",
    "RepetitionReport",
    "build_tree",
    "check_word",
    "depth_two_coloring",
    "find_prefix_pair",
    "format_rational",
    "is_prefix_free",
    "kraft_construct",
    "kraft_sum",
    "leaf_color_repetition",
]


class NodeColor(enum.Enum):
    RED = "red"
    BLUE = "blue"


def check_word(word: str) -> str:
    if not isinstance(word, str) or not word or set(word) - {"0", "1"}:
        raise DomainError(f"codeword must be a non-empty string of 0/1, got {word!r}")
    return word


def kraft_sum(lengths: Iterable[int], radix: int = 2) -> Fraction:
    """Exact value of ``sum(radix ** -l for l in lengths)``."""
    if radix < 2:
        raise DomainError(f"radix must be >= 2, got {radix}")
    total = Fraction(0)
    for length in lengths:
        if length < 1:
            raise DomainError(f"codeword lengths must be positive, got {length}")
        total += Fraction(1, radix**length)
    return total


def find_prefix_pair(words: Iterable[str]) -> Optional[tuple[str, str]]:
    """First ``(a, b)`` with ``a`` a prefix of ``b`` (or equal), else None.

    After lexicographic sorting, any word that has ``a`` as a prefix sorts
    directly after ``a``, so only neighbours need comparing.
    """
    ordered = sorted(check_word(w) for w in words)
    for a, b in zip(ordered, ordered[1:]):
        if b.startswith(a):
            return a, b
    return None


def is_prefix_free(words: Iterable[str]) -> bool:
    return find_prefix_pair(words) is None


@dataclass(eq=False)
class Node:
    path: str
    children: dict[str, "Node"] = field(default_factory=dict)
    word: Optional[str] = None

    @property
    def depth(self) -> int:
        return len(self.path)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def paper_name(self) -> str:
        # Root is n0; every other node appends its bit path.
        return "n0" + self.path


@dataclass(eq=False)
class CodeTree:
    root: Node
    words: tuple[str, ...]

    def nodes(self) -> Iterator[Node]:
        """Pre-order walk, upper (0) branch before lower (1)."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            for bit in ("1", "0"):
                if bit in node.children:
                    stack.append(node.children[bit])

    def leaves(self) -> list[Node]:
        return [n for n in self.nodes() if n.word is not None]

    def __len__(self) -> int:
        return sum(1 for _ in self.nodes())

    def find(self, path: str) -> Node:
        node = self.root
        for bit in path:
            node = node.children[bit]
        return node


def build_tree(words: Iterable[str]) -> CodeTree:
    """Minimal trie whose labeled leaves are exactly ``words``."""
    words = [check_word(w) for w in words]
    seen = set()
    for w in words:
        if w in seen:
            raise DuplicateWord(w)
        seen.add(w)
    pair = find_prefix_pair(words)
    if pair is not None:
        raise PrefixViolation(*pair)

    root = Node("")
    for w in words:
        node = root
        for i, bit in enumerate(w):
            if bit not in node.children:
                node.children[bit] = Node(w[: i + 1])
            node = node.children[bit]
        node.word = w
    return CodeTree(root, tuple(words))


def kraft_construct(lengths: Sequence[int]) -> list[str]:
    """Canonical prefix code with the given lengths.

    Lengths are processed shortest first (ties by position); each word is the
    running Kraft sum of the words before it, written in binary to its own
    length. ``result[i]`` has length ``lengths[i]``.
    """
    lengths = list(lengths)
    total = kraft_sum(lengths)
    if total > 1:
        raise KraftViolation(total)
    out: list[str] = [""] * len(lengths)
    running = Fraction(0)
    for i in sorted(range(len(lengths)), key=lambda i: (lengths[i], i)):
        length = lengths[i]
        value = running * 2**length
        # running is a multiple of 2**-length here because lengths only grow
        assert value.denominator == 1
        out[i] = format(value.numerator, f"0{length}b")
        running += Fraction(1, 2**length)
    return out


def depth_two_coloring(t: CodeTree) -> dict[str, NodeColor]:
    """Red on even depths (the root included), blue on odd depths.

    Keys are node bit paths; the root is ``""``.
    """
    return {
        n.path: NodeColor.RED if n.depth % 2 == 0 else NodeColor.BLUE for n in t.nodes()
    }


@dataclass(frozen=True)
class LeafInfo:
    word: str
    depth: int
    color: NodeColor


@dataclass(frozen=True)
class RepetitionReport:
    leaves: tuple[LeafInfo, ...]
    same_parity_same_color: bool


def leaf_color_repetition(
    t: CodeTree, colors: Optional[Mapping[str, NodeColor]] = None
) -> RepetitionReport:
    """Depth and color of each codeword leaf, in the tree's word order, and
    whether leaves at depths of equal parity always share a color."""
    if colors is None:
        colors = depth_two_coloring(t)
    infos = tuple(LeafInfo(w, len(w), colors[w]) for w in t.words)
    by_parity: dict[int, set[NodeColor]] = {}
    for info in infos:
        by_parity.setdefault(info.depth % 2, set()).add(info.color)
    return RepetitionReport(infos, all(len(s) == 1 for s in by_parity.values()))
