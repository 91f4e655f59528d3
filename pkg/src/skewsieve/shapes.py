"""Partitions, skew shapes and compositions.

Everything downstream (abacus displays, Jacobi-Trudi matrices, tableau
enumeration) consumes the types defined here.  All values are immutable
after construction and safe to share between threads.

Text formats: a partition is written as comma-separated parts, e.g.
``"9,9,6,6,6,4,1"``; the empty partition is ``""`` or ``"0"``.  A skew
shape is ``"OUTER/INNER"``, e.g. ``"9,9,6,6,6,4,1/2,1,1,1"``.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def _canonical(parts: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    for i, p in enumerate(parts):
        if p < 0:
            raise ValueError(f"negative part {p} at index {i}")
        if i > 0 and p > parts[i - 1]:
            raise ValueError(f"parts not weakly decreasing at index {i}: {parts}")
    # strip trailing zeros; constructors accept them, equality ignores them
    n = len(parts)
    while n > 0 and parts[n - 1] == 0:
        n -= 1
    return parts[:n]


class Partition:
    """A weakly decreasing tuple of nonnegative integers (a Young diagram).

    Trailing zeros are accepted on input and stripped in the canonical
    form; equality and hashing use the canonical form.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        object.__setattr__(self, "parts", _canonical(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse comma-separated parts; "" and "0" give the empty partition."""
        text = text.strip()
        if text == "" or text == "0":
            return cls()
        parts = []
        pos = 0
        for chunk in text.split(","):
            piece = chunk.strip()
            if not piece or not piece.isdigit():
                raise ValueError(f"invalid partition at position {pos}: {text!r}")
            parts.append(int(piece))
            pos += len(chunk) + 1
        try:
            return cls(parts)
        except ValueError as exc:
            raise ValueError(f"invalid partition {text!r}: {exc}") from exc

    @property
    def length(self) -> int:
        """Number of positive parts."""
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero beyond the length."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= p for i, p in enumerate(other.parts))

    def stretch(self, m: int) -> "Partition":
        """Multiply every part by m (m >= 1)."""
        if m < 1:
            raise ValueError("stretch factor must be >= 1")
        return Partition(m * p for p in self.parts)

    def beta_set(self, r: int) -> tuple[int, ...]:
        """The strictly decreasing sequence (p_1 + r - 1, ..., p_r + 0).

        Encodes the partition as r bead positions; requires r >= length.
        """
        if r < len(self.parts):
            raise ValueError("r too small")
        return tuple(self.part(i) + r - 1 - i for i in range(r))

    def kappa(self) -> int:
        """Sum of (i - 1) * p_i over rows i = 1, 2, ..."""
        return sum(i * p for i, p in enumerate(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"


def partition_from_beta(beta: Iterable[int]) -> Partition:
    """Recover the partition whose beta-set (for r = len(beta)) is given."""
    beta = sorted(beta, reverse=True)
    r = len(beta)
    return Partition(b - (r - 1 - i) for i, b in enumerate(beta))


class Composition:
    """A finite sequence of nonnegative integers, not necessarily sorted."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError("composition parts must be nonnegative")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Composition is immutable")

    @classmethod
    def parse(cls, text: str) -> "Composition":
        text = text.strip()
        if not text:
            return cls()
        return cls(int(p) for p in text.split(","))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Composition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(("Composition", self.parts))

    def __repr__(self) -> str:
        return f"Composition({list(self.parts)})"


class SkewShape:
    """An outer partition with an inner partition contained in it.

    The inner partition is kept zero-padded to the outer length so index
    formulas stay total.  Cells are 1-based (row, column) pairs.
    """

    __slots__ = ("outer", "inner", "inner_padded")

    def __init__(self, outer: Partition, inner: Partition = Partition()):
        if not isinstance(outer, Partition) or not isinstance(inner, Partition):
            raise TypeError("SkewShape expects Partition arguments")
        if not outer.contains(inner):
            raise ValueError(f"{outer} does not contain {inner}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(
            self, "inner_padded", tuple(inner.part(i) for i in range(outer.length))
        )

    def __setattr__(self, name, value):
        raise AttributeError("SkewShape is immutable")

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        """Parse "OUTER/INNER" or plain "OUTER" (straight shape)."""
        if text.count("/") > 1:
            raise ValueError(f"invalid shape at position {text.index('/', text.index('/') + 1)}: {text!r}")
        if "/" in text:
            left, right = text.split("/")
            return cls(Partition.parse(left), Partition.parse(right))
        return cls(Partition.parse(text))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    def row_interval(self, i: int) -> tuple[int, int]:
        """Columns occupied in row i (1-based): inner_i < col <= outer_i."""
        return self.inner_padded[i - 1], self.outer.parts[i - 1]

    def cells(self) -> list[tuple[int, int]]:
        """All cells in row-major order as 1-based (row, column) pairs."""
        out = []
        for i in range(1, self.outer.length + 1):
            lo, hi = self.row_interval(i)
            out.extend((i, j) for j in range(lo + 1, hi + 1))
        return out

    def row_diffs(self) -> tuple[int, ...]:
        return tuple(
            self.outer.parts[i] - self.inner_padded[i] for i in range(self.outer.length)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewShape)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    def __repr__(self) -> str:
        return f"SkewShape({self.outer!r}, {self.inner!r})"

    def __str__(self) -> str:
        if self.inner.length == 0:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


def is_border_strip(shape: SkewShape) -> bool:
    """True iff the cells are edge-connected and contain no 2x2 block.

    The empty shape is not a border strip.
    """
    cells = set(shape.cells())
    if not cells:
        return False
    for (i, j) in cells:
        if (i, j + 1) in cells and (i + 1, j) in cells and (i + 1, j + 1) in cells:
            return False
    # flood fill by shared edges
    seen = set()
    stack = [next(iter(cells))]
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        i, j = c
        for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
            if nb in cells and nb not in seen:
                stack.append(nb)
    return len(seen) == len(cells)


def is_horizontal_strip(shape: SkewShape) -> bool:
    """True iff no column of the diagram holds two cells."""
    outer_conj = shape.outer.conjugate()
    inner_conj = shape.inner.conjugate()
    return all(
        outer_conj.part(j) - inner_conj.part(j) <= 1 for j in range(outer_conj.length)
    )


def border_strip_shape(alpha: Composition | Iterable[int]) -> SkewShape:
    """Build the border strip whose row lengths are the given composition.

    Row i of the result has alpha_i cells and consecutive rows overlap in
    exactly one column, so every composition with all parts >= 1 yields a
    valid connected strip.
    """
    parts = tuple(alpha.parts if isinstance(alpha, Composition) else alpha)
    if not parts:
        return SkewShape(Partition())
    if any(p < 1 for p in parts):
        raise ValueError("border strip rows must have at least one cell")
    l = len(parts)
    outer = [0] * l
    inner = [0] * l
    outer[l - 1] = parts[l - 1]
    for i in range(l - 2, -1, -1):
        inner[i] = outer[i + 1] - 1
        outer[i] = inner[i] + parts[i]
    return SkewShape(Partition(outer), Partition(inner))
