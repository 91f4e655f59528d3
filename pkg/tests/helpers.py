"""Shared generators and independent oracles for the test suite.

The oracles here work directly on cell sets and diagram surgery so they
share no code with the bead-position implementation they check.
"""

from __future__ import annotations

from functools import lru_cache


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of n as weakly decreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_up_to(n: int):
    """All partitions of size 0..n."""
    for total in range(n + 1):
        yield from partitions_of(total)


def partitions_in_box(max_len: int, max_part: int):
    """All partitions with at most max_len parts, each at most max_part."""
    def rec(remaining_rows, cap, prefix):
        yield tuple(prefix)
        if remaining_rows == 0:
            return
        for p in range(cap, 0, -1):
            prefix.append(p)
            yield from rec(remaining_rows - 1, p, prefix)
            prefix.pop()

    yield from rec(max_len, max_part, [])


def subpartitions(lam: tuple[int, ...]):
    """All partitions contained in lam."""
    if not lam:
        yield ()
        return

    def rec(i, prev, acc):
        if i == len(lam):
            yield tuple(acc)
            return
        for p in range(min(lam[i], prev), -1, -1):
            acc.append(p)
            yield from rec(i + 1, p, acc)
            acc.pop()

    for mu in rec(0, lam[0], []):
        # canonical form: strip trailing zeros
        k = len(mu)
        while k and mu[k - 1] == 0:
            k -= 1
        yield mu[:k]


def subpartitions_mod(lam: tuple[int, ...], m: int):
    """Partitions mu inside lam with every lam_i - mu_i divisible by m."""
    for mu in subpartitions(lam):
        padded = mu + (0,) * (len(lam) - len(mu))
        if all((a - b) % m == 0 for a, b in zip(lam, padded)):
            yield mu


def compositions_with_parts(max_rows: int, allowed_parts):
    """All nonempty compositions with 1..max_rows rows, parts from the pool."""
    allowed = tuple(allowed_parts)
    def rec(rows, prefix):
        if prefix:
            yield tuple(prefix)
        if rows == 0:
            return
        for p in allowed:
            prefix.append(p)
            yield from rec(rows - 1, prefix)
            prefix.pop()

    yield from rec(max_rows, [])


def cells_of(lam: tuple[int, ...], mu: tuple[int, ...]) -> set[tuple[int, int]]:
    """1-based cells of the skew diagram lam/mu."""
    padded = mu + (0,) * (len(lam) - len(mu))
    return {
        (i + 1, j)
        for i, (a, b) in enumerate(zip(lam, padded))
        for j in range(b + 1, a + 1)
    }


def is_border_strip_cells(cells: set[tuple[int, int]]) -> bool:
    """Edge-connected, nonempty, and free of 2x2 blocks."""
    if not cells:
        return False
    for (i, j) in cells:
        if {(i, j + 1), (i + 1, j), (i + 1, j + 1)} <= cells:
            return False
    seen = set()
    stack = [next(iter(cells))]
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        i, j = c
        stack.extend(
            nb
            for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1))
            if nb in cells and nb not in seen
        )
    return len(seen) == len(cells)


def diagram_strip_removals(lam: tuple[int, ...], d: int):
    """All (new_partition, height) from deleting a size-d border strip.

    Pure diagram surgery: tries every partition nu inside lam with d fewer
    cells and keeps those whose difference is a border strip; the height
    is one less than the number of rows the strip touches.
    """
    results = []
    for nu in subpartitions(lam):
        if sum(lam) - sum(nu) != d:
            continue
        diff = cells_of(lam, nu)
        if is_border_strip_cells(diff):
            rows = {i for i, _ in diff}
            results.append((nu, len(rows) - 1))
    return results


def diagram_core(lam: tuple[int, ...], d: int) -> tuple[int, ...]:
    """Remove size-d strips until none can be removed."""
    current = lam
    while True:
        removals = diagram_strip_removals(current, d)
        if not removals:
            return current
        current = removals[0][0]


def diagram_peel_exists(lam: tuple[int, ...], mu: tuple[int, ...], d: int) -> bool:
    """Whether repeated size-d strip removal can take lam down to mu."""
    mu_cells = cells_of(mu, ())

    @lru_cache(maxsize=None)
    def reach(current: tuple[int, ...]) -> bool:
        if current == mu:
            return True
        if sum(current) <= sum(mu):
            return False
        return any(
            mu_cells <= cells_of(nu, ()) and reach(nu)
            for nu, _ in diagram_strip_removals(current, d)
        )

    if not (mu_cells <= cells_of(lam, ())):
        return False
    result = reach(lam)
    reach.cache_clear()
    return result


def diagram_signed_char(lam, mu, sizes) -> int:
    """Signed strip-removal count by diagram surgery.

    Removes border strips of the given sizes, last entry first, never
    uncovering the target; each complete removal contributes the parity
    of its summed heights.
    """
    mu_cells = cells_of(mu, ())

    def rec(current, idx):
        if idx < 0:
            return 1 if current == mu else 0
        total = 0
        for nu, height in diagram_strip_removals(current, sizes[idx]):
            if mu_cells <= cells_of(nu, ()):
                sub = rec(nu, idx - 1)
                total += sub if height % 2 == 0 else -sub
        return total

    if not (mu_cells <= cells_of(lam, ())):
        return 0
    return rec(lam, len(sizes) - 1)


def compositions_of(n: int, max_parts: int | None = None):
    """All compositions of n (ordered tuples of positive parts)."""
    if max_parts is None:
        max_parts = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first, max_parts - 1):
            yield (first,) + rest


def complex_root_value(coeffs, m: int, j: int) -> complex:
    """Floating-point evaluation at exp(2 pi i j / m), for cross-checks."""
    import cmath

    w = cmath.exp(2j * cmath.pi * j / m)
    total = 0j
    for e, c in enumerate(coeffs):
        total += c * w**e
    return total
