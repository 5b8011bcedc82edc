"""Partition enumeration, Durfee statistics, and brute-force counts.

A partition is represented as a tuple of weakly decreasing positive ints;
the empty tuple is the unique partition of 0.  The Durfee square of a
partition is the largest k with parts[j-1] >= k for j = 1..k; the Durfee
triangle is the largest k with parts[j-1] >= k-j+1 for j = 1..k (a
staircase with rows k, k-1, ..., 1 fitting against the top-left corner of
the Ferrers board).

Everything here is a deliberately naive enumeration.  These functions are
the independent ground truth that the generating-function machinery is
checked against, so they must stay simple; none of them is a production
counting path.  Enumeration is hard-capped at n = 60.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

Partition = Tuple[int, ...]

#: Enumeration refuses larger n: p(n) grows too fast for a brute-force oracle.
MAX_ENUMERATION_N = 60


def triangular(k: int) -> int:
    """k-th triangular number k(k+1)/2, the box count of a size-k triangle."""
    if k < 0:
        raise ValueError("triangular numbers are indexed by nonnegative integers")
    return k * (k + 1) // 2


def check_partition(parts: Sequence[int]) -> Partition:
    """Validate weak decrease and positivity; return the canonical tuple."""
    p = tuple(parts)
    for i, a in enumerate(p):
        if a < 1:
            raise ValueError(f"parts must be positive, got {a}")
        if i > 0 and p[i - 1] < a:
            raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, lexicographically decreasing.

    The order starts at (n,) and ends at (1,)*n; for n = 0 the single empty
    partition is yielded.
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if n > MAX_ENUMERATION_N:
        raise ValueError(
            f"enumeration capped at n <= {MAX_ENUMERATION_N} (p(n) grows too fast); got {n}"
        )

    def gen(remaining: int, max_part: int, prefix: list) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            yield from gen(remaining - part, part, prefix)
            prefix.pop()

    yield from gen(n, n if n else 1, [])


def durfee_square_size(parts: Sequence[int]) -> int:
    """Largest k such that the first k parts are all >= k."""
    k = 0
    for j, a in enumerate(parts, start=1):
        if a >= j:
            k = j
        else:
            break
    return k


def durfee_triangle_size(parts: Sequence[int]) -> int:
    """Largest k such that parts[j-1] >= k-j+1 for every j = 1..k.

    The condition for a given k is min over j <= k of parts[j-1]+j-1 >= k,
    and that prefix minimum is non-increasing, so a single sweep suffices.
    """
    best = 0
    slack = None
    for j, a in enumerate(parts, start=1):
        slack = a + j - 1 if slack is None else min(slack, a + j - 1)
        if slack >= j:
            best = j
    return best


def conjugate(parts: Sequence[int]) -> Partition:
    """Column counts of the Ferrers board."""
    if not parts:
        return ()
    out = [0] * parts[0]
    for a in parts:
        for c in range(a):
            out[c] += 1
    return tuple(out)


@dataclass(frozen=True)
class TriangleDecomposition:
    """Split of a partition into its Durfee triangle plus row/column excess.

    ``d`` counts the initial rows strictly longer than the triangle;
    ``row_excess[j-1]`` (>= 1) is how far row j sticks out past the triangle
    and ``col_excess[j-1]`` (>= 0, exactly k-d entries) how far column j
    sticks out below it.  The total size is T_k + sum(row) + sum(col).
    """

    k: int
    d: int
    row_excess: Tuple[int, ...]
    col_excess: Tuple[int, ...]

    def size(self) -> int:
        return triangular(self.k) + sum(self.row_excess) + sum(self.col_excess)

    def reconstruct(self) -> Partition:
        """Rebuild the partition box by box; inverse of decompose_by_triangle."""
        boxes = set()
        for r in range(1, self.k + 1):
            for c in range(1, self.k - r + 2):
                boxes.add((r, c))
        for j, m in enumerate(self.row_excess, start=1):
            for c in range(self.k - j + 2, self.k - j + 1 + m + 1):
                boxes.add((j, c))
        for j, x in enumerate(self.col_excess, start=1):
            for r in range(self.k - j + 2, self.k - j + 1 + x + 1):
                boxes.add((r, j))
        rows = {}
        for r, _ in boxes:
            rows[r] = rows.get(r, 0) + 1
        return tuple(rows[r] for r in sorted(rows))


def decompose_by_triangle(parts: Sequence[int]) -> TriangleDecomposition:
    """Decompose a partition along its Durfee triangle.

    With k the triangle size, d is maximal with parts[j-1] > k-j+1 for all
    j <= d; row excesses are m_j = parts[j-1]-(k-j+1) for j <= d and column
    excesses n_j = conj[j-1]-(k-j+1) for j <= k-d.  The empty partition
    yields k = 0 with empty excess lists.
    """
    p = check_partition(parts)
    k = durfee_triangle_size(p)
    if k == 0:
        return TriangleDecomposition(0, 0, (), ())
    d = 0
    while d < k and p[d] > k - d:
        d += 1
    conj = conjugate(p)
    row = tuple(p[j - 1] - (k - j + 1) for j in range(1, d + 1))
    col = tuple(conj[j - 1] - (k - j + 1) for j in range(1, k - d + 1))
    return TriangleDecomposition(k, d, row, col)


def count_rk_bruteforce(k: int, n: int) -> int:
    """Number of partitions of n with Durfee triangle of size exactly k."""
    if k < 1:
        raise ValueError("triangle size must be positive")
    return sum(1 for p in enumerate_partitions(n) if durfee_triangle_size(p) == k)


def count_dk_bruteforce(k: int, n: int) -> int:
    """Number of partitions of n with Durfee square of size exactly k."""
    if k < 1:
        raise ValueError("square size must be positive")
    return sum(1 for p in enumerate_partitions(n) if durfee_square_size(p) == k)


def count_ad_bruteforce(d: int, n: int) -> int:
    """Weak compositions of n into d parts, each part at most predecessor+1.

    Plain recursive enumeration over (k_1, ..., k_d); independent of the
    dynamic-programming series path it serves as an oracle for.
    """
    if d < 1:
        raise ValueError("number of parts must be positive")
    if n < 0:
        return 0

    def count(pos: int, prev: int, remaining: int) -> int:
        if pos == d:
            return 1 if remaining == 0 else 0
        hi = remaining if pos == 0 else min(prev + 1, remaining)
        return sum(count(pos + 1, v, remaining - v) for v in range(hi + 1))

    return count(0, 0, n)


def count_pd_bruteforce(d: int, n: int) -> int:
    """Number of partitions of n into at most d parts, by enumeration."""
    if d < 1:
        raise ValueError("number of parts must be positive")
    return sum(1 for p in enumerate_partitions(n) if len(p) <= d)
