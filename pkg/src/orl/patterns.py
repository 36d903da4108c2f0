"""Binary matrix pattern containment and permutation-matrix unavoidability.

B is contained in A when deleting rows/columns of A and demoting some 1s
to 0 leaves B; row and column order is preserved, mirroring the ordered
subgraph search.  The matching/coloring converters translate avoidance
certificates into matrices that dodge a permutation pattern both ways.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional

from orl.core import Coloring, FormatError, OrderedGraph, RED
from orl.rng import Xoshiro256StarStar


class BinaryMatrix:
    """An immutable 0/1 matrix with 1-based dimensions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("dimensions must be at least 1x1")
        if any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("rows must have equal length")
        if any(x not in (0, 1) for row in rows for x in row):
            raise ValueError("entries must be 0 or 1")
        self.rows = len(rows)
        self.cols = len(rows[0])
        self.entries = rows

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows}x{self.cols})"


def complement(a: BinaryMatrix) -> BinaryMatrix:
    """Entrywise flip; an involution."""
    return BinaryMatrix(tuple(tuple(1 - x for x in row) for row in a.entries))


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse the `mat` format: header `mat <rows> <cols>`, then 0/1 row strings."""
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.split("\n"), start=1)
        if line.strip()
    ]
    if not lines:
        raise FormatError(1, "missing `mat` header")
    no, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] != "mat":
        raise FormatError(no, "expected header `mat <rows> <cols>`")
    try:
        rows, cols = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(no, "expected header `mat <rows> <cols>`") from None
    if rows < 1 or cols < 1:
        raise FormatError(no, "dimensions must be at least 1x1")
    if len(lines) - 1 != rows:
        raise FormatError(lines[-1][0], f"expected {rows} row lines")
    grid = []
    for no, line in lines[1:]:
        if len(line) != cols or any(ch not in "01" for ch in line):
            raise FormatError(no, f"expected a row of {cols} 0/1 characters")
        grid.append(tuple(int(ch) for ch in line))
    return BinaryMatrix(grid)


def serialize_matrix(a: BinaryMatrix) -> str:
    lines = [f"mat {a.rows} {a.cols}"]
    lines.extend("".join(str(x) for x in row) for row in a.entries)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# containment
# ---------------------------------------------------------------------------

def pattern_contained(a: BinaryMatrix, b: BinaryMatrix) -> bool:
    """True iff some increasing row/column selections of A cover B's 1s.

    Backtracks over pattern rows; after each row choice the column system is
    re-checked greedily (smallest admissible host column per pattern column,
    left to right), which prunes infeasible prefixes early.
    """
    if b.rows > a.rows or b.cols > a.cols:
        return False

    # candidate host columns per pattern column given rows chosen so far
    def columns_feasible(chosen_rows: list[int], complete: bool) -> bool:
        prev = -1
        for pc in range(b.cols):
            constraints = [
                chosen_rows[pr]
                for pr in range(len(chosen_rows))
                if b.entries[pr][pc] == 1
            ]
            found = False
            for hc in range(prev + 1, a.cols - b.cols + pc + 1):
                if all(a.entries[hr][hc] == 1 for hr in constraints):
                    prev = hc
                    found = True
                    break
            if not found:
                return False
        return True

    def place(pr: int, start: int, chosen: list[int]) -> bool:
        if pr == b.rows:
            return columns_feasible(chosen, True)
        for hr in range(start, a.rows - (b.rows - pr - 1)):
            chosen.append(hr)
            if columns_feasible(chosen, False) and place(pr + 1, hr + 1, chosen):
                return True
            chosen.pop()
        return False

    return place(0, 0, [])


def permutation_matrices(n: int) -> Iterator[BinaryMatrix]:
    """All n x n permutation matrices, rows indexed by position."""
    for pi in permutations(range(n)):
        yield BinaryMatrix(
            tuple(
                tuple(1 if c == pi[r] else 0 for c in range(n))
                for r in range(n)
            )
        )


@dataclass(frozen=True)
class UnavoidabilityReport:
    holds: bool
    exhaustive: bool
    counterexample_matrix: Optional[BinaryMatrix] = None
    counterexample_pattern: Optional[BinaryMatrix] = None


def permutation_unavoidable(
    n: int,
    N: int,
    mode: str = "exhaustive",
    trials: int = 1000,
    seed: int = 0,
) -> UnavoidabilityReport:
    """Check whether every n x n permutation matrix appears in A or in its
    complement for every (exhaustive) or sampled N x N matrix A.

    Exhaustive mode scans all 2^(N^2) matrices and is limited to N <= 4 and
    n <= 2; sampling mode only reports counterexamples it happens to find.
    """
    patterns = list(permutation_matrices(n))

    def violates(a: BinaryMatrix) -> Optional[BinaryMatrix]:
        abar = complement(a)
        for p in patterns:
            if not pattern_contained(a, p) and not pattern_contained(abar, p):
                return p
        return None

    if mode == "exhaustive":
        if N > 4 or n > 2:
            raise ValueError("exhaustive mode is limited to N <= 4 and n <= 2")
        cells = N * N
        for bits in range(1 << cells):
            a = BinaryMatrix(
                tuple(
                    tuple((bits >> (r * N + c)) & 1 for c in range(N))
                    for r in range(N)
                )
            )
            bad = violates(a)
            if bad is not None:
                return UnavoidabilityReport(False, True, a, bad)
        return UnavoidabilityReport(True, True)
    if mode != "sample":
        raise ValueError("mode must be 'exhaustive' or 'sample'")
    gen = Xoshiro256StarStar(seed)
    for _ in range(trials):
        a = BinaryMatrix(
            tuple(
                tuple(gen.next_bit() for _ in range(N))
                for _ in range(N)
            )
        )
        bad = violates(a)
        if bad is not None:
            return UnavoidabilityReport(False, False, a, bad)
    return UnavoidabilityReport(True, False)


# ---------------------------------------------------------------------------
# matching/coloring dictionary
# ---------------------------------------------------------------------------

def matching_matrix(g: OrderedGraph) -> BinaryMatrix:
    """The permutation matrix of a matching across the middle of [2n]:
    entry (i, j) is 1 iff {i, n + j} is an edge."""
    if g.n % 2:
        raise ValueError("the matching must have evenly many positions")
    n = g.n // 2
    grid = [[0] * n for _ in range(n)]
    for a, b in g.edges:
        if not (a <= n < b):
            raise ValueError("every edge must cross the middle")
        grid[a - 1][b - n - 1] = 1
    return BinaryMatrix(tuple(tuple(row) for row in grid))


def coloring_matrix(col: Coloring, color: str = RED) -> BinaryMatrix:
    """The bipartite half-vs-half block of a coloring of K_{2N} as a 0/1
    matrix: entry (i, j) is 1 iff pair {i, N + j} carries `color`.

    A pattern contained in this matrix yields a monochromatic copy of the
    corresponding cross-matching, so an avoiding coloring gives a matrix
    avoiding the permutation pattern in both itself and its complement.
    """
    if col.n % 2:
        raise ValueError("the coloring must cover evenly many positions")
    half = col.n // 2
    return BinaryMatrix(
        tuple(
            tuple(
                1 if col.color(i, half + j) == color else 0
                for j in range(1, half + 1)
            )
            for i in range(1, half + 1)
        )
    )
