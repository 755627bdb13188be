"""
Exact rational geometry: phase-1 simplex feasibility, convex hull intersection
witnesses, affine hull intersections, general position predicates and
moment-curve point sequences.

Nothing here uses floating point. Coordinates are fractions.Fraction; the
affine-hull algebra goes through sympy matrices over the rationals.
"""

from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import sympy
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from config import SGP_POINT_CAP, log

Rational = Fraction
Point = Tuple[Fraction, ...]
Number = Union[int, Fraction, str]


def to_fraction(value: Number) -> Fraction:
    if isinstance(value, float):
        raise ValueError("floating point coordinates are not accepted")
    return Fraction(value)


def _as_point(coords) -> Point:
    return tuple(to_fraction(c) for c in coords)


# ---- Data Models ----

class PointSequence(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    points: Tuple[Tuple[Fraction, ...], ...]
    dim: int

    @field_validator("points", mode="before")
    @classmethod
    def _exact_points(cls, value):
        return tuple(_as_point(p) for p in value)

    @model_validator(mode="after")
    def _shared_dimension(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        for p in self.points:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have dimension {self.dim}")
        return self

    def __len__(self) -> int:
        return len(self.points)

    def point(self, index: int) -> Point:
        """Point at 1-based `index`."""
        if not 1 <= index <= len(self.points):
            raise ValueError(f"point index {index} out of range 1..{len(self.points)}")
        return self.points[index - 1]


class AffineFlat(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    basepoint: Optional[Tuple[Fraction, ...]] = None
    directions: Tuple[Tuple[Fraction, ...], ...] = ()

    @property
    def dim(self) -> int:
        return -1 if self.basepoint is None else len(self.directions)

    @property
    def is_empty(self) -> bool:
        return self.basepoint is None

    @property
    def is_point(self) -> bool:
        return self.dim == 0


# ---- Linear feasibility ----

def lp_feasible(
    rows: Sequence[Sequence[Number]], rhs: Sequence[Number]
) -> Optional[Tuple[Fraction, ...]]:
    """Find x >= 0 with rows·x = rhs, or None.

    Phase-1 simplex on an artificial basis. Entering and leaving variables follow
    the smallest-index rule, which cannot cycle.
    """
    m = len(rows)
    if len(rhs) != m:
        raise ValueError(f"{m} equations but {len(rhs)} right-hand sides")
    n = len(rows[0]) if rows else 0
    if any(len(row) != n for row in rows):
        raise ValueError("equations have different numbers of variables")
    if m == 0:
        return tuple(Fraction(0) for _ in range(n))

    width = n + m
    table: List[List[Fraction]] = []
    for i, (row, b) in enumerate(zip(rows, rhs)):
        sign = -1 if to_fraction(b) < 0 else 1
        line = [sign * to_fraction(a) for a in row] + [Fraction(0)] * m + [sign * to_fraction(b)]
        line[n + i] = Fraction(1)
        table.append(line)
    basis = list(range(n, width))
    # reduced costs of "minimise the sum of artificials", last entry is -objective
    cost = [-sum(line[j] for line in table) for j in range(n)] + [Fraction(0)] * m
    cost.append(-sum(line[-1] for line in table))

    pivots = 0
    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        leaving, best = None, None
        for i, line in enumerate(table):
            a = line[entering]
            if a > 0:
                ratio = line[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    leaving, best = i, ratio
        if leaving is None:
            # phase-1 objective is bounded below by 0
            raise RuntimeError("unbounded phase-1 simplex")
        _pivot(table, cost, leaving, entering)
        basis[leaving] = entering
        pivots += 1

    log("LP", f"{m}x{n} system, {pivots} pivots, residual {-cost[-1]}")
    if -cost[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = table[i][-1]
    return tuple(x)


def _pivot(table: List[List[Fraction]], cost: List[Fraction], i: int, j: int) -> None:
    piv = table[i][j]
    row = [v / piv for v in table[i]]
    table[i] = row
    for k, line in enumerate(table):
        if k != i and line[j] != 0:
            f = line[j]
            table[k] = [a - f * b for a, b in zip(line, row)]
    f = cost[j]
    if f != 0:
        cost[:] = [a - f * b for a, b in zip(cost, row)]


# ---- Convex hulls ----

def _check_parts(parts: Sequence[Sequence[Sequence[Number]]]) -> List[List[Point]]:
    if not parts:
        raise ValueError("at least one part is required")
    exact = [[_as_point(p) for p in part] for part in parts]
    if any(not part for part in exact):
        raise ValueError("parts must be non-empty")
    dims = {len(p) for part in exact for p in part}
    if len(dims) != 1:
        raise ValueError(f"parts mix dimensions {sorted(dims)}")
    return exact


def _hull_weights(parts: List[List[Point]]) -> Optional[List[List[Fraction]]]:
    """Convex weights per part whose barycenters coincide, or None."""
    d = len(parts[0][0])
    sizes = [len(part) for part in parts]
    offsets = [sum(sizes[:i]) for i in range(len(parts))]
    total = sum(sizes)
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for i, size in enumerate(sizes):
        row = [Fraction(0)] * total
        for j in range(size):
            row[offsets[i] + j] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))
    for i in range(1, len(parts)):
        for c in range(d):
            row = [Fraction(0)] * total
            for j, p in enumerate(parts[0]):
                row[j] = -p[c]
            for j, p in enumerate(parts[i]):
                row[offsets[i] + j] = p[c]
            rows.append(row)
            rhs.append(Fraction(0))
    x = lp_feasible(rows, rhs)
    if x is None:
        return None
    return [list(x[offsets[i]: offsets[i] + sizes[i]]) for i in range(len(parts))]


def convex_hulls_intersect(parts: Sequence[Sequence[Sequence[Number]]]) -> Optional[Point]:
    """A point common to the convex hulls of all parts, or None."""
    exact = _check_parts(parts)
    weights = _hull_weights(exact)
    if weights is None:
        return None
    d = len(exact[0][0])
    return tuple(
        sum((w * p[c] for w, p in zip(weights[0], exact[0])), Fraction(0)) for c in range(d)
    )


def hull_intersection_support(
    parts: Sequence[Sequence[Sequence[Number]]],
) -> Optional[List[List[int]]]:
    """0-based indices, per part, carrying weight in a basic intersection solution.

    A basic solution has at most (d+1)(r-1)+1 nonzero weights, so the returned
    sub-parts realise the intersection within that point budget.
    """
    weights = _hull_weights(_check_parts(parts))
    if weights is None:
        return None
    return [[j for j, w in enumerate(ws) if w != 0] for ws in weights]


# ---- Affine hulls ----

def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def affine_intersection(parts: Sequence[Sequence[Sequence[Number]]]) -> AffineFlat:
    """Exact intersection of the affine hulls of the parts."""
    exact = _check_parts(parts)
    d = len(exact[0][0])
    sizes = [len(part) for part in exact]
    offsets = [sum(sizes[:i]) for i in range(len(exact))]
    total = sum(sizes)

    M = sympy.zeros(len(exact) + d * (len(exact) - 1), total)
    b = sympy.zeros(M.rows, 1)
    for i, size in enumerate(sizes):
        for j in range(size):
            M[i, offsets[i] + j] = 1
        b[i, 0] = 1
    row = len(exact)
    for i in range(1, len(exact)):
        for c in range(d):
            for j, p in enumerate(exact[0]):
                M[row, j] = -_to_sympy(p[c])
            for j, p in enumerate(exact[i]):
                M[row, offsets[i] + j] = _to_sympy(p[c])
            row += 1

    if M.rank() != M.row_join(b).rank():
        return AffineFlat()
    solution, params = M.gauss_jordan_solve(b)
    particular = solution.subs({t: 0 for t in params})

    # affine combination of the first part's points
    L = sympy.zeros(d, total)
    for j, p in enumerate(exact[0]):
        for c in range(d):
            L[c, j] = _to_sympy(p[c])
    base = L * particular
    directions: List[Point] = []
    kernel = M.nullspace()
    if kernel:
        images = L * sympy.Matrix.hstack(*kernel)
        for col in images.columnspace():
            directions.append(tuple(_from_sympy(col[c, 0]) for c in range(d)))
    return AffineFlat(
        basepoint=tuple(_from_sympy(base[c, 0]) for c in range(d)),
        directions=tuple(directions),
    )


def affine_rank(points: Sequence[Sequence[Number]]) -> int:
    """Dimension of the affine hull; -1 for no points."""
    if not points:
        return -1
    exact = [_as_point(p) for p in points]
    if len(exact) == 1:
        return 0
    diffs = sympy.Matrix([[_to_sympy(a - b) for a, b in zip(p, exact[0])] for p in exact[1:]])
    return diffs.rank()


# ---- General position ----

def in_general_position(P: PointSequence) -> bool:
    for k in range(2, min(P.dim + 1, len(P)) + 1):
        for subset in combinations(P.points, k):
            if affine_rank(subset) != k - 1:
                log("GEOM", f"affinely dependent points: {subset}")
                return False
    return True


def set_partitions(items: Sequence[int], r: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Partitions of `items` into exactly r non-empty blocks, blocks ordered by first item.

    Restricted-growth order: each item joins an existing block or opens the next one.
    """
    items = list(items)
    blocks: List[List[int]] = []

    def grow(k: int):
        remaining = len(items) - k
        if len(blocks) + remaining < r:
            return
        if k == len(items):
            if len(blocks) == r:
                yield tuple(tuple(b) for b in blocks)
            return
        for block in blocks:
            block.append(items[k])
            yield from grow(k + 1)
            block.pop()
        if len(blocks) < r:
            blocks.append([items[k]])
            yield from grow(k + 1)
            blocks.pop()

    yield from grow(0)


def in_strong_general_position(P: PointSequence) -> bool:
    """Every tuple of disjoint parts of size <= d with m points in
    total has a single common affine point when m = (d+1)(r-1)+1 and none below that.
    """
    if not in_general_position(P):
        raise ValueError("point sequence is not in general position")
    n, d = len(P), P.dim
    if n > SGP_POINT_CAP:
        raise ValueError(f"{n} points exceed the strong general position cap of {SGP_POINT_CAP}")
    indices = range(n)
    checked = 0
    for r in range(2, n + 1):
        budget = (d + 1) * (r - 1) + 1
        for m in range(r, min(budget, r * d, n) + 1):
            for subset in combinations(indices, m):
                for blocks in set_partitions(subset, r):
                    if any(len(block) > d for block in blocks):
                        continue
                    flat = affine_intersection([[P.points[i] for i in block] for block in blocks])
                    checked += 1
                    ok = flat.is_point if m == budget else flat.is_empty
                    if not ok:
                        log("GEOM", f"tuple {blocks} violates strong general position (dim {flat.dim})")
                        return False
    log("GEOM", f"strong general position holds ({checked} tuples)")
    return True


# ---- Point generation ----

def moment_curve(n: int, d: int, base: Number = 2) -> PointSequence:
    """Points (t, t^2, ..., t^d) with t = base^i, i = 1..n."""
    b = to_fraction(base)
    if n < 1 or d < 1 or b <= 1:
        raise ValueError(f"invalid moment curve parameters n={n}, d={d}, base={base}")
    points = []
    for i in range(1, n + 1):
        t = b ** i
        points.append(tuple(t ** k for k in range(1, d + 1)))
    return PointSequence(points=points, dim=d)
