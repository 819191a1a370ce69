"""Alternating sign trapezoids and column strict shifted plane partitions.

An (n, l)-alternating sign trapezoid (ASTZ) is a ragged array of -1/0/+1
with n rows, row i covering columns i..2n+l-1-i, such that nonzero
entries alternate in sign along rows and columns, the topmost nonzero
entry of every column is +1, rows sum to 1, and the l-2 central columns
sum to 0.  The degenerate case l = 1 (quasi alternating sign triangle,
QAST) relaxes the bottom row sum to 0 or 1.

A CSSPP is a filling of a shifted Young diagram with positive integers,
weakly decreasing along rows and strictly decreasing down columns; class
k means every row's first part exceeds its length by k.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .algebra import M, MultiPoly, P, Q

__all__ = [
    "Astz",
    "AstzValidationError",
    "ColumnClass",
    "ColumnKind",
    "Csspp",
    "CssppValidationError",
    "StatProfile",
    "astz_stats",
    "classify_columns",
    "csspp_class0_stats",
    "csspp_stats",
    "qast_weight",
    "weight_of",
]


class AstzValidationError(ValueError):
    """Invalid sign trapezoid; carries the first offending (row, col)."""

    def __init__(self, reason: str, row: int | None = None, col: int | None = None):
        self.reason = reason
        self.row = row
        self.col = col
        where = "" if row is None else f" at (row {row}, col {col})"
        super().__init__(f"{reason}{where}")


class CssppValidationError(ValueError):
    pass


class ColumnKind(Enum):
    ZERO = "zero"
    TEN = "ten"
    ELEVEN = "eleven"


@dataclass(frozen=True)
class ColumnClass:
    kind: ColumnKind
    position: int | None  # -n..-1 left, 1..n right, None for central

    @property
    def is_one_column(self) -> bool:
        return self.kind is not ColumnKind.ZERO


@dataclass(frozen=True)
class StatProfile:
    mu: int
    r: int
    p: int
    q: int
    inv: int = 0

    def as_dict(self) -> dict:
        return {"mu": self.mu, "r": self.r, "p": self.p, "q": self.q, "inv": self.inv}


class Astz:
    """Validated alternating sign trapezoid (l >= 2) or QAST (l = 1)."""

    __slots__ = ("n", "l", "rows")

    def __init__(self, rows, l: int):
        if l < 1:
            raise AstzValidationError(f"l must be >= 1, got {l}")
        n = len(rows)
        if n < 1:
            raise AstzValidationError("need at least one row")
        self.n = n
        self.l = l
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self._validate()

    # row i holds columns i .. 2n+l-1-i (1-based, like the printed layout)
    def row_span(self, i: int) -> tuple[int, int]:
        return i, 2 * self.n + self.l - 1 - i

    @property
    def ncols(self) -> int:
        return 2 * self.n + self.l - 2

    def entry(self, i: int, j: int) -> int:
        lo, hi = self.row_span(i)
        if not (lo <= j <= hi):
            raise IndexError(f"column {j} outside row {i} (spans {lo}..{hi})")
        return self.rows[i - 1][j - lo]

    def column_rows(self, j: int) -> range:
        top = 1
        bottom = min(j, 2 * self.n + self.l - 1 - j, self.n)
        return range(top, bottom + 1)

    def column_bottom_row(self, j: int) -> int:
        return min(j, 2 * self.n + self.l - 1 - j, self.n)

    def column_entries(self, j: int) -> list[int]:
        return [self.entry(i, j) for i in self.column_rows(j)]

    def column_sum(self, j: int) -> int:
        return sum(self.column_entries(j))

    def _validate(self) -> None:
        n, l = self.n, self.l
        for i in range(1, n + 1):
            lo, hi = self.row_span(i)
            if len(self.rows[i - 1]) != hi - lo + 1:
                raise AstzValidationError(
                    f"row {i} must have {hi - lo + 1} entries, got {len(self.rows[i - 1])}",
                    row=i, col=None,
                )
            if any(x not in (-1, 0, 1) for x in self.rows[i - 1]):
                raise AstzValidationError("entries must be -1, 0, or +1", row=i, col=None)
        # sign alternation along rows
        for i in range(1, n + 1):
            lo, hi = self.row_span(i)
            last = 0
            for j in range(lo, hi + 1):
                x = self.entry(i, j)
                if x != 0:
                    if x == last:
                        raise AstzValidationError("row sign alternation violated", i, j)
                    last = x
        # alternation and topmost-is-one per column
        for j in range(1, self.ncols + 1):
            last = 0
            for i in self.column_rows(j):
                x = self.entry(i, j)
                if x != 0:
                    if last == 0 and x == -1:
                        raise AstzValidationError("topmost nonzero entry of a column is not 1", i, j)
                    if x == last:
                        raise AstzValidationError("column sign alternation violated", i, j)
                    last = x
        # row sums
        for i in range(1, n + 1):
            s = sum(self.rows[i - 1])
            if l >= 2 or i < n:
                if s != 1:
                    raise AstzValidationError(f"row {i} sums to {s}, expected 1", row=i, col=None)
            else:
                if s not in (0, 1):
                    raise AstzValidationError(f"bottom row sums to {s}, expected 0 or 1", row=i, col=None)
        # central column sums (only exist for l >= 3; vacuous otherwise)
        for j in range(n + 1, n + l - 1):
            s = self.column_sum(j)
            if s != 0:
                raise AstzValidationError(f"central column sums to {s}, expected 0", row=None, col=j)

    # column position labels: left j in 1..n -> j-n-1; right -> j-(n+l-2)
    def column_position(self, j: int) -> int | None:
        n, l = self.n, self.l
        if l == 1:
            if j == n:
                return None  # shared central column
            return j - n - 1 if j < n else j - n + 1
        if j <= n:
            return j - n - 1
        if j >= n + l - 1:
            return j - (n + l - 2)
        return None

    def column_for_position(self, pos: int) -> int:
        n, l = self.n, self.l
        if pos < 0:
            return pos + n + 1
        if pos > 0:
            return pos + n + l - 2
        raise ValueError("position 0 does not name a column")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Astz) and self.l == other.l and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.l, self.rows))

    def __repr__(self) -> str:
        return f"Astz(n={self.n}, l={self.l})"

    def to_json_dict(self) -> dict:
        return {"l": self.l, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "Astz":
        try:
            return cls(doc["rows"], doc["l"])
        except KeyError as exc:
            raise AstzValidationError(f"missing field {exc.args[0]!r} in JSON document")

    def render(self) -> str:
        """Centred trapezoid layout, matching the usual printed form."""
        width = max(len(str(x)) for row in self.rows for x in row)
        blank = " " * width
        lines = []
        for i in range(1, self.n + 1):
            lo, hi = self.row_span(i)
            cells = [blank] * (lo - 1)
            cells += [str(self.entry(i, j)).rjust(width) for j in range(lo, hi + 1)]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


def classify_columns(a: Astz) -> list[ColumnClass]:
    """One ColumnClass per column, left to right."""
    out = []
    for j in range(1, a.ncols + 1):
        s = a.column_sum(j)
        if s == 0:
            kind = ColumnKind.ZERO
        else:
            bottom = a.entry(a.column_bottom_row(j), j)
            kind = ColumnKind.ELEVEN if bottom == 1 else ColumnKind.TEN
        out.append(ColumnClass(kind, a.column_position(j)))
    return out


def left_one_positions(a: Astz) -> list[int]:
    """Positions i such that the left column at -i sums to 1 (as positive ints)."""
    return [-c.position for c in classify_columns(a)
            if c.position is not None and c.position < 0 and c.is_one_column]


def right_zero_positions(a: Astz) -> list[int]:
    return [c.position for c in classify_columns(a)
            if c.position is not None and c.position > 0 and c.kind is ColumnKind.ZERO]


def astz_stats(a: Astz) -> StatProfile:
    """The quadruple (mu, r, p, q) plus the inversion number, for l >= 2."""
    if a.l < 2:
        raise AstzValidationError("statistics for l = 1 live in qast_weight")
    mu = sum(x == -1 for row in a.rows for x in row)
    classes = classify_columns(a)
    r = p = q = elevens_left = 0
    for c in classes:
        if c.position is None:
            continue
        if c.position < 0:
            if c.is_one_column:
                r += 1
            if c.kind is ColumnKind.TEN:
                p += 1
            if c.kind is ColumnKind.ELEVEN:
                elevens_left += 1
        else:
            if c.kind is ColumnKind.TEN:
                q += 1
    inv = _inversion_sum(a) + elevens_left
    return StatProfile(mu, r, p, q, inv)


def _inversion_sum(a: Astz) -> int:
    cells = []
    for i in range(1, a.n + 1):
        lo, hi = a.row_span(i)
        for j in range(lo, hi + 1):
            x = a.entry(i, j)
            if x != 0:
                cells.append((i, j, x))
    total = 0
    for i, j, x in cells:
        for i2, j2, x2 in cells:
            if i < i2 and j <= j2:
                total += x * x2
    return total


def weight_of(profile: StatProfile) -> MultiPoly:
    return MultiPoly.monomial(profile.mu, profile.r, profile.p, profile.q)


class Csspp:
    """Column strict shifted plane partition of a given class."""

    __slots__ = ("k", "rows")

    def __init__(self, rows, k: int):
        if k < 0:
            raise CssppValidationError(f"class must be >= 0, got {k}")
        self.k = k
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self._validate()

    @classmethod
    def empty(cls, k: int) -> "Csspp":
        return cls((), k)

    @classmethod
    def one_row(cls, parts, k: int) -> "Csspp":
        parts = tuple(parts)
        return cls((parts,), k) if parts else cls.empty(k)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def is_one_row(self) -> bool:
        return len(self.rows) <= 1

    @property
    def parts(self) -> tuple[int, ...]:
        if not self.is_one_row:
            raise CssppValidationError("parts is defined for one-row fillings only")
        return self.rows[0] if self.rows else ()

    def cells(self):
        """Yield (row_index, offset, value); offset is j - i in math labels."""
        for r, row in enumerate(self.rows):
            for off, v in enumerate(row):
                yield r, off, v

    def _validate(self) -> None:
        shape = self.shape
        if any(a <= b for a, b in zip(shape, shape[1:])):
            raise CssppValidationError(f"row lengths must strictly decrease, got {shape}")
        for r, row in enumerate(self.rows):
            if any(v < 1 for v in row):
                raise CssppValidationError("parts must be positive")
            if any(a < b for a, b in zip(row, row[1:])):
                raise CssppValidationError(f"row {r + 1} is not weakly decreasing")
            if row[0] != self.k + len(row):
                raise CssppValidationError(
                    f"row {r + 1} first part must be {self.k + len(row)}, got {row[0]}"
                )
        # columns: cell (r, off) sits above cell (r+1, off-1) in the shifted layout
        for r in range(len(self.rows) - 1):
            for off2, v2 in enumerate(self.rows[r + 1]):
                v1 = self.rows[r][off2 + 1] if off2 + 1 < len(self.rows[r]) else None
                if v1 is not None and not v1 > v2:
                    raise CssppValidationError(
                        f"column through row {r + 1} offset {off2 + 1} is not strictly decreasing"
                    )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Csspp) and self.k == other.k and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.k, self.rows))

    def __repr__(self) -> str:
        return f"Csspp(class={self.k}, rows={self.rows!r})"

    def to_json_dict(self) -> dict:
        return {"class": self.k, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "Csspp":
        try:
            return cls(doc["rows"], doc["class"])
        except KeyError as exc:
            raise CssppValidationError(f"missing field {exc.args[0]!r} in JSON document")

    def render(self) -> str:
        if not self.rows:
            return "(empty)"
        width = max(len(str(v)) for row in self.rows for v in row)
        lines = []
        for r, row in enumerate(self.rows):
            pad = " " * ((width + 1) * r)
            lines.append(pad + " ".join(str(v).rjust(width) for v in row))
        return "\n".join(lines)


def csspp_stats(c: Csspp, d: int) -> StatProfile:
    """(mu_d, r, p_d, q) plus the excess-part count, for class k >= 1."""
    if c.k < 1:
        raise CssppValidationError("class-0 fillings use csspp_class0_stats")
    if not 1 <= d <= c.k:
        raise CssppValidationError(f"d must be in 1..{c.k}, got {d}")
    mu = p = q = inv = 0
    for _, off, v in c.cells():
        if v == 1 and off + d != 1:
            q += 1
        elif v == off + d:
            p += 1
        elif 2 <= v <= off + c.k:
            mu += 1
        elif v > off + c.k:
            inv += 1
    return StatProfile(mu, c.num_rows, p, q, inv)


def csspp_class0_stats(c: Csspp) -> tuple[StatProfile, bool]:
    """Class-0 statistics plus the unit-part flag used in the l = 1 weight.

    The flag is true when some part equals 1 at offset j - i = 1; such a
    part contributes the factor (P + Q - M) rather than plain P or Q.
    """
    if c.k != 0:
        raise CssppValidationError(f"expected class 0, got class {c.k}")
    mu = p = q = inv = 0
    flag = False
    for _, off, v in c.cells():
        if v == 1 and off == 1:
            flag = True
        elif v == off and off > 1:
            p += 1
        elif v == 1 and off > 1:
            q += 1
        elif 2 <= v <= off - 1:
            mu += 1
        elif v > off:
            inv += 1
    return StatProfile(mu, c.num_rows, p, q, inv), flag


def _qast_astz_weight(a: Astz) -> MultiPoly:
    if a.l != 1:
        raise AstzValidationError(f"expected l = 1, got l = {a.l}")
    n = a.n
    mu = sum(x == -1 for row in a.rows for x in row)
    classes = {j: cls for j, cls in enumerate(classify_columns(a), start=1)}
    r = sum(classes[j].is_one_column for j in range(1, n + 1))
    p = sum(classes[j].kind is ColumnKind.TEN for j in range(1, n))
    q = sum(classes[j].kind is ColumnKind.TEN for j in range(n + 1, 2 * n))
    central_ten = classes[n].kind is ColumnKind.TEN
    w = MultiPoly.monomial(mu, r, p, q)
    return w * (P + Q - M) if central_ten else w


def _qast_csspp_weight(c: Csspp) -> MultiPoly:
    profile, flag = csspp_class0_stats(c)
    w = weight_of(profile)
    return w * (P + Q - M) if flag else w


def qast_weight(obj: Astz | Csspp) -> MultiPoly:
    """Weight for the degenerate l = 1 case, on either side of the identity."""
    if isinstance(obj, Astz):
        return _qast_astz_weight(obj)
    if isinstance(obj, Csspp):
        return _qast_csspp_weight(obj)
    raise TypeError(f"expected Astz or Csspp, got {type(obj).__name__}")


def dumps_canonical(doc: dict) -> str:
    """Deterministic single-line JSON used for streams and golden files."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
