"""Exact scalars, exact matrices, and integer-polynomial determinants.

The ground field is either Q (scalars are `fractions.Fraction`, always in
lowest terms with positive denominator) or F_p for a prime p (scalars are
ints in [0, p)).  Everything in this module is exact; no floating point is
used anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class FieldMismatchError(ValueError):
    """Objects that should share one ground field do not."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class GroundField:
    """Descriptor for Q (characteristic 0) or F_p, owning scalar arithmetic.

    All code manipulating scalars goes through the field object, so callers
    never branch on the characteristic themselves.
    """

    __slots__ = ("p",)

    def __init__(self, characteristic: int = 0):
        if characteristic and not _is_prime(characteristic):
            raise ValueError(
                f"field characteristic must be 0 or a prime, got {characteristic}")
        self.p = characteristic

    @property
    def characteristic(self) -> int:
        return self.p

    def __eq__(self, other):
        return isinstance(other, GroundField) and self.p == other.p

    def __hash__(self):
        return hash(("GroundField", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def coerce(self, value):
        """Turn an int, Fraction or (num, den) pair into a scalar of this field."""
        if isinstance(value, tuple):
            num, den = value
            return self.div(self.coerce(num), self.coerce(den))
        if self.p == 0:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            raise FieldMismatchError(f"cannot coerce {value!r} into QQ")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        raise FieldMismatchError(f"cannot coerce {value!r} into GF({self.p})")

    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def is_zero(self, a) -> bool:
        return not a

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.p == 0 else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a) -> str:
        return str(a)


QQ = GroundField(0)


def GF(p: int) -> GroundField:
    return GroundField(p)


# ---------------------------------------------------------------------------
# dense row spaces


class Echelon:
    """A growing row space kept in reduced echelon form over a ground field.

    Rows are dense lists; pivot entries are normalized to 1 and pivot
    columns are cleared in all other rows, so reductions are canonical.
    Suitable for the desk-scale spans used throughout (ideal slices,
    socles, radical filtrations); the bar-complex ranks use `SparseRank`.
    """

    def __init__(self, field: GroundField, width: int):
        self.field = field
        self.width = width
        self.rows: list[list] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list:
        """Canonical residual of `vec` modulo the current row space."""
        if len(vec) != self.width:
            raise FieldMismatchError(
                f"vector of length {len(vec)} in ambient dimension {self.width}")
        f = self.field
        v = [f.coerce(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Insert `vec`; True iff it enlarged the span."""
        f = self.field
        v = self.reduce(vec)
        j = next((k for k, x in enumerate(v) if x), None)
        if j is None:
            return False
        c = f.inv(v[j])
        v = [f.mul(c, x) for x in v]
        for i, row in enumerate(self.rows):
            d = row[j]
            if d:
                self.rows[i] = [f.sub(a, f.mul(d, b)) for a, b in zip(row, v)]
        at = next((i for i, p in enumerate(self.pivots) if p > j), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, j)
        return True

    def contains(self, vec) -> bool:
        return all(not x for x in self.reduce(vec))

    def basis(self) -> list[list]:
        return [list(r) for r in self.rows]

    def same_space(self, other: "Echelon") -> bool:
        return self.pivots == other.pivots and self.rows == other.rows


class QuotientMap:
    """Projection of k^n onto the coordinates complementary to a subspace.

    The subspace is echelonized; the quotient coordinates are the non-pivot
    columns of the reduced form.  `apply` kills the subspace and is onto,
    `lift` is the section placing quotient coordinates at the free columns.
    """

    def __init__(self, field: GroundField, ambient_dim: int, sub_basis):
        self.field = field
        self.ambient_dim = ambient_dim
        self.echelon = Echelon(field, ambient_dim)
        for v in sub_basis:
            if len(v) != ambient_dim:
                raise FieldMismatchError(
                    f"subspace vector of length {len(v)} in ambient dimension {ambient_dim}")
            self.echelon.add(v)
        piv = set(self.echelon.pivots)
        self.free_columns = [j for j in range(ambient_dim) if j not in piv]
        self.quotient_dim = len(self.free_columns)

    def apply(self, vec) -> list:
        res = self.echelon.reduce(vec)
        return [res[j] for j in self.free_columns]

    def lift(self, qvec) -> list:
        f = self.field
        out = [f.zero()] * self.ambient_dim
        for j, x in zip(self.free_columns, qvec):
            out[j] = f.coerce(x)
        return out


def subspace_quotient(ambient_dim: int, sub_basis, field: GroundField = QQ) -> QuotientMap:
    """Quotient of k^ambient_dim by the span of `sub_basis`."""
    return QuotientMap(field, ambient_dim, sub_basis)


# ---------------------------------------------------------------------------
# matrices


class ExactMatrix:
    """Exact matrix over a ground field, stored column-major and sparse."""

    __slots__ = ("field", "nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, field: GroundField = QQ, cols=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else [{} for _ in range(ncols)]

    @classmethod
    def from_rows(cls, rows, field: GroundField = QQ) -> "ExactMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        m = cls(nrows, ncols, field)
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for c, x in enumerate(row):
                x = field.coerce(x)
                if x:
                    m.cols[c][r] = x
        return m

    def set(self, r: int, c: int, value):
        value = self.field.coerce(value)
        if value:
            self.cols[c][r] = value
        else:
            self.cols[c].pop(r, None)

    def get(self, r: int, c: int):
        return self.cols[c].get(r, self.field.zero())

    def to_rows(self) -> list[list]:
        rows = [[self.field.zero()] * self.ncols for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, x in col.items():
                rows[r][c] = x
        return rows

    def apply(self, vec) -> list:
        """Matrix-vector product; `vec` has length ncols."""
        f = self.field
        out = [f.zero()] * self.nrows
        for c, x in enumerate(vec):
            if x:
                for r, y in self.cols[c].items():
                    out[r] = f.add(out[r], f.mul(x, y))
        return out

    def apply_column(self, col: dict) -> dict:
        f = self.field
        out: dict = {}
        for c, x in col.items():
            for r, y in self.cols[c].items():
                v = f.add(out.get(r, f.zero()), f.mul(x, y))
                if v:
                    out[r] = v
                else:
                    out.pop(r, None)
        return out

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field:
            raise FieldMismatchError("matrix product across different fields")
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions disagree")
        cols = [self.apply_column(c) for c in other.cols]
        return ExactMatrix(self.nrows, other.ncols, self.field, cols)

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def rank(self) -> int:
        eng = SparseRank(self.field.p)
        for col in self.cols:
            eng.add(col)
        return eng.rank

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.cols == other.cols)


@dataclass
class RowReduction:
    rank: int
    kernel_basis: list
    pivot_columns: list


def row_reduce(m: ExactMatrix) -> RowReduction:
    """Rank, canonical kernel basis and pivot columns of an exact matrix.

    The kernel basis spans {v : m v = 0} and is itself returned in reduced
    echelon form, so the output is canonical for the given matrix.
    """
    f = m.field
    ech = Echelon(f, m.ncols)
    for row in m.to_rows():
        ech.add(row)
    pivots = list(ech.pivots)
    rank = ech.rank
    piv_set = set(pivots)
    free = [j for j in range(m.ncols) if j not in piv_set]
    kernel = []
    for j in free:
        v = [f.zero()] * m.ncols
        v[j] = f.one()
        for row, p in zip(ech.rows, pivots):
            v[p] = f.neg(row[j])
        kernel.append(v)
    ker_ech = Echelon(f, m.ncols)
    for v in kernel:
        ker_ech.add(v)
    return RowReduction(rank=rank, kernel_basis=ker_ech.basis(), pivot_columns=pivots)


class SparseRank:
    """Incremental exact rank of a sparse matrix, fed column by column.

    Over Q the reduced columns are kept as integer vectors with their
    content divided out, and elimination is done by integer cross
    multiplication, so no Fraction arithmetic occurs in the inner loop.
    Over F_p ordinary modular elimination is used.
    """

    _NORMALIZE_BITS = 256

    def __init__(self, p: int = 0):
        self.p = p
        self.pivots: dict = {}  # leading index -> reduced column
        self.rank = 0

    @staticmethod
    def _clear_denominators(col: dict) -> dict:
        den = 1
        for x in col.values():
            if isinstance(x, Fraction):
                d = x.denominator
                den = den * d // gcd(den, d)
        if den == 1:
            return {k: int(x) for k, x in col.items() if x}
        return {k: int(x * den) for k, x in col.items() if x}

    @staticmethod
    def _normalize_content(col: dict) -> dict:
        g = 0
        for x in col.values():
            g = gcd(g, x)
            if g == 1:
                return col
        return {k: x // g for k, x in col.items()}

    def add(self, col: dict) -> bool:
        """Insert a column; True iff the rank increased."""
        if self.p == 0:
            v = self._clear_denominators(col)
        else:
            v = {k: x % self.p for k, x in col.items() if x % self.p}
        while v:
            j = min(v)
            piv = self.pivots.get(j)
            if piv is None:
                if self.p == 0:
                    v = self._normalize_content(v)
                self.pivots[j] = v
                self.rank += 1
                return True
            if self.p == 0:
                a, b = piv[j], v[j]
                g = gcd(a, b)
                am, bm = a // g, b // g
                new = {k: am * x for k, x in v.items()}
                for k, y in piv.items():
                    z = new.get(k, 0) - bm * y
                    if z:
                        new[k] = z
                    else:
                        new.pop(k, None)
                v = new
                if v and max(abs(x) for x in v.values()).bit_length() > self._NORMALIZE_BITS:
                    v = self._normalize_content(v)
            else:
                c = (v[j] * pow(piv[j], -1, self.p)) % self.p
                new = dict(v)
                for k, y in piv.items():
                    z = (new.get(k, 0) - c * y) % self.p
                    if z:
                        new[k] = z
                    else:
                        new.pop(k, None)
                v = new
        return False


# ---------------------------------------------------------------------------
# integer polynomials and polynomial matrices


class IntPolynomial:
    """A polynomial in Z[x]; coefficient i is the coefficient of x^i.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {c!r}")
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, n: int) -> "IntPolynomial":
        return cls((n,))

    @classmethod
    def x_power(cls, k: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * k + (coeff,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Quotient self/other when the division is exact in Z[x]."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return IntPolynomial()
        rem = list(self.coeffs)
        div = other.coeffs
        dq = len(rem) - len(div)
        if dq < 0:
            raise ArithmeticError("inexact polynomial division")
        out = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            lead = rem[k + len(div) - 1]
            q, r = divmod(lead, div[-1])
            if r:
                raise ArithmeticError("inexact polynomial division")
            out[k] = q
            if q:
                for i, c in enumerate(div):
                    rem[k + i] -= q * c
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return IntPolynomial(out)

    def evaluate(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}*{mono}")
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out

    def __repr__(self):
        return f"IntPolynomial({self.coeffs})"

    def to_json(self):
        return list(self.coeffs)


POLY_ZERO = IntPolynomial()
POLY_ONE = IntPolynomial((1,))


class PolyMatrix:
    """A square matrix over Z[x]."""

    __slots__ = ("size", "entries")

    def __init__(self, entries):
        self.entries = [list(row) for row in entries]
        self.size = len(self.entries)
        for row in self.entries:
            if len(row) != self.size:
                raise ValueError("polynomial matrix must be square")
            for e in row:
                if not isinstance(e, IntPolynomial):
                    raise TypeError("entries must be IntPolynomial")

    @classmethod
    def identity(cls, size: int) -> "PolyMatrix":
        return cls([[POLY_ONE if i == j else POLY_ZERO for j in range(size)]
                    for i in range(size)])

    def get(self, i: int, j: int) -> IntPolynomial:
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries


def poly_det(m: PolyMatrix) -> IntPolynomial:
    """Exact determinant in Z[x] by fraction-free Bareiss elimination.

    Every division in the Bareiss recurrence is exact over Z[x], so no
    rational coefficients ever appear.
    """
    n = m.size
    if n == 0:
        return POLY_ONE
    a = [[m.entries[i][j] for j in range(n)] for i in range(n)]
    sign = 1
    prev = POLY_ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return POLY_ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = POLY_ZERO
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det
