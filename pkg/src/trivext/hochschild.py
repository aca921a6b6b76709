"""Desk-scale Hochschild homology via the (normalized) bar complex.

Chains in degree n are spanned by tuples (b_0, b_1, ..., b_n) of basis
elements, with the boundary

    b(a_0 x ... x a_n) = sum_{i=0}^{n-1} (-1)^i a_0 x ... x a_i a_{i+1} x ... x a_n
                         + (-1)^n  a_n a_0 x a_1 x ... x a_{n-1}.

In the normalized variant the factors after the first live in B/k.1 on the
complement of the unit inside the echelonized basis headed by 1; face
products in those slots are reduced, and tuples hitting the class of 1
drop out.  Both variants give the same homology; the full complex is kept
as a cross-check oracle.

Ranks of the boundary matrices are computed exactly and incrementally by
sparse integer elimination.  Columns whose tuples have different total
degree (for a graded algebra) have disjoint row support, so elimination
never mixes degree blocks and stays desk-scale even when the chain
modules grow to ~10^5 tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .algebra import FDAlgebra
from .linalg import ExactMatrix, SparseRank


class DimensionCapExceeded(RuntimeError):
    """A chain module is larger than the configured tuple cap."""

    def __init__(self, degree: int, required: int, cap: int):
        self.degree = degree
        self.required = required
        self.cap = cap
        super().__init__(
            f"chain module in degree {degree} needs {required} basis tuples, "
            f"over the cap of {cap}")


DEFAULT_TUPLE_CAP = 50_000


@dataclass
class ChainModuleDescriptor:
    degree: int
    dimension: int
    variant: str


@dataclass
class HHReport:
    algebra: str
    variant: str
    n_max: int
    dims: list          # (n, dim HH_n) for the degrees that were computable
    truncated_at: int | None = None  # chain degree refused by the cap

    def as_dict(self):
        return dict(self.dims)


class _BarData:
    """Shared tables for one algebra/variant pair."""

    def __init__(self, B: FDAlgebra, variant: str):
        if variant not in ("normalized", "full"):
            raise ValueError(f"unknown bar complex variant {variant!r}")
        self.B = B
        self.variant = variant
        self.d = B.dim
        if variant == "full":
            self.reps = list(range(B.dim))
        else:
            unit = B.unit()
            self.unit_pivot = min(unit)  # echelon head: the unit itself
            self.reps = [k for k in range(B.dim) if k != self.unit_pivot]
        self.dbar = len(self.reps)
        self._red_cache: dict = {}

    def chain_dim(self, n: int) -> int:
        return self.d * self.dbar ** n

    def reduce(self, vec: dict) -> dict:
        """Class of a B-vector in B/k.1, on the non-unit slots."""
        if self.variant == "full":
            return dict(vec)
        f = self.B.field
        c = vec.get(self.unit_pivot)
        out = {k: v for k, v in vec.items() if k != self.unit_pivot}
        if c:
            for k in self.B.idempotent_indices:
                if k == self.unit_pivot:
                    continue
                v = f.sub(out.get(k, f.zero()), c)
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    def red_product(self, s: int, t: int) -> dict:
        """Reduced product of reduced-slot elements s and t, keyed by slot."""
        key = (s, t)
        cached = self._red_cache.get(key)
        if cached is None:
            raw = self.reduce(self.B.table[self.reps[s]][self.reps[t]])
            cached = {self.slot_of[k]: v for k, v in raw.items()}
            self._red_cache[key] = cached
        return cached

    @property
    def slot_of(self) -> dict:
        try:
            return self._slot_of
        except AttributeError:
            self._slot_of = {k: s for s, k in enumerate(self.reps)}
            return self._slot_of

    def columns(self, n: int):
        """Yield (tuple, boundary column) for every degree-n tuple, in
        lexicographic order; row keys index degree-(n-1) tuples."""
        B, f = self.B, self.B.field
        d, dbar, reps = self.d, self.dbar, self.reps
        pw = [dbar ** m for m in range(n)]  # pw[m] = dbar^m

        def first_key(w, rest):
            # rest: slot tuple of length n-1
            key = w * pw[n - 1]
            for k, s in enumerate(rest):
                key += s * pw[n - 2 - k]
            return key

        sign_n = 1 if n % 2 == 0 else -1
        for tup in iter_product(range(d), *([range(dbar)] * n)):
            t0 = tup[0]
            slots = tup[1:]
            col: dict = {}

            def bump(key, coeff):
                v = f.add(col.get(key, f.zero()), coeff)
                if v:
                    col[key] = v
                else:
                    col.pop(key, None)

            # face 0: multiply the first two factors, result stays in B
            for w, c in B.table[t0][reps[slots[0]]].items():
                bump(first_key(w, slots[1:]), c)
            # middle faces: reduced products
            sign = 1
            for i in range(1, n):
                sign = -sign
                prod = self.red_product(slots[i - 1], slots[i])
                if prod:
                    head = t0 * pw[n - 1]
                    base = head
                    for k in range(i - 1):
                        base += slots[k] * pw[n - 2 - k]
                    tail = 0
                    for k in range(i + 1, n):
                        tail += slots[k] * pw[n - 2 - (k - 1)]
                    for w_slot, c in prod.items():
                        key = base + w_slot * pw[n - 2 - (i - 1)] + tail
                        bump(key, c if sign > 0 else f.neg(c))
            # wrap face: a_n a_0 becomes the new first factor
            for w, c in B.table[reps[slots[-1]]][t0].items():
                bump(first_key(w, slots[:-1]),
                     c if sign_n > 0 else f.neg(c))
            yield tup, col


def chain_module(B: FDAlgebra, n: int, variant: str = "normalized") -> ChainModuleDescriptor:
    data = _BarData(B, variant)
    return ChainModuleDescriptor(degree=n, dimension=data.chain_dim(n), variant=variant)


def boundary_matrix(B: FDAlgebra, n: int, variant: str = "normalized",
                    cap: int = DEFAULT_TUPLE_CAP) -> ExactMatrix:
    """The matrix of the bar boundary from chain degree n to n-1."""
    if n < 1:
        raise ValueError("boundary_matrix needs degree n >= 1")
    data = _BarData(B, variant)
    for deg in (n - 1, n):
        size = data.chain_dim(deg)
        if size > cap:
            raise DimensionCapExceeded(deg, size, cap)
    m = ExactMatrix(data.chain_dim(n - 1), data.chain_dim(n), B.field)
    for idx, (_tup, col) in enumerate(data.columns(n)):
        if col:
            m.cols[idx] = col
    return m


def _boundary_rank(data: _BarData, n: int) -> int:
    eng = SparseRank(data.B.field.characteristic)
    for _tup, col in data.columns(n):
        if col:
            eng.add(col)
    return eng.rank


def hh_dims(B: FDAlgebra, n_max: int, variant: str = "normalized",
            cap: int = DEFAULT_TUPLE_CAP, label: str | None = None) -> HHReport:
    """dim HH_n for 0 <= n <= n_max.

    dim HH_0 = dim B - rank b_1 and, for n >= 1,
    dim HH_n = dim C_n - rank b_n - rank b_{n+1}.  If a chain module
    overflows the tuple cap the report is truncated at the last degree
    whose two boundary ranks both fit.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    data = _BarData(B, variant)
    ranks: dict[int, int] = {}
    truncated_at = None
    for n in range(1, n_max + 2):
        size = data.chain_dim(n)
        if size > cap:
            truncated_at = n
            break
        ranks[n] = _boundary_rank(data, n)
    dims = []
    for n in range(0, n_max + 1):
        if n + 1 not in ranks:
            break
        if n == 0:
            dims.append((0, data.d - ranks[1]))
        else:
            dims.append((n, data.chain_dim(n) - ranks[n] - ranks[n + 1]))
    return HHReport(algebra=label or B.label or "algebra", variant=variant,
                    n_max=n_max, dims=dims, truncated_at=truncated_at)


def boundary_squares_to_zero(B: FDAlgebra, n_max: int, variant: str = "normalized",
                             cap: int = DEFAULT_TUPLE_CAP) -> bool:
    """Check b_n . b_{n+1} = 0 as exact matrices for 1 <= n <= n_max."""
    for n in range(1, n_max + 1):
        bn = boundary_matrix(B, n, variant, cap)
        bn1 = boundary_matrix(B, n + 1, variant, cap)
        if not bn.matmul(bn1).is_zero():
            return False
    return True


def commutator_rank(B: FDAlgebra) -> int:
    """Rank of the span of all commutators of basis elements; an
    independent route to dim HH_0 = dim B - rank[B, B]."""
    eng = SparseRank(B.field.characteristic)
    f = B.field
    for i in range(B.dim):
        for j in range(B.dim):
            lhs = B.table[i][j]
            rhs = B.table[j][i]
            col = dict(lhs)
            for k, v in rhs.items():
                w = f.sub(col.get(k, f.zero()), v)
                if w:
                    col[k] = w
                else:
                    col.pop(k, None)
            if col:
                eng.add(col)
    return eng.rank
