"""Finite dimensional quiver algebras as exact structure constants.

An algebra kQ/I is realized on a basis of path normal forms.  Construction
proceeds by weight slices of the path algebra: when the relations are
homogeneous for some admissible weighting of the arrows (explicit degrees,
or path length), each weight slice of the ideal is echelonized
independently and the enumeration stops once a full window of consecutive
slices dies, which certifies that every longer path lies in the ideal.
Otherwise an explicit nilpotency bound is required and the ideal is
echelonized jointly on all paths up to the bound.

Radicals, socles, Loewy lengths and the structural predicates (local,
selfinjective, weak socle condition) are all plain exact linear algebra
over the ground field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dsl import Presentation
from .linalg import Echelon, ExactMatrix, GroundField, QuotientMap, row_reduce
from .quiver import Arrow, Path, Quiver, compose, paths_by_weight


class AlgebraBuildError(ValueError):
    pass


class AdmissibilityError(AlgebraBuildError):
    """The presentation could not be certified to give a finite
    dimensional algebra of the promised shape."""


@dataclass
class ArrowRep:
    """An arrow of the (extended) quiver together with its representative
    element in the algebra."""

    name: str
    source: int  # vertex indices
    target: int
    basis_index: int
    degree: int | None = None
    is_new: bool = False  # lifted from the dual part of a trivial extension

    def element(self) -> dict:
        return {self.basis_index: 1}


class FDAlgebra:
    """A finite dimensional algebra on a distinguished basis.

    `table[i][j]` holds the coordinates of basis_i * basis_j as a sparse
    dict; products follow function order, so basis_i * basis_j means
    "basis_j first".  The stationary idempotents are basis elements, every
    basis element lies in a single Peirce block (src, tgt), and arrows are
    represented by basis elements.
    """

    def __init__(self, field: GroundField, labels, vertex_names, idempotent_indices,
                 peirce, table, arrows, degrees=None, basis_paths=None,
                 bound_conditional=False, label=""):
        self.field = field
        self.dim = len(labels)
        self.basis_labels = list(labels)
        self.vertex_names = list(vertex_names)
        self.idempotent_indices = list(idempotent_indices)
        self.peirce = list(peirce)
        self.table = table
        self.arrows = list(arrows)
        self.degrees = list(degrees) if degrees is not None else None
        self.basis_paths = basis_paths
        self.bound_conditional = bound_conditional
        self.label = label

    # -- elements -----------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.idempotent_indices)

    @property
    def is_graded(self) -> bool:
        return self.degrees is not None

    @property
    def top_degree(self) -> int:
        if self.degrees is None:
            raise AlgebraBuildError("algebra carries no grading")
        return max(self.degrees)

    def basis_element(self, k: int) -> dict:
        return {k: self.field.one()}

    def idempotent(self, i: int) -> dict:
        return {self.idempotent_indices[i]: self.field.one()}

    def unit(self) -> dict:
        return {k: self.field.one() for k in self.idempotent_indices}

    def multiply(self, x: dict, y: dict) -> dict:
        """Bilinear extension of the structure constants (x*y, y first)."""
        f = self.field
        out: dict = {}
        for i, xi in x.items():
            for j, yj in y.items():
                c = f.mul(xi, yj)
                for k, ck in self.table[i][j].items():
                    v = f.add(out.get(k, f.zero()), f.mul(c, ck))
                    if v:
                        out[k] = v
                    else:
                        del out[k]
        return out

    def to_dense(self, x: dict) -> list:
        v = [self.field.zero()] * self.dim
        for k, c in x.items():
            v[k] = c
        return v

    def from_dense(self, v) -> dict:
        return {k: c for k, c in enumerate(v) if c}

    def radical_basis_indices(self) -> list[int]:
        idem = set(self.idempotent_indices)
        return [k for k in range(self.dim) if k not in idem]

    def element_str(self, x: dict) -> str:
        if not x:
            return "0"
        parts = []
        for k in sorted(x):
            c = self.field.to_str(x[k])
            parts.append(f"{c}*{self.basis_labels[k]}" if c != "1" else self.basis_labels[k])
        return " + ".join(parts)

    # -- structural checks ---------------------------------------------

    def check_associativity(self) -> bool:
        """(b_i b_j) b_k == b_i (b_j b_k) on all basis triples."""
        for i in range(self.dim):
            ei = self.basis_element(i)
            for j in range(self.dim):
                left = self.table[i][j]
                for k in range(self.dim):
                    lhs = self.multiply(left, self.basis_element(k))
                    rhs = self.multiply(ei, self.table[j][k])
                    if lhs != rhs:
                        return False
        return True

    def check_idempotents(self) -> bool:
        f = self.field
        one = self.unit()
        for a, ia in enumerate(self.idempotent_indices):
            for b, ib in enumerate(self.idempotent_indices):
                prod = self.table[ia][ib]
                want = {ia: f.one()} if a == b else {}
                if prod != want:
                    return False
        for k in range(self.dim):
            b = self.basis_element(k)
            if self.multiply(one, b) != b or self.multiply(b, one) != b:
                return False
        return True

    def check_peirce(self) -> bool:
        """Each basis element b satisfies b = e_tgt b e_src for its block."""
        for k, (src, tgt) in enumerate(self.peirce):
            b = self.basis_element(k)
            sandwich = self.multiply(self.idempotent(tgt),
                                     self.multiply(b, self.idempotent(src)))
            if sandwich != b:
                return False
            for i in range(self.num_vertices):
                for j in range(self.num_vertices):
                    if (i, j) == (src, tgt):
                        continue
                    if self.multiply(self.idempotent(j),
                                     self.multiply(b, self.idempotent(i))):
                        return False
        return True

    def check_graded_products(self) -> bool:
        if self.degrees is None:
            return True
        for i in range(self.dim):
            for j in range(self.dim):
                want = self.degrees[i] + self.degrees[j]
                for k in self.table[i][j]:
                    if self.degrees[k] != want:
                        return False
        return True

    def validate(self):
        if not self.check_idempotents():
            raise AlgebraBuildError("idempotent axioms fail")
        if not self.check_peirce():
            raise AlgebraBuildError("Peirce decomposition fails")
        if not self.check_associativity():
            raise AlgebraBuildError("multiplication is not associative")
        if not self.check_graded_products():
            raise AlgebraBuildError("products do not respect the grading")

    def __repr__(self):
        name = self.label or "FDAlgebra"
        return f"<{name}: dim {self.dim}, {self.num_vertices} vertices>"


class Subspace:
    """A subspace of the underlying vector space of an algebra."""

    def __init__(self, algebra: FDAlgebra, vectors=()):
        self.algebra = algebra
        self.echelon = Echelon(algebra.field, algebra.dim)
        for v in vectors:
            self.add(v)

    def add(self, vec) -> bool:
        if isinstance(vec, dict):
            vec = self.algebra.to_dense(vec)
        return self.echelon.add(vec)

    @property
    def dim(self) -> int:
        return self.echelon.rank

    def contains(self, vec) -> bool:
        if isinstance(vec, dict):
            vec = self.algebra.to_dense(vec)
        return self.echelon.contains(vec)

    def basis_dense(self) -> list[list]:
        return self.echelon.basis()

    def basis_sparse(self) -> list[dict]:
        return [self.algebra.from_dense(v) for v in self.echelon.basis()]

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.echelon.contains(v) for v in other.echelon.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.algebra is other.algebra
                and self.echelon.same_space(other.echelon))

    def __repr__(self):
        return f"<Subspace dim {self.dim} of {self.algebra!r}>"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    out = Subspace(a.algebra)
    for v in a.echelon.rows:
        out.add(list(v))
    for v in b.echelon.rows:
        out.add(list(v))
    return out


def span_products(left: Subspace, right: Subspace) -> Subspace:
    """The span of all products x*y with x in `left`, y in `right`."""
    A = left.algebra
    out = Subspace(A)
    for x in left.basis_sparse():
        for y in right.basis_sparse():
            out.add(A.multiply(x, y))
    return out


# ---------------------------------------------------------------------------
# construction of kQ/I


class _SliceQuotient:
    """One weight slice of kQ modulo the matching slice of the ideal."""

    def __init__(self, paths, echelon, basis_positions):
        self.paths = paths
        self.index = {p.label(): k for k, p in enumerate(paths)}
        self.echelon = echelon
        self.basis_positions = basis_positions  # non-pivot coordinates


def _relation_slice_vectors(field, relations, groups, w, path_index):
    """Ideal vectors p * rho * q of total weight w, as dense coordinate
    vectors on the weight-w paths."""
    vectors = []
    weights = sorted(groups)
    for rel in relations:
        wr = next(iter(rel.weights()))
        for wq in weights:
            wp = w - wr - wq
            if wp < 0 or wp not in groups:
                continue
            for q in groups[wq]:
                if q.end != rel.start:
                    continue
                for p in groups[wp]:
                    if p.start != rel.end:
                        continue
                    vec = [field.zero()] * len(path_index)
                    for c, t in rel.terms:
                        full = compose(p, compose(t, q))
                        vec[path_index[full.label()]] = field.add(
                            vec[path_index[full.label()]], c)
                    if any(vec):
                        vectors.append(vec)
    return vectors


def _build_homogeneous(pres: Presentation, max_weight: int):
    """Slice-by-slice quotient construction for homogeneous relations.

    Returns (slices, cutoff) where `slices[w]` describes the weight-w
    quotient slice and every path of weight >= cutoff lies in the ideal.
    """
    q, f = pres.quiver, pres.field
    window = max((a.degree or 1) for a in q.arrows) if q.arrows else 1
    groups: dict[int, list[Path]] = {0: [Path.stationary(v) for v in q.vertices]}
    slices: dict[int, _SliceQuotient] = {}
    stationary = groups[0]
    slices[0] = _SliceQuotient(stationary, Echelon(f, len(stationary)),
                               list(range(len(stationary))))
    streak = 0
    w = 0
    while streak < window:
        w += 1
        if w > max_weight:
            raise AdmissibilityError(
                f"no window of {window} empty weight slices up to weight "
                f"{max_weight}; the presentation may not define a finite "
                "dimensional algebra")
        bucket = []
        for a in q.arrows:
            da = a.degree if a.degree is not None else 1
            prev = groups.get(w - da, ())
            for p in prev:
                if p.start == a.target:
                    bucket.append(Path(a.source, p.end, (a,) + p.arrows))
        groups[w] = bucket
        path_index = {p.label(): k for k, p in enumerate(bucket)}
        ech = Echelon(f, len(bucket))
        for vec in _relation_slice_vectors(f, pres.relations, groups, w, path_index):
            ech.add(vec)
        pivots = set(ech.pivots)
        basis_positions = [k for k in range(len(bucket)) if k not in pivots]
        slices[w] = _SliceQuotient(bucket, ech, basis_positions)
        streak = streak + 1 if not basis_positions else 0
    cutoff = w - window + 1
    return slices, cutoff


def _build_bounded(pres: Presentation):
    """Joint truncated construction under an explicit nilpotency bound N.

    All paths of length <= N are coordinates; ideal vectors are the
    relation products truncated past length N.  The bound is rejected when
    the length-N slice of the quotient is nonzero, since the promised
    containment of the N-th radical power in the ideal would force it to
    vanish.  Correctness is otherwise conditional on that promise.
    """
    q, f, N = pres.quiver, pres.field, pres.nilpotency_bound
    groups = paths_by_weight(_unit_weight_quiver(q), N)
    order: list[Path] = []
    for w in sorted(groups):
        order.extend(groups[w])
    path_index = {p.label(): k for k, p in enumerate(order)}
    ech = Echelon(f, len(order))
    for rel in pres.relations:
        min_len = rel.min_length()
        for q_path in order:
            if q_path.end != rel.start or q_path.length + min_len > N:
                continue
            for p_path in order:
                if p_path.start != rel.end:
                    continue
                if q_path.length + min_len + p_path.length > N:
                    continue
                vec = [f.zero()] * len(order)
                for c, t in rel.terms:
                    total = q_path.length + t.length + p_path.length
                    if total > N:
                        continue  # truncated: lies in the N+1st radical power
                    full = compose(p_path, compose(t, q_path))
                    k = path_index[full.label()]
                    vec[k] = f.add(vec[k], c)
                if any(vec):
                    ech.add(vec)
    pivots = set(ech.pivots)
    basis_positions = [k for k in range(len(order)) if k not in pivots]
    for k in basis_positions:
        if order[k].length >= N:
            raise AdmissibilityError(
                f"nilpotency bound {N} is too small: the path {order[k].label()} "
                f"of length {N} does not vanish, so the promised containment of "
                "the N-th radical power in the ideal is unverifiable")
    return order, path_index, ech, basis_positions


def _unit_weight_quiver(q: Quiver) -> Quiver:
    if not q.is_graded:
        return q
    return Quiver(q.vertices, [Arrow(a.name, a.source, a.target) for a in q.arrows])


def build_algebra(pres: Presentation, *, max_weight: int = 256,
                  validate: bool = True, label: str = "") -> FDAlgebra:
    """Construct A = kQ/I with exact structure constants.

    If the quiver carries arrow degrees the relations must be homogeneous
    for them; otherwise the path-length grading is tried; otherwise the
    presentation must supply a nilpotency bound.  The resulting basis
    consists of path normal forms, carries degree tags in the homogeneous
    cases, and always contains the stationary idempotents and the arrows.
    """
    q, f = pres.quiver, pres.field
    if not q.vertices:
        raise AlgebraBuildError("a quiver needs at least one vertex")

    graded_mode = None
    if q.is_graded:
        for rel in pres.relations:
            if len(rel.weights()) != 1:
                raise AlgebraBuildError(
                    f"relation {rel.label()} is not homogeneous in the "
                    "given arrow degrees")
        graded_mode = "degrees"
    elif all(len({p.length for _, p in rel.terms}) == 1 for rel in pres.relations):
        graded_mode = "length"
    elif pres.nilpotency_bound is None:
        raise AlgebraBuildError(
            "relations are inhomogeneous in every available grading and no "
            "nilpotency_bound was given")

    basis_paths: list[Path] = []
    degrees: list[int] | None = None
    bound_conditional = False

    if graded_mode:
        slices, cutoff = _build_homogeneous(pres, max_weight)
        degrees = []
        for w in sorted(slices):
            sl = slices[w]
            for k in sl.basis_positions:
                basis_paths.append(sl.paths[k])
                degrees.append(w)

        def normal_form(path: Path) -> dict:
            w = path.weight()
            if w >= cutoff or w not in slices:
                return {}
            sl = slices[w]
            vec = [f.zero()] * len(sl.paths)
            vec[sl.index[path.label()]] = f.one()
            res = sl.echelon.reduce(vec)
            out = {}
            for k in sl.basis_positions:
                if res[k]:
                    out[global_index[sl.paths[k].label()]] = res[k]
            return out
    else:
        order, path_index, ech, basis_positions = _build_bounded(pres)
        basis_paths = [order[k] for k in basis_positions]
        bound_conditional = True
        N = pres.nilpotency_bound

        def normal_form(path: Path) -> dict:
            if path.length > N:
                return {}
            vec = [f.zero()] * len(order)
            vec[path_index[path.label()]] = f.one()
            res = ech.reduce(vec)
            out = {}
            for k in basis_positions:
                if res[k]:
                    out[global_index[order[k].label()]] = res[k]
            return out

    global_index = {p.label(): k for k, p in enumerate(basis_paths)}
    labels = [p.label() for p in basis_paths]
    vertex_of = q.vertex_index
    idempotent_indices = [global_index[Path.stationary(v).label()] for v in q.vertices]
    peirce = [(vertex_of[p.start], vertex_of[p.end]) for p in basis_paths]

    d = len(basis_paths)
    table = [[None] * d for _ in range(d)]
    for i, pi in enumerate(basis_paths):
        for j, pj in enumerate(basis_paths):
            if pj.end != pi.start:
                table[i][j] = {}
            else:
                table[i][j] = normal_form(compose(pi, pj))

    arrow_reps = []
    for a in q.arrows:
        arrow_reps.append(ArrowRep(
            name=a.name,
            source=vertex_of[a.source],
            target=vertex_of[a.target],
            basis_index=global_index[Path.of_arrow(a).label()],
            degree=a.degree if q.is_graded else (1 if graded_mode == "length" else None),
            is_new=False))

    A = FDAlgebra(field=f, labels=labels, vertex_names=list(q.vertices),
                  idempotent_indices=idempotent_indices, peirce=peirce,
                  table=table, arrows=arrow_reps, degrees=degrees,
                  basis_paths=basis_paths, bound_conditional=bound_conditional,
                  label=label)
    if validate:
        A.validate()
    return A


# ---------------------------------------------------------------------------
# radical, socles, Loewy structure


def radical_subspace(A: FDAlgebra) -> Subspace:
    """The radical: span of the non-idempotent basis elements.

    For the algebras this package constructs (path normal forms, or dual
    extensions of such), this span is a two-sided nilpotent ideal with
    semisimple quotient of dimension = number of vertices, which pins it
    down as the Jacobson radical; nilpotency is verified by
    `loewy_length`.
    """
    return Subspace(A, [{k: A.field.one()} for k in A.radical_basis_indices()])


def radical_power(A: FDAlgebra, m: int) -> Subspace:
    if m < 1:
        raise ValueError("radical power needs m >= 1")
    chain = radical_chain(A, m)
    return chain[m] if m < len(chain) else chain[-1]


def radical_chain(A: FDAlgebra, m_max: int | None = None) -> list[Subspace]:
    """[A, rad, rad^2, ...] down to the first zero power (inclusive)."""
    chain = [Subspace(A, [{k: A.field.one()} for k in range(A.dim)])]
    rad = radical_subspace(A)
    chain.append(rad)
    while chain[-1].dim > 0:
        if m_max is not None and len(chain) > m_max:
            break
        nxt = span_products(rad, chain[-1])
        if nxt.dim >= chain[-1].dim:
            raise AlgebraBuildError(
                "the span of non-idempotent basis elements is not nilpotent; "
                "the algebra is not of the promised shape")
        chain.append(nxt)
    return chain


def trace_form_radical(A: FDAlgebra) -> Subspace:
    """The radical computed intrinsically as the kernel of the trace form
    (x, y) -> trace of left multiplication by x*y; valid in characteristic
    zero, where this kernel is the Jacobson radical.  Serves as an
    independent cross-check of `radical_subspace`."""
    if A.field.characteristic != 0:
        raise ValueError("the trace-form radical requires characteristic zero")
    f = A.field
    # trace of L_{b_k}: the (j, j) coordinate of b_k * b_j summed over j
    traces = []
    for k in range(A.dim):
        t = f.zero()
        for j in range(A.dim):
            t = f.add(t, A.table[k][j].get(j, f.zero()))
        traces.append(t)
    gram = ExactMatrix(A.dim, A.dim, f)
    for i in range(A.dim):
        for j in range(A.dim):
            v = f.zero()
            for k, c in A.table[i][j].items():
                v = f.add(v, f.mul(c, traces[k]))
            gram.set(i, j, v)
    red = row_reduce(gram)
    return Subspace(A, [A.from_dense(v) for v in red.kernel_basis])


def loewy_length(A: FDAlgebra) -> int:
    """Least m with rad^m = 0."""
    chain = radical_chain(A)
    return len(chain) - 1


def vertex_loewy_lengths(A: FDAlgebra) -> list[int]:
    """Loewy length of each projective left module Ae_i."""
    chain = radical_chain(A)
    out = []
    for i in range(A.num_vertices):
        cols = [k for k, (src, _tgt) in enumerate(A.peirce) if src == i]
        length = 0
        for m, sub in enumerate(chain):
            restricted = Echelon(A.field, A.dim)
            for row in sub.echelon.rows:
                v = [A.field.zero()] * A.dim
                for k in cols:
                    v[k] = row[k]
                restricted.add(v)
            if restricted.rank == 0:
                length = m
                break
        out.append(length)
    return out


@dataclass
class SocleData:
    left: list[Subspace]       # socle of Ae_i, one per vertex
    right: list[Subspace]      # socle of e_jA, one per vertex
    bimodule: Subspace         # socle of A as a bimodule

    def left_total(self) -> Subspace:
        total = Subspace(self.bimodule.algebra)
        for s in self.left:
            for v in s.echelon.rows:
                total.add(list(v))
        return total


def _annihilator(A: FDAlgebra, columns, left=True, right=True) -> list[dict]:
    """Kernel vectors on the given coordinate set of the stacked
    multiplication maps by all arrow representatives."""
    f = A.field
    rows_per_arrow = A.dim
    matrices = []
    for rep in A.arrows:
        a = rep.element()
        for side in (("L",) if left and not right else
                     ("R",) if right and not left else ("L", "R")):
            m = ExactMatrix(rows_per_arrow, len(columns), f)
            for cidx, k in enumerate(columns):
                b = A.basis_element(k)
                prod = A.multiply(a, b) if side == "L" else A.multiply(b, a)
                for rk, cv in prod.items():
                    m.set(rk, cidx, cv)
            matrices.append(m)
    if not matrices:
        return [{k: f.one()} for k in columns]
    stacked = ExactMatrix(len(matrices) * rows_per_arrow, len(columns), f)
    for block, m in enumerate(matrices):
        off = block * rows_per_arrow
        for c, col in enumerate(m.cols):
            for r, v in col.items():
                stacked.set(off + r, c, v)
    red = row_reduce(stacked)
    out = []
    for kvec in red.kernel_basis:
        out.append({columns[c]: v for c, v in enumerate(kvec) if v})
    return out


def socles(A: FDAlgebra) -> SocleData:
    """Left socles of the Ae_i, right socles of the e_jA, and the socle of
    A as a bimodule, each as the joint kernel of multiplication by the
    arrow representatives on the appropriate side."""
    left = []
    for i in range(A.num_vertices):
        cols = [k for k, (src, _t) in enumerate(A.peirce) if src == i]
        left.append(Subspace(A, _annihilator(A, cols, left=True, right=False)))
    right = []
    for j in range(A.num_vertices):
        cols = [k for k, (_s, tgt) in enumerate(A.peirce) if tgt == j]
        right.append(Subspace(A, _annihilator(A, cols, left=False, right=True)))
    bimodule = Subspace(A, _annihilator(A, list(range(A.dim)), left=True, right=True))
    return SocleData(left=left, right=right, bimodule=bimodule)


def is_local(A: FDAlgebra) -> bool:
    """True iff there is a single primitive idempotent (one vertex)."""
    return A.num_vertices == 1


def left_socle_in_bimodule_socle(A: FDAlgebra) -> bool:
    data = socles(A)
    return data.bimodule.contains_space(data.left_total())


@dataclass
class SelfinjectivityCertificate:
    permutation: tuple[int, ...]       # i -> pi(i), vertex indices
    loewy_lengths: tuple[int, ...]
    socle_dims: tuple[int, ...]        # dim of right socle of e_{pi(i)}A (all 1)
    dimension_pairs: tuple[tuple[int, int], ...]  # (dim Ae_i, dim e_{pi(i)}A)


@dataclass
class SelfinjectivityRefusal:
    vertex: int
    reason: str


def selfinjectivity(A: FDAlgebra):
    """A Nakayama permutation pi with Ae_i isomorphic to D(e_{pi(i)}A), or a
    refusal naming the first vertex where the search fails.

    The test used: j qualifies for i iff dim Ae_i = dim e_jA and the right
    socle of e_jA is one dimensional of simple type S_i.  A lift of the
    dual top generator then gives a surjection Ae_i -> D(e_jA) which the
    dimension count makes an isomorphism.
    """
    data = socles(A)
    left_dims = [sum(1 for s, _t in A.peirce if s == i) for i in range(A.num_vertices)]
    right_dims = [sum(1 for _s, t in A.peirce if t == j) for j in range(A.num_vertices)]
    socle_type = []
    for j in range(A.num_vertices):
        soc = data.right[j]
        if soc.dim != 1:
            socle_type.append(None)
            continue
        vec = soc.basis_sparse()[0]
        srcs = {A.peirce[k][0] for k in vec}
        socle_type.append(srcs.pop() if len(srcs) == 1 else None)

    candidates = []
    for i in range(A.num_vertices):
        cand = [j for j in range(A.num_vertices)
                if socle_type[j] == i and right_dims[j] == left_dims[i]]
        if not cand:
            reasons = []
            for j in range(A.num_vertices):
                if socle_type[j] == i:
                    reasons.append(f"dim Ae_{A.vertex_names[i]} = {left_dims[i]} != "
                                   f"dim e_{A.vertex_names[j]}A = {right_dims[j]}")
            reason = (reasons[0] if reasons else
                      f"no indecomposable projective has simple right socle of "
                      f"type S_{A.vertex_names[i]}")
            return SelfinjectivityRefusal(vertex=i, reason=reason)
        candidates.append(cand)

    perm = _lex_least_matching(candidates)
    if perm is None:
        return SelfinjectivityRefusal(
            vertex=0, reason="socle types do not admit a bijective assignment")
    lls = vertex_loewy_lengths(A)
    return SelfinjectivityCertificate(
        permutation=tuple(perm),
        loewy_lengths=tuple(lls),
        socle_dims=tuple(data.right[perm[i]].dim for i in range(A.num_vertices)),
        dimension_pairs=tuple((left_dims[i], right_dims[perm[i]])
                              for i in range(A.num_vertices)))


def is_selfinjective(A: FDAlgebra) -> bool:
    return isinstance(selfinjectivity(A), SelfinjectivityCertificate)


def _lex_least_matching(candidates):
    r = len(candidates)
    used = [False] * r
    pick = [None] * r

    def search(i):
        if i == r:
            return True
        for j in candidates[i]:
            if not used[j]:
                used[j] = True
                pick[i] = j
                if search(i + 1):
                    return True
                used[j] = False
        return False

    return pick if search(0) else None


def quiver_of(A: FDAlgebra):
    """The quiver of A read off from rad/rad^2, with arrow representatives.

    The number of arrows i -> j is dim e_j (rad/rad^2) e_i; the
    representatives are the basis elements at the free coordinates of the
    rad^2 slice inside each Peirce block of the radical.
    """
    f = A.field
    rad = radical_subspace(A)
    rad2 = span_products(rad, rad)
    reps: list[ArrowRep] = []
    for k_src in range(A.num_vertices):
        for k_tgt in range(A.num_vertices):
            idem = set(A.idempotent_indices)
            block = [k for k, (s, t) in enumerate(A.peirce)
                     if (s, t) == (k_src, k_tgt) and k not in idem]
            if not block:
                continue
            sub_rows = []
            for row in rad2.echelon.rows:
                v = [row[k] for k in block]
                if any(v):
                    sub_rows.append(v)
            qmap = QuotientMap(f, len(block), sub_rows)
            for c in qmap.free_columns:
                k = block[c]
                reps.append(ArrowRep(
                    name=A.basis_labels[k], source=k_src, target=k_tgt,
                    basis_index=k,
                    degree=A.degrees[k] if A.degrees is not None else None))
    arrows = [Arrow(rep.name, A.vertex_names[rep.source], A.vertex_names[rep.target],
                    rep.degree) for rep in reps]
    degs = [a.degree for a in arrows]
    if any(d is None for d in degs):
        arrows = [Arrow(a.name, a.source, a.target) for a in arrows]
        reps = [ArrowRep(rp.name, rp.source, rp.target, rp.basis_index, None,
                         rp.is_new) for rp in reps]
    return Quiver(A.vertex_names, arrows), reps
