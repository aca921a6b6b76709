"""The trivial extension T(A) = A ⋉ DA and its extended quiver.

T(A) lives on A ⊕ DA with multiplication (a,f)(b,g) = (ab, ag + fb), where
the bimodule actions on the dual are (a·f)(y) = f(ya) and (f·b)(y) = f(by).
On the distinguished basis this makes the dual basis element of b = e_j b e_i
sit in the Peirce block e_i T e_j, so the dual part contributes arrows in the
opposite direction.

The quiver of T(A) has the same vertices as A; its arrows are the arrows of
A together with one new arrow i -> j for every basis vector of
e_j(D soc)e_i, where soc is the socle of A as a bimodule.  The chosen
representative of a new arrow is the dual functional of a pivot of the
reduced echelon basis of e_i(soc)e_j, extended by zero off that basis path;
this makes both the arrow set and the representatives deterministic.  The
extended quiver itself is an invariant of T(A); the relation ideal extracted
by `relations_up_to` may depend on these choices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (AlgebraBuildError, ArrowRep, FDAlgebra, loewy_length,
                      socles)
from .dsl import RelationExpr
from .linalg import Echelon, ExactMatrix, row_reduce
from .quiver import Arrow, Path, Quiver, compose


@dataclass
class NewArrow:
    name: str
    source: int              # vertex indices, arrow runs source -> target
    target: int
    dual_of: int             # basis index b of A; the representative is b*
    t_basis_index: int       # index of b* in T(A)'s basis
    degree: int | None = None

    def x_beta(self):
        return {self.t_basis_index: 1}


class TrivialExtensionData:
    """T(A) with part tags, the surjection onto D(soc), and the new arrows."""

    def __init__(self, base: FDAlgebra, T: FDAlgebra, new_arrows, socle_basis,
                 xi_matrix):
        self.base = base
        self.T = T
        self.new_arrows = list(new_arrows)
        self.socle_basis = socle_basis      # echelon basis of soc_{A^e} A
        self.xi_matrix = xi_matrix          # DA coords -> D(soc) coords
        d = base.dim
        self.a_part = list(range(d))
        self.da_part = list(range(d, 2 * d))

    @property
    def dim(self) -> int:
        return self.T.dim

    def dual_index(self, k: int) -> int:
        """Index pairing the A-part and DA-part copies of basis slot k."""
        d = self.base.dim
        return k + d if k < d else k - d

    def part_of(self, k: int) -> str:
        return "A" if k < self.base.dim else "DA"

    def old_arrows(self):
        return [rep for rep in self.T.arrows if not rep.is_new]

    def new_arrow_reps(self):
        return [rep for rep in self.T.arrows if rep.is_new]

    def phi(self, path: Path) -> dict:
        """Evaluate a path of the extended quiver in T(A)."""
        try:
            by_name = self._arrow_by_name
        except AttributeError:
            by_name = self._arrow_by_name = {rep.name: rep for rep in self.T.arrows}
        if path.is_stationary:
            v = self.base.vertex_names.index(path.start)
            return self.T.idempotent(v)
        out = None
        for a in path.arrows:
            el = by_name[a.name].element()
            out = el if out is None else self.T.multiply(el, out)
        return out

    def symmetric_form(self, u: dict, v: dict):
        """The associative symmetric form <(a,f),(b,g)> = f(b) + g(a)."""
        f = self.T.field
        d = self.base.dim
        total = f.zero()
        for k, x in u.items():
            y = v.get(self.dual_index(k))
            if y is not None:
                total = f.add(total, f.mul(x, y))
        return total


def trivial_extension(A: FDAlgebra, *, validate: bool = True,
                      label: str = "") -> TrivialExtensionData:
    """Build T(A) = A ⋉ DA with exact structure constants.

    The basis is the basis of A followed by its dual basis; products of two
    dual-part elements vanish.  When A is graded with top degree s, T(A) is
    graded by keeping the degrees on A and giving the dual of a degree-l
    basis element degree s+1-l (including l = 0), so T(A) has top degree
    s+1.
    """
    f = A.field
    d = A.dim
    dim = 2 * d

    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for u in range(d):
        for v in range(d):
            table[u][v] = dict(A.table[u][v])
    for u in range(d):
        for v in range(d):
            # (b_u, 0) * (0, b_v*): the functional y |-> b_v*(y b_u)
            col = {}
            for w in range(d):
                c = A.table[w][u].get(v)
                if c:
                    col[d + w] = c
            table[u][d + v] = col
            # (0, b_v*) * (b_u, 0): the functional y |-> b_v*(b_u y)
            col = {}
            for w in range(d):
                c = A.table[u][w].get(v)
                if c:
                    col[d + w] = c
            table[d + v][u] = col

    labels = list(A.basis_labels) + [lab + "*" for lab in A.basis_labels]
    peirce = list(A.peirce) + [(tgt, src) for (src, tgt) in A.peirce]
    degrees = None
    if A.degrees is not None:
        s = max(A.degrees)
        degrees = list(A.degrees) + [s + 1 - l for l in A.degrees]

    soc = socles(A).bimodule
    socle_rows = soc.basis_dense()

    # one new arrow i -> j per pivot of the reduced echelon basis of
    # e_i(soc)e_j; its representative is the dual of the pivot basis path
    new_arrows: list[NewArrow] = []
    counter = 0
    for i in range(A.num_vertices):
        for j in range(A.num_vertices):
            block = [k for k, (src, tgt) in enumerate(A.peirce)
                     if (src, tgt) == (j, i)]  # e_i A e_j: paths j -> i
            if not block:
                continue
            ech = Echelon(f, len(block))
            for row in socle_rows:
                ech.add([row[k] for k in block])
            for pivot in ech.pivots:
                counter += 1
                b = block[pivot]
                new_arrows.append(NewArrow(
                    name=labels[d + b],
                    source=i, target=j,
                    dual_of=b, t_basis_index=d + b,
                    degree=degrees[d + b] if degrees is not None else None))

    arrows = []
    for rep in A.arrows:
        arrows.append(ArrowRep(rep.name, rep.source, rep.target,
                               rep.basis_index, rep.degree, is_new=False))
    for na in new_arrows:
        arrows.append(ArrowRep(na.name, na.source, na.target,
                               na.t_basis_index, na.degree, is_new=True))

    T = FDAlgebra(field=f, labels=labels, vertex_names=A.vertex_names,
                  idempotent_indices=list(A.idempotent_indices), peirce=peirce,
                  table=table, arrows=arrows, degrees=degrees,
                  basis_paths=None, label=label or (f"T({A.label})" if A.label else ""))
    if validate:
        T.validate()

    xi = ExactMatrix(len(socle_rows), d, f)
    for t, row in enumerate(socle_rows):
        for u, c in enumerate(row):
            if c:
                xi.set(t, u, c)

    return TrivialExtensionData(base=A, T=T, new_arrows=new_arrows,
                                socle_basis=socle_rows, xi_matrix=xi)


def graded_trivial_extension(A: FDAlgebra, **kw) -> TrivialExtensionData:
    """Trivial extension of a graded algebra, carrying the induced grading."""
    if A.degrees is None:
        raise AlgebraBuildError("the algebra carries no grading")
    return trivial_extension(A, **kw)


def new_arrows(tri: TrivialExtensionData) -> list[NewArrow]:
    return list(tri.new_arrows)


def extended_quiver(tri: TrivialExtensionData) -> Quiver:
    """The quiver of T(A): the arrows of A plus the new arrows."""
    names = tri.base.vertex_names
    graded = tri.T.degrees is not None
    arrows = []
    for rep in tri.T.arrows:
        arrows.append(Arrow(rep.name, names[rep.source], names[rep.target],
                            rep.degree if graded else None))
    return Quiver(names, arrows)


def check_new_products_vanish(tri: TrivialExtensionData) -> bool:
    """Products of any two composable new arrows vanish in T(A) (the dual
    part has square zero)."""
    reps = tri.new_arrow_reps()
    for b2 in reps:
        for b1 in reps:
            if b1.target == b2.source:
                if tri.T.multiply(b2.element(), b1.element()):
                    return False
    return True


@dataclass
class RelationSet:
    generators: list            # RelationExpr over the extended quiver
    cap: int
    quotient_dim: int | None    # dim of kQ~ modulo the generated ideal
    complete: bool              # quotient_dim == dim T(A)

    def __iter__(self):
        return iter(self.generators)


def relations_up_to(tri: TrivialExtensionData, cap: int | None = None) -> RelationSet:
    """Length-homogeneous generators of the kernel of the evaluation map
    from the extended path algebra onto T(A), found per length <= cap.

    For each length l and each Peirce block, a basis of the kernel of the
    evaluation on length-l paths is reduced modulo the products p * g * q
    of previously found generators; the new vectors become generators.
    The returned record also reports the dimension of the quotient by the
    generated ideal: if it equals dim T(A) the generator set presents the
    algebra.  (Kernel elements mixing several path lengths, which occur
    when the relations of A are not homogeneous in path length, are not
    captured by this length-sliced search; the completeness flag then
    reports the deficit.)
    """
    ll = loewy_length(tri.T)
    if cap is None:
        cap = ll
    if cap < 2:
        raise ValueError("relation cap must be >= 2")
    qext = extended_quiver(tri)
    T = tri.T
    f = T.field

    by_length: dict[int, list[Path]] = {0: [Path.stationary(v) for v in qext.vertices]}
    gens: list[RelationExpr] = []
    quotient_dims = [len(by_length[0])]

    max_probe = max(cap, 3 * ll + 3)
    for length in range(1, max_probe + 1):
        layer = []
        for a in qext.arrows:
            for p in by_length[length - 1]:
                if p.start == a.target:
                    layer.append(Path(a.source, p.end, (a,) + p.arrows))
        by_length[length] = layer
        if not layer:
            break
        if len(layer) > 20_000:
            # runaway path growth (cap far below the Loewy length); give up
            # on the quotient dimension rather than thrash
            return RelationSet(generators=gens, cap=cap, quotient_dim=None,
                               complete=False)

        index = {p.label(): k for k, p in enumerate(layer)}
        ideal = Echelon(f, len(layer))
        for g in gens:
            glen = g.terms[0][1].length
            for lq in range(0, length - glen + 1):
                lp = length - glen - lq
                for qp in by_length.get(lq, ()):  # right factor, applied first
                    if qp.end != g.start:
                        continue
                    for pp in by_length.get(lp, ()):
                        if pp.start != g.end:
                            continue
                        vec = [f.zero()] * len(layer)
                        for c, gpath in g.terms:
                            full = compose(pp, compose(gpath, qp))
                            k = index[full.label()]
                            vec[k] = f.add(vec[k], c)
                        if any(vec):
                            ideal.add(vec)

        if 2 <= length <= cap:
            for vec in _slice_kernel(tri, layer):
                if ideal.add(vec):
                    terms = tuple((c, p) for c, p in zip(vec, layer) if c)
                    gens.append(RelationExpr(terms))

        quotient_dims.append(len(layer) - ideal.rank)
        if quotient_dims[-1] == 0:
            # every longer path lies in the generated ideal, so the
            # quotient dimension is exact and the search is finished
            return RelationSet(generators=gens, cap=cap,
                               quotient_dim=sum(quotient_dims),
                               complete=(sum(quotient_dims) == T.dim))

    if not by_length[max(by_length)]:
        total = sum(quotient_dims)
        return RelationSet(generators=gens, cap=cap, quotient_dim=total,
                           complete=(total == T.dim))
    # probe limit hit without a dead slice: dimension left undetermined
    return RelationSet(generators=gens, cap=cap, quotient_dim=None, complete=False)


def _slice_kernel(tri: TrivialExtensionData, layer):
    """Basis of the kernel of the evaluation map on one length slice,
    computed per Peirce block so every kernel vector is a combination of
    parallel paths."""
    f = tri.T.field
    blocks: dict[tuple, list[int]] = {}
    for k, p in enumerate(layer):
        blocks.setdefault((p.start, p.end), []).append(k)
    out = []
    for key in sorted(blocks):
        cols = blocks[key]
        m = ExactMatrix(tri.T.dim, len(cols), f)
        for c, k in enumerate(cols):
            for rk, cv in tri.phi(layer[k]).items():
                m.set(rk, c, cv)
        red = row_reduce(m)
        for kvec in red.kernel_basis:
            vec = [f.zero()] * len(layer)
            for c, v in enumerate(kvec):
                vec[cols[c]] = v
            out.append(vec)
    return out
