"""Certificates of infinite Hochschild homology dimension.

Two one-directional criteria are implemented:

* a 2-truncated cycle: a cyclic sequence of arrows in which every
  consecutive product (including the wrap-around) is zero in the algebra;
  its existence forces the homology to be nonzero in all high degrees;
* over a field of characteristic zero, a graded Cartan determinant
  different from 1 for a positively graded algebra whose degree-0 part is
  spanned by the idempotents.

Absence of a certificate never proves finiteness; the verdict engine only
answers "infinite, with certificate" or "unknown".
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import (FDAlgebra, build_algebra, is_local, is_selfinjective)
from .dsl import Presentation
from .linalg import IntPolynomial, PolyMatrix, poly_det
from .trivial_extension import TrivialExtensionData, trivial_extension


@dataclass
class TruncatedCycleCertificate:
    """Arrows alpha_1..alpha_n composing cyclically, with each recorded
    product (later arrow times earlier arrow) evaluating to zero."""

    arrow_names: list
    arrow_indices: list
    base_vertex: str
    evaluations: list  # (later name, earlier name) pairs, products all zero

    @property
    def length(self) -> int:
        return len(self.arrow_names)

    def to_json(self):
        return {
            "kind": "two_truncated_cycle",
            "arrows": list(self.arrow_names),
            "base_vertex": self.base_vertex,
            "length": self.length,
            "zero_products": [{"later": a, "earlier": b} for a, b in self.evaluations],
        }


def zero_composition_graph(A: FDAlgebra) -> dict[int, list[int]]:
    """Directed graph on the arrow representatives: an edge a -> b means
    b can follow a (target of a = source of b) and the product b*a
    vanishes in the algebra."""
    adj: dict[int, list[int]] = {i: [] for i in range(len(A.arrows))}
    for i, a in enumerate(A.arrows):
        for j, b in enumerate(A.arrows):
            if a.target == b.source and not A.multiply(b.element(), a.element()):
                adj[i].append(j)
    return adj


def _tarjan_scc(nodes, adj):
    index = {}
    low = {}
    on_stack = set()
    stack = []
    comps = []
    counter = [0]
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(adj.get(root, ())))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(adj.get(w, ()))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def find_two_truncated_cycle(A: FDAlgebra, restrict_to_new: bool = False):
    """The lexicographically least minimum-length cycle in the
    zero-composition graph, re-verified by direct multiplication, or None.

    With `restrict_to_new` the search runs on the arrows lifted from the
    dual part of a trivial extension only.
    """
    full_adj = zero_composition_graph(A)
    if restrict_to_new:
        keep = {i for i, rep in enumerate(A.arrows) if rep.is_new}
        adj = {i: [j for j in full_adj[i] if j in keep] for i in keep}
        nodes = sorted(keep)
    else:
        adj = full_adj
        nodes = sorted(adj)

    comps = _tarjan_scc(nodes, adj)
    cyclic = set()
    for comp in comps:
        # a component of size > 1 is strongly connected, so every node of it
        # lies on a cycle; a singleton needs a self-loop
        if len(comp) > 1 or comp[0] in adj[comp[0]]:
            cyclic.update(comp)
    if not cyclic:
        return None

    # shortest return length per node
    best = None
    lengths = {}
    for v in sorted(cyclic):
        dist = _bfs_exact(adj, v)
        ln = dist.get(v)
        if ln:
            lengths[v] = ln
            if best is None or ln < best:
                best = ln
    start = min(v for v, ln in lengths.items() if ln == best)

    # reach[k] = nodes with a walk of exactly k edges to `start`
    reach = [set() for _ in range(best + 1)]
    reach[0] = {start}
    for k in range(1, best + 1):
        reach[k] = {v for v in adj if any(w in reach[k - 1] for w in adj[v])}

    seq = [start]
    cur = start
    for step in range(1, best):
        nxt = min(w for w in adj[cur] if w in reach[best - step])
        seq.append(nxt)
        cur = nxt
    assert start in adj[cur]

    reps = A.arrows
    names = [reps[i].name for i in seq]
    evaluations = []
    n = len(seq)
    for i in range(n):
        earlier = reps[seq[i]]
        later = reps[seq[(i + 1) % n]]
        if earlier.target != later.source:
            raise RuntimeError("cycle extraction produced a non-composable pair")
        if A.multiply(later.element(), earlier.element()):
            raise RuntimeError("cycle extraction produced a nonzero product")
        evaluations.append((later.name, earlier.name))
    return TruncatedCycleCertificate(
        arrow_names=names,
        arrow_indices=list(seq),
        base_vertex=A.vertex_names[reps[seq[0]].source],
        evaluations=evaluations)


def _bfs_exact(adj, target):
    """Shortest positive walk length from each node to `target`."""
    dist = {}
    frontier = [v for v in adj if target in adj[v]]
    for v in frontier:
        dist.setdefault(v, 1)
    k = 1
    while frontier:
        k += 1
        nxt = []
        seen = set(dist)
        for v in adj:
            if v in seen:
                continue
            if any(w in dist and dist[w] == k - 1 for w in adj[v]):
                dist[v] = k
                nxt.append(v)
        frontier = nxt
    return dist


def verify_cycle_certificate(A: FDAlgebra, cert: TruncatedCycleCertificate) -> bool:
    """Standalone re-check of a cycle certificate using only multiply."""
    by_name = {rep.name: rep for rep in A.arrows}
    reps = [by_name.get(name) for name in cert.arrow_names]
    if not reps or any(r is None for r in reps):
        return False
    n = len(reps)
    for i in range(n):
        earlier = reps[i]
        later = reps[(i + 1) % n]
        if earlier.target != later.source:
            return False
        if A.multiply(later.element(), earlier.element()):
            return False
    return True


# ---------------------------------------------------------------------------
# graded Cartan data


class CartanShapeError(RuntimeError):
    """The graded Cartan matrix of a graded trivial extension violates its
    forced shape; indicates an implementation bug."""


@dataclass
class GradedCartanData:
    r: int
    top_degree: int
    components: list            # integer matrices C^0..C^top
    matrix: PolyMatrix
    determinant: IntPolynomial

    def to_json(self):
        return {
            "r": self.r,
            "top_degree": self.top_degree,
            "components": self.components,
            "entries": [[str(self.matrix.get(i, j)) for j in range(self.r)]
                        for i in range(self.r)],
            "determinant": str(self.determinant),
            "determinant_coeffs": self.determinant.to_json(),
        }


def graded_cartan(A: FDAlgebra) -> GradedCartanData:
    """Component matrices (C^l)_{i,j} = dim e_j A_l e_i, the polynomial
    matrix C(x) = sum_l C^l x^l, and its exact determinant."""
    if A.degrees is None:
        raise ValueError("graded Cartan data needs a degree-tagged algebra")
    degree_zero = [k for k, dg in enumerate(A.degrees) if dg == 0]
    if sorted(degree_zero) != sorted(A.idempotent_indices):
        raise ValueError("the degree-0 part is not spanned by the idempotents")
    r = A.num_vertices
    s = A.top_degree
    comps = [[[0] * r for _ in range(r)] for _ in range(s + 1)]
    for k, (src, tgt) in enumerate(A.peirce):
        comps[A.degrees[k]][src][tgt] += 1
    entries = [[IntPolynomial([comps[l][i][j] for l in range(s + 1)])
                for j in range(r)] for i in range(r)]
    mat = PolyMatrix(entries)
    return GradedCartanData(r=r, top_degree=s, components=comps, matrix=mat,
                            determinant=poly_det(mat))


@dataclass
class CartanCriterionResult:
    fires: bool
    reason: str
    determinant: IntPolynomial | None = None


def cartan_criterion(g: GradedCartanData, characteristic: int) -> CartanCriterionResult:
    """Infinite homology dimension when det C(x) != 1, valid over
    characteristic zero only."""
    if characteristic != 0:
        return CartanCriterionResult(
            fires=False, reason="criterion requires characteristic zero",
            determinant=g.determinant)
    if g.determinant == IntPolynomial((1,)):
        return CartanCriterionResult(
            fires=False, reason="graded Cartan determinant equals 1",
            determinant=g.determinant)
    return CartanCriterionResult(
        fires=True,
        reason=f"graded Cartan determinant {g.determinant} differs from 1",
        determinant=g.determinant)


@dataclass
class DeterminantShapeReport:
    r: int
    top_degree: int
    corner_components_identity: bool
    offsets_zero_constant_term: bool
    offsets_degree_bounded: bool
    det_constant_term: int
    det_leading_coefficient: int
    det_degree: int
    expected_degree: int

    def to_json(self):
        return self.__dict__.copy()


def trivial_extension_determinant_shape(g: GradedCartanData) -> DeterminantShapeReport:
    """Verify the forced shape of the graded Cartan matrix of a graded
    trivial extension with top degree s+1: the degree-0 and top-degree
    components are identity matrices, each entry minus its forced diagonal
    part has zero constant term and degree at most s, and the determinant
    is monic of degree exactly r(s+1) with constant term 1."""
    r, top = g.r, g.top_degree
    ident = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    corners = g.components[0] == ident and g.components[top] == ident

    offsets_const = True
    offsets_deg = True
    for i in range(r):
        for j in range(r):
            p = g.matrix.get(i, j)
            if i == j:
                p = p - IntPolynomial((1,)) - IntPolynomial.x_power(top)
            if p.constant_term != 0:
                offsets_const = False
            if p.degree > top - 1:
                offsets_deg = False

    det = g.determinant
    report = DeterminantShapeReport(
        r=r, top_degree=top,
        corner_components_identity=corners,
        offsets_zero_constant_term=offsets_const,
        offsets_degree_bounded=offsets_deg,
        det_constant_term=det.constant_term,
        det_leading_coefficient=det.leading_coefficient,
        det_degree=det.degree,
        expected_degree=r * top)
    ok = (corners and offsets_const and offsets_deg
          and det.constant_term == 1 and det.leading_coefficient == 1
          and det.degree == r * top)
    if not ok:
        raise CartanShapeError(
            f"graded Cartan matrix of the trivial extension violates its "
            f"forced shape: {report}")
    return report


# ---------------------------------------------------------------------------
# the verdict engine


@dataclass
class CriterionOutcome:
    criterion: str
    outcome: str
    detail: str = ""


@dataclass
class Verdict:
    conclusion: str                       # "infinite_hhdim" | "unknown"
    certificate_kind: str | None
    cycle: TruncatedCycleCertificate | None
    cartan: GradedCartanData | None
    trace: list
    hypotheses: dict = dc_field(default_factory=dict)
    extension: TrivialExtensionData | None = None
    algebra: FDAlgebra | None = None

    @property
    def is_infinite(self) -> bool:
        return self.conclusion == "infinite_hhdim"

    def to_json(self):
        cert = None
        if self.certificate_kind == "two_truncated_cycle":
            cert = self.cycle.to_json()
        elif self.certificate_kind == "graded_cartan_determinant":
            cert = {"kind": "graded_cartan_determinant",
                    "determinant": str(self.cartan.determinant),
                    "determinant_coeffs": self.cartan.determinant.to_json()}
        return {
            "conclusion": self.conclusion,
            "certificate": cert,
            "trace": [{"criterion": t.criterion, "outcome": t.outcome,
                       "detail": t.detail} for t in self.trace],
            "hypotheses": self.hypotheses,
        }


def hhdim_verdict(obj, extend: bool = False, validate: bool = True) -> Verdict:
    """Run both criteria on the algebra (or on its trivial extension when
    `extend` is set) and assemble a sound verdict.

    The cycle criterion is consulted first; the Cartan criterion needs a
    grading and characteristic zero.  Both outcomes are always recorded in
    the trace.  Absence of certificates yields "unknown", never a claim of
    finiteness.
    """
    if isinstance(obj, Presentation):
        A = build_algebra(obj, validate=validate)
    else:
        A = obj
    hypotheses = {}
    extension = None
    if extend:
        hypotheses = {
            "local": is_local(A),
            "selfinjective": is_selfinjective(A),
            "graded": A.is_graded,
        }
        extension = trivial_extension(A, validate=validate)
        B = extension.T
    else:
        B = A

    trace = []
    cycle = find_two_truncated_cycle(B)
    trace.append(CriterionOutcome(
        criterion="two_truncated_cycle",
        outcome="certificate" if cycle else "none",
        detail=("cycle " + " ".join(cycle.arrow_names)) if cycle else
               "zero-composition graph is acyclic"))

    cartan_data = None
    cartan_fired = False
    if B.is_graded:
        cartan_data = graded_cartan(B)
        res = cartan_criterion(cartan_data, B.field.characteristic)
        cartan_fired = res.fires
        trace.append(CriterionOutcome(
            criterion="graded_cartan_determinant",
            outcome="certificate" if res.fires else "inconclusive",
            detail=res.reason))
    else:
        trace.append(CriterionOutcome(
            criterion="graded_cartan_determinant",
            outcome="inconclusive",
            detail="algebra carries no positive grading with semisimple "
                   "degree-0 part"))

    if cycle is not None:
        return Verdict(conclusion="infinite_hhdim",
                       certificate_kind="two_truncated_cycle",
                       cycle=cycle, cartan=cartan_data, trace=trace,
                       hypotheses=hypotheses, extension=extension, algebra=B)
    if cartan_fired:
        return Verdict(conclusion="infinite_hhdim",
                       certificate_kind="graded_cartan_determinant",
                       cycle=None, cartan=cartan_data, trace=trace,
                       hypotheses=hypotheses, extension=extension, algebra=B)
    return Verdict(conclusion="unknown", certificate_kind=None, cycle=None,
                   cartan=cartan_data, trace=trace, hypotheses=hypotheses,
                   extension=extension, algebra=B)
