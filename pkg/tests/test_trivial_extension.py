"""T(A) = A ⋉ DA: structure constants, extended quiver, relations."""

import pytest

from trivext.algebra import (build_algebra, loewy_length, radical_subspace,
                             selfinjectivity, SelfinjectivityCertificate,
                             left_socle_in_bimodule_socle, Subspace,
                             span_products, subspace_sum)
from trivext.dsl import parse_presentation
from trivext.trivial_extension import (check_new_products_vanish, extended_quiver,
                                       graded_trivial_extension, new_arrows,
                                       relations_up_to, trivial_extension)


def build(text, **kw):
    return build_algebra(parse_presentation(text), **kw)


def test_extension_of_ground_field_is_dual_numbers():
    k = build("field Q\nvertices v\n")
    tri = trivial_extension(k)
    T = tri.T
    assert T.dim == 2
    beta = tri.new_arrows
    assert len(beta) == 1
    b = beta[0]
    assert (b.source, b.target) == (0, 0)
    x = b.x_beta()
    assert T.multiply(x, x) == {}  # the dual part squares to zero
    # compare with k[x]/(x^2) by matching structure constants on (1, beta)
    dual = build("field Q\nvertices v\narrow x : v -> v\nrelation x*x\n")
    assert [sorted(T.table[i][j].items()) for i in range(2) for j in range(2)] == \
        [sorted(dual.table[i][j].items()) for i in range(2) for j in range(2)]


def test_dual_action_on_dual_numbers():
    # in T(k[x]/(x^2)): (0, x*) . (x, 0) = (0, e*) and (x, 0) . (0, x*) = (0, e*)
    A = build("field Q\nvertices v\narrow x : v -> v\nrelation x*x\n")
    tri = trivial_extension(A)
    T = tri.T
    lab = T.basis_labels
    x = {lab.index("x"): 1}
    xstar = {lab.index("x*"): 1}
    estar = {lab.index("e_v*"): T.field.one()}
    assert T.multiply(xstar, x) == estar
    assert T.multiply(x, xstar) == estar


def test_extension_dimensions(algebras):
    for name, A in algebras.items():
        T = trivial_extension(A).T
        assert T.dim == 2 * A.dim, name


def test_new_arrows_examples(algebras, extensions):
    k_ext = extensions["semisimple_k"]
    assert [(n.source, n.target) for n in k_ext.new_arrows] == [(0, 0)]

    a2_ext = extensions["path_a2"]
    assert len(a2_ext.new_arrows) == 1
    na = a2_ext.new_arrows[0]
    A = algebras["path_a2"]
    assert (A.vertex_names[na.source], A.vertex_names[na.target]) == ("2", "1")
    assert a2_ext.T.basis_labels[na.t_basis_index] == "a*"

    nak = extensions["nakayama_cycle_2"]
    pairs = {(nak.base.vertex_names[n.source], nak.base.vertex_names[n.target])
             for n in nak.new_arrows}
    assert pairs == {("1", "2"), ("2", "1")}


def test_new_arrow_images_form_socle_dual_basis(extensions):
    # xi(x_beta) must be linearly independent of the right cardinality:
    # the chosen representatives are dual functionals of echelon pivots,
    # so applying xi (restriction to the socle) gives a unit triangular
    # family; check via the xi matrix columns
    for name, tri in extensions.items():
        m = tri.xi_matrix
        soc_dim = len(tri.socle_basis)
        assert len(tri.new_arrows) == soc_dim, name
        cols = []
        for na in tri.new_arrows:
            col = [m.get(t, na.dual_of) for t in range(soc_dim)]
            cols.append(col)
        from trivext.linalg import ExactMatrix, row_reduce
        if soc_dim:
            mat = ExactMatrix.from_rows(cols, tri.T.field)
            assert row_reduce(mat).rank == soc_dim, name


def test_extended_quiver_examples(extensions):
    q = extended_quiver(extensions["semisimple_k"])
    assert len(q.vertices) == 1 and len(q.arrows) == 1

    q = extended_quiver(extensions["dual_numbers"])
    assert len(q.arrows) == 2  # one old loop, one new loop

    q = extended_quiver(extensions["path_a2"])
    assert {(a.name, a.source, a.target) for a in q.arrows} == \
        {("a", "1", "2"), ("a*", "2", "1")}


def test_graded_extension_degrees(algebras):
    k = algebras["semisimple_k"]
    tri = graded_trivial_extension(k)
    assert tri.T.degrees == [0, 1]

    a2 = algebras["path_a2"]
    tri = graded_trivial_extension(a2)
    by_label = dict(zip(tri.T.basis_labels, tri.T.degrees))
    assert by_label == {"e_1": 0, "e_2": 0, "a": 1, "e_1*": 2, "e_2*": 2, "a*": 1}
    assert tri.T.top_degree == 2

    five = algebras["five_vertex_weighted"]
    tri = graded_trivial_extension(five)
    assert tri.T.top_degree == 7  # s + 1


def test_graded_extension_requires_grading():
    # bounded-mode builds carry no degree tags
    A = build("field Q\nvertices v\narrow x : v -> v\n"
              "relation x*x - x*x*x\nnilpotency_bound 4\n")
    assert A.degrees is None
    from trivext.algebra import AlgebraBuildError
    with pytest.raises(AlgebraBuildError):
        graded_trivial_extension(A)


def test_degree_zero_and_top_components_have_vertex_dimension(extensions):
    for name, tri in extensions.items():
        T = tri.T
        if T.degrees is None:
            continue
        r = T.num_vertices
        top = T.top_degree
        assert sum(1 for d in T.degrees if d == 0) == r, name
        assert sum(1 for d in T.degrees if d == top) == r, name


def test_relations_for_ground_field():
    tri = trivial_extension(build("field Q\nvertices v\n"))
    rels = relations_up_to(tri, 2)
    assert [r.label() for r in rels.generators] == ["e_v**e_v*"]
    assert rels.complete and rels.quotient_dim == 2


def test_relations_for_two_ground_fields():
    tri = trivial_extension(build("field Q\nvertices u v\n"))
    rels = relations_up_to(tri, 2)
    labels = {r.label() for r in rels.generators}
    assert labels == {"e_u**e_u*", "e_v**e_v*"}
    assert rels.complete and rels.quotient_dim == 4


def test_relations_cap_validation(extensions):
    with pytest.raises(ValueError):
        relations_up_to(extensions["semisimple_k"], 1)


def test_new_arrow_products_lie_in_generated_ideal(extensions):
    # beta_2 beta_1 evaluates to zero, hence lies in the kernel the
    # generators span at length 2
    for name, tri in extensions.items():
        rels = relations_up_to(tri)
        T = tri.T
        news = tri.new_arrow_reps()
        for b2 in news:
            for b1 in news:
                if b1.target != b2.source:
                    continue
                assert T.multiply(b2.element(), b1.element()) == {}, name


def test_relations_complete_on_length_homogeneous_corpus(extensions):
    for name, tri in extensions.items():
        if name == "five_vertex_weighted":
            continue  # relations of A mix path lengths; see below
        rels = relations_up_to(tri)
        assert rels.complete, name
        assert rels.quotient_dim == tri.T.dim, name
        for g in rels.generators:
            vec = None
            for c, p in g.terms:
                term = tri.phi(p)
                scaled = {k: tri.T.field.mul(c, v) for k, v in term.items()}
                if vec is None:
                    vec = scaled
                else:
                    for k, v in scaled.items():
                        w = tri.T.field.add(vec.get(k, tri.T.field.zero()), v)
                        if w:
                            vec[k] = w
                        else:
                            vec.pop(k, None)
            assert not vec, name  # every generator evaluates to zero


def test_relations_incomplete_for_length_inhomogeneous_base(extensions):
    # the commutativity relation of the five-vertex algebra identifies
    # paths of different lengths, which a length-sliced kernel search
    # cannot see; the completeness flag must report this honestly
    rels = relations_up_to(extensions["five_vertex_weighted"], 4)
    assert not rels.complete
    assert rels.quotient_dim is None or rels.quotient_dim > 26


def test_check_new_products_vanish(extensions):
    for name, tri in extensions.items():
        assert check_new_products_vanish(tri), name


def test_symmetric_form_properties(extensions):
    from trivext.corpus import symmetric_form_checks
    for name, tri in extensions.items():
        checks = symmetric_form_checks(tri)
        assert checks == {"symmetric": True, "associative": True,
                          "nondegenerate": True}, name


def test_radical_of_extension_decomposes(extensions):
    from trivext.corpus import radical_decomposition_checks
    for name, tri in extensions.items():
        checks = radical_decomposition_checks(tri)
        assert all(checks.values()), (name, checks)


def test_arrow_counts_match_radical_quotient(extensions):
    from trivext.corpus import quiver_match_checks
    for name, tri in extensions.items():
        checks = quiver_match_checks(tri)
        assert all(checks.values()), (name, checks)


def test_nakayama_incoming_new_arrows(algebras, extensions):
    for name in ("semisimple_k", "dual_numbers", "semisimple_k2",
                 "nakayama_cycle_2", "nakayama_cycle_3"):
        A = algebras[name]
        tri = extensions[name]
        cert = selfinjectivity(A)
        assert isinstance(cert, SelfinjectivityCertificate), name
        incoming = {}
        for na in tri.new_arrows:
            incoming.setdefault(na.target, set()).add(na.source)
        for i in range(A.num_vertices):
            assert i in incoming, (name, i)
            assert cert.permutation[i] in incoming[i], (name, i)


def test_weak_socle_gives_incoming_new_arrows(algebras, extensions):
    for name, A in algebras.items():
        if not left_socle_in_bimodule_socle(A):
            continue
        tri = extensions[name]
        targets = {na.target for na in tri.new_arrows}
        assert targets == set(range(A.num_vertices)), name


def test_dual_part_is_square_zero_ideal(extensions):
    for name, tri in extensions.items():
        T = tri.T
        d = tri.base.dim
        for i in range(d, 2 * d):
            for j in range(d, 2 * d):
                assert T.table[i][j] == {}, name


def test_peirce_of_duals_transposed(extensions):
    for name, tri in extensions.items():
        T, d = tri.T, tri.base.dim
        for k in range(d):
            src, tgt = T.peirce[k]
            assert T.peirce[d + k] == (tgt, src), name
