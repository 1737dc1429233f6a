import random

import pytest

from dispbook.book import CyclicOrder, PageColoring, crosses, exact_mbt, verify_matching_book_embedding
from dispbook.corpus import are_isomorphic, build_corpus, gen_random_glued, glue_with_cut
from dispbook.dispersable import (
    Leaf,
    _embed_connected,
    combine,
    embed_dispersable,
    normalize_colors,
    split_at_cut,
    trace_leaves,
    trace_splits,
)
from dispbook.errors import EntanglementViolated, NotBipartite, NotCubic, NotPlanar
from dispbook.graphcore import (
    CutSplit,
    Multigraph,
    bipartition,
    find_disjoint_two_edge_cut,
    is_k_regular,
    make_cut_split,
)

from graphs import C4, CUBE, DOUBLED_C4, HEX_PRISM, K33, THETA, complete


def _embedded(piece):
    order, coloring, _ = _embed_connected(piece.H, 10**8, False)
    return piece, order, coloring


class TestSplit:
    def test_doubled_c4_gives_two_thetas(self):
        cut = find_disjoint_two_edge_cut(DOUBLED_C4)
        left, right = split_at_cut(DOUBLED_C4, bipartition(DOUBLED_C4), cut)
        for piece in (left, right):
            assert are_isomorphic(piece.H, THETA)
        assert left.back_map == (0, 1) and right.back_map == (2, 3)

    def test_split_inverts_glue_of_cubes(self):
        res = glue_with_cut(CUBE, 3, CUBE, 7)
        g = res.graph
        left, right = split_at_cut(g, bipartition(g), make_cut_split(g, *res.cut))
        assert are_isomorphic(left.H, CUBE) and are_isomorphic(right.H, CUBE)

    def test_pieces_cubic_bipartite_and_smaller(self):
        for entry in build_corpus(60, seed=7):
            g = entry.graph
            cut = find_disjoint_two_edge_cut(g)
            if cut is None:
                continue
            left, right = split_at_cut(g, bipartition(g), cut)
            assert left.H.n + right.H.n == g.n
            for piece in (left, right):
                assert piece.H.n < g.n
                assert is_k_regular(piece.H, 3)
                bipartition(piece.H)
                assert set(piece.H.edges[piece.patch_edge]) == {piece.attach_start, piece.attach_other}
            assert sorted(left.back_map + right.back_map) == list(range(g.n))

    def test_entangled_cut_rejected(self):
        g = DOUBLED_C4
        good = find_disjoint_two_edge_cut(g)
        # pretend the attachments sit in one part
        bogus = CutSplit(good.e_prime, good.e_dprime, 0, 0, 2, 3, good.side_one)
        with pytest.raises(EntanglementViolated):
            split_at_cut(g, bipartition(g), bogus)


class TestNormalizeColors:
    def test_swap(self):
        c = PageColoring((0, 1, 2, 0))
        assert normalize_colors(c, 0, 2).pages == (2, 1, 0, 2)

    def test_identity(self):
        c = PageColoring((2, 1, 0))
        assert normalize_colors(c, 0, 2) is c

    def test_verifier_report_preserved(self):
        rng = random.Random(11)
        for _ in range(30):
            seq = list(range(HEX_PRISM.n))
            rng.shuffle(seq)
            order = CyclicOrder(tuple(seq))
            c = PageColoring(tuple(rng.randrange(3) for _ in range(HEX_PRISM.m)))
            e = rng.randrange(HEX_PRISM.m)
            d = normalize_colors(c, e, 2)
            assert d[e] == 2
            r1 = verify_matching_book_embedding(HEX_PRISM, order, c)
            r2 = verify_matching_book_embedding(HEX_PRISM, order, d)
            rename = {c[e]: 2, 2: c[e]}
            assert r1.ok == r2.ok and r1.subhamiltonian == r2.subhamiltonian
            assert sorted((type(v).__name__, rename.get(getattr(v, "page", -1), getattr(v, "page", -1)))
                          for v in r1.violations) == sorted(
                (type(v).__name__, getattr(v, "page", -1)) for v in r2.violations
            )


class TestCombine:
    def test_doubled_c4_hand_splice(self):
        g = DOUBLED_C4
        cut = find_disjoint_two_edge_cut(g)
        left, right = split_at_cut(g, bipartition(g), cut)
        order, coloring = combine(g, _embedded(left), _embedded(right), cut)
        assert order.sequence == (0, 1, 3, 2)
        # alpha = {ab1, cd1}, beta = {ab2, cd2}, gamma = {ac, bd}
        assert coloring.pages == (0, 1, 0, 1, 2, 2)
        assert verify_matching_book_embedding(g, order, coloring).ok

    @pytest.mark.parametrize("seed", range(25))
    def test_cut_edges_and_locality(self, seed):
        g, _ = gen_random_glued(seed, 4)
        cut = find_disjoint_two_edge_cut(g)
        if cut is None:
            pytest.skip("no cut")
        left, right = split_at_cut(g, bipartition(g), cut)
        solved = [_embedded(left), _embedded(right)]
        order, coloring = combine(g, solved[0], solved[1], cut)
        e1, e2 = g.edges[cut.e_prime], g.edges[cut.e_dprime]
        # u'' and w'' are consecutive and e'' has no crossings
        pos = order.position
        assert (pos[cut.u_dprime] - pos[cut.w_dprime]) % g.n in (1, g.n - 1)
        assert not any(crosses(order, e2, g.edges[f]) for f in range(g.m))
        # no gamma edge crosses e'
        assert not any(coloring[f] == 2 and crosses(order, e1, g.edges[f]) for f in range(g.m))
        # an edge inside one side crosses e' only if it crossed the patch edge,
        # or it is incident to that side's start vertex u'' / w''
        for piece, piece_order, _ in solved:
            patch = piece.H.edges[piece.patch_edge]
            for he, ge in enumerate(piece.edge_back_map):
                if ge is None or not crosses(order, g.edges[ge], e1):
                    continue
                assert crosses(piece_order, piece.H.edges[he], patch) or piece.attach_start in piece.H.edges[he]


class TestEmbed:
    def test_theta(self):
        order, coloring, trace = embed_dispersable(THETA)
        assert order.sequence == (0, 1) and coloring.page_count == 3
        assert trace == Leaf("theta", (0, 1), THETA)

    def test_doubled_c4_one_split(self):
        order, coloring, trace = embed_dispersable(DOUBLED_C4)
        assert verify_matching_book_embedding(DOUBLED_C4, order, coloring).ok
        assert len(trace_splits(trace)) == 1
        assert [leaf.kind for leaf in trace_leaves(trace)] == ["theta", "theta"]

    def test_cube_base_case(self):
        order, coloring, trace = embed_dispersable(CUBE)
        assert verify_matching_book_embedding(CUBE, order, coloring).ok
        assert isinstance(trace, Leaf) and trace.kind == "three_connected"

    def test_k33_not_planar(self):
        with pytest.raises(NotPlanar) as info:
            embed_dispersable(K33)
        assert info.value.witness.kind == "K3,3"

    def test_hypothesis_errors(self):
        with pytest.raises(NotCubic):
            embed_dispersable(C4)
        with pytest.raises(NotBipartite):
            embed_dispersable(complete(4))

    def test_disconnected(self):
        g = Multigraph(10, THETA.edges + tuple((u + 2, v + 2) for u, v in CUBE.edges))
        order, coloring, trace = embed_dispersable(g)
        report = verify_matching_book_embedding(g, order, coloring)
        assert report.ok and report.subhamiltonian
        assert sorted(v for leaf in trace_leaves(trace) for v in leaf.vertices) == list(range(10))

    def test_debug_mode(self):
        g, _ = gen_random_glued(3, 5)
        embed_dispersable(g, debug=True)

    def test_corpus_properties(self):
        for entry in build_corpus(80, seed=300):
            g = entry.graph
            order, coloring, trace = embed_dispersable(g)
            report = verify_matching_book_embedding(g, order, coloring)
            assert report.ok and report.page_count == 3 and report.subhamiltonian
            leaves = trace_leaves(trace)
            assert sorted(v for leaf in leaves for v in leaf.vertices) == list(range(g.n))
            for leaf in leaves:
                if leaf.kind == "theta":
                    assert are_isomorphic(leaf.graph, THETA)
                else:
                    assert find_disjoint_two_edge_cut(leaf.graph) is None
            for split in trace_splits(trace):
                assert len(split.vertices) > 2

    def test_deterministic(self):
        g, _ = gen_random_glued(99, 6)
        assert embed_dispersable(g)[:2] == embed_dispersable(g)[:2]

    def test_small_corpus_mbt_is_three(self):
        for entry in build_corpus(40, seed=900, max_pieces=3):
            if entry.graph.n <= 10:
                assert exact_mbt(entry.graph).value == 3
