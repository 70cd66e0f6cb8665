#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lpa/quiver.hpp"
#include "testutil.hpp"

using namespace lpa;

TEST_CASE("representation parsing", "[quiver]") {
    Digraph g = testutil::gamma2();
    Representation rep = parse_representation(g,
                                              "dim u = 2\n"
                                              "dim v = 2\n"
                                              "map e = 1 0 0 1\n");
    CHECK(rep.total_dim() == 4);
    CHECK(rep.maps[0] == RatMat::identity(2));
    // '=' is optional
    Representation rep2 = parse_representation(g, "dim u 2\ndim v 2\nmap e 1 0 0 1\n");
    CHECK(rep2.dims == rep.dims);
    // round-trip
    Representation rep3 = parse_representation(g, representation_to_text(rep));
    CHECK(rep3.maps[0] == rep.maps[0]);

    CHECK_THROWS_AS(parse_representation(g, "dim u = 2\n"), input_error);  // missing dim v
    CHECK_THROWS_AS(parse_representation(g, "dim u = 2\ndim v = 2\n"), input_error);
    CHECK_THROWS_AS(parse_representation(g, "dim u = 2\ndim v = 2\nmap e = 1 0\n"),
                    input_error);
    CHECK_THROWS_AS(parse_representation(g, "dim q = 2\n"), input_error);
    // zero-sized shapes may omit the map line
    Representation z = parse_representation(g, "dim u = 0\ndim v = 0\n");
    CHECK(z.total_dim() == 0);
}

TEST_CASE("the module condition", "[quiver]") {
    Digraph g = testutil::gamma2();
    CHECK(check_iso(parse_representation(g, "dim u 2\ndim v 2\nmap e 1 0 0 1\n")).pass);
    // singular arrow map fails
    CHECK_FALSE(check_iso(parse_representation(g, "dim u 2\ndim v 2\nmap e 0 0 0 0\n")).pass);
    // shape mismatch (stacked map not square) fails
    CHECK_FALSE(check_iso(parse_representation(g, "dim u 1\ndim v 2\nmap e 1 0\n")).pass);

    // Toeplitz digraph: dim v must equal dim v + dim w, so dim w = 0
    Digraph g4 = testutil::gamma4();
    CHECK(check_iso(parse_representation(g4, "dim v 1\ndim w 0\nmap e 2\n")).pass);
    CHECK_FALSE(check_iso(parse_representation(g4, "dim v 1\ndim w 1\nmap e 1\nmap f 1\n")).pass);
}

TEST_CASE("random representations pass the relation audit", "[quiver]") {
    std::mt19937 rng(103);
    int done = 0;
    for (int t = 0; t < 200 && done < 60; ++t) {
        Digraph g = testutil::random_disjoint_cycle_digraph(rng, 4);
        Representation rep = random_representation(g, rng);
        if (rep.total_dim() == 0) continue;
        REQUIRE(check_iso(rep).pass);
        Verdict v = relation_audit(rep);
        INFO(g.to_text() << representation_to_text(rep) << v.witness);
        CHECK(v.pass);
        ++done;
    }
    CHECK(done == 60);
}

TEST_CASE("corrupting a map breaks the audit", "[quiver]") {
    Digraph g({"u", "v", "w"}, {{"a", "u", "v"}, {"b", "u", "w"}});
    Representation rep = parse_representation(g,
                                              "dim u 2\ndim v 1\ndim w 1\n"
                                              "map a 1 0\nmap b 0 1\n");
    REQUIRE(relation_audit(rep).pass);
    // rescaling an arrow keeps the stacked map invertible; the duals are
    // recomputed, so the relations still hold
    rep.maps[0](0, 0) = Rat(2);
    CHECK(relation_audit(rep).pass);
    // making the two columns dependent breaks invertibility and the audit
    rep.maps[0](0, 0) = Rat(0);
    rep.maps[0](1, 0) = Rat(1);
    CHECK_FALSE(check_iso(rep).pass);
    CHECK_FALSE(relation_audit(rep).pass);
}

TEST_CASE("element action is an algebra homomorphism", "[quiver]") {
    std::mt19937 rng(107);
    int done = 0;
    for (int t = 0; t < 100 && done < 15; ++t) {
        Digraph g = testutil::random_disjoint_cycle_digraph(rng, 3);
        Representation rep = random_representation(g, rng);
        if (rep.total_dim() == 0 || rep.total_dim() > 6) continue;
        GeneratorAction act = generator_action(rep);
        Normalizer norm(g);
        for (int s = 0; s < 10; ++s) {
            Element a = random_element(g, RingDesc::Q(), rng, 2, 2);
            Element b = random_element(g, RingDesc::Q(), rng, 2, 2);
            CHECK(element_action(act, rep, a.mul(b)) ==
                  element_action(act, rep, a) * element_action(act, rep, b));
            // the action factors through normalization
            CHECK(element_action(act, rep, norm.normalize(a)) ==
                  element_action(act, rep, a));
        }
        ++done;
    }
    CHECK(done == 15);
}

TEST_CASE("restriction along a reduction step", "[quiver]") {
    std::mt19937 rng(109);
    int done = 0;
    for (int t = 0; t < 200 && done < 25; ++t) {
        Digraph g = testutil::random_disjoint_cycle_digraph(rng, 5);
        Representation rep = random_representation(g, rng);
        if (rep.total_dim() == 0) continue;
        bool any = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (g.is_sink(v) || g.has_loop_at(v)) continue;
            any = true;
            ReductionStep step = reduce_step(g, v).second;
            const Digraph& h = step.after;
            Representation sub = restrict_representation(rep, step);
            // dims survive by name
            for (VertexId u = 0; u < h.vertex_count(); ++u)
                CHECK(sub.dims[u] == rep.dims[g.vertex_id(h.vertex_name(u))]);
            REQUIRE(check_iso(sub).pass);
            Verdict verdict = relation_audit(sub);
            INFO(g.to_text() << verdict.witness);
            CHECK(verdict.pass);
            // the action of a composite arrow equals the action of its
            // length-2 preimage under the embedding
            GeneratorAction act = generator_action(rep);
            GeneratorAction sact = generator_action(sub);
            for (ArrowId a = 0; a < h.arrow_count(); ++a) {
                Path p = Path::at(h.arrow(a).src).append(h, a);
                Element img = embed_phi(step, Element::path(h, RingDesc::Q(), p));
                RatMat big = element_action(act, rep, img);
                RatMat small = element_action(sact, sub, Element::path(h, RingDesc::Q(), p));
                // index translation: position in the sub-space -> position
                // in the full space (surviving blocks)
                std::vector<std::size_t> ix;
                for (VertexId u = 0; u < h.vertex_count(); ++u) {
                    VertexId orig = g.vertex_id(h.vertex_name(u));
                    for (std::size_t k = 0; k < sub.dims[u]; ++k)
                        ix.push_back(act.offset[orig] + k);
                }
                REQUIRE(ix.size() == sact.total);
                for (std::size_t i = 0; i < sact.total; ++i)
                    for (std::size_t j = 0; j < sact.total; ++j)
                        CHECK(small(i, j) == big(ix[i], ix[j]));
            }
        }
        if (any) ++done;
    }
    CHECK(done == 25);
}
