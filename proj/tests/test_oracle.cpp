#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "testutil.hpp"

using namespace lpa;

TEST_CASE("word rewriter basics", "[oracle]") {
    Digraph g = testutil::gamma4();
    ArrowId e = g.arrow_id("e"), f = g.arrow_id("f");
    VertexId v = g.vertex_id("v"), w = g.vertex_id("w");

    // e* e -> v, e* f -> 0, v e -> e, e w -> 0
    auto r = oracle::reduce_word(g, {oracle::LDual{e}, oracle::LArrow{e}});
    REQUIRE(r);
    CHECK(*r == oracle::Word{oracle::LVertex{v}});
    CHECK_FALSE(oracle::reduce_word(g, {oracle::LDual{e}, oracle::LArrow{f}}));
    r = oracle::reduce_word(g, {oracle::LVertex{v}, oracle::LArrow{e}});
    REQUIRE(r);
    CHECK(*r == oracle::Word{oracle::LArrow{e}});
    CHECK_FALSE(oracle::reduce_word(g, {oracle::LArrow{e}, oracle::LVertex{w}}));
    // f* e -> 0 by (CK1); e f (a genuine path) is irreducible
    CHECK_FALSE(oracle::reduce_word(g, {oracle::LDual{f}, oracle::LArrow{e}}));
    r = oracle::reduce_word(g, {oracle::LArrow{e}, oracle::LArrow{f}});
    REQUIRE(r);
    CHECK(r->size() == 2);
}

TEST_CASE("CK2 contraction collapses a complete family", "[oracle]") {
    Digraph g = testutil::gamma4();
    ArrowId e = g.arrow_id("e"), f = g.arrow_id("f");
    VertexId v = g.vertex_id("v");
    oracle::WordSum s;
    oracle::add_word(g, s, {oracle::LArrow{e}, oracle::LDual{e}}, Rat(1));
    oracle::add_word(g, s, {oracle::LArrow{f}, oracle::LDual{f}}, Rat(1));
    oracle::add_word(g, s, {oracle::LVertex{v}}, Rat(-1));
    oracle::ck2_contract(g, s);
    CHECK(s.empty());

    // incomplete family (missing f f*) must not contract
    oracle::WordSum t;
    oracle::add_word(g, t, {oracle::LArrow{e}, oracle::LDual{e}}, Rat(1));
    oracle::ck2_contract(g, t);
    CHECK(t.size() == 1);

    // mismatched coefficients must not contract
    oracle::WordSum u;
    oracle::add_word(g, u, {oracle::LArrow{e}, oracle::LDual{e}}, Rat(1));
    oracle::add_word(g, u, {oracle::LArrow{f}, oracle::LDual{f}}, Rat(2));
    oracle::ck2_contract(g, u);
    CHECK(u.size() == 2);
}

TEST_CASE("seam identity holds on the Toeplitz digraph", "[oracle]") {
    Digraph g = testutil::gamma4();
    CycleSet cs = cycles(g);
    REQUIRE(cs.cycles.size() == 1);
    CHECK(oracle::seam_identity_residual(g, cs.cycles[0]).empty());
}
