#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lpa/ring.hpp"
#include "lpa/sampling.hpp"

using namespace lpa;

TEST_CASE("ring axioms hold on random values", "[ring]") {
    std::vector<RingDesc> rings = {RingDesc::Z(), RingDesc::Q(), RingDesc::Zmod(6),
                                   RingDesc::Zmod(4), RingDesc::Laurent()};
    std::mt19937 rng(7);
    for (const RingDesc& r : rings) {
        RingValue zero = RingValue::zero(r), one = RingValue::one(r);
        for (int i = 0; i < 200; ++i) {
            RingValue a = random_ring_value(r, rng);
            RingValue b = random_ring_value(r, rng);
            RingValue c = random_ring_value(r, rng);
            CHECK(a.add(b) == b.add(a));
            CHECK(a.mul(b) == b.mul(a));
            CHECK(a.add(b).add(c) == a.add(b.add(c)));
            CHECK(a.mul(b).mul(c) == a.mul(b.mul(c)));
            CHECK(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)));
            CHECK(a.add(zero) == a);
            CHECK(a.mul(one) == a);
            CHECK(a.mul(zero) == zero);
            CHECK(a.add(a.neg()) == zero);
            CHECK(a.sub(b) == a.add(b.neg()));
        }
    }
}

TEST_CASE("residue arithmetic wraps", "[ring]") {
    RingDesc z4 = RingDesc::Zmod(4);
    RingValue three = RingValue::from_int(z4, 3);
    CHECK(three.add(three) == RingValue::from_int(z4, 2));
    CHECK(three.mul(three) == RingValue::from_int(z4, 1));
    CHECK(RingValue::from_int(z4, -1) == three);

    // zero divisors in Z/6
    RingDesc z6 = RingDesc::Zmod(6);
    RingValue two = RingValue::from_int(z6, 2);
    RingValue nine = RingValue::from_int(z6, 3);
    CHECK(two.mul(nine).is_zero());
    CHECK_FALSE(two.is_zero());
}

TEST_CASE("laurent units and mixed-sign exponents", "[ring]") {
    RingValue x = RingValue::monomial(Rat(1), 1);
    RingValue xinv = RingValue::monomial(Rat(1), -1);
    CHECK(x.mul(xinv) == RingValue::one(RingDesc::Laurent()));
    RingValue p = x.add(xinv).add(RingValue::from_int(RingDesc::Laurent(), 2));
    CHECK(p.mul(x).sub(x.mul(p)).is_zero());
    CHECK(p.str() == "1*x^-1 + 2 + 1*x^1");
}

TEST_CASE("parse and str round-trip", "[ring]") {
    std::mt19937 rng(11);
    std::vector<RingDesc> rings = {RingDesc::Z(), RingDesc::Q(), RingDesc::Zmod(6),
                                   RingDesc::Laurent()};
    for (const RingDesc& r : rings)
        for (int i = 0; i < 100; ++i) {
            RingValue v = random_ring_value(r, rng);
            CHECK(RingValue::parse(r, v.str()) == v);
        }
    CHECK(RingValue::parse(RingDesc::Q(), "-3/4") ==
          RingValue::from_rational(RingDesc::Q(), Rat(-3, 4)));
    CHECK(RingValue::parse(RingDesc::Laurent(), "x^2 + -1*x^-1") ==
          RingValue::monomial(Rat(1), 2).add(RingValue::monomial(Rat(-1), -1)));
    CHECK_THROWS_AS(RingValue::parse(RingDesc::Z(), "1/2"), precondition_error);
    CHECK_THROWS_AS(RingValue::parse(RingDesc::Q(), "abc"), input_error);
    CHECK_THROWS_AS(RingDesc::parse("F7"), input_error);
    CHECK(RingDesc::parse("Zmod:6") == RingDesc::Zmod(6));
}

TEST_CASE("cross-ring operations are rejected", "[ring]") {
    RingValue a = RingValue::one(RingDesc::Z());
    RingValue b = RingValue::one(RingDesc::Q());
    CHECK_THROWS_AS(a.add(b), precondition_error);
    CHECK_THROWS_AS(a.mul(b), precondition_error);
    CHECK_THROWS_AS(RingValue::one(RingDesc::Zmod(4)).add(RingValue::one(RingDesc::Zmod(6))),
                    precondition_error);
}
