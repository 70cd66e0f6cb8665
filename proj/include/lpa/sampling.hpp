/*
 * sampling.hpp
 * ------------
 * Seeded random generators for coefficients, paths, and elements; used by
 * the sampled verdict operations and by the property-test suites.
 */
#pragma once

#include <random>

#include "lpa/element.hpp"
#include "lpa/ideal.hpp"

namespace lpa {

inline RingValue random_ring_value(const RingDesc& ring, std::mt19937& rng) {
    auto small = [&](int lo, int hi) { return lo + (int)(rng() % (unsigned)(hi - lo + 1)); };
    switch (ring.id) {
        case RingId::integers: return RingValue::from_int(ring, small(-4, 4));
        case RingId::rationals:
            return RingValue::from_rational(ring, Rat(small(-4, 4), small(1, 4)));
        case RingId::residues: return RingValue::from_int(ring, small(0, (int)ring.modulus - 1));
        case RingId::laurent: {
            RingValue v = RingValue::monomial(Rat(small(-3, 3)), small(-2, 2));
            if (rng() % 2) v = v.add(RingValue::monomial(Rat(small(-3, 3)), small(-2, 2)));
            return v;
        }
    }
    return RingValue::zero(ring);
}

inline RingValue random_nonzero_ring_value(const RingDesc& ring, std::mt19937& rng) {
    for (;;) {
        RingValue v = random_ring_value(ring, rng);
        if (!v.is_zero()) return v;
    }
}

inline Monomial random_monomial(const Digraph& g, std::mt19937& rng, int max_len = 3) {
    VertexId v = (VertexId)(rng() % g.vertex_count());
    return Monomial{detail::random_path_into(g, v, rng, max_len),
                    detail::random_path_into(g, v, rng, max_len)};
}

inline Element random_element(const Digraph& g, const RingDesc& ring, std::mt19937& rng,
                              int max_terms = 3, int max_len = 3) {
    Element e(g, ring);
    int terms = 1 + (int)(rng() % (unsigned)max_terms);
    for (int i = 0; i < terms; ++i)
        e.add_term(random_monomial(g, rng, max_len), random_ring_value(ring, rng));
    return e;
}

}  // namespace lpa
