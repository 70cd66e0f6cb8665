/*
 * growth.hpp
 * ----------
 * Growth of L_k(Γ) with respect to the finite generating set
 *
 *   G = { vertices } ∪ { cycle-free paths } ∪ { cycle rotations } ∪ duals,
 *
 * where a path is cycle-free when it contains no contiguous full traversal
 * of a cycle (such paths have length <= |V|). F_n = span of products of at
 * most n generators.
 *
 * Two independent bounds on dim F_n:
 *  - lower(n): counts canonical basis monomials that are literal products of
 *    at most n generators (factor the paths into windings and cycle-free
 *    runs). Distinct basis monomials are independent, so this undercounts.
 *  - upper(n): closure of the generator supports under right multiplication;
 *    every word of length <= n lies in the span of the monomials collected
 *    through level n, so this overcounts.
 *
 * fit_degree estimates the polynomial degree of a table by least squares on
 * log f vs log n over the top half of the rows.
 */
#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "lpa/element.hpp"

namespace lpa {

namespace detail {

// Per-vertex cycle rotation: the arrows of the vertex's cycle starting at it.
inline std::vector<std::vector<ArrowId>> cycle_rotations(const Digraph& g,
                                                         const CycleSet& cs) {
    std::vector<std::vector<ArrowId>> rot(g.vertex_count());
    for (const Cycle& c : cs.cycles)
        for (std::size_t i = 0; i < c.length(); ++i) {
            std::vector<ArrowId> r(c.arrows.begin() + (std::ptrdiff_t)i, c.arrows.end());
            r.insert(r.end(), c.arrows.begin(), c.arrows.begin() + (std::ptrdiff_t)i);
            rot[g.arrow(c.arrows[i]).src] = std::move(r);
        }
    return rot;
}

// Number of generators in the greedy factorization of a path: each full
// cycle traversal costs 1, each maximal remaining run costs 1. Runs contain
// no full cycle traversal (the scan checks at every position), so they are
// cycle-free paths and hence generators.
inline std::size_t gen_cost(const Digraph& g, const Path& p,
                            const std::vector<std::vector<ArrowId>>& rot) {
    std::size_t cost = 0, pos = 0;
    bool in_run = false;
    const std::size_t len = p.length();
    while (pos < len) {
        VertexId v = g.arrow(p.arrows[pos]).src;
        const auto& r = rot[v];
        if (!r.empty() && pos + r.size() <= len &&
            std::equal(r.begin(), r.end(), p.arrows.begin() + (std::ptrdiff_t)pos)) {
            ++cost;
            pos += r.size();
            in_run = false;
        } else {
            if (!in_run) {
                ++cost;
                in_run = true;
            }
            ++pos;
        }
    }
    return cost;
}

// All cycle-free paths of length >= 1 (forward extension, pruned as soon as
// a full cycle traversal appears at any start position).
inline std::vector<Path> cycle_free_paths(const Digraph& g, const CycleSet& cs) {
    auto rot = cycle_rotations(g, cs);
    auto contains_cycle = [&](const Path& p) {
        // Only the suffix can complete a traversal when extending one arrow
        // at a time, so checking every start against the tail suffices.
        for (std::size_t i = 0; i < p.length(); ++i) {
            VertexId v = g.arrow(p.arrows[i]).src;
            const auto& r = rot[v];
            if (!r.empty() && i + r.size() == p.length() &&
                std::equal(r.begin(), r.end(), p.arrows.begin() + (std::ptrdiff_t)i))
                return true;
        }
        return false;
    };
    std::vector<Path> out, frontier;
    for (VertexId v = 0; v < g.vertex_count(); ++v) frontier.push_back(Path::at(v));
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (const Path& p : frontier)
            for (ArrowId a : g.out_arrows(p.target(g))) {
                Path q = p.append(g, a);
                if (!contains_cycle(q)) {
                    out.push_back(q);
                    next.push_back(out.back());
                }
            }
        frontier = std::move(next);
    }
    return out;
}

inline std::vector<Element> generator_elements(const Digraph& g, const CycleSet& cs,
                                               const RingDesc& ring) {
    std::vector<Element> gens;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        gens.push_back(Element::vertex(g, ring, v));
    for (const Path& p : cycle_free_paths(g, cs)) {
        gens.push_back(Element::path(g, ring, p));
        gens.push_back(Element::dual_path(g, ring, p));
    }
    auto rot = cycle_rotations(g, cs);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!rot[v].empty()) {
            Path c{v, rot[v]};
            gens.push_back(Element::path(g, ring, c));
            gens.push_back(Element::dual_path(g, ring, c));
        }
    return gens;
}

// Cost histogram of a P-set, cut off at cost `nmax`. The P-set is enumerated
// up to length nmax*|V| (a path of cost c has length <= c*|V|), which is
// exhaustive for the costs we keep.
inline std::vector<unsigned long long> cost_histogram(const Digraph& g,
                                                      const PathSet& ps, int nmax,
                                                      const std::vector<std::vector<ArrowId>>& rot) {
    std::vector<unsigned long long> h((std::size_t)nmax + 1, 0);
    for (const Path& p : ps.paths) {
        std::size_t c = gen_cost(g, p, rot);
        if (c <= (std::size_t)nmax) ++h[c];
    }
    return h;
}

}  // namespace detail

struct GrowthRow {
    int n = 0;
    unsigned long long lower = 0;
    unsigned long long upper = 0;
    bool upper_known = true;
};

struct GrowthTable {
    std::vector<GrowthRow> rows;  // n = 1..nmax
    bool upper_partial = false;   // budget hit; later upper entries unknown
};

// lower(n) = # basis monomials of generator length <= n, computed per sink
// and per cycle from the P-set cost histograms.
inline std::vector<unsigned long long> growth_lower(const Digraph& g, int nmax) {
    CycleSet cs = cycles(g);
    if (!cs.disjoint)
        throw precondition_error("growth bounds require pairwise disjoint cycles");
    auto rot = detail::cycle_rotations(g, cs);
    long length_bound = (long)nmax * (long)g.vertex_count() + 1;

    std::vector<unsigned long long> out((std::size_t)nmax + 1, 0);
    auto count_pairs = [&](const std::vector<unsigned long long>& h, long long shift) {
        // pairs (c1, c2) with c1 + |shift| + c2 <= n; gen length floor is 1.
        for (std::size_t c1 = 0; c1 < h.size(); ++c1)
            for (std::size_t c2 = 0; c2 < h.size(); ++c2) {
                unsigned long long cnt = h[c1] * h[c2];
                if (!cnt) continue;
                long long len = (long long)c1 + (shift < 0 ? -shift : shift) + (long long)c2;
                if (len < 1) len = 1;
                if (len <= nmax) out[(std::size_t)len] += cnt;
            }
    };

    for (VertexId w : g.sinks()) {
        auto ps = enumerate_P_sink(g, w, std::nullopt, length_bound);
        count_pairs(detail::cost_histogram(g, ps, nmax, rot), 0);
    }
    for (const Cycle& c : cs.cycles) {
        auto ps = enumerate_P_cycle(g, c, std::nullopt, length_bound);
        auto h = detail::cost_histogram(g, ps, nmax, rot);
        for (long long k = -(long long)nmax; k <= (long long)nmax; ++k) count_pairs(h, k);
    }
    // cumulative
    for (std::size_t i = 1; i < out.size(); ++i) out[i] += out[i - 1];
    return out;  // out[n] for n = 0..nmax; out[0] == 0
}

// upper(n) = # distinct basis monomials reachable by normalizing words of
// length <= n; computed by closing the level sets under right multiplication
// by generators. Stops early (partial table) past `budget` monomials.
inline std::pair<std::vector<unsigned long long>, bool> growth_upper(
    const Digraph& g, int nmax, const RingDesc& ring = RingDesc::Q(),
    std::size_t budget = 200000) {
    if (nmax < 1) throw input_error("growth bounds need nmax >= 1");
    Normalizer norm(g);
    auto gens = detail::generator_elements(g, norm.cycle_set(), ring);

    std::map<Monomial, int> level;
    std::vector<Monomial> frontier;
    for (const Element& ge : gens) {
        Element ne = norm.normalize(ge);
        for (const auto& [m, c] : ne.terms())
            if (level.emplace(m, 1).second) frontier.push_back(m);
    }

    std::vector<unsigned long long> cum((std::size_t)nmax + 1, 0);
    cum[1] = level.size();
    bool partial = false;
    for (int n = 2; n <= nmax && !partial; ++n) {
        std::vector<Monomial> next;
        for (const Monomial& m : frontier) {
            Element em = Element::monomial(g, ring, m, RingValue::one(ring));
            for (const Element& ge : gens) {
                Element prod = norm.normalize(em.mul(ge));
                for (const auto& [r, c] : prod.terms())
                    if (level.emplace(r, n).second) next.push_back(r);
                if (level.size() > budget) {
                    partial = true;
                    break;
                }
            }
            if (partial) break;
        }
        if (!partial) {
            frontier = std::move(next);
            cum[(std::size_t)n] = level.size();
        }
    }
    return {cum, partial};  // cum[n] == 0 for the levels never completed
}

inline GrowthTable growth_table(const Digraph& g, int nmax,
                                const RingDesc& ring = RingDesc::Q(),
                                std::size_t budget = 200000) {
    if (nmax < 1) throw input_error("growth table needs nmax >= 1");
    auto lower = growth_lower(g, nmax);
    auto [upper, partial] = growth_upper(g, nmax, ring, budget);
    GrowthTable t;
    t.upper_partial = partial;
    for (int n = 1; n <= nmax; ++n) {
        GrowthRow r;
        r.n = n;
        r.lower = lower[(std::size_t)n];
        r.upper = upper[(std::size_t)n];
        r.upper_known = !partial || r.upper != 0;
        t.rows.push_back(r);
    }
    return t;
}

// Least-squares slope of log f against log n over the top half of the rows.
// A constant tail fits degree 0 exactly.
inline double fit_degree(const std::vector<std::pair<int, unsigned long long>>& samples) {
    std::vector<std::pair<double, double>> pts;
    std::size_t from = samples.size() / 2;
    for (std::size_t i = from; i < samples.size(); ++i)
        if (samples[i].second > 0)
            pts.emplace_back(std::log((double)samples[i].first),
                             std::log((double)samples[i].second));
    if (pts.size() < 2) return 0.0;
    double sx = 0, sy = 0;
    for (auto& [x, y] : pts) sx += x, sy += y;
    double mx = sx / (double)pts.size(), my = sy / (double)pts.size();
    double num = 0, den = 0;
    for (auto& [x, y] : pts) num += (x - mx) * (y - my), den += (x - mx) * (x - mx);
    if (den == 0) return 0.0;
    return num / den;
}

inline double fit_degree_lower(const GrowthTable& t) {
    std::vector<std::pair<int, unsigned long long>> s;
    for (const auto& r : t.rows) s.emplace_back(r.n, r.lower);
    return fit_degree(s);
}

inline double fit_degree_upper(const GrowthTable& t) {
    std::vector<std::pair<int, unsigned long long>> s;
    for (const auto& r : t.rows)
        if (r.upper_known) s.emplace_back(r.n, r.upper);
    return fit_degree(s);
}

}  // namespace lpa
