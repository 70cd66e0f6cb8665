/*
 * structure.hpp
 * -------------
 * Structural invariants of L_k(Γ): the sink/cycle reachability poset, the
 * height of a digraph, Gelfand–Kirillov dimension for L_k(Γ) and for the
 * path algebra kΓ, and the direct-sum decomposition into matrix rings when
 * no cycle has an exit.
 */
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/ideal.hpp"

namespace lpa {

// One node per sink and per cycle; order is reachability.
struct PosetNode {
    bool is_cycle = false;
    VertexId sink = 0;     // when !is_cycle
    int cycle_index = -1;  // when is_cycle, into the CycleSet
    VertexId rep = 0;      // the sink itself, or the cycle base
    int height = 0;        // sink: 0; no-exit cycle: 1; else 2 + max below
    std::vector<int> below;  // strictly smaller nodes this one reaches
};

struct CyclePoset {
    std::vector<PosetNode> nodes;
    int graph_height = 0;  // max cycle height, 0 when acyclic
};

inline CyclePoset build_poset(const Digraph& g) {
    CycleSet cs = cycles(g);
    if (!cs.disjoint)
        throw precondition_error("poset requires pairwise disjoint cycles");

    CyclePoset ps;
    for (VertexId w : g.sinks()) ps.nodes.push_back({false, w, -1, w, 0, {}});
    for (std::size_t i = 0; i < cs.cycles.size(); ++i)
        ps.nodes.push_back({true, 0, (int)i, cs.cycles[i].base(g), 0, {}});

    for (std::size_t i = 0; i < ps.nodes.size(); ++i)
        for (std::size_t j = 0; j < ps.nodes.size(); ++j)
            if (i != j && g.reaches(ps.nodes[i].rep, ps.nodes[j].rep))
                ps.nodes[i].below.push_back((int)j);

    // Heights bottom-up; `below` is acyclic since distinct cycles that reach
    // each other would intersect.
    std::vector<int> memo(ps.nodes.size(), -1);
    auto ht = [&](auto&& self, std::size_t i) -> int {
        if (memo[i] >= 0) return memo[i];
        const PosetNode& n = ps.nodes[i];
        if (!n.is_cycle) return memo[i] = 0;
        if (!cs.cycles[(std::size_t)n.cycle_index].has_exit(g)) return memo[i] = 1;
        int best = 0;
        for (int j : n.below) best = std::max(best, self(self, (std::size_t)j));
        return memo[i] = 2 + best;
    };
    for (std::size_t i = 0; i < ps.nodes.size(); ++i) {
        ps.nodes[i].height = ht(ht, i);
        if (ps.nodes[i].is_cycle)
            ps.graph_height = std::max(ps.graph_height, ps.nodes[i].height);
    }
    return ps;
}

inline int height(const Digraph& g) { return build_poset(g).graph_height; }

struct GkDim {
    bool finite = true;
    long long value = 0;

    std::string str() const { return finite ? std::to_string(value) : "infinite"; }
};

// GK dimension of L_k(Γ): height(Γ) + GKdim(k) when cycles are pairwise
// disjoint, infinite otherwise.
inline GkDim gk_dim(const Digraph& g, const RingDesc& ring = RingDesc::Q()) {
    if (!cycles(g).disjoint) return {false, 0};
    return {true, (long long)height(g) + ring.gk_dim()};
}

// GK dimension of the path algebra kΓ: ⌈height/2⌉ + GKdim(k), same
// disjointness dichotomy.
inline GkDim gk_dim_path_algebra(const Digraph& g, const RingDesc& ring = RingDesc::Q()) {
    if (!cycles(g).disjoint) return {false, 0};
    int h = height(g);
    return {true, (long long)((h + 1) / 2) + ring.gk_dim()};
}

// One matrix-ring summand: M_size(k) at a sink, M_size(k[x,x^-1]) at a
// no-exit cycle.
struct Summand {
    bool laurent = false;
    std::size_t size = 0;
    std::string at;  // sink name or cycle path string
};

// Decomposition L_k(Γ) ≅ ⊕_w M_{|P_w|}(k) ⊕ ⊕_C M_{|P_C|}(k[x,x^-1]).
// Requires every cycle to be exitless (then all P-sets are finite).
inline std::vector<Summand> decompose(const Digraph& g) {
    CycleSet cs = cycles(g);
    if (!cs.disjoint)
        throw precondition_error("decompose requires pairwise disjoint cycles");
    for (const Cycle& c : cs.cycles)
        if (c.has_exit(g))
            throw precondition_error("decompose requires every cycle to have no exit");
    std::vector<Summand> out;
    for (VertexId w : g.sinks()) {
        auto ps = enumerate_P_sink(g, w);
        out.push_back({false, ps.paths.size(), g.vertex_name(w)});
    }
    for (const Cycle& c : cs.cycles) {
        auto ps = enumerate_P_cycle(g, c);
        out.push_back({true, ps.paths.size(), c.as_path(g).str(g)});
    }
    return out;
}

inline std::string decompose_to_text(const std::vector<Summand>& ss) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        if (i) os << " (+) ";
        os << "M_" << ss[i].size << (ss[i].laurent ? "(k[x,x^-1])" : "(k)") << " at "
           << ss[i].at;
    }
    if (ss.empty()) os << "0";
    return os.str();
}

// Verifies the matrix-unit presentation behind `decompose`:
//  - sinks: t_pq = pq* over P_w satisfy t_pq t_rs = δ_qr t_ps;
//  - cycles: same for P_C, and X = Σ_p pCp* commutes with every t_pq with
//    X X* = X* X = Σ_p pp* (the summand identity).
// Exhaustive when the P-set has at most `max_paths` members, else sampled
// over the leading members.
inline Verdict matrix_unit_check(const Digraph& g, const RingDesc& ring = RingDesc::Q(),
                                 std::size_t max_paths = 8) {
    Normalizer norm(g);
    CycleSet cs = norm.cycle_set();
    for (const Cycle& c : cs.cycles)
        if (c.has_exit(g))
            throw precondition_error("matrix_unit_check requires exitless cycles");

    auto unit_table = [&](const std::vector<Path>& paths, const std::string& where)
        -> Verdict {
        std::size_t n = std::min(paths.size(), max_paths);
        auto t = [&](std::size_t i, std::size_t j) {
            return Element::monomial(g, ring, Monomial{paths[i], paths[j]},
                                     RingValue::one(ring));
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        Element lhs = t(i, j).mul(t(k, l));
                        Element rhs = (j == k) ? t(i, l) : Element::zero(g, ring);
                        if (!norm.equals(lhs, rhs))
                            return {false, "matrix unit relation fails at " + where +
                                               ": t(" + std::to_string(i) + "," +
                                               std::to_string(j) + ")·t(" +
                                               std::to_string(k) + "," +
                                               std::to_string(l) + ")"};
                    }
        return {true, ""};
    };

    for (VertexId w : g.sinks()) {
        auto ps = enumerate_P_sink(g, w);
        if (ps.infinite) return {false, "P_w unexpectedly infinite at " + g.vertex_name(w)};
        Verdict v = unit_table(ps.paths, "sink " + g.vertex_name(w));
        if (!v.pass) return v;
    }
    for (const Cycle& c : cs.cycles) {
        auto ps = enumerate_P_cycle(g, c);
        std::string where = "cycle " + c.as_path(g).str(g);
        if (ps.infinite) return {false, "P_C unexpectedly infinite at " + where};
        Verdict v = unit_table(ps.paths, where);
        if (!v.pass) return v;

        std::size_t n = std::min(ps.paths.size(), max_paths);
        Element x = Element::zero(g, ring);
        Element id = Element::zero(g, ring);
        for (const Path& p : ps.paths) {
            x = x.add(Element::monomial(g, ring, Monomial{p.concat(g, c.as_path(g)), p},
                                        RingValue::one(ring)));
            id = id.add(Element::monomial(g, ring, Monomial{p, p}, RingValue::one(ring)));
        }
        if (!norm.equals(x.mul(x.star()), id) || !norm.equals(x.star().mul(x), id))
            return {false, "X is not unitary over the summand at " + where};
        // power law: (p C^m q*)(q C^n s*) = p C^{m+n} s*
        auto cyc_term = [&](const Path& p, long long m2, const Path& q) {
            Path pp = p, qq = q;
            for (long long i = 0; i < m2; ++i) pp = pp.concat(g, c.as_path(g));
            for (long long i = 0; i < -m2; ++i) qq = qq.concat(g, c.as_path(g));
            return Element::monomial(g, ring, Monomial{pp, qq}, RingValue::one(ring));
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (long long m2 = -1; m2 <= 2; ++m2)
                    for (long long n2 = -1; n2 <= 2; ++n2) {
                        Element lhs = cyc_term(ps.paths[i], m2, ps.paths[j])
                                          .mul(cyc_term(ps.paths[j], n2, ps.paths[0]));
                        Element rhs = cyc_term(ps.paths[i], m2 + n2, ps.paths[0]);
                        if (!norm.equals(lhs, rhs))
                            return {false, "cycle power law fails at " + where};
                    }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Element t = Element::monomial(g, ring, Monomial{ps.paths[i], ps.paths[j]},
                                              RingValue::one(ring));
                if (!norm.equals(x.mul(t), t.mul(x)))
                    return {false, "X does not commute with units at " + where};
            }
    }
    return {true, ""};
}

}  // namespace lpa
