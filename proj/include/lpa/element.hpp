/*
 * element.hpp
 * -----------
 * Elements of the Leavitt path algebra L_k(Γ) as exact coefficient-weighted
 * combinations of monomials pq* (tp = tq), with multiplication, involution,
 * Z-grading, and normalization onto the canonical basis
 *
 *   B = { pq* : tp = tq a sink } ∪ { pC^nq* : p,q ∈ P_C, n ∈ Z }
 *
 * for digraphs with pairwise disjoint cycles. Basis monomials are stored as
 * plain (p, q) pairs: pC^nq* is (pC^n, q) for n >= 0 and (p, qC^{-n}) for
 * n < 0, with C in canonical rotation.
 *
 * Elements are immutable values; the digraph is part of an element's
 * identity and elements over different digraphs never interoperate.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lpa/digraph.hpp"
#include "lpa/error.hpp"
#include "lpa/ring.hpp"

namespace lpa {

// pq*, q read as its dual. Invariant: tp = tq (zero monomials never stored).
struct Monomial {
    Path p, q;

    long long degree() const { return (long long)p.length() - (long long)q.length(); }

    Monomial star() const { return Monomial{q, p}; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (!(a.p == b.p)) return a.p < b.p;
        return a.q < b.q;
    }
};

namespace detail {

// If `shorter` is an initial segment of `longer`, returns the remainder path.
inline std::optional<Path> strip_prefix(const Digraph& g, const Path& shorter,
                                        const Path& longer) {
    if (shorter.length() > longer.length()) return std::nullopt;
    if (shorter.source() != longer.source()) return std::nullopt;
    if (!std::equal(shorter.arrows.begin(), shorter.arrows.end(), longer.arrows.begin()))
        return std::nullopt;
    Path r = Path::at(shorter.target(g));
    r.arrows.assign(longer.arrows.begin() + (std::ptrdiff_t)shorter.length(),
                    longer.arrows.end());
    return r;
}

}  // namespace detail

// (p1q1*)(p2q2*): q1*p2 collapses to a path or its dual by Fact-level
// cancellation, or the product is zero.
inline std::optional<Monomial> mono_mul(const Digraph& g, const Monomial& a,
                                        const Monomial& b) {
    if (auto r = detail::strip_prefix(g, a.q, b.p)) {  // p2 = q1 r
        return Monomial{a.p.concat(g, *r), b.q};
    }
    if (auto r = detail::strip_prefix(g, b.p, a.q)) {  // q1 = p2 r
        return Monomial{a.p, b.q.concat(g, *r)};
    }
    return std::nullopt;
}

class Element {
public:
    using Terms = std::map<Monomial, RingValue>;

    Element(const Digraph& g, RingDesc ring) : g_(&g), ring_(ring) {}

    static Element zero(const Digraph& g, RingDesc ring) { return Element(g, ring); }

    static Element vertex(const Digraph& g, RingDesc ring, VertexId v) {
        Element e(g, ring);
        e.add_term(Monomial{Path::at(v), Path::at(v)}, RingValue::one(ring));
        return e;
    }

    // The path p as an element: monomial (p, tp).
    static Element path(const Digraph& g, RingDesc ring, const Path& p) {
        Element e(g, ring);
        e.add_term(Monomial{p, Path::at(p.target(g))}, RingValue::one(ring));
        return e;
    }

    // The dual path p*: monomial (tp, p).
    static Element dual_path(const Digraph& g, RingDesc ring, const Path& p) {
        Element e(g, ring);
        e.add_term(Monomial{Path::at(p.target(g)), p}, RingValue::one(ring));
        return e;
    }

    static Element monomial(const Digraph& g, RingDesc ring, const Monomial& m,
                            const RingValue& coeff) {
        if (m.p.target(g) != m.q.target(g))
            throw precondition_error("monomial with tp != tq is zero");
        Element e(g, ring);
        e.add_term(m, coeff);
        return e;
    }

    // 1 = sum of all vertices.
    static Element one(const Digraph& g, RingDesc ring) {
        Element e(g, ring);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            e.add_term(Monomial{Path::at(v), Path::at(v)}, RingValue::one(ring));
        return e;
    }

    const Digraph& graph() const { return *g_; }
    const RingDesc& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const RingValue& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second.add(c);
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element add(const Element& b) const {
        check_compatible(b);
        Element r = *this;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    Element neg() const {
        Element r = *this;
        for (auto& [m, c] : r.terms_) c = c.neg();
        return r;
    }

    Element sub(const Element& b) const { return add(b.neg()); }

    Element scale(const RingValue& s) const {
        if (s.ring() != ring_) throw precondition_error("scalar from a different ring");
        Element r(*g_, ring_);
        for (const auto& [m, c] : terms_) r.add_term(m, c.mul(s));
        return r;
    }

    // Bilinear extension of mono_mul; result is not normalized.
    Element mul(const Element& b) const {
        check_compatible(b);
        Element r(*g_, ring_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : b.terms_)
                if (auto m = mono_mul(*g_, ma, mb)) r.add_term(*m, ca.mul(cb));
        return r;
    }

    Element star() const {
        Element r(*g_, ring_);
        for (const auto& [m, c] : terms_) r.add_term(m.star(), c);
        return r;
    }

    // Common Z-degree of all monomials, or nullopt when inhomogeneous.
    // The zero element is homogeneous of degree 0.
    std::optional<long long> degree() const {
        std::optional<long long> d;
        for (const auto& [m, c] : terms_) {
            if (!d)
                d = m.degree();
            else if (*d != m.degree())
                return std::nullopt;
        }
        return d ? d : std::optional<long long>(0);
    }

    // (Σ_{u∈U} u) · a · (Σ_{u∈U} u): keeps monomials with sp, sq ∈ U.
    Element corner(const VertexSet& u) const {
        Element r(*g_, ring_);
        for (const auto& [m, c] : terms_)
            if (u.count(m.p.source()) && u.count(m.q.source())) r.add_term(m, c);
        return r;
    }

    friend Element operator+(const Element& a, const Element& b) { return a.add(b); }
    friend Element operator-(const Element& a, const Element& b) { return a.sub(b); }
    friend Element operator*(const Element& a, const Element& b) { return a.mul(b); }

private:
    void check_compatible(const Element& b) const {
        if (g_ != b.g_)
            throw precondition_error("elements over different digraphs never interoperate");
        if (ring_ != b.ring_)
            throw precondition_error("ring mismatch: " + ring_.name() + " vs " +
                                     b.ring_.name());
    }

    const Digraph* g_;
    RingDesc ring_;
    Terms terms_;
};

// Classification of a basis monomial.
struct BasisMonomial {
    bool sink_term = false;
    VertexId middle = 0;   // the sink w, or sC
    Path p, q;             // cycle terms: p, q ∈ P_C (windings stripped)
    long long n = 0;       // cycle power, 0 for sink terms
    int cycle_index = -1;  // into Normalizer::cycle_set().cycles
};

// Rewriting engine producing the canonical basis form. Built once per
// digraph; requires pairwise disjoint cycles.
class Normalizer {
public:
    explicit Normalizer(const Digraph& g, std::size_t term_cap = 1000000,
                        std::size_t cycle_cap = 10000)
        : g_(&g), cs_(cycles(g, cycle_cap)), term_cap_(term_cap) {
        if (!cs_.disjoint)
            throw precondition_error(
                "normalization requires pairwise disjoint cycles");
    }

    const Digraph& graph() const { return *g_; }
    const CycleSet& cycle_set() const { return cs_; }

    Element normalize(const Element& a) const {
        if (&a.graph() != g_)
            throw precondition_error("element over a different digraph");
        Element out(*g_, a.ring());
        std::vector<std::pair<Monomial, RingValue>> work(a.terms().begin(),
                                                         a.terms().end());
        std::size_t ops = 0;
        while (!work.empty()) {
            auto [m, c] = std::move(work.back());
            work.pop_back();
            if (++ops > term_cap_)
                throw budget_error("normalization term cap exceeded (" +
                                   std::to_string(term_cap_) + ")");
            VertexId v = m.p.target(*g_);

            if (g_->is_sink(v)) {  // R1
                out.add_term(m, c);
                continue;
            }
            int ci = cs_.cycle_of_vertex[v];
            if (ci < 0) {  // R4: off-cycle non-sink, expand via (CK2)
                expand_ck2(m, c, v, work);
                continue;
            }
            const Cycle& cyc = cs_.cycles[(std::size_t)ci];
            if (v != cyc.base(*g_)) {  // R2 rotation: advance toward sC
                expand_ck2(m, c, v, work);
                continue;
            }
            std::size_t a_pow = trailing_windings(m.p, cyc);
            std::size_t b_pow = trailing_windings(m.q, cyc);
            if (a_pow > 0 && b_pow > 0) {  // R3: seam identity CC* = sC - Σ rff*r*
                Monomial stripped{strip_one(m.p, cyc), strip_one(m.q, cyc)};
                for (const auto& [r, f] : seam_exits(cyc)) {
                    Monomial exit_term{stripped.p.concat(*g_, r).append(*g_, f),
                                       stripped.q.concat(*g_, r).append(*g_, f)};
                    work.emplace_back(std::move(exit_term), c.neg());
                }
                work.emplace_back(std::move(stripped), c);
                continue;
            }
            out.add_term(m, c);  // basic cycle term
        }
        return out;
    }

    bool equals(const Element& a, const Element& b) const {
        return normalize(a.sub(b)).is_zero();
    }

    bool is_basic(const Monomial& m) const {
        VertexId v = m.p.target(*g_);
        if (v != m.q.target(*g_)) return false;
        if (g_->is_sink(v)) return true;
        int ci = cs_.cycle_of_vertex[v];
        if (ci < 0) return false;
        const Cycle& cyc = cs_.cycles[(std::size_t)ci];
        if (v != cyc.base(*g_)) return false;
        return trailing_windings(m.p, cyc) == 0 || trailing_windings(m.q, cyc) == 0;
    }

    BasisMonomial classify(const Monomial& m) const {
        if (!is_basic(m)) throw precondition_error("classify: monomial not in basis form");
        BasisMonomial b;
        VertexId v = m.p.target(*g_);
        b.middle = v;
        if (g_->is_sink(v)) {
            b.sink_term = true;
            b.p = m.p;
            b.q = m.q;
            return b;
        }
        b.cycle_index = cs_.cycle_of_vertex[v];
        const Cycle& cyc = cs_.cycles[(std::size_t)b.cycle_index];
        std::size_t a_pow = trailing_windings(m.p, cyc);
        std::size_t b_pow = trailing_windings(m.q, cyc);
        b.p = m.p;
        b.q = m.q;
        for (std::size_t i = 0; i < a_pow; ++i) b.p = strip_one(b.p, cyc);
        for (std::size_t i = 0; i < b_pow; ++i) b.q = strip_one(b.q, cyc);
        b.n = (long long)a_pow - (long long)b_pow;
        return b;
    }

    // Deterministic human-readable basis form, e.g. "2 · e.f (g.h)^-1 (e)*".
    std::string to_basis_string(const Element& raw) const {
        Element a = normalize(raw);
        if (a.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : a.terms()) {
            if (!first) os << " + ";
            first = false;
            BasisMonomial b = classify(m);
            std::vector<std::string> parts;
            if (b.p.length() > 0) parts.push_back(b.p.str(*g_));
            if (!b.sink_term && b.n != 0) {
                const Cycle& cyc = cs_.cycles[(std::size_t)b.cycle_index];
                parts.push_back("(" + cyc.as_path(*g_).str(*g_) + ")^" +
                                std::to_string(b.n));
            }
            if (b.q.length() > 0) parts.push_back("(" + b.q.str(*g_) + ")*");
            if (parts.empty()) parts.push_back(g_->vertex_name(b.middle));
            if (!c.is_one()) os << c.str() << " · ";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) os << " ";
                os << parts[i];
            }
        }
        return os.str();
    }

private:
    void expand_ck2(const Monomial& m, const RingValue& c, VertexId v,
                    std::vector<std::pair<Monomial, RingValue>>& work) const {
        for (ArrowId e : g_->out_arrows(v))
            work.emplace_back(Monomial{m.p.append(*g_, e), m.q.append(*g_, e)}, c);
    }

    std::size_t trailing_windings(const Path& p, const Cycle& c) const {
        std::size_t count = 0, len = p.length();
        while (len >= c.length() &&
               std::equal(c.arrows.begin(), c.arrows.end(),
                          p.arrows.begin() + (std::ptrdiff_t)(len - c.length()))) {
            ++count;
            len -= c.length();
        }
        return count;
    }

    Path strip_one(const Path& p, const Cycle& c) const {
        Path r = p;
        r.arrows.resize(r.arrows.size() - c.length());
        return r;
    }

    // (r, f) pairs of the seam identity: r a proper prefix of C (length 0..|C|-1),
    // f an exit arrow at tr.
    std::vector<std::pair<Path, ArrowId>> seam_exits(const Cycle& c) const {
        std::vector<std::pair<Path, ArrowId>> out;
        Path r = Path::at(c.base(*g_));
        for (std::size_t j = 0; j < c.length(); ++j) {
            VertexId v = g_->arrow(c.arrows[j]).src;
            for (ArrowId f : g_->out_arrows(v))
                if (f != c.arrows[j]) out.emplace_back(r, f);
            r = r.append(*g_, c.arrows[j]);
        }
        return out;
    }

    const Digraph* g_;
    CycleSet cs_;
    std::size_t term_cap_;
};

inline Element normalize(const Element& a, std::size_t term_cap = 1000000) {
    return Normalizer(a.graph(), term_cap).normalize(a);
}

inline bool equals(const Element& a, const Element& b) {
    return normalize(a.sub(b)).is_zero();
}

}  // namespace lpa
