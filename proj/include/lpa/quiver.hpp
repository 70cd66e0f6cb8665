/*
 * quiver.hpp
 * ----------
 * Finite-dimensional representations of L_Q(Γ) built from vertex spaces and
 * arrow maps. A family { M_v } with maps A_e : M_{se} → M_{te} yields a
 * module exactly when, at every non-sink v, the stacked map
 *
 *   S_v = [ A_{e_1} | ... | A_{e_r} ] : M_v → ⊕_{se=v} M_{te}
 *
 * is invertible; the dual arrows then act by the blocks of S_v^{-1}.
 *
 * Matrices act on row vectors, so the matrix of a product is the product of
 * the matrices in the same order: M(ab) = M(a)·M(b).
 */
#pragma once

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/ideal.hpp"
#include "lpa/ratmat.hpp"
#include "lpa/reduction.hpp"

namespace lpa {

struct Representation {
    const Digraph* g = nullptr;
    std::vector<std::size_t> dims;  // per VertexId
    std::vector<RatMat> maps;       // per ArrowId, shape dim(se) x dim(te)

    std::size_t total_dim() const {
        std::size_t n = 0;
        for (std::size_t d : dims) n += d;
        return n;
    }
};

// Line grammar:
//   dim <vertex> = <d>
//   map <arrow> = <entries...>    (row-major rationals, dim(se) x dim(te))
//   # comment
// The '=' is optional on input. Every vertex needs a dim line; arrows whose
// shape has a zero side may omit theirs.
inline Representation parse_representation(const Digraph& g, const std::string& text) {
    Representation rep;
    rep.g = &g;
    rep.dims.assign(g.vertex_count(), (std::size_t)-1);
    std::map<std::string, std::vector<Rat>> raw_maps;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto fail = [&](const std::string& msg) {
            throw input_error("representation line " + std::to_string(lineno) + ": " + msg);
        };
        auto eat_equals = [&] {
            std::istream::pos_type mark = ls.tellg();
            std::string tok;
            if (ls >> tok && tok != "=") {
                ls.clear();
                ls.seekg(mark);
            }
        };
        if (kw == "dim") {
            std::string v;
            long long d = -1;
            if (!(ls >> v)) fail("dim needs <vertex> [=] <nonnegative d>");
            eat_equals();
            if (!(ls >> d) || d < 0) fail("dim needs <vertex> [=] <nonnegative d>");
            if (!g.has_vertex(v)) fail("unknown vertex: " + v);
            rep.dims[g.vertex_id(v)] = (std::size_t)d;
        } else if (kw == "map") {
            std::string a;
            if (!(ls >> a)) fail("map needs <arrow> [=] <entries...>");
            if (!g.has_arrow(a)) fail("unknown arrow: " + a);
            eat_equals();
            std::vector<Rat> entries;
            std::string tok;
            while (ls >> tok) {
                try {
                    entries.push_back(Rat(tok));
                } catch (const std::exception&) {
                    fail("bad rational: " + tok);
                }
            }
            raw_maps[a] = std::move(entries);
        } else {
            fail("unknown keyword: " + kw);
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (rep.dims[v] == (std::size_t)-1)
            throw input_error("representation: missing dim for vertex " + g.vertex_name(v));

    rep.maps.resize(g.arrow_count());
    for (ArrowId a = 0; a < g.arrow_count(); ++a) {
        std::size_t r = rep.dims[g.arrow(a).src], c = rep.dims[g.arrow(a).dst];
        RatMat m(r, c);
        auto it = raw_maps.find(g.arrow(a).name);
        if (it == raw_maps.end()) {
            if (r * c != 0)
                throw input_error("representation: missing map for arrow " +
                                  g.arrow(a).name);
        } else {
            if (it->second.size() != r * c)
                throw input_error("representation: map " + g.arrow(a).name + " has " +
                                  std::to_string(it->second.size()) + " entries, expected " +
                                  std::to_string(r * c));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) m(i, j) = it->second[i * c + j];
        }
        rep.maps[a] = std::move(m);
    }
    return rep;
}

inline std::string representation_to_text(const Representation& rep) {
    const Digraph& g = *rep.g;
    std::ostringstream os;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        os << "dim " << g.vertex_name(v) << " = " << rep.dims[v] << "\n";
    for (ArrowId a = 0; a < g.arrow_count(); ++a) {
        const RatMat& m = rep.maps[a];
        if (m.rows() * m.cols() == 0) continue;
        os << "map " << g.arrow(a).name << " =";
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) os << " " << m(i, j);
        os << "\n";
    }
    return os.str();
}

namespace detail {

inline RatMat stack_maps(const Representation& rep, VertexId v) {
    const Digraph& g = *rep.g;
    std::size_t cols = 0;
    for (ArrowId a : g.out_arrows(v)) cols += rep.dims[g.arrow(a).dst];
    RatMat s(rep.dims[v], cols);
    std::size_t off = 0;
    for (ArrowId a : g.out_arrows(v)) {
        const RatMat& m = rep.maps[a];
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) s(i, off + j) = m(i, j);
        off += m.cols();
    }
    return s;
}

}  // namespace detail

// The module condition: at each non-sink v the stacked arrow map is square
// and invertible.
inline Verdict check_iso(const Representation& rep) {
    const Digraph& g = *rep.g;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_sink(v)) continue;
        RatMat s = detail::stack_maps(rep, v);
        if (s.rows() != s.cols())
            return {false, "stacked map at " + g.vertex_name(v) + " is " +
                               std::to_string(s.rows()) + "x" + std::to_string(s.cols()) +
                               ", not square"};
        if (!s.inverse())
            return {false, "stacked map at " + g.vertex_name(v) + " is singular"};
    }
    return {true, ""};
}

// Matrices of the generator actions on ⊕ M_v (block layout by VertexId).
struct GeneratorAction {
    std::size_t total = 0;
    std::vector<std::size_t> offset;  // per vertex
    std::vector<RatMat> vertex;       // per VertexId
    std::vector<RatMat> arrow;        // per ArrowId
    std::vector<RatMat> dual;         // per ArrowId
};

inline GeneratorAction generator_action(const Representation& rep) {
    const Digraph& g = *rep.g;
    if (!check_iso(rep).pass)
        throw precondition_error("generator_action: representation fails the module condition");
    GeneratorAction act;
    act.offset.assign(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        act.offset[v] = act.total;
        act.total += rep.dims[v];
    }
    auto embed = [&](VertexId rv, VertexId cv, const RatMat& m) {
        RatMat big(act.total, act.total);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                big(act.offset[rv] + i, act.offset[cv] + j) = m(i, j);
        return big;
    };
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        act.vertex.push_back(embed(v, v, RatMat::identity(rep.dims[v])));
    act.arrow.resize(g.arrow_count());
    act.dual.resize(g.arrow_count());
    for (ArrowId a = 0; a < g.arrow_count(); ++a)
        act.arrow[a] = embed(g.arrow(a).src, g.arrow(a).dst, rep.maps[a]);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_sink(v)) continue;
        RatMat sinv = *detail::stack_maps(rep, v).inverse();
        std::size_t off = 0;
        for (ArrowId a : g.out_arrows(v)) {
            std::size_t d = rep.dims[g.arrow(a).dst];
            RatMat b(d, rep.dims[v]);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < rep.dims[v]; ++j) b(i, j) = sinv(off + i, j);
            act.dual[a] = embed(g.arrow(a).dst, v, b);
            off += d;
        }
    }
    return act;
}

// Matrix of an element of L_Q(Γ) under the action (coefficients must be
// rational).
inline RatMat element_action(const GeneratorAction& act, const Representation& rep,
                             const Element& a) {
    const Digraph& g = *rep.g;
    if (a.ring().id != RingId::rationals)
        throw precondition_error("element_action needs rational coefficients");
    RatMat out(act.total, act.total);
    for (const auto& [m, c] : a.terms()) {
        RatMat word = act.vertex[m.p.source()];
        for (ArrowId e : m.p.arrows) word = word * act.arrow[e];
        for (auto it = m.q.arrows.rbegin(); it != m.q.arrows.rend(); ++it)
            word = word * act.dual[*it];
        Rat coeff = c.rational();
        for (std::size_t i = 0; i < act.total; ++i)
            for (std::size_t j = 0; j < act.total; ++j) out(i, j) += coeff * word(i, j);
    }
    return out;
}

// Exact audit of the defining relations in the matrix model.
inline Verdict relation_audit(const Representation& rep) {
    const Digraph& g = *rep.g;
    Verdict iso = check_iso(rep);
    if (!iso.pass) return iso;
    GeneratorAction act = generator_action(rep);
    const std::size_t n = act.total;

    RatMat sum(n, n);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (VertexId w = 0; w < g.vertex_count(); ++w) {
            RatMat prod = act.vertex[v] * act.vertex[w];
            RatMat expect = (v == w) ? act.vertex[v] : RatMat(n, n);
            if (!(prod == expect))
                return {false, "(V) fails at " + g.vertex_name(v) + "," + g.vertex_name(w)};
        }
        sum = sum + act.vertex[v];
    }
    if (!(sum == RatMat::identity(n))) return {false, "(V) vertex sum is not the identity"};

    for (ArrowId e = 0; e < g.arrow_count(); ++e) {
        const Arrow& ar = g.arrow(e);
        if (!(act.vertex[ar.src] * act.arrow[e] == act.arrow[e]) ||
            !(act.arrow[e] * act.vertex[ar.dst] == act.arrow[e]))
            return {false, "(E) fails at arrow " + ar.name};
        if (!(act.vertex[ar.dst] * act.dual[e] == act.dual[e]) ||
            !(act.dual[e] * act.vertex[ar.src] == act.dual[e]))
            return {false, "(E) fails at dual of arrow " + ar.name};
    }

    for (ArrowId e = 0; e < g.arrow_count(); ++e)
        for (ArrowId f = 0; f < g.arrow_count(); ++f) {
            RatMat prod = act.dual[e] * act.arrow[f];
            RatMat expect = (e == f) ? act.vertex[g.arrow(e).dst] : RatMat(n, n);
            if (!(prod == expect))
                return {false, "(CK1) fails at " + g.arrow(e).name + "," + g.arrow(f).name};
        }

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_sink(v)) continue;
        RatMat acc(n, n);
        for (ArrowId e : g.out_arrows(v)) acc = acc + act.arrow[e] * act.dual[e];
        if (!(acc == act.vertex[v])) return {false, "(CK2) fails at " + g.vertex_name(v)};
    }
    return {true, ""};
}

// Representation of the reduced digraph induced by one elimination step:
// surviving vertices keep their spaces, kept arrows keep their maps, and a
// composite arrow acts by the product of its two factors.
inline Representation restrict_representation(const Representation& rep,
                                              const ReductionStep& step) {
    const Digraph& from = step.before;
    const Digraph& to = step.after;
    std::map<std::string, std::pair<std::string, std::string>> prov;
    for (const NewArrow& na : step.new_arrows) prov[na.name] = {na.f, na.g};

    Representation out;
    out.g = &to;
    out.dims.assign(to.vertex_count(), 0);
    for (VertexId v = 0; v < to.vertex_count(); ++v)
        out.dims[v] = rep.dims[from.vertex_id(to.vertex_name(v))];
    out.maps.resize(to.arrow_count());
    for (ArrowId a = 0; a < to.arrow_count(); ++a) {
        const std::string& name = to.arrow(a).name;
        auto it = prov.find(name);
        if (it == prov.end())
            out.maps[a] = rep.maps[from.arrow_id(name)];
        else
            out.maps[a] =
                rep.maps[from.arrow_id(it->second.first)] * rep.maps[from.arrow_id(it->second.second)];
    }
    return out;
}

// Random solution of the dimension constraints dim v = Σ_{se=v} dim te:
// vertices a cycle exits into are forced to 0, cycle vertices share one
// dimension, everything else accumulates in reverse topological order.
inline Representation random_representation(const Digraph& g, std::mt19937& rng,
                                            std::size_t sink_dim_max = 2) {
    CycleSet cs = cycles(g);
    if (!cs.disjoint)
        throw precondition_error("random_representation requires pairwise disjoint cycles");

    Representation rep;
    rep.g = &g;
    rep.dims.assign(g.vertex_count(), 0);

    // An exit cannot re-enter its own cycle (that would make a second,
    // overlapping cycle), so everything an exit reaches is forced to 0.
    std::vector<bool> forced_zero(g.vertex_count(), false);
    for (const Cycle& c : cs.cycles)
        for (ArrowId e : c.exits(g)) {
            VertexId t = g.arrow(e).dst;
            for (VertexId u = 0; u < g.vertex_count(); ++u)
                if (g.reaches(t, u)) forced_zero[u] = true;
        }

    auto rand_dim = [&] { return 1 + (std::size_t)(rng() % sink_dim_max); };
    for (std::size_t i = 0; i < cs.cycles.size(); ++i) {
        bool zero = false;
        for (VertexId v : cs.cycles[i].vertices(g))
            if (forced_zero[v]) zero = true;
        std::size_t d = zero ? 0 : rand_dim();
        for (VertexId v : cs.cycles[i].vertices(g)) rep.dims[v] = d;
    }
    for (VertexId v : g.sinks()) rep.dims[v] = forced_zero[v] ? 0 : rand_dim();

    // remaining (acyclic, non-sink) vertices in reverse topological order
    std::vector<VertexId> order;
    std::vector<bool> done(g.vertex_count(), false);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.is_sink(v) || cs.cycle_of_vertex[v] >= 0) done[v] = true;
    bool progress = true;
    while (progress) {
        progress = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (done[v]) continue;
            bool ready = true;
            for (ArrowId a : g.out_arrows(v))
                if (!done[g.arrow(a).dst]) ready = false;
            if (ready) {
                std::size_t d = 0;
                for (ArrowId a : g.out_arrows(v)) d += rep.dims[g.arrow(a).dst];
                rep.dims[v] = forced_zero[v] ? 0 : d;
                done[v] = true;
                progress = true;
            }
        }
    }
    for (bool b : done)
        if (!b) throw precondition_error("random_representation: unresolved vertex dims");

    auto random_invertible = [&](std::size_t n) {
        // unit lower x unit upper triangular with small entries
        RatMat l = RatMat::identity(n), u = RatMat::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i > j) l(i, j) = (int)(rng() % 5) - 2;
                if (i < j) u(i, j) = (int)(rng() % 5) - 2;
            }
        return l * u;
    };

    rep.maps.resize(g.arrow_count());
    for (ArrowId a = 0; a < g.arrow_count(); ++a)
        rep.maps[a] = RatMat(rep.dims[g.arrow(a).src], rep.dims[g.arrow(a).dst]);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_sink(v)) continue;
        std::size_t total = 0;
        for (ArrowId a : g.out_arrows(v)) total += rep.dims[g.arrow(a).dst];
        if (total != rep.dims[v])
            throw precondition_error("random_representation: dimension constraint violated at " +
                                     g.vertex_name(v));
        RatMat s = random_invertible(total);
        std::size_t off = 0;
        for (ArrowId a : g.out_arrows(v)) {
            std::size_t d = rep.dims[g.arrow(a).dst];
            RatMat m(rep.dims[v], d);
            for (std::size_t i = 0; i < rep.dims[v]; ++i)
                for (std::size_t j = 0; j < d; ++j) m(i, j) = s(i, off + j);
            rep.maps[a] = std::move(m);
            off += d;
        }
    }
    return rep;
}

}  // namespace lpa
