/*
 * ring.hpp
 * --------
 * Pluggable exact commutative coefficient rings with 1: the integers,
 * the rationals, the residues mod m, and Laurent polynomials over Q.
 *
 * A RingValue carries its ring descriptor; operations on values from
 * different rings are rejected, never coerced. No floating point anywhere.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <variant>

#include "lpa/error.hpp"

namespace lpa {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RingId : std::uint8_t { integers, rationals, residues, laurent };

struct RingDesc {
    RingId id = RingId::rationals;
    std::int64_t modulus = 0;  // only for residues

    friend bool operator==(const RingDesc& a, const RingDesc& b) {
        return a.id == b.id && (a.id != RingId::residues || a.modulus == b.modulus);
    }
    friend bool operator!=(const RingDesc& a, const RingDesc& b) { return !(a == b); }

    std::string name() const {
        switch (id) {
            case RingId::integers: return "Z";
            case RingId::rationals: return "Q";
            case RingId::residues: return "Zmod:" + std::to_string(modulus);
            case RingId::laurent: return "laurent";
        }
        return "?";
    }

    static RingDesc Z() { return {RingId::integers, 0}; }
    static RingDesc Q() { return {RingId::rationals, 0}; }
    static RingDesc Zmod(std::int64_t m) {
        if (m < 2) throw input_error("Zmod modulus must be >= 2");
        return {RingId::residues, m};
    }
    static RingDesc Laurent() { return {RingId::laurent, 0}; }

    // Parses "Z", "Q", "Zmod:m", "laurent" (the CLI --ring grammar).
    static RingDesc parse(const std::string& s) {
        if (s == "Z") return Z();
        if (s == "Q") return Q();
        if (s == "laurent") return Laurent();
        if (s.rfind("Zmod:", 0) == 0) {
            try {
                return Zmod(std::stoll(s.substr(5)));
            } catch (const std::logic_error&) {
                throw input_error("bad modulus in ring selector: " + s);
            }
        }
        throw input_error("unknown ring selector: " + s);
    }

    // GK dimension of the coefficient ring as caller-supplied metadata:
    // fields and Z contribute 0, the Laurent ring contributes 1.
    int gk_dim() const { return id == RingId::laurent ? 1 : 0; }
};

// Laurent payload: exponent -> nonzero rational coefficient. Zero is {}.
using LaurentPoly = std::map<std::int64_t, Rat>;

class RingValue {
public:
    RingValue() : ring_(RingDesc::Q()), payload_(Rat(0)) {}

    static RingValue zero(const RingDesc& r) { return from_int(r, 0); }
    static RingValue one(const RingDesc& r) { return from_int(r, 1); }

    static RingValue from_int(const RingDesc& r, std::int64_t n) {
        RingValue v;
        v.ring_ = r;
        switch (r.id) {
            case RingId::integers: v.payload_ = Int(n); break;
            case RingId::rationals: v.payload_ = Rat(n); break;
            case RingId::residues: v.payload_ = mod(Int(n), r.modulus); break;
            case RingId::laurent: {
                LaurentPoly p;
                if (n != 0) p[0] = Rat(n);
                v.payload_ = std::move(p);
                break;
            }
        }
        return v;
    }

    static RingValue from_rational(const RingDesc& r, const Rat& q) {
        RingValue v;
        v.ring_ = r;
        switch (r.id) {
            case RingId::rationals: v.payload_ = q; return v;
            case RingId::laurent: {
                LaurentPoly p;
                if (q != 0) p[0] = q;
                v.payload_ = std::move(p);
                return v;
            }
            default: break;
        }
        if (boost::multiprecision::denominator(q) != 1)
            throw precondition_error("non-integer literal in ring " + r.name());
        Int n = boost::multiprecision::numerator(q);
        if (r.id == RingId::integers)
            v.payload_ = n;
        else
            v.payload_ = mod(n, r.modulus);
        return v;
    }

    // x^e with rational coefficient c, Laurent ring only.
    static RingValue monomial(const Rat& c, std::int64_t e) {
        RingValue v;
        v.ring_ = RingDesc::Laurent();
        LaurentPoly p;
        if (c != 0) p[e] = c;
        v.payload_ = std::move(p);
        return v;
    }

    const RingDesc& ring() const { return ring_; }

    // The underlying rational; rationals ring only.
    const Rat& rational() const {
        if (ring_.id != RingId::rationals)
            throw precondition_error("rational() on ring " + ring_.name());
        return std::get<Rat>(payload_);
    }

    bool is_zero() const {
        switch (ring_.id) {
            case RingId::integers: return std::get<Int>(payload_) == 0;
            case RingId::rationals: return std::get<Rat>(payload_) == 0;
            case RingId::residues: return std::get<Int>(payload_) == 0;
            case RingId::laurent: return std::get<LaurentPoly>(payload_).empty();
        }
        return true;
    }
    bool is_one() const { return *this == one(ring_); }

    RingValue add(const RingValue& b) const {
        check_same_ring(b);
        RingValue r = *this;
        switch (ring_.id) {
            case RingId::integers:
                std::get<Int>(r.payload_) += std::get<Int>(b.payload_);
                break;
            case RingId::rationals:
                std::get<Rat>(r.payload_) += std::get<Rat>(b.payload_);
                break;
            case RingId::residues:
                std::get<Int>(r.payload_) =
                    mod(std::get<Int>(payload_) + std::get<Int>(b.payload_), ring_.modulus);
                break;
            case RingId::laurent: {
                auto& p = std::get<LaurentPoly>(r.payload_);
                for (const auto& [e, c] : std::get<LaurentPoly>(b.payload_)) {
                    auto it = p.find(e);
                    if (it == p.end()) {
                        p.emplace(e, c);
                    } else {
                        it->second += c;
                        if (it->second == 0) p.erase(it);
                    }
                }
                break;
            }
        }
        return r;
    }

    RingValue neg() const {
        RingValue r = *this;
        switch (ring_.id) {
            case RingId::integers:
                std::get<Int>(r.payload_) = -std::get<Int>(payload_);
                break;
            case RingId::rationals:
                std::get<Rat>(r.payload_) = -std::get<Rat>(payload_);
                break;
            case RingId::residues:
                std::get<Int>(r.payload_) = mod(-std::get<Int>(payload_), ring_.modulus);
                break;
            case RingId::laurent:
                for (auto& [e, c] : std::get<LaurentPoly>(r.payload_)) c = -c;
                break;
        }
        return r;
    }

    RingValue sub(const RingValue& b) const { return add(b.neg()); }

    RingValue mul(const RingValue& b) const {
        check_same_ring(b);
        RingValue r;
        r.ring_ = ring_;
        switch (ring_.id) {
            case RingId::integers:
                r.payload_ = Int(std::get<Int>(payload_) * std::get<Int>(b.payload_));
                break;
            case RingId::rationals:
                r.payload_ = Rat(std::get<Rat>(payload_) * std::get<Rat>(b.payload_));
                break;
            case RingId::residues:
                r.payload_ =
                    mod(std::get<Int>(payload_) * std::get<Int>(b.payload_), ring_.modulus);
                break;
            case RingId::laurent: {
                LaurentPoly prod;
                for (const auto& [ea, ca] : std::get<LaurentPoly>(payload_))
                    for (const auto& [eb, cb] : std::get<LaurentPoly>(b.payload_)) {
                        std::int64_t e;
                        if (__builtin_add_overflow(ea, eb, &e))
                            throw precondition_error("Laurent exponent overflow");
                        Rat c = ca * cb;
                        auto it = prod.find(e);
                        if (it == prod.end()) {
                            if (c != 0) prod.emplace(e, std::move(c));
                        } else {
                            it->second += c;
                            if (it->second == 0) prod.erase(it);
                        }
                    }
                r.payload_ = std::move(prod);
                break;
            }
        }
        return r;
    }

    friend bool operator==(const RingValue& a, const RingValue& b) {
        return a.ring_ == b.ring_ && a.payload_ == b.payload_;
    }
    friend bool operator!=(const RingValue& a, const RingValue& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        switch (ring_.id) {
            case RingId::integers: os << std::get<Int>(payload_); break;
            case RingId::rationals: os << std::get<Rat>(payload_); break;
            case RingId::residues:
                os << std::get<Int>(payload_) << " mod " << ring_.modulus;
                break;
            case RingId::laurent: {
                const auto& p = std::get<LaurentPoly>(payload_);
                if (p.empty()) {
                    os << "0";
                    break;
                }
                bool first = true;
                for (const auto& [e, c] : p) {  // ascending exponents
                    if (!first) os << " + ";
                    first = false;
                    if (e == 0)
                        os << c;
                    else
                        os << c << "*x^" << e;
                }
                break;
            }
        }
        return os.str();
    }

    // Parses the same grammar str() emits; plain integers/rationals are
    // accepted as constants in every ring.
    static RingValue parse(const RingDesc& ring, const std::string& text);

private:
    static Int mod(Int a, std::int64_t m) {
        Int r = a % m;
        if (r < 0) r += m;
        return r;
    }

    void check_same_ring(const RingValue& b) const {
        if (ring_ != b.ring_)
            throw precondition_error("ring mismatch: " + ring_.name() + " vs " +
                                     b.ring_.name());
    }

    RingDesc ring_;
    std::variant<Int, Rat, LaurentPoly> payload_;
};

namespace detail {

inline std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw input_error("empty numeric literal");
    try {
        return Rat(s);
    } catch (const std::runtime_error&) {
        throw input_error("bad numeric literal: " + s);
    }
}

}  // namespace detail

inline RingValue RingValue::parse(const RingDesc& ring, const std::string& text) {
    std::string s = detail::strip(text);
    if (ring.id == RingId::residues) {
        auto pos = s.find(" mod ");
        if (pos != std::string::npos) {
            std::int64_t m = 0;
            try {
                m = std::stoll(detail::strip(s.substr(pos + 5)));
            } catch (const std::logic_error&) {
                throw input_error("bad residue literal: " + text);
            }
            if (m != ring.modulus)
                throw precondition_error("residue literal modulus " + std::to_string(m) +
                                         " does not match ring " + ring.name());
            s = detail::strip(s.substr(0, pos));
        }
        Rat q = detail::parse_rational(s);
        return from_rational(ring, q);
    }
    if (ring.id != RingId::laurent) return from_rational(ring, detail::parse_rational(s));

    // Laurent: terms joined by '+', each "c", "c*x^e", "x^e" or "-x^e".
    RingValue acc = RingValue::zero(ring);
    std::size_t start = 0;
    while (start <= s.size()) {
        auto plus = s.find('+', start);
        std::string term =
            detail::strip(plus == std::string::npos ? s.substr(start) : s.substr(start, plus - start));
        if (term.empty()) throw input_error("empty Laurent term in: " + text);
        Rat coeff(1);
        std::int64_t exp = 0;
        auto xpos = term.find('x');
        if (xpos == std::string::npos) {
            coeff = detail::parse_rational(term);
        } else {
            std::string c = detail::strip(term.substr(0, xpos));
            if (!c.empty() && c.back() == '*') c = detail::strip(c.substr(0, c.size() - 1));
            if (c == "-")
                coeff = Rat(-1);
            else if (!c.empty())
                coeff = detail::parse_rational(c);
            std::string e = detail::strip(term.substr(xpos + 1));
            if (e.empty()) {
                exp = 1;
            } else {
                if (e.front() != '^') throw input_error("bad Laurent term: " + term);
                try {
                    exp = std::stoll(detail::strip(e.substr(1)));
                } catch (const std::logic_error&) {
                    throw input_error("bad Laurent exponent in: " + term);
                }
            }
        }
        acc = acc.add(RingValue::monomial(coeff, exp));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return acc;
}

}  // namespace lpa
