/*
 * expr.hpp
 * --------
 * Parser for algebra-element expressions over a digraph:
 *
 *   expr    := ['-'] term (('+'|'-') term)*
 *   term    := factor (['.'] factor)*        juxtaposition multiplies
 *   factor  := primary '*'*                  postfix star = involution
 *   primary := name | number['/'number] | '{' ring literal '}' | '(' expr ')'
 *
 * Names resolve to vertices or single arrows; numbers are scalars in the
 * ambient ring; braces admit any coefficient literal (e.g. {1*x^-2}).
 */
#pragma once

#include <cctype>
#include <string>

#include "lpa/element.hpp"

namespace lpa {

namespace detail {

class ExprParser {
public:
    ExprParser(const Digraph& g, RingDesc ring, const std::string& text)
        : g_(g), ring_(ring), s_(text) {}

    Element parse() {
        Element e = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw input_error("unexpected trailing input at '" + s_.substr(pos_) + "'");
        return e;
    }

private:
    Element expr() {
        skip_ws();
        bool negate = eat('-');
        Element acc = term();
        if (negate) acc = acc.neg();
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc = acc.add(term());
            else if (eat('-'))
                acc = acc.sub(term());
            else
                return acc;
        }
    }

    Element term() {
        Element acc = factor();
        for (;;) {
            skip_ws();
            if (eat('.')) {
                acc = acc.mul(factor());
                continue;
            }
            char c = peek();
            if (std::isalnum((unsigned char)c) || c == '_' || c == '(' || c == '{') {
                acc = acc.mul(factor());
                continue;
            }
            return acc;
        }
    }

    Element factor() {
        Element e = primary();
        for (;;) {
            skip_ws();
            if (eat('*'))
                e = e.star();
            else
                return e;
        }
    }

    Element primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Element e = expr();
            skip_ws();
            if (!eat(')')) throw input_error("expected ')' in expression");
            return e;
        }
        if (c == '{') {
            std::size_t close = s_.find('}', pos_);
            if (close == std::string::npos) throw input_error("unterminated '{' literal");
            std::string lit = s_.substr(pos_ + 1, close - pos_ - 1);
            pos_ = close + 1;
            return Element::one(g_, ring_).scale(RingValue::parse(ring_, lit));
        }
        if (std::isdigit((unsigned char)c)) return number();
        if (std::isalpha((unsigned char)c) || c == '_') return name();
        throw input_error(pos_ == s_.size() ? "unexpected end of expression"
                                            : std::string("unexpected character '") + c +
                                                  "' in expression");
    }

    Element number() {
        std::string num = digits();
        if (peek() == '/') {
            ++pos_;
            std::string den = digits();
            if (den.empty()) throw input_error("expected denominator after '/'");
            num += "/" + den;
        }
        return Element::one(g_, ring_).scale(RingValue::parse(ring_, num));
    }

    Element name() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
            ++pos_;
        std::string id = s_.substr(start, pos_ - start);
        if (g_.has_vertex(id)) return Element::vertex(g_, ring_, g_.vertex_id(id));
        if (g_.has_arrow(id)) {
            ArrowId a = g_.arrow_id(id);
            return Element::path(g_, ring_, Path::at(g_.arrow(a).src).append(g_, a));
        }
        throw input_error("unknown name in expression: " + id);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Digraph& g_;
    RingDesc ring_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Element parse_element(const Digraph& g, RingDesc ring, const std::string& text) {
    return detail::ExprParser(g, ring, text).parse();
}

}  // namespace lpa
