#ifndef PENCIL5_POLYIO_HPP
#define PENCIL5_POLYIO_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "pencil5/bipoly.hpp"

namespace pencil5 {

/// Canonical text form: terms in grevlex-descending order joined by " + " /
/// " - ", each term an optional coefficient ("a" or "a/b") and '*'-separated
/// variable powers "v^e". parse_poly(print_poly(f)) == f exactly.
template <class F>
std::string print_poly(const BiPoly<F>& f) {
    if (f.is_zero()) return "0";
    const auto& ring = *f.ring();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::string cs = f.field().to_string(t.coeff);
        const bool negative = !cs.empty() && cs[0] == '-';
        const std::string mag = negative ? cs.substr(1) : cs;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars;
        for (int i = 0; i < ring.var_count(); ++i) {
            const int e = t.mono.exp(i);
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring.name(i);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += mag;
        } else if (mag == "1") {
            out += vars;
        } else {
            out += mag + "*" + vars;
        }
    }
    return out;
}

namespace detail {

struct PolyLexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError("polynomial syntax error at position " + std::to_string(pos) + ": " + what);
    }
    std::string_view read_int() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return text.substr(start, pos - start);
    }
    std::string read_name() {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            fail("expected variable name");
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

} // namespace detail

/// Parses the grammar above. Reports syntax errors with position and unknown
/// variable names against the given grading.
template <class F>
BiPoly<F> parse_poly(const F& field, const GradingPtr& ring, std::string_view text) {
    detail::PolyLexer lx{text};
    if (lx.eof()) throw UsageError("empty polynomial text");
    std::map<Monomial, typename F::Elem, GrevlexLess> acc;

    bool first_term = true;
    while (!lx.eof()) {
        bool negative = false;
        const char c = lx.peek();
        if (c == '+' || c == '-') {
            negative = (c == '-');
            ++lx.pos;
        } else if (!first_term) {
            lx.fail("expected '+' or '-' between terms");
        }
        first_term = false;

        typename F::Elem coeff = field.one();
        bool saw_factor = false;
        Monomial mono(ring->var_count());

        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            std::string literal(lx.read_int());
            if (lx.peek() == '/') {
                ++lx.pos;
                literal += "/";
                literal += lx.read_int();
            }
            coeff = field.parse(literal);
            saw_factor = true;
            if (lx.peek() == '*') {
                ++lx.pos;
                if (!std::isalpha(static_cast<unsigned char>(lx.peek())) && lx.peek() != '_')
                    lx.fail("expected variable after '*'");
            } else if (std::isalpha(static_cast<unsigned char>(lx.peek())) || lx.peek() == '_') {
                lx.fail("missing '*' between coefficient and variable");
            }
        }

        while (std::isalpha(static_cast<unsigned char>(lx.peek())) || lx.peek() == '_') {
            const std::size_t name_pos = lx.pos;
            const std::string name = lx.read_name();
            const int idx = ring->index_of(name);
            if (idx < 0)
                throw UsageError("unknown variable '" + name + "' at position " + std::to_string(name_pos));
            int e = 1;
            if (lx.peek() == '^') {
                ++lx.pos;
                const auto digits = lx.read_int();
                if (digits.size() > 4) lx.fail("exponent too large");
                e = std::stoi(std::string(digits));
            }
            mono.set(idx, mono.exp(idx) + e);
            saw_factor = true;
            if (lx.peek() == '*') {
                ++lx.pos;
                if (!std::isalpha(static_cast<unsigned char>(lx.peek())) && lx.peek() != '_')
                    lx.fail("expected variable after '*'");
            } else {
                break;
            }
        }
        if (!saw_factor) lx.fail("empty term");

        if (negative) coeff = field.neg(coeff);
        if (field.is_zero(coeff)) continue;
        auto it = acc.find(mono);
        if (it == acc.end()) acc.emplace(mono, coeff);
        else {
            it->second = field.add(it->second, coeff);
            if (field.is_zero(it->second)) acc.erase(it);
        }
    }
    return BiPoly<F>::from_map(field, ring, acc);
}

} // namespace pencil5

#endif
