#include "fcart/parse.hpp"

#include <cctype>

#include "fcart/error.hpp"

namespace fcart {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::int64_t parse_uint(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.i;
    std::int64_t v = 0;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
        v = v * 10 + (cur.s[cur.i] - '0');
        if (v > (std::int64_t(1) << 40))
            raise(ErrorKind::SyntaxError, "integer literal too large", long(start));
        ++cur.i;
    }
    if (cur.i == start) raise(ErrorKind::SyntaxError, "expected an integer", long(start));
    return v;
}

std::int64_t parse_exponent(Cursor& cur) {
    cur.skip_ws();
    std::size_t at = cur.i;
    if (cur.peek() == '-')
        raise(ErrorKind::NegativeExponent, "negative exponent", long(at));
    if (cur.peek() == '(') {
        // no parentheses in the grammar; look ahead to report x^(-1) precisely
        std::size_t j = cur.i + 1;
        while (j < cur.s.size() && std::isspace(static_cast<unsigned char>(cur.s[j]))) ++j;
        if (j < cur.s.size() && cur.s[j] == '-')
            raise(ErrorKind::NegativeExponent, "negative exponent", long(j));
        raise(ErrorKind::SyntaxError, "parentheses are not part of the grammar", long(cur.i));
    }
    return parse_uint(cur);
}

// term := coeff? ('*'? factor)*
Polynomial parse_term(Cursor& cur, const RingPtr& ring) {
    const fp_t p = ring->p;
    fp_t coeff = 1;
    Monomial mono(ring->nvars);
    bool any = false;

    cur.skip_ws();
    if (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
        std::size_t start = cur.i;
        // reduce digit-by-digit so arbitrarily long literals stay exact mod p
        std::uint64_t acc = 0;
        while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
            acc = (acc * 10 + std::uint64_t(cur.s[cur.i] - '0')) % p;
            ++cur.i;
        }
        (void)start;
        coeff = fp_t(acc);
        any = true;
    }

    while (true) {
        cur.skip_ws();
        std::size_t at = cur.i;
        if (cur.i < cur.s.size() && cur.s[cur.i] == '*') {
            ++cur.i;
            cur.skip_ws();
            at = cur.i;
            if (cur.i >= cur.s.size() || !ident_start(cur.s[cur.i]))
                raise(ErrorKind::SyntaxError, "expected a variable after '*'", long(at));
        }
        if (cur.i >= cur.s.size() || !ident_start(cur.s[cur.i])) break;
        std::size_t name_start = cur.i;
        // longest variable name matching at this position ('*' may be omitted,
        // so adjacent single-letter variables are legal)
        std::size_t var = ring->nvars;
        std::size_t match_len = 0;
        for (std::size_t k = 0; k < ring->nvars; ++k) {
            const std::string& name = ring->var_names[k];
            if (name.size() > match_len && cur.s.compare(name_start, name.size(), name) == 0) {
                var = k;
                match_len = name.size();
            }
        }
        if (var == ring->nvars) {
            std::string name;
            std::size_t j = name_start;
            while (j < cur.s.size() && ident_char(cur.s[j])) name += cur.s[j++];
            raise(ErrorKind::UnknownVariable, "unknown variable '" + name + "'",
                  long(name_start));
        }
        cur.i = name_start + match_len;
        std::int64_t exp = 1;
        cur.skip_ws();
        if (cur.i < cur.s.size() && cur.s[cur.i] == '^') {
            ++cur.i;
            exp = parse_exponent(cur);
        }
        mono.e[var] += exp;
        any = true;
    }

    if (!any)
        raise(ErrorKind::SyntaxError, "expected a term", long(cur.i));
    return Polynomial::monomial(ring, std::move(mono), coeff);
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    Cursor cur{text};
    Polynomial result(ring);

    if (cur.done()) raise(ErrorKind::SyntaxError, "empty input", 0);

    bool negate = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
        negate = cur.peek() == '-';
        ++cur.i;
    }
    while (true) {
        Polynomial t = parse_term(cur, ring);
        result = negate ? result - t : result + t;
        if (cur.done()) break;
        char op = cur.peek();
        if (op != '+' && op != '-')
            raise(ErrorKind::SyntaxError, "expected '+' or '-'", long(cur.i));
        negate = op == '-';
        ++cur.i;
        if (cur.done()) raise(ErrorKind::SyntaxError, "dangling operator", long(cur.i));
    }
    return result;
}

} // namespace fcart
