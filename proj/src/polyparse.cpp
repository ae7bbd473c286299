#include "normeq/polyparse.hpp"

#include <cctype>

namespace normeq {

namespace {

// Bivariate polynomials are carried as coefficient lists in t during
// parsing; arithmetic stays tiny because inputs are tiny.
struct XT {
    std::vector<Poly> c;  // c[i] multiplies t^i
    uint32_t q;

    explicit XT(uint32_t q_) : q(q_) {}
    static XT constant(uint32_t q, uint32_t a) {
        XT r(q);
        Poly p = Poly::constant(q, a);
        if (!p.is_zero()) r.c.push_back(p);
        return r;
    }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

XT xt_add(const XT& a, const XT& b) {
    XT r(a.q);
    r.c.resize(std::max(a.c.size(), b.c.size()), Poly(a.q));
    for (size_t i = 0; i < r.c.size(); ++i) {
        Poly s(a.q);
        if (i < a.c.size()) s = s + a.c[i];
        if (i < b.c.size()) s = s + b.c[i];
        r.c[i] = s;
    }
    r.trim();
    return r;
}

XT xt_neg(const XT& a) {
    XT r = a;
    for (auto& p : r.c) p = -p;
    return r;
}

XT xt_mul(const XT& a, const XT& b) {
    XT r(a.q);
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Poly(a.q));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
}

XT xt_pow(XT base, uint64_t e, uint32_t q) {
    XT r = XT::constant(q, 1);
    while (e) {
        if (e & 1) r = xt_mul(r, base);
        base = xt_mul(base, base);
        e >>= 1;
    }
    return r;
}

struct Parser {
    const std::string& s;
    uint32_t q;
    size_t pos = 0;
    size_t line = 1, col = 1;

    Parser(const std::string& text, uint32_t q_) : s(text), q(q_) {}

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

    void advance() {
        if (pos < s.size()) {
            if (s[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
            advance();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    uint64_t read_int() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<uint64_t>(s[pos] - '0');
            if (v > (1ull << 62)) fail("integer literal too large");
            advance();
        }
        return v;
    }

    // expr := ['-'|'+'] term (('+'|'-') term)*
    XT parse_expr() {
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = c == '-';
            advance();
        }
        XT acc = parse_term();
        if (neg) acc = xt_neg(acc);
        for (;;) {
            c = peek();
            if (c == '+' || c == '-') {
                advance();
                XT t = parse_term();
                acc = xt_add(acc, c == '-' ? xt_neg(t) : t);
            } else {
                return acc;
            }
        }
    }

    // term := factor (('*' factor) | factor)*   (juxtaposition multiplies)
    XT parse_term() {
        XT acc = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                advance();
                acc = xt_mul(acc, parse_factor());
            } else if (c == '(' || c == 'x' || c == 't' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = xt_mul(acc, parse_factor());
            } else {
                return acc;
            }
        }
    }

    // factor := atom ['^' int]
    XT parse_factor() {
        XT a = parse_atom();
        if (peek() == '^') {
            advance();
            uint64_t e = read_int();
            if (e > 4096) fail("exponent too large");
            a = xt_pow(a, e, q);
        }
        return a;
    }

    XT parse_atom() {
        char c = peek();
        if (c == '(') {
            advance();
            XT inner = parse_expr();
            if (peek() != ')') fail("expected ')'");
            advance();
            return inner;
        }
        if (c == 'x') {
            advance();
            XT r(q);
            r.c.push_back(Poly::x(q));
            return r;
        }
        if (c == 't') {
            advance();
            XT r(q);
            r.c.push_back(Poly(q));
            r.c.push_back(Poly::constant(q, 1));
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            uint64_t v = read_int();
            return XT::constant(q, static_cast<uint32_t>(v % q));
        }
        fail(std::string("unexpected character '") + (c ? std::string(1, c) : "end of input") + "'");
    }

    XT run() {
        XT r = parse_expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return r;
    }
};

}  // namespace

Poly parse_poly_x(const std::string& text, uint32_t q) {
    Parser p(text, q);
    XT r = p.run();
    if (r.c.size() > 1)
        throw ParseError("variable t not allowed here", 1, 1);
    return r.c.empty() ? Poly(q) : r.c[0];
}

std::vector<Poly> parse_poly_xt(const std::string& text, uint32_t q) {
    Parser p(text, q);
    XT r = p.run();
    if (r.c.empty()) r.c.push_back(Poly(q));
    return r.c;
}

std::string poly_xt_to_string(const std::vector<Poly>& f) {
    std::string out;
    for (size_t i = f.size(); i-- > 0;) {
        const Poly& ci = f[i];
        if (ci.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = ci.to_string("x");
        bool composite = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (i == 0) {
            out += cs;
        } else {
            if (!ci.is_one()) out += (composite ? "(" + cs + ")" : cs) + "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace normeq
