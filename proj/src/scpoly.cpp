#include "braidlab/scpoly.hpp"

#include <cctype>
#include <sstream>

#include "braidlab/errors.hpp"

namespace braidlab {

SCPolynomial SCPolynomial::constant(const Scalar& c) {
    SCPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(Monomial(), c);
    return p;
}

SCPolynomial SCPolynomial::generator(int index) {
    SCPolynomial p;
    p.terms_.emplace(Monomial::variable(index), Scalar(1));
    return p;
}

SCPolynomial SCPolynomial::term(Monomial m, Scalar c) {
    SCPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

int SCPolynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void SCPolynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SCPolynomial& SCPolynomial::operator+=(const SCPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SCPolynomial& SCPolynomial::operator-=(const SCPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SCPolynomial SCPolynomial::operator+(const SCPolynomial& o) const {
    SCPolynomial r = *this;
    r += o;
    return r;
}

SCPolynomial SCPolynomial::operator-(const SCPolynomial& o) const {
    SCPolynomial r = *this;
    r -= o;
    return r;
}

SCPolynomial SCPolynomial::operator-() const {
    SCPolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SCPolynomial SCPolynomial::operator*(const Scalar& c) const {
    SCPolynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

SCPolynomial SCPolynomial::map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const {
    SCPolynomial r;
    for (const auto& [m, c] : terms_) {
        Scalar v = fn(c);
        if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
}

int sc_monomial_parity(const Monomial& m, const std::vector<int>& parities) {
    int p = 0;
    const auto& e = m.exponents();
    for (size_t i = 0; i < e.size(); ++i) p += parities.at(i) * e[i];
    return p & 1;
}

std::optional<int> sc_parity(const SCPolynomial& p, const std::vector<int>& parities) {
    std::optional<int> parity;
    for (const auto& [m, c] : p.terms()) {
        int mp = sc_monomial_parity(m, parities);
        if (!parity)
            parity = mp;
        else if (*parity != mp)
            return std::nullopt;
    }
    if (!parity) return 0;
    return parity;
}

SCPolynomial sc_mul(const SCPolynomial& a, const SCPolynomial& b, const std::vector<int>& parities) {
    SCPolynomial r;
    for (const auto& [ma, ca] : a.terms()) {
        const auto& ea = ma.exponents();
        for (const auto& [mb, cb] : b.terms()) {
            const auto& eb = mb.exponents();
            // Odd squares vanish; count Koszul inversions i > j.
            bool dead = false;
            int inversions = 0;
            for (size_t i = 0; i < ea.size() && !dead; ++i) {
                if (ea[i] == 0 || !parities.at(i)) continue;
                if (i < eb.size() && eb[i] != 0) {
                    dead = true;
                    break;
                }
                for (size_t j = 0; j < std::min(i, eb.size()); ++j)
                    if (parities.at(j) && eb[j] != 0) inversions += ea[i] * eb[j];
            }
            if (dead) continue;
            Scalar c = ca * cb;
            if (inversions & 1) c = -c;
            r.add_term(ma * mb, c);
        }
    }
    return r;
}

std::string SCPolynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string cs = it->second.to_string();
        bool negated = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
            cs.find(" - ") == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        bool needs_parens = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        std::ostringstream mono;
        bool empty = true;
        const auto& e = it->first.exponents();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!empty) mono << "*";
            mono << names.at(i);
            if (e[i] != 1) mono << "^" << e[i];
            empty = false;
        }
        if (empty) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") os << (needs_parens ? "(" + cs + ")" : cs) << "*";
            os << mono.str();
        }
        first = false;
    }
    return os.str();
}

// ----------------------------------------------------------------- parser

namespace {

struct SCParser {
    const std::string& s;
    const std::vector<Generator>& gens;
    std::vector<int> parities;
    size_t pos = 0;

    SCParser(const std::string& text, const std::vector<Generator>& g) : s(text), gens(g) {
        for (const auto& gen : gens) parities.push_back(gen.parity);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected integer in '" + s + "'");
        return std::stoi(s.substr(start, pos - start));
    }

    SCPolynomial parse_expr() {
        SCPolynomial acc = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc += parse_term();
            } else if (c == '-') {
                ++pos;
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    SCPolynomial parse_term() {
        SCPolynomial acc = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = sc_mul(acc, parse_factor(), parities);
            } else if (c == '/') {
                ++pos;
                SCPolynomial div = parse_factor();
                if (div.terms().size() != 1 || !div.terms().begin()->first.is_one())
                    throw ParseError("division by a non-scalar in '" + s + "'");
                acc = acc * div.terms().begin()->second.inverse();
            } else {
                return acc;
            }
        }
    }

    SCPolynomial parse_factor() {
        SCPolynomial base = parse_atom();
        if (peek() == '^') {
            ++pos;
            int e = parse_int();
            if (e < 0) {
                if (base.terms().size() != 1 || !base.terms().begin()->first.is_one())
                    throw ParseError("negative power of a non-scalar in '" + s + "'");
                return SCPolynomial::constant(base.terms().begin()->second.pow(e));
            }
            SCPolynomial acc = SCPolynomial::constant(Scalar(1));
            for (int i = 0; i < e; ++i) acc = sc_mul(acc, base, parities);
            return acc;
        }
        return base;
    }

    SCPolynomial parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of '" + s + "'");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            SCPolynomial inner = parse_expr();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') throw ParseError("missing ')' in '" + s + "'");
            ++pos;
            return inner;
        }
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return SCPolynomial::constant(Scalar(Rational(s.substr(start, pos - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (size_t i = 0; i < gens.size(); ++i)
                if (gens[i].name == name) return SCPolynomial::generator(static_cast<int>(i));
            return SCPolynomial::constant(Scalar::variable(name));
        }
        throw ParseError(std::string("unexpected character '") + c + "' in '" + s + "'");
    }
};

} // namespace

SCPolynomial parse_scpoly(const std::string& text, const std::vector<Generator>& gens) {
    SCParser p(text, gens);
    SCPolynomial r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input in '" + text + "'");
    return r;
}

} // namespace braidlab
