#include "braidlab/scalar.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

#include "braidlab/errors.hpp"
#include "braidlab/symbols.hpp"

namespace braidlab {

Scalar Scalar::q() { return Scalar(Polynomial::variable(kVarQ)); }

Scalar Scalar::hbar() { return Scalar(Polynomial::variable(kVarHbar)); }

Scalar Scalar::variable(const std::string& name) {
    int idx = SymbolTable::instance().declare(name);
    return Scalar(Polynomial::variable(idx));
}

Scalar Scalar::fraction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw DivisionByZero();
    Scalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.reduce();
    return s;
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (!g.is_constant()) {
            auto qn = num_.divided_by(g);
            auto qd = den_.divided_by(g);
            assert(qn && qd);
            num_ = std::move(*qn);
            den_ = std::move(*qd);
        }
    }
    // Den monic: absorb the leading coefficient into num.
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool Scalar::is_one() const { return num_.is_constant() && den_.is_constant() && num_.constant_value() == 1; }

Rational Scalar::rational_value() const {
    assert(is_rational());
    return num_.constant_value() / den_.constant_value();
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
    } else {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
    }
    r.reduce();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r;
    if (den_ == o.den_) {
        r.num_ = num_ - o.num_;
        r.den_ = den_;
    } else {
        r.num_ = num_ * o.den_ - o.num_ * den_;
        r.den_ = den_ * o.den_;
    }
    r.reduce();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    Scalar r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.reduce();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    Rational lc = r.den_.leading_coeff();
    if (lc != 1) {
        Rational inv = 1 / lc;
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

Scalar Scalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar r(1);
    Scalar base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool Scalar::operator<(const Scalar& o) const {
    auto key = [](const Scalar& s) { return s.to_string(); };
    return key(*this) < key(o);
}

Rational Scalar::eval(const std::map<std::string, Rational>& point) const {
    auto& table = SymbolTable::instance();
    std::vector<std::optional<Rational>> vals(static_cast<size_t>(table.size()));
    for (const auto& [name, v] : point) {
        if (!table.known(name)) throw UnboundVariable(name);
        vals[static_cast<size_t>(table.index_of(name))] = v;
    }
    Rational d = den_.eval(vals);
    if (d == 0) {
        std::ostringstream os;
        bool first = true;
        for (const auto& [name, v] : point) {
            if (!first) os << ", ";
            os << name << " = " << v.get_str();
            first = false;
        }
        throw DenominatorVanishes(os.str());
    }
    return num_.eval(vals) / d;
}

Scalar Scalar::substitute(const std::string& var, const Scalar& value) const {
    int idx = SymbolTable::instance().index_of(var);
    auto subst_poly = [&](const Polynomial& p) -> Scalar {
        if (!p.depends_on(idx)) return Scalar(p);
        auto coeffs = p.coefficients_in(idx);
        Scalar acc;
        for (const auto& [e, cp] : coeffs) acc += Scalar(cp) * value.pow(e);
        return acc;
    };
    Scalar d = subst_poly(den_);
    if (d.is_zero()) throw DenominatorVanishes(var + " -> " + value.to_string());
    return subst_poly(num_) / d;
}

Scalar Scalar::derivative(const std::string& var) const {
    int idx = SymbolTable::instance().index_of(var);
    // (n/d)' = (n'd - nd')/d^2
    Polynomial n1 = num_.derivative(idx) * den_ - num_ * den_.derivative(idx);
    return Scalar::fraction(std::move(n1), den_ * den_);
}

// ------------------------------------------------------------- rendering

namespace {

// Renders num/denominator-monomial with Laurent exponents.
std::string laurent_string(const Polynomial& num, const Monomial& den_mono) {
    std::ostringstream os;
    bool first = true;
    for (auto it = num.terms().rbegin(); it != num.terms().rend(); ++it) {
        const Rational& c = it->second;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const auto& me = it->first.exponents();
        const auto& de = den_mono.exponents();
        std::vector<int> e(std::max(me.size(), de.size()), 0);
        for (size_t i = 0; i < me.size(); ++i) e[i] += me[i];
        for (size_t i = 0; i < de.size(); ++i) e[i] -= de[i];
        std::ostringstream mono;
        bool empty = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!empty) mono << "*";
            mono << SymbolTable::instance().name_of(static_cast<int>(i));
            if (e[i] != 1) mono << "^" << e[i];
            empty = false;
        }
        if (empty) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << mono.str();
        }
        first = false;
    }
    return os.str();
}

} // namespace

std::string Scalar::to_string() const {
    if (den_.is_constant()) {
        assert(den_.constant_value() == 1 || num_.is_zero());
        return num_.to_string();
    }
    if (den_.terms().size() == 1) {
        // Monic single-monomial denominator folds into Laurent exponents.
        return laurent_string(num_, den_.leading_monomial());
    }
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
    return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
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
        if (start == pos || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw ParseError("expected integer at offset " + std::to_string(start) + " in '" + s + "'");
        return std::stoi(s.substr(start, pos - start));
    }

    Scalar parse_expr() {
        Scalar acc = parse_term();
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

    Scalar parse_term() {
        Scalar acc = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc *= parse_factor();
            } else if (c == '/') {
                ++pos;
                acc /= parse_factor();
            } else {
                return acc;
            }
        }
    }

    Scalar parse_factor() {
        Scalar base = parse_atom();
        if (peek() == '^') {
            ++pos;
            int e = parse_int();
            return base.pow(e);
        }
        return base;
    }

    Scalar parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input in '" + s + "'");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Scalar inner = parse_expr();
            if (!eat(')')) throw ParseError("missing ')' in '" + s + "'");
            return inner;
        }
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (c == '+') {
            ++pos;
            return parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return Scalar(Rational(s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            return Scalar::variable(s.substr(start, pos - start));
        }
        throw ParseError(std::string("unexpected character '") + c + "' in '" + s + "'");
    }
};

} // namespace

Scalar Scalar::parse(const std::string& text) {
    Parser p(text);
    Scalar r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input in '" + text + "'");
    return r;
}

// ------------------------------------------------------------- utilities

Scalar q_int(int k) {
    Scalar qv = Scalar::q();
    return (qv.pow(k) - qv.pow(-k)) / (qv - qv.pow(-1));
}

void require_generic_q(const Rational& value) {
    if (value == 0) throw NonGenericQ("0");
    // Rational roots of cyclotomic polynomials of degree <= 8 are +-1;
    // check the polynomials explicitly anyway.
    Rational p = 1;
    for (int n = 1; n <= 8; ++n) {
        p *= value;
        if (p == 1) throw NonGenericQ(value.get_str());
    }
}

} // namespace braidlab
