#include "braidlab/ncpoly.hpp"

#include <sstream>

namespace braidlab {

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << "*";
        os << names.at(w[i]);
    }
    return os.str();
}

NCPolynomial NCPolynomial::constant(const Scalar& c) {
    NCPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(Word{}, c);
    return p;
}

NCPolynomial NCPolynomial::generator(int index) {
    NCPolynomial p;
    p.terms_.emplace(Word{static_cast<uint8_t>(index)}, Scalar(1));
    return p;
}

NCPolynomial NCPolynomial::term(Word w, Scalar c) {
    NCPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

int NCPolynomial::degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
}

void NCPolynomial::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
    NCPolynomial r = *this;
    r += o;
    return r;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& o) const {
    NCPolynomial r = *this;
    r -= o;
    return r;
}

NCPolynomial NCPolynomial::operator-() const {
    NCPolynomial r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
    NCPolynomial r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) r.add_term(concat(wa, wb), ca * cb);
    return r;
}

NCPolynomial NCPolynomial::operator*(const Scalar& c) const {
    NCPolynomial r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
    return r;
}

Scalar NCPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

NCPolynomial NCPolynomial::graded_part(int degree) const {
    NCPolynomial r;
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == degree) r.terms_.emplace(w, c);
    return r;
}

NCPolynomial NCPolynomial::map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const {
    NCPolynomial r;
    for (const auto& [w, c] : terms_) {
        Scalar v = fn(c);
        if (!v.is_zero()) r.terms_.emplace(w, std::move(v));
    }
    return r;
}

std::string NCPolynomial::to_string(const std::vector<std::string>& names) const {
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
        if (it->first.empty()) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") os << (needs_parens ? "(" + cs + ")" : cs) << "*";
            os << word_to_string(it->first, names);
        }
        first = false;
    }
    return os.str();
}

} // namespace braidlab
