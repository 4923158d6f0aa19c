#include "braidlab/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "braidlab/errors.hpp"
#include "braidlab/symbols.hpp"

namespace braidlab {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(int index, int exponent) {
    Monomial m;
    if (exponent != 0) {
        m.exps_.assign(static_cast<size_t>(index) + 1, 0);
        m.exps_[static_cast<size_t>(index)] = exponent;
    }
    return m;
}

Monomial Monomial::from_exponents(std::vector<int> exps) {
    Monomial m;
    m.exps_ = std::move(exps);
    m.trim();
    return m;
}

void Monomial::trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

int Monomial::exponent(int index) const {
    if (index < 0 || static_cast<size_t>(index) >= exps_.size()) return 0;
    return exps_[static_cast<size_t>(index)];
}

int Monomial::total_degree() const {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
}

int Monomial::max_var() const { return static_cast<int>(exps_.size()) - 1; }

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<int> e(std::max(exps_.size(), o.exps_.size()), 0);
    for (size_t i = 0; i < exps_.size(); ++i) e[i] += exps_[i];
    for (size_t i = 0; i < o.exps_.size(); ++i) e[i] += o.exps_[i];
    return from_exponents(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    if (exps_.size() > o.exps_.size()) return false;
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    std::vector<int> e(std::max(exps_.size(), o.exps_.size()), 0);
    for (size_t i = 0; i < exps_.size(); ++i) e[i] += exps_[i];
    for (size_t i = 0; i < o.exps_.size(); ++i) e[i] -= o.exps_[i];
    return from_exponents(std::move(e));
}

bool Monomial::operator<(const Monomial& o) const {
    int da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    // Same degree: variable 0 most significant; larger exponent earlier
    // means a larger monomial.
    size_t n = std::max(exps_.size(), o.exps_.size());
    for (size_t i = 0; i < n; ++i) {
        int a = i < exps_.size() ? exps_[i] : 0;
        int b = i < o.exps_.size() ? o.exps_[i] : 0;
        if (a != b) return a < b;
    }
    return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_[Monomial()] = c;
}

Polynomial Polynomial::variable(int index, int exponent) {
    Polynomial p;
    p.terms_[Monomial::variable(index, exponent)] = 1;
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    assert(is_constant());
    return terms_.begin()->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(m), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Polynomial Polynomial::pow(int k) const {
    assert(k >= 0);
    Polynomial r(1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

void Polynomial::set_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

const Monomial& Polynomial::leading_monomial() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

int Polynomial::max_var() const {
    int v = -1;
    for (const auto& [m, c] : terms_) v = std::max(v, m.max_var());
    return v;
}

bool Polynomial::depends_on(int var) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(var) != 0) return true;
    return false;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return Monomial();
    std::vector<int> e = terms_.begin()->first.exponents();
    for (const auto& [m, c] : terms_) {
        const auto& me = m.exponents();
        size_t n = std::min(e.size(), me.size());
        e.resize(n);
        for (size_t i = 0; i < n; ++i) e[i] = std::min(e[i], me[i]);
        if (e.empty()) break;
    }
    return Monomial::from_exponents(std::move(e));
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const {
    Polynomial r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm.divided_by(m), c);
    return r;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& o) const {
    assert(!o.is_zero());
    Polynomial rem = *this;
    Polynomial quot;
    const Monomial& lmo = o.leading_monomial();
    const Rational& lco = o.leading_coeff();
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!lmo.divides(lm)) return std::nullopt;
        Monomial qm = lm.divided_by(lmo);
        Rational qc = rem.leading_coeff() / lco;
        Polynomial t;
        t.terms_.emplace(qm, qc);
        quot += t;
        rem -= t * o;
    }
    return quot;
}

Rational Polynomial::eval(const std::vector<std::optional<Rational>>& point) const {
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        const auto& e = m.exponents();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= point.size() || !point[i])
                throw UnboundVariable(SymbolTable::instance().name_of(static_cast<int>(i)));
            Rational base = *point[i];
            for (int k = 0; k < e[i]; ++k) t *= base;
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (e == 0) continue;
        std::vector<int> exps = m.exponents();
        exps[static_cast<size_t>(var)] -= 1;
        r.terms_.emplace(Monomial::from_exponents(std::move(exps)), c * e);
    }
    return r;
}

std::map<int, Polynomial> Polynomial::coefficients_in(int var) const {
    std::map<int, Polynomial> out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        std::vector<int> exps = m.exponents();
        if (static_cast<size_t>(var) < exps.size()) exps[static_cast<size_t>(var)] = 0;
        out[e].terms_.emplace(Monomial::from_exponents(std::move(exps)), c);
    }
    return out;
}

Polynomial Polynomial::from_coefficients_in(int var, const std::map<int, Polynomial>& coeffs) {
    Polynomial r;
    for (const auto& [e, p] : coeffs) {
        Polynomial xe = e == 0 ? Polynomial(1) : Polynomial::variable(var, e);
        r += p * xe;
    }
    return r;
}

// ------------------------------------------------------------------- gcd

namespace {

// Scales to integer coefficients with content 1 and positive leading
// coefficient.
Polynomial make_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (p.leading_coeff() < 0) scale = -scale;
    return p.scaled(scale);
}

using UPoly = std::map<int, Polynomial>;  // univariate with Polynomial coefficients

int udeg(const UPoly& u) { return u.empty() ? -1 : u.rbegin()->first; }

const Polynomial& ulead(const UPoly& u) { return u.rbegin()->second; }

UPoly uscale(const UPoly& u, const Polynomial& f) {
    UPoly r;
    for (const auto& [d, p] : u) {
        Polynomial q = p * f;
        if (!q.is_zero()) r.emplace(d, std::move(q));
    }
    return r;
}

UPoly ushift_sub(const UPoly& a, const UPoly& b_scaled, int shift) {
    // a - x^shift * b_scaled
    UPoly r = a;
    for (const auto& [d, p] : b_scaled) {
        auto it = r.find(d + shift);
        if (it == r.end()) {
            Polynomial q = -p;
            if (!q.is_zero()) r.emplace(d + shift, std::move(q));
        } else {
            it->second -= p;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0).
UPoly uprem(UPoly a, const UPoly& b) {
    const Polynomial& lb = ulead(b);
    int db = udeg(b);
    int steps = udeg(a) - db + 1;
    while (udeg(a) >= db && steps > 0) {
        int shift = udeg(a) - db;
        Polynomial la = ulead(a);
        a = ushift_sub(uscale(a, lb), uscale(b, la), shift);
        --steps;
    }
    return a;
}

Polynomial ucontent(const UPoly& u) {
    Polynomial g;
    for (const auto& [d, p] : u) g = Polynomial::gcd(g, p);
    return g;
}

UPoly uprimitive(const UPoly& u, const Polynomial& content) {
    UPoly r;
    for (const auto& [d, p] : u) {
        auto q = p.divided_by(content);
        assert(q);
        r.emplace(d, std::move(*q));
    }
    return r;
}

} // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return make_primitive(b);
    if (b.is_zero()) return make_primitive(a);

    // Monomial content first: cheap and covers the common Laurent-style
    // denominators (pure powers of q).
    Monomial mc_a = a.monomial_content();
    Monomial mc_b = b.monomial_content();
    std::vector<int> mc(std::min(mc_a.exponents().size(), mc_b.exponents().size()));
    for (size_t i = 0; i < mc.size(); ++i)
        mc[i] = std::min(mc_a.exponents()[i], mc_b.exponents()[i]);
    Monomial common = Monomial::from_exponents(std::move(mc));
    Polynomial pa = a.divided_by_monomial(mc_a);
    Polynomial pb = b.divided_by_monomial(mc_b);

    Polynomial core;
    if (pa.is_constant() || pb.is_constant()) {
        core = Polynomial(1);
    } else {
        int var = std::max(pa.max_var(), pb.max_var());
        UPoly ua = pa.coefficients_in(var);
        UPoly ub = pb.coefficients_in(var);
        Polynomial ca = ucontent(ua);
        Polynomial cb = ucontent(ub);
        UPoly fa = uprimitive(ua, ca);
        UPoly fb = uprimitive(ub, cb);
        if (udeg(fa) < udeg(fb)) std::swap(fa, fb);
        while (!fb.empty()) {
            UPoly r = uprem(fa, fb);
            fa = std::move(fb);
            if (r.empty()) {
                fb.clear();
            } else {
                Polynomial cr = ucontent(r);
                fb = uprimitive(r, cr);
            }
        }
        Polynomial inner = gcd(ca, cb);
        core = from_coefficients_in(var, fa) * inner;
        core = make_primitive(core);
    }

    Polynomial mono;
    mono.set_term(common, 1);
    return make_primitive(core * mono);
}

// ------------------------------------------------------------- rendering

std::string monomial_to_string(const Monomial& m, bool* leading_one) {
    std::ostringstream os;
    bool first = true;
    const auto& e = m.exponents();
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << SymbolTable::instance().name_of(static_cast<int>(i));
        if (e[i] != 1) os << "^" << e[i];
        first = false;
    }
    if (leading_one) *leading_one = first;
    return os.str();
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending canonical order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool empty_mono = false;
        std::string ms = monomial_to_string(it->first, &empty_mono);
        if (empty_mono) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << ms;
        }
        first = false;
    }
    return os.str();
}

} // namespace braidlab
