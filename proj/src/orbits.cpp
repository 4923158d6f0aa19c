#include "braidlab/orbits.hpp"

#include <sstream>

namespace braidlab {

nlohmann::ordered_json Spectrum::to_json() const {
    nlohmann::ordered_json j;
    j["dim"] = {dim.m, dim.n};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : mu) arr.push_back(v.to_string());
    j["mu"] = std::move(arr);
    arr = nlohmann::ordered_json::array();
    for (const auto& v : nu) arr.push_back(v.to_string());
    j["nu"] = std::move(arr);
    return j;
}

Spectrum Spectrum::from_json(const nlohmann::json& j) {
    Spectrum s;
    for (const auto& v : j.at("mu")) s.mu.push_back(Scalar::parse(v.get<std::string>()));
    for (const auto& v : j.at("nu")) s.nu.push_back(Scalar::parse(v.get<std::string>()));
    if (j.contains("dim")) {
        s.dim = {j.at("dim").at(0).get<int>(), j.at("dim").at(1).get<int>()};
        if (s.dim.m != static_cast<int>(s.mu.size()) || s.dim.n != static_cast<int>(s.nu.size()))
            throw SizeMismatch("spectrum lengths do not match the declared dimension");
    } else {
        s.dim = {static_cast<int>(s.mu.size()), static_cast<int>(s.nu.size())};
    }
    return s;
}

namespace {

void require_distinct(const Scalar& x, const Scalar& y, const std::string& what) {
    if (x == y) throw DegenerateSpectrum(what);
}

// d_i and d'_j with a configurable prefactor exponent on the even side.
QuantumDims dims_with_prefactor(const Spectrum& s, const Scalar& hbar, int even_exponent) {
    Scalar q = Scalar::q();
    QuantumDims out;
    out.hbar = hbar;
    int m = static_cast<int>(s.mu.size());
    int n = static_cast<int>(s.nu.size());
    for (int i = 0; i < m; ++i) {
        Scalar v = q.pow(even_exponent);
        for (int p = 0; p < m; ++p) {
            if (p == i) continue;
            require_distinct(s.mu[static_cast<size_t>(i)], s.mu[static_cast<size_t>(p)],
                             "mu_" + std::to_string(i + 1) + " - mu_" + std::to_string(p + 1));
            v *= (s.mu[static_cast<size_t>(i)] - q.pow(-2) * s.mu[static_cast<size_t>(p)] - q.pow(-1) * hbar) /
                 (s.mu[static_cast<size_t>(i)] - s.mu[static_cast<size_t>(p)]);
        }
        for (int jj = 0; jj < n; ++jj) {
            require_distinct(s.mu[static_cast<size_t>(i)], s.nu[static_cast<size_t>(jj)],
                             "mu_" + std::to_string(i + 1) + " - nu_" + std::to_string(jj + 1));
            v *= (s.mu[static_cast<size_t>(i)] - q.pow(2) * s.nu[static_cast<size_t>(jj)] + q * hbar) /
                 (s.mu[static_cast<size_t>(i)] - s.nu[static_cast<size_t>(jj)]);
        }
        out.d.push_back(std::move(v));
    }
    for (int jj = 0; jj < n; ++jj) {
        Scalar v = -q;
        for (int i = 0; i < m; ++i) {
            require_distinct(s.nu[static_cast<size_t>(jj)], s.mu[static_cast<size_t>(i)],
                             "nu_" + std::to_string(jj + 1) + " - mu_" + std::to_string(i + 1));
            v *= (s.nu[static_cast<size_t>(jj)] - q.pow(-2) * s.mu[static_cast<size_t>(i)] - q.pow(-1) * hbar) /
                 (s.nu[static_cast<size_t>(jj)] - s.mu[static_cast<size_t>(i)]);
        }
        for (int p = 0; p < n; ++p) {
            if (p == jj) continue;
            require_distinct(s.nu[static_cast<size_t>(jj)], s.nu[static_cast<size_t>(p)],
                             "nu_" + std::to_string(jj + 1) + " - nu_" + std::to_string(p + 1));
            v *= (s.nu[static_cast<size_t>(jj)] - q.pow(2) * s.nu[static_cast<size_t>(p)] + q * hbar) /
                 (s.nu[static_cast<size_t>(jj)] - s.nu[static_cast<size_t>(p)]);
        }
        out.dprime.push_back(std::move(v));
    }
    return out;
}

Scalar trace_of_c(SuperDim dim) {
    return c_closed_form(dim).trace();
}

} // namespace

QuantumDims quantum_dims(const Spectrum& s, const Scalar& hbar) {
    return dims_with_prefactor(s, hbar, -1);
}

Report quantum_dims_prefactor_report(const Spectrum& s, const Scalar& hbar) {
    Report rep;
    rep.command = "quantum-dims-prefactor";
    rep.inputs["dim"] = s.dim.to_string();
    rep.inputs["hbar"] = hbar.to_string();
    Scalar trc = trace_of_c(s.dim);
    QuantumDims lo = dims_with_prefactor(s, hbar, -1);
    QuantumDims hi = dims_with_prefactor(s, hbar, +1);
    Scalar sum_lo = power_sum(s, lo, 0);
    Scalar sum_hi = power_sum(s, hi, 0);
    bool lo_ok = sum_lo == trc;
    bool hi_ok = sum_hi == trc;
    rep.detail("trace_of_c", trc.to_string());
    rep.detail("power_sum0_with_q^-1_prefactor", sum_lo.to_string());
    rep.detail("power_sum0_with_q_prefactor", sum_hi.to_string());
    rep.detail("surviving_prefactor",
               lo_ok && !hi_ok ? "q^-1" : hi_ok && !lo_ok ? "q" : lo_ok ? "both" : "neither");
    rep.set_pass(lo_ok);
    return rep;
}

Scalar power_sum(const Spectrum& s, const QuantumDims& dims, int k) {
    Scalar acc;
    for (size_t i = 0; i < s.mu.size(); ++i) acc += dims.d.at(i) * s.mu[i].pow(k);
    for (size_t j = 0; j < s.nu.size(); ++j) acc += dims.dprime.at(j) * s.nu[j].pow(k);
    return acc;
}

Scalar classical_power_sum(const Spectrum& s, int k) {
    Scalar acc;
    for (const auto& v : s.mu) acc += v.pow(k);
    for (const auto& v : s.nu) acc -= v.pow(k);
    return acc;
}

Report regularity(const Spectrum& s, const Scalar& hbar) {
    Report rep;
    rep.command = "regularity";
    rep.inputs["dim"] = s.dim.to_string();
    rep.inputs["hbar"] = hbar.to_string();
    Scalar q = Scalar::q();
    bool ok = true;
    auto check = [&](const Scalar& expr, const std::string& name) {
        // Symbolic entries are decided generically: the predicate fails
        // only when the expression vanishes identically.
        if (expr.is_zero()) {
            ok = false;
            rep.detail("violated", name);
        }
    };
    int m = static_cast<int>(s.mu.size());
    int n = static_cast<int>(s.nu.size());
    bool modified = !hbar.is_zero();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            std::string tag = "mu_" + std::to_string(i + 1) + ", mu_" + std::to_string(j + 1);
            if (modified)
                check(s.mu[static_cast<size_t>(i)] - q.pow(-2) * s.mu[static_cast<size_t>(j)] - q.pow(-1) * hbar,
                      "mu_i - q^-2 mu_j - q^-1 hbar (" + tag + ")");
            else
                check(s.mu[static_cast<size_t>(i)] - q.pow(2) * s.mu[static_cast<size_t>(j)],
                      "mu_i - q^2 mu_j (" + tag + ")");
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::string tag = "nu_" + std::to_string(i + 1) + ", nu_" + std::to_string(j + 1);
            if (modified)
                check(s.nu[static_cast<size_t>(i)] - q.pow(2) * s.nu[static_cast<size_t>(j)] + q * hbar,
                      "nu_i - q^2 nu_j + q hbar (" + tag + ")");
            else
                check(s.nu[static_cast<size_t>(i)] - q.pow(2) * s.nu[static_cast<size_t>(j)],
                      "nu_i - q^2 nu_j (" + tag + ")");
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tag = "mu_" + std::to_string(i + 1) + ", nu_" + std::to_string(j + 1);
            if (modified)
                check(s.mu[static_cast<size_t>(i)] - q.pow(2) * s.nu[static_cast<size_t>(j)] + q * hbar,
                      "mu_i - q^2 nu_j + q hbar (" + tag + ")");
            else
                check(s.mu[static_cast<size_t>(i)] - q.pow(2) * s.nu[static_cast<size_t>(j)],
                      "mu_i - q^2 nu_j (" + tag + ")");
        }
    // Classical family, reported alongside for context.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (s.mu[static_cast<size_t>(i)] == s.mu[static_cast<size_t>(j)]) {
                ok = false;
                rep.detail("violated", "mu_" + std::to_string(i + 1) + " = mu_" + std::to_string(j + 1));
            }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s.nu[static_cast<size_t>(i)] == s.nu[static_cast<size_t>(j)]) {
                ok = false;
                rep.detail("violated", "nu_" + std::to_string(i + 1) + " = nu_" + std::to_string(j + 1));
            }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (s.mu[static_cast<size_t>(i)] == s.nu[static_cast<size_t>(j)]) {
                ok = false;
                rep.detail("violated", "mu_" + std::to_string(i + 1) + " = nu_" + std::to_string(j + 1));
            }
    rep.set_pass(ok);
    if (ok) rep.detail("regular", "yes (generically for symbolic entries)");
    return rep;
}

std::vector<NCPolynomial> orbit_ideal(const REAlgebra& alg, const Spectrum& s) {
    if (!(s.dim == alg.dim())) throw SizeMismatch("spectrum does not match the algebra dimension");
    QuantumDims dims = quantum_dims(s, alg.hbar());
    std::vector<NCPolynomial> out;
    int total = alg.dim().total();
    for (int k = 1; k <= total; ++k) {
        NCPolynomial gen = r_trace_power(alg, k) - NCPolynomial::constant(power_sum(s, dims, k));
        out.push_back(normal_form(gen, alg.pres()));
    }
    return out;
}

} // namespace braidlab
