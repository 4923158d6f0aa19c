#ifndef BRAIDLAB_REPORT_HPP
#define BRAIDLAB_REPORT_HPP

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace braidlab {

// Machine-readable check result.  Identical inputs produce byte-identical
// serialized reports apart from the timing field.
struct Report {
    enum class Outcome { pass, fail, info };

    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    Outcome outcome = Outcome::info;
    std::vector<std::pair<std::string, std::string>> details;
    double timing_ms = 0.0;

    bool passed() const { return outcome != Outcome::fail; }
    void set(Outcome o) { outcome = o; }
    void set_pass(bool ok) { outcome = ok ? Outcome::pass : Outcome::fail; }
    void detail(std::string name, std::string value) {
        details.emplace_back(std::move(name), std::move(value));
    }

    nlohmann::ordered_json to_json(bool with_timing = true) const;
    std::string to_line(bool pretty = false, bool with_timing = true) const;
};

const char* outcome_name(Report::Outcome o);

// Runs fn, filling the timing field of the returned report.
template <typename Fn>
Report timed(Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    Report r = fn();
    auto end = std::chrono::steady_clock::now();
    r.timing_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return r;
}

} // namespace braidlab

#endif
