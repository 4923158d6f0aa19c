#include "braidlab/report.hpp"

namespace braidlab {

const char* outcome_name(Report::Outcome o) {
    switch (o) {
        case Report::Outcome::pass: return "pass";
        case Report::Outcome::fail: return "fail";
        default: return "info";
    }
}

nlohmann::ordered_json Report::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outcome"] = outcome_name(outcome);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [name, value] : details) {
        nlohmann::ordered_json d;
        d["name"] = name;
        d["value"] = value;
        arr.push_back(std::move(d));
    }
    j["details"] = std::move(arr);
    if (with_timing) j["timing_ms"] = timing_ms;
    return j;
}

std::string Report::to_line(bool pretty, bool with_timing) const {
    return to_json(with_timing).dump(pretty ? 2 : -1);
}

} // namespace braidlab
