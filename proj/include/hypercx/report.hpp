#ifndef HYPERCX_REPORT_HPP
#define HYPERCX_REPORT_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hypercx {

/// One verifier outcome. pass is empty for observational entries (reported
/// data with no asserted contract).
struct CheckResult {
    std::string id;
    std::string claim;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json value;
    std::optional<double> tolerance;
    std::optional<bool> pass;

    nlohmann::json to_json() const {
        nlohmann::json doc;
        doc["id"] = id;
        doc["claim"] = claim;
        doc["inputs"] = inputs;
        doc["value"] = value;
        doc["tolerance"] = tolerance ? nlohmann::json(*tolerance) : nlohmann::json();
        doc["pass"] = pass ? nlohmann::json(*pass) : nlohmann::json();
        return doc;
    }
};

} // namespace hypercx

#endif
