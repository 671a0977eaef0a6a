#pragma once

#include <string>

#include <json.hpp>

#include "mvpoly/weyl.hpp"

namespace mvpoly {

// Outcome of one verification sweep, serializable for the CLI.
struct Report {
    std::string check;
    Word w;
    bool passed = true;
    long long items_checked = 0;
    nlohmann::json violations = nlohmann::json::array();
    nlohmann::json notes = nlohmann::json::array();

    void add_violation(nlohmann::json v) {
        passed = false;
        violations.push_back(std::move(v));
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"check", check},
                              {"w", w},
                              {"passed", passed},
                              {"items_checked", items_checked},
                              {"violations", violations},
                              {"notes", notes}};
    }
};

} // namespace mvpoly
