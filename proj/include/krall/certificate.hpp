#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace krall {

/// Machine-checkable record of one verified identity family: the claim, the
/// range it was checked on, per-item outcomes, and the first failing witness.
struct Certificate {
    std::string claim;
    std::string range;
    bool pass = true;
    long checked = 0;
    std::string witness;  // label of the first failure, empty when pass
    std::string notes;    // e.g. recorded soundness bound

    struct Item {
        std::string label;
        bool pass;
        std::string detail;
    };
    std::vector<Item> items;

    void record(const std::string& label, bool ok, const std::string& detail = "") {
        ++checked;
        items.push_back({label, ok, detail});
        if (!ok && pass) {
            pass = false;
            witness = label;
        }
    }

    nlohmann::json to_json(bool with_items = true) const {
        nlohmann::json j{{"claim", claim}, {"range", range},   {"pass", pass},
                         {"checked", checked}, {"witness", witness}, {"notes", notes}};
        if (with_items) {
            j["items"] = nlohmann::json::array();
            for (const auto& it : items) {
                nlohmann::json e{{"label", it.label}, {"pass", it.pass}};
                if (!it.detail.empty()) e["detail"] = it.detail;
                j["items"].push_back(e);
            }
        }
        return j;
    }
};

}  // namespace krall
