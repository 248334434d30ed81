#include <json.hpp>
#include <ostream>

#include "wsnacc/experiments.hpp"

namespace wsnacc {

void write_json(std::ostream& out, const ExperimentOutput& o) {
    nlohmann::ordered_json doc;
    auto& meta = doc["meta"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : o.meta) meta[k] = v;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : o.rows) {
        nlohmann::ordered_json r;
        for (std::size_t i = 0; i < row.size() && i < o.columns.size(); ++i) {
            std::visit([&](const auto& v) { r[o.columns[i]] = v; }, row[i]);
        }
        rows.push_back(std::move(r));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace wsnacc
