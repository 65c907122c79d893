#include "qpfd/report.hpp"

#include <sstream>

namespace qpfd {

using nlohmann::ordered_json;

ordered_json report_json(const RunConfig& config, const std::vector<IdentityReport>& reports,
                         const RunSummary& summary) {
    ordered_json j;
    j["version"] = 1;
    ordered_json c;
    c["identity"] = config.identity;
    c["n_max"] = config.n_max;
    c["m_max"] = config.m_max;
    c["l"] = config.l ? ordered_json(*config.l) : ordered_json(nullptr);
    c["trials"] = config.trials;
    c["mode"] = to_string(config.mode);
    c["q"] = config.q_value.canonical_text();
    c["seed"] = config.seed;
    c["jobs"] = config.jobs;
    c["y_mode"] = config.y_mode;
    c["mutate"] = config.mutate;
    j["config"] = std::move(c);
    ordered_json rs = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json e;
        e["name"] = r.name;
        ordered_json ps = ordered_json::object();
        for (const auto& [k, v] : r.params) ps[k] = v;
        e["params"] = std::move(ps);
        e["status"] = to_string(r.status);
        if (!r.residual.empty()) e["residual"] = r.residual;
        if (!r.note.empty()) e["note"] = r.note;
        rs.push_back(std::move(e));
    }
    j["results"] = std::move(rs);
    ordered_json s;
    s["pass"] = summary.pass;
    s["fail"] = summary.fail;
    s["skipped"] = summary.skipped;
    s["elapsed_ms"] = summary.elapsed_ms;
    j["summary"] = std::move(s);
    return j;
}

std::string render_report_text(const RunConfig& config,
                               const std::vector<IdentityReport>& reports,
                               const RunSummary& summary) {
    std::ostringstream out;
    out << "identity=" << config.identity << " mode=" << to_string(config.mode);
    if (config.mode == CheckMode::NumericQ) out << " q=" << config.q_value.canonical_text();
    out << " n_max=" << config.n_max << " m_max=" << config.m_max << " seed=" << config.seed
        << "\n";
    for (const auto& r : reports) {
        out << "[" << to_string(r.status) << "] " << r.name;
        for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
        if (!r.residual.empty()) out << ": " << r.residual;
        out << " (" << r.elapsed_ms << " ms)\n";
        if (!r.note.empty()) out << "    note: " << r.note << "\n";
    }
    out << "summary: pass " << summary.pass << ", fail " << summary.fail << ", skipped "
        << summary.skipped << " (" << summary.elapsed_ms << " ms)\n";
    return out.str();
}

ordered_json catalog_json() {
    ordered_json arr = ordered_json::array();
    for (const auto& d : catalog()) {
        ordered_json e;
        e["name"] = d.name;
        e["description"] = d.description;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string render_catalog_text() {
    std::ostringstream out;
    for (const auto& d : catalog()) out << d.name << "\n    " << d.description << "\n";
    return out.str();
}

}  // namespace qpfd
