#ifndef QPFD_REGISTRY_HPP
#define QPFD_REGISTRY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpfd/rational.hpp"

namespace qpfd {

// How q is interpreted while checking: as the indeterminate of Q(q), or as
// a fixed exact rational sample.
enum class CheckMode { SymbolicQ, NumericQ };

enum class CheckStatus { Pass, Fail, Skipped };

// Ordered (key, value) parameter list; keys are short names like "n", "m".
using ParamList = std::vector<std::pair<std::string, long long>>;

struct RunConfig {
    std::string identity = "all";  // exact name, '*' glob, or "all"
    int n_max = 6;
    int m_max = 3;
    std::optional<long long> l;    // fix the inner l sweep to one value
    int trials = 0;                // 0 = per-identity default
    CheckMode mode = CheckMode::SymbolicQ;
    Rational q_value = Rational(2);
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string y_mode = "rational";  // "rational" | "q-power"
    bool mutate = false;           // perturb one side of every comparison
};

struct IdentityReport {
    std::string name;
    ParamList params;
    CheckStatus status = CheckStatus::Pass;
    std::string residual;  // first failing claim, empty on pass
    std::string note;      // extra finding (e.g. which variant passed)
    long long elapsed_ms = 0;

    bool passed() const { return status == CheckStatus::Pass; }
};

// One checkable instance of a catalog identity.
struct Instance {
    std::string name;
    ParamList params;
    std::uint64_t seed = 0;
};

struct IdentityDescriptor {
    std::string name;
    std::string description;
    // Expands the config into the instances this identity will check.
    std::function<std::vector<Instance>(const RunConfig&)> expand;
    // Runs one instance.
    std::function<IdentityReport(const Instance&, const RunConfig&)> check;
};

// The full identity catalog, in stable order.
const std::vector<IdentityDescriptor>& catalog();

// Lookup by exact name; throws NotFound.
const IdentityDescriptor& catalog_find(const std::string& name);

// Names matching an exact name, a '*' glob, or "all", in catalog order.
// Throws NotFound when nothing matches.
std::vector<std::string> catalog_select(const std::string& pattern);

struct RunSummary {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
    long long elapsed_ms = 0;
};

// Expands the selected identities into instances (deterministic order and
// per-instance seeds derived from config.seed).
std::vector<Instance> expand_instances(const RunConfig& config);

// Runs all selected instances, optionally across config.jobs threads;
// report order is instance order regardless of parallelism.
std::vector<IdentityReport> run_catalog(const RunConfig& config, RunSummary* summary);

const char* to_string(CheckStatus s);
const char* to_string(CheckMode m);

}  // namespace qpfd

#endif  // QPFD_REGISTRY_HPP
