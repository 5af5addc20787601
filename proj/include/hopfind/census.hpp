#pragma once

#include "hopfind/specio.hpp"

#include <optional>

namespace hopfind {

/// One verification target: a Hopf algebra recipe plus optional partial-dual
/// data (coideal + witness), a matched pair, and a module list.
struct InstanceSpec {
    std::string name;
    json hopf;
    json coideal;       // null unless a coideal subalgebra is attached
    json witness;       // Hopf recipe for the smash product's Hopf structure
    json matched_pair;  // null unless the instance is bismash-derived
    std::vector<json> modules;
    long n_max = 0;  // 0: use the exponent

    static InstanceSpec from_json(const json& j);
    json to_json() const;
};

struct VerificationReport {
    std::string instance;
    std::string check;
    std::string status;  // pass | fail | skipped
    std::string witness; // failure data or skip reason
    double wall_ms = 0;  // reported on stderr only, never in emitted files
};

const std::vector<std::string>& known_checks();

/// The bundled census: groups Z1..Z8, Z2xZ2, S3, D4, Q8, A4, S4; matched
/// pairs from exact factorizations (|L| <= 24); partial-dual instances;
/// Drinfeld doubles of CZ2, CZ3, CS3; duals and biops.
std::vector<InstanceSpec> builtin_census();

json census_to_json(const std::vector<InstanceSpec>& instances);
std::vector<InstanceSpec> census_from_json(const json& j);

std::vector<VerificationReport> run_check(const InstanceSpec& inst, const std::string& check);
/// All listed checks over all instances, optionally in parallel; report order
/// follows the instance order regardless of completion order.
std::vector<VerificationReport> run_checks(const std::vector<InstanceSpec>& instances, const std::string& check,
                                           long jobs);

std::string reports_to_csv(const std::vector<VerificationReport>& reports);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

struct IndicatorRow {
    std::string module;
    long n = 0;
    std::string value;
    bool integral = false;
};

std::vector<IndicatorRow> indicator_table(const InstanceSpec& inst, long n_max);
std::string indicators_to_csv(const std::vector<IndicatorRow>& rows);
std::string indicators_to_json(const std::vector<IndicatorRow>& rows);

/// Content hash of the multiplication table, for the character-table cache.
std::string group_table_hash(const FiniteGroup& g);
/// Serialized character table, consulting/filling the cache directory
/// (HOPFIND_CACHE or ./.hopfind-cache when empty).
std::string chartab_cached(const FiniteGroup& g, std::string cache_dir, bool* cache_hit = nullptr);

}  // namespace hopfind
