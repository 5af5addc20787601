#include "hopfind/census.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using hopfind::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hopfind::SpecError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw hopfind::SpecError("JSON parse failure in '" + path + "': " + e.what());
    }
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

std::vector<hopfind::InstanceSpec> load_instances(const std::string& spec_path, bool use_census) {
    if (use_census) return hopfind::builtin_census();
    json j = read_json_file(spec_path);
    if (j.contains("instances")) return hopfind::census_from_json(j);
    return {hopfind::InstanceSpec::from_json(j)};
}

int run(int argc, char** argv) {
    CLI::App app{"hopfind - exact indicator and exponent computations for semisimple Hopf algebras"};
    app.require_subcommand(1);

    // indicators
    std::string ind_spec, ind_out, ind_format = "csv";
    long ind_n = 0;
    auto* ind = app.add_subcommand("indicators", "tabulate Frobenius-Schur indicators nu_n");
    ind->add_option("--spec", ind_spec, "instance spec file (JSON)")->required();
    ind->add_option("--n", ind_n, "largest n (default: the exponent)");
    ind->add_option("--out", ind_out, "output path (default: stdout)");
    ind->add_option("--format", ind_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // verify
    std::string ver_spec, ver_out, ver_format = "csv", ver_check = "all";
    bool ver_census = false, ver_strict = false;
    long ver_jobs = 1;
    auto* ver = app.add_subcommand("verify", "run named theorem-verification suites");
    ver->add_option("--spec", ver_spec, "instance spec file (JSON)");
    ver->add_flag("--census", ver_census, "use the bundled census");
    ver->add_option("--check", ver_check, "check name or 'all'");
    ver->add_flag("--strict", ver_strict, "evidence scans also affect the exit code");
    ver->add_option("--jobs", ver_jobs, "parallel instances");
    ver->add_option("--out", ver_out, "output path (default: stdout)");
    ver->add_option("--format", ver_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // chartab
    std::string ct_group, ct_out, ct_cache;
    auto* ct = app.add_subcommand("chartab", "exact irreducible character table of a finite group");
    ct->add_option("--group", ct_group, "group spec file (JSON)")->required();
    ct->add_option("--out", ct_out, "output path (default: stdout)");
    ct->add_option("--cache", ct_cache, "cache directory (default: HOPFIND_CACHE or ./.hopfind-cache)");

    // census
    std::string cs_out;
    auto* cs = app.add_subcommand("census", "emit the bundled census spec");
    cs->add_option("--out", cs_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (*ind) {
        auto instances = load_instances(ind_spec, false);
        std::vector<hopfind::IndicatorRow> rows;
        for (const auto& inst : instances) {
            auto r = hopfind::indicator_table(inst, ind_n);
            rows.insert(rows.end(), r.begin(), r.end());
        }
        write_output(ind_out, ind_format == "csv" ? hopfind::indicators_to_csv(rows)
                                                  : hopfind::indicators_to_json(rows));
        return 0;
    }
    if (*ver) {
        if (!ver_census && ver_spec.empty()) {
            std::cerr << "verify: pass --spec FILE or --census\n";
            return 2;
        }
        bool known = ver_check == "all";
        for (const auto& c : hopfind::known_checks()) known = known || c == ver_check;
        if (!known) {
            std::cerr << "verify: unknown check '" << ver_check << "'\n";
            return 2;
        }
        auto instances = load_instances(ver_spec, ver_census);
        auto reports = hopfind::run_checks(instances, ver_check, ver_jobs);
        write_output(ver_out, ver_format == "csv" ? hopfind::reports_to_csv(reports)
                                                  : hopfind::reports_to_json(reports));
        long failures = 0, evidence_failures = 0, skipped = 0;
        double total_ms = 0;
        for (const auto& r : reports) {
            total_ms += r.wall_ms;
            if (r.status == "skipped") ++skipped;
            if (r.status != "fail") continue;
            if (r.check == "kashina-scan") ++evidence_failures;
            else ++failures;
        }
        std::cerr << "verify: " << reports.size() << " rows, " << failures << " failures, " << evidence_failures
                  << " evidence failures, " << skipped << " skipped, " << static_cast<long>(total_ms) << " ms\n";
        if (failures > 0) return 1;
        if (ver_strict && evidence_failures > 0) return 1;
        return 0;
    }
    if (*ct) {
        json gspec = read_json_file(ct_group);
        hopfind::FiniteGroup g = hopfind::group_from_spec(gspec);
        bool hit = false;
        auto t0 = std::chrono::steady_clock::now();
        std::string text = hopfind::chartab_cached(g, ct_cache, &hit);
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::cerr << "chartab: order " << g.order() << (hit ? " cache hit " : " computed ") << static_cast<long>(ms)
                  << " ms\n";
        write_output(ct_out, text);
        return 0;
    }
    if (*cs) {
        write_output(cs_out, hopfind::census_to_json(hopfind::builtin_census()).dump(1) + "\n");
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hopfind::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hopfind::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed spec: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "construction error: " << e.what() << "\n";
        return 3;
    }
}
