#include "skw/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw skw::ValidationError("cannot open file", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_builtin(const std::string& name) {
    for (const char* b : {"TRIV", "PX", "PXN", "IWA", "ZPT", "F3xF3-swap"})
        if (name == b) return true;
    return false;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skewseries: exact skew power series rings and their dimension theory"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "validate an instance spec document");
    std::string spec_path;
    validate->add_option("spec", spec_path, "path to a JSON instance spec")->required();

    auto* run = app.add_subcommand("run", "run a verification suite against an instance");
    std::string suite = "all", instance = "IWA", out_path;
    std::uint64_t seed = 1;
    unsigned t_prec = 0, p_prec = 0;
    bool timings = false;
    run->add_option("--suite", suite, "suite name")->check(CLI::IsMember(skw::suite_names()));
    run->add_option("--instance", instance, "builtin name or path to a spec JSON");
    run->add_option("--seed", seed, "base seed for sampled checks");
    run->add_option("--t-prec", t_prec, "override t-precision");
    run->add_option("--p-prec", p_prec, "override p-precision (ZPT)");
    run->add_option("--out", out_path, "write the JSON report here");
    run->add_flag("--timings", timings, "include per-check timings (non-deterministic bytes)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            skw::InstanceSpec spec = skw::parse_instance_spec(slurp(spec_path));
            std::cout << "valid instance: ring rank " << spec.built.ring->rank << ", sigma order "
                      << spec.built.skew->sigma_order << ", commuting "
                      << (spec.built.skew->commuting ? "yes" : "no") << ", t-precision "
                      << spec.built.t_prec << "\n";
            return 0;
        }
        skw::Instance inst;
        std::uint64_t run_seed = seed;
        if (is_builtin(instance)) {
            skw::InstanceOverrides ov;
            if (t_prec) ov.t_prec = t_prec;
            if (p_prec) ov.p_prec = p_prec;
            inst = skw::builtin_instance(instance, ov);
        } else {
            skw::InstanceSpec spec = skw::parse_instance_spec(slurp(instance));
            inst = spec.built;
            if (seed == 1) run_seed = spec.seed;
        }
        skw::Report rep = skw::run_suite(suite, inst, run_seed);
        std::string json = rep.to_json(timings);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            out << json << "\n";
        } else {
            std::cout << json << "\n";
        }
        for (const auto& c : rep.checks)
            std::cerr << (c.ok() ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        return rep.exit_code();
    } catch (const skw::ValidationError& e) {
        std::cerr << "validation error: " << e.what();
        if (!e.witness.empty()) std::cerr << " (witness: " << e.witness << ")";
        std::cerr << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
