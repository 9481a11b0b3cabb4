// gps: command-line front end. Results go to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 1 a check failed, 2 bad input, 3 an exact answer was
// required but could not be produced.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "gps/harness.hpp"
#include "gps/model.hpp"
#include "gps/render.hpp"
#include "gps/spectra.hpp"
#include "gps/structure_maps.hpp"
#include "gps/topology.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kUnknownRequired = 3;

struct Config {
    std::string command;
    std::vector<std::string> inputs;
    std::string format = "text";
    std::size_t enum_bound = gps::kDefaultEnumerationBound;
    std::uint64_t seed = gps::HarnessOptions{}.seed;
    std::string submodule;
    bool star = false;
    std::string space = "pspec";
    std::vector<std::string> theorems;
    bool corpus = false;
    bool ignore_guards = false;
    bool timings = false;
};

gps::Format format_of(const std::string& s)
{
    if (s == "json")
        return gps::Format::Json;
    if (s == "dot")
        return gps::Format::Dot;
    return gps::Format::Text;
}

const std::string& single_input(const Config& c)
{
    if (c.inputs.size() != 1)
        throw gps::InputError("'" + c.command + "' takes exactly one input file");
    return c.inputs[0];
}

gps::FiniteSpace module_space(const gps::FiniteSpectra& sp, const std::string& which)
{
    return which == "spec" ? gps::FiniteSpace::prime_spectrum(sp) : gps::FiniteSpace::primary_spectrum(sp);
}

int run_check(const Config& c, gps::Format f)
{
    gps::HarnessOptions opts;
    opts.enumeration_bound = c.enum_bound;
    opts.seed = c.seed;
    opts.ignore_guards = c.ignore_guards;
    std::vector<gps::CorpusInstance> instances;
    if (c.corpus)
        instances = gps::standard_corpus();
    for (const std::string& path : c.inputs)
        instances.push_back({path, gps::load_model(path)});
    if (instances.empty())
        throw gps::InputError("'check' needs input files or --corpus");
    std::vector<gps::CheckResult> all;
    for (const gps::CorpusInstance& inst : instances) {
        auto rs = gps::run_checks(inst.model, inst.id, c.theorems, opts);
        all.insert(all.end(), rs.begin(), rs.end());
    }
    std::cout << gps::render_checks(all, f, c.timings);
    for (const gps::CheckResult& r : all)
        if (r.status == gps::CheckStatus::Fail)
            return kCheckFailed;
    return kOk;
}

int dispatch(const Config& c)
{
    const gps::Format f = format_of(c.format);
    if (c.command == "check")
        return run_check(c, f);

    const gps::Model model = gps::load_model(single_input(c));
    const gps::GradedModule& m = model.module;
    gps::RadicalOptions ropts;
    ropts.enumeration_bound = c.enum_bound;

    if (c.command == "parse") {
        std::cout << gps::render_model(model, f);
        return kOk;
    }
    if (c.command == "radical") {
        const gps::GradedSubmodule& n = model.submodule(c.submodule);
        if (n.is_whole())
            throw gps::InputError("the radical is defined for proper submodules");
        const gps::RadicalResult r = gps::graded_radical_submodule(n, ropts);
        std::cout << gps::render_radical(n, r, f);
        return r.is_known() ? kOk : kUnknownRequired;
    }
    if (c.command == "spec" || c.command == "pspec" || c.command == "max") {
        const gps::PointKind kind = c.command == "spec"    ? gps::PointKind::Prime
                                    : c.command == "pspec" ? gps::PointKind::PrimarySpectrum
                                                           : gps::PointKind::Maximal;
        const std::string title = c.command == "spec" ? "Spec_G(M)" : c.command == "pspec" ? "PS_G(M)" : "Max_G(M)";
        std::cout << gps::render_points(title, gps::enumerate_points(m, kind, c.enum_bound), f);
        return kOk;
    }

    if (!m.is_finite())
        throw gps::InfiniteModuleError("'" + c.command + "' needs the whole point set, and M is infinite");
    const gps::FiniteSpectra sp(m, c.enum_bound);

    if (c.command == "variety") {
        const gps::FiniteSpace s = module_space(sp, c.space);
        std::cout << gps::render_variety(s, model.submodule(c.submodule), c.star, f);
        return kOk;
    }
    if (c.command == "topology") {
        const gps::FiniteSpace s =
            c.space == "ring" ? gps::FiniteSpace::reduced_ring_spectrum(m) : module_space(sp, c.space);
        std::cout << gps::render_topology(s, gps::analyze(s), f);
        return kOk;
    }
    if (c.command == "rho") {
        const gps::FiniteSpace x = gps::FiniteSpace::primary_spectrum(sp);
        const gps::FiniteSpace r = gps::FiniteSpace::reduced_ring_spectrum(m);
        std::cout << gps::render_map(x, r, gps::analyze_map(x, r, gps::MapKind::Rho), f);
        return kOk;
    }
    throw gps::InputError("unknown command '" + c.command + "'");
}

}  // namespace

int main(int argc, char** argv)
{
    Config cfg;
    CLI::App app{"Graded primary spectra and their Zariski topology"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--enum-bound", cfg.enum_bound, "Largest module enumerated exhaustively")
        ->envname("GPS_ENUM_BOUND")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for sampled subset families");

    auto add = [&](const char* name, const char* help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&cfg, name] { cfg.command = name; });
        return s;
    };
    add("parse", "Validate a model and print it in canonical form")->add_option("input", cfg.inputs)->required();
    add("spec", "List the graded prime submodules")->add_option("input", cfg.inputs)->required();
    add("pspec", "List the graded primary spectrum")->add_option("input", cfg.inputs)->required();
    add("max", "List the graded maximal submodules")->add_option("input", cfg.inputs)->required();
    {
        CLI::App* s = add("radical", "Graded radical of a named submodule");
        s->add_option("input", cfg.inputs)->required();
        s->add_option("--submodule", cfg.submodule, "Submodule name")->required();
    }
    {
        CLI::App* s = add("variety", "nu or nu* of a named submodule");
        s->add_option("input", cfg.inputs)->required();
        s->add_option("--submodule", cfg.submodule, "Submodule name")->required();
        s->add_flag("--star", cfg.star, "Use nu* (V* on Spec)");
        s->add_option("--space", cfg.space, "Point set")->check(CLI::IsMember({"spec", "pspec"}));
    }
    {
        CLI::App* s = add("topology", "Closed sets, base and topological properties");
        s->add_option("input", cfg.inputs)->required();
        s->add_option("--space", cfg.space, "Point set")->check(CLI::IsMember({"spec", "pspec", "ring"}));
    }
    add("rho", "Analyze the natural map to Spec(R/Ann(M))")->add_option("input", cfg.inputs)->required();
    {
        CLI::App* s = add("check", "Run the theorem checks");
        s->add_option("inputs", cfg.inputs, "Model files");
        s->add_option("--theorem", cfg.theorems, "Check id (repeatable)");
        s->add_flag("--corpus", cfg.corpus, "Also run the built-in corpus");
        s->add_flag("--ignore-guards", cfg.ignore_guards, "Evaluate checks whose guards fail");
        s->add_flag("--timings", cfg.timings, "Report elapsed time per check");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "gps: " << e.what() << "\n";
        return kInputError;
    }

    try {
        return dispatch(cfg);
    } catch (const gps::ParseError& e) {
        std::cerr << (cfg.inputs.empty() ? std::string("input") : cfg.inputs.back()) << ":" << e.line() << ":"
                  << e.column() << ": " << e.message();
        if (!e.token().empty())
            std::cerr << " (at '" << e.token() << "')";
        std::cerr << "\n";
        return kInputError;
    } catch (const gps::InputError& e) {
        std::cerr << "gps: " << e.what() << "\n";
        return kInputError;
    } catch (const gps::RadicalUnknownError& e) {
        std::cerr << "gps: exact answer unavailable: " << e.what() << "\n";
        return kUnknownRequired;
    } catch (const gps::InfiniteModuleError& e) {
        std::cerr << "gps: exact answer unavailable: " << e.what() << "\n";
        return kUnknownRequired;
    } catch (const gps::EnumerationBoundExceeded& e) {
        std::cerr << "gps: exact answer unavailable: " << e.what() << " (raise --enum-bound)\n";
        return kUnknownRequired;
    }
}
