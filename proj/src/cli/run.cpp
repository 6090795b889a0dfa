#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sscx/errors.hpp"
#include "sscx/fiber.hpp"
#include "sscx/suites.hpp"

namespace sscx {
namespace {

std::optional<int> parse_t(const std::string& text) {
    if (text.empty() || text == "all") return std::nullopt;
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size()) throw UsageError("--t expects an integer or 'all', got '" + text + "'");
    return v;
}

// Writes to --out when given, else to the provided stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary | std::ios::trunc);
        if (!file_) throw UsageError("cannot open '" + path + "' for writing");
        stream_ = &file_;
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of secondary staircase complexes on isotropic Grassmannians", "sscx"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    int jobs = 1;
    bool timing = false;
    app.add_option("--out", out_path, "Write reports to this file instead of stdout");
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--timing", timing, "Fill elapsed_ms (makes output run-dependent)");

    FiberSuiteOptions fopt;
    std::string fiber_t = "all";
    auto* fiber = app.add_subcommand("verify-fiber", "Fiberwise checks of E_t, its dual, Koszul complexes and the bicomplex");
    fiber->add_option("--n", fopt.n, "Half the dimension of V")->required();
    fiber->add_option("--t", fiber_t, "Twist degree t, or 'all'");
    fiber->add_option("--checks", fopt.checks, "Comma-separated subset of checks")->delimiter(',');

    WeightSuiteOptions wopt;
    std::string weight_t = "all";
    auto* weights = app.add_subcommand("verify-weights", "Weight-level checks for Gr(k, 2n)");
    weights->add_option("--n", wopt.n, "Half the dimension of V")->required();
    weights->add_option("--k", wopt.k, "Rank of the isotropic subspaces")->required();
    weights->add_option("--t", weight_t, "Twist degree t for the euler check, or 'all'");
    weights->add_option("--checks", wopt.checks, "Comma-separated subset of checks")->delimiter(',');

    int dump_n = 3, dump_a = 0, dump_b = 0, dump_c = 0;
    std::string dump_kind;
    auto* dump = app.add_subcommand("dump-map", "Print a structure map as row col num/den triples");
    dump->add_option("--n", dump_n, "Half the dimension of V")->required();
    dump->add_option("--map", dump_kind, "d0, d1, d2, d, tr or wedge_omega_bar")->required();
    dump->add_option("--a", dump_a, "Wedge degree of the source")->required();
    dump->add_option("--B", dump_b, "Symmetric degree of the source")->required();
    dump->add_option("--c", dump_c, "Det grade of the source");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*dump) {
            const FiberModel model(dump_n);
            const LinearMap m = structure_map(model, parse_map_kind(dump_kind), {dump_a, dump_b, dump_c});
            Sink sink(out_path, out);
            sink.get() << "# " << to_string(m.src) << " -> " << to_string(m.dst) << " " << m.matrix.rows() << "x"
                       << m.matrix.cols() << "\n";
            write_triples(sink.get(), m.matrix);
            return 0;
        }

        std::vector<Task> tasks;
        if (*fiber) {
            fopt.t = parse_t(fiber_t);
            tasks = fiber_tasks(fopt);
        } else {
            wopt.t = parse_t(weight_t);
            tasks = weight_tasks(wopt);
        }
        const auto outcomes = run_tasks(tasks, jobs, timing);
        Sink sink(out_path, out);
        bool all_pass = true;
        for (const auto& o : outcomes) {
            sink.get() << to_json(o.report) << "\n";
            if (!o.error.empty()) err << "error: " << o.error << "\n";
            all_pass = all_pass && o.report.passed();
        }
        sink.get().flush();
        return all_pass ? 0 : 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
}

} // namespace sscx
