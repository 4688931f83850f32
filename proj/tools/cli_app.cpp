#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "uff/approx.hpp"
#include "uff/bounds.hpp"
#include "uff/constructors.hpp"
#include "uff/exact.hpp"
#include "uff/family.hpp"
#include "uff/spec_json.hpp"

namespace uff::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

Family load_family(const std::string& path) { return parse_family(read_file(path)); }

std::string describe_witness(const Witness& w) {
    std::string s;
    switch (w.kind) {
        case Witness::Kind::not_union_free: {
            s = "not union-free: " + format_subset(w.offending) + " = union of";
            for (SubsetMask m : w.evidence) s += " " + format_subset(m);
            break;
        }
        case Witness::Kind::not_antichain:
            s = "not an antichain: " + format_subset(w.evidence.front()) + " is contained in " +
                format_subset(w.offending);
            break;
        case Witness::Kind::not_maximal:
            s = "not maximal: " + format_subset(w.offending) + " can be added";
            break;
        case Witness::Kind::superfluous:
            s = "superfluous: " + format_subset(w.offending);
            break;
    }
    return s;
}

std::string format_double(double v) {
    std::ostringstream ss;
    ss << std::setprecision(10) << v;
    return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"union-free family toolkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    // ---- construct ------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "materialize a family construction");
    construct->require_subcommand(1);
    struct {
        int n = 0;
        std::vector<int> ms;
        std::string spec_path;
        std::string out_path;
    } c;

    auto* chain = construct->add_subcommand("chain", "chain family from explicit levels");
    chain->add_option("--n", c.n, "ground size")->required();
    chain->add_option("--m", c.ms, "levels m1,m2,... (strictly decreasing)")
        ->required()
        ->delimiter(',');
    chain->add_option("-o,--out", c.out_path, "output .uff path (default stdout)");
    chain->callback([&] {
        action = [&]() {
            ChainSpec spec{c.n, c.ms};
            write_output(c.out_path, serialize_family(chain_family(spec)), out);
            return 0;
        };
    });

    auto* canonical = construct->add_subcommand("canonical", "the canonical chain family q(n)");
    canonical->add_option("--n", c.n, "ground size")->required();
    canonical->add_option("-o,--out", c.out_path, "output .uff path (default stdout)");
    canonical->callback([&] {
        action = [&]() {
            write_output(c.out_path, serialize_family(chain_family(canonical_chain(c.n))), out);
            return 0;
        };
    });

    auto* cushion = construct->add_subcommand("cushion", "cushioned family from a JSON spec");
    cushion->add_option("--spec", c.spec_path, "JSON spec path")->required();
    cushion->add_option("-o,--out", c.out_path, "output .uff path (default stdout)");
    cushion->callback([&] {
        action = [&]() {
            const CushionSpec spec = cushion_spec_from_json(read_file(c.spec_path));
            write_output(c.out_path, serialize_family(cushion_family(spec)), out);
            return 0;
        };
    });

    auto* compose = construct->add_subcommand("compose", "layered composition from a JSON spec");
    compose->add_option("--spec", c.spec_path, "JSON spec path")->required();
    compose->add_option("-o,--out", c.out_path, "output .uff path (default stdout)");
    compose->callback([&] {
        action = [&]() {
            const LayeredSpec spec = layered_spec_from_json(read_file(c.spec_path));
            write_output(c.out_path, serialize_family(layered_compose(spec)), out);
            return 0;
        };
    });

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check a predicate; exit 0 holds / 1 fails");
    verify->require_subcommand(1);
    struct {
        std::string in_path;
    } v;

    auto* vuf = verify->add_subcommand("union-free", "no member is a union of other members");
    vuf->add_option("--in", v.in_path, "input .uff path")->required();
    vuf->callback([&] {
        action = [&]() {
            const UnionFreeCheck check = check_union_free(load_family(v.in_path));
            if (check.union_free) {
                out << "union-free\n";
                return 0;
            }
            out << describe_witness(*check.witness) << "\n";
            return 1;
        };
    });

    auto* vac = verify->add_subcommand("antichain", "no member contains another");
    vac->add_option("--in", v.in_path, "input .uff path")->required();
    vac->callback([&] {
        action = [&]() {
            const Family f = load_family(v.in_path);
            if (is_antichain(f)) {
                out << "antichain\n";
                return 0;
            }
            const auto& ms = f.members();
            for (std::size_t i = 0; i < ms.size(); ++i)
                for (std::size_t j = i + 1; j < ms.size(); ++j)
                    if (subset_of(ms[i], ms[j])) {
                        Witness w{Witness::Kind::not_antichain, ms[j], {ms[i]}};
                        out << describe_witness(w) << "\n";
                        return 1;
                    }
            return 1;
        };
    });

    auto* vmax = verify->add_subcommand("maximal", "no subset can be added union-freely");
    vmax->add_option("--in", v.in_path, "input .uff path")->required();
    vmax->callback([&] {
        action = [&]() {
            const MaximalCheck check = check_maximal_union_free(load_family(v.in_path));
            if (check.maximal) {
                out << "maximal\n";
                return 0;
            }
            Witness w{Witness::Kind::not_maximal, *check.addable, {}};
            out << describe_witness(w) << "\n";
            return 1;
        };
    });

    auto* vlym = verify->add_subcommand("lym", "LYM sum of the family is at most 1");
    vlym->add_option("--in", v.in_path, "input .uff path")->required();
    vlym->callback([&] {
        action = [&]() {
            const Family f = load_family(v.in_path);
            const BigRat sum = lym_sum(f);
            out << "lym_sum = " << sum << " = " << format_double(sum.convert_to<double>())
                << "\n";
            return sum <= 1 ? 0 : 1;
        };
    });

    // ---- bounds ---------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "lower/upper bound tables");
    bounds->require_subcommand(1);
    struct {
        int n_max = 30;
        int n = 30;
        std::string mode = "paper-replica";
        std::string format = "csv";
        std::string out_path;
        double minutes = 1.0;
    } b;

    auto* table = bounds->add_subcommand("table", "emit the bounds table");
    table->add_option("--n-max", b.n_max, "last ground size")->required();
    table->add_option("--mode", b.mode, "paper-replica | best-known")
        ->check(CLI::IsMember({"paper-replica", "best-known"}));
    table->add_option("--format", b.format, "csv | md")->check(CLI::IsMember({"csv", "md"}));
    table->add_option("-o,--out", b.out_path, "output path (default stdout)");
    table->callback([&] {
        action = [&]() {
            const TableMode mode = b.mode == "paper-replica" ? TableMode::paper_replica
                                                             : TableMode::best_known;
            const auto rows = bounds_table(b.n_max, mode);
            write_output(b.out_path,
                         b.format == "csv" ? bounds_table_csv(rows) : bounds_table_markdown(rows),
                         out);
            return 0;
        };
    });

    auto* fili = bounds->add_subcommand("filibuster", "duration of the amendment filibuster");
    fili->add_option("--n", b.n, "number of articles")->required();
    fili->add_option("--minutes", b.minutes, "minutes per amendment")->required();
    fili->callback([&] {
        action = [&]() {
            const FilibusterEstimate est = filibuster_duration(b.n, b.minutes);
            out << "amendments = " << est.amendments << "\n"
                << "minutes = " << format_double(est.minutes) << "\n"
                << "years = " << format_double(est.years) << "\n";
            return 0;
        };
    });

    // ---- approx ---------------------------------------------------------
    auto* approx = app.add_subcommand("approx", "closed-form estimates vs exact binomials");
    approx->require_subcommand(1);
    struct {
        int k = 0, j = 0, n = 0, t = 0;
        std::string format = "text";
    } a;

    const auto emit_report = [&](const std::string& op, const ApproxReport& r) {
        if (a.format == "csv") {
            out << op << "," << r.n << "," << r.exact << "," << format_double(r.approx) << ","
                << format_double(r.rel_error) << "\n";
        } else {
            out << op << ": exact = " << r.exact << ", approx = " << format_double(r.approx)
                << ", rel_error = " << format_double(r.rel_error) << "\n";
        }
    };

    auto* stirling = approx->add_subcommand("stirling", "Stirling estimate of C(k,j)");
    stirling->add_option("--k", a.k, "top index")->required();
    stirling->add_option("--j", a.j, "bottom index")->required();
    stirling->add_option("--format", a.format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
    stirling->callback([&] {
        action = [&]() {
            emit_report("stirling(" + std::to_string(a.k) + "," + std::to_string(a.j) + ")",
                        stirling_report(a.k, a.j));
            return 0;
        };
    });

    auto* central = approx->add_subcommand("central", "central layer estimate for C(n,ceil(n/2))");
    central->add_option("--n", a.n, "ground size")->required();
    central->add_option("--format", a.format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
    central->callback([&] {
        action = [&]() {
            emit_report("central(" + std::to_string(a.n) + ")", central_report(a.n));
            return 0;
        };
    });

    auto* dominance = approx->add_subcommand("dominance", "first over second chain layer");
    dominance->add_option("--n", a.n, "ground size")->required();
    dominance->callback([&] {
        action = [&]() {
            const DominanceRatio r = dominance_ratio(a.n);
            out << "exact_ratio = " << format_double(r.exact_ratio)
                << ", paper_estimate = " << format_double(r.paper_estimate) << "\n";
            return 0;
        };
    });

    auto* csplit = approx->add_subcommand("cushion-split", "thickness-t cushion split heuristic");
    csplit->add_option("--n", a.n, "ground size")->required();
    csplit->add_option("--t", a.t, "cushion thickness")->required();
    csplit->callback([&] {
        action = [&]() {
            out << "estimate = " << format_double(cushion_split_estimate(a.n, a.t))
                << ", central = " << format_double(central_binom_approx(a.n)) << "\n";
            return 0;
        };
    });

    // ---- exact ----------------------------------------------------------
    auto* exact = app.add_subcommand("exact", "branch-and-bound search for M(n)");
    struct {
        int n = 0;
        double time_limit = 0;
        bool symmetry = false;
        std::string out_path;
    } e;
    exact->add_option("--n", e.n, "ground size (at most 16)")->required();
    exact->add_option("--time-limit", e.time_limit, "seconds; incumbent returned on expiry");
    exact->add_flag("--symmetry", e.symmetry, "restrict the first subset to size-class prefixes");
    exact->add_option("-o,--out", e.out_path, "also write the witness .uff here");
    exact->callback([&] {
        action = [&]() {
            SearchConfig config;
            config.n = e.n;
            config.symmetry_reduction = e.symmetry;
            if (e.time_limit > 0)
                config.time_limit = std::chrono::milliseconds(
                    static_cast<std::int64_t>(std::llround(e.time_limit * 1000.0)));
            const SearchResult result = max_union_free(config);
            nlohmann::json report{
                {"n", e.n},
                {"status", result.status == SearchStatus::exact ? "exact" : "timeout"},
                {"best_size", result.best_size},
                {"explored", result.explored},
                {"elapsed_ms", result.elapsed.count()},
                {"witness_uff", serialize_family(result.witness)},
            };
            out << report.dump(2) << "\n";
            if (!e.out_path.empty())
                write_output(e.out_path, serialize_family(result.witness), out);
            return 0;
        };
    });

    // ---- relabel --------------------------------------------------------
    auto* rel = app.add_subcommand("relabel", "apply a permutation of [1,n]");
    struct {
        std::string in_path;
        std::vector<int> perm;
        std::string out_path;
    } r;
    rel->add_option("--in", r.in_path, "input .uff path")->required();
    rel->add_option("--perm", r.perm, "images p1,p2,...,pn of elements 1..n")
        ->required()
        ->delimiter(',');
    rel->add_option("-o,--out", r.out_path, "output .uff path (default stdout)");
    rel->callback([&] {
        action = [&]() {
            const Family f = load_family(r.in_path);
            write_output(r.out_path, serialize_family(relabel(f, r.perm)), out);
            return 0;
        };
    });

    // ---- parse and dispatch ---------------------------------------------
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("uff");
    for (const std::string& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& help) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& pe) {
        err << "error: " << pe.what() << "\n";
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

}  // namespace uff::cli
