#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "commands.hpp"

using namespace qeffects;

int main(int argc, char** argv) {
    CLI::App app{"qeffects: time evolution of quantum effects"};
    app.require_subcommand(1);

    cli::GlobalOptions global;
    app.add_option("--tol", global.tol, "Decision tolerance for commutation/constancy checks")
        ->check(CLI::PositiveNumber);

    // validate
    std::string validate_file;
    cli::DocumentKind kind = cli::DocumentKind::Auto;
    const std::map<std::string, cli::DocumentKind> kinds{{"auto", cli::DocumentKind::Auto},
                                                         {"effect", cli::DocumentKind::Effect},
                                                         {"state", cli::DocumentKind::State},
                                                         {"observable", cli::DocumentKind::Observable}};
    auto* validate = app.add_subcommand("validate", "Validate an effect, state or observable document");
    validate->add_option("file", validate_file, "Operator or observable JSON")->required();
    validate->add_option("--kind", kind, "auto | effect | state | observable")
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));

    // evolve
    cli::EvolveOptions evolve_opts;
    const std::map<std::string, cli::EvolveMode> modes{{"evolution", cli::EvolveMode::Evolution},
                                                       {"seqprod", cli::EvolveMode::SeqProd}};
    auto* evolve = app.add_subcommand("evolve", "Emit a trajectory CSV of b(t|a) or a[t]b");
    evolve->add_option("a", evolve_opts.a_file, "Effect a (JSON)")->required();
    evolve->add_option("b", evolve_opts.b_file, "Effect b (JSON)")->required();
    evolve->add_option("--t0", evolve_opts.t0, "First time")->capture_default_str();
    evolve->add_option("--t1", evolve_opts.t1, "Last time")->capture_default_str();
    evolve->add_option("--steps", evolve_opts.steps, "Number of intervals (rows = steps + 1)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    evolve->add_option("--mode", evolve_opts.mode, "evolution | seqprod")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

    // classify
    std::string classify_a;
    std::string classify_b;
    auto* classify = app.add_subcommand("classify", "Decide whether a[t]b is constant in t");
    classify->add_option("a", classify_a, "Effect a (JSON)")->required();
    classify->add_option("b", classify_b, "Effect b (JSON)")->required();

    // observable
    cli::ObservableOptions obs_opts;
    auto* observable = app.add_subcommand("observable", "Observable calculus");
    observable->require_subcommand(1);
    struct ObsSub {
        const char* name;
        const char* help;
        const char* files;
        bool time;
    };
    for (const ObsSub& s : {
             ObsSub{"dist", "Distribution of A in --state", "A", false},
             ObsSub{"seqprod", "Sequential product A o B", "A B", false},
             ObsSub{"cond", "B conditioned by A", "B A", false},
             ObsSub{"evolve", "a-evolution B(t|a); a given by --effect", "B", true},
             ObsSub{"tseq", "Time-dependent sequential product A[t]B", "A B", true},
             ObsSub{"tcond", "Time-dependent conditional observable (B|A)(t|A)", "B A", true},
             ObsSub{"convex", "Convex combination sum w_i B_i", "B1 B2 ...", false},
         }) {
        auto* sub = observable->add_subcommand(s.name, s.help);
        sub->add_option("files", obs_opts.files, std::string("Observable files: ") + s.files)->required();
        sub->add_option("--state", obs_opts.state_file, "State (JSON); adds the distribution");
        if (s.time) sub->add_option("--t", obs_opts.t, "Time")->capture_default_str();
        if (std::string(s.name) == "evolve") {
            sub->add_option("--effect", obs_opts.effect_file, "Effect a (JSON)")->required();
        }
        if (std::string(s.name) == "convex") {
            sub->add_option("--weights", obs_opts.weights, "Convex weights")->required()->delimiter(',');
        }
        sub->callback([&obs_opts, name = std::string(s.name)] { obs_opts.subcommand = name; });
    }

    // examples
    cli::ExamplesOptions examples_opts;
    auto* examples = app.add_subcommand("examples", "Re-run the worked qubit examples against closed forms");
    examples->add_option("--fault-tolerance", examples_opts.tolerance,
                         "Override the pass threshold (fault injection)")
        ->group("");

    // scan
    cli::ScanOptions scan_opts;
    auto& cfg = scan_opts.config;
    auto* scan = app.add_subcommand("scan", "Search for pairs with a[t]b = b[t]a at isolated t");
    scan->add_option("--dim", cfg.dim, "Hilbert space dimension")->capture_default_str()->check(CLI::Range(2, 8));
    scan->add_option("--trials", cfg.trials, "Random pairs")->capture_default_str()->check(CLI::NonNegativeNumber);
    scan->add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
    scan->add_option("--tmin", cfg.t_min, "Window start")->capture_default_str();
    scan->add_option("--tmax", cfg.t_max, "Window end")->capture_default_str();
    scan->add_option("--grid", cfg.grid_points, "Grid points")->capture_default_str()->check(CLI::Range(8, 1 << 24));
    scan->add_option("--refine", cfg.refine_iters, "Golden-section iterations")->capture_default_str();
    scan->add_option("--floor", cfg.commutator_floor, "Minimum ||[a, b]||")->capture_default_str()->check(CLI::PositiveNumber);
    scan->add_option("--puncture", cfg.puncture_radius, "Radius excluded around t = 0")->capture_default_str();
    scan->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
    scan->add_option("--json", scan_opts.json_out, "JSON output path")->capture_default_str();
    scan->add_option("--csv", scan_opts.csv_out, "CSV output path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kInvalidInput;
    }

    if (*validate) return cli::cmd_validate(validate_file, kind, std::cout, std::cerr);
    if (*evolve) return cli::cmd_evolve(evolve_opts, std::cout, std::cerr);
    if (*classify) return cli::cmd_classify(classify_a, classify_b, global, std::cout, std::cerr);
    if (*observable) return cli::cmd_observable(obs_opts, std::cout, std::cerr);
    if (*examples) return cli::cmd_examples(examples_opts, std::cout, std::cerr);
    if (*scan) return cli::cmd_scan(scan_opts, std::cout, std::cerr);
    return cli::kInvalidInput;
}
