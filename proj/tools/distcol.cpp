// distcol: distance-t edge colouring toolkit.
//
//   distcol gen --family projective-plane --q 2 --output heawood.txt
//   distcol color --input heawood.txt --t 3 --algo exact --output heawood.col

#include "distcol/cli.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

using distcol::cli::RunConfig;

void add_common(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--input", cfg.input, "Edge-list file (p edge n m / e u v)");
    cmd->add_option("--output", cfg.output, "Output path; stdout when omitted");
    cmd->add_option("--t", cfg.t, "Distance parameter t")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "Master seed");
    cmd->add_option("--budget", cfg.budget, "Node budget for exact searches");
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Distance-t edge colouring toolkit"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Generate a graph family");
    add_common(gen, cfg);
    gen->add_option("--family", cfg.family, "Graph family")
        ->required()
        ->check(CLI::IsMember({"cycle", "path", "complete-bipartite", "blown-up-c5", "hamming",
            "projective-plane", "random-high-girth"}));
    gen->add_option("--s", cfg.s, "Part size (blown-up-c5; complete-bipartite side)");
    gen->add_option("--q", cfg.q, "Prime order (projective-plane)");
    gen->add_option("--n", cfg.n, "Vertex count (cycle, path, random-high-girth)");
    gen->add_option("--d", cfg.d, "Target degree (random-high-girth)");
    gen->add_option("--g", cfg.g, "Girth target (random-high-girth)");
    gen->add_option("--dims", cfg.dims, "Dimension (hamming)");
    gen->add_option("--alphabet", cfg.alphabet, "Alphabet size (hamming)");
    gen->add_option("--a", cfg.a, "First side (complete-bipartite)");
    gen->add_option("--b", cfg.b, "Second side (complete-bipartite)");

    auto* conflict = app.add_subcommand("conflict", "Conflict-graph statistics");
    add_common(conflict, cfg);

    auto* color = app.add_subcommand("color", "Colour edges at distance <= t distinctly");
    add_common(color, cfg);
    color->add_option("--algo", cfg.algo, "Colourer")->check(CLI::IsMember({"greedy", "dsatur", "exact", "resample"}));
    color->add_option("--k", cfg.k, "Palette size for resample (default max conflict degree + 1)");
    color->add_option("--max-rounds", cfg.max_rounds, "Resampling round limit");
    color->add_option("--epsilon", cfg.epsilon, "epsilon of the (2 - epsilon) maxdeg^t reference line");

    auto* match = app.add_subcommand("match", "Distance-t matching");
    add_common(match, cfg);
    match->add_option("--algo", cfg.algo, "greedy or exact")->check(CLI::IsMember({"greedy", "exact"}));

    auto* audit = app.add_subcommand("audit", "Neighbourhood sparsity and heavy/light audits");
    add_common(audit, cfg);
    audit->add_option("--delta", cfg.delta, "Sparsity parameter delta");
    audit->add_option("--root", cfg.root, "Root edge id");
    audit->add_flag("--all-roots", cfg.all_roots, "Audit every root (sampled beyond --root-sample)");
    audit->add_option("--root-sample", cfg.root_sample, "Root sample size for --all-roots");

    auto* check = app.add_subcommand("check", "Validate a colouring file");
    add_common(check, cfg);
    check->add_option("--colouring", cfg.colouring, "Colouring file (<edge-id> <colour> per line)")->required();

    auto* bench = app.add_subcommand("bench", "Sweep the benchmark grid and write CSV");
    add_common(bench, cfg);
    bench->add_option("--algo", cfg.algo, "Colourer or 'all'")
        ->check(CLI::IsMember({"all", "greedy", "dsatur", "exact", "resample"}));
    bench->add_option("--k", cfg.k, "Palette size for resample");
    bench->add_option("--max-rounds", cfg.max_rounds, "Resampling round limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return distcol::cli::kExitUsage;
    }

    for (auto* sub : app.get_subcommands())
        cfg.command = sub->get_name();
    if (cfg.command == "match" && match->count("--algo") == 0)
        cfg.algo = "exact";
    if (cfg.command == "bench" && bench->count("--algo") == 0)
        cfg.algo = "all";
    return distcol::cli::run(cfg, std::cout, std::cerr);
}
