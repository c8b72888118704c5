#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "graphlines/report.hpp"
#include "graphlines/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"lines in graph metrics: classification, lemma audits, exhaustive search, "
                 "and randomized constructions"};
    app.set_version_flag("--version", graphlines::kVersion);
    app.require_subcommand(1);

    graphlines::RunConfig cfg;
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Report format: json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--seed", cfg.seed, "Seed for randomized commands (default 0)");
        sub->add_option("--threads", cfg.threads, "Worker count")->check(CLI::PositiveNumber);
        sub->add_option("--size-cap", cfg.size_cap,
                        "Vertex cap for line-family computation (default 2000)");
        sub->add_flag("--override-size-cap", cfg.override_cap,
                      "Proceed past the line-family size cap");
    };

    std::string analyze_input;
    CLI::App* analyze = app.add_subcommand("analyze", "Classify a graph and report its lines");
    analyze->add_option("input", analyze_input, "graph6 or edge-list file")->required();
    add_common(analyze);

    std::string audit_input;
    CLI::App* audit = app.add_subcommand("audit", "Run the lemma audit suite on a graph");
    audit->add_option("input", audit_input, "graph6 or edge-list file")->required();
    add_common(audit);

    graphlines::SearchOptions search_opt;
    CLI::App* search = app.add_subcommand("search", "Find non-trivial geometric dominant graphs");
    search->add_option("--order", search_opt.order, "Built-in enumeration order (1..9)");
    search->add_option("--stream", search_opt.stream_path, "External graph6 stream, one per line");
    search->add_flag("--dedup", search_opt.dedup, "Deduplicate stream graphs by isomorphism");
    search->add_flag("--sweep", search_opt.sweep, "Add the open-question sweep");
    search->add_option("--max-n", search_opt.max_n, "Sweep bound (defaults to --order)");
    search->add_option("--out", search_opt.out_path, "Write witness graphs (graph6, one per line)");
    add_common(search);

    graphlines::ExplodeOptions explode_opt;
    CLI::App* explode = app.add_subcommand("explode", "Build the t-exploded graph and verify it");
    explode->add_option("input", explode_opt.input_path, "base graph file")->required();
    explode->add_option("--t", explode_opt.t, "Explosion multiplicity")->required();
    explode->add_option("--out", explode_opt.out_path, "Write the exploded graph");
    add_common(explode);

    graphlines::SampleOptions sample_opt;
    CLI::App* sample = app.add_subcommand("sample", "Randomized constructions");
    sample->require_subcommand(1);
    CLI::App* gnp = sample->add_subcommand("gnp", "G(n,p) with independent edges");
    gnp->add_option("--n", sample_opt.n, "Vertices")->required();
    gnp->add_option("--p", sample_opt.p, "Edge probability, 0 < p < 1")->required();
    gnp->add_option("--out", sample_opt.out_path, "Write the sampled graph");
    add_common(gnp);
    CLI::App* leftclique =
        sample->add_subcommand("leftclique", "Left side random, right side a clique; "
                                             "each draw verified for super dominance");
    leftclique->add_option("--n", sample_opt.n, "Vertices")->required();
    leftclique->add_option("--t", sample_opt.t, "Left side size (overrides --c0)");
    leftclique->add_option("--c0", sample_opt.c0, "Left side size factor: t = ceil(c0 ln n)");
    leftclique->add_option("--attempts", sample_opt.attempts, "Draws to try")->required();
    leftclique->add_option("--out", sample_opt.out_path, "Write the outcome graph");
    add_common(leftclique);

    CLI11_PARSE(app, argc, argv);

    try {
        graphlines::CommandResult res;
        if (*analyze) {
            res = graphlines::cmd_analyze(analyze_input, cfg);
        } else if (*audit) {
            res = graphlines::cmd_audit(audit_input, cfg);
        } else if (*search) {
            res = graphlines::cmd_search(search_opt, cfg);
        } else if (*explode) {
            res = graphlines::cmd_explode(explode_opt, cfg);
        } else {
            sample_opt.kind = *gnp ? "gnp" : "leftclique";
            res = graphlines::cmd_sample(sample_opt, cfg);
        }
        std::cout << res.rendered;
        return res.exit_code;
    } catch (const graphlines::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
