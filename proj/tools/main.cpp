#include "pbes/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    using pbes::cli::Command;
    using pbes::cli::RunConfig;

    CLI::App app{"Decide membership in parameterised Boolean equation systems"};
    app.require_subcommand(1);
    RunConfig config;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", config.input, "PBES file")->required()->check(CLI::ExistingFile);
        sub->add_option("--max-sweeps", config.max_sweeps, "Refinement sweep limit")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("-o,--output", config.output_path, "Write standard output to a file");
    };
    auto add_dot = [&](CLI::App* sub) {
        sub->add_flag("--highlight-good-cycles", config.highlight_good_cycles,
                      "Double border on vertices of even cycles");
    };

    CLI::App* refine = app.add_subcommand("refine", "Print the stable partitions");
    add_common(refine);
    refine->add_option("--dot", config.dot_path, "Write the quotient graph as DOT");
    add_dot(refine);

    CLI::App* solve = app.add_subcommand("solve", "Decide a query such as X(0)");
    add_common(solve);
    solve->add_option("--query", config.query, "Query Name(v1,...)")->required();
    solve->add_option("--dot", config.dot_path, "Write the quotient graph as DOT");
    solve->add_option("--witness", config.witness_path, "Write the proof graph in graph-file format");
    solve->add_flag("--proof-graph-only", config.proof_graph_only, "Restrict DOT output to the proof graph");
    add_dot(solve);

    CLI::App* dot = app.add_subcommand("dot", "Emit the quotient graph as DOT");
    add_common(dot);
    dot->add_option("--dot", config.dot_path, "Output file instead of standard output");
    dot->add_option("--query", config.query, "Query for --proof-graph-only");
    dot->add_flag("--proof-graph-only", config.proof_graph_only, "Only the proof graph of the query");
    add_dot(dot);

    CLI::App* oracle = app.add_subcommand("oracle", "Bounded concrete lasso search");
    add_common(oracle);
    oracle->add_option("--query", config.query, "Query Name(v1,...)")->required();
    oracle->add_option("--max-states", config.max_states, "State limit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    oracle->add_option("--max-component", config.max_component, "Largest absolute component value")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* validate = app.add_subcommand("validate", "Check a proof graph file");
    add_common(validate);
    validate->add_option("--graph", config.graph_path, "Graph file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : pbes::cli::exit_error;
    }

    if (refine->parsed())
        config.command = Command::Refine;
    else if (solve->parsed())
        config.command = Command::Solve;
    else if (dot->parsed())
        config.command = Command::Dot;
    else if (oracle->parsed())
        config.command = Command::Oracle;
    else
        config.command = Command::Validate;
    return pbes::cli::run(config, std::cout, std::cerr);
}
