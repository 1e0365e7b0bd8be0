#include "pbes/cli.hpp"

#include "pbes/dot.hpp"
#include "pbes/error.hpp"
#include "pbes/oracle.hpp"
#include "pbes/solver.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace pbes::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Error("cannot write '" + path + "'");
}

SigElement require_query(const RunConfig& c, const NormalPbes& pbes)
{
    if (!c.query)
        throw Error("this command needs --query");
    return parse_query(pbes, *c.query);
}

void print_partitions(std::ostream& out, const NormalPbes& pbes, const RefinementOutcome& r)
{
    for (std::size_t i = 0; i < pbes.size(); ++i)
        out << pbes.equation(i).name << ": " << r.tuple[i].to_string() << "\n";
    if (r.status == RefineStatus::Fixpoint)
        out << "status: fixpoint after " << r.sweeps << " sweeps\n";
    else
        out << "status: capped at " << r.sweeps << " sweeps\n";
}

std::string lasso_line(const NormalPbes& pbes, const OracleResult& r, std::size_t from, std::size_t to_exclusive)
{
    std::string line = to_string(pbes, r.lasso[from]);
    for (std::size_t p = from; p < to_exclusive; ++p) {
        const std::size_t next = p + 1 < r.lasso.size() ? p + 1 : r.cycle_start;
        line += " -k" + std::to_string(r.lasso_clauses[p] + 1) + "-> " + to_string(pbes, r.lasso[next]);
    }
    return line;
}

int run_refine(const RunConfig& c, const NormalPbes& pbes, std::ostream& out)
{
    const Analysis a = analyze(pbes, c.max_sweeps);
    print_partitions(out, pbes, a.refinement);
    if (c.dot_path && a.rds)
        write_file(*c.dot_path, emit_dot(pbes, *a.rds, DotOptions{c.highlight_good_cycles}));
    return a.rds ? exit_conclusive : exit_unknown;
}

int run_solve(const RunConfig& c, const NormalPbes& pbes, std::ostream& out)
{
    const SigElement q = require_query(c, pbes);
    const Analysis a = analyze(pbes, c.max_sweeps);
    const MembershipAnswer m = decide(pbes, a, q);
    out << to_string(m.verdict) << "\n";
    if (m.witness)
        out << render_witness(pbes, *a.rds, *m.witness);
    else
        out << "reason: " << m.reason << "\n";
    if (c.dot_path && a.rds) {
        const DotOptions opts{c.highlight_good_cycles};
        write_file(*c.dot_path, c.proof_graph_only && m.witness ? emit_dot(pbes, *a.rds, *m.witness, opts)
                                                                : emit_dot(pbes, *a.rds, opts));
    }
    if (c.witness_path && m.witness)
        write_file(*c.witness_path, to_graph_file(pbes, to_proof_graph(*a.rds, *m.witness)));
    return m.verdict == Answer::Unknown ? exit_unknown : exit_conclusive;
}

int run_dot(const RunConfig& c, const NormalPbes& pbes, std::ostream& out, std::ostream& err)
{
    const Analysis a = analyze(pbes, c.max_sweeps);
    if (!a.rds) {
        err << "refinement capped at " << a.refinement.sweeps << " sweeps; no quotient graph\n";
        return exit_unknown;
    }
    const DotOptions opts{c.highlight_good_cycles};
    std::string text;
    if (c.proof_graph_only) {
        const MembershipAnswer m = decide(pbes, a, require_query(c, pbes));
        if (!m.witness) {
            err << "no reduced proof graph: " << m.reason << "\n";
            return exit_conclusive;
        }
        text = emit_dot(pbes, *a.rds, *m.witness, opts);
    } else {
        text = emit_dot(pbes, *a.rds, opts);
    }
    if (c.dot_path)
        write_file(*c.dot_path, text);
    else
        out << text;
    return exit_conclusive;
}

int run_oracle(const RunConfig& c, const NormalPbes& pbes, std::ostream& out)
{
    const SigElement q = require_query(c, pbes);
    const OracleResult r = bounded_lasso_search(pbes, q, c.max_states, c.max_component);
    out << "verdict: " << to_string(r.verdict) << "\n";
    if (r.verdict == Answer::True) {
        out << "lasso: stem " << lasso_line(pbes, r, 0, r.cycle_start) << "\n";
        out << "lasso: cycle " << lasso_line(pbes, r, r.cycle_start, r.lasso.size()) << "\n";
    } else {
        out << "reason: " << r.reason << "\n";
    }
    out << "explored: " << r.explored << " states, pruned: " << r.pruned << "\n";
    return r.verdict == Answer::Unknown ? exit_unknown : exit_conclusive;
}

int run_validate(const RunConfig& c, const NormalPbes& pbes, std::ostream& out)
{
    if (!c.graph_path)
        throw Error("validate needs --graph");
    const ProofGraph g = parse_graph_file(pbes, read_file(*c.graph_path));
    const Verdict v = validate(pbes, g);
    if (v.accepted)
        out << "accept\n";
    else
        out << "reject: condition " << v.condition << ": " << v.message << "\n";
    return exit_conclusive;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        const NormalPbes pbes = parse_pbes(read_file(config.input));
        std::ostringstream buffer;
        int code = exit_error;
        switch (config.command) {
        case Command::Refine: code = run_refine(config, pbes, buffer); break;
        case Command::Solve: code = run_solve(config, pbes, buffer); break;
        case Command::Dot: code = run_dot(config, pbes, buffer, err); break;
        case Command::Oracle: code = run_oracle(config, pbes, buffer); break;
        case Command::Validate: code = run_validate(config, pbes, buffer); break;
        }
        if (config.output_path)
            write_file(*config.output_path, buffer.str());
        else
            out << buffer.str();
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

} // namespace pbes::cli
