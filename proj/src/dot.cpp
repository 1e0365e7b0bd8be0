#include "pbes/dot.hpp"

namespace pbes {

namespace {

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string node_id(const RdsVertex& v)
{
    return "n" + std::to_string(v.eq + 1) + "_" + std::to_string(v.block_index + 1);
}

std::string node_line(const NormalPbes& pbes, const RdsVertex& v, bool double_border)
{
    const std::string label =
        pbes.equation(v.eq).name + "(" + v.block.to_string() + ") r=" + std::to_string(v.rank);
    std::string line = "  " + node_id(v) + " [label=" + quote(label);
    if (double_border)
        line += ", peripheries=2";
    return line + "];\n";
}

std::string edge_line(const RdsVertex& from, const RdsVertex& to, std::size_t k)
{
    return "  " + node_id(from) + " -> " + node_id(to) + " [label=\"k=" + std::to_string(k + 1) + "\"];\n";
}

std::string header(const NormalPbes& pbes)
{
    const std::string name = pbes.name().empty() ? "rds" : pbes.name();
    return "digraph " + quote(name) + " {\n  node [shape=box];\n";
}

} // namespace

std::string emit_dot(const NormalPbes& pbes, const Rds& rds, const DotOptions& options)
{
    const auto good = options.highlight_good_cycles ? good_cycle_vertices(rds) : std::vector<bool>(rds.vertices.size());
    std::string out = header(pbes);
    for (std::size_t v = 0; v < rds.vertices.size(); ++v)
        out += node_line(pbes, rds.vertices[v], good[v]);
    for (const auto& e : rds.edges)
        out += edge_line(rds.vertices[e.from], rds.vertices[e.to], e.k);
    return out + "}\n";
}

std::string emit_dot(const NormalPbes& pbes, const Rds& rds, const ReducedProofGraph& g, const DotOptions& options)
{
    const auto good = options.highlight_good_cycles ? good_cycle_vertices(rds) : std::vector<bool>(rds.vertices.size());
    std::string out = header(pbes);
    for (std::size_t v : g.vertices)
        out += node_line(pbes, rds.vertices[v], good[v]);
    for (std::size_t p = 0; p < g.vertices.size(); ++p)
        out += edge_line(rds.vertices[g.vertices[p]], rds.vertices[g.vertices[g.successor(p)]], g.clauses[p]);
    return out + "}\n";
}

} // namespace pbes
