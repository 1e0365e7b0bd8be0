#pragma once

// Reduced proof graphs: extraction from the quotient graph, structural
// validation, and the three-valued membership decision.

#include "pbes/depspace.hpp"
#include "pbes/pbes.hpp"
#include "pbes/refine.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pbes {

/// A lasso in the quotient graph. vertices[0] is the root; vertex p moves
/// along clauses[p] to vertices[p + 1], and the last vertex returns to
/// vertices[cycle_start].
struct ReducedProofGraph {
    std::vector<std::size_t> vertices;  // indices into Rds::vertices
    std::vector<std::size_t> clauses;
    std::size_t cycle_start = 0;

    [[nodiscard]] std::size_t successor(std::size_t p) const { return p + 1 < vertices.size() ? p + 1 : cycle_start; }
};

/// Arbitrary graph over (equation, block) vertices.
struct ProofVertex {
    std::string id;
    std::size_t eq = 0;
    presburger::CanonicalFormula block;
};

struct ProofEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t k = 0;  // 0-based clause index
};

struct ProofGraph {
    std::vector<ProofVertex> vertices;
    std::vector<ProofEdge> edges;
    std::size_t root = 0;
};

struct Verdict {
    bool accepted = true;
    int condition = 0;  // first violated condition (1 to 3), 0 when accepted
    std::string message;
};

/// Vertices of the quotient graph lying on a cycle with even minimum rank.
std::vector<bool> good_cycle_vertices(const Rds& rds);

std::optional<ReducedProofGraph> extract(const Rds& rds, std::size_t start);

ProofGraph to_proof_graph(const Rds& rds, const ReducedProofGraph& g);

/// Checks unique successors, clause consistency of every edge with
/// block-wide guard and update containment, and that no cycle has odd
/// minimum rank.
Verdict validate(const NormalPbes& pbes, const ProofGraph& g);

/// Lines `vertex <id> <Pred> <formula>`, `edge <id> <id> k=<n>`, `root <id>`.
ProofGraph parse_graph_file(const NormalPbes& pbes, std::string_view text);
std::string to_graph_file(const NormalPbes& pbes, const ProofGraph& g);

/// Two lines, `stem: ...` and `cycle: ...`.
std::string render_witness(const NormalPbes& pbes, const Rds& rds, const ReducedProofGraph& g);

/// Refinement result together with the quotient graph when it exists.
struct Analysis {
    RefinementOutcome refinement;
    std::optional<Rds> rds;
    std::vector<bool> good;
};

Analysis analyze(const NormalPbes& pbes, std::size_t max_sweeps = 100);

enum class Answer { True, False, Unknown };

std::string_view to_string(Answer a);

struct MembershipAnswer {
    Answer verdict = Answer::Unknown;
    std::string reason;
    std::size_t vertex = 0;  // quotient vertex of the query, when located
    std::optional<ReducedProofGraph> witness;
};

MembershipAnswer decide(const NormalPbes& pbes, const Analysis& analysis, const SigElement& query);
MembershipAnswer decide_membership(const NormalPbes& pbes, const SigElement& query, std::size_t max_sweeps = 100);

} // namespace pbes
