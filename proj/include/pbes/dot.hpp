#pragma once

#include "pbes/depspace.hpp"
#include "pbes/solver.hpp"

#include <string>

namespace pbes {

struct DotOptions {
    bool highlight_good_cycles = false;
};

/// Graphviz rendering of the quotient graph. Good-cycle vertices get
/// `peripheries=2` when highlighting is requested.
std::string emit_dot(const NormalPbes& pbes, const Rds& rds, const DotOptions& options = {});

/// Only the vertices and chosen edges of a reduced proof graph.
std::string emit_dot(const NormalPbes& pbes, const Rds& rds, const ReducedProofGraph& g, const DotOptions& options = {});

} // namespace pbes
