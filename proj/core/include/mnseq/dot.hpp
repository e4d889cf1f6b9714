#pragma once

#include <string>

#include "mnseq/graph.hpp"
#include "mnseq/hamiltonian.hpp"

namespace mnseq {

/// Graphviz text for the assembly graph: one node statement per vertex
/// (termini as points), one edge statement per transversal edge. With an
/// HPP, full middle edges get style=dashed and every edge is labeled with
/// its MDS/IES segments.
std::string to_dot(const AssemblyGraph& graph, const Hpp* hpp = nullptr);

}  // namespace mnseq
