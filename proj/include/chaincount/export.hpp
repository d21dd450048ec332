#pragma once

#include <string>

#include <json.hpp>

#include "chaincount/bigint.hpp"
#include "chaincount/chains.hpp"
#include "chaincount/lattice.hpp"

namespace chaincount {

using Json = nlohmann::ordered_json;

// JSON numbers stay exact up to 2^53 - 1; larger counts are emitted as
// decimal strings so no reader ever sees a rounded count.
Json bigint_to_json(const BigInt& v);

// {group:{degree,order,generators},nodes:[{id,order,label,generators}],
//  covers:[[child,parent]...],maximal_of_top:[...]}
// Node ids follow the lattice's deterministic (order, mask) sort, and the
// group/node generators are the canonical greedy generating sets, so the
// document is byte-identical across runs.
Json lattice_to_json(const SubgroupLattice& lattice);

// Rebuilds the group and every node from the exported generators, verifies
// the node set and covering relation match the document, and returns the
// (self-contained) lattice. Throws parse_error on any inconsistency.
SubgroupLattice lattice_from_json(const Json& doc);

// Nodes table (id,order,label,generators) for --format csv.
std::string lattice_to_csv(const SubgroupLattice& lattice);

}  // namespace chaincount
