#pragma once

#include <vector>

#include "ncst/oracle/tree_code.hpp"

namespace ncst::oracle {

constexpr int kConvexEnumerationLimit = 12;
constexpr int kGeneralEnumerationLimit = 9;

/// All non-crossing spanning trees, sorted by code. Convex sets use interval
/// recursion, others a crossing-aware backtracking search. Throws TooLarge
/// above the guards unless `force`.
std::vector<TreeCode> enumerate_trees(const PointSet& ps, const EdgeUniverse& u, bool force = false);

std::vector<TreeCode> enumerate_convex(const PointSet& ps, const EdgeUniverse& u);
std::vector<TreeCode> enumerate_general(const PointSet& ps, const EdgeUniverse& u);

}  // namespace ncst::oracle
