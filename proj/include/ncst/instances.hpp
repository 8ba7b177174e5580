#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "ncst/tree.hpp"

namespace ncst {

/// A point set with named trees. Generated point sets are indexed in height
/// order, so index i is v_{i+1}.
struct Instance {
  PointSetPtr points;
  std::map<std::string, Tree> trees;

  const Tree& tree(const std::string& name) const;
};

enum class InstanceKind { DoubleBroom, Star, MonotonePath, ConvexRandom, GeneralRandom, RegularPolygon };

struct InstanceSpec {
  InstanceKind kind = InstanceKind::RegularPolygon;
  int n = 0;
  std::uint64_t seed = 0;
};

/// Accepts "double-broom", "double_broom", etc. Throws InvalidInput.
InstanceKind parse_instance_kind(const std::string& name);
const char* to_string(InstanceKind kind);

/// n points on a circle of radius 10^6, rotated off-axis; convex.
PointSetPtr regular_polygon(int n);

/// Convex points on alternate sides of the v1-vn chord with ti the two-hub
/// tree ("initial") and tf the path v1..vn ("final"). Throws BadParity.
Instance double_broom(int n);

/// The explicit 1.5n-5 sequence for double_broom(n). Throws BadParity, and
/// TooSmall for n < 6. For n = 6 the same recipe yields d = 5 flips.
FlipSequence double_broom_witness(int n);

/// Star centered at the point with index `center`.
Tree star(const PointSetPtr& ps, int center);

/// Path through the points in height order.
Tree height_path(const PointSetPtr& ps);

/// Convex points drawn from an angular grid on a circle of radius 10^6.
/// Throws SeedExhausted.
PointSetPtr convex_random(int n, std::uint64_t seed);

/// Points in general position in [-10^4, 10^4]^2. Throws SeedExhausted.
PointSetPtr general_random(int n, std::uint64_t seed);

/// Greedy non-crossing spanning tree over a shuffled edge list.
Tree random_tree(const PointSetPtr& ps, std::mt19937_64& rng);

/// Path monotone in a random direction.
Tree random_monotone_path(const PointSetPtr& ps, std::mt19937_64& rng);

/// Named trees per kind: double_broom -> initial/final; star -> star;
/// monotone_path -> path; regular_polygon -> initial (star)/final (path);
/// random kinds -> initial/final random trees.
Instance make_instance(const InstanceSpec& spec);

}  // namespace ncst
