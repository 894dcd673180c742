#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "evenfix/matgroup.hpp"

namespace evenfix {

enum class IsoStatus { isomorphic, not_isomorphic, undecided };
const char* to_string(IsoStatus s) noexcept;

struct IsomorphismResult {
  IsoStatus status = IsoStatus::undecided;
  std::vector<std::size_t> generators;  // generating set of the source
  std::vector<std::size_t> images;      // their images in the target
  std::vector<std::size_t> mapping;     // full bijection, source index -> target index
  std::size_t nodes = 0;                // search nodes visited
  std::string reason;
};

/// element order -> number of elements with that order
std::map<std::size_t, std::size_t> order_histogram(const FiniteMatrixGroup& G);

/// Greedy generating set: repeatedly add the lowest-index element of largest
/// order outside the current subgroup.
std::vector<std::size_t> greedy_generators(const FiniteMatrixGroup& G);

/// Backtracking over generator images with order filtering. Each candidate
/// assignment is checked by extending it along the Cayley graph.
IsomorphismResult find_isomorphism(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b,
                                   std::size_t budget = 2'000'000);

}  // namespace evenfix
