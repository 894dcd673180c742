#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace evenfix::detail {

/// Letters of a two-generator alphabet: x, x^-1, y, y^-1.
enum Letter : int { X = 0, Xi = 1, Y = 2, Yi = 3 };
inline constexpr int inverse_letter(int l) { return l ^ 1; }

using Relator = std::vector<int>;

/// Power x^e (or y^e) spelled out as letters.
Relator power(int generator_letter, int e);
Relator concat(std::initializer_list<Relator> parts);

/// Complete right-coset table of the trivial subgroup, i.e. the regular
/// action of the finitely presented group on itself. Row 0 is the identity.
struct CosetTable {
  std::vector<std::array<int, 4>> next;
  std::size_t size() const { return next.size(); }
  int trace(int from, const std::vector<int>& word) const;
};

/// HLT enumeration with coincidence handling over <x, y | relators>.
/// Throws InternalFault if more than `max_cosets` are ever defined.
CosetTable enumerate_cosets(const std::vector<Relator>& relators, std::size_t max_cosets = 4'000'000);

}  // namespace evenfix::detail
