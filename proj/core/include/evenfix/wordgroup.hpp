#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evenfix/coset_enumeration.hpp"

namespace evenfix {

/// <r, a> subject to a^2k = e, a^k = r^4 central, (ar)^2 = (ra)^2 =
/// (a^3 r^3)^2 = e and r^2 a^2 r^2 = a^2; optionally also r^2 a = a^s r^2.
struct Presentation {
  int k = 12;
  bool commuting = false;
  int s = 0;  // only meaningful when commuting

  int tau() const { return k / 4; }
  int modulus() const { return 2 * k; }
};

/// Validates k >= 12, k = 4 mod 8 and, in the commuting case, 2s = k + 2 mod 2k.
/// s defaults to 2 tau + 1.
Presentation make_presentation(int k, bool commuting = false, std::optional<int> s = std::nullopt);

enum class CosetLabel : std::uint8_t { A, r, r2, r3, ar2, ar3, a2r3, ra2r3 };
inline constexpr std::array<CosetLabel, 8> kCosetLabels = {CosetLabel::A,   CosetLabel::r,   CosetLabel::r2,
                                                           CosetLabel::r3,  CosetLabel::ar2, CosetLabel::ar3,
                                                           CosetLabel::a2r3, CosetLabel::ra2r3};
const char* to_string(CosetLabel c) noexcept;  // "A", "rA", ..., "ra2r3A"
std::optional<CosetLabel> parse_coset_label(const std::string& s);

/// coset representative times a^power, power in [0, 2k).
struct CosetForm {
  CosetLabel coset = CosetLabel::A;
  int power = 0;
  friend bool operator==(const CosetForm&, const CosetForm&) = default;
  friend auto operator<=>(const CosetForm&, const CosetForm&) = default;
};
std::string to_string(const CosetForm& f);

struct Syllable {
  char generator = 'r';  // 'r' or 'a'
  int exponent = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Alternating syllables with nonzero exponents.
struct Word {
  std::vector<Syllable> syllables;

  static Word r(int e = 1);
  static Word a(int e = 1);
  Word& append(char generator, int exponent);  // merges with the last syllable
  Word& operator*=(const Word& o);
  friend Word operator*(Word x, const Word& y) { return x *= y; }
  Word inverse() const;
  std::string str() const;
};

/// Accepts "r a^2 r^-1", "ra2r3", "e" and the empty string.
Word parse_word(const std::string& text);

/// The finite group defined by a presentation, with table-driven rewriting.
class WordGroup {
 public:
  explicit WordGroup(Presentation p);

  const Presentation& presentation() const { return p_; }
  std::size_t order() const { return forms_.size(); }

  /// Normal form by rewriting with the compiled right-multiplication table;
  /// throws InternalFault past `step_budget` rewriting steps.
  CosetForm reduce(const Word& w, std::size_t step_budget = 1'000'000) const;
  CosetForm multiply(const CosetForm& x, const CosetForm& y) const;
  CosetForm inverse(const CosetForm& x) const;
  Word word_of(const CosetForm& f) const;

  /// Canonical forms of all elements, in enumeration order.
  const std::vector<CosetForm>& elements() const { return forms_; }
  bool same(const Word& u, const Word& v) const { return reduce(u) == reduce(v); }

  /// rep(L) a^q r for q < 4, read off the enumeration.
  CosetForm r_table(CosetLabel L, int q) const;

  /// Element ids straight from the coset table, independent of rewriting.
  std::size_t id(const CosetForm& f) const;
  std::size_t trace(const Word& w) const;
  std::size_t mul(std::size_t x, std::size_t y) const;
  const CosetForm& form(std::size_t id) const { return forms_[id]; }

 private:
  CosetForm canonical(const CosetForm& f) const;
  CosetForm times_r(const CosetForm& f) const;

  Presentation p_;
  detail::CosetTable table_;
  std::vector<std::vector<int>> letters_;              // element id -> letters of its normal form
  std::vector<CosetForm> forms_;                       // element id -> canonical form
  std::vector<std::vector<int>> id_of_;                // [label][power] -> element id
  std::array<std::array<CosetForm, 4>, 8> r_table_{};  // [label][q]
};

CosetForm reduce_word(const Presentation& p, const Word& w);
std::size_t abstract_order(const Presentation& p);

struct TableRow {
  std::vector<int> inputs;     // (j_{m-1}, j_m, s_m) or (j_{m-2}, s_{m-1})
  std::string word;
  CosetLabel expected = CosetLabel::A;
  CosetLabel computed = CosetLabel::A;
  bool match() const { return expected == computed; }
};

struct CosetTableReport {
  std::vector<TableRow> tail_rows;       // words r^j1 a^s r^j2
  std::vector<TableRow> carry_rows;      // words r^j a^s r a^2 r^3
  std::vector<TableRow> carry_alt_rows;  // words r^j a^s a r^2, for comparison only
  std::size_t tail_matches() const;
  std::size_t carry_matches() const;
  std::size_t carry_alt_matches() const;
};

/// Re-derives both fixture coset tables and compares row by row with the
/// values embedded as fixture data.
CosetTableReport coset_table(const Presentation& p);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

struct AbstractRelationReport {
  std::vector<IdentityCheck> hypotheses;   // defining relations, re-checked
  std::vector<IdentityCheck> conclusions;  // the derived identities
  bool cosets_disjoint = false;            // A, rA, r2A, r3A pairwise disjoint
  bool partition = false;                  // all cosets partition the group
  bool all_hold() const;
};

AbstractRelationReport verify_abstract_relations(const Presentation& p);

struct NormalizerKReport {
  std::size_t group_order = 0, K_order = 0, index = 0;
  bool matches_union = false;        // K equals the eight even/odd pieces
  std::array<std::size_t, 8> piece_sizes{};
  bool generators_commute_h = false;
  bool generators_commute_h_prime = false;
  bool normalizer_of_h_is_K = false;
};

/// K = <r^2, ar, a^2>; compared with its coset description and with the
/// normalizer of <h>, h = r a^2 r^3 a^2.
NormalizerKReport abstract_normalizer_K(const Presentation& p);

}  // namespace evenfix
