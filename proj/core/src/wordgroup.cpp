#include "evenfix/wordgroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "evenfix/errors.hpp"

namespace evenfix {

using detail::concat;
using detail::power;
using detail::X;
using detail::Y;

Presentation make_presentation(int k, bool commuting, std::optional<int> s) {
  if (k < 12 || k % 8 != 4) throw ParameterError("k must satisfy k >= 12 and k = 4 mod 8, got k = " + std::to_string(k));
  Presentation p;
  p.k = k;
  p.commuting = commuting;
  if (commuting) {
    const int m = 2 * k;
    p.s = ((s ? *s : 2 * p.tau() + 1) % m + m) % m;
    if ((2 * p.s) % m != (k + 2) % m)
      throw ParameterError("exponent s = " + std::to_string(p.s) + " is inconsistent with r^2 a^2 = a^(k+2) r^2");
  } else if (s) {
    throw ParameterError("exponent s is only used in the commuting case");
  }
  return p;
}

const char* to_string(CosetLabel c) noexcept {
  switch (c) {
    case CosetLabel::A: return "A";
    case CosetLabel::r: return "rA";
    case CosetLabel::r2: return "r2A";
    case CosetLabel::r3: return "r3A";
    case CosetLabel::ar2: return "ar2A";
    case CosetLabel::ar3: return "ar3A";
    case CosetLabel::a2r3: return "a2r3A";
    case CosetLabel::ra2r3: return "ra2r3A";
  }
  return "?";
}

std::optional<CosetLabel> parse_coset_label(const std::string& s) {
  for (CosetLabel c : kCosetLabels)
    if (s == to_string(c)) return c;
  return std::nullopt;
}

std::string to_string(const CosetForm& f) {
  return std::string(to_string(f.coset)) + " a^" + std::to_string(f.power);
}

Word Word::r(int e) { return Word{}.append('r', e); }
Word Word::a(int e) { return Word{}.append('a', e); }

Word& Word::append(char generator, int exponent) {
  if (generator != 'r' && generator != 'a') throw ParameterError(std::string("unknown generator '") + generator + "'");
  if (exponent == 0) return *this;
  if (!syllables.empty() && syllables.back().generator == generator) {
    syllables.back().exponent += exponent;
    if (syllables.back().exponent == 0) syllables.pop_back();
  } else {
    syllables.push_back({generator, exponent});
  }
  return *this;
}

Word& Word::operator*=(const Word& o) {
  for (const auto& s : o.syllables) append(s.generator, s.exponent);
  return *this;
}

Word Word::inverse() const {
  Word w;
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) w.append(it->generator, -it->exponent);
  return w;
}

std::string Word::str() const {
  if (syllables.empty()) return "e";
  std::string out;
  for (const auto& s : syllables) {
    if (!out.empty()) out += ' ';
    out += s.generator;
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' || text[i] == '.')) ++i;
  };
  skip();
  if (text.substr(i) == "e") return w;
  while (i < text.size()) {
    const char g = text[i];
    if (g != 'r' && g != 'a') throw ParameterError("cannot parse word '" + text + "' at position " + std::to_string(i));
    ++i;
    int e = 1;
    if (i < text.size() && (text[i] == '^' || text[i] == '-' || std::isdigit(static_cast<unsigned char>(text[i])))) {
      if (text[i] == '^') ++i;
      std::size_t used = 0;
      try {
        e = std::stoi(text.substr(i), &used);
      } catch (const std::exception&) {
        throw ParameterError("bad exponent in word '" + text + "'");
      }
      i += used;
    }
    w.append(g, e);
    skip();
  }
  return w;
}

namespace {

std::vector<int> letters_of(const Word& w) {
  std::vector<int> out;
  for (const auto& s : w.syllables) {
    const auto part = power(s.generator == 'r' ? X : Y, s.exponent);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Word rep_word(CosetLabel L) {
  switch (L) {
    case CosetLabel::A: return Word{};
    case CosetLabel::r: return Word::r();
    case CosetLabel::r2: return Word::r(2);
    case CosetLabel::r3: return Word::r(3);
    case CosetLabel::ar2: return Word::a() * Word::r(2);
    case CosetLabel::ar3: return Word::a() * Word::r(3);
    case CosetLabel::a2r3: return Word::a(2) * Word::r(3);
    case CosetLabel::ra2r3: return Word::r() * Word::a(2) * Word::r(3);
  }
  return Word{};
}

int mod(int x, int m) { return ((x % m) + m) % m; }

}  // namespace

WordGroup::WordGroup(Presentation p) : p_(p) {
  const int k = p_.k, m = p_.modulus();
  std::vector<detail::Relator> rel = {
      power(Y, 2 * k),
      concat({power(Y, k), power(X, -4)}),
      concat({power(Y, k), power(X, 1), power(Y, -k), power(X, -1)}),
      concat({power(Y, 1), power(X, 1), power(Y, 1), power(X, 1)}),
      concat({power(X, 1), power(Y, 1), power(X, 1), power(Y, 1)}),
      concat({power(Y, 3), power(X, 3), power(Y, 3), power(X, 3)}),
      concat({power(X, 2), power(Y, 2), power(X, 2), power(Y, -2)}),
  };
  if (p_.commuting) rel.push_back(concat({power(X, 2), power(Y, 1), power(X, -2), power(Y, -p_.s)}));
  table_ = detail::enumerate_cosets(rel);

  const std::size_t n = table_.size();
  forms_.assign(n, CosetForm{});
  std::vector<char> seen(n, 0);
  id_of_.assign(8, std::vector<int>(static_cast<std::size_t>(m), -1));
  for (std::size_t L = 0; L < 8; ++L) {
    for (int q = 0; q < m; ++q) {
      const int id = table_.trace(0, letters_of(rep_word(kCosetLabels[L]) * Word::a(q)));
      id_of_[L][static_cast<std::size_t>(q)] = id;
      if (!seen[static_cast<std::size_t>(id)]) {
        seen[static_cast<std::size_t>(id)] = 1;
        forms_[static_cast<std::size_t>(id)] = {kCosetLabels[L], q};
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InternalFault("coset representatives do not cover the group");
  letters_.resize(n);
  for (std::size_t id = 0; id < n; ++id) letters_[id] = letters_of(word_of(forms_[id]));
  for (std::size_t L = 0; L < 8; ++L)
    for (int q = 0; q < 4; ++q)
      r_table_[L][static_cast<std::size_t>(q)] =
          forms_[static_cast<std::size_t>(table_.trace(id_of_[L][static_cast<std::size_t>(q)], {X}))];
}

std::size_t WordGroup::id(const CosetForm& f) const {
  return static_cast<std::size_t>(id_of_[static_cast<std::size_t>(f.coset)][static_cast<std::size_t>(mod(f.power, p_.modulus()))]);
}

std::size_t WordGroup::trace(const Word& w) const { return static_cast<std::size_t>(table_.trace(0, letters_of(w))); }

std::size_t WordGroup::mul(std::size_t x, std::size_t y) const {
  return static_cast<std::size_t>(table_.trace(static_cast<int>(x), letters_[y]));
}

CosetForm WordGroup::canonical(const CosetForm& f) const { return forms_[id(f)]; }

CosetForm WordGroup::r_table(CosetLabel L, int q) const {
  return r_table_[static_cast<std::size_t>(L)][static_cast<std::size_t>(mod(q, 4))];
}

CosetForm WordGroup::times_r(const CosetForm& f) const {
  // rep a^(4t+q) r = rep a^q r a^(t(2k-4)), from a^4 r = r a^(2k-4).
  const int m = p_.modulus();
  const int t = f.power / 4, q = f.power % 4;
  CosetForm out = r_table_[static_cast<std::size_t>(f.coset)][static_cast<std::size_t>(q)];
  out.power = mod(out.power + t * (2 * p_.k - 4), m);
  return out;
}

CosetForm WordGroup::reduce(const Word& w, std::size_t step_budget) const {
  const int m = p_.modulus();
  CosetForm f;
  std::size_t steps = 0;
  for (const auto& s : w.syllables) {
    if (s.generator == 'a') {
      f.power = mod(f.power + s.exponent, m);
      ++steps;
    } else {
      for (int i = mod(s.exponent, 8); i > 0; --i, ++steps) f = times_r(f);
    }
    if (steps > step_budget) throw InternalFault("rewriting exceeded its step budget");
  }
  return canonical(f);
}

CosetForm WordGroup::multiply(const CosetForm& x, const CosetForm& y) const { return reduce(word_of(x) * word_of(y)); }

CosetForm WordGroup::inverse(const CosetForm& x) const { return reduce(word_of(x).inverse()); }

Word WordGroup::word_of(const CosetForm& f) const { return rep_word(f.coset) * Word::a(f.power); }

CosetForm reduce_word(const Presentation& p, const Word& w) { return WordGroup(p).reduce(w); }

std::size_t abstract_order(const Presentation& p) {
  const WordGroup G(p);
  std::set<CosetForm> seen{CosetForm{}};
  std::vector<CosetForm> queue{CosetForm{}};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (const Word& g : {Word::r(), Word::a()}) {
      const CosetForm y = G.reduce(G.word_of(queue[h]) * g);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen.size();
}

std::size_t CosetTableReport::tail_matches() const {
  return static_cast<std::size_t>(std::count_if(tail_rows.begin(), tail_rows.end(), [](const TableRow& r) { return r.match(); }));
}
std::size_t CosetTableReport::carry_matches() const {
  return static_cast<std::size_t>(std::count_if(carry_rows.begin(), carry_rows.end(), [](const TableRow& r) { return r.match(); }));
}
std::size_t CosetTableReport::carry_alt_matches() const {
  return static_cast<std::size_t>(
      std::count_if(carry_alt_rows.begin(), carry_alt_rows.end(), [](const TableRow& r) { return r.match(); }));
}

namespace {

// Fixture coset for r^j1 a^s r^j2, keyed (j1, j2, s).
const std::map<std::array<int, 3>, const char*>& fixture_tail_cosets() {
  static const std::map<std::array<int, 3>, const char*> t = {
      {{1, 1, 1}, "A"},      {{1, 1, 2}, "ar2A"},   {{1, 1, 3}, "ra2r3A"}, {{1, 2, 1}, "a2r3A"},
      {{1, 2, 2}, "r3A"},    {{1, 2, 3}, "a2r3A"},  {{1, 3, 1}, "ar2A"},   {{1, 3, 2}, "ra2r3A"},
      {{1, 3, 3}, "r2A"},    {{2, 1, 1}, "rA"},     {{2, 1, 2}, "a2r3A"},  {{2, 1, 3}, "ar2A"},
      {{2, 2, 1}, "ra2r3A"}, {{2, 2, 2}, "A"},      {{2, 2, 3}, "ra2r3A"}, {{2, 3, 1}, "a2r3A"},
      {{2, 3, 2}, "ar2A"},   {{2, 3, 3}, "r3A"},    {{3, 1, 1}, "r2A"},    {{3, 1, 2}, "ra2r3A"},
      {{3, 1, 3}, "ar2A"},   {{3, 2, 1}, "ar3A"},   {{3, 2, 2}, "rA"},     {{3, 2, 3}, "ar3A"},
      {{3, 3, 1}, "ra2r3A"}, {{3, 3, 2}, "ar2A"},   {{3, 3, 3}, "A"}};
  return t;
}

// Fixture coset for r^j a^s followed by r a^2 r^3, keyed (j, s).
const std::map<std::array<int, 2>, const char*>& fixture_carry_cosets() {
  static const std::map<std::array<int, 2>, const char*> t = {
      {{1, 1}, "r3A"}, {{1, 2}, "a2r3A"},  {{1, 3}, "r3A"}, {{2, 1}, "A"},  {{2, 2}, "ra2r3A"},
      {{2, 3}, "A"},   {{3, 1}, "rA"},     {{3, 2}, "ar3A"}, {{3, 3}, "rA"}};
  return t;
}

}  // namespace

CosetTableReport coset_table(const Presentation& p) {
  if (p.commuting) throw ParameterError("coset tables are defined for the non-commuting case");
  const WordGroup G(p);
  CosetTableReport rep;
  for (const auto& [key, fixture] : fixture_tail_cosets()) {
    const Word w = Word::r(key[0]) * Word::a(key[2]) * Word::r(key[1]);
    rep.tail_rows.push_back({{key[0], key[1], key[2]}, w.str(), *parse_coset_label(fixture), G.reduce(w).coset});
  }
  const Word tail = Word::r() * Word::a(2) * Word::r(3);
  const Word alt_tail = Word::a() * Word::r(2);
  for (const auto& [key, fixture] : fixture_carry_cosets()) {
    const Word head = Word::r(key[0]) * Word::a(key[1]);
    const CosetLabel expected = *parse_coset_label(fixture);
    const Word w = head * tail, alt = head * alt_tail;
    rep.carry_rows.push_back({{key[0], key[1]}, w.str(), expected, G.reduce(w).coset});
    rep.carry_alt_rows.push_back({{key[0], key[1]}, alt.str(), expected, G.reduce(alt).coset});
  }
  return rep;
}

bool AbstractRelationReport::all_hold() const {
  auto ok = [](const std::vector<IdentityCheck>& v) {
    return std::all_of(v.begin(), v.end(), [](const IdentityCheck& c) { return c.holds; });
  };
  return ok(hypotheses) && ok(conclusions) && cosets_disjoint && partition;
}

namespace {

// An identity holds when the coset table and the rewriting agree that both
// sides are the same element.
bool identity_holds(const WordGroup& G, const Word& lhs, const Word& rhs) {
  return G.trace(lhs) == G.trace(rhs) && G.reduce(lhs) == G.reduce(rhs) && G.form(G.trace(lhs)) == G.reduce(lhs);
}

std::set<std::size_t> cyclic_ids(const WordGroup& G, std::size_t g) {
  std::set<std::size_t> out;
  const std::size_t e = G.trace(Word{});
  std::size_t x = e;
  do {
    out.insert(x);
    x = G.mul(x, g);
  } while (x != e);
  return out;
}

}  // namespace

AbstractRelationReport verify_abstract_relations(const Presentation& p) {
  const WordGroup G(p);
  const int k = p.k;
  const Word r = Word::r(), a = Word::a(), e{};
  AbstractRelationReport rep;
  auto hyp = [&](std::string name, const Word& l, const Word& rr) { rep.hypotheses.push_back({std::move(name), identity_holds(G, l, rr)}); };
  auto con = [&](std::string name, const Word& l, const Word& rr) { rep.conclusions.push_back({std::move(name), identity_holds(G, l, rr)}); };

  hyp("a^2k = e", Word::a(2 * k), e);
  hyp("a^k = r^4", Word::a(k), Word::r(4));
  hyp("a^k r = r a^k", Word::a(k) * r, r * Word::a(k));
  hyp("(ar)^2 = e", a * r * a * r, e);
  hyp("(ra)^2 = e", r * a * r * a, e);
  hyp("(a^3 r^3)^2 = e", Word::a(3) * Word::r(3) * Word::a(3) * Word::r(3), e);
  hyp("r^2 a^2 r^2 = a^2", Word::r(2) * Word::a(2) * Word::r(2), Word::a(2));
  if (p.commuting) hyp("r^2 a = a^s r^2", Word::r(2) * a, Word::a(p.s) * Word::r(2));

  con("r^8 = e", Word::r(8), e);
  con("ar = r^3 a^(k-1)", a * r, Word::r(3) * Word::a(k - 1));
  con("a^3 r^3 = r a^(k-3)", Word::a(3) * Word::r(3), r * Word::a(k - 3));
  con("r^2 a^2 = a^(k+2) r^2", Word::r(2) * Word::a(2), Word::a(k + 2) * Word::r(2));
  con("r^2 a^4 = a^4 r^2", Word::r(2) * Word::a(4), Word::a(4) * Word::r(2));
  con("a^4 r = r a^(2k-4)", Word::a(4) * r, r * Word::a(2 * k - 4));
  {
    const auto r2 = cyclic_ids(G, G.trace(Word::r(2)));
    const auto a2 = cyclic_ids(G, G.trace(Word::a(2)));
    const bool n1 = r2.count(G.trace(Word::a(2) * Word::r(2) * Word::a(-2))) > 0;
    const bool n2 = a2.count(G.trace(Word::r(2) * Word::a(2) * Word::r(-2))) > 0;
    rep.conclusions.push_back({"a^2 in N(<r^2>) and r^2 in N(<a^2>)", n1 && n2});
  }

  // Cosets of A = <a>.
  std::vector<std::set<std::size_t>> cosets;
  for (CosetLabel L : kCosetLabels) {
    std::set<std::size_t> c;
    for (int q = 0; q < p.modulus(); ++q) c.insert(G.id({L, q}));
    cosets.push_back(std::move(c));
  }
  auto disjoint = [](const std::set<std::size_t>& x, const std::set<std::size_t>& y) {
    return std::none_of(x.begin(), x.end(), [&](std::size_t v) { return y.count(v) > 0; });
  };
  rep.cosets_disjoint = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) rep.cosets_disjoint = rep.cosets_disjoint && disjoint(cosets[i], cosets[j]);
  const std::size_t used = p.commuting ? 4 : 8;
  std::size_t total = 0;
  std::set<std::size_t> all;
  for (std::size_t i = 0; i < used; ++i) {
    total += cosets[i].size();
    all.insert(cosets[i].begin(), cosets[i].end());
  }
  rep.partition = total == all.size() && all.size() == G.order();
  return rep;
}

NormalizerKReport abstract_normalizer_K(const Presentation& p) {
  if (p.commuting) throw ParameterError("the subgroup K is defined for the non-commuting case");
  const WordGroup G(p);
  const int k = p.k;
  NormalizerKReport rep;
  rep.group_order = G.order();

  const std::vector<std::size_t> gens = {G.trace(Word::r(2)), G.trace(Word::a() * Word::r()), G.trace(Word::a(2))};
  std::set<std::size_t> K{G.trace(Word{})};
  std::vector<std::size_t> queue(K.begin(), K.end());
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (std::size_t g : gens) {
      const std::size_t y = G.mul(queue[h], g);
      if (K.insert(y).second) queue.push_back(y);
    }
  rep.K_order = K.size();
  rep.index = rep.group_order / rep.K_order;

  // Parity of the a-power in each piece: even for A, r2, ar3, ra2r3.
  static constexpr int parity[8] = {0, 1, 0, 1, 1, 0, 1, 0};
  std::set<std::size_t> pieces;
  for (std::size_t L = 0; L < 8; ++L) {
    std::set<std::size_t> piece;
    for (int q = parity[L]; q < p.modulus(); q += 2) piece.insert(G.id({kCosetLabels[L], q}));
    rep.piece_sizes[L] = piece.size();
    pieces.insert(piece.begin(), piece.end());
  }
  rep.matches_union = pieces == K;

  const Word hw = Word::r() * Word::a(2) * Word::r(3) * Word::a(2);
  const std::size_t h = G.trace(hw), hp = G.trace(hw * Word::a(k));
  auto commutes = [&](std::size_t x) {
    return std::all_of(gens.begin(), gens.end(), [&](std::size_t g) { return G.mul(g, x) == G.mul(x, g); });
  };
  rep.generators_commute_h = commutes(h);
  rep.generators_commute_h_prime = commutes(hp);

  const auto H = cyclic_ids(G, h);
  std::set<std::size_t> N;
  for (std::size_t g = 0; g < G.order(); ++g) {
    std::size_t gi = 0;
    while (G.mul(g, gi) != G.trace(Word{})) ++gi;
    bool normal = true;
    for (std::size_t x : H) normal = normal && H.count(G.mul(G.mul(g, x), gi)) > 0;
    if (normal) N.insert(g);
  }
  rep.normalizer_of_h_is_K = N == K;
  return rep;
}

}  // namespace evenfix
