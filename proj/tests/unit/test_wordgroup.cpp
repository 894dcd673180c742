#include <doctest.h>

#include <random>
#include <set>

#include "evenfix/errors.hpp"
#include "evenfix/matgroup.hpp"
#include "evenfix/wordgroup.hpp"
#include "oracles.hpp"

using namespace evenfix;

namespace {

Word random_word(std::mt19937_64& rng, int syllables) {
  std::uniform_int_distribution<int> e(-30, 30);
  Word w;
  for (int i = 0; i < syllables; ++i) w.append(i % 2 == 0 ? 'r' : 'a', e(rng));
  return w;
}

Eigen::MatrixXd evaluate(const Word& w, const G8Matrices& m, int k) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(8, 8);
  for (const auto& s : w.syllables) {
    const int order = s.generator == 'r' ? 8 : 2 * k;
    const int e = ((s.exponent % order) + order) % order;
    for (int i = 0; i < e; ++i) out = out * (s.generator == 'r' ? m.R1 : m.A);
  }
  return out;
}

}  // namespace

TEST_SUITE("wordgroup") {
  const Presentation p12 = make_presentation(12);

  TEST_CASE("presentation validation") {
    CHECK_THROWS_AS(make_presentation(13), ParameterError);
    CHECK_THROWS_AS(make_presentation(8), ParameterError);
    CHECK_THROWS_AS(make_presentation(4), ParameterError);
    CHECK(make_presentation(12, true).s == 7);
    CHECK(make_presentation(12, true, 19).s == 19);
    CHECK_THROWS_AS(make_presentation(12, true, 5), ParameterError);
    CHECK_THROWS_AS(make_presentation(12, false, 7), ParameterError);
  }

  TEST_CASE("words") {
    CHECK(parse_word("r a^2 r^-1").str() == "r a^2 r^-1");
    CHECK(parse_word("ra2r3").str() == "r a^2 r^3");
    CHECK(parse_word("e").syllables.empty());
    CHECK(parse_word("").syllables.empty());
    CHECK(parse_word("r r^-1").syllables.empty());
    CHECK_THROWS_AS(parse_word("r b"), ParameterError);
    const Word w = parse_word("r a^3 r^2");
    CHECK((w * w.inverse()).syllables.empty());
  }

  TEST_CASE("coset labels") {
    for (CosetLabel c : kCosetLabels) CHECK(parse_coset_label(to_string(c)) == c);
    CHECK_FALSE(parse_coset_label("xA").has_value());
  }

  TEST_CASE("reduce examples") {
    CHECK(reduce_word(p12, Word{}) == CosetForm{CosetLabel::A, 0});
    CHECK(reduce_word(p12, parse_word("r a r")).coset == CosetLabel::A);
    CHECK(reduce_word(p12, parse_word("r a^2 r")).coset == CosetLabel::ar2);
    CHECK(reduce_word(p12, parse_word("r^2 a^2 r^2")) == CosetForm{CosetLabel::A, 2});
    CHECK(reduce_word(p12, parse_word("r^4")) == CosetForm{CosetLabel::A, 12});
  }

  TEST_CASE("orders") {
    for (int k : {12, 20, 28, 36}) CHECK(abstract_order(make_presentation(k)) == static_cast<std::size_t>(16 * k));
  }

  TEST_CASE("commuting case collapses to order 2k") {
    CHECK(abstract_order(make_presentation(12, true)) == 24);
    CHECK(oracle::commuting_quotient_order(12, 7) == 24);
    CHECK(abstract_order(make_presentation(20, true)) == 40);
    CHECK(oracle::commuting_quotient_order(20, 11) == 40);
  }

  TEST_CASE("reduction is a congruence") {
    const WordGroup W(p12);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 500; ++i) {
      const Word u = random_word(rng, 7), v = random_word(rng, 6);
      CHECK(W.reduce(u * v) == W.reduce(W.word_of(W.reduce(u)) * W.word_of(W.reduce(v))));
    }
  }

  TEST_CASE("multiplication is associative") {
    const WordGroup W(p12);
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<std::size_t> pick(0, W.order() - 1);
    for (int i = 0; i < 300; ++i) {
      const CosetForm x = W.elements()[pick(rng)], y = W.elements()[pick(rng)], z = W.elements()[pick(rng)];
      CHECK(W.multiply(W.multiply(x, y), z) == W.multiply(x, W.multiply(y, z)));
      CHECK(W.multiply(x, W.inverse(x)) == CosetForm{});
    }
  }

  TEST_CASE("r -> R1, a -> A is an isomorphism onto G(l)") {
    for (int l : {1, 2}) {
      const auto G = close_group(build_g8_generators(l));
      const Presentation p = make_presentation(G.k());
      const WordGroup W(p);
      const G8Matrices& m = *G.g8();
      REQUIRE(W.order() == G.order());
      std::set<std::size_t> image;
      for (const auto& f : W.elements()) image.insert(G.index_of(evaluate(W.word_of(f), m, p.k)));
      CHECK(image.size() == G.order());
      std::mt19937_64 rng(23);
      std::uniform_int_distribution<std::size_t> pick(0, W.order() - 1);
      for (int i = 0; i < 200; ++i) {
        const CosetForm x = W.elements()[pick(rng)], y = W.elements()[pick(rng)];
        const std::size_t lhs = G.index_of(evaluate(W.word_of(W.multiply(x, y)), m, p.k));
        const std::size_t rhs = G.multiply(G.index_of(evaluate(W.word_of(x), m, p.k)), G.index_of(evaluate(W.word_of(y), m, p.k)));
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("derived relations") {
    for (int k : {12, 20, 28, 36}) {
      const auto r = verify_abstract_relations(make_presentation(k));
      for (const auto& c : r.hypotheses) CHECK_MESSAGE(c.holds, k << ": " << c.name);
      for (const auto& c : r.conclusions) CHECK_MESSAGE(c.holds, k << ": " << c.name);
      CHECK(r.cosets_disjoint);
      CHECK(r.partition);
    }
    CHECK(verify_abstract_relations(make_presentation(12, true)).all_hold());
  }

  TEST_CASE("coset tables") {
    const auto t = coset_table(p12);
    REQUIRE(t.tail_rows.size() == 27);
    REQUIRE(t.carry_rows.size() == 9);
    auto row1 = [&](int a, int b, int c) {
      for (const auto& r : t.tail_rows)
        if (r.inputs == std::vector<int>{a, b, c}) return r;
      FAIL("row missing");
      return TableRow{};
    };
    CHECK(row1(2, 2, 2).computed == CosetLabel::A);
    CHECK(row1(3, 2, 2).computed == CosetLabel::r);
    CHECK(row1(1, 1, 1).computed == CosetLabel::A);
    // Two fixture entries disagree with the relations: r^2 a^3 r lies in ar3A.
    CHECK(row1(2, 1, 3).computed == CosetLabel::ar3);
    CHECK(row1(2, 3, 2).computed == CosetLabel::ar3);
    CHECK(t.tail_matches() == 25);
    // The carry fixture is reproduced by the suffix a r^2, not r a^2 r^3.
    CHECK(t.carry_matches() == 0);
    CHECK(t.carry_alt_matches() == 9);
    CHECK_THROWS_AS(coset_table(make_presentation(12, true)), ParameterError);
  }

  TEST_CASE("the subgroup K") {
    for (int k : {12, 20}) {
      const auto n = abstract_normalizer_K(make_presentation(k));
      CHECK(n.group_order == static_cast<std::size_t>(16 * k));
      CHECK(n.K_order == static_cast<std::size_t>(8 * k));
      CHECK(n.index == 2);
      CHECK(n.matches_union);
      for (std::size_t s : n.piece_sizes) CHECK(s == static_cast<std::size_t>(k));
      CHECK(n.generators_commute_h);
      CHECK(n.generators_commute_h_prime);
      CHECK(n.normalizer_of_h_is_K);
    }
  }

  TEST_CASE("step budget") {
    const WordGroup W(p12);
    CHECK_THROWS_AS(W.reduce(parse_word("r^3 a r^3 a r^3"), 2), InternalFault);
  }
}
