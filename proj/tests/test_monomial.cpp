#include <doctest.h>

#include <stdexcept>
#include <variant>
#include <vector>

#include "gradedpi/monomial.hpp"
#include "gradedpi/reference.hpp"
#include "oracles.hpp"

using namespace gradedpi;

namespace {

const Group& Z() {
  static const Group z = Group::parse("Z");
  return z;
}

ElementaryGrading grading_of(const Group& g, const std::vector<std::int64_t>& entries) {
  std::vector<GroupElement> elems;
  for (std::int64_t v : entries) elems.push_back(g.make({v}));
  return build_grading(GradingTuple(g, std::move(elems)));
}

DegreeWord word_of(const Group& g, const std::vector<std::int64_t>& letters) {
  std::vector<GroupElement> elems;
  for (std::int64_t v : letters) elems.push_back(g.make({v}));
  return DegreeWord(g, std::move(elems));
}

// A chain witness must walk the tuple: g_{i_{t+1}} - g_{i_t} = h_t.
void check_chain(const ElementaryGrading& g, const DegreeWord& w, const NonIdentityChain& chain) {
  REQUIRE(chain.indices.size() == w.letters.size() + 1);
  const auto& entries = g.tuple().entries;
  for (std::size_t t = 0; t < w.letters.size(); ++t) {
    const GroupElement from = entries[static_cast<std::size_t>(chain.indices[t] - 1)];
    const GroupElement to = entries[static_cast<std::size_t>(chain.indices[t + 1] - 1)];
    CHECK(g.group().sub(to, from) == w.letters[t]);
  }
}

// A block witness must split [begin, end] into blocks spelling the generator.
void check_block_match(const ElementaryGrading& g, const DegreeWord& w, const BlockMatch& bm,
                       std::span<const DegreeWord> gens) {
  REQUIRE(bm.generator_index < gens.size());
  const auto& N = gens[bm.generator_index].letters;
  REQUIRE(bm.boundaries.size() == N.size() + 1);
  CHECK(bm.boundaries.front() == bm.begin - 1);
  CHECK(bm.boundaries.back() == bm.end);
  for (std::size_t t = 1; t < bm.boundaries.size(); ++t) {
    REQUIRE(bm.boundaries[t - 1] < bm.boundaries[t]);
    GroupElement s = g.group().zero();
    for (int i = bm.boundaries[t - 1] + 1; i <= bm.boundaries[t]; ++i) {
      s = g.group().add(s, w.letters[static_cast<std::size_t>(i - 1)]);
    }
    CHECK(s == N[t - 1]);
  }
}

}  // namespace

TEST_CASE("eval_word products") {
  const ElementaryGrading g = grading_of(Z(), {0, 1, 2});
  const PatternMatrix m = eval_word(g, word_of(Z(), {1, 1}));
  CHECK(m.get(0, 2));
  CHECK(m.popcount() == 1);  // e12 e23 = e13 only

  const Group z5 = Group::parse("Z_5");
  const ElementaryGrading h3 = grading_of(z5, {0, 1, 2});
  CHECK(eval_word(h3, word_of(z5, {2, 2})).is_zero());

  const ElementaryGrading h4 = grading_of(z5, {0, 1, 2, 3});
  CHECK(eval_word(h4, word_of(z5, {1, 1, 1, 1})).is_zero());
  const PatternMatrix cube = eval_word(h4, word_of(z5, {1, 1, 1}));
  CHECK(cube.get(0, 3));
  CHECK(cube.popcount() == 1);

  CHECK_THROWS_AS(eval_word(g, word_of(z5, {1})), std::invalid_argument);
}

TEST_CASE("classify_word verdicts and witnesses") {
  const ElementaryGrading g = grading_of(Z(), {0, 1, 2});

  const IdentityReport trivial = classify_word(g, word_of(Z(), {2, 1}));
  CHECK(trivial.is_identity);
  CHECK(trivial.is_trivial);
  REQUIRE(std::holds_alternative<TrivialInterval>(trivial.witness));
  const auto interval = std::get<TrivialInterval>(trivial.witness);
  CHECK(interval == TrivialInterval{1, 2});  // 2 + 1 = 3 is outside the support

  const Group z5 = Group::parse("Z_5");
  const ElementaryGrading h = grading_of(z5, {0, 1, 2});
  const IdentityReport nontrivial = classify_word(h, word_of(z5, {2, 2}));
  CHECK(nontrivial.is_identity);
  CHECK_FALSE(nontrivial.is_trivial);
  CHECK(std::holds_alternative<std::monostate>(nontrivial.witness));

  const ElementaryGrading k = grading_of(Z(), {0, 2, 3, 5});
  const IdentityReport square = classify_word(k, word_of(Z(), {1, 1}));
  CHECK(square.is_identity);  // R_1 = <e_23> squares to zero
  CHECK_FALSE(square.is_trivial);

  const IdentityReport non_id = classify_word(g, word_of(Z(), {1, 1}));
  CHECK_FALSE(non_id.is_identity);
  CHECK_FALSE(non_id.is_trivial);
  REQUIRE(std::holds_alternative<NonIdentityChain>(non_id.witness));
  const auto chain = std::get<NonIdentityChain>(non_id.witness);
  CHECK(chain.indices == std::vector<int>{1, 2, 3});
  check_chain(g, word_of(Z(), {1, 1}), chain);
}

TEST_CASE("classify_word invariants over exhaustive small words") {
  const Group z4 = Group::parse("Z_4");
  const std::vector<ElementaryGrading> gradings = {
      grading_of(Z(), {0, 1, 2}), grading_of(Z(), {0, 2, 3}), grading_of(z4, {0, 1, 2})};
  for (const ElementaryGrading& g : gradings) {
    for (int len = 1; len <= 3; ++len) {
      oracles::for_each_word(g.support(), len, [&](const std::vector<GroupElement>& letters) {
        const DegreeWord w(g.group(), letters);
        const IdentityReport r = classify_word(g, w);
        if (r.is_trivial) CHECK(r.is_identity);  // triviality soundness
        if (!r.is_identity) {
          REQUIRE(std::holds_alternative<NonIdentityChain>(r.witness));
          check_chain(g, w, std::get<NonIdentityChain>(r.witness));
        }
        if (r.is_trivial) {
          REQUIRE(std::holds_alternative<TrivialInterval>(r.witness));
          const auto iv = std::get<TrivialInterval>(r.witness);
          GroupElement s = g.group().zero();
          for (int i = iv.begin; i <= iv.end; ++i) {
            s = g.group().add(s, w.letters[static_cast<std::size_t>(i - 1)]);
          }
          CHECK_FALSE(g.in_support(s));
        }
      });
    }
  }
}

TEST_CASE("eval_word agrees with the substitution oracle") {
  const Group z5 = Group::parse("Z_5");
  const std::vector<ElementaryGrading> gradings = {grading_of(Z(), {0, 1, 2}),
                                                   grading_of(z5, {0, 1, 2})};
  for (const ElementaryGrading& g : gradings) {
    for (int len = 1; len <= 3; ++len) {
      oracles::for_each_word(g.support(), len, [&](const std::vector<GroupElement>& letters) {
        const DegreeWord w(g.group(), letters);
        CHECK(eval_word(g, w).is_zero() == oracles::naive_is_identity(g, w));
      });
    }
  }
}

TEST_CASE("is_consequence block witnesses") {
  const Group z5 = Group::parse("Z_5");
  const ElementaryGrading h = grading_of(z5, {0, 1, 2});
  const std::vector<DegreeWord> gens1{word_of(z5, {2, 2})};
  const auto w1 = is_consequence(h, word_of(z5, {2, 2, 1}), gens1, false);
  REQUIRE(w1.has_value());
  REQUIRE(std::holds_alternative<BlockMatch>(*w1));
  const BlockMatch bm1 = std::get<BlockMatch>(*w1);
  CHECK(bm1.begin == 1);
  CHECK(bm1.end == 2);
  CHECK(bm1.boundaries == std::vector<int>{0, 1, 2});
  check_block_match(h, word_of(z5, {2, 2, 1}), bm1, gens1);

  const ElementaryGrading k = grading_of(Z(), {0, 2, 3, 5});
  const std::vector<DegreeWord> gens2{word_of(Z(), {1, 1})};
  const auto w2 = is_consequence(k, word_of(Z(), {1, 1, 2}), gens2, false);
  REQUIRE(w2.has_value());
  REQUIRE(std::holds_alternative<BlockMatch>(*w2));
  const BlockMatch bm2 = std::get<BlockMatch>(*w2);
  CHECK(bm2.begin == 1);
  CHECK(bm2.end == 2);
  check_block_match(k, word_of(Z(), {1, 1, 2}), bm2, gens2);

  // blocks may merge several letters: (1,1,2) spells the generator (2,2)
  // as blocks (1+1)(2) inside the window [1,3]
  const std::vector<DegreeWord> gens3{word_of(Z(), {2, 2})};
  const auto w3 = is_consequence(k, word_of(Z(), {1, 1, 2}), gens3, false);
  REQUIRE(w3.has_value());
  const BlockMatch bm3 = std::get<BlockMatch>(*w3);
  CHECK(bm3.begin == 1);
  CHECK(bm3.end == 3);
  CHECK(bm3.boundaries == std::vector<int>{0, 2, 3});
  check_block_match(k, word_of(Z(), {1, 1, 2}), bm3, gens3);
}

TEST_CASE("is_consequence triviality handling") {
  const ElementaryGrading g = grading_of(Z(), {0, 1, 2});
  // (1,1,1) sums to 3, outside the support: a trivial identity
  const IdentityReport r = classify_word(g, word_of(Z(), {1, 1, 1}));
  CHECK(r.is_identity);
  CHECK(r.is_trivial);

  const auto with_trivial = is_consequence(g, word_of(Z(), {1, 1, 1}), {}, true);
  REQUIRE(with_trivial.has_value());
  REQUIRE(std::holds_alternative<TrivialInterval>(*with_trivial));
  CHECK(std::get<TrivialInterval>(*with_trivial) == TrivialInterval{1, 3});

  const auto without = is_consequence(g, word_of(Z(), {1, 1, 1}), {}, false);
  CHECK_FALSE(without.has_value());
}

TEST_CASE("is_consequence validates its inputs") {
  const ElementaryGrading g = grading_of(Z(), {0, 1, 2});
  // (1,1) is not an identity here
  CHECK_THROWS_AS(is_consequence(g, word_of(Z(), {1, 1}), {}, true), std::invalid_argument);

  const std::vector<DegreeWord> bad_gens{word_of(Z(), {1, 1})};
  CHECK_THROWS_AS(is_consequence(g, word_of(Z(), {1, 1, 1}), bad_gens, true),
                  std::invalid_argument);
}

TEST_CASE("is_consequence agrees with the brute-force scan") {
  const Group z5 = Group::parse("Z_5");
  const Group z4 = Group::parse("Z_4");
  const std::vector<ElementaryGrading> gradings = {
      grading_of(z5, {0, 1, 2}), grading_of(z4, {0, 1, 2}), grading_of(Z(), {0, 2, 3})};
  for (const ElementaryGrading& g : gradings) {
    const std::vector<DegreeWord> gens = reference::all_nontrivial_identities(g, 2);
    for (int len = 1; len <= 4; ++len) {
      oracles::for_each_word(g.support(), len, [&](const std::vector<GroupElement>& letters) {
        const DegreeWord w(g.group(), letters);
        if (!eval_word(g, w).is_zero()) return;
        for (bool allow_trivial : {false, true}) {
          const auto witness = is_consequence(g, w, gens, allow_trivial);
          CHECK(witness.has_value() == oracles::brute_consequence(g, w, gens, allow_trivial));
          if (witness && std::holds_alternative<BlockMatch>(*witness)) {
            check_block_match(g, w, std::get<BlockMatch>(*witness), gens);
          }
        }
      });
    }
  }
}

TEST_CASE("nonzero_rows") {
  const ElementaryGrading g = grading_of(Z(), {0, 1, 2});
  CHECK(nonzero_rows(g.pattern_matrix(Z().make({1}))) == 2);
  CHECK(nonzero_rows(PatternMatrix(4)) == 0);
  CHECK(nonzero_rows(g.pattern_matrix(Z().zero())) == 3);

  // row count never grows when the word is extended
  for (int len = 1; len <= 3; ++len) {
    oracles::for_each_word(g.support(), len, [&](const std::vector<GroupElement>& letters) {
      const DegreeWord w(Z(), letters);
      const int rows = nonzero_rows(eval_word(g, w));
      for (const GroupElement& x : g.support()) {
        std::vector<GroupElement> ext = letters;
        ext.push_back(x);
        CHECK(nonzero_rows(eval_word(g, DegreeWord(Z(), ext))) <= rows);
      }
    });
  }
}

TEST_CASE("dropping the first letter of a zero-sum word keeps the row count") {
  const ElementaryGrading g = grading_of(Z(), {0, 1, 3});
  for (int len = 2; len <= 4; ++len) {
    oracles::for_each_word(g.support(), len, [&](const std::vector<GroupElement>& letters) {
      if (!Z().is_zero(Z().word_sum(letters))) return;
      const std::vector<GroupElement> tail(letters.begin() + 1, letters.end());
      CHECK(nonzero_rows(eval_word(g, DegreeWord(Z(), letters))) ==
            nonzero_rows(eval_word(g, DegreeWord(Z(), tail))));
    });
  }
}

TEST_CASE("degree word validation") {
  CHECK_THROWS_AS(DegreeWord(Z(), {}), std::invalid_argument);
  CHECK_THROWS_AS(DegreeWord(Z(), {GroupElement{{1, 2}}}), std::invalid_argument);
}
