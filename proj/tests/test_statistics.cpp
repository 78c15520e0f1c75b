#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "mahonian/statistics.hpp"
#include "oracles.hpp"

using namespace mahonian;
using testing::alpha;
using testing::error_code;

namespace {

Relation rel(std::size_t n, std::vector<Edge> edges) { return Relation(n, edges); }

constexpr TieRule kRules[] = {TieRule::CopyLabelMax, TieRule::Leftmost, TieRule::Rightmost};

std::vector<Letter> w(std::initializer_list<Letter> letters) { return letters; }

}  // namespace

TEST_CASE("graphical inversions") {
  CHECK(graphical_inversions(Relation(3), w({3, 2, 1})) == 0);
  CHECK(graphical_inversions(Relation::natural_order(3), w({3, 2, 1})) == 3);
  CHECK(graphical_inversions(rel(2, {{1, 2}}), w({1, 2, 1})) == 1);
  CHECK(error_code([] { graphical_inversions(Relation(2), w({1, 3})); }) == ErrorCode::AlphabetMismatch);
}

TEST_CASE("graphical descents and major index") {
  CHECK(graphical_descent_set(Relation(2), w({2, 1, 2})).empty());
  CHECK(graphical_descent_set(Relation::natural_order(3), w({3, 2, 1})) == std::vector<std::size_t>{1, 2});
  CHECK(graphical_descent_set(rel(2, {{2, 1}}), w({1, 2, 1, 2})) == std::vector<std::size_t>{2});
  CHECK(graphical_descents(Relation::natural_order(3), w({3, 2, 1})) == 2);
  CHECK(graphical_major_index(Relation::natural_order(3), w({3, 2, 1})) == 3);
  CHECK(graphical_major_index(rel(2, {{2, 1}}), w({1, 2, 1, 2})) == 2);
  CHECK(graphical_major_index(Relation(3), w({3, 1, 2})) == 0);
  CHECK(graphical_major_index(Relation(1), w({})) == 0);
  CHECK(error_code([] { graphical_major_index(Relation(2), w({0, 1})); }) == ErrorCode::AlphabetMismatch);
}

TEST_CASE("sorting index of a permutation") {
  const auto sigma = w({2, 4, 1, 3, 5, 7, 6});
  for (auto rule : kRules) CHECK(graphical_sorting_index(Relation::natural_order(7), sigma, rule) == 5);

  const auto t = graphical_sort_trace(Relation::natural_order(7), sigma);
  std::vector<Count> contributions;
  for (const auto& s : t.steps) contributions.push_back(s.contribution);
  CHECK(contributions == std::vector<Count>{1, 0, 0, 2, 1, 1, 0});
  CHECK(t.final_word == w({1, 2, 3, 4, 5, 6, 7}));
}

TEST_CASE("sorting index examples on words") {
  for (auto rule : kRules) {
    CHECK(graphical_sorting_index(Relation(3), w({3, 1, 2, 3}), rule) == 0);
    CHECK(graphical_sorting_index(rel(2, {{2, 1}}), w({2, 1, 1}), rule) == 2);
  }
  CHECK(error_code([] { graphical_sorting_index(Relation(2), w({3})); }) == ErrorCode::AlphabetMismatch);
}

TEST_CASE("copy-label sort of 143123123 step by step") {
  const auto word = w({1, 4, 3, 1, 2, 3, 1, 2, 3});
  SelectionSort sort(word, TieRule::CopyLabelMax);
  std::vector<std::vector<Letter>> changed;
  std::vector<Letter> previous(word);
  const auto u = Relation::natural_order(4);
  while (!sort.done()) {
    sort.step(u);
    std::vector<Letter> now(sort.current().begin(), sort.current().end());
    if (now != previous) changed.push_back(now);
    previous = now;
  }
  CHECK(changed == std::vector<std::vector<Letter>>{{1, 3, 3, 1, 2, 3, 1, 2, 4},
                                                    {1, 2, 3, 1, 2, 3, 1, 3, 4},
                                                    {1, 2, 3, 1, 2, 1, 3, 3, 4},
                                                    {1, 2, 1, 1, 2, 3, 3, 3, 4},
                                                    {1, 1, 1, 2, 2, 3, 3, 3, 4}});

  // First-step counts: 7 jumped letters classically, 3 of them related under U.
  const auto graphical = rel(4, {{4, 3}, {3, 3}, {3, 1}, {2, 3}, {1, 1}});
  CHECK(graphical_sort_trace(Relation::natural_order(4), word).steps[0].contribution == 7);
  CHECK(graphical_sort_trace(graphical, word).steps[0].contribution == 3);
}

TEST_CASE("sort trace invariants") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto u = Relation::from_mask(n, rng() & ((1ULL << (n * n)) - 1));
    std::vector<Letter> word(rng() % 9);
    for (auto& x : word) x = static_cast<Letter>(1 + rng() % n);
    auto sorted = word;
    std::sort(sorted.begin(), sorted.end());
    for (auto rule : kRules) {
      const auto t = graphical_sort_trace(u, word, rule);
      REQUIRE(t.final_word == sorted);
      REQUIRE(t.steps.size() == word.size());
      Count sum = 0;
      for (std::size_t s = 0; s < t.steps.size(); ++s) {
        REQUIRE(t.steps[s].to == word.size() - s);
        REQUIRE(t.steps[s].from <= t.steps[s].to);
        REQUIRE(t.steps[s].letter == sorted[word.size() - 1 - s]);
        sum += t.steps[s].contribution;
      }
      REQUIRE(sum == graphical_sorting_index(u, word, rule));
      REQUIRE(graphical_sorting_index(u, word, rule) == graphical_sorting_index(u, word, rule));
    }
    SelectionSort sort(word, TieRule::CopyLabelMax);
    while (!sort.done()) {
      sort.step(u);
      std::vector<Letter> now(sort.current().begin(), sort.current().end());
      std::sort(now.begin(), now.end());
      REQUIRE(now == sorted);
    }
  }
}

TEST_CASE("statistics agree with brute force") {
  for (std::uint64_t m = 0; m < 512; m += 3) {
    const auto u = Relation::from_mask(3, m);
    for (const auto& word : oracle::words({2, 1, 2})) {
      REQUIRE(graphical_inversions(u, word) == oracle::inv(u, word));
      REQUIRE(graphical_major_index(u, word) == oracle::maj(u, word));
      REQUIRE(graphical_sorting_index(u, word) == oracle::sor_copy_label(u, word));
    }
  }
}

TEST_CASE("graphical statistics under the natural order on permutations") {
  const auto u = Relation::natural_order(5);
  for (const auto& p : oracle::words({1, 1, 1, 1, 1})) {
    Count inv = 0, maj = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1]) maj += i + 1;
    // Classical sor: sum over i of (i - j) where j is the position of the value i.
    auto q = p;
    Count sor = 0;
    for (std::size_t i = q.size(); i-- > 0;) {
      const auto j = static_cast<std::size_t>(std::max_element(q.begin(), q.begin() + i + 1) - q.begin());
      sor += i - j;
      std::swap(q[i], q[j]);
    }
    REQUIRE(graphical_inversions(u, p) == inv);
    REQUIRE(graphical_major_index(u, p) == maj);
    for (auto rule : kRules) REQUIRE(graphical_sorting_index(u, p, rule) == sor);
  }
}

TEST_CASE("complement identity on random pairs") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto u = Relation::from_mask(n, rng() & ((1ULL << (n * n)) - 1));
    const auto c = complement(u);
    std::vector<Letter> word(rng() % 12);
    for (auto& x : word) x = static_cast<Letter>(1 + rng() % n);
    const Count m = word.size();
    const Count pairs = m * (m > 0 ? m - 1 : 0) / 2;
    REQUIRE(graphical_major_index(u, word) + graphical_major_index(c, word) == pairs);
    REQUIRE(graphical_inversions(u, word) + graphical_inversions(c, word) == pairs);
  }
}

TEST_CASE("maximal chain words") {
  CHECK(maximal_chain_word(Relation::natural_order(3), alpha({1, 1, 1})) == Word({3, 2, 1}, alpha({1, 1, 1})));
  CHECK(maximal_chain_word(rel(2, {{2, 1}}), alpha({2, 1})) == Word({1, 2, 1}, alpha({2, 1})));
  CHECK(maximal_chain_word(Relation(3), alpha({2, 1, 2})) == Word({1, 1, 2, 3, 3}, alpha({2, 1, 2})));
  CHECK(maximal_chain_word(rel(2, {{1, 1}}), alpha({3, 1})) == Word({2, 1, 1, 1}, alpha({3, 1})));
  CHECK(error_code([] { maximal_chain_word(Relation(2), alpha({7, 6})); }) == ErrorCode::SizeCapExceeded);
  CHECK(error_code([] { maximal_chain_word(Relation(2), alpha({1, 1, 1})); }) == ErrorCode::AlphabetMismatch);
}

TEST_CASE("max inequality and chain words on every relation over three letters") {
  const std::vector<Count> counts{1, 1, 2};
  const auto words = oracle::words(counts);
  for (std::uint64_t m = 0; m < 512; ++m) {
    const auto u = Relation::from_mask(3, m);
    Count max_inv = 0, max_maj = 0;
    for (const auto& word : words) {
      max_inv = std::max(max_inv, oracle::inv(u, word));
      max_maj = std::max(max_maj, oracle::maj(u, word));
    }
    REQUIRE(max_maj >= max_inv);
    const auto chain = maximal_chain_word(u, alpha(counts));
    REQUIRE(graphical_major_index(u, chain) >= max_inv);
  }
}

TEST_CASE("tie rule names") {
  for (auto rule : kRules) CHECK(parse_tie_rule(to_string(rule)) == rule);
  CHECK(parse_tie_rule("copy-label-max") == TieRule::CopyLabelMax);
  CHECK(error_code([] { parse_tie_rule("middle"); }) == ErrorCode::InvalidArguments);
}
