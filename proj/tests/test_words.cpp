#include <doctest.h>

#include "helpers.hpp"
#include "mahonian/words.hpp"
#include "oracles.hpp"

using namespace mahonian;
using testing::alpha;
using testing::error_code;

TEST_CASE("word validation") {
  const auto a = alpha({3, 2, 3, 1});
  const Word w({1, 4, 3, 1, 2, 3, 1, 2, 3}, a);
  CHECK(w.size() == 9);
  CHECK(w[1] == 4);
  CHECK(w.multiplicities() == a);

  const Word empty({}, alpha({0, 0}));
  CHECK(empty.size() == 0);

  CHECK(error_code([] { make_word({1, 1}, alpha({1, 1})); }) == ErrorCode::MultiplicityMismatch);
  CHECK(error_code([] { make_word({1, 3}, alpha({1, 1})); }) == ErrorCode::LetterOutOfRange);
  CHECK(error_code([] { make_word({0, 1}, alpha({1, 1})); }) == ErrorCode::LetterOutOfRange);
  CHECK_THROWS_AS(MultiplicityVector(std::vector<Count>{}), Error);
}

TEST_CASE("multiplicities of a letter sequence") {
  const std::vector<Letter> w{1, 4, 3, 1, 2, 3, 1, 2, 3};
  CHECK(MultiplicityVector::of_letters(w) == alpha({3, 2, 3, 1}));
  CHECK(MultiplicityVector::of_letters(w, 6) == alpha({3, 2, 3, 1, 0, 0}));
  CHECK(alpha({2, 1, 1, 3, 1}).total() == 8);
  CHECK(alpha({2, 1, 1, 3, 1})[4] == 3);
}

TEST_CASE("class sizes") {
  CHECK(class_size(alpha({1, 1, 1})) == 6);
  CHECK(class_size(alpha({2, 1, 1})) == 12);
  CHECK(class_size(alpha({2, 1, 1, 3, 1})) == 3360);
  CHECK(class_size(alpha({0, 0})) == 1);
  CHECK(class_size(alpha({4})) == 1);
  CHECK(error_code([] { class_size(alpha(std::vector<Count>(40, 2))); }) == ErrorCode::Overflow);
}

TEST_CASE("enumeration order and contents") {
  auto letters = [](const std::vector<Word>& ws) {
    oracle::Words out;
    for (const auto& w : ws) out.emplace_back(w.letters().begin(), w.letters().end());
    return out;
  };
  CHECK(letters(rearrangement_class(alpha({1, 1}))) == oracle::Words{{1, 2}, {2, 1}});
  CHECK(letters(rearrangement_class(alpha({2, 1}))) == oracle::Words{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
  CHECK(letters(rearrangement_class(alpha({0, 0}))) == oracle::Words{{}});

  for (const std::vector<Count>& counts :
       {std::vector<Count>{2, 1, 1}, {1, 2, 0, 2}, {3, 1, 2}, {1, 1, 1, 1}, {2, 2, 2}}) {
    CAPTURE(counts.size());
    CHECK(letters(rearrangement_class(alpha(counts))) == oracle::words(counts));
  }

  Count seen = 0;
  for_each_word(alpha({2, 1, 1, 3, 1}), [&](std::span<const Letter>) { ++seen; });
  CHECK(seen == 3360);
}

TEST_CASE("class cap") {
  CHECK(error_code([] { WordStream(alpha({2, 1, 1, 3, 1}), 100); }) == ErrorCode::ClassTooLarge);
  CHECK_NOTHROW(WordStream(alpha({2, 1, 1, 3, 1}), 3360));
}

TEST_CASE("rank and unrank are inverse and match enumeration") {
  const auto a = alpha({2, 1, 2, 1});
  WordStream stream(a);
  Count index = 0;
  while (stream.next()) {
    const std::vector<Letter> w(stream.current().begin(), stream.current().end());
    CHECK(unrank_word(a, index) == w);
    CHECK(rank_word(w, a) == index);
    ++index;
  }
  CHECK(index == class_size(a));
  CHECK_THROWS_AS(unrank_word(a, index), Error);
}

TEST_CASE("sharded streams cover the class exactly once") {
  const auto a = alpha({2, 2, 1});
  const auto full = oracle::words({2, 2, 1});
  oracle::Words joined;
  for (Count first = 0; first < 30; first += 7) {
    WordStream shard(a, first, 7);
    while (shard.next()) joined.emplace_back(shard.current().begin(), shard.current().end());
  }
  CHECK(joined == full);
}
