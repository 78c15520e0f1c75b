#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "mahonian/bcode.hpp"
#include "mahonian/qseries.hpp"
#include "mahonian/statistics.hpp"

using namespace mahonian;
using testing::alpha;
using testing::error_code;

namespace {

const OrderedBipartition kFiveLetter({{5, 4}, {3}, {2, 1}}, {false, false, false});

// Exhaustive bijection check for one (bp, alpha).
void check_bijection(const OrderedBipartition& bp, const MultiplicityVector& a) {
  const auto u = from_ordered_bipartition(bp);
  std::set<std::vector<Letter>> decoded;
  Count codes = 0;
  std::map<Count, Count> sums;
  for_each_bcode(bp, a, [&](const BCode& code) {
    ++codes;
    ++sums[code.part_sum()];
    REQUIRE_NOTHROW(validate_bcode(code, bp, a));
    const auto w = bcode_decode(code, bp, a);
    REQUIRE(bcode_encode(w, bp) == code);
    decoded.emplace(w.letters().begin(), w.letters().end());
  });
  REQUIRE(codes == class_size(a));
  REQUIRE(codes == bcode_count(bp, a));
  REQUIRE(decoded.size() == codes);
  REQUIRE(testing::poly(sums) == gf_sorting(a, bp));

  for_each_word(a, [&](std::span<const Letter> w) {
    const auto code = bcode_encode(w, bp, a);
    REQUIRE(bcode_decode(code, bp, a).letters().size() == w.size());
    const auto back = bcode_decode(code, bp, a);
    REQUIRE(std::equal(w.begin(), w.end(), back.letters().begin()));
    REQUIRE(code.part_sum() == graphical_sorting_index(u, w, kBCodeTieRule));
  });
}

}  // namespace

TEST_CASE("encode of 42345411") {
  const auto a = alpha({2, 1, 1, 3, 1});
  const std::vector<Letter> w{4, 2, 3, 4, 5, 4, 1, 1};
  const auto code = bcode_encode(w, kFiveLetter, a);
  CHECK(code.markers == std::vector<Count>{3, 0, 2});
  CHECK(code.partitions.size() == 3);
  CHECK(code.partitions[0].size() == 4);
  CHECK(code.partitions[1].size() == 1);
  CHECK(code.partitions[2] == std::vector<Count>{0, 0, 0});
  CHECK(code.part_sum() == graphical_sorting_index(from_ordered_bipartition(kFiveLetter), w, kBCodeTieRule));
  CHECK(bcode_decode(code, kFiveLetter, a) == Word(w, a));
}

TEST_CASE("a code with nonzero parts is a fixed point of encode after decode") {
  const auto a = alpha({2, 1, 1, 3, 1});
  const BCode code{{{4, 2, 1, 1}, {1}, {0, 0, 0}}, {3, 0, 2}};
  const auto w = bcode_decode(code, kFiveLetter, a);
  CHECK(w.multiplicities() == a);
  CHECK(bcode_encode(w, kFiveLetter) == code);
}

TEST_CASE("ascending word") {
  const auto a = alpha({2, 1, 1, 3, 1});
  const std::vector<Letter> sorted{1, 1, 2, 3, 4, 4, 4, 5};
  const auto code = bcode_encode(sorted, kFiveLetter, a);
  for (const auto& part : code.partitions)
    for (Count b : part) CHECK(b == 0);
  CHECK(code.markers == std::vector<Count>{4, 0, 3});
  CHECK(bcode_decode(code, kFiveLetter, a) == Word(sorted, a));
}

TEST_CASE("single block") {
  const OrderedBipartition one({{3, 2, 1}}, {false});
  const auto a = alpha({1, 2, 1});
  for_each_word(a, [&](std::span<const Letter> w) {
    const auto code = bcode_encode(w, one, a);
    REQUIRE(code.part_sum() == 0);
    REQUIRE(code.markers.size() == 1);
    REQUIRE(code.markers[0] >= 1);
  });
  check_bijection(one, a);
}

TEST_CASE("invalid codes") {
  const auto a = alpha({2, 1, 1, 3, 1});
  CHECK(error_code([&] { bcode_decode(BCode{{{5, 0, 0, 0}, {0}, {0, 0, 0}}, {1, 0, 1}}, kFiveLetter, a); }) ==
        ErrorCode::InvalidCode);
  CHECK(error_code([&] { bcode_decode(BCode{{{0, 1, 0, 0}, {0}, {0, 0, 0}}, {1, 0, 1}}, kFiveLetter, a); }) ==
        ErrorCode::InvalidCode);
  CHECK(error_code([&] { bcode_decode(BCode{{{0, 0, 0, 0}, {0}, {0, 0, 1}}, {1, 0, 1}}, kFiveLetter, a); }) ==
        ErrorCode::InvalidCode);
  CHECK(error_code([&] { bcode_decode(BCode{{{0, 0, 0, 0}, {0}, {0, 0, 0}}, {0, 0, 1}}, kFiveLetter, a); }) ==
        ErrorCode::InvalidCode);
  CHECK(error_code([&] { bcode_decode(BCode{{{0, 0, 0, 0}, {0}, {0, 0, 0}}, {1, 1, 1}}, kFiveLetter, a); }) ==
        ErrorCode::InvalidCode);
  CHECK(error_code([&] { bcode_decode(BCode{{{0, 0, 0, 0}, {0}}, {1, 0}}, kFiveLetter, a); }) == ErrorCode::InvalidCode);
  CHECK(error_code([&] { bcode_encode(std::vector<Letter>{1, 2}, OrderedBipartition({{1}, {2}}, {false, false}),
                                      alpha({1, 1})); }) == ErrorCode::ConditionsNotSatisfied);
  CHECK(error_code([&] { bcode_count(kFiveLetter, alpha({2, 1, 1, 3, 2})); }) == ErrorCode::ConditionsNotSatisfied);
}

TEST_CASE("bijection on R(2,1,1,3,1)") { check_bijection(kFiveLetter, alpha({2, 1, 1, 3, 1})); }

TEST_CASE("bijection over every qualifying bipartition on small alphabets") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint64_t m = 0; m < (1ULL << (n * n)); ++m) {
      const auto u = Relation::from_mask(n, m);
      for (const std::vector<Count>& base : {std::vector<Count>{1, 1, 1}, {2, 1, 2}, {1, 2, 1}, {2, 2, 1}, {3, 1, 1}}) {
        const auto a = alpha(std::vector<Count>(base.begin(), base.begin() + static_cast<long>(n)));
        const auto report = satisfies_sor_conditions(u, a);
        if (!report.satisfied) continue;
        CAPTURE(m);
        check_bijection(*report.bipartition, a);
      }
    }
}

TEST_CASE("four-letter bipartitions") {
  check_bijection(OrderedBipartition({{4, 3}, {2, 1}}, {false, false}), alpha({2, 1, 2, 1}));
  check_bijection(OrderedBipartition({{4}, {3, 2, 1}}, {false, false}), alpha({1, 2, 1, 2}));
  check_bijection(OrderedBipartition({{4, 3}, {2}, {1}}, {false, false, false}), alpha({2, 2, 2, 1}));
}
