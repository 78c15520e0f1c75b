#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mahonian/relation.hpp"
#include "mahonian/statistics.hpp"
#include "mahonian/words.hpp"

namespace mahonian {

// One nonincreasing partition per block (m_i parts, m_i the block mass) and one marker per
// block. Marker semantics for block B_i:
//   |B_i| = 1                          -> 0
//   B_i = {y1 < y2}, alpha_y2 = 1      -> position of y2 in the block's subword (1..m_i)
//   otherwise (only possible as B_k)   -> 1-based rank of the block's subword in decreasing
//                                         lexicographic order among its arrangements
struct BCode {
  std::vector<std::vector<Count>> partitions;
  std::vector<Count> markers;

  Count part_sum() const;
  bool operator==(const BCode&) const = default;
};

// Tie rule under which the decoder inverts the encoder exactly (the only one of the three
// that does, checked exhaustively on small classes).
inline constexpr TieRule kBCodeTieRule = TieRule::Rightmost;

BCode bcode_encode(std::span<const Letter> w, const OrderedBipartition& bp, const MultiplicityVector& alpha,
                   TieRule rule = kBCodeTieRule);
inline BCode bcode_encode(const Word& w, const OrderedBipartition& bp, TieRule rule = kBCodeTieRule) {
  return bcode_encode(w.letters(), bp, w.multiplicities(), rule);
}

Word bcode_decode(const BCode& code, const OrderedBipartition& bp, const MultiplicityVector& alpha);

// Throws InvalidCode when `code` violates the part bounds or marker ranges for (bp, alpha).
void validate_bcode(const BCode& code, const OrderedBipartition& bp, const MultiplicityVector& alpha);

// Number of valid codes, computed from the constraints alone.
Count bcode_count(const OrderedBipartition& bp, const MultiplicityVector& alpha);

// Visits every valid code in a fixed order.
void for_each_bcode(const OrderedBipartition& bp, const MultiplicityVector& alpha,
                    const std::function<void(const BCode&)>& visit);

}  // namespace mahonian
