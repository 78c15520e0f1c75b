#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "mahonian/relation.hpp"
#include "mahonian/words.hpp"

namespace mahonian {

// Which copy of the largest letter the selection sort moves when several are eligible.
enum class TieRule {
  CopyLabelMax,  // copy whose index in the original input word is largest (normative)
  Leftmost,      // copy at the smallest current position
  Rightmost,     // copy at the largest current position
};

std::string_view to_string(TieRule rule);
TieRule parse_tie_rule(std::string_view text);

// Positions are 1-based.
struct SortStep {
  std::size_t from = 0;  // j
  std::size_t to = 0;    // i
  Letter letter = 0;
  Count contribution = 0;
};

struct SortTrace {
  std::vector<SortStep> steps;
  std::vector<Letter> final_word;
};

Count graphical_inversions(const Relation& u, std::span<const Letter> w);
std::vector<std::size_t> graphical_descent_set(const Relation& u, std::span<const Letter> w);
Count graphical_descents(const Relation& u, std::span<const Letter> w);
Count graphical_major_index(const Relation& u, std::span<const Letter> w);
Count graphical_sorting_index(const Relation& u, std::span<const Letter> w, TieRule rule = TieRule::CopyLabelMax);
SortTrace graphical_sort_trace(const Relation& u, std::span<const Letter> w, TieRule rule = TieRule::CopyLabelMax);

inline Count graphical_inversions(const Relation& u, const Word& w) { return graphical_inversions(u, w.letters()); }
inline Count graphical_major_index(const Relation& u, const Word& w) { return graphical_major_index(u, w.letters()); }
inline Count graphical_sorting_index(const Relation& u, const Word& w, TieRule rule = TieRule::CopyLabelMax) {
  return graphical_sorting_index(u, w.letters(), rule);
}

// Step-at-a-time generalized straight selection sort. Step t places the largest remaining
// letter at position size() - t.
class SelectionSort {
 public:
  SelectionSort(std::span<const Letter> w, TieRule rule);

  bool done() const noexcept { return next_target_ == 0; }
  // Performs the next step; the contribution counts h in (j, i] with (x_j, x_h) in U on the
  // pre-swap word.
  SortStep step(const Relation& u);
  std::span<const Letter> current() const noexcept { return letters_; }
  std::size_t next_target() const noexcept { return next_target_; }

 private:
  std::vector<Letter> letters_;
  std::vector<std::size_t> labels_;
  TieRule rule_;
  std::size_t next_target_;
};

inline constexpr Count kDefaultChainWordCap = 12;

// Peels longest U-chains from the multigraph (alpha, U) and places them right to left.
// Among equally long chains the lexicographically largest is peeled.
Word maximal_chain_word(const Relation& u, const MultiplicityVector& alpha, Count cap = kDefaultChainWordCap);

}  // namespace mahonian
