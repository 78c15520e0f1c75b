#include "mahonian/statistics.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace mahonian {

std::string_view to_string(TieRule rule) {
  switch (rule) {
    case TieRule::CopyLabelMax: return "copy-label";
    case TieRule::Leftmost: return "leftmost";
    case TieRule::Rightmost: return "rightmost";
  }
  return "unknown";
}

TieRule parse_tie_rule(std::string_view text) {
  if (text == "copy-label" || text == "copy-label-max") return TieRule::CopyLabelMax;
  if (text == "leftmost") return TieRule::Leftmost;
  if (text == "rightmost") return TieRule::Rightmost;
  throw Error(ErrorCode::InvalidArguments, "unknown tie rule '" + std::string(text) + "'");
}

namespace {

void check_alphabet(const Relation& u, std::span<const Letter> w) {
  const auto n = static_cast<Letter>(u.alphabet_size());
  for (Letter x : w)
    if (x < 1 || x > n)
      throw Error(ErrorCode::AlphabetMismatch,
                  "letter " + std::to_string(x) + " is outside the relation's alphabet 1.." + std::to_string(n));
}

}  // namespace

Count graphical_inversions(const Relation& u, std::span<const Letter> w) {
  check_alphabet(u, w);
  Count total = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (u.contains(w[i], w[j])) ++total;
  return total;
}

std::vector<std::size_t> graphical_descent_set(const Relation& u, std::span<const Letter> w) {
  check_alphabet(u, w);
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (u.contains(w[i], w[i + 1])) positions.push_back(i + 1);
  return positions;
}

Count graphical_descents(const Relation& u, std::span<const Letter> w) {
  return graphical_descent_set(u, w).size();
}

Count graphical_major_index(const Relation& u, std::span<const Letter> w) {
  check_alphabet(u, w);
  Count total = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (u.contains(w[i], w[i + 1])) total += i + 1;
  return total;
}

SelectionSort::SelectionSort(std::span<const Letter> w, TieRule rule)
    : letters_(w.begin(), w.end()), labels_(w.size()), rule_(rule), next_target_(w.size()) {
  for (std::size_t p = 0; p < labels_.size(); ++p) labels_[p] = p + 1;
}

SortStep SelectionSort::step(const Relation& u) {
  const std::size_t i = next_target_;  // 1-based target
  const Letter largest = *std::max_element(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(i));
  std::size_t chosen = 0;  // 0-based
  bool found = false;
  for (std::size_t p = 0; p < i; ++p) {
    if (letters_[p] != largest) continue;
    if (!found) {
      chosen = p;
      found = true;
      if (rule_ == TieRule::Leftmost) break;
      continue;
    }
    if (rule_ == TieRule::Rightmost || (rule_ == TieRule::CopyLabelMax && labels_[p] > labels_[chosen]))
      chosen = p;
  }

  SortStep s{chosen + 1, i, largest, 0};
  for (std::size_t h = chosen + 1; h < i; ++h)
    if (u.contains(largest, letters_[h])) ++s.contribution;
  std::swap(letters_[chosen], letters_[i - 1]);
  std::swap(labels_[chosen], labels_[i - 1]);
  --next_target_;
  return s;
}

SortTrace graphical_sort_trace(const Relation& u, std::span<const Letter> w, TieRule rule) {
  check_alphabet(u, w);
  SelectionSort sorter(w, rule);
  SortTrace trace;
  trace.steps.reserve(w.size());
  while (!sorter.done()) trace.steps.push_back(sorter.step(u));
  trace.final_word.assign(sorter.current().begin(), sorter.current().end());
  return trace;
}

Count graphical_sorting_index(const Relation& u, std::span<const Letter> w, TieRule rule) {
  check_alphabet(u, w);
  SelectionSort sorter(w, rule);
  Count total = 0;
  while (!sorter.done()) total += sorter.step(u).contribution;
  return total;
}

namespace {

// Longest chains in the multigraph (alpha, U), memoized on (residual multiplicities, last letter).
class ChainSearch {
 public:
  ChainSearch(const Relation& u, const MultiplicityVector& alpha) : u_(u), n_(alpha.alphabet_size()) {
    radix_.resize(n_);
    std::size_t states = 1;
    for (std::size_t x = 0; x < n_; ++x) {
      radix_[x] = states;
      states *= static_cast<std::size_t>(alpha.counts()[x] + 1);
    }
    memo_.assign(states * (n_ + 1), -1);
  }

  std::size_t encode(const std::vector<Count>& residual) const {
    std::size_t code = 0;
    for (std::size_t x = 0; x < n_; ++x) code += static_cast<std::size_t>(residual[x]) * radix_[x];
    return code;
  }

  // Longest chain (counted in letters) that can follow `last` (0 = no predecessor).
  int extension(std::size_t state, Letter last) {
    int& slot = memo_[state * (n_ + 1) + static_cast<std::size_t>(last)];
    if (slot >= 0) return slot;
    int best = 0;
    for (std::size_t x = 0; x < n_; ++x) {
      const Letter y = static_cast<Letter>(x + 1);
      if (count_in(state, x) == 0) continue;
      if (last != 0 && !u_.contains(last, y)) continue;
      best = std::max(best, 1 + extension(state - radix_[x], y));
    }
    slot = best;
    return best;
  }

  // Lexicographically largest longest chain from the given residual state.
  std::vector<Letter> best_chain(std::size_t state) {
    std::vector<Letter> chain;
    Letter last = 0;
    int remaining = extension(state, 0);
    while (remaining > 0) {
      for (std::size_t x = n_; x-- > 0;) {
        const Letter y = static_cast<Letter>(x + 1);
        if (count_in(state, x) == 0) continue;
        if (last != 0 && !u_.contains(last, y)) continue;
        if (1 + extension(state - radix_[x], y) == remaining) {
          chain.push_back(y);
          state -= radix_[x];
          last = y;
          --remaining;
          break;
        }
      }
    }
    return chain;
  }

 private:
  std::size_t count_in(std::size_t state, std::size_t x) const {
    const std::size_t next = x + 1 < n_ ? radix_[x + 1] : memo_.size() / (n_ + 1);
    return (state % next) / radix_[x];
  }

  const Relation& u_;
  std::size_t n_;
  std::vector<std::size_t> radix_;
  std::vector<int> memo_;
};

}  // namespace

Word maximal_chain_word(const Relation& u, const MultiplicityVector& alpha, Count cap) {
  if (u.alphabet_size() != alpha.alphabet_size())
    throw Error(ErrorCode::AlphabetMismatch, "relation and alpha have different alphabets");
  if (alpha.total() > cap)
    throw Error(ErrorCode::SizeCapExceeded,
                "|alpha| = " + std::to_string(alpha.total()) + " exceeds the cap of " + std::to_string(cap));

  ChainSearch search(u, alpha);
  std::vector<Count> residual(alpha.counts().begin(), alpha.counts().end());
  std::vector<std::vector<Letter>> chains;
  Count left = alpha.total();
  while (left > 0) {
    auto chain = search.best_chain(search.encode(residual));
    for (Letter y : chain) --residual[static_cast<std::size_t>(y - 1)];
    left -= chain.size();
    chains.push_back(std::move(chain));
  }

  std::vector<Letter> letters;
  letters.reserve(alpha.total());
  for (auto it = chains.rbegin(); it != chains.rend(); ++it) letters.insert(letters.end(), it->begin(), it->end());
  return Word(std::move(letters), alpha);
}

}  // namespace mahonian
