#include "mahonian/bcode.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "mahonian/qseries.hpp"

namespace mahonian {

Count BCode::part_sum() const {
  Count total = 0;
  for (const auto& p : partitions)
    for (Count part : p) total = checked_add(total, part);
  return total;
}

namespace {

enum class MarkerKind { None, SecondLetterPosition, ArrangementRank };

struct BlockLayout {
  std::vector<Count> masses;
  std::vector<Count> later_mass;  // sum of masses of the blocks after block i
  std::vector<MarkerKind> kinds;
};

void require_conditions(const OrderedBipartition& bp, const MultiplicityVector& alpha) {
  const auto report = satisfies_sor_conditions(from_ordered_bipartition(bp), alpha);
  if (report.satisfied) return;
  std::string reasons;
  for (const auto& r : report.reasons) reasons += (reasons.empty() ? "" : "; ") + r;
  throw Error(ErrorCode::ConditionsNotSatisfied, reasons);
}

BlockLayout layout_of(const OrderedBipartition& bp, const MultiplicityVector& alpha) {
  require_conditions(bp, alpha);
  const std::size_t k = bp.block_count();
  BlockLayout layout;
  layout.masses.resize(k);
  layout.later_mass.assign(k, 0);
  layout.kinds.resize(k);
  for (std::size_t i = 0; i < k; ++i) layout.masses[i] = bp.block_mass(i, alpha);
  for (std::size_t i = k - 1; i-- > 0;) layout.later_mass[i] = layout.later_mass[i + 1] + layout.masses[i + 1];
  for (std::size_t i = 0; i < k; ++i) {
    const auto block = bp.block(i);
    if (block.size() == 1)
      layout.kinds[i] = MarkerKind::None;
    else if (block.size() == 2 && alpha[block.front()] == 1)
      layout.kinds[i] = MarkerKind::SecondLetterPosition;
    else
      layout.kinds[i] = MarkerKind::ArrangementRank;  // the sor conditions leave this to B_k
  }
  return layout;
}

// Local alphabet of a block: its letters in increasing order, renumbered 1..|B|.
MultiplicityVector local_alpha(std::span<const Letter> block, const MultiplicityVector& alpha) {
  std::vector<Count> counts;
  for (auto it = block.rbegin(); it != block.rend(); ++it) counts.push_back(alpha[*it]);
  return MultiplicityVector(std::move(counts));
}

Count arrangement_rank(std::span<const Letter> subword, std::span<const Letter> block, const MultiplicityVector& alpha) {
  const auto local = local_alpha(block, alpha);
  const Letter smallest = block.back();
  std::vector<Letter> renumbered;
  for (Letter x : subword) renumbered.push_back(x - smallest + 1);
  return class_size(local) - rank_word(renumbered, local);
}

std::vector<Letter> arrangement_unrank(Count marker, std::span<const Letter> block, const MultiplicityVector& alpha) {
  const auto local = local_alpha(block, alpha);
  const Letter smallest = block.back();
  auto letters = unrank_word(local, class_size(local) - marker);
  for (auto& x : letters) x = x + smallest - 1;
  return letters;
}

Count marker_limit(MarkerKind kind, std::size_t i, const OrderedBipartition& bp, const MultiplicityVector& alpha,
                   const BlockLayout& layout) {
  switch (kind) {
    case MarkerKind::None: return 0;
    case MarkerKind::SecondLetterPosition: return layout.masses[i];
    case MarkerKind::ArrangementRank: return class_size(local_alpha(bp.block(i), alpha));
  }
  return 0;
}

}  // namespace

BCode bcode_encode(std::span<const Letter> w, const OrderedBipartition& bp, const MultiplicityVector& alpha,
                   TieRule rule) {
  const auto layout = layout_of(bp, alpha);
  const Word checked(std::vector<Letter>(w.begin(), w.end()), alpha);
  const Relation u = from_ordered_bipartition(bp);

  BCode code;
  SelectionSort sorter(checked.letters(), rule);
  for (std::size_t j = 0; j < bp.block_count(); ++j) {
    const auto block = bp.block(j);
    std::vector<Letter> subword;
    for (Letter x : sorter.current())
      if (bp.block_of(x) == j) subword.push_back(x);

    Count marker = 0;
    if (layout.kinds[j] == MarkerKind::SecondLetterPosition) {
      const auto at = std::find(subword.begin(), subword.end(), block.front());
      marker = static_cast<Count>(at - subword.begin()) + 1;
    } else if (layout.kinds[j] == MarkerKind::ArrangementRank) {
      marker = arrangement_rank(subword, block, alpha);
    }

    std::vector<Count> parts;
    for (Count s = 0; s < layout.masses[j]; ++s) parts.push_back(sorter.step(u).contribution);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    code.partitions.push_back(std::move(parts));
    code.markers.push_back(marker);
  }
  return code;
}

void validate_bcode(const BCode& code, const OrderedBipartition& bp, const MultiplicityVector& alpha) {
  const auto layout = layout_of(bp, alpha);
  const std::size_t k = bp.block_count();
  if (code.partitions.size() != k || code.markers.size() != k)
    throw Error(ErrorCode::InvalidCode, "code must have " + std::to_string(k) + " partitions and markers");
  for (std::size_t i = 0; i < k; ++i) {
    const auto& parts = code.partitions[i];
    const std::string where = "block " + std::to_string(i + 1);
    if (parts.size() != layout.masses[i])
      throw Error(ErrorCode::InvalidCode, where + ": expected " + std::to_string(layout.masses[i]) + " parts");
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
      throw Error(ErrorCode::InvalidCode, where + ": parts are not nonincreasing");
    for (Count part : parts)
      if (part > layout.later_mass[i])
        throw Error(ErrorCode::InvalidCode,
                    where + ": part " + std::to_string(part) + " exceeds " + std::to_string(layout.later_mass[i]));
    const Count limit = marker_limit(layout.kinds[i], i, bp, alpha, layout);
    const Count marker = code.markers[i];
    const bool ok = layout.kinds[i] == MarkerKind::None ? marker == 0 : (marker >= 1 && marker <= limit);
    if (!ok)
      throw Error(ErrorCode::InvalidCode, where + ": marker " + std::to_string(marker) + " out of range");
  }
}

Word bcode_decode(const BCode& code, const OrderedBipartition& bp, const MultiplicityVector& alpha) {
  validate_bcode(code, bp, alpha);
  const auto layout = layout_of(bp, alpha);
  std::vector<Letter> w;
  w.reserve(alpha.total());

  auto swap_left = [&](std::size_t pos, Count distance) {
    if (distance > pos) throw Error(ErrorCode::InvalidCode, "leftward swap runs past position 1");
    std::swap(w[pos], w[pos - static_cast<std::size_t>(distance)]);
  };

  for (std::size_t j = bp.block_count(); j-- > 0;) {
    const auto block = bp.block(j);
    const auto& parts = code.partitions[j];
    const std::size_t start = w.size();

    if (layout.kinds[j] == MarkerKind::ArrangementRank) {
      // only the last block; its parts are all zero
      const auto arranged = arrangement_unrank(code.markers[j], block, alpha);
      w.insert(w.end(), arranged.begin(), arranged.end());
      continue;
    }
    for (auto it = block.rbegin(); it != block.rend(); ++it) w.insert(w.end(), alpha[*it], *it);

    if (layout.kinds[j] == MarkerKind::None) {
      for (std::size_t i = 0; i < parts.size(); ++i) swap_left(start + i, parts[i]);
      continue;
    }
    const auto p = static_cast<std::size_t>(code.markers[j]);
    const Count m = layout.masses[j];
    std::vector<Count> rest(parts);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p - 1));
    for (std::size_t i = 0; i < rest.size(); ++i) swap_left(start + i, rest[i]);
    swap_left(start + static_cast<std::size_t>(m) - 1, parts[p - 1] + m - p);
  }
  return Word(std::move(w), alpha);
}

Count bcode_count(const OrderedBipartition& bp, const MultiplicityVector& alpha) {
  const auto layout = layout_of(bp, alpha);
  Count total = 1;
  for (std::size_t i = 0; i < bp.block_count(); ++i) {
    // nonincreasing sequences of m_i parts bounded by later_mass[i]
    total = checked_mul(total, binomial(layout.masses[i] + layout.later_mass[i], layout.masses[i]));
    const Count limit = marker_limit(layout.kinds[i], i, bp, alpha, layout);
    total = checked_mul(total, std::max<Count>(limit, 1));
  }
  return total;
}

void for_each_bcode(const OrderedBipartition& bp, const MultiplicityVector& alpha,
                    const std::function<void(const BCode&)>& visit) {
  const auto layout = layout_of(bp, alpha);
  const std::size_t k = bp.block_count();
  BCode code;
  code.partitions.resize(k);
  code.markers.assign(k, 0);

  std::function<void(std::size_t)> over_blocks;
  // Fills partition i part by part, each part at most the previous one.
  std::function<void(std::size_t, std::size_t, Count)> over_parts = [&](std::size_t i, std::size_t slot,
                                                                        Count ceiling) {
    if (slot == layout.masses[i]) {
      const Count limit = marker_limit(layout.kinds[i], i, bp, alpha, layout);
      const Count first = layout.kinds[i] == MarkerKind::None ? 0 : 1;
      for (Count marker = first; marker <= limit; ++marker) {
        code.markers[i] = marker;
        over_blocks(i + 1);
      }
      return;
    }
    for (Count part = 0; part <= ceiling; ++part) {
      code.partitions[i][slot] = part;
      over_parts(i, slot + 1, part);
    }
  };
  over_blocks = [&](std::size_t i) {
    if (i == k) {
      visit(code);
      return;
    }
    code.partitions[i].assign(layout.masses[i], 0);
    over_parts(i, 0, layout.later_mass[i]);
  };
  over_blocks(0);
}

}  // namespace mahonian
