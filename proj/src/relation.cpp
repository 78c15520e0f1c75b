#include "mahonian/relation.hpp"

#include <algorithm>
#include <functional>

namespace mahonian {

Relation::Relation(std::size_t n) : n_(n), adjacency_(n * n, 0) {
  if (n == 0) throw Error(ErrorCode::InvalidArguments, "alphabet size must be at least 1");
}

Relation::Relation(std::size_t n, std::span<const Edge> edges) : Relation(n) {
  for (auto [x, y] : edges) insert(x, y);
}

Relation Relation::natural_order(std::size_t n) {
  Relation u(n);
  for (Letter x = 1; x <= static_cast<Letter>(n); ++x)
    for (Letter y = 1; y < x; ++y) u.insert(x, y);
  return u;
}

Relation Relation::full(std::size_t n) {
  Relation u(n);
  std::fill(u.adjacency_.begin(), u.adjacency_.end(), 1);
  return u;
}

Relation Relation::from_mask(std::size_t n, std::uint64_t mask) {
  if (n * n > 64) throw Error(ErrorCode::UniverseTooLarge, "bitmask relations need n*n <= 64");
  Relation u(n);
  for (std::size_t b = 0; b < n * n; ++b) u.adjacency_[b] = (mask >> b) & 1U;
  return u;
}

void Relation::check_letter(Letter x) const {
  if (x < 1 || x > static_cast<Letter>(n_))
    throw Error(ErrorCode::LetterOutOfRange,
                "letter " + std::to_string(x) + " outside 1.." + std::to_string(n_));
}

void Relation::insert(Letter x, Letter y) {
  check_letter(x);
  check_letter(y);
  adjacency_[index(x, y)] = 1;
}

void Relation::erase(Letter x, Letter y) {
  check_letter(x);
  check_letter(y);
  adjacency_[index(x, y)] = 0;
}

std::vector<Edge> Relation::edges() const {
  std::vector<Edge> out;
  for (Letter x = 1; x <= static_cast<Letter>(n_); ++x)
    for (Letter y = 1; y <= static_cast<Letter>(n_); ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

std::size_t Relation::edge_count() const {
  return static_cast<std::size_t>(std::count(adjacency_.begin(), adjacency_.end(), 1));
}

std::uint64_t Relation::mask() const {
  if (n_ * n_ > 64) throw Error(ErrorCode::UniverseTooLarge, "bitmask relations need n*n <= 64");
  std::uint64_t m = 0;
  for (std::size_t b = 0; b < adjacency_.size(); ++b)
    if (adjacency_[b]) m |= std::uint64_t{1} << b;
  return m;
}

OrderedBipartition::OrderedBipartition(std::vector<std::vector<Letter>> blocks, std::vector<bool> flags)
    : blocks_(std::move(blocks)), flags_(std::move(flags)) {
  if (blocks_.empty()) throw Error(ErrorCode::InvalidBipartition, "no blocks");
  if (flags_.size() != blocks_.size())
    throw Error(ErrorCode::InvalidBipartition, "flag count differs from block count");
  for (const auto& b : blocks_) {
    if (b.empty()) throw Error(ErrorCode::InvalidBipartition, "empty block");
    n_ += b.size();
  }
  block_index_.assign(n_, n_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto& b = blocks_[i];
    std::sort(b.begin(), b.end(), std::greater<>());
    for (Letter x : b) {
      if (x < 1 || static_cast<std::size_t>(x) > n_)
        throw Error(ErrorCode::InvalidBipartition,
                    "letter " + std::to_string(x) + " leaves a gap in 1.." + std::to_string(n_));
      auto& slot = block_index_[static_cast<std::size_t>(x - 1)];
      if (slot != n_)
        throw Error(ErrorCode::InvalidBipartition, "letter " + std::to_string(x) + " appears twice");
      slot = i;
    }
  }
}

Count OrderedBipartition::block_mass(std::size_t i, const MultiplicityVector& alpha) const {
  if (alpha.alphabet_size() != n_)
    throw Error(ErrorCode::InvalidBipartition, "bipartition covers " + std::to_string(n_) +
                                                   " letters but alpha has " +
                                                   std::to_string(alpha.alphabet_size()));
  Count m = 0;
  for (Letter x : blocks_.at(i)) m = checked_add(m, alpha[x]);
  return m;
}

Relation complement(const Relation& u) {
  const auto n = static_cast<Letter>(u.alphabet_size());
  Relation c(u.alphabet_size());
  for (Letter x = 1; x <= n; ++x)
    for (Letter y = 1; y <= n; ++y)
      if (!u.contains(x, y)) c.insert(x, y);
  return c;
}

bool is_transitive(const Relation& u) {
  const auto n = static_cast<Letter>(u.alphabet_size());
  for (Letter x = 1; x <= n; ++x)
    for (Letter y = 1; y <= n; ++y) {
      if (!u.contains(x, y)) continue;
      for (Letter z = 1; z <= n; ++z)
        if (u.contains(y, z) && !u.contains(x, z)) return false;
    }
  return true;
}

bool is_bipartitional(const Relation& u) { return is_transitive(u) && is_transitive(complement(u)); }

Relation from_ordered_bipartition(const OrderedBipartition& bp) {
  const auto n = static_cast<Letter>(bp.alphabet_size());
  Relation u(bp.alphabet_size());
  for (Letter x = 1; x <= n; ++x)
    for (Letter y = 1; y <= n; ++y) {
      const auto bx = bp.block_of(x);
      const auto by = bp.block_of(y);
      if (bx < by || (bx == by && bp.underlined(bx))) u.insert(x, y);
    }
  return u;
}

std::optional<OrderedBipartition> to_ordered_bipartition(const Relation& u) {
  const auto n = static_cast<Letter>(u.alphabet_size());
  auto similar = [&](Letter x, Letter y) { return u.contains(x, y) == u.contains(y, x); };

  std::vector<std::vector<Letter>> classes;
  for (Letter x = 1; x <= n; ++x) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& c) { return similar(c.front(), x); });
    if (it == classes.end())
      classes.push_back({x});
    else
      it->push_back(x);
  }

  // A block precedes every block it points to; rank by out-degree in the block order.
  std::vector<std::size_t> precedes(classes.size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (i != j && u.contains(classes[i].front(), classes[j].front())) ++precedes[i];
  std::vector<std::size_t> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return precedes[a] > precedes[b]; });

  std::vector<std::vector<Letter>> blocks;
  std::vector<bool> flags;
  for (std::size_t i : order) {
    const auto& c = classes[i];
    const Letter a = c.front();
    const Letter b = c.size() > 1 ? c[1] : a;
    blocks.push_back(c);
    flags.push_back(u.contains(a, b));
  }
  OrderedBipartition candidate(std::move(blocks), std::move(flags));
  if (from_ordered_bipartition(candidate) != u) return std::nullopt;
  return candidate;
}

SymmetricDecomposition decompose(const Relation& u) {
  const auto n = static_cast<Letter>(u.alphabet_size());
  SymmetricDecomposition d{Relation(u.alphabet_size()), Relation(u.alphabet_size()), {}};
  for (Letter x = 1; x <= n; ++x)
    for (Letter y = 1; y <= n; ++y) {
      if (!u.contains(x, y)) continue;
      if (u.contains(y, x)) {
        d.symmetric.insert(x, y);
        d.support.insert(x);
      } else {
        d.asymmetric.insert(x, y);
      }
    }
  return d;
}

namespace {

void require_same_alphabet(const Relation& u, const MultiplicityVector& alpha) {
  if (u.alphabet_size() != alpha.alphabet_size())
    throw Error(ErrorCode::AlphabetMismatch, "relation is on " + std::to_string(u.alphabet_size()) +
                                                 " letters but alpha has " +
                                                 std::to_string(alpha.alphabet_size()));
}

}  // namespace

std::optional<EssentialWitness> is_essentially_bipartitional(const Relation& u, const MultiplicityVector& alpha,
                                                             std::size_t toggle_cap) {
  require_same_alphabet(u, alpha);
  std::vector<Letter> free_letters;
  for (Letter x = 1; x <= static_cast<Letter>(alpha.alphabet_size()); ++x)
    if (alpha[x] == 1) free_letters.push_back(x);
  if (free_letters.size() > toggle_cap)
    throw Error(ErrorCode::SearchSpaceTooLarge, std::to_string(free_letters.size()) +
                                                    " free letters exceed the cap of " +
                                                    std::to_string(toggle_cap));

  const std::uint64_t assignments = std::uint64_t{1} << free_letters.size();
  Relation modified = u;
  for (std::uint64_t mask = 0; mask < assignments; ++mask) {
    for (std::size_t b = 0; b < free_letters.size(); ++b) {
      const Letter x = free_letters[b];
      if ((mask >> b) & 1U)
        modified.insert(x, x);
      else
        modified.erase(x, x);
    }
    auto bp = to_ordered_bipartition(modified);
    if (!bp) continue;
    EssentialWitness witness{{}, {}, std::move(*bp)};
    for (Letter x : free_letters) {
      if (u.contains(x, x) && !modified.contains(x, x)) witness.removed_loops.insert(x);
      if (!u.contains(x, x) && modified.contains(x, x)) witness.added_loops.insert(x);
    }
    return witness;
  }
  return std::nullopt;
}

SorConditionReport satisfies_sor_conditions(const Relation& u, const MultiplicityVector& alpha) {
  require_same_alphabet(u, alpha);
  const auto n = static_cast<Letter>(u.alphabet_size());
  Relation observable = u;
  for (Letter x = 1; x <= n; ++x)
    if (alpha[x] == 1) observable.erase(x, x);

  SorConditionReport report;
  report.bipartition = to_ordered_bipartition(observable);
  if (!report.bipartition) {
    report.reasons.emplace_back("condition 1: relation is not bipartitional");
  } else {
    for (std::size_t i = 0; i < report.bipartition->block_count(); ++i)
      if (report.bipartition->underlined(i))
        report.reasons.push_back("condition 1: block " + std::to_string(i + 1) + " is underlined");
  }

  for (auto [x, y] : observable.edges())
    if (!(x > y)) {
      report.reasons.push_back("condition 2: edge (" + std::to_string(x) + "," + std::to_string(y) +
                               ") does not go from a larger to a smaller letter");
      break;
    }

  if (report.bipartition) {
    const auto& bp = *report.bipartition;
    for (std::size_t i = 0; i + 1 < bp.block_count(); ++i) {
      const auto block = bp.block(i);
      if (block.size() > 2)
        report.reasons.push_back("condition 3: block " + std::to_string(i + 1) + " has " +
                                 std::to_string(block.size()) + " letters");
      else if (block.size() == 2 && alpha[block.front()] != 1)
        report.reasons.push_back("condition 4: block " + std::to_string(i + 1) + " has alpha_" +
                                 std::to_string(block.front()) + " = " + std::to_string(alpha[block.front()]));
    }
  }
  report.satisfied = report.reasons.empty();
  return report;
}

}  // namespace mahonian
