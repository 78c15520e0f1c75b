#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mahonian/words.hpp"

namespace mahonian {

using Edge = std::pair<Letter, Letter>;
using LetterSet = std::set<Letter>;

// A directed graph U on {1..n}; loops allowed. (x, y) in U reads "x >_U y".
class Relation {
 public:
  explicit Relation(std::size_t n);
  Relation(std::size_t n, std::span<const Edge> edges);

  // Strict integer order {(x, y) : x > y}.
  static Relation natural_order(std::size_t n);
  static Relation full(std::size_t n);
  // Bit r * n + c (0-based row-major) encodes the pair (r + 1, c + 1). Requires n * n <= 64.
  static Relation from_mask(std::size_t n, std::uint64_t mask);

  std::size_t alphabet_size() const noexcept { return n_; }
  bool contains(Letter x, Letter y) const noexcept {
    return adjacency_[index(x, y)] != 0;
  }
  void insert(Letter x, Letter y);
  void erase(Letter x, Letter y);

  // Edges in row-major order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  std::uint64_t mask() const;

  bool operator==(const Relation&) const = default;

 private:
  std::size_t index(Letter x, Letter y) const noexcept {
    return static_cast<std::size_t>(x - 1) * n_ + static_cast<std::size_t>(y - 1);
  }
  void check_letter(Letter x) const;

  std::size_t n_;
  std::vector<std::uint8_t> adjacency_;
};

// Blocks (B_1..B_k) covering {1..n} with underline flags. Letters inside a block are
// kept in decreasing order.
class OrderedBipartition {
 public:
  OrderedBipartition(std::vector<std::vector<Letter>> blocks, std::vector<bool> flags);

  std::size_t alphabet_size() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Letter>>& blocks() const noexcept { return blocks_; }
  const std::vector<bool>& flags() const noexcept { return flags_; }
  std::span<const Letter> block(std::size_t i) const { return blocks_.at(i); }
  bool underlined(std::size_t i) const { return flags_.at(i); }
  // 0-based index of the block holding x.
  std::size_t block_of(Letter x) const { return block_index_.at(static_cast<std::size_t>(x - 1)); }
  // m_i = sum of alpha_x over x in B_i.
  Count block_mass(std::size_t i, const MultiplicityVector& alpha) const;

  bool operator==(const OrderedBipartition&) const = default;

 private:
  std::vector<std::vector<Letter>> blocks_;
  std::vector<bool> flags_;
  std::vector<std::size_t> block_index_;
  std::size_t n_ = 0;
};

struct EssentialWitness {
  LetterSet removed_loops;  // I
  LetterSet added_loops;    // J
  OrderedBipartition bipartition;
};

struct SymmetricDecomposition {
  Relation symmetric;
  Relation asymmetric;
  LetterSet support;
};

struct SorConditionReport {
  bool satisfied = false;
  std::vector<std::string> reasons;
  // Bipartition of U with unobservable loops removed, when it exists.
  std::optional<OrderedBipartition> bipartition;
};

inline constexpr std::size_t kDefaultToggleCap = 20;

Relation complement(const Relation& u);
bool is_transitive(const Relation& u);
bool is_bipartitional(const Relation& u);
std::optional<OrderedBipartition> to_ordered_bipartition(const Relation& u);
Relation from_ordered_bipartition(const OrderedBipartition& bp);
SymmetricDecomposition decompose(const Relation& u);

// Searches loop assignments on F = {x : alpha_x = 1}. Mask bit b set means letter F[b]
// carries a loop; masks are tried in increasing order from 0.
std::optional<EssentialWitness> is_essentially_bipartitional(const Relation& u, const MultiplicityVector& alpha,
                                                             std::size_t toggle_cap = kDefaultToggleCap);

// Loops on letters with alpha_x = 1 never influence inv', maj' or sor' over R(alpha); they
// are dropped before the four conditions are checked.
SorConditionReport satisfies_sor_conditions(const Relation& u, const MultiplicityVector& alpha);

}  // namespace mahonian
