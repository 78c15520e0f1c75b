#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mahonian/checked.hpp"

namespace mahonian {

// Letters are 1-based: the alphabet of size n is {1, ..., n}.
using Letter = int;

inline constexpr Count kDefaultClassCap = 10'000'000;

// The composition alpha = (alpha_1, ..., alpha_n) that fixes a rearrangement class.
class MultiplicityVector {
 public:
  explicit MultiplicityVector(std::vector<Count> counts);

  // Counts each letter of `letters`; n defaults to the largest letter present.
  static MultiplicityVector of_letters(std::span<const Letter> letters, std::size_t n = 0);

  std::size_t alphabet_size() const noexcept { return counts_.size(); }
  Count operator[](Letter x) const { return counts_.at(static_cast<std::size_t>(x - 1)); }
  Count total() const noexcept { return total_; }
  std::span<const Count> counts() const noexcept { return counts_; }

  bool operator==(const MultiplicityVector&) const = default;

 private:
  std::vector<Count> counts_;
  Count total_ = 0;
};

// A member of R(alpha). Immutable once built.
class Word {
 public:
  Word(std::vector<Letter> letters, MultiplicityVector alpha);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_.at(i); }
  const MultiplicityVector& multiplicities() const noexcept { return alpha_; }

  bool operator==(const Word& other) const { return letters_ == other.letters_; }

 private:
  std::vector<Letter> letters_;
  MultiplicityVector alpha_;
};

// Validates `letters` against alpha: LetterOutOfRange, MultiplicityMismatch.
Word make_word(std::vector<Letter> letters, const MultiplicityVector& alpha);

// |alpha|! / prod alpha_i!, overflow-checked.
Count class_size(const MultiplicityVector& alpha);

// Lexicographic index -> word of R(alpha). Used to shard enumeration.
std::vector<Letter> unrank_word(const MultiplicityVector& alpha, Count index);
// Inverse of unrank_word; `letters` must be a member of R(alpha).
Count rank_word(std::span<const Letter> letters, const MultiplicityVector& alpha);

// Lexicographic enumeration of R(alpha). Single consumer.
class WordStream {
 public:
  explicit WordStream(const MultiplicityVector& alpha, Count cap = kDefaultClassCap);

  // Starts at the word with lexicographic index `first` and yields at most `count` words.
  WordStream(const MultiplicityVector& alpha, Count first, Count count, Count cap = kDefaultClassCap);

  // Advances to the next word; false once the stream is exhausted.
  bool next();
  std::span<const Letter> current() const noexcept { return current_; }
  Count size() const noexcept { return size_; }

 private:
  std::vector<Letter> current_;
  Count size_ = 0;
  Count remaining_ = 0;
  bool started_ = false;
};

std::vector<Word> rearrangement_class(const MultiplicityVector& alpha, Count cap = kDefaultClassCap);

template <class Fn>
void for_each_word(const MultiplicityVector& alpha, Fn&& fn, Count cap = kDefaultClassCap) {
  WordStream stream(alpha, cap);
  while (stream.next()) fn(stream.current());
}

}  // namespace mahonian
