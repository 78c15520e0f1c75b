#include "mahonian/words.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mahonian {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArguments: return "InvalidArguments";
    case ErrorCode::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorCode::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorCode::ClassTooLarge: return "ClassTooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidBipartition: return "InvalidBipartition";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::ConditionsNotSatisfied: return "ConditionsNotSatisfied";
    case ErrorCode::InvalidCode: return "InvalidCode";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

MultiplicityVector::MultiplicityVector(std::vector<Count> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw Error(ErrorCode::InvalidArguments, "alphabet size must be at least 1");
  for (Count c : counts_) total_ = checked_add(total_, c);
}

MultiplicityVector MultiplicityVector::of_letters(std::span<const Letter> letters, std::size_t n) {
  Letter largest = 0;
  for (Letter x : letters) {
    if (x < 1) throw Error(ErrorCode::LetterOutOfRange, "letter " + std::to_string(x) + " is below 1");
    largest = std::max(largest, x);
  }
  if (n == 0) n = std::max<std::size_t>(1, static_cast<std::size_t>(largest));
  if (static_cast<std::size_t>(largest) > n)
    throw Error(ErrorCode::LetterOutOfRange,
                "letter " + std::to_string(largest) + " exceeds alphabet size " + std::to_string(n));
  std::vector<Count> counts(n, 0);
  for (Letter x : letters) ++counts[static_cast<std::size_t>(x - 1)];
  return MultiplicityVector(std::move(counts));
}

Word::Word(std::vector<Letter> letters, MultiplicityVector alpha)
    : letters_(std::move(letters)), alpha_(std::move(alpha)) {
  const auto n = static_cast<Letter>(alpha_.alphabet_size());
  std::vector<Count> seen(alpha_.alphabet_size(), 0);
  for (Letter x : letters_) {
    if (x < 1 || x > n)
      throw Error(ErrorCode::LetterOutOfRange,
                  "letter " + std::to_string(x) + " outside 1.." + std::to_string(n));
    ++seen[static_cast<std::size_t>(x - 1)];
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != alpha_.counts()[i])
      throw Error(ErrorCode::MultiplicityMismatch,
                  "letter " + std::to_string(i + 1) + " occurs " + std::to_string(seen[i]) +
                      " times, expected " + std::to_string(alpha_.counts()[i]));
  }
}

Word make_word(std::vector<Letter> letters, const MultiplicityVector& alpha) {
  return Word(std::move(letters), alpha);
}

Count class_size(const MultiplicityVector& alpha) {
  Count result = 1;
  Count running = 0;
  for (Count a : alpha.counts()) {
    running += a;
    result = checked_mul(result, binomial(running, a));
  }
  return result;
}

namespace {

std::vector<Letter> ascending_word(const MultiplicityVector& alpha) {
  std::vector<Letter> letters;
  letters.reserve(alpha.total());
  for (std::size_t i = 0; i < alpha.alphabet_size(); ++i)
    letters.insert(letters.end(), alpha.counts()[i], static_cast<Letter>(i + 1));
  return letters;
}

}  // namespace

std::vector<Letter> unrank_word(const MultiplicityVector& alpha, Count index) {
  const Count total_words = class_size(alpha);
  if (index >= total_words)
    throw Error(ErrorCode::InvalidArguments,
                "index " + std::to_string(index) + " outside class of size " + std::to_string(total_words));
  std::vector<Count> remaining(alpha.counts().begin(), alpha.counts().end());
  Count left = alpha.total();
  Count block = total_words;  // number of completions of the current prefix
  std::vector<Letter> out;
  out.reserve(left);
  while (left > 0) {
    for (std::size_t x = 0; x < remaining.size(); ++x) {
      if (remaining[x] == 0) continue;
      // completions starting with x: block * remaining[x] / left (exact)
      const Count with_x = static_cast<Count>(static_cast<unsigned __int128>(block) * remaining[x] / left);
      if (index < with_x) {
        out.push_back(static_cast<Letter>(x + 1));
        --remaining[x];
        block = with_x;
        break;
      }
      index -= with_x;
    }
    --left;
  }
  return out;
}

Count rank_word(std::span<const Letter> letters, const MultiplicityVector& alpha) {
  const Word checked(std::vector<Letter>(letters.begin(), letters.end()), alpha);
  std::vector<Count> remaining(alpha.counts().begin(), alpha.counts().end());
  Count left = alpha.total();
  Count block = class_size(alpha);
  Count index = 0;
  for (Letter letter : checked.letters()) {
    const auto chosen = static_cast<std::size_t>(letter - 1);
    for (std::size_t x = 0; x <= chosen; ++x) {
      if (remaining[x] == 0) continue;
      const Count with_x = static_cast<Count>(static_cast<unsigned __int128>(block) * remaining[x] / left);
      if (x == chosen) {
        block = with_x;
        break;
      }
      index += with_x;
    }
    --remaining[chosen];
    --left;
  }
  return index;
}

WordStream::WordStream(const MultiplicityVector& alpha, Count cap)
    : WordStream(alpha, 0, class_size(alpha), cap) {}

WordStream::WordStream(const MultiplicityVector& alpha, Count first, Count count, Count cap) {
  size_ = class_size(alpha);
  if (size_ > cap)
    throw Error(ErrorCode::ClassTooLarge,
                "class has " + std::to_string(size_) + " words, cap is " + std::to_string(cap));
  if (first > size_) first = size_;
  remaining_ = std::min(count, size_ - first);
  current_ = first == 0 || first == size_ ? ascending_word(alpha) : unrank_word(alpha, first);
}

bool WordStream::next() {
  if (remaining_ == 0) return false;
  if (started_) std::next_permutation(current_.begin(), current_.end());
  started_ = true;
  --remaining_;
  return true;
}

std::vector<Word> rearrangement_class(const MultiplicityVector& alpha, Count cap) {
  WordStream stream(alpha, cap);
  std::vector<Word> words;
  words.reserve(stream.size());
  while (stream.next())
    words.emplace_back(std::vector<Letter>(stream.current().begin(), stream.current().end()), alpha);
  return words;
}

}  // namespace mahonian
