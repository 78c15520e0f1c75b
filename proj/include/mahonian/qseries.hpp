#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mahonian/checked.hpp"
#include "mahonian/relation.hpp"
#include "mahonian/words.hpp"

namespace mahonian {

// Polynomial in q with nonnegative integer coefficients, coefficient i multiplying q^i.
// Canonical: no trailing zeros; the zero polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Count> coefficients);
  QPolynomial(std::initializer_list<Count> coefficients);

  static QPolynomial constant(Count c);
  static QPolynomial monomial(Count c, std::size_t exponent);

  std::span<const Count> coefficients() const noexcept { return coeffs_; }
  Count coefficient(std::size_t exponent) const noexcept {
    return exponent < coeffs_.size() ? coeffs_[exponent] : 0;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as 0.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  Count at_one() const;
  bool is_palindromic() const;

  // Adds c * q^exponent in place.
  void add_term(std::size_t exponent, Count c);

  QPolynomial& operator+=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  QPolynomial scaled(Count c) const;
  QPolynomial shifted(std::size_t exponent) const;

  bool operator==(const QPolynomial&) const = default;

  // "1 + 2*q + 3*q^2"; the zero polynomial renders as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Count> coeffs_;
};

// Gaussian binomial [n choose k]_q by the q-Pascal recurrence.
QPolynomial q_binomial(Count n, Count k);
// [sum parts; parts]_q as a product of Gaussian binomials.
QPolynomial q_multinomial(std::span<const Count> parts);
inline QPolynomial q_multinomial(std::initializer_list<Count> parts) {
  return q_multinomial(std::span<const Count>(parts.begin(), parts.size()));
}
// Coefficient of q^s = partitions of s into at most `max_parts` parts, each at most `max_part`.
QPolynomial box_partition_counts(Count max_part, Count max_parts);
// Ordinary multinomial coefficient (sum parts)! / prod parts!.
Count multinomial(std::span<const Count> parts);

QPolynomial gf_bipartitional(const MultiplicityVector& alpha, const OrderedBipartition& bp);
QPolynomial gf_sorting(const MultiplicityVector& alpha, const OrderedBipartition& bp);

}  // namespace mahonian
