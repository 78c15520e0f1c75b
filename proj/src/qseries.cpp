#include "mahonian/qseries.hpp"

#include <algorithm>
#include <numeric>

namespace mahonian {

QPolynomial::QPolynomial(std::vector<Count> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<Count> coefficients) : coeffs_(coefficients) { trim(); }

QPolynomial QPolynomial::constant(Count c) { return QPolynomial(std::vector<Count>{c}); }

QPolynomial QPolynomial::monomial(Count c, std::size_t exponent) {
  std::vector<Count> v(exponent + 1, 0);
  v[exponent] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Count QPolynomial::at_one() const {
  Count total = 0;
  for (Count c : coeffs_) total = checked_add(total, c);
  return total;
}

bool QPolynomial::is_palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

void QPolynomial::add_term(std::size_t exponent, Count c) {
  if (c == 0) return;
  if (coeffs_.size() <= exponent) coeffs_.resize(exponent + 1, 0);
  coeffs_[exponent] = checked_add(coeffs_[exponent], c);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Count> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::scaled(Count c) const {
  std::vector<Count> out(coeffs_);
  for (auto& x : out) x = checked_mul(x, c);
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::shifted(std::size_t exponent) const {
  if (is_zero()) return {};
  std::vector<Count> out(exponent, 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const Count c = coeffs_[e];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "q";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

QPolynomial q_binomial(Count n, Count k) {
  if (k > n)
    throw Error(ErrorCode::InvalidArguments,
                "q_binomial needs k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  // row[j] = [r choose j]_q for the current r
  std::vector<QPolynomial> row(k + 1);
  row[0] = QPolynomial::constant(1);
  for (Count r = 1; r <= n; ++r) {
    for (Count j = std::min(r, k); j >= 1; --j) {
      // [r, j] = [r-1, j-1] + q^j [r-1, j]
      QPolynomial next = row[j - 1];
      if (j < r) next += row[j].shifted(j);
      row[j] = std::move(next);
    }
  }
  return row[k];
}

QPolynomial q_multinomial(std::span<const Count> parts) {
  QPolynomial result = QPolynomial::constant(1);
  Count running = 0;
  for (Count p : parts) {
    running = checked_add(running, p);
    result = result * q_binomial(running, p);
  }
  return result;
}

Count multinomial(std::span<const Count> parts) {
  Count result = 1;
  Count running = 0;
  for (Count p : parts) {
    running = checked_add(running, p);
    result = checked_mul(result, binomial(running, p));
  }
  return result;
}

QPolynomial box_partition_counts(Count max_part, Count max_parts) {
  const std::size_t top = static_cast<std::size_t>(checked_mul(max_part, max_parts));
  // ways[c][s]: multisets of c parts drawn from 1..max_part with sum s
  std::vector<std::vector<Count>> ways(max_parts + 1, std::vector<Count>(top + 1, 0));
  ways[0][0] = 1;
  for (Count v = 1; v <= max_part; ++v)
    for (Count c = 1; c <= max_parts; ++c)
      for (std::size_t s = v; s <= top; ++s)
        ways[c][s] = checked_add(ways[c][s], ways[c - 1][s - v]);
  std::vector<Count> out(top + 1, 0);
  for (const auto& per_count : ways)
    for (std::size_t s = 0; s <= top; ++s) out[s] = checked_add(out[s], per_count[s]);
  return QPolynomial(std::move(out));
}

namespace {

struct BlockFactors {
  std::vector<Count> masses;
  Count scalar = 1;
};

BlockFactors block_factors(const MultiplicityVector& alpha, const OrderedBipartition& bp) {
  if (bp.alphabet_size() != alpha.alphabet_size())
    throw Error(ErrorCode::InvalidBipartition, "bipartition covers " + std::to_string(bp.alphabet_size()) +
                                                   " letters but alpha has " +
                                                   std::to_string(alpha.alphabet_size()));
  BlockFactors f;
  for (std::size_t i = 0; i < bp.block_count(); ++i) {
    f.masses.push_back(bp.block_mass(i, alpha));
    std::vector<Count> inner;
    for (Letter x : bp.block(i)) inner.push_back(alpha[x]);
    f.scalar = checked_mul(f.scalar, multinomial(inner));
  }
  return f;
}

}  // namespace

QPolynomial gf_bipartitional(const MultiplicityVector& alpha, const OrderedBipartition& bp) {
  const auto f = block_factors(alpha, bp);
  std::size_t shift = 0;
  for (std::size_t i = 0; i < bp.block_count(); ++i)
    if (bp.underlined(i)) shift += static_cast<std::size_t>(binomial(f.masses[i], 2));
  return q_multinomial(f.masses).scaled(f.scalar).shifted(shift);
}

QPolynomial gf_sorting(const MultiplicityVector& alpha, const OrderedBipartition& bp) {
  const auto f = block_factors(alpha, bp);
  const auto report = satisfies_sor_conditions(from_ordered_bipartition(bp), alpha);
  if (!report.satisfied) {
    std::string reasons;
    for (const auto& r : report.reasons) reasons += (reasons.empty() ? "" : "; ") + r;
    throw Error(ErrorCode::ConditionsNotSatisfied, reasons);
  }
  return q_multinomial(f.masses).scaled(f.scalar);
}

}  // namespace mahonian
