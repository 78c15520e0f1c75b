#pragma once

#include <chrono>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mahonian/qseries.hpp"
#include "mahonian/relation.hpp"
#include "mahonian/statistics.hpp"
#include "mahonian/words.hpp"

namespace mahonian {

// Classical ids evaluate the graphical statistic against the strict natural order.
enum class StatisticId { InvGraphical, MajGraphical, SorGraphical, Inv, Maj, Sor };

std::string_view to_string(StatisticId id);
StatisticId parse_statistic(std::string_view text);

struct OracleOptions {
  Count class_cap = kDefaultClassCap;
  unsigned jobs = 1;
  TieRule tie_rule = TieRule::CopyLabelMax;
  // Largest alphabet allowed for a full relation sweep (2^(n*n) relations).
  std::size_t max_sweep_alphabet = 3;
};

Count evaluate(StatisticId stat, const Relation& u, std::span<const Letter> w, TieRule rule = TieRule::CopyLabelMax);

// Coefficient of q^v counts the words of R(alpha) whose statistic equals v.
QPolynomial distribution(StatisticId stat, const MultiplicityVector& alpha, const Relation& u,
                         const OracleOptions& options = {});

// All listed statistics share one distribution over R(alpha).
bool equidistributed(std::span<const StatisticId> stats, const MultiplicityVector& alpha, const Relation& u,
                     const OracleOptions& options = {});

struct Disagreement {
  Relation relation;
  bool predicate = false;         // essentially bipartitional / sor conditions
  bool equidistributed = false;
};

struct VerificationReport {
  std::string theorem;
  std::size_t alphabet_size = 0;
  MultiplicityVector alpha{std::vector<Count>{0}};
  TieRule tie_rule = TieRule::CopyLabelMax;
  std::uint64_t relation_count = 0;
  std::uint64_t agreements = 0;
  std::uint64_t predicate_true = 0;
  std::vector<Disagreement> disagreements;
  std::chrono::duration<double> elapsed{};

  bool passed() const { return disagreements.empty(); }
};

// Every U on 1..n: inv'/maj' equidistributed over R(alpha) <=> U essentially bipartitional.
VerificationReport verify_theorem1(std::size_t n, const MultiplicityVector& alpha, const OracleOptions& options = {});
// Every U on 1..n: inv'/maj'/sor' equidistributed over R(alpha) <=> the four sor conditions hold.
VerificationReport verify_theorem2(std::size_t n, const MultiplicityVector& alpha, const OracleOptions& options = {});

}  // namespace mahonian
