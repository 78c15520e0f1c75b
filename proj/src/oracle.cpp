#include "mahonian/oracle.hpp"

#include <algorithm>
#include <optional>
#include <thread>

namespace mahonian {

std::string_view to_string(StatisticId id) {
  switch (id) {
    case StatisticId::InvGraphical: return "inv-graphical";
    case StatisticId::MajGraphical: return "maj-graphical";
    case StatisticId::SorGraphical: return "sor-graphical";
    case StatisticId::Inv: return "inv";
    case StatisticId::Maj: return "maj";
    case StatisticId::Sor: return "sor";
  }
  return "unknown";
}

StatisticId parse_statistic(std::string_view text) {
  if (text == "inv-graphical" || text == "inv'") return StatisticId::InvGraphical;
  if (text == "maj-graphical" || text == "maj'") return StatisticId::MajGraphical;
  if (text == "sor-graphical" || text == "sor'") return StatisticId::SorGraphical;
  if (text == "inv") return StatisticId::Inv;
  if (text == "maj") return StatisticId::Maj;
  if (text == "sor") return StatisticId::Sor;
  throw Error(ErrorCode::InvalidArguments, "unknown statistic '" + std::string(text) + "'");
}

namespace {

bool is_classical(StatisticId id) {
  return id == StatisticId::Inv || id == StatisticId::Maj || id == StatisticId::Sor;
}

Count evaluate_graphical(StatisticId id, const Relation& u, std::span<const Letter> w, TieRule rule) {
  switch (id) {
    case StatisticId::InvGraphical:
    case StatisticId::Inv: return graphical_inversions(u, w);
    case StatisticId::MajGraphical:
    case StatisticId::Maj: return graphical_major_index(u, w);
    case StatisticId::SorGraphical:
    case StatisticId::Sor: return graphical_sorting_index(u, w, rule);
  }
  return 0;
}

// Distributions of several statistics in one pass over R(alpha), sharded across jobs.
std::vector<QPolynomial> histograms(std::span<const StatisticId> stats, const MultiplicityVector& alpha,
                                    const Relation& u, const OracleOptions& options) {
  if (u.alphabet_size() != alpha.alphabet_size())
    throw Error(ErrorCode::AlphabetMismatch, "relation and alpha have different alphabets");
  const Count size = class_size(alpha);
  if (size > options.class_cap)
    throw Error(ErrorCode::ClassTooLarge,
                "class has " + std::to_string(size) + " words, cap is " + std::to_string(options.class_cap));

  const Relation natural = Relation::natural_order(alpha.alphabet_size());
  const unsigned shards = static_cast<unsigned>(std::clamp<Count>(options.jobs, 1, std::max<Count>(size, 1)));
  using Tally = std::vector<std::vector<Count>>;
  std::vector<Tally> tallies(shards, Tally(stats.size()));

  auto run_shard = [&](unsigned shard) {
    const Count first = size * shard / shards;
    const Count last = size * (shard + 1) / shards;
    WordStream stream(alpha, first, last - first, options.class_cap);
    auto& tally = tallies[shard];
    while (stream.next()) {
      for (std::size_t s = 0; s < stats.size(); ++s) {
        const Relation& rel = is_classical(stats[s]) ? natural : u;
        const auto v = static_cast<std::size_t>(evaluate_graphical(stats[s], rel, stream.current(), options.tie_rule));
        if (tally[s].size() <= v) tally[s].resize(v + 1, 0);
        ++tally[s][v];
      }
    }
  };

  if (shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned shard = 0; shard < shards; ++shard) workers.emplace_back(run_shard, shard);
  }

  std::vector<QPolynomial> out(stats.size());
  for (const auto& tally : tallies)
    for (std::size_t s = 0; s < stats.size(); ++s) out[s] += QPolynomial(tally[s]);
  return out;
}

bool all_equal(const std::vector<QPolynomial>& polys) {
  return std::adjacent_find(polys.begin(), polys.end(), std::not_equal_to<>()) == polys.end();
}

template <class Predicate>
VerificationReport sweep(std::string theorem, std::size_t n, const MultiplicityVector& alpha,
                         std::span<const StatisticId> stats, const OracleOptions& options, Predicate&& predicate) {
  const auto started = std::chrono::steady_clock::now();
  if (n != alpha.alphabet_size())
    throw Error(ErrorCode::AlphabetMismatch, "n = " + std::to_string(n) + " but alpha has " +
                                                 std::to_string(alpha.alphabet_size()) + " letters");
  if (n > options.max_sweep_alphabet || n * n > 63)
    throw Error(ErrorCode::UniverseTooLarge, "a sweep over 2^" + std::to_string(n * n) +
                                                 " relations exceeds the alphabet cap of " +
                                                 std::to_string(options.max_sweep_alphabet));

  VerificationReport report;
  report.theorem = std::move(theorem);
  report.alphabet_size = n;
  report.alpha = alpha;
  report.tie_rule = options.tie_rule;
  report.relation_count = std::uint64_t{1} << (n * n);

  struct Verdict {
    bool predicate = false;
    bool equidistributed = false;
  };
  std::vector<Verdict> verdicts(report.relation_count);
  OracleOptions inner = options;
  inner.jobs = 1;

  const unsigned workers_wanted = std::max(1U, options.jobs);
  auto run_range = [&](std::uint64_t first, std::uint64_t last) {
    for (std::uint64_t mask = first; mask < last; ++mask) {
      const Relation u = Relation::from_mask(n, mask);
      verdicts[mask] = {predicate(u), all_equal(histograms(stats, alpha, u, inner))};
    }
  };
  if (workers_wanted == 1) {
    run_range(0, report.relation_count);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < workers_wanted; ++w)
      workers.emplace_back(run_range, report.relation_count * w / workers_wanted,
                           report.relation_count * (w + 1) / workers_wanted);
  }

  for (std::uint64_t mask = 0; mask < report.relation_count; ++mask) {
    const auto& v = verdicts[mask];
    if (v.predicate) ++report.predicate_true;
    if (v.predicate == v.equidistributed)
      ++report.agreements;
    else
      report.disagreements.push_back({Relation::from_mask(n, mask), v.predicate, v.equidistributed});
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace

Count evaluate(StatisticId stat, const Relation& u, std::span<const Letter> w, TieRule rule) {
  if (is_classical(stat)) return evaluate_graphical(stat, Relation::natural_order(u.alphabet_size()), w, rule);
  return evaluate_graphical(stat, u, w, rule);
}

QPolynomial distribution(StatisticId stat, const MultiplicityVector& alpha, const Relation& u,
                         const OracleOptions& options) {
  const StatisticId one[] = {stat};
  return histograms(one, alpha, u, options).front();
}

bool equidistributed(std::span<const StatisticId> stats, const MultiplicityVector& alpha, const Relation& u,
                     const OracleOptions& options) {
  if (stats.size() < 2) return true;
  return all_equal(histograms(stats, alpha, u, options));
}

VerificationReport verify_theorem1(std::size_t n, const MultiplicityVector& alpha, const OracleOptions& options) {
  static constexpr StatisticId stats[] = {StatisticId::InvGraphical, StatisticId::MajGraphical};
  return sweep("thm1", n, alpha, stats, options,
               [&](const Relation& u) { return is_essentially_bipartitional(u, alpha).has_value(); });
}

VerificationReport verify_theorem2(std::size_t n, const MultiplicityVector& alpha, const OracleOptions& options) {
  static constexpr StatisticId stats[] = {StatisticId::InvGraphical, StatisticId::MajGraphical,
                                          StatisticId::SorGraphical};
  return sweep("thm2", n, alpha, stats, options,
               [&](const Relation& u) { return satisfies_sor_conditions(u, alpha).satisfied; });
}

}  // namespace mahonian
