#include "mahonian/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "mahonian/bcode.hpp"
#include "mahonian/io.hpp"
#include "mahonian/oracle.hpp"
#include "mahonian/qseries.hpp"
#include "mahonian/relation.hpp"
#include "mahonian/statistics.hpp"

namespace mahonian {

namespace {

using io::json;

const std::map<std::string, std::string>& synopses() {
  static const std::map<std::string, std::string> table = {
      {"stats", "mahonian stats --word W [--relation natural|@FILE | --edges \"x y;...\"] [--n N] "
                "[--stat inv|des|maj|sor] [--tie-rule R] [--trace] [--format text|json]"},
      {"dist", "mahonian dist --alpha A --stat S [--relation ... | --edges ...] [--n N] [--tie-rule R] "
               "[--jobs J] [--format text|json]"},
      {"gf", "mahonian gf --alpha A --stat inv|maj|sor (--bipartition B | --relation ... | --edges ...) "
             "[--format text|json]"},
      {"check", "mahonian check bipartitional|essential|sor-conditions (--relation ... | --edges ...) [--n N] "
                "[--alpha A] [--format text|json]"},
      {"bcode", "mahonian bcode encode --word W | decode --code JSON|@FILE --alpha A; both take "
                "(--bipartition B | --relation ... | --edges ...) [--format text|json]"},
      {"verify", "mahonian verify thm1|thm2 --n N --alpha A [--tie-rule copy-label|leftmost|rightmost] "
                 "[--jobs J] [--max-n M] [--format text|json]"},
      {"chainword", "mahonian chainword --alpha A [--relation ... | --edges ...] [--n N] [--cap C] "
                    "[--format text|json]"},
  };
  return table;
}

// A negative answer (exit 1) rather than an input error (exit 2).
struct NegativeResult {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArguments, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@path" reads a file; anything else is taken literally.
std::string inline_or_file(const std::string& value) {
  return !value.empty() && value.front() == '@' ? read_file(value.substr(1)) : value;
}

// JSON objects open with a quoted key; "{5,4} > ..." is the bipartition text form.
bool looks_like_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') return false;
  const auto second = text.find_first_not_of(" \t\r\n", first + 1);
  return second != std::string::npos && (text[second] == '"' || text[second] == '}');
}

Count class_cap_from_env() {
  if (const char* raw = std::getenv("MAHONIAN_MAX_CLASS")) {
    try {
      return static_cast<Count>(std::stoull(raw));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArguments, std::string("MAHONIAN_MAX_CLASS is not a number: ") + raw);
    }
  }
  return kDefaultClassCap;
}

struct RelationArgs {
  std::string relation;
  std::string edges;
  bool edges_given = false;
  std::size_t n = 0;

  void attach(CLI::App* app) {
    app->add_option("--relation", relation, "natural, full, empty, or @FILE (JSON or 'x y' lines)");
    app->add_option_function<std::string>(
        "--edges", [this](const std::string& v) { edges = v, edges_given = true; }, "inline edges \"x y;x y\"");
    app->add_option("--n", n, "alphabet size");
  }

  bool given() const { return edges_given || !relation.empty(); }

  // `context_n` is the alphabet implied by other arguments (0 if none).
  Relation resolve(std::size_t context_n, const std::string& fallback = "natural") const {
    const std::size_t n_hint = n ? n : context_n;
    if (edges_given && !relation.empty())
      throw Error(ErrorCode::InvalidArguments, "give either --relation or --edges, not both");
    if (edges_given) return io::parse_edges(edges, n_hint);
    const std::string spec = relation.empty() ? fallback : relation;
    if (spec == "natural" || spec == "full" || spec == "empty") {
      if (n_hint == 0) throw Error(ErrorCode::InvalidArguments, "--relation " + spec + " needs an alphabet size");
      if (spec == "natural") return Relation::natural_order(n_hint);
      if (spec == "full") return Relation::full(n_hint);
      return Relation(n_hint);
    }
    if (spec.front() != '@') throw Error(ErrorCode::InvalidArguments, "unknown relation '" + spec + "'");
    const std::string text = read_file(spec.substr(1));
    if (!looks_like_json(text)) return io::parse_relation_text(text, n_hint);
    auto u = io::relation_from_json(io::parse_json(text));
    if (n && u.alphabet_size() != n)
      throw Error(ErrorCode::AlphabetMismatch, "relation file has n = " + std::to_string(u.alphabet_size()));
    return u;
  }
};

struct Output {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void add_format(CLI::App* app, Output& o) {
  app->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

std::string render_set(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string render_set(const LetterSet& s) {
  return render_set(std::vector<std::size_t>(s.begin(), s.end()));
}

std::string render_code(const BCode& code) {
  std::string out = "((";
  for (std::size_t i = 0; i < code.partitions.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t t = 0; t < code.partitions[i].size(); ++t)
      out += (t ? ">=" : "") + std::to_string(code.partitions[i][t]);
  }
  out += "), (";
  for (std::size_t i = 0; i < code.markers.size(); ++i) out += (i ? ", " : "") + std::to_string(code.markers[i]);
  return out + "))";
}

OrderedBipartition resolve_bipartition(const std::string& bipartition, const RelationArgs& rel,
                                       const MultiplicityVector* alpha, bool for_sorting) {
  if (!bipartition.empty()) {
    const std::string text = inline_or_file(bipartition);
    return looks_like_json(text) ? io::bipartition_from_json(io::parse_json(text)) : io::parse_bipartition(text);
  }
  if (!rel.given()) throw Error(ErrorCode::InvalidArguments, "need --bipartition, --relation or --edges");
  const Relation u = rel.resolve(alpha ? alpha->alphabet_size() : 0);
  if (for_sorting && alpha) {
    auto report = satisfies_sor_conditions(u, *alpha);
    if (!report.satisfied) throw Error(ErrorCode::ConditionsNotSatisfied, report.reasons.front());
    return *report.bipartition;
  }
  auto bp = to_ordered_bipartition(u);
  if (!bp) throw NegativeResult{"relation is not bipartitional"};
  return *bp;
}

int cmd_stats(const std::string& word_text, const RelationArgs& rel, const std::string& stat, TieRule rule,
              bool trace, const Output& o, std::ostream& out) {
  const auto letters = io::parse_word(word_text);
  const auto alpha = MultiplicityVector::of_letters(letters, rel.n);
  const Relation u = rel.resolve(alpha.alphabet_size());
  const auto t = graphical_sort_trace(u, letters, rule);
  Count sor = 0;
  for (const auto& s : t.steps) sor += s.contribution;
  const auto des_set = graphical_descent_set(u, letters);
  const std::map<std::string, Count> values = {{"inv", graphical_inversions(u, letters)},
                                               {"des", des_set.size()},
                                               {"maj", graphical_major_index(u, letters)},
                                               {"sor", sor}};

  if (o.json()) {
    json j = {{"word", io::render_word(letters)}, {"tie_rule", std::string(to_string(rule))}};
    if (!stat.empty()) {
      j[stat] = values.at(stat);
    } else {
      for (const auto& [k, v] : values) j[k] = v;
      j["des_set"] = des_set;
    }
    if (trace) {
      json steps = json::array();
      for (const auto& s : t.steps)
        steps.push_back({{"j", s.from}, {"i", s.to}, {"letter", s.letter}, {"contribution", s.contribution}});
      j["trace"] = std::move(steps);
    }
    out << j.dump() << "\n";
    return 0;
  }

  if (!stat.empty()) {
    out << values.at(stat) << "\n";
  } else {
    out << "inv' = " << values.at("inv") << "\n"
        << "Des' = " << render_set(des_set) << "\n"
        << "des' = " << values.at("des") << "\n"
        << "maj' = " << values.at("maj") << "\n"
        << "sor' = " << values.at("sor") << "\n";
  }
  if (trace) {
    out << std::setw(4) << "j" << std::setw(4) << "i" << std::setw(8) << "letter" << std::setw(14) << "contribution"
        << "\n";
    for (const auto& s : t.steps)
      out << std::setw(4) << s.from << std::setw(4) << s.to << std::setw(8) << s.letter << std::setw(14)
          << s.contribution << "\n";
  }
  return 0;
}

void print_polynomial(const QPolynomial& p, const Output& o, std::ostream& out) {
  if (o.json())
    out << io::to_json(p).dump() << "\n";
  else
    out << p.to_string() << "\n";
}

int cmd_check(const std::string& which, const RelationArgs& rel, const std::string& alpha_text, const Output& o,
              std::ostream& out) {
  std::optional<MultiplicityVector> alpha;
  if (!alpha_text.empty()) alpha = io::parse_alpha(alpha_text);
  const Relation u = rel.resolve(alpha ? alpha->alphabet_size() : 0);
  if (which != "bipartitional" && !alpha) throw Error(ErrorCode::InvalidArguments, "check " + which + " needs --alpha");

  json j = {{"check", which}, {"relation", io::to_json(u)}};
  bool yes = false;
  std::string text;
  if (which == "bipartitional") {
    const bool han = is_bipartitional(u);
    const auto bp = to_ordered_bipartition(u);
    if (han != bp.has_value())
      throw std::logic_error("bipartitionality tests disagree; this is a bug");
    yes = han;
    if (bp) {
      j["bipartition"] = io::to_json(*bp);
      text = "yes: " + io::render(*bp);
    } else {
      text = is_transitive(u) ? "no: the complement is not transitive" : "no: the relation is not transitive";
    }
  } else if (which == "essential") {
    const auto witness = is_essentially_bipartitional(u, *alpha);
    yes = witness.has_value();
    if (witness) {
      j["removed_loops"] = witness->removed_loops;
      j["added_loops"] = witness->added_loops;
      j["bipartition"] = io::to_json(witness->bipartition);
      text = "yes: I=" + render_set(witness->removed_loops) + " J=" + render_set(witness->added_loops) + " " +
             io::render(witness->bipartition);
    } else {
      text = "no: no loop toggling on letters of multiplicity 1 makes the relation bipartitional";
    }
  } else {
    const auto report = satisfies_sor_conditions(u, *alpha);
    yes = report.satisfied;
    j["reasons"] = report.reasons;
    if (report.bipartition) j["bipartition"] = io::to_json(*report.bipartition);
    if (yes) {
      text = "yes: " + io::render(*report.bipartition);
    } else {
      text = "no:";
      for (std::size_t i = 0; i < report.reasons.size(); ++i) text += (i ? "; " : " ") + report.reasons[i];
    }
  }
  j["result"] = yes;
  out << (o.json() ? j.dump() : text) << "\n";
  return yes ? 0 : 1;
}

int cmd_verify(const std::string& which, std::size_t n, const std::string& alpha_text, OracleOptions options,
               const Output& o, std::ostream& out) {
  const auto alpha = io::parse_alpha(alpha_text);
  if (n == 0) n = alpha.alphabet_size();
  const auto report = which == "thm1" ? verify_theorem1(n, alpha, options) : verify_theorem2(n, alpha, options);
  const char* predicate = which == "thm1" ? "essentially bipartitional" : "satisfies sor conditions";
  if (o.json()) {
    json dis = json::array();
    for (const auto& d : report.disagreements)
      dis.push_back({{"relation", io::to_json(d.relation)},
                     {"predicate", d.predicate},
                     {"equidistributed", d.equidistributed}});
    json j = {{"theorem", report.theorem},
              {"n", report.alphabet_size},
              {"alpha", io::render_alpha(report.alpha)},
              {"tie_rule", std::string(to_string(report.tie_rule))},
              {"relations", report.relation_count},
              {"agreements", report.agreements},
              {"predicate_true", report.predicate_true},
              {"disagreements", std::move(dis)},
              {"elapsed_seconds", report.elapsed.count()}};
    out << j.dump() << "\n";
  } else {
    out << report.theorem << " n=" << report.alphabet_size << " alpha=" << io::render_alpha(report.alpha)
        << " tie-rule=" << to_string(report.tie_rule) << ": " << report.agreements << "/" << report.relation_count
        << " agreements (" << report.predicate_true << " relations " << predicate << "), "
        << report.disagreements.size() << " disagreements, " << std::fixed << std::setprecision(3)
        << report.elapsed.count() << " s\n";
    for (const auto& d : report.disagreements)
      out << "  disagreement: " << io::to_json(d.relation).dump() << " predicate=" << (d.predicate ? "yes" : "no")
          << " equidistributed=" << (d.equidistributed ? "yes" : "no") << "\n";
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphical Mahonian statistics on words", "mahonian"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Output o;
  RelationArgs rel;
  std::string word, alpha, stat, tie = "copy-label", bipartition, code;
  bool trace = false;
  unsigned jobs = 1;
  std::size_t max_n = 3;
  Count cap = kDefaultChainWordCap;

  auto* stats = app.add_subcommand("stats", "graphical statistics of one word");
  stats->add_option("--word", word, "the word")->required();
  stats->add_option("--stat", stat, "print only this statistic")->check(CLI::IsMember({"inv", "des", "maj", "sor"}));
  stats->add_option("--tie-rule", tie, "copy-label, leftmost or rightmost");
  stats->add_flag("--trace", trace, "print the sorting steps");
  rel.attach(stats);
  add_format(stats, o);

  auto* dist = app.add_subcommand("dist", "distribution of a statistic over R(alpha)");
  dist->add_option("--alpha", alpha, "multiplicities, e.g. 2,1,1")->required();
  dist->add_option("--stat", stat, "inv, maj, sor, inv-graphical, maj-graphical, sor-graphical")->required();
  dist->add_option("--tie-rule", tie, "copy-label, leftmost or rightmost");
  dist->add_option("--jobs", jobs, "worker threads");
  rel.attach(dist);
  add_format(dist, o);

  auto* gf = app.add_subcommand("gf", "closed-form generating function");
  gf->add_option("--alpha", alpha, "multiplicities")->required();
  gf->add_option("--stat", stat, "inv, maj or sor")->required()->check(CLI::IsMember({"inv", "maj", "sor"}));
  gf->add_option("--bipartition", bipartition, "\"{5,4} > {3} > _{2,1}_\", JSON, or @FILE");
  rel.attach(gf);
  add_format(gf, o);

  auto* check = app.add_subcommand("check", "decide properties of a relation");
  check->require_subcommand(1);
  std::string check_kind;
  for (const char* kind : {"bipartitional", "essential", "sor-conditions"}) {
    auto* sub = check->add_subcommand(kind);
    sub->add_option("--alpha", alpha, "multiplicities");
    rel.attach(sub);
    add_format(sub, o);
    sub->callback([&check_kind, kind] { check_kind = kind; });
  }

  auto* bcode = app.add_subcommand("bcode", "b-code bijection");
  bcode->require_subcommand(1);
  auto* encode = bcode->add_subcommand("encode");
  encode->add_option("--word", word, "the word")->required();
  auto* decode = bcode->add_subcommand("decode");
  decode->add_option("--code", code, "code JSON or @FILE")->required();
  for (auto* sub : {encode, decode}) {
    sub->add_option("--alpha", alpha, "multiplicities");
    sub->add_option("--bipartition", bipartition, "bipartition text, JSON, or @FILE");
    rel.attach(sub);
    add_format(sub, o);
  }

  auto* verify = app.add_subcommand("verify", "exhaustive theorem check over all relations");
  verify->require_subcommand(1);
  std::string theorem;
  std::size_t verify_n = 0;
  for (const char* kind : {"thm1", "thm2"}) {
    auto* sub = verify->add_subcommand(kind);
    sub->add_option("--n", verify_n, "alphabet size");
    sub->add_option("--alpha", alpha, "multiplicities")->required();
    sub->add_option("--tie-rule", tie, "copy-label, leftmost or rightmost");
    sub->add_option("--jobs", jobs, "worker threads");
    sub->add_option("--max-n", max_n, "largest alphabet allowed for the sweep");
    add_format(sub, o);
    sub->callback([&theorem, kind] { theorem = kind; });
  }

  auto* chainword = app.add_subcommand("chainword", "maximal chain word");
  chainword->add_option("--alpha", alpha, "multiplicities")->required();
  chainword->add_option("--cap", cap, "largest |alpha| searched");
  rel.attach(chainword);
  add_format(chainword, o);

  auto subcommand_name = [&]() -> std::string {
    return args.empty() ? std::string() : args.front();
  };
  auto usage_error = [&](const std::string& message) {
    err << "error: " << message << "\n";
    const auto it = synopses().find(subcommand_name());
    if (it != synopses().end()) {
      err << "usage: " << it->second << "\n";
    } else {
      for (const auto& [name, line] : synopses()) err << "usage: " << line << "\n";
    }
    return 2;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  try {
    OracleOptions options;
    options.class_cap = class_cap_from_env();
    options.jobs = std::max(1U, jobs);
    options.tie_rule = parse_tie_rule(tie);
    options.max_sweep_alphabet = max_n;

    if (stats->parsed()) return cmd_stats(word, rel, stat, options.tie_rule, trace, o, out);

    if (dist->parsed()) {
      const auto a = io::parse_alpha(alpha);
      print_polynomial(distribution(parse_statistic(stat), a, rel.resolve(a.alphabet_size()), options), o, out);
      return 0;
    }

    if (gf->parsed()) {
      const auto a = io::parse_alpha(alpha);
      const bool sorting = stat == "sor";
      const auto bp = resolve_bipartition(bipartition, rel, &a, sorting);
      print_polynomial(sorting ? gf_sorting(a, bp) : gf_bipartitional(a, bp), o, out);
      return 0;
    }

    if (check->parsed()) return cmd_check(check_kind, rel, alpha, o, out);

    if (encode->parsed()) {
      const auto letters = io::parse_word(word);
      std::optional<MultiplicityVector> given;
      if (!alpha.empty()) given = io::parse_alpha(alpha);
      auto bp_alpha = given ? *given : MultiplicityVector::of_letters(letters, rel.n);
      const auto bp = resolve_bipartition(bipartition, rel, &bp_alpha, true);
      const auto a = given ? *given : MultiplicityVector::of_letters(letters, bp.alphabet_size());
      const auto c = bcode_encode(letters, bp, a);
      out << (o.json() ? io::to_json(c).dump() : render_code(c)) << "\n";
      return 0;
    }

    if (decode->parsed()) {
      if (alpha.empty()) throw Error(ErrorCode::InvalidArguments, "bcode decode needs --alpha");
      const auto a = io::parse_alpha(alpha);
      const auto bp = resolve_bipartition(bipartition, rel, &a, true);
      const auto c = io::bcode_from_json(io::parse_json(inline_or_file(code)));
      const auto w = bcode_decode(c, bp, a);
      if (o.json())
        out << json{{"word", io::render_word(w.letters())}}.dump() << "\n";
      else
        out << io::render_word(w.letters()) << "\n";
      return 0;
    }

    if (verify->parsed()) return cmd_verify(theorem, verify_n, alpha, options, o, out);

    if (chainword->parsed()) {
      const auto a = io::parse_alpha(alpha);
      const Relation u = rel.resolve(a.alphabet_size());
      const auto w = maximal_chain_word(u, a, cap);
      if (o.json())
        out << json{{"word", io::render_word(w.letters())}, {"maj", graphical_major_index(u, w)}}.dump() << "\n";
      else
        out << io::render_word(w.letters()) << "\n";
      return 0;
    }
  } catch (const NegativeResult& negative) {
    err << "no: " << negative.message << "\n";
    return 1;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConditionsNotSatisfied) {
      err << "no: " << e.what() << "\n";
      return 1;
    }
    return usage_error(e.what());
  }
  return usage_error("no subcommand ran");
}

}  // namespace mahonian
