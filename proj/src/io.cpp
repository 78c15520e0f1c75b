#include "mahonian/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace mahonian::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

template <class T>
T parse_number(std::string_view s, std::string_view what) {
  s = trim(s);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    fail("bad " + std::string(what) + " '" + std::string(s) + "'");
  return value;
}

std::size_t largest_letter(const std::vector<Edge>& edges) {
  Letter top = 0;
  for (auto [x, y] : edges) top = std::max({top, x, y});
  return static_cast<std::size_t>(std::max(top, 1));
}

Relation build_relation(const std::vector<Edge>& edges, std::size_t n) {
  if (n == 0) n = largest_letter(edges);
  return Relation(n, edges);
}

}  // namespace

MultiplicityVector parse_alpha(std::string_view text) {
  text = trim(text);
  if (text.empty()) fail("empty multiplicity vector");
  std::vector<Count> counts;
  for (auto part : split(text, ',')) counts.push_back(parse_number<Count>(part, "multiplicity"));
  return MultiplicityVector(std::move(counts));
}

std::string render_alpha(const MultiplicityVector& alpha) {
  std::string out;
  for (Count c : alpha.counts()) out += (out.empty() ? "" : ",") + std::to_string(c);
  return out;
}

std::vector<Letter> parse_word(std::string_view text) {
  text = trim(text);
  std::vector<Letter> letters;
  const bool spaced = std::any_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (!spaced) {
    for (char c : text) {
      if (c < '1' || c > '9') fail(std::string("bad letter '") + c + "' in word");
      letters.push_back(c - '0');
    }
    return letters;
  }
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) letters.push_back(parse_number<Letter>(token, "letter"));
  return letters;
}

std::string render_word(std::span<const Letter> letters) {
  const bool compact = std::all_of(letters.begin(), letters.end(), [](Letter x) { return x >= 1 && x <= 9; });
  std::string out;
  for (Letter x : letters) {
    if (!compact && !out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

Relation relation_from_json(const json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail("each edge must be a pair");
      edges.emplace_back(e[0].get<Letter>(), e[1].get<Letter>());
    }
    const std::size_t n = j.contains("n") ? j.at("n").get<std::size_t>() : 0;
    return build_relation(edges, n);
  } catch (const json::exception& e) {
    fail(std::string("relation JSON: ") + e.what());
  }
}

json to_json(const Relation& u) {
  json edges = json::array();
  for (auto [x, y] : u.edges()) edges.push_back({x, y});
  return {{"n", u.alphabet_size()}, {"edges", std::move(edges)}};
}

Relation parse_relation_text(std::string_view text, std::size_t n) {
  std::vector<Edge> edges;
  for (auto line : split(text, '\n')) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream in{std::string(line)};
    Letter x = 0, y = 0;
    std::string extra;
    if (!(in >> x >> y) || (in >> extra)) fail("relation line '" + std::string(line) + "' is not an 'x y' pair");
    edges.emplace_back(x, y);
  }
  return build_relation(edges, n);
}

Relation parse_edges(std::string_view text, std::size_t n) {
  std::vector<Edge> edges;
  for (auto pair : split(text, ';')) {
    pair = trim(pair);
    if (pair.empty()) continue;
    std::istringstream in{std::string(pair)};
    Letter x = 0, y = 0;
    std::string extra;
    if (!(in >> x >> y) || (in >> extra)) fail("edge '" + std::string(pair) + "' is not an 'x y' pair");
    edges.emplace_back(x, y);
  }
  return build_relation(edges, n);
}

std::string render(const OrderedBipartition& bp) {
  std::string out;
  for (std::size_t i = 0; i < bp.block_count(); ++i) {
    if (i) out += " > ";
    std::string block = "{";
    for (std::size_t t = 0; t < bp.block(i).size(); ++t) block += (t ? "," : "") + std::to_string(bp.block(i)[t]);
    block += "}";
    out += bp.underlined(i) ? "_" + block + "_" : block;
  }
  return out;
}

OrderedBipartition parse_bipartition(std::string_view text) {
  std::vector<std::vector<Letter>> blocks;
  std::vector<bool> flags;
  for (auto part : split(text, '>')) {
    part = trim(part);
    bool underlined = false;
    if (part.size() >= 2 && part.front() == '_' && part.back() == '_') {
      underlined = true;
      part = trim(part.substr(1, part.size() - 2));
    }
    if (part.size() < 2 || part.front() != '{' || part.back() != '}')
      fail("block '" + std::string(part) + "' must look like {a,b} or _{a,b}_");
    std::vector<Letter> block;
    for (auto letter : split(part.substr(1, part.size() - 2), ',')) block.push_back(parse_number<Letter>(letter, "letter"));
    blocks.push_back(std::move(block));
    flags.push_back(underlined);
  }
  return OrderedBipartition(std::move(blocks), std::move(flags));
}

json to_json(const OrderedBipartition& bp) {
  json flags = json::array();
  for (bool f : bp.flags()) flags.push_back(f ? 1 : 0);
  return {{"blocks", bp.blocks()}, {"flags", std::move(flags)}};
}

OrderedBipartition bipartition_from_json(const json& j) {
  try {
    auto blocks = j.at("blocks").get<std::vector<std::vector<Letter>>>();
    std::vector<bool> flags;
    if (j.contains("flags"))
      for (const auto& f : j.at("flags")) flags.push_back(f.is_boolean() ? f.get<bool>() : f.get<int>() != 0);
    else
      flags.assign(blocks.size(), false);
    return OrderedBipartition(std::move(blocks), std::move(flags));
  } catch (const json::exception& e) {
    fail(std::string("bipartition JSON: ") + e.what());
  }
}

QPolynomial parse_polynomial(std::string_view text) {
  text = trim(text);
  if (text.empty()) fail("empty polynomial");
  QPolynomial p;
  for (auto term : split(text, '+')) {
    term = trim(term);
    if (term.empty()) fail("empty term in polynomial");
    Count coeff = 1;
    std::size_t exponent = 0;
    const auto q = term.find('q');
    if (q == std::string_view::npos) {
      coeff = parse_number<Count>(term, "coefficient");
    } else {
      auto head = trim(term.substr(0, q));
      auto tail = trim(term.substr(q + 1));
      if (!head.empty()) {
        if (head.back() != '*') fail("term '" + std::string(term) + "' needs '*' before q");
        coeff = parse_number<Count>(head.substr(0, head.size() - 1), "coefficient");
      }
      exponent = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') fail("term '" + std::string(term) + "' has junk after q");
        exponent = parse_number<std::size_t>(tail.substr(1), "exponent");
      }
    }
    p.add_term(exponent, coeff);
  }
  return QPolynomial(std::vector<Count>(p.coefficients().begin(), p.coefficients().end()));
}

json to_json(const QPolynomial& p) {
  return {{"coeffs", std::vector<Count>(p.coefficients().begin(), p.coefficients().end())}};
}

QPolynomial polynomial_from_json(const json& j) {
  try {
    return QPolynomial(j.at("coeffs").get<std::vector<Count>>());
  } catch (const json::exception& e) {
    fail(std::string("polynomial JSON: ") + e.what());
  }
}

json to_json(const BCode& code) { return {{"partitions", code.partitions}, {"markers", code.markers}}; }

BCode bcode_from_json(const json& j) {
  try {
    return BCode{j.at("partitions").get<std::vector<std::vector<Count>>>(), j.at("markers").get<std::vector<Count>>()};
  } catch (const json::exception& e) {
    fail(std::string("b-code JSON: ") + e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace mahonian::io
