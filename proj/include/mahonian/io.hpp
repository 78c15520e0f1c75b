#pragma once

#include <json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mahonian/bcode.hpp"
#include "mahonian/qseries.hpp"
#include "mahonian/relation.hpp"
#include "mahonian/words.hpp"

namespace mahonian::io {

using nlohmann::json;

// "2,1,1,3,1"
MultiplicityVector parse_alpha(std::string_view text);
std::string render_alpha(const MultiplicityVector& alpha);

// "143123123" (one digit per letter) or "1 4 3 10 ..." (whitespace separated).
std::vector<Letter> parse_word(std::string_view text);
// Contiguous digits when every letter is at most 9, space separated otherwise.
std::string render_word(std::span<const Letter> letters);

// {"n": 5, "edges": [[5,3],[5,2]]}
Relation relation_from_json(const json& j);
json to_json(const Relation& u);
// One "x y" pair per line; blank lines and '#' comments ignored. n = 0 infers the largest letter.
Relation parse_relation_text(std::string_view text, std::size_t n = 0);
// "5 3;5 2" inline form. n = 0 infers the largest letter.
Relation parse_edges(std::string_view text, std::size_t n = 0);

// "{5,4} > {3} > _{2,1}_"
std::string render(const OrderedBipartition& bp);
OrderedBipartition parse_bipartition(std::string_view text);
// {"blocks":[[5,4],[3],[2,1]],"flags":[0,0,0]}
json to_json(const OrderedBipartition& bp);
OrderedBipartition bipartition_from_json(const json& j);

// "1 + 2*q + 3*q^2"
QPolynomial parse_polynomial(std::string_view text);
// {"coeffs":[1,2,3]}
json to_json(const QPolynomial& p);
QPolynomial polynomial_from_json(const json& j);

// {"partitions":[[4,2,1,1],[1],[0,0,0]],"markers":[3,0,2]}
json to_json(const BCode& code);
BCode bcode_from_json(const json& j);

// Parses JSON text, mapping syntax errors to Error{ParseError}.
json parse_json(std::string_view text);

}  // namespace mahonian::io
