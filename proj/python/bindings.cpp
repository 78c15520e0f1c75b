#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mahonian/bcode.hpp"
#include "mahonian/io.hpp"
#include "mahonian/oracle.hpp"
#include "mahonian/qseries.hpp"
#include "mahonian/relation.hpp"
#include "mahonian/statistics.hpp"

namespace py = pybind11;
using namespace mahonian;

namespace {

std::vector<Count> coeffs(const QPolynomial& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

MultiplicityVector to_alpha(const std::vector<Count>& counts) { return MultiplicityVector(counts); }

TieRule to_rule(const std::string& name) { return parse_tie_rule(name); }

OracleOptions options(const std::string& tie_rule, unsigned jobs, std::size_t max_n) {
  OracleOptions o;
  o.tie_rule = to_rule(tie_rule);
  o.jobs = jobs;
  o.max_sweep_alphabet = max_n;
  return o;
}

py::dict report_dict(const VerificationReport& r) {
  py::list disagreements;
  for (const auto& d : r.disagreements)
    disagreements.append(py::dict(py::arg("edges") = d.relation.edges(), py::arg("predicate") = d.predicate,
                                  py::arg("equidistributed") = d.equidistributed));
  return py::dict(py::arg("theorem") = r.theorem, py::arg("n") = r.alphabet_size,
                  py::arg("relations") = r.relation_count, py::arg("agreements") = r.agreements,
                  py::arg("predicate_true") = r.predicate_true, py::arg("disagreements") = disagreements,
                  py::arg("elapsed") = r.elapsed.count(), py::arg("passed") = r.passed());
}

}  // namespace

PYBIND11_MODULE(mahonian, m) {
  m.doc() = "Graphical Mahonian statistics on words";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<Relation>(m, "Relation")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Relation(n, edges); }), py::arg("n"),
           py::arg("edges"))
      .def_static("natural_order", &Relation::natural_order)
      .def_static("full", &Relation::full)
      .def_static("from_mask", &Relation::from_mask)
      .def_property_readonly("n", &Relation::alphabet_size)
      .def("contains", &Relation::contains)
      .def("edges", &Relation::edges)
      .def("mask", &Relation::mask)
      .def("complement", [](const Relation& u) { return complement(u); })
      .def("is_transitive", [](const Relation& u) { return is_transitive(u); })
      .def("is_bipartitional", [](const Relation& u) { return is_bipartitional(u); })
      .def("to_bipartition", [](const Relation& u) { return to_ordered_bipartition(u); })
      .def(py::self == py::self)
      .def("__repr__", [](const Relation& u) { return "Relation(" + io::to_json(u).dump() + ")"; });

  py::class_<OrderedBipartition>(m, "OrderedBipartition")
      .def(py::init<std::vector<std::vector<Letter>>, std::vector<bool>>(), py::arg("blocks"), py::arg("flags"))
      .def_static("parse", [](const std::string& text) { return io::parse_bipartition(text); })
      .def_property_readonly("blocks", &OrderedBipartition::blocks)
      .def_property_readonly("flags", &OrderedBipartition::flags)
      .def("relation", [](const OrderedBipartition& bp) { return from_ordered_bipartition(bp); })
      .def(py::self == py::self)
      .def("__str__", [](const OrderedBipartition& bp) { return io::render(bp); })
      .def("__repr__", [](const OrderedBipartition& bp) { return "OrderedBipartition('" + io::render(bp) + "')"; });

  m.def("class_size", [](const std::vector<Count>& alpha) { return class_size(to_alpha(alpha)); }, py::arg("alpha"));
  m.def("words", [](const std::vector<Count>& alpha, Count cap) {
    std::vector<std::vector<Letter>> out;
    for_each_word(to_alpha(alpha), [&](std::span<const Letter> w) { out.emplace_back(w.begin(), w.end()); }, cap);
    return out;
  }, py::arg("alpha"), py::arg("cap") = Count{100'000});

  m.def("inv", [](const Relation& u, const std::vector<Letter>& w) { return graphical_inversions(u, w); });
  m.def("descent_set", [](const Relation& u, const std::vector<Letter>& w) { return graphical_descent_set(u, w); });
  m.def("maj", [](const Relation& u, const std::vector<Letter>& w) { return graphical_major_index(u, w); });
  m.def("sor", [](const Relation& u, const std::vector<Letter>& w, const std::string& tie_rule) {
    return graphical_sorting_index(u, w, to_rule(tie_rule));
  }, py::arg("u"), py::arg("w"), py::arg("tie_rule") = "copy-label");
  m.def("sort_trace", [](const Relation& u, const std::vector<Letter>& w, const std::string& tie_rule) {
    std::vector<std::tuple<std::size_t, std::size_t, Letter, Count>> steps;
    for (const auto& s : graphical_sort_trace(u, w, to_rule(tie_rule)).steps)
      steps.emplace_back(s.from, s.to, s.letter, s.contribution);
    return steps;
  }, py::arg("u"), py::arg("w"), py::arg("tie_rule") = "copy-label");
  m.def("maximal_chain_word", [](const Relation& u, const std::vector<Count>& alpha) {
    const auto w = maximal_chain_word(u, to_alpha(alpha));
    return std::vector<Letter>(w.letters().begin(), w.letters().end());
  });

  m.def("is_essentially_bipartitional", [](const Relation& u, const std::vector<Count>& alpha) -> py::object {
    const auto w = is_essentially_bipartitional(u, to_alpha(alpha));
    if (!w) return py::none();
    return py::make_tuple(w->removed_loops, w->added_loops, w->bipartition);
  });
  m.def("sor_conditions", [](const Relation& u, const std::vector<Count>& alpha) {
    const auto r = satisfies_sor_conditions(u, to_alpha(alpha));
    return py::make_tuple(r.satisfied, r.reasons);
  });

  m.def("q_binomial", [](Count n, Count k) { return coeffs(q_binomial(n, k)); });
  m.def("q_multinomial", [](const std::vector<Count>& parts) { return coeffs(q_multinomial(parts)); });
  m.def("gf_bipartitional", [](const std::vector<Count>& alpha, const OrderedBipartition& bp) {
    return coeffs(gf_bipartitional(to_alpha(alpha), bp));
  });
  m.def("gf_sorting", [](const std::vector<Count>& alpha, const OrderedBipartition& bp) {
    return coeffs(gf_sorting(to_alpha(alpha), bp));
  });
  m.def("distribution", [](const std::string& stat, const std::vector<Count>& alpha, const Relation& u,
                           const std::string& tie_rule, unsigned jobs) {
    return coeffs(distribution(parse_statistic(stat), to_alpha(alpha), u, options(tie_rule, jobs, 3)));
  }, py::arg("stat"), py::arg("alpha"), py::arg("u"), py::arg("tie_rule") = "copy-label", py::arg("jobs") = 1U);

  m.def("bcode_encode", [](const std::vector<Letter>& w, const OrderedBipartition& bp, const std::vector<Count>& alpha) {
    const auto c = bcode_encode(w, bp, to_alpha(alpha));
    return py::make_tuple(c.partitions, c.markers);
  });
  m.def("bcode_decode", [](const std::vector<std::vector<Count>>& partitions, const std::vector<Count>& markers,
                           const OrderedBipartition& bp, const std::vector<Count>& alpha) {
    const auto w = bcode_decode(BCode{partitions, markers}, bp, to_alpha(alpha));
    return std::vector<Letter>(w.letters().begin(), w.letters().end());
  });

  m.def("verify_theorem1", [](std::size_t n, const std::vector<Count>& alpha, unsigned jobs, std::size_t max_n) {
    return report_dict(verify_theorem1(n, to_alpha(alpha), options("copy-label", jobs, max_n)));
  }, py::arg("n"), py::arg("alpha"), py::arg("jobs") = 1U, py::arg("max_n") = std::size_t{3});
  m.def("verify_theorem2", [](std::size_t n, const std::vector<Count>& alpha, const std::string& tie_rule,
                              unsigned jobs, std::size_t max_n) {
    return report_dict(verify_theorem2(n, to_alpha(alpha), options(tie_rule, jobs, max_n)));
  }, py::arg("n"), py::arg("alpha"), py::arg("tie_rule") = "copy-label", py::arg("jobs") = 1U,
     py::arg("max_n") = std::size_t{3});
}
