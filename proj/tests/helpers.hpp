#pragma once

#include <doctest.h>

#include <map>
#include <vector>

#include "mahonian/error.hpp"
#include "mahonian/qseries.hpp"
#include "mahonian/words.hpp"

namespace testing {

inline mahonian::MultiplicityVector alpha(std::vector<mahonian::Count> counts) {
  return mahonian::MultiplicityVector(std::move(counts));
}

inline mahonian::QPolynomial poly(const std::map<mahonian::Count, mahonian::Count>& histogram) {
  mahonian::QPolynomial p;
  for (auto [e, c] : histogram) p.add_term(e, c);
  return p;
}

template <class Fn>
mahonian::ErrorCode error_code(Fn&& fn) {
  try {
    fn();
  } catch (const mahonian::Error& e) {
    return e.code();
  }
  FAIL("expected mahonian::Error");
  return mahonian::ErrorCode::InvalidArguments;
}

}  // namespace testing
