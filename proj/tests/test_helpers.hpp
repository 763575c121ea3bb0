#pragma once

#include "massey/cdga.hpp"

#include <initializer_list>
#include <string>

namespace testing_helpers {

/// coefficient * product of generator names, e.g. term(1, {"x", "y"}).
inline massey::PolynomialTerm term(massey::Scalar c, std::initializer_list<std::string> names) {
    massey::PolynomialTerm t{c, {}};
    for (const auto& n : names) t.factors.emplace_back(n, 1);
    return t;
}

inline massey::Polynomial poly(std::initializer_list<massey::PolynomialTerm> terms) { return {terms}; }

inline massey::AlgebraPtr exterior_xy(int cap) {
    return massey::build_free_cdga({{"x", 1}, {"y", 1}}, {}, cap);
}

inline massey::AlgebraPtr heisenberg(int cap) {
    return massey::build_free_cdga({{"x", 1}, {"y", 1}, {"z", 1}}, {{"z", poly({term(1, {"x", "y"})})}}, cap);
}

inline massey::Element gen(const massey::AlgebraPtr& a, const std::string& name) {
    return *a->named_element(name);
}

}  // namespace testing_helpers
