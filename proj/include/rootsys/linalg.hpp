#pragma once

#include "rootsys/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace rootsys {

using Rational = boost::multiprecision::cpp_rational;
using QMatrix = std::vector<std::vector<Rational>>;

std::vector<Rational> to_q(const RootVec& v);
QMatrix transpose(const QMatrix& a);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
QMatrix inverse(const QMatrix& a);
// Basis of {x : a x = 0}, scaled to integer entries.
QMatrix nullspace(const QMatrix& a);
int rank_of(const QMatrix& a);
int rank_of(const std::vector<RootVec>& rows);
Isometry to_isometry(const QMatrix& m);

}  // namespace rootsys
