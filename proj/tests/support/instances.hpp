#pragma once

// Shared desk-scale instances: abelian Q^n, Heisenberg, sl2, dual numbers,
// triangular blocks over the dual numbers.

#include <hopfcyc/algebra.hpp>
#include <hopfcyc/hopf.hpp>

namespace hopfcyc::testing {

inline LieAlgebraSpec abelian_lie(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return LieAlgebraSpec(names, {});
}

// [x,y] = z
inline LieAlgebraSpec heisenberg() {
  return LieAlgebraSpec({"x", "y", "z"}, {{{0, 1}, unit_vec("z")}});
}

// [e,f] = h, [h,e] = 2e, [h,f] = -2f, ordered e<f<h
inline LieAlgebraSpec sl2() {
  std::map<std::pair<int, int>, Vec> br;
  br[{0, 1}] = unit_vec("h");
  br[{0, 2}] = scaled(unit_vec("e"), Rat(-2));  // [e,h] = -2e
  br[{1, 2}] = scaled(unit_vec("f"), Rat(2));   // [f,h] = 2f
  return LieAlgebraSpec({"e", "f", "h"}, br);
}

// Q[eps]/eps^2 with ideal (eps); basis {one, eps}.
inline AlgebraSpec dual_numbers() {
  std::vector<std::string> names{"one", "eps"};
  std::vector<std::vector<Vec>> mult(2, std::vector<Vec>(2));
  mult[0][0] = unit_vec("one");
  mult[0][1] = unit_vec("eps");
  mult[1][0] = unit_vec("eps");
  mult[1][1] = {};
  return AlgebraSpec(names, unit_vec("one"), mult, {unit_vec("eps")});
}

inline AlgebraSpec rationals_algebra() {
  std::vector<std::vector<Vec>> mult(1, std::vector<Vec>(1));
  mult[0][0] = unit_vec("one");
  return AlgebraSpec({"one"}, unit_vec("one"), mult, {});
}

inline TriangularSpec t2_dual() {  // n=2, sigma={0<1}, A=Q[eps], I=(eps)
  return TriangularSpec{2, {{0, 1}}, dual_numbers()};
}

inline TriangularSpec t1_dual() {  // n=1, sigma empty
  return TriangularSpec{1, {}, dual_numbers()};
}

}  // namespace hopfcyc::testing
