#pragma once

#include "hopfcyc/slices.hpp"

namespace hopfcyc {

// Materialized chain complex: spaces[0..cap], d[n]: spaces[n] -> spaces[n-1]
// for n >= 1 (d[0] is the zero map and unused).
struct ComplexSlice {
  std::vector<FreeModule> spaces;
  std::vector<LinMap> d;
  int cap() const { return (int)spaces.size() - 1; }
};

ComplexSlice materialize_complex(int cap, const std::function<FreeModule(int)>& module,
                                 const std::function<Vec(int, const Vec&)>& diff);

// Materialized mixed complex (M, b, B) for degrees 0..cap.
struct MixedSlice {
  std::vector<FreeModule> M;
  std::vector<LinMap> b;  // b[n]: M[n] -> M[n-1], n >= 1
  std::vector<LinMap> B;  // B[n]: M[n] -> M[n+1], n < cap

  int cap() const { return (int)M.size() - 1; }
  // b² = B² = bB + Bb = 0 wherever both sides are defined; returns a witness
  // description on failure.
  std::optional<std::string> check_axioms() const;
};

MixedSlice materialize_mixed(int cap, const std::function<FreeModule(int)>& module,
                             const std::function<Vec(int, const Vec&)>& b,
                             const std::function<Vec(int, const Vec&)>& B);

// Column-capped negative cyclic total complex: degree n component is
// Π_{i=0..P} M_{n+2i}, coordinate keys "c<i>#<key>", differential
// (dm)_i = b m_i + B m_{i-1}. The cap forgets columns i > P, which is a
// quotient complex of the full HN; coordinatewise statements are asserted on
// the retained window.
struct HNSlice {
  int P = 0;
  int D = 0;
  ComplexSlice total;

  static std::string col_key(int i, const std::string& key);
  static std::pair<int, std::string> split_col(const std::string& key);
  // Embed a mixed-complex element as coordinate i of HN degree i-shifted.
  static Vec embed(int i, const Vec& v);
  static Vec coordinate(int i, const Vec& hn_elem);
};

// Requires m.cap() >= D + 2P (so every retained coordinate has its b and the
// feeding B available); throws ConfigError otherwise.
HNSlice hn_totalize(const MixedSlice& m, int D, int P);

// π: HN_n -> M_n, projection to coordinate 0 (a chain map on the nose).
LinMap hn_pi(const HNSlice& hn, const MixedSlice& m, int n);

}  // namespace hopfcyc
