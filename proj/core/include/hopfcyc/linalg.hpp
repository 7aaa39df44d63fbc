#pragma once

#include <functional>
#include <optional>

#include "hopfcyc/free_module.hpp"

namespace hopfcyc {

// Sparse linear map between free modules, stored column-major: one codomain
// vector per domain basis element.
class LinMap {
 public:
  LinMap() = default;
  LinMap(FreeModule domain, FreeModule codomain, std::vector<Vec> columns);

  // Materializes f on every domain basis element.
  static LinMap from_function(const FreeModule& domain, const FreeModule& codomain,
                              const std::function<Vec(const std::string&)>& f);
  static LinMap zero(const FreeModule& domain, const FreeModule& codomain);
  static LinMap identity(const FreeModule& m);

  const FreeModule& domain() const { return dom_; }
  const FreeModule& codomain() const { return cod_; }
  const Vec& column(std::size_t i) const { return cols_[i]; }
  const std::vector<Vec>& columns() const { return cols_; }

  Vec apply(const Vec& v) const;
  LinMap compose(const LinMap& inner) const;  // this ∘ inner
  LinMap plus(const LinMap& other, const Rat& c = Rat(1)) const;
  bool is_zero_map() const;

 private:
  FreeModule dom_, cod_;
  std::vector<Vec> cols_;
};

struct RankResult {
  std::size_t rank = 0;
  std::vector<Vec> kernel_basis;  // vectors in the domain
  std::vector<Vec> image_basis;   // vectors in the codomain
};

// Exact fraction-pivoted Gaussian elimination; pivot = first nonzero entry in
// lexicographic key order (deterministic witnesses).
RankResult rank_kernel_image(const LinMap& m);

struct SolveResult {
  std::optional<Vec> solution;  // x with m(x) = target, exactly
  Vec certificate;              // left-kernel y with y·target != 0 when inconsistent
};

SolveResult solve_linear(const LinMap& m, const Vec& target);

struct NotAComplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dim ker(d_out) - rank(d_in); checks d_out ∘ d_in = 0 exactly first and
// reports a violating domain basis element otherwise.
std::size_t homology_dims(const LinMap& d_in, const LinMap& d_out);

// Incremental row-echelon span for subspace computations (ideal powers, lower
// central series, adapted bases). Reduction is against lexicographically
// smallest leading keys; fully deterministic.
class Span {
 public:
  // Returns the residue of v after reduction against the current span.
  Vec reduce(const Vec& v) const;
  // Inserts v if independent; returns true when the span grew.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  bool same_as(const Span& other) const;

 private:
  std::map<std::string, std::size_t> pivot_;  // leading key -> row index
  std::vector<Vec> rows_;                     // echelon rows, leading coeff 1
};

}  // namespace hopfcyc
