#pragma once

#include <optional>

#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LieAdaptedForm;

// Finite-dimensional Lie algebra over Q, given by structure constants on an
// ordered named basis. Brackets are stored for i<j; antisymmetry is built in.
class LieAlgebraSpec {
 public:
  LieAlgebraSpec(std::vector<std::string> names,
                 std::map<std::pair<int, int>, Vec> brackets);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const FreeModule& module() const { return module_; }

  Vec bracket_basis(int i, int j) const;  // any i, j
  Vec bracket(const Vec& u, const Vec& v) const;

  // Exhaustive Jacobi check; throws ValidationError naming (i,j,k) on failure.
  void validate() const;

  // Lower central series g = γ1 ⊇ γ2 ⊇ ..., computed until stable.
  std::vector<Span> lower_central_series() const;
  // Length of the LCS when it reaches 0; nullopt when it stabilizes nonzero.
  std::optional<int> nilpotency_class() const;

  bool is_abelian() const;

  // --- adapted form -------------------------------------------------------
  // A spec is adapted when every γ_j is spanned by a subset of the basis; then
  // each basis vector carries its LCS weight and the I-adic level of a PBW
  // monomial is the sum of letter weights. adapted() returns an equivalent
  // spec with that property (identity when already adapted), together with the
  // change of basis in both directions.
  using AdaptedForm = LieAdaptedForm;
  AdaptedForm adapted() const;
  bool is_adapted_to_lcs() const;

 private:
  std::vector<std::string> names_;
  FreeModule module_;
  std::map<std::pair<int, int>, Vec> brackets_;  // i<j only
};

struct LieAdaptedForm {
  LieAlgebraSpec lie;
  std::vector<int> weights;  // per adapted basis vector
  LinMap to_adapted;         // original coords -> adapted coords
  LinMap from_adapted;
};

}  // namespace hopfcyc
