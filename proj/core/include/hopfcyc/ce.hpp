#pragma once

#include "hopfcyc/maps.hpp"

namespace hopfcyc {

// Chevalley-Eilenberg complexes of a Lie algebra: the quotient (∧𝔤, d), the
// resolution (U𝔤 ⊗ ∧𝔤, d'), the antisymmetrization maps into the bar
// complexes of U𝔤, and the Loday-Quillen representative θ.
//
// Wedge words are '^'-joined adapted basis names with strictly increasing
// indices ("1" for the empty word); resolution words are "u|w" with u a PBW
// key and w a wedge key. Working over the adapted basis makes the adic level
// of a wedge word the sum of its letter weights.
class CEComplex {
 public:
  explicit CEComplex(const LieAlgebraSpec& lie_user);

  const LieAdaptedForm& adapted() const { return ad_; }
  int dim() const { return (int)ad_.lie.dim(); }

  std::string wedge_key(const std::vector<int>& letters) const;
  std::vector<int> wedge_parse(const std::string& key) const;
  int wedge_level(const std::string& key) const;

  FreeModule wedge_module(int n) const;
  FreeModule wedge_module_capped(int n, std::optional<int> cap) const;

  // Left-insert a 𝔤-vector (adapted coords) into a wedge word with signs.
  Vec wedge_insert(const Vec& adapted_vec, const std::string& wkey) const;
  // ∧ of user-coordinate vectors, as a Vec over wedge words.
  Vec wedge_of_user(const std::vector<Vec>& user_vectors) const;

  // d(x1∧...∧xn) = Σ_{p<q} (-1)^{p+q} [xp,xq] ∧ ... (both omitted).
  Vec d(int n, const Vec& v) const;

  // d'(u ⊗ x1∧...∧xn) = Σ_p (-1)^{p+1} u·xp ⊗ (omit p)
  //                   + Σ_{p<q} (-1)^{p+q} u ⊗ [xp,xq] ∧ (omit both).
  Vec dprime(const Enveloping& env, int n, const Vec& res_words) const;
  FreeModule res_module(const Enveloping& env, int n, std::optional<int> cap) const;
  int res_level(const Enveloping& env, const std::string& res_word) const;

  // e(x1∧...∧xn) = Σ_σ sg(σ) x_{σ(1)} ⊗ ... ⊗ x_{σ(n)}  into B_n(U𝔤).
  Vec e_map(int n, const Vec& wedge) const;
  // 1 ⊗ e into E_n(U𝔤).
  Vec one_tensor_e(int n, const Vec& res_words) const;

  // Canonical representative of θ(x0∧...∧xn) = x0 ⊗ e(x1∧...∧xn) in C_n(U𝔤);
  // well defined only modulo im(1-t).
  Vec theta(int wedge_degree, const Vec& wedge) const;

 private:
  LieAdaptedForm ad_;
};

// Exact Lie algebra homology dimensions of (∧𝔤, d) for degrees 0..cap.
std::vector<std::size_t> lie_homology_dims(const CEComplex& ce, int cap);

}  // namespace hopfcyc
