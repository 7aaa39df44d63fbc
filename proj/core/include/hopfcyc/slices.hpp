#pragma once

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Connes' degree +1 operator in its three computable guises: the definition
// (1-t)s'N, the variant -t s'' N, and the closed per-term sum. The first two
// agree with the third only after normalization.
enum class BprimeForm { Defining, DoublePrime, Explicit };

// Enumerate '|'-words with the given per-slot alphabets, dropping words whose
// summed level reaches the cap. Deterministic: slots filled left to right in
// alphabet order.
std::vector<std::string> enumerate_words(
    const std::vector<const std::vector<std::string>*>& per_slot,
    const std::function<int(const std::string&)>& level, std::optional<int> cap);

// Degreewise operators of E(H), B(H) and R(H) for a cocommutative Hopf
// algebra, optionally truncated by the adic filtration (total level < cap).
// Raw elements are Vecs over words of natural basis keys; normalized and
// relative presentations use adapted keys.
class HopfComplexes {
 public:
  HopfComplexes(HopfPtr H, std::optional<int> cap);

  const HopfAlgebra& H() const { return *H_; }
  HopfPtr H_ptr() const { return H_; }
  std::optional<int> cap() const { return cap_; }

  // --- E(H): degree n words have n+1 slots --------------------------------
  Vec e_face(int n, int i, const Vec& v) const;    // μ_i
  Vec e_degen(int n, int j, const Vec& v) const;   // s_j
  Vec e_dprime(int n, const Vec& v) const;         // ∂' = Σ (-1)^i μ_i
  Vec e_contract(const Vec& v) const;              // s(x) = 1 ⊗ x
  Vec e_t(int n, const Vec& v) const;              // cyclic operator t = βλα
  Vec e_sprime(int n, const Vec& v) const;         // s' = (-1)^{n+1} t s_n, signfree form
  Vec e_norm_sum(int n, const Vec& v) const;       // N = Σ_{i=0}^n t^i
  Vec e_Bprime(int n, const Vec& v, BprimeForm form) const;
  Vec e_alpha(int n, const Vec& v) const;          // E -> R
  Vec e_beta(int n, const Vec& v) const;           // R -> E
  Vec e_act(const Vec& a, const Vec& v) const;     // H-action: multiply slot 0
  Vec r_act(int n, const std::string& a, const Vec& v) const;  // diagonal action

  // --- R(H) ----------------------------------------------------------------
  Vec r_face(int n, int i, const Vec& v) const;    // ε_i
  Vec r_degen(int n, int i, const Vec& v) const;   // Δ_i
  Vec r_lambda(int n, const Vec& v) const;         // (-1)^n rotation

  // --- B(H) = k ⊗_H E(H): degree n words have n slots ----------------------
  Vec b_lift(const Vec& v) const;                  // prepend the unit
  Vec b_project(const Vec& v) const;               // ε on slot 0
  Vec b_face(int n, int i, const Vec& v) const;
  Vec b_degen(int n, int j, const Vec& v) const;
  Vec b_del(int n, const Vec& v) const;            // ∂ = 1 ⊗ ∂'
  Vec b_t(int n, const Vec& v) const;
  Vec b_B(int n, const Vec& v, BprimeForm form) const;

  // --- normalized mixed complexes M'(H) = (E_norm, ∂', B') and
  //     M(H) = (B_norm, ∂, B); elements are adapted-key words -----------------
  Vec mprime_b(int n, const Vec& v) const;
  Vec mprime_B(int n, const Vec& v) const;
  Vec m_b(int n, const Vec& v) const;
  Vec m_B(int n, const Vec& v) const;

  // --- adapted coordinates, normalization, filtration ----------------------
  Vec to_adapted_words(const Vec& v) const;
  Vec from_adapted_words(const Vec& v) const;
  // Normalized representative: adapted words, words with a unit in a slot
  // >= first_reduced_slot dropped.
  Vec normalize(const Vec& v, int first_reduced_slot) const;
  Vec e_normalize(int n, const Vec& v) const { (void)n; return normalize(v, 1); }
  Vec b_normalize(int n, const Vec& v) const { (void)n; return normalize(v, 0); }
  int word_level(const std::string& adapted_word) const;
  Vec trim_adapted(const Vec& adapted_words) const;  // quotient by F_cap

  // --- materialization (requires a finite carrier) --------------------------
  FreeModule e_module(int n) const;
  FreeModule b_module(int n) const;
  FreeModule e_module_norm(int n) const;
  FreeModule b_module_norm(int n) const;
  FreeModule b_module_rel(int n) const;       // >= 1 slot of level >= 1
  FreeModule b_module_rel_norm(int n) const;  // normalized relative

 private:
  HopfPtr H_;
  std::optional<int> cap_;
  std::vector<std::string> natural_carrier_;   // empty when symbolic
  std::vector<std::string> adapted_carrier_;   // empty when symbolic
  std::vector<std::string> adapted_reduced_;   // adapted carrier minus unit

  Vec trim_natural(Vec v) const;
  void require_finite(const char* what) const;
};

// Minimal algebra context for the canonical cyclic module C(A): works for
// plain associative algebras and for the algebra underlying a Hopf algebra.
struct AlgebraLike {
  std::string name;
  std::function<Vec(const std::string&, const std::string&)> mul_keys;
  Vec unit;  // expansion of 1 in natural keys
  std::function<Vec(const std::string&)> to_adapted;
  std::function<Vec(const std::string&)> from_adapted;
  std::function<int(const std::string&)> adapted_level;  // on adapted keys
  std::string adapted_unit_key;
  std::vector<std::string> natural_carrier;  // empty when symbolic
  std::vector<std::string> adapted_carrier;
  int precision = kExactPrecision;
};

AlgebraLike alg_from_spec(std::shared_ptr<const AlgebraSpec> a, std::string name);
AlgebraLike alg_from_hopf(HopfPtr h);

// C(A): degree n words have n+1 slots.
class CanonicalComplexes {
 public:
  CanonicalComplexes(AlgebraLike A, std::optional<int> cap);

  const AlgebraLike& A() const { return A_; }
  std::optional<int> cap() const { return cap_; }

  Vec c_face(int n, int i, const Vec& v) const;   // d_i, wraparound at i = n
  Vec c_degen(int n, int j, const Vec& v) const;  // s_j inserts the unit
  Vec c_t(int n, const Vec& v) const;             // (-1)^n rotation
  Vec c_b(int n, const Vec& v) const;             // Hochschild boundary
  Vec c_extra(const Vec& v) const;                // 1 ⊗ x
  Vec c_B(int n, const Vec& v) const;             // (1-t) s N

  Vec to_adapted_words(const Vec& v) const;
  Vec from_adapted_words(const Vec& v) const;
  Vec normalize(const Vec& v) const;              // interior slots reduced
  Vec relative_part(const Vec& adapted_words) const;   // kill all-level-0 words
  Vec quotient_part(const Vec& adapted_words) const;   // image in C(A/I)
  int word_level(const std::string& adapted_word) const;
  Vec trim_adapted(const Vec& adapted_words) const;

  FreeModule c_module(int n) const;
  FreeModule c_module_norm(int n) const;
  FreeModule c_module_rel_norm(int n) const;  // normalized relative slice

 private:
  AlgebraLike A_;
  std::optional<int> cap_;
  std::vector<std::string> adapted_reduced_;
};

}  // namespace hopfcyc
