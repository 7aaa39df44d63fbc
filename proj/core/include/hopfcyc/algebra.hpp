#pragma once

#include "hopfcyc/lie.hpp"

namespace hopfcyc {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgebraQuotient;

// Unital associative algebra over Q by structure constants, with an optional
// distinguished two-sided nilpotent ideal. mult[i][j] = e_i * e_j.
class AlgebraSpec {
 public:
  AlgebraSpec(std::vector<std::string> names, Vec unit,
              std::vector<std::vector<Vec>> mult, std::vector<Vec> ideal_basis);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const FreeModule& module() const { return module_; }
  const Vec& unit() const { return unit_; }
  const std::vector<Vec>& ideal_basis() const { return ideal_basis_; }
  bool has_ideal() const { return !ideal_basis_.empty(); }

  Vec mul_keys(const std::string& a, const std::string& b) const;
  Vec mul(const Vec& a, const Vec& b) const;

  // Associativity + unit laws on all basis triples/elements; two-sidedness of
  // the ideal. Throws ValidationError with a witness.
  void validate() const;

  // J ⊇ J² ⊇ ... computed until zero or stable; nilpotency index = least m
  // with J^m = 0. Throws UnsupportedError when the ideal is not nilpotent.
  const std::vector<Span>& ideal_powers() const;
  int nilpotency_index() const;

  // Adapted basis: deterministic basis refining the flag A ⊇ J ⊇ J² ⊇ ...
  // containing the unit as an explicit direction. level = max j with v ∈ J^j
  // (0 outside J).
  struct Adapted {
    std::vector<std::string> names;
    std::vector<int> levels;
    LinMap to_adapted, from_adapted;
    std::size_t unit_index;  // position of the unit direction
  };
  const Adapted& adapted() const;

  int level_of(const Vec& v) const;  // max j with v ∈ J^j (0 if none)

  // exp: J -> 1+J, log: 1+J -> J; exact finite series. Throws DomainError on
  // inputs outside J resp. 1+J.
  Vec exp_ideal(const Vec& a) const;
  Vec log_unit(const Vec& v) const;

  // A/J on the level-0 adapted basis (unit direction included).
  using Quotient = AlgebraQuotient;
  Quotient quotient_by_ideal() const;

  // Associated Lie algebra on a chosen subspace (commutator bracket); the
  // subspace must be closed under commutators.
  LieAlgebraSpec commutator_lie(const std::vector<std::string>& sub_names,
                                const std::vector<Vec>& sub_vectors) const;

 private:
  std::vector<std::string> names_;
  FreeModule module_;
  Vec unit_;
  std::vector<std::vector<Vec>> mult_;
  std::vector<Vec> ideal_basis_;
  mutable std::optional<std::vector<Span>> powers_;
  mutable std::optional<Adapted> adapted_;
};

struct AlgebraQuotient {
  AlgebraSpec algebra;
  LinMap projection;  // A -> A/J coordinates
};

// M_n(A): basis keys "E<i><j>:<aname>" (1-based positions).
AlgebraSpec matrix_algebra(const AlgebraSpec& a, int n);
std::string matrix_key(int i, int j, const std::string& aname);

// Strict partial order on {0..n-1} as a pair set.
struct TriangularSpec {
  int n = 1;
  std::vector<std::pair<int, int>> sigma;
  AlgebraSpec base;

  void validate() const;  // irreflexive + transitive, indices in range
  bool less(int i, int j) const;
};

// 𝒯_n^σ(A,I) with its unitalization, Lie algebra and ambient embedding.
struct TriangularBlock {
  AlgebraSpec ambient;            // M_n(A)
  std::vector<std::string> t_names;
  std::vector<Vec> t_vectors;     // 𝒯-basis as ambient vectors
  AlgebraSpec unital;             // Q + 𝒯, ideal = 𝒯
  LinMap embed;                   // unital -> ambient coordinates (unit -> 1)
  LieAlgebraSpec t_lie;           // 𝒯 with commutator bracket
  int nilpotency_index = 0;       // least m with 𝒯^m = 0
};

TriangularBlock build_triangular(const TriangularSpec& spec);

}  // namespace hopfcyc
