#pragma once

#include <limits>

#include "hopfcyc/lie.hpp"

namespace hopfcyc {

// PBW monomial over the ordered (adapted) Lie basis, as an exponent vector.
using PbwMonomial = std::vector<unsigned>;

std::string pbw_key(const std::vector<std::string>& names, const PbwMonomial& m);
PbwMonomial pbw_parse(const FreeModule& lie_module, const std::string& key);
unsigned pbw_degree(const PbwMonomial& m);

// U𝔤, optionally truncated at the augmentation-ideal power I^N. The basis is
// LCS-adapted so the I-adic level of a monomial is the weight sum of its
// letters; products/antipodes prune branches eagerly at level >= N, which is
// exact because straightening never lowers total weight.
class Enveloping {
 public:
  Enveloping(LieAlgebraSpec::AdaptedForm adapted, std::optional<int> trunc);

  const LieAlgebraSpec& lie() const { return adapted_.lie; }
  const LieAlgebraSpec::AdaptedForm& adapted_form() const { return adapted_; }
  std::optional<int> trunc() const { return trunc_; }
  int precision() const { return trunc_ ? *trunc_ : kExactPrecision; }

  int level_key(const std::string& key) const;  // I-adic level of a monomial
  Vec mul_keys(const std::string& a, const std::string& b) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec antipode_key(const std::string& key) const;
  Vec power(const Vec& u, unsigned k) const;

  // 𝔤 (original user coordinates) -> degree-1 monomials of U.
  Vec from_lie(const Vec& lie_vec_user) const;
  // Inverse on the degree-1 span; throws when higher monomials are present.
  Vec to_lie(const Vec& u) const;

  // exp: I -> 1+I and log: 1+I -> I; finite by truncation (requires trunc).
  Vec exp_aug(const Vec& u) const;
  Vec log_unit(const Vec& v) const;

  // All monomials of level < trunc, lexicographically sorted keys.
  std::vector<std::string> carrier() const;

  // Straightened product of an arbitrary letter word with coefficient c.
  Vec word_to_basis(const std::vector<unsigned>& word, const Rat& c) const;

 private:
  LieAlgebraSpec::AdaptedForm adapted_;
  std::optional<int> trunc_;
  int weight(const PbwMonomial& m) const;
};

// log(exp(a)·exp(b)) for a nilpotent Lie algebra; a, b, result in the original
// user coordinates.
Vec bch_product(const LieAlgebraSpec& lie, const Vec& a, const Vec& b);

}  // namespace hopfcyc
