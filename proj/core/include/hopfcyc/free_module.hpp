#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfcyc/rational.hpp"

namespace hopfcyc {

// Sparse vector over symbolic basis keys. No zero coefficients are stored;
// std::map gives deterministic (lexicographic) iteration, which the pivoting
// rules and report output rely on.
using Vec = std::map<std::string, Rat>;

void add_scaled(Vec& dst, const Vec& src, const Rat& c);
Vec scaled(const Vec& v, const Rat& c);
Vec sum(const Vec& a, const Vec& b);
Vec diff(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
void set_coeff(Vec& v, const std::string& key, const Rat& c);  // drops zeros
Rat coeff(const Vec& v, const std::string& key);
Vec unit_vec(const std::string& key);
std::string vec_str(const Vec& v);  // "c1*k1 + c2*k2", "0" when empty

// Tensor-word keys: factors joined by '|'. Basis names must not contain '|',
// which FreeModule::validate_name enforces for user-supplied names.
std::string word_key(const std::vector<std::string>& parts);
std::vector<std::string> word_split(const std::string& key);

// Finitely generated free module with a named, ordered basis.
class FreeModule {
 public:
  FreeModule() = default;
  explicit FreeModule(std::vector<std::string> basis);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::string& key(std::size_t i) const { return basis_[i]; }
  bool contains(const std::string& key) const { return index_.count(key) != 0; }
  std::size_t index(const std::string& key) const;
  bool contains_vec(const Vec& v) const;
  bool operator==(const FreeModule& o) const { return basis_ == o.basis_; }

  static void validate_name(const std::string& name);

 private:
  std::vector<std::string> basis_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hopfcyc
