#pragma once

#include <memory>

#include "hopfcyc/algebra.hpp"
#include "hopfcyc/pbw.hpp"

namespace hopfcyc {

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

struct Truncation {
  HopfPtr hopf;                       // finite model of H / F_N
  std::function<Vec(const Vec&)> push;  // transport of elements (natural keys)
};

// Cocommutative Hopf algebra descriptor. Elements are Vecs over symbolic
// basis keys; tensors over '|'-words. Two coordinate systems per carrier:
// "natural" keys (group elements, PBW monomials) and "adapted" keys realizing
// H = k·1 ⊕ ker ε with an I-adic level on each adapted key. For enveloping
// algebras both coincide.
//
// Descriptors are immutable; internal memo caches are not synchronized, so a
// descriptor must not be shared across threads mid-computation.
class HopfAlgebra {
 public:
  virtual ~HopfAlgebra() = default;

  virtual std::string name() const = 0;
  virtual std::string unit_key() const = 0;
  virtual Vec mul_keys(const std::string& a, const std::string& b) const = 0;
  virtual Rat counit_key(const std::string& k) const = 0;
  virtual Vec comul_key(const std::string& k) const = 0;  // over 2-slot words
  virtual Vec antipode_key(const std::string& k) const = 0;

  // N such that the descriptor is exact mod I^N (kExactPrecision = no loss).
  virtual int precision() const = 0;
  virtual std::optional<std::vector<std::string>> carrier_keys() const { return std::nullopt; }

  virtual Vec to_adapted_key(const std::string& natural_key) const = 0;
  virtual Vec from_adapted_key(const std::string& adapted_key) const = 0;
  virtual int adapted_level(const std::string& adapted_key) const = 0;
  virtual std::optional<std::vector<std::string>> adapted_carrier_keys() const {
    return std::nullopt;
  }

  virtual Truncation truncate(int N) const = 0;

  Vec mul(const Vec& a, const Vec& b) const;
  Rat counit(const Vec& v) const;
  Vec comul(const Vec& v) const;
  Vec antipode(const Vec& v) const;
  Vec to_adapted(const Vec& natural) const;
  Vec from_adapted(const Vec& adapted) const;

  // Δ^{(n)} with each output factor valid mod I^M. Budget rule: requires the
  // descriptor exact mod I^{n·M} (linear rule; the sharp bound would be
  // n(M-1)+1, not relied upon). Throws PrecisionError stating the required
  // level otherwise.
  Vec delta_iter(const Vec& h, int factors, int per_factor_precision) const;
};

// U𝔤/I^N (or untruncated U𝔤 for symbolic work). Natural = adapted = PBW keys.
class EnvelopingHopf : public HopfAlgebra {
 public:
  EnvelopingHopf(LieAlgebraSpec lie_user, std::optional<int> trunc);
  explicit EnvelopingHopf(Enveloping env);

  const Enveloping& env() const { return env_; }

  std::string name() const override;
  std::string unit_key() const override { return "1"; }
  Vec mul_keys(const std::string& a, const std::string& b) const override;
  Rat counit_key(const std::string& k) const override;
  Vec comul_key(const std::string& k) const override;
  Vec antipode_key(const std::string& k) const override;
  int precision() const override { return env_.precision(); }
  std::optional<std::vector<std::string>> carrier_keys() const override;
  Vec to_adapted_key(const std::string& k) const override { return unit_vec(k); }
  Vec from_adapted_key(const std::string& k) const override { return unit_vec(k); }
  int adapted_level(const std::string& k) const override { return env_.level_key(k); }
  std::optional<std::vector<std::string>> adapted_carrier_keys() const override {
    return carrier_keys();
  }
  Truncation truncate(int N) const override;

 private:
  Enveloping env_;
  mutable std::map<std::string, Vec> comul_cache_;
};

// Q[G] for the Malcev group G = exp 𝔤 of a nilpotent Lie algebra: symbolic
// carrier (group elements on demand), exact operations, Δg = g⊗g. Natural
// keys "exp(...)", adapted keys the unit and "d:exp(...)" for g - 1.
class MalcevGroupHopf : public HopfAlgebra {
 public:
  explicit MalcevGroupHopf(LieAlgebraSpec lie_user);

  const LieAlgebraSpec& lie() const { return lie_; }
  int group_class() const { return class_; }

  std::string key_of(const Vec& lie_coords) const;   // canonical group key
  Vec log_of(const std::string& group_key) const;    // inverse

  std::string name() const override;
  std::string unit_key() const override;
  Vec mul_keys(const std::string& a, const std::string& b) const override;
  Rat counit_key(const std::string&) const override { return Rat(1); }
  Vec comul_key(const std::string& k) const override;
  Vec antipode_key(const std::string& k) const override;
  int precision() const override { return kExactPrecision; }
  Vec to_adapted_key(const std::string& k) const override;
  Vec from_adapted_key(const std::string& k) const override;
  int adapted_level(const std::string& k) const override;
  Truncation truncate(int N) const override;

  // The algebra map Q[G] -> U𝔤/I^N, g = exp ξ ↦ truncated exp series.
  Vec embed_key(const std::string& group_key, const Enveloping& env) const;

 private:
  LieAlgebraSpec lie_;
  LieAlgebraSpec::AdaptedForm adapted_;
  int class_ = 1;
  Enveloping bch_env_;  // U𝔤/I^{class+1} for the group law
};

// k[G] for a finite group given by a multiplication table.
class FiniteGroupHopf : public HopfAlgebra {
 public:
  FiniteGroupHopf(std::vector<std::string> elements,
                  std::map<std::pair<std::string, std::string>, std::string> table,
                  std::string identity);

  std::string name() const override { return "k[G:finite]"; }
  std::string unit_key() const override { return identity_; }
  Vec mul_keys(const std::string& a, const std::string& b) const override;
  Rat counit_key(const std::string&) const override { return Rat(1); }
  Vec comul_key(const std::string& k) const override;
  Vec antipode_key(const std::string& k) const override;
  int precision() const override { return kExactPrecision; }
  std::optional<std::vector<std::string>> carrier_keys() const override { return elements_; }
  Vec to_adapted_key(const std::string& k) const override;
  Vec from_adapted_key(const std::string& k) const override;
  int adapted_level(const std::string& k) const override;
  std::optional<std::vector<std::string>> adapted_carrier_keys() const override;
  Truncation truncate(int) const override {
    throw UnsupportedError("finite group algebras are not truncated");
  }

 private:
  std::vector<std::string> elements_;
  std::map<std::pair<std::string, std::string>, std::string> table_;
  std::string identity_;
  std::map<std::string, std::string> inverse_;
  std::vector<int> levels_;  // I_G-adic level of g-1, per element
};

// Wraps another descriptor and replaces the coproduct on selected keys;
// exists to let the axiom checker demonstrate failure witnesses.
class CorruptedComulHopf : public HopfAlgebra {
 public:
  CorruptedComulHopf(HopfPtr inner, std::map<std::string, Vec> override_comul);
  std::string name() const override { return inner_->name() + "[corrupted]"; }
  std::string unit_key() const override { return inner_->unit_key(); }
  Vec mul_keys(const std::string& a, const std::string& b) const override {
    return inner_->mul_keys(a, b);
  }
  Rat counit_key(const std::string& k) const override { return inner_->counit_key(k); }
  Vec comul_key(const std::string& k) const override;
  Vec antipode_key(const std::string& k) const override { return inner_->antipode_key(k); }
  int precision() const override { return inner_->precision(); }
  std::optional<std::vector<std::string>> carrier_keys() const override {
    return inner_->carrier_keys();
  }
  Vec to_adapted_key(const std::string& k) const override { return inner_->to_adapted_key(k); }
  Vec from_adapted_key(const std::string& k) const override {
    return inner_->from_adapted_key(k);
  }
  int adapted_level(const std::string& k) const override { return inner_->adapted_level(k); }
  std::optional<std::vector<std::string>> adapted_carrier_keys() const override {
    return inner_->adapted_carrier_keys();
  }
  Truncation truncate(int N) const override { return inner_->truncate(N); }

 private:
  HopfPtr inner_;
  std::map<std::string, Vec> override_;
};

struct AxiomCheck {
  std::string axiom;
  bool pass = false;
  std::string witness;  // element(s) + both sides when failing
};

// Exact verification of (co)associativity, (co)unit laws, antipode identity,
// cocommutativity and S²=1 on a finite sample: for finite carriers, all basis
// keys of level <= cap; for symbolic carriers, the provided sample keys.
std::vector<AxiomCheck> check_hopf_axioms(const HopfAlgebra& h,
                                          const std::vector<std::string>& sample,
                                          std::size_t max_tuples = 8);

// Deterministic sample of group keys for symbolic Malcev descriptors.
std::vector<std::string> malcev_sample(const MalcevGroupHopf& g, std::size_t count);

}  // namespace hopfcyc
