#pragma once

#include "hopfcyc/mixed.hpp"

namespace hopfcyc {

// Degreewise evaluator with chain-map bookkeeping: d∘f = sign · f∘d is the
// contract the checkers verify on the stated window.
struct ChainMapEval {
  std::string name;
  int degree_shift = 0;  // target degree = source degree + shift
  int sign = 1;
  std::function<Vec(int, const Vec&)> eval;
};

// A-linear chain homotopy built by the contraction recursion: the source is
// E(H) (split through slot 0), the target any complex with a contracting
// homotopy s satisfying d s + s d = 1 - ηε and an H-action.
//
//   Contraction:  d∘κ - κ∘d = f   for f anticommuting with d (odd shift);
//   NullHomotopy: d∘h + h∘d = f   for f commuting with d (even shift),
//                                 with f vanishing in source degree 0.
//
// In both cases κ(a⊗v) = a·s((f ± κ∘d)(1⊗v)); values are memoized per word.
enum class HomotopyKind { Contraction, NullHomotopy };

class KappaHomotopy {
 public:
  KappaHomotopy(std::shared_ptr<const HopfComplexes> source,
                std::function<Vec(int, const Vec&)> f,
                std::function<Vec(int, const Vec&)> s_target,
                std::function<Vec(const Vec&, const Vec&)> act_target,
                HomotopyKind kind);

  Vec apply(int n, const Vec& v) const;

 private:
  std::shared_ptr<const HopfComplexes> E_;
  std::function<Vec(int, const Vec&)> f_, s_;
  std::function<Vec(const Vec&, const Vec&)> act_;
  HomotopyKind kind_;
  mutable std::map<std::pair<int, std::string>, Vec> memo_;

  Vec apply_word(int n, const std::string& w) const;
};

// The negative-cyclic lift Υ' (on E(H), unnormalized words) and Υ = k ⊗_H Υ'
// (on B(H)). Υ'^0 = 1 and Υ'^k is the chain contraction of -B'Υ'^{k-1}, so
// ∂'Υ'^k - Υ'^k∂' = -B'Υ'^{k-1} holds exactly; B' is the defining form.
class Upsilon {
 public:
  explicit Upsilon(std::shared_ptr<const HopfComplexes> E);

  const HopfComplexes& complexes() const { return *E_; }

  Vec prime(int k, int n, const Vec& v) const;  // Υ'^k : E_n -> E_{n+2k}
  Vec on_b(int k, int n, const Vec& v) const;   // Υ^k  : B_n -> B_{n+2k}

  // Full HN(M') value of Υ' on x ∈ E_n: coordinates 0..P (normalized words).
  std::vector<Vec> hn_prime_normalized(int P, int n, const Vec& v) const;
  std::vector<Vec> hn_b_normalized(int P, int n, const Vec& v) const;

 private:
  std::shared_ptr<const HopfComplexes> E_;
  mutable std::map<std::tuple<int, int, std::string>, Vec> memo_;

  Vec prime_word(int k, int n, const std::string& w) const;
};

// τ : B(H) -> C(H), τ_0 = η.
Vec tau_map(const HopfComplexes& E, int n, const Vec& b_words);

// c = τ∘Υ, coordinate k: B_n(H) -> C_{n+2k}(H) (unnormalized words).
Vec c_lift_coordinate(const Upsilon& ups, int k, int n, const Vec& v);

}  // namespace hopfcyc
