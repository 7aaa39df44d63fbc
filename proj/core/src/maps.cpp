#include "hopfcyc/maps.hpp"

namespace hopfcyc {

KappaHomotopy::KappaHomotopy(std::shared_ptr<const HopfComplexes> source,
                             std::function<Vec(int, const Vec&)> f,
                             std::function<Vec(int, const Vec&)> s_target,
                             std::function<Vec(const Vec&, const Vec&)> act_target,
                             HomotopyKind kind)
    : E_(std::move(source)),
      f_(std::move(f)),
      s_(std::move(s_target)),
      act_(std::move(act_target)),
      kind_(kind) {}

Vec KappaHomotopy::apply(int n, const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) add_scaled(out, apply_word(n, w), c);
  return out;
}

Vec KappaHomotopy::apply_word(int n, const std::string& w) const {
  auto key = std::make_pair(n, w);
  auto hit = memo_.find(key);
  if (hit != memo_.end()) return hit->second;

  auto parts = word_split(w);
  std::string head = parts[0];
  parts[0] = E_->H().unit_key();
  Vec base = unit_vec(word_key(parts));

  Vec g = f_(n, base);
  if (n > 0) {
    Vec db = E_->e_dprime(n, base);
    Rat s = kind_ == HomotopyKind::Contraction ? Rat(1) : Rat(-1);
    add_scaled(g, apply(n - 1, db), s);
  }
  Vec value = act_(unit_vec(head), s_(n, g));
  memo_.emplace(key, value);
  return value;
}

Upsilon::Upsilon(std::shared_ptr<const HopfComplexes> E) : E_(std::move(E)) {}

Vec Upsilon::prime(int k, int n, const Vec& v) const {
  if (k == 0) return v;
  Vec out;
  for (const auto& [w, c] : v) add_scaled(out, prime_word(k, n, w), c);
  return out;
}

Vec Upsilon::prime_word(int k, int n, const std::string& w) const {
  auto key = std::make_tuple(k, n, w);
  auto hit = memo_.find(key);
  if (hit != memo_.end()) return hit->second;

  auto parts = word_split(w);
  std::string head = parts[0];
  parts[0] = E_->H().unit_key();
  Vec base = unit_vec(word_key(parts));

  // G = Υ'^k(∂' base) - B'(Υ'^{k-1} base); value = head · s(G).
  Vec g;
  if (n > 0) g = prime(k, n - 1, E_->e_dprime(n, base));
  Vec lower = prime(k - 1, n, base);
  add_scaled(g, E_->e_Bprime(n + 2 * (k - 1), lower, BprimeForm::Defining), Rat(-1));
  Vec value = E_->e_act(unit_vec(head), E_->e_contract(g));
  memo_.emplace(key, value);
  return value;
}

Vec Upsilon::on_b(int k, int n, const Vec& v) const {
  return E_->b_project(prime(k, n, E_->b_lift(v)));
}

std::vector<Vec> Upsilon::hn_prime_normalized(int P, int n, const Vec& v) const {
  std::vector<Vec> out;
  for (int i = 0; i <= P; ++i)
    out.push_back(E_->e_normalize(n + 2 * i, prime(i, n, v)));
  return out;
}

std::vector<Vec> Upsilon::hn_b_normalized(int P, int n, const Vec& v) const {
  std::vector<Vec> out;
  for (int i = 0; i <= P; ++i)
    out.push_back(E_->b_normalize(n + 2 * i, on_b(i, n, v)));
  return out;
}

Vec tau_map(const HopfComplexes& E, int n, const Vec& b_words) {
  const HopfAlgebra& H = E.H();
  if (n == 0) {
    Vec out;
    for (const auto& [w, c] : b_words) {
      if (!w.empty()) throw ShapeError("tau_0 expects the empty word");
      add_scaled(out, unit_vec(H.unit_key()), c);
    }
    return out;
  }
  Vec out;
  for (const auto& [w, c] : b_words) {
    auto p = word_split(w);
    // τ(h_1⊗...⊗h_n) = S(h_1^{(0)}···h_n^{(0)}) ⊗ h_1^{(1)} ⊗ ... ⊗ h_n^{(1)}
    std::vector<Vec> legs(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      legs[i] = H.comul_key(p[i]);
    }
    std::vector<std::vector<std::string>> chosen(p.size());
    std::function<void(std::size_t, Rat)> rec = [&](std::size_t i, Rat lc) {
      if (i == p.size()) {
        Vec prod = unit_vec(H.unit_key());
        for (std::size_t r = 0; r < p.size(); ++r)
          prod = H.mul(prod, unit_vec(chosen[r][0]));
        Vec s = H.antipode(prod);
        for (const auto& [sk, sc] : s) {
          std::string word = sk;
          for (std::size_t r = 0; r < p.size(); ++r) word += "|" + chosen[r][1];
          add_scaled(out, Vec{{word, lc * sc}}, Rat(1));
        }
        return;
      }
      for (const auto& [lw, lcc] : legs[i]) {
        chosen[i] = word_split(lw);
        rec(i + 1, lc * lcc);
      }
    };
    rec(0, c);
  }
  if (E.cap()) {
    Vec trimmed;
    for (const auto& [w, c] : out) {
      int lv = 0;
      for (const auto& p : word_split(w)) lv += E.H().adapted_level(p);
      if (lv < *E.cap()) trimmed.emplace(w, c);
    }
    return trimmed;
  }
  return out;
}

Vec c_lift_coordinate(const Upsilon& ups, int k, int n, const Vec& v) {
  return tau_map(ups.complexes(), n + 2 * k, ups.on_b(k, n, v));
}

}  // namespace hopfcyc
