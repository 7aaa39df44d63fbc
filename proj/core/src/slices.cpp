#include "hopfcyc/slices.hpp"

#include <algorithm>
#include <functional>

namespace hopfcyc {

namespace {

inline Rat sign_pow(int k) { return (k % 2 == 0) ? Rat(1) : Rat(-1); }

void accumulate(Vec& dst, const std::string& key, const Rat& c) {
  auto it = dst.find(key);
  if (it == dst.end()) {
    if (c != 0) dst.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) dst.erase(it);
  }
}

// Cartesian product of per-slot vectors of single keys into '|'-words.
Vec word_outer(const std::vector<Vec>& slots, const Rat& coeff) {
  Vec acc{{std::string(), coeff}};
  bool first = true;
  for (const auto& sv : slots) {
    Vec next;
    for (const auto& [w, c] : acc)
      for (const auto& [k, kc] : sv) accumulate(next, first ? k : w + "|" + k, c * kc);
    acc = std::move(next);
    first = false;
  }
  return acc;
}

// Sweedler legs of one key: Δ^{(parts)}(key) as a Vec over part-words.
Vec delta_legs(const HopfAlgebra& H, const std::string& key, int parts) {
  Vec words = unit_vec(key);
  for (int step = 1; step < parts; ++step) {
    Vec next;
    for (const auto& [w, c] : words) {
      auto p = word_split(w);
      for (const auto& [pw, pc] : H.comul_key(p[0])) {
        std::string nw = pw;
        for (std::size_t i = 1; i < p.size(); ++i) nw += "|" + p[i];
        accumulate(next, nw, c * pc);
      }
    }
    words = std::move(next);
  }
  return words;
}

// Iterate over the cartesian product of leg expansions.
void for_each_choice(const std::vector<Vec>& legs,
                     const std::function<void(const std::vector<std::vector<std::string>>&,
                                              const Rat&)>& fn) {
  std::vector<std::vector<std::string>> chosen(legs.size());
  std::function<void(std::size_t, Rat)> rec = [&](std::size_t i, Rat c) {
    if (i == legs.size()) {
      fn(chosen, c);
      return;
    }
    for (const auto& [w, wc] : legs[i]) {
      chosen[i] = word_split(w);
      rec(i + 1, c * wc);
    }
  };
  rec(0, Rat(1));
}

Vec mul_chain(const HopfAlgebra& H, const std::vector<std::string>& keys) {
  if (keys.empty()) return unit_vec(H.unit_key());
  Vec acc = unit_vec(keys[0]);
  for (std::size_t i = 1; i < keys.size(); ++i) acc = H.mul(acc, unit_vec(keys[i]));
  return acc;
}

}  // namespace

std::vector<std::string> enumerate_words(
    const std::vector<const std::vector<std::string>*>& per_slot,
    const std::function<int(const std::string&)>& level, std::optional<int> cap) {
  std::vector<std::string> out;
  std::vector<std::string> parts(per_slot.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int lv) {
    if (i == per_slot.size()) {
      out.push_back(word_key(parts));
      return;
    }
    for (const auto& k : *per_slot[i]) {
      int nlv = lv + level(k);
      if (cap && nlv >= *cap) continue;
      parts[i] = k;
      rec(i + 1, nlv);
    }
  };
  rec(0, 0);
  return out;
}

HopfComplexes::HopfComplexes(HopfPtr H, std::optional<int> cap)
    : H_(std::move(H)), cap_(cap) {
  if (cap_) {
    if (H_->precision() == kExactPrecision)
      throw ConfigError("cap a slice only over a truncated Hopf algebra");
    if (*cap_ > H_->precision())
      throw ConfigError("slice cap exceeds the descriptor's precision");
  }
  if (auto c = H_->carrier_keys()) natural_carrier_ = *c;
  if (auto c = H_->adapted_carrier_keys()) {
    adapted_carrier_ = *c;
    for (const auto& k : adapted_carrier_)
      if (k != H_->unit_key()) adapted_reduced_.push_back(k);
  }
}

void HopfComplexes::require_finite(const char* what) const {
  if (adapted_carrier_.empty())
    throw ConfigError(std::string(what) + " needs a finite carrier; truncate first");
}

Vec HopfComplexes::trim_natural(Vec v) const {
  if (!cap_) return v;
  Vec out;
  for (const auto& [w, c] : v) {
    int lv = 0;
    for (const auto& p : word_split(w)) lv += H_->adapted_level(p);
    if (lv < *cap_) out.emplace(w, c);
  }
  return out;
}

Vec HopfComplexes::e_face(int n, int i, const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    if ((int)p.size() != n + 1) throw ShapeError("word degree mismatch in e_face");
    if (i < n) {
      Vec prod = H_->mul_keys(p[(std::size_t)i], p[(std::size_t)i + 1]);
      for (const auto& [mk, mc] : prod) {
        std::vector<std::string> q;
        for (int r = 0; r <= n; ++r) {
          if (r == i)
            q.push_back(mk);
          else if (r != i + 1)
            q.push_back(p[(std::size_t)r]);
        }
        accumulate(out, word_key(q), c * mc);
      }
    } else {
      Rat e = H_->counit_key(p[(std::size_t)n]);
      if (e == 0) continue;
      std::vector<std::string> q(p.begin(), p.end() - 1);
      accumulate(out, word_key(q), c * e);
    }
  }
  return trim_natural(std::move(out));
}

Vec HopfComplexes::e_degen(int n, int j, const Vec& v) const {
  (void)n;
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    std::vector<std::string> q;
    for (std::size_t r = 0; r < p.size(); ++r) {
      q.push_back(p[r]);
      if ((int)r == j) q.push_back(H_->unit_key());
    }
    accumulate(out, word_key(q), c);
  }
  return out;
}

Vec HopfComplexes::e_dprime(int n, const Vec& v) const {
  if (n == 0) return {};
  Vec out;
  for (int i = 0; i <= n; ++i) add_scaled(out, e_face(n, i, v), sign_pow(i));
  return out;
}

Vec HopfComplexes::e_contract(const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) accumulate(out, H_->unit_key() + "|" + w, c);
  return out;
}

Vec HopfComplexes::e_t(int n, const Vec& v) const {
  if (n == 0) return v;
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    std::vector<Vec> legs((std::size_t)n);
    for (int i = 1; i <= n; ++i)
      legs[(std::size_t)i - 1] = delta_legs(*H_, p[(std::size_t)i], i < n ? 3 : 2);
    for_each_choice(legs, [&](const std::vector<std::vector<std::string>>& ch, const Rat& lc) {
      std::vector<std::string> head{p[0]};
      std::vector<std::string> tailS;
      for (int i = 1; i <= n; ++i) {
        head.push_back(ch[(std::size_t)i - 1][0]);
        tailS.push_back(ch[(std::size_t)i - 1][1]);
      }
      std::vector<Vec> slots;
      slots.push_back(mul_chain(*H_, head));
      slots.push_back(H_->antipode(mul_chain(*H_, tailS)));
      for (int i = 1; i <= n - 1; ++i) slots.push_back(unit_vec(ch[(std::size_t)i - 1][2]));
      add_scaled(out, word_outer(slots, c * lc * sign_pow(n)), Rat(1));
    });
  }
  return trim_natural(std::move(out));
}

Vec HopfComplexes::e_sprime(int n, const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    std::vector<Vec> legs((std::size_t)n);
    for (int i = 1; i <= n; ++i)
      legs[(std::size_t)i - 1] = delta_legs(*H_, p[(std::size_t)i], 3);
    for_each_choice(legs, [&](const std::vector<std::vector<std::string>>& ch, const Rat& lc) {
      std::vector<std::string> head{p[0]};
      std::vector<std::string> tailS;
      for (int i = 1; i <= n; ++i) {
        head.push_back(ch[(std::size_t)i - 1][0]);
        tailS.push_back(ch[(std::size_t)i - 1][1]);
      }
      std::vector<Vec> slots;
      slots.push_back(mul_chain(*H_, head));
      slots.push_back(H_->antipode(mul_chain(*H_, tailS)));
      for (int i = 1; i <= n; ++i) slots.push_back(unit_vec(ch[(std::size_t)i - 1][2]));
      add_scaled(out, word_outer(slots, c * lc), Rat(1));
    });
  }
  return trim_natural(std::move(out));
}

Vec HopfComplexes::e_norm_sum(int n, const Vec& v) const {
  Vec out = v;
  Vec cur = v;
  for (int i = 1; i <= n; ++i) {
    cur = e_t(n, cur);
    add_scaled(out, cur, Rat(1));
  }
  return out;
}

Vec HopfComplexes::e_Bprime(int n, const Vec& v, BprimeForm form) const {
  switch (form) {
    case BprimeForm::Defining: {
      Vec sp = e_sprime(n, e_norm_sum(n, v));
      Vec out = sp;
      add_scaled(out, e_t(n + 1, sp), Rat(-1));
      return out;
    }
    case BprimeForm::DoublePrime: {
      Vec sp = scaled(e_degen(n, n, e_norm_sum(n, v)), sign_pow(n));
      return scaled(e_t(n + 1, sp), Rat(-1));
    }
    case BprimeForm::Explicit: {
      Vec out;
      for (const auto& [w, c] : v) {
        auto p = word_split(w);
        for (int i = 0; i <= n; ++i) {
          std::vector<Vec> legs((std::size_t)n);
          for (int j = 1; j <= n; ++j)
            legs[(std::size_t)j - 1] = delta_legs(*H_, p[(std::size_t)j], j <= n - i ? 3 : 2);
          for_each_choice(
              legs, [&](const std::vector<std::vector<std::string>>& ch, const Rat& lc) {
                std::vector<std::string> head{p[0]};
                for (int j = 1; j <= n - i; ++j) head.push_back(ch[(std::size_t)j - 1][0]);
                std::vector<std::string> tailS;
                for (int j = 1; j <= n; ++j) tailS.push_back(ch[(std::size_t)j - 1][1]);
                std::vector<Vec> slots;
                slots.push_back(mul_chain(*H_, head));
                for (int j = n - i + 1; j <= n; ++j)
                  slots.push_back(unit_vec(ch[(std::size_t)j - 1][0]));
                slots.push_back(H_->antipode(mul_chain(*H_, tailS)));
                for (int j = 1; j <= n - i; ++j)
                  slots.push_back(unit_vec(ch[(std::size_t)j - 1][2]));
                add_scaled(out, word_outer(slots, c * lc * sign_pow(n * i)), Rat(1));
              });
        }
      }
      return trim_natural(std::move(out));
    }
  }
  throw std::logic_error("unreachable");
}

Vec HopfComplexes::e_alpha(int n, const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    std::vector<Vec> legs((std::size_t)n + 1);
    for (int i = 0; i <= n; ++i)
      legs[(std::size_t)i] = delta_legs(*H_, p[(std::size_t)i], n - i + 1);
    for_each_choice(legs, [&](const std::vector<std::vector<std::string>>& ch, const Rat& lc) {
      std::vector<Vec> slots((std::size_t)n + 1);
      for (int j = 0; j <= n; ++j) {
        std::vector<std::string> factors;
        for (int i = 0; i <= j; ++i)
          factors.push_back(ch[(std::size_t)i][(std::size_t)(j - i)]);
        slots[(std::size_t)j] = mul_chain(*H_, factors);
      }
      add_scaled(out, word_outer(slots, c * lc), Rat(1));
    });
  }
  return trim_natural(std::move(out));
}

Vec HopfComplexes::e_beta(int n, const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    std::vector<Vec> legs((std::size_t)n);  // h_0..h_{n-1} split in two
    for (int i = 0; i < n; ++i) legs[(std::size_t)i] = delta_legs(*H_, p[(std::size_t)i], 2);
    for_each_choice(legs, [&](const std::vector<std::vector<std::string>>& ch, const Rat& lc) {
      std::vector<Vec> slots((std::size_t)n + 1);
      slots[0] = unit_vec(n == 0 ? p[0] : ch[0][0]);
      for (int j = 1; j <= n; ++j) {
        Vec s = H_->antipode_key(ch[(std::size_t)j - 1][1]);
        const std::string& right = (j < n) ? ch[(std::size_t)j][0] : p[(std::size_t)n];
        slots[(std::size_t)j] = H_->mul(s, unit_vec(right));
      }
      add_scaled(out, word_outer(slots, c * lc), Rat(1));
    });
  }
  return trim_natural(std::move(out));
}

Vec HopfComplexes::e_act(const Vec& a, const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    for (const auto& [ak, ac] : a) {
      Vec prod = H_->mul_keys(ak, p[0]);
      for (const auto& [mk, mc] : prod) {
        std::vector<std::string> q = p;
        q[0] = mk;
        accumulate(out, word_key(q), c * ac * mc);
      }
    }
  }
  return trim_natural(std::move(out));
}

Vec HopfComplexes::r_act(int n, const std::string& a, const Vec& v) const {
  Vec out;
  Vec legs = delta_legs(*H_, a, n + 1);
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    for (const auto& [lw, lc] : legs) {
      auto lp = word_split(lw);
      std::vector<Vec> slots((std::size_t)n + 1);
      for (int r = 0; r <= n; ++r)
        slots[(std::size_t)r] = H_->mul_keys(lp[(std::size_t)r], p[(std::size_t)r]);
      add_scaled(out, word_outer(slots, c * lc), Rat(1));
    }
  }
  return trim_natural(std::move(out));
}

Vec HopfComplexes::r_face(int n, int i, const Vec& v) const {
  (void)n;
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    Rat e = H_->counit_key(p[(std::size_t)i]);
    if (e == 0) continue;
    std::vector<std::string> q;
    for (std::size_t r = 0; r < p.size(); ++r)
      if ((int)r != i) q.push_back(p[r]);
    accumulate(out, word_key(q), c * e);
  }
  return out;
}

Vec HopfComplexes::r_degen(int n, int i, const Vec& v) const {
  (void)n;
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    Vec dz = H_->comul_key(p[(std::size_t)i]);
    for (const auto& [pw, pc] : dz) {
      auto pp = word_split(pw);
      std::vector<std::string> q;
      for (std::size_t r = 0; r < p.size(); ++r) {
        if ((int)r == i) {
          q.push_back(pp[0]);
          q.push_back(pp[1]);
        } else {
          q.push_back(p[r]);
        }
      }
      accumulate(out, word_key(q), c * pc);
    }
  }
  return trim_natural(std::move(out));
}

Vec HopfComplexes::r_lambda(int n, const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    std::vector<std::string> q;
    q.push_back(p.back());
    for (std::size_t r = 0; r + 1 < p.size(); ++r) q.push_back(p[r]);
    accumulate(out, word_key(q), c * sign_pow(n));
  }
  return out;
}

Vec HopfComplexes::b_lift(const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v)
    accumulate(out, w.empty() ? H_->unit_key() : H_->unit_key() + "|" + w, c);
  return out;
}

Vec HopfComplexes::b_project(const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    Rat e = H_->counit_key(p[0]);
    if (e == 0) continue;
    std::vector<std::string> q(p.begin() + 1, p.end());
    accumulate(out, word_key(q), c * e);
  }
  return out;
}

Vec HopfComplexes::b_face(int n, int i, const Vec& v) const {
  return b_project(e_face(n, i, b_lift(v)));
}

Vec HopfComplexes::b_degen(int n, int j, const Vec& v) const {
  return b_project(e_degen(n, j, b_lift(v)));
}

Vec HopfComplexes::b_del(int n, const Vec& v) const {
  return b_project(e_dprime(n, b_lift(v)));
}

Vec HopfComplexes::b_t(int n, const Vec& v) const { return b_project(e_t(n, b_lift(v))); }

Vec HopfComplexes::b_B(int n, const Vec& v, BprimeForm form) const {
  return b_project(e_Bprime(n, b_lift(v), form));
}

Vec HopfComplexes::mprime_b(int n, const Vec& v) const {
  return e_normalize(n - 1, e_dprime(n, from_adapted_words(v)));
}

Vec HopfComplexes::mprime_B(int n, const Vec& v) const {
  return e_normalize(n + 1, e_Bprime(n, from_adapted_words(v), BprimeForm::Defining));
}

Vec HopfComplexes::m_b(int n, const Vec& v) const {
  return b_normalize(n - 1, b_del(n, from_adapted_words(v)));
}

Vec HopfComplexes::m_B(int n, const Vec& v) const {
  return b_normalize(n + 1, b_B(n, from_adapted_words(v), BprimeForm::Defining));
}

Vec HopfComplexes::to_adapted_words(const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    std::vector<Vec> slots;
    slots.reserve(p.size());
    for (const auto& k : p) slots.push_back(H_->to_adapted_key(k));
    add_scaled(out, word_outer(slots, c), Rat(1));
  }
  return out;
}

Vec HopfComplexes::from_adapted_words(const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    std::vector<Vec> slots;
    slots.reserve(p.size());
    for (const auto& k : p) slots.push_back(H_->from_adapted_key(k));
    add_scaled(out, word_outer(slots, c), Rat(1));
  }
  return out;
}

Vec HopfComplexes::normalize(const Vec& v, int first_reduced_slot) const {
  Vec adapted = to_adapted_words(v);
  Vec out;
  for (const auto& [w, c] : adapted) {
    auto p = word_split(w);
    bool degenerate = false;
    for (std::size_t r = (std::size_t)first_reduced_slot; r < p.size(); ++r)
      if (p[r] == H_->unit_key()) {
        degenerate = true;
        break;
      }
    if (!degenerate) accumulate(out, w, c);
  }
  return trim_adapted(std::move(out));
}

int HopfComplexes::word_level(const std::string& adapted_word) const {
  int lv = 0;
  for (const auto& p : word_split(adapted_word)) lv += H_->adapted_level(p);
  return lv;
}

Vec HopfComplexes::trim_adapted(const Vec& adapted_words) const {
  if (!cap_) return adapted_words;
  Vec out;
  for (const auto& [w, c] : adapted_words)
    if (word_level(w) < *cap_) out.emplace(w, c);
  return out;
}

FreeModule HopfComplexes::e_module(int n) const {
  require_finite("e_module");
  std::vector<const std::vector<std::string>*> slots((std::size_t)n + 1, &natural_carrier_);
  return FreeModule(enumerate_words(
      slots, [&](const std::string& k) { return H_->adapted_level(k); }, cap_));
}

FreeModule HopfComplexes::b_module(int n) const {
  require_finite("b_module");
  std::vector<const std::vector<std::string>*> slots((std::size_t)n, &natural_carrier_);
  return FreeModule(enumerate_words(
      slots, [&](const std::string& k) { return H_->adapted_level(k); }, cap_));
}

FreeModule HopfComplexes::e_module_norm(int n) const {
  require_finite("e_module_norm");
  std::vector<const std::vector<std::string>*> slots;
  slots.push_back(&adapted_carrier_);
  for (int r = 1; r <= n; ++r) slots.push_back(&adapted_reduced_);
  return FreeModule(enumerate_words(
      slots, [&](const std::string& k) { return H_->adapted_level(k); }, cap_));
}

FreeModule HopfComplexes::b_module_norm(int n) const {
  require_finite("b_module_norm");
  std::vector<const std::vector<std::string>*> slots((std::size_t)n, &adapted_reduced_);
  return FreeModule(enumerate_words(
      slots, [&](const std::string& k) { return H_->adapted_level(k); }, cap_));
}

FreeModule HopfComplexes::b_module_rel(int n) const {
  require_finite("b_module_rel");
  std::vector<const std::vector<std::string>*> slots((std::size_t)n, &adapted_carrier_);
  auto all = enumerate_words(
      slots, [&](const std::string& k) { return H_->adapted_level(k); }, cap_);
  // Kernel of B(H) -> B(k): everything except the all-unit word.
  std::vector<std::string> rel;
  for (const auto& w : all)
    for (const auto& p : word_split(w))
      if (p != H_->unit_key()) {
        rel.push_back(w);
        break;
      }
  return FreeModule(rel);
}

FreeModule HopfComplexes::b_module_rel_norm(int n) const {
  // All slots reduced already implies relative for n >= 1.
  return b_module_norm(n);
}

// ---------------------------------------------------------------------------

AlgebraLike alg_from_spec(std::shared_ptr<const AlgebraSpec> a, std::string name) {
  AlgebraLike out;
  out.name = std::move(name);
  out.mul_keys = [a](const std::string& x, const std::string& y) { return a->mul_keys(x, y); };
  out.unit = a->unit();
  const auto& ad = a->adapted();
  auto to_map = std::make_shared<LinMap>(ad.to_adapted);
  auto from_map = std::make_shared<LinMap>(ad.from_adapted);
  out.to_adapted = [to_map](const std::string& k) { return to_map->apply(unit_vec(k)); };
  out.from_adapted = [from_map](const std::string& k) { return from_map->apply(unit_vec(k)); };
  auto levels = std::make_shared<std::map<std::string, int>>();
  for (std::size_t i = 0; i < ad.names.size(); ++i) (*levels)[ad.names[i]] = ad.levels[i];
  out.adapted_level = [levels](const std::string& k) { return levels->at(k); };
  out.adapted_unit_key = ad.names[ad.unit_index];
  out.natural_carrier = a->names();
  out.adapted_carrier = ad.names;
  return out;
}

AlgebraLike alg_from_hopf(HopfPtr h) {
  AlgebraLike out;
  out.name = h->name();
  out.mul_keys = [h](const std::string& x, const std::string& y) { return h->mul_keys(x, y); };
  out.unit = unit_vec(h->unit_key());
  out.to_adapted = [h](const std::string& k) { return h->to_adapted_key(k); };
  out.from_adapted = [h](const std::string& k) { return h->from_adapted_key(k); };
  out.adapted_level = [h](const std::string& k) { return h->adapted_level(k); };
  // For every carrier in use the unit is its own adapted key.
  out.adapted_unit_key = h->unit_key();
  if (auto c = h->carrier_keys()) out.natural_carrier = *c;
  if (auto c = h->adapted_carrier_keys()) out.adapted_carrier = *c;
  out.precision = h->precision();
  return out;
}

CanonicalComplexes::CanonicalComplexes(AlgebraLike A, std::optional<int> cap)
    : A_(std::move(A)), cap_(cap) {
  if (cap_ && *cap_ > A_.precision)
    throw ConfigError("slice cap exceeds the algebra's precision");
  for (const auto& k : A_.adapted_carrier)
    if (k != A_.adapted_unit_key) adapted_reduced_.push_back(k);
}

Vec CanonicalComplexes::c_face(int n, int i, const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    if ((int)p.size() != n + 1) throw ShapeError("word degree mismatch in c_face");
    if (i < n) {
      Vec prod = A_.mul_keys(p[(std::size_t)i], p[(std::size_t)i + 1]);
      for (const auto& [mk, mc] : prod) {
        std::vector<std::string> q;
        for (int r = 0; r <= n; ++r) {
          if (r == i)
            q.push_back(mk);
          else if (r != i + 1)
            q.push_back(p[(std::size_t)r]);
        }
        accumulate(out, word_key(q), c * mc);
      }
    } else {
      Vec prod = A_.mul_keys(p[(std::size_t)n], p[0]);
      for (const auto& [mk, mc] : prod) {
        std::vector<std::string> q{mk};
        for (int r = 1; r < n; ++r) q.push_back(p[(std::size_t)r]);
        accumulate(out, word_key(q), c * mc);
      }
    }
  }
  return out;
}

Vec CanonicalComplexes::c_degen(int n, int j, const Vec& v) const {
  (void)n;
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    for (const auto& [uk, uc] : A_.unit) {
      std::vector<std::string> q;
      for (std::size_t r = 0; r < p.size(); ++r) {
        q.push_back(p[r]);
        if ((int)r == j) q.push_back(uk);
      }
      accumulate(out, word_key(q), c * uc);
    }
  }
  return out;
}

Vec CanonicalComplexes::c_t(int n, const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    std::vector<std::string> q;
    q.push_back(p.back());
    for (std::size_t r = 0; r + 1 < p.size(); ++r) q.push_back(p[r]);
    accumulate(out, word_key(q), c * sign_pow(n));
  }
  return out;
}

Vec CanonicalComplexes::c_b(int n, const Vec& v) const {
  if (n == 0) return {};
  Vec out;
  for (int i = 0; i <= n; ++i) add_scaled(out, c_face(n, i, v), sign_pow(i));
  return out;
}

Vec CanonicalComplexes::c_extra(const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v)
    for (const auto& [uk, uc] : A_.unit) accumulate(out, uk + "|" + w, c * uc);
  return out;
}

Vec CanonicalComplexes::c_B(int n, const Vec& v) const {
  Vec nv = v;
  Vec cur = v;
  for (int i = 1; i <= n; ++i) {
    cur = c_t(n, cur);
    add_scaled(nv, cur, Rat(1));
  }
  Vec sp = c_extra(nv);
  Vec out = sp;
  add_scaled(out, c_t(n + 1, sp), Rat(-1));
  return out;
}

Vec CanonicalComplexes::to_adapted_words(const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    std::vector<Vec> slots;
    slots.reserve(p.size());
    for (const auto& k : p) slots.push_back(A_.to_adapted(k));
    add_scaled(out, word_outer(slots, c), Rat(1));
  }
  return out;
}

Vec CanonicalComplexes::from_adapted_words(const Vec& v) const {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    std::vector<Vec> slots;
    slots.reserve(p.size());
    for (const auto& k : p) slots.push_back(A_.from_adapted(k));
    add_scaled(out, word_outer(slots, c), Rat(1));
  }
  return out;
}

Vec CanonicalComplexes::normalize(const Vec& v) const {
  Vec adapted = to_adapted_words(v);
  Vec out;
  for (const auto& [w, c] : adapted) {
    auto p = word_split(w);
    bool degenerate = false;
    for (std::size_t r = 1; r < p.size(); ++r)
      if (p[r] == A_.adapted_unit_key) {
        degenerate = true;
        break;
      }
    if (!degenerate) accumulate(out, w, c);
  }
  return trim_adapted(std::move(out));
}

Vec CanonicalComplexes::relative_part(const Vec& adapted_words) const {
  Vec out;
  for (const auto& [w, c] : adapted_words)
    for (const auto& p : word_split(w))
      if (A_.adapted_level(p) > 0) {
        out.emplace(w, c);
        break;
      }
  return out;
}

Vec CanonicalComplexes::quotient_part(const Vec& adapted_words) const {
  Vec out;
  for (const auto& [w, c] : adapted_words) {
    bool rel = false;
    for (const auto& p : word_split(w))
      if (A_.adapted_level(p) > 0) {
        rel = true;
        break;
      }
    if (!rel) out.emplace(w, c);
  }
  return out;
}

int CanonicalComplexes::word_level(const std::string& adapted_word) const {
  int lv = 0;
  for (const auto& p : word_split(adapted_word)) lv += A_.adapted_level(p);
  return lv;
}

Vec CanonicalComplexes::trim_adapted(const Vec& adapted_words) const {
  if (!cap_) return adapted_words;
  Vec out;
  for (const auto& [w, c] : adapted_words)
    if (word_level(w) < *cap_) out.emplace(w, c);
  return out;
}

FreeModule CanonicalComplexes::c_module(int n) const {
  if (A_.natural_carrier.empty()) throw ConfigError("c_module needs a finite carrier");
  std::vector<const std::vector<std::string>*> slots((std::size_t)n + 1, &A_.natural_carrier);
  return FreeModule(enumerate_words(slots, [](const std::string&) { return 0; }, std::nullopt));
}

FreeModule CanonicalComplexes::c_module_norm(int n) const {
  if (A_.adapted_carrier.empty()) throw ConfigError("c_module_norm needs a finite carrier");
  std::vector<const std::vector<std::string>*> slots;
  slots.push_back(&A_.adapted_carrier);
  for (int r = 1; r <= n; ++r) slots.push_back(&adapted_reduced_);
  return FreeModule(enumerate_words(
      slots, [&](const std::string& k) { return A_.adapted_level(k); }, cap_));
}

FreeModule CanonicalComplexes::c_module_rel_norm(int n) const {
  FreeModule all = c_module_norm(n);
  std::vector<std::string> rel;
  for (const auto& w : all.basis()) {
    for (const auto& p : word_split(w))
      if (A_.adapted_level(p) > 0) {
        rel.push_back(w);
        break;
      }
  }
  return FreeModule(rel);
}

}  // namespace hopfcyc
