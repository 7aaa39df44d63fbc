#include "hopfcyc/pbw.hpp"

#include <algorithm>
#include <functional>

namespace hopfcyc {

std::string pbw_key(const std::vector<std::string>& names, const PbwMonomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (unsigned r = 0; r < m[i]; ++r) {
      if (!out.empty()) out += '.';
      out += names[i];
    }
  return out.empty() ? "1" : out;
}

PbwMonomial pbw_parse(const FreeModule& lie_module, const std::string& key) {
  PbwMonomial m(lie_module.dim(), 0);
  if (key == "1") return m;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= key.size(); ++i) {
    if (i == key.size() || key[i] == '.') {
      ++m[lie_module.index(key.substr(start, i - start))];
      start = i + 1;
    }
  }
  return m;
}

unsigned pbw_degree(const PbwMonomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

Enveloping::Enveloping(LieAlgebraSpec::AdaptedForm adapted, std::optional<int> trunc)
    : adapted_(std::move(adapted)), trunc_(trunc) {
  if (trunc_ && *trunc_ < 1) throw UnsupportedError("truncation level must be >= 1");
}

int Enveloping::weight(const PbwMonomial& m) const {
  int w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += (int)m[i] * adapted_.weights[i];
  return w;
}

int Enveloping::level_key(const std::string& key) const {
  return weight(pbw_parse(lie().module(), key));
}

Vec Enveloping::word_to_basis(const std::vector<unsigned>& word, const Rat& c) const {
  // Iterative straightening with a worklist; prunes at level >= trunc.
  Vec out;
  std::vector<std::pair<std::vector<unsigned>, Rat>> work{{word, c}};
  const auto& weights = adapted_.weights;
  const int cap = trunc_ ? *trunc_ : -1;
  while (!work.empty()) {
    auto [w, coef] = std::move(work.back());
    work.pop_back();
    if (coef == 0) continue;
    if (cap >= 0) {
      int lv = 0;
      for (unsigned letter : w) lv += weights[letter];
      if (lv >= cap) continue;
    }
    std::size_t p = 0;
    bool sorted = true;
    for (; p + 1 < w.size(); ++p)
      if (w[p] > w[p + 1]) {
        sorted = false;
        break;
      }
    if (sorted) {
      PbwMonomial m(lie().dim(), 0);
      for (unsigned letter : w) ++m[letter];
      std::string key = pbw_key(lie().names(), m);
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(std::move(key), coef);
      else {
        it->second += coef;
        if (it->second == 0) out.erase(it);
      }
      continue;
    }
    // x_a x_b = x_b x_a + [x_a, x_b]  (a > b at position p)
    std::vector<unsigned> swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    work.emplace_back(std::move(swapped), coef);
    Vec br = lie().bracket_basis((int)w[p], (int)w[p + 1]);
    for (const auto& [k, bc] : br) {
      std::vector<unsigned> contracted;
      contracted.reserve(w.size() - 1);
      contracted.insert(contracted.end(), w.begin(), w.begin() + (long)p);
      contracted.push_back((unsigned)lie().module().index(k));
      contracted.insert(contracted.end(), w.begin() + (long)p + 2, w.end());
      work.emplace_back(std::move(contracted), coef * bc);
    }
  }
  return out;
}

Vec Enveloping::mul_keys(const std::string& a, const std::string& b) const {
  PbwMonomial ma = pbw_parse(lie().module(), a), mb = pbw_parse(lie().module(), b);
  std::vector<unsigned> word;
  for (std::size_t i = 0; i < ma.size(); ++i)
    for (unsigned r = 0; r < ma[i]; ++r) word.push_back((unsigned)i);
  for (std::size_t i = 0; i < mb.size(); ++i)
    for (unsigned r = 0; r < mb[i]; ++r) word.push_back((unsigned)i);
  return word_to_basis(word, Rat(1));
}

Vec Enveloping::mul(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_scaled(out, mul_keys(ka, kb), ca * cb);
  return out;
}

Vec Enveloping::antipode_key(const std::string& key) const {
  PbwMonomial m = pbw_parse(lie().module(), key);
  std::vector<unsigned> word;
  for (std::size_t i = m.size(); i-- > 0;)
    for (unsigned r = 0; r < m[i]; ++r) word.push_back((unsigned)i);
  Rat sign = (pbw_degree(m) % 2 == 0) ? Rat(1) : Rat(-1);
  return word_to_basis(word, sign);
}

Vec Enveloping::power(const Vec& u, unsigned k) const {
  Vec out = unit_vec("1");
  for (unsigned i = 0; i < k; ++i) out = mul(out, u);
  return out;
}

Vec Enveloping::from_lie(const Vec& lie_vec_user) const {
  Vec ad = adapted_.to_adapted.apply(lie_vec_user);
  Vec out;
  for (const auto& [k, c] : ad) {
    PbwMonomial m(lie().dim(), 0);
    ++m[lie().module().index(k)];
    set_coeff(out, pbw_key(lie().names(), m), c);
  }
  return out;
}

Vec Enveloping::to_lie(const Vec& u) const {
  Vec ad;
  for (const auto& [k, c] : u) {
    PbwMonomial m = pbw_parse(lie().module(), k);
    if (pbw_degree(m) != 1)
      throw ValidationError("element is not in the degree-1 span: " + k);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) add_scaled(ad, unit_vec(lie().names()[i]), c);
  }
  return adapted_.from_adapted.apply(ad);
}

Vec Enveloping::exp_aug(const Vec& u) const {
  if (!trunc_) throw UnsupportedError("exp needs a truncated enveloping algebra");
  Vec out = unit_vec("1");
  Vec pw = unit_vec("1");
  for (int k = 1; k < *trunc_; ++k) {
    pw = mul(pw, u);
    if (is_zero(pw)) break;
    add_scaled(out, pw, Rat(1) / factorial((unsigned)k));
  }
  return out;
}

Vec Enveloping::log_unit(const Vec& v) const {
  if (!trunc_) throw UnsupportedError("log needs a truncated enveloping algebra");
  Vec u = v;
  add_scaled(u, unit_vec("1"), Rat(-1));
  Vec out;
  Vec pw = unit_vec("1");
  for (int k = 1; k < *trunc_; ++k) {
    pw = mul(pw, u);
    if (is_zero(pw)) break;
    Rat c = Rat((k % 2) ? 1 : -1) / Rat(k);
    add_scaled(out, pw, c);
  }
  return out;
}

std::vector<std::string> Enveloping::carrier() const {
  if (!trunc_) throw UnsupportedError("carrier enumeration needs a truncation");
  std::vector<std::string> keys;
  PbwMonomial m(lie().dim(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int lv) {
    if (i == m.size()) {
      keys.push_back(pbw_key(lie().names(), m));
      return;
    }
    for (unsigned e = 0;; ++e) {
      m[i] = e;
      int nlv = lv + (int)e * adapted_.weights[i];
      if (nlv >= *trunc_) break;
      rec(i + 1, nlv);
    }
    m[i] = 0;
  };
  rec(0, 0);
  std::sort(keys.begin(), keys.end());
  return keys;
}

Vec bch_product(const LieAlgebraSpec& lie, const Vec& a, const Vec& b) {
  auto cls = lie.nilpotency_class();
  if (!cls) throw UnsupportedError("BCH product needs a nilpotent Lie algebra");
  Enveloping env(lie.adapted(), *cls + 1);
  Vec prod = env.mul(env.exp_aug(env.from_lie(a)), env.exp_aug(env.from_lie(b)));
  return env.to_lie(env.log_unit(prod));
}

}  // namespace hopfcyc
