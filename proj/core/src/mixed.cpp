#include "hopfcyc/mixed.hpp"

namespace hopfcyc {

ComplexSlice materialize_complex(int cap, const std::function<FreeModule(int)>& module,
                                 const std::function<Vec(int, const Vec&)>& diff) {
  ComplexSlice out;
  for (int n = 0; n <= cap; ++n) out.spaces.push_back(module(n));
  out.d.resize((std::size_t)cap + 1);
  for (int n = 1; n <= cap; ++n)
    out.d[(std::size_t)n] = LinMap::from_function(
        out.spaces[(std::size_t)n], out.spaces[(std::size_t)n - 1],
        [&](const std::string& k) { return diff(n, unit_vec(k)); });
  return out;
}

MixedSlice materialize_mixed(int cap, const std::function<FreeModule(int)>& module,
                             const std::function<Vec(int, const Vec&)>& b,
                             const std::function<Vec(int, const Vec&)>& B) {
  MixedSlice out;
  for (int n = 0; n <= cap; ++n) out.M.push_back(module(n));
  out.b.resize((std::size_t)cap + 1);
  out.B.resize((std::size_t)cap);
  for (int n = 1; n <= cap; ++n)
    out.b[(std::size_t)n] =
        LinMap::from_function(out.M[(std::size_t)n], out.M[(std::size_t)n - 1],
                              [&](const std::string& k) { return b(n, unit_vec(k)); });
  for (int n = 0; n < cap; ++n)
    out.B[(std::size_t)n] =
        LinMap::from_function(out.M[(std::size_t)n], out.M[(std::size_t)n + 1],
                              [&](const std::string& k) { return B(n, unit_vec(k)); });
  return out;
}

std::optional<std::string> MixedSlice::check_axioms() const {
  const int c = cap();
  for (int n = 2; n <= c; ++n) {
    LinMap bb = b[(std::size_t)n - 1].compose(b[(std::size_t)n]);
    if (!bb.is_zero_map()) return "b^2 != 0 at degree " + std::to_string(n);
  }
  for (int n = 0; n + 1 < c; ++n) {
    LinMap BB = B[(std::size_t)n + 1].compose(B[(std::size_t)n]);
    if (!BB.is_zero_map()) return "B^2 != 0 at degree " + std::to_string(n);
  }
  for (int n = 1; n < c; ++n) {
    LinMap anti = b[(std::size_t)n + 1]
                      .compose(B[(std::size_t)n])
                      .plus(B[(std::size_t)n - 1].compose(b[(std::size_t)n]));
    if (!anti.is_zero_map()) return "bB + Bb != 0 at degree " + std::to_string(n);
  }
  return std::nullopt;
}

std::string HNSlice::col_key(int i, const std::string& key) {
  return "c" + std::to_string(i) + "#" + key;
}

std::pair<int, std::string> HNSlice::split_col(const std::string& key) {
  auto hash = key.find('#');
  if (key.empty() || key[0] != 'c' || hash == std::string::npos)
    throw ShapeError("bad HN coordinate key '" + key + "'");
  return {std::stoi(key.substr(1, hash - 1)), key.substr(hash + 1)};
}

Vec HNSlice::embed(int i, const Vec& v) {
  Vec out;
  for (const auto& [k, c] : v) out.emplace(col_key(i, k), c);
  return out;
}

Vec HNSlice::coordinate(int i, const Vec& hn_elem) {
  Vec out;
  for (const auto& [k, c] : hn_elem) {
    auto [col, key] = split_col(k);
    if (col == i) out.emplace(key, c);
  }
  return out;
}

HNSlice hn_totalize(const MixedSlice& m, int D, int P) {
  if (m.cap() < D + 2 * P)
    throw ConfigError("mixed slice cap " + std::to_string(m.cap()) +
                      " too small for HN window D=" + std::to_string(D) +
                      ", P=" + std::to_string(P));
  HNSlice out;
  out.P = P;
  out.D = D;
  auto module = [&](int n) {
    std::vector<std::string> keys;
    for (int i = 0; i <= P; ++i)
      for (const auto& k : m.M[(std::size_t)(n + 2 * i)].basis())
        keys.push_back(HNSlice::col_key(i, k));
    return FreeModule(keys);
  };
  auto diff = [&](int n, const Vec& v) {
    Vec outv;
    for (const auto& [k, c] : v) {
      auto [i, key] = HNSlice::split_col(k);
      for (const auto& [bk, bc] : m.b[(std::size_t)(n + 2 * i)].apply(unit_vec(key)))
        add_scaled(outv, unit_vec(HNSlice::col_key(i, bk)), c * bc);
      if (i + 1 <= P)
        for (const auto& [Bk, Bc] : m.B[(std::size_t)(n + 2 * i)].apply(unit_vec(key)))
          add_scaled(outv, unit_vec(HNSlice::col_key(i + 1, Bk)), c * Bc);
    }
    return outv;
  };
  out.total = materialize_complex(D, module, diff);
  return out;
}

LinMap hn_pi(const HNSlice& hn, const MixedSlice& m, int n) {
  return LinMap::from_function(hn.total.spaces[(std::size_t)n], m.M[(std::size_t)n],
                               [&](const std::string& k) -> Vec {
                                 auto [i, key] = HNSlice::split_col(k);
                                 if (i == 0) return unit_vec(key);
                                 return {};
                               });
}

}  // namespace hopfcyc
