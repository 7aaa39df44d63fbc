#include "hopfcyc/lie.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hopfcyc {

namespace {

// Compact renderer for synthesized basis-vector names: "(a-1/2*b+c)".
std::string combo_name(const Vec& v) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& [k, c] : v) {
    if (c > 0 && !first) os << "+";
    if (c == 1) {
      os << k;
    } else if (c == -1) {
      os << "-" << k;
    } else {
      os << rat_str(c) << "*" << k;
    }
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

LieAlgebraSpec::LieAlgebraSpec(std::vector<std::string> names,
                               std::map<std::pair<int, int>, Vec> brackets)
    : names_(std::move(names)), brackets_(std::move(brackets)) {
  for (const auto& n : names_) FreeModule::validate_name(n);
  module_ = FreeModule(names_);
  for (const auto& [ij, v] : brackets_) {
    auto [i, j] = ij;
    if (i < 0 || j < 0 || i >= (int)dim() || j >= (int)dim() || i >= j)
      throw ValidationError("bracket indices must satisfy 0 <= i < j < dim");
    if (!module_.contains_vec(v)) throw ValidationError("bracket value leaves the algebra");
  }
}

Vec LieAlgebraSpec::bracket_basis(int i, int j) const {
  if (i == j) return {};
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets_.find({i, j});
  Vec v = it == brackets_.end() ? Vec{} : it->second;
  return flip ? scaled(v, Rat(-1)) : v;
}

Vec LieAlgebraSpec::bracket(const Vec& u, const Vec& v) const {
  Vec out;
  for (const auto& [ku, cu] : u)
    for (const auto& [kv, cv] : v)
      add_scaled(out, bracket_basis((int)module_.index(ku), (int)module_.index(kv)),
                 cu * cv);
  return out;
}

void LieAlgebraSpec::validate() const {
  const int d = (int)dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        Vec jac = bracket(bracket_basis(i, j), unit_vec(names_[k]));
        add_scaled(jac, bracket(bracket_basis(j, k), unit_vec(names_[i])), Rat(1));
        add_scaled(jac, bracket(bracket_basis(k, i), unit_vec(names_[j])), Rat(1));
        if (!is_zero(jac)) {
          std::ostringstream os;
          os << "Jacobi identity fails on (" << names_[i] << "," << names_[j] << ","
             << names_[k] << "): residual " << vec_str(jac);
          throw ValidationError(os.str());
        }
      }
}

std::vector<Span> LieAlgebraSpec::lower_central_series() const {
  std::vector<Span> series;
  Span g1;
  for (const auto& n : names_) g1.insert(unit_vec(n));
  series.push_back(std::move(g1));
  while (true) {
    const Span& prev = series.back();
    Span next;
    for (const auto& n : names_)
      for (const auto& row : prev.rows()) next.insert(bracket(unit_vec(n), row));
    if (next.same_as(prev)) break;  // stabilized (nonzero unless next empty)
    bool zero = next.dim() == 0;
    series.push_back(std::move(next));
    if (zero) break;
  }
  return series;
}

std::optional<int> LieAlgebraSpec::nilpotency_class() const {
  auto series = lower_central_series();
  if (series.back().dim() != 0) return std::nullopt;
  // series = γ1, ..., γ_{c+1} = 0
  return (int)series.size() - 1;
}

bool LieAlgebraSpec::is_abelian() const {
  for (const auto& [ij, v] : brackets_)
    if (!is_zero(v)) return false;
  return true;
}

bool LieAlgebraSpec::is_adapted_to_lcs() const {
  auto series = lower_central_series();
  if (series.back().dim() != 0) return false;
  for (const auto& gj : series) {
    std::size_t hits = 0;
    for (const auto& n : names_)
      if (gj.contains(unit_vec(n))) ++hits;
    if (hits != gj.dim()) return false;
  }
  return true;
}

LieAlgebraSpec::AdaptedForm LieAlgebraSpec::adapted() const {
  auto series = lower_central_series();
  if (series.back().dim() != 0)
    throw UnsupportedError("adapted basis requires a nilpotent Lie algebra");
  const int cls = (int)series.size() - 1;

  // Walk the flag from the deepest nonzero term upward, preferring original
  // basis vectors, and falling back to echelon rows of γ_j.
  struct Picked {
    Vec coords;
    int weight;
    std::string name;
  };
  std::vector<Picked> picked;
  Span have;
  for (int j = cls; j >= 1; --j) {
    const Span& gj = series[(std::size_t)j - 1];
    for (const auto& n : names_) {
      Vec cand = unit_vec(n);
      if (gj.contains(cand) && have.insert(cand)) picked.push_back({cand, j, n});
    }
    for (const auto& row : gj.rows())
      if (have.insert(row)) picked.push_back({row, j, combo_name(row)});
  }
  if (picked.size() != dim()) throw std::logic_error("adapted basis construction failed");

  // Keep user order within each weight class descending? Presentation order:
  // original basis order first, synthesized vectors after, weights ascending.
  std::stable_sort(picked.begin(), picked.end(),
                   [](const Picked& a, const Picked& b) { return a.weight < b.weight; });

  std::vector<std::string> new_names;
  std::vector<int> weights;
  std::vector<Vec> from_cols;
  for (const auto& p : picked) {
    new_names.push_back(p.name);
    weights.push_back(p.weight);
    from_cols.push_back(p.coords);
  }
  FreeModule new_module(new_names);
  LinMap from_adapted(new_module, module_, from_cols);
  LinMap to_adapted = LinMap::from_function(module_, new_module, [&](const std::string& k) {
    auto sol = solve_linear(from_adapted, unit_vec(k));
    if (!sol.solution) throw std::logic_error("adapted basis inversion failed");
    return *sol.solution;
  });

  std::map<std::pair<int, int>, Vec> new_brackets;
  for (std::size_t i = 0; i < picked.size(); ++i)
    for (std::size_t j = i + 1; j < picked.size(); ++j) {
      Vec br = to_adapted.apply(bracket(picked[i].coords, picked[j].coords));
      if (!is_zero(br)) new_brackets[{(int)i, (int)j}] = br;
    }
  return AdaptedForm{LieAlgebraSpec(new_names, std::move(new_brackets)),
                     std::move(weights), std::move(to_adapted), std::move(from_adapted)};
}

}  // namespace hopfcyc
