#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

LinMap::LinMap(FreeModule domain, FreeModule codomain, std::vector<Vec> columns)
    : dom_(std::move(domain)), cod_(std::move(codomain)), cols_(std::move(columns)) {
  if (cols_.size() != dom_.dim())
    throw ShapeError("column count does not match domain dimension");
  for (const auto& col : cols_)
    if (!cod_.contains_vec(col)) throw ShapeError("column leaves the codomain");
}

LinMap LinMap::from_function(const FreeModule& domain, const FreeModule& codomain,
                             const std::function<Vec(const std::string&)>& f) {
  std::vector<Vec> cols;
  cols.reserve(domain.dim());
  for (const auto& key : domain.basis()) cols.push_back(f(key));
  return LinMap(domain, codomain, std::move(cols));
}

LinMap LinMap::zero(const FreeModule& domain, const FreeModule& codomain) {
  return LinMap(domain, codomain, std::vector<Vec>(domain.dim()));
}

LinMap LinMap::identity(const FreeModule& m) {
  std::vector<Vec> cols;
  cols.reserve(m.dim());
  for (const auto& key : m.basis()) cols.push_back(unit_vec(key));
  return LinMap(m, m, std::move(cols));
}

Vec LinMap::apply(const Vec& v) const {
  Vec out;
  for (const auto& [k, c] : v) add_scaled(out, cols_[dom_.index(k)], c);
  return out;
}

LinMap LinMap::compose(const LinMap& inner) const {
  if (!(inner.cod_ == dom_)) throw ShapeError("composition shape mismatch");
  std::vector<Vec> cols;
  cols.reserve(inner.dom_.dim());
  for (const auto& col : inner.cols_) cols.push_back(apply(col));
  return LinMap(inner.dom_, cod_, std::move(cols));
}

LinMap LinMap::plus(const LinMap& other, const Rat& c) const {
  if (!(dom_ == other.dom_) || !(cod_ == other.cod_))
    throw ShapeError("sum shape mismatch");
  std::vector<Vec> cols = cols_;
  for (std::size_t i = 0; i < cols.size(); ++i) add_scaled(cols[i], other.cols_[i], c);
  return LinMap(dom_, cod_, std::move(cols));
}

bool LinMap::is_zero_map() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

namespace {

// Shared elimination core. Processes columns in domain order; each column is
// reduced against established pivots (first nonzero key in lex order). Tracks
// the expression of each reduced column in the original columns.
struct Elimination {
  struct PivotRow {
    std::string key;   // pivot key in the codomain
    Vec column;        // reduced column, pivot coefficient 1
    Vec combo;         // expression of `column` in domain basis vectors
  };
  std::map<std::string, std::size_t> pivot_of_key;
  std::vector<PivotRow> pivots;
  std::vector<Vec> kernel;  // combos that reduced to zero

  // Reduces v in place against the pivots; applies the same operations to combo.
  void reduce(Vec& v, Vec* combo) const {
    while (!v.empty()) {
      auto lead = v.begin();  // smallest key
      auto it = pivot_of_key.find(lead->first);
      if (it == pivot_of_key.end()) return;
      const PivotRow& p = pivots[it->second];
      Rat c = lead->second;
      add_scaled(v, p.column, -c);
      if (combo) add_scaled(*combo, p.combo, -c);
    }
  }

  void feed(const Vec& col, const Vec& combo_in) {
    Vec v = col;
    Vec combo = combo_in;
    reduce(v, &combo);
    if (v.empty()) {
      if (!combo.empty()) kernel.push_back(std::move(combo));
      return;
    }
    auto lead = v.begin();
    Rat inv = 1 / lead->second;
    PivotRow row{lead->first, scaled(v, inv), scaled(combo, inv)};
    pivot_of_key.emplace(row.key, pivots.size());
    pivots.push_back(std::move(row));
  }
};

Elimination eliminate(const LinMap& m) {
  Elimination e;
  for (std::size_t i = 0; i < m.domain().dim(); ++i)
    e.feed(m.column(i), unit_vec(m.domain().key(i)));
  return e;
}

LinMap transpose(const LinMap& m) {
  std::vector<Vec> cols(m.codomain().dim());
  for (std::size_t i = 0; i < m.domain().dim(); ++i)
    for (const auto& [k, c] : m.column(i))
      cols[m.codomain().index(k)][m.domain().key(i)] = c;
  return LinMap(m.codomain(), m.domain(), std::move(cols));
}

}  // namespace

RankResult rank_kernel_image(const LinMap& m) {
  Elimination e = eliminate(m);
  RankResult r;
  r.rank = e.pivots.size();
  r.kernel_basis = std::move(e.kernel);
  r.image_basis.reserve(e.pivots.size());
  for (auto& p : e.pivots) r.image_basis.push_back(std::move(p.column));
  return r;
}

SolveResult solve_linear(const LinMap& m, const Vec& target) {
  if (!m.codomain().contains_vec(target)) throw ShapeError("target not in codomain");
  Elimination e = eliminate(m);
  Vec v = target;
  Vec combo;
  e.reduce(v, &combo);
  SolveResult out;
  if (v.empty()) {
    out.solution = scaled(combo, Rat(-1));
    return out;
  }
  // Inconsistent: a left-kernel functional separating the target exists.
  Elimination et = eliminate(transpose(m));
  for (const auto& y : et.kernel) {
    Rat dot(0);
    for (const auto& [k, c] : y) dot += c * coeff(target, k);
    if (dot != 0) {
      out.certificate = y;
      return out;
    }
  }
  throw std::logic_error("inconsistent system without certificate");
}

std::size_t homology_dims(const LinMap& d_in, const LinMap& d_out) {
  LinMap comp = d_out.compose(d_in);
  for (std::size_t i = 0; i < comp.domain().dim(); ++i) {
    if (!comp.column(i).empty())
      throw NotAComplexError("composite nonzero on basis element '" +
                             comp.domain().key(i) + "'");
  }
  RankResult rin = rank_kernel_image(d_in);
  RankResult rout = rank_kernel_image(d_out);
  return rout.kernel_basis.size() - rin.rank;
}

Vec Span::reduce(const Vec& v) const {
  // Rows have lexicographically minimal leading keys, so cancelling the
  // leading key only ever introduces larger keys; the loop terminates and
  // reduces to zero exactly on span members.
  Vec r = v;
  while (!r.empty()) {
    auto lead = r.begin();
    auto it = pivot_.find(lead->first);
    if (it == pivot_.end()) break;
    add_scaled(r, rows_[it->second], -lead->second);
  }
  return r;
}

bool Span::insert(const Vec& v) {
  Vec r = reduce(v);
  if (r.empty()) return false;
  auto lead = r.begin();
  Rat inv = 1 / lead->second;
  Vec row = scaled(r, inv);
  pivot_.emplace(lead->first, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool Span::same_as(const Span& other) const {
  if (dim() != other.dim()) return false;
  for (const auto& r : rows_)
    if (!other.contains(r)) return false;
  return true;
}

}  // namespace hopfcyc
