#include "hopfcyc/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace hopfcyc {

namespace {

std::string combo_name(const Vec& v) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& [k, c] : v) {
    if (c > 0 && !first) os << "+";
    if (c == 1)
      os << k;
    else if (c == -1)
      os << "-" << k;
    else
      os << rat_str(c) << "*" << k;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

AlgebraSpec::AlgebraSpec(std::vector<std::string> names, Vec unit,
                         std::vector<std::vector<Vec>> mult, std::vector<Vec> ideal_basis)
    : names_(std::move(names)),
      unit_(std::move(unit)),
      mult_(std::move(mult)),
      ideal_basis_(std::move(ideal_basis)) {
  for (const auto& n : names_) FreeModule::validate_name(n);
  module_ = FreeModule(names_);
  if (mult_.size() != dim()) throw ValidationError("mult table has wrong size");
  for (const auto& row : mult_) {
    if (row.size() != dim()) throw ValidationError("mult table has wrong size");
    for (const auto& v : row)
      if (!module_.contains_vec(v)) throw ValidationError("mult value leaves the algebra");
  }
  if (!module_.contains_vec(unit_)) throw ValidationError("unit leaves the algebra");
}

Vec AlgebraSpec::mul_keys(const std::string& a, const std::string& b) const {
  return mult_[module_.index(a)][module_.index(b)];
}

Vec AlgebraSpec::mul(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_scaled(out, mul_keys(ka, kb), ca * cb);
  return out;
}

void AlgebraSpec::validate() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i) {
    Vec ei = unit_vec(names_[i]);
    if (diff(mul(unit_, ei), ei) != Vec{} || diff(mul(ei, unit_), ei) != Vec{})
      throw ValidationError("unit law fails on " + names_[i]);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec lhs = mul(mul_keys(names_[i], names_[j]), unit_vec(names_[k]));
        Vec rhs = mul(unit_vec(names_[i]), mul_keys(names_[j], names_[k]));
        if (diff(lhs, rhs) != Vec{}) {
          std::ostringstream os;
          os << "associativity fails on (" << names_[i] << "," << names_[j] << ","
             << names_[k] << ")";
          throw ValidationError(os.str());
        }
      }
  // Two-sidedness of the ideal.
  Span ideal;
  for (const auto& v : ideal_basis_) ideal.insert(v);
  for (const auto& v : ideal_basis_)
    for (std::size_t i = 0; i < d; ++i) {
      if (!ideal.contains(mul(unit_vec(names_[i]), v)))
        throw ValidationError("ideal not closed under left multiplication by " + names_[i]);
      if (!ideal.contains(mul(v, unit_vec(names_[i]))))
        throw ValidationError("ideal not closed under right multiplication by " + names_[i]);
    }
}

const std::vector<Span>& AlgebraSpec::ideal_powers() const {
  if (powers_) return *powers_;
  std::vector<Span> powers;
  Span j1;
  for (const auto& v : ideal_basis_) j1.insert(v);
  powers.push_back(std::move(j1));
  while (powers.back().dim() != 0) {
    Span next;
    for (const auto& u : ideal_basis_)
      for (const auto& row : powers.back().rows()) next.insert(mul(u, row));
    if (next.same_as(powers.back()))
      throw UnsupportedError("ideal is not nilpotent (powers stabilized nonzero)");
    powers.push_back(std::move(next));
  }
  powers_ = std::move(powers);
  return *powers_;
}

int AlgebraSpec::nilpotency_index() const {
  if (!has_ideal()) return 1;
  return (int)ideal_powers().size();  // powers = J^1..J^m with J^m = 0
}

int AlgebraSpec::level_of(const Vec& v) const {
  if (is_zero(v)) return kExactPrecision;
  if (!has_ideal()) return 0;
  const auto& powers = ideal_powers();
  int lv = 0;
  for (std::size_t j = 0; j < powers.size(); ++j)
    if (powers[j].contains(v)) lv = (int)j + 1;
  return lv;
}

const AlgebraSpec::Adapted& AlgebraSpec::adapted() const {
  if (adapted_) return *adapted_;
  const auto& powers = has_ideal() ? ideal_powers() : std::vector<Span>{};
  const int m = (int)powers.size();  // J^m = 0

  struct Picked {
    Vec coords;
    int level;
    std::string name;
  };
  std::vector<Picked> picked;
  Span have;
  for (int j = m; j >= 1; --j) {
    const Span& pj = powers[(std::size_t)j - 1];
    if (pj.dim() == 0) continue;
    for (const auto& n : names_) {
      Vec cand = unit_vec(n);
      if (pj.contains(cand) && have.insert(cand)) picked.push_back({cand, j, n});
    }
    for (const auto& row : pj.rows())
      if (have.insert(row)) picked.push_back({row, j, combo_name(row)});
  }
  // Level 0: start with the unit, then remaining original basis vectors.
  std::size_t unit_pos = picked.size();
  if (have.insert(unit_)) {
    std::string uname = "1@" + combo_name(unit_);
    // Prefer a plain original name when the unit is a basis vector.
    if (unit_.size() == 1 && unit_.begin()->second == 1) uname = unit_.begin()->first;
    picked.push_back({unit_, 0, uname});
  } else {
    throw ValidationError("unit lies in the nilpotent ideal");
  }
  for (const auto& n : names_) {
    Vec cand = unit_vec(n);
    if (have.insert(cand)) picked.push_back({cand, 0, n});
  }
  if (picked.size() != dim()) throw std::logic_error("adapted basis construction failed");

  std::stable_sort(picked.begin(), picked.end(),
                   [](const Picked& a, const Picked& b) { return a.level < b.level; });

  Adapted ad;
  std::vector<Vec> from_cols;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    if (picked[i].coords == unit_ && picked[i].level == 0) unit_pos = i;
    ad.names.push_back(picked[i].name);
    ad.levels.push_back(picked[i].level);
    from_cols.push_back(picked[i].coords);
  }
  ad.unit_index = unit_pos;
  FreeModule amod(ad.names);
  ad.from_adapted = LinMap(amod, module_, from_cols);
  ad.to_adapted = LinMap::from_function(module_, amod, [&](const std::string& k) {
    auto sol = solve_linear(ad.from_adapted, unit_vec(k));
    if (!sol.solution) throw std::logic_error("adapted basis inversion failed");
    return *sol.solution;
  });
  adapted_ = std::move(ad);
  return *adapted_;
}

Vec AlgebraSpec::exp_ideal(const Vec& a) const {
  Span ideal;
  for (const auto& v : ideal_basis_) ideal.insert(v);
  if (!ideal.contains(a)) throw DomainError("exp argument is not in the ideal");
  const int m = nilpotency_index();
  Vec out = unit_;
  Vec pw = unit_;
  for (int k = 1; k < m; ++k) {
    pw = mul(pw, a);
    if (is_zero(pw)) break;
    add_scaled(out, pw, Rat(1) / factorial((unsigned)k));
  }
  return out;
}

Vec AlgebraSpec::log_unit(const Vec& v) const {
  Vec u = diff(v, unit_);
  Span ideal;
  for (const auto& w : ideal_basis_) ideal.insert(w);
  if (!ideal.contains(u)) throw DomainError("log argument is not in 1 + ideal");
  const int m = nilpotency_index();
  Vec out;
  Vec pw = unit_;
  for (int k = 1; k < m; ++k) {
    pw = mul(pw, u);
    if (is_zero(pw)) break;
    add_scaled(out, pw, Rat((k % 2) ? 1 : -1) / Rat(k));
  }
  return out;
}

AlgebraSpec::Quotient AlgebraSpec::quotient_by_ideal() const {
  const Adapted& ad = adapted();
  std::vector<std::string> qnames;
  std::vector<std::size_t> qidx;
  for (std::size_t i = 0; i < ad.names.size(); ++i)
    if (ad.levels[i] == 0) {
      qnames.push_back(ad.names[i]);
      qidx.push_back(i);
    }
  FreeModule qmod(qnames);
  LinMap proj = LinMap::from_function(module_, qmod, [&](const std::string& k) {
    Vec a = ad.to_adapted.apply(unit_vec(k));
    Vec out;
    for (const auto& [ak, c] : a)
      if (qmod.contains(ak)) set_coeff(out, ak, c);
    return out;
  });
  Vec qunit = proj.apply(unit_);
  std::vector<std::vector<Vec>> qmult(qnames.size(), std::vector<Vec>(qnames.size()));
  for (std::size_t i = 0; i < qnames.size(); ++i)
    for (std::size_t j = 0; j < qnames.size(); ++j) {
      Vec rep_i = ad.from_adapted.apply(unit_vec(qnames[i]));
      Vec rep_j = ad.from_adapted.apply(unit_vec(qnames[j]));
      qmult[i][j] = proj.apply(mul(rep_i, rep_j));
    }
  return AlgebraQuotient{AlgebraSpec(qnames, qunit, std::move(qmult), {}), std::move(proj)};
}

LieAlgebraSpec AlgebraSpec::commutator_lie(const std::vector<std::string>& sub_names,
                                           const std::vector<Vec>& sub_vectors) const {
  FreeModule sub(sub_names);
  LinMap incl(sub, module_, sub_vectors);
  std::map<std::pair<int, int>, Vec> brackets;
  for (std::size_t i = 0; i < sub_names.size(); ++i)
    for (std::size_t j = i + 1; j < sub_names.size(); ++j) {
      Vec comm = diff(mul(sub_vectors[i], sub_vectors[j]), mul(sub_vectors[j], sub_vectors[i]));
      if (is_zero(comm)) continue;
      auto sol = solve_linear(incl, comm);
      if (!sol.solution)
        throw ValidationError("subspace is not closed under commutators (witness [" +
                              sub_names[i] + "," + sub_names[j] + "])");
      brackets[{(int)i, (int)j}] = *sol.solution;
    }
  return LieAlgebraSpec(sub_names, std::move(brackets));
}

std::string matrix_key(int i, int j, const std::string& aname) {
  return "E" + std::to_string(i) + std::to_string(j) + ":" + aname;
}

AlgebraSpec matrix_algebra(const AlgebraSpec& a, int n) {
  if (n < 1 || n > 9) throw ValidationError("matrix size must be in 1..9");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (const auto& an : a.names()) names.push_back(matrix_key(i, j, an));
  FreeModule mod(names);
  auto lift = [&](int i, int j, const Vec& av) {
    Vec out;
    for (const auto& [k, c] : av) set_coeff(out, matrix_key(i, j, k), c);
    return out;
  };
  Vec unit;
  for (int i = 1; i <= n; ++i) add_scaled(unit, lift(i, i, a.unit()), Rat(1));
  std::vector<std::vector<Vec>> mult(names.size(), std::vector<Vec>(names.size()));
  for (std::size_t p = 0; p < names.size(); ++p)
    for (std::size_t q = 0; q < names.size(); ++q) {
      // E_{ij}a * E_{kl}b = δ_{jk} E_{il} (ab)
      const std::string &kp = names[p], &kq = names[q];
      int i1 = kp[1] - '0', j1 = kp[2] - '0';
      int i2 = kq[1] - '0', j2 = kq[2] - '0';
      if (j1 != i2) continue;
      Vec ab = a.mul_keys(kp.substr(4), kq.substr(4));
      mult[p][q] = lift(i1, j2, ab);
    }
  std::vector<Vec> ideal;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (const auto& v : a.ideal_basis()) ideal.push_back(lift(i, j, v));
  return AlgebraSpec(names, unit, std::move(mult), std::move(ideal));
}

void TriangularSpec::validate() const {
  if (n < 1) throw ValidationError("triangular size must be >= 1");
  for (auto [i, j] : sigma) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw ValidationError("sigma pair out of range");
    if (i == j) throw ValidationError("sigma must be irreflexive");
  }
  for (auto [i, j] : sigma)
    for (auto [k, l] : sigma)
      if (j == k && !less(i, l))
        throw ValidationError("sigma must be transitive (missing " + std::to_string(i) +
                              "<" + std::to_string(l) + ")");
}

bool TriangularSpec::less(int i, int j) const {
  for (auto [a, b] : sigma)
    if (a == i && b == j) return true;
  return false;
}

TriangularBlock build_triangular(const TriangularSpec& spec) {
  spec.validate();
  const AlgebraSpec& A = spec.base;
  TriangularBlock out{matrix_algebra(A, spec.n), {}, {}, A, LinMap{}, LieAlgebraSpec({"x"}, {}), 0};

  const auto& ad = A.adapted();
  auto lift = [&](int i, int j, const Vec& av) {
    Vec outv;
    for (const auto& [k, c] : av) set_coeff(outv, matrix_key(i, j, k), c);
    return outv;
  };
  for (int i = 1; i <= spec.n; ++i)
    for (int j = 1; j <= spec.n; ++j) {
      if (spec.less(i - 1, j - 1)) {
        for (const auto& an : A.names()) {
          out.t_names.push_back(matrix_key(i, j, an));
          out.t_vectors.push_back(lift(i, j, unit_vec(an)));
        }
      } else {
        for (std::size_t p = 0; p < ad.names.size(); ++p) {
          if (ad.levels[p] == 0) continue;
          Vec av = ad.from_adapted.apply(unit_vec(ad.names[p]));
          std::string nm = ad.names[p];
          out.t_names.push_back("E" + std::to_string(i) + std::to_string(j) + ":" + nm);
          out.t_vectors.push_back(lift(i, j, av));
        }
      }
    }

  // Unitalization Q + 𝒯 with ideal 𝒯; closure under multiplication is checked
  // by expressing every basis product back in 𝒯 coordinates.
  FreeModule tmod(out.t_names);
  LinMap t_incl(tmod, out.ambient.module(), out.t_vectors);
  std::vector<std::string> unames;
  unames.push_back("1");
  for (const auto& n : out.t_names) unames.push_back(n);
  Vec uunit = unit_vec("1");
  const std::size_t ud = unames.size();
  std::vector<std::vector<Vec>> umult(ud, std::vector<Vec>(ud));
  for (std::size_t p = 0; p < ud; ++p)
    for (std::size_t q = 0; q < ud; ++q) {
      if (p == 0 && q == 0) {
        umult[p][q] = uunit;
      } else if (p == 0) {
        umult[p][q] = unit_vec(unames[q]);
      } else if (q == 0) {
        umult[p][q] = unit_vec(unames[p]);
      } else {
        Vec prod = out.ambient.mul(out.t_vectors[p - 1], out.t_vectors[q - 1]);
        if (is_zero(prod)) continue;
        auto sol = solve_linear(t_incl, prod);
        if (!sol.solution)
          throw ValidationError("triangular block not closed under multiplication: " +
                                unames[p] + " * " + unames[q]);
        umult[p][q] = *sol.solution;
      }
    }
  std::vector<Vec> uideal;
  for (const auto& n : out.t_names) uideal.push_back(unit_vec(n));
  out.unital = AlgebraSpec(unames, uunit, std::move(umult), std::move(uideal));

  std::vector<Vec> embed_cols;
  embed_cols.push_back(out.ambient.unit());
  for (const auto& v : out.t_vectors) embed_cols.push_back(v);
  out.embed = LinMap(out.unital.module(), out.ambient.module(), std::move(embed_cols));

  out.t_lie = out.ambient.commutator_lie(out.t_names, out.t_vectors);
  out.nilpotency_index = out.unital.nilpotency_index();
  int bound = spec.n * (A.has_ideal() ? A.nilpotency_index() : 1);
  if (out.nilpotency_index > bound)
    throw std::logic_error("triangular nilpotency index exceeds its bound");
  return out;
}

}  // namespace hopfcyc
