#include "hopfcyc/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace hopfcyc {

Vec HopfAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_scaled(out, mul_keys(ka, kb), ca * cb);
  return out;
}

Rat HopfAlgebra::counit(const Vec& v) const {
  Rat out(0);
  for (const auto& [k, c] : v) out += c * counit_key(k);
  return out;
}

Vec HopfAlgebra::comul(const Vec& v) const {
  Vec out;
  for (const auto& [k, c] : v) add_scaled(out, comul_key(k), c);
  return out;
}

Vec HopfAlgebra::antipode(const Vec& v) const {
  Vec out;
  for (const auto& [k, c] : v) add_scaled(out, antipode_key(k), c);
  return out;
}

Vec HopfAlgebra::to_adapted(const Vec& natural) const {
  Vec out;
  for (const auto& [k, c] : natural) add_scaled(out, to_adapted_key(k), c);
  return out;
}

Vec HopfAlgebra::from_adapted(const Vec& adapted) const {
  Vec out;
  for (const auto& [k, c] : adapted) add_scaled(out, from_adapted_key(k), c);
  return out;
}

Vec HopfAlgebra::delta_iter(const Vec& h, int factors, int per_factor_precision) const {
  if (factors < 1) throw PrecisionError("delta_iter needs at least one factor");
  const int M = per_factor_precision;
  if (precision() != kExactPrecision && (long)factors * M > (long)precision()) {
    std::ostringstream os;
    os << "insufficient precision for a " << factors << "-fold coproduct at per-factor "
       << "level " << M << ": requires input valid mod I^" << factors * M
       << ", descriptor has I^" << precision();
    throw PrecisionError(os.str());
  }
  Vec words = h;
  for (int step = 1; step < factors; ++step) {
    Vec next;
    for (const auto& [w, c] : words) {
      auto parts = word_split(w);
      Vec dz = comul_key(parts[0]);
      for (const auto& [pair_key, pc] : dz) {
        std::string nw = pair_key;
        for (std::size_t i = 1; i < parts.size(); ++i) nw += "|" + parts[i];
        Rat cc = c * pc;
        auto it = next.find(nw);
        if (it == next.end())
          next.emplace(std::move(nw), cc);
        else {
          it->second += cc;
          if (it->second == 0) next.erase(it);
        }
      }
    }
    words = std::move(next);
  }
  if (precision() == kExactPrecision) return words;
  Vec out;
  for (const auto& [w, c] : words) {
    bool alive = true;
    for (const auto& p : word_split(w))
      if (adapted_level(p) >= M) {
        alive = false;
        break;
      }
    if (alive) out.emplace(w, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// EnvelopingHopf

EnvelopingHopf::EnvelopingHopf(LieAlgebraSpec lie_user, std::optional<int> trunc)
    : env_(lie_user.adapted(), trunc) {
  lie_user.validate();
}

EnvelopingHopf::EnvelopingHopf(Enveloping env) : env_(std::move(env)) {}

std::string EnvelopingHopf::name() const {
  std::ostringstream os;
  os << "U(dim=" << env_.lie().dim() << ")";
  if (env_.trunc()) os << "/I^" << *env_.trunc();
  return os.str();
}

Vec EnvelopingHopf::mul_keys(const std::string& a, const std::string& b) const {
  return env_.mul_keys(a, b);
}

Rat EnvelopingHopf::counit_key(const std::string& k) const {
  return k == "1" ? Rat(1) : Rat(0);
}

Vec EnvelopingHopf::comul_key(const std::string& k) const {
  auto hit = comul_cache_.find(k);
  if (hit != comul_cache_.end()) return hit->second;
  // Δ is multiplicative and each Lie letter is primitive.
  const auto& lie = env_.lie();
  PbwMonomial m = pbw_parse(lie.module(), k);
  const int cap = env_.trunc() ? *env_.trunc() : -1;
  Vec acc = unit_vec("1|1");
  for (std::size_t i = 0; i < m.size(); ++i) {
    PbwMonomial letter(lie.dim(), 0);
    letter[i] = 1;
    std::string xk = pbw_key(lie.names(), letter);
    for (unsigned r = 0; r < m[i]; ++r) {
      Vec next;
      for (const auto& [w, c] : acc) {
        auto parts = word_split(w);
        // (u|v)·(x|1) and (u|v)·(1|x)
        for (int slot = 0; slot < 2; ++slot) {
          Vec side = env_.mul_keys(parts[(std::size_t)slot], xk);
          for (const auto& [sk, sc] : side) {
            std::string u = slot == 0 ? sk : parts[0];
            std::string v = slot == 0 ? parts[1] : sk;
            if (cap >= 0 && env_.level_key(u) + env_.level_key(v) >= cap) continue;
            Rat cc = c * sc;
            auto it = next.find(u + "|" + v);
            if (it == next.end())
              next.emplace(u + "|" + v, cc);
            else {
              it->second += cc;
              if (it->second == 0) next.erase(it);
            }
          }
        }
      }
      acc = std::move(next);
    }
  }
  comul_cache_.emplace(k, acc);
  return acc;
}

Vec EnvelopingHopf::antipode_key(const std::string& k) const { return env_.antipode_key(k); }

std::optional<std::vector<std::string>> EnvelopingHopf::carrier_keys() const {
  if (!env_.trunc()) return std::nullopt;
  return env_.carrier();
}

Truncation EnvelopingHopf::truncate(int N) const {
  if (env_.trunc() && *env_.trunc() < N)
    throw PrecisionError("cannot truncate below the descriptor's precision");
  auto target = std::make_shared<EnvelopingHopf>(Enveloping(env_.adapted_form(), N));
  auto push = [target](const Vec& v) {
    Vec out;
    for (const auto& [k, c] : v)
      if (target->env().level_key(k) < *target->env().trunc()) set_coeff(out, k, c);
    return out;
  };
  return Truncation{target, push};
}

// ---------------------------------------------------------------------------
// MalcevGroupHopf

namespace {

// Term rendering for group keys: rat*name joined by '+'; parsing is
// paren-depth aware because synthesized basis names may contain '+', '*'.
std::string render_lie_coords(const LieAlgebraSpec& lie, const Vec& coords) {
  std::string out;
  for (const auto& n : lie.names()) {
    Rat c = coeff(coords, n);
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    out += rat_str(c) + "*" + n;
  }
  return out.empty() ? "0" : out;
}

Vec parse_lie_coords(const LieAlgebraSpec& lie, const std::string& body) {
  Vec out;
  if (body == "0") return out;
  std::vector<std::string> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == '+' && depth == 0)) {
      terms.push_back(body.substr(start, i - start));
      start = i + 1;
    } else if (body[i] == '(') {
      ++depth;
    } else if (body[i] == ')') {
      --depth;
    }
  }
  for (const auto& t : terms) {
    auto star = t.find('*');
    if (star == std::string::npos) throw ParseError("bad group key term '" + t + "'");
    Rat c = rat_parse(t.substr(0, star));
    std::string name = t.substr(star + 1);
    if (!lie.module().contains(name)) throw ParseError("unknown generator '" + name + "'");
    add_scaled(out, unit_vec(name), c);
  }
  return out;
}

}  // namespace

MalcevGroupHopf::MalcevGroupHopf(LieAlgebraSpec lie_user)
    : lie_(std::move(lie_user)), adapted_(lie_.adapted()), bch_env_(adapted_, 2) {
  lie_.validate();
  auto cls = lie_.nilpotency_class();
  if (!cls) throw UnsupportedError("Malcev group needs a nilpotent Lie algebra");
  class_ = *cls;
  bch_env_ = Enveloping(adapted_, class_ + 1);
}

std::string MalcevGroupHopf::name() const {
  return "Q[exp g](dim=" + std::to_string(lie_.dim()) + ")";
}

std::string MalcevGroupHopf::key_of(const Vec& lie_coords) const {
  return "exp(" + render_lie_coords(lie_, lie_coords) + ")";
}

Vec MalcevGroupHopf::log_of(const std::string& group_key) const {
  if (group_key.size() < 6 || group_key.substr(0, 4) != "exp(" || group_key.back() != ')')
    throw ParseError("bad group key '" + group_key + "'");
  return parse_lie_coords(lie_, group_key.substr(4, group_key.size() - 5));
}

std::string MalcevGroupHopf::unit_key() const { return "exp(0)"; }

Vec MalcevGroupHopf::mul_keys(const std::string& a, const std::string& b) const {
  Vec xa = log_of(a), xb = log_of(b);
  Vec prod = bch_env_.mul(bch_env_.exp_aug(bch_env_.from_lie(xa)),
                          bch_env_.exp_aug(bch_env_.from_lie(xb)));
  return unit_vec(key_of(bch_env_.to_lie(bch_env_.log_unit(prod))));
}

Vec MalcevGroupHopf::comul_key(const std::string& k) const { return unit_vec(k + "|" + k); }

Vec MalcevGroupHopf::antipode_key(const std::string& k) const {
  return unit_vec(key_of(scaled(log_of(k), Rat(-1))));
}

Vec MalcevGroupHopf::to_adapted_key(const std::string& k) const {
  if (k == unit_key()) return unit_vec(k);
  Vec out = unit_vec(unit_key());
  set_coeff(out, "d:" + k, Rat(1));
  return out;
}

Vec MalcevGroupHopf::from_adapted_key(const std::string& k) const {
  if (k.rfind("d:", 0) == 0) {
    Vec out = unit_vec(k.substr(2));
    add_scaled(out, unit_vec(unit_key()), Rat(-1));
    return out;
  }
  return unit_vec(k);
}

int MalcevGroupHopf::adapted_level(const std::string& k) const {
  if (k.rfind("d:", 0) != 0) return 0;
  // level(g-1) = LCS weight of log g (exact for the I_G-adic filtration).
  Vec ad = adapted_.to_adapted.apply(log_of(k.substr(2)));
  int lv = kExactPrecision;
  for (const auto& [name, c] : ad) {
    (void)c;
    lv = std::min(lv, adapted_.weights[adapted_.lie.module().index(name)]);
  }
  return lv;
}

Truncation MalcevGroupHopf::truncate(int N) const {
  auto target = std::make_shared<EnvelopingHopf>(Enveloping(adapted_, N));
  const MalcevGroupHopf* self = this;
  auto push = [self, target](const Vec& v) {
    Vec out;
    for (const auto& [k, c] : v) add_scaled(out, self->embed_key(k, target->env()), c);
    return out;
  };
  return Truncation{target, push};
}

Vec MalcevGroupHopf::embed_key(const std::string& group_key, const Enveloping& env) const {
  return env.exp_aug(env.from_lie(log_of(group_key)));
}

// ---------------------------------------------------------------------------
// FiniteGroupHopf

FiniteGroupHopf::FiniteGroupHopf(
    std::vector<std::string> elements,
    std::map<std::pair<std::string, std::string>, std::string> table, std::string identity)
    : elements_(std::move(elements)), table_(std::move(table)), identity_(std::move(identity)) {
  for (const auto& g : elements_) FreeModule::validate_name(g);
  auto prod = [&](const std::string& a, const std::string& b) {
    auto it = table_.find({a, b});
    if (it == table_.end()) throw ValidationError("incomplete multiplication table");
    return it->second;
  };
  for (const auto& a : elements_) {
    if (prod(identity_, a) != a || prod(a, identity_) != a)
      throw ValidationError("identity law fails on " + a);
    bool has_inverse = false;
    for (const auto& b : elements_)
      if (prod(a, b) == identity_ && prod(b, a) == identity_) {
        inverse_[a] = b;
        has_inverse = true;
        break;
      }
    if (!has_inverse) throw ValidationError("no inverse for " + a);
  }
  for (const auto& a : elements_)
    for (const auto& b : elements_)
      for (const auto& c : elements_)
        if (prod(prod(a, b), c) != prod(a, prod(b, c)))
          throw ValidationError("group law not associative at (" + a + "," + b + "," + c + ")");

  // I_G-adic levels of the g-1 basis, by power iteration in k[G].
  auto mulv = [&](const Vec& x, const Vec& y) {
    Vec out;
    for (const auto& [ka, ca] : x)
      for (const auto& [kb, cb] : y) add_scaled(out, unit_vec(prod(ka, kb)), ca * cb);
    return out;
  };
  std::vector<Vec> aug;
  for (const auto& g : elements_)
    if (g != identity_) aug.push_back(diff(unit_vec(g), unit_vec(identity_)));
  std::vector<Span> powers;
  Span i1;
  for (const auto& v : aug) i1.insert(v);
  powers.push_back(std::move(i1));
  while (powers.back().dim() != 0) {
    Span next;
    for (const auto& u : aug)
      for (const auto& row : powers.back().rows()) next.insert(mulv(u, row));
    if (next.same_as(powers.back())) break;
    powers.push_back(std::move(next));
  }
  levels_.assign(elements_.size(), 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == identity_) continue;
    Vec v = diff(unit_vec(elements_[i]), unit_vec(identity_));
    int lv = 0;
    for (std::size_t j = 0; j < powers.size(); ++j)
      if (powers[j].contains(v)) lv = (int)j + 1;
    if (powers.back().dim() != 0 && powers.back().contains(v)) lv = kExactPrecision;
    levels_[i] = lv;
  }
}

Vec FiniteGroupHopf::mul_keys(const std::string& a, const std::string& b) const {
  return unit_vec(table_.at({a, b}));
}

Vec FiniteGroupHopf::comul_key(const std::string& k) const { return unit_vec(k + "|" + k); }

Vec FiniteGroupHopf::antipode_key(const std::string& k) const {
  return unit_vec(inverse_.at(k));
}

Vec FiniteGroupHopf::to_adapted_key(const std::string& k) const {
  if (k == identity_) return unit_vec(k);
  Vec out = unit_vec(identity_);
  set_coeff(out, "d:" + k, Rat(1));
  return out;
}

Vec FiniteGroupHopf::from_adapted_key(const std::string& k) const {
  if (k.rfind("d:", 0) == 0) {
    Vec out = unit_vec(k.substr(2));
    add_scaled(out, unit_vec(identity_), Rat(-1));
    return out;
  }
  return unit_vec(k);
}

int FiniteGroupHopf::adapted_level(const std::string& k) const {
  if (k.rfind("d:", 0) != 0) return 0;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == k.substr(2)) return levels_[i];
  throw ShapeError("unknown adapted key " + k);
}

std::optional<std::vector<std::string>> FiniteGroupHopf::adapted_carrier_keys() const {
  std::vector<std::string> keys{identity_};
  for (const auto& g : elements_)
    if (g != identity_) keys.push_back("d:" + g);
  return keys;
}

// ---------------------------------------------------------------------------
// CorruptedComulHopf

CorruptedComulHopf::CorruptedComulHopf(HopfPtr inner, std::map<std::string, Vec> override_comul)
    : inner_(std::move(inner)), override_(std::move(override_comul)) {}

Vec CorruptedComulHopf::comul_key(const std::string& k) const {
  auto it = override_.find(k);
  return it == override_.end() ? inner_->comul_key(k) : it->second;
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

Vec tensor_swap(const Vec& v) {
  Vec out;
  for (const auto& [w, c] : v) {
    auto p = word_split(w);
    set_coeff(out, p[1] + "|" + p[0], c);
  }
  return out;
}

}  // namespace

std::vector<AxiomCheck> check_hopf_axioms(const HopfAlgebra& h,
                                          const std::vector<std::string>& sample,
                                          std::size_t max_tuples) {
  std::vector<AxiomCheck> out;
  auto record = [&](const std::string& axiom, bool pass, const std::string& witness) {
    out.push_back({axiom, pass, pass ? "" : witness});
  };

  // Tensor identities live in (H^{⊗k})/F_N for truncated descriptors; both
  // sides are compared after reduction mod total level N.
  auto drop_total = [&](const Vec& v) {
    if (h.precision() == kExactPrecision) return v;
    Vec outv;
    for (const auto& [w, c] : v) {
      int lv = 0;
      for (const auto& p : word_split(w)) lv += h.adapted_level(p);
      if (lv < h.precision()) outv.emplace(w, c);
    }
    return outv;
  };

  auto comul2_left = [&](const std::string& k) {  // (Δ⊗1)Δ
    Vec res;
    for (const auto& [w, c] : h.comul_key(k)) {
      auto p = word_split(w);
      for (const auto& [w2, c2] : h.comul_key(p[0])) res[w2 + "|" + p[1]] += c * c2;
    }
    std::erase_if(res, [](const auto& kv) { return kv.second == 0; });
    return res;
  };
  auto comul2_right = [&](const std::string& k) {  // (1⊗Δ)Δ
    Vec res;
    for (const auto& [w, c] : h.comul_key(k)) {
      auto p = word_split(w);
      for (const auto& [w2, c2] : h.comul_key(p[1])) res[p[0] + "|" + w2] += c * c2;
    }
    std::erase_if(res, [](const auto& kv) { return kv.second == 0; });
    return res;
  };

  bool ok;
  std::string wit;

  // ε∘η = 1 and S(1) = 1.
  record("counit_unit", h.counit_key(h.unit_key()) == 1, "eps(1) != 1");
  record("antipode_unit", h.antipode_key(h.unit_key()) == unit_vec(h.unit_key()),
         "S(1) != 1");

  ok = true;
  wit.clear();
  for (const auto& k : sample) {
    Vec dz = h.comul_key(k);
    Vec left, right;
    for (const auto& [w, c] : dz) {
      auto p = word_split(w);
      add_scaled(left, unit_vec(p[1]), c * h.counit_key(p[0]));
      add_scaled(right, unit_vec(p[0]), c * h.counit_key(p[1]));
    }
    if (left != unit_vec(k) || right != unit_vec(k)) {
      ok = false;
      wit = "counit law fails on " + k;
      break;
    }
  }
  record("counit_law", ok, wit);

  ok = true;
  wit.clear();
  for (const auto& k : sample) {
    if (drop_total(comul2_left(k)) != drop_total(comul2_right(k))) {
      ok = false;
      wit = "coassociativity fails on " + k;
      break;
    }
  }
  record("coassociativity", ok, wit);

  ok = true;
  wit.clear();
  for (const auto& k : sample) {
    Vec dz = h.comul_key(k);
    if (tensor_swap(dz) != dz) {
      ok = false;
      wit = "cocommutativity fails on " + k;
      break;
    }
  }
  record("cocommutativity", ok, wit);

  ok = true;
  wit.clear();
  for (const auto& k : sample) {
    Vec lhs, rhs;
    for (const auto& [w, c] : h.comul_key(k)) {
      auto p = word_split(w);
      add_scaled(lhs, h.mul(h.antipode_key(p[0]), unit_vec(p[1])), c);
      add_scaled(rhs, h.mul(unit_vec(p[0]), h.antipode_key(p[1])), c);
    }
    Vec target = scaled(unit_vec(h.unit_key()), h.counit_key(k));
    if (lhs != target || rhs != target) {
      ok = false;
      wit = "antipode identity fails on " + k + ": (Sh0)h1 = " + vec_str(lhs) +
            ", eta eps = " + vec_str(target);
      break;
    }
  }
  record("antipode_identity", ok, wit);

  ok = true;
  wit.clear();
  for (const auto& k : sample) {
    Vec s2 = h.antipode(h.antipode_key(k));
    if (s2 != unit_vec(k)) {
      ok = false;
      wit = "S^2 != 1 on " + k;
      break;
    }
  }
  record("antipode_involution", ok, wit);

  std::size_t pair_cap = std::min(sample.size(), max_tuples);
  ok = true;
  wit.clear();
  for (std::size_t i = 0; i < pair_cap && ok; ++i)
    for (std::size_t j = 0; j < pair_cap && ok; ++j) {
      const auto &a = sample[i], &b = sample[j];
      Vec ab = h.mul_keys(a, b);
      // Δ(ab) = Δ(a)Δ(b) slotwise.
      Vec lhs = drop_total(h.comul(ab));
      Vec rhs;
      for (const auto& [wa, ca] : h.comul_key(a))
        for (const auto& [wb, cb] : h.comul_key(b)) {
          auto pa = word_split(wa);
          auto pb = word_split(wb);
          Vec u = h.mul_keys(pa[0], pb[0]);
          Vec v = h.mul_keys(pa[1], pb[1]);
          for (const auto& [ku, cu] : u)
            for (const auto& [kv, cv] : v) rhs[ku + "|" + kv] += ca * cb * cu * cv;
        }
      std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
      rhs = drop_total(rhs);
      if (lhs != rhs) {
        ok = false;
        wit = "comultiplicativity fails on (" + a + "," + b + ")";
      }
      if (h.counit(ab) != h.counit_key(a) * h.counit_key(b)) {
        ok = false;
        wit = "counit multiplicativity fails on (" + a + "," + b + ")";
      }
      Vec sab = h.antipode(ab);
      Vec sba = h.mul(h.antipode_key(b), h.antipode_key(a));
      if (sab != sba) {
        ok = false;
        wit = "antipode antihomomorphism fails on (" + a + "," + b + ")";
      }
    }
  record("bialgebra_pairs", ok, wit);

  std::size_t triple_cap = std::min(sample.size(), max_tuples / 2 + 1);
  ok = true;
  wit.clear();
  for (std::size_t i = 0; i < triple_cap && ok; ++i)
    for (std::size_t j = 0; j < triple_cap && ok; ++j)
      for (std::size_t k = 0; k < triple_cap && ok; ++k) {
        Vec lhs = h.mul(h.mul_keys(sample[i], sample[j]), unit_vec(sample[k]));
        Vec rhs = h.mul(unit_vec(sample[i]), h.mul_keys(sample[j], sample[k]));
        if (lhs != rhs) {
          ok = false;
          wit = "associativity fails on (" + sample[i] + "," + sample[j] + "," +
                sample[k] + ")";
        }
      }
  record("associativity", ok, wit);

  return out;
}

std::vector<std::string> malcev_sample(const MalcevGroupHopf& g, std::size_t count) {
  std::vector<std::string> keys;
  std::vector<Vec> coords;
  coords.push_back({});
  const auto& names = g.lie().names();
  for (const auto& n : names) coords.push_back(unit_vec(n));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      coords.push_back(sum(unit_vec(names[i]), unit_vec(names[j])));
  for (const auto& n : names) coords.push_back(scaled(unit_vec(n), rat(1, 2)));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (i == j) continue;
      Vec v = unit_vec(names[i]);
      add_scaled(v, unit_vec(names[j]), rat(-2, 3));
      coords.push_back(v);
    }
  for (int mult : {2, 3})
    for (const auto& n : names) coords.push_back(scaled(unit_vec(n), Rat(mult)));
  for (const auto& n : names) {
    Vec v = scaled(unit_vec(n), rat(1, 4));
    add_scaled(v, unit_vec(names[0]), rat(5, 7));
    coords.push_back(v);
  }
  for (const auto& v : coords) {
    if (keys.size() >= count) break;
    std::string k = g.key_of(v);
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  }
  return keys;
}

}  // namespace hopfcyc
