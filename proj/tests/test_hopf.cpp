#include <doctest.h>

#include "support/instances.hpp"

using namespace hopfcyc;
using namespace hopfcyc::testing;

namespace {

bool all_pass(const std::vector<AxiomCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) {
      MESSAGE("axiom failed: " << c.axiom << " " << c.witness);
      return false;
    }
  return true;
}

}  // namespace

TEST_CASE("U(abelian Q)/I^4 passes all Hopf axioms") {
  auto h = std::make_shared<EnvelopingHopf>(abelian_lie(1), 4);
  CHECK(all_pass(check_hopf_axioms(*h, *h->carrier_keys())));
}

TEST_CASE("U(Heisenberg)/I^3 passes all Hopf axioms") {
  auto h = std::make_shared<EnvelopingHopf>(heisenberg(), 3);
  CHECK(all_pass(check_hopf_axioms(*h, *h->carrier_keys())));
}

TEST_CASE("Q[exp(Heisenberg)] on 20 sampled elements passes all axioms") {
  auto g = std::make_shared<MalcevGroupHopf>(heisenberg());
  auto sample = malcev_sample(*g, 20);
  CHECK(sample.size() == 20);
  CHECK(all_pass(check_hopf_axioms(*g, sample, 5)));
}

TEST_CASE("grouplike structure of the Malcev descriptor") {
  MalcevGroupHopf g(heisenberg());
  std::string gx = g.key_of(unit_vec("x"));
  CHECK(g.comul_key(gx) == unit_vec(gx + "|" + gx));
  CHECK(g.antipode_key(gx) == unit_vec(g.key_of(scaled(unit_vec("x"), Rat(-1)))));
  CHECK(g.counit_key(gx) == 1);
  // eps(sum c_g g) = sum c_g
  Vec v = sum(scaled(unit_vec(gx), rat(2, 3)), unit_vec(g.unit_key()));
  CHECK(g.counit(v) == rat(5, 3));
}

TEST_CASE("corrupted coproduct is caught with witness x") {
  auto inner = std::make_shared<EnvelopingHopf>(abelian_lie(1), 3);
  // drop the 1⊗x term of Δ(x)
  std::map<std::string, Vec> bad{{"x1", unit_vec("x1|1")}};
  CorruptedComulHopf h(inner, bad);
  auto checks = check_hopf_axioms(h, *h.carrier_keys());
  bool antipode_failed = false;
  for (const auto& c : checks)
    if (c.axiom == "antipode_identity" && !c.pass &&
        c.witness.find("x1") != std::string::npos)
      antipode_failed = true;
  CHECK(antipode_failed);
}

TEST_CASE("coproduct values") {
  SUBCASE("primitive generator") {
    EnvelopingHopf h(heisenberg(), 3);
    Vec d = h.comul_key("x");
    CHECK(d == sum(unit_vec("x|1"), unit_vec("1|x")));
  }
  SUBCASE("Delta(x^2) = x^2⊗1 + 2x⊗x + 1⊗x^2") {
    EnvelopingHopf h(abelian_lie(1), 3);
    Vec d = h.comul_key("x1.x1");
    CHECK(coeff(d, "x1.x1|1") == 1);
    CHECK(coeff(d, "x1|x1") == 2);
    CHECK(coeff(d, "1|x1.x1") == 1);
    CHECK(d.size() == 3);
  }
}

TEST_CASE("delta_iter") {
  SUBCASE("n=2 on a grouplike is g⊗g") {
    MalcevGroupHopf g(heisenberg());
    std::string k = g.key_of(unit_vec("y"));
    CHECK(g.delta_iter(unit_vec(k), 2, 1) == unit_vec(k + "|" + k));
  }
  SUBCASE("n=3 on a primitive") {
    EnvelopingHopf h(heisenberg(), std::nullopt);
    Vec d = h.delta_iter(unit_vec("x"), 3, 1);
    CHECK(d == sum(sum(unit_vec("x|1|1"), unit_vec("1|x|1")), unit_vec("1|1|x")));
  }
  SUBCASE("n=2 on x1.x2, abelian") {
    EnvelopingHopf h(abelian_lie(2), std::nullopt);
    Vec d = h.delta_iter(unit_vec("x1.x2"), 2, 3);
    CHECK(coeff(d, "x1.x2|1") == 1);
    CHECK(coeff(d, "x1|x2") == 1);
    CHECK(coeff(d, "x2|x1") == 1);
    CHECK(coeff(d, "1|x1.x2") == 1);
    CHECK(d.size() == 4);
  }
  SUBCASE("budget violations raise precision errors naming the level") {
    EnvelopingHopf h(heisenberg(), 3);
    CHECK_THROWS_AS((void)h.delta_iter(unit_vec("x"), 2, 2), PrecisionError);
    try {
      (void)h.delta_iter(unit_vec("x"), 2, 2);
    } catch (const PrecisionError& e) {
      CHECK(std::string(e.what()).find("I^4") != std::string::npos);
    }
  }
  SUBCASE("precision soundness: higher precision then truncate agrees") {
    EnvelopingHopf h6(heisenberg(), 6);
    EnvelopingHopf h4(heisenberg(), 4);
    Vec v = h6.mul_keys("x.y", "y");  // some element of level 3
    Vec d6 = h6.delta_iter(v, 2, 2);
    Vec v4;
    for (const auto& [k, c] : v)
      if (h4.adapted_level(k) < 4) set_coeff(v4, k, c);
    Vec d4 = h4.delta_iter(v4, 2, 2);
    CHECK(d6 == d4);
  }
}

TEST_CASE("Malcev realization: Q[G] -> U/I^N is a Hopf map up to precision") {
  MalcevGroupHopf g(heisenberg());
  auto tr = g.truncate(3);
  const auto& u = dynamic_cast<const EnvelopingHopf&>(*tr.hopf);
  auto sample = malcev_sample(g, 8);
  for (const auto& a : sample) {
    Vec ua = tr.push(unit_vec(a));
    // counit
    CHECK(u.counit(ua) == g.counit_key(a));
    // antipode
    CHECK(u.antipode(ua) == tr.push(g.antipode_key(a)));
    // comultiplication: push ⊗ push of g|g vs Δ(push), mod total level 3
    Vec lhs = u.comul(ua);
    Vec rhs;
    for (const auto& [ka, ca] : ua)
      for (const auto& [kb, cb] : ua) {
        if (u.adapted_level(ka) + u.adapted_level(kb) >= 3) continue;
        rhs[ka + "|" + kb] += ca * cb;
      }
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    CHECK(lhs == rhs);
  }
  for (const auto& a : sample)
    for (const auto& b : sample) {
      Vec lhs = tr.push(g.mul_keys(a, b));
      Vec rhs = u.mul(tr.push(unit_vec(a)), tr.push(unit_vec(b)));
      REQUIRE(lhs == rhs);
    }
  // dimension of the truncated model
  CHECK(u.carrier_keys()->size() == 7);
}

TEST_CASE("finite cyclic group C3") {
  std::map<std::pair<std::string, std::string>, std::string> tbl;
  std::vector<std::string> els{"e", "g", "gg"};
  auto mulname = [&](int i, int j) { return els[(std::size_t)((i + j) % 3)]; };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) tbl[{els[(std::size_t)i], els[(std::size_t)j]}] = mulname(i, j);
  FiniteGroupHopf h(els, tbl, "e");
  CHECK(all_pass(check_hopf_axioms(h, els)));
  CHECK(h.antipode_key("g") == unit_vec("gg"));
}
