#include "phec/hecke.hpp"

#include <random>

#include "doctest.h"
#include "phec/error.hpp"

#include "../golden/oracle_frozen.inc"

using namespace phec;

namespace {

// deterministic random element: product of letters, omega generators and z
W1El rand_w1(std::mt19937& rng, const HeckeAlg& A, int steps) {
  const W1& w1 = A.w1();
  const ZkGroup& Zk = A.inst().Zk;
  W1El x = w1.one();
  std::uniform_int_distribution<int> pick(0, A.nletters() + 1);
  for (int i = 0; i < steps; ++i) {
    int c = pick(rng);
    if (c < A.nletters()) {
      x = w1.mul(x, A.letter(c).elem);
    } else if (c == A.nletters() && !A.inst().W.omega_gens().empty()) {
      std::uniform_int_distribution<int> og(0, int(A.inst().W.omega_gens().size()) - 1);
      x = w1.mul(x, W1El{Zk.zero(), A.inst().W.omega_gens()[size_t(og(rng))]});
    } else if (Zk.rank() > 0) {
      LVec z = Zk.zero();
      for (size_t k = 0; k < z.size(); ++k)
        z[k] = std::uniform_int_distribution<std::int64_t>(0, Zk.factors()[k] - 1)(rng);
      x = w1.mul(x, w1.from_z(z));
    }
  }
  return x;
}

W1El rand_wm(std::mt19937& rng, const HeckeAlg& A, int steps) {
  // like rand_w1 but M-letters, z and plain translations: stays in W_M(1)
  const W1& w1 = A.w1();
  const ZkGroup& Zk = A.inst().Zk;
  const ExtWeyl& W = A.inst().W;
  W1El x = w1.one();
  std::uniform_int_distribution<int> pick(0, A.nletters() + 1);
  for (int i = 0; i < steps; ++i) {
    int c = pick(rng);
    if (c < A.nletters()) {
      x = w1.mul(x, A.letter(c).elem);
    } else if (c == A.nletters() && W.lat_rank() > 0) {
      LVec lam(size_t(W.lat_rank()), 0);
      int j = std::uniform_int_distribution<int>(0, W.lat_rank() - 1)(rng);
      lam[size_t(j)] = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
      x = w1.mul(x, W1El{Zk.zero(), W.t(lam)});
    } else if (Zk.rank() > 0) {
      LVec z = Zk.zero();
      for (size_t k = 0; k < z.size(); ++k)
        z[k] = std::uniform_int_distribution<std::int64_t>(0, Zk.factors()[k] - 1)(rng);
      x = w1.mul(x, w1.from_z(z));
    }
  }
  return x;
}

HElem rand_elem(std::mt19937& rng, const HeckeAlg& A, int nterms, int steps) {
  HElem e = A.zero();
  for (int i = 0; i < nterms; ++i) {
    Poly c = poly_from_int(A.ring(), std::uniform_int_distribution<int>(-3, 3)(rng));
    if (c.is_zero()) c = poly_one(A.ring());
    if (A.ring().is_poly())
      c = poly_mul(A.ring(), c,
                   poly_var(A.ring(), 0, std::uniform_int_distribution<int>(0, 2)(rng)));
    e = A.add(e, A.scale(A.T(A.is_levi() ? rand_wm(rng, A, steps)
                                          : rand_w1(rng, A, steps)),
                         c));
  }
  return e;
}

}  // namespace

TEST_CASE("finite A2 golden products") {
  auto inst = make_instance("fin_a2");
  HeckeAlg H = HeckeAlg::ambient(inst);
  const ExtWeyl& W = inst->W;
  W1El w0{inst->Zk.zero(), W.from_fin(W.fin().longest())};
  W1El s1 = H.letter(0).elem;

  CHECK(H.str(H.mul(H.T(w0), H.T(s1))) == kGoldenA2W0TimesS1);

  W1El s1s2 = H.w1().mul(H.letter(0).elem, H.letter(1).elem);
  CHECK(H.str(H.to_basis(H.Tstar(s1s2), Basis::T)) == kGoldenA2StarS1S2);
}

TEST_CASE("quadratic relation in every builtin instance") {
  for (const std::string& name : builtin_instances()) {
    auto inst = make_instance(name);
    HeckeAlg H = [&] {
      if (name == "aff_a1_glq3")
        return HeckeAlg::ambient(inst, Ring::integers(), {Int(3)});
      return HeckeAlg::ambient(inst);
    }();
    for (int a = 0; a < H.nletters(); ++a) {
      const auto& L = H.letter(a);
      HElem lhs = H.mul(H.T(L.elem), H.T(L.elem));
      HElem rhs = H.scale(H.T(H.w1().mul(L.elem, L.elem)), H.q(a));
      for (const auto& [t, cv] : L.c)
        rhs = H.add(rhs, H.scale(H.T(H.w1().mul(H.w1().from_z(t), L.elem)), cv));
      CAPTURE(name);
      CAPTURE(a);
      CHECK(H.eq(lhs, rhs));
    }
  }
}

TEST_CASE("glq3 requires a specialized ring and q = 3") {
  auto inst = make_instance("aff_a1_glq3");
  CHECK_THROWS_WITH_AS(HeckeAlg::ambient(inst), doctest::Contains("specialized"),
                       Error);
  CHECK_THROWS_AS(HeckeAlg::ambient(inst, Ring::integers(), {Int(5)}), Error);
  HeckeAlg H = HeckeAlg::ambient(inst, Ring::integers(), {Int(3)});
  CHECK(H.nletters() == 2);
  // T_s^2 = 3 + sum_{t in diag} T_{t s}, support on the diagonal of Z_k
  const auto& L = H.letter(0);
  CHECK(L.c.size() == 2);
  CHECK(L.c[0].first == LVec{0, 0});
  CHECK(L.c[1].first == LVec{1, 1});
}

TEST_CASE("T_w T*_{w^-1} = q_w") {
  std::mt19937 rng(440071);
  for (const std::string& name : {std::string("fin_b2"), std::string("aff_a1_gl"),
                                  std::string("aff_a2_gl")}) {
    auto inst = make_instance(name);
    HeckeAlg H = HeckeAlg::ambient(inst);
    for (int i = 0; i < 8; ++i) {
      W1El w = rand_w1(rng, H, 4);
      HElem lhs = H.mul(H.T(w), H.to_basis(H.Tstar(H.w1().inv(w)), Basis::T));
      CAPTURE(name);
      CHECK(H.eq(lhs, H.scale(H.one(), H.q_of(w))));
    }
  }
  // and in the specialized glq3 algebra
  auto inst = make_instance("aff_a1_glq3");
  HeckeAlg H = HeckeAlg::ambient(inst, Ring::integers(), {Int(3)});
  for (int i = 0; i < 8; ++i) {
    W1El w = rand_w1(rng, H, 4);
    HElem lhs = H.mul(H.T(w), H.to_basis(H.Tstar(H.w1().inv(w)), Basis::T));
    CHECK(H.eq(lhs, H.scale(H.one(), H.q_of(w))));
  }
}

TEST_CASE("braid additivity in both bases") {
  std::mt19937 rng(52702);
  for (const std::string& name :
       {std::string("fin_a3"), std::string("aff_a2_gl"), std::string("aff_a1xa1_sl")}) {
    auto inst = make_instance(name);
    HeckeAlg H = HeckeAlg::ambient(inst);
    int found = 0;
    for (int i = 0; i < 60 && found < 10; ++i) {
      W1El x = rand_w1(rng, H, 3);
      W1El y = rand_w1(rng, H, 3);
      W1El xy = H.w1().mul(x, y);
      if (H.len(xy) != H.len(x) + H.len(y)) continue;
      ++found;
      CAPTURE(name);
      CHECK(H.eq(H.mul(H.T(x), H.T(y)), H.T(xy)));
      HElem sx = H.to_basis(H.Tstar(x), Basis::T);
      HElem sy = H.to_basis(H.Tstar(y), Basis::T);
      CHECK(H.eq(H.mul(sx, sy), H.to_basis(H.Tstar(xy), Basis::T)));
    }
    CHECK(found == 10);
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(990124);
  std::vector<std::pair<std::string, int>> plans = {
      {"fin_b2", 5}, {"aff_a1_sl", 5}, {"aff_a2_gl", 4}, {"aff_a1_glq3", 6}};
  for (const auto& [name, n] : plans) {
    auto inst = make_instance(name);
    HeckeAlg H = name == "aff_a1_glq3"
                     ? HeckeAlg::ambient(inst, Ring::integers(), {Int(3)})
                     : HeckeAlg::ambient(inst);
    for (int i = 0; i < n; ++i) {
      HElem a = rand_elem(rng, H, 2, 3);
      HElem b = rand_elem(rng, H, 2, 3);
      HElem c = rand_elem(rng, H, 2, 3);
      CAPTURE(name);
      CHECK(H.eq(H.mul(H.mul(a, b), c), H.mul(a, H.mul(b, c))));
    }
  }
}

TEST_CASE("star conversion is an exact involution") {
  std::mt19937 rng(77113);
  for (const std::string& name : {std::string("fin_a3"), std::string("aff_a1_gl"),
                                  std::string("aff_a1_glq3")}) {
    auto inst = make_instance(name);
    HeckeAlg H = name == "aff_a1_glq3"
                     ? HeckeAlg::ambient(inst, Ring::integers(), {Int(3)})
                     : HeckeAlg::ambient(inst);
    for (int i = 0; i < 6; ++i) {
      HElem e = rand_elem(rng, H, 3, 3);
      HElem back = H.to_basis(H.to_basis(e, Basis::Star), Basis::T);
      CAPTURE(name);
      CHECK(H.eq(back, e));
      CHECK(back.t == e.t);
    }
  }
}

TEST_CASE("length-zero elements multiply by translation") {
  auto inst = make_instance("aff_a2_gl");
  HeckeAlg H = HeckeAlg::ambient(inst);
  std::mt19937 rng(3314);
  const auto& ogens = inst->W.omega_gens();
  REQUIRE(!ogens.empty());
  W1El om{inst->Zk.zero(), ogens[0]};
  CHECK(H.len(om) == 0);
  for (int i = 0; i < 6; ++i) {
    W1El x = rand_w1(rng, H, 3);
    CHECK(H.eq(H.mul(H.T(om), H.T(x)), H.T(H.w1().mul(om, x))));
    CHECK(H.eq(H.mul(H.T(x), H.T(om)), H.T(H.w1().mul(x, om))));
  }
}

TEST_CASE("affine A1 golden identities") {
  // SL2-type: t(coroot) has length 2; T_{t(-1)} T*_{t(1)} = q_{s0} q_{s1}
  auto sl = make_instance("aff_a1_sl");
  HeckeAlg Hs = HeckeAlg::ambient(sl);
  LVec crt = sl->W.coroot_of(sl->W.fin().simple_root_index(0));
  W1El tpos{sl->Zk.zero(), sl->W.t(crt)};
  W1El tneg = Hs.w1().inv(tpos);
  CHECK(Hs.len(tpos) == kGoldenA1TCorootLen);
  HElem prod = Hs.mul(Hs.T(tneg), Hs.to_basis(Hs.Tstar(tpos), Basis::T));
  CHECK(Hs.eq(prod, Hs.scale(Hs.one(), Hs.q_of(tpos))));
  CHECK(poly_str(Hs.ring(), Hs.q_of(tpos)) != "q^2");  // two classes in SL2

  // GL2-type: one q-class; the same product is exactly q^2
  auto gl = make_instance("aff_a1_gl");
  HeckeAlg Hg = HeckeAlg::ambient(gl);
  LVec crt2 = gl->W.coroot_of(gl->W.fin().simple_root_index(0));
  W1El tp{gl->Zk.zero(), gl->W.t(crt2)};
  HElem prod2 = Hg.mul(Hg.T(Hg.w1().inv(tp)), Hg.to_basis(Hg.Tstar(tp), Basis::T));
  CHECK(Hg.str(prod2) == "q^2*T[e]");
  // T[s0.s1] * T[s1] = q*T[s0] + (q-1)*T[s0.s1]
  W1El s0s1 = Hg.w1().mul(Hg.letter(1).elem, Hg.letter(0).elem);
  CHECK(Hg.str(Hg.mul(Hg.T(s0s1), Hg.T(Hg.letter(0).elem))) ==
        "q*T[s0] + (q-1)*T[s0.s1]");
}

TEST_CASE("Levi algebra: lengths differ from ambient and products close") {
  auto inst = make_instance("aff_a2_gl");
  HeckeAlg G = HeckeAlg::ambient(inst);
  HeckeAlg M = HeckeAlg::levi(inst, {0});
  // e1 as a translation: ambient length 2, M-length 1
  LVec e1(size_t(inst->W.lat_rank()), 0);
  e1[0] = 1;
  W1El te1{inst->Zk.zero(), inst->W.t(e1)};
  CHECK(G.len(te1) == kGoldenGL3Te1Len);
  CHECK(M.len(te1) == 1);

  std::mt19937 rng(8852);
  for (int i = 0; i < 5; ++i) {
    HElem a = rand_elem(rng, M, 2, 3);
    HElem b = rand_elem(rng, M, 2, 3);
    HElem c = rand_elem(rng, M, 2, 3);
    CHECK(M.eq(M.mul(M.mul(a, b), c), M.mul(a, M.mul(b, c))));
    HElem e = rand_elem(rng, M, 3, 3);
    CHECK(M.eq(M.to_basis(M.to_basis(e, Basis::Star), Basis::T), e));
  }
}

TEST_CASE("theta is multiplicative exactly on M-positive pairs") {
  auto inst = make_instance("aff_a2_gl");
  HeckeAlg G = HeckeAlg::ambient(inst);
  HeckeAlg M = HeckeAlg::levi(inst, {0});
  std::mt19937 rng(17719);
  int pos_pairs = 0;
  for (int i = 0; i < 200 && pos_pairs < 8; ++i) {
    W1El x = rand_wm(rng, M, 3);
    W1El y = rand_wm(rng, M, 3);
    if (!inst->W.is_M_positive(M.M(), x.w) || !inst->W.is_M_positive(M.M(), y.w))
      continue;
    ++pos_pairs;
    HElem lhs = theta(M, G, M.mul(M.T(x), M.T(y)));
    HElem rhs = G.mul(theta(M, G, M.T(x)), theta(M, G, M.T(y)));
    CHECK(G.eq(lhs, rhs));
  }
  CHECK(pos_pairs >= 8);

  // witnessed failure outside H_{M+}: x = t_{e1} is M-positive, y = t_{e3} is
  // not, ambient lengths do not add, and theta stops being multiplicative
  LVec e1v(size_t(inst->W.lat_rank()), 0), e3v(size_t(inst->W.lat_rank()), 0);
  e1v[0] = 1;
  e3v[2] = 1;
  W1El xb{inst->Zk.zero(), inst->W.t(e1v)};
  W1El yb{inst->Zk.zero(), inst->W.t(e3v)};
  CHECK(M.len(xb) + M.len(yb) == M.len(M.w1().mul(xb, yb)));
  CHECK(G.len(xb) + G.len(yb) != G.len(G.w1().mul(xb, yb)));
  CHECK(!G.eq(theta(M, G, M.mul(M.T(xb), M.T(yb))),
              G.mul(theta(M, G, M.T(xb)), theta(M, G, M.T(yb)))));

  // theta* on M-negative pairs
  int neg_pairs = 0;
  for (int i = 0; i < 120 && neg_pairs < 8; ++i) {
    W1El x = rand_wm(rng, M, 3);
    W1El y = rand_wm(rng, M, 3);
    if (!inst->W.is_M_negative(M.M(), x.w) || !inst->W.is_M_negative(M.M(), y.w))
      continue;
    ++neg_pairs;
    HElem lhs = theta_star(M, G, M.mul(M.Tstar(x), M.Tstar(y)));
    HElem rhs = G.mul(theta_star(M, G, M.Tstar(x)), theta_star(M, G, M.Tstar(y)));
    CHECK(G.eq(lhs, rhs));
  }
  CHECK(neg_pairs >= 8);
}

TEST_CASE("render and parse round-trip") {
  std::mt19937 rng(61553);
  for (const std::string& name : {std::string("fin_b2"), std::string("aff_a2_gl"),
                                  std::string("aff_a1_glq3")}) {
    auto inst = make_instance(name);
    HeckeAlg H = name == "aff_a1_glq3"
                     ? HeckeAlg::ambient(inst, Ring::integers(), {Int(3)})
                     : HeckeAlg::ambient(inst);
    for (int i = 0; i < 6; ++i) {
      HElem e = rand_elem(rng, H, 3, 3);
      CHECK(H.eq(H.parse(H.str(e)), e));
      HElem es = H.to_basis(e, Basis::Star);
      HElem back = H.parse(H.str(es));
      CHECK(back.basis == Basis::Star);
      CHECK(back.t == es.t);
    }
  }
  // Levi keys round-trip through the M-letter labels
  auto inst = make_instance("aff_a2_gl");
  HeckeAlg M = HeckeAlg::levi(inst, {0});
  for (int i = 0; i < 6; ++i) {
    HElem e = rand_elem(rng, M, 3, 3);
    CHECK(M.eq(M.parse(M.str(e)), e));
  }
  CHECK(M.str(M.zero()) == "0");
  CHECK(M.eq(M.parse("0"), M.zero()));
}

TEST_CASE("specialization commutes with multiplication") {
  auto inst = make_instance("fin_b2");
  HeckeAlg Hq = HeckeAlg::ambient(inst);
  HeckeAlg H35 = HeckeAlg::ambient(inst, Ring::integers(), {Int(3), Int(5)});
  HeckeAlg Hf2 = HeckeAlg::ambient(inst, Ring::gfp(2), {Int(3), Int(5)});
  std::mt19937 rng(24683);
  for (int i = 0; i < 6; ++i) {
    HElem a = rand_elem(rng, Hq, 2, 3);
    HElem b = rand_elem(rng, Hq, 2, 3);
    HElem ab = Hq.mul(a, b);
    CHECK(H35.eq(specialize_elem(Hq, H35, ab),
                 H35.mul(specialize_elem(Hq, H35, a), specialize_elem(Hq, H35, b))));
    CHECK(Hf2.eq(specialize_elem(Hq, Hf2, ab),
                 Hf2.mul(specialize_elem(Hq, Hf2, a), specialize_elem(Hq, Hf2, b))));
    // and with star conversion
    CHECK(H35.eq(specialize_elem(Hq, H35, Hq.to_basis(ab, Basis::Star)),
                 H35.to_basis(specialize_elem(Hq, H35, ab), Basis::Star)));
  }
}
