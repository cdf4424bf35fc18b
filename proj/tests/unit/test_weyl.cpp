#include <map>

#include "doctest.h"
#include "oracle_frozen.inc"
#include "phec/weyl.hpp"
#include "phec/zk.hpp"

using namespace phec;

namespace {

ExtWeyl make_a1_sl() {
  ExtWeyl::Config cfg;
  cfg.cox = {{1}};
  cfg.lat_rank = 1;
  cfg.pairing = {{2}};
  cfg.coroots = {{1}};
  return ExtWeyl::build(cfg);
}

ExtWeyl make_gl3() {
  ExtWeyl::Config cfg;
  cfg.cox = {{1, 3}, {3, 1}};
  cfg.lat_rank = 3;
  cfg.pairing = {{1, -1, 0}, {0, 1, -1}};
  cfg.coroots = {{1, -1, 0}, {0, 1, -1}};
  return ExtWeyl::build(cfg);
}

ExtWeyl make_a1a1_sl() {
  ExtWeyl::Config cfg;
  cfg.cox = {{1, 2}, {2, 1}};
  cfg.lat_rank = 2;
  cfg.pairing = {{2, 0}, {0, 2}};
  cfg.coroots = {{1, 0}, {0, 1}};
  return ExtWeyl::build(cfg);
}

// BFS word length over the letters and Omega generators must match IM length
void check_im_vs_bfs(const ExtWeyl& W, std::int64_t maxlen) {
  std::map<Welt, std::int64_t> dist;
  dist[W.one()] = 0;
  std::vector<Welt> frontier{W.one()};
  while (!frontier.empty()) {
    std::vector<Welt> next;
    for (const auto& w : frontier) {
      if (dist[w] >= maxlen) continue;
      for (int a = 0; a < W.nletters(); ++a) {
        Welt u = W.mul(w, W.letter_elem(a));
        if (!dist.count(u)) {
          dist[u] = dist[w] + 1;
          next.push_back(u);
        }
      }
    }
    frontier = std::move(next);
  }
  REQUIRE(dist.size() > size_t(1));
  for (const auto& [w, d] : dist) CHECK(W.len(w) == d);
}

}  // namespace

TEST_CASE("affine A1: IM length, reduction, letters") {
  ExtWeyl W = make_a1_sl();
  CHECK(W.nletters() == 2);
  CHECK(W.letter_label(0) == "s1");
  CHECK(W.letter_label(1) == "s0");
  CHECK(W.omega_gens().empty());

  Welt t1 = W.t({1});
  CHECK(W.len(t1) == kGoldenA1TCorootLen);
  CHECK(W.wstr(t1) == "s0.s1");
  CHECK(W.len(W.t({-1})) == 2);
  CHECK(W.len(W.t({3})) == 6);

  // s0 = t_1 s1
  Welt s0 = W.letter_elem(1);
  CHECK(s0 == W.mul(W.t({1}), W.letter_elem(0)));
  CHECK(W.mul(s0, s0) == W.one());

  // two q-classes, no odd bond between s0 and s1
  CHECK(W.nqclasses() == 2);
  check_im_vs_bfs(W, 8);
}

TEST_CASE("GL3: omega, conjugation, length") {
  ExtWeyl W = make_gl3();
  CHECK(W.nletters() == 3);
  CHECK(W.letter_label(2) == "s0");
  CHECK(W.len(W.t({1, 0, 0})) == kGoldenGL3Te1Len);

  // omega = t_{e1} * (cycle) generates Omega; find it among the generators
  REQUIRE(W.omega_gens().size() == 2);
  const Welt* om = nullptr;
  for (const auto& g : W.omega_gens())
    if (g.lam == LVec{1, 0, 0}) om = &g;
  REQUIRE(om != nullptr);
  CHECK(W.len(*om) == 0);

  // conjugation permutes the letters s1 -> s2 -> s0 -> s1
  auto conj_letter = [&](int a) {
    ARoot img = W.act_aroot(*om, W.letter_root(a));
    return W.letter_of_aroot(img);
  };
  CHECK(conj_letter(0) == 1);
  CHECK(conj_letter(1) == 2);
  CHECK(conj_letter(2) == 0);
  // and as group elements
  Welt omi = W.inv(*om);
  CHECK(W.mul(W.mul(*om, W.letter_elem(0)), omi) == W.letter_elem(1));

  // single q-class named q
  CHECK(W.nqclasses() == 1);
  CHECK(W.qclass_names()[0] == "q");

  check_im_vs_bfs(W, 5);

  // group ops
  Welt x = W.mul(W.t({2, -1, 0}), W.from_fin(W.fin().gen(1)));
  CHECK(W.mul(x, W.inv(x)) == W.one());
  CHECK(W.mul(W.inv(x), x) == W.one());
  // wstr round shape: om-part appears first
  CHECK(W.wstr(*om) == "om(1,0,0;s1.s2)");
  CHECK(W.wstr(W.one()) == "e");
}

TEST_CASE("GL3 Levi J={s1}") {
  ExtWeyl W = make_gl3();
  auto M = W.levi({0});
  CHECK(M.pos_roots.size() == 1);
  CHECK(M.out_roots.size() == 2);
  REQUIRE(M.has_tau);
  CHECK(M.tau == LVec{0, 0, -1});

  Welt ttau = W.t(M.tau);
  CHECK(W.len_M(M, ttau) == 0);
  CHECK(W.is_M_positive(M, ttau));
  CHECK_FALSE(W.is_M_negative(M, ttau));
  // tau is central in W_M: commutes with s1
  Welt s1 = W.letter_elem(0);
  CHECK(W.mul(ttau, s1) == W.mul(s1, ttau));

  REQUIRE(M.letters.size() == 2);  // s1 and the component letter
  CHECK(M.letters[1].a.k == 1);
  // the Levi affine letter shares the ambient q-class
  CHECK(M.letters[1].qclass == 0);

  // M-reduction of t_{alpha1^vee} inside M: length 2
  Welt tco = W.t({1, -1, 0});
  CHECK(W.len_M(M, tco) == 2);
  auto [omM, word] = W.reduce_M(M, tco);
  CHECK(word.size() == 2);
  CHECK(W.len_M(M, omM) == 0);
  Welt back = omM;
  for (int a : word) back = W.mul(back, M.letters[size_t(a)].elem);
  CHECK(back == tco);

  // M-positivity: t_{(2,1,0)} is M-positive, its inverse M-negative
  CHECK(W.is_M_positive(M, W.t({2, 1, 0})));
  CHECK(W.is_M_negative(M, W.t({-2, -1, 0})));
  CHECK(W.in_WM(M, tco));
  CHECK_FALSE(W.in_WM(M, W.from_fin(W.fin().gen(1))));
}

TEST_CASE("A1xA1: two components, orthogonal letters") {
  ExtWeyl W = make_a1a1_sl();
  CHECK(W.nletters() == 4);
  CHECK(W.letter_label(2) == "s0a");
  CHECK(W.letter_label(3) == "s0b");
  CHECK(W.omega_gens().empty());
  CHECK(W.nqclasses() == 4);

  CHECK(W.len(W.t({1, 0})) == 2);
  CHECK(W.len(W.t({1, 1})) == 4);
  CHECK(W.wstr(W.t({1, 0})) == "s0a.s1");

  // the two components commute
  CHECK(W.mul(W.letter_elem(0), W.letter_elem(3)) ==
        W.mul(W.letter_elem(3), W.letter_elem(0)));

  // Levi {s1}: its affine letter is the ambient letter s0a
  auto M = W.levi({0});
  REQUIRE(M.letters.size() == 2);
  CHECK(M.letters[1].a == W.letter_root(2));
  CHECK(M.letters[1].qclass == W.qclass(2));
  check_im_vs_bfs(W, 5);
}

TEST_CASE("ZkGroup and W1") {
  FinWeyl fin = FinWeyl::from_coxeter({{1}});
  ZkGroup Z = ZkGroup::build(fin, {2, 2}, {{{0, 1}, {1, 0}}});
  CHECK(Z.order() == 4);
  CHECK(Z.all().size() == 4);
  CHECK(Z.act(fin.gen(0), {1, 0}) == LVec{0, 1});
  CHECK(Z.act(fin.id(), {1, 0}) == LVec{1, 0});
  CHECK(Z.add({1, 1}, {1, 0}) == LVec{0, 1});
  CHECK(Z.span({{1, 1}}).size() == 2);
  CHECK(Z.span({}).size() == 1);

  // non-homomorphism rejected
  CHECK_THROWS_AS(ZkGroup::build(fin, {2, 4}, {{{0, 1}, {1, 0}}}), Error);

  ExtWeyl W = make_a1_sl();
  W1 w1(&W, &Z);
  W1El a{{1, 0}, W.t({1})};
  W1El b{{0, 1}, W.letter_elem(0).lam.empty() ? W.one() : W.letter_elem(0)};
  CHECK(w1.mul(a, w1.inv(a)) == w1.one());
  CHECK(w1.mul(w1.inv(a), a) == w1.one());
  W1El ab = w1.mul(a, b);
  CHECK(w1.inv(ab) == w1.mul(w1.inv(b), w1.inv(a)));
  // split lift is multiplicative
  CHECK(w1.mul(w1.lift(W.t({1})), w1.lift(W.t({2}))) == w1.lift(W.t({3})));
  CHECK(w1.wstr(a) == "z(1,0).s0.s1");
  CHECK(w1.wstr(w1.one()) == "e");
}

TEST_CASE("trivial Zk") {
  FinWeyl fin = FinWeyl::from_coxeter({{1, 3}, {3, 1}});
  ZkGroup Z = ZkGroup::build(fin, {}, {});
  CHECK(Z.order() == 1);
  CHECK(Z.all().size() == 1);
  CHECK(Z.is_zero(Z.zero()));
}
