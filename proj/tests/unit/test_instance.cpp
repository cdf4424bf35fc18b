// Instance construction: builtins, c-spec validation, TOML group specs.
#include <doctest.h>

#include "phec/instance.hpp"

using namespace phec;

TEST_CASE("all builtin instances construct") {
  for (const auto& name : builtin_instances()) {
    auto inst = make_instance(name);
    CHECK(inst->name == name);
    CHECK(int(inst->cspec.size()) == inst->W.nletters());
    CHECK(inst->qring.nvars() >= 1);
  }
}

TEST_CASE("q-class variables per instance") {
  auto a2 = make_instance("fin_a2");
  CHECK(a2->qring.vars == std::vector<std::string>{"q"});
  CHECK(poly_str(a2->qring, a2->q_letter(0)) == "q");
  CHECK(poly_str(a2->qring, a2->q_letter(1)) == "q");

  auto b2 = make_instance("fin_b2");
  CHECK(b2->qring.nvars() == 2);
  CHECK(poly_str(b2->qring, b2->q_letter(0)) != poly_str(b2->qring, b2->q_letter(1)));

  // affine A1 for SL2: s1 and s0 are not conjugate
  auto a1 = make_instance("aff_a1_sl");
  CHECK(a1->qring.nvars() == 2);

  // affine A2 for GL3: one class, merged through Omega
  auto gl3 = make_instance("aff_a2_gl");
  CHECK(gl3->qring.vars == std::vector<std::string>{"q"});
}

TEST_CASE("glq3 c-spec normalizes") {
  auto inst = make_instance("aff_a1_glq3");
  CHECK(inst->Zk.order() == 4);
  CHECK(inst->qring.vars == std::vector<std::string>{"q"});
  for (int a = 0; a < 2; ++a) {
    const CSpec& cs = inst->cspec[size_t(a)];
    CHECK(!cs.generic);
    CHECK(cs.zprime == std::vector<LVec>{{0, 0}, {1, 1}});
    REQUIRE(cs.values.size() == 2);
    CHECK(cs.values[0].second == 1);
    CHECK(cs.values[1].second == 1);
  }
}

TEST_CASE("generic c-spec defaults to Z' = 0") {
  auto inst = make_instance("aff_a1_sl");
  for (const auto& cs : inst->cspec) {
    CHECK(cs.generic);
    CHECK(cs.zprime == std::vector<LVec>{LVec{}});
  }
}

static std::shared_ptr<const Instance> parse(const std::string& text) {
  return parse_instance_toml(toml_parse(text), "doc");
}

TEST_CASE("TOML group spec reproduces the glq3 builtin") {
  auto inst = parse(R"(
name = "glq3"
[coxeter]
matrix = [[1]]
[lattice]
rank = 2
pairing = [[1, -1]]
coroots = [[1, -1]]
[zk]
factors = [2, 2]
action = [[[0, 1], [1, 0]]]
cocycle = "split"
[[zk.letter]]
letter = "s1"
zprime = [[1, 1]]
c = [{t = [0, 0], value = 1}, {t = [1, 1], value = 1}]
[[zk.letter]]
letter = "s0"
zprime = [[1, 1]]
c = [{t = [0, 0], value = 1}, {t = [1, 1], value = 1}]
)");
  auto ref = make_instance("aff_a1_glq3");
  CHECK(inst->name == "glq3");
  CHECK(inst->W.nletters() == ref->W.nletters());
  CHECK(inst->qring.vars == ref->qring.vars);
  for (int a = 0; a < 2; ++a) {
    CHECK(inst->cspec[size_t(a)].zprime == ref->cspec[size_t(a)].zprime);
    CHECK(inst->cspec[size_t(a)].values == ref->cspec[size_t(a)].values);
  }
}

TEST_CASE("TOML finite spec with defaults") {
  auto inst = parse(R"(
[coxeter]
matrix = [[1, 3], [3, 1]]
)");
  CHECK(inst->name == "doc");
  CHECK(inst->W.fin().order() == 6);
  CHECK(inst->W.nletters() == 2);
  CHECK(inst->Zk.order() == 1);
}

TEST_CASE("TOML spec rejections") {
  // non-split cocycle
  CHECK_THROWS_WITH_AS(parse(R"(
[coxeter]
matrix = [[1]]
[lattice]
rank = 1
pairing = [[2]]
coroots = [[1]]
[zk]
factors = [2]
cocycle = "gluing"
)"),
                       doctest::Contains("split"), Error);

  // zprime not stable under the letter
  CHECK_THROWS_WITH_AS(parse(R"(
[coxeter]
matrix = [[1]]
[lattice]
rank = 2
pairing = [[1, -1]]
coroots = [[1, -1]]
[zk]
factors = [2, 2]
action = [[[0, 1], [1, 0]]]
[[zk.letter]]
letter = "s1"
zprime = [[1, 0]]
c = [{t = [0, 0], value = 1}, {t = [1, 0], value = 1}]
)"),
                       doctest::Contains("stable"), Error);

  // c not s-invariant on the swap orbit
  CHECK_THROWS_WITH_AS(parse(R"(
[coxeter]
matrix = [[1]]
[lattice]
rank = 2
pairing = [[1, -1]]
coroots = [[1, -1]]
[zk]
factors = [2, 2]
action = [[[0, 1], [1, 0]]]
[[zk.letter]]
letter = "s1"
zprime = [[1, 0], [0, 1]]
c = [{t = [0, 0], value = 1}, {t = [1, 0], value = 2}, {t = [0, 1], value = 1}, {t = [1, 1], value = 0}]
)"),
                       doctest::Contains("s-invariant"), Error);

  // unknown letter label
  CHECK_THROWS_WITH_AS(parse(R"(
[coxeter]
matrix = [[1]]
[lattice]
rank = 1
pairing = [[2]]
coroots = [[1]]
[zk]
factors = [2]
[[zk.letter]]
letter = "s9"
generic = true
)"),
                       doctest::Contains("unknown letter"), Error);
}
