#include "phec/instance.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace phec {

namespace {

std::shared_ptr<Instance> finish(std::shared_ptr<Instance> inst) {
  // default c-specs where absent
  if (inst->cspec.empty())
    inst->cspec.assign(size_t(inst->W.nletters()), CSpec{});
  check(int(inst->cspec.size()) == inst->W.nletters(), "one c-spec per letter");
  for (int a = 0; a < inst->W.nletters(); ++a) {
    CSpec& cs = inst->cspec[size_t(a)];
    if (cs.generic) {
      cs.zprime = {inst->Zk.zero()};
      cs.values.clear();
      continue;
    }
    // Z' must be a subgroup containing the support of c, stable under s
    std::sort(cs.zprime.begin(), cs.zprime.end());
    auto closed = inst->Zk.span(cs.zprime);
    check(closed == cs.zprime, "zprime is not a subgroup");
    int su = inst->W.letter_elem(a).u;
    std::set<LVec> zs(cs.zprime.begin(), cs.zprime.end());
    for (const auto& t : cs.zprime)
      check(zs.count(inst->Zk.act(su, t)), "zprime not stable under its letter");
    check(!cs.values.empty(), "explicit c-spec without values");
    for (const auto& [t, v] : cs.values) {
      check(zs.count(inst->Zk.reduce(t)), "c value outside zprime");
      // c must be constant on s-orbits
      (void)v;
    }
    std::map<LVec, Int> cmap;
    for (const auto& [t, v] : cs.values) {
      check(!cmap.count(inst->Zk.reduce(t)), "duplicate c value");
      cmap[inst->Zk.reduce(t)] = v;
    }
    for (const auto& [t, v] : cmap) {
      auto it = cmap.find(inst->Zk.act(su, t));
      check(it != cmap.end() && it->second == v, "c is not s-invariant");
    }
    cs.values.assign(cmap.begin(), cmap.end());
  }
  inst->qring = Ring::polyz(inst->W.qclass_names());
  return inst;
}

std::shared_ptr<Instance> make_finite(const std::string& name, CoxMat cox) {
  auto inst = std::make_shared<Instance>();
  inst->name = name;
  ExtWeyl::Config cfg;
  cfg.cox = std::move(cox);
  cfg.lat_rank = 0;
  cfg.pairing.assign(cfg.cox.size(), LVec{});
  cfg.coroots.assign(cfg.cox.size(), LVec{});
  inst->W = ExtWeyl::build(cfg);
  inst->Zk = ZkGroup::build(inst->W.fin(), {}, {});
  return finish(inst);
}

std::shared_ptr<Instance> make_affine(const std::string& name, CoxMat cox, int lat_rank,
                                      std::vector<LVec> pairing, std::vector<LVec> coroots) {
  auto inst = std::make_shared<Instance>();
  inst->name = name;
  ExtWeyl::Config cfg;
  cfg.cox = std::move(cox);
  cfg.lat_rank = lat_rank;
  cfg.pairing = std::move(pairing);
  cfg.coroots = std::move(coroots);
  inst->W = ExtWeyl::build(cfg);
  inst->Zk = ZkGroup::build(inst->W.fin(), {}, {});
  return finish(inst);
}

}  // namespace

std::vector<std::string> builtin_instances() {
  return {"fin_a1",    "fin_a1xa1", "fin_a2",      "fin_b2",    "fin_a3",
          "aff_a1_sl", "aff_a1_gl", "aff_a1_glq3", "aff_a2_gl", "aff_a1xa1_sl"};
}

std::shared_ptr<const Instance> make_instance(const std::string& name) {
  if (name == "fin_a1") return make_finite(name, {{1}});
  if (name == "fin_a1xa1") return make_finite(name, {{1, 2}, {2, 1}});
  if (name == "fin_a2") return make_finite(name, {{1, 3}, {3, 1}});
  if (name == "fin_b2") return make_finite(name, {{1, 4}, {4, 1}});
  if (name == "fin_a3") return make_finite(name, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
  if (name == "aff_a1_sl") return make_affine(name, {{1}}, 1, {{2}}, {{1}});
  if (name == "aff_a1_gl")
    return make_affine(name, {{1}}, 2, {{1, -1}}, {{1, -1}});
  if (name == "aff_a2_gl")
    return make_affine(name, {{1, 3}, {3, 1}}, 3, {{1, -1, 0}, {0, 1, -1}},
                       {{1, -1, 0}, {0, 1, -1}});
  if (name == "aff_a1xa1_sl")
    return make_affine(name, {{1, 2}, {2, 1}}, 2, {{2, 0}, {0, 2}}, {{1, 0}, {0, 1}});
  if (name == "aff_a1_glq3") {
    // GL2(Q_3)-flavoured: Z_k = (Z/2)^2 with the swap action, Z' the diagonal,
    // c(t) = 1 on Z'; the quadratic relation then forces q = 3.
    auto inst = std::make_shared<Instance>();
    inst->name = name;
    ExtWeyl::Config cfg;
    cfg.cox = {{1}};
    cfg.lat_rank = 2;
    cfg.pairing = {{1, -1}};
    cfg.coroots = {{1, -1}};
    inst->W = ExtWeyl::build(cfg);
    inst->Zk = ZkGroup::build(inst->W.fin(), {2, 2}, {{{0, 1}, {1, 0}}});
    CSpec cs;
    cs.generic = false;
    cs.zprime = {{0, 0}, {1, 1}};
    cs.values = {{{0, 0}, Int(1)}, {{1, 1}, Int(1)}};
    inst->cspec = {cs, cs};  // s1 and s0 are Omega-conjugate
    return finish(inst);
  }
  fail(msg("unknown instance '", name, "'"));
}

std::shared_ptr<const Instance> parse_instance_toml(const TomlValue& doc,
                                                    const std::string& fallback_name) {
  auto inst = std::make_shared<Instance>();
  inst->name = doc.has("name") ? doc.at("name").as_str() : fallback_name;

  ExtWeyl::Config cfg;
  check(doc.has("coxeter.matrix"), "group spec needs [coxeter] matrix");
  for (const auto& row : doc.at("coxeter.matrix").as_int_matrix()) {
    std::vector<int> r;
    for (auto v : row) r.push_back(int(v));
    cfg.cox.push_back(std::move(r));
  }
  if (doc.has("coxeter.labels")) cfg.labels = doc.at("coxeter.labels").as_strs();

  if (doc.has("lattice")) {
    cfg.lat_rank = int(doc.at("lattice.rank").as_int());
    for (const auto& row : doc.at("lattice.pairing").as_int_matrix())
      cfg.pairing.push_back(LVec(row.begin(), row.end()));
    for (const auto& row : doc.at("lattice.coroots").as_int_matrix())
      cfg.coroots.push_back(LVec(row.begin(), row.end()));
  } else {
    cfg.lat_rank = 0;
    cfg.pairing.assign(cfg.cox.size(), LVec{});
    cfg.coroots.assign(cfg.cox.size(), LVec{});
  }
  if (doc.has("qclass.merge"))
    for (const auto& pr : doc.at("qclass.merge").as_int_matrix()) {
      check(pr.size() == 2, "qclass.merge entries are pairs");
      cfg.qclass_merge.push_back({int(pr[0]), int(pr[1])});
    }
  inst->W = ExtWeyl::build(cfg);

  if (doc.has("zk")) {
    std::vector<std::int64_t> factors = doc.at("zk.factors").as_ints();
    std::vector<std::vector<std::vector<std::int64_t>>> action;
    if (doc.has("zk.action"))
      for (const auto& m : doc.at("zk.action").arr) action.push_back(m.as_int_matrix());
    if (!factors.empty() && action.empty()) {
      // identity action by default
      std::vector<std::vector<std::int64_t>> id(factors.size(),
                                                std::vector<std::int64_t>(factors.size(), 0));
      for (size_t i = 0; i < factors.size(); ++i) id[i][i] = 1;
      action.assign(size_t(inst->W.fin().rank()), id);
    }
    if (doc.has("zk.cocycle"))
      check(doc.at("zk.cocycle").as_str() == "split",
            "only split extensions are supported");
    inst->Zk = ZkGroup::build(inst->W.fin(), factors, action);
    inst->cspec.assign(size_t(inst->W.nletters()), CSpec{});
    if (doc.has("zk.letter")) {
      for (const auto& entry : doc.at("zk.letter").arr) {
        std::string label = entry.at("letter").as_str();
        int idx = -1;
        for (int a = 0; a < inst->W.nletters(); ++a)
          if (inst->W.letter_label(a) == label) idx = a;
        check(idx >= 0, msg("unknown letter '", label, "' in [zk.letter]"));
        CSpec cs;
        if (entry.has("generic") && entry.at("generic").as_bool()) {
          cs.generic = true;
        } else {
          cs.generic = false;
          for (const auto& g : entry.at("zprime").as_int_matrix())
            cs.zprime.push_back(LVec(g.begin(), g.end()));
          cs.zprime = inst->Zk.span(cs.zprime);
          for (const auto& cv : entry.at("c").arr) {
            auto t = cv.at("t").as_ints();
            cs.values.push_back({LVec(t.begin(), t.end()), Int(cv.at("value").as_int())});
          }
        }
        inst->cspec[size_t(idx)] = std::move(cs);
      }
    }
  } else {
    inst->Zk = ZkGroup::build(inst->W.fin(), {}, {});
  }
  return finish(inst);
}

std::shared_ptr<const Instance> load_instance_toml(const std::string& path) {
  std::string base = path;
  auto slash = base.find_last_of('/');
  if (slash != std::string::npos) base = base.substr(slash + 1);
  auto dot = base.find_last_of('.');
  if (dot != std::string::npos) base = base.substr(0, dot);
  return parse_instance_toml(toml_parse_file(path), base);
}

}  // namespace phec
