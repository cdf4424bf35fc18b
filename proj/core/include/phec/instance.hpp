// Instance: a concrete (W, Z_k, c-parameter) datum for a pro-p Hecke algebra,
// either built in or loaded from a TOML group-spec file.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "phec/ring.hpp"
#include "phec/toml.hpp"
#include "phec/weyl.hpp"
#include "phec/zk.hpp"

namespace phec {

// c-parameter data for one letter
struct CSpec {
  bool generic = true;  // Z' = {0}, c(0) = q_s - 1
  std::vector<LVec> zprime;                  // subgroup elements, sorted
  std::vector<std::pair<LVec, Int>> values;  // c(t) as integers, t in zprime
};

struct Instance {
  std::string name;
  ExtWeyl W;
  ZkGroup Zk;
  std::vector<CSpec> cspec;  // per letter
  Ring qring;                // Z[q-class variables]

  W1 w1() const { return W1(&W, &Zk); }
  // the q variable of a letter, in `qring`
  Poly q_letter(int a) const { return poly_var(qring, W.qclass(a)); }
};

// Builtins: fin_a1, fin_a1xa1, fin_a2, fin_b2, fin_a3,
//           aff_a1_sl, aff_a1_gl, aff_a1_glq3, aff_a2_gl, aff_a1xa1_sl.
std::vector<std::string> builtin_instances();
std::shared_ptr<const Instance> make_instance(const std::string& name);
std::shared_ptr<const Instance> load_instance_toml(const std::string& path);
std::shared_ptr<const Instance> parse_instance_toml(const TomlValue& doc,
                                                    const std::string& fallback_name);

}  // namespace phec
