// Verification suites: each suite turns an instance plus budgets into a
// deterministic Report.  Given (params, seed) the report bytes are identical
// across runs.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "phec/hecke.hpp"
#include "phec/report.hpp"

namespace phec {

struct SuiteParams {
  std::shared_ptr<const Instance> inst;
  std::uint64_t seed = 1;
  int max_length = 6;   // exhaustive enumeration budget (element length)
  int samples = 200;    // randomized checks (associativity triples, words)
  int omega_budget = 2; // |exponent| cap on length-zero generators
  std::vector<int> levi;  // parabolic subset J for ideal-type suites
  bool levi_set = false;
  std::vector<Int> qspec;  // one value per q-class; empty = generic ring
};

// All suite ids, in the stable order used by `list`.
std::vector<std::string> suite_ids();
bool suite_implemented(const std::string& id);
// Human-readable description: what the suite checks and which statements it
// covers.  Throws for unknown ids.
std::string suite_describe(const std::string& id);

// Structural hash of an instance (letters, lattice, Z_k, c-tables).
std::string instance_hash(const Instance& inst);

// Default parabolic subset for ideal-type suites: the first singleton {a}
// orthogonal to its complement, else the empty set (M = Z).
std::vector<int> default_levi(const Instance& inst);

// Deterministic enumeration of {w : len(w) <= maxlen} with the length-zero
// part bounded by omega_budget (exponent cap per Omega generator).
std::vector<W1El> w1_ball(const HeckeAlg& A, int maxlen, int omega_budget);

// Runs one suite.  Throws phec::Error for unknown or unimplemented ids and
// for invalid params (e.g. non-orthogonal levi subset).
Report run_suite(const std::string& id, const SuiteParams& p);

}  // namespace phec
