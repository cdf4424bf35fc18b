// Extended affine Weyl group W = Lambda x| Wfin, Iwahori-Matsumoto length,
// affine roots, length-zero subgroup Omega, and standard-Levi restrictions.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "phec/coxeter.hpp"

namespace phec {

using LVec = std::vector<std::int64_t>;

// element t_lam * u
struct Welt {
  LVec lam;
  int u = 0;
  bool operator==(const Welt&) const = default;
  auto operator<=>(const Welt&) const = default;
};

// affine root (gamma, k) with gamma = (pos ? +1 : -1) * pos_root[r]
struct ARoot {
  int r = 0;
  bool pos = true;
  std::int64_t k = 0;
  bool positive() const { return k > 0 || (k == 0 && pos); }
  bool operator==(const ARoot&) const = default;
  auto operator<=>(const ARoot&) const = default;
};

class ExtWeyl {
 public:
  struct Config {
    CoxMat cox;
    std::vector<std::string> labels;  // optional finite letter labels
    int lat_rank = 0;
    std::vector<LVec> pairing;  // pairing[i] . lam = <alpha_i, lam>
    std::vector<LVec> coroots;  // alpha_i^vee as an element of Lambda
    std::vector<std::pair<int, int>> qclass_merge;  // extra letter identifications
  };
  static ExtWeyl build(const Config& cfg);

  const FinWeyl& fin() const { return fin_; }
  int lat_rank() const { return lat_rank_; }

  std::int64_t pair_root(int r, const LVec& lam) const;
  LVec coroot_of(int r) const;
  LVec act(int u, const LVec& lam) const;

  Welt one() const { return Welt{LVec(size_t(lat_rank_), 0), 0}; }
  Welt t(const LVec& lam) const { return Welt{lam, 0}; }
  Welt from_fin(int u) const { return Welt{LVec(size_t(lat_rank_), 0), u}; }
  Welt mul(const Welt& a, const Welt& b) const;
  Welt inv(const Welt& a) const;

  // letters of S^aff: finite letters first, then one per graph component
  int nletters() const { return int(letter_roots_.size()); }
  int nfinite_letters() const { return fin_.rank(); }
  const std::string& letter_label(int a) const { return letter_labels_[size_t(a)]; }
  const ARoot& letter_root(int a) const { return letter_roots_[size_t(a)]; }
  const Welt& letter_elem(int a) const { return letter_elems_[size_t(a)]; }
  // reflection s_{(gamma,k)} = t_{-k gamma^vee} s_gamma
  Welt refl(const ARoot& a) const;
  int letter_of_aroot(const ARoot& a) const;  // -1 if not a simple affine root

  ARoot act_aroot(const Welt& w, const ARoot& a) const;
  std::int64_t len(const Welt& w) const;
  bool right_descent(const Welt& w, int a) const;
  bool left_descent(const Welt& w, int a) const;
  // w = omega * prod s_i, reduced; omega has length zero
  std::pair<Welt, std::vector<int>> reduce(const Welt& w) const;

  // q-parameter classes on letters
  int qclass(int a) const { return letter_qclass_[size_t(a)]; }
  int nqclasses() const { return int(qclass_names_.size()); }
  const std::vector<std::string>& qclass_names() const { return qclass_names_; }

  // generators of Omega: length-zero parts of t_{e_i} and t_{-e_i}
  const std::vector<Welt>& omega_gens() const { return omega_gens_; }

  std::string wstr(const Welt& w) const;

  // ---- standard Levi M for a subset J of finite letters --------------------
  struct MLetter {
    ARoot a;
    Welt elem;
    std::string label;
    int qclass = 0;  // q-class in the ambient group
    // ambient letter amb and witness g with g(a) = +-root(amb), so that
    // elem = g^{-1} * letter_elem(amb) * g; identity witness for J-letters
    int amb = -1;
    Welt witness;
  };
  struct Levi {
    std::vector<int> J;
    std::vector<int> pos_roots;  // Phi_M^+ as ambient root indices
    std::vector<int> out_roots;  // Phi^+ \ Phi_M^+
    std::vector<MLetter> letters;
    bool has_tau = false;
    LVec tau;                    // Wfin_M-invariant, strictly M-dominant outside M
    std::vector<LVec> coroot_lattice_gens;  // Q^vee_M generators
  };
  Levi levi(std::vector<int> J) const;

  std::int64_t len_M(const Levi& M, const Welt& w) const;
  bool right_descent_M(const Levi& M, const Welt& w, int a) const;
  std::pair<Welt, std::vector<int>> reduce_M(const Levi& M, const Welt& w) const;
  // <alpha, lam> >= 0 for alpha in Phi^+ \ Phi_M^+ (resp. <= 0)
  bool is_M_positive(const Levi& M, const Welt& w) const;
  bool is_M_negative(const Levi& M, const Welt& w) const;
  bool in_WM(const Levi& M, const Welt& w) const;  // finite part in Wfin_M
  std::string wstr_M(const Levi& M, const Welt& w) const;

 private:
  FinWeyl fin_;
  int lat_rank_ = 0;
  std::vector<LVec> pairing_;        // per simple root
  std::vector<LVec> coroots_;       // per simple root
  std::vector<LVec> root_pairing_;  // per positive root (functional on Lambda)
  std::vector<std::vector<LVec>> wact_;  // per finite element: column images of e_j
  std::vector<ARoot> letter_roots_;
  std::vector<Welt> letter_elems_;
  std::vector<std::string> letter_labels_;
  std::vector<int> letter_qclass_;
  std::vector<std::string> qclass_names_;
  std::vector<Welt> omega_gens_;
};

}  // namespace phec
