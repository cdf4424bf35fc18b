// Z_k: a finite abelian group with a Weyl action, and the split extension
// W(1) = Z_k x| W. Only split extensions are supported.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phec/weyl.hpp"

namespace phec {

class ZkGroup {
 public:
  // factors: cyclic orders (empty = trivial group); gen_action: one integer
  // matrix per finite-Weyl generator, acting on coordinates. The action of
  // t_lam u is through u alone.
  static ZkGroup build(const FinWeyl& fin, std::vector<std::int64_t> factors,
                       std::vector<std::vector<std::vector<std::int64_t>>> gen_action);

  int rank() const { return int(factors_.size()); }
  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::int64_t order() const;

  LVec zero() const { return LVec(factors_.size(), 0); }
  LVec reduce(LVec z) const;
  LVec add(const LVec& a, const LVec& b) const;
  LVec neg(const LVec& a) const;
  bool is_zero(const LVec& a) const;
  LVec act(int u, const LVec& z) const;  // finite-Weyl element index

  std::vector<LVec> all() const;                            // every element
  std::vector<LVec> span(const std::vector<LVec>& gens) const;  // subgroup

 private:
  std::vector<std::int64_t> factors_;
  // per finite element, row-major rank x rank matrix
  std::vector<std::vector<std::int64_t>> act_;
  int fin_order_ = 1;
};

struct W1El {
  LVec z;
  Welt w;
  bool operator==(const W1El&) const = default;
  auto operator<=>(const W1El&) const = default;
};

// W(1) = Z_k x| W with multiplication (z,w)(z',w') = (z + w z', w w')
class W1 {
 public:
  W1() = default;
  W1(const ExtWeyl* W, const ZkGroup* Z) : W_(W), Z_(Z) {}

  const ExtWeyl& weyl() const { return *W_; }
  const ZkGroup& zk() const { return *Z_; }

  W1El one() const { return W1El{Z_->zero(), W_->one()}; }
  W1El lift(const Welt& w) const { return W1El{Z_->zero(), w}; }
  W1El from_z(const LVec& z) const { return W1El{Z_->reduce(z), W_->one()}; }
  W1El mul(const W1El& a, const W1El& b) const;
  W1El inv(const W1El& a) const;
  std::int64_t len(const W1El& a) const { return W_->len(a.w); }
  std::string wstr(const W1El& a) const;

 private:
  const ExtWeyl* W_ = nullptr;
  const ZkGroup* Z_ = nullptr;
};

}  // namespace phec
