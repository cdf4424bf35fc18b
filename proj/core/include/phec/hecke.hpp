// The pro-p Iwahori Hecke algebra of an instance, or of a standard Levi
// inside it: T and T* bases, exact products through the braid and quadratic
// relations, parabolic maps theta/theta*, the orthogonal-pair ideals J/J_M
// with canonical coset normal forms, and the extension isomorphism e*.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "phec/instance.hpp"
#include "phec/linalg.hpp"
#include "phec/ring.hpp"
#include "phec/weyl.hpp"
#include "phec/zk.hpp"

namespace phec {

enum class Basis { T, Star };

// An element in either basis; keys carry no zero coefficients.
struct HElem {
  Basis basis = Basis::T;
  std::map<W1El, Poly> t;

  bool is_zero() const { return t.empty(); }
};

class HeckeAlg {
 public:
  // Generic coefficients Z[q-classes]; throws when an explicit c-spec cannot
  // satisfy sum c = q_s - 1 generically (such instances need a specialization).
  static HeckeAlg ambient(std::shared_ptr<const Instance> inst);
  static HeckeAlg ambient(std::shared_ptr<const Instance> inst, const Ring& R,
                          const std::vector<Int>& qvals);
  // Subalgebra H_M of the standard Levi with finite letters J, under ell_M.
  static HeckeAlg levi(std::shared_ptr<const Instance> inst, std::vector<int> J);
  static HeckeAlg levi(std::shared_ptr<const Instance> inst, std::vector<int> J,
                       const Ring& R, const std::vector<Int>& qvals);

  const Instance& inst() const { return *inst_; }
  std::shared_ptr<const Instance> inst_ptr() const { return inst_; }
  const Ring& ring() const { return R_; }
  const std::vector<Poly>& qvals() const { return qvals_; }
  bool is_levi() const { return levi_.has_value(); }
  const ExtWeyl::Levi& M() const;  // requires is_levi()
  const W1& w1() const { return w1_; }

  struct Letter {
    W1El elem;
    std::string label;
    int qclass = 0;
    std::vector<std::pair<LVec, Poly>> c;      // c-table of the canonical lift
    std::vector<std::pair<LVec, Poly>> cconj;  // entries (s^-1 t s, c(t))
  };
  int nletters() const { return int(letters_.size()); }
  const Letter& letter(int a) const { return letters_[size_t(a)]; }
  Poly q(int a) const { return qvals_[size_t(letters_[size_t(a)].qclass)]; }

  std::int64_t len(const W1El& x) const;
  bool right_descent(const W1El& x, int a) const;
  // x = z * omega * prod of letters, all length-additive
  struct Dec {
    LVec z;
    Welt omega;
    std::vector<int> word;
  };
  Dec reduce(const W1El& x) const;
  Poly q_of(const W1El& x) const;  // product of letter q's over a reduced word
  std::string key_str(const W1El& x) const;
  W1El key_parse(const std::string& s) const;

  // Operations exceeding this length on any term raise an error.
  std::int64_t max_len = 64;

  HElem zero(Basis b = Basis::T) const { return HElem{b, {}}; }
  HElem one(Basis b = Basis::T) const;
  HElem T(const W1El& x) const;
  HElem Tstar(const W1El& x) const;
  HElem add(const HElem& a, const HElem& b) const;
  HElem sub(const HElem& a, const HElem& b) const;
  HElem neg(const HElem& a) const;
  HElem scale(const HElem& a, const Poly& c) const;
  HElem mul(const HElem& a, const HElem& b) const;  // result in a's basis
  HElem to_basis(const HElem& a, Basis b) const;
  bool eq(const HElem& a, const HElem& b) const;

  // Canonical rendering "q*T[s1.s2] + (q-1)*T[s1.s2.s1]"; terms ordered by
  // (length, Omega part, reduced word, Z_k part).  parse() round-trips it.
  std::string str(const HElem& a) const;
  HElem parse(const std::string& s) const;

 private:
  std::shared_ptr<const Instance> inst_;
  Ring R_;
  std::vector<Poly> qvals_;
  std::optional<ExtWeyl::Levi> levi_;
  std::vector<Letter> letters_;
  W1 w1_;

  static HeckeAlg build(std::shared_ptr<const Instance> inst,
                        std::optional<std::vector<int>> J, const Ring& R,
                        const std::vector<Poly>& qvals);
  HElem mul_letter(const HElem& a, int li) const;  // a * T_letter, T coords
  HElem mul_zomega(const HElem& a, const W1El& y) const;  // ell(y) = 0
  HElem star_in_T(const W1El& x) const;  // memoized in star_cache_
  mutable std::map<W1El, HElem> star_cache_;
  void add_term(HElem& a, const W1El& x, const Poly& c) const;
};

// specialization of coefficients, coefficient-wise; from.ring() must be the
// generic polynomial ring and the algebras must share group data
HElem specialize_elem(const HeckeAlg& from, const HeckeAlg& to, const HElem& a);

// theta / theta*: linear basis-to-basis inclusions H_M -> H (eq. theta/theta*)
HElem theta(const HeckeAlg& Malg, const HeckeAlg& G, const HElem& m);
HElem theta_star(const HeckeAlg& Malg, const HeckeAlg& G, const HElem& m);

// Orthogonal pair M = M_J, M2 = M_{complement}: data of the ideals J, J_M and
// the coset normal forms for W(1)/1W_{M2'} and W_M(1)/(Lambda(1) cap 1W_{M2'}).
struct IdealCtx {
  std::shared_ptr<const Instance> inst;
  std::vector<int> J, J2;
  ExtWeyl::Levi M, M2;
  std::vector<LVec> Z2;             // 1W_{M2'} cap Z_k, enumerated
  std::vector<LVec> Z2gens;
  std::vector<LVec> j2coroots;      // simple coroots of J2 (rows)
  std::vector<std::vector<Int>> hnf;  // HNF of the j2coroot lattice
  std::vector<bool> side2;          // ambient letter lies on the M2 side
  QMat cart2_inv_t;                 // inverse transpose Cartan of J2
  // memoized coset representatives; reps recur across reductions
  mutable std::map<W1El, W1El> rep_g_cache, rep_m_cache;
};

IdealCtx make_ideal_ctx(std::shared_ptr<const Instance> inst, std::vector<int> J);

// membership in 1W_{M2'}
bool in_1WM2(const IdealCtx& ctx, const W1El& x);
// length-minimal representative of x * 1W_{M2'} (ties by rendered key)
W1El rep_G(const IdealCtx& ctx, const W1El& x);
// canonical representative of x * (Lambda(1) cap 1W_{M2'}) inside W_M(1)
W1El rep_M(const IdealCtx& ctx, const W1El& x);
// some element of W_M(1) cap x * 1W_{M2'}
W1El to_WM(const IdealCtx& ctx, const W1El& x);
// product of q over the M2-side letters of a reduced word of x
Poly q_M2(const IdealCtx& ctx, const HeckeAlg& G, const W1El& x);
// generators of Lambda(1) cap 1W_{M2'}
std::vector<W1El> lambda2_gens(const IdealCtx& ctx);

// normal form mod J (ambient algebra) / mod J_M (Levi algebra), in the T* basis
HElem ideal_reduce_G(const HeckeAlg& G, const IdealCtx& ctx, const HElem& a);
HElem ideal_reduce_M(const HeckeAlg& Malg, const IdealCtx& ctx, const HElem& a);

// e*: H_M/J_M -> H/J on T*-basis normal forms, and its inverse
HElem e_star(const HeckeAlg& Malg, const HeckeAlg& G, const IdealCtx& ctx,
             const HElem& m);
HElem e_star_inv(const HeckeAlg& G, const HeckeAlg& Malg, const IdealCtx& ctx,
                 const HElem& x);

}  // namespace phec
