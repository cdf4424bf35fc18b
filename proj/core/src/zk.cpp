#include "phec/zk.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace phec {

namespace {
std::vector<std::int64_t> mat_apply(const std::vector<std::int64_t>& A, const LVec& z,
                                    int n) {
  std::vector<std::int64_t> out(size_t(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[size_t(i)] += A[size_t(i) * size_t(n) + size_t(j)] * z[size_t(j)];
  return out;
}

std::vector<std::int64_t> mat_compose(const std::vector<std::int64_t>& A,
                                      const std::vector<std::int64_t>& B, int n) {
  // (A o B)(z) = A(B(z))
  std::vector<std::int64_t> C(size_t(n) * size_t(n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        C[size_t(i) * size_t(n) + size_t(j)] +=
            A[size_t(i) * size_t(n) + size_t(k)] * B[size_t(k) * size_t(n) + size_t(j)];
  return C;
}
}  // namespace

ZkGroup ZkGroup::build(const FinWeyl& fin, std::vector<std::int64_t> factors,
                       std::vector<std::vector<std::vector<std::int64_t>>> gen_action) {
  ZkGroup Z;
  for (auto f : factors) check(f >= 2, "cyclic factors must be >= 2");
  Z.factors_ = std::move(factors);
  Z.fin_order_ = fin.order();
  int n = Z.rank();

  std::vector<std::vector<std::int64_t>> gens;
  if (n == 0) {
    gens.assign(size_t(fin.rank()), {});
  } else {
    check(int(gen_action.size()) == fin.rank(), "one action matrix per generator");
    for (const auto& M : gen_action) {
      check(int(M.size()) == n, "action matrix shape");
      std::vector<std::int64_t> flat;
      for (const auto& row : M) {
        check(int(row.size()) == n, "action matrix shape");
        for (auto x : row) flat.push_back(x);
      }
      // well-defined on the product of cyclic groups: n_i | a_ij * n_j
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::int64_t a = flat[size_t(i) * size_t(n) + size_t(j)];
          check((a * Z.factors_[size_t(j)]) % Z.factors_[size_t(i)] == 0,
                "action matrix is not a homomorphism of the cyclic factors");
        }
      gens.push_back(std::move(flat));
    }
  }

  // compose per finite element, then verify the composition respects the group
  std::vector<std::int64_t> I(size_t(n) * size_t(n), 0);
  for (int i = 0; i < n; ++i) I[size_t(i) * size_t(n) + size_t(i)] = 1;
  Z.act_.assign(size_t(fin.order()), I);
  for (int a = 0; a < fin.order(); ++a) {
    std::vector<std::int64_t> M = I;
    const auto& word = fin.word(a);
    for (int i : word) M = mat_compose(M, gens[size_t(i)], n);
    Z.act_[size_t(a)] = std::move(M);
  }
  // action must be a homomorphism from the group, i.e. independent of words:
  // check act(a) act(b) == act(ab) on all elements (reduced mod factors)
  if (n > 0) {
    for (int a = 0; a < fin.order(); ++a)
      for (int i = 0; i < fin.rank(); ++i) {
        int b = fin.mul(a, fin.gen(i));
        auto lhs = mat_compose(Z.act_[size_t(a)], gens[size_t(i)], n);
        for (int j = 0; j < n; ++j) {
          LVec e(size_t(n), 0);
          e[size_t(j)] = 1;
          if (Z.reduce(mat_apply(lhs, e, n)) != Z.reduce(mat_apply(Z.act_[size_t(b)], e, n)))
            fail("Z_k action violates the Coxeter relations");
        }
      }
  }
  return Z;
}

std::int64_t ZkGroup::order() const {
  std::int64_t o = 1;
  for (auto f : factors_) o *= f;
  return o;
}

LVec ZkGroup::reduce(LVec z) const {
  check(z.size() == factors_.size(), "Z_k coordinate size");
  for (size_t i = 0; i < z.size(); ++i) {
    z[i] %= factors_[i];
    if (z[i] < 0) z[i] += factors_[i];
  }
  return z;
}

LVec ZkGroup::add(const LVec& a, const LVec& b) const {
  LVec out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return reduce(std::move(out));
}

LVec ZkGroup::neg(const LVec& a) const {
  LVec out(a);
  for (auto& x : out) x = -x;
  return reduce(std::move(out));
}

bool ZkGroup::is_zero(const LVec& a) const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

LVec ZkGroup::act(int u, const LVec& z) const {
  if (rank() == 0) return z;
  return reduce(mat_apply(act_[size_t(u)], z, rank()));
}

std::vector<LVec> ZkGroup::all() const {
  std::vector<LVec> out{zero()};
  for (int i = 0; i < rank(); ++i) {
    std::vector<LVec> next;
    for (const auto& z : out)
      for (std::int64_t v = 0; v < factors_[size_t(i)]; ++v) {
        LVec w = z;
        w[size_t(i)] = v;
        next.push_back(w);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LVec> ZkGroup::span(const std::vector<LVec>& gens) const {
  std::set<LVec> closed{zero()};
  std::vector<LVec> frontier{zero()};
  while (!frontier.empty()) {
    std::vector<LVec> next;
    for (const auto& z : frontier)
      for (const auto& g : gens) {
        LVec w = add(z, reduce(g));
        if (!closed.count(w)) {
          closed.insert(w);
          next.push_back(w);
        }
      }
    frontier = std::move(next);
  }
  return std::vector<LVec>(closed.begin(), closed.end());
}

W1El W1::mul(const W1El& a, const W1El& b) const {
  return W1El{Z_->add(a.z, Z_->act(a.w.u, b.z)), W_->mul(a.w, b.w)};
}

W1El W1::inv(const W1El& a) const {
  Welt wi = W_->inv(a.w);
  return W1El{Z_->act(wi.u, Z_->neg(a.z)), wi};
}

std::string W1::wstr(const W1El& a) const {
  std::string base = W_->wstr(a.w);
  if (Z_->is_zero(a.z)) return base;
  std::ostringstream ss;
  ss << "z(";
  for (size_t i = 0; i < a.z.size(); ++i) {
    if (i) ss << ',';
    ss << a.z[i];
  }
  ss << ")";
  if (base != "e") ss << '.' << base;
  return ss.str();
}

}  // namespace phec
