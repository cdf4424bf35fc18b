#include "phec/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace phec {

namespace {

// Cartan pair per Coxeter entry m(i,j): C[i][j] with s_i(a_j) = a_j - C[i][j] a_i.
std::pair<int, int> cartan_pair(int m) {
  switch (m) {
    case 2: return {0, 0};
    case 3: return {-1, -1};
    case 4: return {-2, -1};
    case 6: return {-3, -1};
    default: fail(msg("unsupported Coxeter entry m=", m));
  }
}

std::vector<std::int64_t> mat_mul(const std::vector<std::int64_t>& A,
                                  const std::vector<std::int64_t>& B, int n) {
  std::vector<std::int64_t> C(size_t(n) * size_t(n), 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      std::int64_t a = A[size_t(r) * size_t(n) + size_t(k)];
      if (!a) continue;
      for (int c = 0; c < n; ++c)
        C[size_t(r) * size_t(n) + size_t(c)] += a * B[size_t(k) * size_t(n) + size_t(c)];
    }
  return C;
}

}  // namespace

FinWeyl FinWeyl::from_coxeter(const CoxMat& m, std::vector<std::string> labels) {
  FinWeyl W;
  int n = int(m.size());
  check(n > 0, "empty Coxeter matrix");
  for (const auto& row : m) check(int(row.size()) == n, "Coxeter matrix not square");
  for (int i = 0; i < n; ++i) {
    check(m[size_t(i)][size_t(i)] == 1, "Coxeter diagonal must be 1");
    for (int j = 0; j < n; ++j)
      check(m[size_t(i)][size_t(j)] == m[size_t(j)][size_t(i)], "Coxeter matrix not symmetric");
  }
  W.rank_ = n;
  W.dim_ = n;
  W.m_ = m;
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i + 1));
  check(int(labels.size()) == n, "label count mismatch");
  W.labels_ = std::move(labels);

  W.cartan_.assign(size_t(n), std::vector<std::int64_t>(size_t(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        W.cartan_[size_t(i)][size_t(j)] = 2;
      } else {
        auto [a, b] = cartan_pair(m[size_t(i)][size_t(j)]);
        W.cartan_[size_t(i)][size_t(j)] = (i < j) ? a : b;
      }
    }

  auto gen_matrix = [&](int i) {
    std::vector<std::int64_t> S(size_t(n) * size_t(n), 0);
    for (int r = 0; r < n; ++r) S[size_t(r) * size_t(n) + size_t(r)] = 1;
    for (int j = 0; j < n; ++j)
      S[size_t(i) * size_t(n) + size_t(j)] =
          (i == j ? 1 : 0) - W.cartan_[size_t(i)][size_t(j)];
    return S;
  };
  std::vector<std::vector<std::int64_t>> gens;
  for (int i = 0; i < n; ++i) gens.push_back(gen_matrix(i));

  std::vector<std::int64_t> I(size_t(n) * size_t(n), 0);
  for (int r = 0; r < n; ++r) I[size_t(r) * size_t(n) + size_t(r)] = 1;
  W.elems_.push_back(I);
  W.index_[I] = 0;
  W.word_.push_back({});
  std::vector<int> frontier{0};
  const int kMaxOrder = 40320;  // refuse non-finite input rather than spin
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier) {
      for (int i = 0; i < n; ++i) {
        auto B = mat_mul(W.elems_[size_t(a)], gens[size_t(i)], n);
        auto it = W.index_.find(B);
        if (it == W.index_.end()) {
          int idx = int(W.elems_.size());
          check(idx < kMaxOrder, "group too large; is the Coxeter matrix finite type?");
          W.index_[B] = idx;
          W.elems_.push_back(B);
          auto w = W.word_[size_t(a)];
          w.push_back(i);
          W.word_.push_back(std::move(w));
          next.push_back(idx);
        }
      }
    }
    frontier = std::move(next);
  }

  int order = int(W.elems_.size());
  W.gen_idx_.resize(size_t(n));
  for (int i = 0; i < n; ++i) W.gen_idx_[size_t(i)] = W.index_.at(gens[size_t(i)]);
  W.mul_.resize(size_t(order) * size_t(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      W.mul_[size_t(a) * size_t(order) + size_t(b)] =
          W.index_.at(mat_mul(W.elems_[size_t(a)], W.elems_[size_t(b)], n));
  W.inv_.resize(size_t(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (W.mul(a, b) == 0) {
        W.inv_[size_t(a)] = b;
        break;
      }

  // positive roots with coroots tracked through the dual representation
  std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> pr;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(size_t(n), 0);
    e[size_t(i)] = 1;
    pr.push_back({e, e});
  }
  for (size_t head = 0; head < pr.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      // s_i(root), s_i(coroot) with the transposed Cartan matrix on coroots
      auto [r, cr] = pr[head];
      std::vector<std::int64_t> nr = r, ncr = cr;
      std::int64_t pair_r = 0, pair_cr = 0;
      for (int j = 0; j < n; ++j) {
        pair_r += W.cartan_[size_t(i)][size_t(j)] * r[size_t(j)];
        pair_cr += W.cartan_[size_t(j)][size_t(i)] * cr[size_t(j)];
      }
      nr[size_t(i)] -= pair_r;
      ncr[size_t(i)] -= pair_cr;
      bool positive = std::all_of(nr.begin(), nr.end(), [](std::int64_t x) { return x >= 0; });
      if (!positive) continue;
      bool known = false;
      for (const auto& [er, ecr] : pr)
        if (er == nr) {
          known = true;
          break;
        }
      if (!known) pr.push_back({nr, ncr});
    }
  }
  std::sort(pr.begin(), pr.end());
  for (int r = 0; r < int(pr.size()); ++r) {
    W.pos_roots_.push_back(pr[size_t(r)].first);
    W.pos_coroots_.push_back(pr[size_t(r)].second);
    W.root_index_[pr[size_t(r)].first] = r;
    // invariant: <gamma, gamma^vee> = 2
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        s += pr[size_t(r)].second[size_t(k)] * W.cartan_[size_t(k)][size_t(j)] *
             pr[size_t(r)].first[size_t(j)];
    check(s == 2, "root/coroot pairing is not 2");
  }

  // lengths: inversion count; cross-checked against BFS word length
  W.len_.resize(size_t(order));
  for (int a = 0; a < order; ++a) {
    int count = 0;
    for (int r = 0; r < W.npos(); ++r)
      if (!W.root_image(a, r).second) ++count;
    W.len_[size_t(a)] = count;
    check(count == int(W.word_[size_t(a)].size()), "length mismatch in enumeration");
  }
  W.w0_ = int(std::max_element(W.len_.begin(), W.len_.end()) - W.len_.begin());

  // canonical reduced words: right-strip the smallest-index descent
  for (int a = 0; a < order; ++a) {
    std::vector<int> out;
    int cur = a;
    while (cur != 0) {
      int d = -1;
      for (int i = 0; i < n; ++i)
        if (W.right_descent(cur, i)) {
          d = i;
          break;
        }
      check(d >= 0, "no descent on a non-identity element");
      out.push_back(d);
      cur = W.mul(cur, W.gen(d));
    }
    std::reverse(out.begin(), out.end());
    W.word_[size_t(a)] = std::move(out);
  }

  // reflections per positive root: s_gamma(x) = x - <x, gamma^vee> gamma
  for (int r = 0; r < W.npos(); ++r) {
    std::vector<std::int64_t> S(size_t(n) * size_t(n), 0);
    for (int j = 0; j < n; ++j) {
      std::int64_t pairing = 0;  // <alpha_j, gamma^vee>
      for (int k = 0; k < n; ++k)
        pairing += W.pos_coroots_[size_t(r)][size_t(k)] * W.cartan_[size_t(k)][size_t(j)];
      for (int rr = 0; rr < n; ++rr)
        S[size_t(rr) * size_t(n) + size_t(j)] =
            (rr == j ? 1 : 0) - pairing * W.pos_roots_[size_t(r)][size_t(rr)];
    }
    auto it = W.index_.find(S);
    check(it != W.index_.end(), "reflection not found in group");
    W.refl_.push_back(it->second);
  }

  return W;
}

std::vector<std::int64_t> FinWeyl::apply(int a, const std::vector<std::int64_t>& v) const {
  std::vector<std::int64_t> out(size_t(dim_), 0);
  const auto& M = elems_[size_t(a)];
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      out[size_t(r)] += M[size_t(r) * size_t(dim_) + size_t(c)] * v[size_t(c)];
  return out;
}

std::pair<int, bool> FinWeyl::root_image(int a, int r) const {
  auto img = apply(a, pos_roots_[size_t(r)]);
  bool nonneg = std::all_of(img.begin(), img.end(), [](std::int64_t x) { return x >= 0; });
  if (nonneg) {
    auto it = root_index_.find(img);
    check(it != root_index_.end(), "root image not a root");
    return {it->second, true};
  }
  for (auto& x : img) x = -x;
  auto it = root_index_.find(img);
  check(it != root_index_.end(), "root image not a root");
  return {it->second, false};
}

int FinWeyl::simple_root_index(int i) const {
  std::vector<std::int64_t> e(size_t(dim_), 0);
  e[size_t(i)] = 1;
  return root_index_.at(e);
}

int FinWeyl::root_index(const std::vector<std::int64_t>& coords) const {
  auto it = root_index_.find(coords);
  return it == root_index_.end() ? -1 : it->second;
}

bool FinWeyl::right_descent(int a, int i) const {
  // descent iff w(alpha_i) < 0; simple root i has unit coordinates
  std::vector<std::int64_t> e(size_t(dim_), 0);
  e[size_t(i)] = 1;
  return !root_image(a, root_index_.at(e)).second;
}

int FinWeyl::from_word(const std::vector<int>& w) const {
  int cur = 0;
  for (int i : w) {
    check(i >= 0 && i < rank_, "letter out of range");
    cur = mul(cur, gen(i));
  }
  return cur;
}

std::vector<int> FinWeyl::subgroup(const std::vector<int>& J) const {
  std::vector<bool> in(size_t(order()), false);
  in[0] = true;
  std::vector<int> frontier{0}, out{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int j : J) {
        int b = mul(a, gen(j));
        if (!in[size_t(b)]) {
          in[size_t(b)] = true;
          out.push_back(b);
          next.push_back(b);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int FinWeyl::longest_in(const std::vector<int>& J) const {
  auto sub = subgroup(J);
  int best = sub[0];
  for (int a : sub)
    if (len(a) > len(best)) best = a;
  return best;
}

namespace {
std::vector<int> coset_reps(const FinWeyl& W, const std::vector<int>& J, bool left) {
  auto sub = W.subgroup(J);
  std::vector<int> order(size_t(W.order()));
  for (int i = 0; i < W.order(); ++i) order[size_t(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (W.len(a) != W.len(b)) return W.len(a) < W.len(b);
    return W.word(a) < W.word(b);
  });
  std::vector<bool> covered(size_t(W.order()), false);
  std::vector<int> reps;
  for (int a : order) {
    if (covered[size_t(a)]) continue;
    reps.push_back(a);
    for (int u : sub) covered[size_t(left ? W.mul(u, a) : W.mul(a, u))] = true;
  }
  return reps;
}
}  // namespace

std::vector<int> FinWeyl::min_coset_reps_left(const std::vector<int>& J) const {
  return coset_reps(*this, J, true);
}

std::vector<int> FinWeyl::min_coset_reps_right(const std::vector<int>& J) const {
  return coset_reps(*this, J, false);
}

std::vector<std::vector<int>> FinWeyl::letter_classes() const {
  std::vector<int> parent(size_t(rank_), 0);
  for (int i = 0; i < rank_; ++i) parent[size_t(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
    return x;
  };
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (m_[size_t(i)][size_t(j)] % 2 == 1 && m_[size_t(i)][size_t(j)] > 1)
        parent[size_t(find(i))] = find(j);
  std::map<int, std::vector<int>> cls;
  for (int i = 0; i < rank_; ++i) cls[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : cls) out.push_back(members);
  return out;
}

std::vector<std::vector<int>> FinWeyl::components() const {
  std::vector<int> parent(size_t(rank_), 0);
  for (int i = 0; i < rank_; ++i) parent[size_t(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
    return x;
  };
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (m_[size_t(i)][size_t(j)] >= 3) parent[size_t(find(i))] = find(j);
  std::map<int, std::vector<int>> cls;
  for (int i = 0; i < rank_; ++i) cls[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : cls) out.push_back(members);
  return out;
}

int FinWeyl::highest_root(const std::vector<int>& component) const {
  std::vector<bool> in(size_t(rank_), false);
  for (int i : component) in[size_t(i)] = true;
  int best = -1;
  std::int64_t best_height = -1;
  for (int r = 0; r < npos(); ++r) {
    bool supported = true;
    std::int64_t height = 0;
    for (int j = 0; j < rank_; ++j) {
      if (pos_roots_[size_t(r)][size_t(j)] != 0 && !in[size_t(j)]) supported = false;
      height += pos_roots_[size_t(r)][size_t(j)];
    }
    if (supported && height > best_height) {
      best_height = height;
      best = r;
    }
  }
  check(best >= 0, "component has no roots");
  return best;
}

std::string FinWeyl::wstr(int a) const {
  if (a == 0) return "e";
  std::ostringstream ss;
  const auto& w = word(a);
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) ss << '.';
    ss << labels_[size_t(w[i])];
  }
  return ss.str();
}

}  // namespace phec
