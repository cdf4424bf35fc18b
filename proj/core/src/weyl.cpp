#include "phec/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace phec {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(size_t(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
    return x;
  }
  void unite(int a, int b) { parent[size_t(find(a))] = find(b); }
};

std::string lvec_str(const LVec& v) {
  std::ostringstream ss;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) ss << ',';
    ss << v[i];
  }
  return ss.str();
}

}  // namespace

ExtWeyl ExtWeyl::build(const Config& cfg) {
  ExtWeyl W;
  W.fin_ = FinWeyl::from_coxeter(cfg.cox, cfg.labels);
  int n = W.fin_.rank();
  W.lat_rank_ = cfg.lat_rank;
  check(cfg.lat_rank >= 0, "negative lattice rank");
  check(int(cfg.pairing.size()) == n, "pairing row per simple root required");
  check(int(cfg.coroots.size()) == n, "coroot per simple root required");
  for (int i = 0; i < n; ++i) {
    check(int(cfg.pairing[size_t(i)].size()) == cfg.lat_rank, "pairing row size");
    check(int(cfg.coroots[size_t(i)].size()) == cfg.lat_rank, "coroot size");
  }
  W.pairing_ = cfg.pairing;
  W.coroots_ = cfg.coroots;

  // Cartan compatibility: <alpha_j, alpha_i^vee> = C[i][j]
  if (W.lat_rank_ > 0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < W.lat_rank_; ++k)
          s += W.pairing_[size_t(j)][size_t(k)] * W.coroots_[size_t(i)][size_t(k)];
        check(s == W.fin_.cartan()[size_t(i)][size_t(j)],
              msg("pairing/coroot data violates the Cartan matrix at (", i, ",", j, ")"));
      }
  }

  // functionals of positive roots
  for (int r = 0; r < W.fin_.npos(); ++r) {
    LVec f(size_t(W.lat_rank_), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < W.lat_rank_; ++k)
        f[size_t(k)] += W.fin_.pos_root(r)[size_t(i)] * W.pairing_[size_t(i)][size_t(k)];
    W.root_pairing_.push_back(std::move(f));
  }

  // finite Weyl action on Lambda via s_i(lam) = lam - <alpha_i, lam> alpha_i^vee
  W.wact_.resize(size_t(W.fin_.order()));
  for (int a = 0; a < W.fin_.order(); ++a) {
    std::vector<LVec> cols;
    for (int j = 0; j < W.lat_rank_; ++j) {
      LVec v(size_t(W.lat_rank_), 0);
      v[size_t(j)] = 1;
      const auto& word = W.fin_.word(a);
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::int64_t p = 0;
        for (int k = 0; k < W.lat_rank_; ++k)
          p += W.pairing_[size_t(*it)][size_t(k)] * v[size_t(k)];
        for (int k = 0; k < W.lat_rank_; ++k)
          v[size_t(k)] -= p * W.coroots_[size_t(*it)][size_t(k)];
      }
      cols.push_back(std::move(v));
    }
    W.wact_[size_t(a)] = std::move(cols);
  }

  // equivariance: <u gamma, lam> = <gamma, u^{-1} lam> checked on generators
  for (int i = 0; i < n && W.lat_rank_ > 0; ++i) {
    int g = W.fin_.gen(i);
    for (int r = 0; r < W.fin_.npos(); ++r) {
      auto [r2, pos2] = W.fin_.root_image(g, r);
      for (int j = 0; j < W.lat_rank_; ++j) {
        LVec e(size_t(W.lat_rank_), 0);
        e[size_t(j)] = 1;
        std::int64_t lhs = (pos2 ? 1 : -1) * W.root_pairing_[size_t(r2)][size_t(j)];
        LVec se = W.act(g, e);  // s_i is an involution
        std::int64_t rhs = 0;
        for (int k = 0; k < W.lat_rank_; ++k)
          rhs += W.root_pairing_[size_t(r)][size_t(k)] * se[size_t(k)];
        check(lhs == rhs, "geometric action and lattice action disagree");
      }
    }
  }

  // letters
  for (int i = 0; i < n; ++i) {
    W.letter_roots_.push_back(ARoot{W.fin_.simple_root_index(i), true, 0});
    W.letter_elems_.push_back(W.from_fin(W.fin_.gen(i)));
    W.letter_labels_.push_back(W.fin_.label(i));
  }
  if (W.lat_rank_ > 0) {
    auto comps = W.fin_.components();
    for (size_t c = 0; c < comps.size(); ++c) {
      int hr = W.fin_.highest_root(comps[c]);
      ARoot a{hr, false, 1};
      W.letter_roots_.push_back(a);
      W.letter_elems_.push_back(W.refl(a));
      std::string label = "s0";
      if (comps.size() > 1) label += char('a' + int(c));
      W.letter_labels_.push_back(label);
    }
  }

  // Omega generators: length-zero parts of t_{+-e_i}
  std::set<Welt> seen;
  for (int i = 0; i < W.lat_rank_; ++i) {
    for (int sgn : {1, -1}) {
      LVec e(size_t(W.lat_rank_), 0);
      e[size_t(i)] = sgn;
      Welt om = W.reduce(W.t(e)).first;
      if (om == W.one() || seen.count(om)) continue;
      seen.insert(om);
      W.omega_gens_.push_back(om);
    }
  }

  // q-classes: odd-order product bonds, Omega conjugation, explicit merges
  int L = W.nletters();
  UnionFind uf(L);
  for (int a = 0; a < L; ++a)
    for (int b = a + 1; b < L; ++b) {
      Welt p = W.mul(W.letter_elems_[size_t(a)], W.letter_elems_[size_t(b)]);
      Welt cur = p;
      int m = 1;
      const int kCap = 13;
      while (m <= kCap && !(cur == W.one())) {
        cur = W.mul(cur, p);
        ++m;
      }
      if (m <= kCap && m % 2 == 1) uf.unite(a, b);
    }
  for (const Welt& om : W.omega_gens_)
    for (int a = 0; a < L; ++a) {
      ARoot img = W.act_aroot(om, W.letter_roots_[size_t(a)]);
      int b = W.letter_of_aroot(img);
      check(b >= 0, "Omega generator does not permute the simple affine roots");
      uf.unite(a, b);
    }
  for (auto [a, b] : cfg.qclass_merge) {
    check(a >= 0 && a < L && b >= 0 && b < L, "qclass_merge letter out of range");
    uf.unite(a, b);
  }
  std::map<int, int> class_id;
  W.letter_qclass_.resize(size_t(L));
  for (int a = 0; a < L; ++a) {
    int root = uf.find(a);
    // smallest letter in the class names it
    int smallest = a;
    for (int b = 0; b < L; ++b)
      if (uf.find(b) == root && b < smallest) smallest = b;
    if (!class_id.count(smallest)) {
      int id = int(class_id.size());
      class_id[smallest] = id;
    }
    W.letter_qclass_[size_t(a)] = class_id.at(smallest);
  }
  W.qclass_names_.resize(class_id.size());
  for (auto [smallest, id] : class_id) {
    if (class_id.size() == 1) {
      W.qclass_names_[size_t(id)] = "q";
    } else {
      std::string lbl = W.letter_labels_[size_t(smallest)];
      if (!lbl.empty() && lbl[0] == 's') lbl = lbl.substr(1);
      W.qclass_names_[size_t(id)] = "q" + lbl;
    }
  }

  return W;
}

std::int64_t ExtWeyl::pair_root(int r, const LVec& lam) const {
  std::int64_t s = 0;
  for (int k = 0; k < lat_rank_; ++k) s += root_pairing_[size_t(r)][size_t(k)] * lam[size_t(k)];
  return s;
}

LVec ExtWeyl::coroot_of(int r) const {
  LVec v(size_t(lat_rank_), 0);
  for (int i = 0; i < fin_.rank(); ++i)
    for (int k = 0; k < lat_rank_; ++k)
      v[size_t(k)] += fin_.pos_coroot(r)[size_t(i)] * coroots_[size_t(i)][size_t(k)];
  return v;
}

LVec ExtWeyl::act(int u, const LVec& lam) const {
  LVec out(size_t(lat_rank_), 0);
  for (int j = 0; j < lat_rank_; ++j)
    for (int k = 0; k < lat_rank_; ++k)
      out[size_t(k)] += wact_[size_t(u)][size_t(j)][size_t(k)] * lam[size_t(j)];
  return out;
}

Welt ExtWeyl::mul(const Welt& a, const Welt& b) const {
  LVec lam = act(a.u, b.lam);
  for (int k = 0; k < lat_rank_; ++k) lam[size_t(k)] += a.lam[size_t(k)];
  return Welt{std::move(lam), fin_.mul(a.u, b.u)};
}

Welt ExtWeyl::inv(const Welt& a) const {
  int ui = fin_.inv(a.u);
  LVec lam = act(ui, a.lam);
  for (auto& x : lam) x = -x;
  return Welt{std::move(lam), ui};
}

Welt ExtWeyl::refl(const ARoot& a) const {
  LVec lam = coroot_of(a.r);
  std::int64_t scale = -a.k * (a.pos ? 1 : -1);
  for (auto& x : lam) x *= scale;
  return Welt{std::move(lam), fin_.reflection(a.r)};
}

int ExtWeyl::letter_of_aroot(const ARoot& a) const {
  for (int i = 0; i < nletters(); ++i)
    if (letter_roots_[size_t(i)] == a) return i;
  return -1;
}

ARoot ExtWeyl::act_aroot(const Welt& w, const ARoot& a) const {
  auto [r2, pos2] = fin_.root_image(w.u, a.r);
  bool pos = (a.pos == pos2);
  std::int64_t p = pair_root(r2, w.lam);
  if (!pos) p = -p;
  return ARoot{r2, pos, a.k - p};
}

std::int64_t ExtWeyl::len(const Welt& w) const {
  std::int64_t total = 0;
  int ui = fin_.inv(w.u);
  for (int r = 0; r < fin_.npos(); ++r) {
    std::int64_t v = pair_root(r, w.lam);
    if (fin_.root_image(ui, r).second) {
      total += v < 0 ? -v : v;
    } else {
      total += v - 1 < 0 ? 1 - v : v - 1;
    }
  }
  return total;
}

bool ExtWeyl::right_descent(const Welt& w, int a) const {
  return !act_aroot(w, letter_roots_[size_t(a)]).positive();
}

bool ExtWeyl::left_descent(const Welt& w, int a) const {
  return right_descent(inv(w), a);
}

std::pair<Welt, std::vector<int>> ExtWeyl::reduce(const Welt& w) const {
  std::vector<int> word;
  Welt cur = w;
  while (true) {
    int d = -1;
    for (int a = 0; a < nletters(); ++a)
      if (right_descent(cur, a)) {
        d = a;
        break;
      }
    if (d < 0) break;
    cur = mul(cur, letter_elems_[size_t(d)]);
    word.push_back(d);
  }
  std::reverse(word.begin(), word.end());
  check(len(cur) == 0, "reduction did not reach length zero");
  check(std::int64_t(word.size()) == len(w), "reduced word length mismatch");
  return {cur, word};
}

std::string ExtWeyl::wstr(const Welt& w) const {
  auto [om, word] = reduce(w);
  std::ostringstream ss;
  bool first = true;
  if (!(om == one())) {
    ss << "om(" << lvec_str(om.lam) << ";" << fin_.wstr(om.u) << ")";
    first = false;
  }
  for (int a : word) {
    if (!first) ss << '.';
    ss << letter_labels_[size_t(a)];
    first = false;
  }
  if (first) return "e";
  return ss.str();
}

// ---- Levi ---------------------------------------------------------------------

ExtWeyl::Levi ExtWeyl::levi(std::vector<int> J) const {
  Levi M;
  std::sort(J.begin(), J.end());
  for (int j : J) check(j >= 0 && j < fin_.rank(), "Levi letter out of range");
  M.J = J;
  std::vector<bool> in(size_t(fin_.rank()), false);
  for (int j : J) in[size_t(j)] = true;

  for (int r = 0; r < fin_.npos(); ++r) {
    bool inside = true;
    for (int i = 0; i < fin_.rank(); ++i)
      if (fin_.pos_root(r)[size_t(i)] != 0 && !in[size_t(i)]) inside = false;
    (inside ? M.pos_roots : M.out_roots).push_back(r);
  }

  for (int j : J) {
    MLetter ml;
    ml.a = letter_roots_[size_t(j)];
    ml.elem = letter_elems_[size_t(j)];
    ml.label = letter_labels_[size_t(j)];
    ml.qclass = letter_qclass_[size_t(j)];
    ml.amb = j;
    ml.witness = one();
    M.letters.push_back(ml);
  }
  if (lat_rank_ > 0 && !J.empty()) {
    // components of the J-subgraph
    UnionFind uf(int(J.size()));
    for (size_t x = 0; x < J.size(); ++x)
      for (size_t y = x + 1; y < J.size(); ++y)
        if (fin_.coxeter_matrix()[size_t(J[x])][size_t(J[y])] >= 3) uf.unite(int(x), int(y));
    std::map<int, std::vector<int>> comps;
    for (size_t x = 0; x < J.size(); ++x) comps[uf.find(int(x))].push_back(J[x]);
    int ci = 0;
    for (auto& [root, letters] : comps) {
      int hr = fin_.highest_root(letters);
      MLetter ml;
      ml.a = ARoot{hr, false, 1};
      ml.elem = refl(ml.a);
      ml.label = "c" + std::to_string(ci++);
      // q-class: walk the W-orbit of the affine root to a simple affine root,
      // tracking the group element applied so far as the conjugation witness
      std::map<ARoot, Welt> visited;
      std::vector<ARoot> queue{ml.a};
      visited[ml.a] = one();
      int found = -1;
      const std::int64_t kBound = 6;
      std::vector<Welt> moves;
      for (int b = 0; b < nletters(); ++b) moves.push_back(letter_elems_[size_t(b)]);
      for (const Welt& om : omega_gens_) moves.push_back(om);
      for (const Welt& om : omega_gens_) moves.push_back(inv(om));
      while (!queue.empty() && found < 0) {
        ARoot a = queue.back();
        queue.pop_back();
        int idx = letter_of_aroot(a.positive() ? a : ARoot{a.r, !a.pos, -a.k});
        if (idx >= 0) {
          found = idx;
          ml.witness = visited.at(a);
          break;
        }
        for (const Welt& mv : moves) {
          ARoot img = act_aroot(mv, a);
          if (img.k >= -kBound && img.k <= kBound && !visited.count(img)) {
            visited[img] = mul(mv, visited.at(a));
            queue.push_back(img);
          }
        }
      }
      check(found >= 0,
            "could not identify the q-class of a Levi letter; supply qclass_merge");
      ml.qclass = letter_qclass_[size_t(found)];
      ml.amb = found;
      check(mul(inv(ml.witness), mul(letter_elems_[size_t(found)], ml.witness)) == ml.elem,
            "Levi witness does not conjugate the ambient letter to the Levi letter");
      M.letters.push_back(ml);
    }
  }

  // central translation tau: Wfin_M-invariant, strictly dominant outside M
  {
    bool ok = false;
    for (std::int64_t norm = 0; norm <= 24 && !ok; ++norm) {
      std::vector<LVec> shell;
      LVec v(size_t(lat_rank_), 0);
      std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t left) {
        if (pos == lat_rank_) {
          if (left == 0) shell.push_back(v);
          return;
        }
        for (std::int64_t x = -left; x <= left; ++x) {
          v[size_t(pos)] = x;
          rec(pos + 1, left - (x < 0 ? -x : x));
        }
        v[size_t(pos)] = 0;
      };
      rec(0, norm);
      std::sort(shell.begin(), shell.end());
      for (const LVec& lam : shell) {
        bool inv_ok = true;
        for (int j : J)
          if (act(fin_.gen(j), lam) != lam) {
            inv_ok = false;
            break;
          }
        if (!inv_ok) continue;
        bool dom = true;
        for (int r : M.out_roots)
          if (pair_root(r, lam) <= 0) {
            dom = false;
            break;
          }
        if (!dom) continue;
        M.tau = lam;
        ok = true;
        break;
      }
    }
    // absent for lattice-free (finite) instances; tau users must check
    M.has_tau = ok;
  }

  for (int j : J) M.coroot_lattice_gens.push_back(coroots_[size_t(j)]);
  return M;
}

std::int64_t ExtWeyl::len_M(const Levi& M, const Welt& w) const {
  check(in_WM(M, w), "element not in W_M");
  std::int64_t total = 0;
  int ui = fin_.inv(w.u);
  for (int r : M.pos_roots) {
    std::int64_t v = pair_root(r, w.lam);
    if (fin_.root_image(ui, r).second) {
      total += v < 0 ? -v : v;
    } else {
      total += v - 1 < 0 ? 1 - v : v - 1;
    }
  }
  return total;
}

bool ExtWeyl::right_descent_M(const Levi& M, const Welt& w, int a) const {
  return !act_aroot(w, M.letters[size_t(a)].a).positive();
}

std::pair<Welt, std::vector<int>> ExtWeyl::reduce_M(const Levi& M, const Welt& w) const {
  std::vector<int> word;
  Welt cur = w;
  while (true) {
    int d = -1;
    for (int a = 0; a < int(M.letters.size()); ++a)
      if (right_descent_M(M, cur, a)) {
        d = a;
        break;
      }
    if (d < 0) break;
    cur = mul(cur, M.letters[size_t(d)].elem);
    word.push_back(d);
  }
  std::reverse(word.begin(), word.end());
  check(len_M(M, cur) == 0, "M-reduction did not reach length zero");
  check(std::int64_t(word.size()) == len_M(M, w), "M-reduced word length mismatch");
  return {cur, word};
}

bool ExtWeyl::is_M_positive(const Levi& M, const Welt& w) const {
  for (int r : M.out_roots)
    if (pair_root(r, w.lam) < 0) return false;
  return true;
}

bool ExtWeyl::is_M_negative(const Levi& M, const Welt& w) const {
  for (int r : M.out_roots)
    if (pair_root(r, w.lam) > 0) return false;
  return true;
}

bool ExtWeyl::in_WM(const Levi& M, const Welt& w) const {
  const auto& word = fin_.word(w.u);
  std::vector<bool> in(size_t(fin_.rank()), false);
  for (int j : M.J) in[size_t(j)] = true;
  for (int i : word)
    if (!in[size_t(i)]) return false;
  return true;
}

std::string ExtWeyl::wstr_M(const Levi& M, const Welt& w) const {
  auto [om, word] = reduce_M(M, w);
  std::ostringstream ss;
  bool first = true;
  if (!(om == one())) {
    ss << "om(" << lvec_str(om.lam) << ";" << fin_.wstr(om.u) << ")";
    first = false;
  }
  for (int a : word) {
    if (!first) ss << '.';
    ss << M.letters[size_t(a)].label;
    first = false;
  }
  if (first) return "e";
  return ss.str();
}

}  // namespace phec
