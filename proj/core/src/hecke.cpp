#include "phec/hecke.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "phec/error.hpp"
#include "phec/linalg.hpp"

namespace phec {

namespace {

// floor division with positive divisor
Int floordiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b < 0) q -= 1;
  return q;
}

// row-style Hermite normal form; zero rows dropped, pivots positive,
// entries above each pivot reduced into [0, pivot)
std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> A) {
  if (A.empty()) return A;
  const size_t n = A[0].size();
  size_t r = 0;
  for (size_t col = 0; col < n && r < A.size(); ++col) {
    // clear the column below r with gcd steps
    for (;;) {
      size_t best = A.size();
      for (size_t i = r; i < A.size(); ++i)
        if (A[i][col] != 0 &&
            (best == A.size() || abs(A[i][col]) < abs(A[best][col])))
          best = i;
      if (best == A.size()) break;
      std::swap(A[r], A[best]);
      bool clean = true;
      for (size_t i = r + 1; i < A.size(); ++i) {
        if (A[i][col] == 0) continue;
        Int q = floordiv(A[i][col], abs(A[r][col]));
        if (A[r][col] < 0) q = -q;
        for (size_t k = 0; k < n; ++k) A[i][k] -= q * A[r][k];
        if (A[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (A[r][col] == 0) continue;
    if (A[r][col] < 0)
      for (size_t k = 0; k < n; ++k) A[r][k] = -A[r][k];
    for (size_t i = 0; i < r; ++i) {
      Int q = floordiv(A[i][col], A[r][col]);
      for (size_t k = 0; k < n; ++k) A[i][k] -= q * A[r][k];
    }
    ++r;
  }
  A.resize(r);
  return A;
}

// canonical residue of v modulo the row lattice of an HNF matrix
std::vector<Int> hnf_residue(const std::vector<std::vector<Int>>& H,
                             std::vector<Int> v) {
  for (const auto& row : H) {
    size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    Int q = floordiv(v[p], row[p]);
    for (size_t k = 0; k < v.size(); ++k) v[k] -= q * row[k];
  }
  return v;
}

std::vector<Int> to_ints(const LVec& v) {
  std::vector<Int> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

bool all_zero(const std::vector<Int>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<int> split_top(const std::string& s, char sep) {
  std::vector<int> cuts;
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == sep && depth == 0) cuts.push_back(int(i));
  }
  return cuts;
}

}  // namespace

// ---- construction ---------------------------------------------------------

HeckeAlg HeckeAlg::build(std::shared_ptr<const Instance> inst,
                         std::optional<std::vector<int>> J, const Ring& R,
                         const std::vector<Poly>& qvals) {
  HeckeAlg A;
  A.inst_ = inst;
  A.R_ = R;
  A.qvals_ = qvals;
  A.w1_ = inst->w1();
  const ExtWeyl& W = inst->W;
  check(int(qvals.size()) == W.nqclasses(), "q-value count mismatch");

  struct Raw {
    W1El elem;
    std::string label;
    int qclass;
    int amb;
    Welt witness;
  };
  std::vector<Raw> raws;
  if (!J) {
    for (int a = 0; a < W.nletters(); ++a)
      raws.push_back(Raw{W1El{inst->Zk.zero(), W.letter_elem(a)}, W.letter_label(a),
                         W.qclass(a), a, W.one()});
  } else {
    A.levi_ = W.levi(*J);
    for (const auto& ml : A.levi_->letters)
      raws.push_back(
          Raw{W1El{inst->Zk.zero(), ml.elem}, ml.label, ml.qclass, ml.amb, ml.witness});
  }

  for (const Raw& raw : raws) {
    Letter L;
    L.elem = raw.elem;
    L.label = raw.label;
    L.qclass = raw.qclass;
    const Poly& q = qvals[size_t(L.qclass)];
    const CSpec& cs = inst->cspec[size_t(raw.amb)];
    // c-table of the canonical lift, transported through the witness:
    // c_{g^-1 s g}(g^-1 t g) = c_s(t)
    const int gu = W.fin().inv(raw.witness.u);
    if (cs.generic) {
      L.c.emplace_back(inst->Zk.zero(), poly_sub(R, q, poly_one(R)));
    } else {
      for (const auto& [t, v] : cs.values)
        L.c.emplace_back(inst->Zk.act(gu, t), poly_from_int(R, v));
      std::sort(L.c.begin(), L.c.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    Poly sum = poly_zero();
    for (const auto& [t, v] : L.c) sum = poly_add(R, sum, v);
    check(poly_sub(R, sum, poly_sub(R, q, poly_one(R))).is_zero(),
          "c-values of letter " + L.label + " do not sum to q-1 in the " +
              "coefficient ring; this instance needs a specialized ring");
    // conjugated table for the descent recursion T_w T_s = q T_{ws} + sum c(t) T_{w s^-1 t s}
    const int su = W.fin().inv(L.elem.w.u);
    for (const auto& [t, v] : L.c) L.cconj.emplace_back(inst->Zk.act(su, t), v);
    A.letters_.push_back(std::move(L));
  }
  return A;
}

HeckeAlg HeckeAlg::ambient(std::shared_ptr<const Instance> inst) {
  std::vector<Poly> qv;
  for (int i = 0; i < inst->W.nqclasses(); ++i) qv.push_back(poly_var(inst->qring, i));
  return build(inst, std::nullopt, inst->qring, qv);
}

HeckeAlg HeckeAlg::ambient(std::shared_ptr<const Instance> inst, const Ring& R,
                           const std::vector<Int>& qvals) {
  std::vector<Poly> qv;
  for (const Int& v : qvals) qv.push_back(poly_from_int(R, v));
  return build(inst, std::nullopt, R, qv);
}

HeckeAlg HeckeAlg::levi(std::shared_ptr<const Instance> inst, std::vector<int> J) {
  std::vector<Poly> qv;
  for (int i = 0; i < inst->W.nqclasses(); ++i) qv.push_back(poly_var(inst->qring, i));
  return build(inst, std::move(J), inst->qring, qv);
}

HeckeAlg HeckeAlg::levi(std::shared_ptr<const Instance> inst, std::vector<int> J,
                        const Ring& R, const std::vector<Int>& qvals) {
  std::vector<Poly> qv;
  for (const Int& v : qvals) qv.push_back(poly_from_int(R, v));
  return build(inst, std::move(J), R, qv);
}

const ExtWeyl::Levi& HeckeAlg::M() const {
  check(levi_.has_value(), "not a Levi algebra");
  return *levi_;
}

// ---- group plumbing ---------------------------------------------------------

std::int64_t HeckeAlg::len(const W1El& x) const {
  return levi_ ? inst_->W.len_M(*levi_, x.w) : inst_->W.len(x.w);
}

bool HeckeAlg::right_descent(const W1El& x, int a) const {
  return levi_ ? inst_->W.right_descent_M(*levi_, x.w, a)
               : inst_->W.right_descent(x.w, a);
}

HeckeAlg::Dec HeckeAlg::reduce(const W1El& x) const {
  Dec d;
  d.z = x.z;
  auto [om, word] = levi_ ? inst_->W.reduce_M(*levi_, x.w) : inst_->W.reduce(x.w);
  d.omega = om;
  d.word = std::move(word);
  return d;
}

Poly HeckeAlg::q_of(const W1El& x) const {
  Dec d = reduce(x);
  Poly out = poly_one(R_);
  for (int a : d.word) out = poly_mul(R_, out, q(a));
  return out;
}

std::string HeckeAlg::key_str(const W1El& x) const {
  if (!levi_) return w1_.wstr(x);
  std::string base = inst_->W.wstr_M(*levi_, x.w);
  if (inst_->Zk.is_zero(x.z)) return base;
  std::ostringstream ss;
  ss << "z(";
  for (size_t i = 0; i < x.z.size(); ++i) {
    if (i) ss << ',';
    ss << x.z[i];
  }
  ss << ")";
  if (base != "e") ss << '.' << base;
  return ss.str();
}

// ---- element basics ---------------------------------------------------------

void HeckeAlg::add_term(HElem& a, const W1El& x, const Poly& c) const {
  if (c.is_zero()) return;
  check(len(x) <= max_len, "term length exceeds the algebra budget");
  auto it = a.t.find(x);
  if (it == a.t.end()) {
    a.t.emplace(x, c);
    return;
  }
  it->second = poly_add(R_, it->second, c);
  if (it->second.is_zero()) a.t.erase(it);
}

HElem HeckeAlg::one(Basis b) const {
  HElem e{b, {}};
  e.t.emplace(w1_.one(), poly_one(R_));
  return e;
}

HElem HeckeAlg::T(const W1El& x) const {
  check(levi_ ? inst_->W.in_WM(*levi_, x.w) : true, "element outside the Levi");
  HElem e{Basis::T, {}};
  add_term(e, x, poly_one(R_));
  return e;
}

HElem HeckeAlg::Tstar(const W1El& x) const {
  check(levi_ ? inst_->W.in_WM(*levi_, x.w) : true, "element outside the Levi");
  HElem e{Basis::Star, {}};
  add_term(e, x, poly_one(R_));
  return e;
}

HElem HeckeAlg::add(const HElem& a, const HElem& b) const {
  HElem bb = to_basis(b, a.basis);
  HElem out = a;
  for (const auto& [x, c] : bb.t) add_term(out, x, c);
  return out;
}

HElem HeckeAlg::sub(const HElem& a, const HElem& b) const { return add(a, neg(b)); }

HElem HeckeAlg::neg(const HElem& a) const {
  HElem out{a.basis, {}};
  for (const auto& [x, c] : a.t) out.t.emplace(x, poly_neg(R_, c));
  return out;
}

HElem HeckeAlg::scale(const HElem& a, const Poly& c) const {
  HElem out{a.basis, {}};
  for (const auto& [x, cx] : a.t) {
    Poly p = poly_mul(R_, cx, c);
    if (!p.is_zero()) out.t.emplace(x, std::move(p));
  }
  return out;
}

// ---- multiplication ---------------------------------------------------------

// a * T_y for ell(y) = 0: pure braid moves
HElem HeckeAlg::mul_zomega(const HElem& a, const W1El& y) const {
  HElem out{Basis::T, {}};
  for (const auto& [x, c] : a.t) add_term(out, w1_.mul(x, y), c);
  return out;
}

// a * T_s for one letter, by the braid move or the descent recursion
// T_w T_s = q_s T_{ws} + sum_t c_s(t) T_{w (s^-1 t s)}
HElem HeckeAlg::mul_letter(const HElem& a, int li) const {
  const Letter& L = letters_[size_t(li)];
  HElem out{Basis::T, {}};
  for (const auto& [x, c] : a.t) {
    if (!right_descent(x, li)) {
      add_term(out, w1_.mul(x, L.elem), c);
    } else {
      add_term(out, w1_.mul(x, L.elem), poly_mul(R_, c, q(li)));
      for (const auto& [t, cv] : L.cconj)
        add_term(out, w1_.mul(x, w1_.from_z(t)), poly_mul(R_, c, cv));
    }
  }
  return out;
}

HElem HeckeAlg::mul(const HElem& a, const HElem& b) const {
  HElem at = to_basis(a, Basis::T);
  HElem bt = to_basis(b, Basis::T);
  HElem out{Basis::T, {}};
  for (const auto& [y, cy] : bt.t) {
    Dec d = reduce(y);
    HElem acc = mul_zomega(at, W1El{d.z, d.omega});
    for (int li : d.word) acc = mul_letter(acc, li);
    for (const auto& [x, c] : acc.t) add_term(out, x, poly_mul(R_, c, cy));
  }
  return to_basis(out, a.basis);
}

// ---- basis conversion ---------------------------------------------------------

// T-coordinates of T*_x = T_z T_om prod (T_s - c_s)
HElem HeckeAlg::star_in_T(const W1El& x) const {
  if (auto it = star_cache_.find(x); it != star_cache_.end()) return it->second;
  Dec d = reduce(x);
  HElem e{Basis::T, {}};
  add_term(e, W1El{d.z, d.omega}, poly_one(R_));
  for (int li : d.word) {
    HElem next = mul_letter(e, li);
    for (const auto& [t, cv] : letters_[size_t(li)].c)
      for (const auto& [y, c] : e.t)
        add_term(next, w1_.mul(y, w1_.from_z(t)), poly_neg(R_, poly_mul(R_, c, cv)));
    e = std::move(next);
  }
  star_cache_.emplace(x, e);
  return e;
}

HElem HeckeAlg::to_basis(const HElem& a, Basis b) const {
  if (a.basis == b) return a;
  if (a.basis == Basis::Star) {
    // direct expansion
    HElem out{Basis::T, {}};
    for (const auto& [x, c] : a.t) {
      HElem ex = star_in_T(x);
      for (const auto& [y, cy] : ex.t) add_term(out, y, poly_mul(R_, cy, c));
    }
    return out;
  }
  // T -> Star: peel the longest remaining term; T*_x = T_x + shorter terms
  HElem rest = a;
  HElem out{Basis::Star, {}};
  while (!rest.t.empty()) {
    auto top = rest.t.begin();
    for (auto it = rest.t.begin(); it != rest.t.end(); ++it)
      if (len(it->first) > len(top->first)) top = it;
    W1El x = top->first;
    Poly c = top->second;
    out.t.emplace(x, c);
    HElem ex = star_in_T(x);
    for (const auto& [y, cy] : ex.t)
      add_term(rest, y, poly_neg(R_, poly_mul(R_, cy, c)));
    check(!rest.t.count(x), "star conversion failed to eliminate its pivot");
  }
  return out;
}

bool HeckeAlg::eq(const HElem& a, const HElem& b) const {
  HElem d = sub(to_basis(a, Basis::T), b);
  return d.t.empty();
}

// ---- rendering ---------------------------------------------------------------

std::string HeckeAlg::str(const HElem& a) const {
  if (a.t.empty()) return "0";
  // order terms by (length, omega part, reduced word, z-part)
  struct Row {
    std::int64_t l;
    std::string om;
    std::vector<int> word;
    LVec z;
    const W1El* x;
    const Poly* c;
  };
  std::vector<Row> rows;
  for (const auto& [x, c] : a.t) {
    Dec d = reduce(x);
    std::string om = levi_ ? inst_->W.wstr_M(*levi_, d.omega) : inst_->W.wstr(d.omega);
    rows.push_back(Row{len(x), std::move(om), d.word, d.z, &x, &c});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& p, const Row& q) {
    return std::tie(p.l, p.om, p.word, p.z) < std::tie(q.l, q.om, q.word, q.z);
  });
  const char* marker = a.basis == Basis::T ? "T[" : "T*[";
  std::ostringstream ss;
  bool first = true;
  for (const Row& r : rows) {
    if (!first) ss << " + ";
    first = false;
    const Poly& c = *r.c;
    std::string cs = poly_str(R_, c);
    if (cs == "1") {
    } else if (cs == "-1") {
      ss << '-';
    } else if (c.t.size() == 1) {
      ss << cs << '*';
    } else {
      ss << '(' << cs << ")*";
    }
    ss << marker << key_str(*r.x) << ']';
  }
  return ss.str();
}

W1El HeckeAlg::key_parse(const std::string& ks) const {
  const ExtWeyl& W = inst_->W;
  if (ks == "e") return w1_.one();
  std::vector<int> cuts = split_top(ks, '.');
  std::vector<std::string> parts;
  size_t start = 0;
  for (int cut : cuts) {
    parts.push_back(ks.substr(start, size_t(cut) - start));
    start = size_t(cut) + 1;
  }
  parts.push_back(ks.substr(start));

  auto fin_from = [&](const std::string& word) {
    std::vector<int> w;
    size_t p = 0;
    while (p < word.size()) {
      size_t dot = word.find('.', p);
      if (dot == std::string::npos) dot = word.size();
      std::string lab = word.substr(p, dot - p);
      int idx = -1;
      for (int i = 0; i < W.fin().rank(); ++i)
        if (W.fin().label(i) == lab) idx = i;
      check(idx >= 0, "unknown finite letter '" + lab + "' in key");
      w.push_back(idx);
      p = dot + 1;
    }
    return W.fin().from_word(w);
  };
  auto parse_lvec = [&](const std::string& body) {
    LVec v;
    size_t p = 0;
    while (p <= body.size()) {
      size_t comma = body.find(',', p);
      if (comma == std::string::npos) comma = body.size();
      v.push_back(std::stoll(body.substr(p, comma - p)));
      p = comma + 1;
      if (p > body.size()) break;
    }
    return v;
  };

  W1El acc = w1_.one();
  for (const std::string& part : parts) {
    check(!part.empty(), "empty key component");
    if (part.rfind("z(", 0) == 0 && part.back() == ')') {
      LVec z = parse_lvec(part.substr(2, part.size() - 3));
      check(int(z.size()) == inst_->Zk.rank(), "z-part rank mismatch in key");
      acc = w1_.mul(acc, w1_.from_z(z));
    } else if (part.rfind("om(", 0) == 0 && part.back() == ')') {
      std::string body = part.substr(3, part.size() - 4);
      size_t semi = body.find(';');
      check(semi != std::string::npos, "malformed om(...) in key");
      LVec lam = parse_lvec(body.substr(0, semi));
      check(int(lam.size()) == W.lat_rank(), "om lambda rank mismatch in key");
      std::string word = body.substr(semi + 1);
      int u = word == "e" ? W.fin().id() : fin_from(word);
      acc = w1_.mul(acc, W1El{inst_->Zk.zero(), Welt{lam, u}});
    } else {
      int idx = -1;
      for (int i = 0; i < nletters(); ++i)
        if (letters_[size_t(i)].label == part) idx = i;
      check(idx >= 0, "unknown letter '" + part + "' in key");
      acc = w1_.mul(acc, letters_[size_t(idx)].elem);
    }
  }
  if (levi_) check(W.in_WM(*levi_, acc.w), "parsed key lies outside the Levi");
  return acc;
}

HElem HeckeAlg::parse(const std::string& s) const {
  if (s == "0") return zero();
  std::vector<std::string> terms;
  size_t p = 0;
  for (;;) {
    // keys contain no spaces, so a literal " + " always separates terms
    size_t sep = s.find(" + ", p);
    if (sep == std::string::npos) {
      terms.push_back(s.substr(p));
      break;
    }
    terms.push_back(s.substr(p, sep - p));
    p = sep + 3;
  }
  HElem out{Basis::T, {}};
  bool basis_set = false;
  for (const std::string& term : terms) {
    size_t mpos = term.find("T*[");
    Basis b = Basis::Star;
    size_t klen = 3;
    if (mpos == std::string::npos) {
      mpos = term.find("T[");
      b = Basis::T;
      klen = 2;
    }
    check(mpos != std::string::npos && term.back() == ']', "malformed term '" + term + "'");
    if (!basis_set) {
      out.basis = b;
      basis_set = true;
    } else {
      check(out.basis == b, "mixed bases in element text");
    }
    std::string key = term.substr(mpos + klen, term.size() - mpos - klen - 1);
    std::string pre = term.substr(0, mpos);
    Poly c;
    if (pre.empty()) {
      c = poly_one(R_);
    } else if (pre == "-") {
      c = poly_neg(R_, poly_one(R_));
    } else {
      check(pre.back() == '*', "malformed coefficient '" + pre + "'");
      pre.pop_back();
      if (!pre.empty() && pre.front() == '(' && pre.back() == ')')
        pre = pre.substr(1, pre.size() - 2);
      c = poly_parse(R_, pre);
    }
    add_term(out, key_parse(key), c);
  }
  return out;
}

// ---- maps between algebras ---------------------------------------------------

namespace {
void check_compatible(const HeckeAlg& a, const HeckeAlg& b) {
  check(a.inst_ptr().get() == b.inst_ptr().get(), "algebras over different instances");
  check(a.ring().kind == b.ring().kind && a.ring().modulus == b.ring().modulus,
        "algebras over different rings");
  for (size_t i = 0; i < a.qvals().size(); ++i)
    check(poly_sub(a.ring(), a.qvals()[i], b.qvals()[i]).is_zero(),
          "algebras with different q-values");
}
}  // namespace

HElem specialize_elem(const HeckeAlg& from, const HeckeAlg& to, const HElem& a) {
  check(from.inst_ptr().get() == to.inst_ptr().get(),
        "specialization across different instances");
  check(from.ring().kind == RingKind::PolyZ, "source algebra is not generic");
  check(from.is_levi() == to.is_levi() &&
            (!from.is_levi() || from.M().J == to.M().J),
        "specialization across different algebras");
  std::vector<Int> vals;
  for (const Poly& qv : to.qvals()) {
    check(poly_is_const(qv), "target algebra has non-constant q-values");
    vals.push_back(poly_const(qv));
  }
  HElem out{a.basis, {}};
  for (const auto& [x, c] : a.t) {
    Poly p = poly_specialize(from.ring(), to.ring(), c, vals);
    if (!p.is_zero()) out.t.emplace(x, std::move(p));
  }
  return out;
}

HElem theta(const HeckeAlg& Malg, const HeckeAlg& G, const HElem& m) {
  check_compatible(Malg, G);
  check(Malg.is_levi() && !G.is_levi(), "theta maps a Levi algebra into the ambient one");
  HElem mt = Malg.to_basis(m, Basis::T);
  HElem out{Basis::T, {}};
  for (const auto& [x, c] : mt.t) out.t.emplace(x, c);
  return out;
}

HElem theta_star(const HeckeAlg& Malg, const HeckeAlg& G, const HElem& m) {
  check_compatible(Malg, G);
  check(Malg.is_levi() && !G.is_levi(), "theta* maps a Levi algebra into the ambient one");
  HElem ms = Malg.to_basis(m, Basis::Star);
  HElem out{Basis::Star, {}};
  for (const auto& [x, c] : ms.t) out.t.emplace(x, c);
  return out;
}

// ---- orthogonal-pair ideals ---------------------------------------------------

IdealCtx make_ideal_ctx(std::shared_ptr<const Instance> inst, std::vector<int> J) {
  IdealCtx ctx;
  ctx.inst = inst;
  const ExtWeyl& W = inst->W;
  const FinWeyl& fin = W.fin();
  std::sort(J.begin(), J.end());
  for (int j : J) check(j >= 0 && j < fin.rank(), "Levi letter out of range");
  ctx.J = J;
  for (int i = 0; i < fin.rank(); ++i)
    if (!std::count(J.begin(), J.end(), i)) ctx.J2.push_back(i);
  for (int i : ctx.J)
    for (int j : ctx.J2)
      check(fin.coxeter_matrix()[size_t(i)][size_t(j)] == 2,
            "the Levi and its complement are not orthogonal");
  ctx.M = W.levi(ctx.J);
  ctx.M2 = W.levi(ctx.J2);

  // each letter of S^aff lies wholly on one side
  ctx.side2.assign(size_t(W.nletters()), false);
  for (int a = 0; a < W.nletters(); ++a) {
    const auto& rt = fin.pos_root(W.letter_root(a).r);
    bool inJ = false, inJ2 = false;
    for (int i = 0; i < fin.rank(); ++i) {
      if (rt[size_t(i)] == 0) continue;
      (std::count(ctx.J.begin(), ctx.J.end(), i) ? inJ : inJ2) = true;
    }
    check(inJ != inJ2, "letter root is supported on both sides");
    ctx.side2[size_t(a)] = inJ2;
  }

  // Z2: the Weyl-stable subgroup generated by the Z' of the M2-side letters
  std::vector<LVec> gens;
  for (int a = 0; a < W.nletters(); ++a) {
    if (!ctx.side2[size_t(a)]) continue;
    for (const LVec& z : inst->cspec[size_t(a)].zprime)
      if (!inst->Zk.is_zero(z)) gens.push_back(z);
  }
  for (;;) {
    std::vector<LVec> span = inst->Zk.span(gens);
    std::vector<LVec> more = span;
    for (const LVec& z : span)
      for (int i = 0; i < fin.rank(); ++i) more.push_back(inst->Zk.act(fin.gen(i), z));
    std::vector<LVec> span2 = inst->Zk.span(more);
    if (span2 == span) {
      ctx.Z2 = span;
      ctx.Z2gens = gens;
      break;
    }
    gens = span2;
  }

  // lattice data of Q^vee_{M2} and the J2 Cartan matrix; a rank-0 lattice
  // (purely finite instance) has no translation part at all
  std::vector<std::vector<Int>> rows;
  if (W.lat_rank() > 0) {
    for (int j : ctx.J2) {
      LVec cr = W.coroot_of(fin.simple_root_index(j));
      ctx.j2coroots.push_back(cr);
      rows.push_back(to_ints(cr));
    }
  }
  ctx.hnf = hnf_rows(rows);
  const int n2 = int(ctx.j2coroots.size());
  if (n2 > 0) {
    QMat C(n2, n2);
    for (int jj = 0; jj < n2; ++jj)
      for (int ii = 0; ii < n2; ++ii)
        C.at(jj, ii) = W.pair_root(fin.simple_root_index(ctx.J2[size_t(jj)]),
                                   ctx.j2coroots[size_t(ii)]);
    check(qm_invert(C, &ctx.cart2_inv_t), "J2 Cartan matrix is singular");
  }
  return ctx;
}

bool in_1WM2(const IdealCtx& ctx, const W1El& x) {
  if (!std::binary_search(ctx.Z2.begin(), ctx.Z2.end(), x.z)) return false;
  const FinWeyl& fin = ctx.inst->W.fin();
  for (int i : fin.word(x.w.u))
    if (!std::count(ctx.J2.begin(), ctx.J2.end(), i)) return false;
  return all_zero(hnf_residue(ctx.hnf, to_ints(x.w.lam)));
}

namespace {
// split the finite part along the orthogonal decomposition Wfin = W_J x W_J2
std::pair<int, int> split_fin(const IdealCtx& ctx, int u) {
  const FinWeyl& fin = ctx.inst->W.fin();
  int uM = fin.id(), u2 = fin.id();
  for (int i : fin.word(u)) {
    if (std::count(ctx.J.begin(), ctx.J.end(), i))
      uM = fin.mul(uM, fin.gen(i));
    else
      u2 = fin.mul(u2, fin.gen(i));
  }
  check(fin.mul(uM, u2) == u, "orthogonal factorization failed");
  return {uM, u2};
}

LVec zmin_in_coset(const IdealCtx& ctx, const LVec& z) {
  LVec best = ctx.inst->Zk.reduce(z);
  for (const LVec& zeta : ctx.Z2) {
    LVec cand = ctx.inst->Zk.add(z, zeta);
    if (cand < best) best = cand;
  }
  return best;
}
}  // namespace

W1El rep_G(const IdealCtx& ctx, const W1El& x) {
  if (auto it = ctx.rep_g_cache.find(x); it != ctx.rep_g_cache.end())
    return it->second;
  const ExtWeyl& W = ctx.inst->W;
  const FinWeyl& fin = W.fin();
  const std::int64_t L0 = W.len(x.w);
  auto [uM, u2unused] = split_fin(ctx, x.w.u);
  (void)u2unused;
  const int n2 = int(ctx.j2coroots.size());

  // any length-minimal coset element t_{lam+mu} uM v2 satisfies
  // |<alpha_j, lam+mu>| <= L0 + 1 for every j in J2
  Welt best = x.w;
  std::int64_t bestlen = W.len(x.w);
  std::string bestkey = W.wstr(best);
  std::vector<std::int64_t> c(size_t(n2), 0);
  for (int j = 0; j < n2; ++j)
    c[size_t(j)] = W.pair_root(fin.simple_root_index(ctx.J2[size_t(j)]), x.w.lam);
  std::vector<int> subgroup2 = fin.subgroup(ctx.J2);
  std::vector<std::int64_t> y(size_t(n2), 0);

  auto consider = [&](const Welt& cand) {
    std::int64_t l = W.len(cand);
    if (l > bestlen) return;
    std::string key = W.wstr(cand);
    if (l < bestlen || key < bestkey) {
      best = cand;
      bestlen = l;
      bestkey = std::move(key);
    }
  };

  auto rec = [&](auto&& self, int j) -> void {
    if (j == n2) {
      // mu = sum k_i alpha_i^vee with C k = y - c; k must be integral
      LVec mu(size_t(W.lat_rank()), 0);
      for (int i = 0; i < n2; ++i) {
        Rat ki = 0;
        for (int jj = 0; jj < n2; ++jj)
          ki += ctx.cart2_inv_t.at(i, jj) * Rat(y[size_t(jj)] - c[size_t(jj)]);
        if (denominator(ki) != 1) return;
        std::int64_t kz = numerator(ki).convert_to<std::int64_t>();
        for (int t = 0; t < W.lat_rank(); ++t)
          mu[size_t(t)] += kz * ctx.j2coroots[size_t(i)][size_t(t)];
      }
      LVec lamp = x.w.lam;
      for (int t = 0; t < W.lat_rank(); ++t) lamp[size_t(t)] += mu[size_t(t)];
      for (int v2 : subgroup2) consider(Welt{lamp, fin.mul(uM, v2)});
      return;
    }
    for (std::int64_t v = -(L0 + 1); v <= L0 + 1; ++v) {
      y[size_t(j)] = v;
      self(self, j + 1);
    }
  };
  if (n2 == 0) {
    for (int v2 : subgroup2) consider(Welt{x.w.lam, fin.mul(uM, v2)});
  } else {
    rec(rec, 0);
  }
  W1El out{zmin_in_coset(ctx, x.z), best};
  ctx.rep_g_cache.emplace(x, out);
  return out;
}

W1El to_WM(const IdealCtx& ctx, const W1El& x) {
  auto [uM, u2] = split_fin(ctx, x.w.u);
  (void)u2;
  return W1El{x.z, Welt{x.w.lam, uM}};
}

W1El rep_M(const IdealCtx& ctx, const W1El& x) {
  if (auto it = ctx.rep_m_cache.find(x); it != ctx.rep_m_cache.end())
    return it->second;
  check(ctx.inst->W.in_WM(ctx.M, x.w), "rep_M needs an element of W_M(1)");
  std::vector<Int> res = hnf_residue(ctx.hnf, to_ints(x.w.lam));
  LVec lam(res.size());
  for (size_t i = 0; i < res.size(); ++i) {
    check(res[i] >= std::numeric_limits<std::int64_t>::min() &&
              res[i] <= std::numeric_limits<std::int64_t>::max(),
          "lattice residue overflow");
    lam[i] = std::int64_t(res[i]);
  }
  W1El out{zmin_in_coset(ctx, x.z), Welt{lam, x.w.u}};
  ctx.rep_m_cache.emplace(x, out);
  return out;
}

Poly q_M2(const IdealCtx& ctx, const HeckeAlg& G, const W1El& x) {
  check(!G.is_levi(), "q_M2 reads ambient reduced words");
  HeckeAlg::Dec d = G.reduce(x);
  Poly out = poly_one(G.ring());
  for (int a : d.word)
    if (ctx.side2[size_t(a)]) out = poly_mul(G.ring(), out, G.q(a));
  return out;
}

std::vector<W1El> lambda2_gens(const IdealCtx& ctx) {
  const W1 w1 = ctx.inst->w1();
  std::vector<W1El> out;
  for (const LVec& z : ctx.Z2gens) out.push_back(w1.from_z(z));
  for (const LVec& cr : ctx.j2coroots)
    out.push_back(W1El{ctx.inst->Zk.zero(), ctx.inst->W.t(cr)});
  return out;
}

namespace {
HElem ideal_reduce(const HeckeAlg& A, const IdealCtx& ctx, const HElem& a,
                   bool ambient) {
  HElem s = A.to_basis(a, Basis::Star);
  HElem out{Basis::Star, {}};
  for (const auto& [x, c] : s.t) {
    W1El r = ambient ? rep_G(ctx, x) : rep_M(ctx, x);
    auto it = out.t.find(r);
    if (it == out.t.end()) {
      out.t.emplace(r, c);
    } else {
      it->second = poly_add(A.ring(), it->second, c);
      if (it->second.is_zero()) out.t.erase(it);
    }
  }
  return out;
}
}  // namespace

HElem ideal_reduce_G(const HeckeAlg& G, const IdealCtx& ctx, const HElem& a) {
  check(!G.is_levi(), "ideal_reduce_G needs the ambient algebra");
  return ideal_reduce(G, ctx, a, true);
}

HElem ideal_reduce_M(const HeckeAlg& Malg, const IdealCtx& ctx, const HElem& a) {
  check(Malg.is_levi() && Malg.M().J == ctx.J, "ideal_reduce_M needs H_M for this context");
  return ideal_reduce(Malg, ctx, a, false);
}

HElem e_star(const HeckeAlg& Malg, const HeckeAlg& G, const IdealCtx& ctx,
             const HElem& m) {
  check_compatible(Malg, G);
  HElem nm = ideal_reduce_M(Malg, ctx, Malg.to_basis(m, Basis::Star));
  HElem out{Basis::Star, {}};
  for (const auto& [x, c] : nm.t) {
    W1El r = rep_G(ctx, x);
    auto it = out.t.find(r);
    check(it == out.t.end(), "e* collapsed two M-side normal forms");
    out.t.emplace(r, c);
  }
  return out;
}

HElem e_star_inv(const HeckeAlg& G, const HeckeAlg& Malg, const IdealCtx& ctx,
                 const HElem& x) {
  check_compatible(Malg, G);
  HElem nx = ideal_reduce_G(G, ctx, G.to_basis(x, Basis::Star));
  HElem out{Basis::Star, {}};
  for (const auto& [w, c] : nx.t) {
    W1El r = rep_M(ctx, to_WM(ctx, w));
    auto it = out.t.find(r);
    check(it == out.t.end(), "e*^{-1} collapsed two G-side normal forms");
    out.t.emplace(r, c);
  }
  return out;
}

}  // namespace phec
