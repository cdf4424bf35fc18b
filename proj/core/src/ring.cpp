#include "phec/ring.hpp"

#include <algorithm>
#include <cctype>

namespace phec {

Mono mono_mul(Mono a, Mono b) {
  Mono out = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = mono_get(a, i) + mono_get(b, i);
    check(e <= kMaxExp, "monomial exponent overflow");
    out |= Mono(e) << (8 * i);
  }
  return out;
}

bool mono_divides(Mono a, Mono b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (mono_get(a, i) > mono_get(b, i)) return false;
  return true;
}

Mono mono_div(Mono b, Mono a) {
  check(mono_divides(a, b), "monomial division not exact");
  Mono out = 0;
  for (int i = 0; i < kMaxVars; ++i)
    out |= Mono(mono_get(b, i) - mono_get(a, i)) << (8 * i);
  return out;
}

Ring Ring::zmod(const Int& n) {
  check(n > 1, "modulus must exceed 1");
  Ring r;
  r.kind = RingKind::Zmod;
  r.modulus = n;
  return r;
}

Ring Ring::gfp(const Int& p) {
  check(p > 1, "characteristic must exceed 1");
  for (Int d = 2; d * d <= p; ++d)
    check(p % d != 0, "GFp modulus must be prime");
  Ring r;
  r.kind = RingKind::GFp;
  r.modulus = p;
  return r;
}

Ring Ring::polyz(std::vector<std::string> names) {
  check(int(names.size()) <= kMaxVars, "too many polynomial variables");
  Ring r;
  r.kind = RingKind::PolyZ;
  r.vars = std::move(names);
  return r;
}

namespace {

Int reduce_coeff(const Ring& R, Int v) {
  if (R.kind == RingKind::Zmod || R.kind == RingKind::GFp) {
    v %= R.modulus;
    if (v < 0) v += R.modulus;
  }
  return v;
}

void push_term(const Ring& R, std::vector<std::pair<Mono, Int>>& out, Mono m, Int c) {
  c = reduce_coeff(R, std::move(c));
  if (c != 0) out.emplace_back(m, std::move(c));
}

}  // namespace

Poly poly_zero() { return Poly{}; }

Poly poly_from_int(const Ring& R, const Int& v) {
  Poly p;
  push_term(R, p.t, 0, v);
  return p;
}

Poly poly_one(const Ring& R) { return poly_from_int(R, 1); }

Poly poly_var(const Ring& R, int i, int e) {
  check(R.is_poly(), "variables need a polynomial ring");
  check(i >= 0 && i < R.nvars(), "variable index out of range");
  if (e == 0) return poly_one(R);
  Poly p;
  p.t.emplace_back(mono_make(i, e), 1);
  return p;
}

Poly poly_add(const Ring& R, const Poly& a, const Poly& b) {
  Poly out;
  out.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size() || (i < a.t.size() && a.t[i].first < b.t[j].first)) {
      push_term(R, out.t, a.t[i].first, a.t[i].second);
      ++i;
    } else if (i == a.t.size() || b.t[j].first < a.t[i].first) {
      push_term(R, out.t, b.t[j].first, b.t[j].second);
      ++j;
    } else {
      push_term(R, out.t, a.t[i].first, a.t[i].second + b.t[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

Poly poly_neg(const Ring& R, const Poly& a) {
  Poly out;
  out.t.reserve(a.t.size());
  for (const auto& [m, c] : a.t) push_term(R, out.t, m, -c);
  return out;
}

Poly poly_sub(const Ring& R, const Poly& a, const Poly& b) {
  return poly_add(R, a, poly_neg(R, b));
}

Poly poly_mul(const Ring& R, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return poly_zero();
  // accumulate into a flat map keyed by monomial
  std::vector<std::pair<Mono, Int>> acc;
  for (const auto& [ma, ca] : a.t)
    for (const auto& [mb, cb] : b.t)
      acc.emplace_back(mono_mul(ma, mb), ca * cb);
  std::sort(acc.begin(), acc.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Poly out;
  size_t i = 0;
  while (i < acc.size()) {
    Mono m = acc[i].first;
    Int c = 0;
    while (i < acc.size() && acc[i].first == m) {
      c += acc[i].second;
      ++i;
    }
    push_term(R, out.t, m, std::move(c));
  }
  return out;
}

Poly poly_scale(const Ring& R, const Poly& a, const Int& c) {
  Poly out;
  out.t.reserve(a.t.size());
  for (const auto& [m, v] : a.t) push_term(R, out.t, m, v * c);
  return out;
}

Poly poly_pow(const Ring& R, const Poly& a, long n) {
  check(n >= 0, "negative power");
  Poly out = poly_one(R);
  Poly base = a;
  while (n > 0) {
    if (n & 1) out = poly_mul(R, out, base);
    base = poly_mul(R, base, base);
    n >>= 1;
  }
  return out;
}

bool poly_divexact(const Ring& R, const Poly& a, const Poly& b, Poly* out) {
  check(!b.is_zero(), "division by zero");
  if (R.kind == RingKind::GFp || R.kind == RingKind::Zmod) {
    // degree-zero data in these rings
    check(poly_is_const(a) && poly_is_const(b), "nonconstant over modular ring");
    Poly inv = poly_unit_inverse(R, b);
    *out = poly_mul(R, a, inv);
    return true;
  }
  Poly r = a;
  Poly q = poly_zero();
  const auto& blead = b.t.back();
  while (!r.is_zero()) {
    const auto& rlead = r.t.back();
    if (!mono_divides(blead.first, rlead.first)) return false;
    if (rlead.second % blead.second != 0) return false;
    Poly term;
    term.t.emplace_back(mono_div(rlead.first, blead.first),
                        rlead.second / blead.second);
    q = poly_add(R, q, term);
    r = poly_sub(R, r, poly_mul(R, term, b));
  }
  *out = q;
  return true;
}

bool poly_is_const(const Poly& a) {
  return a.is_zero() || (a.t.size() == 1 && a.t[0].first == 0);
}

Int poly_const(const Poly& a) {
  if (a.is_zero()) return 0;
  check(poly_is_const(a), "polynomial is not constant");
  return a.t[0].second;
}

bool poly_is_unit(const Ring& R, const Poly& a) {
  if (a.is_zero()) return false;
  switch (R.kind) {
    case RingKind::Z:
    case RingKind::PolyZ:
      return poly_is_const(a) && (poly_const(a) == 1 || poly_const(a) == -1);
    case RingKind::Zmod:
    case RingKind::GFp: {
      if (!poly_is_const(a)) return false;
      Int g = boost::multiprecision::gcd(poly_const(a), R.modulus);
      return g == 1;
    }
  }
  return false;
}

namespace {
Int mod_inverse(const Int& a, const Int& n) {
  Int t = 0, newt = 1, r = n, newr = a % n;
  if (newr < 0) newr += n;
  while (newr != 0) {
    Int qq = r / newr;
    Int tmp = t - qq * newt;
    t = newt;
    newt = tmp;
    tmp = r - qq * newr;
    r = newr;
    newr = tmp;
  }
  check(r == 1, "element not invertible modulo n");
  if (t < 0) t += n;
  return t;
}
}  // namespace

Poly poly_unit_inverse(const Ring& R, const Poly& a) {
  check(poly_is_unit(R, a), "not a unit");
  switch (R.kind) {
    case RingKind::Z:
    case RingKind::PolyZ:
      return a;  // +-1 is its own inverse
    case RingKind::Zmod:
    case RingKind::GFp:
      return poly_from_int(R, mod_inverse(poly_const(a), R.modulus));
  }
  fail("unreachable");
}

Poly poly_specialize(const Ring& src, const Ring& dst, const Poly& a,
                     const std::vector<Int>& vals) {
  check(int(vals.size()) >= src.nvars(), "missing specialization values");
  Poly out = poly_zero();
  for (const auto& [m, c] : a.t) {
    Int v = c;
    for (int i = 0; i < src.nvars(); ++i) {
      int e = mono_get(m, i);
      for (int k = 0; k < e; ++k) v *= vals[i];
    }
    out = poly_add(dst, out, poly_from_int(dst, v));
  }
  return out;
}

// ---- text ------------------------------------------------------------------

std::string poly_str(const Ring& R, const Poly& a) {
  if (a.is_zero()) return "0";
  // print highest monomial first for readability
  std::string s;
  for (auto it = a.t.rbegin(); it != a.t.rend(); ++it) {
    const auto& [m, c] = *it;
    bool first = s.empty();
    Int cc = c;
    if (!first) {
      s += (cc < 0) ? "-" : "+";
      if (cc < 0) cc = -cc;
    }
    std::string vars;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = mono_get(m, i);
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += R.vars[size_t(i)];
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      s += cc.str();
    } else {
      if (cc == 1) {
        s += vars;
      } else if (first && cc == -1) {
        s += "-" + vars;
      } else {
        s += cc.str() + "*" + vars;
      }
    }
  }
  return s;
}

namespace {

struct PolyLexer {
  const std::string& s;
  size_t pos = 0;
  explicit PolyLexer(const std::string& str) : s(str) {}
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    check(pos < s.size(), "unexpected end of polynomial");
    return s[pos++];
  }
};

Poly parse_sum(const Ring& R, PolyLexer& lx);

Poly parse_factor(const Ring& R, PolyLexer& lx) {
  char c = lx.peek();
  if (c == '(') {
    lx.take();
    Poly p = parse_sum(R, lx);
    check(lx.take() == ')', "expected )");
    return p;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string num;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
      num += lx.s[lx.pos++];
    return poly_from_int(R, Int(num));
  }
  // variable name: letters/digits/underscore, starting with a letter
  std::string name;
  while (lx.pos < lx.s.size()) {
    char ch = lx.s[lx.pos];
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      name += ch;
      ++lx.pos;
    } else {
      break;
    }
  }
  check(!name.empty(), msg("bad polynomial token near '", c, "'"));
  for (int i = 0; i < R.nvars(); ++i) {
    if (R.vars[size_t(i)] == name) {
      int e = 1;
      if (lx.peek() == '^') {
        lx.take();
        std::string num;
        while (lx.pos < lx.s.size() &&
               std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
          num += lx.s[lx.pos++];
        check(!num.empty(), "expected exponent");
        e = std::stoi(num);
      }
      return poly_var(R, i, e);
    }
  }
  fail(msg("unknown variable '", name, "'"));
}

Poly parse_product(const Ring& R, PolyLexer& lx) {
  Poly p = parse_factor(R, lx);
  while (lx.peek() == '*') {
    lx.take();
    p = poly_mul(R, p, parse_factor(R, lx));
  }
  return p;
}

Poly parse_sum(const Ring& R, PolyLexer& lx) {
  bool neg = false;
  if (lx.peek() == '-') {
    lx.take();
    neg = true;
  } else if (lx.peek() == '+') {
    lx.take();
  }
  Poly p = parse_product(R, lx);
  if (neg) p = poly_neg(R, p);
  while (true) {
    char c = lx.peek();
    if (c != '+' && c != '-') break;
    lx.take();
    Poly q = parse_product(R, lx);
    p = (c == '+') ? poly_add(R, p, q) : poly_sub(R, p, q);
  }
  return p;
}

}  // namespace

Poly poly_parse(const Ring& R, const std::string& s) {
  PolyLexer lx(s);
  Poly p = parse_sum(R, lx);
  lx.skip_ws();
  check(lx.pos == s.size(), msg("trailing characters in polynomial '", s, "'"));
  return p;
}

}  // namespace phec
