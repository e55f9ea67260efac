#include <toricsolve/poly.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace toricsolve {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

std::int64_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

// ---------------------------------------------------------------- SparsePoly

SparsePoly SparsePoly::constant(std::vector<std::string> vars, const Int& c) {
  SparsePoly p(std::move(vars));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> vars, std::size_t index) {
  SparsePoly p(std::move(vars));
  Exponents e(p.nvars(), 0);
  e.at(index) = 1;
  p.add_term(e, 1);
  return p;
}

SparsePoly SparsePoly::monomial(std::vector<std::string> vars, Exponents e, const Int& c) {
  SparsePoly p(std::move(vars));
  p.add_term(e, c);
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

void SparsePoly::add_term(const Exponents& e, const Int& c) {
  if (e.size() != vars_.size()) throw InputError("exponent vector length does not match variable count");
  if (c == 0) return;
  for (auto v : e)
    if (v < 0) throw InputError("negative exponent");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int SparsePoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

std::int64_t SparsePoly::total_degree() const {
  // Graded order: the first term has the largest total degree.
  return terms_.empty() ? 0 : toricsolve::total_degree(terms_.begin()->first);
}

std::int64_t SparsePoly::degree_in(std::size_t var) const {
  std::int64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::int64_t SparsePoly::min_degree_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  std::int64_t d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

std::optional<std::size_t> SparsePoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (o.vars_ != vars_) throw InputError("variable lists differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (o.vars_ != vars_) throw InputError("variable lists differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.vars_ != b.vars_) throw InputError("variable lists differ");
  SparsePoly r(a.vars_);
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::pow(unsigned k) const {
  SparsePoly result = constant(vars_, 1);
  SparsePoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Int SparsePoly::eval(std::span<const Int> point) const {
  if (point.size() != vars_.size()) throw InputError("evaluation point has wrong dimension");
  Int sum = 0, term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

Rat SparsePoly::eval(std::span<const Rat> point) const {
  if (point.size() != vars_.size()) throw InputError("evaluation point has wrong dimension");
  Rat sum = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Int num, den;
      mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= Rat(num, den);
    }
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

SparsePoly SparsePoly::substitute(std::size_t var, const Int& value) const {
  SparsePoly r(vars_);
  Exponents e2;
  for (const auto& [e, c] : terms_) {
    e2 = e;
    e2[var] = 0;
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e[var]));
    r.add_term(e2, c * pw);
  }
  return r;
}

std::vector<SparsePoly> SparsePoly::coefficients_in(std::size_t var) const {
  std::vector<SparsePoly> out(static_cast<std::size_t>(degree_in(var)) + 1, SparsePoly(vars_));
  Exponents e2;
  for (const auto& [e, c] : terms_) {
    e2 = e;
    e2[var] = 0;
    out[static_cast<std::size_t>(e[var])].add_term(e2, c);
  }
  return out;
}

SparsePoly SparsePoly::shifted(const Exponents& shift) const {
  SparsePoly r(vars_);
  Exponents e2(vars_.size());
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) e2[i] = e[i] + shift[i];
    r.add_term(e2, c);
  }
  return r;
}

SparsePoly SparsePoly::with_vars(const std::vector<std::string>& vars) const {
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) {
      if (degree_in(i) > 0) throw InputError("variable '" + vars_[i] + "' missing from target list");
      map[i] = vars.size();
    } else {
      map[i] = static_cast<std::size_t>(it - vars.begin());
    }
  }
  SparsePoly r(vars);
  Exponents e2(vars.size());
  for (const auto& [e, c] : terms_) {
    std::fill(e2.begin(), e2.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (map[i] < vars.size()) e2[map[i]] = e[i];
    r.add_term(e2, c);
  }
  return r;
}

Int SparsePoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Int SparsePoly::max_abs_coefficient() const {
  Int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, abs_int(c));
  return m;
}

std::vector<Exponents> SparsePoly::support() const {
  std::vector<Exponents> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Int mag = neg ? Int(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    const bool is_const = toricsolve::total_degree(e) == 0;
    if (mag != 1 || is_const) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (e[i] != 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  SparsePoly parse() {
    SparsePoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePoly expr() {
    skip_ws();
    SparsePoly acc(vars_);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    SparsePoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  SparsePoly term() {
    SparsePoly acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  SparsePoly power() {
    SparsePoly base = primary();
    if (eat('^')) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '-') fail("exponent negative");
      const Int e = integer();
      if (e > 1'000'000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  SparsePoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      SparsePoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (ch == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return SparsePoly::constant(vars_, integer());
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return SparsePoly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  Int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

// ---------------------------------------------------------------- systems

PolySystem::PolySystem(std::vector<std::string> vars, std::vector<SparsePoly> polys)
    : vars_(std::move(vars)), polys_(std::move(polys)) {
  for (const auto& p : polys_)
    if (p.vars() != vars_) throw InputError("polynomial variables do not match the system");
}

PolySystem PolySystem::without_zeros() const {
  std::vector<SparsePoly> kept;
  for (const auto& p : polys_)
    if (!p.is_zero()) kept.push_back(p);
  return PolySystem(vars_, std::move(kept));
}

PolySystem parse_system(const std::vector<std::string>& texts, const std::vector<std::string>& vars) {
  std::vector<SparsePoly> polys;
  polys.reserve(texts.size());
  for (const auto& t : texts) polys.push_back(parse_poly(t, vars));
  return PolySystem(vars, std::move(polys));
}

SystemStats system_stats(const PolySystem& F) {
  SystemStats s;
  s.n = F.nvars();
  s.m = F.size();
  for (const auto& f : F.polys()) {
    s.degrees.push_back(f.total_degree());
    s.D = std::max(s.D, f.total_degree());
    s.k += f.size();
    s.mu = std::max(s.mu, f.size());
    s.c_max = std::max(s.c_max, f.max_abs_coefficient());
  }
  return s;
}

bool is_prime(const Int& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

SparsePoly reduce_mod_p(const SparsePoly& f, const Int& p) {
  SparsePoly r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Int m;
    mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    r.add_term(e, m);
  }
  return r;
}

PolySystem reduce_mod_p(const PolySystem& F, const Int& p) {
  if (!is_prime(p)) throw InputError("modulus " + p.get_str() + " is not prime");
  std::vector<SparsePoly> out;
  for (const auto& f : F.polys()) out.push_back(reduce_mod_p(f, p));
  return PolySystem(F.vars(), std::move(out));
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

UniPoly UniPoly::from_ints(const std::vector<Int>& coeffs) {
  std::vector<Rat> c(coeffs.begin(), coeffs.end());
  return UniPoly(std::move(c));
}

UniPoly UniPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::linear_root(const Rat& r) { return UniPoly(std::vector<Rat>{-r, Rat(1)}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::vector<Int> UniPoly::primitive_ints() const {
  if (c_.empty()) return {};
  Int den = 1;
  for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Int> z;
  z.reserve(c_.size());
  for (const auto& v : c_) z.push_back(Int(v.get_num() * (den / v.get_den())));
  return zpoly::primitive(std::move(z));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * Rat(1 / c_.back());
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const Rat& s) {
  std::vector<Rat> c = a.c_;
  for (auto& v : c) v *= s;
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw InputError("division by the zero polynomial");
  if (degree() < d.degree()) return {UniPoly{}, *this};
  std::vector<Rat> r = c_;
  std::vector<Rat> q(static_cast<std::size_t>(degree() - d.degree()) + 1);
  const Rat inv = 1 / d.leading();
  for (long i = degree(); i >= d.degree(); --i) {
    const Rat f = r[static_cast<std::size_t>(i)] * inv;
    if (f == 0) continue;
    const auto shift = static_cast<std::size_t>(i - d.degree());
    q[shift] = f;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[shift + j] -= f * d.c_[j];
  }
  r.resize(static_cast<std::size_t>(d.degree()));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + UniPoly::constant(*it);
  return acc;
}

UniPoly UniPoly::pow(unsigned k) const {
  UniPoly r = UniPoly::constant(1), b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return r;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rat& v = c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    const bool neg = v < 0;
    const Rat mag = neg ? Rat(-v) : v;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------- zpoly

namespace zpoly {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Int content(const ZPoly& f) {
  Int g = 0;
  for (const auto& v : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(ZPoly f) {
  trim(f);
  if (f.empty()) return f;
  Int g = content(f);
  if (f.back() < 0) g = -g;
  if (g != 1)
    for (auto& v : f) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return f;
}

ZPoly derivative(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
  return d;
}

ZPoly pseudo_remainder(const ZPoly& f, const ZPoly& g) {
  if (g.empty()) throw InputError("pseudo-division by zero");
  ZPoly r = f;
  trim(r);
  const std::size_t dg = g.size() - 1;
  if (r.size() < g.size()) return r;
  const std::size_t steps = r.size() - g.size() + 1;
  const Int& lc = g.back();
  std::size_t done = 0;
  while (r.size() >= g.size()) {
    const Int lead = r.back();
    const std::size_t shift = r.size() - 1 - dg;
    for (auto& v : r) v *= lc;
    for (std::size_t j = 0; j < dg; ++j) r[shift + j] -= lead * g[j];
    r.pop_back();
    ++done;
    trim(r);
  }
  // Normalize to exactly lc^(steps) * f mod g.
  if (done < steps) {
    Int extra;
    mpz_pow_ui(extra.get_mpz_t(), lc.get_mpz_t(), steps - done);
    for (auto& v : r) v *= extra;
  }
  return r;
}

ZPoly exact_quotient(const ZPoly& f, const ZPoly& g) {
  ZPoly r = f;
  trim(r);
  if (g.empty()) throw InputError("division by zero polynomial");
  if (r.size() < g.size()) {
    if (r.empty()) return {};
    throw InputError("inexact polynomial division");
  }
  ZPoly q(r.size() - g.size() + 1);
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = r.size(); i-- > dg;) {
    if (r[i] == 0) continue;
    Int t;
    if (!mpz_divisible_p(r[i].get_mpz_t(), g.back().get_mpz_t())) throw InputError("inexact polynomial division");
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), g.back().get_mpz_t());
    q[i - dg] = t;
    for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] -= t * g[j];
  }
  trim(r);
  if (!r.empty()) throw InputError("inexact polynomial division");
  trim(q);
  return q;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}

std::vector<u64> reduce(const ZPoly& f, u64 p) {
  std::vector<u64> r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Degree of gcd(f, g) over Z/p.
long gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  while (!b.empty()) {
    const u64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const u64 f = mulmod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod(f, b[j], p)) % p;
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

}  // namespace

ZPoly gcd(const ZPoly& f0, const ZPoly& g0) {
  ZPoly f = f0, g = g0;
  trim(f);
  trim(g);
  if (f.empty()) return primitive(g);
  if (g.empty()) return primitive(f);
  // A coprimality certificate modulo one prime avoids the PRS in the common case.
  constexpr u64 kPrime = 2305843009213693951ull;  // 2^61 - 1
  if (mpz_fdiv_ui(f.back().get_mpz_t(), kPrime) != 0 && mpz_fdiv_ui(g.back().get_mpz_t(), kPrime) != 0) {
    if (gcd_degree_mod(reduce(f, kPrime), reduce(g, kPrime), kPrime) == 0) return {Int(1)};
  }
  f = primitive(f);
  g = primitive(g);
  if (f.size() < g.size()) std::swap(f, g);
  while (!g.empty()) {
    ZPoly r = pseudo_remainder(f, g);
    f = std::move(g);
    g = primitive(std::move(r));
    if (!g.empty() && g.size() == 1) return {Int(1)};
  }
  return primitive(f);
}

int sign_at(const ZPoly& f, const Rat& x) {
  // sign of sum c_i p^i q^(d-i), q > 0
  if (f.empty()) return 0;
  const Int& p = x.get_num();
  const Int& q = x.get_den();
  Int acc = 0, qpow = 1;
  // Horner in p with q scaling: acc = (((c_d) p + c_{d-1} q) p + c_{d-2} q^2) ...
  acc = f.back();
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    qpow *= q;
    acc = acc * p + f[i] * qpow;
  }
  return sgn(acc);
}

Int eval(const ZPoly& f, const Int& x) {
  Int acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace zpoly

UniPoly uni_gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw InputError("gcd of two zero polynomials");
  return UniPoly::from_ints(zpoly::gcd(f.primitive_ints(), g.primitive_ints()));
}

UniPoly square_free_part(const UniPoly& f) {
  if (f.is_zero()) throw InputError("square-free part of the zero polynomial");
  const auto z = f.primitive_ints();
  const auto g = zpoly::gcd(z, zpoly::derivative(z));
  return UniPoly::from_ints(zpoly::primitive(zpoly::exact_quotient(z, g)));
}

namespace {

std::vector<zpoly::ZPoly> sturm_sequence(const zpoly::ZPoly& f) {
  std::vector<zpoly::ZPoly> seq;
  seq.push_back(zpoly::primitive(f));
  auto d = zpoly::derivative(seq.back());
  if (d.empty()) return seq;
  seq.push_back(zpoly::primitive(std::move(d)));
  for (;;) {
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    auto r = zpoly::pseudo_remainder(a, b);
    if (r.empty()) break;
    // prem = lc(b)^k * rem with k = deg a - deg b + 1; the Sturm successor is -rem.
    const std::size_t k = a.size() - b.size() + 1;
    const bool lc_power_negative = b.back() < 0 && (k % 2 == 1);
    const Int c = zpoly::content(r);
    for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    if (!lc_power_negative)
      for (auto& v : r) v = -v;
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_at_endpoint(const zpoly::ZPoly& f, const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::PosInf:
      return sgn(f.back());
    case Endpoint::Kind::NegInf:
      return ((f.size() - 1) % 2 == 0) ? sgn(f.back()) : -sgn(f.back());
    case Endpoint::Kind::Finite:
      break;
  }
  return zpoly::sign_at(f, e.value);
}

std::size_t variations(const std::vector<zpoly::ZPoly>& seq, const Endpoint& e) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& s : seq) {
    const int sg = sign_at_endpoint(s, e);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

bool endpoint_le(const Endpoint& a, const Endpoint& b) {
  using K = Endpoint::Kind;
  if (a.kind == K::NegInf || b.kind == K::PosInf) return true;
  if (a.kind == K::PosInf || b.kind == K::NegInf) return false;
  return a.value <= b.value;
}

}  // namespace

std::size_t sturm_count(const UniPoly& f, const Endpoint& lo, const Endpoint& hi) {
  if (!endpoint_le(lo, hi)) throw InputError("degenerate interval: lo > hi");
  if (f.is_zero()) throw InputError("Sturm count of the zero polynomial");
  if (f.degree() == 0) return 0;
  // Work with the square-free part so that roots at finite endpoints are handled exactly.
  const auto sq = square_free_part(f).primitive_ints();
  const auto seq = sturm_sequence(sq);
  const auto vlo = variations(seq, lo);
  const auto vhi = variations(seq, hi);
  std::size_t count = vlo >= vhi ? vlo - vhi : 0;
  // V(a) - V(b) counts roots in (a, b] for square-free f; a root at lo is excluded automatically.
  return count;
}

std::size_t sturm_count(const UniPoly& f) {
  return sturm_count(f, Endpoint::neg_inf(), Endpoint::pos_inf());
}

std::vector<Rat> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw InputError("rational roots of the zero polynomial");
  std::vector<Rat> roots;
  auto z = square_free_part(f).primitive_ints();
  if (z.size() <= 1) return roots;
  // Strip the root at zero.
  if (z[0] == 0) {
    roots.emplace_back(0);
    z.erase(z.begin());
  }
  if (z.size() <= 1) return roots;
  // Rational roots r of z correspond to integer roots lc * r of the monic g(y) = lc^(d-1) z(y / lc).
  const std::size_t d = z.size() - 1;
  const Int lc = z.back();
  zpoly::ZPoly g(d + 1);
  Int pw = 1;
  for (std::size_t i = d + 1; i-- > 0;) {
    // coefficient of y^i: z_i * lc^(d-1-i) for i < d, 1 for i = d
    if (i == d) {
      g[i] = 1;
      continue;
    }
    g[i] = z[i] * pw;
    pw *= lc;
  }
  // Integer roots of monic g divide g(0) (nonzero here) and lie in [-B, B].
  Int bound = 0;
  for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, abs_int(g[i]));
  bound += 1;
  const auto seq = sturm_sequence(g);
  auto count = [&](const Int& a, const Int& b) {
    const auto va = variations(seq, Endpoint::at(Rat(a)));
    const auto vb = variations(seq, Endpoint::at(Rat(b)));
    return va >= vb ? va - vb : 0;
  };
  // Bisect integer intervals (a, b] holding at least one root.
  std::vector<std::pair<Int, Int>> stack{{-bound - 1, bound}};
  std::vector<Int> int_roots;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (count(a, b) == 0) continue;
    if (b - a == 1) {
      if (zpoly::eval(g, b) == 0) int_roots.push_back(b);
      continue;
    }
    Int mid;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), Int(a + b).get_mpz_t(), 1);
    stack.emplace_back(a, mid);
    stack.emplace_back(mid, b);
  }
  const UniPoly original = UniPoly::from_ints(z);
  for (const auto& y : int_roots) {
    Rat r(y, lc);
    r.canonicalize();
    if (original.eval(r) == 0) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace toricsolve
