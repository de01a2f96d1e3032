#include "quiverforge/cluster_rank2.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <functional>
#include <optional>

#include "quiverforge/error.hpp"

namespace quiverforge {

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const mpz_class& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t k) {
  Monomial m(nvars, 0);
  m.at(k) = 1;
  return monomial(m);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const mpz_class& c) {
  MultiPoly p(m.size());
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                                               terms_.begin()->first.end(),
                                                               [](unsigned e) { return e == 0; }));
}

void MultiPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (m.size() != nvars_) throw InternalError("monomial arity mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const std::pair<const Monomial, mpz_class>& MultiPoly::leading() const {
  if (terms_.empty()) throw InternalError("leading term of zero polynomial");
  return *terms_.rbegin();
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw InternalError("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw InternalError("polynomial arity mismatch");
  MultiPoly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(ma.size());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly operator*(MultiPoly a, const mpz_class& c) {
  if (c == 0) return MultiPoly(a.nvars_);
  for (auto& [m, v] : a.terms_) v *= c;
  return a;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(nvars_, 1);
  for (unsigned j = 0; j < k; ++j) r = r * *this;
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool unit = std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
    mpz_class a = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? "-" : "+";
    }
    if (a != 1 || unit) s += a.get_str();
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      s += names.at(k);
      if (m[k] > 1) s += "^" + std::to_string(m[k]);
    }
  }
  return s;
}

namespace {

// View of p as a polynomial in `var` with coefficients free of `var`.
std::map<unsigned, MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
  std::map<unsigned, MultiPoly> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest[var] = 0;
    auto [it, fresh] = out.try_emplace(m[var], p.nvars());
    it->second.add_term(rest, c);
  }
  return out;
}

MultiPoly shift(const MultiPoly& p, std::size_t var, unsigned k) {
  MultiPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    mm[var] += k;
    r.add_term(mm, c);
  }
  return r;
}

std::optional<std::size_t> top_variable(const MultiPoly& a, const MultiPoly& b) {
  std::optional<std::size_t> v;
  for (const MultiPoly* p : {&a, &b})
    for (const auto& [m, c] : p->terms())
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] > 0 && (!v || k > *v)) v = k;
  return v;
}

MultiPoly normalize_sign(MultiPoly p) {
  if (!p.is_zero() && p.leading().second < 0) return -p;
  return p;
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly g(p.nvars());
  for (const auto& [d, c] : coefficients_in(p, var)) g = gcd(g, c);
  return g;
}

MultiPoly pseudo_remainder(MultiPoly f, const MultiPoly& g, std::size_t var) {
  const unsigned dg = g.degree_in(var);
  const MultiPoly lc = coefficients_in(g, var).rbegin()->second;
  while (!f.is_zero() && f.degree_in(var) >= dg) {
    const unsigned df = f.degree_in(var);
    const MultiPoly lf = coefficients_in(f, var).rbegin()->second;
    f = f * lc - shift(lf * g, var, df - dg);
  }
  return f;
}

}  // namespace

namespace {

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly q(a.nvars()), r = a;
  const auto& [lb, cb] = b.leading();
  while (!r.is_zero()) {
    const auto& [lr, cr] = r.leading();
    Monomial m(lr.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (lr[k] < lb[k]) return std::nullopt;
      m[k] = lr[k] - lb[k];
    }
    if (cr % cb != 0) return std::nullopt;
    MultiPoly t = MultiPoly::monomial(m, cr / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

// p = x^mono * rest with rest free of monomial factors.
std::pair<Monomial, MultiPoly> split_monomial(const MultiPoly& p) {
  Monomial low = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms())
    for (std::size_t k = 0; k < m.size(); ++k) low[k] = std::min(low[k], m[k]);
  MultiPoly rest(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial r = m;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= low[k];
    rest.add_term(r, c);
  }
  return {low, rest};
}

}  // namespace

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw InternalError("division by zero polynomial");
  auto q = try_divide(a, b);
  if (!q) throw InternalError("exact_divide: not divisible");
  return *q;
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw InternalError("polynomial arity mismatch");
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const auto var = top_variable(a, b);
  if (!var) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.leading().second.get_mpz_t(), b.leading().second.get_mpz_t());
    return MultiPoly::constant(a.nvars(), g);
  }
  const MultiPoly ca = content_in(a, *var), cb = content_in(b, *var);
  const MultiPoly c = gcd(ca, cb);
  MultiPoly f = exact_divide(a, ca), g = exact_divide(b, cb);
  if (f.degree_in(*var) < g.degree_in(*var)) std::swap(f, g);
  while (true) {
    if (g.degree_in(*var) == 0) {
      g = MultiPoly::constant(a.nvars(), 1);
      break;
    }
    MultiPoly r = pseudo_remainder(f, g, *var);
    if (r.is_zero()) break;
    f = std::move(g);
    g = exact_divide(r, content_in(r, *var));
  }
  g = exact_divide(g, content_in(g, *var));
  return normalize_sign(c * g);
}

RationalFunction::RationalFunction(std::size_t nvars) : num_(nvars), den_(MultiPoly::constant(nvars, 1)) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("division by zero");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.nvars(), 1);
    return;
  }
  if (den_.terms().size() > 1) {
    auto [mono, rest] = split_monomial(den_);
    if (auto q = try_divide(num_, rest)) {
      num_ = std::move(*q);
      den_ = MultiPoly::monomial(mono);
    }
  }
  if (den_.terms().size() == 1) {
    // gcd with a single term: common monomial and integer content.
    const auto& [dm, dc] = *den_.terms().begin();
    Monomial g = dm;
    mpz_class gc = dc;
    for (const auto& [m, c] : num_.terms()) {
      for (std::size_t k = 0; k < g.size(); ++k) g[k] = std::min(g[k], m[k]);
      mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), c.get_mpz_t());
    }
    const MultiPoly gp = MultiPoly::monomial(g, gc);
    num_ = exact_divide(num_, gp);
    den_ = exact_divide(den_, gp);
  } else {
    const MultiPoly g = gcd(num_, den_);
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  if (den_.leading().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::variable(std::size_t nvars, std::size_t k) {
  return RationalFunction(MultiPoly::variable(nvars, k), MultiPoly::constant(nvars, 1));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw Error("division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(unsigned k) const { return RationalFunction(num_.pow(k), den_.pow(k)); }

bool RationalFunction::operator<(const RationalFunction& o) const {
  auto key = [](const MultiPoly& p) {
    std::vector<std::pair<Monomial, mpz_class>> t(p.terms().rbegin(), p.terms().rend());
    return t;
  };
  const auto kd = key(den_), ko = key(o.den_);
  const auto lead = [](const auto& t) { return t.empty() ? Monomial{} : t.front().first; };
  if (GradedLex{}(lead(kd), lead(ko))) return true;
  if (GradedLex{}(lead(ko), lead(kd))) return false;
  if (kd != ko) return kd < ko;
  return key(num_) < key(o.num_);
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  std::string n = num_.to_string(names);
  if (den_.is_constant() && den_.leading().second == 1) return n;
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string(names);
  if (den_.terms().size() > 1 || (den_.terms().size() == 1 && d.size() > 1 && !den_.is_constant())) {
    const auto& m = den_.leading().first;
    const unsigned nz = std::count_if(m.begin(), m.end(), [](unsigned e) { return e > 0; });
    const bool simple = den_.terms().size() == 1 && nz == 1 && den_.leading().second == 1;
    if (!simple) d = "(" + d + ")";
  }
  return n + "/" + d;
}

namespace {

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names, std::size_t from) {
  std::string s;
  for (std::size_t k = from; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    s += names.at(k);
    if (m[k] > 1) s += "^" + std::to_string(m[k]);
  }
  return s;
}

// (v+1)^k with k >= 2 written compactly, or empty.
std::string binomial_power(const MultiPoly& c, const std::vector<std::string>& names) {
  for (std::size_t v = 0; v < c.nvars(); ++v) {
    const unsigned k = c.degree_in(v);
    if (k < 2) continue;
    MultiPoly base = MultiPoly::variable(c.nvars(), v) + MultiPoly::constant(c.nvars(), 1);
    if (base.pow(k) == c) return "(" + names.at(v) + "+1)^" + std::to_string(k);
  }
  return {};
}

std::string grouped_numerator(const MultiPoly& p, const std::vector<std::string>& names) {
  std::map<unsigned, MultiPoly, std::greater<>> groups;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest[0] = 0;
    groups.try_emplace(m[0], p.nvars()).first->second.add_term(rest, c);
  }
  std::string s;
  for (const auto& [e, c] : groups) {
    Monomial xe(p.nvars(), 0);
    xe[0] = e;
    const std::string xs = monomial_string(xe, names, 0);
    const std::string bin = binomial_power(c, names);
    if (!bin.empty()) {
      if (!s.empty()) s += "+";
      s += xs + bin;
      continue;
    }
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
      Monomial m = it->first;
      m[0] = e;
      const std::string t = MultiPoly::monomial(m, it->second).to_string(names);
      if (!s.empty() && t.front() != '-') s += "+";
      s += t;
    }
  }
  return s;
}

}  // namespace

std::string RationalFunction::display(const std::vector<std::string>& names) const {
  if (num_.is_zero() || num_.nvars() == 0) return to_string(names);
  const std::string canon = to_string(names);
  std::string n = grouped_numerator(num_, names);
  const std::string plain = num_.to_string(names);
  if (num_.terms().size() > 1) {
    if (canon.size() > plain.size() && canon.front() == '(') return "(" + n + ")" + canon.substr(plain.size() + 2);
    return n;
  }
  return canon;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error("cannot parse '" + std::string(s_) + "' at position " + std::to_string(pos_) + ": " + what);
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }
  RationalFunction expr() {
    RationalFunction r = term();
    while (true) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        const char op = s_[pos_++];
        RationalFunction t = term();
        r = op == '+' ? r + t : r - t;
      } else {
        return r;
      }
    }
  }
  RationalFunction term() {
    RationalFunction r = unary();
    while (true) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
        const char op = s_[pos_++];
        RationalFunction t = unary();
        r = op == '*' ? r * t : r / t;
      } else if (starts_factor()) {
        r = r * power();
      } else {
        return r;
      }
    }
  }
  RationalFunction unary() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return -unary();
    }
    if (pos_ < s_.size() && s_[pos_] == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }
  RationalFunction power() {
    RationalFunction base = atom();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }
  RationalFunction atom() {
    skip();
    const std::size_t n = names_.size();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("')' expected");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(MultiPoly::constant(n, mpz_class(std::string(s_.substr(start, pos_ - start)))),
                               MultiPoly::constant(n, 1));
    }
    std::size_t best = n, best_len = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (s_.substr(pos_, names_[k].size()) == names_[k] && names_[k].size() > best_len) {
        best = k;
        best_len = names_[k].size();
      }
    if (best == n) fail("unknown variable");
    pos_ += best_len;
    return RationalFunction::variable(n, best);
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

bool laurent_check(const RationalFunction& v) {
  const MultiPoly& d = v.denominator();
  return d.terms().size() == 1 && d.leading().second == 1;
}

bool positive_laurent(const RationalFunction& v) {
  if (!laurent_check(v)) return false;
  for (const auto& [m, c] : v.numerator().terms())
    if (c < 0) return false;
  return true;
}

std::vector<long> skew_symmetrizer(const std::vector<std::vector<long>>& b) {
  const std::size_t n = b.size();
  for (const auto& row : b)
    if (row.size() != n) throw Error("exchange matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i][i] != 0) throw Error("exchange matrix must have zero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      const bool zi = b[i][j] == 0, zj = b[j][i] == 0;
      if (zi != zj || (!zi && (b[i][j] > 0) == (b[j][i] > 0)))
        throw Error("exchange matrix is not skew-symmetrizable");
    }
  }
  std::vector<mpq_class> d(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (d[s] != 0) continue;
    d[s] = 1;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (b[i][j] == 0) continue;
        mpq_class dj = -d[i] * b[i][j] / b[j][i];
        dj.canonicalize();
        if (d[j] == 0) {
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          throw Error("exchange matrix is not skew-symmetrizable");
        }
      }
    }
  }
  mpz_class l = 1;
  for (const auto& x : d) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<long> out;
  for (const auto& x : d) {
    mpq_class v = x * l;
    out.push_back(mpz_class(v.get_num()).get_si());
  }
  return out;
}

ClusterSeed initial_seed(const std::vector<std::vector<long>>& b, const std::vector<std::string>& names) {
  skew_symmetrizer(b);
  if (names.size() != b.size()) throw Error("one variable name per row of the exchange matrix");
  ClusterSeed s{b, {}};
  for (std::size_t k = 0; k < names.size(); ++k) s.vars.push_back(RationalFunction::variable(names.size(), k));
  return s;
}

ClusterSeed mutate(const ClusterSeed& s, std::size_t k, ExchangeConvention conv) {
  const std::size_t n = s.b.size();
  if (k >= n) throw Error("mutation index out of range");
  const std::size_t nv = s.vars.front().nvars();
  RationalFunction plus(MultiPoly::constant(nv, 1), MultiPoly::constant(nv, 1));
  RationalFunction minus = plus;
  for (std::size_t i = 0; i < n; ++i) {
    const long e = conv == ExchangeConvention::Row ? s.b[k][i] : s.b[i][k];
    if (e > 0) plus = plus * s.vars[i].pow(static_cast<unsigned>(e));
    if (e < 0) minus = minus * s.vars[i].pow(static_cast<unsigned>(-e));
  }
  ClusterSeed r = s;
  r.vars[k] = (plus + minus) / s.vars[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r.b[i][j] = -s.b[i][j];
      } else {
        const long bik = s.b[i][k], bkj = s.b[k][j];
        const long sgn = (bik > 0) - (bik < 0);
        r.b[i][j] = s.b[i][j] + sgn * std::max(0L, bik * bkj);
      }
    }
  return r;
}

ClusterClosure enumerate_variables(const ClusterSeed& s, ExchangeConvention conv, std::size_t cap) {
  const std::size_t nv = s.vars.size();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < nv; ++k) names.push_back("v" + std::to_string(k) + "_");
  auto key_of = [&](const ClusterSeed& seed) {
    std::vector<std::string> keys;
    for (const auto& v : seed.vars) keys.push_back(v.to_string(names));
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  std::map<std::vector<std::string>, std::size_t> index;
  std::vector<ClusterSeed> seeds{s};
  index.emplace(key_of(s), 0);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t at = 0; at < seeds.size(); ++at) {
    for (std::size_t k = 0; k < nv; ++k) {
      ClusterSeed m = mutate(seeds[at], k, conv);
      auto key = key_of(m);
      auto it = index.find(key);
      if (it == index.end()) {
        if (seeds.size() >= cap) throw Error("cluster closure exceeds " + std::to_string(cap) + " seeds");
        it = index.emplace(std::move(key), seeds.size()).first;
        seeds.push_back(std::move(m));
      }
      if (it->second != at) edges.emplace(std::min(at, it->second), std::max(at, it->second));
    }
  }
  ClusterClosure out;
  std::vector<RationalFunction> all;
  for (const auto& seed : seeds)
    for (const auto& v : seed.vars)
      if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  std::sort(all.begin(), all.end());
  out.variables = all;
  for (const auto& seed : seeds) {
    std::vector<std::size_t> c;
    for (const auto& v : seed.vars)
      c.push_back(std::find(all.begin(), all.end(), v) - all.begin());
    std::sort(c.begin(), c.end());
    out.clusters.push_back(std::move(c));
  }
  out.exchange.vertices = seeds.size();
  out.exchange.edges.assign(edges.begin(), edges.end());
  return out;
}

std::vector<RationalFunction> mutation_order_variables(const ClusterSeed& s, ExchangeConvention conv,
                                                       std::size_t cap) {
  if (s.vars.size() != 2) throw Error("mutation order is defined for rank 2 seeds");
  auto as_set = [](const ClusterSeed& x) {
    std::vector<RationalFunction> v = x.vars;
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<RationalFunction> out = s.vars;
  const auto start = as_set(s);
  ClusterSeed cur = s;
  for (std::size_t step = 0;; ++step) {
    if (step >= cap) throw Error("mutation sequence exceeds " + std::to_string(cap) + " steps");
    cur = mutate(cur, step % 2, conv);
    if (as_set(cur) == start) break;
    const RationalFunction& fresh = cur.vars[step % 2];
    if (std::find(out.begin(), out.end(), fresh) == out.end()) out.push_back(fresh);
  }
  return out;
}

Graph exchange_pattern(const ClusterSeed& s, ExchangeConvention conv) { return enumerate_variables(s, conv).exchange; }

std::vector<std::vector<long>> g2_exchange_matrix() { return {{0, -1}, {3, 0}}; }
std::vector<std::vector<long>> a2_exchange_matrix() { return {{0, 1}, {-1, 0}}; }

}  // namespace quiverforge
