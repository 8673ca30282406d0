#include "verlinde/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace verlinde {

namespace {

// ---- integer polynomial helpers (constant term first) ----

void int_poly_trim(std::vector<Int>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division num / den for monic den; remainder must vanish.
std::vector<Int> int_poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  int_poly_trim(num);
  std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) throw std::logic_error("cyclotomic: bad exact division");
  std::vector<Int> quot(num.size() - dd, Int(0));
  for (std::size_t k = num.size(); k-- > dd;) {
    Int c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("cyclotomic: nonzero remainder in exact division");
  return quot;
}

// ---- rational polynomial helpers ----

void rat_poly_trim(std::vector<Rat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo monic integer polynomial phi.
std::vector<Rat> rat_poly_rem_monic(std::vector<Rat> p, const std::vector<Int>& phi) {
  std::size_t d = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    Rat c = p[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < d; ++j) p[k - d + j] -= c * Rat(phi[j]);
    p[k] = 0;
  }
  p.resize(d, Rat(0));
  return p;
}

// General remainder with a rational (not necessarily monic) divisor.
std::vector<Rat> rat_poly_rem(std::vector<Rat> p, const std::vector<Rat>& q) {
  rat_poly_trim(p);
  const Rat& lead = q.back();
  while (p.size() >= q.size() && !p.empty()) {
    Rat c = p.back() / lead;
    std::size_t off = p.size() - q.size();
    for (std::size_t j = 0; j < q.size(); ++j) p[off + j] -= c * q[j];
    rat_poly_trim(p);
  }
  return p;
}

std::vector<Rat> rat_poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::vector<Rat> rat_poly_sub(std::vector<Rat> a, const std::vector<Rat>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rat_poly_trim(a);
  return a;
}

// Quotient of the euclidean division a / b over Q[x].
std::vector<Rat> rat_poly_quot(std::vector<Rat> a, const std::vector<Rat>& b) {
  rat_poly_trim(a);
  std::size_t d = b.size() - 1;
  const Rat& lead = b.back();
  if (a.size() <= d) return {};
  std::vector<Rat> quot(a.size() - d, Rat(0));
  for (std::size_t k = a.size(); k-- > d;) {
    Rat c = a[k] / lead;
    if (c == 0) continue;
    quot[k - d] = c;
    for (std::size_t j = 0; j <= d; ++j) a[k - d + j] -= c * b[j];
  }
  return quot;
}

std::mutex g_phi_mutex;
std::map<long, std::vector<Int>> g_phi_cache;

std::vector<Int> compute_cyclotomic(long m);

const std::vector<Int>& cyclotomic_locked(long m) {
  auto it = g_phi_cache.find(m);
  if (it != g_phi_cache.end()) return it->second;
  auto phi = compute_cyclotomic(m);
  return g_phi_cache.emplace(m, std::move(phi)).first->second;
}

std::vector<Int> compute_cyclotomic(long m) {
  if (m == 1) return {Int(-1), Int(1)};  // x - 1
  std::vector<Int> num(static_cast<std::size_t>(m) + 1, Int(0));
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;  // x^m - 1
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = int_poly_div_exact(std::move(num), cyclotomic_locked(d));
  }
  return num;
}

}  // namespace

long euler_phi(long m) {
  if (m <= 0) throw std::invalid_argument("euler_phi: order must be positive");
  long result = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Int>& cyclotomic_polynomial(long m) {
  if (m <= 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return cyclotomic_locked(m);
}

Cyclo Cyclo::from_poly(std::vector<Rat> poly, long m) {
  const auto& phi = cyclotomic_polynomial(m);
  poly.resize(std::max(poly.size(), phi.size() - 1), Rat(0));
  Cyclo x;
  x.order_ = m;
  x.c_ = rat_poly_rem_monic(std::move(poly), phi);
  return x;
}

Cyclo Cyclo::root_of_unity(const Rat& turns) {
  Rat q = mod1(turns);
  if (!q.get_den().fits_slong_p()) throw std::overflow_error("root_of_unity: order overflow");
  long den = static_cast<long>(q.get_den().get_si());
  long num = static_cast<long>(q.get_num().get_si());
  std::vector<Rat> poly(static_cast<std::size_t>(num) + 1, Rat(0));
  poly[static_cast<std::size_t>(num)] = 1;
  return from_poly(std::move(poly), den);
}

Cyclo Cyclo::root_of_unity_sum(const std::vector<std::pair<Rat, long>>& terms) {
  if (terms.empty()) return Cyclo::zero();
  Int big_m(1);
  std::vector<Rat> reduced;
  reduced.reserve(terms.size());
  for (const auto& [turns, coeff] : terms) {
    (void)coeff;
    reduced.push_back(mod1(turns));
    big_m = lcm(big_m, reduced.back().get_den());
  }
  if (!big_m.fits_slong_p()) throw std::overflow_error("root_of_unity_sum: order overflow");
  long m = big_m.get_si();
  std::vector<Int> counts(static_cast<std::size_t>(m), Int(0));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Int k = reduced[i].get_num() * (big_m / reduced[i].get_den());
    counts[static_cast<std::size_t>(k.get_si())] += terms[i].second;
  }
  std::vector<Rat> poly(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) poly[i] = Rat(counts[i]);
  return from_poly(std::move(poly), m);
}

bool Cyclo::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclo::rational_value() const {
  if (!is_rational()) throw std::logic_error("Cyclo: not a rational value");
  return c_[0];
}

bool Cyclo::is_nonnegative_integer() const {
  return is_rational() && rat_is_integer(c_[0]) && c_[0] >= 0;
}

Cyclo Cyclo::lifted(long target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) throw std::logic_error("Cyclo::lifted: target not a multiple");
  long step = target / order_;
  std::vector<Rat> poly(static_cast<std::size_t>((c_.size() - 1) * step + 1), Rat(0));
  for (std::size_t j = 0; j < c_.size(); ++j) poly[j * static_cast<std::size_t>(step)] = c_[j];
  return from_poly(std::move(poly), target);
}

Cyclo Cyclo::galois(long t) const {
  long tm = ((t % order_) + order_) % order_;
  if (std::gcd(tm, order_) != 1)
    throw std::invalid_argument("Cyclo::galois: exponent not coprime to the order");
  std::vector<Rat> poly(static_cast<std::size_t>(order_), Rat(0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    long k = static_cast<long>((static_cast<unsigned long>(j) * static_cast<unsigned long>(tm)) %
                               static_cast<unsigned long>(order_));
    poly[static_cast<std::size_t>(k)] += c_[j];
  }
  return from_poly(std::move(poly), order_);
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclo: division by zero");
  // Extended Euclid in Q[x]: s*f = g mod Phi_M with g a nonzero constant,
  // since Phi_M is irreducible over Q.
  const auto& phi_int = cyclotomic_polynomial(order_);
  std::vector<Rat> r0(phi_int.size());
  for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
  std::vector<Rat> r1(c_);
  rat_poly_trim(r1);
  std::vector<Rat> s0{};           // coefficient of f in r0
  std::vector<Rat> s1{Rat(1)};     // coefficient of f in r1
  while (r1.size() > 1) {
    auto q = rat_poly_quot(r0, r1);
    auto r2 = rat_poly_rem(r0, r1);
    auto s2 = rat_poly_sub(s0, rat_poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::logic_error("Cyclo::inverse: gcd degenerated");
  Rat g = r1[0];
  for (auto& coef : s1) coef /= g;
  return from_poly(std::move(s1), order_);
}

std::complex<double> Cyclo::to_complex() const {
  long double re = 0, im = 0;
  const long double tau = 6.283185307179586476925286766559L;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    long double w = static_cast<long double>(c_[j].get_d());
    long double ang = tau * static_cast<long double>(j) / static_cast<long double>(order_);
    re += w * std::cos(ang);
    im += w * std::sin(ang);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& coef : r.c_) coef = -coef;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
  long m = std::lcm(order_, rhs.order_);
  if (m != order_) *this = lifted(m);
  Cyclo other = (rhs.order_ == m) ? rhs : rhs.lifted(m);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) { return *this += -rhs; }

Cyclo& Cyclo::operator*=(const Cyclo& rhs) {
  long m = std::lcm(order_, rhs.order_);
  Cyclo a = (order_ == m) ? *this : lifted(m);
  Cyclo b = (rhs.order_ == m) ? rhs : rhs.lifted(m);
  *this = from_poly(rat_poly_mul(a.c_, b.c_), m);
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
  long m = std::lcm(a.order_, b.order_);
  Cyclo x = (a.order_ == m) ? a : a.lifted(m);
  Cyclo y = (b.order_ == m) ? b : b.lifted(m);
  return x.c_ == y.c_;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  os << "cyclo(M=" << order_ << ";";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : " ") << c_[i].get_str();
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) { return os << x.str(); }

}  // namespace verlinde
