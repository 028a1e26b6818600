#include "exact/cyclotomic.h"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace discmf {

namespace {

// Exact division of polynomials with integer coefficients (ascending order),
// assuming the divisor is monic and the division is known to be exact.
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) throw std::logic_error("cyclotomic: bad division");
  std::vector<BigInt> quot(num.size() - den.size() + 1);
  for (size_t k = quot.size(); k-- > 0;) {
    BigInt c = num[k + dd];
    quot[k] = c;
    if (c == 0) continue;
    for (size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  for (const BigInt& c : num)
    if (c != 0) throw std::logic_error("cyclotomic: division not exact");
  return quot;
}

std::vector<BigInt> cyclotomic_poly(unsigned n) {
  // x^n - 1 divided by the cyclotomic polynomials of all proper divisors.
  std::vector<BigInt> acc(n + 1);
  acc[0] = -1;
  acc[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    acc = divide_exact(std::move(acc), cyclotomic_poly(d));
  }
  return acc;
}

std::mutex g_registry_mutex;
std::map<unsigned, std::unique_ptr<CycField>>& registry() {
  static std::map<unsigned, std::unique_ptr<CycField>> r;
  return r;
}

std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace

const CycField& CycField::get(unsigned order) {
  if (order == 0) throw std::invalid_argument("CycField: order must be positive");
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto& reg = registry();
  auto it = reg.find(order);
  if (it == reg.end()) it = reg.emplace(order, std::unique_ptr<CycField>(new CycField(order))).first;
  return *it->second;
}

CycField::CycField(unsigned order) : order_(order) {
  phi_ = cyclotomic_poly(order);
  degree_ = static_cast<unsigned>(phi_.size() - 1);

  // x^degree mod Phi = -(low part), since Phi is monic.
  std::vector<Rational> top(degree_);
  for (unsigned i = 0; i < degree_; ++i) top[i] = Rational(-phi_[i]);

  // Reduction rows for exponents degree .. 2*degree-2.
  red_.push_back(top);
  for (unsigned i = 1; i + 1 < degree_; ++i) {
    const std::vector<Rational>& prev = red_.back();
    std::vector<Rational> next(degree_);
    // multiply by x, fold the overflow back in
    Rational carry = prev[degree_ - 1];
    for (unsigned k = degree_ - 1; k >= 1; --k) next[k] = prev[k - 1];
    next[0] = 0;
    if (carry != 0)
      for (unsigned k = 0; k < degree_; ++k) next[k] += carry * top[k];
    red_.push_back(std::move(next));
  }

  // zeta^k for k = 0..order-1.
  pow_.resize(order_);
  pow_[0].assign(degree_, Rational(0));
  pow_[0][0] = 1;
  for (unsigned k = 1; k < order_; ++k) {
    const std::vector<Rational>& prev = pow_[k - 1];
    std::vector<Rational> next(degree_);
    Rational carry = prev[degree_ - 1];
    for (unsigned t = degree_ - 1; t >= 1; --t) next[t] = prev[t - 1];
    next[0] = 0;
    if (carry != 0)
      for (unsigned t = 0; t < degree_; ++t) next[t] += carry * top[t];
    pow_[k] = std::move(next);
  }
}

CycNum CycNum::zeta(unsigned order, unsigned k) {
  const CycField& f = CycField::get(order);
  k %= order;
  return CycNum(order, f.zeta_power(k));
}

void CycNum::normalize() {
  if (order_ == 1) return;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return;
  Rational r = c_[0];
  order_ = 1;
  c_.assign(1, r);
}

CycNum CycNum::promoted(const CycNum& v, unsigned order) {
  if (v.order_ == order) return v;
  if (order % v.order_ != 0) throw std::logic_error("CycNum: promotion order mismatch");
  const CycField& f = CycField::get(order);
  const unsigned step = order / v.order_;
  std::vector<Rational> out(f.degree(), Rational(0));
  for (size_t i = 0; i < v.c_.size(); ++i) {
    if (v.c_[i] == 0) continue;
    const std::vector<Rational>& zp = f.zeta_power(static_cast<unsigned>(i * step % order));
    for (unsigned t = 0; t < f.degree(); ++t) out[t] += v.c_[i] * zp[t];
  }
  return CycNum(order, std::move(out));
}

bool CycNum::is_zero() const {
  for (const Rational& x : c_)
    if (x != 0) return false;
  return true;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (Rational& x : r.c_) x = -x;
  return r;
}

// The mutating operators work on full-length coordinate vectors in the lcm
// field: promoted() canonicalizes (and may demote a rational back to order 1),
// so its result cannot be added element-wise directly.

CycNum& CycNum::operator+=(const CycNum& o) {
  const unsigned n = std::lcm(order_, o.order_);
  std::vector<Rational> a = coords_in(n), b = o.coords_in(n);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return *this = CycNum(n, std::move(a));
}

CycNum& CycNum::operator-=(const CycNum& o) {
  const unsigned n = std::lcm(order_, o.order_);
  std::vector<Rational> a = coords_in(n), b = o.coords_in(n);
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return *this = CycNum(n, std::move(a));
}

CycNum& CycNum::operator*=(const CycNum& o) {
  const unsigned n = std::lcm(order_, o.order_);
  if (n == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> a = coords_in(n), b = o.coords_in(n);
  const CycField& f = CycField::get(n);
  const unsigned d = f.degree();
  std::vector<Rational> conv(2 * d - 1, Rational(0));
  for (unsigned i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      conv[i + j] += a[i] * b[j];
    }
  }
  std::vector<Rational> out(conv.begin(), conv.begin() + d);
  for (unsigned e = d; e < 2 * d - 1; ++e) {
    if (conv[e] == 0) continue;
    const std::vector<Rational>& row = f.reduction_row(e - d);
    for (unsigned t = 0; t < d; ++t) out[t] += conv[e] * row[t];
  }
  return *this = CycNum(n, std::move(out));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum: division by zero");
  if (order_ == 1) return CycNum(Rational(1) / c_[0]);

  // Extended Euclid in Q[x] for gcd(this, Phi_n) = 1.
  const CycField& f = CycField::get(order_);
  std::vector<Rational> r0(f.cyclotomic_polynomial().size());
  for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(f.cyclotomic_polynomial()[i]);
  std::vector<Rational> r1 = c_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coefficients of `this`

  auto deg = [](const std::vector<Rational>& v) { return static_cast<long>(v.size()) - 1; };
  while (deg(r1) > 0) {
    // divide r0 by r1
    std::vector<Rational> rem = r0;
    std::vector<Rational> quot(rem.size() - r1.size() + 1, Rational(0));
    for (size_t k = quot.size(); k-- > 0;) {
      Rational c = rem[k + r1.size() - 1] / r1.back();
      if (c == 0) continue;
      quot[k] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[k + i] -= c * r1[i];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    // s_next = s0 - quot * s1
    std::vector<Rational> snext(std::max(s0.size(), quot.size() + s1.size() - 1), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
    for (size_t i = 0; i < quot.size(); ++i) {
      if (quot[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) snext[i + j] -= quot[i] * s1[j];
    }
    while (!snext.empty() && snext.back() == 0) snext.pop_back();
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snext);
  }
  if (r1.empty()) throw std::domain_error("CycNum: zero divisor");  // cannot happen in a field
  // r1 is a nonzero constant; inverse = s1 / r1.
  std::vector<Rational> out(f.degree(), Rational(0));
  for (size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] / r1[0];
  return CycNum(order_, std::move(out));
}

CycNum CycNum::conj() const {
  if (order_ == 1) return *this;
  const CycField& f = CycField::get(order_);
  std::vector<Rational> out(f.degree(), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const std::vector<Rational>& zp = f.zeta_power(static_cast<unsigned>((order_ - i) % order_));
    for (unsigned t = 0; t < f.degree(); ++t) out[t] += c_[i] * zp[t];
  }
  return CycNum(order_, std::move(out));
}

bool operator==(const CycNum& a, const CycNum& b) {
  unsigned n = std::lcm(a.order_, b.order_);
  CycNum x = CycNum::promoted(a, n), y = CycNum::promoted(b, n);
  return x.c_ == y.c_;
}

bool operator<(const CycNum& a, const CycNum& b) {
  unsigned n = std::lcm(a.order_, b.order_);
  CycNum x = CycNum::promoted(a, n), y = CycNum::promoted(b, n);
  return x.c_ < y.c_;
}

std::vector<Rational> CycNum::coords_in(unsigned n) const {
  CycNum v = promoted(*this, n);
  v.c_.resize(CycField::get(n).degree(), Rational(0));
  return v.c_;
}

std::string CycNum::str(const std::string& sym) const {
  if (order_ == 1) return rational_str(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    const bool unit = (v == 1) && i > 0;
    if (!unit) os << rational_str(v);
    if (i > 0) {
      if (!unit) os << "*";
      os << sym;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace discmf
