#pragma once
// Exact arithmetic in cyclotomic fields Q(zeta_n).  Elements are stored on the
// power basis 1, zeta, ..., zeta^{phi(n)-1} as vectors of rationals, reduced
// modulo the n-th cyclotomic polynomial.  Rational numbers are the order-1
// case and mixed-order arithmetic promotes to the lcm of the orders, so a
// CycNum can be passed around without tracking its field by hand.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace discmf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Shared per-order tables: the cyclotomic polynomial, reduction rows for
// exponents phi(n) .. 2*phi(n)-2, and all powers zeta^k reduced to the basis.
class CycField {
 public:
  static const CycField& get(unsigned order);

  unsigned order() const { return order_; }
  unsigned degree() const { return degree_; }  // phi(order)
  // zeta^k on the power basis, 0 <= k < order.
  const std::vector<Rational>& zeta_power(unsigned k) const { return pow_[k]; }
  // x^(degree + i) mod Phi_n, 0 <= i <= degree - 2.
  const std::vector<Rational>& reduction_row(unsigned i) const { return red_[i]; }
  const std::vector<BigInt>& cyclotomic_polynomial() const { return phi_; }

  CycField(const CycField&) = delete;
  CycField& operator=(const CycField&) = delete;

 private:
  explicit CycField(unsigned order);

  unsigned order_;
  unsigned degree_;
  std::vector<BigInt> phi_;  // monic, coefficients by ascending exponent
  std::vector<std::vector<Rational>> red_;
  std::vector<std::vector<Rational>> pow_;
};

class CycNum {
 public:
  CycNum() : order_(1), c_(1) {}
  CycNum(const Rational& r) : order_(1), c_{r} {}
  CycNum(long v) : order_(1), c_{Rational(v)} {}
  CycNum(int v) : order_(1), c_{Rational(v)} {}

  // zeta_order^k
  static CycNum zeta(unsigned order, unsigned k = 1);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return order_ == 1; }
  // Requires is_rational().
  const Rational& rational() const { return c_[0]; }

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

  CycNum inverse() const;  // throws std::domain_error on zero
  CycNum conj() const;     // the Galois map zeta -> zeta^{-1}

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }
  // Total order used only to make containers and printed output deterministic.
  friend bool operator<(const CycNum& a, const CycNum& b);

  // Rational coordinates of this number inside Q(zeta_n); requires that the
  // element's order divides n.  Vector has length phi(n).
  std::vector<Rational> coords_in(unsigned n) const;

  // Rendering: rationals print plainly, anything else as a polynomial in the
  // symbol `sym` (e.g. "w^2 - 1/2*w").
  std::string str(const std::string& sym = "w") const;

 private:
  CycNum(unsigned order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {
    normalize();
  }
  void normalize();  // demote to the smallest subfield we can see cheaply (Q)
  static CycNum promoted(const CycNum& v, unsigned order);

  unsigned order_;
  std::vector<Rational> c_;
};

}  // namespace discmf
