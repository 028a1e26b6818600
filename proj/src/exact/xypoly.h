#pragma once
// Sparse exact polynomials: XYPoly in the ambient variables x, y and
// SigmaPoly in the two basic invariants s1, s2.  Both carry cyclotomic
// coefficients and keep their terms in a std::map so iteration order (and
// therefore every rendering) is deterministic.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exact/cyclotomic.h"

namespace discmf {

using Monomial = std::pair<int, int>;  // exponents of (x, y) resp. (s1, s2)

namespace detail {

template <typename Tag>
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(const CycNum& c) {
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }

  static SparsePoly monomial(int a, int b, CycNum c = CycNum(1)) {
    SparsePoly p;
    if (!c.is_zero()) p.terms_[{a, b}] = std::move(c);
    return p;
  }

  const std::map<Monomial, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  CycNum coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycNum() : it->second;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  SparsePoly operator-() const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scaled(const CycNum& c) const {
    SparsePoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.add_term(m, cc * c);
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }
  friend bool operator<(const SparsePoly& a, const SparsePoly& b) { return a.terms_ < b.terms_; }

  // Total degree of the leading (lexicographically largest) term; polynomials
  // here are homogeneous whenever degree matters.  -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      (void)c;
      if (m.first + m.second > d) d = m.first + m.second;
    }
    return d;
  }
  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      (void)c;
      if (d < 0)
        d = m.first + m.second;
      else if (m.first + m.second != d)
        return false;
    }
    return true;
  }

  // Leading coefficient for the graded-lex order with first variable > second.
  CycNum leading_coeff() const;
  SparsePoly normalized_monic() const;  // divide by leading_coeff (zero stays zero)

  std::string str(const char* v1, const char* v2) const;

 private:
  std::map<Monomial, CycNum> terms_;
};

struct XYTag {};
struct SigmaTag {};

}  // namespace detail

using XYPoly = detail::SparsePoly<detail::XYTag>;
using SigmaPoly = detail::SparsePoly<detail::SigmaTag>;

inline std::string to_string_xy(const XYPoly& p) { return p.str("x", "y"); }
inline std::string to_string_sigma(const SigmaPoly& p) { return p.str("s1", "s2"); }

// Substitute x -> cx * x^ax * y^bx, y -> cy * x^ay * y^by (monomial images).
XYPoly monomial_substitute(const XYPoly& p, const CycNum& cx, int ax, int bx, const CycNum& cy,
                           int ay, int by);

// The weighted frame the invariant ring lives in: R = C[sigma1, sigma2] with
// sigma1 = (xy)^q of degree 2q and sigma2 = x^m + y^m of degree m.
class InvariantFrame {
 public:
  InvariantFrame(unsigned m, unsigned q);

  unsigned m() const { return m_; }
  unsigned q() const { return q_; }
  const XYPoly& sigma1_xy() const { return s1_; }
  const XYPoly& sigma2_xy() const { return s2_; }

  // Expand an invariant-ring polynomial into x, y.
  XYPoly expand(const SigmaPoly& f) const;

  // Write f as sum_j c_j(sigma1, sigma2) * basis_j with unique invariant-ring
  // coefficients.  Throws NoSolution / AmbiguousSolution.
  std::vector<SigmaPoly> express_in_basis(const XYPoly& f, const std::vector<XYPoly>& basis) const;

 private:
  unsigned m_, q_;
  XYPoly s1_, s2_;
};

}  // namespace discmf
