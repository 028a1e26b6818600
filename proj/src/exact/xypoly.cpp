#include "exact/xypoly.h"

#include <algorithm>
#include <sstream>

#include "errors.h"
#include "exact/linsolve.h"

namespace discmf {
namespace detail {

namespace {

// graded lex with the first variable dominant; used for leading terms and printing
bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a.first < b.first;
}

}  // namespace

template <typename Tag>
CycNum SparsePoly<Tag>::leading_coeff() const {
  if (terms_.empty()) return CycNum();
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (monomial_less(best->first, it->first)) best = it;
  return best->second;
}

template <typename Tag>
SparsePoly<Tag> SparsePoly<Tag>::normalized_monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coeff().inverse());
}

template <typename Tag>
std::string SparsePoly<Tag>::str(const char* v1, const char* v2) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, CycNum>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return monomial_less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : ts) {
    std::string mstr;
    {
      std::ostringstream ms;
      if (mono.first > 0) {
        ms << v1;
        if (mono.first > 1) ms << "^" << mono.first;
      }
      if (mono.second > 0) {
        if (mono.first > 0) ms << "*";
        ms << v2;
        if (mono.second > 1) ms << "^" << mono.second;
      }
      mstr = ms.str();
    }
    std::string cstr;
    bool negative = false;
    if (coeff.is_rational()) {
      Rational v = coeff.rational();
      negative = v < 0;
      if (negative) v = -v;
      if (v == 1 && !mstr.empty())
        cstr.clear();
      else
        cstr = v.str();
    } else {
      cstr = "(" + coeff.str() + ")";
    }
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (!cstr.empty()) {
      os << cstr;
      if (!mstr.empty()) os << "*";
    }
    os << (mstr.empty() && cstr.empty() ? "1" : mstr);
  }
  return os.str();
}

template class SparsePoly<XYTag>;
template class SparsePoly<SigmaTag>;

}  // namespace detail

XYPoly monomial_substitute(const XYPoly& p, const CycNum& cx, int ax, int bx, const CycNum& cy,
                           int ay, int by) {
  XYPoly out;
  for (const auto& [m, c] : p.terms()) {
    CycNum coeff = c;
    for (int i = 0; i < m.first; ++i) coeff *= cx;
    for (int i = 0; i < m.second; ++i) coeff *= cy;
    out.add_term({m.first * ax + m.second * ay, m.first * bx + m.second * by}, coeff);
  }
  return out;
}

InvariantFrame::InvariantFrame(unsigned m, unsigned q) : m_(m), q_(q) {
  s1_ = XYPoly::monomial(static_cast<int>(q), static_cast<int>(q));
  s2_ = XYPoly::monomial(static_cast<int>(m), 0) + XYPoly::monomial(0, static_cast<int>(m));
}

XYPoly InvariantFrame::expand(const SigmaPoly& f) const {
  XYPoly out;
  for (const auto& [mono, coeff] : f.terms()) {
    const int a = mono.first, b = mono.second;
    // sigma1^a * sigma2^b = (xy)^(qa) * sum_k C(b,k) x^(mk) y^(m(b-k))
    BigInt binom = 1;
    for (int k = 0; k <= b; ++k) {
      CycNum c = coeff * CycNum(Rational(binom));
      out.add_term({static_cast<int>(q_) * a + static_cast<int>(m_) * k,
                    static_cast<int>(q_) * a + static_cast<int>(m_) * (b - k)},
                   c);
      binom = binom * (b - k) / (k + 1);
    }
  }
  return out;
}

std::vector<SigmaPoly> InvariantFrame::express_in_basis(const XYPoly& f,
                                                        const std::vector<XYPoly>& basis) const {
  if (!f.is_homogeneous()) throw NoSolution("express_in_basis: target not homogeneous");
  for (const XYPoly& w : basis)
    if (w.is_zero() || !w.is_homogeneous())
      throw NoSolution("express_in_basis: basis must be homogeneous and nonzero");

  std::vector<SigmaPoly> result(basis.size());
  if (f.is_zero()) return result;

  const unsigned n = m_;  // coefficient field order used for coordinates
  const unsigned phin = CycField::get(n).degree();
  const int df = f.degree();

  struct Column {
    size_t j;
    int a, b;
    unsigned t;
    XYPoly expansion;  // sigma1^a sigma2^b * basis_j (coefficient zeta^t handled separately)
  };
  std::vector<Column> columns;
  for (size_t j = 0; j < basis.size(); ++j) {
    const int gap = df - basis[j].degree();
    if (gap < 0) continue;
    for (int b = 0; static_cast<int>(m_) * b <= gap; ++b) {
      const int rem = gap - static_cast<int>(m_) * b;
      if (rem % static_cast<int>(2 * q_) != 0) continue;
      const int a = rem / static_cast<int>(2 * q_);
      XYPoly pw = expand(SigmaPoly::monomial(a, b)) * basis[j];
      for (unsigned t = 0; t < phin; ++t) columns.push_back({j, a, b, t, pw});
    }
  }

  // Row index: each xy-monomial contributes phi(n) rational equations.
  std::map<Monomial, size_t> row_of;
  auto touch = [&row_of](const XYPoly& p) {
    for (const auto& [m, c] : p.terms()) {
      (void)c;
      row_of.emplace(m, 0);
    }
  };
  touch(f);
  for (const Column& col : columns) touch(col.expansion);
  {
    size_t idx = 0;
    for (auto& [m, r] : row_of) r = idx++;
  }

  const size_t rows = row_of.size() * phin;
  DenseMatrix<Rational> a(rows, std::vector<Rational>(columns.size(), Rational(0)));
  std::vector<Rational> rhs(rows, Rational(0));
  for (const auto& [mono, coeff] : f.terms()) {
    std::vector<Rational> coords = coeff.coords_in(n);
    const size_t base = row_of[mono] * phin;
    for (unsigned t = 0; t < phin; ++t) rhs[base + t] = coords[t];
  }
  const CycNum zeta = CycNum::zeta(n);
  for (size_t cidx = 0; cidx < columns.size(); ++cidx) {
    const Column& col = columns[cidx];
    CycNum zt = CycNum(1);
    for (unsigned i = 0; i < col.t; ++i) zt *= zeta;
    for (const auto& [mono, coeff] : col.expansion.terms()) {
      std::vector<Rational> coords = (coeff * zt).coords_in(n);
      const size_t base = row_of[mono] * phin;
      for (unsigned t = 0; t < phin; ++t) a[base + t][cidx] = coords[t];
    }
  }

  SolveResult<Rational> sol = solve(a, rhs);
  if (sol.status == SolveStatus::kNoSolution)
    throw NoSolution("express_in_basis: target " + to_string_xy(f) +
                     " is not in the module span of the basis");
  if (sol.status == SolveStatus::kAmbiguous)
    throw AmbiguousSolution("express_in_basis: basis is dependent over the invariant ring");

  for (size_t cidx = 0; cidx < columns.size(); ++cidx) {
    if (sol.x[cidx] == 0) continue;
    const Column& col = columns[cidx];
    CycNum zt = CycNum(Rational(sol.x[cidx]));
    for (unsigned i = 0; i < col.t; ++i) zt *= zeta;
    SigmaPoly add = SigmaPoly::monomial(col.a, col.b, zt);
    result[col.j] += add;
  }
  return result;
}

}  // namespace discmf
