#include "group/group.h"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "errors.h"

namespace discmf {

namespace {
int posmod(long v, unsigned m) {
  long r = v % static_cast<long>(m);
  return static_cast<int>(r < 0 ? r + m : r);
}
}  // namespace

bool is_admissible(unsigned m, unsigned p) {
  if (m < 2 || p < 1 || p > m) return false;
  if (m % p != 0) return false;
  if (m == 2 && p == 2) return false;  // rank drops: the group is reducible
  return true;
}

std::vector<std::pair<unsigned, unsigned>> admissible_pairs(unsigned m_max, unsigned p_filter) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned m = 2; m <= m_max; ++m)
    for (unsigned p = 1; p <= m; ++p) {
      if (p_filter && p != p_filter) continue;
      if (is_admissible(m, p)) out.emplace_back(m, p);
    }
  return out;
}

Group::Group(unsigned m, unsigned p) : m_(m), p_(p), q_(p ? m / p : 0), frame_(m, p ? m / p : 1) {
  if (!is_admissible(m, p)) {
    std::ostringstream os;
    os << "inadmissible pair (m, p) = (" << m << ", " << p << ")";
    throw InadmissiblePair(os.str());
  }
  for (int eps = 0; eps < 2; ++eps)
    for (int a = 0; a < static_cast<int>(m_); ++a)
      for (int b = 0; b < static_cast<int>(m_); ++b)
        if ((a + b) % static_cast<int>(p_) == 0) elements_.push_back({eps, a, b});
  assert(elements_.size() == 2ull * m_ * m_ / p_);
  build_arrangement();
  build_linear_characters();
}

size_t Group::index_of(const GroupElement& g) const {
  // Elements were enumerated with eps outer, then a, then the valid b
  // ascending; valid b for a given a are b0, b0 + p, ... with b0 = (-a) mod p.
  const size_t per_a = m_ / p_;
  const size_t per_eps = m_ * per_a;
  const int b0 = posmod(-g.a, p_);
  return static_cast<size_t>(g.eps) * per_eps + static_cast<size_t>(g.a) * per_a +
         static_cast<size_t>((g.b - b0) / static_cast<int>(p_));
}

GroupElement Group::compose(const GroupElement& g, const GroupElement& h) const {
  if (g.eps == 0) return {h.eps, posmod(g.a + h.a, m_), posmod(g.b + h.b, m_)};
  return {1 - h.eps, posmod(g.a + h.b, m_), posmod(g.b + h.a, m_)};
}

GroupElement Group::inverse(const GroupElement& g) const {
  if (g.eps == 0) return {0, posmod(-g.a, m_), posmod(-g.b, m_)};
  return {1, posmod(-g.b, m_), posmod(-g.a, m_)};
}

CycNum Group::det(const GroupElement& g) const {
  CycNum d = CycNum::zeta(m_, static_cast<unsigned>(posmod(g.a + g.b, m_)));
  return g.eps ? -d : d;
}

CycNum Group::trace(const GroupElement& g) const {
  if (g.eps) return CycNum();
  return CycNum::zeta(m_, g.a) + CycNum::zeta(m_, g.b);
}

std::array<CycNum, 4> Group::matrix(const GroupElement& g) const {
  CycNum xa = CycNum::zeta(m_, g.a), xb = CycNum::zeta(m_, g.b);
  if (g.eps == 0) return {xa, CycNum(), CycNum(), xb};
  return {CycNum(), xa, xb, CycNum()};
}

XYPoly Group::act(const GroupElement& g, const XYPoly& f) const {
  // (g.f)(v) = f(g^T v); for eps = 1 this substitutes x -> xi^b y, y -> xi^a x.
  XYPoly out;
  for (const auto& [mono, c] : f.terms()) {
    if (g.eps == 0) {
      unsigned e = static_cast<unsigned>(posmod(static_cast<long>(g.a) * mono.first +
                                                    static_cast<long>(g.b) * mono.second,
                                                m_));
      out.add_term(mono, c * CycNum::zeta(m_, e));
    } else {
      unsigned e = static_cast<unsigned>(posmod(static_cast<long>(g.b) * mono.first +
                                                    static_cast<long>(g.a) * mono.second,
                                                m_));
      out.add_term({mono.second, mono.first}, c * CycNum::zeta(m_, e));
    }
  }
  return out;
}

bool Group::is_reflection(const GroupElement& g) const {
  if (g.eps == 0) return (g.a == 0) != (g.b == 0);
  return posmod(g.a + g.b, m_) == 0;
}

void Group::build_arrangement() {
  // Hyperplanes arise as fixed lines of the reflections.
  std::map<XYPoly, unsigned> stab_count;  // normalized form -> # nonidentity reflections
  for (const GroupElement& g : elements_) {
    if (!is_reflection(g)) continue;
    XYPoly alpha;
    if (g.eps == 0) {
      // diag(xi^a, 1) fixes x = 0 pointwise (form x); diag(1, xi^b) fixes y = 0.
      alpha = g.b == 0 ? XYPoly::monomial(1, 0) : XYPoly::monomial(0, 1);
    } else {
      // antidiag(xi^a; xi^-a) fixes the span of (xi^a, 1): form x - xi^a y.
      alpha = XYPoly::monomial(1, 0) - XYPoly::monomial(0, 1, CycNum::zeta(m_, g.a));
    }
    stab_count[alpha] += 1;
  }
  hyperplanes_.clear();
  for (const auto& [alpha, cnt] : stab_count) hyperplanes_.push_back({alpha, cnt + 1});
  std::sort(hyperplanes_.begin(), hyperplanes_.end(),
            [](const Hyperplane& a, const Hyperplane& b) {
              return to_string_xy(a.alpha) < to_string_xy(b.alpha);
            });

  // Orbits under the full group action on forms.
  std::map<XYPoly, size_t> index_of_form;
  for (size_t i = 0; i < hyperplanes_.size(); ++i) index_of_form[hyperplanes_[i].alpha] = i;
  std::vector<int> orbit_of(hyperplanes_.size(), -1);
  int next_orbit = 0;
  for (size_t i = 0; i < hyperplanes_.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    const int id = next_orbit++;
    std::vector<size_t> stack{i};
    orbit_of[i] = id;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      for (const GroupElement& g : elements_) {
        XYPoly img = act(g, hyperplanes_[cur].alpha).normalized_monic();
        auto it = index_of_form.find(img);
        assert(it != index_of_form.end());
        if (orbit_of[it->second] < 0) {
          orbit_of[it->second] = id;
          stack.push_back(it->second);
        }
      }
    }
  }

  orbits_.assign(static_cast<size_t>(next_orbit), {});
  for (size_t i = 0; i < hyperplanes_.size(); ++i)
    orbits_[static_cast<size_t>(orbit_of[i])].members.push_back(i);
  for (size_t o = 0; o < orbits_.size(); ++o) {
    HyperplaneOrbit& orb = orbits_[o];
    orb.name = "O" + std::to_string(o + 1);
    orb.e = hyperplanes_[orb.members.front()].e;
    XYPoly prod(CycNum(1));
    for (size_t hi : orb.members) {
      assert(hyperplanes_[hi].e == orb.e);
      prod *= hyperplanes_[hi].alpha;
    }
    orb.j_orbit = prod;
    XYPoly dpow(CycNum(1));
    for (unsigned t = 0; t < orb.e; ++t) dpow *= prod;
    orb.delta_orbit = frame_.express_in_basis(dpow, {XYPoly(CycNum(1))}).front();
    // theta_O: g . j_O = theta_O(g) j_O
    orb.theta.reserve(elements_.size());
    for (const GroupElement& g : elements_) {
      XYPoly img = act(g, orb.j_orbit);
      CycNum ratio = img.leading_coeff() * orb.j_orbit.leading_coeff().inverse();
      assert(img == orb.j_orbit.scaled(ratio));
      orb.theta.push_back(ratio);
    }
  }

  z_ = XYPoly(CycNum(1));
  j_ = XYPoly(CycNum(1));
  for (const Hyperplane& h : hyperplanes_) {
    z_ *= h.alpha;
    for (unsigned t = 0; t + 1 < h.e; ++t) j_ *= h.alpha;
  }
  delta_xy_ = z_ * j_;
  delta_ = frame_.express_in_basis(delta_xy_, {XYPoly(CycNum(1))}).front();
}

void Group::build_linear_characters() {
  const size_t n_orbits = orbits_.size();
  std::vector<unsigned> k(n_orbits, 0);
  for (;;) {
    LinearCharacter ch;
    ch.k = k;
    ch.values.assign(elements_.size(), CycNum(1));
    ch.j_theta = XYPoly(CycNum(1));
    ch.d_theta = SigmaPoly(CycNum(1));
    for (size_t o = 0; o < n_orbits; ++o) {
      for (unsigned t = 0; t < k[o]; ++t) {
        for (size_t gi = 0; gi < elements_.size(); ++gi) ch.values[gi] *= orbits_[o].theta[gi];
        ch.j_theta *= orbits_[o].j_orbit;
      }
      if (k[o] + 1 == orbits_[o].e) ch.d_theta *= orbits_[o].delta_orbit;
    }
    linear_.push_back(std::move(ch));
    // next tuple, lexicographic with the last orbit fastest
    size_t pos = n_orbits;
    while (pos > 0) {
      --pos;
      if (++k[pos] < orbits_[pos].e) break;
      k[pos] = 0;
      if (pos == 0) return;
    }
    if (n_orbits == 0) return;
  }
}

size_t Group::det_twist_linear(size_t idx) const {
  const LinearCharacter& ch = linear_.at(idx);
  size_t out = 0;
  for (size_t o = 0; o < orbits_.size(); ++o) {
    unsigned ko = (ch.k[o] + 1) % orbits_[o].e;
    out = out * orbits_[o].e + ko;
  }
  return out;
}

size_t Group::det_linear_index() const {
  size_t out = 0;
  for (const HyperplaneOrbit& o : orbits_) out = out * o.e + (1 % o.e);
  return out;
}

}  // namespace discmf
