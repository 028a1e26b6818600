#pragma once
// The family of reflection groups handled by this library, their reflection
// arrangements, and the linear-character bookkeeping attached to hyperplane
// orbits.  Group elements are (eps, a, b) with 0 <= a, b < m encoding
//   eps = 0:  diag(xi^a, xi^b)
//   eps = 1:  antidiag(xi^a; xi^b)   (row 1 = (0, xi^a), row 2 = (xi^b, 0))
// where xi = exp(2 pi i / m); membership requires p | a + b.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "exact/xypoly.h"

namespace discmf {

struct GroupElement {
  int eps = 0;
  int a = 0;
  int b = 0;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct Hyperplane {
  XYPoly alpha;     // normalized defining linear form
  unsigned e = 0;   // order of the pointwise stabilizer
};

struct HyperplaneOrbit {
  std::string name;                 // "O1", "O2", ... in canonical order
  std::vector<size_t> members;      // indices into Group::hyperplanes()
  unsigned e = 0;                   // common stabilizer order
  XYPoly j_orbit;                   // product of the member forms
  SigmaPoly delta_orbit;            // j_orbit^e written in the invariants
  std::vector<CycNum> theta;        // theta_O(g) for every group element, in group order
};

// A degree-1 character of the group, recorded as exponents against the
// orbit characters: theta = prod_O theta_O^{k_O}, 0 <= k_O < e_O.
struct LinearCharacter {
  std::vector<unsigned> k;
  std::vector<CycNum> values;  // on all group elements, in group order
  XYPoly j_theta;              // prod_O j_O^{k_O}
  SigmaPoly d_theta;           // prod over orbits with k_O = e_O - 1 of Delta_O
};

class Group {
 public:
  // Throws InadmissiblePair unless m >= 2, p | m, and (m, p) != (2, 2).
  Group(unsigned m, unsigned p);

  unsigned m() const { return m_; }
  unsigned p() const { return p_; }
  unsigned q() const { return q_; }
  size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  size_t index_of(const GroupElement& g) const;

  GroupElement identity() const { return {0, 0, 0}; }
  GroupElement compose(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  CycNum det(const GroupElement& g) const;
  CycNum trace(const GroupElement& g) const;
  // 2x2 matrix entries, row-major.
  std::array<CycNum, 4> matrix(const GroupElement& g) const;

  // Left action on polynomials: (g . f)(v) = f(g^T v).
  XYPoly act(const GroupElement& g, const XYPoly& f) const;

  bool is_reflection(const GroupElement& g) const;

  const InvariantFrame& frame() const { return frame_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const std::vector<HyperplaneOrbit>& orbits() const { return orbits_; }

  const XYPoly& z() const { return z_; }          // prod alpha_H
  const XYPoly& j() const { return j_; }          // prod alpha_H^{e_H - 1}
  const XYPoly& delta_xy() const { return delta_xy_; }  // z * j
  const SigmaPoly& delta() const { return delta_; }     // same, in the invariants

  // All degree-1 characters, indexed by exponent tuples in lexicographic
  // order (so index 0 is trivial).
  const std::vector<LinearCharacter>& linear_characters() const { return linear_; }
  // Index of theta tensor det, given by k_O -> k_O + 1 mod e_O.
  size_t det_twist_linear(size_t idx) const;
  size_t det_linear_index() const;  // the tuple (1, ..., 1)

 private:
  void build_arrangement();
  void build_linear_characters();

  unsigned m_, p_, q_;
  InvariantFrame frame_;
  std::vector<GroupElement> elements_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<HyperplaneOrbit> orbits_;
  XYPoly z_, j_, delta_xy_;
  SigmaPoly delta_;
  std::vector<LinearCharacter> linear_;
};

// All admissible (m, p) with m <= m_max (and p == p_filter when nonzero).
std::vector<std::pair<unsigned, unsigned>> admissible_pairs(unsigned m_max, unsigned p_filter = 0);
bool is_admissible(unsigned m, unsigned p);

}  // namespace discmf
