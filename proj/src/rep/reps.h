#pragma once
// Irreducible representations.  For the full wreath product (p = 1) the
// irreducibles are indexed by one- and two-cell diagrams on m runners; for a
// subgroup of index p they are orbits of those diagrams under the runner
// shift by q = m/p, possibly splitting in two when the shift stabilizes the
// diagram.  Characters are exact cyclotomic numbers.

#include <optional>
#include <string>
#include <vector>

#include "group/group.h"

namespace discmf {

enum class ShapeKind { kTwoRow, kTwoCol, kTwoCell };

// kTwoRow  i : both letters stacked horizontally on runner i   (dim 1, s2 -> +1)
// kTwoCol  i : both letters stacked vertically on runner i     (dim 1, s2 -> -1)
// kTwoCell i j (i < j): one letter on each of two runners      (dim 2)
struct Shape {
  ShapeKind kind;
  int i = 0;
  int j = 0;  // only for kTwoCell

  unsigned dim() const { return kind == ShapeKind::kTwoCell ? 2 : 1; }
  std::string label() const;
  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

// Parse "2@1", "11@0", "1@0,1@3" (the same grammar the CLI accepts).
std::optional<Shape> parse_shape(const std::string& text, unsigned m);

Shape shift_shape(const Shape& s, int t, unsigned m);  // runner shift, canonicalized
Shape det_twist_shape(const Shape& s, unsigned m);     // tensor with the determinant

// Character of the parent-group irrep for the given shape.
CycNum shape_character(const Shape& s, const GroupElement& g, unsigned m);

// One irreducible of the subgroup: an orbit of parent shapes plus an optional
// split index for self-stabilized two-cell orbits.
struct HIrrep {
  std::vector<Shape> members;  // Sh^t of the canonical shape, t = 0..b-1
  unsigned b = 0;              // orbit size
  unsigned u = 1;              // p / b, the number of split summands (1 or 2)
  int split = -1;              // -1, or l in {0, 1} when u = 2
  unsigned dim = 0;
  std::string label;                // canonical shape label, "+l0"/"+l1" when split
  std::vector<CycNum> character;    // on all subgroup elements, in group order
};

class RepTable {
 public:
  explicit RepTable(const Group& g);

  const Group& group() const { return *group_; }
  const std::vector<HIrrep>& irreps() const { return irreps_; }
  size_t index_of_label(const std::string& label) const;

  // Index of the irrep containing (shape, split)'s class.
  size_t class_of(const Shape& s, int split = -1) const;
  // chi tensor det, as an index into irreps().
  size_t det_twist(size_t idx) const;
  // For degree-1 irreps: the matching entry of group().linear_characters().
  size_t linear_index(size_t idx) const;

 private:
  const Group* group_;
  std::vector<HIrrep> irreps_;
  std::vector<size_t> det_twist_;
  std::vector<long> linear_index_;  // -1 for dim > 1
};

}  // namespace discmf
