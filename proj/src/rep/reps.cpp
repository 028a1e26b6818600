#include "rep/reps.h"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace discmf {

namespace {
int posmod(long v, unsigned m) {
  long r = v % static_cast<long>(m);
  return static_cast<int>(r < 0 ? r + m : r);
}
}  // namespace

std::string Shape::label() const {
  std::ostringstream os;
  switch (kind) {
    case ShapeKind::kTwoRow:
      os << "2@" << i;
      break;
    case ShapeKind::kTwoCol:
      os << "11@" << i;
      break;
    case ShapeKind::kTwoCell:
      os << "1@" << i << ",1@" << j;
      break;
  }
  return os.str();
}

std::optional<Shape> parse_shape(const std::string& text, unsigned m) {
  auto parse_runner = [&](const std::string& s) -> std::optional<int> {
    if (s.empty()) return std::nullopt;
    for (char c : s)
      if (!isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    int v = 0;
    try {
      v = std::stoi(s);
    } catch (...) {
      return std::nullopt;
    }
    if (v < 0 || v >= static_cast<int>(m)) return std::nullopt;
    return v;
  };
  auto comma = text.find(',');
  if (comma != std::string::npos) {
    std::string lhs = text.substr(0, comma), rhs = text.substr(comma + 1);
    if (lhs.rfind("1@", 0) != 0 || rhs.rfind("1@", 0) != 0) return std::nullopt;
    auto a = parse_runner(lhs.substr(2)), b = parse_runner(rhs.substr(2));
    if (!a || !b || *a == *b) return std::nullopt;
    return Shape{ShapeKind::kTwoCell, std::min(*a, *b), std::max(*a, *b)};
  }
  if (text.rfind("11@", 0) == 0) {
    auto a = parse_runner(text.substr(3));
    if (!a) return std::nullopt;
    return Shape{ShapeKind::kTwoCol, *a, 0};
  }
  if (text.rfind("2@", 0) == 0) {
    auto a = parse_runner(text.substr(2));
    if (!a) return std::nullopt;
    return Shape{ShapeKind::kTwoRow, *a, 0};
  }
  return std::nullopt;
}

Shape shift_shape(const Shape& s, int t, unsigned m) {
  Shape out = s;
  out.i = posmod(s.i + t, m);
  if (s.kind == ShapeKind::kTwoCell) {
    out.j = posmod(s.j + t, m);
    if (out.i > out.j) std::swap(out.i, out.j);
  }
  return out;
}

Shape det_twist_shape(const Shape& s, unsigned m) {
  Shape out = shift_shape(s, 1, m);
  // the determinant swaps the one-dimensional families
  if (s.kind == ShapeKind::kTwoRow)
    out.kind = ShapeKind::kTwoCol;
  else if (s.kind == ShapeKind::kTwoCol)
    out.kind = ShapeKind::kTwoRow;
  return out;
}

CycNum shape_character(const Shape& s, const GroupElement& g, unsigned m) {
  switch (s.kind) {
    case ShapeKind::kTwoRow:
      return CycNum::zeta(m, posmod(static_cast<long>(s.i) * (g.a + g.b), m));
    case ShapeKind::kTwoCol: {
      CycNum v = CycNum::zeta(m, posmod(static_cast<long>(s.i) * (g.a + g.b), m));
      return g.eps ? -v : v;
    }
    case ShapeKind::kTwoCell:
      if (g.eps) return CycNum();
      return CycNum::zeta(m, posmod(static_cast<long>(g.a) * s.i + static_cast<long>(g.b) * s.j,
                                    m)) +
             CycNum::zeta(m, posmod(static_cast<long>(g.a) * s.j + static_cast<long>(g.b) * s.i,
                                    m));
  }
  return CycNum();
}

namespace {

// Eigenvalue of g on the line spanned by w; asserts w really is an eigenvector.
CycNum eigen_scalar(const Group& grp, const GroupElement& g, const XYPoly& w) {
  XYPoly img = grp.act(g, w);
  CycNum scalar = img.leading_coeff() * w.leading_coeff().inverse();
  assert(img == w.scaled(scalar));
  return scalar;
}

}  // namespace

RepTable::RepTable(const Group& g) : group_(&g) {
  const unsigned m = g.m(), p = g.p(), q = g.q();

  std::vector<Shape> all;
  for (int i = 0; i < static_cast<int>(m); ++i) {
    all.push_back({ShapeKind::kTwoRow, i, 0});
    all.push_back({ShapeKind::kTwoCol, i, 0});
    for (int j = i + 1; j < static_cast<int>(m); ++j) all.push_back({ShapeKind::kTwoCell, i, j});
  }
  std::sort(all.begin(), all.end());

  for (const Shape& s : all) {
    // orbit under the runner shift by q
    std::vector<Shape> orbit{s};
    for (;;) {
      Shape nxt = shift_shape(orbit.back(), static_cast<int>(q), m);
      if (nxt == s) break;
      orbit.push_back(nxt);
    }
    Shape canonical = *std::min_element(orbit.begin(), orbit.end());
    if (canonical != s) continue;  // handled when we reach the canonical member

    const unsigned b = static_cast<unsigned>(orbit.size());
    if (p % b != 0) throw std::logic_error("reps: orbit size does not divide p");
    const unsigned u = p / b;
    if (u != 1 && u != 2) throw std::logic_error("reps: unexpected split multiplicity");

    if (u == 1) {
      HIrrep ir;
      ir.members = orbit;
      ir.b = b;
      ir.u = 1;
      ir.dim = s.dim();
      ir.label = s.label();
      ir.character.reserve(g.order());
      for (const GroupElement& el : g.elements()) ir.character.push_back(shape_character(s, el, m));
      irreps_.push_back(std::move(ir));
    } else {
      // self-stabilized two-cell orbit: j - i = m/2, two one-dimensional summands
      assert(s.kind == ShapeKind::kTwoCell && posmod(s.j - s.i, m) == static_cast<int>(m) / 2);
      for (int l = 0; l < 2; ++l) {
        XYPoly w = XYPoly::monomial(s.i, s.i) *
                   (XYPoly::monomial(0, static_cast<int>(m) / 2) +
                    XYPoly::monomial(static_cast<int>(m) / 2, 0,
                                     l ? CycNum(-1) : CycNum(1)));
        HIrrep ir;
        ir.members = orbit;
        ir.b = b;
        ir.u = 2;
        ir.split = l;
        ir.dim = 1;
        ir.label = s.label() + (l ? "+l1" : "+l0");
        ir.character.reserve(g.order());
        for (const GroupElement& el : g.elements())
          ir.character.push_back(eigen_scalar(g, el, w));
        irreps_.push_back(std::move(ir));
      }
    }
  }

  // determinant twist on classes
  det_twist_.resize(irreps_.size());
  for (size_t idx = 0; idx < irreps_.size(); ++idx) {
    const HIrrep& ir = irreps_[idx];
    const Shape twisted = det_twist_shape(ir.members.front(), m);
    if (ir.u == 1) {
      det_twist_[idx] = class_of(twisted);
    } else {
      // match by character: chi tensor det must equal one of the two summands
      std::vector<CycNum> target = ir.character;
      for (size_t gi = 0; gi < g.elements().size(); ++gi) target[gi] *= g.det(g.elements()[gi]);
      size_t c0 = class_of(twisted, 0), c1 = class_of(twisted, 1);
      if (irreps_[c0].character == target)
        det_twist_[idx] = c0;
      else if (irreps_[c1].character == target)
        det_twist_[idx] = c1;
      else
        throw std::logic_error("reps: split determinant twist matches neither summand");
    }
  }

  // dim-1 irreps against the hyperplane-orbit character table
  linear_index_.assign(irreps_.size(), -1);
  for (size_t idx = 0; idx < irreps_.size(); ++idx) {
    if (irreps_[idx].dim != 1) continue;
    bool found = false;
    for (size_t li = 0; li < g.linear_characters().size(); ++li) {
      if (g.linear_characters()[li].values == irreps_[idx].character) {
        linear_index_[idx] = static_cast<long>(li);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reps: linear irrep missing from orbit character table");
  }
}

size_t RepTable::index_of_label(const std::string& label) const {
  for (size_t i = 0; i < irreps_.size(); ++i)
    if (irreps_[i].label == label) return i;
  throw std::out_of_range("reps: no irrep labelled " + label);
}

size_t RepTable::class_of(const Shape& s, int split) const {
  const unsigned m = group_->m(), q = group_->q();
  Shape cur = s;
  Shape canonical = s;
  for (;;) {
    cur = shift_shape(cur, static_cast<int>(q), m);
    if (cur == s) break;
    canonical = std::min(canonical, cur);
  }
  for (size_t i = 0; i < irreps_.size(); ++i)
    if (irreps_[i].members.front() == canonical && irreps_[i].split == split) return i;
  throw std::out_of_range("reps: no class for shape " + s.label());
}

size_t RepTable::det_twist(size_t idx) const { return det_twist_.at(idx); }

size_t RepTable::linear_index(size_t idx) const {
  long v = linear_index_.at(idx);
  if (v < 0) throw std::out_of_range("reps: irrep is not one-dimensional");
  return static_cast<size_t>(v);
}

}  // namespace discmf
