#include "specht/specht.h"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace discmf {

std::string Tableau::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < letter_slot.size(); ++k) {
    if (k) os << ",";
    os << (k + 1) << "@" << letter_slot[k];
  }
  return os.str();
}

std::vector<Tableau> standard_tableaux(const Shape& s) {
  if (s.kind == ShapeKind::kTwoCell)
    return {{s, {s.i, s.j}}, {s, {s.j, s.i}}};
  return {{s, {s.i, s.i}}};
}

std::vector<int> reading_word(const Tableau& t) {
  // Letters are read runner by runner; inside a runner the column is read
  // bottom to top, which for the vertical domino puts letter 2 first.
  if (t.shape.kind == ShapeKind::kTwoCell) {
    if (t.letter_slot[0] <= t.letter_slot[1]) return {1, 2};
    return {2, 1};
  }
  if (t.shape.kind == ShapeKind::kTwoCol) return {2, 1};
  return {1, 2};
}

std::vector<int> word_index(const Tableau& t) {
  // i(1) = 0; i(k+1) = i(k) + 1 when letter k+1 sits strictly left of letter
  // k (smaller runner, or higher in the same column), else i(k).
  std::vector<int> idx(t.letter_slot.size(), 0);
  if (t.shape.kind == ShapeKind::kTwoCell) {
    idx[1] = t.letter_slot[1] < t.letter_slot[0] ? 1 : 0;
  } else if (t.shape.kind == ShapeKind::kTwoCol) {
    idx[1] = 1;  // letter 2 sits above letter 1 in the same column
  } else {
    idx[1] = 0;  // letter 2 sits to the right in the same row
  }
  return idx;
}

XYPoly specht_polynomial(const Tableau& S, const Tableau& T, unsigned m) {
  if (S.shape != T.shape) throw std::invalid_argument("specht: fillings of different shapes");
  const Shape& sh = S.shape;
  const std::vector<int> idx = word_index(S);

  // Monomial before symmetrization: each letter k (variable x_k) picks up the
  // exponent slot_T(k) + m * i_S(cell of k in T).
  // For letter k at cell C in T, the index attached to C is the word index of
  // the letter S places at C.
  auto cell_index_of_slotpos = [&](int slot, int within) -> int {
    // within = position inside the slot for one-slot shapes (0 or 1), unused
    // for two-cell shapes.
    for (size_t k = 0; k < S.letter_slot.size(); ++k) {
      if (sh.kind == ShapeKind::kTwoCell) {
        if (S.letter_slot[k] == slot) return idx[k];
      } else {
        // both letters share the runner; order inside the column/row is fixed
        // by the reading convention, so position matches the letter order of
        // the standard filling
        if (static_cast<int>(k) == within) return idx[k];
      }
    }
    throw std::logic_error("specht: cell lookup failed");
  };

  int ex = 0, ey = 0;  // exponents of x (letter 1) and y (letter 2)
  if (sh.kind == ShapeKind::kTwoCell) {
    for (int k = 0; k < 2; ++k) {
      const int slot = T.letter_slot[k];
      const int e = slot + static_cast<int>(m) * cell_index_of_slotpos(slot, -1);
      (k == 0 ? ex : ey) += e;
    }
    return XYPoly::monomial(ex, ey);
  }

  // One-slot shapes: both cells on runner sh.i; cell positions 0 and 1 in
  // reading order carry indices idx[0], idx[1] of the single standard filling.
  for (int k = 0; k < 2; ++k) {
    const int e = sh.i + static_cast<int>(m) * idx[k];
    (k == 0 ? ex : ey) += e;
  }
  XYPoly mono = XYPoly::monomial(ex, ey);
  XYPoly swapped = XYPoly::monomial(ey, ex);
  const CycNum half(Rational(1, 2));
  if (sh.kind == ShapeKind::kTwoRow) return (mono + swapped).scaled(half);
  return (mono - swapped).scaled(half);  // vertical domino: antisymmetrize
}

XYPoly split_specht_polynomial(const Tableau& S, unsigned m, unsigned p, int l, int d) {
  const Shape& sh = S.shape;
  if (sh.kind != ShapeKind::kTwoCell || (sh.j - sh.i) != static_cast<int>(m / 2))
    throw std::invalid_argument("specht: shape does not split");
  const unsigned q = m / p;
  const unsigned b = p / 2;
  if (d < 0) d = static_cast<int>(q);

  XYPoly out;
  for (unsigned k = 0; k < 2; ++k) {
    // Sh^{k b} shifts every runner of T by k*b*q = k*m/2; for the stabilized
    // shape this maps the filling back onto the same two runners.
    Tableau T = S;
    for (int& slot : T.letter_slot)
      slot = static_cast<int>((slot + k * b * q) % m);
    const unsigned e = static_cast<unsigned>((static_cast<long>(l) * k * d * b) % m);
    out += specht_polynomial(S, T, m).scaled(CycNum::zeta(m, e));
  }
  return out;
}

std::vector<XYPoly> IsotypicBasis::polys() const {
  std::vector<XYPoly> out;
  out.reserve(vectors.size());
  for (const BasisVector& v : vectors) out.push_back(v.poly);
  return out;
}

std::vector<int> IsotypicBasis::degrees() const {
  std::vector<int> out;
  out.reserve(vectors.size());
  for (const BasisVector& v : vectors) out.push_back(v.degree);
  return out;
}

IsotypicBasis isotypic_basis(const Group& g, const HIrrep& ir) {
  const unsigned m = g.m(), q = g.q();
  IsotypicBasis basis;

  if (ir.u == 2) {
    // Exactly one member filling qualifies: the canonical member with letter 1
    // on its low runner (always < q).
    const Shape& sh = ir.members.front();
    assert(sh.i < static_cast<int>(q));
    Tableau S{sh, {sh.i, sh.j}};
    XYPoly w = split_specht_polynomial(S, m, g.p(), ir.split);
    BasisVector v;
    v.degree = w.degree();
    v.poly = w.normalized_monic();
    v.origin = "member 0, S=" + S.str() + ", split l=" + std::to_string(ir.split);
    basis.vectors.push_back(std::move(v));
    return basis;
  }

  for (size_t t = 0; t < ir.members.size(); ++t) {
    const Shape& mu = ir.members[t];
    for (const Tableau& S : standard_tableaux(mu)) {
      if (S.letter_slot[0] >= static_cast<int>(q)) continue;  // letter 1 must sit below q
      for (const Tableau& T : standard_tableaux(mu)) {
        XYPoly w = specht_polynomial(S, T, m);
        BasisVector v;
        v.degree = w.degree();
        v.poly = w.normalized_monic();
        v.origin = "member " + std::to_string(t) + ", S=" + S.str() + ", T=" + T.str();
        basis.vectors.push_back(std::move(v));
      }
    }
  }
  if (basis.vectors.size() != static_cast<size_t>(ir.dim) * ir.dim)
    throw std::logic_error("specht: isotypic basis size mismatch for " + ir.label);
  return basis;
}

}  // namespace discmf
