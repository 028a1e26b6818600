#pragma once
// Higher Specht polynomials for the shapes that occur at rank 2, and the
// assembly of the polynomial basis attached to each irreducible of the
// subgroup.  The basis for an irreducible chi spans the chi-isotypical
// component of the coinvariant algebra and is simultaneously a free module
// basis of that component over the invariant ring.

#include <string>
#include <vector>

#include "rep/reps.h"

namespace discmf {

// A standard filling of a one- or two-slot diagram.  For two-cell shapes the
// two fillings are (1 at the lower runner, 2 at the higher) and its swap; for
// one-slot shapes there is a single filling.
struct Tableau {
  Shape shape;
  // letter_slot[k] = runner holding letter k+1 (equal entries for one-slot shapes)
  std::vector<int> letter_slot;

  std::string str() const;  // e.g. "1@0,2@3"
};

std::vector<Tableau> standard_tableaux(const Shape& s);

// Reading word (letters in slot order) and the recursive word index.
std::vector<int> reading_word(const Tableau& t);
std::vector<int> word_index(const Tableau& t);  // indexed by letter

// The higher Specht polynomial Delta_{S,T}, normalized so its graded-lex
// leading coefficient is +1 only by the caller where needed (raw here).
XYPoly specht_polynomial(const Tableau& S, const Tableau& T, unsigned m);

// The split combination Delta^{(l)} for a self-stabilized two-cell shape:
//   sum_k xi^(l k d b) Delta_{S, Sh^{k b}(T)},  k = 0..u-1,
// where d defaults to q (the exponent the source leaves unpinned).
XYPoly split_specht_polynomial(const Tableau& S, unsigned m, unsigned p, int l, int d = -1);

struct BasisVector {
  XYPoly poly;          // normalized monic
  int degree = 0;
  std::string origin;   // "member t, S, T" provenance for listings
};

struct IsotypicBasis {
  std::vector<BasisVector> vectors;
  std::vector<XYPoly> polys() const;
  std::vector<int> degrees() const;
};

// Ordered basis for one subgroup irreducible: orbit members in shift order,
// within a member the qualifying fillings S (letter 1 on a runner < q), and
// for each S all fillings T.  Split classes contribute their single
// Delta^{(l)}.  Size always equals dim^2.
IsotypicBasis isotypic_basis(const Group& g, const HIrrep& ir);

}  // namespace discmf
