#pragma once
// Matrix factorizations of the discriminant over the invariant ring: the
// restriction of multiplication by z (and by j) to an isotypical component,
// the factorization identity check, block splitting, and splitting-off of
// trivial summands at unit entries.

#include <string>
#include <vector>

#include "exact/xypoly.h"
#include "group/group.h"

namespace discmf {

using SigmaMatrix = std::vector<std::vector<SigmaPoly>>;

// Row k holds the coefficients of mult * src[k] over dst:
//   mult * src[k] = sum_l M[k][l] * dst[l].
SigmaMatrix restriction_matrix(const InvariantFrame& frame, const XYPoly& mult,
                               const std::vector<XYPoly>& src, const std::vector<XYPoly>& dst);

struct MFPair {
  SigmaMatrix phi;  // z-side: source component -> twisted component
  SigmaMatrix psi;  // j-side: twisted component -> source component
  size_t size() const { return phi.size(); }
};

// Throws MFIdentityFailure unless phi*psi = psi*phi = delta * I.
void check_mf_identity(const MFPair& mf, const SigmaPoly& delta, const std::string& context);

SigmaMatrix matmul(const SigmaMatrix& a, const SigmaMatrix& b);

struct Block {
  std::vector<size_t> src;  // row indices into the parent pair
  std::vector<size_t> dst;  // column indices
  MFPair mf;
};

// Finest simultaneous block decomposition of the pair: connected components
// of the bipartite support graph of phi together with psi.
std::vector<Block> block_split(const MFPair& mf);

struct ReducedBlock {
  MFPair mf;               // no degree-0 entries left (possibly 0x0)
  unsigned split_free = 0;      // summands (1, delta) removed at units of phi
  unsigned split_rmoddelta = 0; // summands (delta, 1) removed at units of psi
};

// Split off trivial summands at unit entries with paired elementary row and
// column operations, preserving the factorization identity throughout.
ReducedBlock stable_reduce(const Block& b, const SigmaPoly& delta);

int weighted_degree(const SigmaPoly& f, unsigned m, unsigned q);  // -1 for 0, -2 if mixed

}  // namespace discmf
