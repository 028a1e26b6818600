#pragma once
// Classification of the summands cut out of the discriminant factorization:
// the canonical indecomposable matrix factorizations of the three curve
// singularities that occur, constant-equivalence testing against them, the
// per-group decomposition pipeline, and the predicted multisets it is checked
// against.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mf/matfac.h"
#include "rep/reps.h"
#include "specht/specht.h"

namespace discmf {

struct CanonicalEntry {
  std::string name;
  MFPair mf;
  // Nonempty when this normal form decomposes further over the list
  // (self-transpose middle entries of the even families); the aggregate uses
  // the expansion.
  std::vector<std::string> expands_to;
};

struct CanonicalList {
  std::string regime;  // "A3", "D<p+2>" or "A<m-1>" singularity tag
  SigmaPoly delta;
  std::vector<CanonicalEntry> entries;
  const CanonicalEntry* find(const std::string& name) const;
};

CanonicalList canonical_list(unsigned m, unsigned p);

// True iff (phi, psi) and (phi', psi') differ by constant invertible S, T:
// phi' = S phi T and psi' = T^{-1} psi S^{-1}.
bool constant_equivalent(const MFPair& a, const MFPair& b);

// Name of the unique canonical entry equivalent to the block; throws
// Unclassified when there is none or more than one.
std::string classify_block(const MFPair& block, const CanonicalList& list,
                           const std::string& context);

struct ComponentResult {
  size_t irrep = 0;             // index into RepTable
  std::string label;            // source irrep label
  std::string twist_label;      // target (det-twisted) irrep label
  unsigned dim = 0;
  std::vector<int> src_degrees, dst_degrees;
  MFPair mf;
  std::vector<std::string> classes;  // matched labels, reductions included
};

struct Decomposition {
  unsigned m = 0, p = 0;
  std::string regime;
  std::vector<ComponentResult> components;
  std::map<std::string, unsigned> aggregate;  // expanded, including FreeR / RmodDelta
};

Decomposition decompose_group(const Group& g, const RepTable& reps);

struct PredictedMultiset {
  std::string regime;
  std::map<std::string, unsigned> classes;  // without FreeR
  unsigned free_count = 0;
};

PredictedMultiset theorem_predicted_multiset(unsigned m, unsigned p);

struct TheoremCheck {
  bool match = false;                // aggregate (minus FreeR) equals prediction
  unsigned free_found = 0, free_predicted = 0;
  std::vector<std::string> diffs;    // human-readable discrepancies
};

TheoremCheck check_against_theorem(const Decomposition& d, const PredictedMultiset& pred);

}  // namespace discmf
