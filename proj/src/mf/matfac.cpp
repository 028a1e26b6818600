#include "mf/matfac.h"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "errors.h"

namespace discmf {

SigmaMatrix restriction_matrix(const InvariantFrame& frame, const XYPoly& mult,
                               const std::vector<XYPoly>& src, const std::vector<XYPoly>& dst) {
  SigmaMatrix rows;
  rows.reserve(src.size());
  for (const XYPoly& w : src) rows.push_back(frame.express_in_basis(mult * w, dst));
  return rows;
}

SigmaMatrix matmul(const SigmaMatrix& a, const SigmaMatrix& b) {
  const size_t n = a.size(), k = b.size(), cols = k ? b[0].size() : 0;
  SigmaMatrix out(n, std::vector<SigmaPoly>(cols));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j) {
        if (b[t][j].is_zero()) continue;
        out[i][j] += a[i][t] * b[t][j];
      }
    }
  return out;
}

void check_mf_identity(const MFPair& mf, const SigmaPoly& delta, const std::string& context) {
  const size_t n = mf.size();
  auto check = [&](const SigmaMatrix& prod, const char* which) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const SigmaPoly want = i == j ? delta : SigmaPoly();
        if (prod[i][j] != want) {
          std::ostringstream os;
          os << context << ": " << which << " is not delta * I at entry (" << i << ", " << j
             << ")";
          throw MFIdentityFailure(os.str());
        }
      }
  };
  check(matmul(mf.phi, mf.psi), "phi*psi");
  check(matmul(mf.psi, mf.phi), "psi*phi");
}

std::vector<Block> block_split(const MFPair& mf) {
  const size_t n = mf.size();
  // union-find over src nodes [0, n) and dst nodes [n, 2n)
  std::vector<size_t> parent(2 * n);
  for (size_t i = 0; i < 2 * n; ++i) parent[i] = i;
  auto find = [&](size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!mf.phi[i][j].is_zero()) unite(i, n + j);
      if (!mf.psi[j][i].is_zero()) unite(i, n + j);
    }

  std::vector<Block> blocks;
  std::vector<long> block_of(2 * n, -1);
  for (size_t i = 0; i < n; ++i) {  // sweep src indices so block order is deterministic
    size_t root = find(i);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<size_t>(block_of[root])].src.push_back(i);
  }
  for (size_t j = 0; j < n; ++j) {
    size_t root = find(n + j);
    if (block_of[root] < 0) {
      // a dst index connected to no src: cannot happen for a factorization of
      // a nonzero delta (every column of psi is nonzero)
      block_of[root] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<size_t>(block_of[root])].dst.push_back(j);
  }
  for (Block& b : blocks) {
    assert(b.src.size() == b.dst.size());
    b.mf.phi.assign(b.src.size(), std::vector<SigmaPoly>(b.dst.size()));
    b.mf.psi.assign(b.dst.size(), std::vector<SigmaPoly>(b.src.size()));
    for (size_t i = 0; i < b.src.size(); ++i)
      for (size_t j = 0; j < b.dst.size(); ++j) {
        b.mf.phi[i][j] = mf.phi[b.src[i]][b.dst[j]];
        b.mf.psi[j][i] = mf.psi[b.dst[j]][b.src[i]];
      }
  }
  return blocks;
}

namespace {

bool is_unit_entry(const SigmaPoly& f) {
  return f.term_count() == 1 && !f.coeff({0, 0}).is_zero();
}

// Find a unit entry; returns {row, col, true} or found = false.
struct UnitPos {
  size_t r = 0, c = 0;
  bool found = false;
};
UnitPos find_unit(const SigmaMatrix& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j)
      if (is_unit_entry(m[i][j])) return {i, j, true};
  return {};
}

void drop_index(SigmaMatrix& m, size_t row, size_t col) {
  m.erase(m.begin() + static_cast<long>(row));
  for (auto& r : m) r.erase(r.begin() + static_cast<long>(col));
}

// Split the trivial summand at the unit entry a[r][c], applying the paired
// inverse operations to b so that (a, b) stays a factorization.
void split_at_unit(SigmaMatrix& a, SigmaMatrix& b, size_t r, size_t c) {
  const CycNum unit = a[r][c].coeff({0, 0});
  const CycNum inv = unit.inverse();
  const size_t n = a.size();
  // Clear column c of a with row operations row_i(a) -= f * row_r(a); the
  // paired transformation keeps (a, b) a factorization: a -> E a, b -> b E^{-1}
  // with E = I - f e_{i r}.
  for (size_t i = 0; i < n; ++i) {
    if (i == r || a[i][c].is_zero()) continue;
    SigmaPoly f = a[i][c].scaled(inv);
    for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    // b -> b * E^{-1} with E = I - f e_{i r}, so column r of b gains f * column i.
    for (size_t j = 0; j < n; ++j) b[j][r] += f * b[j][i];
  }
  // clear row r of a with column operations: col_j(a) -= f col_c(a) pairs with
  // row_c(b) += f row_j(b) via a -> a F, b -> F^{-1} b, F = I - f e_{c j}.
  for (size_t j = 0; j < n; ++j) {
    if (j == c || a[r][j].is_zero()) continue;
    SigmaPoly f = a[r][j].scaled(inv);
    for (size_t i = 0; i < n; ++i) a[i][j] -= a[i][c] * f;
    for (size_t i = 0; i < n; ++i) b[c][i] += f * b[j][i];
  }
  drop_index(a, r, c);
  drop_index(b, c, r);
}

}  // namespace

ReducedBlock stable_reduce(const Block& blk, const SigmaPoly& delta) {
  ReducedBlock out;
  out.mf = blk.mf;
  for (;;) {
    UnitPos up = find_unit(out.mf.phi);
    if (up.found) {
      split_at_unit(out.mf.phi, out.mf.psi, up.r, up.c);
      ++out.split_free;
      continue;
    }
    up = find_unit(out.mf.psi);
    if (up.found) {
      split_at_unit(out.mf.psi, out.mf.phi, up.r, up.c);
      ++out.split_rmoddelta;
      continue;
    }
    break;
  }
  check_mf_identity(out.mf, delta, "stable_reduce");
  return out;
}

int weighted_degree(const SigmaPoly& f, unsigned m, unsigned q) {
  int deg = -1;
  for (const auto& [mono, c] : f.terms()) {
    (void)c;
    const int d = static_cast<int>(2 * q) * mono.first + static_cast<int>(m) * mono.second;
    if (deg == -1)
      deg = d;
    else if (deg != d)
      return -2;
  }
  return deg;
}

}  // namespace discmf
