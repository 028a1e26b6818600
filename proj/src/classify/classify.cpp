#include "classify/classify.h"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "errors.h"
#include "exact/linsolve.h"

namespace discmf {

namespace {

SigmaPoly s1pow(int k) { return SigmaPoly::monomial(k, 0); }
SigmaPoly s2() { return SigmaPoly::monomial(0, 1); }
SigmaPoly constant(long v) { return SigmaPoly(CycNum(v)); }

MFPair pair1(const SigmaPoly& f, const SigmaPoly& g) { return {{{f}}, {{g}}}; }

MFPair pair2(SigmaPoly a11, SigmaPoly a12, SigmaPoly a21, SigmaPoly a22, SigmaPoly b11,
             SigmaPoly b12, SigmaPoly b21, SigmaPoly b22) {
  return {{{std::move(a11), std::move(a12)}, {std::move(a21), std::move(a22)}},
          {{std::move(b11), std::move(b12)}, {std::move(b21), std::move(b22)}}};
}

SigmaPoly det2(const SigmaMatrix& m) {
  if (m.size() == 1) return m[0][0];
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

// f = c * g for some nonzero constant c?
bool proportional(const SigmaPoly& f, const SigmaPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.term_count() != g.term_count()) return false;
  auto it = f.terms().begin();
  const CycNum lead = g.coeff(it->first);
  if (lead.is_zero()) return false;
  return f == g.scaled(it->second * lead.inverse());
}

}  // namespace

const CanonicalEntry* CanonicalList::find(const std::string& name) const {
  for (const CanonicalEntry& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

CanonicalList canonical_list(unsigned m, unsigned p) {
  const unsigned q = m / p;
  (void)q;
  CanonicalList list;
  const int pi = static_cast<int>(p), mi = static_cast<int>(m);

  auto add = [&list](std::string name, MFPair mf, std::vector<std::string> ex = {}) {
    check_mf_identity(mf, list.delta, "canonical " + name);
    list.entries.push_back({std::move(name), std::move(mf), std::move(ex)});
  };

  if (p == 1) {
    list.regime = "A3";
    list.delta = s1pow(1) * (s2() * s2() - constant(4) * s1pow(1));
    add("FreeR", pair1(constant(1), list.delta));
    add("RmodDelta", pair1(list.delta, constant(1)));
    add("A", pair1(s1pow(1), s2() * s2() - constant(4) * s1pow(1)));
    add("B", pair1(s2() * s2() - constant(4) * s1pow(1), s1pow(1)));
    add("X", pair2(constant(2) * s1pow(1), s1pow(1) * s2(), s2(), constant(2) * s1pow(1),
                   constant(-2) * s1pow(1), s1pow(1) * s2(), s2(), constant(-2) * s1pow(1)));
    return list;
  }

  if (p < m) {
    list.regime = "D" + std::to_string(p + 2);
    const SigmaPoly disc = s2() * s2() - constant(4) * s1pow(pi);
    list.delta = s1pow(1) * disc;
    add("FreeR", pair1(constant(1), list.delta));
    add("RmodDelta", pair1(list.delta, constant(1)));
    add("A", pair1(s1pow(1), disc));
    add("B", pair1(disc, s1pow(1)));
    for (int j = 1; j <= pi; ++j) {
      add("X_" + std::to_string(j),
          pair2(s2(), constant(2) * s1pow(j), constant(2) * s1pow(pi + 1 - j), s1pow(1) * s2(),
                s1pow(1) * s2(), constant(-2) * s1pow(j), constant(-2) * s1pow(pi + 1 - j),
                s2()));
    }
    auto kpair = [&](int j) {
      return pair2(s2(), constant(2) * s1pow(j), constant(2) * s1pow(pi - j), s2(),
                   s1pow(1) * s2(), constant(-2) * s1pow(j + 1), constant(-2) * s1pow(pi + 1 - j),
                   s1pow(1) * s2());
    };
    auto npair = [&](int j) {
      MFPair k = kpair(j);
      return MFPair{k.psi, k.phi};
    };
    for (int j = 1; 2 * j < pi; ++j) {
      add("K_" + std::to_string(j), kpair(j));
      add("N_" + std::to_string(j), npair(j));
    }
    if (p % 2 == 0) {
      const int h = pi / 2;
      const SigmaPoly dp = s2() + constant(2) * s1pow(h);  // vanishes on the "+" branch pair
      const SigmaPoly dm = s2() - constant(2) * s1pow(h);
      add("C_plus", pair1(s1pow(1) * dp, dm));
      add("C_minus", pair1(s1pow(1) * dm, dp));
      add("D_plus", pair1(dm, s1pow(1) * dp));
      add("D_minus", pair1(dp, s1pow(1) * dm));
      add("K_" + std::to_string(h), kpair(h), {"D_plus", "D_minus"});
      add("N_" + std::to_string(h), npair(h), {"C_plus", "C_minus"});
    }
    return list;
  }

  // p = m
  list.regime = "A" + std::to_string(m - 1);
  list.delta = s2() * s2() - constant(4) * s1pow(mi);
  add("FreeR", pair1(constant(1), list.delta));
  add("RmodDelta", pair1(list.delta, constant(1)));
  auto xpair = [&](int j) {
    return pair2(s2(), constant(2) * s1pow(mi - j), constant(2) * s1pow(j), s2(), s2(),
                 constant(-2) * s1pow(mi - j), constant(-2) * s1pow(j), s2());
  };
  for (int j = 1; 2 * j < mi; ++j) add("X_" + std::to_string(j), xpair(j));
  if (m % 2 == 0) {
    const int h = mi / 2;
    const SigmaPoly dp = s2() + constant(2) * s1pow(h);
    const SigmaPoly dm = s2() - constant(2) * s1pow(h);
    add("N_plus", pair1(dp, dm));
    add("N_minus", pair1(dm, dp));
    add("X_" + std::to_string(h), xpair(h), {"N_plus", "N_minus"});
  }
  return list;
}

bool constant_equivalent(const MFPair& a, const MFPair& b) {
  const size_t n = a.size();
  if (b.size() != n) return false;

  // Unknowns: S (n x n) then U (n x n); constraints
  //   b.phi * U - S * a.phi = 0   and   b.psi * S - U * a.psi = 0.
  const size_t nu = 2 * n * n;
  auto S_at = [n](size_t i, size_t k) { return i * n + k; };
  auto U_at = [n](size_t k, size_t j) { return n * n + k * n + j; };

  std::vector<std::vector<CycNum>> rows;
  auto emit = [&](const SigmaMatrix& left, const SigmaMatrix& right, bool phi_side) {
    // phi side: sum_k left[i][k] U[k][j] - sum_k S[i][k] right[k][j] = 0
    // psi side: sum_k left[i][k] S[k][j] - sum_k U[i][k] right[k][j] = 0
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        // collect every monomial appearing in this entry equation
        std::map<Monomial, std::vector<CycNum>> eq;  // monomial -> row
        auto touch = [&](const SigmaPoly& f) {
          for (const auto& [mono, c] : f.terms()) {
            (void)c;
            if (!eq.count(mono)) eq[mono] = std::vector<CycNum>(nu);
          }
        };
        for (size_t k = 0; k < n; ++k) {
          touch(left[i][k]);
          touch(right[k][j]);
        }
        for (size_t k = 0; k < n; ++k) {
          for (const auto& [mono, c] : left[i][k].terms())
            eq[mono][phi_side ? U_at(k, j) : S_at(k, j)] += c;
          for (const auto& [mono, c] : right[k][j].terms()) {
            auto& cell = eq[mono][phi_side ? S_at(i, k) : U_at(i, k)];
            cell -= c;
          }
        }
        for (auto& [mono, row] : eq) rows.push_back(std::move(row));
      }
  };
  emit(b.phi, a.phi, true);
  emit(b.psi, a.psi, false);

  DenseMatrix<CycNum> space = nullspace(std::move(rows), nu);
  if (space.empty()) return false;

  // Search a combination with det S != 0 and det U != 0.  dets have degree
  // <= 2 in each coordinate, so a 5-point grid per coordinate is conclusive.
  auto det_of = [&](const std::vector<CycNum>& v, bool upper) {
    const size_t off = upper ? n * n : 0;
    if (n == 1) return v[off];
    return v[off] * v[off + 3] - v[off + 1] * v[off + 2];
  };
  const size_t dim = space.size();
  std::vector<int> t(dim, -2);
  for (;;) {
    bool all_zero = true;
    for (int v : t)
      if (v) all_zero = false;
    if (!all_zero) {
      std::vector<CycNum> comb(nu);
      for (size_t d = 0; d < dim; ++d) {
        if (!t[d]) continue;
        const CycNum f(static_cast<long>(t[d]));
        for (size_t c = 0; c < nu; ++c) comb[c] += space[d][c] * f;
      }
      if (!det_of(comb, false).is_zero() && !det_of(comb, true).is_zero()) return true;
    }
    size_t pos = 0;
    while (pos < dim && t[pos] == 2) t[pos++] = -2;
    if (pos == dim) break;
    ++t[pos];
  }
  return false;
}

std::string classify_block(const MFPair& block, const CanonicalList& list,
                           const std::string& context) {
  std::vector<std::string> matches;
  const SigmaPoly dphi = det2(block.phi), dpsi = det2(block.psi);
  for (const CanonicalEntry& e : list.entries) {
    if (e.mf.size() != block.size()) continue;
    if (!proportional(det2(e.mf.phi), dphi) || !proportional(det2(e.mf.psi), dpsi)) continue;
    if (constant_equivalent(block, e.mf)) matches.push_back(e.name);
  }
  if (matches.size() == 1) return matches.front();
  std::ostringstream os;
  os << context << ": block of size " << block.size();
  if (matches.empty())
    os << " matches no canonical form";
  else {
    os << " matches several canonical forms:";
    for (const std::string& s : matches) os << " " << s;
  }
  throw Unclassified(os.str());
}

Decomposition decompose_group(const Group& g, const RepTable& reps) {
  Decomposition out;
  out.m = g.m();
  out.p = g.p();
  CanonicalList list = canonical_list(g.m(), g.p());
  out.regime = list.regime;

  // Precompute all isotypic bases once (each is used as source and as target).
  std::vector<IsotypicBasis> bases;
  bases.reserve(reps.irreps().size());
  for (const HIrrep& ir : reps.irreps()) bases.push_back(isotypic_basis(g, ir));

  for (size_t idx = 0; idx < reps.irreps().size(); ++idx) {
    const HIrrep& ir = reps.irreps()[idx];
    const size_t tw = reps.det_twist(idx);
    ComponentResult comp;
    comp.irrep = idx;
    comp.label = ir.label;
    comp.twist_label = reps.irreps()[tw].label;
    comp.dim = ir.dim;
    comp.src_degrees = bases[idx].degrees();
    comp.dst_degrees = bases[tw].degrees();
    comp.mf.phi = restriction_matrix(g.frame(), g.z(), bases[idx].polys(), bases[tw].polys());
    comp.mf.psi = restriction_matrix(g.frame(), g.j(), bases[tw].polys(), bases[idx].polys());
    check_mf_identity(comp.mf, g.delta(), "component " + ir.label);

    for (const Block& blk : block_split(comp.mf)) {
      ReducedBlock red = stable_reduce(blk, g.delta());
      if (red.mf.size() > 0)
        comp.classes.push_back(
            classify_block(red.mf, list, "G(" + std::to_string(g.m()) + "," +
                                             std::to_string(g.p()) + ",2) " + ir.label));
      for (unsigned t = 0; t < red.split_free; ++t) comp.classes.push_back("FreeR");
      for (unsigned t = 0; t < red.split_rmoddelta; ++t) comp.classes.push_back("RmodDelta");
    }
    for (const std::string& cls : comp.classes) {
      const CanonicalEntry* e = list.find(cls);
      if (e && !e->expands_to.empty())
        for (const std::string& sub : e->expands_to) ++out.aggregate[sub];
      else
        ++out.aggregate[cls];
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

PredictedMultiset theorem_predicted_multiset(unsigned m, unsigned p) {
  if (!is_admissible(m, p)) throw InadmissiblePair("theorem_predicted_multiset");
  PredictedMultiset out;
  const unsigned q = m / p;
  auto choose2 = [](unsigned n) { return n < 2 ? 0u : n * (n - 1) / 2; };

  if (p == 1) {
    out.regime = "A3";
    out.classes["A"] = 1;
    out.classes["B"] = 2 * choose2(m - 1) + (m - 1);
    out.classes["X"] = 2 * m - 2;
    out.classes["RmodDelta"] = 1;
    out.free_count = (m - 1) + 2 * choose2(m - 1);
    return out;
  }
  if (p < m) {
    out.regime = "D" + std::to_string(p + 2);
    for (unsigned jdx = 1; jdx <= p; ++jdx) out.classes["X_" + std::to_string(jdx)] = 2 * (q - 1);
    const unsigned kmax = (p % 2 == 0) ? (p - 2) / 2 : (p - 1) / 2;
    for (unsigned jdx = 1; jdx <= kmax; ++jdx) {
      out.classes["K_" + std::to_string(jdx)] = 2 * (q - 1) * (q - 1);
      out.classes["N_" + std::to_string(jdx)] = 2;
    }
    out.classes["A"] = 1;
    out.classes["B"] = (q - 1) + 2 * choose2(q - 1);
    out.classes["RmodDelta"] = 1;
    if (p % 2 == 0) {
      out.classes["C_plus"] = 1;
      out.classes["C_minus"] = 1;
      out.classes["D_plus"] = (q - 1) * (q - 1);
      out.classes["D_minus"] = (q - 1) * (q - 1);
    }
    // prune zero entries (q = 2 gives empty K rows etc. only when the count is 0)
    for (auto it = out.classes.begin(); it != out.classes.end();)
      it = it->second == 0 ? out.classes.erase(it) : std::next(it);
    out.free_count = (q - 1) + 2 * choose2(q - 1);
    return out;
  }
  out.regime = "A" + std::to_string(m - 1);
  const unsigned xmax = (m % 2 == 0) ? (m - 2) / 2 : (m - 1) / 2;
  for (unsigned jdx = 1; jdx <= xmax; ++jdx) out.classes["X_" + std::to_string(jdx)] = 2;
  if (m % 2 == 0) {
    out.classes["N_plus"] = 1;
    out.classes["N_minus"] = 1;
  }
  out.classes["RmodDelta"] = 1;
  out.free_count = 1;
  return out;
}

TheoremCheck check_against_theorem(const Decomposition& d, const PredictedMultiset& pred) {
  TheoremCheck out;
  out.free_predicted = pred.free_count;
  std::map<std::string, unsigned> found = d.aggregate;
  auto fit = found.find("FreeR");
  if (fit != found.end()) {
    out.free_found = fit->second;
    found.erase(fit);
  }
  out.match = (found == pred.classes);
  if (!out.match) {
    std::map<std::string, std::pair<unsigned, unsigned>> merged;
    for (const auto& [k, v] : found) merged[k].first = v;
    for (const auto& [k, v] : pred.classes) merged[k].second = v;
    for (const auto& [k, v] : merged)
      if (v.first != v.second) {
        std::ostringstream os;
        os << k << ": found " << v.first << ", predicted " << v.second;
        out.diffs.push_back(os.str());
      }
  }
  if (out.free_found != out.free_predicted) {
    std::ostringstream os;
    os << "FreeR (tracked separately): found " << out.free_found << ", predicted "
       << out.free_predicted;
    out.diffs.push_back(os.str());
  }
  return out;
}

}  // namespace discmf
