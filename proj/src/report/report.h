#pragma once
// End-user facing results: a self-contained report of one group's
// decomposition, text / JSON renderings, and the range-verification driver.
// All output is deterministic; wall-clock timings only appear when asked for.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "classify/classify.h"

namespace discmf {

struct OrbitReport {
  std::string name;
  unsigned e = 0;
  std::string alpha;        // one defining form from the orbit
  std::string j_orbit;      // product of the orbit's forms (in x, y)
  std::string delta_orbit;  // its e-th power in the invariants
};

struct ComponentReport {
  std::string irrep;
  std::string twist;
  unsigned dim = 0;
  std::vector<int> src_degrees, dst_degrees;
  std::vector<std::vector<std::string>> phi, psi;  // entries in s1, s2
  std::vector<std::string> classes;
};

struct Report {
  unsigned m = 0, p = 0;
  std::uint64_t order = 0;
  std::string regime;
  std::string sigma1, sigma2, z, j, delta;  // z, j in x,y; delta in s1,s2
  std::vector<OrbitReport> orbits;
  std::vector<ComponentReport> components;
  std::map<std::string, unsigned> aggregate;            // includes FreeR
  std::map<std::string, unsigned> predicted;            // without FreeR
  unsigned free_found = 0, free_predicted = 0;
  bool match = false;
  std::vector<std::string> diffs;
  bool with_timing = false;
  std::map<std::string, std::int64_t> timing_ms;
};

// Full pipeline for one admissible pair.  Throws InadmissiblePair /
// MFIdentityFailure / Unclassified; enforces the configured bound on m.
Report build_report(unsigned m, unsigned p, bool with_timing = false);

std::string render_text(const Report& r);
std::string render_json(const Report& r);  // schema/report.schema.json describes this

struct VerifyOptions {
  unsigned m_max = 0;
  unsigned p_filter = 0;  // 0 = all
  unsigned jobs = 1;
  bool with_timing = false;
};

struct VerifySummary {
  std::string table;  // one line per admissible pair
  bool all_match = false;
};

VerifySummary verify_range(const VerifyOptions& opts);

// Listing of the polynomial basis data for one shape (the CLI `specht` view).
std::string specht_listing(unsigned m, unsigned p, const std::string& shape);

// Largest m accepted, honoring the DISCMF_MAX_M environment override.
unsigned max_m_bound();

}  // namespace discmf
