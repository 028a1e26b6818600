#include "report/report.h"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "errors.h"

namespace discmf {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::vector<std::vector<std::string>> matrix_strings(const SigmaMatrix& m) {
  std::vector<std::vector<std::string>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<std::string> r;
    r.reserve(row.size());
    for (const SigmaPoly& e : row) r.push_back(to_string_sigma(e));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

unsigned max_m_bound() {
  if (const char* env = std::getenv("DISCMF_MAX_M")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 2 && v <= 1000) return static_cast<unsigned>(v);
  }
  return 24;
}

Report build_report(unsigned m, unsigned p, bool with_timing) {
  if (m > max_m_bound()) {
    std::ostringstream os;
    os << "m = " << m << " exceeds the configured bound " << max_m_bound()
       << " (override with DISCMF_MAX_M)";
    throw InadmissiblePair(os.str());
  }
  Report r;
  r.with_timing = with_timing;
  const Clock::time_point t_total = Clock::now();

  Clock::time_point t0 = Clock::now();
  Group g(m, p);
  if (with_timing) r.timing_ms["group"] = ms_since(t0);

  t0 = Clock::now();
  RepTable reps(g);
  if (with_timing) r.timing_ms["reps"] = ms_since(t0);

  t0 = Clock::now();
  Decomposition dec = decompose_group(g, reps);
  if (with_timing) r.timing_ms["decompose"] = ms_since(t0);

  r.m = m;
  r.p = p;
  r.order = g.order();
  r.regime = dec.regime;
  r.sigma1 = to_string_xy(g.frame().sigma1_xy());
  r.sigma2 = to_string_xy(g.frame().sigma2_xy());
  r.z = to_string_xy(g.z());
  r.j = to_string_xy(g.j());
  r.delta = to_string_sigma(g.delta());
  for (const HyperplaneOrbit& o : g.orbits()) {
    OrbitReport orr;
    orr.name = o.name;
    orr.e = o.e;
    orr.alpha = to_string_xy(g.hyperplanes()[o.members.front()].alpha);
    orr.j_orbit = to_string_xy(o.j_orbit);
    orr.delta_orbit = to_string_sigma(o.delta_orbit);
    r.orbits.push_back(std::move(orr));
  }
  for (const ComponentResult& c : dec.components) {
    ComponentReport cr;
    cr.irrep = c.label;
    cr.twist = c.twist_label;
    cr.dim = c.dim;
    cr.src_degrees = c.src_degrees;
    cr.dst_degrees = c.dst_degrees;
    cr.phi = matrix_strings(c.mf.phi);
    cr.psi = matrix_strings(c.mf.psi);
    cr.classes = c.classes;
    r.components.push_back(std::move(cr));
  }
  r.aggregate = dec.aggregate;

  PredictedMultiset pred = theorem_predicted_multiset(m, p);
  TheoremCheck chk = check_against_theorem(dec, pred);
  r.predicted = pred.classes;
  r.match = chk.match;
  r.free_found = chk.free_found;
  r.free_predicted = chk.free_predicted;
  r.diffs = chk.diffs;
  if (with_timing) r.timing_ms["total"] = ms_since(t_total);
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "group: G(" << r.m << "," << r.p << ",2)  order " << r.order << "  singularity "
     << r.regime << "\n";
  os << "invariants:\n";
  os << "  sigma1 = " << r.sigma1 << "\n";
  os << "  sigma2 = " << r.sigma2 << "\n";
  os << "  z = " << r.z << "\n";
  os << "  j = " << r.j << "\n";
  os << "  delta = " << r.delta << "\n";
  for (const OrbitReport& o : r.orbits)
    os << "  orbit " << o.name << ": e = " << o.e << ", alpha = " << o.alpha
       << ", j_orbit = " << o.j_orbit << ", delta_orbit = " << o.delta_orbit << "\n";
  os << "components:\n";
  for (const ComponentReport& c : r.components) {
    os << "  irrep " << c.irrep << " (dim " << c.dim << ") -> " << c.twist << "\n";
    auto degs = [&os](const char* tag, const std::vector<int>& v) {
      os << "    " << tag << " degrees:";
      for (int d : v) os << " " << d;
      os << "\n";
    };
    degs("source", c.src_degrees);
    degs("target", c.dst_degrees);
    auto mat = [&os](const char* tag, const std::vector<std::vector<std::string>>& m) {
      os << "    " << tag << ":\n";
      for (const auto& row : m) {
        os << "      [";
        for (size_t i = 0; i < row.size(); ++i) {
          if (i) os << ", ";
          os << row[i];
        }
        os << "]\n";
      }
    };
    mat("z-matrix", c.phi);
    mat("j-matrix", c.psi);
    os << "    classes:";
    for (const std::string& s : c.classes) os << " " << s;
    os << "\n";
  }
  os << "aggregate:";
  for (const auto& [k, v] : r.aggregate) os << " " << k << ":" << v;
  os << "\n";
  os << "predicted:";
  for (const auto& [k, v] : r.predicted) os << " " << k << ":" << v;
  os << " (plus FreeR:" << r.free_predicted << " tracked separately)\n";
  if (!r.diffs.empty()) {
    os << "differences:\n";
    for (const std::string& d : r.diffs) os << "  " << d << "\n";
  }
  if (r.with_timing) {
    os << "timing_ms:";
    for (const auto& [k, v] : r.timing_ms) os << " " << k << "=" << v;
    os << "\n";
  }
  os << "theorem match: " << (r.match ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json doc;
  doc["group"] = {{"m", r.m}, {"p", r.p}, {"order", r.order}};
  doc["regime"] = r.regime;
  nlohmann::ordered_json inv;
  inv["sigma1"] = r.sigma1;
  inv["sigma2"] = r.sigma2;
  inv["z"] = r.z;
  inv["j"] = r.j;
  inv["delta"] = r.delta;
  inv["orbits"] = nlohmann::ordered_json::array();
  for (const OrbitReport& o : r.orbits)
    inv["orbits"].push_back({{"name", o.name},
                             {"e", o.e},
                             {"alpha", o.alpha},
                             {"j_orbit", o.j_orbit},
                             {"delta_orbit", o.delta_orbit}});
  doc["invariants"] = std::move(inv);
  doc["components"] = nlohmann::ordered_json::array();
  for (const ComponentReport& c : r.components) {
    nlohmann::ordered_json jc;
    jc["irrep"] = c.irrep;
    jc["twist"] = c.twist;
    jc["dim"] = c.dim;
    jc["src_degrees"] = c.src_degrees;
    jc["dst_degrees"] = c.dst_degrees;
    jc["phi"] = c.phi;
    jc["psi"] = c.psi;
    jc["classes"] = c.classes;
    doc["components"].push_back(std::move(jc));
  }
  doc["aggregate"] = r.aggregate;
  nlohmann::ordered_json thm;
  thm["predicted"] = r.predicted;
  thm["free_found"] = r.free_found;
  thm["free_predicted"] = r.free_predicted;
  thm["match"] = r.match;
  thm["diffs"] = r.diffs;
  doc["theorem"] = std::move(thm);
  if (r.with_timing) doc["timing_ms"] = r.timing_ms;
  return doc.dump(2) + "\n";
}

VerifySummary verify_range(const VerifyOptions& opts) {
  const std::vector<std::pair<unsigned, unsigned>> pairs =
      admissible_pairs(opts.m_max, opts.p_filter);
  struct Row {
    std::string line;
    bool match = false;
  };
  std::vector<Row> rows(pairs.size());

  auto run_one = [&](size_t idx) {
    const auto [m, p] = pairs[idx];
    const Clock::time_point t0 = Clock::now();
    std::ostringstream os;
    bool ok = false;
    try {
      Report rep = build_report(m, p, false);
      std::uint64_t agg_size = 0, pred_size = 0;
      for (const auto& [k, v] : rep.aggregate)
        if (k != "FreeR") agg_size += v;
      for (const auto& [k, v] : rep.predicted) pred_size += v;
      os << "G(" << m << "," << p << ",2) regime=" << rep.regime << " summands=" << agg_size
         << " predicted=" << pred_size << " free=" << rep.free_found << " match="
         << (rep.match ? "yes" : "no");
      ok = rep.match;
    } catch (const std::exception& e) {
      os << "G(" << m << "," << p << ",2) error: " << e.what();
    }
    if (opts.with_timing) os << " time_ms=" << ms_since(t0);
    rows[idx] = {os.str(), ok};
  };

  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < pairs.size(); ++i) run_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&]() {
        for (;;) {
          const size_t i = next.fetch_add(1);
          if (i >= pairs.size()) return;
          run_one(i);
        }
      });
    for (std::thread& th : pool) th.join();
  }

  VerifySummary out;
  out.all_match = true;
  std::ostringstream table;
  for (const Row& row : rows) {
    table << row.line << "\n";
    out.all_match = out.all_match && row.match;
  }
  table << (out.all_match ? "all pairs match" : "MISMATCH in at least one pair") << "\n";
  out.table = table.str();
  return out;
}

std::string specht_listing(unsigned m, unsigned p, const std::string& shape_text) {
  if (m > max_m_bound()) {
    std::ostringstream os;
    os << "m = " << m << " exceeds the configured bound " << max_m_bound()
       << " (override with DISCMF_MAX_M)";
    throw InadmissiblePair(os.str());
  }
  Group g(m, p);
  RepTable reps(g);
  std::optional<Shape> shape = parse_shape(shape_text, m);
  if (!shape) throw InadmissiblePair("unrecognized shape: " + shape_text);

  std::ostringstream os;
  os << "group G(" << m << "," << p << ",2), shape " << shape->label() << "\n";
  os << "fillings:\n";
  for (const Tableau& t : standard_tableaux(*shape)) {
    os << "  " << t.str() << "  word:";
    for (int w : reading_word(t)) os << " " << w;
    os << "  index:";
    for (int i : word_index(t)) os << " " << i;
    os << "\n";
  }
  for (const Tableau& S : standard_tableaux(*shape))
    for (const Tableau& T : standard_tableaux(*shape))
      os << "  Delta[" << S.str() << " ; " << T.str()
         << "] = " << to_string_xy(specht_polynomial(S, T, m)) << "\n";

  const bool splits = shape->kind == ShapeKind::kTwoCell && p % 2 == 0 &&
                      (shape->j - shape->i) == static_cast<int>(m / 2);
  os << "classes:\n";
  for (int l = splits ? 0 : -1; l <= (splits ? 1 : -1); ++l) {
    const size_t idx = reps.class_of(*shape, l);
    const HIrrep& ir = reps.irreps()[idx];
    os << "  " << ir.label << " (dim " << ir.dim << ", orbit size " << ir.b << "):\n";
    IsotypicBasis basis = isotypic_basis(g, ir);
    for (const BasisVector& v : basis.vectors)
      os << "    deg " << v.degree << "  " << to_string_xy(v.poly) << "   [" << v.origin << "]\n";
  }
  return os.str();
}

}  // namespace discmf
