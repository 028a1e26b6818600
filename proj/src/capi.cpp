// C boundary: exceptions from the core are mapped onto status codes here and
// never cross into the caller.

#include "discmf/discmf.h"

#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "errors.h"
#include "report/report.h"

struct discmf_report {
  discmf::Report rep;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
discmf_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const discmf::InadmissiblePair& e) {
    g_last_error = e.what();
    return DISCMF_ERR_USAGE;
  } catch (const discmf::Unclassified& e) {
    g_last_error = e.what();
    return DISCMF_ERR_UNCLASSIFIED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DISCMF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DISCMF_ERR_INTERNAL;
  }
}

discmf_status usage(const char* msg) {
  g_last_error = msg;
  return DISCMF_ERR_USAGE;
}

}  // namespace

extern "C" {

discmf_status discmf_decompose(unsigned m, unsigned p, int with_timing,
                               discmf_report** out) {
  if (!out) return usage("null output pointer");
  *out = nullptr;
  return guarded([&]() {
    discmf::Report r = discmf::build_report(m, p, with_timing != 0);
    *out = new discmf_report{std::move(r)};
    return DISCMF_OK;
  });
}

discmf_status discmf_report_render(const discmf_report* report,
                                   const char* format, char** out) {
  if (!report || !format || !out) return usage("null argument");
  *out = nullptr;
  const std::string fmt = format;
  if (fmt != "text" && fmt != "json")
    return usage("format must be \"text\" or \"json\"");
  return guarded([&]() {
    const std::string body = fmt == "json" ? discmf::render_json(report->rep)
                                           : discmf::render_text(report->rep);
    *out = dup_string(body);
    return DISCMF_OK;
  });
}

discmf_status discmf_report_theorem_match(const discmf_report* report,
                                          int* out) {
  if (!report || !out) return usage("null argument");
  *out = report->rep.match ? 1 : 0;
  return DISCMF_OK;
}

void discmf_report_free(discmf_report* report) { delete report; }

void discmf_string_free(char* s) { delete[] s; }

discmf_status discmf_verify_range(unsigned m_max, unsigned p_filter,
                                  unsigned jobs, int with_timing, char** table,
                                  int* all_match) {
  if (!table || !all_match) return usage("null output pointer");
  *table = nullptr;
  *all_match = 0;
  if (m_max < 2) return usage("m_max must be at least 2");
  if (m_max > discmf::max_m_bound())
    return usage("m_max exceeds the configured bound (override with DISCMF_MAX_M)");
  return guarded([&]() {
    discmf::VerifyOptions opts;
    opts.m_max = m_max;
    opts.p_filter = p_filter;
    opts.jobs = jobs == 0 ? 1 : jobs;
    opts.with_timing = with_timing != 0;
    discmf::VerifySummary s = discmf::verify_range(opts);
    *table = dup_string(s.table);
    *all_match = s.all_match ? 1 : 0;
    return DISCMF_OK;
  });
}

discmf_status discmf_specht_listing(unsigned m, unsigned p, const char* shape,
                                    char** out) {
  if (!shape || !out) return usage("null argument");
  *out = nullptr;
  return guarded([&]() {
    *out = dup_string(discmf::specht_listing(m, p, shape));
    return DISCMF_OK;
  });
}

const char* discmf_strerror(discmf_status status) {
  switch (status) {
    case DISCMF_OK:
      return "ok";
    case DISCMF_ERR_USAGE:
      return "usage error";
    case DISCMF_ERR_UNCLASSIFIED:
      return "summand matched no canonical form";
    case DISCMF_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* discmf_last_error(void) { return g_last_error.c_str(); }

unsigned discmf_max_m(void) { return discmf::max_m_bound(); }

}  // extern "C"
