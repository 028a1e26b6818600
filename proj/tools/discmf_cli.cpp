// discmf command line tool.  Talks to the library exclusively through the C
// interface so it doubles as a smoke test of the shared-library boundary.
//
// Exit codes: 0 success, 1 usage / inadmissible input (and, for `verify`, any
// mismatch), 2 a summand could not be classified, 3 internal error.

#include <cstdio>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "discmf/discmf.h"

namespace {

int status_exit_code(discmf_status st) {
  switch (st) {
    case DISCMF_OK:
      return 0;
    case DISCMF_ERR_USAGE:
      return 1;
    case DISCMF_ERR_UNCLASSIFIED:
      return 2;
    default:
      return 3;
  }
}

int fail_with(discmf_status st) {
  const char* msg = discmf_last_error();
  std::fprintf(stderr, "error: %s\n", (msg && *msg) ? msg : discmf_strerror(st));
  return status_exit_code(st);
}

// Writes to the file when a path was given, otherwise to stdout.
int emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(body.c_str(), stdout);
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
    return 1;
  }
  f << body;
  return 0;
}

struct Args {
  unsigned m = 0, p = 0;
  std::string format = "text";
  std::string out_path;
  std::string shape;
  bool timing = false;
  unsigned m_max = 0, p_filter = 0, jobs = 1;
};

int run_decompose(const Args& a) {
  discmf_report* rep = nullptr;
  discmf_status st = discmf_decompose(a.m, a.p, a.timing ? 1 : 0, &rep);
  if (st != DISCMF_OK) return fail_with(st);
  char* text = nullptr;
  st = discmf_report_render(rep, a.format.c_str(), &text);
  if (st != DISCMF_OK) {
    discmf_report_free(rep);
    return fail_with(st);
  }
  std::string body(text);
  discmf_string_free(text);
  discmf_report_free(rep);
  return emit(body, a.out_path);
}

int run_verify(const Args& a) {
  char* table = nullptr;
  int all_match = 0;
  discmf_status st = discmf_verify_range(a.m_max, a.p_filter, a.jobs,
                                         a.timing ? 1 : 0, &table, &all_match);
  if (st != DISCMF_OK) return fail_with(st);
  std::string body(table);
  discmf_string_free(table);
  const int rc = emit(body, a.out_path);
  if (rc != 0) return rc;
  return all_match ? 0 : 1;
}

int run_specht(const Args& a) {
  char* text = nullptr;
  discmf_status st = discmf_specht_listing(a.m, a.p, a.shape.c_str(), &text);
  if (st != DISCMF_OK) return fail_with(st);
  std::string body(text);
  discmf_string_free(text);
  return emit(body, a.out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decomposition of the discriminant matrix factorization "
               "of the reflection groups G(m,p,2)"};
  app.require_subcommand(1);
  Args a;

  CLI::App* dec = app.add_subcommand(
      "decompose", "decompose one group and classify every summand");
  dec->add_option("--m", a.m, "symmetry order m of G(m,p,2)")->required();
  dec->add_option("--p", a.p, "divisor p of m")->required();
  dec->add_option("--format", a.format, "output format (text or json)")
      ->check(CLI::IsMember({"text", "json"}));
  dec->add_option("--out", a.out_path, "write the report to this file");
  dec->add_flag("--timing", a.timing, "include wall-clock stage timings");

  CLI::App* ver = app.add_subcommand(
      "verify", "check every admissible pair up to a bound; exits 0 only if "
                "all match");
  ver->add_option("--m-max", a.m_max, "largest m to check")->required();
  ver->add_option("--p-filter", a.p_filter, "restrict to this p (0 = all)");
  ver->add_option("--jobs", a.jobs, "worker threads (output is identical to "
                                    "a serial run)");
  ver->add_option("--out", a.out_path, "write the table to this file");
  ver->add_flag("--timing", a.timing, "append per-pair wall-clock times");

  CLI::App* sp = app.add_subcommand(
      "specht", "print the tableaux and polynomial basis for one shape");
  sp->add_option("--m", a.m, "symmetry order m of G(m,p,2)")->required();
  sp->add_option("--p", a.p, "divisor p of m")->required();
  sp->add_option("--shape", a.shape, "\"2@i\", \"11@i\" or \"1@i,1@j\"")
      ->required();
  sp->add_option("--out", a.out_path, "write the listing to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (dec->parsed()) return run_decompose(a);
  if (ver->parsed()) return run_verify(a);
  return run_specht(a);
}
