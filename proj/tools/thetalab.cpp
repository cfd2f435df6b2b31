// thetalab: command-line front end for the Theta operator toolkit.
//
// Exit status: 0 success, 1 a check failed, 2 usage or parse error,
// 3 domain error (non-constant sums, no centre, step limit, ...).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "thetalab/thetalab.hpp"
#include "thetalab/verify.hpp"

namespace {

using thetalab::cli::Report;
namespace tl = thetalab;

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kDomain = 3 };

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tl::ParseError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Parses an input file and echoes its path and digest.
tl::MatFile load_input(Report& r, const std::string& path) {
  const auto text = read_text(path);
  r.add("input", path);
  r.add("input_fnv1a64", tl::hex64(tl::fnv1a64(text)));
  return tl::parse_mat(text);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string distance_text(int d) { return d == tl::kInfinite ? "infinite" : std::to_string(d); }

void add_membership(Report& r, const std::string& prefix, const tl::IntMatrix& a) {
  const auto m = tl::classify_membership(a);
  r.add(prefix + "order", a.order());
  r.add(prefix + "kappa", m.kappa ? std::to_string(*m.kappa) : std::string("none"));
  r.add(prefix + "in_Z", m.is_Z_kappa);
  r.add(prefix + "in_D", m.is_D_kappa);
  r.add(prefix + "symmetric", m.is_symmetric);
  r.add(prefix + "zero_diagonal", m.zero_diagonal);
  r.add(prefix + "j2_free", m.j2_free);
}

Report::Rows matrix_rows(const tl::IntMatrix& a) {
  Report::Rows rows;
  std::istringstream in(tl::format_mat(a));
  std::string line;
  std::getline(in, line);  // order line
  while (std::getline(in, line)) rows.push_back(line);
  return rows;
}

void cmd_theta(Report& r, const std::string& input, unsigned iterations, const std::string& out) {
  const auto f = load_input(r, input);
  r.add("iterations", iterations);
  const auto result = tl::theta_iterate(f.matrix, iterations);
  add_membership(r, "result_", result);
  const auto text = tl::format_mat(result);
  r.add("result_fnv1a64", tl::hex64(tl::fnv1a64(text)));
  if (!out.empty()) {
    tl::write_mat_file(out, text);
    r.add("output", out);
  } else {
    r.add_rows("result", matrix_rows(result));
  }
}

void cmd_orbit(Report& r, const std::string& input, std::size_t max_steps) {
  const auto a = tl::to_binary(load_input(r, input));
  r.add("max_steps", max_steps);
  const auto rep = tl::orbit(a, max_steps);
  r.add("order", a.order());
  r.add("kappa", *tl::regular_degree(a));
  r.add("steps", rep.iterates.size() - 1);
  r.add("period", rep.period ? std::to_string(*rep.period) : std::string("none"));
  r.add("preperiod", rep.preperiod);
  r.add("leaves_class_at", rep.leaves_class_at ? std::to_string(*rep.leaves_class_at) : std::string("none"));
  r.add("returns_to_input", rep.returns_to_input());
}

void cmd_classify(Report& r, int kappa, unsigned m, unsigned workers, const std::string& out) {
  r.add("kappa", kappa);
  r.add("m", m);
  r.add("workers", workers);
  const auto result = tl::classify_with_stats(kappa, m, workers);
  r.add("search_nodes", result.stats.nodes);
  r.add("completed_forms", result.stats.completed_forms);
  r.add("labelled_solutions", result.stats.labelled_solutions);
  r.add("classes", result.classes.size());
  Report::Rows rows;
  for (std::size_t i = 0; i < result.classes.size(); ++i) {
    const auto& c = result.classes[i];
    std::string names;
    for (const auto& n : c.names) names += (names.empty() ? "" : ",") + n;
    const auto text = tl::format_mat(c.representative);
    rows.push_back("class " + std::to_string(i + 1) + ": period " + std::to_string(c.fundamental_period) +
                   ", hs_form " + yes_no(c.hs_form) + ", names " + (names.empty() ? "-" : names) + ", fnv1a64 " +
                   tl::hex64(tl::fnv1a64(text)));
    if (!out.empty()) {
      std::filesystem::create_directories(out);
      const auto path = std::filesystem::path(out) / ("class_" + std::to_string(i + 1) + ".mat");
      tl::write_mat_file(path.string(),
                         tl::format_mat(c.representative, {},
                                        {"kappa: " + std::to_string(kappa), "m: " + std::to_string(m),
                                         "fundamental_period: " + std::to_string(c.fundamental_period),
                                         "names: " + (names.empty() ? "-" : names)}));
    }
  }
  r.add_rows("class_list", rows);
  if (!out.empty()) {
    r.add("output_dir", out);
    r.add("summary", (std::filesystem::path(out) / "summary.txt").string());
  }
}

void cmd_props(Report& r, const std::string& input) {
  const auto f = load_input(r, input);
  add_membership(r, "", f.matrix);
  if (!tl::is_binary(f.matrix)) {
    r.add("graph", "n/a (entries outside {0,1})");
    return;
  }
  const tl::BinMatrix a(f.matrix);
  r.add("n_admissible", tl::is_j2_free(a));
  r.add("hs_form", tl::is_hs_form(a));
  if (tl::regular_degree(a) && tl::is_j2_free(a))
    r.add("polarity_form", tl::has_polarity_form(tl::Configuration(a)));
  else
    r.add("polarity_form", "n/a (not a configuration)");
  if (!tl::is_symmetric(a) || !tl::has_zero_diagonal(a)) {
    r.add("graph", "n/a (not symmetric with zero diagonal)");
    return;
  }
  const tl::Graph g(a);
  r.add("girth", distance_text(tl::girth(g)));
  r.add("diameter", distance_text(tl::diameter(g)));
  const auto tc = tl::triangle_census(g);
  r.add("triangles", tc.total);
  Report::Rows free;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (tc.per_vertex[v] == 0) free.push_back(v < f.labels.size() ? f.labels[v] : std::to_string(v));
  r.add_rows("triangle_free_vertices", free);
  r.add("terwilliger_mu1", tl::is_terwilliger(g, 1));
}

int cmd_verify(Report& r, const std::string& suite, std::uint64_t seed, unsigned workers,
               const std::string& corpus_dir, bool stream) {
  if (suite != "paper") throw CLI::ValidationError("--suite", "unknown suite '" + suite + "' (known: paper)");
  r.add("suite", suite);
  r.add("seed", seed);
  r.add("workers", workers);
  if (!corpus_dir.empty()) r.add("corpus_dir", corpus_dir);
  tl::SuiteOptions opt;
  opt.seed = seed;
  opt.workers = workers;
  if (!corpus_dir.empty()) opt.corpus_dir = corpus_dir;
  if (stream)
    opt.on_result = [](const tl::CheckResult& c) {
      std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.seconds << " s)\n";
    };
  const auto results = tl::run_suite(opt);
  Report::Rows rows;
  std::size_t failed = 0;
  for (const auto& c : results) {
    failed += c.passed ? 0 : 1;
    std::ostringstream line;
    line.precision(3);
    line << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << std::fixed << c.seconds << " s] " << c.detail;
    rows.push_back(line.str());
  }
  r.add_rows("checks", rows);
  r.add("passed", results.size() - failed);
  r.add("failed", failed);
  return failed == 0 ? kOk : kCheckFailed;
}

void cmd_export(Report& r, const std::string& name, const std::string& out) {
  const auto m = tl::corpus(name);
  const auto text = tl::corpus_text(name);
  r.add("name", name);
  r.add("order", m.matrix.order());
  r.add("matrix_fnv1a64", tl::hex64(tl::matrix_checksum(m.matrix)));
  r.add("pinned_fnv1a64", tl::hex64(tl::pinned_checksum(name)));
  tl::write_mat_file(out, text);
  r.add("output", out);
}

std::string join_args(int argc, char** argv) {
  std::string s = "thetalab";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

unsigned default_workers() {
  if (const char* env = std::getenv("THETA_LAB_WORKERS")) {
    try {
      const auto v = std::stoul(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta operator toolkit: orbits, solution classification, geometry audits and the reproduction suite"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Render the report as JSON instead of text");

  std::string input, out, name, suite = "paper", corpus_dir;
  unsigned iterations = 1, m = 1;
  std::size_t max_steps = 64;
  int kappa = 0;
  unsigned workers = default_workers();
  std::uint64_t seed = tl::SuiteOptions{}.seed;

  auto* theta = app.add_subcommand("theta", "Apply Theta m times to a mat v1 matrix");
  theta->add_option("input", input, "Input matrix file")->required();
  theta->add_option("--iterations,-m", iterations, "Number of applications (0 copies the input)")->capture_default_str();
  theta->add_option("--out,-o", out, "Write the result here instead of into the report");

  auto* orbit = app.add_subcommand("orbit", "Trace the Theta-orbit of a (0,1)-matrix");
  orbit->add_option("input", input, "Input matrix file")->required();
  orbit->add_option("--max-steps", max_steps, "Give up (exit 3) after this many steps")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Classify solutions of Theta^m(A) = A for kappa 2..4");
  classify->add_option("--kappa,-k", kappa, "Row sum kappa (2, 3 or 4)")->required()->check(CLI::Range(2, 4));
  classify->add_option("--m", m, "Exponent m (1..8)")->required()->check(CLI::Range(1, 8));
  classify->add_option("--workers,-j", workers, "Search threads (default: THETA_LAB_WORKERS or 1)")
      ->check(CLI::Range(1, 256));
  classify->add_option("--out,-o", out, "Directory for class_<i>.mat files and summary.txt");

  auto* props = app.add_subcommand("props", "Membership flags and graph/geometry properties of a matrix");
  props->add_option("input", input, "Input matrix file")->required();

  auto* verify = app.add_subcommand("verify", "Run the reproduction suite");
  verify->add_option("--suite", suite, "Suite name (paper)")->capture_default_str();
  verify->add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();
  verify->add_option("--workers,-j", workers, "Threads for the parallel classification check (default: THETA_LAB_WORKERS or 1)")
      ->check(CLI::Range(1, 256));
  verify->add_option("--corpus-dir", corpus_dir, "Read corpus <name>.mat files from this directory");

  auto* exp = app.add_subcommand("export", "Write a built-in named matrix as a mat v1 file");
  exp->add_option("--name", name, "Corpus name")->required();
  exp->add_option("--out,-o", out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Report report(join_args(argc, argv));
  int status = kOk;
  try {
    if (*theta) {
      cmd_theta(report, input, iterations, out);
    } else if (*orbit) {
      cmd_orbit(report, input, max_steps);
    } else if (*classify) {
      cmd_classify(report, kappa, m, workers, out);
    } else if (*props) {
      cmd_props(report, input);
    } else if (*verify) {
      status = cmd_verify(report, suite, seed, workers, corpus_dir, !json);
    } else if (*exp) {
      cmd_export(report, name, out);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    report.add("error", e.what());
    status = kUsage;
  } catch (const tl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    report.add("error", e.what());
    status = kUsage;
  } catch (const tl::UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    report.add("error", e.what());
    status = kUsage;
  } catch (const tl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    report.add("error", e.what());
    status = kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    report.add("error", e.what());
    status = kUsage;
  }
  report.set_exit_status(status);
  const std::string rendered = json ? report.json() : report.text();
  std::cout << rendered;
  if (*classify && !out.empty() && status == kOk) tl::write_mat_file((std::filesystem::path(out) / "summary.txt").string(), report.text());
  return status;
}
