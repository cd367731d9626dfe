#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "psiapprox/approx.hpp"
#include "psiapprox/errors.hpp"
#include "psiapprox/norms.hpp"
#include "psiapprox/psi.hpp"
#include "psiapprox/trig_poly.hpp"

namespace psiapprox::cli {

namespace {

using std::numbers::pi;

// Parameter errors that carry the offending flag.
class FieldError : public std::invalid_argument {
 public:
  FieldError(const std::string& field, const std::string& msg)
      : std::invalid_argument(field + ": " + msg) {}
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string g17(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Output of one unit of work; `rows` are already formatted.
struct Chunk {
  std::vector<BoundReport> reports;
  std::vector<std::string> rows;
  std::vector<std::string> comments;
  OrderSummary summary;
  bool has_summary = false;
};

// Runs f(0..count-1) on up to `jobs` threads. Results are kept in index
// order and the exception of the lowest failing index is rethrown, so the
// outcome does not depend on scheduling.
std::vector<Chunk> parallel_map(std::size_t count, int jobs,
                                const std::function<Chunk(std::size_t)>& f) {
  std::vector<Chunk> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(jobs, 1), count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

// Key-value record for the non-report commands.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string render_table(const Table& t, Format fmt) {
  std::string out;
  if (fmt == Format::csv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (i) out += ',';
      out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += row[i];
      }
      out += '\n';
    }
    return out;
  }
  bool first = true;
  for (const auto& row : t.rows) {
    if (!first) out += '\n';
    first = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += t.columns[i] + ": " + row[i] + '\n';
    }
  }
  return out;
}

std::vector<int> n_values(const RunConfig& c) {
  std::vector<int> ns;
  for (int n = c.n_lo; n <= c.n_hi; ++n) ns.push_back(n);
  return ns;
}

PsiSpec make_spec(const RunConfig& c) { return PsiSpec::exponential(c.alpha, c.r); }

// n range clipped to n_min of the exponential family.
std::pair<int, int> clipped_range(const RunConfig& c) {
  if (!(c.r < 1.0)) throw FieldError("--r", "corollaries require r < 1");
  const auto th = exp_family_thresholds(c.alpha, c.r);
  const std::int64_t lo = std::max<std::int64_t>(c.n_lo, th.n_min);
  if (lo > c.n_hi) {
    throw FieldError("--n", "empty n range after clipping to n_min=" + std::to_string(th.n_min));
  }
  return {static_cast<int>(lo), c.n_hi};
}

// Parameters at one n, with hypothesis errors attributed to --n.
BoundParams params_at(const PsiSpec& spec, int n, double beta, double p, double s) {
  try {
    return BoundParams::at(spec, n, beta, p, s);
  } catch (const HypothesisError& e) {
    throw FieldError("--n", e.what());
  } catch (const PreconditionError& e) {
    throw FieldError("--n", e.what());
  }
}

// ---- characteristics / classify / kernel-norm / extremal -------------------

Table characteristics_table(const RunConfig& c) {
  const auto spec = make_spec(c);
  Table t;
  t.columns = {"n", "psi", "eta", "mu", "eta_minus_n", "a", "b", "n_min"};
  std::string a, b, n_min;
  if (c.r < 1.0) {
    const auto th = exp_family_thresholds(c.alpha, c.r);
    a = g17(th.a);
    b = g17(th.b);
    n_min = std::to_string(th.n_min);
  }
  for (int n : n_values(c)) {
    const auto ch = characteristics(spec, n);
    t.rows.push_back({std::to_string(n), g17(spec(n)), g17(ch.eta), g17(ch.mu),
                      g17(ch.eta_minus_t), a, b, n_min});
  }
  return t;
}

Table classify_table(const RunConfig& c) {
  const auto spec = make_spec(c);
  const double hi = std::max(100.0 * c.n_hi, 1e4);
  const auto grid = log_grid(1.0, hi, 128);
  const auto rep = classify(spec, grid);
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  std::string witnesses;
  for (const auto& w : rep.witnesses) {
    if (!witnesses.empty()) witnesses += "; ";
    witnesses += w.check + "@" + g17(w.t);
    if (!w.detail.empty()) witnesses += " " + w.detail;
  }
  std::replace(witnesses.begin(), witnesses.end(), ',', ';');
  Table t;
  t.columns = {"psi",   "grid_lo", "grid_hi", "grid_points", "in_M", "mu_increasing_to_infinity",
               "eta_gap_bounded_above", "eta_gap_bounded_below", "witnesses"};
  t.rows.push_back({to_record(spec), g17(grid.front()), g17(grid.back()),
                    std::to_string(grid.size()), flag(rep.in_M),
                    flag(rep.mu_increasing_to_infinity), flag(rep.eta_gap_bounded_above),
                    flag(rep.eta_gap_bounded_below), witnesses});
  return t;
}

std::vector<std::string> kernel_norm_row(const RunConfig& c, const PsiSpec& spec, int n,
                                         double p, double beta) {
  const auto bp = params_at(spec, n, beta, p, 2.0);
  const double q = conjugate_exponent(p);
  const double norm = kernel_norm_upper(spec, n, beta, q, c.verify.kernel_tol);
  std::string bound;
  if (!std::isinf(p)) {
    const double gap = characteristics(spec, n).eta_minus_t;
    bound = g17(const_Cab(bp.a, bp.b) * std::pow(2.0 * p, 1.0 - 1.0 / p) * spec(n) *
                std::pow(gap, 1.0 / p));
  }
  return {std::to_string(n), g17(beta), g17(p), g17(q), g17(norm), bound};
}

std::vector<std::string> extremal_summary_row(const PsiSpec& spec, int n, double p,
                                              double beta) {
  const auto bp = params_at(spec, n, beta, p, 2.0);
  const auto idx = extremal_indices(spec, n);
  const auto f = build_extremal(bp);
  const auto d = psi_beta_derivative(f, spec, beta);
  return {std::to_string(n), g17(beta),          g17(p),
          std::to_string(idx.eta_floor), std::to_string(idx.eta_eta_floor),
          std::to_string(f.degree()),    g17(sup_norm(f).value),
          g17(lp_norm(d, p))};
}

std::vector<std::vector<std::string>> extremal_sample_rows(const PsiSpec& spec, int n,
                                                           double p, double beta,
                                                           int samples) {
  const auto bp = params_at(spec, n, beta, p, 2.0);
  const auto f = build_extremal(bp);
  const auto d = psi_beta_derivative(f, spec, beta);
  std::vector<std::vector<std::string>> rows;
  for (int j = 0; j < samples; ++j) {
    const double t = -pi + 2.0 * pi * j / samples;
    rows.push_back({std::to_string(n), g17(beta), g17(p), g17(t), g17(f(t)), g17(d(t))});
  }
  return rows;
}

// ---- report commands --------------------------------------------------------

struct Point {
  int n;
  double beta;
  double exponent;  // p or s, depending on the command
};

std::vector<Point> points(const std::vector<int>& ns, const std::vector<double>& exps,
                          const std::vector<double>& betas) {
  std::vector<Point> out;
  for (int n : ns) {
    for (double e : exps) {
      for (double beta : betas) out.push_back({n, beta, e});
    }
  }
  return out;
}

void check_theorem1_p(const std::vector<double>& ps) {
  for (double p : ps) {
    if (!(p >= 1.0) || std::isinf(p)) throw FieldError("--p", "Theorem 1 requires 1 <= p < inf");
  }
}

void check_s(const std::vector<double>& ss) {
  for (double s : ss) {
    if (!(s > 1.0)) throw FieldError("--s", "requires s > 1");
  }
}

Chunk thm1_chunk(const RunConfig& c, const PsiSpec& spec, const Point& pt) {
  Chunk ch;
  ch.reports.push_back(
      verify_theorem1(params_at(spec, pt.n, pt.beta, pt.exponent, 2.0), c.verify));
  return ch;
}

Chunk thm2_chunk(const RunConfig& c, const PsiSpec& spec, const Point& pt) {
  Chunk ch;
  ch.reports.push_back(
      verify_theorem2(params_at(spec, pt.n, pt.beta, 1.0, pt.exponent), c.verify));
  return ch;
}

Chunk lemmas_chunk(const RunConfig& c, const PsiSpec& spec, int n, double beta) {
  Chunk ch;
  const auto base = params_at(spec, n, beta, 1.0, 2.0);
  auto append = [&](std::vector<BoundReport> rs) {
    for (auto& r : rs) ch.reports.push_back(std::move(r));
  };
  append(hypothesis_gate(base, c.verify));
  append(verify_kernel_bounds(base, c.verify));
  std::vector<double> ps = c.p;
  if (std::find_if(ps.begin(), ps.end(), [](double p) { return std::isinf(p); }) == ps.end()) {
    ps.push_back(kInf);
  }
  for (double p : ps) {
    auto bp = base;
    bp.p = p;
    ch.reports.push_back(verify_derivative_ball(bp, c.verify));
  }
  for (double p : c.p) {
    if (std::isinf(p)) continue;
    for (double s : c.s) {
      auto bp = base;
      bp.p = p;
      bp.s = s;
      ch.reports.push_back(verify_duality_chain(bp, c.verify));
    }
  }
  return ch;
}

Chunk corollary_chunk(const RunConfig& c, Command which, int n, double e, double beta) {
  Chunk ch;
  auto res = which == Command::verify_cor1
                 ? verify_corollary1(c.alpha, c.r, e, n, n, beta, c.verify)
                 : verify_corollary2(c.alpha, c.r, e, n, n, beta, c.verify);
  ch.reports = std::move(res.reports);
  ch.summary = res.summary;
  ch.has_summary = true;
  return ch;
}

// Merges per-n summaries of one (exponent, beta) series in n order.
OrderSummary merge(const std::vector<Chunk>& chunks, std::size_t first, std::size_t count) {
  OrderSummary s;
  s.min_ratio = std::numeric_limits<double>::infinity();
  s.max_ratio = 0.0;
  for (std::size_t i = first; i < first + count; ++i) {
    const auto& o = chunks[i].summary;
    if (o.min_ratio < s.min_ratio) {
      s.min_ratio = o.min_ratio;
      s.n_at_min = o.n_at_min;
    }
    if (o.max_ratio > s.max_ratio) {
      s.max_ratio = o.max_ratio;
      s.n_at_max = o.n_at_max;
    }
  }
  s.finite = std::isfinite(s.min_ratio) && std::isfinite(s.max_ratio) && s.min_ratio > 0.0;
  return s;
}

std::string render_reports(const std::vector<Chunk>& chunks, Format fmt) {
  std::string out;
  if (fmt == Format::csv) out += csv_header() + '\n';
  bool first = true;
  for (const auto& ch : chunks) {
    for (const auto& r : ch.reports) {
      if (fmt == Format::csv) {
        out += to_csv_row(r) + '\n';
      } else {
        if (!first) out += '\n';
        out += to_text(r);
      }
      first = false;
    }
  }
  for (const auto& ch : chunks) {
    for (const auto& line : ch.comments) out += "# " + line + '\n';
  }
  return out;
}

bool any_failed(const std::vector<Chunk>& chunks) {
  for (const auto& ch : chunks) {
    for (const auto& r : ch.reports) {
      if (r.verdict == Verdict::failed) return true;
    }
  }
  return false;
}

std::vector<Chunk> corollary_chunks(const RunConfig& c, Command which) {
  const auto [lo, hi] = clipped_range(c);
  const auto& exps = which == Command::verify_cor1 ? c.p : c.s;
  if (which == Command::verify_cor1) check_theorem1_p(exps);
  else check_s(exps);
  struct Job {
    int n;
    double e, beta;
  };
  std::vector<Job> jobs;
  for (double e : exps) {
    for (double beta : c.beta) {
      for (int n = lo; n <= hi; ++n) jobs.push_back({n, e, beta});
    }
  }
  auto chunks = parallel_map(jobs.size(), c.jobs, [&](std::size_t i) {
    return corollary_chunk(c, which, jobs[i].n, jobs[i].e, jobs[i].beta);
  });
  const std::size_t per = static_cast<std::size_t>(hi - lo + 1);
  const char* key = which == Command::verify_cor1 ? "p" : "s";
  for (std::size_t first = 0; first < chunks.size(); first += per) {
    const auto s = merge(chunks, first, per);
    const auto& j = jobs[first];
    chunks[first + per - 1].comments.push_back(
        std::string("summary ") + key + "=" + g17(j.e) + " beta=" + g17(j.beta) +
        " n=" + std::to_string(lo) + ".." + std::to_string(hi) +
        " min_ratio=" + g17(s.min_ratio) + " n_at_min=" + std::to_string(s.n_at_min) +
        " max_ratio=" + g17(s.max_ratio) + " n_at_max=" + std::to_string(s.n_at_max) +
        " band=" + g17(s.band()) + " finite=" + (s.finite ? "true" : "false"));
  }
  // Summaries go after all rows, in series order.
  std::vector<std::string> lines;
  for (auto& ch : chunks) {
    for (auto& l : ch.comments) lines.push_back(std::move(l));
    ch.comments.clear();
  }
  if (!chunks.empty()) chunks.back().comments = std::move(lines);
  return chunks;
}

std::vector<Chunk> report_chunks(const RunConfig& c) {
  const auto spec = make_spec(c);
  const auto ns = n_values(c);
  switch (c.command) {
    case Command::verify_thm1: {
      check_theorem1_p(c.p);
      const auto pts = points(ns, c.p, c.beta);
      return parallel_map(pts.size(), c.jobs,
                          [&](std::size_t i) { return thm1_chunk(c, spec, pts[i]); });
    }
    case Command::verify_thm2: {
      check_s(c.s);
      const auto pts = points(ns, c.s, c.beta);
      return parallel_map(pts.size(), c.jobs,
                          [&](std::size_t i) { return thm2_chunk(c, spec, pts[i]); });
    }
    case Command::verify_lemmas: {
      check_s(c.s);
      const auto pts = points(ns, {0.0}, c.beta);
      return parallel_map(pts.size(), c.jobs, [&](std::size_t i) {
        return lemmas_chunk(c, spec, pts[i].n, pts[i].beta);
      });
    }
    case Command::verify_cor1:
    case Command::verify_cor2:
      return corollary_chunks(c, c.command);
    case Command::sweep: {
      std::vector<Chunk> all;
      for (Command sub : {Command::verify_lemmas, Command::verify_thm1, Command::verify_thm2}) {
        RunConfig cc = c;
        cc.command = sub;
        if (sub == Command::verify_thm1) {
          cc.p.erase(std::remove_if(cc.p.begin(), cc.p.end(),
                                    [](double p) { return std::isinf(p); }),
                     cc.p.end());
        }
        for (auto& ch : report_chunks(cc)) all.push_back(std::move(ch));
      }
      return all;
    }
    default:
      return {};
  }
}

std::string render(const RunConfig& c, int& status) {
  status = kPass;
  const auto spec = make_spec(c);
  switch (c.command) {
    case Command::characteristics:
      return render_table(characteristics_table(c), c.format);
    case Command::classify:
      return render_table(classify_table(c), c.format);
    case Command::kernel_norm: {
      Table t;
      t.columns = {"n", "beta", "p", "q", "kernel_norm_over_pi", "theorem1_upper"};
      const auto pts = points(n_values(c), c.p, c.beta);
      auto chunks = parallel_map(pts.size(), c.jobs, [&](std::size_t i) {
        Chunk ch;
        ch.rows = kernel_norm_row(c, spec, pts[i].n, pts[i].exponent, pts[i].beta);
        return ch;
      });
      for (auto& ch : chunks) t.rows.push_back(std::move(ch.rows));
      return render_table(t, c.format);
    }
    case Command::extremal: {
      Table t;
      const auto pts = points(n_values(c), c.p, c.beta);
      if (c.samples > 0) {
        t.columns = {"n", "beta", "p", "t", "f", "derivative"};
        for (const auto& pt : pts) {
          for (auto& row : extremal_sample_rows(spec, pt.n, pt.exponent, pt.beta, c.samples)) {
            t.rows.push_back(std::move(row));
          }
        }
      } else {
        t.columns = {"n",      "beta",     "p",        "eta_floor",
                     "eta_eta_floor", "degree", "sup_f", "derivative_norm_p"};
        for (const auto& pt : pts) {
          t.rows.push_back(extremal_summary_row(spec, pt.n, pt.exponent, pt.beta));
        }
      }
      return render_table(t, c.format);
    }
    default: {
      const auto chunks = report_chunks(c);
      if (any_failed(chunks)) status = kFail;
      return render_reports(chunks, c.format);
    }
  }
}

void validate(const RunConfig& c) {
  if (!(c.alpha > 0.0) || !std::isfinite(c.alpha)) throw FieldError("--alpha", "must be positive");
  if (!(c.r > 0.0 && c.r <= 1.0)) throw FieldError("--r", "must lie in (0, 1]");
  if (c.n_lo < 1 || c.n_hi < c.n_lo) throw FieldError("--n", "empty or non-positive range");
  if (!(c.verify.slack > 0.0)) throw FieldError("--slack", "must be positive");
  if (!(c.verify.kernel_tol > 0.0) || !(c.verify.kernel_tol < 1.0)) {
    throw FieldError("--kernel-tol", "must lie in (0, 1)");
  }
  if (c.jobs < 1) throw FieldError("--jobs", "must be at least 1");
  if (c.samples < 0) throw FieldError("--samples", "must be non-negative");
  if (c.p.empty()) throw FieldError("--p", "empty list");
  if (c.s.empty()) throw FieldError("--s", "empty list");
  if (c.beta.empty()) throw FieldError("--beta", "empty list");
  for (double p : c.p) {
    if (!(p >= 1.0)) throw FieldError("--p", "requires p >= 1");
  }
  for (double b : c.beta) {
    if (!std::isfinite(b)) throw FieldError("--beta", "must be finite");
  }
}

int default_jobs() {
  if (const char* env = std::getenv("PSIAPPROX_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

std::pair<int, int> parse_n_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(trim(s), &used);
    } catch (const std::exception&) {
      throw FieldError("--n", "not an integer or range: '" + text + "'");
    }
    if (used != trim(s).size()) throw FieldError("--n", "not an integer or range: '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

std::vector<double> parse_real_list(const std::string& text, const std::string& field) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item == "inf" || item == "Inf" || item == "INF") {
      out.push_back(kInf);
      continue;
    }
    try {
      out.push_back(parse_alpha_token(item));
    } catch (const std::exception&) {
      throw FieldError(field, "not a real number: '" + item + "'");
    }
  }
  if (out.empty()) throw FieldError(field, "empty list");
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    int status = kPass;
    const std::string text = render(config, status);
    if (config.out.empty()) {
      out << text;
      out.flush();
    } else {
      std::ofstream f(config.out, std::ios::binary | std::ios::trunc);
      if (!f) throw IoError("cannot open output file '" + config.out + "'");
      f << text;
      f.close();
      if (!f) throw IoError("cannot write output file '" + config.out + "'");
    }
    return status;
  } catch (const ConvergenceError& e) {
    err << "error: numerical non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const FieldError& e) {
    err << "error: invalid parameter " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    // DomainError, PreconditionError and HypothesisError.
    err << "error: invalid parameter: " << e.what() << '\n';
    return kUsage;
  } catch (const std::range_error& e) {
    err << "error: invalid parameter: " << e.what() << '\n';
    return kUsage;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"psiapprox: best approximations of (psi, beta)-differentiable classes"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.jobs = default_jobs();
  std::string alpha = "ln2", n = "25", p = "1", s = "2", beta = "0", format = "csv";

  app.add_option("--alpha", alpha, "alpha of psi(t) = exp(-alpha t^r); accepts ln2")
      ->capture_default_str();
  app.add_option("--r", cfg.r, "r of psi(t) = exp(-alpha t^r)")->capture_default_str();
  app.add_option("--n", n, "n or a range lo..hi")->capture_default_str();
  app.add_option("--p", p, "comma-separated p values; inf allowed where meaningful")
      ->capture_default_str();
  app.add_option("--s", s, "comma-separated s values; inf allowed")->capture_default_str();
  app.add_option("--beta", beta, "comma-separated beta values")->capture_default_str();
  app.add_option("--out", cfg.out, "output file (default: standard output)");
  app.add_option("--format", format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}))
      ->capture_default_str();
  app.add_option("--slack", cfg.verify.slack, "relative slack of inequality checks")
      ->capture_default_str();
  app.add_option("--kernel-tol", cfg.verify.kernel_tol,
                 "kernel truncation tolerance relative to psi(n)")
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads (default: $PSIAPPROX_JOBS or 1)")
      ->capture_default_str();

  const std::pair<const char*, Command> commands[] = {
      {"characteristics", Command::characteristics},
      {"classify", Command::classify},
      {"kernel-norm", Command::kernel_norm},
      {"extremal", Command::extremal},
      {"verify-thm1", Command::verify_thm1},
      {"verify-thm2", Command::verify_thm2},
      {"verify-cor1", Command::verify_cor1},
      {"verify-cor2", Command::verify_cor2},
      {"verify-lemmas", Command::verify_lemmas},
      {"sweep", Command::sweep},
  };
  const std::pair<const char*, const char*> help[] = {
      {"characteristics", "psi(n), eta(n), mu(n) and the family thresholds"},
      {"classify", "sampled class-membership report for psi"},
      {"kernel-norm", "(1/pi)||Psi_{beta,n}||_{p'} against the Theorem 1 upper bound"},
      {"extremal", "extremal polynomial summary, or --samples values for plotting"},
      {"verify-thm1", "Theorem 1 sandwich per (n, p, beta)"},
      {"verify-thm2", "Theorem 2 sandwich per (n, s, beta)"},
      {"verify-cor1", "Theorem 1 with uniform thresholds and order-ratio summary"},
      {"verify-cor2", "Theorem 2 with uniform thresholds and order-ratio summary"},
      {"verify-lemmas", "lemma, kernel, derivative-ball and duality checks"},
      {"sweep", "lemmas plus both theorems"},
  };
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    auto* sub = app.add_subcommand(commands[i].first, help[i].second);
    if (commands[i].second == Command::extremal) {
      sub->add_option("--samples", cfg.samples, "emit this many samples of f and its derivative");
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) cfg.command = commands[i].second;
  }
  try {
    cfg.alpha = parse_alpha_token(trim(alpha));
  } catch (const std::exception&) {
    err << "error: invalid parameter --alpha: not a real number: '" << alpha << "'\n";
    return kUsage;
  }
  try {
    std::tie(cfg.n_lo, cfg.n_hi) = parse_n_range(n);
    cfg.p = parse_real_list(p, "--p");
    cfg.s = parse_real_list(s, "--s");
    cfg.beta = parse_real_list(beta, "--beta");
  } catch (const FieldError& e) {
    err << "error: invalid parameter " << e.what() << '\n';
    return kUsage;
  }
  cfg.format = format == "text" ? Format::text : Format::csv;
  return run(cfg, out, err);
}

}  // namespace psiapprox::cli
