#include "isum/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "isum/asym.hpp"
#include "isum/catalog.hpp"
#include "isum/errors.hpp"
#include "isum/expr.hpp"
#include "isum/gregquad.hpp"
#include "isum/identities.hpp"
#include "isum/sigma.hpp"

namespace isum::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

enum class Status { ok, refused, domain };

struct Row {
  double x = kNaN;
  double value = kNaN;
  double error_bound = kNaN;
  std::int64_t n_used = 0;
  std::string method;
  std::vector<std::pair<std::string, double>> extra;
  Status status = Status::ok;
  bool check_tol = true;  // bound > tol counts as a refusal
  std::string note;
};

struct Options {
  std::string g = "log";
  std::vector<double> xs;
  std::string grid;
  double tol = 1e-10;
  std::string format = "text";
  std::string out;
  std::string goldens;
  int p = -1;
  unsigned threads = 0;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_text(double v) {
  if (std::isnan(v)) return "-";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

AdmissibleFunction select_function(const Options& o) {
  if (o.g.rfind("expr:", 0) == 0) return expression_function(o.g.substr(5), o.p);
  AdmissibleFunction g = catalog_lookup(o.g).g;
  if (o.p >= 0) g.degree_p = o.p;
  return g;
}

std::vector<double> points(const Options& o) {
  std::vector<double> xs = o.xs;
  if (!o.grid.empty()) {
    auto more = parse_grid(o.grid);
    xs.insert(xs.end(), more.begin(), more.end());
  }
  return xs;
}

// Evaluates f at every point on a small pool; rows keep input order.
template <class F>
std::vector<Row> over_points(const std::vector<double>& xs, unsigned threads, F f) {
  std::vector<Row> rows(xs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < xs.size();) {
      Row r;
      r.x = xs[i];
      try {
        f(xs[i], r);
      } catch (const RefusedError& e) {
        r.status = Status::refused;
        r.value = e.best_estimate();
        r.error_bound = e.error_estimate();
        r.note = e.what();
      } catch (const DomainError& e) {
        r.status = Status::domain;
        r.note = e.what();
      }
      rows[i] = std::move(r);
    }
  };
  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, xs.size()));
  if (n <= 1) {
    work();
    return rows;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return rows;
}

Row single(const std::function<void(Row&)>& f) {
  std::vector<Row> rows = over_points({kNaN}, 1, [&](double, Row& r) { f(r); });
  return rows[0];
}

std::vector<std::string> extra_columns(const std::vector<Row>& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.extra)
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

double lookup(const Row& r, const std::string& key) {
  for (const auto& [k, v] : r.extra)
    if (k == key) return v;
  return kNaN;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::refused: return "refused";
    case Status::domain: return "domain";
  }
  return "?";
}

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  auto cols = extra_columns(rows);
  os << "x,value,error_bound,n_used,method";
  for (const auto& c : cols) os << ',' << c;
  os << ",status\n";
  auto num = [](double v) { return std::isnan(v) ? std::string() : fmt17(v); };
  for (const auto& r : rows) {
    os << num(r.x) << ',' << num(r.value) << ',' << num(r.error_bound) << ',' << r.n_used << ',' << r.method;
    for (const auto& c : cols) os << ',' << num(lookup(r, c));
    os << ',' << status_name(r.status) << '\n';
  }
}

std::string json_string(const std::string& s) {
  std::string o = "\"";
  for (char c : s) {
    switch (c) {
      case '"': o += "\\\""; break;
      case '\\': o += "\\\\"; break;
      case '\n': o += "\\n"; break;
      case '\t': o += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          o += buf;
        } else {
          o += c;
        }
    }
  }
  return o + "\"";
}

std::string json_number(double v) { return std::isfinite(v) ? fmt17(v) : "null"; }

void write_json(std::ostream& os, const std::string& command, const Options& o, const std::vector<Row>& rows) {
  os << "{\n  \"command\": " << json_string(command) << ",\n  \"g\": " << json_string(o.g)
     << ",\n  \"tol\": " << json_number(o.tol) << ",\n  \"rows\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    os << (i ? ",\n    {" : "\n    {");
    os << "\"x\": " << json_number(r.x) << ", \"value\": " << json_number(r.value)
       << ", \"error_bound\": " << json_number(r.error_bound) << ", \"n_used\": " << r.n_used
       << ", \"method\": " << json_string(r.method);
    for (const auto& [k, v] : r.extra) os << ", " << json_string(k) << ": " << json_number(v);
    os << ", \"status\": " << json_string(status_name(r.status));
    if (!r.note.empty()) os << ", \"note\": " << json_string(r.note);
    os << "}";
  }
  os << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

void write_text(std::ostream& os, const std::vector<Row>& rows) {
  auto cols = extra_columns(rows);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head = {"x", "value", "error_bound", "n_used", "method"};
  head.insert(head.end(), cols.begin(), cols.end());
  head.push_back("status");
  cells.push_back(head);
  for (const auto& r : rows) {
    std::vector<std::string> line = {fmt_text(r.x), fmt_text(r.value), fmt_text(r.error_bound),
                                     std::to_string(r.n_used), r.method};
    for (const auto& c : cols) line.push_back(fmt_text(lookup(r, c)));
    line.push_back(status_name(r.status));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << line[i];
      if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
    }
    os << '\n';
  }
  for (const auto& r : rows)
    if (!r.note.empty()) os << "# " << fmt_text(r.x) << ": " << r.note << '\n';
}

int emit(const std::string& command, const Options& o, const std::vector<Row>& rows, std::ostream& out,
         std::ostream& err) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "cannot open " << o.out << '\n';
      return kUsage;
    }
    os = &file;
  }
  if (o.format == "csv") write_csv(*os, rows);
  else if (o.format == "json") write_json(*os, command, o, rows);
  else write_text(*os, rows);

  int code = kOk;
  for (const auto& r : rows) {
    if (r.status == Status::domain) return kUsage;
    bool over = r.check_tol && !(r.error_bound <= o.tol);
    if (r.status == Status::refused || over) code = kRefused;
  }
  return code;
}

void fill_sigma(Row& r, const SigmaResult& s, const std::string& method) {
  r.value = s.value;
  r.error_bound = s.error_bound;
  r.n_used = s.n_used;
  r.method = method + "/" + to_string(s.bound_kind);
  if (!s.certified()) {
    r.status = Status::refused;
    r.note = "bound not certified";
  }
}

SigmaResult eval_sigma(const AdmissibleFunction& g, double x, double tol) {
  if (x <= 0 && g.extension == DomainExtension::punctured_reals) return sigma_extend(g, x, tol);
  return sigma_eval(g, x, tol);
}

void fill_bounds(Row& r, const BoundPair& b) {
  r.value = 0.5 * (b.lower + b.upper);
  r.error_bound = 0.5 * b.width();
  r.extra = {{"lower", b.lower}, {"upper", b.upper}};
  r.check_tol = false;
  if (!b.certified) {
    r.status = Status::refused;
    r.note = "bracket not certified";
  }
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("grid: bad number '" + tok + "'");
    }
    if (used != tok.size() || !std::isfinite(v)) throw std::invalid_argument("grid: bad number '" + tok + "'");
    parts.push_back(v);
  }
  if (parts.size() != 3) throw std::invalid_argument("grid: expected start:stop:step");
  const double a = parts[0], b = parts[1], s = parts[2];
  if (!(a <= b)) throw std::invalid_argument("grid: start > stop");
  if (!(s > 0)) throw std::invalid_argument("grid: step must be positive");
  const double count = std::floor((b - a) / s * (1 + 1e-12) + 1e-9);
  if (count > 1e6) throw std::invalid_argument("grid: more than 1e6 points");
  std::vector<double> xs;
  for (long i = 0; i <= static_cast<long>(count); ++i) xs.push_back(a + i * s);
  return xs;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal indefinite sums with certified error bounds"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sc, bool with_x) {
    sc->add_option("--g", o.g, "catalog name or expr:<formula in x>");
    sc->add_option("--p", o.p, "asymptotic degree p for expressions");
    sc->add_option("--tol", o.tol, "target error bound")->check(CLI::Range(0.0, 1e-2));
    sc->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));
    sc->add_option("--out", o.out, "write to file instead of stdout");
    sc->add_option("--goldens", o.goldens, "golden table path");
    sc->add_option("--threads", o.threads, "worker threads for grids (0: all cores)");
    if (with_x) {
      sc->add_option("--x", o.xs, "evaluation point (repeatable)");
      sc->add_option("--grid", o.grid, "start:stop:step");
    }
  };

  auto* eval = app.add_subcommand("eval", "Sigma g(x)");
  common(eval, true);

  auto* deriv = app.add_subcommand("deriv", "derivative of Sigma g");
  common(deriv, true);
  int r_order = 1;
  deriv->add_option("--r", r_order, "derivative order")->check(CLI::PositiveNumber);

  auto* cst = app.add_subcommand("const", "asymptotic constants");
  common(cst, false);
  std::string method = "raabe", what = "sigma";
  cst->add_option("--method", method, "raabe|stirling|gregory|em|liu|summable|all");
  cst->add_option("--what", what)->check(CLI::IsMember({"sigma", "gamma", "sigmabar"}));

  auto* bnd = app.add_subcommand("bounds", "certified brackets");
  common(bnd, true);
  std::string kind = "wendel";
  double a_shift = 0.5;
  int r_refine = 1;
  bnd->add_option("--kind", kind)->check(CLI::IsMember({"wendel", "stirling", "bracket", "webster"}));
  bnd->add_option("--a", a_shift, "shift for wendel");
  bnd->add_option("--r", r_refine, "refinement order for bracket");

  auto* quad = app.add_subcommand("quad", "Gregory quadrature of int_m^n g");
  common(quad, false);
  std::int64_t qm = 1, qn = 20;
  int qq = 0;
  quad->add_option("--m", qm);
  quad->add_option("--n", qn);
  quad->add_option("--q", qq, "order (0: automatic)");

  auto* ident = app.add_subcommand("identity", "gamma-type identities");
  common(ident, true);
  std::string id_name = "multiplication", variant = "shift0", parity = "odd";
  int id_m = 2, id_r = 1, num = 1, den = 2, id_terms = 20;
  double id_a = 1;
  std::int64_t id_K = 1 << 16;
  ident->add_option("--name", id_name)
      ->check(CLI::IsMember({"multiplication", "webster", "wallis", "reflection", "rational", "gautschi", "elevator",
                             "euler-series"}));
  ident->add_option("--m", id_m);
  ident->add_option("--a", id_a);
  ident->add_option("--r", id_r);
  ident->add_option("--variant", variant);
  ident->add_option("--parity", parity)->check(CLI::IsMember({"odd", "even"}));
  ident->add_option("--num", num);
  ident->add_option("--den", den);
  ident->add_option("--K", id_K);
  ident->add_option("--terms", id_terms);

  auto* ver = app.add_subcommand("verify", "check catalog goldens");
  common(ver, false);
  bool all = false;
  ver->add_flag("--all", all, "every catalog entry");

  auto* table = app.add_subcommand("table", "Sigma g against the closed form on a grid");
  common(table, true);

  std::vector<std::string> argv_store = {"isum"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  if (!(o.tol > 0)) {
    err << "--tol must lie in (0, 1e-2]\n";
    return kUsage;
  }
  if (!o.goldens.empty()) set_goldens_path(o.goldens);

  try {
    if (*ver) {
      std::vector<std::string> names = all ? catalog_names() : std::vector<std::string>{o.g};
      std::vector<Row> rows;
      for (const auto& name : names) {
        for (const auto& v : verify_entry(name)) {
          Row r;
          r.x = v.x.value_or(kNaN);
          r.value = v.got;
          r.error_bound = v.bound;
          r.method = name + ":" + v.tag;
          r.extra = {{"expected", v.expected}, {"tol", v.tol}, {"pass", v.pass ? 1.0 : 0.0}};
          r.check_tol = false;
          if (!v.pass) r.status = Status::refused;
          r.note = v.note;
          rows.push_back(std::move(r));
        }
      }
      return emit("verify", o, rows, out, err);
    }

    const AdmissibleFunction g = select_function(o);
    const double tol = o.tol;
    std::vector<Row> rows;

    if (*eval || *deriv || *table || *bnd || (*ident && id_name != "wallis" && id_name != "rational" &&
                                              id_name != "euler-series")) {
      std::vector<double> xs = points(o);
      if (xs.empty()) {
        err << "no evaluation points: use --x or --grid\n";
        return kUsage;
      }
      if (*eval) {
        rows = over_points(xs, o.threads, [&](double x, Row& r) { fill_sigma(r, eval_sigma(g, x, tol), "gauss-limit"); });
      } else if (*deriv) {
        rows = over_points(xs, o.threads, [&](double x, Row& r) {
          fill_sigma(r, sigma_derivative(g, r_order, x, tol), "derivative r=" + std::to_string(r_order));
        });
      } else if (*table) {
        RealFn oracle;
        if (o.g.rfind("expr:", 0) != 0) oracle = catalog_lookup(o.g).sum_oracle;
        rows = over_points(xs, o.threads, [&](double x, Row& r) {
          fill_sigma(r, eval_sigma(g, x, tol), "gauss-limit");
          if (oracle) {
            double ref = oracle(x);
            r.extra = {{"oracle", ref}, {"difference", r.value - ref}};
          }
        });
      } else if (*bnd) {
        rows = over_points(xs, o.threads, [&](double x, Row& r) {
          if (kind == "wendel") fill_bounds(r, wendel_bounds(g, x, a_shift));
          else if (kind == "stirling") fill_bounds(r, stirling_bounds(g, x));
          else if (kind == "bracket") fill_bounds(r, bracket_refine(g, r_refine, x));
          else fill_bounds(r, webster_bounds(g, x));
          r.method = kind;
        });
      } else if (id_name == "multiplication") {
        rows = over_points(xs, o.threads, [&](double x, Row& r) {
          Estimate lhs = multiplication_lhs(g, id_m, x, tol);
          Estimate rhs = multiplication_rhs(g, id_m, x, tol);
          r.value = lhs.value;
          r.error_bound = lhs.error + rhs.error;
          r.method = "multiplication m=" + std::to_string(id_m);
          r.extra = {{"rhs", rhs.value}, {"difference", lhs.value - rhs.value}};
        });
      } else if (id_name == "webster") {
        WebsterProblem P{g, id_m, id_a};
        rows = over_points(xs, o.threads, [&](double x, Row& r) {
          WebsterSolution s = webster_solve(P, x, tol);
          r.value = s.value;
          r.error_bound = s.error;
          r.method = "webster";
          r.extra = {{"residual", s.residual}};
        });
      } else if (id_name == "reflection") {
        Parity par = parity == "odd" ? Parity::odd : Parity::even;
        rows = over_points(xs, o.threads, [&](double x, Row& r) {
          Estimate e = reflection_periodic(g, par, x, tol);
          r.value = e.value;
          r.error_bound = e.error;
          r.method = "reflection " + parity;
        });
      } else if (id_name == "gautschi") {
        rows = over_points(xs, o.threads, [&](double x, Row& r) {
          GautschiResult gr = gautschi_bounds(g, x, id_a, tol);
          fill_bounds(r, gr.bounds);
          r.value = gr.target;
          r.extra.push_back({"middle", gr.middle});
          r.method = gr.concave ? "gautschi concave" : "gautschi convex";
        });
      } else if (id_name == "elevator") {
        rows = over_points(xs, o.threads, [&](double x, Row& r) {
          ElevatorResult e = elevator(g, id_r, id_a, x, tol);
          r.value = e.value;
          r.error_bound = e.error;
          r.method = "elevator r=" + std::to_string(id_r);
          r.extra = {{"defect", e.defect}, {"shift_constant", e.shift_constant}};
        });
      }
      std::string cmd = *eval ? "eval" : *deriv ? "deriv" : *table ? "table" : *bnd ? "bounds" : "identity";
      return emit(cmd, o, rows, out, err);
    }

    if (*cst) {
      std::vector<SigmaMethod> methods =
          method == "all" ? applicable_methods(g) : std::vector<SigmaMethod>{parse_sigma_method(method)};
      for (SigmaMethod m : methods) {
        rows.push_back(single([&](Row& r) {
          r.method = std::string(what) + "/" + to_string(m);
          if (what == "sigmabar") {
            auto sb = sigma_bar(g, tol);
            if (!sb) throw RefusedError("sigmabar: g is not integrable at 0");
            r.value = sb->value;
            r.error_bound = sb->error_estimate;
            r.n_used = sb->iterations;
            return;
          }
          ConstantEstimate c = what == "gamma" ? euler_constant(g, tol, m) : sigma_constant(g, m, tol);
          r.value = c.value;
          r.error_bound = c.error_estimate;
          r.n_used = c.iterations;
        }));
        if (what == "sigmabar") break;
      }
      return emit("const", o, rows, out, err);
    }

    if (*quad) {
      rows.push_back(single([&](Row& r) {
        int q = qq > 0 ? qq : gregory_auto_order(g, qm, qn);
        QuadratureResult res = gregory_sum(g, qm, qn, q);
        r.value = res.value;
        r.error_bound = res.remainder_bound;
        r.n_used = qn;
        r.method = "gregory q=" + std::to_string(res.q_used);
        r.check_tol = false;
        if (!res.certified) {
          r.status = Status::refused;
          r.note = "remainder sign not certified";
        }
      }));
      return emit("quad", o, rows, out, err);
    }

    // Identities without an x argument.
    if (id_name == "wallis") {
      WallisVariant v = parse_wallis_variant(variant);
      auto seq = wallis_limit(g, v, id_terms, tol);
      for (std::size_t i = 0; i < seq.size(); ++i) {
        Row r;
        r.x = static_cast<double>(i + 1);
        r.value = seq[i];
        r.error_bound = std::abs(seq[i]);
        r.n_used = static_cast<std::int64_t>(2 * (i + 1));
        r.method = std::string("wallis ") + to_string(v);
        r.check_tol = false;
        rows.push_back(std::move(r));
      }
    } else if (id_name == "rational") {
      rows.push_back(single([&](Row& r) {
        Estimate e = rational_argument(g, num, den, id_K, tol);
        r.x = static_cast<double>(num) / den;
        r.value = e.value;
        r.error_bound = e.error;
        r.method = "rational " + std::to_string(num) + "/" + std::to_string(den);
      }));
    } else {
      rows.push_back(single([&](Row& r) {
        SeriesResult s = euler_series_analogue(g, id_terms, tol);
        r.value = s.value;
        r.error_bound = std::abs(s.last_term);
        r.n_used = s.terms;
        r.method = "euler-series";
        r.check_tol = false;
      }));
    }
    return emit("identity", o, rows, out, err);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const RefusedError& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace isum::cli
