#include "strata/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "strata/degrees.hpp"
#include "strata/json_io.hpp"
#include "strata/verify.hpp"

namespace strata::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* kTypeGrammar =
    "Singularity types: omp:M (ordinary M-fold point; a1, d4, x9 are omp:2, omp:3, omp:4), cusp:P (x^P + y^(P+1)), "
    "kbranch:P1,P2,... (tangent cone l1^P1 l2^P2 ...), diagram:a,b;a,b;... (Newton diagram vertices).";

SingularitySpec parse_type(const std::string& s) {
  try {
    return SingularitySpec::parse(s);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::pair<int, int> parse_range(const std::string& s, const char* flag) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    std::size_t used = 0;
    int lo = std::stoi(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(s);
    std::string rest = s.substr(dots + 2);
    int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    if (hi < lo) throw UsageError(std::string(flag) + " range " + s + " is empty");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + " expects a..b, got '" + s + "'");
  }
}

std::string degree_string(const DegreeResult& r) {
  std::string num = to_string(r.numerator);
  if (r.denominator == 1) return num;
  return "(" + num + ")/" + r.denominator.get_str();
}

struct Options {
  std::string x, y, format = "text", out_file, suite, family, p_range, q_range, d_range;
  std::optional<long> d;
  bool symbolic = false;
  bool chip = false;
};

void warn_validity(const DegreeResult& r, long d, std::ostream& err) {
  if (d < r.valid_from_d)
    err << "warning: d = " << d << " is below the validity bound d >= " << r.valid_from_d
        << "; the value is the polynomial evaluated there\n";
}

void cmd_degree(const Options& o, std::ostream& out, std::ostream& err) {
  SingularitySpec sx = parse_type(o.x);
  std::optional<SingularitySpec> sy;
  if (!o.y.empty()) sy = parse_type(o.y);
  DegreeResult r = sy ? degree_of(sx, *sy) : degree_of(sx);
  if (o.d) warn_validity(r, *o.d, err);
  const std::string label = sx.to_string() + (sy ? " + " + sy->to_string() : "");
  if (o.format == "json") {
    Json j = {{"x", sx.to_string()}};
    if (sy) j["y"] = sy->to_string();
    const Json body = to_json(r);
    for (const auto& [k, v] : body.items()) j[k] = v;
    if (o.d) {
      j["d"] = *o.d;
      j["value"] = r.at(*o.d).get_str();
      j["below_validity"] = *o.d < r.valid_from_d;
    }
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "x,y,d,degree\n"
        << sx.to_string() << ',' << (sy ? sy->to_string() : "") << ','
        << (o.d ? std::to_string(*o.d) : "symbolic") << ','
        << (o.d ? r.at(*o.d).get_str() : degree_string(r)) << '\n';
  } else {
    out << "type: " << label << '\n' << "degree: " << degree_string(r) << '\n';
    if (o.d) out << "degree at d = " << *o.d << ": " << r.at(*o.d).get_str() << '\n';
    out << "valid for d >= " << r.valid_from_d << '\n' << "route: " << r.route << '\n';
  }
}

void cmd_class(const Options& o, std::ostream& out) {
  SingularitySpec sx = parse_type(o.x);
  std::optional<SingularitySpec> sy;
  if (!o.y.empty()) sy = parse_type(o.y);
  if (o.chip) {
    if (!o.d)
      throw UsageError("--chip needs a numeric --d: the number of factors of the chipping product depends on d");
    if (!sy || !sx.is_omp() || !sy->is_omp()) throw UsageError("--chip needs two ordinary points (--x omp:M --y omp:N)");
    int p = sx.multiplicity() - 1, q = sy->multiplicity() - 1;
    if (p < q) std::swap(p, q);
    CohClass c = chipping_product(p, q, *o.d);
    if (o.format == "json")
      out << Json{{"chipping_product", to_json(c)}, {"d", *o.d}}.dump(2) << '\n';
    else
      out << c.to_string() << '\n';
    return;
  }
  StratumClass s = sy ? pair_stratum(sx, *sy) : single_stratum(sx);
  if (o.d) {
    s.cls = s.cls.evaluated(*o.d);
    s.incidence = s.incidence.evaluated(*o.d);
  }
  if (o.format == "json") {
    Json j = to_json(s);
    if (o.d) j["d"] = *o.d;
    out << j.dump(2) << '\n';
  } else {
    out << "ambient: " << s.ambient().to_string() << '\n' << "class: " << s.cls.to_string() << '\n';
    if (!(s.incidence == CohClass::one(s.ambient()))) out << "incidence: " << s.incidence.to_string() << '\n';
    out << "aut: " << s.aut_order << '\n' << "valid for d >= " << s.valid_from_d << '\n';
  }
}

struct Family {
  const char* name;
  bool uses_q;
  std::function<DegreeResult(int, int)> degree;
};

const std::vector<Family>& families() {
  static const std::vector<Family> f{
      {"omp", false, [](int p, int) { return degree_of(OmpType{p + 1}); }},
      {"cusp", false, [](int p, int) { return degree_of(CuspType{p}); }},
      {"two-omp", true, [](int p, int q) { return degree_of(OmpType{p + 1}, OmpType{q + 1}); }},
      {"cusp-a1", false, [](int p, int) { return degree_of(CuspType{p}, OmpType{2}); }},
      {"line-cusp-a1", false, [](int p, int) { return degree_of(KBranchType{{p, 1}}, OmpType{2}); }},
  };
  return f;
}

void cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  auto fam = std::find_if(families().begin(), families().end(), [&](const Family& f) { return o.family == f.name; });
  if (fam == families().end()) {
    std::string names;
    for (const auto& f : families()) names += std::string(names.empty() ? "" : ", ") + f.name;
    throw UsageError("unknown family '" + o.family + "' (known: " + names + ")");
  }
  if (o.p_range.empty()) throw UsageError("table needs --p-range");
  auto [p_lo, p_hi] = parse_range(o.p_range, "--p-range");
  std::pair<int, int> q_range{0, 0};
  if (fam->uses_q) {
    if (o.q_range.empty()) throw UsageError("family " + o.family + " needs --q-range");
    q_range = parse_range(o.q_range, "--q-range");
  } else if (!o.q_range.empty()) {
    throw UsageError("family " + o.family + " takes no --q-range");
  }
  std::vector<long> ds;
  if (o.d) ds.push_back(*o.d);
  if (!o.d_range.empty()) {
    auto [lo, hi] = parse_range(o.d_range, "--d-range");
    for (long d = lo; d <= hi; ++d) ds.push_back(d);
  }
  if (!ds.empty() && o.symbolic) throw UsageError("--symbolic-d cannot be combined with a numeric d");
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());

  struct Cell {
    int p, q;
    std::optional<DegreeResult> result;
    std::string error;
  };
  std::vector<Cell> cells;
  for (int p = p_lo; p <= p_hi; ++p)
    for (int q = q_range.first; q <= q_range.second; ++q) cells.push_back({p, q, std::nullopt, {}});

  // Cells are independent; each worker fills its own slots.
  const unsigned workers = std::max(1u, std::min<unsigned>(thread_count(), static_cast<unsigned>(cells.size())));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < cells.size(); i += workers) {
      try {
        cells[i].result = fam->degree(cells[i].p, cells[i].q);
      } catch (const Error& e) {
        cells[i].error = e.what();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& c : cells)
    if (!c.result) throw DomainError("p=" + std::to_string(c.p) + " q=" + std::to_string(c.q) + ": " + c.error);

  Json rows = Json::array();
  std::ostringstream csv;
  csv << "family,p,q,d,degree\n";
  for (const auto& c : cells) {
    auto emit = [&](const std::string& d, const std::string& value) {
      csv << o.family << ',' << c.p << ',' << c.q << ',' << d << ',' << value << '\n';
      rows.push_back({{"family", o.family}, {"p", c.p}, {"q", c.q}, {"d", d}, {"degree", value}});
    };
    if (ds.empty()) {
      emit("symbolic", degree_string(*c.result));
    } else {
      for (long d : ds) {
        if (d < c.result->valid_from_d)
          err << "warning: " << o.family << " p=" << c.p << " q=" << c.q << " d=" << d
              << " is below the validity bound d >= " << c.result->valid_from_d << '\n';
        emit(std::to_string(d), c.result->at(d).get_str());
      }
    }
  }
  if (o.format == "json")
    out << rows.dump(2) << '\n';
  else
    out << csv.str();
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> suites;
  if (o.suite == "all")
    suites = suite_names();
  else
    suites.push_back(o.suite);
  int failed = 0, passed = 0;
  for (const auto& s : suites) {
    for (const auto& r : run_suite(s)) {
      const char* tag = r.informational ? (r.passed ? "INFO-PASS" : "INFO-DIFF") : (r.passed ? "PASS" : "FAIL");
      out << tag << ' ' << s << ": " << r.name;
      if (!r.detail.empty()) out << " [" << r.detail << ']';
      out << '\n';
      if (!r.informational) (r.passed ? passed : failed) += 1;
    }
  }
  out << passed << " passed, " << failed << " failed\n";
  return failed ? kDomainError : kOk;
}

void cmd_collide(const Options& o, std::ostream& out) {
  SingularitySpec sx = parse_type(o.x), sy = parse_type(o.y);
  if (!sx.is_omp() || !sy.is_omp()) throw DomainError("collide supports two ordinary points");
  int p = sx.multiplicity() - 1, q = sy.multiplicity() - 1;
  if (p < q) std::swap(p, q);
  NewtonDiagram n = collide_omp(p, q);
  Json j = {{"vertices", to_json(n)},
            {"multiplicity", n.multiplicity()},
            {"residual_multiplicity", residual_multiplicity(p, q)},
            {"linear", n.is_linear()},
            {"valid_from_d", validity_bound(sx, sy)}};
  if (o.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << "vertices: " << n.to_string() << '\n'
        << "multiplicity: " << n.multiplicity() << '\n'
        << "residual multiplicity: " << residual_multiplicity(p, q) << '\n'
        << "linear: " << (n.is_linear() ? "yes" : "no") << '\n';
  }
}

}  // namespace

unsigned thread_count() {
  const char* env = std::getenv("STRATA_THREADS");
  if (!env || !*env) return std::max(1u, std::thread::hardware_concurrency());
  std::size_t used = 0;
  long v = std::stol(env, &used);
  if (used != std::string(env).size() || v < 1) throw std::invalid_argument("STRATA_THREADS must be a positive integer");
  return static_cast<unsigned>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degrees and classes of equisingular strata of plane curves with one or two singular points."};
  app.name("strata");
  app.footer(kTypeGrammar);
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
    sub->add_option("--out", o.out_file, "Write the output to FILE instead of stdout");
  };
  auto add_d = [&o](CLI::App* sub) {
    auto* d = sub->add_option("--d", o.d, "Numeric curve degree");
    auto* sym = sub->add_flag("--symbolic-d", o.symbolic, "Keep d symbolic (default)");
    d->excludes(sym);
  };

  auto* degree = app.add_subcommand("degree", "Degree of a one- or two-point stratum");
  degree->add_option("--x", o.x, "First singularity type")->required();
  degree->add_option("--y", o.y, "Second singularity type");
  add_d(degree);
  add_format(degree, {"text", "json", "csv"});

  auto* cls = app.add_subcommand("class", "Cohomology class of a stratum");
  cls->add_option("--x", o.x, "First singularity type")->required();
  cls->add_option("--y", o.y, "Second singularity type");
  add_d(cls);
  cls->add_flag("--chip", o.chip, "Chipping product for two ordinary points (needs --d)");
  add_format(cls, {"text", "json"});

  auto* table = app.add_subcommand("table", "Degree table of a family");
  table->add_option("--family", o.family, "omp, cusp, two-omp, cusp-a1 or line-cusp-a1")->required();
  table->add_option("--p-range", o.p_range, "a..b");
  table->add_option("--q-range", o.q_range, "a..b");
  table->add_option("--d-range", o.d_range, "a..b");
  add_d(table);
  add_format(table, {"csv", "json"});

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "ring, corollary, appendix, recursion or all")
      ->required()
      ->check(CLI::IsMember({"ring", "corollary", "appendix", "recursion", "all"}));
  add_format(verify, {"text"});

  auto* collide = app.add_subcommand("collide", "Newton diagram of two colliding ordinary points");
  collide->add_option("--x", o.x, "First ordinary point")->required();
  collide->add_option("--y", o.y, "Second ordinary point")->required();
  add_format(collide, {"text", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  if (table->parsed() && o.format == "text") o.format = "csv";

  std::ostringstream buffer;
  int status = kOk;
  try {
    if (degree->parsed()) cmd_degree(o, buffer, err);
    else if (cls->parsed()) cmd_class(o, buffer);
    else if (table->parsed()) cmd_table(o, buffer, err);
    else if (verify->parsed()) status = cmd_verify(o, buffer);
    else if (collide->parsed()) cmd_collide(o, buffer);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  if (o.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!(f << buffer.str())) {
      err << "error: cannot write " << o.out_file << '\n';
      return kDomainError;
    }
  }
  return status;
}

}  // namespace strata::cli
