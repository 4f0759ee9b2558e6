// racov: construct matrices, compute exact and simulated random access
// expectations, evaluate the large-x bounds and regenerate figure data.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "racov/asym.hpp"
#include "racov/construct.hpp"
#include "racov/errors.hpp"
#include "racov/exact.hpp"
#include "racov/figures.hpp"
#include "racov/matrix_io.hpp"
#include "racov/report.hpp"
#include "racov/sim.hpp"

using namespace racov;

namespace {

enum Exit { kOk = 0, kRuntime = 1, kUsage = 2, kGuard = 3, kSearch = 4 };

// Output goes to --out when given, otherwise stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }
  void finish() {
    get().flush();
    if (!get()) throw std::runtime_error("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

template <typename T>
std::vector<T> split_list(const std::string& s, std::size_t min_size, std::size_t max_size, const char* what) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T v{};
    if (!(is >> v) || !is.eof()) throw std::invalid_argument(std::string("cannot parse ") + what + " '" + s + "'");
    out.push_back(v);
  }
  if (out.size() < min_size || out.size() > max_size)
    throw std::invalid_argument(std::string("wrong number of fields in ") + what + " '" + s + "'");
  return out;
}

// "a:b" with 2 <= a <= b.
std::vector<std::size_t> parse_range(std::string s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("--k-range expects a:b");
  s[colon] = ',';
  auto r = split_list<std::size_t>(s, 2, 2, "--k-range a:b");
  if (r[0] < 2 || r[1] < r[0]) throw std::invalid_argument("--k-range needs 2 <= a <= b");
  return r;
}

construct::ConstructionParams params_from_flag(const std::string& text) {
  const auto v = split_list<std::uint64_t>(text, 3, 4, "--construction k,x,y[,q]");
  if (v.size() == 4) return construct::params_for_field(v[0], v[1], v[2], v[3]);
  return construct::default_params(v[0], v[1], v[2]);
}

std::size_t strand_index(long long strand, std::size_t k) {
  if (strand < 1 || static_cast<std::size_t>(strand) > k)
    throw std::invalid_argument("--strand must lie in 1.." + std::to_string(k));
  return static_cast<std::size_t>(strand - 1);
}

// Exactly one of the named options must be present.
void require_one(CLI::App* app, std::initializer_list<const char*> names) {
  std::size_t given = 0;
  std::string list;
  for (auto n : names) {
    given += app->count(n);
    list += (list.empty() ? "" : " | ") + std::string(n);
  }
  if (given != 1) throw CLI::ValidationError(app->get_name() + " needs exactly one of " + list);
}

struct Options {
  std::string out;
  std::string matrix;
  std::string construction;
  std::string graph;
  std::string k4;
  long long strand = 0;
  bool alpha_csv = false;
  std::uint64_t trials = 100000;
  std::uint64_t seed = sim::kDefaultSeed;
  std::size_t k = 0, x = 0, y = 1;
  std::uint64_t q = 0;
  double p = -1, P = -1, alpha = -1;
  bool ubfin = false;
  std::string k_range;
  std::string objective;
  std::string figure;
};

void run_construct(const Options& o) {
  auto params = o.q ? construct::params_for_field(o.k, o.x, o.y, o.q) : construct::default_params(o.k, o.x, o.y);
  const auto g = construct::build_gk(params);
  const auto cert = construct::verify_recovery_complete(g);
  if (!cert.complete) throw SearchError("constructed matrix failed recovery verification");
  io::write_matrix_file(o.out, g);
  nlohmann::ordered_json side = {{"k", params.k},
                                 {"x", params.x},
                                 {"y", params.y},
                                 {"q", params.field.q()},
                                 {"exponents", params.exponents.elements},
                                 {"n", g.n()},
                                 {"verified", true}};
  std::ofstream js(o.out + ".json");
  js << side.dump(2) << '\n';
  if (!js) throw std::runtime_error("cannot write " + o.out + ".json");
}

void run_exact(CLI::App* app, const Options& o) {
  require_one(app, {"--matrix", "--construction", "--k4"});
  Sink sink(o.out);
  if (!o.k4.empty()) {
    const auto xy = split_list<std::uint64_t>(o.k4, 2, 2, "--k4 x,y");
    const auto ap = exact::alpha_profile_k4(xy[0], xy[1]);
    if (o.alpha_csv) {
      report::write_alpha_csv(sink.get(), ap);
    } else {
      const double t = exact::expectation_value(ap);
      exact::ExpectationReport rep{{0, 1, 2, 3}, {t, t, t, t}, {0, 0, 0, 0}, t, exact::Method::closed_form_k4, 0};
      if (o.strand) {
        const auto i = strand_index(o.strand, 4);
        rep.strands = {i};
        rep.expectation = {t};
        rep.std_error = {0};
      }
      report::write_expectation_csv(sink.get(), rep);
    }
    sink.finish();
    return;
  }
  const auto g = o.matrix.empty() ? construct::build_gk(params_from_flag(o.construction)) : io::read_matrix_file(o.matrix);
  if (o.alpha_csv) {
    report::write_alpha_csv(sink.get(), exact::alpha_bruteforce(g, strand_index(o.strand ? o.strand : 1, g.k())));
  } else if (o.strand) {
    const auto i = strand_index(o.strand, g.k());
    const double t = exact::expectation_value(exact::alpha_bruteforce(g, i));
    report::write_expectation_csv(sink.get(), {{i}, {t}, {0}, t, exact::Method::bruteforce, 0});
  } else {
    report::write_expectation_csv(sink.get(), exact::bruteforce_report(g));
  }
  sink.finish();
}

void run_simulate(CLI::App* app, const Options& o) {
  require_one(app, {"--matrix", "--graph", "--construction"});
  Sink sink(o.out);
  exact::ExpectationReport rep;
  if (!o.graph.empty()) {
    const auto v = split_list<double>(o.graph, 3, 3, "--graph k,p,P");
    if (!(v[0] >= 2 && v[0] == static_cast<double>(static_cast<std::size_t>(v[0]))))
      throw std::invalid_argument("--graph k must be an integer >= 2");
    const auto k = static_cast<std::size_t>(v[0]);
    if (o.strand) strand_index(o.strand, k);
    rep = sim::mc_tau_graph({k, v[1], v[2]}, o.trials, o.seed);
    if (o.strand) rep.strands = {static_cast<std::size_t>(o.strand - 1)};
  } else {
    const auto g = o.matrix.empty() ? construct::build_gk(params_from_flag(o.construction)) : io::read_matrix_file(o.matrix);
    rep = sim::mc_tau_matrix(g, strand_index(o.strand ? o.strand : 1, g.k()), o.trials, o.seed);
  }
  report::write_simulation_csv(sink.get(), rep, o.seed);
  sink.finish();
}

void run_asymptotic(CLI::App* app, const Options& o) {
  const bool pair = app->count("--p") || app->count("--P");
  const bool alpha = app->count("--alpha") > 0;
  std::vector<asym::AsymptoticBound> rows;
  if (o.ubfin) {
    if (pair || alpha || app->count("--k")) throw CLI::ValidationError("--ubfin takes only --k-range a:b");
    const auto r = parse_range(o.k_range);
    for (std::size_t k = r[0]; k <= r[1]; ++k) {
      const double p = 2.0 / static_cast<double>(k * k + k);
      rows.push_back(asym::tk_bound(k, p, p));
      rows.back().total = asym::ubfin_bound(k);
    }
  } else {
    if (!app->count("--k")) throw CLI::ValidationError("asymptotic needs --k with --p/--P or --alpha, or --ubfin");
    if (pair == alpha) throw CLI::ValidationError("asymptotic needs exactly one of --p/--P | --alpha");
    if (pair && !(app->count("--p") && app->count("--P"))) throw CLI::ValidationError("--p and --P go together");
    rows.push_back(alpha ? asym::tk_bound_alpha(o.k, o.alpha) : asym::tk_bound(o.k, o.p, o.P));
  }
  Sink sink(o.out);
  report::write_asymptotic_header(sink.get());
  for (const auto& b : rows) report::write_asymptotic_row(sink.get(), b);
  sink.finish();
}

void run_optimize(const Options& o) {
  Sink sink(o.out);
  auto& out = sink.get();
  if (o.objective == "graph_pP") {
    const auto m = asym::optimize_pP(o.k);
    out << "objective,k,p,P,value\n"
        << o.objective << ',' << o.k << ',' << report::format_real(m.p) << ',' << report::format_real(m.P) << ','
        << report::format_real(m.value) << '\n';
  } else {
    std::function<double(double)> f;
    if (o.objective == "graph") {
      const auto k = o.k;
      f = [k](double a) { return asym::tk_bound_alpha(k, a).total; };
    } else {
      if (o.k != 3) throw std::invalid_argument(o.objective + " is defined for --k 3 only");
      f = o.objective == "exact3" ? asym::k3_exact : asym::k3_upper_appendix;
    }
    const auto m = asym::optimize_alpha(f);
    out << "objective,k,alpha,value\n"
        << o.objective << ',' << o.k << ',' << report::format_real(m.argmin) << ',' << report::format_real(m.value) << '\n';
  }
  sink.finish();
}

void run_sweep(const Options& o) {
  Sink sink(o.out);
  report::write_table(sink.get(), figures::sweep(o.figure));
  sink.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random access coverage depth: exact, simulated and asymptotic expectations"};
  app.require_subcommand(1);
  Options o;

  auto* con = app.add_subcommand("construct", "build G_k(x, y), verify it, write the matrix and a JSON sidecar");
  con->add_option("--k", o.k, "number of information strands")->required()->check(CLI::Range(2, 8));
  con->add_option("--x", o.x, "columns per edge block")->required()->check(CLI::PositiveNumber);
  con->add_option("--y", o.y, "copies of each unit vector")->check(CLI::PositiveNumber);
  con->add_option("--q", o.q, "field order (a power of two for k >= 3); searched when omitted");
  con->add_option("--out", o.out, "matrix file; the sidecar is written to <out>.json")->required();

  auto* ex = app.add_subcommand("exact", "exact expectations by enumeration or the k = 4 closed form");
  ex->add_option("--matrix", o.matrix, "matrix file");
  ex->add_option("--construction", o.construction, "k,x,y[,q]");
  ex->add_option("--k4", o.k4, "x,y: closed form for G_4(x, y)");
  ex->add_option("--strand", o.strand, "1-based strand (default: all)");
  ex->add_flag("--alpha", o.alpha_csv, "print the subset-count profile instead");
  ex->add_option("--out", o.out, "output CSV (default stdout)");

  auto* simc = app.add_subcommand("simulate", "Monte Carlo estimate of the expectation");
  simc->add_option("--matrix", o.matrix, "matrix file");
  simc->add_option("--graph", o.graph, "k,p,P: complete-graph model");
  simc->add_option("--construction", o.construction, "k,x,y[,q]");
  simc->add_option("--strand", o.strand, "1-based strand (default 1)");
  simc->add_option("--trials", o.trials, "number of trials")->check(CLI::PositiveNumber);
  simc->add_option("--seed", o.seed, "RNG seed");
  simc->add_option("--out", o.out, "output CSV (default stdout)");

  auto* as = app.add_subcommand("asymptotic", "evaluate the large-x bound");
  as->add_option("--k", o.k, "number of strands")->check(CLI::Range(2, 100000));
  as->add_option("--p", o.p, "edge draw probability");
  as->add_option("--P", o.P, "vertex draw probability");
  as->add_option("--alpha", o.alpha, "y / x");
  as->add_flag("--ubfin", o.ubfin, "closed form at p = P over a range of k");
  as->add_option("--k-range", o.k_range, "a:b");
  as->add_option("--out", o.out, "output CSV (default stdout)");

  auto* opt = app.add_subcommand("optimize", "minimise a bound over alpha or the constraint line");
  opt->add_option("--k", o.k, "number of strands")->required()->check(CLI::Range(2, 100000));
  opt->add_option("--objective", o.objective, "exact3 | appendix3 | graph | graph_pP")
      ->required()
      ->check(CLI::IsMember({"exact3", "appendix3", "graph", "graph_pP"}));
  opt->add_option("--out", o.out, "output CSV (default stdout)");

  auto* sw = app.add_subcommand("sweep", "regenerate a figure data set");
  sw->add_option("--figure", o.figure, "fig_tq2 | fig_k4 | fig_ubfin")
      ->required()
      ->check(CLI::IsMember({"fig_tq2", "fig_k4", "fig_ubfin"}));
  sw->add_option("--out", o.out, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
    if (*con) run_construct(o);
    if (*ex) run_exact(ex, o);
    if (*simc) run_simulate(simc, o);
    if (*as) run_asymptotic(as, o);
    if (*opt) run_optimize(o);
    if (*sw) run_sweep(o);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "racov: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "racov: " << e.what() << '\n';
    return kUsage;
  } catch (const GuardError& e) {
    std::cerr << "racov: guard: " << e.what() << '\n';
    return kGuard;
  } catch (const SearchError& e) {
    std::cerr << "racov: search failed: " << e.what() << '\n';
    return kSearch;
  } catch (const std::exception& e) {
    std::cerr << "racov: " << e.what() << '\n';
    return kRuntime;
  }
  return kOk;
}
