// Command-line front end for the checker surface library.
//
// Exit codes: 0 success, 2 bad input or usage, 3 budget exceeded,
// 4 internal invariant or stabilization failure, 1 anything else.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>

#include "checker/canonical.hpp"
#include "checker/convolution.hpp"
#include "checker/cosets.hpp"
#include "checker/dessin.hpp"
#include "checker/error.hpp"
#include "checker/ik.hpp"
#include "checker/json_io.hpp"
#include "checker/spherical.hpp"

namespace {

using namespace checker;
using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kOther = 1, kSchema = 2, kBudget = 3, kInvariant = 4 };

struct Globals {
  std::uint64_t seed = 0;
  std::string format;
  bool quiet = false;
  std::string output;
  std::uint64_t max_assignments = kDefaultSphericalBudget;
  std::uint64_t max_terms = kDefaultMaxTerms;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

// Writes to a sibling temporary file and renames it into place, so readers
// never observe a partial result.
void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(g.output);
  const std::filesystem::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw SchemaError("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw SchemaError("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, target);
}

void emit_json(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

std::string format_or(const Globals& g, const std::string& fallback, std::initializer_list<const char*> allowed,
                      const char* command) {
  const std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw SchemaError(std::string(command) + " does not support --format " + f);
}

void note(const Globals& g, const std::string& msg) {
  if (!g.quiet) std::cerr << msg << "\n";
}

json complex_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// Label counts: a flag given on the command line wins over the file's field.
std::size_t label(const json& j, const char* key, long flag) {
  if (flag >= 0) return static_cast<std::size_t>(flag);
  if (j.is_object() && j.contains(key)) return j.at(key).get<std::size_t>();
  return 0;
}

// ---------------------------------------------------------------------------

struct CanonArgs {
  std::string input;
  long alpha = -1, beta = -1;
};

void run_canon(const Globals& g, const CanonArgs& a) {
  format_or(g, "json", {"json"}, "canon");
  const json in = read_json(a.input);
  const Triple t = json_io::triple_from_json(in);
  const auto s = canonical_form(t, label(in, "alpha", a.alpha), label(in, "beta", a.beta));
  json out = json_io::to_json(s);
  if (s.alpha() == 0 && s.beta() == 0) out["automorphisms"] = CheckerSurface(s.triple()).automorphisms();
  emit_json(g, out);
}

struct ProductArgs {
  std::string p, q;
  long alpha = -1, beta = -1, gamma = -1;
};

void run_product(const Globals& g, const ProductArgs& a) {
  format_or(g, "json", {"json"}, "product");
  const json pj = read_json(a.p), qj = read_json(a.q);
  const std::size_t beta = label(pj, "beta", a.beta);
  if (a.beta < 0 && qj.is_object() && qj.contains("alpha") && qj.at("alpha").get<std::size_t>() != beta)
    throw SchemaError("p has " + std::to_string(beta) + " white labels but q has " +
                      qj.at("alpha").dump() + " black labels");
  const auto p = canonical_form(json_io::triple_from_json(pj), label(pj, "alpha", a.alpha), beta);
  const auto q = canonical_form(json_io::triple_from_json(qj), beta, label(qj, "beta", a.gamma));
  const auto algebraic = circledast(p, q);
  const auto geometric = concat_geometric(p, q);
  json out{{"product", json_io::to_json(algebraic)}, {"paths_agree", algebraic == geometric}};
  if (!(algebraic == geometric)) {
    out["geometric"] = json_io::to_json(geometric);
    emit_json(g, out);
    throw InvariantViolation("shift-stabilized product and geometric gluing disagree");
  }
  emit_json(g, out);
}

struct ConcentrateArgs {
  std::string p, q;
  long alpha = -1, beta = -1, gamma = -1;
  std::size_t n_from = 4, n_to = 9;
};

void run_concentrate(const Globals& g, const ConcentrateArgs& a) {
  const std::string fmt = format_or(g, "json", {"json", "tsv"}, "concentrate");
  const json pj = read_json(a.p), qj = read_json(a.q);
  const std::size_t beta = label(pj, "beta", a.beta);
  const auto p = canonical_form(json_io::triple_from_json(pj), label(pj, "alpha", a.alpha), beta);
  const auto q = canonical_form(json_io::triple_from_json(qj), beta, label(qj, "beta", a.gamma));
  if (a.n_from > a.n_to) throw SchemaError("--n-from exceeds --n-to");
  const auto target = circledast(p, q);

  std::ostringstream tsv;
  tsv << "n\tsigma\tsigma_decimal\tremainder_decimal\tterms\n";
  json rows = json::array();
  for (std::size_t n = a.n_from; n <= a.n_to; ++n) {
    if (n < std::max({p.n(), q.n(), p.alpha(), p.beta(), q.beta()})) continue;
    if (factorial(n - beta) > Rational(static_cast<unsigned long>(g.max_terms)))
      throw BudgetExceeded("degree " + std::to_string(n) + " needs " + to_string(factorial(n - beta)) +
                           " canonicalizations; --max-terms is " + std::to_string(g.max_terms));
    const auto decomposition = coset_decomposition(p, q, n);
    Rational sigma = 0;
    json terms = json::array();
    for (const auto& [r, c] : decomposition) {
      if (r == target) sigma = c;
      terms.push_back({{"surface", json_io::to_json(r)}, {"coefficient", json_io::rational_json(c)}});
    }
    rows.push_back({{"n", n}, {"sigma", json_io::rational_json(sigma)}, {"decomposition", terms}});
    tsv << n << '\t' << to_string(sigma) << '\t' << to_double(sigma) << '\t' << to_double(1 - sigma) << '\t'
        << decomposition.size() << '\n';
    note(g, "n=" + std::to_string(n) + " sigma=" + to_string(sigma));
  }
  if (fmt == "tsv")
    emit(g, tsv.str());
  else
    emit_json(g, {{"product", json_io::to_json(target)}, {"rows", rows}});
}

struct SphericalArgs {
  std::string surface, xi;
};

void run_spherical(const Globals& g, const SphericalArgs& a) {
  format_or(g, "json", {"json"}, "spherical");
  const Triple t = json_io::triple_from_json(read_json(a.surface));
  const Tensor3 xi = json_io::tensor_from_json(read_json(a.xi));
  const Complex sum = spherical_assignment_sum(t, xi, g.max_assignments);
  const Complex direct = spherical_oracle(t, xi, g.max_assignments);
  emit_json(g, {{"assignment_sum", complex_json(sum)},
                {"tensor_power", complex_json(direct)},
                {"difference", std::abs(sum - direct)},
                {"tensor_norm", xi.norm()}});
}

struct PairArgs {
  std::string p, q;
};

void run_ik_product(const Globals& g, const PairArgs& a) {
  format_or(g, "json", {"json"}, "ik-product");
  const IKElement x = json_io::ik_from_json(read_json(a.p)), y = json_io::ik_from_json(read_json(a.q));
  emit_json(g, json_io::to_json(ik_product(x, y, g.max_terms)));
}

void run_poisson(const Globals& g, const PairArgs& a) {
  format_or(g, "json", {"json"}, "poisson");
  const IKElement x = json_io::ik_from_json(read_json(a.p)), y = json_io::ik_from_json(read_json(a.q));
  emit_json(g, json_io::to_json(poisson_bracket(x, y)));
}

struct ProjectArgs {
  std::string input;
  std::size_t n = 0;
};

void run_ik_project(const Globals& g, const ProjectArgs& a) {
  format_or(g, "json", {"json"}, "ik-project");
  const IKElement x = json_io::ik_from_json(read_json(a.input));
  if (factorial(a.n) > Rational(static_cast<unsigned long>(g.max_terms)))
    throw BudgetExceeded("class sums at degree " + std::to_string(a.n) + " exceed --max-terms");
  emit_json(g, json_io::to_json(project(x, a.n)));
}

struct DessinArgs {
  std::string input;
};

void run_dessin(const Globals& g, const DessinArgs& a) {
  const std::string fmt = format_or(g, "dot", {"dot", "json"}, "dessin");
  const Dessin d = to_dessin(json_io::triple_from_json(read_json(a.input)));
  if (fmt == "dot")
    emit(g, d.to_dot());
  else
    emit_json(g, json_io::to_json(d));
}

struct CensusArgs {
  std::size_t n = 0;
};

// (1/n!) sum_h |C(h)|^2 by brute force over S_n.
std::uint64_t burnside(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<Permutation> all;
  do all.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  std::uint64_t total = 0;
  for (const auto& h : all) {
    std::uint64_t c = 0;
    for (const auto& x : all) c += (x * h == h * x);
    total += c * c;
  }
  return total / all.size();
}

void run_census(const Globals& g, const CensusArgs& a) {
  const std::string fmt = format_or(g, "json", {"json", "tsv"}, "census");
  if (a.n == 0) throw SchemaError("census needs --n >= 1");
  json rows = json::array();
  std::ostringstream tsv;
  tsv << "n\tclasses\tburnside\tagree\tconnected\tgenus_histogram\n";
  bool all_agree = true;
  for (std::size_t n = 1; n <= a.n; ++n) {
    if (factorial(n) * factorial(n) > Rational(static_cast<unsigned long>(g.max_terms)))
      throw BudgetExceeded("census at degree " + std::to_string(n) + " exceeds --max-terms");
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<Permutation> perms;
    do perms.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));

    std::set<CheckerSurface> classes;
    for (const auto& g1 : perms)
      for (const auto& g2 : perms) classes.insert(CheckerSurface(Triple(g1, g2, Permutation::identity(n), n)));

    std::size_t connected = 0;
    std::map<std::size_t, std::size_t> genus_hist;  // over connected classes
    std::map<std::size_t, std::size_t> component_hist;
    for (const auto& s : classes) {
      const auto summary = summarize(s.triple());
      ++component_hist[summary.size()];
      if (summary.size() == 1) {
        ++connected;
        ++genus_hist[summary.front().genus];
      }
    }
    const std::uint64_t expected = burnside(n);
    const bool agree = expected == classes.size();
    all_agree = all_agree && agree;

    json genus_json = json::object(), comp_json = json::object();
    std::ostringstream hist;
    for (const auto& [k, v] : genus_hist) {
      genus_json[std::to_string(k)] = v;
      hist << (hist.tellp() > 0 ? "," : "") << "g" << k << ":" << v;
    }
    for (const auto& [k, v] : component_hist) comp_json[std::to_string(k)] = v;
    rows.push_back({{"n", n},
                    {"classes", classes.size()},
                    {"burnside", expected},
                    {"agree", agree},
                    {"connected", connected},
                    {"genus_of_connected", genus_json},
                    {"components", comp_json}});
    tsv << n << '\t' << classes.size() << '\t' << expected << '\t' << (agree ? "yes" : "no") << '\t' << connected
        << '\t' << hist.str() << '\n';
    note(g, "n=" + std::to_string(n) + ": " + std::to_string(classes.size()) + " classes");
  }
  if (fmt == "tsv")
    emit(g, tsv.str());
  else
    emit_json(g, {{"rows", rows}});
  if (!all_agree) throw InvariantViolation("canonical-form count differs from the Burnside orbit count");
}

struct RandomArgs {
  std::size_t n = 0;
};

void run_random(const Globals& g, const RandomArgs& a) {
  format_or(g, "json", {"json"}, "random");
  std::mt19937_64 rng(g.seed);
  emit_json(g, json_io::surface_report(Triple::random(a.n, rng)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker triangulated surfaces: canonical forms, products, convolution, spherical functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized commands")->default_val(0);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "tsv", "dot"}));
  app.add_flag("--quiet,-q", g.quiet, "Suppress progress messages on stderr");
  app.add_option("--output,-o", g.output, "Write the result to this file (atomically) instead of stdout");
  app.add_option("--max-assignments", g.max_assignments, "Budget for spherical evaluations")
      ->default_val(kDefaultSphericalBudget);
  app.add_option("--max-terms", g.max_terms, "Budget for enumerations (bijections, h-sums, class sums)")
      ->default_val(kDefaultMaxTerms);

  std::function<void()> action;

  CanonArgs canon;
  auto* c = app.add_subcommand("canon", "Canonical form of a labeled surface");
  c->add_option("input", canon.input, "Surface JSON")->required()->check(CLI::ExistingFile);
  c->add_option("--alpha", canon.alpha, "Labeled black triangles");
  c->add_option("--beta", canon.beta, "Labeled white triangles");
  c->callback([&] { action = [&] { run_canon(g, canon); }; });

  ProductArgs product;
  auto* p = app.add_subcommand("product", "Double-coset product by shift stabilization and by gluing");
  p->alias("coset-product");
  p->add_option("p", product.p, "Left factor JSON")->required()->check(CLI::ExistingFile);
  p->add_option("q", product.q, "Right factor JSON")->required()->check(CLI::ExistingFile);
  p->add_option("--alpha", product.alpha, "Black labels of p");
  p->add_option("--beta", product.beta, "White labels of p = black labels of q");
  p->add_option("--gamma", product.gamma, "White labels of q");
  p->callback([&] { action = [&] { run_product(g, product); }; });

  ConcentrateArgs conc;
  auto* k = app.add_subcommand("concentrate", "Coset convolution coefficients and sigma_n across degrees");
  k->add_option("p", conc.p, "Left factor JSON")->required()->check(CLI::ExistingFile);
  k->add_option("q", conc.q, "Right factor JSON")->required()->check(CLI::ExistingFile);
  k->add_option("--alpha", conc.alpha, "Black labels of p");
  k->add_option("--beta", conc.beta, "White labels of p = black labels of q");
  k->add_option("--gamma", conc.gamma, "White labels of q");
  k->add_option("--n-from", conc.n_from, "First degree")->default_val(4);
  k->add_option("--n-to", conc.n_to, "Last degree")->default_val(9);
  k->callback([&] { action = [&] { run_concentrate(g, conc); }; });

  SphericalArgs sph;
  auto* s = app.add_subcommand("spherical", "Spherical function by assignment sum and by tensor power");
  s->add_option("surface", sph.surface, "Surface JSON")->required()->check(CLI::ExistingFile);
  s->add_option("xi", sph.xi, "Tensor JSON")->required()->check(CLI::ExistingFile);
  s->callback([&] { action = [&] { run_spherical(g, sph); }; });

  PairArgs ikp;
  auto* ip = app.add_subcommand("ik-product", "Product in the surface algebra");
  ip->add_option("p", ikp.p, "Left element JSON")->required()->check(CLI::ExistingFile);
  ip->add_option("q", ikp.q, "Right element JSON")->required()->check(CLI::ExistingFile);
  ip->callback([&] { action = [&] { run_ik_product(g, ikp); }; });

  ProjectArgs proj;
  auto* pr = app.add_subcommand("ik-project", "Image of an algebra element in C[S_n x S_n]");
  pr->add_option("input", proj.input, "Element JSON")->required()->check(CLI::ExistingFile);
  pr->add_option("--n", proj.n, "Target degree")->required();
  pr->callback([&] { action = [&] { run_ik_project(g, proj); }; });

  PairArgs pb;
  auto* po = app.add_subcommand("poisson", "Poisson bracket of two elements");
  po->add_option("p", pb.p, "Left element JSON")->required()->check(CLI::ExistingFile);
  po->add_option("q", pb.q, "Right element JSON")->required()->check(CLI::ExistingFile);
  po->callback([&] { action = [&] { run_poisson(g, pb); }; });

  DessinArgs des;
  auto* d = app.add_subcommand("dessin", "Dessin of a surface (DOT or JSON)");
  d->add_option("input", des.input, "Surface JSON")->required()->check(CLI::ExistingFile);
  d->callback([&] { action = [&] { run_dessin(g, des); }; });

  CensusArgs cen;
  auto* ce = app.add_subcommand("census", "Count surfaces of each degree and check against Burnside");
  ce->add_option("--n", cen.n, "Largest degree")->required();
  ce->callback([&] { action = [&] { run_census(g, cen); }; });

  RandomArgs rnd;
  auto* ra = app.add_subcommand("random", "Uniform random triple");
  ra->add_option("--n", rnd.n, "Degree")->required();
  ra->callback([&] { action = [&] { run_random(g, rnd); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kSchema;
  }

  try {
    action();
    return kOk;
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kSchema;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const StabilizationFailure& e) {
    std::cerr << "stabilization failure: " << e.what() << "\n";
    return kInvariant;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
}
