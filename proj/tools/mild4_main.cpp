// Command-line front end: classify quadratic presentations (given directly or
// through a prime set), print graded dimensions, search prime sets by orbit,
// enumerate orbits exhaustively, and probe the product-series criterion.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mild4/classify.hpp"
#include "mild4/matrix_io.hpp"

using json = nlohmann::ordered_json;
using namespace mild4;

namespace {

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json report_to_json(const ClassificationReport& rep) {
  json j;
  if (rep.primes) {
    j["input"] = {{"kind", "primes"}, {"primes", *rep.primes}};
  } else {
    j["input"] = {{"kind", "matrix"}, {"rel", mat_to_json(rep.rel)}};
  }
  j["p"] = rep.p;
  j["orbit"] = rep.orbit ? json(static_cast<int>(*rep.orbit)) : json(nullptr);
  j["mild"] = rep.mild;
  j["dims"] = rep.dims.a;
  j["witness"] = rep.witness.str();
  j["complement"] = rep.complement ? mat_to_json(rep.complement->basis()) : json(nullptr);
  if (rep.linking) {
    const LinkingData& d = *rep.linking;
    json dlogs = json::array();
    for (int i = 0; i < 4; ++i) {
      json row = json::array();
      for (int k = 0; k < 4; ++k) row.push_back(d.dlogs[i][k]);
      dlogs.push_back(std::move(row));
    }
    j["linking"] = {{"l", mat_to_json(d.l)},
                    {"roots", d.roots},
                    {"dlogs", dlogs},
                    {"diag", d.diag}};
  } else {
    j["linking"] = nullptr;
  }
  json methods;
  auto route = [](const std::optional<Orbit>& o) {
    return o ? json(static_cast<int>(*o)) : json(nullptr);
  };
  methods["reduction"] = route(rep.methods.reduction);
  methods["invariants"] = route(rep.methods.invariants);
  methods["quadric"] = route(rep.methods.quadric);
  methods["agree"] = rep.methods.agree;
  j["methods"] = methods;
  j["notes"] = rep.notes;
  return j;
}

void print_matrix(const Mat& m, const char* indent) {
  for (int r = 0; r < m.rows; ++r) {
    std::cout << indent;
    for (int c = 0; c < m.cols; ++c) std::cout << (c ? " " : "") << m.at(r, c);
    std::cout << '\n';
  }
}

void print_report_text(const ClassificationReport& rep) {
  std::cout << "p: " << rep.p << '\n';
  if (rep.primes) {
    std::cout << "primes:";
    for (auto q : *rep.primes) std::cout << ' ' << q;
    std::cout << '\n';
  }
  std::cout << "relators (rows, basis 12 13 14 23 24 34):\n";
  print_matrix(rep.rel, "  ");
  if (rep.orbit) {
    std::cout << "orbit: " << static_cast<int>(*rep.orbit) << '\n';
  } else {
    std::cout << "orbit: none (relators dependent)\n";
  }
  std::cout << "mild: " << (rep.mild ? "yes" : "no") << '\n';
  if (!rep.dims.a.empty()) {
    std::cout << "dims:";
    for (int a : rep.dims.a) std::cout << ' ' << a;
    std::cout << '\n';
  }
  if (rep.complement) {
    std::cout << "complement plane:\n";
    print_matrix(rep.complement->basis(), "  ");
  }
  if (rep.orbit) std::cout << "witness: " << rep.witness.str() << '\n';
  if (rep.linking) {
    std::cout << "linking matrix (mod " << rep.p << "):\n";
    print_matrix(rep.linking->l, "  ");
    std::cout << "primitive roots:";
    for (auto g : rep.linking->roots) std::cout << ' ' << g;
    std::cout << '\n';
  }
  if (rep.methods.reduction) {
    std::cout << "methods: reduction=" << static_cast<int>(*rep.methods.reduction)
              << " invariants=" << static_cast<int>(*rep.methods.invariants)
              << " quadric=" << static_cast<int>(*rep.methods.quadric)
              << " agree=" << (rep.methods.agree ? "yes" : "no") << '\n';
  }
  for (const auto& n : rep.notes) std::cout << "note: " << n << '\n';
}

struct Flags {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> primes;
  std::string matrix_path;
  bool verify = false;
  bool json_out = false;
  int max_degree = 4;
  std::uint32_t max_prime = 0;
  int orbit = 0;
  std::uint64_t limit = 0;
  int dim = 0;
};

int run_classify(const Flags& f) {
  ClassificationReport rep;
  if (!f.matrix_path.empty()) {
    rep = classify(load_matrix_file(f.matrix_path));
  } else {
    rep = classify_prime_set(f.p, f.primes);
  }
  if (f.json_out)
    std::cout << report_to_json(rep).dump(2) << '\n';
  else
    print_report_text(rep);
  return 0;
}

int run_dims(const Flags& f) {
  QuadraticPresentation q = load_matrix_file(f.matrix_path);
  GradedDims d = quotient_dims(q, f.max_degree);
  for (std::size_t i = 0; i < d.a.size(); ++i) std::cout << (i ? " " : "") << d.a[i];
  std::cout << '\n';
  std::cout << "strongly free: " << (series_check(d, 4) ? "yes" : "no") << '\n';
  return 0;
}

int run_poincare(const Flags& f) {
  QuadraticPresentation q = load_matrix_file(f.matrix_path);
  auto residual = question_d_probe(q, f.max_degree);
  std::cout << "residual:";
  for (long long c : residual) std::cout << ' ' << c;
  std::cout << '\n';
  bool zero = true;
  for (long long c : residual) zero = zero && c == 0;
  std::cout << "zero through t^" << f.max_degree << ": " << (zero ? "yes" : "no") << '\n';
  return 0;
}

int run_search(const Flags& f) {
  std::optional<Orbit> target;
  if (f.orbit != 0) {
    if (f.orbit < 1 || f.orbit > 4) throw std::runtime_error("--orbit must be 1..4");
    target = static_cast<Orbit>(f.orbit);
  }
  std::optional<std::uint64_t> limit;
  if (f.limit != 0) limit = f.limit;
  search_prime_sets(f.p, f.max_prime, target, limit, f.verify,
                    [&](const SearchHit& hit) {
                      if (f.json_out) {
                        json j = {{"primes", hit.s.q},
                                  {"orbit", static_cast<int>(hit.orbit)},
                                  {"mild", hit.mild}};
                        std::cout << j.dump() << '\n';
                      } else {
                        for (int i = 0; i < 4; ++i) std::cout << hit.s.q[i] << ' ';
                        std::cout << "orbit " << static_cast<int>(hit.orbit)
                                  << (hit.mild ? " mild" : "") << '\n';
                      }
                    });
  return 0;
}

int run_enumerate(const Flags& f) {
  FieldCtx F(f.p);
  OrbitCensus census = enumerate_orbits(F, f.dim);
  if (f.json_out) {
    json orbits = json::array();
    for (const auto& oc : census.orbits)
      orbits.push_back({{"label", oc.label},
                        {"size", oc.size},
                        {"representative", mat_to_json(oc.representative.basis())}});
    json j = {{"p", f.p}, {"dim", f.dim}, {"total", census.total},
              {"count", census.orbits.size()}, {"orbits", orbits}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "p " << f.p << " dim " << f.dim << ": " << census.orbits.size()
            << " orbits, " << census.total << " subspaces\n";
  for (const auto& oc : census.orbits) {
    std::cout << "  label " << oc.label << "  size " << oc.size << "  rep";
    const Mat& b = oc.representative.basis();
    for (int r = 0; r < b.rows; ++r) {
      std::cout << (r ? " /" : "");
      for (int c = 0; c < b.cols; ++c) std::cout << ' ' << b.at(r, c);
    }
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit classification of 4-generator quadratic presentations over F_p"};
  app.require_subcommand(1);
  Flags f;

  auto* classify_cmd = app.add_subcommand("classify", "classify one presentation or prime set");
  auto* popt = classify_cmd->add_option("--p", f.p, "odd prime modulus");
  auto* primes_opt =
      classify_cmd->add_option("--primes", f.primes, "four primes congruent to 1 mod p")
          ->delimiter(',');
  auto* matrix_opt = classify_cmd->add_option("--matrix", f.matrix_path, "relator matrix file");
  classify_cmd->add_flag("--verify", f.verify,
                         "run all three routes (classify always does; affects search)");
  classify_cmd->add_flag("--json", f.json_out, "emit a JSON report");
  primes_opt->needs(popt);
  matrix_opt->excludes(primes_opt);
  matrix_opt->excludes(popt);

  auto* dims_cmd = app.add_subcommand("dims", "graded dimensions of the quotient");
  dims_cmd->add_option("--matrix", f.matrix_path, "relator matrix file")->required();
  dims_cmd->add_option("--max-degree", f.max_degree, "degree cap (2..6)")
      ->check(CLI::Range(2, kDegreeCap));

  auto* search_cmd = app.add_subcommand("search", "scan prime sets by orbit");
  search_cmd->add_option("--p", f.p, "odd prime modulus")->required();
  search_cmd->add_option("--max-prime", f.max_prime, "upper bound on the primes (<= 1e5)")
      ->required();
  search_cmd->add_option("--orbit", f.orbit, "only emit sets landing in this orbit (1..4)");
  search_cmd->add_option("--limit", f.limit, "stop after this many results");
  search_cmd->add_flag("--verify", f.verify, "classify each hit with all three routes");
  search_cmd->add_flag("--json", f.json_out, "one JSON object per line");

  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive orbit census");
  enum_cmd->add_option("--p", f.p, "odd prime modulus")->required();
  enum_cmd->add_option("--dim", f.dim, "subspace dimension (1 or 2)")->required();
  enum_cmd->add_flag("--json", f.json_out, "emit a JSON census");

  auto* poin_cmd = app.add_subcommand("poincare", "product-series residual");
  poin_cmd->add_option("--matrix", f.matrix_path, "relator matrix file")->required();
  poin_cmd->add_option("--max-degree", f.max_degree, "degree cap (2..6)")
      ->check(CLI::Range(2, kDegreeCap));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (classify_cmd->parsed()) {
      if (f.matrix_path.empty() && f.primes.empty())
        throw std::runtime_error("classify needs --matrix or --p/--primes");
      return run_classify(f);
    }
    if (dims_cmd->parsed()) return run_dims(f);
    if (search_cmd->parsed()) return run_search(f);
    if (enum_cmd->parsed()) return run_enumerate(f);
    if (poin_cmd->parsed()) return run_poincare(f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::InternalInvariantViolation ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
