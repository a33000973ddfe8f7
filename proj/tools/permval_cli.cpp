// permval: exact lattice-point valuations on permutohedra from the command line.

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permval/alpha.hpp"
#include "permval/battery.hpp"
#include "permval/conepsi.hpp"
#include "permval/counter.hpp"
#include "permval/ehrhart.hpp"
#include "permval/exact.hpp"
#include "permval/mixedval.hpp"
#include "permval/permdata.hpp"

namespace {

using json = nlohmann::ordered_json;
using permval::exact::Int;
using permval::exact::RatVector;
using permval::exact::Rational;
using permval::permdata::SubsetIndex;
using permval::permdata::WeightVector;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

bool use_color() {
  return isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
}

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string pass_word(bool ok) {
  return ok ? paint("pass", "32") : paint("FAIL", "31");
}

std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "not an integer list: '" + text + "'");
    }
    if (used != item.size())
      throw CLI::ValidationError(what, "not an integer list: '" + text + "'");
    out.push_back(value);
  }
  if (out.empty()) throw CLI::ValidationError(what, "empty list");
  return out;
}

// "a,b;c,d" -> rows of rationals, every row the same width.
std::vector<RatVector> parse_vector_rows(const std::string& text, const std::string& what) {
  std::vector<RatVector> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    RatVector v;
    std::stringstream rs(row);
    std::string item;
    while (std::getline(rs, item, ',')) {
      try {
        v.push_back(permval::exact::parse_rational(item));
      } catch (const std::exception&) {
        throw CLI::ValidationError(what, "not a rational: '" + item + "'");
      }
    }
    if (v.empty()) throw CLI::ValidationError(what, "empty vector in '" + text + "'");
    rows.push_back(std::move(v));
  }
  if (rows.empty()) throw CLI::ValidationError(what, "no vectors in '" + text + "'");
  for (const auto& v : rows)
    if (v.size() != rows.front().size())
      throw CLI::ValidationError(what, "vectors have mixed dimensions in '" + text + "'");
  return rows;
}

WeightVector weights_from_flags(const std::string& weights_csv, int hypersimplex_k, int ambient_n) {
  if (!weights_csv.empty()) {
    auto w = parse_int_list(weights_csv, "--weights");
    for (long long x : w)
      if (x < 0) throw CLI::ValidationError("--weights", "weights must be nonnegative");
    int n = static_cast<int>(w.size());
    if (ambient_n != 0 && ambient_n != n)
      throw CLI::ValidationError("--n", "does not match the length of --weights");
    return {n, std::move(w)};
  }
  if (hypersimplex_k <= 0)
    throw CLI::ValidationError("ehrhart", "need --weights or --hypersimplex with --n");
  if (ambient_n <= 0) throw CLI::ValidationError("--n", "required with --hypersimplex");
  if (hypersimplex_k > ambient_n)
    throw CLI::ValidationError("--hypersimplex", "k must satisfy 1 <= k <= n");
  return permval::permdata::hypersimplex(hypersimplex_k, ambient_n);
}

std::string polynomial_text(const permval::ehrhart::EhrhartPolynomial& p) {
  std::string out;
  for (size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i) out += " ";
    out += permval::exact::str(p.coeffs[i]);
  }
  return out;
}

int cmd_alpha_table(int n, bool as_json, int threads) {
  auto table = permval::alpha::alpha_table(n, threads);
  if (as_json) {
    json doc;
    doc["n"] = n;
    doc["entries"] = json::array();
    for (const auto& [s, value] : table.entries) {
      json entry;
      entry["subset"] = s.members;
      entry["composition"] = permval::permdata::subset_to_composition(s).parts;
      entry["alpha"] = permval::exact::str(value);
      entry["orbit_size"] = permval::exact::str(permval::permdata::orbit_size(s));
      entry["positive"] = value > 0;
      doc["entries"].push_back(std::move(entry));
    }
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "alpha table for n = " << n << "\n";
  for (const auto& [s, value] : table.entries) {
    std::cout << "S = {" << permval::permdata::subset_label(s) << "}"
              << "  m = " << permval::permdata::composition_label(
                     permval::permdata::subset_to_composition(s))
              << "  alpha = " << permval::exact::str(value)
              << "  orbit = " << permval::exact::str(permval::permdata::orbit_size(s))
              << "  positive = " << (value > 0 ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_ehrhart(const WeightVector& w, int dilations, bool as_json) {
  auto p = permval::ehrhart::ehrhart_of_weights(w);
  if (as_json) {
    json doc;
    doc["n"] = w.n;
    doc["weights"] = w.weights;
    doc["coefficients"] = json::array();
    for (const auto& c : p.coeffs) doc["coefficients"].push_back(permval::exact::str(c));
    if (dilations >= 0) {
      doc["values"] = json::array();
      for (int t = 0; t <= dilations; ++t)
        doc["values"].push_back(permval::exact::str(
            permval::exact::evaluate_polynomial(p.coeffs, Rational(t))));
    }
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << polynomial_text(p) << "\n";
  if (dilations >= 0) {
    for (int t = 0; t <= dilations; ++t)
      std::cout << "t=" << t << ": "
                << permval::exact::str(
                       permval::exact::evaluate_polynomial(p.coeffs, Rational(t)))
                << "\n";
  }
  return kExitOk;
}

int cmd_count(const WeightVector& w, long long t) {
  auto r = permval::counter::rank_from_weights(w, t);
  std::cout << permval::exact::str(permval::counter::count_lattice_points(r)) << "\n";
  return kExitOk;
}

int cmd_psi2(const std::string& gens) {
  auto rows = parse_vector_rows(gens, "--gens");
  if (rows.size() != 2 || rows.front().size() != 2)
    throw CLI::ValidationError("--gens", "psi2 needs exactly two 2-d generators");
  std::cout << permval::exact::str(permval::conepsi::psi_dim2_general({rows, {}})) << "\n";
  return kExitOk;
}

int cmd_psi3(const std::string& gens) {
  auto rows = parse_vector_rows(gens, "--gens");
  if (rows.size() != 3 || rows.front().size() != 3)
    throw CLI::ValidationError("--gens", "psi3 needs exactly three 3-d generators");
  std::cout << permval::exact::str(permval::conepsi::psi_dim3_unimodular({rows, {}})) << "\n";
  return kExitOk;
}

int cmd_mcmullen(const WeightVector& w) {
  auto res = permval::alpha::mcmullen_reconstruct(w);
  std::cout << "count    = " << permval::exact::str(res.lhs) << "\n";
  std::cout << "mcmullen = " << permval::exact::str(res.rhs) << "\n";
  std::cout << (res.equal ? "equal" : "MISMATCH") << "\n";
  return res.equal ? kExitOk : kExitMismatch;
}

int cmd_pick(const std::string& vertices) {
  auto rows = parse_vector_rows(vertices, "--vertices");
  permval::conepsi::Polygon poly;
  for (const auto& row : rows) {
    if (row.size() != 2)
      throw CLI::ValidationError("--vertices", "vertices must be 2-d");
    std::array<long long, 2> v{};
    for (int i = 0; i < 2; ++i) {
      const Rational& c = row[i];
      if (boost::multiprecision::denominator(c) != 1)
        throw CLI::ValidationError("--vertices", "vertices must be integral");
      v[i] = static_cast<long long>(boost::multiprecision::numerator(c));
    }
    poly.vertices.push_back(v);
  }
  auto res = permval::conepsi::pick_check(poly);
  std::cout << "lattice points = " << permval::exact::str(res.lat) << "\n";
  std::cout << "area           = " << permval::exact::str(res.area) << "\n";
  std::cout << "boundary       = " << permval::exact::str(res.boundary) << "\n";
  std::cout << "mcmullen sum   = " << permval::exact::str(res.mcmullen_sum) << "\n";
  for (size_t i = 0; i < res.vertex_psi.size(); ++i)
    std::cout << "psi at vertex " << i << " = " << permval::exact::str(res.vertex_psi[i])
              << "\n";
  std::cout << (res.all_equal ? "all equal" : "MISMATCH") << "\n";
  return res.all_equal ? kExitOk : kExitMismatch;
}

int cmd_verify(int n) {
  using permval::alpha::alpha_table;
  bool ok = true;
  auto report = [&ok](const std::string& name, bool pass) {
    std::cout << "  " << name << ": " << pass_word(pass) << "\n";
    ok = ok && pass;
  };
  std::cerr << "verify: building alpha table for n = " << n << "\n";
  auto table = alpha_table(n);
  auto identities = permval::alpha::verify_identities(table);
  report("vertex identity (n+1)! alpha(empty) = 1", identities.vertex_sum_ok);
  report("facet identity alpha(S) = 1/2 for |S| = n-1", identities.facets_ok);
  report("top identity alpha([n]) = 1", identities.top_ok);
  report("positivity of all entries", permval::alpha::verify_positivity(table).all_positive());

  bool cross = true;
  for (const auto& [s, value] : table.entries) {
    int codim = n - static_cast<int>(s.members.size());
    if (codim > 3) continue;
    if (permval::conepsi::alpha_via_psi(n, s) != value) cross = false;
  }
  report("cross-pipeline agreement (codim <= 3)", cross);

  std::cerr << "verify: reconstructing the lattice-point count of Pi_" << n << "\n";
  WeightVector pi{n, std::vector<long long>(n, 1)};
  report("McMullen reconstruction on Pi_n", permval::alpha::mcmullen_reconstruct(pi).equal);

  std::cout << (ok ? "verify passed" : "verify FAILED") << "\n";
  return ok ? kExitOk : kExitMismatch;
}

int cmd_reproduce(const std::string& only, const std::string& inject_failure) {
  auto checks = permval::battery::all_checks();
  int ran = 0, failed = 0;
  for (const auto& check : checks) {
    if (!only.empty() && check.tag.find(only) == std::string::npos) continue;
    ++ran;
    std::cerr << "reproduce: running " << check.tag << "\n";
    auto started = std::chrono::steady_clock::now();
    permval::battery::Outcome outcome;
    try {
      outcome = check.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (check.tag == inject_failure) {
      outcome.pass = false;
      outcome.detail = "injected failure for testing";
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                         .count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << check.tag << " [" << check.what << "] (" << seconds << " s)";
    std::cout << pass_word(outcome.pass) << "  " << line.str() << "\n";
    if (!outcome.pass) {
      ++failed;
      if (!outcome.detail.empty()) std::cout << "      " << outcome.detail << "\n";
    }
  }
  if (ran == 0) {
    std::cerr << "reproduce: no check matches '" << only << "'\n";
    return kExitUsage;
  }
  if (failed == 0) {
    std::cout << "all " << ran << " checks passed\n";
    return kExitOk;
  }
  std::cout << failed << " of " << ran << " checks failed\n";
  return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Ehrhart, mixed-valuation and cone-valuation computations on permutohedra"};
  app.require_subcommand(1);

  int table_n = 0, table_threads = 1;
  bool table_json = false;
  auto* alpha_cmd = app.add_subcommand("alpha-table", "print the alpha values of all face orbits");
  alpha_cmd->add_option("n", table_n, "ambient parameter, 1 <= n <= 8")->required();
  alpha_cmd->add_flag("--json", table_json, "emit JSON");
  alpha_cmd->add_option("--threads", table_threads, "parallel fan-out (results are identical)")
      ->check(CLI::PositiveNumber);

  std::string ehr_weights;
  int ehr_k = 0, ehr_n = 0, ehr_dilations = -1;
  bool ehr_json = false;
  auto* ehr_cmd = app.add_subcommand("ehrhart", "Ehrhart polynomial of a weighted Minkowski sum");
  ehr_cmd->add_option("--weights", ehr_weights, "comma list w1,...,wn");
  ehr_cmd->add_option("--hypersimplex", ehr_k, "use the k-th hypersimplex");
  ehr_cmd->add_option("--n", ehr_n, "ambient parameter");
  ehr_cmd->add_option("--dilations", ehr_dilations, "also evaluate at t = 0..d");
  ehr_cmd->add_flag("--json", ehr_json, "emit JSON");

  std::string count_weights;
  long long count_t = 1;
  auto* count_cmd = app.add_subcommand("count", "count lattice points of a dilation");
  count_cmd->add_option("--weights", count_weights, "comma list w1,...,wn")->required();
  count_cmd->add_option("--t", count_t, "dilation factor, t >= 0")->required();

  std::string psi2_gens;
  auto* psi2_cmd = app.add_subcommand("psi2", "Psi of a 2-d cone given by two generators");
  psi2_cmd->add_option("--gens", psi2_gens, "two generators, e.g. \"-2,1;-1,0\"")->required();

  std::string psi3_gens;
  auto* psi3_cmd = app.add_subcommand("psi3", "Psi of a unimodular 3-d cone");
  psi3_cmd->add_option("--gens", psi3_gens, "three generators, e.g. \"1,0,0;1,1,0;0,0,1\"")
      ->required();

  int verify_n = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run the identity and cross-pipeline suite");
  verify_cmd->add_option("n", verify_n, "ambient parameter, 1 <= n <= 8")->required();

  std::string repro_only, repro_inject;
  auto* repro_cmd = app.add_subcommand("reproduce", "re-run the full reference battery");
  repro_cmd->add_option("--only", repro_only, "run only checks whose tag contains this text");
  repro_cmd->add_option("--inject-failure", repro_inject, "force the named check to fail")
      ->group("");  // test-harness hook, hidden from help

  std::string mc_weights;
  auto* mc_cmd = app.add_subcommand("mcmullen", "reconstruct a lattice-point count from alphas");
  mc_cmd->add_option("--weights", mc_weights, "comma list w1,...,wn with every wi >= 1")
      ->required();

  std::string pick_vertices;
  auto* pick_cmd = app.add_subcommand("pick", "check Pick and McMullen forms on a lattice polygon");
  pick_cmd->add_option("--vertices", pick_vertices, "counterclockwise list \"x1,y1;x2,y2;...\"")
      ->required();

  try {
    app.parse(argc, argv);

    if (*alpha_cmd) {
      if (table_n < 1 || table_n > 8)
        throw CLI::ValidationError("alpha-table", "n must satisfy 1 <= n <= 8");
      return cmd_alpha_table(table_n, table_json, table_threads);
    }
    if (*ehr_cmd) return cmd_ehrhart(weights_from_flags(ehr_weights, ehr_k, ehr_n),
                                     ehr_dilations, ehr_json);
    if (*count_cmd) {
      if (count_t < 0) throw CLI::ValidationError("--t", "dilation must be nonnegative");
      return cmd_count(weights_from_flags(count_weights, 0, 0), count_t);
    }
    if (*psi2_cmd) return cmd_psi2(psi2_gens);
    if (*psi3_cmd) return cmd_psi3(psi3_gens);
    if (*verify_cmd) {
      if (verify_n < 1 || verify_n > 8)
        throw CLI::ValidationError("verify", "n must satisfy 1 <= n <= 8");
      return cmd_verify(verify_n);
    }
    if (*repro_cmd) return cmd_reproduce(repro_only, repro_inject);
    if (*mc_cmd) return cmd_mcmullen(weights_from_flags(mc_weights, 0, 0));
    if (*pick_cmd) return cmd_pick(pick_vertices);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
