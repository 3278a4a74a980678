// spinhecke: character tables, class polynomials, traces and degrees for
// the Hecke-Clifford and spin Hecke algebras.

#include "CLI11.hpp"

#include "spinhecke/characters.hpp"
#include "spinhecke/emit.hpp"
#include "spinhecke/hecke_clifford.hpp"
#include "spinhecke/spin_hecke.hpp"
#include "spinhecke/symfunc.hpp"
#include "spinhecke/traces.hpp"
#include "spinhecke/verify.hpp"

#include <cstdint>
#include <iostream>
#include <map>
#include <stdexcept>

using namespace spinhecke;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
  int n = 0;
  int m = 0;
  std::string format = "json";
  std::string element;
  std::string word;
  bool spin = false;
  std::string suite = "all";
  std::uint64_t seed = 0;
  bool timings = false;
};

void require_rank(int n) {
  if (n < 1) throw std::invalid_argument("--n must be at least 1");
}

int char_table(const Options &o) {
  require_rank(o.n);
  Format f = parse_format(o.format);
  if (o.m == 0) {
    std::cout << emit_table(character_table(o.n), f);
    return kOk;
  }
  if (o.m < o.n) throw std::invalid_argument("--m must be at least --n");
  std::vector<SymPoly> traces;
  for (const auto &mu : odd_partitions(o.n)) traces.push_back(g_tilde(mu, o.m));
  std::cout << emit_table(table_from_traces(o.n, traces), f);
  return kOk;
}

int class_poly(const Options &o) {
  require_rank(o.n);
  std::cout << to_json(reduce(parse_element(o.n, o.element))) << "\n";
  return kOk;
}

int spin_class_poly(const Options &o) {
  require_rank(o.n);
  std::cout << to_json(spin_class_polynomials(parse_word(o.word), o.n)) << "\n";
  return kOk;
}

int gimel_cmd(const Options &o) {
  require_rank(o.n);
  if (o.spin) {
    if (o.word.empty() && o.element.empty()) throw std::invalid_argument("--spin needs --word");
    if (!o.element.empty()) throw std::invalid_argument("--spin takes --word, not --element");
    std::cout << gimel_minus(parse_word(o.word), o.n).to_string() << "\n";
  } else {
    if (o.element.empty()) throw std::invalid_argument("gimel needs --element or --spin --word");
    if (!o.word.empty()) throw std::invalid_argument("--word requires --spin");
    std::cout << gimel(parse_element(o.n, o.element)).to_string() << "\n";
  }
  return kOk;
}

int schur_elements(const Options &o) {
  require_rank(o.n);
  std::map<Partition, Scalar> out;
  if (o.spin) {
    out = spin_schur_elements(o.n);
  } else {
    for (const auto &lambda : strict_partitions(o.n)) out.emplace(lambda, schur_element(lambda));
  }
  std::cout << to_json(out) << "\n";
  return kOk;
}

int generic_degrees(const Options &o) {
  require_rank(o.n);
  std::map<Partition, Scalar> out;
  for (const auto &lambda : strict_partitions(o.n)) out.emplace(lambda, generic_degree(lambda));
  std::cout << to_json(out) << "\n";
  return kOk;
}

int verify_cmd(const Options &o) {
  require_rank(o.n);
  Suite suite = parse_suite(o.suite);
  bool ok = true;
  for (const auto &r : run_suite(suite, o.n, o.seed)) {
    const char *tag = r.skipped ? "SKIP" : r.report.ok ? "PASS" : "FAIL";
    ok = ok && r.report.ok;
    std::cout << tag << "  " << r.name;
    if (!r.report.detail.empty()) std::cout << ": " << r.report.detail;
    if (o.timings) std::cout << " [" << r.seconds << "s]";
    std::cout << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Hecke-Clifford and spin Hecke algebra computations"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App *c) { c->add_option("--n", o.n, "rank n")->required(); };

  auto *ct = app.add_subcommand("char-table", "character table, rows strict and columns odd partitions");
  add_n(ct);
  ct->add_option("--format", o.format, "json, csv or latex")->check(CLI::IsMember({"json", "csv", "latex"}));
  ct->add_option("--m", o.m, "number of variables (default n)");

  auto *cp = app.add_subcommand("class-poly", "class polynomials of an HC_n element");
  add_n(cp);
  cp->add_option("--element", o.element, "element, e.g. \"(v-1)/2 * T1 T2 c1 c3 + c2\"")->required();

  auto *scp = app.add_subcommand("spin-class-poly", "spin class polynomials of R_w");
  add_n(scp);
  scp->add_option("--word", o.word, "reduced word, e.g. 2,1,3")->required();

  auto *gm = app.add_subcommand("gimel", "the symmetrizing trace");
  add_n(gm);
  gm->add_option("--element", o.element, "HC_n element");
  gm->add_flag("--spin", o.spin, "use the spin trace on R_w");
  gm->add_option("--word", o.word, "word for --spin");

  auto *se = app.add_subcommand("schur-elements", "Schur elements c^lambda");
  add_n(se);
  se->add_flag("--spin", o.spin, "spin Schur elements");

  auto *gd = app.add_subcommand("generic-degrees", "generic degrees D^lambda");
  add_n(gd);

  auto *vf = app.add_subcommand("verify", "run a verification suite");
  add_n(vf);
  vf->add_option("--suite", o.suite, "core, oracle, spin or all")
      ->check(CLI::IsMember({"core", "oracle", "spin", "all"}));
  vf->add_option("--seed", o.seed, "random seed");
  vf->add_flag("--timings", o.timings, "print the wall time of each check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*ct) return char_table(o);
    if (*cp) return class_poly(o);
    if (*scp) return spin_class_poly(o);
    if (*gm) return gimel_cmd(o);
    if (*se) return schur_elements(o);
    if (*gd) return generic_degrees(o);
    if (*vf) return verify_cmd(o);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
