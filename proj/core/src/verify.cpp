#include "spinhecke/verify.hpp"

#include "spinhecke/characters.hpp"
#include "spinhecke/linalg.hpp"
#include "spinhecke/spin_hecke.hpp"
#include "spinhecke/symfunc.hpp"
#include "spinhecke/traces.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spinhecke {

namespace {

const Scalar &vm1() {
  static const Scalar s = Scalar::v() - Scalar(1);
  return s;
}

FormalCombination word(std::initializer_list<Generator> gens, Scalar c = Scalar(1)) {
  return {{std::move(c), GeneratorWord(gens)}};
}

FormalCombination operator+(FormalCombination a, const FormalCombination &b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

FormalCombination scaled(FormalCombination a, const Scalar &s) {
  for (auto &[c, w] : a) c *= s;
  return a;
}

FormalCombination operator-(const FormalCombination &a, const FormalCombination &b) { return a + scaled(b, Scalar(-1)); }

FormalCombination formal_R(int i) {
  using G = Generator;
  return word({G::c(i), G::T(i)}) - word({G::c(i + 1), G::T(i)}) + word({G::c(i + 1)}, vm1());
}

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

FormalCombination formal_product(const FormalCombination &a, const FormalCombination &b) {
  FormalCombination out;
  for (const auto &[ca, wa] : a)
    for (const auto &[cb, wb] : b) {
      GeneratorWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.emplace_back(ca * cb, std::move(w));
    }
  return out;
}

std::vector<NamedRelation> hecke_clifford_relations(int n) {
  using G = Generator;
  const Scalar v = Scalar::v();
  std::vector<NamedRelation> out;
  auto add = [&](std::string name, FormalCombination c) { out.push_back({std::move(name), std::move(c)}); };
  for (int i = 1; i < n; ++i) {
    std::string s = std::to_string(i);
    add("(T" + s + "-v)(T" + s + "+1)", word({G::T(i), G::T(i)}) - word({G::T(i)}, vm1()) - word({}, v));
    add("T" + s + "c" + s + " = c" + std::to_string(i + 1) + "T" + s, word({G::T(i), G::c(i)}) - word({G::c(i + 1), G::T(i)}));
    add("T" + s + "c" + std::to_string(i + 1) + " = c" + s + "T" + s + " + (v-1)(c" + std::to_string(i + 1) + "-c" + s + ")",
        word({G::T(i), G::c(i + 1)}) - word({G::c(i), G::T(i)}) - word({G::c(i + 1)}, vm1()) + word({G::c(i)}, vm1()));
    if (i + 1 < n)
      add("braid T" + s + "T" + std::to_string(i + 1),
          word({G::T(i), G::T(i + 1), G::T(i)}) - word({G::T(i + 1), G::T(i), G::T(i + 1)}));
    for (int j = i + 2; j < n; ++j)
      add("T" + s + "T" + std::to_string(j) + " commute", word({G::T(i), G::T(j)}) - word({G::T(j), G::T(i)}));
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1)
        add("T" + s + "c" + std::to_string(j) + " commute", word({G::T(i), G::c(j)}) - word({G::c(j), G::T(i)}));
  }
  for (int i = 1; i <= n; ++i) {
    add("c" + std::to_string(i) + "^2 = 1", word({G::c(i), G::c(i)}) - word({}));
    for (int j = i + 1; j <= n; ++j)
      add("c" + std::to_string(i) + "c" + std::to_string(j) + " anticommute",
          word({G::c(i), G::c(j)}) + word({G::c(j), G::c(i)}));
  }
  return out;
}

std::vector<NamedRelation> spin_relations(int n) {
  const Scalar v = Scalar::v();
  std::vector<NamedRelation> out;
  for (int i = 1; i < n; ++i) {
    FormalCombination r = formal_R(i);
    std::string s = std::to_string(i);
    out.push_back({"R" + s + "^2 = -(v^2+1)", formal_product(r, r) + word({}, v * v + Scalar(1))});
    if (i + 1 < n) {
      FormalCombination q = formal_R(i + 1);
      FormalCombination lhs = formal_product(formal_product(r, q), r) - formal_product(formal_product(q, r), q);
      out.push_back({"deformed braid R" + s + "R" + std::to_string(i + 1), lhs - scaled(q - r, vm1() * vm1())});
    }
    for (int j = i + 2; j < n; ++j) {
      FormalCombination q = formal_R(j);
      out.push_back({"R" + s + "R" + std::to_string(j) + " anticommute", formal_product(r, q) + formal_product(q, r)});
    }
    for (int j = 1; j <= n; ++j)
      out.push_back({"R" + s + "c" + std::to_string(j) + " anticommute",
                     formal_product(r, word({Generator::c(j)})) + formal_product(word({Generator::c(j)}), r)});
  }
  return out;
}

AlgebraElement evaluate(int n, const FormalCombination &combo) {
  AlgebraElement out(n);
  for (const auto &[c, w] : combo) out += from_word(n, w, c);
  return out;
}

TensorVector evaluate(const TensorSpace &space, const FormalCombination &combo, const TensorVector &x) {
  TensorVector out;
  for (const auto &[c, w] : combo) {
    TensorVector y = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = space.apply(*it, y);
    for (const auto &[t, k] : y) {
      auto [pos, inserted] = out.try_emplace(t, c * k);
      if (!inserted) {
        pos->second += c * k;
        if (pos->second.is_zero()) out.erase(pos);
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

BasisTerm random_basis_term(int n, std::mt19937_64 &rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  std::uniform_int_distribution<CliffordSet> bits(0, (CliffordSet{1} << n) - 1);
  return {Permutation::from_one_line(images), bits(rng)};
}

AlgebraElement random_element(int n, std::mt19937_64 &rng, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  AlgebraElement e(n);
  for (int k = 0; k < terms; ++k) e.add_term(random_basis_term(n, rng), Scalar(coeff(rng)) + Scalar(coeff(rng)) * Scalar::v());
  return e;
}

Suite parse_suite(std::string_view name) {
  if (name == "core") return Suite::Core;
  if (name == "oracle") return Suite::Oracle;
  if (name == "spin") return Suite::Spin;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

namespace {

using Check = std::function<Report()>;

Report relations_in_normal_form(int n) {
  Report rep;
  auto rels = hecke_clifford_relations(n);
  for (const auto &r : rels)
    if (!evaluate(n, r.combo).is_zero()) rep.fail(r.name + " does not vanish");
  if (rep.ok) rep.detail = std::to_string(rels.size()) + " relation instances vanish";
  return rep;
}

// sum of a few products of at most four random generators
AlgebraElement random_short_element(int n, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), len(0, 4), kind(0, 1), t_idx(1, std::max(1, n - 1)), c_idx(1, n);
  AlgebraElement e(n);
  for (int k = 0; k < 2; ++k) {
    GeneratorWord w;
    for (int j = len(rng); j > 0; --j)
      w.push_back(kind(rng) && n > 1 ? Generator::T(t_idx(rng)) : Generator::c(c_idx(rng)));
    e += from_word(n, w, Scalar(coeff(rng)) + Scalar(coeff(rng)) * Scalar::v());
  }
  return e;
}

Report associativity(int n, std::mt19937_64 &rng, int trials) {
  Report rep;
  auto pick = [&] { return n <= 4 ? random_element(n, rng, 3) : random_short_element(n, rng); };
  for (int k = 0; k < trials && rep.ok; ++k) {
    AlgebraElement a = pick(), b = pick(), c = pick();
    if (!((a * b) * c == a * (b * c))) rep.fail("(ab)c != a(bc) for a = " + a.to_string());
  }
  if (rep.ok) rep.detail = std::to_string(trials) + (n <= 4 ? " random triples" : " random triples of short words");
  return rep;
}

Report trace_property(int n, std::mt19937_64 &rng, int trials) {
  Report rep;
  for (int k = 0; k < trials && rep.ok; ++k) {
    AlgebraElement a(n, random_basis_term(n, rng)), b(n, random_basis_term(n, rng));
    if (!(reduce(a * b) == reduce(b * a))) rep.fail("f(hh') != f(h'h) for h = " + a.to_string() + ", h' = " + b.to_string());
  }
  if (rep.ok) rep.detail = std::to_string(trials) + " random basis pairs";
  return rep;
}

Report class_polynomials_in_A(int n, std::mt19937_64 &rng) {
  Report rep;
  std::vector<BasisTerm> terms;
  if (n <= 3) {
    for (const auto &p : all_permutations(n))
      for (CliffordSet s = 0; s < (CliffordSet{1} << n); ++s) terms.push_back({p, s});
  } else {
    for (int k = 0; k < 50; ++k) terms.push_back(random_basis_term(n, rng));
  }
  for (const auto &t : terms) {
    ClassVector f = reduce_term(t);
    for (const auto &x : f.values())
      if (!x.in_ring(Ring::A)) {
        rep.fail("class polynomial " + x.to_string() + " of " + t.to_string() + " is not in A");
        return rep;
      }
  }
  rep.detail = std::to_string(terms.size()) + (n <= 3 ? " basis terms (full basis)" : " sampled basis terms");
  return rep;
}

Report gimel_on_all_classes(int n) {
  Report rep;
  for (const auto &mu : enumerate_partitions(n)) {
    Scalar g = gimel(build_T_w(Composition(mu.parts())));
    if (!(g == gimel_on_standard(n, mu))) rep.fail("gimel(T_w[" + mu.to_string() + "]) = " + g.to_string());
  }
  if (rep.ok) rep.detail = "gimel(T_w_mu) = ((v-1)/2)^(n-l(mu)) for all " + std::to_string(enumerate_partitions(n).size()) + " partitions";
  return rep;
}

Report generic_degrees(int n) {
  Report rep;
  mpq_class total = 0;
  for (const auto &lambda : strict_partitions(n)) {
    ShiftedData d = shifted_data(lambda);
    Scalar D = generic_degree(lambda);
    if (!D.is_polynomial() || !D.in_ring(Ring::Qv)) rep.fail("D^" + lambda.to_string() + " is not a polynomial in v");
    mpq_class at1 = D.specialize(GaussRational(1)).re;
    long hooks = 1;
    for (const auto &row : d.hooks)
      for (int h : row) hooks *= h;
    int e = n - (lambda.length() - lambda.delta()) / 2;
    mpq_class expected = mpq_class(factorial(n)) * mpq_class(1L << e) / mpq_class(hooks);
    if (at1 != expected) rep.fail("D^" + lambda.to_string() + "(1) = " + at1.get_str());
    mpq_class sq = at1 * at1;
    if (lambda.delta()) sq /= 2;
    total += sq;
  }
  if (total != mpq_class(factorial(n) * (1L << n))) rep.fail("sum 2^-delta D(1)^2 = " + total.get_str());
  if (rep.ok) rep.detail = "D polynomial, D(1) hook formula, sum 2^-delta D(1)^2 = 2^n n!";
  return rep;
}

Report table_sanity(int n) {
  Report rep;
  const CharacterTable &t = character_table(n);
  Matrix m(t.rows.size(), t.cols.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < t.cols.size(); ++c) {
      const Scalar &x = t.values[r][c];
      if (!x.in_ring(Ring::Qv) || !x.in_ring(Ring::Real)) rep.fail("entry " + x.to_string() + " not in Q(v)");
      m(r, c) = x;
    }
  if (determinant(m).is_zero()) rep.fail("character table is singular");
  std::size_t last = t.cols.size() - 1;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const Scalar &dim = t.values[r][last];
    auto value = dim.is_polynomial() && dim.num().degree() <= 0 ? dim.specialize(GaussRational(0)).re : mpq_class(-1);
    if (value <= 0 || value.get_den() != 1 || value.get_num() % 2 != 0)
      rep.fail("zeta^" + t.rows[r].to_string() + "(1) = " + dim.to_string() + " is not a positive even integer");
    if (!(dim == generic_degree(t.rows[r]).specialize(GaussRational(1)).re))
      rep.fail("zeta^" + t.rows[r].to_string() + "(1) != D(1)");
  }
  if (rep.ok) rep.detail = "entries in Q(v), invertible, zeta(1) = D(1) positive even";
  return rep;
}

Report frobenius_vs_classes(int n) {
  Report rep;
  const CharacterTable &t = character_table(n);
  for (const auto &mu : enumerate_partitions(n)) {
    auto direct = characters_on_standard(mu);
    auto via = character_values(build_T_w(Composition(mu.parts())));
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      if (!(direct.at(t.rows[r]) == via[r])) rep.fail("zeta^" + t.rows[r].to_string() + "(T_w[" + mu.to_string() + "]) differs");
  }
  if (rep.ok) rep.detail = "Frobenius values on every T_w_mu match the class-polynomial route";
  return rep;
}

Report oracle_table(int n) {
  Report rep;
  if (!(oracle_characters(n) == character_table(n))) rep.fail("tensor-space characters differ from the Frobenius table");
  else rep.detail = "tensor-space table equals Frobenius table";
  return rep;
}

Report oracle_statistics(int n) {
  Report rep;
  SymPoly stat = statistic_trace(n, n);
  TensorSpace space(n, n);
  SymPoly tr = space.trace_poly(build_T_w(Composition({n})));
  if (!(stat == tr)) rep.fail("statistic sum differs from tr(D T_w(n))");
  if (!(tr == g_tilde_row(n, n))) rep.fail("tr(D T_w(n)) differs from g~_n");
  if (rep.ok) rep.detail = "statistic sum = tr(D T_w(n)) = g~_n";
  return rep;
}

Report tensor_relations(int n, std::mt19937_64 &rng, int vectors, bool spin) {
  Report rep;
  TensorSpace space(n, n);
  auto rels = spin ? spin_relations(n) : hecke_clifford_relations(n);
  for (int k = 0; k < vectors && rep.ok; ++k) {
    TensorVector x = space.random_vector(rng, 4);
    for (const auto &r : rels)
      if (!evaluate(space, r.combo, x).empty()) {
        rep.fail(r.name + " does not annihilate a random vector");
        break;
      }
  }
  if (rep.ok) rep.detail = std::to_string(rels.size()) + " relations kill " + std::to_string(vectors) + " random vectors";
  return rep;
}

Report spin_relations_in_normal_form(int n) {
  Report rep = verify_iso(n);
  for (const auto &r : spin_relations(n))
    if (!evaluate(n, r.combo).is_zero()) rep.fail(r.name + " does not vanish");
  return rep;
}

Report spin_gimel_basis(int n) {
  Report rep;
  for (const auto &nu : odd_partitions(n)) {
    Scalar g = gimel_minus(w_gamma(Composition(nu.parts())).word, n);
    Scalar expected(nu.length() == n ? 1 : 0);
    if (!(g == expected)) rep.fail("gimel^-(R_w[" + nu.to_string() + "]) = " + g.to_string());
  }
  if (rep.ok) rep.detail = "gimel^-(R_w_nu) = delta_{nu,1^n}";
  return rep;
}

Report spin_minimal_length(int n) {
  Report rep;
  std::size_t words = 0;
  for (const auto &mu : enumerate_partitions(n)) {
    if (mu.length() == n) continue;
    for (const auto &p : minimal_length_class_elements(mu))
      for (const auto &w : p.all_reduced_words()) {
        ++words;
        Scalar g = gimel_minus(w, n);
        if (!g.is_zero()) rep.fail("gimel^-(R_" + word_to_string(w) + ") = " + g.to_string());
      }
  }
  if (rep.ok) rep.detail = "gimel^- vanishes on " + std::to_string(words) + " reduced words of minimal-length elements";
  return rep;
}

Report spin_odd_words(int n, std::mt19937_64 &rng) {
  Report rep;
  if (n < 2) return rep;
  std::uniform_int_distribution<int> idx(1, n - 1), len(0, 3);
  for (int k = 0; k < 10; ++k) {
    Word w;
    int l = 2 * len(rng) + 1;
    for (int j = 0; j < l; ++j) w.push_back(idx(rng));
    if (!gimel_minus(w, n).is_zero()) rep.fail("gimel^- nonzero on odd word " + word_to_string(w));
  }
  if (rep.ok) rep.detail = "gimel^- vanishes on random odd-length words";
  return rep;
}

Report spin_schur(int n) {
  Report rep;
  for (const auto &[lambda, c] : spin_schur_elements(n))
    if (!(c == spin_schur_from_ordinary(lambda)))
      rep.fail("c_-^" + lambda.to_string() + " = " + c.to_string() + " but the 2-power relation gives " +
               spin_schur_from_ordinary(lambda).to_string());
  if (rep.ok) rep.detail = "c_- = 2^-k c (n=2k), 2^(-k-delta_-) c (n=2k+1), delta_- the type of U_-";
  return rep;
}

Report spin_basis_rank(int n) {
  Report rep;
  // rank at u = 2 bounds the generic rank from below
  auto perms = all_permutations(n);
  std::vector<AlgebraElement> images;
  std::map<BasisTerm, std::size_t> columns;
  for (const auto &p : perms) {
    images.push_back(R_element(p.reduced_word(), n));
    for (const auto &[t, c] : images.back().terms()) columns.try_emplace(t, columns.size());
  }
  Matrix m(images.size(), columns.size());
  const GaussRational u0(2);
  for (std::size_t r = 0; r < images.size(); ++r)
    for (const auto &[t, c] : images[r].terms()) m(r, columns.at(t)) = Scalar(c.specialize(u0));
  std::size_t k = rank(m);
  if (k != perms.size()) rep.fail("rank " + std::to_string(k) + " < n! = " + std::to_string(perms.size()));
  else rep.detail = "Psi(R_sigma) have rank n! = " + std::to_string(k);
  return rep;
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  auto run = [&](std::string name, const Check &check) {
    auto start = std::chrono::steady_clock::now();
    Report r = check();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    out.push_back({std::move(name), std::move(r), false, dt.count()});
  };
  auto skip = [&](std::string name, std::string why) {
    Report r;
    r.detail = std::move(why);
    out.push_back({std::move(name), r, true});
  };
  bool all = suite == Suite::All;

  if (all || suite == Suite::Core) {
    run("relations", [&] { return relations_in_normal_form(n); });
    run("associativity", [&] { return associativity(n, rng, n <= 4 ? 30 : 20); });
    run("trace property", [&] { return trace_property(n, rng, n <= 4 ? 100 : 20); });
    run("class polynomials in A", [&] { return class_polynomials_in_A(n, rng); });
    run("gimel on all classes", [&] { return gimel_on_all_classes(n); });
    run("character table", [&] { return table_sanity(n); });
    run("Frobenius vs class polynomials", [&] { return frobenius_vs_classes(n); });
    run("gimel decomposition", [&] { return verify_gimel_decomposition(n); });
    run("generic degrees", [&] { return generic_degrees(n); });
  }
  if (all || suite == Suite::Oracle) {
    if (n <= 5) {
      run("oracle table", [&] { return oracle_table(n); });
      run("oracle statistics", [&] { return oracle_statistics(n); });
      run("tensor relations", [&] { return tensor_relations(n, rng, n <= 4 ? 50 : 10, false); });
    } else {
      skip("oracle", "tensor space of dimension (2n)^n is too large for n > 5");
    }
  }
  if (all || suite == Suite::Spin) {
    if (n >= 2) {
      run("spin relations", [&] { return spin_relations_in_normal_form(n); });
      if (n <= 5) run("spin tensor relations", [&] { return tensor_relations(n, rng, n <= 4 ? 50 : 5, true); });
      run("spin gimel on basis", [&] { return spin_gimel_basis(n); });
      run("spin gimel on minimal length", [&] { return spin_minimal_length(n); });
      run("spin gimel on odd words", [&] { return spin_odd_words(n, rng); });
      run("spin Schur elements", [&] { return spin_schur(n); });
      if (n <= 5) run("spin basis rank", [&] { return spin_basis_rank(n); });
      else skip("spin basis rank", "n! x 2^n n! rank check is limited to n <= 5");
    } else {
      skip("spin", "sH_1 has no generators");
    }
  }
  return out;
}

}  // namespace spinhecke
