// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "coalgebra.hpp"
#include "homs.hpp"
#include "samplers.hpp"
#include "semigroup.hpp"
#include "tensor_rep.hpp"
#include "verify.hpp"

using namespace affschur;

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }
  void absorb(const VerifyReport& rep, const std::string& where) {
    checks += rep.checks;
    if (rep.failed == 0) return;
    if (failed == 0)
      first_failure = where + ": " + (rep.counterexamples.empty() ? rep.suite : rep.counterexamples.front().dump());
    failed += rep.failed;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally t;
  auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool pass = t.failed == 0 && t.checks > 0;
  if (!pass) ++failures;
  std::printf("criterion %d: %s  %s (%zu checks, %zu failed, %.1fs)\n", number, pass ? "PASS" : "FAIL", title.c_str(),
              t.checks, t.failed, seconds);
  if (!pass && !t.first_failure.empty()) std::printf("    first failure: %s\n", t.first_failure.c_str());
  std::fflush(stdout);
}

std::string context(std::int64_t n, int r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

Element xi(const Tuple& top, const Tuple& bottom, std::int64_t n, long c = 1) {
  return Element::basis(n, canonicalize(top, bottom, n), Laurent(c));
}

/// Random nonzero homogeneous coordinate polynomial of degree r.
CoordPolynomial random_polynomial(std::mt19937& rng, std::int64_t n, int r) {
  auto window = basis_window(n, r, 2);
  std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), count(1, 4);
  CoordPolynomial p{n, r, {}};
  int terms = count(rng);
  while (static_cast<int>(p.terms.size()) < terms) {
    int c = num(rng);
    if (c != 0) p.terms[window[pick(rng)]] = make_rational(c, den(rng));
  }
  return p;
}

}  // namespace

int main() {
  criterion(1, "three multiplication engines agree on all pairs, n,r <= 3, offsets in [-2,2]", [](Tally& t) {
    for (std::int64_t n = 1; n <= 3; ++n)
      for (int r = 1; r <= 3; ++r)
        t.absorb(verify_oracle_equivalence({n, r, 2, 0, 1}), context(n, r));
  });

  criterion(2, "worked products in every engine", [](Tally& t) {
    std::vector<std::pair<std::string, BasisProduct>> engines{
        {"green", green_product}, {"schur", schur_product}, {"tensor", action_product}};
    Element x = xi({1, 1}, {1, 2}, 1);
    Element square = xi({1, 1}, {1, 3}, 1) + xi({1, 1}, {2, 2}, 1, 2);
    Element y = xi({1, 2}, {1, 1}, 2), z = xi({1, 1}, {1, 2}, 2);
    Element yz = xi({1, 2}, {1, 2}, 2) + xi({1, 2}, {2, 1}, 2);
    for (const auto& [name, rule] : engines) {
      t.check(multiply_using(x, x, rule) == square, name + ": square in S(1,2)~");
      t.check(multiply_using(y, z, rule) == yz, name + ": product in S(2,2)");
    }
  });

  criterion(3, "associativity on 1000 triples, identity and idempotents for (n,r) <= (3,3)", [](Tally& t) {
    for (std::int64_t n = 1; n <= 3; ++n)
      for (int r = 1; r <= 3; ++r)
        t.absorb(verify_ring_axioms({n, r, 2, 1000, static_cast<unsigned>(10 * n + r)}), context(n, r));
  });

  criterion(4, "psi composition and multiplicativity, transpose, Weyl automorphisms", [](Tally& t) {
    for (auto [n, r] : std::vector<std::pair<std::int64_t, int>>{{1, 2}, {2, 1}, {2, 2}, {3, 1}})
      t.absorb(verify_hom_laws({n, r, 1, 40, static_cast<unsigned>(n + r)}), context(n, r));
  });

  criterion(5, "transfer squares on S(n,n+r)~ and det~# e^{n+r} = e^r on 20 special matrices", [](Tally& t) {
    const Rational a0 = make_rational(-2, 3);
    std::mt19937 rng(5);
    for (auto [n, r] : std::vector<std::pair<std::int64_t, int>>{{2, 1}, {2, 2}, {3, 1}}) {
      int deg = static_cast<int>(n) + r;
      for (const auto& x : basis_window(n, deg, 1)) {
        Element e = Element::basis(n, x);
        Element sharp = det_tilde_sharp(e);
        t.check(psi_a(sharp) == det_star(psi_a(e)), context(n, r) + " square at " + index_to_string(x));
        if (e.is_finite()) t.check(sharp == det_star(e), context(n, r) + " finite part at " + index_to_string(x));
      }
      for (int k = 0; k < 20; ++k) {
        PeriodicMatrix g = random_special_matrix(rng, n, a0);
        t.check(in_sl_at(g, a0), context(n, r) + " sampler " + matrix_to_string(g));
        t.check(det_tilde_sharp(evaluate(g, deg), Laurent(a0)) == evaluate(g, r),
                context(n, r) + " evaluation at " + matrix_to_string(g));
      }
    }
  });

  criterion(6, "eta composition and transpose, det~ and evaluation multiplicative on 50 matrices", [](Tally& t) {
    for (std::int64_t n = 1; n <= 3; ++n) t.absorb(verify_semigroup_laws({n, 3, 1, 50, static_cast<unsigned>(n)}), context(n, 3));
  });

  criterion(7, "loop algebra brackets, det~# on E_{s,s+-1}, Y and X decompositions", [](Tally& t) {
    for (std::int64_t n = 2; n <= 3; ++n)
      for (int r = 1; r <= 3; ++r) t.absorb(verify_lie({n, r, 2, 0, 1}), "lie " + context(n, r));
    for (std::int64_t n = 1; n <= 3; ++n)
      for (int r = 1; r <= 3; ++r) t.absorb(verify_generators({n, r, 1, 0, 1}), "generators " + context(n, r));
  });

  criterion(8, "Mackey and transitivity on the symmetric group of degree 3 and the affine rank 2 window, "
               "sharp of composites",
            [](Tally& t) {
              t.absorb(verify_mackey({2, 3, 1, 2, 8}), "mackey r=3");
              t.absorb(verify_mackey({2, 2, 1, 2, 9}), "mackey r=2");
            });

  criterion(9, "nonvanishing witnesses for 50 random homogeneous polynomials", [](Tally& t) {
    std::mt19937 rng(9);
    for (int k = 0; k < 50; ++k) {
      std::int64_t n = 1 + k % 2;
      int r = 1 + (k / 2) % 2;
      CoordPolynomial p = random_polynomial(rng, n, r);
      WitnessOptions options;
      options.special = k % 5 == 0;
      options.a0 = make_rational(1 + k % 3, 1 + k % 2);
      Witness w = nonvanishing_witness(p, options);
      Rational value = evaluate_polynomial(p, w.g);
      bool ok = value != 0 && value == w.value && w.determinant == det_tilde(w.g);
      if (options.special) ok = ok && in_sl_at(w.g, options.a0);
      else ok = ok && in_gl_generic(w.g);
      t.check(ok, "witness for sample " + std::to_string(k));
    }
  });

  return failures == 0 ? 0 : 1;
}
