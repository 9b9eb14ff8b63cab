#include "verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "coalgebra.hpp"
#include "homs.hpp"
#include "samplers.hpp"
#include "transfer.hpp"

namespace affschur {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

json params_json(const VerifyParams& p) {
  return {{"n", p.n}, {"r", p.r}, {"window", p.window}, {"samples", p.samples}, {"seed", p.seed}};
}

json structure_payload(std::int64_t n, const Structure& s) {
  Element e(n, s.empty() ? 0 : s.begin()->first.r());
  for (const auto& [idx, k] : s) e.add(idx, Laurent(static_cast<long>(k)));
  return element_to_string(e);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

template <class F>
VerifyReport timed(const std::string& suite, const VerifyParams& p, F body) {
  VerifyReport report;
  report.suite = suite;
  report.params = p;
  auto start = std::chrono::steady_clock::now();
  body(report);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Basis indices grouped by the residue signature of their tops.
std::map<Tuple, std::vector<BasisIndex>> by_top_signature(const std::vector<BasisIndex>& window, std::int64_t n) {
  std::map<Tuple, std::vector<BasisIndex>> out;
  for (const auto& x : window) out[residue_signature(x.tops(), n)].push_back(x);
  return out;
}

}  // namespace

void VerifyReport::check(bool ok, const std::string& what, const json& payload) {
  ++checks;
  if (ok) return;
  ++failed;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back({{"check", what}, {"payload", payload}});
}

json VerifyReport::to_json() const {
  return {{"suite", suite},         {"params", params_json(params)},     {"pass", pass()},
          {"checks", checks},       {"failed", failed},                  {"counterexamples", counterexamples},
          {"notes", notes},         {"seconds", seconds}};
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"oracle-equivalence", "ring-axioms", "hom-laws", "semigroup-laws",
                                              "mackey",             "lie",         "generators"};
  return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyParams& params) {
  static const std::map<std::string, std::function<VerifyReport(const VerifyParams&)>> table{
      {"oracle-equivalence", verify_oracle_equivalence},
      {"ring-axioms", verify_ring_axioms},
      {"hom-laws", verify_hom_laws},
      {"semigroup-laws", verify_semigroup_laws},
      {"mackey", verify_mackey},
      {"lie", verify_lie},
      {"generators", verify_generators}};
  auto it = table.find(suite);
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second(params);
}

VerifyReport verify_oracle_equivalence(const VerifyParams& p) {
  require(p.n >= 1 && p.r >= 1 && p.window >= 0, "oracle-equivalence needs n >= 1, r >= 1, window >= 0");
  return timed("oracle-equivalence", p, [&](VerifyReport& rep) {
    auto window = basis_window(p.n, p.r, p.window);
    std::size_t nonzero = 0;
    for (const auto& x : window)
      for (const auto& y : window) {
        Structure g = green_product(p.n, x, y);
        Structure s = schur_product(p.n, x, y);
        Structure t = action_product(p.n, x, y);
        if (!g.empty()) ++nonzero;
        rep.check(g == s && s == t, "three products agree",
                  {{"left", index_to_string(x)},
                   {"right", index_to_string(y)},
                   {"green", structure_payload(p.n, g)},
                   {"schur", structure_payload(p.n, s)},
                   {"tensor", structure_payload(p.n, t)}});
      }
    rep.notes.push_back(std::to_string(window.size() * window.size()) + " pairs, " + std::to_string(nonzero) +
                        " with nonzero product");
  });
}

VerifyReport verify_ring_axioms(const VerifyParams& p) {
  require(p.n >= 1 && p.r >= 1, "ring-axioms needs n >= 1, r >= 1");
  return timed("ring-axioms", p, [&](VerifyReport& rep) {
    std::int64_t n = p.n;
    int r = p.r;
    auto window = basis_window(n, r, std::max<std::int64_t>(p.window, 1));
    auto groups = by_top_signature(window, n);
    std::mt19937 rng(p.seed);
    std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
    auto next = [&](const BasisIndex& x) {
      // mostly composable, sometimes arbitrary
      if (rng() % 8 == 0) return window[pick(rng)];
      const auto& choices = groups[residue_signature(x.bottoms(), n)];
      return choices[rng() % choices.size()];
    };
    int samples = p.samples > 0 ? p.samples : 1000;
    for (int k = 0; k < samples; ++k) {
      BasisIndex x = window[pick(rng)];
      BasisIndex y = next(x);
      BasisIndex z = next(y);
      Element ex = Element::basis(n, x), ey = Element::basis(n, y), ez = Element::basis(n, z);
      rep.check(multiply(multiply(ex, ey), ez) == multiply(ex, multiply(ey, ez)), "associativity",
                {{"x", index_to_string(x)}, {"y", index_to_string(y)}, {"z", index_to_string(z)}});
    }
    Element one = identity(n, r);
    for (const auto& x : window) {
      Element e = Element::basis(n, x);
      rep.check(multiply(one, e) == e && multiply(e, one) == e, "identity", index_to_string(x));
    }
    // unity as a sum of orthogonal idempotents xi_{i,i}
    std::vector<Element> idem;
    Element total(n, r);
    for (const auto& i : sorted_tuples(n, r)) {
      idem.push_back(Element::basis(n, canonicalize(i, i, n)));
      total += idem.back();
    }
    rep.check(total == one, "sum of idempotents is the identity");
    for (std::size_t a = 0; a < idem.size(); ++a)
      for (std::size_t b = 0; b < idem.size(); ++b) {
        Element expected = a == b ? idem[a] : Element(n, r);
        rep.check(multiply(idem[a], idem[b]) == expected, "orthogonal idempotents",
                  {{"left", element_to_string(idem[a])}, {"right", element_to_string(idem[b])}});
      }
    for (const auto& x : window) {
      Element e = Element::basis(n, x), sum(n, r);
      std::size_t pieces = 0;
      for (const auto& ea : idem)
        for (const auto& eb : idem) {
          Element piece = multiply(multiply(ea, e), eb);
          if (!piece.is_zero()) ++pieces;
          sum += piece;
        }
      rep.check(sum == e && pieces == 1, "idempotent decomposition", index_to_string(x));
    }
  });
}

VerifyReport verify_hom_laws(const VerifyParams& p) {
  require(p.n >= 1 && p.r >= 1, "hom-laws needs n >= 1, r >= 1");
  return timed("hom-laws", p, [&](VerifyReport& rep) {
    std::int64_t n = p.n;
    int r = p.r;
    const Laurent a = Laurent::param();
    auto window = basis_window(n, r, std::max<std::int64_t>(p.window, 1));
    std::vector<std::pair<Laurent, Laurent>> params{{Laurent(2L), Laurent(3L)},
                                                    {Laurent(make_rational(-1, 2)), Laurent(5L)},
                                                    {Laurent(3L), Laurent(make_rational(-2, 3))},
                                                    {a, a.pow(1000)}};
    for (const auto& [c, d] : params)
      for (std::int64_t s = -2; s <= 2; ++s)
        for (std::int64_t t = -2; t <= 2; ++t)
          for (const auto& x : window) {
            Element e = Element::basis(n, x);
            rep.check(psi(c, s, psi(d, t, e)) == psi(d * c.pow(t), s * t, e), "psi composition",
                      {{"c", c.to_string()}, {"d", d.to_string()}, {"s", s}, {"t", t}, {"x", index_to_string(x)}});
          }
    std::mt19937 rng(p.seed);
    int samples = p.samples > 0 ? p.samples : 40;
    std::vector<WeylSymmetry> ws{WeylSymmetry::rho(n)};
    for (int i = 1; i <= n && n > 1; ++i) ws.push_back(WeylSymmetry::reflection(i, n));
    for (int k = 0; k < samples; ++k) {
      Element x = random_element(rng, window, n, r), y = random_element(rng, window, n, r);
      Element xy = multiply(x, y);
      json payload = {{"x", element_to_json(x)}, {"y", element_to_json(y)}};
      rep.check(psi_a(xy) == multiply(psi_a(x), psi_a(y)), "psi_a multiplicative", payload);
      for (std::int64_t s : {-2, -1, 1, 2})
        rep.check(psi(a, s, xy) == multiply(psi(a, s, x), psi(a, s, y)), "psi_{a,s} multiplicative", payload);
      rep.check(transpose(xy) == multiply(transpose(y), transpose(x)), "transpose anti-multiplicative", payload);
      rep.check(transpose(transpose(x)) == x, "transpose involutive", payload);
      for (const auto& w : ws)
        rep.check(weyl_act(w, xy) == multiply(weyl_act(w, x), weyl_act(w, y)), "Weyl automorphism", payload);
      rep.check(weyl_act(WeylSymmetry::rho(n).pow(n), x) == x, "rho^n acts trivially", payload);
    }
    Tuple shifted(n);
    for (std::int64_t k = 0; k < n; ++k) shifted[k] = k + 1 - n;
    rep.check(WeylSymmetry::rho(n).pow(n) == WeylSymmetry(shifted), "rho^n is the central shift by -n");
    for (const auto& x : window)
      rep.check(weyl_act(WeylSymmetry::rho(n).pow(n), x, n) == x, "rho^n fixes basis elements", index_to_string(x));
    // squares through the transfer, on S(n, n+r)~
    int deg = static_cast<int>(n) + r;
    for (const auto& x : basis_window(n, deg, 1)) {
      Element e = Element::basis(n, x);
      Element sharp = det_tilde_sharp(e);
      rep.check(psi_a(sharp) == det_star(psi_a(e)), "psi_a det~# = det* psi_a", index_to_string(x));
      if (e.is_finite()) rep.check(sharp == det_star(e), "det~# on the finite part is det*", index_to_string(x));
    }
    Rational a0 = 2;
    for (int k = 0; k < std::max(5, samples / 4); ++k) {
      PeriodicMatrix g = random_special_matrix(rng, n, a0);
      rep.check(det_tilde_sharp(evaluate(g, deg), Laurent(a0)) == evaluate(g, r), "det~# e^{n+r} = e^r",
                matrix_to_json(g));
    }
  });
}

VerifyReport verify_semigroup_laws(const VerifyParams& p) {
  require(p.n >= 1 && p.r >= 1, "semigroup-laws needs n >= 1, r >= 1");
  return timed("semigroup-laws", p, [&](VerifyReport& rep) {
    std::int64_t n = p.n;
    const Laurent a = Laurent::param();
    std::vector<Laurent> params{a, Laurent(2L), Laurent(make_rational(-1, 3)), a.pow(-2)};
    std::mt19937 rng(p.seed);
    int samples = p.samples > 0 ? p.samples : 50;
    for (int k = 0; k < samples; ++k) {
      PeriodicMatrix g = random_matrix(rng, n, 2 * static_cast<int>(n) + 1, 2);
      PeriodicMatrix h = random_matrix(rng, n, 2 * static_cast<int>(n) + 1, 1);
      json payload = {{"g", matrix_to_json(g)}, {"h", matrix_to_json(h)}};
      const Laurent& c = params[k % params.size()];
      const Laurent& d = params[(k + 1) % params.size()];
      for (std::int64_t s = -2; s <= 2; ++s)
        for (std::int64_t t = -2; t <= 2; ++t)
          rep.check(eta(c, s, eta(d, t, g)) == eta(d * c.pow(t), s * t, g), "eta composition", payload);
      for (std::int64_t s = -2; s <= 2; ++s)
        rep.check(eta(a, s, g).transpose() == eta(a.pow(-1), s, g.transpose()), "eta transpose", payload);
      rep.check(det_tilde(g * h) == det_tilde(g) * det_tilde(h), "det~ multiplicative", payload);
      for (int r = 1; r <= p.r; ++r)
        rep.check(evaluate(g * h, r) == multiply(evaluate(g, r), evaluate(h, r)), "evaluation multiplicative", payload);
    }
  });
}

VerifyReport verify_mackey(const VerifyParams& p) {
  require(p.r >= 2 && p.r <= 3, "mackey needs r in {2,3}");
  return timed("mackey", p, [&](VerifyReport& rep) {
    int samples = p.samples > 0 ? p.samples : 2;
    auto absorb = [&](const std::string& name, const TransferSuiteResult& res) {
      rep.checks += res.checks;
      rep.failed += res.failures;
      if (!res.ok()) rep.counterexamples.push_back({{"check", name}, {"payload", res.detail}});
      rep.notes.push_back(name + ": " + std::to_string(res.checks) + " checks, " + std::to_string(res.nonzero) +
                          " with nonzero sides");
    };
    absorb("symmetric group on points", finite_transfer_suite(symmetric_on_points(p.r), samples, p.seed));
    absorb("symmetric group on tuples", finite_transfer_suite(symmetric_on_tuples(p.r, 2), samples, p.seed + 1));
    std::vector<Tuple> window;
    for (std::int64_t x = -1; x <= 2; ++x)
      for (std::int64_t y = -1; y <= 2; ++y) window.push_back({x, y});
    absorb("extended affine Weyl group of rank 2", affine_transfer_suite(2, window, samples, p.seed + 2));

    // (g o f)^# = f^# o g^# for maps given by random sparse matrices on 10 indices
    auto all = basis_window(2, 2, 1);
    std::vector<BasisIndex> idx(all.begin(), all.begin() + 10);
    std::mt19937 rng(p.seed);
    std::uniform_int_distribution<std::size_t> pick(0, idx.size() - 1);
    std::uniform_int_distribution<int> num(-3, 3);
    using Matrix = std::map<std::pair<BasisIndex, BasisIndex>, Rational>;
    auto as_map = [](const Matrix& m) {
      RowFiniteMap f;
      f.n = 2;
      f.source_r = f.target_r = 2;
      f.row = [m](const BasisIndex& t) {
        Element out(2, 2);
        for (const auto& [k, c] : m)
          if (k.first == t) out.add(k.second, Laurent(c));
        return out;
      };
      f.column = [m](const BasisIndex& s) -> std::optional<Element> {
        Element out(2, 2);
        for (const auto& [k, c] : m)
          if (k.second == s) out.add(k.first, Laurent(c));
        return out;
      };
      return f;
    };
    for (int k = 0; k < 10 * samples; ++k) {
      Matrix mf, mg;
      for (int e = 0; e < 15; ++e) {
        mf[{idx[pick(rng)], idx[pick(rng)]}] += num(rng);
        mg[{idx[pick(rng)], idx[pick(rng)]}] += num(rng);
      }
      auto res = sharp_compose_check(as_map(mf), as_map(mg), idx, idx);
      rep.check(res.ok, "(g o f)^# = f^# o g^#", res.detail);
    }
    const Laurent a = Laurent::param();
    auto res = sharp_compose_check(phi_map(a, 1, 2, 1), det_multiplication_map(a, 2, 1), basis_window(2, 3, 1),
                                   basis_window(2, 1, 1));
    rep.check(res.ok, "(det o phi)^# = phi^# o det^#", res.detail);
  });
}

VerifyReport verify_lie(const VerifyParams& p) {
  require(p.n >= 1 && p.r >= 1, "lie needs n >= 1, r >= 1");
  return timed("lie", p, [&](VerifyReport& rep) {
    std::int64_t n = p.n;
    int r = p.r;
    std::int64_t span = std::max<std::int64_t>(p.window, 2);
    std::vector<LoopGenerator> gens;
    for (std::int64_t s = 1; s <= n; ++s)
      for (std::int64_t j = 1; j <= n; ++j)
        for (std::int64_t l = -span; l <= span; ++l) gens.push_back({s, j + l * n});
    std::map<std::pair<std::int64_t, std::int64_t>, Element> images;
    for (const auto& g : gens) images.emplace(std::make_pair(g.s, g.t), pi_tilde(g, n, r));
    auto image = [&](const PeriodicMatrix& m) {
      Element out(n, r);
      for (const auto& [key, c] : m.entries()) out += c * images.at(key);
      return out;
    };
    for (const auto& g1 : gens)
      for (const auto& g2 : gens) {
        Element x = images.at({g1.s, g1.t}), y = images.at({g2.s, g2.t});
        PeriodicMatrix b = bracket(PeriodicMatrix::unit(n, g1.s, g1.t), PeriodicMatrix::unit(n, g2.s, g2.t));
        bool ok = false;
        try {
          ok = image(b) == multiply(x, y) - multiply(y, x);
        } catch (const std::out_of_range&) {
          ok = pi_tilde(b, r) == multiply(x, y) - multiply(y, x);
        }
        rep.check(ok, "bracket", {{"g1", {g1.s, g1.t}}, {"g2", {g2.s, g2.t}}});
      }
    int deg = static_cast<int>(n) + r;
    for (std::int64_t s = 1; s <= n; ++s)
      for (std::int64_t d : {-1, 1}) {
        LoopGenerator g{s, s + d};
        rep.check(det_tilde_sharp(pi_tilde(g, n, deg)) == pi_tilde(g, n, r), "det~# pi^{n+r} = pi^r",
                  {{"s", g.s}, {"t", g.t}});
      }
    const Laurent a = Laurent::param();
    for (std::int64_t s = 1; s <= n; ++s)
      for (std::int64_t t = s - 2 * n; t <= s + 2 * n; ++t) {
        if (t == s) continue;
        PeriodicMatrix e = PeriodicMatrix::unit(n, s, t);
        rep.check(psi_a(pi_tilde(e, deg)) == pi_tilde(eta(a, 0, e), deg), "psi_a pi = pi eta_a",
                  {{"s", s}, {"t", t}});
      }
  });
}

VerifyReport verify_generators(const VerifyParams& p) {
  require(p.n >= 1 && p.r >= 1, "generators needs n >= 1, r >= 1");
  return timed("generators", p, [&](VerifyReport& rep) {
    std::int64_t n = p.n;
    int r = p.r;
    auto window = basis_window(n, r, std::max<std::int64_t>(p.window, 1));
    for (const auto& x : window) {
      json payload = index_to_string(x);
      try {
        ExprPtr e = decompose_y(x, n);
        bool in_y = true;
        for (const auto& g : expr_generators(e)) in_y = in_y && in_generator_set(GeneratorKind::Y, g, n);
        rep.check(in_y && evaluate_expr(e, n, r) == Element::basis(n, x), "Y decomposition", payload);
      } catch (const std::exception& err) {
        rep.check(false, "Y decomposition", {{"index", payload}, {"error", err.what()}});
      }
      if (r >= n) continue;
      try {
        ExprPtr e = decompose_x(x, n);
        bool in_x = true;
        for (const auto& g : expr_generators(e)) in_x = in_x && in_generator_set(GeneratorKind::X, g, n);
        rep.check(in_x && evaluate_expr(e, n, r) == Element::basis(n, x), "X decomposition", payload);
      } catch (const std::exception& err) {
        rep.check(false, "X decomposition", {{"index", payload}, {"error", err.what()}});
      }
    }
    if (r >= n) rep.notes.push_back("X decomposition skipped: needs r < n");
  });
}

}  // namespace affschur
