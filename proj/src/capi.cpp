#include "affschur/affschur.h"

#include <cstring>
#include <filesystem>
#include <string>

#include "cache.hpp"
#include "coalgebra.hpp"
#include "expr.hpp"
#include "homs.hpp"
#include "serialize.hpp"
#include "verify.hpp"

using namespace affschur;

struct affschur_element {
  Element value;
};

struct affschur_matrix {
  PeriodicMatrix value;
};

struct affschur_cache {
  explicit affschur_cache(std::string path) : value(std::move(path)) {}
  StructureCache value;
};

namespace {

thread_local std::string last_error;
thread_local SourcePos last_pos{0, 0};

class VerifyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

affschur_status fail(affschur_status status, const std::string& message) {
  last_error = message;
  return status;
}

/// Runs f, mapping exceptions onto status codes.
template <class F>
affschur_status guard(F&& f) {
  last_error.clear();
  last_pos = {0, 0};
  try {
    f();
    return AFFSCHUR_OK;
  } catch (const ParseError& e) {
    last_pos = e.pos();
    return fail(AFFSCHUR_ERR_PARSE, e.what());
  } catch (const FormatError& e) {
    return fail(AFFSCHUR_ERR_PARSE, e.what());
  } catch (const ContextError& e) {
    return fail(AFFSCHUR_ERR_CONTEXT, e.what());
  } catch (const ArithmeticError& e) {
    return fail(AFFSCHUR_ERR_DOMAIN, e.what());
  } catch (const VerifyFailure& e) {
    return fail(AFFSCHUR_ERR_VERIFY, e.what());
  } catch (const DecompositionError& e) {
    return fail(AFFSCHUR_ERR_VERIFY, e.what());
  } catch (const ReconstructionError& e) {
    return fail(AFFSCHUR_ERR_VERIFY, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(AFFSCHUR_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(AFFSCHUR_ERR_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(AFFSCHUR_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(AFFSCHUR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AFFSCHUR_ERR_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* name) {
  if (!p) throw std::invalid_argument(std::string(name) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

affschur_element* wrap(Element e) { return new affschur_element{std::move(e)}; }

BasisIndex parse_index(std::int64_t n, std::string text) {
  std::size_t start = text.find_first_not_of(" \t");
  if (start != std::string::npos && text[start] == '[') text.insert(start, "xi");
  NodePtr node = parse_expression(text);
  if (node->kind != ParseNode::Kind::Atom) throw std::invalid_argument("expected a single basis index");
  return canonicalize(node->top, node->bottom, n);
}

}  // namespace

extern "C" {

const char* affschur_version(void) { return "1.0.0"; }

const char* affschur_status_name(affschur_status status) {
  switch (status) {
    case AFFSCHUR_OK: return "ok";
    case AFFSCHUR_ERR_ARGUMENT: return "argument";
    case AFFSCHUR_ERR_PARSE: return "parse";
    case AFFSCHUR_ERR_CONTEXT: return "context";
    case AFFSCHUR_ERR_DOMAIN: return "domain";
    case AFFSCHUR_ERR_VERIFY: return "verify";
    case AFFSCHUR_ERR_IO: return "io";
    case AFFSCHUR_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* affschur_last_error(void) { return last_error.c_str(); }

void affschur_last_error_position(int* line, int* column) {
  if (line) *line = last_pos.line;
  if (column) *column = last_pos.column;
}

void affschur_string_free(char* s) { std::free(s); }

affschur_status affschur_element_parse(int64_t n, const char* text, affschur_element** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(evaluate(parse_expression(text), n));
  });
}

affschur_status affschur_element_from_json(const char* text, affschur_element** out) {
  return guard([&] {
    need(text, "json");
    need(out, "out");
    *out = wrap(element_from_json(parse_json(text)));
  });
}

affschur_status affschur_identity(int64_t n, int r, affschur_element** out) {
  return guard([&] {
    need(out, "out");
    if (n < 1 || r < 0) throw std::invalid_argument("need n >= 1 and r >= 0");
    *out = wrap(identity(n, r));
  });
}

affschur_status affschur_element_to_json(const affschur_element* x, char** out) {
  return guard([&] {
    need(x, "element");
    need(out, "out");
    *out = copy_string(element_to_json(x->value).dump());
  });
}

affschur_status affschur_element_to_string(const affschur_element* x, char** out) {
  return guard([&] {
    need(x, "element");
    need(out, "out");
    *out = copy_string(element_to_string(x->value));
  });
}

affschur_status affschur_element_context(const affschur_element* x, int64_t* n, int* r) {
  return guard([&] {
    need(x, "element");
    if (n) *n = x->value.n();
    if (r) *r = x->value.r();
  });
}

affschur_status affschur_element_term_count(const affschur_element* x, size_t* out) {
  return guard([&] {
    need(x, "element");
    need(out, "out");
    *out = x->value.terms().size();
  });
}

affschur_status affschur_element_equal(const affschur_element* x, const affschur_element* y, int* out) {
  return guard([&] {
    need(x, "left");
    need(y, "right");
    need(out, "out");
    *out = x->value == y->value ? 1 : 0;
  });
}

void affschur_element_free(affschur_element* x) { delete x; }

affschur_status affschur_add(const affschur_element* x, const affschur_element* y, affschur_element** out) {
  return guard([&] {
    need(x, "left");
    need(y, "right");
    need(out, "out");
    *out = wrap(x->value + y->value);
  });
}

affschur_status affschur_multiply(const affschur_element* x, const affschur_element* y, affschur_engine engine,
                                  affschur_element** out) {
  return guard([&] {
    need(x, "left");
    need(y, "right");
    need(out, "out");
    switch (engine) {
      case AFFSCHUR_ENGINE_GREEN: *out = wrap(multiply(x->value, y->value)); break;
      case AFFSCHUR_ENGINE_SCHUR: *out = wrap(multiply_schur_oracle(x->value, y->value)); break;
      case AFFSCHUR_ENGINE_TENSOR: *out = wrap(multiply_via_action(x->value, y->value)); break;
      default: throw std::invalid_argument("unknown engine");
    }
  });
}

affschur_status affschur_multiply_checked(const affschur_element* x, const affschur_element* y,
                                          affschur_element** out) {
  return guard([&] {
    need(x, "left");
    need(y, "right");
    need(out, "out");
    Element g = multiply(x->value, y->value);
    Element s = multiply_schur_oracle(x->value, y->value);
    Element t = multiply_via_action(x->value, y->value);
    if (!(g == s) || !(g == t))
      throw VerifyFailure("engines disagree: green " + element_to_string(g) + ", schur " + element_to_string(s) +
                          ", tensor " + element_to_string(t));
    *out = wrap(std::move(g));
  });
}

affschur_status affschur_specialize(const affschur_element* x, const char* a0, affschur_element** out) {
  return guard([&] {
    need(x, "element");
    need(a0, "a0");
    need(out, "out");
    Rational v = parse_rational(a0);
    *out = wrap(x->value.map_coefficients([&](const Laurent& c) { return Laurent(c.eval(v)); }));
  });
}

affschur_status affschur_hom_apply(const char* kind, const affschur_element* x, int64_t s, const int64_t* window,
                                   size_t window_len, const char* param, affschur_element** out) {
  return guard([&] {
    need(kind, "kind");
    need(x, "element");
    need(out, "out");
    std::string k = kind;
    std::optional<Laurent> c;
    if (param) c = Laurent::parse(param);
    const Element& e = x->value;
    if (k == "psi_as") *out = wrap(c ? psi(*c, s, e) : psi_as(s, e));
    else if (k == "psi_a") *out = wrap(psi_a(e));
    else if (k == "psi_a0") *out = wrap(psi_a0(e));
    else if (k == "det_sharp") *out = wrap(c ? det_tilde_sharp(e, *c) : det_tilde_sharp(e));
    else if (k == "det_star") *out = wrap(det_star(e));
    else if (k == "transpose") *out = wrap(transpose(e));
    else if (k == "weyl") {
      need(window, "window");
      *out = wrap(weyl_act(WeylSymmetry(Tuple(window, window + window_len)), e));
    } else {
      throw std::invalid_argument("unknown homomorphism '" + k + "'");
    }
  });
}

affschur_status affschur_act(const affschur_element* x, const char* vector_json, char** out) {
  return guard([&] {
    need(x, "element");
    need(vector_json, "vector");
    need(out, "out");
    TensorVector v = tensor_from_json(parse_json(vector_json));
    *out = copy_string(tensor_to_json(act(x->value, v)).dump());
  });
}

affschur_status affschur_weyl_apply(int64_t n, const int* perm, const int64_t* eps, const int64_t* tuple, size_t r,
                                    int64_t* out) {
  return guard([&] {
    need(perm, "perm");
    need(eps, "eps");
    need(tuple, "tuple");
    need(out, "out");
    if (n < 1) throw std::invalid_argument("n must be positive");
    Perm p(r);
    for (size_t k = 0; k < r; ++k) p[k] = perm[k] - 1;
    if (!is_permutation(p)) throw std::invalid_argument("not a permutation of 1..r");
    Tuple result = weyl_apply({p, Tuple(eps, eps + r)}, Tuple(tuple, tuple + r), n);
    std::copy(result.begin(), result.end(), out);
  });
}

affschur_status affschur_matrix_from_json(const char* text, affschur_matrix** out) {
  return guard([&] {
    need(text, "json");
    need(out, "out");
    *out = new affschur_matrix{matrix_from_json(parse_json(text))};
  });
}

affschur_status affschur_matrix_to_json(const affschur_matrix* g, char** out) {
  return guard([&] {
    need(g, "matrix");
    need(out, "out");
    *out = copy_string(matrix_to_json(g->value).dump());
  });
}

void affschur_matrix_free(affschur_matrix* g) { delete g; }

affschur_status affschur_evaluate(const affschur_matrix* g, int r, affschur_element** out) {
  return guard([&] {
    need(g, "matrix");
    need(out, "out");
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    *out = wrap(evaluate(g->value, r));
  });
}

affschur_status affschur_det_tilde(const affschur_matrix* g, char** out) {
  return guard([&] {
    need(g, "matrix");
    need(out, "out");
    *out = copy_string(det_tilde(g->value).to_string());
  });
}

affschur_status affschur_in_sl_at(const affschur_matrix* g, const char* a0, int* out) {
  return guard([&] {
    need(g, "matrix");
    need(a0, "a0");
    need(out, "out");
    *out = in_sl_at(g->value, parse_rational(a0)) ? 1 : 0;
  });
}

affschur_status affschur_lie_pi(int64_t n, int r, int64_t s, int64_t t, affschur_element** out) {
  return guard([&] {
    need(out, "out");
    if (n < 1 || r < 1) throw std::invalid_argument("need n >= 1 and r >= 1");
    *out = wrap(pi_tilde(LoopGenerator{s, t}, n, r));
  });
}

affschur_status affschur_decompose(int64_t n, const char* index, const char* using_set, char** out) {
  return guard([&] {
    need(index, "index");
    need(using_set, "using");
    need(out, "out");
    if (n < 1) throw std::invalid_argument("n must be positive");
    BasisIndex x = parse_index(n, index);
    std::string which = using_set;
    ExprPtr e;
    if (which == "Y") e = decompose_y(x, n);
    else if (which == "X") e = decompose_x(x, n);
    else throw std::invalid_argument("generator set must be X or Y");
    *out = copy_string(expr_to_json(e).dump());
  });
}

affschur_status affschur_witness(const char* polynomial_json, int special, const char* a0, char** out) {
  return guard([&] {
    need(polynomial_json, "polynomial");
    need(out, "out");
    WitnessOptions opts;
    opts.special = special != 0;
    if (a0) opts.a0 = parse_rational(a0);
    CoordPolynomial p = polynomial_from_json(parse_json(polynomial_json));
    Witness w = nonvanishing_witness(p, opts);
    if (evaluate_polynomial(p, w.g) == 0) throw VerifyFailure("witness evaluates to zero");
    *out = copy_string(witness_to_json(w).dump());
  });
}

affschur_status affschur_verify(const char* suite, const char* params_json, char** report, int* passed) {
  return guard([&] {
    need(suite, "suite");
    need(report, "report");
    VerifyParams p;
    if (params_json && *params_json) {
      json j = parse_json(params_json);
      if (!j.is_object()) throw FormatError("params must be an object");
      p.n = j.value("n", p.n);
      p.r = j.value("r", p.r);
      p.window = j.value("window", p.window);
      p.samples = j.value("samples", p.samples);
      p.seed = j.value("seed", p.seed);
    }
    VerifyReport rep = run_verify(suite, p);
    *report = copy_string(rep.to_json().dump());
    if (passed) *passed = rep.pass() ? 1 : 0;
  });
}

affschur_status affschur_cache_open(const char* path, affschur_cache** out) {
  return guard([&] {
    need(out, "out");
    *out = new affschur_cache(path ? std::string(path) : default_cache_path());
  });
}

void affschur_cache_free(affschur_cache* cache) { delete cache; }

affschur_status affschur_cache_multiply(affschur_cache* cache, const affschur_element* x, const affschur_element* y,
                                        affschur_element** out) {
  return guard([&] {
    need(cache, "cache");
    need(x, "left");
    need(y, "right");
    need(out, "out");
    *out = wrap(cache->value.multiply(x->value, y->value));
  });
}

affschur_status affschur_cache_stats(const affschur_cache* cache, char** out) {
  return guard([&] {
    need(cache, "cache");
    need(out, "out");
    auto s = cache->value.stats();
    json contexts = json::array();
    for (const auto& [key, count] : s.by_context) contexts.push_back({{"n", key.first}, {"r", key.second}, {"records", count}});
    json j = {{"path", s.path},       {"format", StructureCache::kFormat}, {"version", StructureCache::kVersion},
              {"records", s.records}, {"hits", s.hits},                    {"misses", s.misses},
              {"skipped_lines", s.skipped_lines}, {"stale_header", s.stale_header}, {"contexts", contexts}};
    *out = copy_string(j.dump());
  });
}

affschur_status affschur_cache_clear(affschur_cache* cache, int64_t n, int r, size_t* removed) {
  return guard([&] {
    need(cache, "cache");
    std::size_t k = cache->value.clear(n >= 1 ? std::optional<std::int64_t>(n) : std::nullopt,
                                       r >= 1 ? std::optional<int>(r) : std::nullopt);
    if (removed) *removed = k;
  });
}

affschur_status affschur_cache_spot_check(const affschur_cache* cache, size_t count, unsigned seed, size_t* checked) {
  return guard([&] {
    need(cache, "cache");
    auto res = cache->value.spot_check(count, seed);
    if (checked) *checked = res.checked;
    if (!res.ok()) throw VerifyFailure("cached product differs from a fresh computation: " + res.mismatches.front());
  });
}

}  // extern "C"
