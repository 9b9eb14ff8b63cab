// Command-line front end over the C API.

#include <affschur/affschur.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kUserError = 1;
constexpr int kVerifyFailure = 2;

struct Failure {
  affschur_status status;
  std::string message;
};

void check(affschur_status status) {
  if (status == AFFSCHUR_OK) return;
  std::string message = affschur_last_error();
  throw Failure{status, message};
}

[[noreturn]] void user_error(const std::string& message) { throw Failure{AFFSCHUR_ERR_ARGUMENT, message}; }

struct ElementDeleter {
  void operator()(affschur_element* x) const { affschur_element_free(x); }
};
struct MatrixDeleter {
  void operator()(affschur_matrix* g) const { affschur_matrix_free(g); }
};
struct CacheDeleter {
  void operator()(affschur_cache* c) const { affschur_cache_free(c); }
};
using ElementPtr = std::unique_ptr<affschur_element, ElementDeleter>;
using MatrixPtr = std::unique_ptr<affschur_matrix, MatrixDeleter>;
using CachePtr = std::unique_ptr<affschur_cache, CacheDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  affschur_string_free(s);
  return out;
}

bool stdin_used = false;

/// "-" reads stdin, an existing path reads the file, text starting with
/// '{' is taken literally; anything else is returned unchanged with
/// is_json = false.
std::string read_input(const std::string& spec, bool& is_json) {
  is_json = true;
  if (spec == "-") {
    if (stdin_used) user_error("stdin can feed only one operand");
    stdin_used = true;
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::size_t start = spec.find_first_not_of(" \t\n");
  if (start != std::string::npos && spec[start] == '{') return spec;
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  is_json = false;
  return spec;
}

std::string read_json(const std::string& spec, const char* what) {
  bool is_json = false;
  std::string text = read_input(spec, is_json);
  if (!is_json) user_error(std::string("cannot read ") + what + " '" + spec + "'");
  return text;
}

ElementPtr load_element(const std::string& spec, std::optional<std::int64_t> n) {
  bool is_json = false;
  std::string text = read_input(spec, is_json);
  affschur_element* out = nullptr;
  if (is_json) {
    check(affschur_element_from_json(text.c_str(), &out));
  } else {
    if (!n) user_error("expression operands need --n");
    check(affschur_element_parse(*n, text.c_str(), &out));
  }
  return ElementPtr(out);
}

struct Output {
  std::optional<std::string> spec_a;
  bool text = false;

  void element(const affschur_element* x) const {
    ElementPtr special;
    if (spec_a) {
      affschur_element* s = nullptr;
      check(affschur_specialize(x, spec_a->c_str(), &s));
      special.reset(s);
      x = s;
    }
    char* s = nullptr;
    check(text ? affschur_element_to_string(x, &s) : affschur_element_to_json(x, &s));
    std::cout << take(s) << "\n";
  }
};

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      user_error(std::string("bad ") + what + " '" + text + "'");
    }
  }
  if (out.empty()) user_error(std::string("empty ") + what);
  return out;
}

/// Largest |bottom - top| over the generators of an expression tree.
std::int64_t max_generator_offset(const nlohmann::json& e) {
  std::int64_t best = 0;
  if (e.value("op", "") == "gen")
    for (const auto& p : e.at("pairs")) best = std::max(best, std::abs(p[1].get<std::int64_t>() - p[0].get<std::int64_t>()));
  if (e.contains("args"))
    for (const auto& a : e.at("args")) best = std::max(best, max_generator_offset(a));
  if (e.contains("arg")) best = std::max(best, max_generator_offset(e.at("arg")));
  return best;
}

int exit_code(affschur_status status) { return status == AFFSCHUR_ERR_VERIFY ? kVerifyFailure : kUserError; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in the affine Schur algebra S(n,r)~"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::string spec_a;
  bool no_cache = false;
  app.add_option("--spec-a", spec_a, "Specialize the parameter a to a rational in printed elements");
  app.add_flag("--text", out.text, "Print elements in text form instead of JSON");
  app.add_flag("--no-cache", no_cache, "Do not use the structure-constant cache");

  // multiply
  auto* multiply_cmd = app.add_subcommand("multiply", "Product of elements (JSON file, inline JSON, '-', or expression)");
  std::vector<std::string> factors;
  std::optional<std::int64_t> mul_n;
  std::string engine = "green";
  multiply_cmd->add_option("factors", factors, "Operands, multiplied left to right")->required()->expected(1, -1);
  multiply_cmd->add_option("--n", mul_n, "n for expression operands");
  multiply_cmd->add_option("--engine", engine, "green, schur, tensor or all")
      ->check(CLI::IsMember({"green", "schur", "tensor", "all"}));

  // act
  auto* act_cmd = app.add_subcommand("act", "Action on the tensor space");
  std::string act_element, act_vector;
  std::optional<std::int64_t> act_n;
  act_cmd->add_option("element", act_element)->required();
  act_cmd->add_option("vector", act_vector, "Vector JSON")->required();
  act_cmd->add_option("--n", act_n);

  // hom apply
  auto* hom_cmd = app.add_subcommand("hom", "Algebra homomorphisms");
  hom_cmd->require_subcommand(1);
  auto* hom_apply = hom_cmd->add_subcommand("apply", "Apply a homomorphism");
  std::string hom_kind, hom_input, hom_window, hom_param;
  std::int64_t hom_s = 1;
  std::optional<std::int64_t> hom_n;
  hom_apply->add_option("--kind", hom_kind)
      ->required()
      ->check(CLI::IsMember({"psi_as", "psi_a", "psi_a0", "det_sharp", "det_star", "weyl", "transpose"}));
  hom_apply->add_option("--s", hom_s, "s for psi_as");
  hom_apply->add_option("--window", hom_window, "w(1),...,w(n) for weyl");
  hom_apply->add_option("--param", hom_param, "Laurent value replacing a (psi_as, det_sharp)");
  hom_apply->add_option("input", hom_input)->required();
  hom_apply->add_option("--n", hom_n);

  // weyl
  auto* weyl_cmd = app.add_subcommand("weyl", "Right action of (sigma, eps) on a tuple");
  std::int64_t weyl_n = 1;
  std::string weyl_perm, weyl_eps, weyl_tuple;
  weyl_cmd->add_option("--n", weyl_n)->required();
  weyl_cmd->add_option("--perm", weyl_perm, "One-line permutation, 1-based")->required();
  weyl_cmd->add_option("--eps", weyl_eps, "Shift vector; zeros if omitted");
  weyl_cmd->add_option("--tuple", weyl_tuple)->required();

  // eval-semigroup
  auto* eval_cmd = app.add_subcommand("eval-semigroup", "Evaluation of a periodic matrix in S(n,r)~");
  std::string eval_matrix;
  int eval_r = 1;
  eval_cmd->add_option("--matrix", eval_matrix)->required();
  eval_cmd->add_option("--r", eval_r)->required();

  // det
  auto* det_cmd = app.add_subcommand("det", "det~ of a periodic matrix");
  std::string det_matrix;
  det_cmd->add_option("--matrix", det_matrix)->required();

  // lie pi
  auto* lie_cmd = app.add_subcommand("lie", "Loop algebra");
  lie_cmd->require_subcommand(1);
  auto* lie_pi = lie_cmd->add_subcommand("pi", "Image of E_{s,t}");
  std::int64_t lie_s = 1, lie_t = 1, lie_n = 1;
  int lie_r = 1;
  lie_pi->add_option("--s", lie_s)->required();
  lie_pi->add_option("--t", lie_t)->required();
  lie_pi->add_option("--n", lie_n)->required();
  lie_pi->add_option("--r", lie_r)->required();

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "Write a basis element in the generators X or Y");
  std::string dec_index, dec_using = "Y";
  std::int64_t dec_n = 1;
  std::optional<std::int64_t> dec_window;
  dec_cmd->add_option("--index", dec_index, "[(1,1)|(2,2)]")->required();
  dec_cmd->add_option("--using", dec_using)->check(CLI::IsMember({"X", "Y"}));
  dec_cmd->add_option("--n", dec_n)->required();
  dec_cmd->add_option("--window", dec_window, "Largest generator offset allowed");

  // witness
  auto* wit_cmd = app.add_subcommand("witness", "Matrix on which a coordinate polynomial does not vanish");
  std::string wit_poly;
  bool wit_special = false;
  wit_cmd->add_option("--poly", wit_poly, "Polynomial JSON")->required();
  wit_cmd->add_flag("--special", wit_special, "Require det~ = 1 at a = spec-a");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string ver_suite;
  nlohmann::json ver_params = nlohmann::json::object();
  std::int64_t ver_n = 2, ver_window = 1;
  int ver_r = 2, ver_samples = 0;
  unsigned ver_seed = 1;
  ver_cmd->add_option("suite", ver_suite)->required();
  auto* opt_n = ver_cmd->add_option("--n", ver_n);
  auto* opt_r = ver_cmd->add_option("--r", ver_r);
  auto* opt_w = ver_cmd->add_option("--window", ver_window);
  auto* opt_samples = ver_cmd->add_option("--samples", ver_samples);
  auto* opt_seed = ver_cmd->add_option("--seed", ver_seed);

  // cache
  auto* cache_cmd = app.add_subcommand("cache", "Structure-constant cache");
  cache_cmd->require_subcommand(1);
  auto* cache_stats = cache_cmd->add_subcommand("stats", "Show cache statistics");
  auto* cache_clear = cache_cmd->add_subcommand("clear", "Remove cached records");
  std::int64_t clear_n = 0;
  int clear_r = 0;
  cache_clear->add_option("--n", clear_n, "Only this n");
  cache_clear->add_option("--r", clear_r, "Only this r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUserError;
  }
  if (!spec_a.empty()) out.spec_a = spec_a;

  try {
    auto open_cache = [&]() -> CachePtr {
      affschur_cache* c = nullptr;
      check(affschur_cache_open(nullptr, &c));
      return CachePtr(c);
    };

    if (*multiply_cmd) {
      std::vector<ElementPtr> xs;
      for (const auto& f : factors) xs.push_back(load_element(f, mul_n));
      CachePtr cache;
      if (engine == "green" && !no_cache) cache = open_cache();
      ElementPtr acc = std::move(xs.front());
      for (std::size_t k = 1; k < xs.size(); ++k) {
        affschur_element* next = nullptr;
        if (engine == "all") check(affschur_multiply_checked(acc.get(), xs[k].get(), &next));
        else if (cache) check(affschur_cache_multiply(cache.get(), acc.get(), xs[k].get(), &next));
        else {
          affschur_engine e = engine == "schur" ? AFFSCHUR_ENGINE_SCHUR
                              : engine == "tensor" ? AFFSCHUR_ENGINE_TENSOR
                                                   : AFFSCHUR_ENGINE_GREEN;
          check(affschur_multiply(acc.get(), xs[k].get(), e, &next));
        }
        acc.reset(next);
      }
      if (cache) check(affschur_cache_spot_check(cache.get(), 3, std::random_device{}(), nullptr));
      out.element(acc.get());
    } else if (*act_cmd) {
      ElementPtr x = load_element(act_element, act_n);
      std::string v = read_json(act_vector, "vector");
      char* s = nullptr;
      check(affschur_act(x.get(), v.c_str(), &s));
      std::cout << take(s) << "\n";
    } else if (*hom_apply) {
      ElementPtr x = load_element(hom_input, hom_n);
      std::vector<std::int64_t> window;
      if (hom_kind == "weyl") {
        if (hom_window.empty()) user_error("weyl needs --window");
        window = parse_list(hom_window, "window");
      }
      affschur_element* y = nullptr;
      check(affschur_hom_apply(hom_kind.c_str(), x.get(), hom_s, window.data(), window.size(),
                               hom_param.empty() ? nullptr : hom_param.c_str(), &y));
      ElementPtr result(y);
      out.element(result.get());
    } else if (*weyl_cmd) {
      auto tuple = parse_list(weyl_tuple, "tuple");
      auto perm64 = parse_list(weyl_perm, "permutation");
      auto eps = weyl_eps.empty() ? std::vector<std::int64_t>(tuple.size(), 0) : parse_list(weyl_eps, "shift");
      if (perm64.size() != tuple.size() || eps.size() != tuple.size())
        user_error("--perm, --eps and --tuple need the same length");
      std::vector<int> perm(perm64.begin(), perm64.end());
      std::vector<std::int64_t> result(tuple.size());
      check(affschur_weyl_apply(weyl_n, perm.data(), eps.data(), tuple.data(), tuple.size(), result.data()));
      std::cout << nlohmann::json(result).dump() << "\n";
    } else if (*eval_cmd) {
      affschur_matrix* g = nullptr;
      check(affschur_matrix_from_json(read_json(eval_matrix, "matrix").c_str(), &g));
      MatrixPtr m(g);
      affschur_element* x = nullptr;
      check(affschur_evaluate(m.get(), eval_r, &x));
      ElementPtr result(x);
      out.element(result.get());
    } else if (*det_cmd) {
      affschur_matrix* g = nullptr;
      check(affschur_matrix_from_json(read_json(det_matrix, "matrix").c_str(), &g));
      MatrixPtr m(g);
      char* s = nullptr;
      check(affschur_det_tilde(m.get(), &s));
      nlohmann::json j = {{"det", take(s)}};
      if (out.spec_a) {
        int sl = 0;
        check(affschur_in_sl_at(m.get(), out.spec_a->c_str(), &sl));
        j["a0"] = *out.spec_a;
        j["special_at_a0"] = sl == 1;
      }
      std::cout << j.dump() << "\n";
    } else if (*lie_pi) {
      affschur_element* x = nullptr;
      check(affschur_lie_pi(lie_n, lie_r, lie_s, lie_t, &x));
      ElementPtr result(x);
      out.element(result.get());
    } else if (*dec_cmd) {
      char* s = nullptr;
      check(affschur_decompose(dec_n, dec_index.c_str(), dec_using.c_str(), &s));
      std::string text = take(s);
      std::cout << text << "\n";
      if (dec_window && max_generator_offset(nlohmann::json::parse(text)) > *dec_window) {
        std::cerr << "error: a generator exceeds offset " << *dec_window << "\n";
        return kVerifyFailure;
      }
    } else if (*wit_cmd) {
      char* s = nullptr;
      check(affschur_witness(read_json(wit_poly, "polynomial").c_str(), wit_special ? 1 : 0,
                             out.spec_a ? out.spec_a->c_str() : nullptr, &s));
      std::cout << take(s) << "\n";
    } else if (*ver_cmd) {
      if (*opt_n) ver_params["n"] = ver_n;
      if (*opt_r) ver_params["r"] = ver_r;
      if (*opt_w) ver_params["window"] = ver_window;
      if (*opt_samples) ver_params["samples"] = ver_samples;
      if (*opt_seed) ver_params["seed"] = ver_seed;
      char* s = nullptr;
      int passed = 0;
      check(affschur_verify(ver_suite.c_str(), ver_params.dump().c_str(), &s, &passed));
      std::cout << take(s) << "\n";
      return passed ? kPass : kVerifyFailure;
    } else if (*cache_stats) {
      CachePtr cache = open_cache();
      char* s = nullptr;
      check(affschur_cache_stats(cache.get(), &s));
      std::cout << take(s) << "\n";
    } else if (*cache_clear) {
      CachePtr cache = open_cache();
      std::size_t removed = 0;
      check(affschur_cache_clear(cache.get(), clear_n, clear_r, &removed));
      std::cout << nlohmann::json({{"removed", removed}}).dump() << "\n";
    }
  } catch (const Failure& f) {
    std::cerr << "error (" << affschur_status_name(f.status) << "): " << f.message << "\n";
    return exit_code(f.status);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  }
  return kPass;
}
