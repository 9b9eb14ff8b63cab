#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "cache.hpp"
#include "helpers.hpp"
#include "samplers.hpp"
#include "serialize.hpp"

using namespace affschur;
using testing_helpers::ix;
using testing_helpers::xi;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("affschur-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
             std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::vector<std::string> lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Json, ElementExample) {
  auto j = parse_json(R"({"n":2,"r":2,"terms":[{"coeff":[[0,"1"]],"pairs":[[1,3],[2,0]]}]})");
  Element x = element_from_json(j);
  EXPECT_EQ(x, xi({1, 2}, {3, 0}, 2));
  EXPECT_EQ(element_to_json(x), j);
  Element y = element_from_json(parse_json(R"({"n":2,"r":2,"terms":[{"coeff":"1/2*a^-1 + 3","pairs":[[2,0],[1,3]]}]})"));
  EXPECT_EQ(y, xi({1, 2}, {3, 0}, 2, Laurent::parse("1/2*a^-1 + 3")));
  EXPECT_EQ(element_from_json(element_to_json(Element(3, 2))), Element(3, 2));
}

TEST(Json, RoundTrips) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    std::int64_t n = 1 + trial % 3;
    int r = 1 + trial % 2;
    Element x = random_element(rng, basis_window(n, r, 2), n, r, 4);
    EXPECT_EQ(element_from_json(parse_json(element_to_json(x).dump())), x);
    PeriodicMatrix g = random_matrix(rng, n, 4, 2);
    g.add(1, 2, Laurent::parse("a^2 - 1/3"));
    EXPECT_EQ(matrix_from_json(parse_json(matrix_to_json(g).dump())), g);
    TensorVector v = TensorVector::basis(n, Tuple(r, 1), random_laurent(rng));
    v.add(Tuple(r, -2), random_laurent(rng));
    EXPECT_EQ(tensor_from_json(parse_json(tensor_to_json(v).dump())), v);
    Laurent c = random_laurent(rng, 3);
    EXPECT_EQ(laurent_from_json(laurent_to_json(c)), c);
  }
  auto m = matrix_from_json(parse_json(R"({"n":2,"entries":[[1,3,"1"],[2,2,"1/2"]]})"));
  EXPECT_EQ(m.get(1, 3), Laurent(1L));
  EXPECT_EQ(m.get(4, 4), Laurent(make_rational(1, 2)));
}

TEST(Json, ExpressionTrees) {
  ExprPtr e = decompose_y(ix({1, 1}, {2, 2}, 2), 2);
  json j = expr_to_json(e);
  ExprPtr back = expr_from_json(j, 2);
  EXPECT_EQ(evaluate_expr(back, 2, 2), xi({1, 1}, {2, 2}, 2));
  EXPECT_EQ(expr_to_json(back), j);
  EXPECT_EQ(expr_to_json(expr_one()), (json{{"op", "one"}}));
}

TEST(Json, PolynomialsAndStructures) {
  CoordPolynomial p{2, 1, {{ix({1}, {3}, 2), Rational(2)}, {ix({2}, {2}, 2), make_rational(-1, 3)}}};
  CoordPolynomial q = polynomial_from_json(polynomial_to_json(p));
  EXPECT_EQ(q.terms, p.terms);
  Structure s = green_product(1, ix({1, 1}, {1, 2}, 1), ix({1, 1}, {1, 2}, 1));
  EXPECT_EQ(structure_from_json(structure_to_json(s), 1), s);
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(parse_json("{"), FormatError);
  EXPECT_THROW(element_from_json(parse_json(R"({"r":1,"terms":[]})")), FormatError);
  EXPECT_THROW(element_from_json(parse_json(R"({"n":0,"r":1,"terms":[]})")), FormatError);
  EXPECT_THROW(element_from_json(parse_json(R"({"n":1,"r":2,"terms":[{"coeff":[[0,"1"]],"pairs":[[1,1]]}]})")),
               FormatError);
  EXPECT_THROW(element_from_json(parse_json(R"({"n":1,"r":1,"terms":[{"coeff":[[0,"x"]],"pairs":[[1,1]]}]})")),
               FormatError);
  EXPECT_THROW(element_from_json(parse_json(R"({"n":1,"r":1,"terms":[{"coeff":[[0.5,"1"]],"pairs":[[1,1]]}]})")),
               FormatError);
  EXPECT_THROW(matrix_from_json(parse_json(R"({"n":1,"entries":[[1,1]]})")), FormatError);
  EXPECT_THROW(expr_from_json(parse_json(R"({"op":"pow"})"), 1), FormatError);
}

TEST(Cache, StoresReloadsAndClears) {
  TempDir dir;
  std::string path = dir.file("c.ndjson");
  auto x = ix({1, 1}, {1, 2}, 1), y = ix({1, 2}, {1, 1}, 2);
  {
    StructureCache cache(path);
    EXPECT_EQ(cache.product(1, x, x), green_product(1, x, x));
    EXPECT_EQ(cache.product(2, y, y), green_product(2, y, y));
    EXPECT_EQ(cache.product(1, x, x), green_product(1, x, x));
    auto s = cache.stats();
    EXPECT_EQ(s.records, 2u);
    EXPECT_EQ(s.hits, 1u);
    EXPECT_EQ(s.misses, 2u);
  }
  auto text = lines(path);
  ASSERT_EQ(text.size(), 3u);
  EXPECT_EQ(parse_json(text[0]).at("version"), StructureCache::kVersion);
  {
    StructureCache cache(path);
    EXPECT_EQ(cache.stats().records, 2u);
    EXPECT_EQ(cache.lookup(1, x, x), green_product(1, x, x));
    EXPECT_TRUE(cache.spot_check(5, 1).ok());
    EXPECT_EQ(cache.clear(2, 2), 1u);
    EXPECT_EQ(cache.stats().records, 1u);
  }
  EXPECT_EQ(lines(path).size(), 2u);
  StructureCache cache(path);
  EXPECT_EQ(cache.clear(), 1u);
  EXPECT_EQ(lines(path).size(), 1u);
}

TEST(Cache, StaleHeaderAndTornLines) {
  TempDir dir;
  std::string path = dir.file("c.ndjson");
  auto x = ix({1, 1}, {1, 2}, 1);
  {
    std::ofstream out(path);
    out << R"({"format":"affschur-structure-cache","version":0})" << "\n";
    out << R"({"n":1,"r":2,"left":[[1,1],[1,2]],"right":[[1,1],[1,2]],"value":[]})" << "\n";
  }
  {
    StructureCache cache(path);
    EXPECT_TRUE(cache.stats().stale_header);
    EXPECT_EQ(cache.stats().records, 0u);
    cache.product(1, x, x);
  }
  auto text = lines(path);
  ASSERT_EQ(text.size(), 2u);
  EXPECT_EQ(parse_json(text[0]).at("version"), StructureCache::kVersion);
  {
    std::ofstream out(path, std::ios::app);
    out << R"({"n":1,"r":2,"left":[[1,1)";  // interrupted write
  }
  StructureCache cache(path);
  EXPECT_EQ(cache.stats().records, 1u);
  EXPECT_EQ(cache.stats().skipped_lines, 1u);
}

TEST(Cache, SpotCheckCatchesBadRecords) {
  TempDir dir;
  std::string path = dir.file("c.ndjson");
  {
    std::ofstream out(path);
    out << R"({"format":"affschur-structure-cache","version":1})" << "\n";
    out << R"({"n":1,"r":2,"left":[[1,1],[1,2]],"right":[[1,1],[1,2]],"value":[[[[1,1],[1,3]],1]]})" << "\n";
  }
  StructureCache cache(path);
  auto res = cache.spot_check(3, 7);
  EXPECT_EQ(res.checked, 1u);
  EXPECT_FALSE(res.ok());
}

TEST(Cache, ConcurrentMultiplication) {
  TempDir dir;
  StructureCache cache(dir.file("c.ndjson"));
  auto window = basis_window(2, 2, 1);
  std::vector<Element> results(4), expected(4);
  std::vector<std::thread> threads;
  for (int k = 0; k < 4; ++k) {
    std::mt19937 rng(70 + k);
    Element x = random_element(rng, window, 2, 2, 5), y = random_element(rng, window, 2, 2, 5);
    expected[k] = multiply(x, y);
    threads.emplace_back([&, x, y, k] { results[k] = cache.multiply(x, y); });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(results, expected);
  StructureCache reread(dir.file("c.ndjson"));
  EXPECT_EQ(reread.stats().records, cache.stats().records);
  EXPECT_EQ(reread.stats().skipped_lines, 0u);
}

TEST(Cache, DefaultPathHonoursEnvironment) {
  ::setenv("AFFSCHUR_CACHE", "/tmp/somewhere/cache.ndjson", 1);
  EXPECT_EQ(default_cache_path(), "/tmp/somewhere/cache.ndjson");
  ::unsetenv("AFFSCHUR_CACHE");
  EXPECT_NE(default_cache_path().find("affschur"), std::string::npos);
}
