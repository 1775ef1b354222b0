#include <catch2/catch_amalgamated.hpp>

#include "deltacat/hadamard.hpp"
#include "oracle_helpers.hpp"

using namespace deltacat;

TEST_CASE("pointwise products of frozen examples") {
  MonotoneMap a = make_map(2, 2, {0, 1, 2});
  CHECK(hadamard(a, constant_map(2, 1, 1)) == a);
  CHECK(hadamard(a, constant_map(2, 0, 0)) == constant_map(2, 0, 0));

  MonotoneMap alpha = make_map(1, 2, {0, 2});
  MonotoneMap beta = make_map(1, 2, {1, 2});
  MonotoneMap product = hadamard(alpha, beta);
  CHECK(product.values() == std::vector<Natural>{0, 4});
  CHECK(product.target() == Ordinal(4));
  CHECK(product.source() == Ordinal(1));
}

TEST_CASE("products agree with the table oracle") {
  for (unsigned long long m = 0; m <= 3; ++m)
    for (unsigned long long p = 0; p <= 3; ++p)
      for (unsigned long long q = 0; q <= 3; ++q)
        for (const MonotoneMap& alpha : enumerate_maps(m, p))
          for (const MonotoneMap& beta : enumerate_maps(m, q)) {
            MonotoneMap ab = hadamard(alpha, beta);
            CHECK(ab.values() == oracle::product_tables(alpha.values(), beta.values()));
            CHECK(ab.target().value() == p * q);
            CHECK(ab.values() == hadamard(beta, alpha).values());
          }
}

TEST_CASE("product requires a shared source") {
  try {
    (void)hadamard(make_map(1, 1, {0, 1}), make_map(2, 1, {0, 1, 1}));
    FAIL("expected a source error");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::source_mismatch);
  }
}

TEST_CASE("product is natural in the source") {
  MonotoneMap alpha = make_map(2, 2, {0, 1, 2});
  MonotoneMap beta = make_map(2, 1, {0, 1, 1});
  MonotoneMap theta = make_map(1, 2, {0, 2});
  CHECK(hadamard_source_naturality(alpha, beta, theta));

  CheckReport report = simplicial_map_check(1, 1, 1);
  CHECK(report.passed());
  CHECK(report.instances == 53);

  CheckReport wider = simplicial_map_check(2, 2, 3);
  CHECK(wider.passed());
  CHECK(wider.failed == 0);
}

TEST_CASE("levelwise tables are total") {
  HomotopyLevel level(2, 2);
  CHECK(level.table().size() == 40);
  MonotoneMap alpha = make_map(2, 2, {0, 0, 2});
  MonotoneMap beta = make_map(2, 1, {0, 1, 1});
  CHECK(level.at(alpha, beta) == hadamard(alpha, beta));
  CHECK_THROWS_AS(level.at(make_map(1, 2, {0, 2}), make_map(1, 1, {0, 1})), DomainError);
}

TEST_CASE("endpoint composites collapse correctly") {
  CheckReport report = homotopy_endpoints(2, 3);
  CHECK(report.passed());
  CHECK(report.instances == 68);

  MonotoneMap alpha = make_map(2, 2, {0, 1, 2});
  CHECK(hadamard(alpha, compose(vertex_map(1), terminal_map(2))) == alpha);
  CHECK(hadamard(alpha, compose(vertex_map(0), terminal_map(2))) == constant_map(2, 2, 0));
}

TEST_CASE("factorization search") {
  SECTION("the diagonal-style witness into [4] does not factor") {
    MonotoneMap witness = make_map(1, 4, {3, 3});
    auto factors = factor_hadamard(witness, 2, 2);
    CHECK(factors.empty());
    CHECK(count_maps(1, 2) * count_maps(1, 2) == 36);
  }
  SECTION("a factorable map lists its factors") {
    auto factors = factor_hadamard(make_map(1, 4, {0, 4}), 2, 2);
    bool found = false;
    for (const auto& [a, b] : factors)
      if (a == make_map(1, 2, {0, 2}) && b == make_map(1, 2, {1, 2})) found = true;
    CHECK(found);
    CHECK(!factors.empty());
  }
  SECTION("unit factorizations are always present") {
    MonotoneMap h = make_map(2, 2, {0, 2, 2});
    auto factors = factor_hadamard(h, 2, 1);
    bool found = false;
    for (const auto& [a, b] : factors)
      if (a == h && b == constant_map(2, 1, 1)) found = true;
    CHECK(found);
  }
  SECTION("the target shape is enforced") {
    try {
      (void)factor_hadamard(make_map(1, 3, {0, 3}), 2, 2);
      FAIL("expected a target error");
    } catch (const DomainError& e) {
      CHECK(e.code() == Errc::target_mismatch);
    }
  }
}
