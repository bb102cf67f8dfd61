#include <doctest.h>

#include <numeric>

#include "casson/closed_forms.hpp"
#include "casson/oracle.hpp"
#include "test_support.hpp"

using namespace casson;

TEST_CASE("brieskorn triples")
{
    const BrieskornTriple t(35, 2, 3);
    CHECK(t.orders() == std::array<std::int64_t, 3>{2, 3, 35});
    CHECK(t.to_string() == "brieskorn(2,3,35)");
    CHECK(t.product() == 210);
    CHECK_THROWS_AS(BrieskornTriple(2, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(BrieskornTriple(1, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(BrieskornTriple(3, 3, 5), std::invalid_argument);
    CHECK(is_valid_brieskorn(5, 6, 7));
    CHECK_FALSE(is_valid_brieskorn(6, 9, 5));
}

TEST_CASE("brieskorn_lambda")
{
    CHECK(brieskorn_lambda(BrieskornTriple(2, 3, 35)) == 17);
    CHECK(brieskorn_lambda(BrieskornTriple(6, 5, 7)) == 30);
    CHECK(brieskorn_lambda(BrieskornTriple(2, 3, 5)) == 2);
    CHECK(brieskorn_lambda(BrieskornTriple(2, 3, 7)) == 3);
}

TEST_CASE("brieskorn_lambda is a nonnegative integer up to product 1e6")
{
    std::size_t triples = 0;
    for (std::int64_t a = 2; a * (a + 1) * (a + 2) <= 1000000; ++a)
        for (std::int64_t b = a + 1; a * b * (b + 1) <= 1000000; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (std::int64_t c = b + 1; a * b * c <= 1000000; ++c) {
                if (std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
                const std::int64_t num = (a - 1) * (b - 1) * (c - 1);
                REQUIRE(num % 4 == 0);
                REQUIRE(brieskorn_lambda(BrieskornTriple(a, b, c)) * 4 == num);
                ++triples;
            }
        }
    CHECK(triples > 100000);
}

TEST_CASE("catalog")
{
    CHECK(catalog_lambda("Sigma(2,3,5,7)") == 20);
    CHECK(catalog_lambda("Sigma(2,3,35)") == 17);
    CHECK(catalog_lambda(" Sigma( 7, 5, 3, 2 ) ") == 20);
    CHECK(canonical_catalog_name("Sigma(7,5,3,2)") == "Sigma(2,3,5,7)");
    CHECK(in_catalog("Sigma(5,6,7)"));
    CHECK_FALSE(in_catalog("nonsense"));
    CHECK_FALSE(in_catalog("Sigma(2,4,5)"));
    CHECK_FALSE(in_catalog("Sigma(2,3,5,11)"));
    CHECK_THROWS_AS(catalog_lambda("nonsense"), UnknownCatalogName);
}

TEST_CASE("whitehead double surgery")
{
    CHECK(whitehead_double_surgery_lambda(2, 3, 1) == 2);
    CHECK(whitehead_double_surgery_lambda(2, 3, 6) == 17);
    CHECK(whitehead_double_surgery_lambda(2, 5, 1) == 8);
    CHECK(whitehead_double_surgery_lambda(5, 2, 1) == 8);
    CHECK_THROWS_WITH_AS(whitehead_double_surgery_lambda(2, 3, 0), doctest::Contains("k > 0"), std::invalid_argument);
    CHECK_THROWS_AS(whitehead_double_surgery_lambda(2, 3, -1), std::invalid_argument);
    CHECK_THROWS_AS(whitehead_double_surgery_lambda(2, 4, 1), std::invalid_argument);
}

TEST_CASE("whitehead formula equals brieskorn_lambda(p, q, pqk - 1)")
{
    int cases = 0;
    for (std::int64_t p = 2; p <= 500; ++p)
        for (std::int64_t q = p + 1; p * q <= 500; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::int64_t k = 1; p * q * k <= 500; ++k) {
                const std::int64_t w = whitehead_double_surgery_lambda(p, q, k);
                CHECK(w * 4 == (p - 1) * (q - 1) * (p * q * k - 2));
                CHECK(w == brieskorn_lambda(BrieskornTriple(p, q, p * q * k - 1)));
                ++cases;
            }
        }
    CHECK(cases > 100);
}

TEST_CASE("torus surgery")
{
    CHECK(torus_surgery_lambda(2, 3, 1) == 2);
    CHECK(torus_surgery_lambda(2, 3, -1) == 3);
    CHECK(torus_surgery_lambda(2, 5, 1) == 8);
    CHECK(torus_surgery_manifold(3, 2, -1) == BrieskornTriple(2, 3, 7));
    CHECK_THROWS(torus_surgery_lambda(2, 3, 0));
    for (std::int64_t p = 2; p <= 7; ++p)
        for (std::int64_t q = p + 1; q <= 7; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::int64_t k = -5; k <= 5; ++k) {
                if (k == 0) continue;
                const BrieskornTriple m = torus_surgery_manifold(p, q, k);
                CHECK(m.product() == p * q * std::abs(p * q * k - 1));
                CHECK(torus_surgery_lambda(p, q, k) > 0);
                CHECK(torus_surgery_lambda(p, q, k) == count_irreducible_characters(m));
            }
        }
}

TEST_CASE("positivity_guarantee")
{
    CHECK(positivity_guarantee(KnotDescriptor::torus(2, 3), 1));
    CHECK_FALSE(positivity_guarantee(KnotDescriptor::unknot(), 3));
    CHECK_FALSE(positivity_guarantee(KnotDescriptor::torus(2, 3), 0));
    CHECK(positivity_guarantee(KnotDescriptor::twist(2), -1));

    InvariantStore s;
    s.load_file(test::data_path("data/knots.dat"));
    const auto pretzel = KnotDescriptor::named("pretzel_m2_3_7");
    CHECK_FALSE(positivity_guarantee(pretzel, 1, s));
    CHECK_FALSE(positivity_guarantee(pretzel, -1, s));
    CHECK(positivity_guarantee(pretzel, 2, s));
    CHECK(positivity_guarantee(KnotDescriptor::named("4_1"), 1, s));

    for (std::int64_t p = 2; p <= 7; ++p)
        for (std::int64_t q = p + 1; q <= 7; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::int64_t qq = -5; qq <= 5; ++qq)
                if (qq != 0) CHECK(positivity_guarantee(KnotDescriptor::torus(p, q), qq));
        }
}
