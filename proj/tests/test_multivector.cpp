#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sphclif/multivector.hpp"

using namespace sphclif;

namespace {

Multivector random_mv(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Multivector m(n);
  for (int i = 0; i < m.size(); ++i) {
    m[static_cast<std::uint32_t>(i)] = Complex(g(rng), g(rng));
  }
  return m;
}

Multivector random_real_mv(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Multivector m(n);
  for (int i = 0; i < m.size(); ++i) m[static_cast<std::uint32_t>(i)] = Complex(g(rng));
  return m;
}

}  // namespace

TEST_CASE("generator relations") {
  const int n = 3;
  auto e = [n](int i) { return Multivector::basis_vector(n, i); };
  CHECK(std::abs(geometric_product(e(1), e(1))[0u] + 1.0) < 1e-15);
  CHECK(std::abs(geometric_product(e(1), e(2))[3u] - 1.0) < 1e-15);
  CHECK(std::abs(geometric_product(e(2), e(1))[3u] + 1.0) < 1e-15);
  // e_i e_j + e_j e_i = -2 delta_ij, exactly
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Multivector s = geometric_product(e(i), e(j)) + geometric_product(e(j), e(i));
      Multivector want = Multivector::scalar(n, i == j ? -2.0 : 0.0);
      CHECK((s - want).max_abs_coeff() == 0.0);
    }
  }
}

TEST_CASE("identity element and a worked vector product") {
  std::mt19937_64 rng(7);
  const Multivector one = Multivector::scalar(3, 1.0);
  const Multivector x = random_mv(rng, 3);
  CHECK((geometric_product(one, x) - x).max_abs_coeff() < 1e-15);

  // x=(1,2,0), y=(3,0,1): xy = -3 - 6 e12 + e13 + 2 e23
  const Multivector xv = Multivector::vector(3, {1.0, 2.0, 0.0});
  const Multivector yv = Multivector::vector(3, {3.0, 0.0, 1.0});
  const Multivector p = geometric_product(xv, yv);
  CHECK(std::abs(p[0u] - Complex(-3.0)) < 1e-15);
  CHECK(std::abs(p[3u] - Complex(-6.0)) < 1e-15);
  CHECK(std::abs(p[5u] - Complex(1.0)) < 1e-15);
  CHECK(std::abs(p[6u] - Complex(2.0)) < 1e-15);
}

TEST_CASE("vector_parts splits scalar and bivector") {
  const Multivector e1 = Multivector::basis_vector(3, 1);
  const Multivector e2 = Multivector::basis_vector(3, 2);
  auto p11 = vector_parts(e1, e1);
  CHECK(std::abs(p11.scalar + 1.0) < 1e-15);
  CHECK(p11.bivector.is_zero());
  auto p12 = vector_parts(e1, e2);
  CHECK(std::abs(p12.scalar) < 1e-15);
  CHECK(std::abs(p12.bivector[3u] - 1.0) < 1e-15);

  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int rep = 0; rep < 50; ++rep) {
    Multivector x = Multivector::vector(3, {g(rng), g(rng), g(rng)});
    Multivector y = Multivector::vector(3, {g(rng), g(rng), g(rng)});
    auto parts = vector_parts(x, y);
    Multivector recon = Multivector::scalar(3, parts.scalar) + parts.bivector;
    CHECK((recon - geometric_product(x, y)).max_abs_coeff() < 1e-14);
  }
  CHECK_THROWS_AS(vector_parts(Multivector::scalar(3, 1.0), e1), std::invalid_argument);
}

TEST_CASE("conjugation") {
  const Multivector e1 = Multivector::basis_vector(3, 1);
  CHECK((conjugate(e1) + e1).max_abs_coeff() < 1e-15);
  CHECK(std::abs(conjugate(Multivector::scalar(3, 5.0))[0u] - 5.0) < 1e-15);
  const Multivector e12 = Multivector::blade(3, 3u);
  CHECK((conjugate(e12) + e12).max_abs_coeff() < 1e-15);
  CHECK(std::abs(conjugate(Multivector::scalar(3, Complex(2, 3)))[0u] - Complex(2, -3)) <
        1e-15);

  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    Multivector a = random_mv(rng, 3);
    CHECK((conjugate(conjugate(a)) - a).max_abs_coeff() < 1e-14);
    // anti-automorphism on real multivectors
    Multivector ar = random_real_mv(rng, 3), br = random_real_mv(rng, 3);
    Multivector lhs = conjugate(geometric_product(ar, br));
    Multivector rhs = geometric_product(conjugate(br), conjugate(ar));
    CHECK((lhs - rhs).max_abs_coeff() <
          1e-12 * (1.0 + lhs.max_abs_coeff()));
  }
}

TEST_CASE("grade projection partitions blades") {
  Multivector a = Multivector::scalar(3, 3.0) +
                  2.0 * Multivector::basis_vector(3, 1) + Multivector::blade(3, 3u);
  CHECK(std::abs(grade_project(a, 0)[0u] - 3.0) < 1e-15);
  CHECK(std::abs(grade_project(a, 2)[3u] - 1.0) < 1e-15);
  CHECK_THROWS_AS(grade_project(a, 4), std::invalid_argument);

  std::mt19937_64 rng(5);
  Multivector r = random_mv(rng, 3);
  Multivector sum(3);
  for (int k = 0; k <= 3; ++k) sum += grade_project(r, k);
  CHECK((sum - r).max_abs_coeff() == 0.0);
}

TEST_CASE("clifford norm and vector inverse") {
  Multivector x = Multivector::vector(3, {3.0, 4.0, 0.0});
  CHECK(std::abs(clifford_norm_sq(x) - 25.0) < 1e-13);
  CHECK(std::abs(clifford_norm_sq(Multivector(3))) == 0.0);

  Multivector xi = vector_inverse(x);
  CHECK((geometric_product(x, xi) - Multivector::scalar(3, 1.0)).max_abs_coeff() < 1e-14);
  CHECK((geometric_product(xi, x) - Multivector::scalar(3, 1.0)).max_abs_coeff() < 1e-14);
  CHECK((vector_inverse(Multivector::basis_vector(3, 1)) +
         Multivector::basis_vector(3, 1))
            .max_abs_coeff() < 1e-15);
  CHECK_THROWS_AS(vector_inverse(Multivector(3)), std::invalid_argument);
  CHECK_THROWS_AS(vector_inverse(Multivector::vector(3, {0.0, 0.0, 0.0})),
                  std::domain_error);

  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int rep = 0; rep < 100; ++rep) {
    double a = g(rng), b = g(rng), c = g(rng);
    const double r = std::sqrt(a * a + b * b + c * c);
    Multivector w = Multivector::vector(3, {a / r, b / r, c / r});
    CHECK((vector_inverse(w) + w).max_abs_coeff() < 1e-12);
    CHECK(std::abs(clifford_norm_sq(w) - 1.0) < 1e-12);
    Multivector v = Multivector::vector(3, {a, b, c});
    CHECK(std::abs(clifford_norm_sq(v) - (a * a + b * b + c * c)) <
          1e-14 * (1.0 + a * a + b * b + c * c));
  }
}

TEST_CASE("associativity, distributivity, bilinearity (randomized)") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g;
  for (int rep = 0; rep < 300; ++rep) {
    Multivector a = random_mv(rng, 3), b = random_mv(rng, 3), c = random_mv(rng, 3);
    Multivector lhs = geometric_product(geometric_product(a, b), c);
    Multivector rhs = geometric_product(a, geometric_product(b, c));
    CHECK((lhs - rhs).max_abs_coeff() < 1e-12 * (1.0 + lhs.max_abs_coeff()));

    Multivector d1 = geometric_product(a, b + c);
    Multivector d2 = geometric_product(a, b) + geometric_product(a, c);
    CHECK((d1 - d2).max_abs_coeff() < 1e-12 * (1.0 + d1.max_abs_coeff()));

    const Complex z(g(rng), g(rng));
    Multivector s1 = geometric_product(z * a, b);
    Multivector s2 = z * geometric_product(a, b);
    CHECK((s1 - s2).max_abs_coeff() < 1e-12 * (1.0 + s1.max_abs_coeff()));
  }
}

TEST_CASE("dimension rules") {
  CHECK_THROWS_AS(Multivector(0), std::invalid_argument);
  CHECK_THROWS_AS(Multivector(13), std::invalid_argument);
  CHECK_THROWS_AS(geometric_product(Multivector(2), Multivector(3)),
                  std::invalid_argument);
  // higher-dimensional algebra stays consistent
  Multivector a = Multivector::basis_vector(7, 6);
  Multivector b = Multivector::basis_vector(7, 6);
  CHECK(std::abs(geometric_product(a, b)[0u] + 1.0) < 1e-15);
}
