#include <cmath>
#include <numeric>

#include "doctest.h"
#include "spectre/errors.hpp"
#include "spectre/generators.hpp"
#include "spectre/oracles.hpp"
#include "spectre/spectral.hpp"

using namespace spectre;

namespace {

double tol(const SymmetricMatrix& m) { return 1e-9 * (1.0 + m.norm_inf()); }

void check_close(const std::vector<double>& got, const std::vector<double>& expected, double eps) {
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expected[i]) <= eps);
}

const Partition kPetersenHalves({VertexSet{0, 1, 2, 3, 4}, VertexSet{5, 6, 7, 8, 9}}, 10);

}  // namespace

TEST_CASE("matrix construction") {
  const SymmetricMatrix a = build_matrix(complete(4), MatrixKind::adjacency());
  const SymmetricMatrix l = build_matrix(complete(4), MatrixKind::laplacian());
  const SymmetricMatrix c = build_matrix(cycle(4), MatrixKind(2.0, 1.0));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(a(i, j) == (i == j ? 0.0 : 1.0));
      CHECK(l(i, j) == (i == j ? 3.0 : -1.0));
      const bool adjacent = (i + 1) % 4 == j || (j + 1) % 4 == i;
      CHECK(c(i, j) == (i == j ? 4.0 : adjacent ? 1.0 : 0.0));
    }
  }
  CHECK(l.trace() == 12.0);
}

TEST_CASE("matrix kinds are validated") {
  CHECK_THROWS_AS(MatrixKind(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(MatrixKind(-2.0, 1.0), DomainError);
  CHECK_THROWS_AS(MatrixKind(2.0, -1.0), DomainError);
  CHECK_THROWS_AS(MatrixKind(NAN, 1.0), DomainError);
  CHECK_NOTHROW(MatrixKind(-1.0, 1.0));
  CHECK_NOTHROW(MatrixKind(1.0, -1.0));
}

TEST_CASE("closed-form spectra") {
  check_close(spectrum(complete(4), MatrixKind::adjacency()).values, {3, -1, -1, -1}, 1e-9 * 4);
  check_close(spectrum(cycle(4), MatrixKind::adjacency()).values, {2, 0, 0, -2}, 1e-9 * 3);
  check_close(spectrum(petersen(), MatrixKind::adjacency()).values, {3, 1, 1, 1, 1, 1, -2, -2, -2, -2}, 1e-9 * 4);
  check_close(spectrum(complete(4), MatrixKind::laplacian()).values, {4, 4, 4, 0}, 1e-9 * 7);
  for (int n = 1; n <= 30; ++n) {
    const SymmetricMatrix m = build_matrix(complete(n), MatrixKind::adjacency());
    check_close(eigenvalues(m).values, oracle::complete_spectrum(n), tol(m));
  }
  for (int n = 3; n <= 60; ++n) {
    const SymmetricMatrix m = build_matrix(cycle(n), MatrixKind::adjacency());
    check_close(eigenvalues(m).values, oracle::cycle_spectrum(n), tol(m));
  }
  for (int a = 1; a <= 15; a += 2) {
    for (int b = 1; b <= 15; b += 3) {
      const SymmetricMatrix m = build_matrix(complete_bipartite(a, b), MatrixKind::adjacency());
      check_close(eigenvalues(m).values, oracle::complete_bipartite_spectrum(a, b), tol(m));
    }
  }
  const std::vector<int> offsets{1, 3, 5};
  const SymmetricMatrix m = build_matrix(circulant(10, offsets), MatrixKind::adjacency());
  check_close(eigenvalues(m).values, oracle::circulant_spectrum(10, offsets), 1e-8);
}

TEST_CASE("independent oracles agree with closed forms") {
  // det(xI - A) of Petersen = (x-3)(x-1)^5(x+2)^4.
  CHECK(oracle::characteristic_polynomial(petersen()) == oracle::polynomial_from_roots({{3, 1}, {1, 5}, {-2, 4}}));
  CHECK(oracle::characteristic_polynomial(complete(4)) == oracle::polynomial_from_roots({{3, 1}, {-1, 3}}));
  const SymmetricMatrix m = build_matrix(heawood(), MatrixKind::shifted(0.5));
  check_close(oracle::jacobi_eigenvalues(m), eigenvalues(m).values, tol(m));
}

TEST_CASE("lambda_i") {
  CHECK(lambda_i(complete(4), MatrixKind::adjacency(), 2) == doctest::Approx(-1.0));
  CHECK(lambda_i(petersen(), MatrixKind::adjacency(), 2) == doctest::Approx(1.0));
  CHECK(lambda_i(complete(4), MatrixKind::signless(), 2) == doctest::Approx(2.0));
  CHECK(lambda_i(complete(6), MatrixKind::adjacency(), 2) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(lambda_i(complete(4), MatrixKind::adjacency(), 0), DomainError);
  CHECK_THROWS_AS(lambda_i(complete(4), MatrixKind::adjacency(), 5), DomainError);
}

TEST_CASE("eigensolver edge cases") {
  SymmetricMatrix one(1);
  one.set(0, 0, 7.5);
  CHECK(eigenvalues(one).values == std::vector<double>{7.5});
  SymmetricMatrix bad(2);
  bad.set(0, 1, INFINITY);
  CHECK_THROWS_AS(eigenvalues(bad), DomainError);
  CHECK_THROWS_AS(eigenvalues(SymmetricMatrix(0)), DomainError);
  const SymmetricMatrix m = build_matrix(tutte_coxeter(), MatrixKind::laplacian());
  const auto v = eigenvalues(m).values;
  CHECK(std::is_sorted(v.rbegin(), v.rend()));
  CHECK(std::abs(std::accumulate(v.begin(), v.end(), 0.0) - m.trace()) <= 1e-8 * 30);
  CHECK(eigenvalues(m).values == v);  // deterministic
}

TEST_CASE("quotient matrices") {
  SUBCASE("C4 alternate blocks") {
    const Partition p({VertexSet{0, 2}, VertexSet{1, 3}}, 4);
    const QuotientMatrix r = quotient_matrix(build_matrix(cycle(4), MatrixKind::adjacency()), p);
    CHECK(r(0, 0) == 0.0);
    CHECK(r(0, 1) == 2.0);
    CHECK(r(1, 0) == 2.0);
    CHECK(r(1, 1) == 0.0);
  }
  SUBCASE("K4 vertex versus rest") {
    const Partition p({VertexSet{0}, VertexSet{1, 2, 3}}, 4);
    const QuotientMatrix r = quotient_matrix(build_matrix(complete(4), MatrixKind::adjacency()), p);
    CHECK(r(0, 0) == 0.0);
    CHECK(r(0, 1) == 3.0);
    CHECK(r(1, 0) == 1.0);
    CHECK(r(1, 1) == 2.0);
    check_close(quotient_eigenvalues(r), {3, -1}, 1e-12);
  }
  SUBCASE("singleton blocks reproduce the matrix") {
    const SymmetricMatrix m = build_matrix(petersen(), MatrixKind::shifted(0.3));
    std::vector<int> labels(10);
    std::iota(labels.begin(), labels.end(), 0);
    const QuotientMatrix r = quotient_matrix(m, Partition::from_labels(labels));
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = 0; j < 10; ++j) CHECK(r(i, j) == m(i, j));
  }
  SUBCASE("general m uses the symmetrized form") {
    const SymmetricMatrix m = build_matrix(petersen(), MatrixKind::adjacency());
    const std::vector<int> labels{0, 0, 1, 1, 2, 2, 2, 0, 1, 2};
    const auto eta = quotient_eigenvalues(quotient_matrix(m, Partition::from_labels(labels)));
    CHECK(eta.size() == 3);
    CHECK(check_interlacing(eigenvalues(m).values, eta).holds);
  }
}

TEST_CASE("interlacing") {
  const std::vector<double> c4{2, 0, 0, -2};
  const std::vector<double> half{2, -2};
  const Interlacing tight = check_interlacing(c4, half);
  CHECK(tight.holds);
  CHECK(tight.tight);
  CHECK_FALSE(tight.witness);

  const std::vector<double> theta{1, 0};
  const std::vector<double> eta{2};
  const Interlacing bad = check_interlacing(theta, eta);
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.tight);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == 1);

  const std::vector<double> loose_eta{0.5, -1};
  const Interlacing loose = check_interlacing(c4, loose_eta);
  CHECK(loose.holds);
  CHECK_FALSE(loose.tight);

  CHECK_THROWS_AS(check_interlacing(eta, c4), DomainError);
  CHECK_THROWS_AS(check_interlacing(theta, std::vector<double>{}), DomainError);

  const SymmetricMatrix m = build_matrix(petersen(), MatrixKind::adjacency());
  const auto eta_p = quotient_eigenvalues(quotient_matrix(m, kPetersenHalves));
  check_close(eta_p, {3, 1}, 1e-12);
  const Interlacing p = check_interlacing(eigenvalues(m).values, eta_p);
  CHECK(p.holds);
  CHECK(p.tight);
}

TEST_CASE("equitable partitions") {
  CHECK(is_equitable(cycle(4), Partition({VertexSet{0, 2}, VertexSet{1, 3}}, 4)));
  CHECK(is_equitable(petersen(), kPetersenHalves));
  CHECK(is_equitable(path(3), Partition({VertexSet{0, 2}, VertexSet{1}}, 3)));
  CHECK_FALSE(is_equitable(path(3), Partition({VertexSet{0}, VertexSet{1, 2}}, 3)));
}

TEST_CASE("two-part quotient closed form") {
  const auto [l1, l2] = two_part_quotient_eigen(3, 3, 5, 5, 5, 0.0);
  CHECK(l1 == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(l2 == doctest::Approx(1.0).epsilon(1e-12));
  for (double a : {-1.0, 0.0, 0.5, 2.0}) {
    const auto [r1, r2] = two_part_quotient_eigen(4, 4, 3, 7, 5, a);
    CHECK(r1 == doctest::Approx((a + 1) * 4));
    const auto [d1, d2] = two_part_quotient_eigen(2, 5, 3, 4, 0, a);
    CHECK(d1 == doctest::Approx(std::max(2 * (a + 1), 5 * (a + 1))));
    CHECK(d2 == doctest::Approx(std::min(2 * (a + 1), 5 * (a + 1))));
  }
  // Against the general solver on the symmetrized quotient of a non-equitable split.
  const Graph g = heawood();
  const Partition p({VertexSet{0, 1, 2, 3}, VertexSet{4, 5, 6, 7, 8, 9, 10, 11, 12, 13}}, 14);
  const double a = 0.7;
  const QuotientMatrix r = quotient_matrix(build_matrix(g, MatrixKind::shifted(a)), p);
  const std::size_t cut = boundary(g, p.blocks()[0]);
  const double dbar1 = (2.0 * induced(g, p.blocks()[0]).size() + cut) / 4.0;
  const double dbar2 = (2.0 * induced(g, p.blocks()[1]).size() + cut) / 10.0;
  const auto [c1, c2] = two_part_quotient_eigen(dbar1, dbar2, 4, 10, cut, a);
  SymmetricMatrix sym(2);
  sym.set(0, 0, r(0, 0));
  sym.set(1, 1, r(1, 1));
  sym.set(0, 1, std::sqrt(r(0, 1) * r(1, 0)));
  const auto general = eigenvalues(sym).values;
  CHECK(std::abs(c1 - general[0]) <= 1e-10);
  CHECK(std::abs(c2 - general[1]) <= 1e-10);
}
