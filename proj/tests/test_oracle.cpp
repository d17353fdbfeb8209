#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "ctqw/errors.hpp"
#include "ctqw/lanczos.hpp"
#include "ctqw/oracle.hpp"
#include "ctqw/spectral.hpp"
#include "test_support.hpp"

using namespace ctqw;
using namespace ctqw::oracle;
using std::complex;

namespace {
// Independent ascending series sum_m (-1)^m (x/2)^{l+2m} / (m! (m+l)!),
// summed to convergence; the reference all bessel_j checks anchor to.
double bessel_series(int l, double x) {
  double term = std::pow(x / 2.0, l);
  for (int m = 1; m <= l; ++m) term /= m;
  double acc = term;
  for (int m = 1; m < 60; ++m) {
    term *= -(x / 2.0) * (x / 2.0) / (m * (m + l));
    acc += term;
    if (std::abs(term) < 1e-18) break;
  }
  return acc;
}

// Midpoint rule in the substituted variable x = a cos(theta); integrand
// smooth and periodic, so this converges spectrally.
template <typename F>
double substituted_integral(double a, int nodes, F&& f) {
  double acc = 0.0;
  const double h = M_PI / nodes;
  for (int i = 0; i < nodes; ++i) {
    double theta = (i + 0.5) * h;
    double x = a * std::cos(theta);
    acc += f(x) * a * std::sin(theta) * h;
  }
  return acc;
}
}  // namespace

TEST_CASE("dense_eig") {
  Graph edge = build_graph(2, {{0, 1}});
  EigenDecomposition e = dense_eig(edge);
  CHECK(e.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

  EigenDecomposition p4 = dense_eig(gen_path(4));
  for (int l = 4; l >= 1; --l)
    CHECK(p4.eigenvalues[4 - l] ==
          doctest::Approx(2.0 * std::cos(l * M_PI / 5.0)).epsilon(1e-12));

  EigenDecomposition tree = dense_eig(gen_tree_fig4());
  for (double expected : {std::sqrt(2.0 + std::sqrt(3.0)), std::sqrt(2.0 - std::sqrt(3.0))}) {
    bool found_pos = false, found_neg = false;
    for (int i = 0; i < 6; ++i) {
      if (std::abs(tree.eigenvalues[i] - expected) < 1e-10) found_pos = true;
      if (std::abs(tree.eigenvalues[i] + expected) < 1e-10) found_neg = true;
    }
    CHECK(found_pos);
    CHECK(found_neg);
  }

  CHECK_THROWS_AS(dense_eig(gen_path(10), 5), TooLarge);
}

TEST_CASE("dense_eig invariants") {
  for (const auto& [g, o] : ts::corpus()) {
    EigenDecomposition e = dense_eig(g);
    double norm = std::max(1.0, e.eigenvalues.cwiseAbs().maxCoeff());
    for (int i = 0; i < g.n; ++i) {
      Eigen::VectorXd au = adjacency_apply(g, e.eigenvectors.col(i));
      CHECK((au - e.eigenvalues[i] * e.eigenvectors.col(i)).cwiseAbs().maxCoeff() <
            1e-9 * norm);
    }
    CHECK(ts::max_offdiag_dot(e.eigenvectors) < 1e-10);
  }
}

TEST_CASE("exact_evolution") {
  Graph edge = build_graph(2, {{0, 1}});
  Eigen::VectorXcd at0 = exact_evolution(edge, 0, 0.0);
  CHECK(std::abs(at0[0] - 1.0) < 1e-14);
  CHECK(std::abs(at0[1]) < 1e-14);

  Eigen::VectorXcd atpi = exact_evolution(edge, 0, M_PI);
  CHECK(std::abs(atpi[0] + 1.0) < 1e-12);  // cos(pi)
  CHECK(std::abs(atpi[1]) < 1e-12);

  for (const auto& [g, o] : ts::corpus())
    for (double t : {0.3, 2.0, 11.0})
      CHECK(std::abs(exact_evolution(g, o, t).norm() - 1.0) < 1e-10);
}

TEST_CASE("bessel_j against the series") {
  CHECK(bessel_j(0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bessel_j(1, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(bessel_j(1, 2.0) == doctest::Approx(bessel_series(1, 2.0)).epsilon(1e-12));
  // the alternating series itself cancels badly past x ~ 15, so anchor to
  // it on moderate arguments and to the recurrence beyond
  for (int l : {0, 1, 2, 5, 13, 30})
    for (double x : {0.1, 1.0, 4.5, 8.0, 12.0})
      CHECK(std::abs(bessel_j(l, x) - bessel_series(l, x)) < 1e-10);
  // odd orders are odd in x
  CHECK(bessel_j(3, -7.0) == doctest::Approx(-bessel_j(3, 7.0)).epsilon(1e-13));
  CHECK_THROWS_AS(bessel_j(301, 1.0), IndexOutOfRange);
  CHECK_THROWS_AS(bessel_j(-1, 1.0), IndexOutOfRange);
  CHECK_THROWS_AS(bessel_j(0, 1.5e3), IndexOutOfRange);
}

TEST_CASE("bessel recurrence and completeness") {
  for (double x = 0.1; x <= 30.0; x += 0.37) {
    CHECK(std::abs(bessel_j(2, x) -
                   (2.0 / x * bessel_j(1, x) - bessel_j(0, x))) < 1e-10);
    CHECK(std::abs(bessel_j(6, x) -
                   (10.0 / x * bessel_j(5, x) - bessel_j(4, x))) < 1e-10);
  }
  for (double x : {0.5, 3.0, 9.0, 21.0}) {
    double acc = bessel_j(0, x) * bessel_j(0, x);
    for (int l = 1; l <= 60; ++l) acc += 2.0 * bessel_j(l, x) * bessel_j(l, x);
    CHECK(std::abs(acc - 1.0) < 1e-8);
  }
}

TEST_CASE("chebyshev_u") {
  CHECK(chebyshev_u(0, 0.77) == 1.0);
  CHECK(chebyshev_u(1, 0.77) == doctest::Approx(1.54).epsilon(1e-14));
  CHECK(std::abs(chebyshev_u(4, std::cos(M_PI / 5.0))) < 1e-14);
  for (int l : {2, 5, 9})
    for (double x : {-0.9, -0.2, 0.4, 0.95}) {
      double theta = std::acos(x);
      CHECK(chebyshev_u(l, x) ==
            doctest::Approx(std::sin((l + 1) * theta) / std::sin(theta)).epsilon(1e-11));
    }
}

TEST_CASE("kite_limit_amplitude") {
  CHECK(std::abs(kite_limit_amplitude(0, 0.0) - 1.0) < 1e-14);
  CHECK(std::abs(kite_limit_amplitude(2, 0.0)) < 1e-14);
  CHECK(std::abs(kite_limit_amplitude(0, 1e-6) - 1.0) < 1e-6);

  complex<double> q1 = kite_limit_amplitude(1, 1.0);
  complex<double> expected = complex<double>(0, -2.0) * bessel_series(2, 2.0);
  CHECK(std::abs(q1 - expected) < 1e-12);

  double total = 0.0;
  for (int l = 0; l <= 200; ++l) total += std::norm(kite_limit_amplitude(l, 3.0));
  CHECK(std::abs(total - 1.0) < 1e-6);
}

TEST_CASE("path_limit_q0 and its density") {
  CHECK(std::abs(path_limit_q0(0.0) - 1.0) < 1e-14);
  CHECK(std::abs(path_limit_q0(1e-7) - 1.0) < 1e-6);
  CHECK(std::abs(path_limit_q0(2.5).imag()) < 1e-14);

  double mass = substituted_integral(2.0, 2048, path_limit_density);
  CHECK(std::abs(mass - 1.0) < 1e-8);

  // Fourier transform of the density at t = 2 equals the Bessel form
  const double t = 2.0;
  double re = substituted_integral(2.0, 2048, [&](double x) {
    return std::cos(x * t) * path_limit_density(x);
  });
  double im = substituted_integral(2.0, 2048, [&](double x) {
    return -std::sin(x * t) * path_limit_density(x);
  });
  CHECK(std::abs(complex<double>(re, im) - path_limit_q0(t)) < 1e-8);
}

TEST_CASE("kite_limit_density") {
  for (int k : {2, 10, 100}) {
    double edge = 2.0 * std::sqrt(k + 1.0);
    double mass = substituted_integral(
        edge, 4096, [&](double x) { return kite_limit_density(k, x); });
    CHECK(std::abs(mass - 1.0) < 1e-8);
    CHECK(std::abs(kite_limit_density(k, edge)) < 1e-6);  // band edge, up to rounding in edge^2 - x^2
    CHECK(kite_limit_density(k, edge + 0.5) == 0.0);
  }
  CHECK(kite_limit_density(2, 0.0) ==
        doctest::Approx(std::sqrt(12.0) / (4.0 * M_PI)).epsilon(1e-13));
}

TEST_CASE("spectral measure sits inside the dense spectrum") {
  for (const auto& [g, o] : ts::corpus()) {
    auto run = lanczos_run(g, Eigen::VectorXd::Unit(g.n, o));
    SpectralMeasure m = measure_from_jacobi(run.jacobi);
    EigenDecomposition e = dense_eig(g);
    for (int l = 0; l < m.size(); ++l) {
      double weight_from_projections = 0.0;
      double nearest = 1e300;
      for (int i = 0; i < g.n; ++i) {
        nearest = std::min(nearest, std::abs(e.eigenvalues[i] - m.atoms[l]));
        if (std::abs(e.eigenvalues[i] - m.atoms[l]) < 1e-8)
          weight_from_projections +=
              e.eigenvectors(o, i) * e.eigenvectors(o, i);
      }
      CHECK(nearest < 1e-8);
      CHECK(std::abs(weight_from_projections - m.weights[l]) < 1e-8);
    }
  }
}
