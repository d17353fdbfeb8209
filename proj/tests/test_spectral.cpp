#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "ctqw/errors.hpp"
#include "ctqw/oracle.hpp"
#include "ctqw/spectral.hpp"
#include "test_support.hpp"

using namespace ctqw;
using std::complex;

namespace {
JacobiCoefficients tree_jacobi() {
  JacobiCoefficients j;
  j.alphas = Eigen::VectorXd::Zero(4);
  j.betas.resize(3);
  j.betas << std::sqrt(3.0), std::sqrt(2.0 / 3.0), std::sqrt(1.0 / 3.0);
  return j;
}

JacobiCoefficients edge_jacobi() {
  JacobiCoefficients j;
  j.alphas = Eigen::VectorXd::Zero(2);
  j.betas = Eigen::VectorXd::Ones(1);
  return j;
}

JacobiCoefficients path_jacobi(int n) {
  JacobiCoefficients j;
  Eigen::VectorXd betas = ts::path_expected_betas(n);
  j.alphas = Eigen::VectorXd::Zero(betas.size() + 1);
  j.betas = betas;
  return j;
}

std::vector<JacobiCoefficients> jacobi_corpus() {
  std::vector<JacobiCoefficients> out;
  for (const auto& [g, o] : ts::corpus()) {
    auto run = lanczos_run(g, Eigen::VectorXd::Unit(g.n, o), g.n,
                           default_breakdown_tol(g));
    out.push_back(run.jacobi);
  }
  return out;
}
}  // namespace

TEST_CASE("eval_poly_p") {
  JacobiCoefficients t = tree_jacobi();
  CHECK(eval_poly_p(t, 0, 0.37) == 1.0);
  // two recursion steps by hand: P2(0) = -beta1 / beta2 = -sqrt(9/2)
  CHECK(eval_poly_p(t, 2, 0.0) ==
        doctest::Approx(-std::sqrt(4.5)).epsilon(1e-14));

  JacobiCoefficients p4 = path_jacobi(4);
  double atom = 2.0 * std::cos(M_PI / 5.0);
  CHECK(std::abs(eval_poly_p(p4, 4, atom)) < 1e-10);  // top polynomial kills atoms

  CHECK_THROWS_AS(eval_poly_p(t, 5, 0.0), IndexOutOfRange);
  CHECK_THROWS_AS(eval_poly_p(t, -1, 0.0), IndexOutOfRange);
}

TEST_CASE("eval_poly_q1") {
  JacobiCoefficients t = tree_jacobi();
  CHECK(eval_poly_q1(t, 0, 123.0) == 1.0);
  CHECK(eval_poly_q1(t, 1, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  for (double x : {-1.7, -0.3, 0.0, 0.4, 2.2})  // Q3 = x^3 - x for the tree
    CHECK(eval_poly_q1(t, 3, x) == doctest::Approx(x * x * x - x).epsilon(1e-13));
  CHECK_THROWS_AS(eval_poly_q1(t, 4, 0.0), IndexOutOfRange);
}

TEST_CASE("stieltjes closed forms") {
  JacobiCoefficients e = edge_jacobi();
  complex<double> g2i = stieltjes(e, {0.0, 2.0});
  CHECK(std::abs(g2i - complex<double>(0.0, -0.4)) < 1e-14);

  // large-|z| asymptotics: G ~ 1/z
  JacobiCoefficients t = tree_jacobi();
  complex<double> big = {0.0, 1e6};
  CHECK(std::abs(stieltjes(t, big) - 1.0 / big) < 1e-10);

  // path P4 from the second vertex: G(z) = z U_{n-2}(z/2) / U_n(z/2)
  JacobiCoefficients p4 = path_jacobi(4);
  double expected = 3.0 * oracle::chebyshev_u(2, 1.5) / oracle::chebyshev_u(4, 1.5);
  CHECK(std::abs(stieltjes(p4, {3.0, 0.0}) - expected) < 1e-12);

  CHECK_THROWS_AS(stieltjes(e, {1.0, 0.0}), PoleAtAtom);
}

TEST_CASE("stieltjes agrees with the measure expansion") {
  for (const auto& j : jacobi_corpus()) {
    SpectralMeasure m = measure_from_jacobi(j);
    for (double im : {0.5, 1.0, 2.0}) {
      for (double re = -3.0; re <= 3.0; re += 0.75) {
        complex<double> z{re, im};
        complex<double> direct = 0.0;
        for (int l = 0; l < m.size(); ++l)
          direct += m.weights[l] / (z - m.atoms[l]);
        CHECK(std::abs(stieltjes(j, z) - direct) < 1e-10);
      }
    }
  }
}

TEST_CASE("measure_from_jacobi closed forms") {
  SpectralMeasure edge = measure_from_jacobi(edge_jacobi());
  REQUIRE(edge.size() == 2);
  CHECK(edge.atoms[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(edge.atoms[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(edge.weights[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(edge.weights[1] == doctest::Approx(0.5).epsilon(1e-13));

  // path measure: atoms 2cos(l pi / (n+1)), weights 2/(n+1) sin^2(2l pi/(n+1))
  for (int n : {4, 10, 11}) {
    SpectralMeasure m = measure_from_jacobi(path_jacobi(n));
    const int dim = (n % 2 == 0) ? n : n - 1;
    REQUIRE(m.size() == dim);
    int idx = 0;
    for (int l = n; l >= 1; --l) {  // ascending atoms
      if (n % 2 == 1 && 2 * l == n + 1) continue;  // zero-weight atom absent
      double atom = 2.0 * std::cos(l * M_PI / (n + 1));
      double weight = 2.0 / (n + 1) * std::pow(std::sin(2.0 * l * M_PI / (n + 1)), 2);
      CHECK(std::abs(m.atoms[idx] - atom) < 1e-10);
      CHECK(std::abs(m.weights[idx] - weight) < 1e-10);
      ++idx;
    }
  }

  SpectralMeasure tree = measure_from_jacobi(tree_jacobi());
  REQUIRE(tree.size() == 4);
  const double outer = std::sqrt(2.0 + std::sqrt(3.0));
  const double inner = std::sqrt(2.0 - std::sqrt(3.0));
  const double w_outer = (3.0 + std::sqrt(3.0)) / 12.0;
  const double w_inner = (3.0 - std::sqrt(3.0)) / 12.0;
  CHECK(tree.atoms[0] == doctest::Approx(-outer).epsilon(1e-12));
  CHECK(tree.atoms[1] == doctest::Approx(-inner).epsilon(1e-12));
  CHECK(tree.atoms[2] == doctest::Approx(inner).epsilon(1e-12));
  CHECK(tree.atoms[3] == doctest::Approx(outer).epsilon(1e-12));
  CHECK(tree.weights[0] == doctest::Approx(w_outer).epsilon(1e-12));
  CHECK(tree.weights[1] == doctest::Approx(w_inner).epsilon(1e-12));
  CHECK(tree.weights[2] == doctest::Approx(w_inner).epsilon(1e-12));
  CHECK(tree.weights[3] == doctest::Approx(w_outer).epsilon(1e-12));
}

TEST_CASE("measure invariants") {
  for (const auto& j : jacobi_corpus()) {
    SpectralMeasure m = measure_from_jacobi(j);
    CHECK(std::abs(m.weights.sum() - 1.0) < 1e-10);
    CHECK(m.weights.minCoeff() > 0.0);
    for (int l = 0; l + 1 < m.size(); ++l) CHECK(m.atoms[l] < m.atoms[l + 1]);
    CHECK(std::abs(m.atoms.dot(m.weights) - j.alphas[0]) < 1e-10);
    double second = (m.weights.array() * m.atoms.array().square()).sum();
    double expected = j.alphas[0] * j.alphas[0] +
                      (j.dim() > 1 ? j.betas[0] * j.betas[0] : 0.0);
    CHECK(std::abs(second - expected) < 1e-9);
  }
}

TEST_CASE("in-repo tridiagonal solver agrees with a dense solver") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 1 + static_cast<int>(rng() % 14);
    Eigen::VectorXd diag(d), off(std::max(0, d - 1));
    for (int i = 0; i < d; ++i)
      diag[i] = (static_cast<double>(rng() % 2000) - 1000.0) / 500.0;
    for (int i = 0; i + 1 < d; ++i)
      off[i] = 0.05 + static_cast<double>(rng() % 1000) / 500.0;
    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) full(i, i) = diag[i];
    for (int i = 0; i + 1 < d; ++i) full(i, i + 1) = full(i + 1, i) = off[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(full);

    TridiagEigen mine = tridiag_eigen_first_row(diag, off);
    double scale = std::max(1.0, full.cwiseAbs().maxCoeff());
    for (int i = 0; i < d; ++i) {
      CHECK(std::abs(mine.values[i] - dense.eigenvalues()[i]) < 1e-12 * scale * d);
      CHECK(std::abs(std::abs(mine.first_components[i]) -
                     std::abs(dense.eigenvectors()(0, i))) < 1e-10);
    }
  }
}

TEST_CASE("weight_by_residue") {
  CHECK(weight_by_residue(edge_jacobi(), 1.0) == doctest::Approx(0.5).epsilon(1e-13));

  JacobiCoefficients p4 = path_jacobi(4);
  double atom = 2.0 * std::cos(M_PI / 5.0);
  double expected = 0.4 * std::pow(std::sin(2.0 * M_PI / 5.0), 2);
  CHECK(weight_by_residue(p4, atom) == doctest::Approx(expected).epsilon(1e-12));

  JacobiCoefficients t = tree_jacobi();
  double outer = std::sqrt(2.0 + std::sqrt(3.0));
  CHECK(weight_by_residue(t, outer) ==
        doctest::Approx((3.0 + std::sqrt(3.0)) / 12.0).epsilon(1e-12));

  CHECK_THROWS_AS(weight_by_residue(t, 1.0), NotAnAtom);
}

TEST_CASE("residue weights equal eigenvector weights") {
  for (const auto& j : jacobi_corpus()) {
    SpectralMeasure m = measure_from_jacobi(j);
    for (int l = 0; l < m.size(); ++l)
      CHECK(std::abs(weight_by_residue(j, m.atoms[l]) - m.weights[l]) < 1e-8);
  }
}

TEST_CASE("quadrature is exact up to degree 2 dim - 1") {
  for (const auto& [g, o] : ts::corpus()) {
    auto run = lanczos_run(g, Eigen::VectorXd::Unit(g.n, o), g.n,
                           default_breakdown_tol(g));
    SpectralMeasure m = measure_from_jacobi(run.jacobi);
    for (int power = 0; power <= 2 * run.jacobi.dim() - 1; ++power) {
      double via_walks = ts::moment_via_adjacency(g, run.basis.start, power);
      double via_measure = (m.weights.array() * m.atoms.array().pow(power)).sum();
      // high moments are large walk counts; past the 1e-8 absolute regime
      // the meaningful statement is relative agreement
      if (std::abs(via_walks) < 1e6)
        CHECK(std::abs(via_walks - via_measure) < 1e-8);
      else
        CHECK(std::abs(via_walks - via_measure) < 1e-12 * std::abs(via_walks));
    }
  }
}

TEST_CASE("polynomials are orthonormal under the measure") {
  // scoped to dimensions where the forward recursion is in its stable
  // regime; amplitude code uses the eigenvector form instead
  for (const auto& j : jacobi_corpus()) {
    if (j.dim() > 12) continue;
    SpectralMeasure m = measure_from_jacobi(j);
    for (int a = 0; a < j.dim(); ++a)
      for (int b = a; b < j.dim(); ++b) {
        double acc = 0.0;
        for (int l = 0; l < m.size(); ++l)
          acc += m.weights[l] * eval_poly_p(j, a, m.atoms[l]) *
                 eval_poly_p(j, b, m.atoms[l]);
        CHECK(std::abs(acc - (a == b ? 1.0 : 0.0)) < 1e-8);
      }
  }
}

TEST_CASE("log_beta_product rescales P to P'") {
  JacobiCoefficients t = tree_jacobi();
  // P'_2(x) = x^2 - beta1^2 = x^2 - 3
  double x = 1.3;
  double monic = std::exp(log_beta_product(t, 2)) * eval_poly_p(t, 2, x);
  CHECK(monic == doctest::Approx(x * x - 3.0).epsilon(1e-13));
}
