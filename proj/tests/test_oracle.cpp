#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "specgap/oracle.hpp"
#include "specgap/resultant.hpp"
#include "specgap/roots.hpp"

using namespace specgap;

TEST_CASE("harmonic oscillator is diagonal in its own basis") {
  PotentialSpec v = PotentialSpec::custom({Rational(0), Rational(0), make_rational(1, 2)});
  Eigen::MatrixXd h = oracle::build_hamiltonian(v, {32, 1.0});
  // the last diagonal entry feels the basis truncation of the squared
  // position product; everything else is exact
  for (int i = 0; i + 1 < 32; ++i) {
    CHECK(h(i, i) == doctest::Approx(i + 0.5).epsilon(1e-14));
    for (int j = 0; j < 32; ++j)
      if (i != j) CHECK(std::abs(h(i, j)) < 1e-14);
  }
}

TEST_CASE("ground-state expectation of the squared position") {
  for (double w : {0.7, 1.0, 2.5}) {
    PotentialSpec v = PotentialSpec::custom({Rational(0), Rational(0), Rational(1)});
    Eigen::MatrixXd h = oracle::build_hamiltonian(v, {16, w});
    double x2_00 = h(0, 0) - 0.25 * w * 1.0;
    CHECK(x2_00 == doctest::Approx(1.0 / (2.0 * w)).epsilon(1e-13));
  }
}

TEST_CASE("truncation consistency of the banded build") {
  PotentialSpec v = PotentialSpec::quartic(rat_from_string("-2.3"));
  Eigen::MatrixXd h32 = oracle::build_hamiltonian(v, {32, 1.5});
  Eigen::MatrixXd h64 = oracle::build_hamiltonian(v, {64, 1.5});
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(h32(i, j) == h64(i, j));
}

TEST_CASE("config validation") {
  PotentialSpec v = PotentialSpec::quartic(Rational(1));
  CHECK_THROWS_AS((void)oracle::build_hamiltonian(v, {8, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS((void)oracle::build_hamiltonian(v, {32, -1.0}), std::invalid_argument);
}

TEST_CASE("symmetric eigenvalues of small matrices") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = 2;
  auto ev = oracle::eigensolve_symmetric(d);
  CHECK(ev[0] == doctest::Approx(1));
  CHECK(ev[1] == doctest::Approx(2));
  CHECK(ev[2] == doctest::Approx(3));

  Eigen::MatrixXd f(2, 2);
  f << 0, 1, 1, 0;
  auto ev2 = oracle::eigensolve_symmetric(f);
  CHECK(ev2[0] == doctest::Approx(-1));
  CHECK(ev2[1] == doctest::Approx(1));

  Eigen::MatrixXd bad(2, 2);
  bad << 0, 1, 2, 0;
  CHECK_THROWS_AS((void)oracle::eigensolve_symmetric(bad), std::invalid_argument);
}

TEST_CASE("eigenvalues of a random symmetric matrix match its characteristic roots") {
  std::mt19937 rng(6);
  std::uniform_int_distribution<long> coeff(-6, 6);
  Eigen::MatrixXd a(6, 6);
  std::vector<std::vector<MPoly>> m(6, std::vector<MPoly>(6));
  const MPoly T = MPoly::variable(Var::E);
  std::vector<std::vector<Rational>> entries(6, std::vector<Rational>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j <= i; ++j) {
      entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          make_rational(coeff(rng), 2);
      entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      a(i, j) = rat_to_double(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          MPoly(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      if (i == j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= T;
    }
  MPoly charpoly = bareiss_determinant(m);
  auto ev = oracle::eigensolve_symmetric(a);
  auto ivs = isolate_real_roots(UView(Var::E, charpoly));
  REQUIRE(ivs.size() == 6);  // random symmetric: simple spectrum expected
  for (int i = 0; i < 6; ++i) {
    Rational r = refine_root(UView(Var::E, charpoly), ivs[static_cast<std::size_t>(i)],
                             Rational(1, 10000000000L));
    CHECK(std::abs(ev[static_cast<std::size_t>(i)] - rat_to_double(r)) < 1e-8);
  }
}

TEST_CASE("eigenpair residuals stay below the contract bound") {
  PotentialSpec v = PotentialSpec::quartic(rat_from_string("-2.3"));
  Eigen::MatrixXd h = oracle::build_hamiltonian(v, {64, 1.5});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  double hnorm = h.cwiseAbs().maxCoeff();
  for (int k : {0, 1, 5, 20, 63}) {
    Eigen::VectorXd vvec = es.eigenvectors().col(k);
    double resid = (h * vvec - es.eigenvalues()[k] * vvec).norm();
    CHECK(resid <= 1e-9 * hnorm);
  }
}

TEST_CASE("double-well spectrum matches the published levels") {
  PotentialSpec v = PotentialSpec::quartic(rat_from_string("-2.3"));
  auto r = oracle::converged_spectrum(v, 7, 1e-8);
  const double published[7] = {-0.5012, -0.2549, 0.9606, 2.1003, 3.5281, 5.1202, 6.8609};
  for (int i = 0; i < 7; ++i)
    CHECK(std::abs(r.energies[static_cast<std::size_t>(i)] - published[i]) <= 5e-4);
  CHECK(r.convergence_estimate <= 1e-8);
  CHECK(r.basis_size_used >= 64);
}

TEST_CASE("pure sextic spectrum matches the published levels") {
  auto r = oracle::converged_spectrum(PotentialSpec::sextic(), 3, 1e-8);
  CHECK(std::abs(r.energies[0] - 0.6807) <= 5e-4);
  CHECK(std::abs(r.energies[1] - 2.5797) <= 5e-4);
  CHECK(std::abs(r.energies[2] - 5.3948) <= 5e-4);
}

TEST_CASE("harmonic levels are exact to tight tolerance") {
  PotentialSpec v = PotentialSpec::custom({Rational(0), Rational(0), make_rational(1, 2)});
  auto r = oracle::converged_spectrum(v, 5, 1e-10);
  for (int i = 0; i < 5; ++i)
    CHECK(std::abs(r.energies[static_cast<std::size_t>(i)] - (i + 0.5)) <= 1e-10);
}

TEST_CASE("parity blocks interleave into the full spectrum") {
  PotentialSpec v = PotentialSpec::quartic(rat_from_string("-2.3"));
  const int k = 64;
  Eigen::MatrixXd h = oracle::build_hamiltonian(v, {k, 1.8});
  // even/odd coupling entries vanish identically for an even potential
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if ((i + j) % 2 == 1) CHECK(h(i, j) == 0.0);
  auto full = oracle::eigensolve_symmetric(h);
  const int ne = k / 2;
  Eigen::MatrixXd he(ne, ne), ho(ne, ne);
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < ne; ++j) {
      he(i, j) = h(2 * i, 2 * j);
      ho(i, j) = h(2 * i + 1, 2 * j + 1);
    }
  auto ee = oracle::eigensolve_symmetric(he);
  auto eo = oracle::eigensolve_symmetric(ho);
  std::vector<double> merged = ee;
  merged.insert(merged.end(), eo.begin(), eo.end());
  std::sort(merged.begin(), merged.end());
  for (int i = 0; i < k; ++i)
    CHECK(std::abs(full[static_cast<std::size_t>(i)] - merged[static_cast<std::size_t>(i)]) <=
          1e-10 * std::max(1.0, std::abs(full[static_cast<std::size_t>(i)])));
}

TEST_CASE("levels decrease monotonically with basis growth") {
  PotentialSpec v = PotentialSpec::quartic(rat_from_string("-2.3"));
  std::vector<std::vector<double>> levels;
  for (int k : {64, 128, 256}) {
    Eigen::MatrixXd h = oracle::build_hamiltonian(v, {k, 1.8});
    levels.push_back(oracle::eigensolve_symmetric(h));
  }
  // slack covers the eigensolver rounding floor at these operator norms
  for (std::size_t step = 1; step < levels.size(); ++step)
    for (int i = 0; i < 6; ++i)
      CHECK(levels[step][static_cast<std::size_t>(i)] <=
            levels[step - 1][static_cast<std::size_t>(i)] + 1e-9);
}

TEST_CASE("doublet splitting at the published shape") {
  double split = oracle::doublet_splitting(rat_from_string("-2.3"), 1e-8);
  CHECK(std::abs(split - 0.2463) <= 1e-3);
  // at s = -1 the pair sits above the barrier: precondition violated
  CHECK_THROWS_AS((void)oracle::doublet_splitting(Rational(-1), 1e-8), std::invalid_argument);
}

TEST_CASE("splitting below the double-precision floor is refused") {
  CHECK_THROWS_WITH_AS((void)oracle::doublet_splitting(Rational(-12), 1e-8),
                       "splitting unresolvable", oracle::SplittingUnresolvable);
}

TEST_CASE("zero crossing of the second level") {
  double s0 = oracle::find_s0();
  CHECK(std::abs(s0 - (-2.0481)) <= 1e-3);
}

TEST_CASE("deep harmonic limit of the quartic family") {
  auto r = oracle::converged_spectrum(PotentialSpec::quartic(Rational(100)), 1, 1e-8);
  CHECK(std::abs(r.energies[0] - 5.0) / 5.0 <= 0.01);
}
