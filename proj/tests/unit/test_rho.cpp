#include <doctest.h>

#include <cmath>

#include "eipack/bounds.hpp"
#include "eipack/corner.hpp"
#include "helpers.hpp"

using namespace eipack;
using namespace eipack::testing;

TEST_CASE("rho inner product") {
  Mat id = Mat::identity(Field::Complex, 3);
  CHECK(rho_inner(id, id) == doctest::Approx(1.0));

  Eigen::MatrixXcd im = Eigen::MatrixXcd::Identity(3, 3) * std::complex<double>(0, 1);
  CHECK(rho_inner(Mat(im), id) == doctest::Approx(0.0));

  Simplex s4 = simplex_from_basis(build_rho_complex(2), 4);
  CHECK(rho_inner(s4.mats[0], s4.mats[1]) == doctest::Approx(-1.0 / 3.0));

  CHECK_THROWS_AS((void)rho_inner(id, Mat::identity(Field::Complex, 2)), Error);
}

TEST_CASE("complex families have maximal length and trivial c0 space") {
  RhoSequence r1 = build_rho_complex(1);
  REQUIRE(r1.mats.size() == 2);
  CHECK(r1.mats[0].at(0, 0) == std::complex<double>(0, 1));
  CHECK(r1.mats[1].at(0, 0) == std::complex<double>(1, 0));

  for (int r : {1, 2, 3, 4, 5, 6, 8}) {
    RhoSequence seq = build_rho_complex(r);
    CHECK(static_cast<int>(seq.mats.size()) == radon_hurwitz(r, Field::Complex));
    CHECK(c0_space(seq.mats).dim == 0);
  }
}

TEST_CASE("real families match the classical lengths") {
  RhoSequence r1 = build_rho_real(1);
  REQUIRE(r1.mats.size() == 1);
  CHECK(r1.mats[0].at(0, 0).real() == 1.0);

  RhoSequence r2 = build_rho_real(2);
  REQUIRE(r2.mats.size() == 2);
  CHECK(r2.mats[0].at(0, 1).real() == -1.0);  // quarter turn
  CHECK(r2.mats[0].at(1, 0).real() == 1.0);
  CHECK((r2.mats[1] - Mat::identity(Field::Real, 2)).max_abs() == 0.0);

  for (int r : {1, 2, 4, 8, 12, 24}) {
    RhoSequence seq = build_rho_real(r);
    CHECK(static_cast<int>(seq.mats.size()) == radon_hurwitz(r, Field::Real));
    for (const Mat& c : seq.mats) CHECK(c.isometry_defect() <= 1e-14);
    for (size_t i = 0; i < seq.mats.size(); ++i)
      for (size_t j = i + 1; j < seq.mats.size(); ++j)
        CHECK((seq.mats[i].adjoint() * seq.mats[j] + seq.mats[j].adjoint() * seq.mats[i])
                  .max_abs() <= 1e-14);
  }

  CHECK_THROWS_AS((void)build_rho_real(16), Error);
  try {
    (void)build_rho_real(48);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedDyadicPart);
  }
}

TEST_CASE("unit-norm combinations of a family are unitary") {
  auto rng = seeded(77);
  for (int r : {2, 4, 8}) {
    RhoSequence seq = build_rho_real(r);
    for (int trial = 0; trial < 10; ++trial) {
      Eigen::VectorXd coeff(seq.mats.size());
      for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff(i) = gaussian(rng);
      coeff /= coeff.norm();
      Mat combo = Mat::zeros(Field::Real, r, r);
      for (Eigen::Index i = 0; i < coeff.size(); ++i)
        combo = combo + seq.mats[i].scaled(coeff(i));
      CHECK(std::abs(rho_inner(combo, combo) - 1.0) < 1e-12);
      CHECK(combo.isometry_defect() <= 1e-9);
    }
  }
}

TEST_CASE("simplex construction") {
  RhoSequence single{Field::Real, 2, {build_rho_real(2).mats[0]}};
  Simplex pair = simplex_from_basis(single, 2);
  CHECK((pair.mats[0] - single.mats[0]).max_abs() < 1e-12);
  CHECK((pair.mats[1] + single.mats[0]).max_abs() < 1e-12);
  CHECK(rho_inner(pair.mats[0], pair.mats[1]) == doctest::Approx(-1.0));

  Simplex three = simplex_from_basis(build_rho_real(2), 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK(rho_inner(three.mats[i], three.mats[j]) == doctest::Approx(-0.5));

  CHECK_THROWS_AS((void)simplex_from_basis(build_rho_complex(1), 4), Error);
  try {
    (void)simplex_from_basis(build_rho_complex(1), 4);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BasisTooShort);
  }
}

TEST_CASE("simplex span has full rank") {
  for (int m : {2, 3, 4, 5}) {
    Simplex s = simplex_from_basis(build_rho_real(8), m);
    Eigen::MatrixXd gram(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) gram(i, j) = rho_inner(s.mats[i], s.mats[j]);
    CHECK(numerical_rank(Mat(gram)) == m - 1);
  }
}

TEST_CASE("packings from simplices") {
  SubspaceSequence c213 = eitff_from_simplex(simplex_from_basis(build_rho_complex(1), 2));
  CHECK(c213.d() == 2);
  CHECK(c213.n() == 3);
  FrameCertificate cert = certify(c213);
  CHECK(cert.is_eitff);
  CHECK(std::abs(*cert.alpha - 0.5) < 1e-9);

  FrameCertificate real424 = certify(eitff_r424());
  CHECK(real424.is_eitff);
  CHECK(std::abs(*real424.alpha - 1.0 / std::sqrt(3.0)) < 1e-9);

  SubspaceSequence c634 = complex_simplex_eitff(3);
  CHECK(c634.d() == 6);
  CHECK(c634.r() == 3);
  CHECK(c634.n() == 4);
  CHECK(certify(c634).is_eitff);
}

TEST_CASE("c0 spaces") {
  CHECK(c0_space(build_rho_complex(1).mats).dim == 0);
  CHECK(c0_space({Mat::identity(Field::Real, 3)}).dim == 3);  // all skew 3x3
  CHECK(c0_space(build_rho_real(2).mats).dim == 0);
}

TEST_CASE("corner dimension via the anticommutant") {
  RhoSequence basis4 = build_rho_complex(4);
  SubspaceSequence s4 = eitff_from_simplex(simplex_from_basis(basis4, 7));
  CHECK(dim_Kn_via_sform(basis4, s4) == 8);

  RhoCounterexample ce = counterexample_not_power_of_two(3, Field::Real);
  SubspaceSequence bad = eitff_from_simplex(simplex_from_basis(ce.seq, 2));
  CHECK(dim_Kn_via_sform(ce.seq, bad) == 6);

  RhoSequence basis2 = build_rho_real(2);
  CHECK(dim_Kn_via_sform(basis2, eitff_r424()) == 4);
}

TEST_CASE("non-power-of-two counterexamples") {
  RhoCounterexample ce3 = counterexample_not_power_of_two(3, Field::Real);
  REQUIRE(ce3.seq.mats.size() == 1);
  CHECK((ce3.seq.mats[0] - Mat::identity(Field::Real, 3)).max_abs() == 0.0);
  CHECK(ce3.c0.at(0, 1).real() == 1.0);
  CHECK(ce3.c0.at(1, 0).real() == -1.0);
  CHECK(ce3.c0.at(2, 2).real() == 0.0);
  Mat anti = ce3.c0.adjoint() * ce3.seq.mats[0] + ce3.seq.mats[0].adjoint() * ce3.c0;
  CHECK(anti.max_abs() == 0.0);

  RhoCounterexample ce6 = counterexample_not_power_of_two(6, Field::Real);
  REQUIRE(ce6.seq.mats.size() == 2);
  SubspaceSequence s = eitff_from_simplex(simplex_from_basis(ce6.seq, 3));
  CHECK(s.d() == 12);
  CHECK(s.r() == 6);
  CHECK(s.n() == 4);
  CHECK(certify(s).is_eitff);
  CHECK(dim_Kn_via_sform(ce6.seq, s) > 4);

  try {
    (void)counterexample_not_power_of_two(4, Field::Real);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotApplicable);
  }

  RhoCounterexample cec = counterexample_not_power_of_two(6, Field::Complex);
  CHECK(cec.seq.mats.size() == 4);  // matches the complex count at r = 6
}

TEST_CASE("complex pipeline reaches the final corner bound up to size eight") {
  for (int r = 1; r <= 8; ++r) {
    RhoSequence basis = build_rho_complex(r);
    SubspaceSequence s =
        eitff_from_simplex(simplex_from_basis(basis, static_cast<int>(basis.mats.size()) + 1));
    CHECK(s.n() == radon_hurwitz(r, Field::Complex) + 2);
    KnCertificate cert = certify_dim_Kn_eq_n(s);
    CHECK(cert.satisfied);
    CHECK(cert.is_eitff);
  }
}

TEST_CASE("rotated simplices keep the final corner dimension") {
  auto rng = seeded(4242);
  for (int r : {1, 2, 4}) {
    RhoSequence basis = build_rho_real(r);
    const int m = static_cast<int>(basis.mats.size()) + 1;
    for (int trial = 0; trial < 3; ++trial) {
      std::optional<Eigen::MatrixXd> rot;
      if (m >= 2) rot = random_unitary(Field::Real, m - 1, rng).real_mat();
      SubspaceSequence s = eitff_from_simplex(simplex_from_basis(basis, m, rot));
      CHECK(certify_dim_Kn_eq_n(s).satisfied);
    }
  }
}
