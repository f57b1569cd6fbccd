#include <doctest.h>

#include <cmath>

#include "helpers.hpp"

using namespace eipack;
using namespace eipack::testing;

TEST_CASE("fusion gram blocks") {
  SubspaceSequence one = trivial_eitff(Field::Real, 3, 1);
  FusionGram g1 = fusion_gram(one);
  CHECK((g1.blocks[0][0] - Mat::identity(Field::Real, 3)).max_abs() == 0.0);

  SubspaceSequence ortho = orthogonal_coordinate_subspaces(Field::Real, 2, 3);
  FusionGram g2 = fusion_gram(ortho);
  CHECK((g2.as_matrix() - Mat::identity(Field::Real, 6)).max_abs() == 0.0);

  SubspaceSequence s = eitff_r424();
  FusionGram g3 = fusion_gram(s);
  CHECK(g3.as_matrix().hermitian_defect() <= 1e-12);
  const double alpha = 1.0 / std::sqrt(3.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) {
        CHECK((g3.blocks[i][j] - Mat::identity(Field::Real, 2)).max_abs() < 1e-12);
      } else {
        Eigen::VectorXd sv = singular_values(g3.blocks[i][j]);
        CHECK(std::abs(sv(0) - alpha) < 1e-12);
        CHECK(std::abs(sv(1) - alpha) < 1e-12);
      }
    }
}

TEST_CASE("frame operator") {
  auto rng = seeded(13);
  Mat u = random_unitary(Field::Complex, 3, rng);
  SubspaceSequence full(Field::Complex, 3, 3, {u});
  CHECK((frame_operator(full) - Mat::identity(Field::Complex, 3)).max_abs() < 1e-12);

  SubspaceSequence s = eitff_r424();
  CHECK((frame_operator(s) - Mat::identity(Field::Real, 4).scaled(2.0)).max_abs() < 1e-12);

  SubspaceSequence twice(Field::Real, 4, 2, {s.isometry(0), s.isometry(0)});
  CHECK((frame_operator(twice) - s.projection(0).scaled(2.0)).max_abs() < 1e-12);
}

TEST_CASE("frame operator trace equals r times n") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    SubspaceSequence s = random_subspaces(Field::Complex, 6, 2, 4, seed);
    CHECK(frame_operator(s).trace().real() == doctest::Approx(8.0).epsilon(1e-12));
  }
}

TEST_CASE("certification flags") {
  FrameCertificate good = certify(eitff_r424());
  CHECK(good.is_eitff);
  CHECK(std::abs(*good.alpha - 1.0 / std::sqrt(3.0)) < 1e-9);
  CHECK(*good.tight_constant == doctest::Approx(2.0));
  CHECK(std::abs(good.coherence - *good.welch) < 1e-9);

  FrameCertificate ei = certify(construct_ei3(5, 2, 0.5));
  CHECK(ei.is_ei);
  CHECK_FALSE(ei.is_tight);
  CHECK_FALSE(ei.is_eitff);

  FrameCertificate rnd = certify(random_subspaces(Field::Real, 8, 2, 4, 99));
  CHECK_FALSE(rnd.is_ei);
}

TEST_CASE("naimark complement of the repeated-copy frame") {
  SubspaceSequence comp = naimark_complement(trivial_eitff(Field::Real, 2, 3));
  CHECK(comp.d() == 4);
  CHECK(comp.r() == 2);
  CHECK(comp.n() == 3);
  FrameCertificate cert = certify(comp);
  CHECK(cert.is_eitff);
  CHECK(std::abs(*cert.alpha - 0.5) < 1e-9);
}

TEST_CASE("naimark complement at the self-complementary parameters") {
  SubspaceSequence comp = naimark_complement(eitff_r424());
  CHECK(comp.d() == 4);
  FrameCertificate cert = certify(comp);
  CHECK(cert.is_eitff);
  CHECK(std::abs(*cert.alpha - 1.0 / std::sqrt(3.0)) < 1e-9);
}

TEST_CASE("naimark complement errors") {
  SubspaceSequence basisv = orthogonal_coordinate_subspaces(Field::Real, 1, 3);
  try {
    (void)naimark_complement(basisv);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoComplement);
  }
  try {
    (void)naimark_complement(construct_ei3(5, 2, 0.5));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotTight);
  }
}

TEST_CASE("naimark complement gram relation") {
  SubspaceSequence s = complex_simplex_eitff(2);  // six subspaces in C^4
  SubspaceSequence comp = naimark_complement(s);
  const long long rn = static_cast<long long>(s.r()) * s.n();
  Mat expected = (Mat::identity(s.field(), rn) -
                  fusion_gram(s).as_matrix().scaled(static_cast<double>(s.d()) / rn))
                     .scaled(static_cast<double>(rn) / (rn - s.d()));
  Mat actual = fusion_gram(comp).as_matrix();
  CHECK((actual - expected).max_abs() <= 1e-8);
}

TEST_CASE("double complement matches blockwise singular values") {
  SubspaceSequence s = eitff_r424();
  SubspaceSequence twice = naimark_complement(naimark_complement(s));
  FusionGram ga = fusion_gram(s), gb = fusion_gram(twice);
  for (int i = 0; i < s.n(); ++i)
    for (int j = 0; j < s.n(); ++j) {
      Eigen::VectorXd sa = singular_values(ga.blocks[i][j]);
      Eigen::VectorXd sb = singular_values(gb.blocks[i][j]);
      for (Eigen::Index k = 0; k < sa.size(); ++k) CHECK(std::abs(sa(k) - sb(k)) <= 1e-8);
    }
}

TEST_CASE("complex-to-real doubling") {
  SubspaceSequence c = eitff_c214();
  SubspaceSequence r = hoggar_c_to_r(c);
  CHECK(r.field() == Field::Real);
  CHECK(r.d() == 4);
  CHECK(r.r() == 2);
  CHECK(r.n() == 4);
  FrameCertificate cert = certify(r);
  CHECK(cert.is_eitff);
  CHECK(std::abs(*cert.alpha - 1.0 / std::sqrt(3.0)) < 1e-9);

  CHECK_THROWS_AS((void)hoggar_c_to_r(eitff_r424()), Error);
}

TEST_CASE("doubling a complex sequence with real entries keeps the certificate") {
  SubspaceSequence realentries = trivial_eitff(Field::Complex, 2, 3);
  SubspaceSequence doubled = hoggar_c_to_r(realentries);
  FrameCertificate before = certify(realentries), after = certify(doubled);
  CHECK(before.is_ei == after.is_ei);
  CHECK(before.is_tight == after.is_tight);
  CHECK(before.is_eitff == after.is_eitff);
  CHECK(std::abs(*before.alpha - *after.alpha) < 1e-12);
}

TEST_CASE("doubling commutes with the fusion gram") {
  SubspaceSequence c = complex_simplex_eitff(2);
  FusionGram gc = fusion_gram(c);
  FusionGram gr = fusion_gram(hoggar_c_to_r(c));
  for (int i = 0; i < c.n(); ++i)
    for (int j = 0; j < c.n(); ++j)
      CHECK((realify(gc.blocks[i][j]) - gr.blocks[i][j]).max_abs() <= 1e-15);
}

TEST_CASE("direct sums") {
  SubspaceSequence s = eitff_r424();
  SubspaceSequence sum = direct_sum(s, s);
  CHECK(sum.d() == 8);
  CHECK(sum.r() == 4);
  CHECK(sum.n() == 4);
  FrameCertificate cert = certify(sum);
  CHECK(cert.is_eitff);
  CHECK(std::abs(*cert.alpha - 1.0 / std::sqrt(3.0)) < 1e-9);

  SubspaceSequence c213 = eitff_from_simplex(simplex_from_basis(build_rho_complex(1), 2));
  SubspaceSequence csum = direct_sum(c213, c213);
  FrameCertificate ccert = certify(csum);
  CHECK(csum.d() == 4);
  CHECK(csum.r() == 2);
  CHECK(ccert.is_eitff);
  CHECK(std::abs(*ccert.alpha - 0.5) < 1e-9);

  try {
    (void)direct_sum(s, naimark_complement(trivial_eitff(Field::Real, 1, 4)));  // ratio 3 vs 2
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RatioMismatch);
  }
  try {
    (void)direct_sum(s, random_subspaces(Field::Real, 4, 2, 4, 8));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotEITFF);
  }
}

TEST_CASE("trivial seeds") {
  SubspaceSequence t = trivial_eitff(Field::Real, 2, 3);
  CHECK((frame_operator(t) - Mat::identity(Field::Real, 2).scaled(3.0)).max_abs() == 0.0);
  CHECK(*is_equi_isoclinic(t) == doctest::Approx(1.0));

  SubspaceSequence comp = naimark_complement(trivial_eitff(Field::Complex, 1, 5));
  CHECK(comp.d() == 4);
  CHECK(comp.r() == 1);
  CHECK(comp.n() == 5);
  FrameCertificate cert = certify(comp);
  CHECK(cert.is_eitff);
  CHECK(std::abs(*cert.alpha - 0.25) < 1e-9);
}

TEST_CASE("tight certificates match the welch bound") {
  for (const SubspaceSequence& s : {eitff_r424(), complex_simplex_eitff(3),
                                    naimark_complement(trivial_eitff(Field::Real, 2, 3))}) {
    FrameCertificate cert = certify(s);
    REQUIRE(cert.is_eitff);
    CHECK(std::abs(block_coherence(s) - *cert.welch) <= 1e-9);
  }
}
