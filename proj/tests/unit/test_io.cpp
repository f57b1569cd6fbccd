#include <doctest.h>

#include <cmath>

#include "eipack/io.hpp"
#include "helpers.hpp"

using namespace eipack;
using namespace eipack::testing;

TEST_CASE("sequence json round trip is exact") {
  for (const SubspaceSequence& s : {complex_simplex_eitff(2), eitff_r424()}) {
    Json j = sequence_to_json(s);
    // through text, as a file would go
    Json reparsed = Json::parse(j.dump());
    SubspaceSequence back = sequence_from_json(reparsed);
    CHECK(back.field() == s.field());
    CHECK(back.d() == s.d());
    CHECK(back.r() == s.r());
    CHECK(back.n() == s.n());
    for (int k = 0; k < s.n(); ++k)
      CHECK((back.isometry(k) - s.isometry(k)).max_abs() == 0.0);
  }
}

TEST_CASE("sequence json validation") {
  Json j = sequence_to_json(eitff_r424());
  Json bad = j;
  bad["schema_version"] = 2;
  CHECK_THROWS_AS((void)sequence_from_json(bad), Error);

  bad = j;
  bad["field"] = "Q";
  CHECK_THROWS_AS((void)sequence_from_json(bad), Error);

  bad = j;
  bad["isometries"][0][0].erase(1);
  CHECK_THROWS_AS((void)sequence_from_json(bad), Error);

  bad = j;
  bad.erase("n");
  CHECK_THROWS_AS((void)sequence_from_json(bad), Error);

  // corrupt an entry so the columns stop being orthonormal
  bad = j;
  bad["isometries"][0][0][0] = 5.0;
  try {
    (void)sequence_from_json(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotIsometry);
  }
}

TEST_CASE("certificate json carries the tolerances") {
  FrameCertificate cert = certify(eitff_r424());
  Json j = certificate_to_json(cert);
  CHECK(j["tolerances"]["rank_rel"] == doctest::Approx(1e-8));
  CHECK(j["tolerances"]["residual_abs"] == doctest::Approx(1e-9));
  CHECK(j["is_eitff"] == true);
  CHECK(j["alpha"].get<double>() == doctest::Approx(1.0 / std::sqrt(3.0)));

  FrameCertificate vac = certify(random_subspaces(Field::Real, 5, 1, 2, 3));
  CHECK(certificate_to_json(vac)["welch"].is_null());
}

TEST_CASE("doubles format with a dot and round trip") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  const double x = 1.0 / std::sqrt(3.0);
  CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("table csv shape") {
  auto rows = nonexistence_table(11);
  std::string csv = table_to_csv(rows, false);
  CHECK(csv == "d,r,n,case\n8,3,5,IV\n11,4,5,IV\n11,4,6,IV\n");
  std::string doubled = table_to_csv(rows, true);
  CHECK(doubled == "d,r,n,case\n8,3,5,IV\n7,3,5,IV\n11,4,5,IV\n9,4,5,IV\n11,4,6,IV\n13,4,6,IV\n");
}

TEST_CASE("figure csv has empty cells where the bound is undefined") {
  std::string csv = figure1_to_csv(figure1_data(3, 4), 3);
  CHECK(csv.rfind("x,spark,welch_2,welch_3,marker\n", 0) == 0);
  CHECK(csv.find("4,0.25,,,") != std::string::npos);  // welch_2 and welch_3 vanish past x = n
}
