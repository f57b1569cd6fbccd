// Drives the command-line tool end to end; takes the binary path as argv[1].

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "eipack/io.hpp"
#include "eipack/rho.hpp"

namespace {

int g_failures = 0;
std::string g_cli;
std::string g_dir;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>&1";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

void check(const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++g_failures;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

eipack::Json certificate_of(const std::string& report_text) {
  return eipack::Json::parse(report_text)["certificate"];
}

void scenario_bounds() {
  RunResult res = run("bounds --d 8 --r 3 --n 5");
  check("bounds reports the exclusion case", res.exit_code == 0 &&
                                                 res.output.find("\"case\": \"IV\"") != std::string::npos &&
                                                 res.output.find("\"eitff_excluded\": true") != std::string::npos);

  RunResult k3 = run("bounds --d 4 --r 2 --n 4");
  check("bounds reports the refined counting bound",
        k3.exit_code == 0 && k3.output.find("\"k3\": 4") != std::string::npos);

  check("bounds rejects r > d with exit 2", run("bounds --d 2 --r 3 --n 2").exit_code == 2);
  check("bounds rejects missing flags with exit 2", run("bounds --d 2").exit_code == 2);
}

void scenario_table() {
  RunResult res = run("table --dmax 8");
  check("table at dmax=8 has exactly one row", res.exit_code == 0 &&
                                                   res.output == "d,r,n,case\n8,3,5,IV\n");
  RunResult naimark = run("table --dmax 8 --naimark");
  check("table emits complement rows",
        naimark.exit_code == 0 && naimark.output == "d,r,n,case\n8,3,5,IV\n7,3,5,IV\n");
}

void scenario_roundtrip() {
  const std::string file = g_dir + "/ei3.json";
  RunResult made = run("construct ei3 --d 5 --r 2 --alpha 0.5 --out " + file);
  check("construct writes a sequence file", made.exit_code == 0 && !read_file(file).empty());

  RunResult verified = run("verify " + file);
  check("verify accepts the constructed packing", verified.exit_code == 0);
  const bool same = certificate_of(made.output).dump() == certificate_of(verified.output).dump();
  check("verification reproduces the construction certificate byte-for-byte", same);
}

void scenario_exit_codes() {
  check("construct surfaces parameter errors with exit 1",
        run("construct ei3 --d 5 --r 2 --alpha 0.4").exit_code == 1);

  const std::string corrupted = g_dir + "/corrupted.json";
  {
    eipack::Json j = eipack::sequence_to_json(
        eipack::eitff_from_simplex(eipack::simplex_from_basis(eipack::build_rho_real(2), 3)));
    j["isometries"][0][0][0] = 5.0;  // no longer an isometry
    std::ofstream out(corrupted);
    out << j.dump();
  }
  RunResult bad = run("verify " + corrupted);
  check("verify rejects a non-isometry file with exit 2",
        bad.exit_code == 2 && bad.output.find("NotIsometry") != std::string::npos);

  const std::string garbage = g_dir + "/garbage.json";
  {
    std::ofstream out(garbage);
    out << "{ not json";
  }
  check("verify rejects malformed json with exit 2", run("verify " + garbage).exit_code == 2);

  const std::string random_file = g_dir + "/random.json";
  {
    std::mt19937_64 rng(7);
    std::vector<eipack::Mat> isometries;
    for (int j = 0; j < 3; ++j)
      isometries.push_back(eipack::random_unitary(eipack::Field::Real, 6, rng).block(0, 0, 6, 2));
    eipack::save_sequence(random_file,
                          eipack::SubspaceSequence(eipack::Field::Real, 6, 2, isometries));
  }
  RunResult rnd = run("verify " + random_file);
  check("verify fails a non-equi-isoclinic packing with exit 1",
        rnd.exit_code == 1 && rnd.output.find("NotEquiIsoclinic") != std::string::npos);
}

void scenario_corner() {
  const std::string file = g_dir + "/r424.json";
  run("construct eitff2r --r 2 --field R --out " + file);

  RunResult prefix = run("verify " + file + " --corner-max 4");
  const eipack::Json j = eipack::Json::parse(prefix.output);
  const bool dims_ok = j["corner"]["dims"] == eipack::Json::array({8, 6, 4, 4});
  check("verify computes the corner dimension prefix", prefix.exit_code == 0 && dims_ok);

  RunResult sub = run("corner " + file + " --J 1,2,3");
  const eipack::Json cj = eipack::Json::parse(sub.output);
  check("corner reports dim K_J for an explicit index set",
        sub.exit_code == 0 && cj["corner_J"]["dim"] == 4 && cj["corner_J"]["certified"] == true);

  check("corner rejects out-of-range indices", run("corner " + file + " --J 9").exit_code == 2);
}

void scenario_tolerance_override() {
  const std::string noisy = g_dir + "/noisy.json";
  {
    eipack::Json j = eipack::sequence_to_json(
        eipack::eitff_from_simplex(eipack::simplex_from_basis(eipack::build_rho_real(2), 3)));
    const double v = j["isometries"][0][0][0].get<double>();
    j["isometries"][0][0][0] = v + 1e-7;  // above the default ingest tolerance
    std::ofstream out(noisy);
    out << j.dump();
  }
  check("default tolerances reject mildly perturbed data", run("verify " + noisy).exit_code == 2);
  check("a loosened residual tolerance accepts it",
        run("--tol-res 1e-4 verify " + noisy).exit_code == 0);
}

void scenario_plotdata() {
  RunResult res = run("plotdata --nmax 8 --grid 50");
  check("plotdata emits the marked coincidence points",
        res.exit_code == 0 && res.output.find("2.5,0.5") != std::string::npos &&
            res.output.find(",open") != std::string::npos &&
            res.output.find(",x\n") != std::string::npos &&
            res.output.rfind("x,spark,welch_2,", 0) == 0);
}

void scenario_seed() {
  const std::string a = g_dir + "/seed_a.json";
  const std::string b = g_dir + "/seed_b.json";
  const std::string c = g_dir + "/seed_c.json";
  run("construct eitff2r --r 2 --field R --seed 7 --out " + a);
  run("construct eitff2r --r 2 --field R --seed 7 --out " + b);
  check("seeded constructions are byte-identical", read_file(a) == read_file(b) &&
                                                       !read_file(a).empty());

  const std::string env_cmd = "EIPACK_SEED=7 " + g_cli + " construct eitff2r --r 2 --field R --out " +
                              c + " >/dev/null 2>&1";
  if (std::system(env_cmd.c_str()) == 0)
    check("the seed environment variable matches the explicit flag", read_file(c) == read_file(a));
  else
    check("the seed environment variable matches the explicit flag", false, "command failed");

  const std::string unseeded = g_dir + "/seed_0.json";
  run("construct eitff2r --r 2 --field R --out " + unseeded);
  check("seeded orientation differs from the canonical one", read_file(unseeded) != read_file(a));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_integration <path-to-cli>\n");
    return 2;
  }
  g_cli = argv[1];
  char tmpl[] = "/tmp/eipack_cli_XXXXXX";
  if (!mkdtemp(tmpl)) {
    std::fprintf(stderr, "cannot create a scratch directory\n");
    return 2;
  }
  g_dir = tmpl;

  scenario_bounds();
  scenario_table();
  scenario_roundtrip();
  scenario_exit_codes();
  scenario_corner();
  scenario_tolerance_override();
  scenario_plotdata();
  scenario_seed();

  std::printf("%d scenario check(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
