#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "xline/seidel.hpp"

// XLINE_BIN is the compiled command-line binary, injected by the build.

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  std::string out_path = "cli_stdout_" + std::to_string(counter) + ".txt";
  std::string err_path = "cli_stderr_" + std::to_string(counter) + ".txt";
  ++counter;
  std::string cmd = args + " > " + out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::string bin() { return std::string("\"") + XLINE_BIN + "\""; }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::vector<xline::SignedPerm> lifted_sl(long p, int k, int d) {
  auto F = xline::FieldCtx::make(p, k);
  xline::ProjBasis basis(F, d);
  std::vector<xline::SignedPerm> gens;
  for (const auto& M : xline::group_generators(xline::Family::SL, F, d).generators)
    gens.push_back(xline::lift(basis, M));
  return gens;
}

// Writes the order-n invariant matrix of SL(2,q) to path.
void write_matrix_file(const std::string& path, long p, int k) {
  auto gens = lifted_sl(p, k, 2);
  auto res = xline::synthesize(gens, gens.front().n(), 1);
  REQUIRE(res.matrix.has_value());
  std::ofstream out(path);
  xline::write_seidel(out, *res.matrix);
}

}  // namespace

TEST_CASE("classify command: splitting case with JSON report") {
  RunResult r = run(bin() + " classify --family sl --d 2 --q 5 --json cli_report.json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "group SL(2,5)  n=6"));
  CHECK(contains(r.out, "orbits on signed pairs: 4"));
  CHECK(contains(r.out, "sign matrix: exists"));
  CHECK(contains(r.out, "eigenvalues: sqrt(5) (x3), -sqrt(5) (x3)"));
  CHECK(contains(r.out, "equiangular family: 6 lines in R^3, cosine (1/5)*sqrt(5)"));
  CHECK(contains(r.out, "verdict: SPLITS_REAL(3,3)"));
  CHECK(contains(r.out, "consistent with family prediction: yes"));

  auto j = nlohmann::json::parse(slurp("cli_report.json"));
  CHECK(j["schema"] == 1);
  CHECK(j["group"] == "SL(2,5)");
  CHECK(j["n"] == 6);
  CHECK(j["two_transitive"] == true);
  CHECK(j["orbits_yxy"] == 4);
  CHECK(j["orbits_nabla"] == 2);
  CHECK(j["transitive_on_y"] == true);
  CHECK(j["seidel_exists"] == true);
  CHECK(j["certificate"].is_null());
  CHECK(j["beta"] == 0);
  CHECK(j["alpha"] == 5);
  CHECK(j["lambda"][0]["a_num"] == 0);
  CHECK(j["lambda"][0]["b_num"] == 1);
  CHECK(j["lambda"][0]["b_den"] == 1);
  CHECK(j["lambda"][0]["D"] == 5);
  CHECK(j["lambda"][1]["b_num"] == -1);
  CHECK(j["multiplicities"][0] == 3);
  CHECK(j["multiplicities"][1] == 3);
  CHECK(j["equiangular"]["lines"] == 6);
  CHECK(j["equiangular"]["dim"] == 3);
  CHECK(j["cosine"]["b_num"] == 1);
  CHECK(j["cosine"]["b_den"] == 5);
  CHECK(j["cosine"]["D"] == 5);
  CHECK(j["verdict"] == "SPLITS_REAL");
  CHECK(j["predictions"]["verdict"] == "SPLITS_REAL");
  CHECK(j["predictions"]["q_mod4"] == 1);
  CHECK(j["predictions"]["in_glplus"] == true);
  CHECK(j["projector_swap"] == true);
  CHECK(j["consistent"] == true);
  std::remove("cli_report.json");
}

TEST_CASE("classify command: nonexistence cases") {
  RunResult r7 = run(bin() + " classify --family sl --d 2 --q 7 --json cli_r7.json");
  CHECK(r7.code == 0);
  CHECK(contains(r7.out, "sign matrix: absent"));
  CHECK(contains(r7.out, "contradiction at ("));
  CHECK(contains(r7.out, "verdict: SPLITS_COMPLEX_ONLY"));
  auto j7 = nlohmann::json::parse(slurp("cli_r7.json"));
  CHECK_FALSE(j7["certificate"].is_null());
  CHECK(j7["certificate"]["existing"] == -j7["certificate"]["proposed"].get<int>());
  CHECK(j7["lambda"].is_null());
  CHECK(j7["equiangular"].is_null());
  std::remove("cli_r7.json");

  RunResult r33 = run(bin() + " classify --family sl --d 3 --q 3");
  CHECK(r33.code == 0);
  CHECK(contains(r33.out, "group SL(3,3)  n=13"));
  CHECK(contains(r33.out, "orbits on signed pairs: 3"));
  CHECK(contains(r33.out, "verdict: IRREDUCIBLE"));
}

TEST_CASE("size bound: flag overrides environment overrides default") {
  RunResult blocked = run("XLINE_MAX_N=4 " + bin() + " classify --family sl --d 2 --q 5");
  CHECK(blocked.code == 3);
  CHECK(contains(blocked.err, "exceeds the size bound"));

  RunResult unblocked = run("XLINE_MAX_N=4 " + bin() + " classify --family sl --d 2 --q 5 --max-n 600");
  CHECK(unblocked.code == 0);

  RunResult bad_env = run("XLINE_MAX_N=zebra " + bin() + " classify --family sl --d 2 --q 5");
  CHECK(bad_env.code == 1);
}

TEST_CASE("seidel command writes a matrix file or a refusal certificate") {
  RunResult ok = run(bin() + " seidel --family sl --d 2 --q 5 --out cli_s5.txt");
  CHECK(ok.code == 0);
  {
    std::ifstream in("cli_s5.txt");
    xline::SeidelMatrix E = xline::read_seidel(in);
    CHECK(E.n == 6);
    CHECK(E.at(0, 1) == 1);
  }
  std::remove("cli_s5.txt");

  RunResult neg = run(bin() + " seidel --family sl --d 2 --q 5 --seed-sign -1 --out cli_s5n.txt");
  CHECK(neg.code == 0);
  {
    std::ifstream in("cli_s5n.txt");
    xline::SeidelMatrix E = xline::read_seidel(in);
    CHECK(E.at(0, 1) == -1);
  }
  std::remove("cli_s5n.txt");

  RunResult refuse = run(bin() + " seidel --family sl --d 2 --q 7 --out cli_s7.txt");
  CHECK(refuse.code == 4);
  CHECK(contains(refuse.err, "no invariant sign matrix for SL(2,7)"));
  CHECK(contains(refuse.err, "forced to"));

  RunResult bad_seed = run(bin() + " seidel --family sl --d 2 --q 5 --seed-sign 2");
  CHECK(bad_seed.code == 1);
}

TEST_CASE("spectrum command reads a matrix file") {
  write_matrix_file("cli_spec_in.txt", 5, 1);
  RunResult r = run(bin() + " spectrum --in cli_spec_in.txt");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "n=6 beta=0 alpha=5"));
  CHECK(contains(r.out, "eigenvalues: sqrt(5) (x3), -sqrt(5) (x3)"));
  CHECK(contains(r.out, "equiangular: 6 lines in R^3, cosine (1/5)*sqrt(5)"));
  std::remove("cli_spec_in.txt");

  // a matrix with more than two eigenvalues: path adjacency in sign form
  std::ofstream out("cli_path4.txt");
  out << "4\n0+--\n+0+-\n-+0+\n--+0\n";
  out.close();
  RunResult multi = run(bin() + " spectrum --in cli_path4.txt");
  CHECK(multi.code == 4);
  CHECK(contains(multi.err, "more than two eigenvalues"));
  std::remove("cli_path4.txt");

  RunResult missing = run(bin() + " spectrum --in cli_no_such_file.txt");
  CHECK(missing.code == 1);
}

TEST_CASE("orbits command prints the counts") {
  RunResult r = run(bin() + " orbits --family gl --d 2 --q 5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "group GL(2,5)  n=6"));
  CHECK(contains(r.out, "orbits on ordered line pairs: 1"));
  CHECK(contains(r.out, "orbits on signed pairs: 3"));
  CHECK(contains(r.out, "distinct-line orbit classes: 1"));
  CHECK(contains(r.out, "transitive on signed symbols: yes"));
}

TEST_CASE("oracle command compares the two orbit counters") {
  RunResult r = run(bin() + " oracle --family sl --d 2 --q 5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "burnside=4 unionfind=4 AGREE"));

  RunResult ext = run(bin() + " oracle --family sl --d 2 --q 9");
  CHECK(ext.code == 0);
  CHECK(contains(ext.out, "burnside=4 unionfind=4 AGREE"));

  RunResult big = run(bin() + " oracle --family sl --d 3 --q 9");
  CHECK(big.code == 3);
  CHECK(contains(big.err, "lifted group image has order 42456960"));

  RunResult capped = run(bin() + " oracle --family sl --d 2 --q 5 --max-group-order 59");
  CHECK(capped.code == 3);
  CHECK(contains(capped.err, "order 60, above the bound 59"));
}

TEST_CASE("paley command builds and matches conference matrices") {
  RunResult build13 = run(bin() + " paley --q 13 --out cli_c13.txt");
  CHECK(build13.code == 0);
  {
    std::ifstream in("cli_c13.txt");
    xline::SeidelMatrix C = xline::read_seidel(in);
    CHECK(C.n == 14);
  }
  std::remove("cli_c13.txt");

  write_matrix_file("cli_s13.txt", 13, 1);
  RunResult match = run(bin() + " paley --q 13 --match cli_s13.txt");
  CHECK(match.code == 0);
  CHECK(contains(match.out, "match: true"));
  std::remove("cli_s13.txt");

  RunResult wrong = run(bin() + " paley --q 7 --out cli_c7.txt");
  CHECK(wrong.code == 1);
  CHECK(contains(wrong.err, "q = 1 mod 4"));
}

TEST_CASE("gram command shifts the spectrum") {
  write_matrix_file("cli_gram_in.txt", 5, 1);
  RunResult r = run(bin() + " gram --in cli_gram_in.txt --omega 1 --c 1/5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "minimal polynomial: x^2 = (2)x + (-4/5)"));
  CHECK(contains(r.out, "eigenvalues: 1 + (1/5)*sqrt(5) (x3), 1 - (1/5)*sqrt(5) (x3)"));

  RunResult scalar = run(bin() + " gram --in cli_gram_in.txt --omega 3 --c 0");
  CHECK(scalar.code == 4);
  CHECK(contains(scalar.err, "more than two eigenvalues"));

  RunResult bad = run(bin() + " gram --in cli_gram_in.txt --omega x");
  CHECK(bad.code == 1);
  std::remove("cli_gram_in.txt");
}

TEST_CASE("generator files drive the generic pipeline") {
  {
    std::ofstream out("cli_gens.txt");
    xline::write_generators(out, lifted_sl(5, 1, 2));
  }
  RunResult r = run(bin() + " classify --gens cli_gens.txt");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "group cli_gens.txt  n=6"));
  CHECK(contains(r.out, "verdict: SPLITS_REAL(3,3)"));
  // no family given, so no prediction line
  CHECK_FALSE(contains(r.out, "consistent with family prediction"));
  std::remove("cli_gens.txt");

  RunResult missing = run(bin() + " classify --gens cli_no_gens.txt");
  CHECK(missing.code == 1);
}

TEST_CASE("usage errors and help") {
  CHECK(run(bin()).code == 1);                                        // no subcommand
  CHECK(run(bin() + " classify --family zz --d 2 --q 5").code == 1);  // unknown family
  CHECK(run(bin() + " classify --family sl --d 1 --q 5").code == 1);  // d out of range
  CHECK(run(bin() + " classify --family sl --d 2 --q 6").code == 1);  // not a prime power
  CHECK(run(bin() + " classify --family sl --d 2 --q 4").code == 1);  // even characteristic
  CHECK(run(bin() + " spectrum").code == 1);                          // missing required --in
  CHECK(run(bin() + " --help").code == 0);
  RunResult h = run(bin() + " classify --help");
  CHECK(h.code == 0);
  CHECK(contains(h.out, "--family"));
}

TEST_CASE("explicit modulus flag reaches the field construction") {
  RunResult ok = run(bin() + " classify --family sl --d 2 --q 9 --modulus 1,0");
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "group SL(2,9)"));

  RunResult bad = run(bin() + " classify --family sl --d 2 --q 9 --modulus 2,0");
  CHECK(bad.code == 1);
  CHECK(contains(bad.err, "error:"));
}