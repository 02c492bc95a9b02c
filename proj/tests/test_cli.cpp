// End-to-end checks of the command-line surface: exit codes, JSON schema,
// report stability and round-tripping.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string &args)
{
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
    out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string &name)
{
  return std::string(DATA_DIR) + "/" + name;
}

json read_json(const std::string &path)
{
  std::ifstream in(path);
  REQUIRE(in.good());
  return json::parse(in);
}

std::string tmp_json(const std::string &tag)
{
  return std::string("/tmp/wreath_cli_test_") + tag + ".json";
}

} // namespace

TEST_CASE("verify-counterexample certificates and exit codes")
{
  auto path = tmp_json("vc");
  auto r = run("verify-counterexample --m 2 --ring Zm --json " + path);
  CHECK(r.exit_code == 0);
  auto rep = read_json(path);
  CHECK(rep["left_inverse"] == true);
  CHECK(rep["right_inverse"] == false);
  CHECK(rep["kernel_witness_nontrivial"] == true);
  CHECK(rep["kernel_witness_maps_to_identity"] == true);
  CHECK(rep["beta_alpha_support"] == 3);
  CHECK(rep["theta"]["homomorphism_failures"] == 0);
  CHECK(rep["verdicts"]["g_not_hopfian"]["value"] == true);
  CHECK(rep["verdicts"]["g_not_hopfian"]["licensed_by"].is_array());

  CHECK(rep["theta"]["generator_identities"] == true);

  CHECK(run("verify-counterexample --m 1").exit_code == 2);
  CHECK(run("verify-counterexample").exit_code == 2);
  CHECK(run("verify-counterexample --m 3 --ring Q").exit_code == 0);
  CHECK(run("verify-counterexample --m 2 --ring F7").exit_code == 2);
}

TEST_CASE("bs word evaluation")
{
  auto path = tmp_json("bs");
  auto r = run("bs eval --m 2 --word \"t^-1 h t\" --json " + path);
  CHECK(r.exit_code == 0);
  auto rep = read_json(path);
  CHECK(rep["normal_form"]["a"] == "3");
  CHECK(rep["normal_form"]["n"] == 0);
  CHECK(rep["in_H"] == true);

  auto r2 = run("bs eval --m 2 --word \"h^{1/3}\" --json " + path);
  CHECK(r2.exit_code == 0);
  auto rep2 = read_json(path);
  CHECK(rep2["coset"]["residue"] == "1/3");
  CHECK(rep2["in_H"] == false);

  CHECK(run("bs eval --m 2 --word \"h^{1/2}\"").exit_code == 2);
  CHECK(run("bs eval --m 1 --word h").exit_code == 2);
}

TEST_CASE("finite analyze on the bundled S3 action")
{
  auto path = tmp_json("analyze");
  auto r = run("finite analyze --group " + data("s3_natural.grp") +
               " --coeff 3 --json " + path);
  CHECK(r.exit_code == 0);
  auto rep = read_json(path);
  CHECK(rep["end_dim_p3"] == 2);
  CHECK(rep["h1_size"] == 1);
  CHECK(rep["aut_formula"] == 324);
  CHECK(rep["aut_brute"] == 324);
  CHECK(rep["out_formula"] == 6);
  CHECK(rep["out_brute"] == 6);
  CHECK(rep["out_consistent"] == true);
  CHECK(rep["verdict"] == "hopfian");
  CHECK(rep["probes_clean"] == true);
  CHECK(rep["conditions"]["stabilizer_permutation"] == true);
  CHECK(rep["lundstrom"]["holds"] == true);
}

TEST_CASE("finite analyze input errors")
{
  std::string empty = "/tmp/wreath_cli_empty.grp";
  std::ofstream(empty) << "n 3\n";
  CHECK(run("finite analyze --group " + empty + " --coeff 3").exit_code == 2);
  CHECK(run("finite analyze --group /nonexistent.grp --coeff 3").exit_code == 2);
  CHECK(run("finite analyze --group " + data("s3_natural.grp") + " --coeff x")
            .exit_code == 2);
  CHECK(run("finite analyze --group " + data("s3_natural.grp")).exit_code == 2);
}

TEST_CASE("bound exceeded keeps formula results and exits 3")
{
  auto path = tmp_json("bound");
  auto r = run("finite analyze --group " + data("c3_regular.grp") +
               " --coeff 2 --max-aut-order 20 --json " + path);
  CHECK(r.exit_code == 3);
  auto rep = read_json(path);
  CHECK(rep["aut_formula"] == 24);
  CHECK(rep["aut_brute"].is_null());
  CHECK(rep["out_formula"] == 2);
}

TEST_CASE("finite h1 and endring")
{
  auto path = tmp_json("h1");
  auto r = run("finite h1 --group " + data("c2_trivial.grp") + " --coeff 2 --json " +
               path);
  CHECK(r.exit_code == 0);
  auto rep = read_json(path);
  CHECK(rep["h1_size"] == 2); // Hom(C2, F2)

  auto path2 = tmp_json("endring");
  auto r2 = run("finite endring --group " + data("s3_natural.grp") +
                " --coeff 3 --json " + path2);
  CHECK(r2.exit_code == 0);
  auto rep2 = read_json(path2);
  CHECK(rep2["end_dim"] == 2);
  CHECK(rep2["burnside"] == 2);
  CHECK(rep2["probes_clean"] == true);

  // endring without coefficients probes over Q
  auto path3 = tmp_json("endring_q");
  CHECK(run("finite endring --group " + data("c2_regular.grp") + " --json " +
            path3)
            .exit_code == 0);
  auto rep3 = read_json(path3);
  CHECK(rep3["probes"][0]["ring"] == "Q");

  // free coefficient summands surface as a rank
  auto path4 = tmp_json("h1_free");
  CHECK(run("finite h1 --group " + data("s3_natural.grp") + " --coeff 0,3 --json " +
            path4)
            .exit_code == 0);
  auto rep4 = read_json(path4);
  CHECK(rep4["h1_rank0"] == 0);
  CHECK(rep4["h1_size"] == 1);
}

TEST_CASE("reports are stable and round-trip")
{
  auto p1 = tmp_json("stable1"), p2 = tmp_json("stable2");
  auto cmd = "finite analyze --group " + data("s3_natural.grp") + " --coeff 3";
  CHECK(run(cmd + " --json " + p1).exit_code == 0);
  CHECK(run(cmd + " --json " + p2).exit_code == 0);
  auto a = read_json(p1), b = read_json(p2);
  a.erase("timing_ms");
  b.erase("timing_ms");
  CHECK(a.dump() == b.dump()); // byte-identical apart from timing

  // parse(emit(r)) = r: re-serialize and compare
  std::ifstream in(p1);
  std::stringstream ss;
  ss << in.rdbuf();
  auto parsed = json::parse(ss.str());
  CHECK(parsed.dump(2) + "\n" == ss.str());
}

TEST_CASE("seeded runs are reproducible")
{
  auto p1 = tmp_json("seed1"), p2 = tmp_json("seed2");
  CHECK(run("verify-counterexample --m 3 --seed 42 --json " + p1).exit_code == 0);
  CHECK(run("verify-counterexample --m 3 --seed 42 --json " + p2).exit_code == 0);
  auto a = read_json(p1), b = read_json(p2);
  a.erase("timing_ms");
  b.erase("timing_ms");
  CHECK(a == b);
}
