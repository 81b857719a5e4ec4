#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "overchev/cli.hpp"

using namespace overchev;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(std::vector<std::string>(args), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("subcommand coverage audit") {
  std::set<std::string> have;
  for (const auto& s : cli::subcommands()) have.insert(s);
  for (const char* required : {"table1", "table2", "centre", "height", "over-restricted",
                               "group", "phi", "verify", "overenv-dim", "alcove",
                               "thresholds"})
    CHECK(have.count(required) == 1);
  std::set<std::string> suites;
  for (const auto& s : cli::verify_suites()) suites.insert(s);
  for (const char* required : {"abs-chev", "abs-n-chev", "hopf", "jacobi"})
    CHECK(suites.count(required) == 1);
}

TEST_CASE("deterministic bytes for a fixed request") {
  auto a = run({"table2", "--format", "csv"});
  auto b = run({"table2", "--format", "csv"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);

  auto c = run({"group", "--rep", "natural", "--p", "3", "--format", "json"});
  auto d = run({"group", "--rep", "natural", "--p", "3", "--format", "json"});
  CHECK(c.status == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("csv row counts") {
  auto t1 = run({"table1", "--format", "csv"});
  std::size_t lines = std::count(t1.out.begin(), t1.out.end(), '\n');
  CHECK(lines == 31 + 1);
  auto t2 = run({"table2", "--format", "csv"});
  CHECK(std::count(t2.out.begin(), t2.out.end(), '\n') == 31 + 1);
}

TEST_CASE("json round trips") {
  auto t2 = run({"table2", "--format", "json"});
  auto j = nlohmann::json::parse(t2.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["rows"].size() == 31);
  CHECK(j["rows"][30]["p0_n2"] == 1087);

  auto phi = run({"phi", "--m", "1", "--p", "5", "--format", "json"});
  auto pj = nlohmann::json::parse(phi.out);
  CHECK(pj["is_function"] == true);
  CHECK(pj["kernel_size"] == 2);
}

TEST_CASE("centre subcommand") {
  auto r = run({"centre", "A", "4", "5"});
  CHECK(r.status == 0);
  CHECK(r.out == "dim Z = 1 (dagger)\n");
  auto r2 = run({"centre", "G", "2", "3"});
  CHECK(r2.out == "dim Z = 0\n");
  // combined type labels are accepted too
  auto r3 = run({"centre", "A4", "0", "5"});
  CHECK(r3.out == "dim Z = 1 (dagger)\n");
  auto abs = run({"verify", "abs-chev", "--type", "A1", "--p", "5", "--m", "2"});
  CHECK(abs.status == 0);
}

TEST_CASE("verification subcommands pass on theorem cases") {
  auto abs = run({"verify", "abs-chev", "--p", "5", "--m", "2"});
  CHECK(abs.status == 0);
  CHECK(abs.out.find("PASS (all cone points x basis)") == 0);

  auto absn = run({"verify", "abs-n-chev", "--p", "2", "--n", "3", "--m", "3"});
  CHECK(absn.status == 0);
  CHECK(absn.out.find("PASS") == 0);

  auto hopf = run({"verify", "hopf", "--p", "3"});
  CHECK(hopf.status == 0);
  CHECK(hopf.out.find("PASS") == 0);

  auto jac = run({"verify", "jacobi", "--type", "G", "--rank", "2", "--p", "3"});
  CHECK(jac.status == 0);
  CHECK(jac.out.find("PASS") == 0);
}

TEST_CASE("exit codes") {
  // invalid input: unknown type
  auto bad = run({"centre", "Z", "4", "5"});
  CHECK(bad.status == 2);
  // invalid input: unknown subcommand
  auto nosub = run({"frobulate"});
  CHECK(nosub.status == 2);
  // verification hypothesis violated: not over-restricted
  auto hyp = run({"verify", "abs-chev", "--p", "5", "--m", "4"});
  CHECK(hyp.status == 2);
  // mathematical mismatch against the published table
  auto check = run({"table2", "--check"});
  CHECK(check.status == 1);
  CHECK(check.out.find("FAIL") != std::string::npos);
  // closed-form check passes
  auto check1 = run({"table1", "--check"});
  CHECK(check1.status == 0);
}

TEST_CASE("element cap override and file output") {
  setenv("OVERCHEV_ELEMENT_CAP", "10", 1);
  auto capped = run({"group", "--rep", "natural", "--p", "5"});
  unsetenv("OVERCHEV_ELEMENT_CAP");
  CHECK(capped.out.find("closed = no") != std::string::npos);

  std::string path = "/tmp/overchev_cli_out.txt";
  auto r = run({"centre", "A", "4", "5", "--out", path});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string contents((std::istreambuf_iterator<char>(f)), {});
  CHECK(contents == "dim Z = 1 (dagger)\n");
}

TEST_CASE("queries") {
  auto h = run({"height", "--m", "4", "--p", "5"});
  CHECK(h.out == "xi(V(4)) = 5\n");
  auto hu = run({"height", "--u0", "--p", "3", "--type", "A", "--rank", "1"});
  CHECK(hu.out.find("bound = 5, computed = 5") != std::string::npos);

  auto ov = run({"over-restricted", "--m", "2", "--p", "5"});
  CHECK(ov.out.find("over-restricted (exhaustive cone)") != std::string::npos);
  auto ovn = run({"over-restricted", "--m", "4", "--p", "2", "--n", "3"});
  CHECK(ovn.out.find("not n-over-restricted") != std::string::npos);

  auto th = run({"thresholds", "--type", "E", "--rank", "8", "--n", "2"});
  CHECK(th.out.find("1087") != std::string::npos);
  auto thp = run({"thresholds", "--type", "E", "--rank", "8", "--p", "2"});
  CHECK(thp.out.find("min n for p=2: 11") != std::string::npos);
  auto thx = run({"thresholds", "--type", "A", "--rank", "1", "--p", "5", "--xi", "1"});
  CHECK(thx.out.find("already integrable at n=0") != std::string::npos);

  auto al = run({"alcove", "--type", "G", "--rank", "2", "--p", "7", "--k", "3", "--k", "3"});
  CHECK(al.status == 0);
  CHECK(al.out.find("dominant alcoves strictly below") != std::string::npos);

  auto od = run({"overenv-dim", "--p", "3"});
  CHECK(od.out.find("dim U_over = 5") != std::string::npos);

  auto grp = run({"group", "--rep", "adjoint", "--p", "3"});
  CHECK(grp.out.find("order = 12") != std::string::npos);

  auto cand = run({"over-restricted", "--candidates", "--type", "A", "--rank", "2", "--p", "5"});
  CHECK(cand.status == 0);
  CHECK(cand.out.find("lambda = (2,2)") != std::string::npos);
}
