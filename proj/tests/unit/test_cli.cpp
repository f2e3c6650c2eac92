#include <doctest.h>

#include <json.hpp>

#include "bmw/cli.hpp"

using bmw::cli::run;

TEST_CASE("dim and connectors") {
  const char* want[] = {"1", "3", "15", "105", "945"};
  for (int n = 1; n <= 5; ++n) {
    auto o = run({"dim", std::to_string(n)});
    CHECK(o.exit_code == 0);
    CHECK(o.out == std::string(want[n - 1]) + "\n");
  }
  CHECK(run({"dim", "-n", "4"}).out == "105\n");
  CHECK(run({"connectors", "2"}).out == "[(t1 t2)(b1 b2)]\n[(t1 b1)(t2 b2)]\n[(t1 b2)(t2 b1)]\n");
  auto j = nlohmann::json::parse(run({"dim", "3", "--format", "json"}).out);
  CHECK(j["dim"] == "15");
}

TEST_CASE("normalize, mul and kauffman") {
  CHECK(run({"normalize", "-n", "2", "g1 e1"}).out == "l * [(t1 t2)(b1 b2)]\n");
  CHECK(run({"normalize", "-n", "3", "g1 e2 g1^-1"}).exit_code == 0);
  CHECK(run({"mul", "-n", "2", "[(t1 t2)(b1 b2)]", "e1"}).out == "d * [(t1 t2)(b1 b2)]\n");
  CHECK(run({"mul", "-n", "2", "-z * [(t1 t2)(b1 b2)]", "e1"}).out == "(-l^-1 + l - z) * [(t1 t2)(b1 b2)]\n");
  CHECK(run({"kauffman", "-n", "1", ""}).out == "d\n");
  CHECK(run({"kauffman", "-n", "2", "g1 g1"}).out == "l^-2 - 2 + l^2 + l^-1*z - l*z + d^2\n");
  CHECK(run({"kauffman", "-n", "1", "", "--unknot-one"}).out == "1\n");
  CHECK(run({"kauffman", "-n", "0", "", "--unknot-one"}).exit_code == 2);
  auto j = nlohmann::json::parse(run({"normalize", "-n", "2", "g1^-1", "--format", "json"}).out);
  CHECK(j.is_array());
  CHECK(j.size() == 3);
}

TEST_CASE("errors and exit codes") {
  auto bad = run({"normalize", "-n", "2", "g5"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err == "error: index 5 out of range for n=2 (at offset 0)\n");
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"dim"}).exit_code == 2);
  CHECK(run({"dim", "x"}).exit_code == 2);
  CHECK(run({"mul", "-n", "2", "g1"}).exit_code == 2);
  CHECK(run({"gram", "4"}).exit_code == 2);
  CHECK(run({"normalize", "-n", "2", "g1", "--bogus"}).exit_code == 2);
  CHECK(run({"spanning", "3", "2"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("verification commands") {
  auto v = run({"verify", "3"});
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "3", "--seed", "5"}).out == run({"verify", "3", "--seed", "5"}).out);
  auto s = run({"spanning", "4", "2"});
  CHECK(s.exit_code == 0);
  CHECK(s.out == "n=4 r=2 count=72 expected=72 distinct=true ranks_ok=true\n");
  auto g = nlohmann::json::parse(run({"gram", "2", "--format", "json"}).out);
  CHECK(g["certificate"]["delta_n2_coeff"] == "-3");
  CHECK(g["certificate"]["pattern_ok"] == true);
}

TEST_CASE("json output is key-sorted") {
  auto j = run({"spanning", "3", "1", "--format", "json"}).out;
  auto parsed = nlohmann::json::parse(j);
  CHECK(parsed.dump(2) + "\n" == j);
}
