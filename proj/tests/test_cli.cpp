#include "doctest.h"

#include "cli.hpp"

#include <stdexcept>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace orbital::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<OutputRecord> json_rows(const std::string& text) {
  std::vector<OutputRecord> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) rows.push_back(record_from_json(nlohmann::json::parse(line)));
  return rows;
}

std::vector<std::string> values(const std::vector<OutputRecord>& rows) {
  std::vector<std::string> v;
  for (const auto& r : rows) v.push_back(r.value);
  return v;
}

}  // namespace

TEST_CASE("count") {
  auto r = run_cli({"count", "--dim", "1", "--q", "2", "--n", "2", "--json"});
  CHECK(r.code == 0);
  auto rows = json_rows(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].value == "2");
  CHECK_FALSE(rows[0].match.has_value());

  r = run_cli({"count", "--dim", "2", "--q", "3", "--n", "7", "--json", "--breakdown"});
  rows = json_rows(r.out);
  CHECK(rows[0].value == "1508");
  REQUIRE(rows[0].terms.has_value());
  CHECK(rows[0].terms->size() == 8);
  CHECK(rows[0].terms->at(1) == std::pair<std::string, std::string>{"B", "19/2"});

  r = run_cli({"count", "--dim", "1", "--q", "6", "--n", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("q is not a prime power") != std::string::npos);

  r = run_cli({"count", "--dim", "3", "--q", "2", "--n", "1"});
  CHECK(r.code == 2);

  r = run_cli({"count", "--dim", "1", "--q", "2", "--n", "2"});
  CHECK(r.out == "dim  q  n  multiset  value\n1    2  2  no        2\n");
}

TEST_CASE("series") {
  auto r = run_cli({"series", "--stratum", "proj1", "--q", "2", "--terms", "4", "--json"});
  CHECK(r.code == 0);
  CHECK(values(json_rows(r.out)) == std::vector<std::string>{"1", "3", "4", "6", "12"});

  r = run_cli({"series", "--stratum", "affine1", "--q", "3", "--terms", "3", "--json"});
  CHECK(values(json_rows(r.out)) == std::vector<std::string>{"1", "3", "6", "18"});

  r = run_cli({"series", "--stratum", "proj1", "--q", "2", "--terms", "2", "--multiset", "--json"});
  CHECK(values(json_rows(r.out)) == std::vector<std::string>{"1", "3", "7"});

  r = run_cli({"series", "--stratum", "nope", "--q", "2", "--terms", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("proj2_minus_deg3_orbit") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = run_cli({"verify", "--dim", "1", "--q", "3", "--max-n", "6", "--json"});
  CHECK(r.code == 0);
  auto rows = json_rows(r.out);
  REQUIRE(rows.size() == 7);
  for (const auto& row : rows) {
    REQUIRE(row.match.has_value());
    CHECK(*row.match);
    CHECK(row.oracle == row.value);
  }

  r = run_cli({"verify", "--dim", "2", "--q", "2", "--max-n", "4", "--tdos", "--json"});
  CHECK(r.code == 0);
  rows = json_rows(r.out);
  std::vector<std::string> tdos;
  for (const auto& row : rows)
    if (row.kind == "tdos") {
      CHECK(row.oracle == row.value);
      CHECK(row.elements == 168U);
      tdos.push_back(row.value);
    }
  CHECK(tdos == std::vector<std::string>{"7", "21", "73"});

  r = run_cli({"verify", "--dim", "1", "--q", "2", "--max-n", "2", "--pdotze", "--multiset", "--json"});
  CHECK(r.code == 0);
  rows = json_rows(r.out);
  CHECK(rows.back().kind == "pdotze");
  CHECK(rows.back().value == "4");
  CHECK(rows.back().oracle == "4");

  r = run_cli({"verify", "--dim", "1", "--q", "97", "--max-n", "3", "--json"});
  CHECK(r.code == 3);
  rows = json_rows(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(values(rows) == std::vector<std::string>{"1", "1", "2", "3"});
  for (const auto& row : rows) {
    CHECK_FALSE(row.match.has_value());
    CHECK(row.error->find("budget") != std::string::npos);
  }
}

TEST_CASE("oracle dump") {
  const std::string path = "cli_oracle_dump.jsonl";
  auto r = run_cli({"oracle", "--dim", "1", "--q", "3", "--n", "3", "--dump", path, "--json"});
  CHECK(r.code == 0);
  const auto rows = json_rows(r.out);
  CHECK(rows[0].oracle == "3");
  CHECK(rows[0].match == true);
  std::ifstream f(path);
  std::size_t lines = 0;
  for (std::string line; std::getline(f, line);) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["sets"].size() == 4);
    ++lines;
  }
  CHECK(lines == 24);
  std::remove(path.c_str());
}

TEST_CASE("csv") {
  const auto r = run_cli({"verify", "--dim", "1", "--q", "2", "--max-n", "1", "--csv"});
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "dim,q,n,multiset,value,oracle,match,millis");
  CHECK(row.rfind("1,2,0,false,1,1,true,", 0) == 0);
  CHECK(run_cli({"count", "--dim", "1", "--q", "2", "--n", "1", "--csv", "--json"}).code == 2);
}

TEST_CASE("json round trip") {
  OutputRecord a;
  a.kind = "count";
  a.dim = 2;
  a.q = 9;
  a.n = 11;
  a.multiset = true;
  a.value = "123456789012345678901234567890";
  a.terms = std::vector<std::pair<std::string, std::string>>{{"A", "1/3"}, {"B", "-7/2"}};
  a.oracle = "123456789012345678901234567890";
  a.match = true;
  a.elements = 5616;
  a.millis = 1.25;
  CHECK(record_from_json(nlohmann::json::parse(to_json(a).dump())) == a);

  OutputRecord b;
  b.kind = "series";
  b.stratum = "proj2";
  b.value = "0";
  b.error = "x";
  CHECK(record_from_json(nlohmann::json::parse(to_json(b).dump())) == b);
}
