#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = braidcount::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json json_of(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("normalize") {
  auto r = run({"normalize", "s1 s2 s1", "--format", "plain"});
  CHECK(r.code == 0);
  CHECK(r.out == "power_of_delta ell=1\ncoset a\n");

  r = run({"normalize", "s1^2", "--format", "plain"});
  CHECK(r.out.starts_with("j=1 k=2 b1=ε ell=0\n"));

  r = run({"--format", "plain", "normalize", "s1 s2"});
  CHECK(r.out.starts_with("j=2 k=-1 b1=ε ell=1\n"));

  const auto j = json_of(run({"normalize", "s1^3 s2^2"}));
  CHECK(j["tag"] == "general");
  CHECK(j["j"] == 1);
  CHECK(j["k"] == 3);
  CHECK(j["b1"] == "a2");
  CHECK(j["ell"] == 0);
  CHECK(json_of(run({"normalize", "D"}))["tag"] == "power_of_delta");
}

TEST_CASE("parse errors exit 2 with a position") {
  auto r = run({"normalize", "s1 x2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position 3") != std::string::npos);
  CHECK(r.out.empty());
  r = run({"syllables", "--word", "a1 a3"});
  CHECK(r.code == 2);
  r = run({"report", "lambda", "--Y", "600*log(8"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position") != std::string::npos);
}

TEST_CASE("bad flags and parameters exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "tuples"}).code == 2);
  CHECK(run({"count", "tuples", "--X", "12a"}).code == 2);
  CHECK(run({"count", "tuples", "--X", "9", "--Y", "2"}).code == 2);
  CHECK(run({"count", "tuples", "--X", "99999999999999999999"}).code == 2);
  CHECK(run({"count", "words", "--X", "9", "--workers", "0"}).code == 2);
  CHECK(run({"count", "classes", "--pairs", "0"}).code == 2);
  CHECK(run({"normalize", "s1", "--format", "xml"}).code == 2);
  CHECK(run({"report", "lambda", "--Y", "1"}).code == 2);
  CHECK(run({"verify", "--suite", "nothing"}).code == 2);
  CHECK(run({"verify", "--max-len", "15"}).code == 2);
  CHECK(run({"theta", "--braid", "D^3"}).code == 2);
  CHECK(run({"bounds"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("syllables and theta") {
  const auto j = json_of(run({"syllables", "--word", "a1^2 a2 a1 a2^-3"}));
  REQUIRE(j.size() == 3);
  CHECK(j[1]["kind"] == "second");
  CHECK(j[1]["degree"] == 2);
  CHECK(j[1]["start"] == "a2");
  CHECK(j[1]["expansion"] == "a2 a1");
  CHECK(j[2]["sign"] == -1);

  const auto t = json_of(run({"theta", "--braid", "s1^3 s2^2"}));
  CHECK(t["theta"] == "a1 a2");
}

TEST_CASE("bounds") {
  auto j = json_of(run({"bounds", "--word", "a1 a2"}));
  CHECK(j[0]["quantity"] == "lambda_tr");
  CHECK(j[0]["exact_zero"] == false);
  CHECK(j[0]["lower_log_arg"] == "6");
  CHECK(j[0]["upper_log_arg"] == "8");
  CHECK(j[1]["lower_value"].is_null());

  j = json_of(run({"bounds", "--braid", "s1^7 D^3"}));
  CHECK(j[0]["exact_zero"] == true);
  CHECK(j[0]["upper_value"] == "0");

  j = json_of(run({"bounds", "--word", "a1^4"}));
  CHECK(j[0]["exact_zero"] == true);
  CHECK(j[1]["note"].get<std::string>().starts_with("omitted:"));

  j = json_of(run({"bounds", "--word", "a1 a2^2 a1 a2"}));
  CHECK(j[1]["note"] == "omitted: word is not cyclically syllable reduced");

  j = json_of(run({"bounds", "--word", "a1^2 A2^2"}));
  CHECK(j[1]["quantity"] == "entropy");
  CHECK(j[1]["lower_log_arg"] == "36");
  CHECK(j[1]["upper_value"] == "1959.82748128");

  j = json_of(run({"bounds", "--braid", "s1^4 S2^4"}));
  CHECK(j[1]["lower_log_arg"] == "36");
}

TEST_CASE("count rows") {
  auto j = json_of(run({"count", "tuples", "--X", "9"}));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["exact"] == "4");
  CHECK(j[0]["bound"] == "6.24025146916");
  CHECK(j[0]["satisfied"] == true);

  j = json_of(run({"count", "tuples", "--X", "8", "--j", "2"}));
  CHECK(j[0]["exact"] == "0");
  CHECK(j[0]["bound"].is_null());
  CHECK(j[0]["satisfied"] == true);

  j = json_of(run({"count", "words", "--X", "3"}));
  CHECK(j[0]["exact"] == "4");
  CHECK(j[0]["bound"] == "13.5");
  CHECK(j[0]["satisfied"] == true);
  CHECK(j[1]["bound"] == "8");

  j = json_of(run({"count", "words", "--Y", "log(3)"}));
  CHECK(j[0]["X"] == "3");

  j = json_of(run({"count", "words", "--X", "81", "--max-len", "2"}));
  CHECK(j[0]["exact"] == "16");

  j = json_of(run({"count", "classes", "--pairs", "2"}));
  CHECK(j[0]["exact"] == "6");
  CHECK(j[0]["bound"] == "4");
  CHECK(j[0]["satisfied"] == true);
}

TEST_CASE("csv columns are the json keys") {
  const auto j = json_of(run({"count", "words", "--X", "27"}));
  const auto csv = run({"count", "words", "--X", "27", "--format", "csv"}).out;
  std::string header;
  for (const auto& [k, v] : j[0].items()) header += (header.empty() ? "" : ",") + k;
  CHECK(csv.starts_with(header + "\n"));
  CHECK(csv == "function,j,X,exact,bound,satisfied\nwords,,27,124,9841.5,true\nwords_chain,,27,124,1920,true\n");
}

TEST_CASE("report") {
  auto j = json_of(run({"report", "lambda", "--Y", "600*log(8)"}));
  CHECK(j["index"] == 2);
  CHECK(j["family_size"] == "4");
  CHECK(j["class_count"].is_null());
  CHECK(j["target_bound"] == "2");
  CHECK(j["satisfied"] == true);
  j = json_of(run({"report", "entropy", "--Y", "600*pi*log(8)"}));
  CHECK(j["family_size"] == "16");
  CHECK(j["class_count"] == "6");
  CHECK(j["satisfied"] == true);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "braid", "--format", "plain"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"verify", "--suite", "classes", "--pairs", "3", "--conj-len", "4"});
  CHECK(r.code == 0);
  r = run({"verify", "--suite", "counting", "--max-x", "300", "--max-len", "8"});
  CHECK(r.code == 0);
  const auto j = json_of(r);
  for (const auto& row : j) CHECK(row["passed"] == true);
}

TEST_CASE("output is deterministic") {
  const auto a = run({"count", "words", "--X", "59049", "--workers", "1"});
  const auto b = run({"count", "words", "--X", "59049", "--workers", "8"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"bounds", "--word", "a1^3 A2 a1"}).out == run({"bounds", "--word", "a1^3 A2 a1"}).out);
}
