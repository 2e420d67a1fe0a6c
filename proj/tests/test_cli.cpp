#include "etakit/cli.hpp"
#include "support.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <sstream>

using etakit::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), {"--corpus", ETAKIT_CORPUS});
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json call_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  return nlohmann::json::parse(call(args).out);
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("eta from a family") {
  const auto r = call({"eta", "--family", "n=1", "inv=tau"});
  CHECK(r.code == 0);
  CHECK(r.out.find("eta: [0, -1, 0, 1]\n") != std::string::npos);
  // the odd tau eta' deviates from the printed one in the discarded entries
  CHECK(r.out.find("note:") != std::string::npos);
  const auto even = call({"eta", "--family", "n=2", "inv=tau"});
  CHECK(even.out.find("note:") == std::string::npos);
}

TEST_CASE("eta from a file") {
  const auto r = call({"eta", "--file", corpus_path("K1_tau.lvq")});
  CHECK(r.code == 0);
  CHECK(r.out.find("eta: [0, -1, 0, 1]") != std::string::npos);
  CHECK(r.out.find("vanishes_at_1=true") != std::string::npos);
  // names are also looked up in the corpus directory
  CHECK(call({"eta", "--file", "K1_tau.lvq"}).code == 0);
}

TEST_CASE("eta table") {
  const auto r = call({"eta", "--table", "--max-n", "3"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 7);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) CHECK(line.substr(line.rfind('\t') + 1) == "true");
  const auto j = call_json({"eta", "--table", "--max-n", "3"});
  CHECK(j["report"]["result"]["rows"].size() == 6);
}

TEST_CASE("verify oracle") {
  const auto r = call({"verify", "oracle", "--file", "K2_sigma.lvq", "--depth", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: match") != std::string::npos);
  const auto j = call_json({"verify", "oracle", "--file", "K2_sigma.lvq"});
  CHECK(j["report"]["result"]["verdict"] == "match");
  CHECK(j["report"]["result"]["depth"] == 6);
  const auto small = call({"verify", "oracle", "--file", "K2_sigma.lvq", "--depth", "2"});
  CHECK(small.code == 2);
  CHECK(small.err.find("depth") != std::string::npos);
}

TEST_CASE("verify pi1") {
  const auto r = call({"verify", "pi1", "--family", "m=1", "n=1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("H1: trivial; trivial: certified\n", 0) == 0);
  const auto ico = call({"verify", "pi1", "--file", "binary_icosahedral.pres"});
  CHECK(ico.code == 1);
  CHECK(ico.out.rfind("H1: trivial; trivial: inconclusive\n", 0) == 0);
  CHECK(call({"verify", "pi1", "--family", "m=4", "n=1"}).code == 2);
  CHECK(call({"verify", "pi1", "--file", "W11.pres"}).code == 0);
}

TEST_CASE("lk") {
  const auto r = call({"lk", "--file", "hopf.diag"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lk(A, B) = 1") != std::string::npos);
  const auto j = call_json({"lk", "--file", "K1_tau_quotient.diag", "--components", "O", "L"});
  CHECK(j["report"]["result"]["linking_numbers"][0]["lk"] == 0);
}

TEST_CASE("errors exit with 2") {
  CHECK(call({"eta", "--file", "no_such_file.lvq"}).code == 2);
  CHECK(call({"eta"}).code == 2);
  CHECK(call({"eta", "--family", "n=0", "inv=tau"}).code == 2);
  CHECK(call({"eta", "--family", "n=1", "inv=rho"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("json reports") {
  const auto j = call_json({"eta", "--file", "K2_sigma.lvq"});
  const auto& rep = j["report"];
  CHECK(rep["ok"] == true);
  CHECK(rep["result"]["n"].is_null());
  CHECK(rep["result"]["eta_bracket"] == nlohmann::json::parse("[-6, 1, 4, -1, -1]"));
  CHECK(rep["inputs"][0]["sha256"].get<std::string>().size() == 64);
  CHECK(j.contains("timing"));
  // identical inputs give identical reports outside the timing section
  CHECK(call_json({"eta", "--file", "K2_sigma.lvq"})["report"] == rep);
}

TEST_CASE("text and json carry the same data") {
  const auto text = call({"eta", "--family", "n=3", "inv=sigma"}).out;
  const auto j = call_json({"eta", "--family", "n=3", "inv=sigma"})["report"]["result"];
  std::string bracket;
  for (const auto& x : j["eta_bracket"]) bracket += (bracket.empty() ? "" : ", ") + x.dump();
  CHECK(text.find("eta: [" + bracket + "]") != std::string::npos);
  CHECK(text.find(j["eta_text"].get<std::string>()) != std::string::npos);

  const auto pt = call({"verify", "pi1", "--family", "m=2", "n=3"}).out;
  const auto pj = call_json({"verify", "pi1", "--family", "m=2", "n=3"})["report"]["result"];
  CHECK(pt.find("moves: " + std::to_string(pj["moves"].get<int>())) != std::string::npos);
  CHECK(pt.find(pj["terminal"].get<std::string>()) != std::string::npos);
}
