#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "rstar_cli/command.hpp"

using namespace rstar::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_args(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse examples") {
  const auto a = parse_command({"star-check", "Z/12"});
  CHECK(a.verb == Verb::StarCheck);
  CHECK(a.ring_spec == "Z/12");
  CHECK(a.format == Format::Text);

  const auto b = parse_command({"radical", "Z/12", "--ideal", "4"});
  CHECK(b.verb == Verb::Radical);
  REQUIRE(b.ideal.has_value());
  CHECK(*b.ideal == std::vector<unsigned>{4});

  const auto c = parse_command({"pid-star", "--domain", "Z", "--family", "all-primes"});
  CHECK(c.verb == Verb::PidStar);
  CHECK(c.domain == "Z");
  CHECK(c.family == "all-primes");

  const auto d = parse_command({"decompose", "Z/12", "--ideal", "4,6", "--format", "json"});
  CHECK(*d.ideal == std::vector<unsigned>{4, 6});
  CHECK(d.format == Format::Json);

  const auto e = parse_command({"suite", "--max-order", "16", "--jobs", "4", "--out", "r.json", "--star-cap", "12"});
  CHECK(e.verb == Verb::Suite);
  CHECK(e.max_order == 16);
  CHECK(e.jobs == 4);
  CHECK(e.star_cap == 12);
  CHECK(*e.out == "r.json");
}

TEST_CASE("usage errors name the offending token") {
  auto message = [](std::vector<std::string> args) {
    try {
      parse_command(args);
    } catch (const UsageError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message({"frobnicate", "Z/4"}).find("frobnicate") != std::string::npos);
  CHECK(message({"info", "Z/4", "--bogus"}).find("--bogus") != std::string::npos);
  CHECK(message({"info", "Z/4", "--format", "xml"}).find("xml") != std::string::npos);
  CHECK(message({"radical", "Z/4"}).find("--ideal") != std::string::npos);
  CHECK(message({"suite", "--jobs", "many"}).find("many") != std::string::npos);
  CHECK_FALSE(message({"info"}).empty());
}

TEST_CASE("exit codes") {
  CHECK(run_args({"info", "Z/12"}).code == kExitOk);
  CHECK(run_args({"info", "Q/12"}).code == kExitUsage);
  CHECK(run_args({"nonsense"}).code == kExitUsage);
  CHECK(run_args({}).code == kExitUsage);
  CHECK(run_args({"radical", "Z/12", "--ideal", "40"}).code == kExitUsage);
  CHECK(run_args({"localize", "Z/12", "--ideal", "6"}).code == kExitUsage);
  CHECK(run_args({"pid-star", "--domain", "Z", "--family", "finite:1000036000099"}).code == kExitResource);
  CHECK(run_args({"star-check", "Z/2 x Z/2 x Z/2 x Z/2 x Z/2", "--star-cap", "31"}).code == kExitUsage);
}

TEST_CASE("text outputs") {
  CHECK(run_args({"radical", "Z/12", "--ideal", "4"}).out == "rad (4) = (2) {0,2,4,6,8,10}\n");
  const auto d = run_args({"decompose", "Z/12"});
  CHECK(d.out.find("(0) = (4) cap (3)") != std::string::npos);
  const auto l = run_args({"localize", "Z/12", "--ideal", "2"});
  CHECK(l.out.find("order 4, 1 maximal ideal (local)") != std::string::npos);
  const auto c = run_args({"classify", "Z/4"});
  CHECK(c.out.find("not is_vnr: no y with x^2 y = x (2)") != std::string::npos);
  const auto s = run_args({"pid-star", "--domain", "Z", "--family", "all-primes"});
  CHECK(s.out.find("(2) (3) gives (6)") != std::string::npos);
}

TEST_CASE("json outputs") {
  using nlohmann::json;
  const auto info = json::parse(run_args({"info", "Z/12", "--format", "json"}).out);
  CHECK(info["fingerprint"]["units"] == 4);
  const auto cls = json::parse(run_args({"classify", "Z/6", "--format", "json"}).out);
  CHECK(cls["is_vnr"] == true);
  const auto star = json::parse(run_args({"star-check", "Z/12", "--format", "json"}).out);
  CHECK(star["star"]["satisfied"] == true);
  CHECK(star["star"]["method"] == "exhaustive");
  const auto a2 = json::parse(run_args({"pid-a2", "--domain", "Z", "--family", "prime-powers:2", "--format", "json"}).out);
  CHECK(a2["a2"]["holds"] == false);
  CHECK(a2["element"] == "2");
  const auto suite = json::parse(run_args({"suite", "--ring", "Z/5", "--format", "json"}).out);
  CHECK(suite["summary"]["exit_code"] == 0);
  CHECK(suite["corpus"]["rings"] == 1);
}

TEST_CASE("verb help") {
  const auto r = run_args({"pid-star", "--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("--family") != std::string::npos);
  CHECK(run_args({"suite", "-h"}).out.find("--max-order") != std::string::npos);
  CHECK(run_args({"bogus", "--help"}).code == kExitUsage);
}
