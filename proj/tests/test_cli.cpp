#include "doctest.h"

#include <json.hpp>

#include <filesystem>
#include <sstream>

#include "klcx/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = klcx::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("klcx_test_" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("documented invocations") {
  const auto poly = run({"klpoly", "--type", "A", "--rank", "1", "--affine", "--y", "s1", "--x", "s1 s0 s1"});
  CHECK(poly.code == 0);
  CHECK(poly.out == "1\n");

  const auto verify = run({"verify-a1", "--xmax", "15", "--nmax", "30"});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("disagreements: 0") != std::string::npos);

  const auto roots = run({"roots", "--type", "A", "--rank", "1"});
  CHECK(roots.code == 0);
  CHECK(roots.out == "root,height,rho_coroot,squared_length\n1,1,1,2\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"roots", "--type", "E", "--rank", "9"}).code == 2);
  CHECK(run({"roots", "--type", "A", "--rank", "2", "--format", "xml"}).code == 2);
  CHECK(run({"klpoly", "--type", "A", "--rank", "1", "--affine", "--x", "s1"}).code == 2);
  CHECK(run({"klpoly", "--type", "A", "--rank", "1", "--affine", "--x", "s1 s0", "--y", "s1", "--L", "1"}).code == 3);
  CHECK(run({"sum-nu", "--type", "A", "--rank", "1", "--affine", "--x", "s1 s0 s1", "--n", "2", "--L", "4"}).code == 3);
  CHECK(run({"elements", "--type", "A", "--rank", "3", "--affine", "--L", "12", "--max-elements", "100"}).code == 4);
  CHECK(run({"weights", "--type", "E", "--rank", "8", "--m", "10"}).code == 4);
  CHECK(run({"ext", "--type", "A", "--rank", "1", "--affine", "--x", "s0", "--y", "s1", "--L", "3"}).code == 2);
  const auto bad = run({"ext", "--type", "A", "--rank", "1", "--affine", "--x", "s0", "--y", "s1", "--L", "3"});
  CHECK_FALSE(bad.err.empty());
  CHECK(bad.out.empty());
}

TEST_CASE("statistics carry truncation metadata") {
  const auto s = run({"sum-nu", "--type", "A", "--rank", "1", "--affine", "--x", "s1", "--n", "2", "--L", "5"});
  CHECK(s.code == 0);
  CHECK(s.out == "n,value,L,stabilized\n2,1,5,true\n");

  const auto cn = run({"cn", "--type", "A", "--rank", "2", "--affine", "--L", "8", "--N", "2"});
  CHECK(cn.code == 0);
  CHECK(cn.out.rfind("n,value,L,stabilized\n0,1,8,", 0) == 0);

  const auto mu = run({"musums", "--type", "A", "--rank", "1", "--affine", "--L", "6"});
  CHECK(mu.code == 0);
  CHECK(mu.out.find("R,2,6,true") != std::string::npos);
  CHECK(mu.out.find("Rprime,1,6,true") != std::string::npos);
}

TEST_CASE("ext rows and tables") {
  const auto e = run({"ext", "--type", "A", "--rank", "1", "--affine", "--x", "s1", "--y", "s1 s0 s1", "--n", "2"});
  CHECK(e.code == 0);
  CHECK(e.out == "x_word,y_word,n,dim\ns1,s1 s0 s1,2,1\n");
  const auto t = run({"ext-table", "--type", "A", "--rank", "1", "--affine", "--L", "3", "--N", "2"});
  CHECK(t.code == 0);
  CHECK(t.out.find("s1,s1,0,1") != std::string::npos);
  CHECK(t.out.find("s1 s0,s1 s0,2,1") != std::string::npos);
}

TEST_CASE("json output parses") {
  const auto r = run({"roots", "--type", "B", "--rank", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coxeter_number"] == 4);
  CHECK(j["rows"].size() == 4);

  const auto w = run({"lemma34", "--type", "A", "--rank", "3", "--n", "1", "--format", "json"});
  REQUIRE(w.code == 0);
  const auto lj = nlohmann::json::parse(w.out);
  CHECK(lj["count"] == 2);
  CHECK(lj["bound"] == 2);
  CHECK(lj["distinct_ok"] == true);

  const auto g = run({"growth", "--type", "A", "--rank", "1", "--affine", "--L", "30", "--N", "12", "--format", "json"});
  REQUIRE(g.code == 0);
  CHECK(nlohmann::json::parse(g.out)["rows"].size() == 28);
}

TEST_CASE("weights subcommand") {
  const auto one = run({"weights", "--type", "B", "--rank", "2", "--m", "4", "--sigma", "4 4"});
  CHECK(one.code == 0);
  CHECK(one.out == "m,sigma,count\n4,4 4,3\n");
  const auto mx = run({"weights", "--type", "A", "--rank", "1", "--m", "5", "--max"});
  CHECK(mx.out == "m,sigma,count\n5,5,1\n");
  CHECK(run({"weights", "--type", "B", "--rank", "2", "--m", "4", "--sigma", "4"}).code == 2);
}

TEST_CASE("exceptional subcommand") {
  const auto r = run({"exceptional", "--type", "B", "--rank", "2", "--l", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "type,l,exceptional,phi0_size\nB2,3,false,2\n");
  CHECK(run({"exceptional", "--type", "B", "--rank", "2"}).code == 2);
}

TEST_CASE("thread count does not change output") {
  const std::vector<std::string> base = {"kltable", "--type", "B", "--rank", "2", "--affine", "--L", "7"};
  auto with_threads = base;
  with_threads.insert(with_threads.end(), {"--threads", "4"});
  const auto a = run(base), b = run(with_threads);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cache replay is byte-identical") {
  const auto path = temp_path("b2.cache");
  const std::vector<std::string> query = {"growth", "--type", "B", "--rank", "2", "--affine", "--L", "8", "--N", "3"};
  const auto plain = run(query);
  REQUIRE(plain.code == 0);

  auto cached = query;
  cached.insert(cached.end(), {"--cache", path.string()});
  const auto first = run(cached);
  CHECK(std::filesystem::exists(path));
  const auto second = run(cached);
  CHECK(first.out == plain.out);
  CHECK(second.out == plain.out);

  // A cache written at one length serves a longer query.
  const auto kl_path = temp_path("a2.cache");
  CHECK(run({"kltable", "--type", "A", "--rank", "2", "--affine", "--L", "5", "--cache", kl_path.string()}).code == 0);
  const auto longer = run({"kltable", "--type", "A", "--rank", "2", "--affine", "--L", "7", "--cache", kl_path.string()});
  CHECK(longer.out == run({"kltable", "--type", "A", "--rank", "2", "--affine", "--L", "7"}).out);
  std::filesystem::remove(path);
  std::filesystem::remove(kl_path);
}
