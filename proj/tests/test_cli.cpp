#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lcsext/cli/commands.hpp"

using lcsext::cli::Json;

namespace {

struct Run {
  int code;
  std::string out;
  Json body() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& input) {
  args.insert(args.begin(), "lcsext");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = lcsext::cli::main_entry(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str()};
}

Run run(std::vector<std::string> args, const Json& input) { return run(std::move(args), input.dump()); }

Json cyclic(std::initializer_list<int> orders) { return Json{{"cyclic_orders", orders}}; }

Json zero_data_json(int i, int h) {
  Json zero = Json::array();
  for (int a = 0; a < h; ++a) zero.push_back(std::vector<int>(h, 0));
  return Json{{"I", cyclic({i})}, {"H", cyclic({h})}, {"beta", zero}, {"f", zero}, {"diamond", "trivial"},
              {"yleft", "zero"}};
}

// a.b = (-1)^a b on Z/4
Json negating_z4() {
  return Json{{"group", cyclic({4})}, {"dot_table", {{0, 1, 2, 3}, {0, 3, 2, 1}, {0, 1, 2, 3}, {0, 3, 2, 1}}}};
}

}  // namespace

TEST_CASE("validate") {
  Run ok = run({"validate"}, Json{{"group", cyclic({4})}, {"dot_table", "trivial"}});
  CHECK(ok.code == 0);
  CHECK(ok.body()["valid"] == true);

  CHECK(run({"validate"}, negating_z4()).code == 0);

  Run broken = run({"validate"}, Json{{"group", cyclic({2})}, {"dot_table", {{0, 1}, {0, 0}}}});
  CHECK(broken.code == 1);
  CHECK(broken.body()["first"]["axiom"] == "bijective left translations");
  CHECK(broken.body()["first"]["witness"] == Json({1, 0, 1}));

  CHECK(run({"validate"}, std::string(R"({"group": {"cyclic_orders": [4]}, "dot_ta)")).code == 2);
  CHECK(run({"validate"}, Json{{"group", cyclic({2})}, {"dot_table", {{0, 1}}}}).code == 2);
  CHECK(run({"validate"}, Json{{"group", cyclic({2})}, {"dot_table", {{0, 1}, {0, 7}}}}).code == 2);
}

TEST_CASE("check") {
  Run zero = run({"check", "--mode", "general"}, zero_data_json(2, 3));
  CHECK(zero.code == 0);
  CHECK(zero.body()["pass"] == true);
  for (const Json& c : zero.body()["checks"]) CHECK(c["status"] == "pass");

  Json z4 = zero_data_json(2, 2);
  z4["beta"][1][1] = 1;
  CHECK(run({"check", "--mode", "central"}, z4).code == 0);
  CHECK(run({"check", "--mode", "socle"}, z4).code == 0);

  Json broken = zero_data_json(2, 2);
  broken["beta"][1][0] = 1;
  Run b = run({"check"}, broken);
  CHECK(b.code == 1);
  CHECK_FALSE(b.body()["construction"].empty());

  Json noncentral = zero_data_json(2, 2);
  noncentral["I"] = negating_z4();
  noncentral["f"][1][1] = 1;
  CHECK(run({"check", "--mode", "central"}, noncentral).code == 4);
  CHECK(run({"check", "--mode", "socle"}, noncentral).code == 4);
  CHECK(run({"check", "--mode", "sideways"}, zero_data_json(2, 2)).code == 2);
}

TEST_CASE("classify") {
  const Json z2z2{{"I", cyclic({2})}, {"H", cyclic({2})}, {"diamond", "trivial"}, {"yleft", "zero"}};
  Run r = run({"classify"}, z2z2);
  CHECK(r.code == 0);
  CHECK(r.body()["class_count"] == 4);
  CHECK(r.body()["h2_order"] == 4);
  CHECK(r.body()["agree"] == true);
  CHECK(r.body()["representatives"].size() == 4);

  Json zero = z2z2;
  zero["I"] = cyclic({1});
  Run z = run({"classify"}, zero);
  CHECK(z.code == 0);
  CHECK(z.body()["class_count"] == 1);

  Json big = z2z2;
  big["I"] = cyclic({5});
  big["H"] = cyclic({5});
  Run g = run({"classify"}, big);
  CHECK(g.code == 3);
  CHECK(g.body()["error"] == "guard");
  CHECK(g.body()["message"].get<std::string>().find("--max-order") != std::string::npos);

  Json nontrivial = z2z2;
  nontrivial["I"] = negating_z4();
  nontrivial["yleft"] = "zero";
  CHECK(run({"classify"}, nontrivial).code == 4);
}

TEST_CASE("cohomology") {
  const Json z2z2{{"I", cyclic({2})}, {"H", cyclic({2})}, {"diamond", "trivial"}, {"yleft", "zero"}};
  Run r = run({"cohomology", "--degree", "2"}, z2z2);
  CHECK(r.code == 0);
  CHECK(r.body()["invariant_factors"] == Json({2, 2}));
  CHECK(r.body()["order"] == 4);

  Json with_degree = z2z2;
  with_degree["degree"] = 2;
  CHECK(run({"cohomology"}, with_degree).body()["invariant_factors"] == Json({2, 2}));
  CHECK(run({"cohomology"}, z2z2).code == 2);

  Json zero = z2z2;
  zero["I"] = cyclic({1});
  Run z = run({"cohomology", "--degree", "2"}, zero);
  CHECK(z.code == 0);
  CHECK(z.body()["invariant_factors"] == Json::array());

  // y<|1 = y on Z/4 breaks y<|hh' = (y<|h)<|h'.
  Json mutated{{"I", cyclic({4})}, {"H", cyclic({2})}, {"diamond", "trivial"},
               {"yleft", {{0, 0}, {0, 1}, {0, 2}, {0, 3}}}};
  Run m = run({"cohomology", "--degree", "2"}, mutated);
  CHECK(m.code == 4);
  CHECK(m.body()["message"].get<std::string>().find("triangle_assoc") != std::string::npos);

  // y<|1 = 2y is admissible.
  mutated["yleft"] = Json{{0, 0}, {0, 2}, {0, 0}, {0, 2}};
  CHECK(run({"cohomology", "--degree", "2"}, mutated).code == 0);
  Run cc = run({"complex-check", "--maxdeg", "2"}, mutated);
  CHECK(cc.code == 0);
  CHECK(cc.body()["total_complex"]["violations"].empty());

  Json nonadditive = z2z2;
  nonadditive["I"] = cyclic({3});
  nonadditive["diamond"] = Json{{0, 1, 2}, {0, 2, 2}};
  CHECK(run({"complex-check"}, nonadditive).code == 4);
}

TEST_CASE("extract and equivalent") {
  Json input{{"B", Json{{"group", cyclic({4})}, {"dot_table", "trivial"}}}, {"ideal", {0, 2}}};
  Run e = run({"extract"}, input);
  REQUIRE(e.code == 0);
  Json data = e.body()["data"];
  CHECK(run({"check"}, data).code == 0);

  Json split = zero_data_json(2, 2);
  Run same = run({"equivalent"}, Json{{"E1", split}, {"E2", split}});
  CHECK(same.code == 0);
  CHECK(same.body()["phi"] == Json({0, 0}));

  Json twisted = split;
  twisted["beta"][1][1] = 1;
  Run diff = run({"equivalent"}, Json{{"E1", split}, {"E2", twisted}});
  CHECK(diff.code == 1);
  CHECK(diff.body()["equivalent"] == false);
  CHECK(diff.body()["phi"].is_null());

  Json nonext = split;
  nonext["diamond"] = Json{{0, 1}, {0, 0}};
  CHECK(run({"equivalent"}, Json{{"E1", split}, {"E2", nonext}}).code == 1);
}

TEST_CASE("flags and determinism") {
  const Json z2z2{{"I", cyclic({2})}, {"H", cyclic({2})}, {"diamond", "trivial"}, {"yleft", "zero"}};
  Run a = run({"--seed", "7", "classify"}, z2z2);
  Run b = run({"classify", "--seed", "7"}, z2z2);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"classify", "--max-order", "1"}, z2z2).code == 3);
  CHECK(run({"bogus"}, z2z2).code == 2);
  CHECK(run({}, z2z2).code == 2);
  CHECK(run({"--max-order", "0", "classify"}, z2z2).code == 2);

  Run text = run({"--output", "text", "cohomology", "--degree", "2"}, z2z2);
  CHECK(text.out.find("invariant_factors: [2,2]") != std::string::npos);
  CHECK(run({"--input", "/nonexistent/path.json", "validate"}, std::string()).code == 2);
}
