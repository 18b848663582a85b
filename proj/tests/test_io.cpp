#include <doctest.h>

#include <random>

#include "balfair/errors.hpp"
#include "balfair/generate.hpp"
#include "balfair/io.hpp"
#include "balfair/solve.hpp"
#include "fixtures.hpp"

using namespace balfair;
using fixtures::alloc;

TEST_CASE("rationals on the wire") {
  CHECK(rational_to_json(Rational(6, 4)) == Json("3/2"));
  CHECK(rational_to_json(Rational(5)) == Json("5"));
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK(rational_from_json(Json("10/4")) == Rational(5, 2));
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), InvalidArgument);
  CHECK_THROWS_AS(rational_from_json(Json("x")), InvalidArgument);
}

TEST_CASE("instance files") {
  const auto j = Json::parse(R"({"n": 2, "m": 4, "valuations": [[10, "10", "42/2", 22], [0, 1, 6, "8/1"]]})");
  CHECK(instance_from_json(j) == fixtures::running_example());
  CHECK(instance_to_json(fixtures::running_example()).dump() ==
        R"({"n":2,"m":4,"valuations":[["10","10","21","22"],["0","1","6","8"]]})");
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"n": 2, "m": 3, "valuations": [[1,2,3],[1,2,3]]})")),
                  InvalidArgument);
  CHECK_NOTHROW(instance_from_json(Json::parse(R"({"n": 2, "m": 3, "valuations": [[1,2,3],[1,2,3]]})"), true));
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"n": 2, "m": 2, "valuations": [[1,2]]})")), InvalidArgument);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"n": 1, "m": 2, "valuations": [[1,"-2"]]})")), InvalidArgument);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"m": 2})")), InvalidArgument);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InvalidArgument);
}

TEST_CASE("allocations and prices") {
  const auto a = alloc({{1, 3}, {2, 4}});
  CHECK(allocation_to_json(a).dump() == "[[1,3],[2,4]]");
  CHECK(allocation_from_json(allocation_to_json(a)) == a);
  CHECK(allocation_from_json(Json::parse(R"({"allocation": [[3,1],[4,2]]})")) == a);
  CHECK_THROWS_AS(allocation_from_json(Json::parse("[[0,1]]")), InvalidArgument);
  CHECK_THROWS_AS(allocation_from_json(Json::parse("[1,2]")), InvalidArgument);
  const Vector p = fixtures::vec({0, Rational(3, 2)});
  CHECK(prices_from_json(Json::parse(R"(["0", "3/2"])")) == p);
  CHECK(prices_from_json(Json::parse(R"({"prices": [0, "3/2"]})")) == p);
  CHECK(prices_from_json(Json::parse(R"({"certificate": {"p": [0, "3/2"]}})")) == p);
  CHECK_THROWS_AS(prices_from_json(Json::parse("{}")), InvalidArgument);
}

TEST_CASE("result round trip") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const auto cls = static_cast<GenClass>(trial % 3);
    const auto inst = generate_instance(cls, {0, 2 + trial % 2, 6, 9, true}, rng);
    CHECK(instance_from_json(Json::parse(instance_to_json(inst).dump())) == inst);
    const auto solved = solve_instance(inst);
    const ResultFile r{solved.allocation, solved.certificate, recheck(inst, solved.allocation, solved.certificate)};
    const auto back = result_from_json(Json::parse(result_to_json(r).dump()));
    CHECK(back.allocation == r.allocation);
    CHECK(back.certificate == r.certificate);
    CHECK(back.checks.ef1 == r.checks.ef1);
    CHECK(back.checks.fpo == r.checks.fpo);
    CHECK(back.checks.balanced == r.checks.balanced);
  }
}

TEST_CASE("report serialization") {
  const auto report = full_report(fixtures::running_example());
  const auto csv = report_to_csv(report);
  CHECK(csv.rfind("index,allocation,v_1,v_2,ef1,po,fpo,nash,utilitarian\n", 0) == 0);
  CHECK(csv.find("2,\"[[1,3],[2,4]]\",31,9,1,1,1,279,40\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  const auto j = report_to_json(report);
  CHECK(j["count"] == 6);
  CHECK(j["records"][1]["values"] == Json::parse(R"(["31","9"])"));
}

TEST_CASE("reduction map") {
  const auto reduced = reduce_unconstrained(fixtures::from_rows({{1, 2, 3}, {3, 2, 1}}));
  CHECK(reduce_map_to_json(reduced).dump() == R"({"original_m":3,"dummies":[4,5,6]})");
}

TEST_CASE("generators") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto bi = generate_instance(GenClass::Bivalued, {seed, 3, 6, 9, true});
    CHECK(bivalued_params(bi).has_value());
    const auto tt = generate_instance(GenClass::TwoTypes, {seed, 3, 6, 9, true});
    const auto cls = classify(tt);
    CHECK((std::holds_alternative<TwoTypeClass>(cls) || std::holds_alternative<BivaluedClass>(cls)));
    CHECK(generate_instance(GenClass::General, {seed, 2, 4, 5, true}) ==
          generate_instance(GenClass::General, {seed, 2, 4, 5, true}));
    const auto v = generate_instance(GenClass::General, {seed, 2, 4, 5, true}).values();
    CHECK(v.maxCoeff() <= 5);
    CHECK(v.minCoeff() >= 0);
  }
  CHECK_THROWS_AS(generate_instance(GenClass::General, {1, 2, 3, 5, true}), InvalidArgument);
  CHECK_NOTHROW(generate_instance(GenClass::General, {1, 2, 3, 5, false}));
  CHECK_THROWS_AS(generate_instance(GenClass::General, {1, 2, 4, 0, true}), InvalidArgument);
}
