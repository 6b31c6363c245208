#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tdkit/json_io.hpp"

using namespace tdkit;

TEST_CASE("rational round trip")
{
    std::mt19937 rng(4);
    for (int t = 0; t < 50; ++t) {
        const Rat r = oracle::random_rat(rng, 1000);
        CHECK(rat_from_json(Json::parse(to_json(r).dump())) == r);
    }
    CHECK(to_json(Rat(-3, 6)) == Json("-1/2"));
    CHECK(rat_from_json(Json(7)) == Rat(7));
    CHECK(rat_from_json(Json(-7)) == Rat(-7));
    CHECK_THROWS_AS(rat_from_json(Json(1.5)), FormatError);
    CHECK_THROWS_AS(rat_from_json(Json("1/0")), FormatError);
    CHECK_THROWS_AS(rat_from_json(Json("x")), FormatError);
    CHECK_THROWS_AS(rat_from_json(Json::array()), FormatError);
}

TEST_CASE("matrix round trip")
{
    std::mt19937 rng(5);
    for (std::size_t n = 1; n <= 5; ++n) {
        const Mat m = oracle::random_mat(rng, n);
        CHECK(mat_from_json(Json::parse(to_json(m).dump())) == m);
    }
    const Mat rect = Mat::from_rows({{1, 2, 3}, {4, 5, 6}});
    CHECK(mat_from_json(to_json(rect)) == rect);
}

TEST_CASE("malformed matrices")
{
    CHECK_THROWS_AS(mat_from_json(Json::parse(R"({"rows": 2, "cols": 2})")), FormatError);
    CHECK_THROWS_AS(mat_from_json(Json::parse(R"({"rows": 0, "cols": 2, "entries": []})")), FormatError);
    CHECK_THROWS_AS(mat_from_json(Json::parse(R"({"rows": -1, "cols": 2, "entries": []})")), FormatError);
    CHECK_THROWS_AS(mat_from_json(Json::parse(R"({"rows": 2, "cols": 2, "entries": [["1","2"]]})")), FormatError);
    CHECK_THROWS_AS(mat_from_json(Json::parse(R"({"rows": 1, "cols": 2, "entries": [["1"]]})")), FormatError);
    CHECK_THROWS_AS(mat_from_json(Json::parse(R"({"rows": 1, "cols": 1, "entries": [[true]]})")), FormatError);
    CHECK_THROWS_AS(mat_from_json(Json::parse("[1, 2]")), FormatError);
}

TEST_CASE("parameter sequence round trip")
{
    const ParamSeq p{Rat(17, 4), Rat(-1, 3), Rat(2), Rat(0), Rat(-225, 16)};
    CHECK(params_from_json(Json::parse(to_json(p).dump())) == p);
    CHECK_THROWS_AS(params_from_json(Json::parse(R"({"beta": "2"})")), FormatError);
}

TEST_CASE("polynomial round trips")
{
    std::mt19937 rng(6);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rat> c;
        for (int i = 0; i <= t; ++i) c.push_back(oracle::random_rat(rng));
        const XPoly f(c);
        CHECK(xpoly_from_json(Json::parse(to_json(f).dump())) == f);
        LaurentPoly g;
        for (long e = -t; e <= t; ++e) g.add_term(e, oracle::random_rat(rng));
        CHECK(laurent_from_json(Json::parse(to_json(g).dump())) == g);
    }
    CHECK(xpoly_from_json(to_json(XPoly())) == XPoly());
    CHECK_THROWS_AS(xpoly_from_json(Json::parse(R"({"coeffs": "1"})")), FormatError);
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"terms": {"1x": "2"}})")), FormatError);
    CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"terms": []})")), FormatError);
}

TEST_CASE("report serialization")
{
    const GeneratedPair g = paper_4x4();
    const Json j = to_json(g);
    CHECK(j["label"].is_string());
    CHECK(mat_from_json(j["A"]) == g.a);
    CHECK(mat_from_json(j["Astar"]) == g.a_star);
    CHECK(mat_from_json(j["P"]) == *g.witness);
    CHECK(params_from_json(j["expected_params"]) == *g.expected_params);

    const Json r = to_json(verify_td_pair(g.a, g.a_star));
    CHECK(r["is_leonard_pair"] == true);
    CHECK(r["diameter"] == 3);
    CHECK(r["params"]["kind"] == "unique");
    CHECK(params_from_json(r["params"]["particular"]) == *g.expected_params);
    CHECK(r["eigenvalue_sequence"].size() == 4);
    CHECK(r["shape"] == Json::array({1, 1, 1, 1}));
    CHECK(r["word_span_dim"] == 16);

    const Json fit = to_json(fit_closed_form(EigSeq({Rat(3), Rat(1), Rat(-1), Rat(-3)})));
    CHECK(fit["status"] == "fitted");
    CHECK(fit["closed_form"]["case"].is_string());
}
