#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "brzeta/brzeta.h"

namespace {

std::string take(char* s)
{
    std::string out = s == nullptr ? "" : s;
    brz_string_free(s);
    return out;
}

std::string series_text(brz_series* s)
{
    char* text = nullptr;
    REQUIRE(brz_series_text(s, &text) == BRZ_OK);
    brz_series_free(s);
    return take(text);
}

} // namespace

TEST_CASE("series engines through the C interface")
{
    brz_series* s = nullptr;
    REQUIRE(brz_hey(R"({"entries":[{"q":2,"r":1,"m":1}]})", 2, 0, &s) == BRZ_OK);
    CHECK(series_text(s) == "1 + z + z^2");

    REQUIRE(brz_hey(R"({"entries":[{"q":2,"r":1,"m":2}]})", 3, 1, &s) == BRZ_OK);
    CHECK(series_text(s) == "1 - 3*z + 2*z^2");

    REQUIRE(brz_hereditary(R"({"q":2,"n":2,"columns":[1,2]})", 3, BRZ_HEREDITARY_TWO_VARIABLE, "[1,1]", &s) == BRZ_OK);
    CHECK(series_text(s) == "1 + 5*z1*z2");

    REQUIRE(brz_lifted_hey(R"({"entries":[{"q":2,"m":1},{"q":2,"m":1}]})", "[2,1]", 2, &s) == BRZ_OK);
    CHECK(series_text(s) == "1 + z2 + z1 + z2^2 + 5*z1*z2 + z1^2");

    REQUIRE(brz_prolif(R"({"base":{"kind":"dvr","q":2,"m":2},"truncate":2})", -1, BRZ_PROLIF_SUM, &s, nullptr, nullptr)
            == BRZ_OK);
    CHECK(series_text(s) == "1 + 3*z + 19*z^2");

    REQUIRE(brz_oracle(R"({"kind":"local2d","q":2})", 3, nullptr, nullptr, 0, &s) == BRZ_OK);
    CHECK(series_text(s) == "1 + z + 3*z^2 + 7*z^3");

    REQUIRE(brz_oracle(R"({"kind":"local2d","q":2})", 3, nullptr, R"({"tops":[[1],[1]],"quotients":[[2]]})", 0, &s)
            == BRZ_OK);
    CHECK(series_text(s) == "z^2");
}

TEST_CASE("tables and output formats")
{
    brz_table* t = nullptr;
    REQUIRE(brz_lustig(2, 3, &t) == BRZ_OK);
    char* csv = nullptr;
    REQUIRE(brz_table_csv(t, &csv) == BRZ_OK);
    CHECK(take(csv) == "i,a_i\n0,1\n1,1\n2,3\n3,7\n");
    char* json = nullptr;
    REQUIRE(brz_table_json(t, &json) == BRZ_OK);
    const auto j = nlohmann::json::parse(take(json));
    CHECK(j["rows"][3][1] == "7");
    brz_table_free(t);

    REQUIRE(brz_rossmann(64, &t) == BRZ_OK);
    REQUIRE(brz_table_json(t, &json) == BRZ_OK);
    CHECK(nlohmann::json::parse(take(json))["rows"][63][1] == "115");
    brz_table_free(t);

    brz_series* s = nullptr;
    REQUIRE(brz_hey(R"({"entries":[{"q":2,"r":1,"m":2}]})", 3, 0, &s) == BRZ_OK);
    REQUIRE(brz_series_dirichlet(s, 8, &t) == BRZ_OK);
    CHECK(std::string(brz_table_warning(t)).empty());
    REQUIRE(brz_table_csv(t, &csv) == BRZ_OK);
    CHECK(take(csv) == "n,a_n\n1,1\n2,3\n3,0\n4,7\n5,0\n6,0\n7,0\n8,15\n");
    brz_table_free(t);
    REQUIRE(brz_series_dirichlet(s, 64, &t) == BRZ_OK);
    CHECK_FALSE(std::string(brz_table_warning(t)).empty());
    brz_table_free(t);

    REQUIRE(brz_series_csv(s, &csv) == BRZ_OK);
    CHECK(take(csv) == "z,coefficient\n0,1\n1,3\n2,7\n3,15\n");
    REQUIRE(brz_series_json(s, &json) == BRZ_OK);
    const auto sj = nlohmann::json::parse(take(json));
    CHECK(sj["bound"] == 3);
    CHECK(sj["terms"].size() == 4);
    CHECK(brz_series_check_natural(s) == BRZ_OK);
    brz_series_free(s);

    REQUIRE(brz_hey(R"({"entries":[{"q":2,"r":1,"m":2}]})", 3, 1, &s) == BRZ_OK);
    CHECK(brz_series_check_natural(s) == BRZ_FORMULA);
    brz_series_free(s);
}

TEST_CASE("outputs are deterministic")
{
    std::string first;
    for (int i = 0; i < 3; ++i) {
        brz_series* s = nullptr;
        REQUIRE(brz_prolif(R"({"base":{"kind":"hereditary","q":2,"n":2,"columns":[1,2]}})", 3, BRZ_PROLIF_SUM, &s,
                           nullptr, nullptr)
                == BRZ_OK);
        char* json = nullptr;
        REQUIRE(brz_series_json(s, &json) == BRZ_OK);
        brz_series_free(s);
        const std::string text = take(json);
        if (i == 0)
            first = text;
        CHECK(text == first);
    }
}

TEST_CASE("status codes")
{
    brz_series* s = nullptr;
    CHECK(brz_hey("{not json", 2, 0, &s) == BRZ_SCHEMA);
    CHECK_FALSE(std::string(brz_last_error()).empty());
    CHECK(brz_hey(R"({"entries":[{"q":2}]})", 2, 0, &s) == BRZ_SCHEMA);
    CHECK(brz_hey(nullptr, 2, 0, &s) == BRZ_INVALID_ARGUMENT);
    CHECK(brz_hereditary(R"({"q":2,"n":2,"columns":[1,2]})", 3, BRZ_HEREDITARY_TWO_VARIABLE, "[1]", &s)
          == BRZ_SCHEMA);
    CHECK(brz_oracle(R"({"kind":"local2d","q":2,"c":2})", 3, nullptr, nullptr, 0, &s) == BRZ_INVALID_ARGUMENT);
    CHECK(brz_prolif(R"({"base":{"kind":"dvr","q":2,"m":1}})", -1, BRZ_PROLIF_SUM, &s, nullptr, nullptr) == BRZ_SCHEMA);
    brz_table* t = nullptr;
    CHECK(brz_rossmann(5'000'000, &t) == BRZ_RESOURCE);
    CHECK(brz_hey(R"({"entries":[{"q":2,"r":1,"m":1}]})", 2, 0, &s) == BRZ_OK);
    CHECK(std::string(brz_last_error()).empty());
    brz_series_free(s);
}

TEST_CASE("verification through the C interface")
{
    char* json = nullptr;
    int passed = 0;
    REQUIRE(brz_verify("rossmann", 64, &json, &passed) == BRZ_OK);
    CHECK(passed == 1);
    const auto j = nlohmann::json::parse(take(json));
    CHECK(j[0]["suite"] == "rossmann");
    CHECK(j[0]["passed"] == true);
    CHECK(brz_verify("no-such-suite", -1, &json, &passed) == BRZ_SCHEMA);
    REQUIRE(brz_verify_suites(&json) == BRZ_OK);
    CHECK(nlohmann::json::parse(take(json)).size() == 14);
}
