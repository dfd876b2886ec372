#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cpring/report.hpp"

using namespace cpring;
using nlohmann::json;

#ifndef CPRING_SCHEMA_PATH
#define CPRING_SCHEMA_PATH "share/report.schema.json"
#endif

TEST_CASE("format_double survives a parse round trip") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-52.0) == "-52");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");

    std::mt19937_64 rng(5u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const int exp2 = static_cast<int>(rng() % 120) - 60;
        const double v = std::ldexp(u(rng), exp2);
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("CSV layout: header, empty optionals, flag field") {
    ResultRecord full;
    full.h_hat = 1.5;
    full.theta_deg = 30.0;
    full.b_hat = 2.0;
    full.energy_reduced = -0.25;
    full.force_reduced = 0.125;
    full.e_iso = -0.5;
    full.e_aniso = 0.25;
    full.flags = {Flag::PaperTextConflict, Flag::Ref20Deviation};

    ResultRecord sparse;
    sparse.h_hat = 0.0;
    sparse.theta_deg = 0.0;
    sparse.energy_reduced = -52.0;

    std::ostringstream os;
    write_csv(os, {full, sparse});
    const std::string expected =
        "h_hat,theta_deg,b_hat,energy_reduced,force_reduced,e_iso,e_aniso,flags\n"
        "1.5,30,2,-0.25,0.125,-0.5,0.25,paper-text-conflict;ref20-deviation\n"
        "0,0,,-52,,,,\n";
    CHECK(os.str() == expected);
}

TEST_CASE("CSV output is deterministic") {
    ResultRecord r;
    r.h_hat = 0.7071067811865476;
    r.theta_deg = 45.0;
    r.energy_reduced = -1.2345678901234567e-3;
    std::ostringstream a, b;
    write_csv(a, {r});
    write_csv(b, {r});
    CHECK(a.str() == b.str());
}

TEST_CASE("JSON report carries the document contract") {
    ResultRecord r;
    r.h_hat = 1.0;
    r.theta_deg = 0.0;
    r.energy_reduced = -0.265;
    r.error_estimate = 1e-11;
    r.flags = {Flag::Ref20Deviation};

    ReportMeta meta{"energy", "hbar*c*alpha1*sigma_z/(64*pi*a^6)", 1e-9, 1e-12, {"note"}};
    const std::string text =
        json_report(R"({"body":"ring","h":1.0})", {r}, {Flag::PaperTextConflict}, meta);
    const json doc = json::parse(text);

    // Structural requirements, straight from the shipped schema file.
    std::ifstream schema_in(CPRING_SCHEMA_PATH);
    REQUIRE(schema_in.good());
    const json schema = json::parse(schema_in);
    for (const auto& key : schema.at("required")) CHECK(doc.contains(key.get<std::string>()));
    for (const auto& key : schema.at("properties").at("meta").at("required"))
        CHECK(doc.at("meta").contains(key.get<std::string>()));
    const auto allowed_flags =
        schema.at("properties").at("flags").at("items").at("enum").get<std::vector<std::string>>();
    for (const auto& f : doc.at("flags")) {
        CHECK(std::find(allowed_flags.begin(), allowed_flags.end(), f.get<std::string>()) !=
              allowed_flags.end());
    }

    CHECK(doc.at("inputs").at("body") == "ring");
    CHECK(doc.at("meta").at("version") == "1.0.0");
    CHECK(doc.at("meta").at("command") == "energy");
    CHECK(doc.at("meta").at("rel_tol") == 1e-9);
    REQUIRE(doc.at("results").size() == 1);
    const auto& row = doc.at("results")[0];
    CHECK(row.at("h_hat") == 1.0);
    CHECK(row.at("energy_reduced") == -0.265);
    CHECK(row.at("error_estimate") == 1e-11);
    CHECK_FALSE(row.contains("force_reduced"));  // unset optionals are omitted
    CHECK(row.at("flags")[0] == "ref20-deviation");
    CHECK(doc.at("flags")[0] == "paper-text-conflict");
}

TEST_CASE("sweep request height grids") {
    SweepRequest req;
    req.h_min = 0.0;
    req.h_max = 1.0;
    req.h_count = 5;
    const auto h = req.heights();
    REQUIRE(h.size() == 5);
    CHECK(h.front() == 0.0);
    CHECK(h.back() == 1.0);  // endpoint hit exactly
    CHECK(h[2] == doctest::Approx(0.5).epsilon(1e-15));

    req.h_count = 1;
    req.h_min = 0.7;
    CHECK(req.heights() == std::vector<double>{0.7});
}

TEST_CASE("sweep request validation") {
    SweepRequest ok;
    ok.body = BodyKind::Annulus;
    ok.b_hat = 2.0;
    ok.h_min = 0.0;
    ok.h_max = 2.0;
    ok.h_count = 10;
    CHECK_NOTHROW(ok.validate());

    auto expect_reject = [](SweepRequest r) { CHECK_THROWS_AS(r.validate(), std::invalid_argument); };

    SweepRequest r = ok;
    r.h_count = 0;
    expect_reject(r);

    r = ok;
    r.h_min = 2.0;  // empty range with h_count > 1
    expect_reject(r);

    r = ok;
    r.b_hat.reset();  // annulus needs an outer radius
    expect_reject(r);

    r = ok;
    r.b_hat = 0.5;
    expect_reject(r);

    r = ok;
    r.theta_deg.clear();
    expect_reject(r);

    r = ok;
    r.h_max = std::numeric_limits<double>::quiet_NaN();
    expect_reject(r);

    r = ok;
    r.pol = Polarization::Tensor;  // a sweep cannot supply the constant tensor
    expect_reject(r);

    r = ok;
    r.rel_tol = -1.0;
    expect_reject(r);
}
