#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <arclab.h>

#include <json.hpp>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

namespace {

struct LibString {
    char* ptr = nullptr;
    ~LibString() { arclab_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

}  // namespace

TEST_CASE("version and status names") {
    CHECK(arclab_version() != nullptr);
    CHECK(std::strcmp(arclab_status_name(ARCLAB_OK), "ok") == 0);
    CHECK(std::strcmp(arclab_status_name(ARCLAB_ERR_DOMAIN), "domain error") == 0);
}

TEST_CASE("encode handle: final interval, trace, codewords") {
    arclab_encoding* enc = nullptr;
    REQUIRE(arclab_encode("011101", "2/3", &enc) == ARCLAB_OK);

    LibString low, high;
    CHECK(arclab_encoding_final(enc, &low.ptr, &high.ptr) == ARCLAB_OK);
    CHECK(low.str() == "179/729");
    CHECK(high.str() == "65/243");

    CHECK(arclab_encoding_steps(enc) == 6);
    LibString l2, h2;
    CHECK(arclab_encoding_interval(enc, 2, &l2.ptr, &h2.ptr) == ARCLAB_OK);
    CHECK(l2.str() == "5/27");
    CHECK(h2.str() == "1/3");
    LibString l9, h9;
    CHECK(arclab_encoding_interval(enc, 9, &l9.ptr, &h9.ptr) == ARCLAB_ERR_INVALID_ARGUMENT);

    LibString fd, mid, sub;
    CHECK(arclab_encoding_codeword(enc, ARCLAB_CODEWORD_FIRST_DISAGREEMENT, &fd.ptr) == ARCLAB_OK);
    CHECK(arclab_encoding_codeword(enc, ARCLAB_CODEWORD_MIDPOINT, &mid.ptr) == ARCLAB_OK);
    CHECK(arclab_encoding_codeword(enc, ARCLAB_CODEWORD_SUBINTERVAL, &sub.ptr) == ARCLAB_OK);
    CHECK(fd.str() == "01");
    CHECK(mid.str() == "01");
    CHECK(sub.str() == "010000");

    arclab_encoding_free(enc);
}

TEST_CASE("decode and dyadic utilities") {
    LibString value;
    REQUIRE(arclab_dyadic_value("01", &value.ptr) == ARCLAB_OK);
    CHECK(value.str() == "1/4");
    LibString message;
    REQUIRE(arclab_decode(value.ptr, 6, "2/3", &message.ptr) == ARCLAB_OK);
    CHECK(message.str() == "011101");
    LibString bits;
    REQUIRE(arclab_binary_expansion("179/729", 10, &bits.ptr) == ARCLAB_OK);
    CHECK(bits.str() == "0011111011");
    LibString cw;
    REQUIRE(arclab_interval_codeword("1/4", "1/2", ARCLAB_CODEWORD_SUBINTERVAL, &cw.ptr) ==
            ARCLAB_OK);
    CHECK(cw.str() == "01");
}

TEST_CASE("errors carry codes and diagnostics") {
    arclab_encoding* enc = nullptr;
    CHECK(arclab_encode("1", "0/1", &enc) == ARCLAB_ERR_DOMAIN);
    CHECK(std::string(arclab_last_error()).find("strictly inside (0,1)") != std::string::npos);
    CHECK(arclab_encode("1", "7/5", &enc) == ARCLAB_ERR_DOMAIN);
    CHECK(arclab_encode("1", "banana", &enc) == ARCLAB_ERR_INVALID_ARGUMENT);
    CHECK(arclab_encode(nullptr, "1/2", &enc) == ARCLAB_ERR_INVALID_ARGUMENT);
    LibString out;
    CHECK(arclab_binary_expansion("3/2", 4, &out.ptr) == ARCLAB_ERR_DOMAIN);

    arclab_sim_config cfg{"1/3", 600, 10, 1, ARCLAB_BACKEND_FLOAT};
    LibString json;
    CHECK(arclab_simulate(&cfg, nullptr, &json.ptr) == ARCLAB_ERR_LIMIT);
}

TEST_CASE("reports are valid JSON and stable under reserialization") {
    LibString eigen;
    REQUIRE(arclab_eigen_report(2, "1/3", &eigen.ptr) == ARCLAB_OK);
    auto parsed = nlohmann::ordered_json::parse(eigen.str());
    CHECK(parsed["eigenvalues"] ==
          nlohmann::ordered_json::array({"1", "5/9", "1/3"}));
    CHECK(parsed["doubly_stochastic"].get<bool>());
    CHECK(parsed["regular"].get<bool>());
    CHECK(parsed["triangularization"]["diagonal_matches_eigenvalues"].get<bool>());
    // round-trip: parse then re-dump is the identity
    CHECK(parsed.dump(2) + "\n" == eigen.str());

    arclab_sim_config cfg{"2/5", 16, 200, 7, ARCLAB_BACKEND_FLOAT};
    LibString sim1, sim2;
    REQUIRE(arclab_simulate(&cfg, nullptr, &sim1.ptr) == ARCLAB_OK);
    REQUIRE(arclab_simulate(&cfg, nullptr, &sim2.ptr) == ARCLAB_OK);
    CHECK(sim1.str() == sim2.str());
    auto sim = nlohmann::ordered_json::parse(sim1.str());
    CHECK(sim["config"]["backend"] == "float");
    CHECK(sim.dump(2) + "\n" == sim1.str());
}

TEST_CASE("moment table formats") {
    LibString csv;
    REQUIRE(arclab_moment_table(2, 4, "1/3", 1, &csv.ptr) == ARCLAB_OK);
    CHECK(csv.str().rfind("n,comp_0,comp_1,comp_2,max_abs_deviation\n", 0) == 0);
    LibString json;
    REQUIRE(arclab_moment_table(1, 3, "1/3", 0, &json.ptr) == ARCLAB_OK);
    auto parsed = nlohmann::ordered_json::parse(json.str());
    CHECK(parsed["rows"].size() == 4);
    CHECK(parsed["rows"][0]["components"] == nlohmann::ordered_json::array({"0", "1"}));
    CHECK(parsed["limit"] == "1/2");
}

TEST_CASE("simulate can stream per-trial samples to CSV") {
    arclab_sim_config cfg{"1/3", 8, 25, 3, ARCLAB_BACKEND_EXACT};
    LibString json;
    std::string path = "capi_samples_test.csv";
    REQUIRE(arclab_simulate(&cfg, path.c_str(), &json.ptr) == ARCLAB_OK);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "trial,x,y,midpoint,code_bits");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 25);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("default seed is advertised") {
    CHECK(arclab_default_seed() == 20240917u);
}
