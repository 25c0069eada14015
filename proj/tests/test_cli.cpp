#include "hopf/cli.hpp"
#include "hopf/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hopf;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto dir = fs::temp_directory_path() / "hopf_cli_tests";
    fs::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path.string();
}

std::string golden(const std::string& name) { return io::read_file(std::string(HOPF_GOLDEN_DIR) + "/" + name); }

std::vector<std::string> coeffs(const std::string& json_text) {
    return io::json::parse(json_text)["coeffs"].get<std::vector<std::string>>();
}

struct CapGuard {
    explicit CapGuard(const char* v) { setenv("HOPF_CAP", v, 1); }
    ~CapGuard() { unsetenv("HOPF_CAP"); }
};

const std::string kCatalanR = R"({"kind":"R","order":8,"coeffs":["1","2","5","14","42","132","429","1430"]})";

}  // namespace

TEST(Tables, SMatchesGolden) {
    const auto r = run({"tables", "--which", "s"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, golden("s_table.csv"));
}

TEST(Tables, DMatchesGolden) {
    const auto r = run({"tables", "--which", "d", "--max", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, golden("d_table.csv"));
}

TEST(Tables, ShorterTable) {
    const auto r = run({"tables", "--which", "s", "--max", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "name,n1,n2,n3");
    EXPECT_NE(r.out.find("FQSym,1,1,2\n"), std::string::npos);
    EXPECT_EQ(run({"tables", "--which", "s", "--max", "9"}).code, cli::kParseError);
}

TEST(Convert, CatalanToS) {
    const auto in = temp_file("catalan.json", kCatalanR);
    const auto r = run({"convert", "--from", "r", "--to", "s", "--input", in});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(coeffs(r.out), (std::vector<std::string>{"1", "1", "1", "3", "7", "24", "72", "242"}));
    EXPECT_EQ(io::json::parse(r.out)["kind"], "S");
}

TEST(Convert, SToROneOneZeroExample) {
    const auto in = temp_file("s110.json", R"({"kind":"S","order":3,"coeffs":["1","1","0"]})");
    const auto r = run({"convert", "--from", "s", "--to", "r", "--input", in});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(coeffs(r.out), (std::vector<std::string>{"1", "2", "4"}));
}

TEST(Convert, IdentityCopy) {
    const auto in = temp_file("copy.json", R"({"kind":"R","order":2,"coeffs":["1/2","3"]})");
    const auto r = run({"convert", "--from", "r", "--to", "r", "--input", in});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(coeffs(r.out), (std::vector<std::string>{"1/2", "3"}));
}

TEST(Convert, OrderTruncates) {
    const auto in = temp_file("catalan2.json", kCatalanR);
    const auto r = run({"convert", "--from", "r", "--to", "p", "--input", in, "--order", "4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(coeffs(r.out), (std::vector<std::string>{"1", "1", "2", "5"}));
    EXPECT_EQ(run({"convert", "--from", "r", "--to", "p", "--input", in, "--order", "9"}).code, cli::kDomainError);
}

TEST(Convert, AllPairsRoundTrip) {
    const auto in = temp_file("catalan3.json", kCatalanR);
    for (const std::string k : {"p", "s", "d"}) {
        const auto there = run({"convert", "--from", "r", "--to", k, "--input", in});
        ASSERT_EQ(there.code, 0) << k;
        const auto mid = temp_file("mid_" + k + ".json", there.out);
        const auto back = run({"convert", "--from", k, "--to", "r", "--input", mid});
        ASSERT_EQ(back.code, 0) << k;
        EXPECT_EQ(coeffs(back.out), coeffs(kCatalanR)) << k;
    }
}

TEST(Convert, ParseErrors) {
    const auto bad_json = temp_file("bad.json", "{not json");
    const auto bad_order = temp_file("order.json", R"({"kind":"R","order":3,"coeffs":["1","2"]})");
    const auto bad_coeff = temp_file("coeff.json", R"({"kind":"R","order":1,"coeffs":["1/0"]})");
    const auto bad_kind = temp_file("kind.json", R"({"kind":"Q","order":1,"coeffs":["1"]})");
    for (const auto& f : {bad_json, bad_order, bad_coeff, bad_kind})
        EXPECT_EQ(run({"convert", "--from", "r", "--to", "s", "--input", f}).code, cli::kParseError) << f;
    EXPECT_EQ(run({"convert", "--from", "r", "--to", "s", "--input", "/nonexistent/x.json"}).code, cli::kParseError);
    EXPECT_EQ(run({"convert", "--from", "x", "--to", "s", "--input", bad_json}).code, cli::kParseError);
    EXPECT_EQ(run({"convert", "--to", "s"}).code, cli::kParseError);
    EXPECT_EQ(run({}).code, cli::kParseError);
}

TEST(Convert, NonIntegerExponentIsDomainError) {
    const auto in = temp_file("phalf.json", R"({"kind":"P","order":2,"coeffs":["1","1/2"]})");
    const auto r = run({"convert", "--from", "p", "--to", "s", "--input", in});
    EXPECT_EQ(r.code, cli::kDomainError);
    EXPECT_FALSE(r.err.empty());
}

TEST(Convert, KindMustMatchFlag) {
    const auto in = temp_file("kindflag.json", kCatalanR);
    EXPECT_EQ(run({"convert", "--from", "s", "--to", "r", "--input", in}).code, cli::kDomainError);
}

TEST(Gate, NckFailsOnOneOneZeroExample) {
    const auto in = temp_file("r124.json", R"({"kind":"R","order":3,"coeffs":["1","2","4"]})");
    const auto r = run({"gate", "--which", "nck", "--input", in});
    EXPECT_EQ(r.code, cli::kCheckFailed);
    const auto j = io::json::parse(r.out);
    EXPECT_EQ(j["pass"], false);
    EXPECT_EQ(j["first_failure"], 3);
    EXPECT_EQ(j["witness"], "-1");
    EXPECT_EQ(run({"gate", "--which", "free-cofree", "--input", in}).code, 0);
}

TEST(Gate, FactorialsAndCatalanPass) {
    const auto fact = temp_file("fact.json", R"({"kind":"R","order":8,"coeffs":["1","2","6","24","120","720","5040","40320"]})");
    EXPECT_EQ(run({"gate", "--which", "free-cofree", "--input", fact}).code, 0);
    const auto cat = temp_file("cat.json", kCatalanR);
    EXPECT_EQ(run({"gate", "--which", "nck", "--input", cat}).code, 0);
}

TEST(Gate, ParseAndDomainErrors) {
    const auto bad = temp_file("gatebad.json", "[]");
    EXPECT_EQ(run({"gate", "--which", "nck", "--input", bad}).code, cli::kParseError);
    const auto frac = temp_file("gatefrac.json", R"({"kind":"R","order":1,"coeffs":["1/2"]})");
    EXPECT_EQ(run({"gate", "--which", "nck", "--input", frac}).code, cli::kDomainError);
}

TEST(Nck, DimsDefault) {
    const auto r = run({"nck", "--max-degree", "5", "dims"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = io::json::parse(r.out);
    EXPECT_EQ(j["r"], io::json::parse("[1,2,5,14,42]"));
    EXPECT_EQ(j["p"], io::json::parse("[1,1,2,5,14]"));
    EXPECT_EQ(j["s"], io::json::parse("[1,1,1,3,7]"));
    EXPECT_EQ(j["p_matches_series"], true);
}

TEST(Nck, DimsTwoDecorations) {
    const auto dec = temp_file("two.json", R"([{"label":"a","degree":1},{"label":"b","degree":1}])");
    const auto r = run({"nck", "--max-degree", "3", "--decorations", dec, "dims"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(io::json::parse(r.out)["r"], io::json::parse("[2,8,40]"));
}

TEST(Nck, BadDecorations) {
    const auto dup = temp_file("dup.json", R"([{"label":"a","degree":1},{"label":"a","degree":2}])");
    EXPECT_EQ(run({"nck", "--max-degree", "2", "--decorations", dup, "dims"}).code, cli::kParseError);
    const auto shape = temp_file("shape.json", R"({"label":"a"})");
    EXPECT_EQ(run({"nck", "--max-degree", "2", "--decorations", shape, "dims"}).code, cli::kParseError);
}

TEST(Nck, VerifyPasses) {
    const auto r = run({"nck", "--max-degree", "5", "verify"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(io::json::parse(r.out)["pass"], true);
}

TEST(Nck, CapAndOverride) {
    const auto r = run({"nck", "--max-degree", "8", "dims"});
    EXPECT_EQ(r.code, cli::kCapExceeded);
    EXPECT_NE(r.err.find("cap"), std::string::npos);
    {
        CapGuard g("2");
        EXPECT_EQ(run({"nck", "--max-degree", "3", "dims"}).code, cli::kCapExceeded);
        EXPECT_EQ(run({"pairing", "--max-degree", "3", "build"}).code, cli::kCapExceeded);
        EXPECT_EQ(run({"nck", "--max-degree", "2", "dims"}).code, 0);
    }
    {
        CapGuard g("6");
        EXPECT_EQ(run({"pairing", "--max-degree", "6", "build"}).code, 0);
        EXPECT_EQ(run({"nck", "--max-degree", "7", "dims"}).code, cli::kCapExceeded);
    }
    {
        CapGuard g("lots");
        EXPECT_EQ(run({"nck", "--max-degree", "2", "dims"}).code, cli::kParseError);
    }
    EXPECT_EQ(run({"nck", "--max-degree", "0", "dims"}).code, cli::kDomainError);
}

TEST(Pairing, BuildDegreeOne) {
    const auto r = run({"pairing", "--max-degree", "1", "build"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = io::json::parse(r.out);
    EXPECT_EQ(j["gram"]["1"], io::json::parse(R"([["1"]])"));
    EXPECT_EQ(j["gram"]["0"], io::json::parse(R"([["1"]])"));
}

TEST(Pairing, VerifyAndAdapt) {
    const auto v = run({"pairing", "--max-degree", "5", "verify"});
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_EQ(io::json::parse(v.out)["pass"], true);
    const auto a = run({"pairing", "--max-degree", "4", "adapt"});
    EXPECT_EQ(a.code, 0) << a.err;
    for (const auto& d : io::json::parse(a.out)["degrees"]) EXPECT_EQ(d["block_form"], true);
}

TEST(Pairing, CapExceeded) { EXPECT_EQ(run({"pairing", "--max-degree", "6", "verify"}).code, cli::kCapExceeded); }

TEST(Output, Deterministic) {
    EXPECT_EQ(run({"pairing", "--max-degree", "4", "build"}).out, run({"pairing", "--max-degree", "4", "build"}).out);
}
