/*
   Copyright 2026 The salemkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "salemkit/cli.hpp"
#include "salemkit/construct.hpp"

using namespace salemkit;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = -1;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Outcome o;
    o.code = cli::run(args, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

class TempDir {
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() / ("salemkit-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& body) const
    {
        const fs::path p = path_ / name;
        std::ofstream(p, std::ios::binary) << body;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

cli::Json parse(const std::string& s) { return cli::Json::parse(s); }

} // namespace

TEST(Encode, GoldenRatioDocument)
{
    const cli::PolyDocument doc{"pisot", std::nullopt, IntPolynomial{-1, -1, 1}, cli::Json::object()};
    EXPECT_EQ(cli::encode_poly(doc), R"({"kind":"pisot","degree":2,"coeffs":["-1","-1","1"]})");
    EXPECT_EQ(cli::encode_poly(doc, cli::Format::Text), "-1 -1 1");
}

TEST(Encode, RoundTrip)
{
    cli::PolyDocument doc{"salem", -3, generate_salem_candidate(3).reduced(), cli::Json::object()};
    doc.metadata["exponents"] = {2, 3, 5, 7, 11, 13, 17, 19};
    const std::string bytes = cli::encode_poly(doc);
    const cli::PolyDocument back = cli::decode_poly(bytes);
    EXPECT_EQ(back, doc);
    EXPECT_EQ(cli::encode_poly(back), bytes);

    const std::string text = cli::encode_poly(doc, cli::Format::Text);
    EXPECT_EQ(cli::decode_poly(text).poly, doc.poly);
}

TEST(Encode, LargeDocumentRoundTrip)
{
    const cli::PolyDocument doc{"salem-candidate", -25, generate_salem_candidate(25).reduced(), cli::Json::object()};
    const std::string bytes = cli::encode_poly(doc);
    EXPECT_EQ(cli::encode_poly(cli::decode_poly(bytes)), bytes);
    EXPECT_EQ(parse(bytes)["degree"], 5540);
}

TEST(Decode, Errors)
{
    auto code = [](const std::string& s) {
        try {
            (void)cli::decode_poly(s);
        } catch (const Error& e) {
            return std::make_pair(e.code(), std::string(e.what()));
        }
        return std::make_pair(Errc::BadParam, std::string("no error"));
    };
    EXPECT_EQ(code(R"({"coeffs":["1","x"]})").first, Errc::ParseError);
    EXPECT_EQ(code(R"({"coeffs":[1,2]})").first, Errc::ParseError);
    EXPECT_EQ(code(R"({"kind":"nonsense","coeffs":["1"]})").first, Errc::ParseError);
    EXPECT_EQ(code(R"({"kind":"raw","degree":3,"coeffs":["1","1"]})").first, Errc::ParseError);
    EXPECT_EQ(code("{\"coeffs\": [\"1\",\n  \"2\"").first, Errc::ParseError);
    EXPECT_NE(code("{\"coeffs\": [\"1\",\n  \"2\"").second.find("line 2"), std::string::npos);
    EXPECT_EQ(code("1 2 3\n4 5 six\n").first, Errc::ParseError);
    EXPECT_EQ(code("").first, Errc::ParseError);
}

TEST(Decode, TextLines)
{
    const auto docs = cli::decode_documents("1 -1\n\n1 0 1\n");
    ASSERT_EQ(docs.size(), 2u);
    EXPECT_EQ(docs[1].poly, (IntPolynomial{1, 0, 1}));
}

TEST(Run, GoldenGeneration)
{
    const Outcome o = invoke({"gen", "salem", "--trace", "2", "--sieve", "--certify", "--format", "json"});
    EXPECT_EQ(o.code, 0) << o.err;
    const cli::Json j = parse(o.out);
    EXPECT_EQ(j["degree"], 38);
    EXPECT_EQ(j["trace"], -2);
    EXPECT_EQ(j["kind"], "salem");
    EXPECT_EQ(j["coeffs"][38], "1");
    EXPECT_EQ(j["coeffs"][37], "2");
    EXPECT_EQ(j["coeffs"][36], "-2");
    EXPECT_EQ(j["coeffs"][19], "-2635");
    EXPECT_EQ(j["coeffs"][0], "1");
}

TEST(Run, KillerPolicy)
{
    const Outcome o = invoke({"gen", "salem", "--trace", "2", "--policy", "killer"});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("9074926996"), std::string::npos);
    EXPECT_EQ(o.out.find("coeffs"), std::string::npos);
}

TEST(Run, VerifyLehmer)
{
    TempDir dir;
    const std::string f = dir.write("lehmer.txt", to_text(family("lehmer")) + "\n");
    const Outcome o = invoke({"verify", f, "--kind", "salem"});
    EXPECT_EQ(o.code, 0) << o.err;
    const cli::Json j = parse(o.out);
    EXPECT_EQ(j["verdict"], "Salem");
    EXPECT_EQ(j["trace"], -1);
    EXPECT_NE(o.out.find("1.176280818"), std::string::npos);

    const Outcome a = invoke({"verify", f});
    EXPECT_EQ(a.code, 0);
}

TEST(Run, VerifyRejection)
{
    TempDir dir;
    const std::string f = dir.write("bad.txt", "1 0 1\n");
    EXPECT_EQ(invoke({"verify", f, "--kind", "salem"}).code, 1);
    const std::string g = dir.write("golden.json", R"({"kind":"pisot","degree":2,"coeffs":["-1","-1","1"]})");
    EXPECT_EQ(invoke({"verify", g}).code, 0);
    EXPECT_EQ(invoke({"verify", g, "--kind", "salem"}).code, 1);
}

TEST(Run, SieveExitCodes)
{
    TempDir dir;
    const IntPolynomial bad = IntPolynomial{1, 1, 1} * family(Family::Quartic, 1);
    const std::string f = dir.write("bad.txt", to_text(bad) + "\n");
    const Outcome o = invoke({"sieve", f});
    EXPECT_EQ(o.code, 1);
    EXPECT_NE(o.out.find("\"index\":3"), std::string::npos) << o.out;
    const std::string g = dir.write("good.txt", to_text(family("lehmer")) + "\n");
    EXPECT_EQ(invoke({"sieve", g}).code, 0);
}

TEST(Run, UsageErrors)
{
    EXPECT_EQ(invoke({}).code, 3);
    EXPECT_EQ(invoke({"gen"}).code, 3);
    EXPECT_EQ(invoke({"gen", "salem"}).code, 3);
    EXPECT_EQ(invoke({"gen", "salem", "--trace", "x"}).code, 3);
    EXPECT_EQ(invoke({"frobnicate"}).code, 3);
    EXPECT_EQ(invoke({"verify", "/nonexistent/file.txt"}).code, 3);
    EXPECT_EQ(invoke({"family", "octic"}).code, 3);
    EXPECT_EQ(invoke({"family", "quartic", "--n", "0"}).code, 3);
    EXPECT_EQ(invoke({"bounds", "killer", "--n", "3"}).code, 3);
    EXPECT_EQ(invoke({"gen", "salem", "--trace", "1", "--format", "xml"}).code, 3);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Run, OutFileAndText)
{
    TempDir dir;
    const std::string f = dir.file("out.txt");
    const Outcome o = invoke({"family", "quartic", "--n", "2", "--format", "text", "--out", f});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_TRUE(o.out.empty());
    std::ifstream in(f);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_NE(body.find("1 -2 -5 -2 1"), std::string::npos) << body;
}

TEST(Run, Bounds)
{
    const Outcome s = invoke({"bounds", "salem", "--trace", "25"});
    EXPECT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(parse(s.out)["constructed_degree"], 5540);
    const Outcome p = invoke({"bounds", "pisot", "--trace", "1"});
    EXPECT_EQ(p.code, 0);
    EXPECT_NE(p.out.find("41"), std::string::npos);
    const Outcome k = invoke({"bounds", "killer", "--n", "2"});
    EXPECT_EQ(k.code, 0) << k.err;
    EXPECT_NE(k.out.find("1122"), std::string::npos);
}

TEST(Run, Deterministic)
{
    const std::vector<std::string> args{"gen", "salem", "--trace", "4", "--sieve", "--certify"};
    const Outcome a = invoke(args), b = invoke(args);
    EXPECT_EQ(a.out, b.out);
    const Outcome t = invoke({"gen", "salem", "--trace", "4", "--sieve", "--certify", "--timing"});
    EXPECT_EQ(t.out, a.out);
    EXPECT_NE(t.err.find("elapsed"), std::string::npos);
}

TEST(Run, TableIndependentOfJobs)
{
    const Outcome one = invoke({"table", "--kind", "salem", "--max-trace", "6", "--jobs", "1"});
    const Outcome four = invoke({"table", "--kind", "salem", "--max-trace", "6", "--jobs", "4"});
    EXPECT_EQ(one.code, 0) << one.err;
    EXPECT_EQ(one.out, four.out);
    std::istringstream lines(one.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "trace,degree,sieve,value");
    std::getline(lines, line);
    EXPECT_EQ(line.substr(0, 5), "0,6,p");
    int rows = 0;
    while (std::getline(lines, line))
        ++rows;
    EXPECT_EQ(rows, 6);
}

TEST(Run, PisotGeneration)
{
    const Outcome o = invoke({"gen", "pisot", "--trace", "1", "--certify"});
    EXPECT_EQ(o.code, 0) << o.err;
    const cli::Json j = parse(o.out);
    EXPECT_EQ(j["kind"], "pisot");
    EXPECT_EQ(j["trace"], -1);
    EXPECT_EQ(j["degree"], 38);
}
