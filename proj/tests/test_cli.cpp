#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "f4g/cli.hpp"
#include "support.hpp"

using namespace f4g;

namespace {

FramedFourGraph graph_of(const std::string& name) {
    std::ifstream in(test::data_path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return to_graph(parse_diagram(ss.str()));
}

Json run_json(std::vector<std::string> args, int expect_code) {
    args.push_back("--json");
    const CommandResult r = run_command(args);
    EXPECT_EQ(r.code, expect_code) << r.err;
    return Json::parse(r.out);
}

}  // namespace

TEST(Cli, CheckPlanarGamma) {
    const Json doc = run_json({"check", "planar", test::data_path("gamma.fcd")}, 1);
    EXPECT_EQ(doc["question"], "planar");
    EXPECT_FALSE(doc["verdict"].get<bool>());
    EXPECT_EQ(doc["witness"]["obstruction"]["kind"], "gamma");
    EXPECT_EQ(certificate_problem(graph_of("gamma.fcd"), doc), "");
}

TEST(Cli, CheckRp2Gamma) {
    const Json doc = run_json({"check", "rp2", test::data_path("gamma.fcd")}, 0);
    EXPECT_TRUE(doc["verdict"].get<bool>());
    EXPECT_EQ(doc["witness"]["split"]["d1"], Json::array());
    EXPECT_EQ(doc["witness"]["split"]["d2"], Json::array({0}));
    EXPECT_EQ(certificate_problem(graph_of("gamma.fcd"), doc), "");
}

TEST(Cli, DeltaAndGamma1) {
    Json doc = run_json({"check", "planar", test::data_path("delta.fcd")}, 1);
    EXPECT_EQ(doc["witness"]["obstruction"]["kind"], "delta");
    EXPECT_EQ(certificate_problem(graph_of("delta.fcd"), doc), "");
    doc = run_json({"check", "rp2", test::data_path("delta.fcd")}, 1);
    EXPECT_EQ(doc["witness"]["obstruction"]["kind"], "delta");
    EXPECT_EQ(certificate_problem(graph_of("delta.fcd"), doc), "");
    doc = run_json({"check", "rp2", test::data_path("gamma1.fcd")}, 1);
    EXPECT_EQ(doc["witness"]["obstruction"]["kind"], "gamma1");
    EXPECT_EQ(certificate_problem(graph_of("gamma1.fcd"), doc), "");
    doc = run_json({"check", "planar", test::data_path("gamma1.fcd")}, 1);
    EXPECT_EQ(doc["witness"]["obstruction"]["kind"], "gamma");
}

TEST(Cli, EveryDataFileCertificateValidates) {
    for (const char* name : {"gamma.fcd", "delta.fcd", "gamma1.fcd", "circles.fcd", "p3.fcd", "p5.fcd", "two_components.fcd", "two_gammas.fcd"}) {
        const FramedFourGraph g = graph_of(name);
        for (const char* q : {"planar", "rp2"})
            for (bool multi : {false, true}) {
                std::vector<std::string> args{"check", q, test::data_path(name), "--json"};
                if (multi) args.push_back("--multi");
                const CommandResult r = run_command(args);
                ASSERT_LE(r.code, 1) << name << r.err;
                EXPECT_EQ(certificate_problem(g, Json::parse(r.out)), "") << name << " " << q;
            }
        const CommandResult c = run_command({"circuit", test::data_path(name), "--json"});
        EXPECT_EQ(c.code, 0);
        EXPECT_EQ(certificate_problem(g, Json::parse(c.out)), "") << name;
    }
}

TEST(Cli, MultiPolicy) {
    EXPECT_EQ(run_command({"check", "rp2", test::data_path("two_gammas.fcd")}).code, 0);
    const Json doc = run_json({"check", "rp2", test::data_path("two_gammas.fcd"), "--multi"}, 1);
    EXPECT_EQ(doc["policy"], "multi");
    EXPECT_EQ(doc["witness"]["nonplanar_components"].size(), 2u);
    EXPECT_EQ(certificate_problem(graph_of("two_gammas.fcd"), doc), "");
    EXPECT_EQ(run_command({"check", "rp2", test::data_path("two_components.fcd"), "--multi"}).code, 0);
}

TEST(Cli, TamperedCertificatesAreRejected) {
    const FramedFourGraph g = graph_of("p5.fcd");
    Json doc = run_json({"check", "rp2", test::data_path("p5.fcd")}, 1);
    Json bad = doc;
    bad["witness"]["obstruction"]["steps"].erase(0);
    EXPECT_NE(certificate_problem(g, bad), "");
    bad = doc;
    bad["witness"]["obstruction"]["kind"] = "delta";
    EXPECT_NE(certificate_problem(g, bad), "");
    bad = doc;
    bad["input_fingerprint"] = "0000000000000000";
    EXPECT_NE(certificate_problem(g, bad), "");

    const FramedFourGraph l = graph_of("two_components.fcd");
    doc = run_json({"check", "planar", test::data_path("two_components.fcd")}, 1);
    const Json rp2 = run_json({"check", "rp2", test::data_path("two_components.fcd")}, 0);
    EXPECT_EQ(certificate_problem(l, rp2), "");
    bad = rp2;
    auto& comps = bad["witness"]["components"];
    ASSERT_EQ(comps.size(), 2u);
    // put both linked chords on the disc side
    comps[0]["split"]["d1"] = Json::array({0, 1});
    comps[0]["split"]["d2"] = Json::array();
    EXPECT_NE(certificate_problem(l, bad), "");
    bad = rp2;
    bad["witness"]["components"].erase(1);
    EXPECT_NE(certificate_problem(l, bad), "");
}

TEST(Cli, MinorAndSMinor) {
    const FramedFourGraph delta = graph_of("delta.fcd");
    Json doc = run_json({"minor", test::data_path("delta.fcd"), "--pattern", "gamma"}, 1);
    EXPECT_TRUE(doc["witness"].is_null());
    const FramedFourGraph gamma = gamma_graph();
    EXPECT_EQ(certificate_problem(delta, doc, &gamma), "");
    doc = run_json({"sminor", test::data_path("delta.fcd"), "--pattern", "gamma"}, 0);
    EXPECT_EQ(certificate_problem(delta, doc, &gamma), "");
    doc = run_json({"minor", test::data_path("p5.fcd"), "--pattern", test::data_path("p3.fcd")}, 0);
    const FramedFourGraph p3 = graph_of("p3.fcd");
    EXPECT_EQ(certificate_problem(graph_of("p5.fcd"), doc, &p3), "");
    EXPECT_EQ(run_command({"minor", test::data_path("p3.fcd"), "--pattern", "gamma1"}).code, 0);
    EXPECT_EQ(run_command({"minor", test::data_path("p3.fcd"), "--pattern", "odd_gon(1)"}).code, 0);
}

TEST(Cli, EnumerateVerify) {
    const CommandResult r = run_command({"enumerate", "--chords", "3", "--verify"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("3 chords: 120 labeled"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("0 disagreements"), std::string::npos) << r.out;
    const Json doc = run_json({"enumerate", "--chords", "2"}, 0);
    EXPECT_EQ(doc["counts"][2]["labeled"], 12);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run_command({"check", "planar", "/nonexistent.fcd"}).code, 2);
    EXPECT_EQ(run_command({"check", "sphere", test::data_path("gamma.fcd")}).code, 2);
    EXPECT_EQ(run_command({"minor", test::data_path("gamma.fcd"), "--pattern", "zeta"}).code, 2);
    EXPECT_EQ(run_command({"minor", test::data_path("gamma.fcd")}).code, 2);
    EXPECT_EQ(run_command({}).code, 2);
    EXPECT_EQ(run_command({"enumerate", "--chords", "x"}).code, 2);
    const CommandResult bad = run_command({"check", "planar", std::string(F4G_TEST_DIR) + "/bad.fcd"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find(":3:"), std::string::npos) << bad.err;
}

TEST(Cli, QuietPrintsNothing) {
    const CommandResult r = run_command({"check", "planar", test::data_path("delta.fcd"), "--quiet"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ExitCodesAreDeterministic) {
    for (int i = 0; i < 3; ++i) {
        const CommandResult a = run_command({"check", "rp2", test::data_path("p5.fcd"), "--json"});
        const CommandResult b = run_command({"check", "rp2", test::data_path("p5.fcd"), "--json"});
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out);
    }
}
