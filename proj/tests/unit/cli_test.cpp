#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "latframe");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = latframe::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string kCorpus = LATFRAME_CORPUS_DIR;

}  // namespace

TEST(Cli, LatticeAsJson) {
    const auto r = run({"--format", "json", "lattice", "oruga:3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["elements"].size(), 6u);
    EXPECT_EQ(doc["covers"].size(), 6u);
}

TEST(Cli, LatticeAsDot) {
    const auto r = run({"--format", "dot", "lattice", kCorpus + "/oruga2.fg"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
}

TEST(Cli, ReconstructPrintsBothStages) {
    const auto r = run({"reconstruct", "oruga:2", "--bricks", "[1:u1|d1>·<u2|d2:1]"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("[1:u1|d1>·u2"), std::string::npos);
    EXPECT_NE(r.out.find("d1-u2"), std::string::npos);
}

TEST(Cli, CompareReportsAWitness) {
    const auto r = run({"compare", "oruga:2", "1", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("u1-d2 is clockwise to d1-u2 at vertex 1"), std::string::npos);
}

TEST(Cli, CoordinatesOfTheWeakOrder) {
    const auto r = run({"coords", "oruga:3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("(3,1)"), std::string::npos);
}

TEST(Cli, CheckPassesOnShippedFiles) {
    for (const char* name : {"diamond.fg", "caracol3.fg", "random10.fg"}) {
        const auto r = run({"check", kCorpus + "/" + name});
        EXPECT_EQ(r.code, 0) << name << "\n" << r.out << r.err;
    }
}

TEST(Cli, ClassicalModels) {
    EXPECT_EQ(run({"weak-order", "3"}).code, 0);
    const auto tamari = run({"tamari", "3"});
    EXPECT_EQ(tamari.code, 0);
    EXPECT_NE(tamari.out.find("Catalan 5"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"lattice"}).code, 1);
    EXPECT_EQ(run({"bricks", "oruga:2", "99"}).code, 1);
    EXPECT_EQ(run({"lattice", kCorpus + "/missing.fg"}).code, 2);
    EXPECT_EQ(run({"lattice", "oruga:x"}).code, 1);
    EXPECT_EQ(run({"--route-limit", "4", "lattice", "oruga:5"}).code, 3);
    EXPECT_EQ(run({"--help"}).code, 0);
}
