#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "p4/cli.hpp"
#include "p4/io.hpp"
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace p4;
using namespace p4::test;
using p4::io::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string &text) {
    std::vector<json> out;
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l))
        if (!l.empty())
            out.push_back(json::parse(l));
    return out;
}

std::string scratch(const std::string &name, const std::string &content = "") {
    fs::path dir = fs::temp_directory_path() / "p4_cli_test";
    fs::create_directories(dir);
    fs::path p = dir / name;
    if (!content.empty())
        std::ofstream(p) << content;
    return p.string();
}

std::string multiplet_file(const std::string &name, const RhoSolution &r) {
    return scratch(name, io::record(build_multiplet(r), multiplet_vtriple(r)).dump() + "\n");
}

RhoSolution rho0() { return {RatFun(P({"0", "0", "0", "8/27"})), Q("4/9"), 0}; }

} // namespace

TEST_CASE("generate: -2x record") {
    Result r = run({"generate", "--hierarchy", "2x", "--k", "2", "--n", "2"});
    REQUIRE(r.code == cli::Exit::ok);
    auto recs = lines(r.out);
    REQUIRE(recs.size() == 1);
    CHECK(io::ratfun_from_json(recs[0]["rho"]) == RatFun(P({"0", "8"}), P({"1", "0", "2"})));
    CHECK(recs[0]["ok"] == true);
    CHECK(recs[0]["residual"] == json::array());
}

TEST_CASE("generate: domain errors name the precondition") {
    Result r = run({"generate", "--hierarchy", "2x", "--k", "0", "--n", "1"});
    CHECK(r.code == cli::Exit::domain_error);
    CHECK(r.err.find("k >= 1 required") != std::string::npos);
    CHECK(run({"generate", "--hierarchy", "3x", "--k", "1", "--n", "1"}).code == cli::Exit::domain_error);
    CHECK(run({"generate", "--hierarchy", "1x", "--k", "3", "--n", "2"}).code == cli::Exit::domain_error);
}

TEST_CASE("generate: -2x/3 seed") {
    Result r = run({"generate", "--hierarchy", "2x3", "--variant", "1", "--n", "0", "--k", "0", "--dir", "+"});
    REQUIRE(r.code == cli::Exit::ok);
    auto recs = lines(r.out);
    REQUIRE(recs.size() == 1);
    CHECK(io::ratfun_from_json(recs[0]["rho"]) == RatFun(P({"0", "-4/3", "0", "8/27"})));
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::Exit::parse_error);
    CHECK(run({"generate"}).code == cli::Exit::parse_error);
    CHECK(run({"frobnicate"}).code == cli::Exit::parse_error);
    CHECK(run({"generate", "--hierarchy", "2x", "--k", "two", "--n", "1"}).code == cli::Exit::parse_error);
    CHECK(run({"--help"}).code == cli::Exit::ok);
}

TEST_CASE("verify: valid, edited and malformed files") {
    Generated g = gen_2x(2, 3, false);
    std::string good = scratch("good.json", io::record(g.y).dump());
    Result r = run({"verify", "--input", good, "--kind", "p4"});
    CHECK(r.code == cli::Exit::ok);

    P4Solution bad = g.y;
    bad.b += 1;
    r = run({"verify", "--input", scratch("bad.json", io::record(bad).dump())});
    CHECK(r.code == cli::Exit::residual_nonzero);
    auto recs = lines(r.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["ok"] == false);
    CHECK(recs[0]["checks"][0]["residual"] != json::array());

    CHECK(run({"verify", "--input", scratch("broken.json", "{\"kind\": \"p4\", ")}).code == cli::Exit::parse_error);
    CHECK(run({"verify", "--input", scratch("nofield.json", "{\"kind\": \"p4\"}")}).code == cli::Exit::parse_error);
    CHECK(run({"verify", "--input", scratch("nosuch") + ".missing"}).code == cli::Exit::parse_error);
}

TEST_CASE("generate -> export -> verify round trip, with a mutation") {
    std::string gen = scratch("gen.jsonl");
    std::string canon = scratch("canon.jsonl");
    REQUIRE(run({"generate", "--hierarchy", "1x", "--upto", "3", "--out", gen}).code == cli::Exit::ok);
    REQUIRE(run({"export", "--input", gen, "--out", canon}).code == cli::Exit::ok);
    Result v = run({"verify", "--input", canon});
    CHECK(v.code == cli::Exit::ok);
    CHECK(lines(v.out).size() == 12);

    std::ifstream in(canon);
    std::string first;
    std::getline(in, first);
    json rec = json::parse(first);
    auto &num = rec["y"]["num"];
    for (auto &c : num)
        if (c != "0") {
            c = io::to_json(io::rat_from_json(c) + 1);
            break;
        }
    CHECK(run({"verify", "--input", scratch("mut.json", rec.dump())}).code == cli::Exit::residual_nonzero);
}

TEST_CASE("export: latex is exact") {
    std::string gen = scratch("latex.jsonl");
    REQUIRE(run({"generate", "--hierarchy", "2x", "--k", "2", "--n", "2", "--out", gen}).code == cli::Exit::ok);
    Result r = run({"export", "--input", gen, "--format", "latex"});
    CHECK(r.code == cli::Exit::ok);
    CHECK(r.out.find("\\rho(x) = \\frac{4x}{x^{2} + \\frac{1}{2}}") != std::string::npos);
    CHECK(r.out.find('.') == std::string::npos);
}

TEST_CASE("emitted multiplets and frames re-verify") {
    for (const char *emit : {"multiplet", "frame"}) {
        std::string f = scratch(std::string(emit) + ".jsonl");
        REQUIRE(run({"generate", "--hierarchy", "2x", "--upto", "3", "--emit", emit, "--out", f}).code == cli::Exit::ok);
        CHECK(run({"verify", "--input", f}).code == cli::Exit::ok);
    }
}

TEST_CASE("transform") {
    std::string m0 = multiplet_file("m0.json", rho0());
    json input = io::record(build_multiplet(rho0()), multiplet_vtriple(rho0()));

    Result r = run({"transform", "--input", m0, "--word", "pi pi pi"});
    REQUIRE(r.code == cli::Exit::ok);
    auto steps = lines(r.out);
    REQUIRE(steps.size() == 4);
    CHECK(steps.back()["f"] == input["f"]);
    CHECK(steps.back()["alpha"] == input["alpha"]);

    r = run({"transform", "--input", m0, "--word", "s1 s1"});
    REQUIRE(r.code == cli::Exit::ok);
    CHECK(lines(r.out).back()["f"] == input["f"]);

    Result sq = run({"transform", "--input", m0, "--word", "gk gk"});
    Result big = run({"transform", "--input", m0, "--word", "Gk"});
    REQUIRE(sq.code == cli::Exit::ok);
    REQUIRE(big.code == cli::Exit::ok);
    CHECK(lines(sq.out).back()["f"] == lines(big.out).back()["f"]);
    CHECK(lines(sq.out).back()["v"] == lines(big.out).back()["v"]);

    CHECK(run({"transform", "--input", m0, "--word", "g9"}).code == cli::Exit::parse_error);
}

TEST_CASE("transform: degenerate step reports its index") {
    SymMultiplet m{{RatFun(), RatFun(P({"0", "-2"})), RatFun()}, {0, -2, 0}};
    VTriple v = v_from_alphas(m.alpha);
    std::string f = scratch("degen.json", io::record(m, v).dump());
    Result r = run({"transform", "--input", f, "--word", "pi pi gk"});
    CHECK(r.code == cli::Exit::degenerate_step);
    CHECK(r.err.find("degenerate step 2") != std::string::npos);
    CHECK(run({"transform", "--input", f, "--word", "pi pi gk", "--boundary", "limit"}).code == cli::Exit::ok);
}

TEST_CASE("orbit and relations") {
    std::string m0 = multiplet_file("orbit.json", rho0());
    Result r = run({"orbit", "--input", m0, "--length", "2", "--letters", "g1 g2 g3 pi"});
    CHECK(r.code == cli::Exit::ok);
    CHECK(lines(r.out).size() == 1 + 4 + 16);

    r = run({"relations", "--input", m0});
    CHECK(r.code == cli::Exit::ok);
    CHECK(lines(r.out).at(0)["ok"] == true);
    CHECK(run({"relations", "--v", "1/3 -1/2 1/6"}).code == cli::Exit::ok);
    CHECK(run({"relations", "--v", "1 1 1"}).code == cli::Exit::domain_error);

    std::string m11 = multiplet_file("m11.json", gen_2x(1, 1, false).rho);
    CHECK(run({"relations", "--input", m11}).code == cli::Exit::degenerate_step);
    CHECK(run({"relations", "--input", m11, "--boundary", "limit"}).code == cli::Exit::ok);
}
