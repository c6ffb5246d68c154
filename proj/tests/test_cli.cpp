#include <doctest.h>

#include <sstream>

#include "holant/barvinok.hpp"
#include "holant/cli.hpp"
#include "holant/exact.hpp"
#include "holant/serialize.hpp"

using namespace holant;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    args.insert(args.begin(), "holant");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const std::uint64_t saved = budget();
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    set_budget(saved);
    return {code, out.str(), err.str()};
}

const std::string data = TEST_DATA_DIR;

}  // namespace

TEST_CASE("constants")
{
    const Result r = call({"constants"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    const ZeroFreeConstants c = zero_free_constants();
    CHECK(j["theta_star"].get<double>() == c.theta_star);
    CHECK(j["x_star"].get<double>() == c.x_star);
    CHECK(j["beta_star"].size() == 8);
    CHECK(j["beta_star"][0].get<double>() == c.beta_star(1));
}

TEST_CASE("exact with files and built-ins")
{
    const Result r = call({"exact", "--graph", data + "/tri.el", "--model", data + "/matching.json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["value"]["re"].get<double>() == 4.0);

    const Result b = call({"exact", "--edges", "3:0-1,1-2,2-0", "--model", "matching"});
    CHECK(json::parse(b.out)["value"]["re"].get<double>() == 4.0);

    const Result v = call({"exact", "--edges", "3:0-1,1-2,2-0", "--model",
                           data + "/vertex_model.json"});
    CHECK(v.code == 0);

    const Result text = call({"exact", "--family", "cycle:4", "--model", "matching", "--format",
                              "text"});
    CHECK(text.out.find("value: 7\n") != std::string::npos);
}

TEST_CASE("approx output is the serialized certificate")
{
    const Result r = call({"approx", "--family", "cycle:8", "--model", "ones+uniform:0.05:3",
                           "--eps", "1e-3"});
    REQUIRE(r.code == 0);
    const Multigraph g = generate(parse_family("cycle:8"));
    const auto h = builtin_model("ones+uniform:0.05:3", 2, 2);
    const std::string want =
        certificate_to_json(approx_partition(g, h, 1e-3, ApproxMode::Multiplicative)).dump() + "\n";
    CHECK(r.out == want);
    CHECK(json::parse(r.out)["q0"].get<double>() < 1.0);

    const Result add = call({"approx", "--family", "cycle:8", "--model", "ones", "--mode", "add"});
    CHECK(json::parse(add.out)["M"].is_null());
}

TEST_CASE("other subcommands")
{
    const Result t = call({"tutte", "--edges", "2:0-1", "--q", "10", "--v", "1"});
    CHECK(json::parse(t.out)["value"]["re"].get<double>() == 110.0);

    const Result e = call({"exptype", "--edges", "2:0-1", "--x", "10", "--estimate-radius"});
    REQUIRE(e.code == 0);
    const json je = json::parse(e.out);
    CHECK(je["heuristic_radius"].get<bool>());
    CHECK(std::abs(je["value"]["re"].get<double>() / 110.0 - 1.0) < 2e-3);

    const Result ro = call({"roots", "--family", "cycle:4", "--model", "ones+uniform:0.05:2"});
    REQUIRE(ro.code == 0);
    CHECK(json::parse(ro.out)["roots"].size() == 4);

    const Result lp = call({"limits", "--family", "cycle:5", "--model", "ones+uniform:0.05:2",
                            "--log-potential"});
    REQUIRE(lp.code == 0);
    CHECK(json::parse(lp.out)["discrepancy"].get<double>() < 1e-7);

    const Result run = call({"limits", "--family", "cycle:50,cycle:100,cycle:150,cycle:200",
                             "--model", "ones"});
    REQUIRE(run.code == 0);
    const json jr = json::parse(run.out);
    CHECK(jr["cauchy"].get<bool>());
    CHECK(jr["sizes"].size() == 4);

    const Result rc = call({"region-check", "--family", "cycle:5", "--model",
                            "ones+uniform:0.05:2", "--samples", "20"});
    REQUIRE(rc.code == 0);
    CHECK(json::parse(rc.out)["zero_free"]["bound_violations"].get<int>() == 0);
}

TEST_CASE("exit codes")
{
    CHECK(call({"exact", "--edges", "3:0-1", "--bogus"}).code == 3);
    CHECK(call({"exact", "--edges", "3:0-9"}).code == 3);
    CHECK(call({"exact", "--edges", "3:0-1", "--model", "nonsense"}).code == 3);
    CHECK(call({"exact", "--graph", data + "/tri.el", "--edges", "2:0-1"}).code == 3);
    CHECK(call({"exact", "--family", "torus2d:4x4", "--budget", "1000"}).code == 2);
    CHECK(call({"approx", "--family", "cycle:6", "--model", "ones+uniform:0.5:1"}).code == 1);
    CHECK(call({"region-check", "--family", "cycle:6", "--model", "ones+uniform:0.5:1"}).code == 1);
    CHECK(call({"exptype", "--edges", "2:0-1", "--x", "10"}).code == 1);
    CHECK(call({}).code == 3);
}

TEST_CASE("selftest passes")
{
    const Result r = call({"selftest"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["passed"].get<bool>());
}
