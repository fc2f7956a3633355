#include "qtensor/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using qtensor::run_cli;

namespace {

std::string data_file(const std::string& name) {
    return std::string(QTENSOR_SOURCE_DIR) + "/data/" + name;
}

struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& contents, const std::string& ext = ".qdl") {
        static std::atomic<int> counter{0};
        path = std::filesystem::temp_directory_path() /
               ("qtensor_cli_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++) + ext);
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    std::string str() const { return path.string(); }
};

struct Run {
    int exit;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("check accepts the bundled tables") {
    const Run r3 = run({"check", data_file("r3.qdl")});
    CHECK(r3.exit == 0);
    CHECK(r3.out == "valid quandle, order 3\n");
    CHECK(r3.err.empty());

    const Run r4 = run({"check", data_file("r4_shift.qdl")});
    CHECK(r4.exit == 0);
    CHECK(r4.out == "valid quandle, order 4\ngood involution present\n");
}

TEST_CASE("check emits a machine document on request") {
    const Run r = run({"check", data_file("r4_shift.qdl"), "--format", "json"});
    REQUIRE(r.exit == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["valid"] == true);
    CHECK(doc["n"] == 4);
    CHECK(doc["involution"] == std::vector<int>{2, 3, 0, 1});
    CHECK(doc["table"][1] == std::vector<int>{3, 1, 3, 1});
}

TEST_CASE("check rejects broken tables with the right exit codes") {
    const TempFile empty("quandle\nn 0\ntable\n");
    const Run zero = run({"check", empty.str()});
    CHECK(zero.exit == 2);
    CHECK(zero.err.find("carrier size must be positive") != std::string::npos);

    const TempFile bad_axiom("quandle\nn 2\ntable\n0 0\n0 0\n");
    const Run axiom = run({"check", bad_axiom.str()});
    CHECK(axiom.exit == 1);
    CHECK(axiom.err.find("error:") == 0);

    const Run missing = run({"check", "/nonexistent/x.qdl"});
    CHECK(missing.exit == 2);
    CHECK(missing.err.find("cannot open file") != std::string::npos);
}

TEST_CASE("tensor prints classes with dihedral labels and quotients") {
    const Run r = run({"tensor", data_file("r3.qdl"), "--quotient", "tau"});
    REQUIRE(r.exit == 0);
    CHECK(r.out ==
          "quandle order 3\n"
          "classes 2\n"
          "  0  E(0)  {(0, 0), (1, 1), (2, 2)}\n"
          "  1  E(1)  {(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)}\n"
          "quotient tau  blocks 2\n"
          "  0  {E(0)}\n"
          "  1  {E(1)}\n");
}

TEST_CASE("tensor json carries the fixed document fields") {
    const Run r = run({"tensor", data_file("r4_shift.qdl"), "--quotient", "tau",
                       "--quotient", "tau,rho", "--format", "json"});
    REQUIRE(r.exit == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["n"] == 4);
    CHECK(doc["counts"]["classes"] == 6);
    CHECK(doc["counts"]["tau"] == 5);
    CHECK(doc["counts"]["tau,rho"] == 5);
    CHECK(doc["classes"].size() == 6);
    CHECK(doc["reps"][0] == std::vector<int>{0, 0});
    CHECK(doc["tau"].size() == 6);
    // x -> x + 2 preserves distance and parity, so it fixes every class.
    CHECK(doc["rho"] == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(doc["quotients"]["tau"].size() == 5);
}

TEST_CASE("rho quotients need an involution from the file or the flag") {
    const Run bare = run({"tensor", data_file("r3.qdl"), "--quotient", "rho"});
    CHECK(bare.exit == 1);
    CHECK(bare.err.find("needs an involution") != std::string::npos);

    const Run inline_rho = run({"tensor", data_file("r3.qdl"), "--quotient", "rho",
                                "--rho", "0,1,2", "--format", "json"});
    REQUIRE(inline_rho.exit == 0);
    const auto doc = nlohmann::json::parse(inline_rho.out);
    CHECK(doc["counts"]["rho"] == 2);
    CHECK(doc["rho"] == std::vector<int>{0, 1});

    const Run from_file =
        run({"tensor", data_file("r4_shift.qdl"), "--quotient", "rho"});
    CHECK(from_file.exit == 0);

    const Run bad_value = run({"tensor", data_file("r3.qdl"), "--quotient", "rho",
                               "--rho", "0,banana,2"});
    CHECK(bad_value.exit == 2);

    const Run not_good =
        run({"tensor", data_file("r3.qdl"), "--quotient", "rho", "--rho", "1,0,2"});
    CHECK(not_good.exit == 1);
}

TEST_CASE("unknown quotient selectors are usage errors") {
    const Run r = run({"tensor", data_file("r3.qdl"), "--quotient", "sigma"});
    CHECK(r.exit == 2);
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("reports are byte deterministic across runs") {
    const std::vector<std::string> tensor_args = {
        "tensor", data_file("r4_shift.qdl"), "--quotient", "tau,rho", "--format",
        "json"};
    CHECK(run(tensor_args).out == run(tensor_args).out);

    const std::vector<std::string> verify_args = {"dihedral-verify", "--max", "5",
                                                  "--format", "json"};
    CHECK(run(verify_args).out == run(verify_args).out);

    const std::vector<std::string> handles_args = {"handles", data_file("r5.qdl")};
    CHECK(run(handles_args).out == run(handles_args).out);
}

TEST_CASE("double output re-ingests through check, involution included") {
    const Run doubled = run({"double", data_file("r3.qdl")});
    REQUIRE(doubled.exit == 0);
    const TempFile file(doubled.out);
    const Run checked = run({"check", file.str()});
    CHECK(checked.exit == 0);
    CHECK(checked.out == "valid quandle, order 6\ngood involution present\n");

    const Run as_json = run({"double", data_file("r3.qdl"), "--format", "json"});
    REQUIRE(as_json.exit == 0);
    const auto doc = nlohmann::json::parse(as_json.out);
    CHECK(doc["n"] == 6);
    CHECK(doc["involution"] == std::vector<int>{3, 4, 5, 0, 1, 2});
}

TEST_CASE("components splits an even dihedral carrier into parities") {
    const TempFile r6(
        "quandle\nn 6\ntable\n"
        "0 2 4 0 2 4\n5 1 3 5 1 3\n4 0 2 4 0 2\n3 5 1 3 5 1\n2 4 0 2 4 0\n1 3 5 1 3 5\n");
    const Run text = run({"components", r6.str()});
    REQUIRE(text.exit == 0);
    CHECK(text.out == "components 2\n  0  {0, 2, 4}\n  1  {1, 3, 5}\n");

    const Run doc_run = run({"components", r6.str(), "--format", "json"});
    const auto doc = nlohmann::json::parse(doc_run.out);
    CHECK(doc["components"].size() == 2);
    CHECK(doc["components"][1] == std::vector<int>{1, 3, 5});
}

TEST_CASE("dihedral-verify sweeps and reports every comparison") {
    const Run text = run({"dihedral-verify", "--max", "8"});
    CHECK(text.exit == 0);
    CHECK(text.out.find("n 8  ok") != std::string::npos);
    CHECK(text.out.rfind("all comparisons ok\n") == text.out.size() - 19);

    const Run doc_run =
        run({"dihedral-verify", "--max", "4", "--skip-doubles", "--format", "json"});
    REQUIRE(doc_run.exit == 0);
    const auto doc = nlohmann::json::parse(doc_run.out);
    REQUIRE(doc.size() == 4);
    for (const auto& item : doc) {
        CHECK(item["ok"] == true);
        CHECK(item["entries"].size() == 4);
    }
    CHECK(doc[1].contains("notes")); // n = 2 sits below the formulas' range
    CHECK(!doc[2].contains("notes"));
}

TEST_CASE("homs enumerates assignments with text and json output") {
    const Run into_r5 = run({"homs", data_file("twist_spun_t25.qpres"),
                             data_file("r5.qdl"), "--format", "json"});
    REQUIRE(into_r5.exit == 0);
    const auto doc = nlohmann::json::parse(into_r5.out);
    CHECK(doc["count"] == 25);
    CHECK(doc["generators"] == std::vector<std::string>{"a", "b"});
    CHECK(doc["assignments"].size() == 25);
    CHECK(doc["assignments"][1] == std::vector<int>{0, 1});

    const Run into_r3 =
        run({"homs", data_file("twist_spun_t25.qpres"), data_file("r3.qdl")});
    REQUIRE(into_r3.exit == 0);
    CHECK(into_r3.out ==
          "homs 3\n  a=0 b=0\n  a=1 b=1\n  a=2 b=2\n");

    const Run capped = run({"homs", data_file("twist_spun_t25.qpres"),
                            data_file("r5.qdl"), "--cap", "3"});
    CHECK(capped.exit == 2);
    CHECK(capped.err.find("exceeds cap") != std::string::npos);
}

TEST_CASE("invariant reports where a word pair lands") {
    const std::vector<std::string> base = {"invariant", data_file("twist_spun_t25.qpres"),
                                           data_file("r5.qdl"), "--assign", "a=0,b=1",
                                           "--pair", "a", "b"};
    const Run strong = run(base);
    REQUIRE(strong.exit == 0);
    CHECK(strong.out ==
          "kind strong\nevaluated (0, 1)\nindex 1\nlabel E(1)\nreps {(0, 1)}\n");

    auto weak_args = base;
    weak_args.insert(weak_args.end(), {"--kind", "weak", "--format", "json"});
    const Run weak = run(weak_args);
    REQUIRE(weak.exit == 0);
    const auto doc = nlohmann::json::parse(weak.out);
    CHECK(doc["kind"] == "weak");
    CHECK(doc["evaluated"] == std::vector<int>{0, 1});
    CHECK(doc["index"] == 1);
    CHECK(doc["label"] == "{E(1)}");
    CHECK(doc["class_reps"] == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("invariant validates its flags and assignment") {
    const std::string pres = data_file("twist_spun_t25.qpres");
    const std::string qdl = data_file("r5.qdl");
    CHECK(run({"invariant", pres, qdl, "--pair", "a", "b"}).exit == 2); // no --assign
    CHECK(run({"invariant", pres, qdl, "--assign", "a=0,b=1", "--pair", "a"}).exit ==
          2); // one word
    CHECK(run({"invariant", pres, qdl, "--assign", "a=0,c=1", "--pair", "a", "b"})
              .exit == 2);
    CHECK(run({"invariant", pres, qdl, "--assign", "a=0", "--pair", "a", "b"}).exit ==
          2);
    CHECK(run({"invariant", pres, qdl, "--assign", "a=0,a=1", "--pair", "a", "b"})
              .exit == 2);
    CHECK(run({"invariant", pres, qdl, "--assign", "a=0,b=9", "--pair", "a", "b"})
              .exit == 1); // out of range image
    CHECK(run({"invariant", pres, qdl, "--assign", "a=0,b=1", "--pair", "a", "b c"})
              .exit == 2); // malformed word
    const Run diag = run({"invariant", pres, data_file("r3.qdl"), "--assign",
                          "a=0,b=1", "--pair", "a", "b"});
    CHECK(diag.exit == 1); // not a hom into the order-3 table
    CHECK(diag.err.find("does not satisfy") != std::string::npos);
}

TEST_CASE("handles mirrors the four 1-handle counts") {
    const Run oriented = run({"handles", data_file("r5.qdl")});
    REQUIRE(oriented.exit == 0);
    CHECK(oriented.out.find("strong all 12\n") == 0);
    CHECK(oriented.out.find("weak all 6\n") != std::string::npos);
    CHECK(oriented.out.find("strong oriented 3\n") != std::string::npos);
    CHECK(oriented.out.find("weak oriented 3\n") != std::string::npos);

    // An explicit involution switches to the all-handles view only.
    const Run with_rho = run({"handles", data_file("r4_shift.qdl")});
    REQUIRE(with_rho.exit == 0);
    CHECK(with_rho.out.find("strong all 6\n") == 0);
    CHECK(with_rho.out.find("oriented") == std::string::npos);

    const Run projective =
        run({"handles", data_file("r5.qdl"), "--rho", "0,1,2,3,4", "--format", "json"});
    REQUIRE(projective.exit == 0);
    const auto doc = nlohmann::json::parse(projective.out);
    CHECK(doc["counts"]["strong_all"] == 3);
    CHECK(doc["counts"]["weak_all"] == 3);
    CHECK(!doc["counts"].contains("strong_oriented"));
    CHECK(!doc.contains("oriented"));
    CHECK(doc["all"]["counts"]["tau,rho"] == 3);
}

TEST_CASE("help and usage behave like a conventional tool") {
    const Run help = run({"--help"});
    CHECK(help.exit == 0);
    CHECK(help.out.find("Usage:") != std::string::npos);

    const Run none = run({});
    CHECK(none.exit == 2);

    const Run unknown = run({"frobnicate"});
    CHECK(unknown.exit == 2);
}
