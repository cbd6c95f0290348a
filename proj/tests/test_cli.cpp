#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "schurforge/cli.hpp"

using namespace schurforge;
using nlohmann::json;

namespace {

const char* kDiagSwap = R"({"presentation":{"generators":["t1","t2"],"relations":[]},"field":"Q","n":2,
  "images":{"t1":[[1,0],[0,2]],"t2":[[0,1],[1,0]]}})";

const char* kQuaternionicPair = R"({"presentation":{"generators":["t1","t2"],"relations":[]},"field":{"quadratic":-1},"n":2,
  "images":{"t1":[[{"a":0,"b":1},0],[0,{"a":0,"b":-1}]],"t2":[[0,1],[-1,0]]}})";

const char* kSingleI = R"({"presentation":{"generators":["t"],"relations":[]},"field":{"quadratic":-1},"n":2,
  "images":{"t":[[{"a":0,"b":1},0],[0,{"a":0,"b":-1}]]}})";

const char* kA2 = R"({"quiver":{"vertices":2,"arrows":[{"src":0,"dst":1}]},"field":"Q","dims":[1,1],"maps":[[[1]]]})";

json run_ok(const std::string& command, const std::string& input, const JobOptions& options = {}) {
    const auto result = run_job(command, input, options);
    INFO(command << ": " << result.diagnostics);
    REQUIRE(result.exit_code == kExitComputed);
    CHECK(result.diagnostics.empty());
    const auto doc = json::parse(result.output);
    CHECK(doc["schema"] == kSchemaTag);
    CHECK(doc["command"] == command);
    CHECK(doc["version"] == version());
    CHECK(doc.contains("bounds"));
    return doc;
}

json run_fail(const std::string& command, const std::string& input, int expected_exit, const JobOptions& options = {}) {
    const auto result = run_job(command, input, options);
    INFO(command << " <- " << input);
    CHECK(result.exit_code == expected_exit);
    CHECK(result.output.empty());
    json doc;
    REQUIRE_NOTHROW(doc = json::parse(result.diagnostics));
    CHECK(doc["schema"] == kSchemaTag);
    CHECK(doc["error"].is_string());
    CHECK(doc["message"].is_string());
    return doc;
}

struct Process {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Process run_binary(const std::string& args, const std::string& stdin_text) {
    const auto dir = std::filesystem::temp_directory_path() / ("sf_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "in.json") << stdin_text;
    }
    const std::string cmd = std::string("'") + SF_CLI_PATH + "' " + args + " < '" + (dir / "in.json").string() + "' > '" +
                            (dir / "out").string() + "' 2> '" + (dir / "err").string() + "'";
    const int status = std::system(cmd.c_str());
    Process p{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(dir / "out"), slurp(dir / "err")};
    std::filesystem::remove_all(dir);
    return p;
}

}  // namespace

TEST_CASE("schur on the diagonal and swap representation") {
    const auto doc = run_ok("schur", kDiagSwap);
    CHECK(doc["schur"] == true);
    CHECK(doc["commutant_dim"] == 1);
}

TEST_CASE("demo-quadratic and hilbert examples") {
    CHECK(run_ok("demo-quadratic", R"({"lambda":"3","mode":"real-sign"})")["origin"] == true);
    CHECK(run_ok("demo-quadratic", R"({"lambda":1,"mode":"real-sign"})")["origin"] == false);
    CHECK(run_ok("demo-quadratic", R"({"lambda":"5/2","mode":"rational-square"})")["origin"] == true);
    CHECK(run_ok("demo-quadratic", R"({"lambda":"-3"})")["origin"] == true);
    run_fail("demo-quadratic", R"({"lambda":"2"})", kExitInvalidInput);
    CHECK(run_ok("hilbert", R"({"a":"-1","b":"-1","place":"inf"})")["symbol"] == -1);
    CHECK(run_ok("hilbert", R"({"a":2,"b":3,"place":3})")["symbol"] == -1);
    const auto all = run_ok("hilbert", R"({"a":"-1","b":"-1"})");
    CHECK(all.contains("symbols"));
}

TEST_CASE("every command runs") {
    CHECK(run_ok("schur", kA2, JobOptions{0, {}, true})["schur"] == true);
    CHECK(run_ok("endo", kDiagSwap)["dim"] == 1);
    CHECK(run_ok("simple", kDiagSwap)["absolutely_simple"] == true);
    const auto it = run_ok("intertwine", std::string(R"({"source":)") + kDiagSwap + R"(,"target":)" + kDiagSwap + "}");
    CHECK(it["isomorphic"] == true);
    const auto quat = run_ok("quaternion", R"({"a":-1,"b":-1,"elements":[["1","1","1","1"]]})");
    CHECK(quat["elements"][0]["norm"] == "4");
    CHECK(quat["split"] == false);
    const auto split = run_ok("split", R"({"a":"-1","b":"-1"})");
    CHECK(split["split"] == false);
    CHECK(split["ramified"].size() == 2);
    const auto origin = run_ok("origin", kQuaternionicPair);
    CHECK(origin["origin"] == false);
    CHECK(origin["class"]["a"] == "-1");
    CHECK(origin["class"]["b"] == "-1");
    CHECK(origin["witness"]["kind"] == "twist");
    const auto single = run_ok("origin", kSingleI);
    CHECK(single["origin"] == true);
    CHECK(single["witness"]["kind"] == "descent");
    const auto twist = run_ok("twist", std::string(R"({"rep":)") + kQuaternionicPair + "}");
    CHECK(twist["reembedding_matches"] == true);
    CHECK(twist["twisted_schur"] == true);
    const auto descend = run_ok("descend", std::string(R"({"rep":)") + kSingleI +
                                               R"(,"cocycle":{"d":-1,"S":[[0,1],[1,0]]},"c":1})");
    CHECK(descend["rep"]["field"] == "Q");
    const auto q2r = run_ok("quiver2rep", kA2);
    CHECK(q2r["right_ideal_dims"] == json::array({2, 2}));
    CHECK(q2r["schur"] == true);
    const auto back = run_ok("quiver2rep", std::string(R"({"quiver":{"vertices":2,"arrows":[{"src":0,"dst":1}]},)") +
                                               R"("field":"Q","n":2,"images":{"e0":[[1,0],[0,0]],"e1":[[0,0],[0,1]],"f0":[[0,0],[1,0]]}})");
    CHECK(back["quiver_rep"]["dims"] == json::array({1, 1}));
}

TEST_CASE("descend reports a missing norm") {
    const auto doc = run_fail("descend", std::string(R"({"rep":)") + kQuaternionicPair + "}", kExitInvalidInput);
    CHECK(doc["error"] == "NotSplit");
    const auto mismatch = run_fail("descend", std::string(R"({"rep":)") + kQuaternionicPair +
                                                  R"(,"cocycle":{"d":-1,"S":[[0,1],[-1,0]]},"c":1})",
                                   kExitInvalidInput);
    CHECK(mismatch["error"] == "NormMismatch");
}

TEST_CASE("reports embed seed and bounds and are deterministic") {
    JobOptions options;
    options.seed = 17;
    options.bounds.norm_search = 50;
    options.bounds.factor = 5000;
    const auto doc = run_ok("origin", kQuaternionicPair, options);
    CHECK(doc["seed"] == 17);
    CHECK(doc["bounds"]["norm_search"] == 50);
    CHECK(doc["bounds"]["factor"] == 5000);
    for (const auto& [cmd, input] : std::vector<std::pair<std::string, std::string>>{
             {"origin", kQuaternionicPair}, {"origin", kSingleI}, {"twist", std::string(R"({"rep":)") + kQuaternionicPair + "}"},
             {"endo", kDiagSwap}, {"quiver2rep", kA2}}) {
        const auto first = run_job(cmd, input, options);
        for (int k = 0; k < 3; ++k) CHECK(run_job(cmd, input, options).output == first.output);
    }
}

TEST_CASE("budget exhaustion exits with code 3") {
    JobOptions tiny;
    tiny.bounds.norm_search = 0;
    const auto rational_in_gauss = R"({"presentation":{"generators":["t1","t2"],"relations":[]},"field":{"quadratic":-1},"n":2,
      "images":{"t1":[[1,0],[0,2]],"t2":[[0,1],[1,0]]}})";
    CHECK(run_fail("origin", rational_in_gauss, kExitBudgetExhausted, tiny)["error"] == "BudgetExhausted");
    JobOptions small_factor;
    small_factor.bounds.factor = 10;
    CHECK(run_fail("hilbert", R"({"a":"1000003","b":"-1","place":"inf"})", kExitBudgetExhausted, small_factor)["error"] ==
          "FactorizationTooLarge");
}

TEST_CASE("malformed inputs give structured errors with pointers") {
    struct Case {
        std::string command;
        std::string input;
        std::string error;
        std::string pointer;
    };
    const std::vector<Case> corpus{
        {"schur", "{", "ParseError", ""},
        {"schur", "[]", "SchemaError", ""},
        {"schur", "42", "SchemaError", ""},
        {"schur", R"({"schema":"schur-forge/2","field":"Q"})", "SchemaError", "/schema"},
        {"schur", R"({"field":"Q","n":2,"images":{}})", "SchemaError", ""},
        {"schur", R"({"presentation":{"generators":["t"],"relations":[]},"field":"R","n":1,"images":{"t":[[1]]}})",
         "SchemaError", "/field"},
        {"schur", R"({"presentation":{"generators":["t"],"relations":[]},"field":"Q","n":0,"images":{"t":[]}})",
         "SchemaError", "/n"},
        {"schur", R"({"presentation":{"generators":["t"],"relations":[]},"field":"Q","n":1,"images":{"t":[[1]],"u":[[1]]}})",
         "SchemaError", "/images/u"},
        {"schur", R"({"presentation":{"generators":["t"],"relations":[]},"field":"Q","n":2,"images":{"t":[[1,"x"],[0,1]]}})",
         "SchemaError", "/images/t/0/1"},
        {"schur", R"({"presentation":{"generators":["t"],"relations":[]},"field":"Q","n":2,"images":{"t":[[1,"1/0"],[0,1]]}})",
         "SchemaError", "/images/t/0/1"},
        {"schur", R"({"presentation":{"generators":["t"],"relations":[]},"field":"Q","n":2,"images":{"t":[[1,2,3],[0,1]]}})",
         "SchemaError", "/images/t/0"},
        {"schur",
         R"({"presentation":{"generators":["t"],"relations":[{"terms":[{"coeff":"1","word":[3]}]}]},"field":"Q","n":1,"images":{"t":[[1]]}})",
         "SchemaError", "/presentation/relations/0/terms/0/word/0"},
        {"schur", R"({"quiver":{"vertices":2,"arrows":[{"src":0,"dst":5}]},"field":"Q","dims":[1,1],"maps":[[[1]]]})",
         "SchemaError", "/quiver/arrows/0/dst"},
        {"hilbert", R"({"a":"0","b":"1"})", "SchemaError", "/a"},
        {"hilbert", R"({"a":"1","b":"2","place":"4"})", "SchemaError", "/place"},
        {"hilbert", R"({"a":"1"})", "SchemaError", "/b"},
        {"quaternion", R"({"a":1,"b":{"x":1}})", "SchemaError", "/b"},
        {"quaternion", R"({"a":1,"b":1,"elements":[[1,2,3]]})", "SchemaError", "/elements/0"},
        {"demo-quadratic", R"({"lambda":"3","mode":"imaginary"})", "SchemaError", "/mode"},
        {"intertwine", R"({"source":{}})", "SchemaError", "/source/presentation"},
        {"intertwine", std::string(R"({"source":)") + kDiagSwap + "}", "SchemaError", "/target"},
        {"origin", std::string(kDiagSwap), "SchemaError", "/field"},
        {"twist", R"({"rep":{"presentation":{"generators":[],"relations":[]},"field":{"quadratic":4},"n":1,"images":{}}})",
         "SchemaError", "/rep/field/quadratic"},
    };
    for (const auto& c : corpus) {
        const auto doc = run_fail(c.command, c.input, kExitInvalidInput);
        INFO(c.command << " <- " << c.input << " => " << doc.dump());
        CHECK(doc["error"] == c.error);
        if (!c.pointer.empty()) {
            REQUIRE(doc.contains("pointer"));
            CHECK(doc["pointer"] == c.pointer);
        }
    }
    CHECK(run_fail("nonsense", "{}", kExitInvalidInput)["error"] == "UnknownCommand");
}

TEST_CASE("truncations of valid documents never crash") {
    const std::vector<std::pair<std::string, std::string>> seeds{
        {"schur", kDiagSwap}, {"origin", kQuaternionicPair}, {"quiver2rep", kA2}};
    for (const auto& [cmd, text] : seeds) {
        for (std::size_t cut = 0; cut < text.size(); cut += 3) {
            const auto result = run_job(cmd, text.substr(0, cut));
            CHECK(result.exit_code == kExitInvalidInput);
            CHECK_NOTHROW((void)json::parse(result.diagnostics));
        }
        // Replace each value-ish character with garbage.
        for (std::size_t pos = 0; pos < text.size(); ++pos) {
            if (text[pos] < '0' || text[pos] > '9') continue;
            auto mutated = text;
            mutated[pos] = 'z';
            const auto result = run_job(cmd, mutated);
            CHECK((result.exit_code == kExitInvalidInput || result.exit_code == kExitComputed));
            if (result.exit_code != kExitComputed) CHECK_NOTHROW((void)json::parse(result.diagnostics));
        }
    }
}

TEST_CASE("executable: streams and exit codes") {
    const auto ok = run_binary("schur --seed 3", kDiagSwap);
    CHECK(ok.exit_code == 0);
    CHECK(ok.err.empty());
    const auto doc = json::parse(ok.out);
    CHECK(doc["schur"] == true);
    CHECK(doc["seed"] == 3);
    CHECK(run_binary("schur --seed 3", kDiagSwap).out == ok.out);

    const auto bad = run_binary("schur", R"({"presentation":{"generators":["t"],"relations":[]},"field":"Q","n":2,"images":{"t":[[1,"x"],[0,1]]}})");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.empty());
    CHECK(json::parse(bad.err)["pointer"] == "/images/t/0/1");

    const auto budget = run_binary("hilbert --bound-factor 10", R"({"a":"1000003","b":"-1","place":"inf"})");
    CHECK(budget.exit_code == 3);
    CHECK(json::parse(budget.err)["error"] == "FactorizationTooLarge");

    const auto usage = run_binary("frobnicate", "{}");
    CHECK(usage.exit_code == 2);
    CHECK(json::parse(usage.err)["error"] == "UsageError");

    const auto quiver = run_binary("schur --quiver", kA2);
    CHECK(quiver.exit_code == 0);
    CHECK(json::parse(quiver.out)["schur"] == true);

    const auto flags = run_binary("origin --bound-norm-search 7 --bound-factor 1000", kQuaternionicPair);
    CHECK(flags.exit_code == 0);
    CHECK(json::parse(flags.out)["bounds"] == json{{"norm_search", 7}, {"factor", 1000}});
    CHECK(run_binary("origin --bound-norm-search 0", kQuaternionicPair).exit_code == 2);
}
