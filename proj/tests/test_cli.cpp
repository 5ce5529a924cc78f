#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

const std::string kBin = std::string(TAVG_BIN_DIR) + "/tavg";
const std::string kRoot = TAVG_REPO_ROOT;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = kBin + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// ---------------------------------------------------------------------------
// Just enough of JSON Schema to check the shipped report schema: type
// (single or union), required, properties, items, enum.

bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    return false;
}

void validate(const json& value, const json& schema, const std::string& where,
              std::vector<std::string>& errors) {
    if (schema.contains("type")) {
        const json& t = schema.at("type");
        bool ok = t.is_string() ? type_matches(value, t.get<std::string>()) : [&] {
            for (const auto& option : t)
                if (type_matches(value, option.get<std::string>())) return true;
            return false;
        }();
        if (!ok) {
            errors.push_back(where + ": type mismatch");
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& option : schema.at("enum"))
            if (option == value) ok = true;
        if (!ok) errors.push_back(where + ": not in enum");
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!value.contains(key.get<std::string>()))
                    errors.push_back(where + ": missing required " + key.get<std::string>());
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema.at("properties").items())
                if (value.contains(key)) validate(value.at(key), sub, where + "." + key, errors);
    }
    if (value.is_array() && schema.contains("items")) {
        int i = 0;
        for (const auto& element : value)
            validate(element, schema.at("items"), where + "[" + std::to_string(i++) + "]", errors);
    }
}

json load_schema() {
    std::ifstream in(kRoot + "/schemas/run_report.schema.json");
    REQUIRE(in.good());
    return json::parse(in);
}

void require_valid_report(const json& report) {
    static const json schema = load_schema();
    std::vector<std::string> errors;
    validate(report, schema, "$", errors);
    for (const auto& e : errors) FAIL_CHECK(e);
    CHECK(errors.empty());
}

std::string write_temp_spec(const std::string& name, const json& spec) {
    std::string path = "/tmp/tavg_test_" + name + ".json";
    std::ofstream out(path);
    out << spec.dump();
    return path;
}

}  // namespace

TEST_CASE("average: unit step coefficients give value 1, exit 0") {
    RunResult r = run("average --z --num 0,1 --den -1,1");
    CHECK(r.exit_code == 0);
    json report = json::parse(r.out);
    require_valid_report(report);
    CHECK(report["verdict"]["applicability"] == "Applicable");
    CHECK(std::abs(report["verdict"]["value"].get<double>() - 1.0) <= 1e-12);
}

TEST_CASE("average: constant-numerator forms behave like their signals") {
    // 1/(z-1) is the delayed step: still average 1, exit 0.
    RunResult r = run("average --z --num 1,0 --den -1,1");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(json::parse(r.out)["verdict"]["value"].get<double>() - 1.0) <= 1e-12);

    // 1/(z-2) has its pole outside the disk: FormalOnly, exit 2.
    RunResult g = run("average --z --num 1,0 --den -2,1");
    CHECK(g.exit_code == 2);
    CHECK(json::parse(g.out)["verdict"]["applicability"] == "FormalOnly");
}

TEST_CASE("average: growth case exits 2 with no value") {
    RunResult r = run("average --z --num 0,1 --den -2,1");
    CHECK(r.exit_code == 2);
    json report = json::parse(r.out);
    require_valid_report(report);
    CHECK(report["verdict"]["applicability"] == "FormalOnly");
    CHECK(report["verdict"]["value"].is_null());
}

TEST_CASE("average: ramp exits 3") {
    RunResult r = run("average --z --num 0,1 --den 1,-2,1");
    CHECK(r.exit_code == 3);
    json report = json::parse(r.out);
    require_valid_report(report);
    CHECK(report["verdict"]["applicability"] == "Divergent");
}

TEST_CASE("average: parse errors exit 1") {
    CHECK(run("average --z --num 1,x --den -1,1").exit_code == 1);
    CHECK(run("average --num 1 --den 1").exit_code == 1);          // missing domain flag
    CHECK(run("average --z --num 1").exit_code == 1);              // missing --den
    CHECK(run("average --s --spec " + kRoot + "/corpus/step_discrete.json").exit_code == 1);
    CHECK(run("bogus-subcommand").exit_code == 1);
    // s-domain oracle needs a spec: there is no rational inversion there.
    CHECK(run("average --s --num 1 --den 0,1 --oracle 1000").exit_code == 1);
    // trace horizon precondition.
    CHECK(run("trace --spec " + kRoot + "/corpus/alternating.json --horizon 1 --out /tmp/t.csv")
              .exit_code == 1);
}

TEST_CASE("average: spec with oracle cross-check") {
    RunResult r =
        run("average --z --spec " + kRoot + "/corpus/cosine_w0_1p047.json --oracle 100000");
    CHECK(r.exit_code == 0);
    json report = json::parse(r.out);
    require_valid_report(report);
    CHECK(std::abs(report["verdict"]["value"].get<double>()) <= 1e-9);
    REQUIRE(!report["agreement"].is_null());
    CHECK(report["agreement"]["within_tolerance"] == true);
    CHECK(report["agreement"]["difference"].get<double>() <= 1e-3);
    CHECK(report["oracle"]["converged"] == true);
}

TEST_CASE("average: agreement appears exactly when value and oracle are both present") {
    // FormalOnly + oracle: no value, so no agreement block.
    RunResult r = run("average --z --num 0,1 --den -2,1 --oracle 64");
    json report = json::parse(r.out);
    require_valid_report(report);
    CHECK(!report["oracle"].is_null());
    CHECK(report["agreement"].is_null());
    CHECK(report["oracle"]["converged"] == false);
}

TEST_CASE("average: spec route and coefficient route agree") {
    // cos with w0 = 2pi collapses to the step; its cleared transform is
    // (z^2 - z)/(z^2 - 2z + 1).
    RunResult via_spec = run("average --z --spec " + kRoot + "/corpus/cosine_w0_2pi.json");
    RunResult via_coeffs = run("average --z --num 0,-1,1 --den 1,-2,1");
    json a = json::parse(via_spec.out);
    json b = json::parse(via_coeffs.out);
    CHECK(std::abs(a["verdict"]["value"].get<double>() - b["verdict"]["value"].get<double>()) <=
          1e-9);
}

TEST_CASE("system: worked example and exit codes") {
    RunResult r = run("system --z --num 1 --den -0.5,1 --xavg 1");
    CHECK(r.exit_code == 0);
    json report = json::parse(r.out);
    require_valid_report(report);
    CHECK(report["system"]["dc_gain"].get<double>() == doctest::Approx(2.0));
    CHECK(report["system"]["output_average"].get<double>() == doctest::Approx(2.0));

    RunResult zero = run("system --s --num 1 --den 1,1 --xavg 0");
    CHECK(zero.exit_code == 0);
    CHECK(json::parse(zero.out)["system"]["output_average"].get<double>() == 0.0);

    RunResult unstable = run("system --z --num 1 --den -2,1 --xavg 1");
    CHECK(unstable.exit_code == 4);
    json err = json::parse(unstable.out);
    CHECK(err["error"]["code"] == "UnstableSystem");
    // The offending pole is listed.
    CHECK(err["error"]["message"].get<std::string>().find("2") != std::string::npos);
}

TEST_CASE("system: spec input with convolution oracle") {
    RunResult r = run("system --z --num 1 --den -0.5,1 --xspec " + kRoot +
                      "/corpus/cosine_w0_2pi.json --oracle 100000");
    CHECK(r.exit_code == 0);
    json report = json::parse(r.out);
    require_valid_report(report);
    CHECK(report["system"]["output_average"].get<double>() == doctest::Approx(2.0));
    REQUIRE(!report["agreement"].is_null());
    CHECK(report["agreement"]["difference"].get<double>() <= 1e-3);
}

TEST_CASE("trace: alternating pattern settles to zero") {
    std::string out_path = "/tmp/tavg_test_trace_alt.csv";
    RunResult r = run("trace --spec " + kRoot + "/corpus/alternating.json --horizon 1000 --out " +
                      out_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("final_estimate=") != std::string::npos);

    std::ifstream csv(out_path);
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "n,running_average");
    std::string line, last;
    while (std::getline(csv, line))
        if (!line.empty()) last = line;
    double last_value = std::stod(last.substr(last.find(',') + 1));
    CHECK(std::abs(last_value) <= 1e-3);
}

TEST_CASE("trace: constant spec stays at the constant") {
    std::string spec = write_temp_spec("const", json{{"domain", "discrete"},
                                                     {"periodic_pattern", {2.5}}});
    std::string out_path = "/tmp/tavg_test_trace_const.csv";
    RunResult r = run("trace --spec " + spec + " --horizon 512 --out " + out_path);
    CHECK(r.exit_code == 0);
    std::ifstream csv(out_path);
    std::string line;
    std::getline(csv, line);  // header
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        CHECK(std::stod(line.substr(line.find(',') + 1)) == 2.5);
    }
}

TEST_CASE("trace: geometric decay reaches zero like 1/N") {
    std::string spec = write_temp_spec(
        "geo09", json{{"domain", "discrete"},
                      {"terms", json::array({{{"amp", 1.0},
                                              {"re_base", 0.9},
                                              {"im_base", 0.0},
                                              {"power", 0}}})}});
    std::string out_path = "/tmp/tavg_test_trace_geo.csv";
    RunResult r = run("trace --spec " + spec + " --horizon 10000 --out " + out_path);
    CHECK(r.exit_code == 0);
    std::ifstream csv(out_path);
    std::string line, last;
    std::getline(csv, line);
    while (std::getline(csv, line))
        if (!line.empty()) last = line;
    CHECK(std::abs(std::stod(last.substr(last.find(',') + 1))) <= 1e-2);
}

TEST_CASE("trace: under-resolved continuous sampling fails cleanly") {
    std::string spec = write_temp_spec(
        "fast", json{{"domain", "continuous"},
                     {"terms", json::array({{{"amp", 0.5}, {"re_base", 0.0}, {"im_base", 50.0}, {"power", 0}},
                                            {{"amp", 0.5}, {"re_base", 0.0}, {"im_base", -50.0}, {"power", 0}}})}});
    RunResult r = run("trace --spec " + spec + " --tmax 100 --dt 0.05 --out /tmp/tavg_bad.csv");
    CHECK(r.exit_code == 1);
}

TEST_CASE("product: shipped cases") {
    RunResult same = run("product --fnum 0,1 --fden 1,1 --gnum 0,1 --gden 1,1");
    CHECK(same.exit_code == 0);
    json report = json::parse(same.out);
    require_valid_report(report);
    CHECK(std::abs(report["product"]["contour_estimate"].get<double>() - 1.0) <= 1e-3);
    CHECK(report["product"]["difference"].get<double>() <= 1e-3);

    RunResult steps = run("product --fnum 0,1 --fden -1,1 --gnum 0,1 --gden -1,1");
    CHECK(std::abs(json::parse(steps.out)["product"]["contour_estimate"].get<double>() - 1.0) <=
          1e-3);

    RunResult mixed = run("product --fnum 0,1 --fden 1,1 --gnum 0,1 --gden -1,1");
    CHECK(std::abs(json::parse(mixed.out)["product"]["contour_estimate"].get<double>()) <= 1e-3);

    RunResult blocked = run("product --fnum 0,1 --fden -2,1 --gnum 0,1 --gden -1,1");
    CHECK(blocked.exit_code == 5);
}

TEST_CASE("corpus: the shipped golden set passes") {
    RunResult r = run("corpus --dir " + kRoot + "/corpus");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("19/19 cases passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("all golden corpus reports validate against the shipped schema") {
    std::ifstream in(kRoot + "/corpus/golden.json");
    REQUIRE(in.good());
    json golden = json::parse(in);
    for (const auto& c : golden["cases"]) {
        std::string args;
        if (c.contains("spec_file")) {
            args = "average --spec " + kRoot + "/corpus/" + c["spec_file"].get<std::string>();
        } else {
            std::string domain_flag = c["domain"] == "z" ? "--z" : "--s";
            auto join = [](const json& arr) {
                std::string out;
                for (const auto& v : arr) {
                    if (!out.empty()) out += ",";
                    out += std::to_string(v.get<double>());
                }
                return out;
            };
            args = "average " + domain_flag + " --num " + join(c["num"]) + " --den " +
                   join(c["den"]);
        }
        RunResult r = run(args);
        json report = json::parse(r.out);
        require_valid_report(report);
        CHECK(report["verdict"]["applicability"] ==
              c["expected"]["applicability"].get<std::string>());
    }
}

TEST_CASE("tolerance config file is honored") {
    // An absurdly wide unit-circle band reclassifies the 0.5 pole as a
    // boundary pole, changing the note set; mostly this checks the file
    // is parsed and applied without error.
    std::string config = write_temp_spec("config", json{{"quad_abs_err", 1e-6}});
    RunResult r = run("average --z --num 0,1 --den -0.5,1 --config " + config);
    CHECK(r.exit_code == 0);
    CHECK(run("average --z --num 0,1 --den -0.5,1 --config /tmp/no_such_config.json").exit_code ==
          1);
}
