#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "vrkit_cli/figures.hpp"
#include "vrkit_cli/json_io.hpp"
#include "vrkit_cli/verify.hpp"
#include "vrkit_cli/z0_parse.hpp"
#include "vrkit/disc.hpp"
#include "vrkit/loewner.hpp"

using namespace vrkit;
using namespace vrkit::cli;

namespace {

struct run_result {
    int status = -1;
    std::string out;
};

run_result run_tool(const std::string& args) {
    const std::string cmd = std::string("\"") + VRKIT_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

size_t count_occurrences(const std::string& text, const std::string& needle) {
    size_t n = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("exit codes follow the documented contract") {
    CHECK(run_tool("region --kind VR --z0 0.5").status == 3);       // degenerate domain
    CHECK(run_tool("region --kind VU --z0 2+0i").status == 2);      // base point outside
    CHECK(run_tool("region --kind bogus --z0 0.3+0.5i").status == 2);
    CHECK(run_tool("region --kind VT --z0 0.3+0.5i").status == 2);  // missing --tau
    CHECK(run_tool("region --kind VU --z0 0.3+0.5i --format csv").status == 2);
    CHECK(run_tool("figure fig3").status == 2);
    CHECK(run_tool("verify --suite no-such-suite").status == 2);
    CHECK(run_tool("curve --kind Cplus --z0 0.3+0.5i --n 1").status == 2);
    CHECK(run_tool("simulate --z0 1+1i --exponent -0.5").status == 2);  // unbounded, no --T
    CHECK(run_tool("").status == 2);                                    // a subcommand is required
    CHECK(run_tool("verify --suite f0").status == 0);
    CHECK(run_tool("region --kind VU --z0 0.3+0.5i").status == 0);
}

TEST_CASE("trajectory output has the documented shape and matches the closed form") {
    const auto r = run_tool("simulate --z0 1+1i --T 1");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("schema") == "vrkit/1");
    CHECK(j.at("type") == "trajectory");
    CHECK(j.at("z0") == json::array({1.0, 1.0}));
    CHECK(j.at("driving").at("kind") == "slit");
    const auto& samples = j.at("samples");
    REQUIRE(samples.size() >= 2);
    CHECK(samples.front() == json::array({0.0, 1.0, 1.0}));
    const auto& last = samples.back();
    CHECK(last[0].get<double>() == doctest::Approx(1.0).epsilon(1e-15));
    // zero driving: w(t)^2 = z0^2 - 2t, so w(1) = sqrt(2i - 2)
    const cx expect = std::sqrt(cx{-2.0, 2.0});
    CHECK(std::abs(cx{last[1].get<double>(), last[2].get<double>()} - expect) < 1e-8);
}

TEST_CASE("repeat runs with the same inputs are byte-identical") {
    const std::string cmd = "simulate --z0 0.7+1.3i --T 2 --thunder";
    CHECK(run_tool(cmd).out == run_tool(cmd).out);
    CHECK(run_tool("region --kind VT --tau 0.37 --z0 0.2+0.4i").out ==
          run_tool("region --kind VT --tau 0.37 --z0 0.2+0.4i").out);
    CHECK(run_tool("figure fig5").out == run_tool("figure fig5").out);
}

TEST_CASE("verify reports are reproducible apart from wall time") {
    const std::string base = "verify --suite disc-herglotz --n 40 --seed 9";
    run_tool(base + " --out cli_tmp_report_a.json");
    run_tool(base + " --out cli_tmp_report_b.json");
    json a = read_json_file("cli_tmp_report_a.json");
    json b = read_json_file("cli_tmp_report_b.json");
    CHECK(a.at("suite") == "disc-herglotz");
    CHECK(a.at("samples_run") == 40);
    CHECK(a.at("failures").empty());
    a.erase("wall_time_s");
    b.erase("wall_time_s");
    CHECK(dump_json(a) == dump_json(b));
    std::filesystem::remove("cli_tmp_report_a.json");
    std::filesystem::remove("cli_tmp_report_b.json");
}

TEST_CASE("region JSON round-trips byte for byte") {
    for (const auto& [kind, z0, tau] :
         {std::tuple<std::string, cx, double>{"VU", {0.3, 0.5}, 0.0},
          {"VUstar", {0.3, 0.5}, 0.0},
          {"VT", {0.3, 0.5}, 0.65},
          {"VR", {1.0 / 3.0, 0.5}, 0.0},
          {"VRgeq", {1.0 / 3.0, 0.5}, 0.0},
          {"VRgt", {0.5, 0.0}, 0.0},  // degenerate interval shape
          {"VT", {0.3, 0.5}, 1.0}}) {  // point region
        const region_spec spec = make_disc_region(kind, z0, tau);
        const std::string once = dump_json(region_to_json(spec));
        const std::string twice = dump_json(region_to_json(region_from_json(json::parse(once))));
        CHECK(once == twice);
    }
}

TEST_CASE("trajectory JSON round-trips byte for byte and stays evaluable") {
    const auto driving = driving_spec::constant_slit(0.25, 1.5);
    const trajectory traj = integrate(cx{1.0, 1.0}, driving, 1.5);
    const std::string once = dump_json(trajectory_to_json(traj));
    const trajectory back = trajectory_from_json(json::parse(once));
    CHECK(dump_json(trajectory_to_json(back)) == once);
    for (double t : {0.0, 0.3, 0.77, 1.5})
        CHECK(std::abs(back.at(t) - traj.at(t)) < 1e-14);
}

TEST_CASE("figure SVGs expose the documented structure") {
    const std::string fig1 = render_figure("fig1");
    CHECK(count_occurrences(fig1, "class=\"curve ") == 4);
    CHECK(fig1.find("stroke-dasharray") != std::string::npos);

    const std::string fig4 = render_figure("fig4");
    CHECK(count_occurrences(fig4, "class=\"edge ") == 6);
    CHECK(count_occurrences(fig4, "class=\"fill ") == 3);

    const std::string fig5 = render_figure("fig5");
    CHECK(count_occurrences(fig5, "class=\"fill ") == 3);
    for (const char* name : {"fig1", "fig2", "fig4", "fig5", "fig6"}) {
        const std::string svg = render_figure(name);
        CHECK(svg.rfind("<svg ", 0) == 0);
        CHECK(svg.find("</svg>") != std::string::npos);
    }
    CHECK_THROWS_AS((void)render_figure("fig3"), out_of_range);
}

TEST_CASE("complex command line arguments parse like a human would write them") {
    CHECK(parse_complex("1+1i") == cx{1.0, 1.0});
    CHECK(parse_complex("0.3-0.5i") == cx{0.3, -0.5});
    CHECK(parse_complex("-0.9i") == cx{0.0, -0.9});
    CHECK(parse_complex("2") == cx{2.0, 0.0});
    CHECK(parse_complex("-1e-3+2e-2i") == cx{-1e-3, 2e-2});
    CHECK(parse_complex("i") == cx{0.0, 1.0});
    CHECK(parse_complex(" 0.5 + 0.25i ") == cx{0.5, 0.25});
    CHECK_THROWS_AS((void)parse_complex(""), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_complex("abc"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_complex("1+2"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_complex("1i+2i"), std::invalid_argument);
}

TEST_CASE("curve CSV output carries the documented columns") {
    const auto r = run_tool("curve --kind Cplus --z0 0.3+0.5i --n 8 --format csv");
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("t,re,im\n", 0) == 0);
    CHECK(count_occurrences(r.out, "\n") == 9);  // header + 8 rows
    double t = -1.0, re = 0.0, im = 0.0;
    REQUIRE(std::sscanf(r.out.c_str() + 8, "%lf,%lf,%lf", &t, &re, &im) == 3);
    CHECK(t == 0.0);
    CHECK(re == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(im == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("driving files feed the integrator") {
    json file;
    file["kind"] = "measure_path";
    file["pieces"] = json::array({{{"t_start", 0.0},
                                   {"t_end", 0.5},
                                   {"atoms", json::array({json::array({1.0, 0.75}),
                                                          json::array({3.0, 0.25})})}}});
    {
        std::ofstream out("cli_tmp_driving.json");
        out << file.dump(2) << "\n";
    }
    const auto r = run_tool("simulate --z0 1+1i --driving cli_tmp_driving.json");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("driving").at("kind") == "measure_path");
    CHECK(j.at("samples").back()[0].get<double>() == doctest::Approx(0.5).epsilon(1e-15));
    std::filesystem::remove("cli_tmp_driving.json");

    CHECK(run_tool("simulate --z0 1+1i --driving no_such_file.json").status == 2);
    CHECK(run_tool("simulate --z0 1+1i --driving x.json --exponent -1 --T 1").status == 2);
}

TEST_CASE("region SVG output draws the region") {
    const auto r = run_tool("region --kind VU --z0 0.3+0.5i --format svg");
    REQUIRE(r.status == 0);
    CHECK(r.out.find("class=\"fill VU\"") != std::string::npos);
    CHECK(r.out.find("class=\"edge Cplus included\"") != std::string::npos);
    CHECK(r.out.find("class=\"edge Cminus included\"") != std::string::npos);

    const auto hp = run_tool("region --kind VI --z0 1+1i --format svg");
    REQUIRE(hp.status == 0);
    CHECK(hp.out.find("class=\"fill VI\"") != std::string::npos);
}
