// Scripted CLI scenarios: the documented exit-code table, JSON validity and
// a few end-to-end pipelines through temporary files.
//
// Usage: cli_scenarios --cli <path-to-polycone-binary> --data <data-dir>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run(const std::string& command) {
    CliResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cout << "[FAIL] " << what << '\n';
    } else {
        std::cout << "[ ok ] " << what << '\n';
    }
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/polycone_scenario_" + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli, data = "tests/data";
    for (int i = 1; i + 1 < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--cli") cli = argv[i + 1];
        if (arg == "--data") data = argv[i + 1];
    }
    if (cli.empty()) {
        std::cerr << "missing --cli\n";
        return 1;
    }
    const std::string wedge = data + "/wedge.hcone";

    // exit 0: successful conversion and passing verification
    expect(run(cli + " convert " + wedge).exit_code == 0, "convert exits 0");
    expect(run(cli + " verify " + wedge).exit_code == 0, "verify pass exits 0");
    expect(run(cli + " qsd-check " + wedge).exit_code == 0, "qsd-check pass exits 0");
    expect(run(cli + " stats " + wedge).exit_code == 0, "stats exits 0");

    // exit 1: verification failure (spurious generator outside the cone)
    const std::string spurious = write_temp("spurious.vrep", "V-rep 2 0 2\n0 1\n1 0\n");
    expect(run(cli + " verify " + wedge + " " + spurious).exit_code == 1,
           "verify with a spurious generator exits 1");
    // exit 1: incomplete generator set
    const std::string partial = write_temp("partial.vrep", "V-rep 2 0 1\n0 1\n");
    expect(run(cli + " verify " + wedge + " " + partial).exit_code == 1,
           "verify with a missing ray exits 1");

    // exit 2: usage and parse errors
    expect(run(cli).exit_code == 2, "no subcommand exits 2");
    expect(run(cli + " frobnicate").exit_code == 2, "unknown subcommand exits 2");
    expect(run(cli + " convert /nonexistent.hcone").exit_code == 2, "missing file exits 2");
    const std::string garbage = write_temp("garbage.hcone", "H-cone 2 1 0\n1 shoe\n");
    expect(run(cli + " convert " + garbage).exit_code == 2, "malformed rational exits 2");
    const std::string badhdr = write_temp("badhdr.hcone", "Z-rep 1 1\n1\n");
    expect(run(cli + " convert " + badhdr).exit_code == 2, "unknown header exits 2");

    // exit 3: binding resource caps
    expect(run(cli + " qsd-check " + data + "/cube3.hrep --limit 10").exit_code == 3,
           "qsd-check under a binding cap exits 3");

    // help is not an error
    expect(run(cli + " --help").exit_code == 0, "--help exits 0");

    // JSON outputs parse and carry the expected keys
    {
        const CliResult r = run(cli + " convert " + wedge + " --json");
        expect(r.exit_code == 0, "convert --json exits 0");
        const auto doc = nlohmann::json::parse(r.output, nullptr, false);
        expect(!doc.is_discarded() && doc["kind"] == "generator-set" && doc["rays"].size() == 2,
               "convert --json is valid JSON with 2 rays");
    }
    {
        const CliResult r = run(cli + " verify " + wedge + " --json");
        const auto doc = nlohmann::json::parse(r.output, nullptr, false);
        expect(!doc.is_discarded() && doc["pass"] == true && doc["sound"] == true,
               "verify --json reports a passing certificate");
    }
    {
        const CliResult r = run(cli + " stats " + wedge + " --json --trace");
        const auto doc = nlohmann::json::parse(r.output, nullptr, false);
        expect(!doc.is_discarded() && doc["nodes"] == 3 && doc["trace"]["case"] == "split",
               "stats --json --trace exposes the recursion tree");
    }

    // pipeline: convert H-rep to V-rep, feed the result back through verify
    {
        const CliResult conv = run(cli + " convert " + data + "/square.hrep");
        const std::string vrep = write_temp("square.vrep", conv.output);
        expect(run(cli + " verify " + data + "/square.hrep " + vrep).exit_code == 0,
               "H-rep conversion verifies against its own output");
    }

    // canonical rays rescale to primitive directions and stay verifiable
    {
        const CliResult plain = run(cli + " convert " + data + "/interval.hrep");
        const CliResult canon = run(cli + " convert " + data + "/interval.hrep --canonical-rays");
        expect(plain.exit_code == 0 && canon.exit_code == 0, "canonical-rays conversion runs");
    }

    if (failures == 0) {
        std::cout << "all scenarios passed\n";
        return 0;
    }
    std::cout << failures << " scenario(s) failed\n";
    return 1;
}
