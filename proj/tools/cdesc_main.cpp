#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdesc/fixture.hpp"
#include "cdesc/report.hpp"

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_load = 3;

int load_failure(const std::string& command, const std::string& path, bool structured,
                 const std::vector<cdesc::FixtureIssue>& issues, const std::string& kind) {
    if (structured) {
        nlohmann::ordered_json errors = nlohmann::ordered_json::array();
        for (const auto& i : issues)
            errors.push_back({{"location", i.location}, {"invariant", i.invariant}, {"message", i.message}});
        nlohmann::ordered_json doc = {{"command", command},
                                      {"inputs", {{"fixture", path}}},
                                      {"results", {{"error", kind}, {"issues", errors}}},
                                      {"pass", false}};
        std::cout << doc.dump(2) << "\n";
    }
    std::cerr << "cdesc: " << kind << " in " << path << "\n";
    for (const auto& i : issues) std::cerr << "  " << i.location << " [" << i.invariant << "] " << i.message << "\n";
    return exit_load;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubical descent and K0 motive checks over fixture files"};
    std::vector<std::string> positional;
    cdesc::RunOptions options;
    std::string pair, square, atom, format = "text";
    std::size_t cases = 0;
    app.add_option("args", positional, "<command> [target] FIXTURE_PATH")->required();
    auto* pair_opt = app.add_option("--pair", pair, "SNC pair name");
    auto* square_opt = app.add_option("--square", square, "square or blow-up name");
    auto* atom_opt = app.add_option("--atom", atom, "atom or variety name");
    app.add_option("--seed", options.seed, "seed for randomized suites");
    auto* cases_opt = app.add_option("--cases", cases, "number of randomized cases");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));
    app.footer("commands: class gysin euler serre verify\n"
               "verify targets: axioms manin functoriality descent duality independence splitting");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : exit_usage;
    }
    if (*pair_opt) options.pair = pair;
    if (*square_opt) options.square = square;
    if (*atom_opt) options.atom = atom;
    if (*cases_opt) options.cases = cases;
    const bool structured = format == "structured";

    const std::string command = positional.front();
    std::optional<std::string> target;
    if (positional.size() == 3) target = positional[1];
    if (positional.size() < 2 || positional.size() > 3) {
        std::cerr << "cdesc: expected <command> [target] FIXTURE_PATH\n";
        return exit_usage;
    }
    const std::string path = positional.back();
    const std::string label = target ? command + " " + *target : command;

    cdesc::Fixture fixture;
    try {
        fixture = cdesc::load_fixture(path);
    } catch (const cdesc::FixtureError& e) {
        return load_failure(label, path, structured, e.issues(), "validation error");
    } catch (const cdesc::ParseError& e) {
        return load_failure(label, path, structured, {{"/", "syntax", e.what()}}, "parse error");
    }

    try {
        cdesc::Report report = cdesc::run_command(command, target, fixture, options);
        report.inputs["fixture"] = path;
        std::cout << (structured ? report.structured() : report.text());
        return report.pass ? 0 : exit_fail;
    } catch (const cdesc::UsageError& e) {
        std::cerr << "cdesc: " << e.what() << "\n";
        return exit_usage;
    } catch (const cdesc::UnknownNameError& e) {
        std::cerr << "cdesc: " << e.what() << "\n";
        return exit_usage;
    } catch (const cdesc::Error& e) {
        std::cerr << "cdesc: " << e.what() << "\n";
        return exit_fail;
    }
}
