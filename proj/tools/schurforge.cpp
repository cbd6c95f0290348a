#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "schurforge/cli.hpp"

namespace {

std::string read_all(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    schurforge::JobOptions options;
    std::string command;
    std::string input_path = "-";

    CLI::App app{"Exact computations with Schur representations, quaternion algebras and Galois descent"};
    app.set_version_flag("--version", schurforge::version());
    app.add_option("command", command, "One of: schur endo simple intertwine quaternion hilbert split origin twist "
                                       "descend quiver2rep demo-quadratic")
        ->required()
        ->check(CLI::IsMember(schurforge::commands()));
    app.add_option("input", input_path, "JSON input file, '-' or absent for stdin");
    app.add_option("--seed", options.seed, "Seed for every randomized search");
    app.add_option("--bound-norm-search", options.bounds.norm_search, "Height bound for norm equation search")
        ->check(CLI::PositiveNumber);
    app.add_option("--bound-factor", options.bounds.factor, "Trial division bound for square classes")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    app.add_flag("--quiver", options.quiver, "schur: read a quiver representation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << schurforge::error_document("UsageError", e.what());
        return schurforge::kExitInvalidInput;
    }

    std::string input;
    if (input_path == "-") {
        input = read_all(std::cin);
    } else {
        std::ifstream file(input_path, std::ios::binary);
        if (!file) {
            std::cerr << schurforge::error_document("IOError", "cannot open '" + input_path + "'");
            return schurforge::kExitInvalidInput;
        }
        input = read_all(file);
    }

    const auto result = schurforge::run_job(command, input, options);
    std::cout << result.output;
    std::cerr << result.diagnostics;
    return result.exit_code;
}
