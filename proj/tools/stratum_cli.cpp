#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stratum/cli_core.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

int resolve_threads(int cli_threads) {
    if (cli_threads > 0) return cli_threads;
    if (const char* env = std::getenv("STRATUM_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // library default
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact point-count computations for basic strata"};
    app.set_version_flag("--version", stratum::kVersion);

    std::string command, input_path, output_path, alpha_parity;
    int threads = 0;
    app.add_option("command", command, "satake | constant-term | truncate | cosets | poset | hecke-matrix | trace | count | check-parity")
        ->required();
    app.add_option("--input", input_path, "JSON request file (stdin when omitted)");
    app.add_option("--output", output_path, "output file (stdout when omitted)");
    app.add_option("--alpha-parity", alpha_parity, "resolve symbolic signs for this alpha parity")
        ->check(CLI::IsMember({"even", "odd"}));
    app.add_option("--threads", threads, "worker thread count (default: STRATUM_THREADS or all)");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (int t = resolve_threads(threads); t > 0) omp_set_num_threads(t);
#else
    (void)resolve_threads(threads);
#endif

    std::string text;
    if (input_path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "error: cannot open input file: " << input_path << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }

    stratum::json request = stratum::json::parse(text, nullptr, false);
    if (request.is_discarded()) {
        std::cerr << "error: input is not valid JSON\n";
        return 2;
    }

    stratum::CliOptions opts;
    if (!alpha_parity.empty()) opts.alpha_parity = alpha_parity;

    stratum::json response;
    try {
        if (request.is_array()) {
            response = stratum::run_batch(request, command, opts);
        } else if (request.is_object()) {
            std::string cmd = command;
            stratum::json params = request;
            if (request.contains("command")) {
                cmd = request["command"].get<std::string>();
                params = request.value("params", stratum::json::object());
            }
            response = stratum::run(cmd, params, opts);
        } else {
            std::cerr << "error: input must be a JSON object or array\n";
            return 2;
        }
    } catch (const stratum::SchemaError& ex) {
        std::cerr << "error (schema): " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error (domain): " << ex.what() << "\n";
        return 3;
    }

    if (output_path.empty()) {
        std::cout << response.dump(2) << "\n";
    } else {
        std::ofstream out(output_path);
        if (!out) {
            std::cerr << "error: cannot open output file: " << output_path << "\n";
            return 2;
        }
        out << response.dump(2) << "\n";
    }
    return 0;
}
