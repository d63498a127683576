/*
   Copyright 2026 The srkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// srkit: JSON in, JSON out.  See README.md for the request format.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "srkit/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Slice-regular polynomial toolkit"};
    std::string backend;
    std::string input = "-";
    std::string output = "-";
    double tolerance = 0;
    int trunc = 64;
    app.add_option("--backend", backend, "exact or float (default: $SRKIT_BACKEND, else exact)")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--input", input, "request file, or - for stdin");
    app.add_option("--output", output, "response file, or - for stdout");
    auto* tol_opt = app.add_option("--tolerance", tolerance, "series term tolerance")->check(CLI::PositiveNumber);
    app.add_option("--trunc", trunc, "series truncation depth")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    srkit::cli::Defaults defaults;
    if (backend.empty()) {
        if (const char* env = std::getenv("SRKIT_BACKEND")) backend = env;
    }
    if (backend == "float") defaults.backend = srkit::cli::Backend::Float;
    else if (!backend.empty() && backend != "exact") {
        std::cerr << "SRKIT_BACKEND must be 'exact' or 'float'\n";
        return 2;
    }
    defaults.trunc = trunc;
    if (*tol_opt) defaults.tolerance = tolerance;

    std::string text;
    if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "cannot read " << input << "\n";
            return 2;
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }

    auto [doc, code] = srkit::cli::run_document(text, defaults);
    std::string rendered = doc.dump() + "\n";
    if (output == "-") {
        std::cout << rendered;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "cannot write " << output << "\n";
            return 2;
        }
        out << rendered;
    }
    return code;
}
