#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "nfct/problem.hpp"

namespace {

struct CommonArgs {
    std::string input_file;
    std::string output_file; // empty: stdout
    bool pretty = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw nfct::ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const CommonArgs& args, const nfct::RunOutcome& outcome) {
    const std::string text =
        args.pretty ? nfct::render_report(outcome.report) : outcome.report.dump(2) + "\n";
    if (args.output_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.output_file, std::ios::binary);
        if (!out) throw nfct::Error("cannot open output file '" + args.output_file + "'");
        out << text;
    }
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("input", args.input_file, "problem file (JSON)")->required();
    cmd->add_option("--output", args.output_file, "write the report here instead of stdout");
    cmd->add_flag("--pretty", args.pretty, "human-readable text instead of JSON");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normal-form spaces and complete transversals for polynomial vector fields"};
    app.require_subcommand(1);

    CommonArgs transversal_args, normalform_args, verify_args, dims_args;
    std::optional<int> max_degree;

    CLI::App* transversal =
        app.add_subcommand("transversal", "per-degree transversal bases and dimensions");
    add_common(transversal, transversal_args);

    CLI::App* normalform = app.add_subcommand("normalform", "reduce the field to normal form");
    add_common(normalform, normalform_args);
    normalform->add_option("--max-degree", max_degree, "override degrees.max for the reduction");

    CLI::App* verify = app.add_subcommand("verify", "decomposition and containment checks per degree");
    add_common(verify, verify_args);

    CLI::App* dims = app.add_subcommand("dims", "trace-oracle vs basis dimension table");
    add_common(dims, dims_args);

    CLI11_PARSE(app, argc, argv);

    try {
        nfct::RunOutcome outcome;
        CommonArgs* args = nullptr;
        if (transversal->parsed()) {
            args = &transversal_args;
            outcome = nfct::run_transversal(nfct::parse_problem_text(read_file(args->input_file)));
        } else if (normalform->parsed()) {
            args = &normalform_args;
            nfct::RunOptions options;
            options.max_degree_override = max_degree;
            outcome = nfct::run_normalform(nfct::parse_problem_text(read_file(args->input_file)), options);
        } else if (verify->parsed()) {
            args = &verify_args;
            outcome = nfct::run_verify(nfct::parse_problem_text(read_file(args->input_file)));
        } else {
            args = &dims_args;
            outcome = nfct::run_dims(nfct::parse_problem_text(read_file(args->input_file)));
        }
        write_output(*args, outcome);
        if (!outcome.all_ok) {
            std::cerr << "internal invariant failure: a theorem-guaranteed check reported false\n";
            return 3;
        }
        return 0;
    } catch (const nfct::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const nfct::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
