#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "scpkit/report.hpp"

namespace {

int run_command(const std::string& command, const std::string& input_path, const std::string& format,
                int depth_flag, const std::string& out_path) {
    using namespace scpkit;

    std::string text;
    if (input_path.empty() || input_path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(input_path);
        if (!in) {
            Report rep;
            rep.status = "input-error";
            rep.detail = "cannot open input file '" + input_path + "'";
            std::cout << format_report(rep, format == "json" ? ReportFormat::json : ReportFormat::text)
                      << std::endl;
            return exit_code_for(rep.status);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    Report rep;
    int code = 0;
    try {
        Instance inst = parse_instance(text);
        if (depth_flag > 0) inst.depth = depth_flag;
        std::tie(rep, code) = run(command, inst);
    } catch (const std::exception& e) {
        rep.status = dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e)
                         ? "input-error"
                         : "internal-error";
        rep.detail = e.what();
        code = exit_code_for(rep.status);
    }

    const std::string rendered = format_report(rep, format == "json" ? ReportFormat::json : ReportFormat::text);
    if (out_path.empty()) {
        std::cout << rendered;
        if (rendered.empty() || rendered.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open output file '" << out_path << "'\n";
            return 2;
        }
        out << rendered;
        if (rendered.empty() || rendered.back() != '\n') out << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for subnormal completion problems of weighted shifts"};
    app.require_subcommand(1);

    std::string input_path, out_path, format = "text";
    int depth_flag = 0;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input_path, "instance file (default: stdin)");
        sub->add_option("--format", format, "output format: json|text (default text)")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--depth", depth_flag, "completion depth override")->check(CLI::PositiveNumber);
        sub->add_option("--out", out_path, "write the report to a file instead of stdout");
    };

    for (const char* name : {"check", "complete", "translate", "relations", "obstruct", "hypo"})
        add_common(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage problems are input errors
    }

    const std::string command = app.get_subcommands().front()->get_name();
    return run_command(command, input_path, format, depth_flag, out_path);
}
