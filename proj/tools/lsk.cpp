// Command-line surface of the kernel: expression evaluation, Maurer-Cartan
// solving and classification, groupoid queries, and the verification suite.
//
// Exit codes: 0 success; 1 failed verification or malformed input;
// 2 no solution / not Maurer-Cartan; 3 disconnected groupoid components.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lsk/errors.hpp"
#include "lsk/groupoid.hpp"
#include "lsk/interval.hpp"
#include "lsk/json_io.hpp"
#include "lsk/parser.hpp"
#include "lsk/printer.hpp"
#include "lsk/verify.hpp"

namespace {

lsk::Rational parse_param(const std::string& text, const std::string& flag) {
    auto value = lsk::rational_from_string(text);
    if (!value) throw lsk::Error(flag + ": expected a rational like 5, -2 or 1/3, got \"" + text + "\"");
    return *value;
}

lsk::McDescriptor descriptor_for(const lsk::LsInterval& interval, const std::string& family,
                                 const lsk::Rational& param) {
    // Family I has linear part p*a + (1-p)*b, family II has p*(a - b).
    if (family == "I") return lsk::solve_mc(interval, param, lsk::Rational(1) - param);
    return lsk::solve_mc(interval, param, -param);
}

int run_expand(const std::string& expr_text, int max_len, const std::string& format) {
    lsk::LsInterval interval = lsk::build_interval(max_len);
    lsk::AstPtr ast = lsk::parse_expr(expr_text);
    lsk::Element value = lsk::evaluate(*ast, interval.ctx);
    if (format == "json")
        std::cout << lsk::element_to_json(value).dump(2) << "\n";
    else
        std::cout << lsk::print_canonical(value) << "\n";
    return 0;
}

int run_mc_solve(const std::string& lambda_text, const std::string& family, int max_len) {
    lsk::Rational lambda = parse_param(lambda_text, "--lambda");
    lsk::LsInterval interval = lsk::build_interval(max_len);
    lsk::McDescriptor descriptor = descriptor_for(interval, family, lambda);
    std::cout << lsk::descriptor_to_json(descriptor).dump(2) << "\n";
    return 0;
}

int run_mc_classify(const std::string& path) {
    std::ifstream input(path);
    if (!input) throw lsk::Error("cannot open input file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(input);
    } catch (const nlohmann::json::exception& e) {
        throw lsk::SchemaError(std::string("input is not valid JSON: ") + e.what());
    }

    // Accepts either a full descriptor or a bare element.
    if (j.is_object() && j.contains("family")) {
        if (!j.contains("element") || !j["element"].is_object() ||
            !j["element"].contains("truncation") || !j["element"]["truncation"].is_number_integer())
            throw lsk::SchemaError("descriptor input must carry element.truncation");
        lsk::LsInterval interval = lsk::build_interval(j["element"]["truncation"].get<int>());
        lsk::McDescriptor descriptor = lsk::descriptor_from_json(j, interval);
        std::cout << lsk::descriptor_to_json(descriptor).dump(2) << "\n";
        return 0;
    }
    if (!j.is_object() || !j.contains("truncation") || !j["truncation"].is_number_integer())
        throw lsk::SchemaError("element input must carry a truncation field");
    lsk::LsInterval interval = lsk::build_interval(j["truncation"].get<int>());
    lsk::Element element = lsk::element_from_json(j, interval.ctx.generators());
    lsk::McDescriptor descriptor = lsk::classify_mc(interval, element);
    std::cout << lsk::descriptor_to_json(descriptor).dump(2) << "\n";
    return 0;
}

int run_connect(const std::string& from_family, const std::string& from_param,
                const std::string& to_family, const std::string& to_param, int max_len) {
    lsk::LsInterval interval = lsk::build_interval(max_len);
    lsk::McDescriptor from = descriptor_for(interval, from_family, parse_param(from_param, "--from-param"));
    lsk::McDescriptor to = descriptor_for(interval, to_family, parse_param(to_param, "--to-param"));
    lsk::GroupoidArrow arrow = lsk::connect(interval, from, to);
    std::cout << "nu: " << lsk::to_string(arrow.nu) << "\n";
    std::cout << "source: " << lsk::print_canonical(arrow.source.element) << "\n";
    std::cout << "target: " << lsk::print_canonical(arrow.target.element) << "\n";
    std::cout << "verified: gauge(nu * x, target) = source holds exactly\n";
    return 0;
}

int run_verify(const std::string& suite, int max_len, std::uint64_t seed,
               const std::string& format) {
    lsk::VerificationReport report = lsk::run_verify_suite(suite, max_len, seed);
    if (format == "json")
        std::cout << lsk::report_to_json(report).dump(2) << "\n";
    else
        std::cout << lsk::report_to_text(report);
    // Timing never enters the report itself: identical seeds must produce
    // byte-identical output.
    std::cerr << "elapsed: " << report.elapsed_ms << " ms\n";
    return report.all_pass ? 0 : 1;
}

int dispatch(const std::function<int()>& body) {
    try {
        return body();
    } catch (const lsk::NoSolution& e) {
        std::cerr << "no solution: " << e.what() << "\n";
        return 2;
    } catch (const lsk::NotMaurerCartan& e) {
        std::cerr << "not Maurer-Cartan: " << e.what() << "\n";
        return 2;
    } catch (const lsk::DisconnectedComponents& e) {
        std::cerr << "disconnected: " << e.what() << "\n";
        return 3;
    } catch (const lsk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic kernel for the Lawrence-Sullivan interval and its Deligne groupoid"};
    app.require_subcommand(1);

    std::string expr_text;
    std::string format = "text";
    std::string lambda_text;
    std::string family = "I";
    std::string input_path;
    std::string from_family, from_param, to_family, to_param;
    std::string suite = "all";
    int max_len = 6;
    int verify_max_len = 8;
    std::uint64_t seed = 0;
    std::string verify_format = "text";

    CLI::App* expand = app.add_subcommand("expand", "Evaluate an expression in the interval algebra");
    expand->add_option("--expr", expr_text, "Expression, e.g. \"gauge(x, b)\" or \"diff(x)\"")->required();
    expand->add_option("--max-len", max_len, "Truncation order (discard words longer than this)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    expand->add_option("--format", format, "Output form")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    CLI::App* mc = app.add_subcommand("mc", "Maurer-Cartan elements");
    mc->require_subcommand(1);
    CLI::App* solve = mc->add_subcommand("solve", "Extend a linear part to a Maurer-Cartan element");
    solve->add_option("--lambda", lambda_text, "Family parameter (rational)")->required();
    solve->add_option("--family", family, "I: linear part p*a+(1-p)*b; II: linear part p*(a-b)")
        ->check(CLI::IsMember({"I", "II"}))
        ->required();
    solve->add_option("--max-len", max_len, "Truncation order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    CLI::App* classify = mc->add_subcommand("classify", "Classify a Maurer-Cartan element from a JSON file");
    classify->add_option("--input", input_path, "Element or descriptor JSON file")->required();

    CLI::App* connect_cmd = app.add_subcommand("connect", "Find the gauge arrow between two Maurer-Cartan elements");
    connect_cmd->add_option("--from-family", from_family)->check(CLI::IsMember({"I", "II"}))->required();
    connect_cmd->add_option("--from-param", from_param)->required();
    connect_cmd->add_option("--to-family", to_family)->check(CLI::IsMember({"I", "II"}))->required();
    connect_cmd->add_option("--to-param", to_param)->required();
    connect_cmd->add_option("--max-len", max_len, "Truncation order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--suite", suite, "Which checks to run")
        ->check(CLI::IsMember({"all", "interval", "gauge", "subdivision", "groupoid", "isos", "quotient"}))
        ->capture_default_str();
    verify->add_option("--max-len", verify_max_len, "Truncation order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--seed", seed, "Sampling seed; identical seeds give byte-identical reports")
        ->capture_default_str();
    verify->add_option("--format", verify_format, "Output form")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (*expand) return dispatch([&] { return run_expand(expr_text, max_len, format); });
    if (*solve) return dispatch([&] { return run_mc_solve(lambda_text, family, max_len); });
    if (*classify) return dispatch([&] { return run_mc_classify(input_path); });
    if (*connect_cmd)
        return dispatch([&] { return run_connect(from_family, from_param, to_family, to_param, max_len); });
    if (*verify) return dispatch([&] { return run_verify(suite, verify_max_len, seed, verify_format); });
    return 1;
}
