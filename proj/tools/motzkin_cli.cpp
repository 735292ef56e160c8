// motzkin: generate, verify and compare the Motzkin-to-Fibonacci sequence cluster.
//
// Exit status: 0 every check passed, 1 a verification failed, 2 usage or parse error.

#include "motzkin/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace motzkin;

std::string identity_help() {
    std::string out = "Identity to check. One of:";
    for (const auto& id : verify_identities()) {
        out += "\n  " + std::string(id.name) + ": " + std::string(id.description);
    }
    return out;
}

SequenceId require_id(const std::string& text) {
    if (auto id = parse_sequence_id(text)) return *id;
    throw CLI::ValidationError("id", "unknown sequence id '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motzkin numbers, their shadows and the road to Fibonacci numbers"};
    app.require_subcommand(1);

    std::string format_text = "plain";
    app.add_option("--format", format_text, "Output format for gen: plain, json, csv, bfile")
        ->check(CLI::IsMember({"plain", "json", "csv", "bfile"}));

    std::size_t terms = 20;
    std::size_t order = 100;

    auto* gen = app.add_subcommand("gen", "Print the first terms of a sequence from its canonical offset");
    std::string gen_id;
    gen->add_option("id", gen_id, "A000045 A001006 A007440 A039834 A100223 A107587 A214649 A343386 A343773")
        ->required();
    gen->add_option("count", terms, "Number of terms")->check(CLI::PositiveNumber);
    gen->add_option("--terms,-n", terms, "Number of terms")->check(CLI::PositiveNumber);
    gen->add_option("--format", format_text, "plain, json, csv, bfile")
        ->check(CLI::IsMember({"plain", "json", "csv", "bfile"}));

    auto* verify = app.add_subcommand("verify", "Check an identity up to a given order");
    std::string identity;
    verify->add_option("identity", identity, identity_help())->required();
    verify->add_option("limit", order, "Highest index checked")->check(CLI::PositiveNumber);
    verify->add_option("--order", order, "Highest index checked")->check(CLI::PositiveNumber);

    auto* cmp = app.add_subcommand("compare", "Compare generated terms against an OEIS b-file");
    std::string cmp_id;
    std::string bfile_path;
    cmp->add_option("id", cmp_id, "Sequence id")->required();
    cmp->add_option("bfile", bfile_path, "Path to the b-file")->required();
    cmp->add_option("count", terms, "Number of terms")->check(CLI::PositiveNumber);
    cmp->add_option("--terms,-n", terms, "Number of terms")->check(CLI::PositiveNumber);

    auto* paths = app.add_subcommand("paths", "Count (and optionally list) Motzkin paths of length n by parity");
    std::size_t length = 0;
    bool list = false;
    std::string parity_text;
    paths->add_option("n", length, "Path length")->required();
    paths->add_flag("--list", list, "Print each path, D < H < U order (length <= 18)");
    paths->add_option("--parity", parity_text, "Only list even or odd paths")->check(CLI::IsMember({"even", "odd"}));

    auto* rev = app.add_subcommand("reverse", "Reverse the series c1 x + c2 x^2 + ...");
    std::vector<std::string> coeff_args;
    std::string coeff_file;
    rev->add_option("coefficients", coeff_args, "Coefficients of x^1, x^2, ... (integers or p/q)");
    rev->add_option("--file", coeff_file, "Read coefficients from a file instead");
    rev->add_option("--order", order, "Number of reverse coefficients to print")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        const OutputFormat format = *parse_format(format_text);
        if (gen->parsed()) {
            std::cout << cmd_gen(require_id(gen_id), terms, format) << '\n';
            return kExitPass;
        }
        if (verify->parsed()) {
            const VerifyReport report = cmd_verify(identity, order);
            std::cout << format_report(report) << '\n';
            return report.passed ? kExitPass : kExitFailure;
        }
        if (cmp->parsed()) {
            const ComparisonReport report = cmd_compare(require_id(cmp_id), bfile_path, terms);
            std::cout << format_report(report) << '\n';
            return report.status == ComparisonStatus::match ? kExitPass : kExitFailure;
        }
        if (paths->parsed()) {
            std::optional<Parity> filter;
            if (parity_text == "even") filter = Parity::even;
            if (parity_text == "odd") filter = Parity::odd;
            std::cout << cmd_paths(length, list || filter.has_value(), filter) << '\n';
            return kExitPass;
        }
        if (rev->parsed()) {
            std::string text;
            if (!coeff_file.empty()) {
                std::ifstream in(coeff_file);
                if (!in) throw std::runtime_error(coeff_file + ": cannot open");
                text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
            }
            for (const auto& a : coeff_args) text += ' ' + a;
            std::cout << cmd_reverse(parse_coefficients(text), order) << '\n';
            return kExitPass;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
