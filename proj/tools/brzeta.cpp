// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "brzeta/brzeta.h"

namespace {

struct Failure {
    brz_status status;
};

int exit_code(brz_status s)
{
    switch (s) {
    case BRZ_OK:
        return 0;
    case BRZ_SCHEMA:
        return 2;
    case BRZ_FORMULA:
        return 3;
    case BRZ_RESOURCE:
        return 4;
    default:
        return 1;
    }
}

void check(brz_status s)
{
    if (s != BRZ_OK) {
        std::cerr << "error: " << brz_last_error() << "\n";
        throw Failure{s};
    }
}

// Inline JSON, or the path of a file holding it.
std::string json_arg(const std::string& arg)
{
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
        return arg;
    std::ifstream in(arg);
    if (!in) {
        std::cerr << "error: cannot read '" << arg << "'\n";
        throw Failure{BRZ_SCHEMA};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "1,1" or "[1,1]" -> "[1,1]".
std::string class_arg(const std::string& arg)
{
    return arg.find('[') == std::string::npos ? "[" + arg + "]" : arg;
}

struct Output {
    std::string format = "json";
    std::optional<std::uint64_t> dirichlet;
};

void print_owned(char* text)
{
    std::cout << text;
    if (text[0] != '\0' && text[std::char_traits<char>::length(text) - 1] != '\n')
        std::cout << "\n";
    brz_string_free(text);
}

void print_table(brz_table* t, const Output& out)
{
    char* text = nullptr;
    const brz_status s = out.format == "json" ? brz_table_json(t, &text) : brz_table_csv(t, &text);
    const std::string warning = brz_table_warning(t);
    brz_table_free(t);
    check(s);
    if (!warning.empty())
        std::cerr << "warning: " << warning << "\n";
    print_owned(text);
}

void print_series(brz_series* s, const Output& out)
{
    const brz_status natural = brz_series_check_natural(s);
    if (natural == BRZ_FORMULA) {
        brz_series_free(s);
        check(natural);
    }
    if (out.dirichlet) {
        brz_table* t = nullptr;
        const brz_status st = brz_series_dirichlet(s, *out.dirichlet, &t);
        brz_series_free(s);
        check(st);
        print_table(t, out);
        return;
    }
    char* text = nullptr;
    brz_status st;
    if (out.format == "json")
        st = brz_series_json(s, &text);
    else if (out.format == "csv")
        st = brz_series_csv(s, &text);
    else
        st = brz_series_text(s, &text);
    brz_series_free(s);
    check(st);
    print_owned(text);
}

void add_output(CLI::App* cmd, Output& out, bool series)
{
    cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    if (series)
        cmd->add_option("--dirichlet", out.dirichlet, "Emit Dirichlet coefficients a_1..a_N instead of the series");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact submodule zeta functions of orders and their proliferations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(brz_version()));

    Output out;
    std::optional<std::uint32_t> truncate;
    const auto bound = [&](std::uint32_t fallback) { return truncate.value_or(fallback); };

    std::string data;
    bool inverse = false;
    auto* hey = app.add_subcommand("hey", "Hey product over a semisimple top");
    hey->add_option("--data", data, "Semisimple data (JSON or file)")->required();
    hey->add_flag("--inverse", inverse, "Moebius inverse polynomial instead");

    std::string spec;
    std::string partial;
    std::string mode = "two-variable";
    auto* her = app.add_subcommand("hereditary", "Projective modules over a basic hereditary order");
    her->add_option("--spec", spec, "{\"q\":..,\"n\":..,\"columns\":[..]} (JSON or file)")->required();
    her->add_option("--partial", partial, "Top class, e.g. 1,1: partial zeta of submodules with that top");
    her->add_option("--mode", mode, "two-variable, total or brs")
        ->check(CLI::IsMember({"two-variable", "total", "brs"}));

    std::string sigma;
    auto* lifted = app.add_subcommand("lifted-hey", "Lifted Hey product");
    lifted->add_option("--data", data, "Semisimple data (JSON or file)")->required();
    lifted->add_option("--sigma", sigma, "1-based permutation, e.g. [2,1]");

    std::string prolif_mode = "sum";
    auto* prolif = app.add_subcommand("prolif", "Proliferation of a slice by an invertible ideal");
    prolif->add_option("--spec", spec, "{\"base\":{..},\"sigma\":[..],\"truncate\":B} (JSON or file)")->required();
    prolif->add_option("--mode", prolif_mode, "sum, sliver or factored")
        ->check(CLI::IsMember({"sum", "sliver", "factored"}));

    std::uint32_t q = 2;
    std::uint64_t max = 0;
    auto* lustig = app.add_subcommand("lustig", "Ideal counts of F_q[[u,t]] by colength");
    lustig->add_option("--q", q)->required();
    lustig->add_option("--max", max, "Largest colength")->required();

    auto* rossmann = app.add_subcommand("rossmann", "Ideal counts of Z[[t]] by index");
    rossmann->add_option("--max", max, "Largest index")->required();

    std::uint32_t r = 1;
    std::uint32_t m = 1;
    std::uint32_t count = 1;
    auto* hom = app.add_subcommand("hom-slice", "Dirichlet coefficients of a lifted Hey product over one residue field");
    hom->add_option("--q", q)->required();
    hom->add_option("--r", r, "Degree of the residue field over F_q");
    hom->add_option("--m", m, "Rank of the slice")->required();
    hom->add_option("--count", count, "Number of equal factors");
    hom->add_option("--max", max, "Largest index")->required();

    std::string model;
    std::uint32_t colength = 0;
    std::string fiber;
    bool two_variable = false;
    auto* orc = app.add_subcommand("oracle", "Brute-force submodule enumeration in a finite model");
    orc->add_option("--model", model, "Model description (JSON or file)")->required();
    orc->add_option("--colength", colength, "Largest colength")->required();
    orc->add_option("--partial", partial, "Top class filter, e.g. 1,1");
    orc->add_option("--fiber", fiber, "Chain description (JSON or file): enumerate one fibre");
    orc->add_flag("--two-variable", two_variable, "Record top classes as w-exponents");

    std::string suite;
    auto* ver = app.add_subcommand("verify", "Run cross-check suites");
    ver->add_option("--suite", suite, "Suite name (default: all)");
    ver->add_option("--max", max, "Override the suite size parameter");
    bool list = false;
    ver->add_flag("--list", list, "List suites");
    std::string verify_format = "text";
    ver->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));

    for (auto* cmd : {hey, her, lifted, prolif, orc})
        cmd->add_option("--truncate", truncate, "Truncation degree (default 6)");
    for (auto* cmd : {hey, her, lifted, prolif, orc})
        add_output(cmd, out, true);
    for (auto* cmd : {lustig, rossmann, hom})
        add_output(cmd, out, false);

    CLI11_PARSE(app, argc, argv);

    try {
        brz_series* s = nullptr;
        brz_table* t = nullptr;
        if (hey->parsed()) {
            check(brz_hey(json_arg(data).c_str(), bound(6), inverse ? 1 : 0, &s));
            print_series(s, out);
        } else if (her->parsed()) {
            const brz_hereditary_mode hm = mode == "total" ? BRZ_HEREDITARY_TOTAL
                : mode == "brs"                            ? BRZ_HEREDITARY_BRS
                                                           : BRZ_HEREDITARY_TWO_VARIABLE;
            const std::string top = class_arg(partial);
            check(brz_hereditary(json_arg(spec).c_str(), bound(6), hm, partial.empty() ? nullptr : top.c_str(), &s));
            print_series(s, out);
        } else if (lifted->parsed()) {
            check(brz_lifted_hey(json_arg(data).c_str(), sigma.empty() ? nullptr : class_arg(sigma).c_str(), bound(6),
                                 &s));
            print_series(s, out);
        } else if (prolif->parsed()) {
            const std::string doc = json_arg(spec);
            std::int64_t b = truncate ? static_cast<std::int64_t>(*truncate) : -1;
            if (!truncate) {
                const auto j = nlohmann::json::parse(doc, nullptr, false);
                if (!j.is_object() || !j.contains("truncate"))
                    b = 6;
            }
            const brz_prolif_mode pm = prolif_mode == "sliver" ? BRZ_PROLIF_SLIVER
                : prolif_mode == "factored"                    ? BRZ_PROLIF_FACTORED
                                                               : BRZ_PROLIF_SUM;
            if (pm == BRZ_PROLIF_FACTORED && out.format == "json" && !out.dirichlet) {
                brz_series* pre = nullptr;
                brz_series* rem = nullptr;
                check(brz_prolif(doc.c_str(), b, pm, &s, &pre, &rem));
                nlohmann::json j;
                for (auto [key, part] : {std::pair{"product", s}, std::pair{"prefactor", pre}, std::pair{"remainder", rem}}) {
                    char* text = nullptr;
                    const brz_status st = brz_series_json(part, &text);
                    brz_series_free(part);
                    check(st);
                    j[key] = nlohmann::json::parse(text);
                    brz_string_free(text);
                }
                std::cout << j.dump() << "\n";
            } else {
                check(brz_prolif(doc.c_str(), b, pm, &s, nullptr, nullptr));
                print_series(s, out);
            }
        } else if (lustig->parsed()) {
            check(brz_lustig(q, static_cast<std::uint32_t>(max), &t));
            print_table(t, out);
        } else if (rossmann->parsed()) {
            check(brz_rossmann(max, &t));
            print_table(t, out);
        } else if (hom->parsed()) {
            check(brz_hom_slice(q, r, m, count, max, &t));
            print_table(t, out);
        } else if (orc->parsed()) {
            const std::string top = class_arg(partial);
            const std::string chain = fiber.empty() ? std::string() : json_arg(fiber);
            check(brz_oracle(json_arg(model).c_str(), colength, partial.empty() ? nullptr : top.c_str(),
                             fiber.empty() ? nullptr : chain.c_str(), two_variable ? 1 : 0, &s));
            print_series(s, out);
        } else if (ver->parsed()) {
            char* text = nullptr;
            if (list) {
                check(brz_verify_suites(&text));
                print_owned(text);
                return 0;
            }
            int passed = 0;
            check(brz_verify(suite.empty() ? nullptr : suite.c_str(), ver->count("--max") ? static_cast<std::int64_t>(max) : -1,
                             &text, &passed));
            const auto results = nlohmann::json::parse(text);
            brz_string_free(text);
            if (verify_format == "json") {
                std::cout << results.dump() << "\n";
            } else {
                for (const auto& res : results) {
                    std::cout << (res["passed"].get<bool>() ? "PASS" : "FAIL") << "  " << res["id"].get<unsigned>() << " "
                              << res["suite"].get<std::string>() << " (" << res["checks"].get<std::size_t>() << " checks)";
                    if (res.contains("mismatch")) {
                        const auto& mm = res["mismatch"];
                        std::cout << ": " << mm["where"].get<std::string>() << " at " << mm["monomial"].get<std::string>()
                                  << ": expected " << mm["expected"].get<std::string>() << ", got "
                                  << mm["actual"].get<std::string>();
                    }
                    if (res.contains("error"))
                        std::cout << ": error: " << res["error"].get<std::string>();
                    std::cout << "\n";
                }
            }
            return passed ? 0 : 3;
        }
    } catch (const Failure& f) {
        return exit_code(f.status);
    }
    return 0;
}
