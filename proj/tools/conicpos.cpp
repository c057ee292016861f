// conicpos: relative position of an ellipse and a parabola or hyperbola.
//
// Input: a file (or "-" for stdin) with two conics, one per line, each given
// by the six coefficients A B C D E F of
//
//     A x^2 + B xy + C y^2 + D x + E y + F = 0
//
// Coefficients may be integers, decimals or fractions "p/q"; they are read
// exactly.

#include "conicpos/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace conicpos;

double tolerance_from_env(double fallback)
{
    const char* env = std::getenv("CONIC_TOL");
    if (!env || !*env)
        return fallback;
    try {
        return parse_rational(env).get_d();
    } catch (const Error&) {
        throw Error(ErrorCode::ParseError, std::string("CONIC_TOL='") + env + "'");
    }
}

int fail(const Error& e, bool json)
{
    if (json)
        std::cout << nlohmann::json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
    std::cerr << "conicpos: " << e.what() << "\n";
    return cli::exit_code(e.code());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Classify the relative position of an ellipse and a parabola or hyperbola"};

    std::string input;
    std::string mode = "auto";
    bool exact = false, use_float = false, verify = false, json = false;
    std::optional<double> tol;
    std::string svg, sweep_file, log_file;
    int steps = 10;

    app.add_option("input", input, "file with two conics (A B C D E F per line), '-' for stdin")->required();
    app.add_option("--mode", mode, "auto | parabola-ellipse | hyperbola-ellipse")
        ->check(CLI::IsMember({"auto", "parabola-ellipse", "hyperbola-ellipse"}));
    auto* exact_flag = app.add_flag("--exact", exact, "exact rational arithmetic (default)");
    app.add_flag("--float", use_float, "double arithmetic with a zero tolerance")->excludes(exact_flag);
    app.add_option("--tol", tol, "relative zero tolerance in float mode (env CONIC_TOL)");
    app.add_flag("--verify", verify, "cross-check with the root-pattern and geometric oracles");
    app.add_option("--svg", svg, "write an SVG figure of the pair");
    app.add_option("--sweep", sweep_file, "second pair: sweep linearly from the input pair to this one");
    app.add_option("--steps", steps, "number of sweep intervals")->check(CLI::PositiveNumber);
    app.add_flag("--json", json, "one JSON object per line");
    app.add_option("--counterexample-log", log_file, "append oracle disagreements to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        cli::Request req;
        req.mode = cli::parse_mode(mode);
        req.arithmetic = use_float ? cli::Arithmetic::Float : cli::Arithmetic::Exact;
        req.tol = tol ? *tol : tolerance_from_env(1e-10);
        req.verify = verify;
        if (!log_file.empty())
            req.counterexampleLog = log_file;
        if (!svg.empty())
            req.svgPath = svg;

        const auto pair = input == "-" ? cli::read_pair(std::cin) : cli::read_pair_file(input);
        req.conicA = pair.first;
        req.conicB = pair.second;

        if (!sweep_file.empty()) {
            req.sweepTo = cli::read_pair_file(sweep_file);
            req.steps = steps;
            const cli::SweepReport s = cli::run_sweep(req);
            if (json)
                for (const auto& line : cli::format_sweep_json(s))
                    std::cout << line << "\n";
            else
                std::cout << cli::format_sweep_text(s);
            return 0;
        }

        const cli::Report r = cli::run(req);
        if (json)
            std::cout << cli::to_json(r).dump() << "\n";
        else
            std::cout << cli::format_text(r);
        if (req.svgPath)
            cli::render_svg(cli::to_conic(r.curve), cli::to_conic(r.ellipse), r, *req.svgPath);
        if (r.oracleCase && *r.oracleCase != r.caseNumber)
            return 7;
        if (r.coarse && *r.coarse != "ok")
            return 7;
        return 0;
    } catch (const Error& e) {
        return fail(e, json);
    }
}
