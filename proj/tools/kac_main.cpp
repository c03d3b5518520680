#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kac/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Kac-module composition factor calculator for gl(m|n)"};
    app.require_subcommand(1);

    kac::cli::Request req;
    std::string weight;
    long long margin = -1;

    const auto add_common = [&](CLI::App* sub, bool takes_theta) {
        sub->add_option("weight", weight,
                        "weight text; omit to read one weight per line from stdin");
        sub->add_option("--notation", req.notation, "shifted | partition")
            ->check(CLI::IsMember({"shifted", "partition"}))
            ->capture_default_str();
        sub->add_option("--format", req.format, "text | json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_option("--margin", margin, "search margin (oracle) / slack (diagram)");
        if (takes_theta)
            sub->add_option("--theta", req.theta_text, "comma-separated lowering tuple");
    };

    add_common(app.add_subcommand("factors", "composition factor highest weights"), false);
    add_common(app.add_subcommand("theta", "admissible lowering tuples"), false);
    add_common(app.add_subcommand("codes", "permissible codes with their tuples"), false);
    add_common(app.add_subcommand("nqc", "relation table, gaps and chain bounds"), false);
    add_common(app.add_subcommand("diagram", "composite Young diagram, optionally labeled"), true);
    add_common(app.add_subcommand("verify", "cross-check the whole pipeline"), false);

    app.get_subcommand("factors")->add_flag("--verify", req.verify_factors,
                                            "check raising witnesses (and the brute-force "
                                            "search when the degree is small)");
    app.get_subcommand("factors")->add_flag("--trace", req.with_trace,
                                            "include lowering traces in JSON output");

    CLI11_PARSE(app, argc, argv);
    req.subcommand = app.get_subcommands().front()->get_name();
    req.margin = margin;

    int worst = 0;
    const auto run_one = [&](const std::string& text) {
        req.weight_text = text;
        const kac::cli::Response res = kac::cli::run(req);
        (res.exit_code == 0 ? std::cout : std::cerr) << res.output;
        worst = std::max(worst, res.exit_code);
    };

    if (!weight.empty()) {
        run_one(weight);
    } else {
        std::string line;
        while (std::getline(std::cin, line))
            if (!line.empty()) run_one(line);
    }
    return worst;
}
