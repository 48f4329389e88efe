#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "hagge4/svg_render.hpp"
#include "hagge4/verify.hpp"

namespace {

// Exit codes: 0 all checks pass (documented discrepancies do not fail),
// 1 usage or validation error, 2 at least one check failed.
constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

struct ParamFlags {
    std::string a, b, c, p;
};

void add_param_flags(CLI::App& cmd, ParamFlags& raw) {
    cmd.add_option("-a", raw.a, "parameter a (rational literal)")->required();
    cmd.add_option("-b", raw.b, "parameter b (rational literal)")->required();
    cmd.add_option("-c", raw.c, "parameter c (rational literal)")->required();
    cmd.add_option("-p", raw.p, "parameter p (rational literal)")->required();
}

// Parses one flag value; a bad literal is a usage error naming the flag.
hagge::Rational parse_flag(const std::string& flag, const std::string& text) {
    try {
        return hagge::Rational::parse(text);
    } catch (const hagge::Error&) {
        throw hagge::ParseError(flag + ": not a rational literal \"" + text + "\"");
    }
}

hagge::QuadConfig config_from_flags(const ParamFlags& raw) {
    const hagge::Rational a = parse_flag("-a", raw.a);
    const hagge::Rational b = parse_flag("-b", raw.b);
    const hagge::Rational c = parse_flag("-c", raw.c);
    const hagge::Rational p = parse_flag("-p", raw.p);
    return hagge::QuadConfig::make(a, b, c, p);
}

int cmd_verify(const ParamFlags& raw, bool json, const std::string& check_id) {
    hagge::VerificationReport report = hagge::run_all(config_from_flags(raw));

    if (!check_id.empty()) {
        std::vector<hagge::CheckResult> selected;
        for (auto& chk : report.checks) {
            if (chk.id == check_id)
                selected.push_back(std::move(chk));
        }
        if (selected.empty())
            throw hagge::InvalidParameter("--check: unknown id '" + check_id + "'");
        report.checks = std::move(selected);
        report.pass = report.checks.front().passing();
    }

    std::cout << (json ? hagge::to_json(report) + "\n" : hagge::to_text(report));
    return report.pass ? kExitPass : kExitCheckFailed;
}

int cmd_sample(std::uint64_t seed, int count, int max_mag, bool json) {
    const std::vector<hagge::QuadConfig> configs = hagge::sample_configs(seed, count, max_mag);

    int passed = 0;
    std::string json_body;
    for (size_t i = 0; i < configs.size(); ++i) {
        const hagge::QuadConfig& cfg = configs[i];
        const hagge::VerificationReport report = hagge::run_all(cfg);
        if (report.pass)
            ++passed;
        if (json) {
            if (i > 0)
                json_body += ",";
            json_body += hagge::to_json(report);
        } else {
            std::cout << "[" << (i + 1) << "/" << configs.size() << "] a=" << report.a
                      << " b=" << report.b << " c=" << report.c << " d=" << report.d
                      << " p=" << report.p << "  " << (report.pass ? "PASS" : "FAIL") << "\n";
        }
    }
    if (json)
        std::cout << "[" << json_body << "]\n";
    else
        std::cout << passed << "/" << configs.size() << " pass\n";
    return passed == static_cast<int>(configs.size()) ? kExitPass : kExitCheckFailed;
}

int cmd_render(const ParamFlags& raw, const std::string& figure, const std::string& out_path,
               int size_px) {
    const hagge::QuadConfig cfg = config_from_flags(raw);
    hagge::RenderSpec spec;
    spec.figure = figure == "hagge" ? hagge::Figure::Hagge : hagge::Figure::Config;
    spec.size_px = size_px;
    spec.out_path = out_path;

    const std::string svg = hagge::render_svg(cfg, spec);
    std::ofstream out(spec.out_path, std::ios::binary);
    if (!out || !(out << svg) || !out.flush())
        throw hagge::InvalidParameter("--out: cannot write '" + spec.out_path + "'");
    std::cout << "wrote " << spec.out_path << " (" << svg.size() << " bytes)\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier and renderer for the four-Hagge-circle configuration"};
    app.require_subcommand(1);

    ParamFlags verify_raw;
    bool verify_json = false;
    std::string verify_check;
    CLI::App* verify = app.add_subcommand("verify", "run the full check catalogue");
    add_param_flags(*verify, verify_raw);
    verify->add_flag("--json", verify_json, "emit the report as JSON");
    verify->add_option("--check", verify_check, "restrict the report to one catalogue id");

    ParamFlags render_raw;
    std::string figure;
    std::string out_path;
    int size_px = 800;
    CLI::App* render = app.add_subcommand("render", "render a figure as SVG");
    render->add_option("--figure", figure, "figure to draw")
        ->required()
        ->check(CLI::IsMember({"config", "hagge"}));
    add_param_flags(*render, render_raw);
    render->add_option("--out", out_path, "output SVG path")->required();
    render->add_option("--size", size_px, "rendered width in pixels (minimum 100)");

    std::uint64_t seed = 0;
    int count = 0;
    int max_mag = 9;
    bool sample_json = false;
    CLI::App* sample = app.add_subcommand("sample", "verify seeded random configurations");
    sample->add_option("--count", count, "number of configurations")->required();
    sample->add_option("--seed", seed, "RNG seed")->required();
    sample->add_option("--max-mag", max_mag, "numerator/denominator magnitude bound");
    sample->add_flag("--json", sample_json, "emit an array of JSON reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(verify_raw, verify_json, verify_check);
        if (render->parsed())
            return cmd_render(render_raw, figure, out_path, size_px);
        return cmd_sample(seed, count, max_mag, sample_json);
    } catch (const hagge::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
