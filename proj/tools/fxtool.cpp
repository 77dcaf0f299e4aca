#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fxp/conformance/corpus.hpp"
#include "fxp/conformance/expr.hpp"
#include "fxp/conformance/fuzz.hpp"

using json = nlohmann::json;

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

void print_value(const fxp::FixedValue& v) {
    std::cout << v.format().name() << " raw " << v.raw_hex() << " (" << v.raw()
              << ") = " << fxp::render_exact_decimal(v.value()) << "\n";
}

int cmd_info(const std::string& fmt_name) {
    fxp::FixedFormat f = fxp::FixedFormat::parse(fmt_name);
    auto show = [](const fxp::ExactValue& x) {
        return fxp::render_exact_decimal(x) + " (~" +
               std::to_string(x.convert_to<double>()) + ")";
    };
    std::cout << f.name() << "\n"
              << "  storage bits: " << f.storage_bits() << "\n"
              << "  epsilon:      " << show(f.epsilon()) << "\n"
              << "  min:          " << show(f.min_value()) << "\n"
              << "  max:          " << show(f.max_value()) << "\n";
    return 0;
}

int cmd_convert(const std::string& value, const std::string& to,
                fxp::RoundingMode mode, fxp::OverflowPolicy policy, bool gcc) {
    fxp::FixedFormat dst = fxp::FixedFormat::parse(to);
    fxp::FixedValue out;
    if (value.starts_with("b32:") || value.starts_with("b64:")) {
        auto in = fxp::CorpusInput::parse(value);
        out = gcc ? fxp::emulated_from_ieee(in.ieee, dst)
                  : fxp::from_ieee(in.ieee, dst, mode, policy);
    } else if (auto colon = value.find(':');
               colon != std::string::npos && value.starts_with("0x")) {
        // raw-bits form: 0xC000:s16.15
        auto src = fxp::FixedFormat::parse(value.substr(colon + 1));
        auto in = fxp::CorpusInput::parse(src.name() + ":" + value.substr(0, colon));
        out = gcc ? fxp::emulated_convert(in.fixed, dst)
                  : fxp::convert_fixed(in.fixed, dst, mode, policy);
    } else {
        out = gcc ? fxp::emulated_parse(value, dst)
                  : fxp::parse_decimal(value, dst, mode, policy);
    }
    print_value(out);
    return 0;
}

int cmd_eval(const std::string& expr, fxp::RoundingMode mode,
             fxp::OverflowPolicy policy, bool gcc) {
    fxp::EvalOptions opt;
    opt.profile = gcc ? fxp::BehaviorProfile::gcc() : fxp::BehaviorProfile::correct(mode);
    opt.mode = mode;
    opt.policy = policy;
    auto res = fxp::eval_expression(expr, opt);
    print_value(res.value);
    return 0;
}

int cmd_corpus_run(const std::string& path, bool as_json) {
    auto cases = fxp::load_corpus(path);
    auto results = fxp::run_corpus(cases);
    int failures = 0;
    json report = json::array();
    for (const auto& r : results) {
        if (r.status != fxp::CaseResult::Status::Pass)
            ++failures;
        if (as_json) {
            report.push_back({{"id", r.id},
                              {"status", fxp::CaseResult::status_token(r.status)},
                              {"got", r.got},
                              {"expected", r.expected},
                              {"exact_value", r.exact_value}});
        } else {
            std::cout << fxp::CaseResult::status_token(r.status) << " " << r.id;
            if (r.status != fxp::CaseResult::Status::Pass)
                std::cout << "  got " << r.got << " expected " << r.expected;
            std::cout << "\n";
        }
    }
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << results.size() - failures << "/" << results.size()
                  << " cases passed\n";
    return failures == 0 ? 0 : 1;
}

int cmd_fuzz(std::uint64_t seed, int count, const std::string& formats,
             const std::string& profiles, bool as_json) {
    fxp::FuzzConfig cfg;
    cfg.seed = seed;
    cfg.count = count;
    for (const auto& f : split_commas(formats))
        cfg.formats.push_back(fxp::FixedFormat::parse(f));
    cfg.run_gcc = false;
    for (const auto& p : split_commas(profiles)) {
        if (p == "gcc")
            cfg.run_gcc = true;
        else if (p != "correct")
            throw fxp::ParseError("unknown profile '" + p + "'");
    }
    auto rep = fxp::fuzz(cfg);
    if (as_json) {
        json buckets = json::object();
        for (const auto& [b, n] : rep.buckets)
            buckets[std::string(fxp::to_token(b))] = n;
        json out = {{"cases", rep.cases},
                    {"oracle_mismatches", rep.oracle_mismatches},
                    {"gcc_divergences", rep.gcc_divergences},
                    {"unbucketed", rep.unbucketed},
                    {"buckets", buckets},
                    {"max_error_by_format_pair", rep.max_error_by_format_pair}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "cases:             " << rep.cases << "\n"
                  << "oracle mismatches: " << rep.oracle_mismatches << "\n"
                  << "gcc divergences:   " << rep.gcc_divergences << "\n"
                  << "unbucketed:        " << rep.unbucketed << "\n";
        for (const auto& [b, n] : rep.buckets)
            std::cout << "  " << fxp::to_token(b) << ": " << n << "\n";
        for (const auto& [pair, err] : rep.max_error_by_format_pair)
            std::cout << "max |gcc - exact| for (" << pair << "): " << err << "\n";
        for (const auto& s : rep.samples)
            std::cout << "  [" << fxp::to_token(s.bucket) << "] " << s.description
                      << "\n";
        for (const auto& s : rep.oracle_mismatch_samples)
            std::cout << "  [ORACLE MISMATCH] " << s << "\n";
    }
    return rep.clean() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exactly rounded ISO 18037-style fixed-point arithmetic, with a "
                 "gcc-emulation profile and conformance tooling"};
    app.require_subcommand(1);

    std::string fmt_name, value, to, expr, path;
    std::string mode_tok = "nearest-even", policy_tok = "sat", profile_tok = "correct";
    std::string formats_opt = "s16.15,u0.32", profiles_opt = "correct,gcc";
    bool as_json = false;
    std::uint64_t seed = 1;
    int count = 10000;

    auto* info = app.add_subcommand("info", "Show a format's epsilon/min/max");
    info->add_option("format", fmt_name)->required();

    auto add_rounding_opts = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode_tok, "down|up|tozero|nearest-even|nearest-away");
        cmd->add_option("--policy", policy_tok, "sat|wrap|err");
        cmd->add_option("--profile", profile_tok, "correct|gcc");
    };

    auto* convert = app.add_subcommand(
        "convert", "Convert a decimal literal, raw (0xHEX:fmt) or IEEE "
                   "(b32:0xHEX / b64:0xHEX) value to a fixed format");
    convert->add_option("value", value)->required();
    convert->add_option("--to", to)->required();
    add_rounding_opts(convert);

    auto* eval = app.add_subcommand("eval", "Evaluate a fixed-point expression");
    eval->add_option("expr", expr)->required();
    add_rounding_opts(eval);

    auto* corpus = app.add_subcommand("corpus", "Corpus operations");
    auto* corpus_run = corpus->add_subcommand("run", "Run a corpus file");
    corpus_run->add_option("file", path)->required();
    corpus_run->add_flag("--json", as_json);

    auto* fuzz = app.add_subcommand(
        "fuzz", "Differential fuzzing against the exact oracle");
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--count", count);
    fuzz->add_option("--formats", formats_opt, "comma-separated format list");
    fuzz->add_option("--profiles", profiles_opt, "comma-separated: correct,gcc");
    fuzz->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        fxp::RoundingMode mode = fxp::parse_rounding_mode(mode_tok);
        fxp::OverflowPolicy policy = fxp::parse_overflow_policy(policy_tok);
        bool gcc = fxp::BehaviorProfile::parse(profile_tok).name == "gcc";
        if (info->parsed())
            return cmd_info(fmt_name);
        if (convert->parsed())
            return cmd_convert(value, to, mode, policy, gcc);
        if (eval->parsed())
            return cmd_eval(expr, mode, policy, gcc);
        if (corpus_run->parsed())
            return cmd_corpus_run(path, as_json);
        if (fuzz->parsed())
            return cmd_fuzz(seed, count, formats_opt, profiles_opt, as_json);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const fxp::CorpusParseError& e) {
        std::cerr << "corpus parse error: " << e.what() << "\n";
        return 2;
    } catch (const fxp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const fxp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
