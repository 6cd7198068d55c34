#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "plethabacus/plethabacus.hpp"

namespace pa = plethabacus;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw usage_error("not an integer: '" + item + "'");
        }
        if (used != item.size())
            throw usage_error("not an integer: '" + item + "'");
        out.push_back(value);
    }
    if (out.empty())
        throw usage_error("empty list '" + text + "'");
    return out;
}

// "a,b,c" or "-" for the empty partition.
pa::partition parse_partition(const std::string& text) {
    if (text == "-")
        return {};
    try {
        return pa::partition(parse_int_list(text));
    } catch (const pa::invalid_partition& e) {
        throw usage_error("invalid partition '" + text + "': " + e.what());
    }
}

// "a..b" or a single "a".
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int_list(text).at(0);
        return {v, v};
    }
    const auto lo = parse_int_list(text.substr(0, dots));
    const auto hi = parse_int_list(text.substr(dots + 2));
    if (lo.size() != 1 || hi.size() != 1)
        throw usage_error("invalid range '" + text + "'");
    return {lo[0], hi[0]};
}

std::string join_moves(const pa::move_sequence& moves) {
    std::string out;
    for (const auto& mv : moves)
        out += (out.empty() ? "" : " ") + ("(" + std::to_string(mv.from) + "," + std::to_string(mv.to) + ")");
    return out;
}

std::string signed_string(int s) { return s > 0 ? "+" + std::to_string(s) : std::to_string(s); }

struct expand_args {
    std::string nu;
    int r = 1;
    std::optional<int> m;
    std::string ms;
    std::string format = "text";
};

int run_expand(const expand_args& args) {
    const auto nu = parse_partition(args.nu);
    if (args.r < 1)
        throw usage_error("--r must be positive");
    pa::schur_expansion result;
    if (!args.ms.empty()) {
        const auto ms = parse_int_list(args.ms);
        for (int m : ms)
            if (m < 1)
                throw usage_error("--ms entries must be positive");
        result = pa::plethystic_mn_multi(nu, args.r, ms);
    } else if (args.m) {
        if (*args.m < 1)
            throw usage_error("--m must be positive");
        result = pa::plethystic_mn(nu, args.r, *args.m);
    } else {
        throw usage_error("one of --m or --ms is required");
    }
    if (args.format == "json")
        std::cout << nlohmann::json(result).dump() << '\n';
    else
        std::cout << result.to_string() << '\n';
    return exit_ok;
}

struct shape_args {
    std::string lambda;
    std::string nu;
    int r = 1;
    std::optional<int> beads;
    std::string format = "text";
};

int run_sgn(const shape_args& args, bool full) {
    const auto lambda = parse_partition(args.lambda);
    const auto nu = parse_partition(args.nu);
    if (args.r < 1)
        throw usage_error("--r must be positive");
    pa::skew_partition sk;
    try {
        sk = pa::skew_partition(lambda, nu);
    } catch (const pa::not_contained& e) {
        throw usage_error(e.what());
    }
    const int b = args.beads.value_or(static_cast<int>(lambda.length()));
    if (b < static_cast<int>(lambda.length()))
        throw usage_error("--beads must be at least the number of parts of lambda");
    const int shift = b - static_cast<int>(lambda.length());

    auto dec = pa::r_decompose(sk, args.r);
    if (dec) {
        for (auto& mv : dec->moves) {
            mv.from += shift;
            mv.to += shift;
        }
        dec->bead_count = b;
    }
    const int sign = dec ? dec->sign() : 0;

    const auto a = pa::abacus_for(lambda, b);
    const auto c = pa::abacus_for(nu, b);
    std::optional<std::vector<pa::runner_type>> types;
    try {
        types = pa::classify_runners(a, c, args.r);
    } catch (const pa::incompatible_abaci&) {
    }
    std::optional<pa::type_ii_pairing> pairing;
    if (full && types && std::ranges::count(*types, pa::runner_type::II) == 1 &&
        std::ranges::count(*types, pa::runner_type::III) == 0)
        pairing = pa::pairing_witness(a, c, args.r);

    if (args.format == "json") {
        nlohmann::json out = {{"lambda", lambda}, {"nu", nu}, {"r", args.r}, {"bead_count", b}, {"sign", sign}};
        out["decomposition"] = dec ? nlohmann::json(*dec) : nlohmann::json(nullptr);
        if (types) {
            auto names = nlohmann::json::array();
            for (auto t : *types)
                names.push_back(pa::to_string(t));
            out["runner_types"] = names;
        } else {
            out["runner_types"] = nullptr;
        }
        if (full) {
            out["pairing"] = pairing ? nlohmann::json(*pairing) : nlohmann::json(nullptr);
            if (sk.size() % args.r == 0)
                out["recursion"] = pa::sign_recursion_check(sk, args.r);
        }
        std::cout << out.dump() << '\n';
        return exit_ok;
    }

    std::cout << "sgn_" << args.r << "(" << sk.to_string() << ") = " << signed_string(sign) << '\n';
    if (dec) {
        std::cout << "heights: ";
        for (std::size_t i = 0; i < dec->heights.size(); ++i)
            std::cout << (i ? "," : "") << dec->heights[i];
        std::cout << '\n';
        std::cout << "chain:";
        for (const auto& mu : dec->chain)
            std::cout << ' ' << mu.to_string();
        std::cout << '\n';
        if (full)
            std::cout << "moves: " << join_moves(dec->moves) << '\n';
    } else {
        std::cout << "not " << args.r << "-decomposable\n";
    }
    std::cout << "runner types:";
    if (types) {
        for (std::size_t t = 0; t < types->size(); ++t)
            std::cout << ' ' << t << ':' << pa::to_string((*types)[t]);
    } else {
        std::cout << " unavailable (runners hold different numbers of beads)";
    }
    std::cout << '\n';
    if (pairing) {
        std::cout << "pairing: runner " << pairing->runner << ", delta=" << pairing->delta
                  << " delta*=" << pairing->delta_star << " alpha=" << pairing->alpha
                  << " alpha*=" << pairing->alpha_star << '\n';
        for (const auto& term : pairing->terms)
            std::cout << "  gamma=" << term.gamma << ": mu=" << term.mu.to_string() << " ("
                      << signed_string(term.summand) << "), mu*=" << term.mu_star.to_string() << " ("
                      << signed_string(term.summand_star) << "), |J|=" << term.inversions.pairs.size()
                      << " |J*|=" << term.inversions_star.pairs.size() << '\n';
    }
    return exit_ok;
}

struct abacus_args {
    std::string lambda;
    int runners = 1;
    std::optional<int> beads;
    std::string format = "text";
};

int run_abacus(const abacus_args& args) {
    const auto lambda = parse_partition(args.lambda);
    if (args.runners < 1)
        throw usage_error("--runners must be positive");
    const int b = args.beads.value_or(static_cast<int>(lambda.length()));
    if (b < static_cast<int>(lambda.length()))
        throw usage_error("--beads must be at least the number of parts of lambda");
    const auto a = pa::abacus_for(lambda, b);
    if (args.format == "json") {
        nlohmann::json out = a;
        out["runners"] = args.runners;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << pa::render_runners(a, args.runners);
    }
    return exit_ok;
}

struct verify_args {
    int max_nu_size = 4;
    std::string r_range = "1..3";
    std::string m_range = "1..3";
    int max_degree = 12;
    int jobs = 1;
};

int run_verify(const verify_args& args) {
    pa::verify_config config;
    config.max_nu_size = args.max_nu_size;
    std::tie(config.r_min, config.r_max) = parse_range(args.r_range);
    std::tie(config.m_min, config.m_max) = parse_range(args.m_range);
    config.max_degree = args.max_degree;
    config.jobs = args.jobs;
    try {
        config.validate();
    } catch (const pa::error& e) {
        throw usage_error(e.what());
    }
    const auto summary = pa::run_verify(config, &std::cerr);
    std::cout << "expansions: " << summary.expansion_cases << " checked, " << summary.expansion_failures
              << " failed\n";
    std::cout << "sign recursion: " << summary.recursion_cases << " shapes checked, " << summary.recursion_failures
              << " failed\n";
    if (summary.first_counterexample)
        std::cout << "first counterexample: " << *summary.first_counterexample << '\n';
    std::cout << (summary.passed() ? "PASS" : "FAIL") << '\n';
    return summary.passed() ? exit_ok : exit_mismatch;
}

int default_jobs() {
    if (const char* env = std::getenv("PLETHABACUS_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plethystic Murnaghan-Nakayama rule on James' abacus"};
    app.require_subcommand(1);

    expand_args expand;
    auto* expand_cmd = app.add_subcommand("expand", "Schur expansion of s_nu (p_r o h_m) or s_nu (p_r o h_m1...h_md)");
    expand_cmd->add_option("--nu", expand.nu, "Partition a,b,c or - for empty")->required();
    expand_cmd->add_option("--r", expand.r, "Power sum degree")->required();
    auto* m_opt = expand_cmd->add_option("--m", expand.m, "Degree of h");
    auto* ms_opt = expand_cmd->add_option("--ms", expand.ms, "Comma list of h degrees");
    m_opt->excludes(ms_opt);
    expand_cmd->add_option("--format", expand.format)->check(CLI::IsMember({"text", "json"}));

    shape_args sgn;
    auto add_shape = [&sgn](CLI::App* cmd) {
        cmd->add_option("--lambda", sgn.lambda, "Outer partition")->required();
        cmd->add_option("--nu", sgn.nu, "Inner partition")->required();
        cmd->add_option("--r", sgn.r, "Strip length")->required();
        cmd->add_option("--beads", sgn.beads, "Bead count of the abaci (default: parts of lambda)");
        cmd->add_option("--format", sgn.format)->check(CLI::IsMember({"text", "json"}));
    };
    auto* sgn_cmd = app.add_subcommand("sgn", "sgn_r of a skew shape with its final-strip chain");
    add_shape(sgn_cmd);
    auto* decompose_cmd = app.add_subcommand("decompose", "sgn with moves, pairing and recursion details");
    add_shape(decompose_cmd);

    abacus_args abacus;
    auto* abacus_cmd = app.add_subcommand("abacus", "Render the r-runner abacus of a partition");
    abacus_cmd->add_option("--lambda", abacus.lambda, "Partition")->required();
    abacus_cmd->add_option("--runners,--r", abacus.runners, "Number of runners");
    abacus_cmd->add_option("--beads", abacus.beads, "Bead count (default: parts of lambda)");
    abacus_cmd->add_option("--format", abacus.format)->check(CLI::IsMember({"text", "json"}));

    verify_args verify;
    verify.jobs = default_jobs();
    auto* verify_cmd = app.add_subcommand("verify", "Check the rule against the polynomial oracle");
    verify_cmd->add_option("--max-nu-size", verify.max_nu_size)->capture_default_str();
    verify_cmd->add_option("--r-range", verify.r_range)->capture_default_str();
    verify_cmd->add_option("--m-range", verify.m_range)->capture_default_str();
    verify_cmd->add_option("--max-degree", verify.max_degree)->capture_default_str();
    verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (default from PLETHABACUS_JOBS)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (expand_cmd->parsed())
            return run_expand(expand);
        if (sgn_cmd->parsed())
            return run_sgn(sgn, false);
        if (decompose_cmd->parsed())
            return run_sgn(sgn, true);
        if (abacus_cmd->parsed())
            return run_abacus(abacus);
        if (verify_cmd->parsed())
            return run_verify(verify);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const pa::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
