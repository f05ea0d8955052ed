// ptfsynth: command-line front end for the ptf library.
//
// Exit codes: 0 ok, 1 verification or bound failure, 2 usage error, 3 size guard.

#include "ptf/ptf_synth.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kTooLarge = 3;

// 2^12 entries; anything longer must come from a file.
constexpr std::size_t kMaxLiteral = 4096;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

ptf::BooleanFunction load_table(const std::string& arg, const std::string& format) {
    std::string text;
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        text = strip(read_file(arg));
    } else {
        if (arg.size() > kMaxLiteral) throw UsageError("truth tables above 4096 characters must be passed as a file");
        text = arg;
    }
    if (text.empty()) throw UsageError("empty truth table");
    if (format == "binary") return ptf::parse_truth_table(text, ptf::TableFormat::binary);
    if (format == "hex") return ptf::parse_truth_table(text, ptf::TableFormat::hex);
    const bool binary = text.find_first_not_of("01") == std::string::npos;
    return ptf::parse_truth_table(text, binary ? ptf::TableFormat::binary : ptf::TableFormat::hex);
}

unsigned default_workers() {
    if (const char* env = std::getenv("PTF_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return static_cast<unsigned>(w);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_analyze(const ptf::BooleanFunction& f) {
    const auto cls = ptf::classify(f);
    const auto spectrum = ptf::walsh_spectrum(f);
    ptf::Json out = {{"n", f.n()},
                     {"m", cls.sparsity_m},
                     {"majority", cls.majority_sign},
                     {"bent", cls.is_bent},
                     {"semi_bent", cls.is_semibent},
                     {"walsh", spectrum.omega}};
    std::cout << out.dump() << '\n';
    return kOk;
}

int cmd_synth(const ptf::BooleanFunction& f, const std::string& method, const std::string& out_path) {
    const auto cls = ptf::classify(f);
    ptf::Method chosen = ptf::choose_method(f, cls);
    if (method == "general") chosen = ptf::Method::general;
    if (method == "bent") chosen = ptf::Method::bent;
    if (method == "sparse") chosen = ptf::Method::sparse;

    ptf::Json cert;
    std::optional<ptf::Ptf> p;
    bool ok = false;
    switch (chosen) {
        case ptf::Method::bent: {
            auto s = ptf::synthesize_bent(f);
            cert = ptf::to_json(s.certificate);
            ok = s.certificate.verified;
            p = std::move(s.ptf);
            break;
        }
        case ptf::Method::sparse: {
            auto s = ptf::synthesize_sparse(f);
            cert = ptf::to_json(s);
            ok = s.all_ok();
            p = std::move(s.synthesis.ptf);
            break;
        }
        case ptf::Method::general: {
            auto s = ptf::synthesize_general(f);
            cert = ptf::to_json(s.certificate);
            ok = s.certificate.all_ok();
            p = std::move(s.ptf);
            break;
        }
    }
    const ptf::Json pj = ptf::to_json(*p);
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        if (!os) throw UsageError("cannot write " + out_path);
        os << pj.dump(2) << '\n';
    }
    std::cout << ptf::Json{{"ptf", pj}, {"certificate", cert}}.dump() << '\n';
    if (!ok) std::cerr << "certificate check failed\n";
    return ok ? kOk : kFailed;
}

int cmd_verify(const ptf::BooleanFunction& f, const std::string& ptf_path) {
    ptf::Json j;
    try {
        j = ptf::Json::parse(read_file(ptf_path));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    const ptf::Ptf p = ptf::ptf_from_json(j);
    if (p.n() != f.n()) throw UsageError("polynomial and truth table have different variable counts");
    const auto rep = ptf::verify_ptf(f, p);
    std::cout << ptf::Json{{"matches", rep.matches}, {"min_margin", ptf::to_decimal(rep.min_margin)}}.dump() << '\n';
    return rep.matches ? kOk : kFailed;
}

int cmd_sweep(const ptf::SweepOptions& opt, const std::string& csv_path) {
    const auto result = ptf::sweep(opt);
    const ptf::Json summary = ptf::to_json(result.summary);
    if (csv_path.empty()) {
        ptf::write_csv(std::cout, result.rows);
        std::cerr << summary.dump() << '\n';
    } else {
        std::ofstream os(csv_path);
        if (!os) throw UsageError("cannot write " + csv_path);
        ptf::write_csv(os, result.rows);
        std::cout << summary.dump() << '\n';
    }
    for (const auto& r : result.rows)
        if (!r.error.empty()) std::cerr << r.tt_hex << ": " << r.error << '\n';
    return result.summary.violations == 0 ? kOk : kFailed;
}

int cmd_oracle(const ptf::BooleanFunction& f, std::size_t kmax) {
    const auto k = ptf::oracle_min_density(f, kmax);
    if (k)
        std::cout << *k << '\n';
    else
        std::cout << "exceeds " << kmax << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integer polynomial threshold function synthesis"};
    app.require_subcommand(1);

    std::string table;
    std::string format = "auto";
    auto add_table = [&](CLI::App* sub) {
        sub->add_option("table", table, "truth table (binary or hex) or a file holding one")->required();
        sub->add_option("--format", format, "truth table format")
            ->check(CLI::IsMember({"auto", "binary", "hex"}));
    };

    auto* analyze = app.add_subcommand("analyze", "spectrum and classification");
    add_table(analyze);

    std::string method = "auto";
    std::string out_path;
    auto* synth = app.add_subcommand("synth", "synthesize a sign representation");
    add_table(synth);
    synth->add_option("--method", method)->check(CLI::IsMember({"auto", "general", "bent", "sparse"}));
    synth->add_option("--out", out_path, "also write the polynomial JSON here");

    std::string ptf_path;
    auto* verify = app.add_subcommand("verify", "check a polynomial against a truth table");
    add_table(verify);
    verify->add_option("ptf", ptf_path, "polynomial JSON file")->required();

    ptf::SweepOptions opt;
    std::size_t sample = 0;
    std::uint64_t seed = 0;
    std::string csv_path;
    opt.workers = default_workers();
    auto* sweep = app.add_subcommand("sweep", "synthesize and audit many functions");
    sweep->add_option("--n", opt.n)->required();
    auto* exhaustive = sweep->add_flag("--exhaustive", "every function of n variables");
    auto* sample_opt = sweep->add_option("--sample", sample, "number of random functions");
    auto* seed_opt = sweep->add_option("--seed", seed);
    sweep->add_option("--workers", opt.workers)->check(CLI::PositiveNumber);
    sweep->add_option("--csv", csv_path);
    exhaustive->excludes(sample_opt);
    sample_opt->needs(seed_opt);

    std::size_t kmax = 0;
    auto* oracle = app.add_subcommand("oracle", "exact minimal density (n <= 4)");
    add_table(oracle);
    auto* kmax_opt = oracle->add_option("--kmax", kmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) return cmd_analyze(load_table(table, format));
        if (*synth) return cmd_synth(load_table(table, format), method, out_path);
        if (*verify) return cmd_verify(load_table(table, format), ptf_path);
        if (*oracle) {
            const auto f = load_table(table, format);
            return cmd_oracle(f, *kmax_opt ? kmax : f.size());
        }
        if (*sweep) {
            if (exhaustive->count() == 0 && sample_opt->count() == 0) throw UsageError("sweep needs --exhaustive or --sample K --seed S");
            opt.exhaustive = exhaustive->count() > 0;
            opt.count = sample;
            opt.seed = seed;
            return cmd_sweep(opt, csv_path);
        }
    } catch (const ptf::SizeGuard& e) {
        std::cerr << "size guard: " << e.what() << '\n';
        return kTooLarge;
    } catch (const ptf::VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kFailed;
    } catch (const ptf::InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
