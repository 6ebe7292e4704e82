// caqw — command-line front end for the controlled alternate quantum walk
// hash: hash messages, dump walker distributions, and run the statistical
// campaigns (avalanche, collision, uniform).
//
// Exit codes: 0 success, 2 validation error, 1 runtime error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "caqw/caqw.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RuntimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "RE,IM" pair; a bare "RE" means a real value
std::complex<double> parse_complex(const std::string& text, const std::string& flag) {
    try {
        std::size_t used = 0;
        const double re = std::stod(text, &used);
        if (used == text.size()) return {re, 0.0};
        if (text[used] != ',') throw std::invalid_argument("");
        std::size_t used_im = 0;
        const std::string imag_part = text.substr(used + 1);
        const double im = std::stod(imag_part, &used_im);
        if (used_im != imag_part.size()) throw std::invalid_argument("");
        return {re, im};
    } catch (const std::exception&) {
        throw ValidationError(flag + ": expected a complex amplitude as RE,IM (e.g. 0.6,0.8)");
    }
}

struct ParamFlags {
    int n = 5;
    int dim = 2;
    int k = 8;
    double theta1 = 0.0;
    double theta2 = 0.0;
    std::string alpha;
    std::string beta;

    caqw::WalkParams build() const {
        caqw::WalkParams params;
        params.n = n;
        params.d = dim;
        params.k = k;
        params.theta1 = theta1;
        params.theta2 = theta2;
        params.alpha = parse_complex(alpha, "--alpha");
        params.beta = parse_complex(beta, "--beta");
        try {
            params.validate();
        } catch (const std::invalid_argument& err) {
            throw ValidationError("--" + std::string(err.what()));
        }
        return params;
    }
};

struct MessageFlags {
    std::optional<std::string> bits;
    std::optional<std::string> hex;
    std::optional<std::string> text;
    std::optional<std::string> file;

    caqw::Message build() const {
        try {
            if (bits) return caqw::Message::from_bits(*bits);
            if (hex) return caqw::Message::from_hex(*hex);
            if (text) return caqw::Message::from_text(*text);
        } catch (const std::invalid_argument& err) {
            throw ValidationError(std::string(flag_name()) + ": " + err.what());
        }
        std::ifstream in(*file, std::ios::binary);
        if (!in) throw RuntimeError("--msg-file: cannot open '" + *file + "'");
        std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                        std::istreambuf_iterator<char>()};
        if (in.bad()) throw RuntimeError("--msg-file: read failed for '" + *file + "'");
        return caqw::Message::from_bytes(bytes);
    }

    const char* flag_name() const {
        if (bits) return "--msg-bits";
        if (hex) return "--msg-hex";
        if (text) return "--msg-text";
        return "--msg-file";
    }
};

struct CampaignFlags {
    std::uint64_t trials = 0;
    std::size_t msg_len = 128;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

void add_param_flags(CLI::App* sub, ParamFlags& flags) {
    sub->add_option("--n", flags.n, "Lattice side length (default 5)");
    sub->add_option("--dim", flags.dim, "Lattice dimension, 2 or 3 (default 2)");
    sub->add_option("--k", flags.k, "Bits per digest cell (default 8)");
    sub->add_option("--theta1", flags.theta1, "Coin angle for message bit 0, radians in (0, pi/2)")
        ->required();
    sub->add_option("--theta2", flags.theta2, "Coin angle for message bit 1, radians in (0, pi/2)")
        ->required();
    sub->add_option("--alpha", flags.alpha, "Initial coin-up amplitude as RE,IM")->required();
    sub->add_option("--beta", flags.beta, "Initial coin-down amplitude as RE,IM")->required();
}

void add_message_flags(CLI::App* sub, MessageFlags& flags) {
    auto* group = sub->add_option_group("message source");
    group->add_option("--msg-bits", flags.bits, "Message as a literal bit string, e.g. 0100");
    group->add_option("--msg-hex", flags.hex, "Message as hex, 4 bits per digit");
    group->add_option("--msg-text", flags.text, "Message as text bytes, MSB first");
    group->add_option("--msg-file", flags.file, "Message as raw file bytes, MSB first");
    group->require_option(1);
}

void add_campaign_flags(CLI::App* sub, CampaignFlags& flags) {
    sub->add_option("--trials", flags.trials, "Number of trials N")->required();
    sub->add_option("--msg-len", flags.msg_len, "Random message length in bits (default 128)");
    sub->add_option("--seed", flags.seed, "64-bit campaign seed")->required();
    sub->add_option("--threads", flags.threads, "Worker threads (default 1; 0 = hardware)");
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw RuntimeError("--out: cannot open '" + out_path + "'");
    out << text;
    if (!out) throw RuntimeError("--out: write failed for '" + out_path + "'");
}

void write_bytes(const std::string& out_path, const std::vector<std::uint8_t>& bytes) {
    if (out_path.empty()) {
        std::fwrite(bytes.data(), 1, bytes.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw RuntimeError("--out: cannot open '" + out_path + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw RuntimeError("--out: write failed for '" + out_path + "'");
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* ok : allowed)
        if (format == ok) return;
    std::string options;
    for (const char* ok : allowed) {
        if (!options.empty()) options += ", ";
        options += ok;
    }
    throw ValidationError("--format: '" + format + "' is not valid here (choose from " + options +
                          ")");
}

int dispatch(const std::string& name, const ParamFlags& param_flags,
             const MessageFlags& message_flags, const CampaignFlags& campaign_flags,
             const std::string& format, const std::string& out_path) {
    const caqw::WalkParams params = param_flags.build();

    if (name == "hash") {
        check_format(format, {"hex", "json", "bytes"});
        const caqw::Digest digest = caqw::hash_message(params, message_flags.build());
        if (format == "bytes") {
            if (params.k != 8)
                throw ValidationError("--format: bytes output requires --k 8");
            write_bytes(out_path, digest.to_bytes());
        } else if (format == "json") {
            write_text(out_path, caqw::to_json(digest).dump(2) + "\n");
        } else {
            write_text(out_path, digest.to_hex() + "\n");
        }
        return kExitOk;
    }

    if (name == "dist") {
        check_format(format, {"csv", "json"});
        const auto state = caqw::evolve(params, message_flags.build());
        const auto probs = caqw::probabilities(state);
        if (format == "json") {
            nlohmann::ordered_json j;
            j["params"] = caqw::params_json(params);
            j["probabilities"] = probs;
            write_text(out_path, j.dump(2) + "\n");
        } else {
            write_text(out_path, caqw::distribution_csv(state.lattice(), probs));
        }
        return kExitOk;
    }

    check_format(format, {"json", "csv"});
    if (campaign_flags.trials < 1)
        throw ValidationError("--trials: must be at least 1");
    if (campaign_flags.msg_len < 1)
        throw ValidationError("--msg-len: must be at least 1");

    nlohmann::ordered_json j;
    std::string csv;
    if (name == "avalanche") {
        const auto report = caqw::stats::diffusion_test(params, campaign_flags.trials,
                                                        campaign_flags.msg_len,
                                                        campaign_flags.seed,
                                                        campaign_flags.threads);
        j = caqw::stats::to_json(report);
        if (format == "csv") csv = caqw::stats::to_csv(report);
    } else if (name == "collision") {
        const auto report = caqw::stats::collision_test(params, campaign_flags.trials,
                                                        campaign_flags.msg_len,
                                                        campaign_flags.seed,
                                                        campaign_flags.threads);
        j = caqw::stats::to_json(report);
        if (format == "csv") csv = caqw::stats::to_csv(report);
    } else {
        const auto report = caqw::stats::uniform_test(params, campaign_flags.trials,
                                                      campaign_flags.msg_len,
                                                      campaign_flags.seed,
                                                      campaign_flags.threads);
        j = caqw::stats::to_json(report);
        if (format == "csv") csv = caqw::stats::to_csv(report);
    }
    write_text(out_path, format == "csv" ? csv : j.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Controlled alternate quantum walk hash"};
    app.require_subcommand(1);

    ParamFlags param_flags;
    MessageFlags message_flags;
    CampaignFlags campaign_flags;
    std::string format;
    std::string out_path;

    auto* hash = app.add_subcommand("hash", "Hash a message to an n^d*k-bit digest");
    auto* dist = app.add_subcommand("dist", "Print the walker's terminal distribution");
    auto* avalanche =
        app.add_subcommand("avalanche", "Diffusion/confusion campaign over one-bit flips");
    auto* collision = app.add_subcommand("collision", "Matching-cell collision campaign");
    auto* uniform = app.add_subcommand("uniform", "Per-bit uniformity campaign");

    for (auto* sub : {hash, dist, avalanche, collision, uniform}) {
        add_param_flags(sub, param_flags);
        sub->add_option("--out", out_path, "Write output to a file instead of stdout");
    }
    for (auto* sub : {hash, dist}) add_message_flags(sub, message_flags);
    for (auto* sub : {avalanche, collision, uniform}) add_campaign_flags(sub, campaign_flags);

    hash->add_option("--format", format, "hex (default), json, or bytes (k=8 cells)");
    dist->add_option("--format", format, "csv (default) or json");
    for (auto* sub : {avalanche, collision, uniform})
        sub->add_option("--format", format, "json (default) or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic
        return kExitValidation;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    if (format.empty()) format = name == "hash" ? "hex" : (name == "dist" ? "csv" : "json");

    try {
        return dispatch(name, param_flags, message_flags, campaign_flags, format, out_path);
    } catch (const ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitValidation;
    } catch (const RuntimeError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitRuntime;
    }
}
