// qgaps command-line front end: exact values and tables of the partition
// statistics, the identity verification suite, and the p(n) cache.
//
// Exit codes: 0 success / all identities pass, 1 verification failure or
// fast/oracle disagreement, 2 usage error, 3 I/O or cache format error.

#include "qgaps/counting.hpp"
#include "qgaps/series.hpp"
#include "qgaps/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

qgaps::Mode parse_mode(const std::string& mode) {
    if (mode == "fast")
        return qgaps::Mode::fast;
    if (mode == "oracle")
        return qgaps::Mode::oracle;
    throw UsageError("unknown mode '" + mode + "'");
}

// r sets accept "3", "1,2,5" and "1..6"
std::set<int> parse_r_set(const std::string& text) {
    std::set<int> out;
    auto add_range = [&out](const std::string& tok) {
        auto dots = tok.find("..");
        try {
            if (dots != std::string::npos) {
                int lo = std::stoi(tok.substr(0, dots));
                int hi = std::stoi(tok.substr(dots + 2));
                if (lo < 1 || hi < lo)
                    throw UsageError("bad r range '" + tok + "'");
                for (int r = lo; r <= hi; ++r)
                    out.insert(r);
            } else {
                int r = std::stoi(tok);
                if (r < 1)
                    throw UsageError("r must be >= 1");
                out.insert(r);
            }
        } catch (const std::invalid_argument&) {
            throw UsageError("bad r value '" + tok + "'");
        } catch (const std::out_of_range&) {
            throw UsageError("bad r value '" + tok + "'");
        }
    };
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        add_range(text.substr(pos, comma - pos));
        pos = comma + 1;
    }
    if (out.empty())
        throw UsageError("empty r set");
    return out;
}

std::string default_cache_path(const std::string& flag_value) {
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("QGAPS_CACHE"))
        return env;
    return {};
}

void load_cache_file(const std::string& path, bool must_exist) {
    std::ifstream in(path);
    if (!in) {
        if (must_exist)
            throw IoError("cannot open cache file '" + path + "'");
        return;
    }
    try {
        qgaps::default_table().load(in);
    } catch (const qgaps::CacheFormatError& e) {
        throw IoError("cache file '" + path + "': " + e.what());
    }
}

void save_cache_file(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write cache file '" + path + "'");
    qgaps::default_table().save(out);
    if (!out)
        throw IoError("error while writing cache file '" + path + "'");
}

mpz_class checked_value(const std::string& seq, long n, std::optional<int> r,
                        const std::string& mode) {
    if (mode == "both") {
        mpz_class fast = qgaps::sequence_value(seq, n, r, qgaps::Mode::fast);
        mpz_class oracle = qgaps::sequence_value(seq, n, r, qgaps::Mode::oracle);
        if (fast != oracle)
            throw std::runtime_error("fast/oracle disagreement for " + seq + "(" +
                                     std::to_string(n) + "): fast=" + fast.get_str() +
                                     " oracle=" + oracle.get_str());
        return fast;
    }
    return qgaps::sequence_value(seq, n, r, parse_mode(mode));
}

void emit_table(const qgaps::SequenceWindow& w, const std::string& format) {
    if (format == "csv") {
        std::cout << "n,value\n";
        for (long n = w.start; n <= w.end; ++n)
            std::cout << n << ',' << w.values[n - w.start].get_str() << '\n';
    } else if (format == "json") {
        std::cout << '[';
        for (long n = w.start; n <= w.end; ++n) {
            if (n > w.start)
                std::cout << ',';
            std::cout << "{\"n\":" << n << ",\"value\":\"" << w.values[n - w.start].get_str()
                      << "\"}";
        }
        std::cout << "]\n";
    } else if (format == "plain") {
        for (long n = w.start; n <= w.end; ++n)
            std::cout << n << ' ' << w.values[n - w.start].get_str() << '\n';
    } else {
        throw UsageError("unknown format '" + format + "'");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact integer-partition statistics and truncated q-series"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string cache_flag;
    app.add_option("--cache", cache_flag,
                   "pcache v1 file to load before and save after the command "
                   "(default: $QGAPS_CACHE)");

    // ---- compute -----------------------------------------------------------
    auto* compute = app.add_subcommand("compute", "print one exact value");
    std::string c_seq;
    long c_n = 0;
    int c_r = 0;
    std::string c_mode = "fast";
    compute->add_option("sequence", c_seq, "one of p q S G U L R C pe po")->required();
    compute->add_option("n", c_n, "argument n")->required();
    compute->add_option("--r", c_r, "parameter r (required for S, G, U)");
    compute->add_option("--mode", c_mode, "fast | oracle | both")
        ->check(CLI::IsMember({"fast", "oracle", "both"}));

    // ---- table --------------------------------------------------------------
    auto* tab = app.add_subcommand("table", "print values for n = 0..n-max");
    std::string t_seq;
    long t_nmax = 0;
    int t_r = 0;
    std::string t_mode = "fast";
    std::string t_format = "plain";
    tab->add_option("sequence", t_seq, "one of p q S G U L R C pe po")->required();
    tab->add_option("n-max", t_nmax, "largest n")->required();
    tab->add_option("--r", t_r, "parameter r (required for S, G, U)");
    tab->add_option("--mode", t_mode, "fast | oracle | both")
        ->check(CLI::IsMember({"fast", "oracle", "both"}));
    tab->add_option("--format", t_format, "csv | json | plain")
        ->check(CLI::IsMember({"csv", "json", "plain"}));

    // ---- verify ---------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "check identities from the registry");
    std::vector<std::string> v_ids;
    long v_nmax = -1;
    std::string v_rset;
    std::string v_format = "plain";
    ver->add_option("ids", v_ids, "identity ids, or 'all'")->required();
    ver->add_option("--n-max", v_nmax, "check all n <= n-max (default: per-identity range)");
    ver->add_option("--r", v_rset, "r set for parameterized identities, e.g. 1..6 or 1,3");
    ver->add_option("--format", v_format, "plain | json")
        ->check(CLI::IsMember({"plain", "json"}));

    // ---- cache ---------------------------------------------------------------
    auto* cache = app.add_subcommand("cache", "manage the p(n) cache file");
    std::string k_action;
    std::string k_path;
    long k_fill = -1;
    cache->add_option("action", k_action, "load | save | info")->required();
    cache->add_option("--path", k_path, "cache file path");
    cache->add_option("--fill", k_fill, "fill p(0..N) before saving");

    // ---- bench ---------------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "wall-clock timings of the main kernels");
    long b_nmax = 100;
    long b_fill = 2000;
    bench->add_option("--n-max", b_nmax, "verify-suite range (default 100)");
    bench->add_option("--fill", b_fill, "p(n) fill target (default 2000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const std::string cache_path = default_cache_path(cache_flag);
        const bool uses_shared_cache =
            !cache_path.empty() && (compute->parsed() || tab->parsed() || ver->parsed());
        if (uses_shared_cache)
            load_cache_file(cache_path, false);
        long loaded_high = qgaps::default_table().high_water();

        int status = kExitOk;

        if (compute->parsed()) {
            std::optional<int> r;
            if (compute->count("--r"))
                r = c_r;
            std::cout << checked_value(c_seq, c_n, r, c_mode).get_str() << '\n';
        } else if (tab->parsed()) {
            std::optional<int> r;
            if (tab->count("--r"))
                r = t_r;
            if (t_nmax < 0)
                throw UsageError("n-max must be non-negative");
            if (t_mode == "both") {
                auto fast = qgaps::sequence_window(t_seq, t_nmax, r, qgaps::Mode::fast);
                auto oracle = qgaps::sequence_window(t_seq, t_nmax, r, qgaps::Mode::oracle);
                for (long n = 0; n <= t_nmax; ++n)
                    if (fast.values[n] != oracle.values[n])
                        throw std::runtime_error(
                            "fast/oracle disagreement for " + t_seq + "(" + std::to_string(n) +
                            "): fast=" + fast.values[n].get_str() +
                            " oracle=" + oracle.values[n].get_str());
                emit_table(fast, t_format);
            } else {
                emit_table(qgaps::sequence_window(t_seq, t_nmax, r, parse_mode(t_mode)), t_format);
            }
        } else if (ver->parsed()) {
            std::set<int> r_set;
            if (ver->count("--r"))
                r_set = parse_r_set(v_rset);
            if (ver->count("--n-max") && v_nmax < 0)
                throw UsageError("n-max must be non-negative");

            std::vector<std::string> ids;
            if (v_ids.size() == 1 && v_ids[0] == "all") {
                for (const auto& d : qgaps::identity_registry())
                    ids.push_back(d.id);
            } else {
                ids = v_ids;
            }

            bool all_pass = true;
            bool first = true;
            if (v_format == "json")
                std::cout << '[';
            for (const auto& id : ids) {
                const auto& reg = qgaps::identity_registry();
                auto it = std::find_if(reg.begin(), reg.end(),
                                       [&](const auto& d) { return d.id == id; });
                const std::set<int>* rs = nullptr;
                if (!r_set.empty()) {
                    // apply the r set only where the identity takes one
                    bool parameterized = (it != reg.end()) ? it->parameterized : true;
                    if (parameterized)
                        rs = &r_set;
                }
                long n_max = v_nmax >= 0 ? v_nmax
                             : (it != reg.end() ? it->default_n_max : 300L);
                qgaps::IdentityReport rep = qgaps::verify_identity(id, n_max, rs);
                all_pass = all_pass && rep.pass;
                if (v_format == "json") {
                    if (!first)
                        std::cout << ',';
                    std::cout << qgaps::report_json(rep);
                } else {
                    std::cout << qgaps::report_line(rep) << '\n';
                }
                first = false;
            }
            if (v_format == "json")
                std::cout << "]\n";
            if (!all_pass)
                status = kExitVerifyFail;
        } else if (cache->parsed()) {
            if (k_action == "info") {
                if (!k_path.empty())
                    load_cache_file(k_path, true);
                std::cout << "high_water " << qgaps::default_table().high_water() << '\n';
            } else if (k_action == "load") {
                if (k_path.empty())
                    throw UsageError("cache load requires --path");
                load_cache_file(k_path, true);
                std::cout << "loaded p(0.." << qgaps::default_table().high_water() << ")\n";
            } else if (k_action == "save") {
                if (k_path.empty())
                    throw UsageError("cache save requires --path");
                if (k_fill >= 0)
                    qgaps::default_table().ensure(k_fill);
                save_cache_file(k_path);
                std::cout << "saved p(0.." << qgaps::default_table().high_water() << ")\n";
            } else {
                throw UsageError("unknown cache action '" + k_action + "'");
            }
        } else if (bench->parsed()) {
            using clock = std::chrono::steady_clock;
            auto ms = [](clock::time_point a, clock::time_point b) {
                return std::chrono::duration<double, std::milli>(b - a).count();
            };

            qgaps::MemoTable fresh;
            auto t0 = clock::now();
            fresh.ensure(b_fill);
            auto t1 = clock::now();
            std::cout << "p-fill(" << b_fill << "): " << ms(t0, t1) << " ms\n";

            t0 = clock::now();
            auto s = qgaps::gap_sum_series(1, 500);
            t1 = clock::now();
            std::cout << "gap-sum series expansion to order 500: " << ms(t0, t1)
                      << " ms (last coefficient " << s[500].get_str() << ")\n";

            t0 = clock::now();
            bool all_pass = true;
            for (const auto& d : qgaps::identity_registry())
                all_pass = all_pass && qgaps::verify_identity(d.id, b_nmax).pass;
            t1 = clock::now();
            std::cout << "verify all (n<=" << b_nmax << "): " << ms(t0, t1) << " ms ("
                      << (all_pass ? "all pass" : "FAILURES") << ")\n";
        }

        if (uses_shared_cache && qgaps::default_table().high_water() > loaded_high)
            save_cache_file(cache_path);
        return status;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFail;
    }
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
