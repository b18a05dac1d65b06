// pkpow: verification and exploration toolkit for the prime + k-th power
// representation problem.
//
// Subcommands: scan, series, verify, circle, bound, hua.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pkpow/arith.hpp"
#include "pkpow/characters.hpp"
#include "pkpow/circle.hpp"
#include "pkpow/representations.hpp"
#include "pkpow/singular.hpp"
#include "pkpow/verify.hpp"

using namespace pkpow;

namespace {

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string cache_path(const std::string& name) {
    const char* dir = std::getenv("PKPOW_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/" + name;
}

int run_scan(unsigned k, uint64_t xmax, const std::string& out_prefix,
             unsigned threads) {
    Parallel par(threads);
    RepScanResult res;
    std::string cache = cache_path("scan_k" + std::to_string(k) + "_x" +
                                   std::to_string(xmax) + ".bin");
    bool from_cache = false;
    if (!cache.empty()) {
        std::ifstream probe(cache, std::ios::binary);
        if (probe.good()) {
            res = read_scan_cache(cache);
            from_cache = (res.k == k && res.x_max == xmax);
        }
    }
    if (!from_cache) {
        res = scan(k, xmax, par);
        if (!cache.empty()) write_scan_cache(res, cache);
    }

    std::string csv_path = out_prefix + ".csv";
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("scan: cannot open " + csv_path);
    write_scan_csv(res, csv);

    std::string exc_path = out_prefix + ".exceptional.txt";
    std::ofstream exc(exc_path);
    if (!exc) throw std::runtime_error("scan: cannot open " + exc_path);
    exc << "# schema=pkpow.exceptional.v1 k=" << k << " x_max=" << xmax << "\n";
    for (uint64_t n : res.exceptional) exc << n << "\n";

    double density = xmax ? static_cast<double>(res.exceptional.size()) /
                                static_cast<double>(xmax)
                          : 0.0;
    std::printf("E_%u(%llu) = %zu\n", k, (unsigned long long)xmax,
                res.exceptional.size());
    std::printf("density = %s\n", g17(density).c_str());
    std::printf("wrote %s and %s\n", csv_path.c_str(), exc_path.c_str());
    return 0;
}

int run_series(unsigned k, int64_t n, uint64_t cutoff, uint64_t R, uint64_t r,
               const std::string& format) {
    auto pt = sieve_primes(std::max<uint64_t>(cutoff, 2));
    auto euler = singular_series(k, n, cutoff, pt);
    auto sum = truncated_sum(k, n, R, r);
    auto prod = product_form(k, n, R, r, pt);
    double tail = tail_bound(k, n, std::max<uint64_t>(R, 2),
                             static_cast<double>(std::max<uint64_t>(R, 2)), pt);
    if (format == "csv") {
        std::printf("# schema=pkpow.series.v1\n");
        std::printf("k,n,cutoff,euler_product,tail_estimate,R,r,truncated_sum,"
                    "product_form,degenerate_skip,tail_bound\n");
        std::printf("%u,%lld,%llu,%s,%s,%llu,%llu,%s,%s,%d,%s\n", k,
                    (long long)n, (unsigned long long)cutoff,
                    g17(euler.value).c_str(), g17(euler.tail_estimate).c_str(),
                    (unsigned long long)R, (unsigned long long)r,
                    g17(sum.value).c_str(), g17(prod.value).c_str(),
                    int(prod.degenerate_skip), g17(tail).c_str());
    } else {
        std::printf("{\"schema\":\"pkpow.series.v1\",\"k\":%u,\"n\":%lld,"
                    "\"cutoff\":%llu,\"euler_product\":%s,"
                    "\"tail_estimate\":%s,\"R\":%llu,\"r\":%llu,"
                    "\"truncated_sum\":%s,\"product_form\":%s,"
                    "\"degenerate_skip\":%s,\"tail_bound\":%s}\n",
                    k, (long long)n, (unsigned long long)cutoff,
                    g17(euler.value).c_str(), g17(euler.tail_estimate).c_str(),
                    (unsigned long long)R, (unsigned long long)r,
                    g17(sum.value).c_str(), g17(prod.value).c_str(),
                    prod.degenerate_skip ? "true" : "false",
                    g17(tail).c_str());
    }
    return 0;
}

int run_verify_cmd(const std::string& suite, uint64_t seed,
                   const std::string& format) {
    auto reports = run_verify(suite, seed);
    bool any_failure = false;
    if (format == "json") {
        std::printf("{\"schema\":\"pkpow.verify.v1\",\"seed\":%llu,"
                    "\"suites\":[",
                    (unsigned long long)seed);
        bool first = true;
        for (const auto& rep : reports) {
            if (!first) std::printf(",");
            first = false;
            std::printf("{\"suite\":\"%s\",\"cases\":%llu,"
                        "\"max_deviation\":%s,\"failures\":[",
                        rep.suite.c_str(), (unsigned long long)rep.cases,
                        g17(rep.max_deviation).c_str());
            for (size_t i = 0; i < rep.failures.size(); ++i) {
                const auto& f = rep.failures[i];
                std::printf("%s{\"case\":\"%s\",\"lhs\":%s,\"rhs\":%s,"
                            "\"deviation\":%s}",
                            i ? "," : "", f.case_id.c_str(), g17(f.lhs).c_str(),
                            g17(f.rhs).c_str(), g17(f.deviation).c_str());
            }
            std::printf("],\"notes\":[");
            for (size_t i = 0; i < rep.notes.size(); ++i)
                std::printf("%s\"%s\"", i ? "," : "", rep.notes[i].c_str());
            std::printf("]}");
            if (!rep.ok()) any_failure = true;
        }
        std::printf("]}\n");
    } else {
        std::printf("# schema=pkpow.verify.v1 seed=%llu\n",
                    (unsigned long long)seed);
        for (const auto& rep : reports) {
            std::printf("suite=%s cases=%llu failures=%zu max_deviation=%s\n",
                        rep.suite.c_str(), (unsigned long long)rep.cases,
                        rep.failures.size(), g17(rep.max_deviation).c_str());
            for (const auto& f : rep.failures)
                std::printf("  FAIL %s lhs=%s rhs=%s deviation=%s\n",
                            f.case_id.c_str(), g17(f.lhs).c_str(),
                            g17(f.rhs).c_str(), g17(f.deviation).c_str());
            for (const auto& note : rep.notes)
                std::printf("  note %s\n", note.c_str());
            if (!rep.ok()) any_failure = true;
        }
    }
    return any_failure ? 1 : 0;
}

int run_circle(unsigned k, uint64_t X, uint64_t P, double Q, double b,
               const std::string& n_range, std::vector<uint64_t> n_list,
               const std::string& out, unsigned threads) {
    if (P == 0) {
        // P from the X^b rule; desk scales need an explicit --p to exceed 1.
        P = static_cast<uint64_t>(
            std::pow(static_cast<double>(X), b));
        if (P < 1) P = 1;
    }
    if (!(Q > 0.0)) Q = default_q(X, k, P);
    auto diss = dissect(X, P, Q);
    Parallel par(threads);
    auto pt = sieve_primes(X, par);
    auto cv = coefficients(k, X, pt, par);

    if (n_list.empty()) {
        uint64_t lo, hi;
        if (n_range == "all") {
            lo = cv.n_min;
            hi = cv.n_max;
        } else if (n_range == "mid") {
            // the analysis window [0.99 X, X]
            lo = static_cast<uint64_t>(
                std::ceil(0.99 * static_cast<double>(X)));
            hi = X;
        } else {
            throw DomainError("circle: --n-range must be 'mid' or 'all'");
        }
        for (uint64_t n = lo; n <= hi; ++n) n_list.push_back(n);
    }

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.empty() && out != "-") {
        file.open(out);
        if (!file) throw std::runtime_error("circle: cannot open " + out);
        os = &file;
    }

    *os << "{\"schema\":\"pkpow.circle.v1\",\"summary\":{\"k\":" << k
        << ",\"X\":" << X << ",\"P\":" << P << ",\"Q\":" << g17(Q)
        << ",\"arc_count\":" << diss.arcs.size()
        << ",\"major_measure\":" << g17(diss.major_measure())
        << "},\"records\":[";
    bool first = true;
    for (uint64_t n : n_list) {
        auto rs = r_split(cv, n, diss);
        auto mt = main_term_compare(cv, n, P, diss, pt);
        *os << (first ? "" : ",") << "{\"n\":" << n << ",\"r\":" << g17(rs.r)
            << ",\"r1\":" << g17(rs.r1) << ",\"r2\":" << g17(rs.r2)
            << ",\"prediction\":" << g17(mt.prediction) << ",\"ratio\":";
        if (mt.ratio_defined)
            *os << g17(mt.ratio);
        else
            *os << "null";
        *os << "}";
        first = false;
    }
    *os << "]}\n";
    return 0;
}

int run_bound(unsigned k, int64_t n, uint64_t X, uint64_t cutoff,
              bool with_count, const std::string& format) {
    auto pt = sieve_primes(
        std::max<uint64_t>(cutoff, with_count ? static_cast<uint64_t>(n) : 2));
    double bound = selberg_bound(k, n, X, cutoff, pt);
    int64_t reps = -1;
    if (with_count) reps = static_cast<int64_t>(count_reps(k, n, pt));
    if (format == "csv") {
        std::printf("# schema=pkpow.bound.v1\n");
        std::printf("k,n,X,cutoff,bound,R\n");
        std::printf("%u,%lld,%llu,%llu,%s,%lld\n", k, (long long)n,
                    (unsigned long long)X, (unsigned long long)cutoff,
                    g17(bound).c_str(), (long long)reps);
    } else {
        std::printf("{\"schema\":\"pkpow.bound.v1\",\"k\":%u,\"n\":%lld,"
                    "\"X\":%llu,\"cutoff\":%llu,\"bound\":%s",
                    k, (long long)n, (unsigned long long)X,
                    (unsigned long long)cutoff, g17(bound).c_str());
        if (with_count)
            std::printf(",\"R\":%lld,\"within_bound\":%s", (long long)reps,
                        static_cast<double>(reps) <= bound ? "true" : "false");
        std::printf("}\n");
    }
    return 0;
}

int run_hua(unsigned k, uint64_t X, unsigned s, const std::string& format) {
    auto hm = hua_moment(k, X, s);
    if (format == "csv") {
        std::printf("# schema=pkpow.hua.v1\n");
        std::printf("k,X,s,exact,grid,normalized\n");
        std::printf("%u,%llu,%u,%llu,%s,%s\n", k, (unsigned long long)X, s,
                    (unsigned long long)hm.exact_count, g17(hm.grid).c_str(),
                    g17(hm.normalized).c_str());
    } else {
        std::printf("{\"schema\":\"pkpow.hua.v1\",\"k\":%u,\"X\":%llu,"
                    "\"s\":%u,\"exact\":%llu,\"grid\":%s,\"normalized\":%s}\n",
                    k, (unsigned long long)X, s,
                    (unsigned long long)hm.exact_count, g17(hm.grid).c_str(),
                    g17(hm.normalized).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime + k-th power representation toolkit"};
    app.require_subcommand(1);

    // scan
    auto* scan_cmd = app.add_subcommand(
        "scan", "count representations n = p + m^k for all n <= xmax");
    unsigned scan_k = 2;
    uint64_t scan_xmax = 10000;
    std::string scan_out = "scan";
    unsigned scan_threads = 1;
    scan_cmd->add_option("--k", scan_k, "power k (>= 2)")->required();
    scan_cmd->add_option("--xmax", scan_xmax, "scan bound")->required();
    scan_cmd->add_option("--out", scan_out, "output path prefix");
    scan_cmd->add_option("--threads", scan_threads, "worker threads");

    // series
    auto* series_cmd = app.add_subcommand(
        "series", "singular series values, truncations and tail bounds");
    unsigned ser_k = 2;
    int64_t ser_n = 2;
    uint64_t ser_cutoff = 1000, ser_R = 100, ser_r = 1;
    std::string ser_format = "json";
    series_cmd->add_option("--k", ser_k, "power k")->required();
    series_cmd->add_option("--n", ser_n, "target integer")->required();
    series_cmd->add_option("--cutoff", ser_cutoff, "Euler product prime bound");
    series_cmd->add_option("--R", ser_R, "sum truncation bound");
    series_cmd->add_option("--r", ser_r, "excluded modulus (coprimality)");
    series_cmd->add_option("--format", ser_format, "json or csv");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "run an identity battery");
    std::string ver_suite = "all";
    uint64_t ver_seed = 1;
    std::string ver_format = "text";
    verify_cmd->add_option("--suite", ver_suite,
                           "characters, singular, circle, hua or all");
    verify_cmd->add_option("--seed", ver_seed, "sampler seed");
    verify_cmd->add_option("--format", ver_format, "text or json");

    // circle
    auto* circle_cmd = app.add_subcommand(
        "circle", "major/minor arc decomposition records");
    unsigned cir_k = 2;
    uint64_t cir_x = 1 << 14, cir_p = 0;
    double cir_q = 0.0, cir_b = 0.0181;
    std::string cir_range = "mid", cir_out;
    std::vector<uint64_t> cir_n;
    unsigned cir_threads = 1;
    circle_cmd->add_option("--k", cir_k, "power k")->required();
    circle_cmd->add_option("--x", cir_x, "scale X")->required();
    circle_cmd->add_option("--p", cir_p, "arc parameter P (overrides --b)");
    circle_cmd->add_option("--q", cir_q, "arc parameter Q (default X P^(-4k+5.9995))");
    circle_cmd->add_option("--b", cir_b, "exponent in P = X^b when --p is absent");
    circle_cmd->add_option("--n-range", cir_range, "mid ([0.99X, X]) or all");
    circle_cmd->add_option("--n", cir_n, "explicit n values");
    circle_cmd->add_option("--out", cir_out, "output file (default stdout)");
    circle_cmd->add_option("--threads", cir_threads, "worker threads");

    // bound
    auto* bound_cmd = app.add_subcommand(
        "bound", "sieve upper-bound main term for R_k(n)");
    unsigned bnd_k = 2;
    int64_t bnd_n = 2;
    uint64_t bnd_x = 100000, bnd_cutoff = 1000;
    bool bnd_count = false;
    std::string bnd_format = "json";
    bound_cmd->add_option("--k", bnd_k, "power k")->required();
    bound_cmd->add_option("--n", bnd_n, "target integer")->required();
    bound_cmd->add_option("--x", bnd_x, "window bound X (n <= X)");
    bound_cmd->add_option("--cutoff", bnd_cutoff, "product truncation");
    bound_cmd->add_flag("--count", bnd_count, "also compute R_k(n)");
    bound_cmd->add_option("--format", bnd_format, "json or csv");

    // hua
    auto* hua_cmd =
        app.add_subcommand("hua", "even moments of the Weyl sum F_k");
    unsigned hua_k = 2, hua_s = 2;
    uint64_t hua_x = 16;
    std::string hua_format = "json";
    hua_cmd->add_option("--k", hua_k, "power k")->required();
    hua_cmd->add_option("--x", hua_x, "scale X")->required();
    hua_cmd->add_option("--s", hua_s, "half the moment order");
    hua_cmd->add_option("--format", hua_format, "json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage
    }

    try {
        if (scan_cmd->parsed()) {
            if (scan_k < 2) {
                std::fprintf(stderr, "scan: k must be >= 2\n");
                return 2;
            }
            return run_scan(scan_k, scan_xmax, scan_out, scan_threads);
        }
        if (series_cmd->parsed())
            return run_series(ser_k, ser_n, ser_cutoff, ser_R, ser_r,
                              ser_format);
        if (verify_cmd->parsed())
            return run_verify_cmd(ver_suite, ver_seed, ver_format);
        if (circle_cmd->parsed())
            return run_circle(cir_k, cir_x, cir_p, cir_q, cir_b, cir_range,
                              cir_n, cir_out, cir_threads);
        if (bound_cmd->parsed())
            return run_bound(bnd_k, bnd_n, bnd_x, bnd_cutoff, bnd_count,
                             bnd_format);
        if (hua_cmd->parsed())
            return run_hua(hua_k, hua_x, hua_s, hua_format);
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const CapacityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 2;
}
