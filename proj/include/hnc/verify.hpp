#ifndef HNC_VERIFY_HPP
#define HNC_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hnc/catalog.hpp"
#include "hnc/context.hpp"
#include "hnc/errors.hpp"
#include "hnc/eval.hpp"
#include "hnc/expr.hpp"

namespace hnc {

// keeps p^4 (the lifted modulus) well inside 128 bits
inline constexpr std::uint64_t kMaxPrimeCeiling = 1000000;

inline std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi) {
    if (hi > kMaxPrimeCeiling)
        throw IndexOutOfRange("prime bound " + std::to_string(hi) + " exceeds ceiling " +
                              std::to_string(kMaxPrimeCeiling));
    std::vector<std::uint64_t> out;
    if (lo > hi) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

struct ReportSummary {
    std::size_t pass = 0, fail = 0, skipped = 0, error = 0;
};

struct VerificationReport {
    std::uint64_t lo = 0, hi = 0;
    std::vector<VerificationResult> results;
    ReportSummary summary;
    std::chrono::duration<double> elapsed{0};
};

inline VerificationReport verify_range(const std::vector<CongruenceSpec>& catalog,
                                       std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport report;
    report.lo = lo;
    report.hi = hi;

    int e_need = 1;
    for (const CongruenceSpec& s : catalog) e_need = std::max(e_need, s.mod_exponent);

    const std::vector<std::uint64_t> primes = sieve_primes(lo, hi);
    std::vector<std::vector<VerificationResult>> cells(primes.size());

    auto run_prime = [&](std::size_t pi) {
        const std::uint64_t p = primes[pi];
        std::vector<VerificationResult>& row = cells[pi];
        row.resize(catalog.size());
        bool any_applicable = false;
        for (const CongruenceSpec& s : catalog)
            if (static_cast<long long>(p) > s.prime_greater_than) any_applicable = true;
        if (!any_applicable) {
            for (std::size_t si = 0; si < catalog.size(); ++si) {
                row[si].id = catalog[si].id;
                row[si].p = p;
                row[si].status = Status::skipped;
            }
            return;
        }
        try {
            PrimeContext ctx(p, e_need);
            for (std::size_t si = 0; si < catalog.size(); ++si)
                row[si] = check_congruence(catalog[si], ctx);
        } catch (const Error& ex) {
            for (std::size_t si = 0; si < catalog.size(); ++si) {
                row[si].id = catalog[si].id;
                row[si].p = p;
                if (static_cast<long long>(p) > catalog[si].prime_greater_than) {
                    row[si].status = Status::error;
                    row[si].message = ex.what();
                } else {
                    row[si].status = Status::skipped;
                }
            }
        }
    };

    unsigned workers = std::max(1u, jobs);
    workers = static_cast<unsigned>(
        std::min<std::size_t>(workers, std::max<std::size_t>(primes.size(), 1)));
    if (workers <= 1) {
        for (std::size_t pi = 0; pi < primes.size(); ++pi) run_prime(pi);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t pi = next.fetch_add(1); pi < primes.size();
                     pi = next.fetch_add(1))
                    run_prime(pi);
            });
        for (std::thread& t : pool) t.join();
    }

    // canonical order: catalog order outer, ascending prime inner
    for (std::size_t si = 0; si < catalog.size(); ++si)
        for (std::size_t pi = 0; pi < primes.size(); ++pi)
            report.results.push_back(std::move(cells[pi][si]));
    for (const VerificationResult& r : report.results) switch (r.status) {
            case Status::pass:
                ++report.summary.pass;
                break;
            case Status::fail:
                ++report.summary.fail;
                break;
            case Status::skipped:
                ++report.summary.skipped;
                break;
            case Status::error:
                ++report.summary.error;
                break;
        }
    report.elapsed = std::chrono::steady_clock::now() - t0;
    return report;
}

enum class ReportFormat { text, json, csv };

inline std::string emit_report(const VerificationReport& report, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::text: {
            for (const VerificationResult& r : report.results) {
                os << r.id << " | p=" << r.p << " | " << status_name(r.status);
                if (r.lhs && r.rhs)
                    os << " | lhs=" << r.lhs->str() << " rhs=" << r.rhs->str();
                if (r.message) os << " | " << *r.message;
                os << '\n';
            }
            os << "summary: pass=" << report.summary.pass << " fail=" << report.summary.fail
               << " skipped=" << report.summary.skipped << " error=" << report.summary.error
               << '\n';
            break;
        }
        case ReportFormat::json: {
            nlohmann::ordered_json j;
            j["version"] = 1;
            j["range"] = {{"lo", report.lo}, {"hi", report.hi}};
            j["results"] = nlohmann::ordered_json::array();
            for (const VerificationResult& r : report.results) {
                nlohmann::ordered_json row;
                row["id"] = r.id;
                row["p"] = r.p;
                row["status"] = status_name(r.status);
                row["lhs"] = r.lhs ? nlohmann::ordered_json(r.lhs->str())
                                   : nlohmann::ordered_json(nullptr);
                row["rhs"] = r.rhs ? nlohmann::ordered_json(r.rhs->str())
                                   : nlohmann::ordered_json(nullptr);
                j["results"].push_back(std::move(row));
            }
            j["summary"] = {{"pass", report.summary.pass},
                            {"fail", report.summary.fail},
                            {"skipped", report.summary.skipped},
                            {"error", report.summary.error}};
            os << j.dump();
            os << '\n';
            break;
        }
        case ReportFormat::csv: {
            os << "id,p,status,lhs,rhs\n";
            for (const VerificationResult& r : report.results) {
                os << r.id << ',' << r.p << ',' << status_name(r.status) << ',';
                if (r.lhs) os << r.lhs->str();
                os << ',';
                if (r.rhs) os << r.rhs->str();
                os << '\n';
            }
            break;
        }
    }
    return os.str();
}

}  // namespace hnc

#endif
