#ifndef HNC_CLI_HPP
#define HNC_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hnc/bernoulli_mod.hpp"
#include "hnc/catalog.hpp"
#include "hnc/context.hpp"
#include "hnc/errors.hpp"
#include "hnc/eval.hpp"
#include "hnc/identities.hpp"
#include "hnc/parse.hpp"
#include "hnc/verify.hpp"

namespace hnc::cli {

namespace detail {

inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline bool parse_range(const std::string& s, std::uint64_t& lo, std::uint64_t& hi) {
    auto dots = s.find("..");
    if (dots == std::string::npos) return false;
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    if (a.empty() || b.empty()) return false;
    if (a.find_first_not_of("0123456789") != std::string::npos) return false;
    if (b.find_first_not_of("0123456789") != std::string::npos) return false;
    try {
        lo = std::stoull(a);
        hi = std::stoull(b);
    } catch (const std::exception&) {
        return false;
    }
    return lo <= hi && hi <= kMaxPrimeCeiling;
}

struct VerifyOptions {
    std::string primes = "7..2000";
    std::string ids;
    std::string catalog_path;
    std::string format = "text";
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool informational_p5 = false;
};

inline int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    std::uint64_t lo = 0, hi = 0;
    if (!parse_range(opt.primes, lo, hi)) {
        err << "error: --primes expects LO..HI with 0 <= LO <= HI <= "
            << kMaxPrimeCeiling << ", got '" << opt.primes << "'\n";
        return 2;
    }

    std::vector<CongruenceSpec> catalog;
    if (opt.catalog_path.empty()) {
        catalog = builtin_catalog();
    } else {
        std::ifstream in(opt.catalog_path);
        if (!in) {
            err << "error: cannot open catalog file '" << opt.catalog_path << "'\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            catalog = parse_catalog(buf.str());
        } catch (const ParseError& ex) {
            err << "error: " << opt.catalog_path << ": " << ex.what() << '\n';
            return 2;
        }
    }

    if (!opt.ids.empty()) {
        std::set<std::string> wanted;
        for (const std::string& id : split_csv(opt.ids)) {
            bool known = false;
            for (const CongruenceSpec& s : catalog) known = known || s.id == id;
            if (!known) {
                err << "error: unknown catalog id '" << id << "'\n";
                return 2;
            }
            wanted.insert(id);
        }
        std::vector<CongruenceSpec> filtered;
        for (const CongruenceSpec& s : catalog)
            if (wanted.count(s.id)) filtered.push_back(s);
        catalog = std::move(filtered);
    }

    ReportFormat fmt = ReportFormat::text;
    if (opt.format == "json")
        fmt = ReportFormat::json;
    else if (opt.format == "csv")
        fmt = ReportFormat::csv;

    const VerificationReport report = verify_range(catalog, lo, hi, opt.jobs);
    out << emit_report(report, fmt);

    if (opt.informational_p5) {
        std::vector<CongruenceSpec> gated;
        int e_need = 1;
        for (const CongruenceSpec& s : catalog)
            if (s.prime_greater_than >= 5) {
                gated.push_back(s);
                gated.back().prime_greater_than = 0;
                e_need = std::max(e_need, s.mod_exponent);
            }
        if (!gated.empty()) {
            err << "informational: evaluating " << gated.size()
                << " gated entries at p=5 (does not affect exit status)\n";
            try {
                PrimeContext ctx(5, e_need);
                for (const CongruenceSpec& s : gated) {
                    VerificationResult r = check_congruence(s, ctx);
                    err << "informational: " << r.id << " | p=5 | " << status_name(r.status);
                    if (r.lhs && r.rhs)
                        err << " | lhs=" << r.lhs->str() << " rhs=" << r.rhs->str();
                    if (r.message) err << " | " << *r.message;
                    err << '\n';
                }
            } catch (const Error& ex) {
                err << "informational: context build failed: " << ex.what() << '\n';
            }
        }
    }

    return report.summary.fail + report.summary.error == 0 ? 0 : 1;
}

struct EvalOptions {
    std::string expr;
    std::uint64_t prime = 0;
    int exp = 0;
};

inline int run_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
    ExprPtr e;
    try {
        e = parse_expression(opt.expr);
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }
    if (opt.exp < 1 || opt.exp > 3) {
        err << "error: --exp must be 1, 2 or 3\n";
        return 2;
    }
    if (opt.prime <= 3 || !is_prime(opt.prime)) {
        err << "error: --prime must be a prime greater than 3\n";
        return 2;
    }
    try {
        PrimeContext ctx(opt.prime, opt.exp);
        out << evaluate_expr(e, ctx, opt.exp).str() << '\n';
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}

struct BernoulliOptions {
    std::uint64_t prime = 0;
    int exp = 0;
    long long index = -1;
    bool index_set = false;
    std::string method = "both";
};

inline int run_bernoulli(const BernoulliOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.exp < 1 || opt.exp > 3) {
        err << "error: --exp must be 1, 2 or 3\n";
        return 2;
    }
    if (opt.prime < 3 || !is_prime(opt.prime)) {
        err << "error: --prime must be an odd prime\n";
        return 2;
    }
    const long long idx =
        opt.index_set ? opt.index : static_cast<long long>(opt.prime) - 3;
    if (idx < 0 || static_cast<std::uint64_t>(idx) > opt.prime - 2) {
        err << "error: --index must lie in 0..p-2 (Bernoulli numbers B_n with n >= p-1 "
               "have no canonical residue mod powers of p)\n";
        return 2;
    }
    const bool want_rec = opt.method == "recurrence" || opt.method == "both";
    const bool want_pow = opt.method == "powersum" || opt.method == "both";
    if (want_pow) {
        if (static_cast<std::uint64_t>(idx) != opt.prime - 3) {
            err << "error: the power-sum method computes only B_{p-3}\n";
            return 2;
        }
        if (opt.prime <= 5) {
            err << "error: the power-sum method requires p > 5\n";
            return 2;
        }
        if (opt.exp > 2) {
            err << "error: the power-sum method supports --exp 1 or 2\n";
            return 2;
        }
    }
    try {
        const PrimePowerModulus m(opt.prime, opt.exp);
        std::optional<Residue> rec, pow;
        if (want_rec) {
            rec = bernoulli_mod_recurrence(static_cast<int>(idx), m);
            out << "recurrence " << rec->str() << '\n';
        }
        if (want_pow) {
            pow = bernoulli_pm3_powersum(opt.prime, opt.exp);
            out << "powersum " << pow->str() << '\n';
        }
        if (rec && pow && *rec != *pow) {
            err << "error: methods disagree\n";
            return 1;
        }
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}

struct IdentityOptions {
    long long max_n = 64;
    std::string which = "2.4,3.1,4.1,4.2,integral";
};

inline int run_identities(const IdentityOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.max_n < 1) {
        err << "error: --max-n must be at least 1\n";
        return 2;
    }
    bool all_ok = true;
    const std::vector<Rational> grid = {Rational(-1), Rational(1, 2), Rational(2), Rational(3)};
    for (const std::string& which : split_csv(opt.which)) {
        long long n_lo = 1, failed_at = 0;
        std::string failed_x;
        if (which == "3.1") n_lo = 2;
        if (which != "2.4" && which != "3.1" && which != "4.1" && which != "4.2" &&
            which != "integral") {
            err << "error: unknown identity '" << which
                << "' (expected 2.4, 3.1, 4.1, 4.2 or integral)\n";
            return 2;
        }
        for (long long n = n_lo; n <= opt.max_n && failed_at == 0; ++n) {
            if (which == "2.4" && !check_lemma_2_4(n)) failed_at = n;
            if (which == "3.1" && !check_lemma_3_1(n)) failed_at = n;
            if (which == "4.1" && !check_lemma_4_1(n)) failed_at = n;
            if (which == "4.2" && !check_lemma_4_2(n)) failed_at = n;
            if (which == "integral")
                for (const Rational& x : grid)
                    if (!check_integral_identity(n, x)) {
                        failed_at = n;
                        failed_x = x.str();
                        break;
                    }
        }
        out << "identity " << which << ": ";
        if (failed_at == 0) {
            out << "ok (n=" << n_lo << ".." << opt.max_n;
            if (which == "integral") out << ", x in {-1, 1/2, 2, 3}";
            out << ")\n";
        } else {
            out << "FAIL at n=" << failed_at;
            if (!failed_x.empty()) out << ", x=" << failed_x;
            out << '\n';
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

struct CatalogOptions {
    bool list = false;
    std::string show;
};

inline int run_catalog(const CatalogOptions& opt, std::ostream& out, std::ostream& err) {
    const std::vector<CongruenceSpec>& entries = builtin_catalog();
    if (!opt.show.empty()) {
        for (const CongruenceSpec& s : entries)
            if (s.id == opt.show) {
                out << print_congruence(s) << '\n';
                return 0;
            }
        err << "error: unknown catalog id '" << opt.show << "'\n";
        return 2;
    }
    for (const CongruenceSpec& s : entries) out << print_congruence(s) << '\n';
    return 0;
}

}  // namespace detail

// argv-style entry point; `args` excludes the program name
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"verification tool for harmonic-number congruences modulo prime powers"};
    app.name("hnc");
    app.require_subcommand(1);

    detail::VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "sweep catalog entries over a prime range");
    verify->add_option("--primes", vopt.primes, "inclusive prime range LO..HI")
        ->capture_default_str();
    verify->add_option("--ids", vopt.ids, "comma-separated entry ids to check");
    verify->add_option("--catalog", vopt.catalog_path, "catalog file (default: builtin)");
    verify->add_option("--format", vopt.format, "report format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    verify->add_option("--jobs", vopt.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--informational-p5", vopt.informational_p5,
                     "also evaluate p=5 against p>5 entries (diagnostic stream only)");

    detail::EvalOptions eopt;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one expression mod p^e");
    eval->add_option("--expr", eopt.expr, "expression")->required();
    eval->add_option("--prime", eopt.prime, "odd prime > 3")->required();
    eval->add_option("--exp", eopt.exp, "modulus exponent 1..3")->required();

    detail::BernoulliOptions bopt;
    CLI::App* bern = app.add_subcommand("bernoulli", "compute B_n mod p^e");
    bern->add_option("--prime", bopt.prime, "odd prime")->required();
    bern->add_option("--exp", bopt.exp, "modulus exponent 1..3")->required();
    CLI::Option* bidx = bern->add_option("--index", bopt.index, "n (default p-3)");
    bern->add_option("--method", bopt.method, "recurrence|powersum|both")
        ->check(CLI::IsMember({"recurrence", "powersum", "both"}))
        ->capture_default_str();

    detail::IdentityOptions iopt;
    CLI::App* ident = app.add_subcommand("identities", "check the exact identities");
    ident->add_option("--max-n", iopt.max_n, "upper bound for n")->capture_default_str();
    ident->add_option("--which", iopt.which, "comma-separated subset")->capture_default_str();

    detail::CatalogOptions copt;
    CLI::App* cat = app.add_subcommand("catalog", "inspect the builtin catalog");
    cat->add_flag("--list", copt.list, "print all entries (default)");
    cat->add_option("--show", copt.show, "print one entry by id");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hnc");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return 2;
    }

    bopt.index_set = bidx->count() > 0;
    if (app.got_subcommand(verify)) return detail::run_verify(vopt, out, err);
    if (app.got_subcommand(eval)) return detail::run_eval(eopt, out, err);
    if (app.got_subcommand(bern)) return detail::run_bernoulli(bopt, out, err);
    if (app.got_subcommand(ident)) return detail::run_identities(iopt, out, err);
    if (app.got_subcommand(cat)) return detail::run_catalog(copt, out, err);
    return 2;
}

}  // namespace hnc::cli

#endif
