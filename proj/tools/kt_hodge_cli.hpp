#pragma once

// Command-line front end for the kt_hodge library. Kept header-only so the
// test suite can drive `run` and `run_cli` in-process.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kt_hodge/kt_hodge.hpp"

namespace kt_hodge::cli {

using json = nlohmann::json;

enum class Command { Diamond, H01, Sweep, Search, VerifyStokes, Sectors };
enum class Format { Table, Json, Csv };

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kDomainError = 2,
    kVerificationMismatch = 3,
};

struct RunConfig {
    Command command = Command::Diamond;
    std::optional<Rational> d;
    Rational a{0};
    std::optional<Rational> rho;
    long k_max = 3;
    long m_max = 3;
    long n_max = 3;
    long window = 3;
    std::optional<long> l_max;
    long p_max = 50;
    long q_max = 5;
    std::optional<BigInt> target;
    long count = 100;
    bool oracle = false;
    Format format = Format::Table;
    std::uint64_t seed = 0;
    double tol = 1e-6;
    std::optional<std::string> output;
};

/// Worker count: KT_HODGE_THREADS when set and positive, else hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("KT_HODGE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Evaluates fn(i) for i in [0, n) on a thread pool; results stay in index order.
template <typename Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<std::optional<R>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(n, 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<R> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

namespace detail {

struct Failure {
    int code;
    std::string reason;
};

inline MetricSpec metric_of(const RunConfig& cfg) {
    return cfg.rho ? MetricSpec::rho(*cfg.rho) : MetricSpec::standard();
}

inline json params_json(const RunConfig& cfg) {
    json p;
    p["a"] = cfg.a.str();
    p["d"] = cfg.d ? json(cfg.d->str()) : json(nullptr);
    p["rho"] = cfg.rho ? json(cfg.rho->str()) : json(nullptr);
    return p;
}

inline json witnesses_json(const LatticeCount& lc) {
    json w = json::array();
    for (const auto& pt : lc.points) w.push_back({pt.l, pt.m});
    return w;
}

inline std::string key(int p, int q) { return "h" + std::to_string(p) + std::to_string(q); }

inline const Rational& require_d(const RunConfig& cfg) {
    if (!cfg.d) throw Failure{kUsageError, "usage: --d is required for this command"};
    return *cfg.d;
}

inline void emit_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
}

inline int cmd_diamond(const RunConfig& cfg, std::ostream& out) {
    AcsParams params(cfg.a, require_d(cfg));
    MetricSpec metric = metric_of(cfg);
    SweepWindow window{cfg.k_max, cfg.m_max, cfg.n_max};
    HodgeDiamond dia = hodge_diamond(params, metric, window);
    LatticeCount lattice = scaled_circle_count(params.d, metric.rho_value());

    switch (cfg.format) {
    case Format::Json: {
        json j;
        j["params"] = params_json(cfg);
        j["metric"] = metric.name();
        json grid;
        json prov;
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q) {
                grid[key(p, q)] = dia(p, q);
                prov[key(p, q)] = std::string(to_string(dia.provenance[p][q]));
            }
        j["diamond"] = grid;
        j["provenance"] = prov;
        j["witnesses"] = witnesses_json(lattice);
        if (!lattice.points_complete) j["witnesses_complete"] = false;
        j["serre_check"] = serre_check(dia);
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        emit_csv_row(out, {"p", "q", "h", "provenance"});
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                emit_csv_row(out, {std::to_string(p), std::to_string(q), std::to_string(dia(p, q)),
                                   std::string(to_string(dia.provenance[p][q]))});
        break;
    case Format::Table:
        out << "Hodge diamond of (KT^4, J_{a,b}) with a = " << cfg.a << ", d = b/(8 pi) = " << params.d
            << ", metric = " << metric.name();
        if (cfg.rho) out << " (rho = " << *cfg.rho << ")";
        out << "\n\n";
        out << "            " << dia(2, 2) << "\n";
        out << "        " << dia(2, 1) << "       " << dia(1, 2) << "\n";
        out << "    " << dia(2, 0) << "       " << dia(1, 1) << "       " << dia(0, 2) << "\n";
        out << "        " << dia(1, 0) << "       " << dia(0, 1) << "\n";
        out << "            " << dia(0, 0) << "\n\n";
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                out << "h^{" << p << "," << q << "} = " << dia(p, q) << "  [" << to_string(dia.provenance[p][q]) << "]\n";
        out << "serre_check: " << (serre_check(dia) ? "ok" : "FAILED") << "\n";
        break;
    }
    return kSuccess;
}

inline int cmd_h01(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    AcsParams params(cfg.a, require_d(cfg));
    MetricSpec metric = metric_of(cfg);
    H01Report rep = h01_report(params, metric, {cfg.k_max, cfg.m_max, cfg.n_max});

    json oracle = nullptr;
    bool mismatch = false;
    if (cfg.oracle) {
        oracle = json::object();
        if (abs(params.d.num()) * 2 / params.d.den() > 10000000) {
            throw Failure{kDomainError, "InvalidArgument: d = " + params.d.str() + " too large for the brute-force oracle"};
        }
        // Independent route: sum finite-sector dimensions over a window covering the circle.
        const Rational rho = metric.rho_value();
        long l_lo = params.d.sign() > 0 ? 0 : -static_cast<long>(BigInt(abs(params.d.num()) * 2 / params.d.den() + 1).get_si());
        long l_hi = params.d.sign() > 0 ? static_cast<long>(BigInt(params.d.num() * 2 / params.d.den() + 1).get_si()) : 0;
        double radius = std::sqrt(rho.to_double()) * std::abs(params.d.to_double());
        long m_bound = static_cast<long>(std::ceil(radius)) + 1;
        unsigned long long sector_sum = 0;
        for (long l = l_lo; l <= l_hi; ++l)
            for (long m = -m_bound; m <= m_bound; ++m)
                sector_sum += finite_sector_dimension(params, metric, 0, l, m).dimension;
        oracle["finite_sector_sum"] = sector_sum;
        mismatch |= sector_sum != rep.count;
        if (metric.is_standard() || rho == Rational(1)) {
            auto brute = circle_count_brute(params.d);
            oracle["brute_force"] = brute.count;
            mismatch |= brute.count != rep.count;
            if (params.d.den() <= 5) {
                BigInt closed = circle_count_closed(params.d);
                oracle["closed_form"] = closed.get_ui();
                mismatch |= closed != BigInt(static_cast<unsigned long>(rep.count));
            }
        }
        oracle["match"] = !mismatch;
    }

    switch (cfg.format) {
    case Format::Json: {
        json j;
        j["params"] = params_json(cfg);
        j["metric"] = metric.name();
        j["h01"] = rep.count;
        j["witnesses"] = witnesses_json(rep.lattice);
        if (!rep.lattice.points_complete) j["witnesses_complete"] = false;
        j["swept_sectors"] = rep.swept_sectors;
        if (cfg.oracle) j["oracle"] = oracle;
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        emit_csv_row(out, {"l", "m"});
        for (const auto& pt : rep.lattice.points) emit_csv_row(out, {std::to_string(pt.l), std::to_string(pt.m)});
        break;
    case Format::Table:
        out << "h01 = " << rep.count << " (d = " << params.d << ", metric = " << metric.name() << ")\n";
        out << "witnesses (l, m):";
        for (const auto& pt : rep.lattice.points) out << " (" << pt.l << "," << pt.m << ")";
        if (!rep.lattice.points_complete) out << " (coordinates exceed 64 bits, not listed)";
        out << "\nn != 0 sectors swept: " << rep.swept_sectors << ", all empty\n";
        if (cfg.oracle) out << "oracle: " << oracle.dump() << "\n";
        break;
    }
    if (mismatch) {
        err << "error: mismatch: h01 oracle disagreement\n";
        return kVerificationMismatch;
    }
    return kSuccess;
}

struct SweepRow {
    long p;
    long q;
    Rational d;
    BigInt closed;
    std::size_t brute;
    std::size_t axis;
};

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.q_max > 5) throw Failure{kDomainError, "UnsupportedDenominator: closed form requires q_max <= 5"};
    if (cfg.p_max < 1 || cfg.q_max < 1) throw Failure{kUsageError, "usage: --p-max and --q-max must be positive"};
    std::vector<std::pair<long, long>> grid;
    for (long p = 1; p <= cfg.p_max; ++p)
        for (long q = 1; q <= cfg.q_max; ++q)
            if (std::gcd(p, q) == 1) grid.emplace_back(p, q);

    auto rows = parallel_map(grid.size(), [&](std::size_t i) {
        auto [p, q] = grid[i];
        Rational d(p, q);
        auto brute = circle_count_brute(d);
        return SweepRow{p, q, d, circle_count_closed(d), brute.count, brute.axis_points()};
    });

    std::size_t mismatches = 0;
    for (const auto& r : rows) mismatches += r.closed != BigInt(static_cast<unsigned long>(r.brute));

    switch (cfg.format) {
    case Format::Csv:
        emit_csv_row(out, {"p", "q", "d", "closed_form", "brute_force", "match", "witness_count_m0"});
        for (const auto& r : rows) {
            bool match = r.closed == BigInt(static_cast<unsigned long>(r.brute));
            emit_csv_row(out, {std::to_string(r.p), std::to_string(r.q), r.d.str(), r.closed.get_str(),
                               std::to_string(r.brute), match ? "true" : "false", std::to_string(r.axis)});
        }
        break;
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"p", r.p}, {"q", r.q}, {"d", r.d.str()}, {"closed_form", r.closed.get_str()},
                           {"brute_force", r.brute}, {"match", r.closed == BigInt(static_cast<unsigned long>(r.brute))},
                           {"witness_count_m0", r.axis}});
        }
        json j;
        j["rows"] = arr;
        j["mismatches"] = mismatches;
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Table:
        out << std::setw(6) << "p" << std::setw(4) << "q" << std::setw(10) << "d" << std::setw(8) << "closed"
            << std::setw(8) << "brute" << std::setw(7) << "match" << "\n";
        for (const auto& r : rows) {
            bool match = r.closed == BigInt(static_cast<unsigned long>(r.brute));
            out << std::setw(6) << r.p << std::setw(4) << r.q << std::setw(10) << r.d.str() << std::setw(8)
                << r.closed.get_str() << std::setw(8) << r.brute << std::setw(7) << (match ? "yes" : "NO") << "\n";
        }
        out << rows.size() << " parameters, " << mismatches << " mismatches\n";
        break;
    }
    if (mismatches > 0) {
        err << "error: mismatch: " << mismatches << " closed-form/brute-force disagreements\n";
        return kVerificationMismatch;
    }
    return kSuccess;
}

inline int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.target) throw Failure{kUsageError, "usage: --target is required for search"};
    Rational d = find_d_for_count(*cfg.target);
    BigInt closed = circle_count_closed(d);
    std::optional<std::size_t> brute;
    if (d.num() <= 1000000) brute = circle_count_brute(d).count;
    bool ok = closed == *cfg.target && (!brute || BigInt(static_cast<unsigned long>(*brute)) == *cfg.target);

    switch (cfg.format) {
    case Format::Json: {
        json j;
        j["target"] = cfg.target->get_str();
        j["d"] = d.str();
        j["closed_form"] = closed.get_str();
        j["brute_force"] = brute ? json(*brute) : json(nullptr);
        j["match"] = ok;
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        emit_csv_row(out, {"target", "d", "closed_form", "brute_force", "match"});
        emit_csv_row(out, {cfg.target->get_str(), d.str(), closed.get_str(), brute ? std::to_string(*brute) : "",
                           ok ? "true" : "false"});
        break;
    case Format::Table:
        out << "target " << *cfg.target << ": d = " << d << " (b = 8 pi d), closed form " << closed;
        if (brute) out << ", brute force " << *brute;
        out << "\n";
        break;
    }
    if (!ok) {
        err << "error: mismatch: realized count differs from target\n";
        return kVerificationMismatch;
    }
    return kSuccess;
}

struct StokesCheck {
    double target_ratio;
    Complex ratio;
    bool algebraic;
    bool numeric;
    double angle;
};

/// Ratios cycled by verify-stokes: solvable {-5..-1, 0}, unsolvable {1/2, 1/3, 1, 5/2}.
inline const std::vector<double>& verification_ratios() {
    static const std::vector<double> r{-5.0, -4.0, -3.0, -2.0, -1.0, 0.0, 0.5, 1.0 / 3.0, 1.0, 2.5};
    return r;
}

inline int cmd_verify_stokes(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.count < 1) throw Failure{kUsageError, "usage: --count must be positive"};
    const auto& ratios = verification_ratios();
    std::vector<StokesProblem> problems;
    std::vector<double> targets;
    std::mt19937_64 rng(cfg.seed);
    for (long i = 0; i < cfg.count; ++i) {
        double r = ratios[static_cast<std::size_t>(i) % ratios.size()];
        problems.push_back(random_problem_with_ratio(rng, Complex(r, 0.0)));
        targets.push_back(r);
    }
    ShootingOptions opts;
    opts.tol = cfg.tol;
    auto checks = parallel_map(problems.size(), [&](std::size_t i) {
        auto alg = stokes_criterion(problems[i]);
        auto num = numeric_l2_test(problems[i], opts);
        return StokesCheck{targets[i], alg.ratio, alg.solvable, num.solvable, *num.angle};
    });
    std::size_t disagreements = 0;
    for (const auto& c : checks) disagreements += c.algebraic != c.numeric;

    switch (cfg.format) {
    case Format::Json: {
        json arr = json::array();
        for (const auto& c : checks) {
            arr.push_back({{"target_ratio", c.target_ratio}, {"ratio_re", c.ratio.real()}, {"ratio_im", c.ratio.imag()},
                           {"algebraic", c.algebraic}, {"numeric", c.numeric}, {"angle", c.angle}});
        }
        json j;
        j["seed"] = cfg.seed;
        j["problems"] = arr;
        j["disagreements"] = disagreements;
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        emit_csv_row(out, {"index", "target_ratio", "ratio_re", "ratio_im", "algebraic", "numeric", "angle"});
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const auto& c = checks[i];
            std::ostringstream angle;
            angle << std::setprecision(6) << c.angle;
            std::ostringstream re;
            re << std::setprecision(12) << c.ratio.real();
            std::ostringstream im;
            im << std::setprecision(3) << c.ratio.imag();
            emit_csv_row(out, {std::to_string(i), std::to_string(c.target_ratio), re.str(), im.str(),
                               c.algebraic ? "solvable" : "unsolvable", c.numeric ? "solvable" : "unsolvable", angle.str()});
        }
        break;
    case Format::Table:
        out << checks.size() << " problems (seed " << cfg.seed << "), " << disagreements << " disagreements\n";
        for (double r : ratios) {
            double worst_solvable = 0.0;
            double least_unsolvable = 1e300;
            std::size_t n = 0;
            for (const auto& c : checks) {
                if (c.target_ratio != r) continue;
                ++n;
                if (c.algebraic) worst_solvable = std::max(worst_solvable, c.angle);
                else least_unsolvable = std::min(least_unsolvable, c.angle);
            }
            out << "  ratio " << std::setw(9) << r << ": " << n << " problems, ";
            if (n && checks.front().target_ratio <= 0.0 && r <= 0.0) out << "max angle " << worst_solvable;
            else out << "min angle " << least_unsolvable;
            out << "\n";
        }
        break;
    }
    if (disagreements > 0) {
        err << "error: mismatch: " << disagreements << " algebraic/numeric disagreements\n";
        return kVerificationMismatch;
    }
    return kSuccess;
}

inline json certificate_json(const Certificate& c) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LatticeWitness>) {
                return {{"kind", "lattice_witness"}, {"l", v.l}, {"m", v.m}};
            } else if constexpr (std::is_same_v<T, ConstantSolution>) {
                return {{"kind", "constant_solution"}};
            } else if constexpr (std::is_same_v<T, StokesRatio>) {
                return {{"kind", "stokes_ratio"}, {"ratio", v.ratio.str()}, {"note", v.note}};
            } else {
                return {{"kind", "empty"}, {"reason", v.reason}};
            }
        },
        c);
}

inline int cmd_sectors(const RunConfig& cfg, std::ostream& out) {
    AcsParams params(cfg.a, require_d(cfg));
    MetricSpec metric = metric_of(cfg);
    const Rational rho = metric.rho_value();
    long l_max = cfg.l_max.value_or(
        static_cast<long>(BigInt(abs(params.d.num()) * 2 / params.d.den()).get_si()) + 1);
    auto ids = enumerate_sectors(cfg.k_max, l_max, cfg.m_max, cfg.n_max);
    auto reports = parallel_map(ids.size(), [&](std::size_t i) {
        const SectorId& id = ids[i];
        if (const auto* f = std::get_if<FiniteOrbit>(&id)) return finite_sector_dimension(params, metric, f->k, f->l, f->m);
        const auto& s = std::get<InfiniteOrbit>(id);
        return metric.is_standard() ? sector_criterion_standard(params, s.k, s.m, s.n)
                                    : sector_criterion_rho(params, rho, s.k, s.m, s.n);
    });
    unsigned long long total = 0;
    for (const auto& r : reports) total += r.dimension;

    switch (cfg.format) {
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back({{"sector", to_string(r.sector)}, {"dimension", r.dimension},
                           {"certificate", certificate_json(r.certificate)}});
        }
        json j;
        j["params"] = params_json(cfg);
        j["metric"] = metric.name();
        j["sectors"] = arr;
        j["total_dimension"] = total;
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        emit_csv_row(out, {"sector", "dimension", "certificate"});
        for (const auto& r : reports) {
            emit_csv_row(out, {"\"" + to_string(r.sector) + "\"", std::to_string(r.dimension),
                               certificate_json(r.certificate)["kind"].get<std::string>()});
        }
        break;
    case Format::Table:
        for (const auto& r : reports) {
            if (r.dimension == 0 && std::holds_alternative<Empty>(r.certificate)) continue;
            out << std::left << std::setw(28) << to_string(r.sector) << std::right << " dim " << r.dimension << "  "
                << certificate_json(r.certificate).dump() << "\n";
        }
        out << ids.size() << " sectors, total dimension " << total << " (nonsingular finite sectors omitted)\n";
        break;
    }
    return kSuccess;
}

} // namespace detail

/// Executes a parsed configuration. Errors go to `err` as one line "error: <kind>: <reason>".
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (cfg.output) {
        file.open(*cfg.output);
        if (!file) {
            err << "error: usage: cannot open output file " << *cfg.output << "\n";
            return kUsageError;
        }
        sink = &file;
    }
    try {
        switch (cfg.command) {
        case Command::Diamond: return detail::cmd_diamond(cfg, *sink);
        case Command::H01: return detail::cmd_h01(cfg, *sink, err);
        case Command::Sweep: return detail::cmd_sweep(cfg, *sink, err);
        case Command::Search: return detail::cmd_search(cfg, *sink, err);
        case Command::VerifyStokes: return detail::cmd_verify_stokes(cfg, *sink, err);
        case Command::Sectors: return detail::cmd_sectors(cfg, *sink);
        }
    } catch (const detail::Failure& f) {
        err << "error: " << f.reason << "\n";
        return f.code;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidArgument) {
            err << "error: usage: " << e.what() << "\n";
            return kUsageError;
        }
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kDomainError;
    }
    return kUsageError;
}

/// Parses argv with CLI11 and runs. Parse failures exit 1.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hodge numbers of almost complex structures on the Kodaira-Thurston manifold"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string d_text;
    std::string a_text = "0";
    std::string rho_text;
    std::string target_text;
    std::string format_text = "table";
    std::string output_text;

    auto rational_check = [](const std::string& s) -> std::string {
        try {
            Rational::parse(s);
            return {};
        } catch (const Error& e) {
            return e.what();
        }
    };

    auto add_params = [&](CLI::App* sub, bool needs_d) {
        auto* opt = sub->add_option("--d", d_text, "d = b/(8 pi), as p or p/q")->check(CLI::Validator(rational_check, "RATIONAL"));
        if (needs_d) opt->required();
        sub->add_option("--a", a_text, "a, as p or p/q (default 0)")->check(CLI::Validator(rational_check, "RATIONAL"));
        sub->add_option("--rho", rho_text, "almost Kahler deformation rho > 0 (default: standard metric)")
            ->check(CLI::Validator(rational_check, "RATIONAL"));
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "table | json | csv")->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--output", output_text, "write the report to this file");
    };
    auto add_window = [&](CLI::App* sub) {
        sub->add_option("--k-max", cfg.k_max, "|k| bound for sector sweeps")->check(CLI::NonNegativeNumber);
        sub->add_option("--m-max", cfg.m_max, "m bound for sector sweeps")->check(CLI::NonNegativeNumber);
        sub->add_option("--n-max", cfg.n_max, "|n| bound for sector sweeps")->check(CLI::NonNegativeNumber);
    };

    auto* diamond = app.add_subcommand("diamond", "full Hodge diamond");
    add_params(diamond, true);
    add_window(diamond);
    add_common(diamond);

    auto* h01_cmd = app.add_subcommand("h01", "h^{0,1} with lattice witnesses");
    add_params(h01_cmd, true);
    add_window(h01_cmd);
    add_common(h01_cmd);
    h01_cmd->add_flag("--oracle", cfg.oracle, "cross-check against brute force and sector sums");

    auto* sweep = app.add_subcommand("sweep", "closed form vs brute force over d = p/q");
    sweep->add_option("--p-max", cfg.p_max, "largest numerator");
    sweep->add_option("--q-max", cfg.q_max, "largest denominator (<= 5)");
    add_common(sweep);

    auto* search = app.add_subcommand("search", "find d whose circle carries exactly n lattice points");
    search->add_option("--target", target_text, "target count n")->required();
    add_common(search);

    auto* verify = app.add_subcommand("verify-stokes", "randomized algebraic vs numeric Stokes agreement");
    verify->add_option("--count", cfg.count, "number of problems");
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_option("--tol", cfg.tol, "subspace-angle threshold")->check(CLI::PositiveNumber);
    add_common(verify);

    auto* sectors = app.add_subcommand("sectors", "per-sector harmonic-form report");
    add_params(sectors, true);
    add_window(sectors);
    sectors->add_option("--l-max", cfg.l_max, "|l| bound for finite sectors (default covers the circle)");
    add_common(sectors);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: usage: " << msg << "\n";
        return kUsageError;
    }

    if (*diamond) cfg.command = Command::Diamond;
    else if (*h01_cmd) cfg.command = Command::H01;
    else if (*sweep) cfg.command = Command::Sweep;
    else if (*search) cfg.command = Command::Search;
    else if (*verify) cfg.command = Command::VerifyStokes;
    else cfg.command = Command::Sectors;

    if (!d_text.empty()) cfg.d = Rational::parse(d_text);
    cfg.a = Rational::parse(a_text);
    if (!rho_text.empty()) cfg.rho = Rational::parse(rho_text);
    if (!output_text.empty()) cfg.output = output_text;
    cfg.format = format_text == "json" ? Format::Json : format_text == "csv" ? Format::Csv : Format::Table;

    if (!target_text.empty()) {
        auto r = Rational::parse(target_text);
        if (!r.is_integer() || r.sign() <= 0) {
            err << "error: usage: --target must be a positive integer\n";
            return kUsageError;
        }
        cfg.target = r.num();
    }
    // Domain errors on d and rho surface before any work.
    if (cfg.d && cfg.d->is_zero()) {
        err << "error: ZeroParameter: d must be nonzero (b = 8 pi d)\n";
        return kDomainError;
    }
    if (cfg.rho && cfg.rho->sign() <= 0) {
        err << "error: NonPositiveRho: rho must be positive\n";
        return kDomainError;
    }
    return run(cfg, out, err);
}

} // namespace kt_hodge::cli
