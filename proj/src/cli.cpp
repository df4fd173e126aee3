#include "lah/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lah/factorial_basis.hpp"
#include "lah/identities.hpp"
#include "lah/lah_numbers.hpp"
#include "lah/sequence_props.hpp"
#include "lah/series.hpp"
#include "lah/special_functions.hpp"

namespace lah {

namespace {

enum class Format { text, json, csv };

const std::map<std::string, Format> kFormatNames{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

// 17 significant digits round-trip a double exactly, so CSV and JSON
// renderings of the same run carry identical numeric content.
std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool is_integral(double v) {
    return v == std::floor(v) && std::abs(v) < 9007199254740992.0;
}

std::string format_param(double v) {
    if (is_integral(v)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    return format_real(v);
}

nlohmann::json params_to_json(const std::map<std::string, double>& params) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, value] : params) {
        if (is_integral(value)) {
            j[name] = static_cast<long long>(value);
        } else {
            j[name] = value;
        }
    }
    return j;
}

std::string params_to_string(const std::map<std::string, double>& params) {
    std::string s;
    for (const auto& [name, value] : params) {
        if (!s.empty()) s += ';';
        s += name + '=' + format_param(value);
    }
    return s;
}

std::string csv_safe(std::string s) {
    for (char& c : s) {
        if (c == ',' || c == '\n') c = ';';
    }
    return s;
}

// One row of the verification suite.  Exact checks (integer/rational
// comparisons) carry no numeric error fields; quadrature-backed checks carry
// the full report.
struct CheckRecord {
    std::string id;
    std::map<std::string, double> parameters;
    bool exact = false;
    bool passed = false;
    std::optional<double> lhs;
    std::optional<double> rhs;
    std::optional<double> abs_error;
    std::optional<double> rel_error;
    std::optional<QuadratureResult> quadrature;
    std::string note;
};

CheckRecord from_report(const IdentityReport& report) {
    CheckRecord r;
    r.id = report.identity_id;
    r.parameters = report.parameters;
    r.passed = report.passed;
    r.lhs = report.lhs;
    r.rhs = report.rhs.value;
    r.abs_error = report.abs_error;
    if (std::isfinite(report.rel_error)) r.rel_error = report.rel_error;
    r.quadrature = report.rhs;
    return r;
}

nlohmann::json optional_json(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json();
}

nlohmann::json record_to_json(const CheckRecord& r) {
    nlohmann::json j;
    j["id"] = r.id;
    j["parameters"] = params_to_json(r.parameters);
    j["exact"] = r.exact;
    j["passed"] = r.passed;
    j["lhs"] = optional_json(r.lhs);
    j["rhs"] = optional_json(r.rhs);
    j["abs_error"] = optional_json(r.abs_error);
    j["rel_error"] = optional_json(r.rel_error);
    if (r.quadrature) {
        j["quadrature"] = {{"value", r.quadrature->value},
                           {"error_estimate", r.quadrature->error_estimate},
                           {"truncation_point", r.quadrature->truncation_point},
                           {"evaluations", r.quadrature->evaluations}};
    } else {
        j["quadrature"] = nullptr;
    }
    j["note"] = r.note;
    return j;
}

void write_records_csv(std::ostream& dst, const std::vector<CheckRecord>& records) {
    dst << "id,parameters,exact,passed,lhs,rhs,abs_error,rel_error,"
           "quad_value,quad_error_estimate,quad_truncation_point,quad_evaluations,note\n";
    auto cell = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
    for (const CheckRecord& r : records) {
        dst << r.id << ',' << params_to_string(r.parameters) << ','
            << (r.exact ? "true" : "false") << ',' << (r.passed ? "true" : "false") << ','
            << cell(r.lhs) << ',' << cell(r.rhs) << ',' << cell(r.abs_error) << ','
            << cell(r.rel_error) << ',';
        if (r.quadrature) {
            dst << format_real(r.quadrature->value) << ','
                << format_real(r.quadrature->error_estimate) << ','
                << format_real(r.quadrature->truncation_point) << ','
                << r.quadrature->evaluations;
        } else {
            dst << ",,,";
        }
        dst << ',' << csv_safe(r.note) << '\n';
    }
}

void write_records_text(std::ostream& dst, const std::vector<CheckRecord>& records) {
    std::size_t passed = 0;
    for (const CheckRecord& r : records) {
        if (r.passed) ++passed;
        dst << (r.passed ? "[ ok ] " : "[FAIL] ") << r.id;
        const std::string params = params_to_string(r.parameters);
        if (!params.empty()) dst << ' ' << params;
        if (r.exact) {
            dst << " exact";
        } else if (r.rel_error) {
            dst << " rel_error=" << format_real(*r.rel_error);
        } else if (r.abs_error) {
            dst << " abs_error=" << format_real(*r.abs_error);
        }
        if (!r.note.empty()) dst << " (" << r.note << ')';
        dst << '\n';
    }
    dst << "passed " << passed << '/' << records.size() << " checks\n";
}

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
    unsigned long n_max = 6;
    double tol = 1e-8;
    std::vector<double> grid_x = {0.25, 0.5, 1.0, 2.0};
    std::vector<double> grid_z = {0.5, 1.0, 2.0, 10.0};
    std::vector<unsigned long> grid_k = {0, 1, 2, 3};
};

void run_exact_checks(const VerifyConfig& cfg, std::vector<CheckRecord>& records) {
    auto add = [&records](std::string id, std::map<std::string, double> params, bool ok,
                          std::string note) {
        CheckRecord r;
        r.id = std::move(id);
        r.parameters = std::move(params);
        r.exact = true;
        r.passed = ok;
        r.note = std::move(note);
        records.push_back(std::move(r));
    };

    // n! * [x^n] (1/k!) (x/(1-x))^k == L(n,k), and the alternating variant
    // n! * [x^n] (-1)^k (1/k!) (x/(1+x))^k == (-1)^n L(n,k).
    for (unsigned long k : cfg.grid_k) {
        if (k == 0) continue;  // the series checks live on the k >= 1 triangle
        const unsigned long order = cfg.n_max + k;
        {
            const TruncatedSeries s = lah_generating_series(k, order);
            bool ok = s.coeff(0) == 0;
            std::string note = ok ? "" : "nonzero constant term";
            for (unsigned long n = 1; n <= order && ok; ++n) {
                const Rat got = s.coeff(n) * Rat(factorial(n));
                const Rat want = n >= k ? Rat(lah(n, k)) : Rat(0);
                if (got != want) {
                    ok = false;
                    note = "coefficient mismatch at n=" + std::to_string(n);
                }
            }
            add("generating_series",
                {{"k", static_cast<double>(k)}, {"order", static_cast<double>(order)}}, ok, note);
        }
        {
            const TruncatedSeries s = alternating_generating_series(k, order);
            bool ok = s.coeff(0) == 0;
            std::string note = ok ? "" : "nonzero constant term";
            for (unsigned long n = 1; n <= order && ok; ++n) {
                Rat got = s.coeff(n) * Rat(factorial(n));
                if (n % 2 == 1) got = -got;
                const Rat want = n >= k ? Rat(lah(n, k)) : Rat(0);
                if (got != want) {
                    ok = false;
                    note = "coefficient mismatch at n=" + std::to_string(n);
                }
            }
            add("alternating_series",
                {{"k", static_cast<double>(k)}, {"order", static_cast<double>(order)}}, ok, note);
        }
    }

    // The Laurent recurrence for d^n/dx^n e^{s/x} against the closed form
    // e^{s/x} (-1)^n sum_k s^k L(n,k) x^{-(n+k)}, both signs.
    for (unsigned long n = 1; n <= cfg.n_max; ++n) {
        for (int sign : {+1, -1}) {
            const LaurentExpDerivative deriv = exp_reciprocal_derivative(n, sign);
            std::map<unsigned long, Rat> expected;
            const std::vector<Int> row = lah_row(n);
            for (unsigned long k = 1; k <= n; ++k) {
                Rat v(row[k - 1]);
                if (n % 2 == 1) v = -v;
                if (sign < 0 && k % 2 == 1) v = -v;
                expected[n + k] = v;
            }
            const bool ok = deriv.coeffs == expected;
            add("derivative_formula",
                {{"n", static_cast<double>(n)}, {"sign", static_cast<double>(sign)}}, ok,
                ok ? "" : "Laurent coefficients differ from the closed form");
        }
    }

    // Rising factorial rewritten in the falling-factorial basis: the
    // connection coefficients are exactly the Lah row, and converting back
    // reproduces the original polynomial.
    for (unsigned long n = 1; n <= cfg.n_max; ++n) {
        const std::vector<Rat> coeffs = rising_in_falling_coefficients(n);
        const std::vector<Int> row = lah_row(n);
        bool ok = coeffs.size() == n;
        std::string note = ok ? "" : "unexpected coefficient layout";
        for (unsigned long k = 1; k <= n && ok; ++k) {
            if (coeffs[k - 1] != Rat(row[k - 1])) {
                ok = false;
                note = "connection coefficient mismatch at k=" + std::to_string(k);
            }
        }
        if (ok && from_falling_basis(coeffs) != rising_factorial(n)) {
            ok = false;
            note = "round trip does not reproduce the rising factorial";
        }
        add("basis_conversion", {{"n", static_cast<double>(n)}}, ok, note);
    }

    // m-fold derivative of sum_k L(n,k) x^k at 0, over m!, recovers L(n,m):
    // the symbolic form of the x -> 0 limit of the row polynomial / x^m.
    for (unsigned long n = 1; n <= cfg.n_max; ++n) {
        bool ok = true;
        std::string note;
        for (unsigned long m = 1; m <= n && ok; ++m) {
            if (lah_from_polynomial_derivative(n, m) != lah(n, m)) {
                ok = false;
                note = "limit mismatch at m=" + std::to_string(m);
            }
        }
        add("polynomial_derivative_limit", {{"n", static_cast<double>(n)}}, ok, note);
    }
}

void run_quadrature_checks(const VerifyConfig& cfg, std::vector<CheckRecord>& records) {
    auto add = [&records](const std::string& id, std::map<std::string, double> params,
                          const std::function<IdentityReport()>& run) {
        try {
            records.push_back(from_report(run()));
        } catch (const quadrature_error& e) {
            CheckRecord r;
            r.id = id;
            r.parameters = std::move(params);
            r.passed = false;
            r.quadrature = e.partial();
            r.note = e.what();
            records.push_back(std::move(r));
        } catch (const tolerance_unreachable_error& e) {
            CheckRecord r;
            r.id = id;
            r.parameters = std::move(params);
            r.passed = false;
            r.note = e.what();
            records.push_back(std::move(r));
        }
    };

    const double tol = cfg.tol;
    for (unsigned long n = 1; n <= cfg.n_max; ++n) {
        for (double x : cfg.grid_x) {
            add("lah_sum_integral", {{"n", static_cast<double>(n)}, {"x", x}},
                [n, x, tol] { return verify_lah_sum_representation(n, x, tol); });
        }
    }
    for (unsigned long n = 1; n <= cfg.n_max; ++n) {
        for (double x : cfg.grid_x) {
            add("derivative_integral", {{"n", static_cast<double>(n)}, {"x", x}},
                [n, x, tol] { return verify_derivative_representation(n, x, tol); });
        }
    }
    for (unsigned long n = 1; n <= cfg.n_max; ++n) {
        add("total_sum_integral", {{"n", static_cast<double>(n)}},
            [n, tol] { return verify_total_sum_integral(n, tol); });
    }
    for (double z : cfg.grid_z) {
        add("exp_reciprocal_integral", {{"z", z}},
            [z, tol] { return verify_exp_representation(z, tol); });
    }
    for (unsigned long k : cfg.grid_k) {
        for (double z : cfg.grid_z) {
            add("exp_remainder_integral", {{"k", static_cast<double>(k)}, {"z", z}},
                [k, z, tol] { return verify_hk_representation(k, z, tol); });
        }
    }
    for (unsigned long k : cfg.grid_k) {
        if (k == 0) continue;
        for (unsigned long m = 0; m <= 3; ++m) {
            for (double x : cfg.grid_x) {
                add("recovery_chain",
                    {{"m", static_cast<double>(m)}, {"k", static_cast<double>(k)}, {"x", x}},
                    [m, k, x, tol] { return verify_recovery_chain(m, k, x, tol); });
            }
        }
    }
    // Calibration rows: integrals with exactly known value, confirming the
    // error estimate brackets the true error in this run's configuration.
    for (unsigned long k = 1; k <= 6; ++k) {
        add("gamma_integral", {{"k", static_cast<double>(k)}},
            [k, tol] { return verify_gamma_integral(k, tol); });
    }
}

int cmd_verify(const VerifyConfig& cfg, Format format,
               const std::optional<std::string>& out_path, std::ostream& out,
               std::ostream& err) {
    if (cfg.n_max == 0) {
        err << "verify: --n-max must be at least 1\n";
        return 1;
    }
    if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
        err << "verify: --tol must be positive and finite\n";
        return 1;
    }
    for (double x : cfg.grid_x) {
        if (!(x > 0.0)) {
            err << "verify: --grid-x values must be positive\n";
            return 1;
        }
    }
    for (double z : cfg.grid_z) {
        if (!(z > 0.0)) {
            err << "verify: --grid-z values must be positive\n";
            return 1;
        }
    }

    std::vector<CheckRecord> records;
    run_exact_checks(cfg, records);
    run_quadrature_checks(cfg, records);

    std::size_t passed = 0;
    for (const CheckRecord& r : records) {
        if (r.passed) ++passed;
    }

    auto writer = [&](std::ostream& dst) {
        switch (format) {
            case Format::text:
                write_records_text(dst, records);
                break;
            case Format::csv:
                write_records_csv(dst, records);
                break;
            case Format::json: {
                nlohmann::json j;
                j["command"] = "verify";
                j["tol"] = cfg.tol;
                j["n_max"] = cfg.n_max;
                j["grid_x"] = cfg.grid_x;
                j["grid_z"] = cfg.grid_z;
                j["grid_k"] = cfg.grid_k;
                j["checks"] = nlohmann::json::array();
                for (const CheckRecord& r : records) j["checks"].push_back(record_to_json(r));
                j["summary"] = {{"total", records.size()},
                                {"passed", passed},
                                {"failed", records.size() - passed}};
                dst << j.dump(2) << '\n';
                break;
            }
        }
    };

    if (out_path) {
        std::ofstream file(*out_path);
        if (!file) {
            err << "verify: cannot open output file " << *out_path << '\n';
            return 1;
        }
        writer(file);
    } else {
        writer(out);
    }
    return passed == records.size() ? 0 : 2;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(unsigned long n_max, Format format, const std::optional<std::string>& out_path,
              std::ostream& out, std::ostream& err) {
    constexpr unsigned long kRowCap = 500;
    if (n_max == 0) {
        err << "table: --n-max must be at least 1\n";
        return 1;
    }
    if (n_max > kRowCap) {
        err << "table: --n-max " << n_max << " exceeds the row cap of " << kRowCap
            << "; refusing to print\n";
        return 1;
    }

    const LahTable table(n_max);
    auto writer = [&](std::ostream& dst) {
        switch (format) {
            case Format::text:
                for (unsigned long n = 1; n <= n_max; ++n) {
                    dst << "n=" << n << ':';
                    for (unsigned long k = 1; k <= n; ++k) dst << ' ' << table.at(n, k).get_str();
                    dst << " | total " << table.row_total(n).get_str() << '\n';
                }
                break;
            case Format::csv:
                dst << "n,k,value\n";
                for (unsigned long n = 1; n <= n_max; ++n) {
                    for (unsigned long k = 1; k <= n; ++k) {
                        dst << n << ',' << k << ',' << table.at(n, k).get_str() << '\n';
                    }
                    dst << n << ",total," << table.row_total(n).get_str() << '\n';
                }
                break;
            case Format::json: {
                nlohmann::json j;
                j["n_max"] = n_max;
                j["rows"] = nlohmann::json::array();
                nlohmann::json totals = nlohmann::json::array();
                for (unsigned long n = 1; n <= n_max; ++n) {
                    nlohmann::json row;
                    row["n"] = n;
                    nlohmann::json values = nlohmann::json::array();
                    for (unsigned long k = 1; k <= n; ++k) values.push_back(table.at(n, k).get_str());
                    row["values"] = values;
                    row["total"] = table.row_total(n).get_str();
                    j["rows"].push_back(row);
                    totals.push_back(table.row_total(n).get_str());
                }
                j["totals"] = totals;
                dst << j.dump(2) << '\n';
                break;
            }
        }
    };

    if (out_path) {
        std::ofstream file(*out_path);
        if (!file) {
            err << "table: cannot open output file " << *out_path << '\n';
            return 1;
        }
        writer(file);
    } else {
        writer(out);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// props

int cmd_props(unsigned long m_max, unsigned long max_total, Format format,
              const std::optional<std::string>& out_path, std::ostream& out,
              std::ostream& err) {
    constexpr unsigned long kCertCap = 64;
    constexpr unsigned long kTotalCap = 200;
    if (m_max == 0 || m_max > kCertCap) {
        err << "props: --m-max must be between 1 and " << kCertCap << '\n';
        return 1;
    }
    if (max_total < 1 || max_total > kTotalCap) {
        err << "props: --max-total must be between 1 and " << kTotalCap << '\n';
        return 1;
    }

    std::vector<Int> totals;
    totals.reserve(max_total);
    for (unsigned long n = 1; n <= max_total; ++n) totals.push_back(lah_total(n));
    const std::vector<ConvexityViolation> violations =
        absolute_convexity_check(totals, max_total);

    std::vector<RootCertificate> certificates;
    certificates.reserve(m_max);
    bool certs_ok = true;
    for (unsigned long m = 1; m <= m_max; ++m) {
        certificates.push_back(root_certificate(m));
        const RootCertificate& c = certificates.back();
        const bool expected = c.root_count_zero == 1 && c.root_count_negative == m - 1 &&
                              c.root_count_positive == 0 && c.distinct && c.all_real;
        certs_ok = certs_ok && expected;
    }
    const bool all_ok = violations.empty() && certs_ok;

    auto cert_ok = [](const RootCertificate& c) {
        return c.root_count_zero == 1 && c.root_count_negative == c.m - 1 &&
               c.root_count_positive == 0 && c.distinct && c.all_real;
    };

    auto writer = [&](std::ostream& dst) {
        switch (format) {
            case Format::text:
                if (violations.empty()) {
                    dst << "absolute convexity of row totals: ok for all differences with n+2k <= "
                        << max_total << '\n';
                } else {
                    for (const ConvexityViolation& v : violations) {
                        dst << "convexity violation: Delta^" << 2 * v.k << " mu_" << v.n << " = "
                            << v.value.get_str() << '\n';
                    }
                }
                for (const RootCertificate& c : certificates) {
                    dst << "m=" << c.m << ": roots at zero=" << c.root_count_zero
                        << " negative=" << c.root_count_negative
                        << " positive=" << c.root_count_positive
                        << " distinct=" << (c.distinct ? "yes" : "no")
                        << " all_real=" << (c.all_real ? "yes" : "no")
                        << (cert_ok(c) ? "" : "  <-- unexpected") << '\n';
                }
                dst << (all_ok ? "all properties hold\n" : "PROPERTY FAILURES FOUND\n");
                break;
            case Format::csv:
                dst << "check,param,passed,detail\n";
                dst << "absolute_convexity," << max_total << ','
                    << (violations.empty() ? "true" : "false") << ',';
                for (std::size_t i = 0; i < violations.size(); ++i) {
                    if (i) dst << ';';
                    dst << "n=" << violations[i].n << ";k=" << violations[i].k;
                }
                dst << '\n';
                for (const RootCertificate& c : certificates) {
                    dst << "root_certificate," << c.m << ',' << (cert_ok(c) ? "true" : "false")
                        << ",zero=" << c.root_count_zero << ";negative=" << c.root_count_negative
                        << ";positive=" << c.root_count_positive
                        << ";distinct=" << (c.distinct ? 1 : 0)
                        << ";all_real=" << (c.all_real ? 1 : 0) << '\n';
                }
                break;
            case Format::json: {
                nlohmann::json j;
                j["convexity"] = {{"max_total", max_total},
                                  {"passed", violations.empty()},
                                  {"violations", nlohmann::json::array()}};
                for (const ConvexityViolation& v : violations) {
                    j["convexity"]["violations"].push_back(
                        {{"n", v.n}, {"k", v.k}, {"value", v.value.get_str()}});
                }
                j["root_certificates"] = nlohmann::json::array();
                for (const RootCertificate& c : certificates) {
                    j["root_certificates"].push_back({{"m", c.m},
                                                      {"root_count_zero", c.root_count_zero},
                                                      {"root_count_negative", c.root_count_negative},
                                                      {"root_count_positive", c.root_count_positive},
                                                      {"distinct", c.distinct},
                                                      {"all_real", c.all_real},
                                                      {"passed", cert_ok(c)}});
                }
                j["passed"] = all_ok;
                dst << j.dump(2) << '\n';
                break;
            }
        }
    };

    if (out_path) {
        std::ofstream file(*out_path);
        if (!file) {
            err << "props: cannot open output file " << *out_path << '\n';
            return 1;
        }
        writer(file);
    } else {
        writer(out);
    }
    return all_ok ? 0 : 2;
}

// ---------------------------------------------------------------------------
// series

int cmd_series(unsigned long k, unsigned long order, bool alternating, Format format,
               const std::optional<std::string>& out_path, std::ostream& out,
               std::ostream& err) {
    constexpr unsigned long kOrderCap = 512;
    if (k == 0) {
        err << "series: --k must be at least 1\n";
        return 1;
    }
    if (order > kOrderCap) {
        err << "series: --order must be at most " << kOrderCap << '\n';
        return 1;
    }
    if (order < k) {
        err << "series: --order must be at least k (the series starts at x^k)\n";
        return 1;
    }
    const TruncatedSeries s =
        alternating ? alternating_generating_series(k, order) : lah_generating_series(k, order);

    auto writer = [&](std::ostream& dst) {
        switch (format) {
            case Format::text:
                dst << (alternating ? "(-1)^k/k! (x/(1+x))^k" : "1/k! (x/(1-x))^k") << " with k="
                    << k << ", truncated at order " << order << '\n';
                for (unsigned long n = 0; n <= order; ++n) {
                    dst << "x^" << n << ": " << s.coeff(n).get_str() << '\n';
                }
                break;
            case Format::csv:
                dst << "n,coefficient\n";
                for (unsigned long n = 0; n <= order; ++n) {
                    dst << n << ',' << s.coeff(n).get_str() << '\n';
                }
                break;
            case Format::json: {
                nlohmann::json j;
                j["k"] = k;
                j["order"] = order;
                j["alternating"] = alternating;
                j["coefficients"] = nlohmann::json::array();
                for (unsigned long n = 0; n <= order; ++n) {
                    j["coefficients"].push_back(s.coeff(n).get_str());
                }
                dst << j.dump(2) << '\n';
                break;
            }
        }
    };

    if (out_path) {
        std::ofstream file(*out_path);
        if (!file) {
            err << "series: cannot open output file " << *out_path << '\n';
            return 1;
        }
        writer(file);
    } else {
        writer(out);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Lah-number computations with numeric cross-checks of their "
                 "integral representations"};
    app.require_subcommand(1);

    auto* table_cmd = app.add_subcommand("table", "Print the L(n,k) triangle with row totals");
    unsigned long table_n_max = 10;
    Format table_format = Format::text;
    std::optional<std::string> table_out;
    table_cmd->add_option("--n-max", table_n_max, "Largest row to print (cap 500)")
        ->capture_default_str();
    table_cmd->add_option("--format", table_format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    table_cmd->add_option("--out", table_out, "Write to FILE instead of stdout");

    auto* verify_cmd =
        app.add_subcommand("verify", "Check the identity catalogue: exact coefficient "
                                     "comparisons plus quadrature-backed integral forms");
    VerifyConfig cfg;
    Format verify_format = Format::text;
    std::optional<std::string> verify_out;
    verify_cmd->add_option("--n-max", cfg.n_max, "Largest row index in the grids")
        ->capture_default_str();
    verify_cmd->add_option("--tol", cfg.tol,
                           "Comparison tolerance (relative when |lhs| >= 1, else absolute)")
        ->capture_default_str();
    verify_cmd->add_option("--grid-x", cfg.grid_x, "Evaluation points x > 0")
        ->expected(-1);
    verify_cmd->add_option("--grid-z", cfg.grid_z, "Evaluation points z > 0")
        ->expected(-1);
    verify_cmd->add_option("--grid-k", cfg.grid_k, "Series/remainder orders k >= 0")
        ->expected(-1);
    verify_cmd->add_option("--format", verify_format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    verify_cmd->add_option("--out", verify_out, "Write to FILE instead of stdout");

    auto* props_cmd = app.add_subcommand(
        "props", "Convexity of the row totals and root certificates of the row polynomials");
    unsigned long props_m_max = 12;
    unsigned long props_max_total = 25;
    Format props_format = Format::text;
    std::optional<std::string> props_out;
    props_cmd->add_option("--m-max", props_m_max, "Certify row polynomials up to this degree")
        ->capture_default_str();
    props_cmd
        ->add_option("--max-total", props_max_total,
                     "Check differences Delta^{2k} mu_n for all n + 2k up to this bound")
        ->capture_default_str();
    props_cmd->add_option("--format", props_format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    props_cmd->add_option("--out", props_out, "Write to FILE instead of stdout");

    auto* series_cmd = app.add_subcommand(
        "series", "Print exact coefficients of 1/k! (x/(1-x))^k (or the alternating form)");
    unsigned long series_k = 1;
    unsigned long series_order = 16;
    bool series_alternating = false;
    Format series_format = Format::text;
    std::optional<std::string> series_out;
    series_cmd->add_option("--k", series_k, "Power k of the kernel")->capture_default_str();
    series_cmd->add_option("--order", series_order, "Truncation order (cap 512)")
        ->capture_default_str();
    series_cmd->add_flag("--alternating", series_alternating,
                         "Use the (-1)^k/k! (x/(1+x))^k variant");
    series_cmd->add_option("--format", series_format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    series_cmd->add_option("--out", series_out, "Write to FILE instead of stdout");

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("lah");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // CLI11's exit() renders help requests and usage errors; fold its
        // nonzero codes onto the documented usage-error code 1.
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (table_cmd->parsed()) {
            return cmd_table(table_n_max, table_format, table_out, out, err);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(cfg, verify_format, verify_out, out, err);
        }
        if (props_cmd->parsed()) {
            return cmd_props(props_m_max, props_max_total, props_format, props_out, out, err);
        }
        if (series_cmd->parsed()) {
            return cmd_series(series_k, series_order, series_alternating, series_format,
                              series_out, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand selected\n";
    return 1;
}

}  // namespace lah
