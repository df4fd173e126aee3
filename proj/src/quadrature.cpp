#include "lah/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

namespace lah {

namespace {

// 7-point Gauss and 15-point Kronrod abscissae/weights on [-1, 1].
// xgk entries at odd index (1, 3, 5) are the Gauss-rule abscissae; index 7
// is the common centre node.
const double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};
const double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
const double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

struct Panel {
    double a;
    double b;
    double value;  // Kronrod estimate of the panel integral
    double error;  // |Kronrod - Gauss|, scaled to the panel width
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(centre);
    double resk = wgk[7] * fc;
    double resg = wg[3] * fc;
    double resabs = wgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double offset = half * xgk[j];
        const double f1 = f(centre - offset);
        const double f2 = f(centre + offset);
        resk += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }
    // On small panels the Kronrod-Gauss difference collapses into correlated
    // rounding noise (often exactly zero) while the panel value itself still
    // carries ~eps relative error; flooring the estimate at 50 eps |f|-mass
    // keeps it a bound on the achievable accuracy instead of an accidental
    // certificate of impossible precision.
    const double rounding_floor =
        50.0 * std::numeric_limits<double>::epsilon() * resabs;
    const double err = std::max(std::abs(resk - resg), rounding_floor);
    return Panel{a, b, resk * half, err * half};
}

// Worst panel first; ties broken by position so refinement order (and hence
// the final answer) is deterministic.
struct WorstFirst {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error) return lhs.error > rhs.error;
        if (lhs.a != rhs.a) return lhs.a < rhs.a;
        return lhs.b < rhs.b;
    }
};

// Accumulate value and disagreement over all panels, summing in interval
// order for reproducibility.
QuadratureResult collect(const std::multiset<Panel, WorstFirst>& panels,
                         double truncation_point, long evaluations) {
    std::vector<const Panel*> ordered;
    ordered.reserve(panels.size());
    for (const Panel& p : panels) ordered.push_back(&p);
    std::sort(ordered.begin(), ordered.end(),
              [](const Panel* lhs, const Panel* rhs) { return lhs->a < rhs->a; });

    QuadratureResult result;
    double compensation = 0.0;  // Kahan carry for the value sum
    for (const Panel* p : ordered) {
        const double y = p->value - compensation;
        const double t = result.value + y;
        compensation = (t - result.value) - y;
        result.value = t;
        result.error_estimate += p->error;
    }
    result.truncation_point = truncation_point;
    result.evaluations = evaluations;
    return result;
}

}  // namespace

double gamma_tail_upper(unsigned long p, double c, double T) {
    if (!(c > 0.0) || T < 0.0) throw std::domain_error("gamma_tail_upper: need c > 0 and T >= 0");
    const double ct = c * T;
    double term = 1.0;
    double sum = 1.0;  // sum_{j=0}^{p} (cT)^j / j!
    for (unsigned long j = 1; j <= p; ++j) {
        term *= ct / static_cast<double>(j);
        sum += term;
    }
    double factor = std::exp(-ct) / c;  // becomes p! e^{-cT} / c^{p+1}
    for (unsigned long j = 1; j <= p; ++j) factor *= static_cast<double>(j) / c;
    if (factor == 0.0) return 0.0;  // tail underflows; avoid 0 * inf if sum overflowed
    return factor * sum;
}

std::function<double(double)> exp_sqrt_tail_bound(unsigned long p, double c, double A) {
    if (!(c > 0.0)) throw std::domain_error("exp_sqrt_tail_bound: need c > 0");
    return [p, c, A](double T) {
        // Majorisation 2 sqrt(t) <= (2/sqrt(T)) t needs t >= T >= 1, and the
        // damped rate c' = c - 2/sqrt(T) must keep at least half of c (the
        // threshold c sqrt(T) >= 4 + 1 includes a unit safety margin).
        if (T < 1.0 || c * std::sqrt(T) < 5.0) {
            return std::numeric_limits<double>::infinity();
        }
        const double damped = c - 2.0 / std::sqrt(T);
        return A * gamma_tail_upper(p, damped, T);
    };
}

std::function<double(double)> gamma_tail_bound(unsigned long p, double c, double A) {
    if (!(c > 0.0)) throw std::domain_error("gamma_tail_bound: need c > 0");
    return [p, c, A](double T) { return A * gamma_tail_upper(p, c, T); };
}

double select_truncation_point(const std::function<double(double)>& tail_bound,
                               double half_tol,
                               const QuadratureOptions& options) {
    if (!(half_tol > 0.0)) throw std::domain_error("select_truncation_point: tolerance must be positive");
    double T = std::max(1.0, options.initial_truncation);
    // !(bound <= half_tol) rather than (bound > half_tol): a NaN bound must
    // also grow T instead of being accepted.
    while (!(tail_bound(T) <= half_tol)) {
        T *= 2.0;
        if (T > options.max_truncation) {
            throw quadrature_error(
                "semi-infinite tail bound does not reach the requested tolerance "
                "before the truncation limit",
                QuadratureResult{});
        }
    }
    return T;
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const std::function<double(double)>& tail_bound,
                                         double tol,
                                         const QuadratureOptions& options) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::domain_error("integrate_semi_infinite: tolerance must be positive and finite");
    }

    const double half_tol = 0.5 * tol;
    const double T = select_truncation_point(tail_bound, half_tol, options);
    const double tail = tail_bound(T);

    // Dyadic initial partition 0, 1, 2, 4, ..., T: integrands here decay
    // exponentially, so panel widths should grow with t.
    std::vector<double> cuts{0.0};
    for (double b = 1.0; b < T; b *= 2.0) cuts.push_back(b);
    cuts.push_back(T);

    long evaluations = 0;
    std::multiset<Panel, WorstFirst> panels;
    double panel_error = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p = evaluate_panel(f, cuts[i], cuts[i + 1]);
        evaluations += 15;
        panel_error += p.error;
        panels.insert(p);
    }

    long steps = 0;
    while (panel_error > half_tol) {
        const Panel worst = *panels.begin();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            QuadratureResult partial = collect(panels, T, evaluations);
            partial.error_estimate += tail;
            throw quadrature_error(
                "tolerance unreachable: panel at the refinement front cannot be "
                "subdivided further in double precision",
                partial);
        }
        if (evaluations + 30 > options.max_evaluations) {
            QuadratureResult partial = collect(panels, T, evaluations);
            partial.error_estimate += tail;
            throw quadrature_error(
                "tolerance unreachable: evaluation budget exhausted before the "
                "panel disagreement dropped below tol/2",
                partial);
        }
        panels.erase(panels.begin());
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        evaluations += 30;
        panel_error += left.error + right.error - worst.error;
        panels.insert(left);
        panels.insert(right);

        // The incremental error total drifts under cancellation; re-sum
        // periodically and always before trusting a success.
        if (++steps % 256 == 0 || panel_error <= half_tol) {
            panel_error = 0.0;
            for (const Panel& p : panels) panel_error += p.error;
        }
    }

    QuadratureResult result = collect(panels, T, evaluations);
    result.error_estimate += tail;
    return result;
}

}  // namespace lah
