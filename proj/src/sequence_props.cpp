#include "lah/sequence_props.hpp"

#include <stdexcept>
#include <utility>

#include "lah/lah_numbers.hpp"

namespace lah {

DifferenceTable::DifferenceTable(std::vector<Int> base) {
    if (base.empty()) throw std::domain_error("DifferenceTable: sequence must be non-empty");
    rows_.push_back(std::move(base));
    while (rows_.back().size() > 1) {
        const std::vector<Int>& prev = rows_.back();
        std::vector<Int> next;
        next.reserve(prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
        rows_.push_back(std::move(next));
    }
}

const Int& DifferenceTable::diff(unsigned long k, unsigned long n) const {
    if (n == 0 || k >= rows_.size() || n > rows_[k].size()) {
        throw std::out_of_range("DifferenceTable::diff: need n >= 1 and n + k <= size()");
    }
    return rows_[k][n - 1];
}

Int finite_difference(const std::vector<Int>& seq, unsigned long k, unsigned long n) {
    if (n == 0 || n + k > seq.size()) {
        throw std::domain_error("finite_difference: need n >= 1 and n + k <= sequence length");
    }
    Int sum = 0;
    for (unsigned long j = 0; j <= k; ++j) {
        const Int term = binomial(k, j) * seq[n - 1 + j];
        if ((k - j) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

std::vector<ConvexityViolation> absolute_convexity_check(const std::vector<Int>& seq,
                                                         unsigned long max_total) {
    std::vector<ConvexityViolation> violations;
    if (seq.empty()) return violations;
    const DifferenceTable table(seq);
    const unsigned long limit = std::min<unsigned long>(max_total, seq.size());
    for (unsigned long k = 0; 2 * k + 1 <= limit; ++k) {
        for (unsigned long n = 1; n + 2 * k <= limit; ++n) {
            const Int& value = table.diff(2 * k, n);
            if (value < 0) violations.push_back(ConvexityViolation{n, k, value});
        }
    }
    return violations;
}

bool convexity_check(const std::vector<Int>& seq, unsigned long window) {
    if (window > seq.size()) {
        throw std::domain_error("convexity_check: window exceeds sequence length");
    }
    for (unsigned long n = 1; n + 2 <= window; ++n) {
        if (finite_difference(seq, 2, n) < 0) return false;
    }
    return true;
}

namespace {

// Positive rational scaling to coprime integer coefficients.  Positive
// scalings leave every sign evaluation of the Sturm chain unchanged while
// keeping coefficient growth in check.
ExactPolynomial primitive_part(const ExactPolynomial& p) {
    if (p.is_zero()) return p;
    Int common_den = 1;
    for (const Rat& c : p.coeffs()) common_den = lcm(common_den, c.get_den());
    Int common_num = 0;
    for (const Rat& c : p.coeffs()) {
        common_num = gcd(common_num, c.get_num() * (common_den / c.get_den()));
    }
    return p * make_rat(common_den, common_num);
}

std::vector<ExactPolynomial> sturm_chain(const ExactPolynomial& p) {
    std::vector<ExactPolynomial> chain;
    chain.push_back(primitive_part(p));
    ExactPolynomial deriv = primitive_part(p.derivative());
    if (deriv.is_zero()) return chain;
    chain.push_back(std::move(deriv));
    while (true) {
        const ExactPolynomial& a = chain[chain.size() - 2];
        const ExactPolynomial& b = chain.back();
        ExactPolynomial rem = divide(a, b).remainder;
        if (rem.is_zero()) break;
        chain.push_back(primitive_part(-rem));
    }
    return chain;
}

int sign_at(const ExactPolynomial& p, const Rat& x) { return sgn(p.evaluate(x)); }

// Sign of p at +inf (direction = +1) or -inf (direction = -1).
int sign_at_infinity(const ExactPolynomial& p, int direction) {
    if (p.is_zero()) return 0;
    int s = sgn(p.leading_coeff());
    if (direction < 0 && p.degree() % 2 == 1) s = -s;
    return s;
}

template <typename SignFn>
unsigned long sign_variations(const std::vector<ExactPolynomial>& chain, SignFn sign_of) {
    unsigned long variations = 0;
    int last = 0;
    for (const ExactPolynomial& p : chain) {
        const int s = sign_of(p);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

}  // namespace

RealRootCounts count_real_roots(const ExactPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
    if (p.coeff(0) == 0) throw std::domain_error("count_real_roots: p(0) must be non-zero");
    const std::vector<ExactPolynomial> chain = sturm_chain(p);
    const Rat zero(0);
    const unsigned long at_neg_inf =
        sign_variations(chain, [](const ExactPolynomial& q) { return sign_at_infinity(q, -1); });
    const unsigned long at_zero =
        sign_variations(chain, [&zero](const ExactPolynomial& q) { return sign_at(q, zero); });
    const unsigned long at_pos_inf =
        sign_variations(chain, [](const ExactPolynomial& q) { return sign_at_infinity(q, +1); });
    RealRootCounts counts;
    counts.negative = at_neg_inf - at_zero;
    counts.positive = at_zero - at_pos_inf;
    return counts;
}

RootCertificate root_certificate(unsigned long m) {
    if (m == 0) throw std::domain_error("root_certificate: need m >= 1");
    const std::vector<Int> row = lah_row(m);
    std::vector<Rat> coeffs(m + 1, Rat(0));
    for (unsigned long k = 1; k <= m; ++k) coeffs[k] = Rat(row[k - 1]);
    const ExactPolynomial poly(coeffs);

    RootCertificate cert;
    cert.m = m;
    cert.distinct = poly_gcd(poly, poly.derivative()).degree() == 0;

    // Strip the power of x (the row polynomial has no constant term), then
    // count the remaining roots on each side of the origin.
    std::vector<Rat> reduced(coeffs.begin() + 1, coeffs.end());
    const ExactPolynomial quotient(reduced);
    cert.root_count_zero = 1;
    if (quotient.degree() > 0) {
        const RealRootCounts counts = count_real_roots(quotient);
        cert.root_count_negative = counts.negative;
        cert.root_count_positive = counts.positive;
    }
    cert.all_real = cert.distinct &&
                    cert.root_count_zero + cert.root_count_negative + cert.root_count_positive ==
                        poly.degree();
    return cert;
}

}  // namespace lah
