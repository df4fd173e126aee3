#include "lah/lah_numbers.hpp"

#include <stdexcept>

namespace lah {

Int lah(unsigned long n, unsigned long k) {
    if (n == 0 || k == 0)
        throw std::domain_error("lah: arguments must satisfy n >= 1, k >= 1");
    if (k > n) return 0;
    // C(n-1,k-1) * n!/k!, the quotient taken as the exact product (k+1)*...*n.
    Int r = binomial(n - 1, k - 1);
    for (unsigned long j = k + 1; j <= n; ++j) r *= j;
    return r;
}

std::vector<Int> lah_row(unsigned long n) {
    if (n == 0) throw std::domain_error("lah_row: n >= 1 required");
    std::vector<Int> row;
    row.reserve(n);
    for (unsigned long k = 1; k <= n; ++k) row.push_back(lah(n, k));
    return row;
}

Int lah_total(unsigned long n) {
    if (n == 0) throw std::domain_error("lah_total: n >= 1 required");
    Int total = 0;
    for (const Int& v : lah_row(n)) total += v;
    return total;
}

namespace {

// Walks every placement sequence: element i goes into a fresh list or into
// one of the placed+lists insertion gaps of the existing lists.  Each leaf
// of this recursion is one distinct partition into ordered lists.
void enumerate_placements(unsigned long placed, unsigned long lists,
                          unsigned long n, std::vector<Int>& counts) {
    if (placed == n) {
        counts[lists] += 1;
        return;
    }
    // start a new list
    enumerate_placements(placed + 1, lists + 1, n, counts);
    // insert into one of the gaps of existing lists (a list holding m
    // elements has m+1 gaps, so there are placed+lists gaps in total)
    for (unsigned long gap = 0; gap < placed + lists; ++gap)
        enumerate_placements(placed + 1, lists, n, counts);
}

}  // namespace

std::vector<Int> lah_enumeration_counts(unsigned long n, unsigned long bound) {
    if (n == 0) throw std::domain_error("lah_enumeration_counts: n >= 1 required");
    if (n > bound)
        throw oracle_range_error("lah_enumeration_oracle: n exceeds oracle range bound " +
                                 std::to_string(bound));
    std::vector<Int> counts(n + 1, Int(0));
    enumerate_placements(0, 0, n, counts);
    return std::vector<Int>(counts.begin() + 1, counts.end());
}

Int lah_enumeration_oracle(unsigned long n, unsigned long k, unsigned long bound) {
    if (n == 0 || k == 0)
        throw std::domain_error("lah_enumeration_oracle: arguments must satisfy n >= 1, k >= 1");
    std::vector<Int> counts = lah_enumeration_counts(n, bound);
    if (k > n) return 0;
    return counts[k - 1];
}

LahTable::LahTable(unsigned long n_max) : n_max_(n_max) {
    if (n_max == 0) throw std::domain_error("LahTable: n_max >= 1 required");
    entries_.reserve(n_max * (n_max + 1) / 2);
    for (unsigned long n = 1; n <= n_max; ++n)
        for (unsigned long k = 1; k <= n; ++k) entries_.push_back(lah(n, k));
}

const Int& LahTable::at(unsigned long n, unsigned long k) const {
    if (n < 1 || n > n_max_ || k < 1 || k > n)
        throw std::domain_error("LahTable::at: (n,k) outside triangle");
    return entries_[n * (n - 1) / 2 + (k - 1)];
}

std::vector<Int> LahTable::row(unsigned long n) const {
    std::vector<Int> r;
    r.reserve(n);
    for (unsigned long k = 1; k <= n; ++k) r.push_back(at(n, k));
    return r;
}

Int LahTable::row_total(unsigned long n) const {
    Int total = 0;
    for (unsigned long k = 1; k <= n; ++k) total += at(n, k);
    return total;
}

Int associated_lah(unsigned long m, unsigned long n, unsigned long k) {
    if (m == 0 || n == 0 || k == 0)
        throw std::domain_error("associated_lah: arguments must satisfy m, n, k >= 1");
    if (n > m) return 0;
    Int sum = 0;
    for (unsigned long r = 1; r <= n; ++r) {
        Int term = binomial(n, r) * binomial(Int(m) + Int(r) * Int(k) - 1, m);
        if ((n - r) % 2 == 1) term = -term;
        sum += term;
    }
    // m!/n! = (n+1)*...*m, an exact integer since n <= m
    Int prefactor = 1;
    for (unsigned long j = n + 1; j <= m; ++j) prefactor *= j;
    return prefactor * sum;
}

unsigned long LahPolynomial::degree() const {
    return coeffs.empty() ? 0 : coeffs.size() - 1;
}

const Int& LahPolynomial::coeff(unsigned long k) const {
    static const Int zero(0);
    return k < coeffs.size() ? coeffs[k] : zero;
}

LahPolynomial LahPolynomial::shifted_down() const {
    if (coeffs.empty() || coeffs[0] != 0)
        throw std::domain_error("LahPolynomial::shifted_down: constant term must be zero");
    return LahPolynomial{std::vector<Int>(coeffs.begin() + 1, coeffs.end())};
}

LahPolynomial lah_polynomial(unsigned long m) {
    if (m == 0) throw std::domain_error("lah_polynomial: m >= 1 required");
    LahPolynomial p;
    p.coeffs.assign(m + 1, Int(0));
    for (unsigned long n = 1; n <= m; ++n) p.coeffs[n] = lah(m, n);
    return p;
}

Int recovered_closed_form(unsigned long m, unsigned long k) {
    if (k == 0) throw std::domain_error("recovered_closed_form: k >= 1 required");
    // (m+k)!/k! = (k+1)*...*(m+k)
    Int r = binomial(m + k - 1, k - 1);
    for (unsigned long j = k + 1; j <= m + k; ++j) r *= j;
    return r;
}

}  // namespace lah
