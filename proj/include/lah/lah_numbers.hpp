#pragma once

#include <vector>

#include "lah/arith.hpp"

namespace lah {

/// Lah number L(n,k) = C(n-1,k-1) * n!/k!: the number of ways to partition
/// an n-set into k nonempty linearly ordered lists.  Zero for k > n.
/// Arguments start at 1; n = 0 or k = 0 raise std::domain_error (the
/// triangle here has no 0 row or column; see lah_polynomial() docs for the
/// one identity where an index shift would otherwise be tempting).
Int lah(unsigned long n, unsigned long k);

/// Row [L(n,1), ..., L(n,n)].  Throws std::domain_error for n = 0.
std::vector<Int> lah_row(unsigned long n);

/// Total sum over row n.  Throws std::domain_error for n = 0.
Int lah_total(unsigned long n);

/// Brute-force count of partitions of {1..n} into exactly k nonempty
/// ordered lists, by walking every placement of each element in turn
/// (new list, or one of the insertion gaps of the lists built so far).
/// Independent of lah(); used as its correctness oracle.
/// Throws oracle_range_error when n exceeds `bound`.
Int lah_enumeration_oracle(unsigned long n, unsigned long k, unsigned long bound = 9);

/// All row counts [count(k=1), ..., count(k=n)] from one enumeration walk.
std::vector<Int> lah_enumeration_counts(unsigned long n, unsigned long bound = 9);

/// Triangular table of L(n,k) for 1 <= k <= n <= n_max.  Immutable after
/// construction; safe to share across threads.
class LahTable {
  public:
    explicit LahTable(unsigned long n_max);

    unsigned long n_max() const { return n_max_; }
    const Int& at(unsigned long n, unsigned long k) const;
    std::vector<Int> row(unsigned long n) const;
    Int row_total(unsigned long n) const;

  private:
    unsigned long n_max_;
    std::vector<Int> entries_;  // row-major triangle
};

/// Associated Lah number L_k(m,n) = (m!/n!) sum_{r=1}^{n} (-1)^{n-r} C(n,r) C(m+rk-1, m),
/// and 0 for n > m.  L_1(m,n) = L(m,n).
Int associated_lah(unsigned long m, unsigned long n, unsigned long k);

/// Polynomial with integer coefficients indexed by power of x.
struct LahPolynomial {
    std::vector<Int> coeffs;  // coeffs[k] multiplies x^k

    unsigned long degree() const;
    const Int& coeff(unsigned long k) const;
    /// Divides by x (requires zero constant term).
    LahPolynomial shifted_down() const;
};

/// P_{m,1}(x) = sum_{n=1}^{m} L(m,n) x^n.  Its shifted_down() form is the
/// degree-(m-1) polynomial with coefficient L(m,k+1) at x^k, i.e. the
/// "script L" polynomial of index m-1.
///
/// The source identity is displayed with a subscripted L_k inside the sum
/// where only the plain Lah number makes the two sides agree; this routine
/// follows the plain-L reading.
LahPolynomial lah_polynomial(unsigned long m);

/// ((m+k)!/k!) * C(m+k-1, k-1), the closed form produced by running the
/// generating-function/integral recovery argument forward.  Equals
/// lah(m+k, k) for every m >= 0, k >= 1.
Int recovered_closed_form(unsigned long m, unsigned long k);

}  // namespace lah
