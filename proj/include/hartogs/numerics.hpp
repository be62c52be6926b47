#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hartogs/errors.hpp"

namespace hartogs {

using Complex = std::complex<double>;

/// Positive rational number, kept in lowest terms.
///
/// Exact rational arithmetic matters here: floor/frac of parameters like
/// (n+1)*b/a select between kernel branches, and floating-point frac() picks
/// the wrong branch arbitrarily close to integers.
class Rational {
  public:
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator*(std::int64_t m) const { return Rational(num_ * m, den_); }
    friend bool operator==(const Rational& a, const Rational& b) = default;

    /// Parses "a/b" or a plain integer "a".
    static Rational parse(const std::string& text);

  private:
    std::int64_t num_;
    std::int64_t den_;
};

/// Multi-index n in Z_+^N; indexes the fiber monomial w^n.
class MultiIndex {
  public:
    explicit MultiIndex(std::vector<int> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& entries() const { return entries_; }
    int total_degree() const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;

  private:
    std::vector<int> entries_;
};

/// log Gamma(x) for x > 0, fixed-coefficient Lanczos approximation evaluated
/// in log space; arguments below 0.5 are shifted up with the exact recursion
/// lgamma(x) = lgamma(x+1) - log(x).
double ln_gamma(double x);

/// Principal-branch complex power s^e, Arg in (-pi, pi]. Integer exponents
/// take the exact repeated-multiplication path and never touch the branch cut.
Complex principal_pow(Complex s, double e);

/// s^k for integer k (k may be negative), by binary exponentiation.
Complex int_pow(Complex s, long long k);

/// All n in Z_+^N with |n| <= max_degree, graded order (ascending total
/// degree), graded-lexicographic within each degree.
std::vector<MultiIndex> enumerate_multi_indices(int N, int max_degree);

/// Calls fn(entries) for every composition of `degree` into `N` nonnegative
/// parts, in the lexicographically descending order enumerate_multi_indices
/// uses within a degree: (d,0,..,0), (d-1,1,0,..), ..., (0,..,0,d).
template <typename Fn>
void for_each_composition(int N, int degree, Fn&& fn) {
    std::vector<int> c(static_cast<std::size_t>(N), 0);
    c[0] = degree;
    for (;;) {
        fn(static_cast<const std::vector<int>&>(c));
        int i = N - 2;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == 0) --i;
        if (i < 0) return;
        int rest = 0;
        for (int j = i + 1; j < N; ++j) {
            rest += c[static_cast<std::size_t>(j)];
            c[static_cast<std::size_t>(j)] = 0;
        }
        c[static_cast<std::size_t>(i)] -= 1;
        c[static_cast<std::size_t>(i + 1)] = rest + 1;
    }
}

} // namespace hartogs
