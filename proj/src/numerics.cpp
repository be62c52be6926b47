#include "hartogs/numerics.hpp"

#include <cmath>
#include <numeric>

namespace hartogs {

namespace {

std::int64_t checked_gcd(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set). Relative error
// of the reconstructed Gamma is a few ulp over the whole positive axis.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

double ln_gamma_lanczos(double x) {
    double sum = kLanczos[0];
    for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (x - 1.0 + k);
    const double t = x + kLanczosG - 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (x - 0.5) * std::log(t) - t + std::log(sum);
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (num_ <= 0 || den_ <= 0) throw DomainError("Rational: numerator and denominator must be positive");
    const std::int64_t g = checked_gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text), 1);
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw DomainError("Rational: cannot parse '" + text + "'");
    }
}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("MultiIndex: length must be >= 1");
    for (int e : entries_)
        if (e < 0) throw DomainError("MultiIndex: entries must be nonnegative");
}

int MultiIndex::total_degree() const {
    int d = 0;
    for (int e : entries_) d += e;
    return d;
}

double ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("ln_gamma: requires finite x > 0");
    if (x < 0.5) return ln_gamma_lanczos(x + 1.0) - std::log(x);
    return ln_gamma_lanczos(x);
}

Complex int_pow(Complex s, long long k) {
    if (k < 0) {
        if (s == Complex(0.0, 0.0)) throw SingularityError("int_pow: 0 raised to a negative power");
        return 1.0 / int_pow(s, -k);
    }
    Complex acc(1.0, 0.0);
    Complex base = s;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Complex principal_pow(Complex s, double e) {
    if (s == Complex(0.0, 0.0)) {
        if (e <= 0.0) throw SingularityError("principal_pow: 0 raised to a nonpositive power");
        return {0.0, 0.0};
    }
    if (e == std::floor(e) && std::abs(e) <= 1024.0) return int_pow(s, static_cast<long long>(e));
    const double log_abs = std::log(std::abs(s));
    const double arg = std::arg(s); // (-pi, pi]
    return std::polar(std::exp(e * log_abs), e * arg);
}

std::vector<MultiIndex> enumerate_multi_indices(int N, int max_degree) {
    if (N < 1) throw DomainError("enumerate_multi_indices: N must be >= 1");
    if (max_degree < 0) throw DomainError("enumerate_multi_indices: max_degree must be >= 0");
    std::vector<MultiIndex> out;
    for (int d = 0; d <= max_degree; ++d)
        for_each_composition(N, d, [&](const std::vector<int>& c) { out.emplace_back(c); });
    return out;
}

} // namespace hartogs
