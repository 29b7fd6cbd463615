#include "qgaps/series.hpp"

#include "qgaps/figurate.hpp"

#include <sstream>
#include <stdexcept>

namespace qgaps {

namespace {

void require_same_order(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series: mismatched truncation orders");
}

} // namespace

FormalPowerSeries::FormalPowerSeries(long order) {
    if (order < 0)
        throw std::invalid_argument("series: order must be non-negative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

FormalPowerSeries::FormalPowerSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("series: coefficient list must be non-empty");
}

FormalPowerSeries FormalPowerSeries::one(long order) {
    FormalPowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

FormalPowerSeries FormalPowerSeries::truncated(long m) const {
    if (m < 0 || m > order())
        throw std::invalid_argument("series: truncation beyond stored order");
    return FormalPowerSeries(
        std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + m + 1));
}

FormalPowerSeries operator+(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    require_same_order(a, b);
    FormalPowerSeries out(a.order());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
}

FormalPowerSeries operator-(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    require_same_order(a, b);
    FormalPowerSeries out(a.order());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
}

FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    require_same_order(a, b);
    const std::size_t len = a.coeffs_.size();
    FormalPowerSeries out(a.order());
    for (std::size_t i = 0; i < len; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j + i < len; ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

FormalPowerSeries FormalPowerSeries::inverse() const {
    const mpz_class& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("series: inverse requires constant term 1 or -1");
    const std::size_t len = coeffs_.size();
    FormalPowerSeries out(order());
    out.coeffs_[0] = c0; // c0 is its own inverse
    mpz_class acc;
    for (std::size_t n = 1; n < len; ++n) {
        acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            acc += coeffs_[k] * out.coeffs_[n - k];
        out.coeffs_[n] = -c0 * acc;
    }
    return out;
}

FormalPowerSeries& FormalPowerSeries::mul_binomial(long e, int sign) {
    if (e < 1)
        throw std::invalid_argument("series: binomial exponent must be >= 1");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("series: binomial sign must be +1 or -1");
    const long n = order();
    for (long i = n; i >= e; --i) {
        if (sign > 0)
            coeffs_[i] += coeffs_[i - e];
        else
            coeffs_[i] -= coeffs_[i - e];
    }
    return *this;
}

std::string FormalPowerSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0)
                os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (!unit)
                os << mag.get_str() << '*';
            os << 'q';
            if (i > 1)
                os << '^' << i;
        }
    }
    if (first)
        os << '0';
    return os.str();
}

std::string FormalPowerSeries::to_json() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            os << ',';
        os << '"' << coeffs_[i].get_str() << '"';
    }
    os << ']';
    return os.str();
}

FormalPowerSeries euler_product(long a, long b, long order) {
    if (a < 1)
        throw std::invalid_argument("euler_product: a must be >= 1");
    if (b < 1)
        throw std::invalid_argument("euler_product: b must be >= 1");
    FormalPowerSeries s = FormalPowerSeries::one(order);
    for (long e = a; e <= order; e += b)
        s.mul_binomial(e, -1);
    return s;
}

FormalPowerSeries multi_product(std::span<const std::pair<long, long>> specs, long order) {
    FormalPowerSeries s = FormalPowerSeries::one(order);
    for (const auto& [a, b] : specs) {
        if (a < 1)
            throw std::invalid_argument("multi_product: a must be >= 1");
        if (b < 1)
            throw std::invalid_argument("multi_product: b must be >= 1");
        for (long e = a; e <= order; e += b)
            s.mul_binomial(e, -1);
    }
    return s;
}

FormalPowerSeries theta_triangular(int sign, long order) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("theta_triangular: sign must be +1 or -1");
    FormalPowerSeries s(order);
    for (long k = 0;; ++k) {
        long t = triangular(k);
        if (t > order)
            break;
        s.coeff(t) = (sign < 0 && t % 2 != 0) ? -1 : 1;
    }
    return s;
}

FormalPowerSeries theta_square(long order) {
    FormalPowerSeries s(order);
    s.coeff(0) = 1;
    for (long k = 1; k * k <= order; ++k)
        s.coeff(k * k) = (k % 2 != 0) ? -2 : 2;
    return s;
}

FormalPowerSeries gap_sum_series(int r, long order) {
    if (r < 1)
        throw std::invalid_argument("gap_sum_series: r must be >= 1");
    FormalPowerSeries num = euler_product(2L * r, 2L * r, order);
    FormalPowerSeries den = euler_product(1, 1, order);
    den = den * euler_product(r, 2L * r, order);
    return num * den.inverse();
}

FormalPowerSeries mod4r_avoiding_series(int r, long order) {
    if (r < 1)
        throw std::invalid_argument("mod4r_avoiding_series: r must be >= 1");
    const std::pair<long, long> specs[] = {
        {1L * r, 4L * r}, {3L * r, 4L * r}, {4L * r, 4L * r}};
    FormalPowerSeries num = multi_product(specs, order);
    return num * euler_product(1, 1, order).inverse();
}

} // namespace qgaps
