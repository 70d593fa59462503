#include "casimir_rect/roots.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "casimir_rect/errors.hpp"

namespace casimir_rect {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 200;

// sin(p)/p - 1 for |p| < 0.5
double sinc_minus_one(double p)
{
    const double p2 = p * p;
    double term = -p2 / 6.0;
    double sum = term;
    for (int k = 2; k < 12; ++k) {
        term *= -p2 / ((2.0 * k) * (2.0 * k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// sinh(y)/y - 1 for |y| < 0.5
double sinhc_minus_one(double y)
{
    const double y2 = y * y;
    double term = y2 / 6.0;
    double sum = term;
    for (int k = 2; k < 12; ++k) {
        term *= y2 / ((2.0 * k) * (2.0 * k + 1.0));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

// y cosh y - sinh y = sum_k 2k y^(2k+1) / (2k+1)!, all terms positive
double ycosh_minus_sinh(double y)
{
    const double y2 = y * y;
    double power = y * y2 / 6.0;  // y^3 / 3!
    double sum = 2.0 * power;
    for (int k = 2; k < 14; ++k) {
        power *= y2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double term = 2.0 * k * power;
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

double char_poly_real(double phi, double x)
{
    if (phi < 0.5) {
        const double half = std::sin(0.5 * phi);
        return (1.0 + x) - 2.0 * half * half + x * sinc_minus_one(phi);
    }
    return std::cos(phi) + x * std::sin(phi) / phi;
}

// y coth y + x, whose root on (0, -x) is the imaginary zero for x < -1
double imaginary_dispersion(double y, double x)
{
    if (y < 0.5) return (1.0 + x) + ycosh_minus_sinh(y) / std::sinh(y);
    return (y + x) + 2.0 * y / std::expm1(2.0 * y);
}

double imaginary_dispersion_derivative(double y)
{
    // d/dy (y coth y) = coth y - y / sinh^2 y
    if (y < 1e-4) return 2.0 * y / 3.0;
    const double s = std::sinh(y);
    if (!std::isfinite(s)) return 1.0;
    return 1.0 / std::tanh(y) - y / (s * s);
}

struct Bracket {
    double lo;
    double hi;
};

// Newton steps kept inside a shrinking sign-change bracket; falls back to
// bisection whenever a step leaves the bracket or stalls.
template <typename F, typename DF>
double safeguarded_newton(F&& f, DF&& df, Bracket b, const char* what, int mu, double x)
{
    double f_lo = f(b.lo);
    double f_hi = f(b.hi);
    if (f_lo == 0.0) return b.lo;
    if (f_hi == 0.0) return b.hi;
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        std::ostringstream msg;
        msg << what << ": no sign change on [" << b.lo << ", " << b.hi << "] for mu=" << mu
            << ", x=" << x;
        throw NumericalError(msg.str());
    }
    double root = 0.5 * (b.lo + b.hi);
    double last_step = b.hi - b.lo;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        const double value = f(root);
        if (value == 0.0) return root;
        if ((value > 0.0) == (f_lo > 0.0)) {
            b.lo = root;
            f_lo = value;
        } else {
            b.hi = root;
        }
        const double slope = df(root);
        double next = root - value / slope;
        const bool newton_ok = std::isfinite(next) && next > b.lo && next < b.hi &&
                               std::abs(next - root) < 0.5 * last_step;
        if (!newton_ok) next = 0.5 * (b.lo + b.hi);
        last_step = std::abs(next - root);
        root = next;
        const double scale = std::max(std::abs(root), std::numeric_limits<double>::min());
        if (last_step <= 2.0 * kEps * scale || (b.hi - b.lo) <= 2.0 * kEps * scale) return root;
    }
    std::ostringstream msg;
    msg << what << ": no convergence after " << kMaxIter << " iterations for mu=" << mu
        << ", x=" << x << ", bracket [" << b.lo << ", " << b.hi << "]";
    throw NumericalError(msg.str());
}

}  // namespace

ScalingPoint::ScalingPoint(double x, double rho) : x_(x), rho_(rho)
{
    if (!std::isfinite(x)) throw DomainError("ScalingPoint: x must be finite");
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("ScalingPoint: rho must be positive and finite");
}

double ScalingPoint::x_volume() const { return x_ * std::sqrt(rho_); }

double ScalingPoint::x_perp() const { return x_ * rho_; }

double ZeroRecord::phi_abs() const { return std::sqrt(std::abs(phi_sq)); }

double eval_char_poly(double phi_sq, double x)
{
    if (phi_sq > 0.0) return char_poly_real(std::sqrt(phi_sq), x);
    if (phi_sq == 0.0) return 1.0 + x;
    const double y = std::sqrt(-phi_sq);
    if (y < 0.5) {
        const double half = std::sinh(0.5 * y);
        return (1.0 + x) + 2.0 * half * half + x * sinhc_minus_one(y);
    }
    return std::cosh(y) + x * std::sinh(y) / y;
}

double char_poly_derivative(double phi, double x)
{
    if (phi < 1e-4) return -phi * (1.0 + x / 3.0);
    return -std::sin(phi) + x * (phi * std::cos(phi) - std::sin(phi)) / (phi * phi);
}

ZeroRecord find_zero(int mu, double x, double tol)
{
    if (mu < 1) throw DomainError("find_zero: mu must be >= 1");
    if (!(tol > 0.0)) throw DomainError("find_zero: tol must be positive");
    if (!std::isfinite(x)) throw DomainError("find_zero: x must be finite");

    ZeroRecord z;
    z.mu = mu;
    z.sigma = parity(mu);

    if (x == 0.0) {
        const double phi = (mu - 0.5) * kPi;
        z.phi_sq = phi * phi;
        z.gamma = phi;
        return z;
    }
    if (mu == 1 && x == -1.0) {
        z.phi_sq = 0.0;
        z.gamma = 1.0;
        return z;
    }
    if (mu == 1 && x < -1.0) {
        const double y = safeguarded_newton([x](double v) { return imaginary_dispersion(v, x); },
                                            [](double v) { return imaginary_dispersion_derivative(v); },
                                            Bracket{0.0, -x}, "find_zero(imaginary)", mu, x);
        const double gap = 2.0 * y / std::expm1(2.0 * y);  // |x| - y
        z.phi_sq = -y * y;
        z.gamma = std::sqrt(gap * (-x + y));
        const double residual = std::abs(imaginary_dispersion(y, x));
        if (residual > std::max(tol, 64.0 * kEps * (-x))) {
            std::ostringstream msg;
            msg << "find_zero: residual " << residual << " above tolerance for mu=1, x=" << x;
            throw NumericalError(msg.str());
        }
        return z;
    }

    Bracket bracket{};
    if (x > 0.0) {
        bracket = {(mu - 0.5) * kPi, mu * kPi};
    } else {
        bracket = {(mu - 1) * kPi, (mu - 0.5) * kPi};
    }
    const double phi = safeguarded_newton([x](double p) { return char_poly_real(p, x); },
                                          [x](double p) { return char_poly_derivative(p, x); }, bracket,
                                          "find_zero", mu, x);
    const double residual = std::abs(char_poly_real(phi, x));
    // |P| cannot go below about ulp(phi) * |P'|
    if (residual > std::max(tol, 16.0 * kEps * (1.0 + phi) * (1.0 + std::abs(x) / std::max(phi, 1.0)))) {
        std::ostringstream msg;
        msg << "find_zero: residual " << residual << " above tolerance for mu=" << mu << ", x=" << x
            << ", bracket [" << bracket.lo << ", " << bracket.hi << "]";
        throw NumericalError(msg.str());
    }
    z.phi_sq = phi * phi;
    z.gamma = std::hypot(x, phi);
    return z;
}

std::vector<ZeroRecord> find_zeros(int count, double x, double tol)
{
    if (count < 1) throw DomainError("find_zeros: count must be >= 1");
    std::vector<ZeroRecord> zeros;
    zeros.reserve(static_cast<std::size_t>(count));
    for (int mu = 1; mu <= count; ++mu) zeros.push_back(find_zero(mu, x, tol));
    return zeros;
}

namespace {

using Series = std::vector<double>;  // coefficients of w^0 .. w^K

Series series_mul(const Series& a, const Series& b)
{
    const std::size_t n = a.size();
    Series c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// 1 / c for c[0] = 1
Series series_reciprocal(const Series& c)
{
    const std::size_t n = c.size();
    Series r(n, 0.0);
    r[0] = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) acc += c[j] * r[k - j];
        r[k] = -acc;
    }
    return r;
}

// arctan(u) for u[0] = 0
Series series_arctan(const Series& u)
{
    const std::size_t n = u.size();
    Series out = u;
    const Series u2 = series_mul(u, u);
    Series power = u;
    for (std::size_t j = 1; 2 * j + 1 < n; ++j) {
        power = series_mul(power, u2);
        const double sign = (j % 2 == 1) ? -1.0 : 1.0;
        for (std::size_t k = 0; k < n; ++k) out[k] += sign * power[k] / (2.0 * j + 1.0);
    }
    return out;
}

}  // namespace

double zero_series_approx(int mu, double x, int order)
{
    if (mu < 1) throw DomainError("zero_series_approx: mu must be >= 1");
    if (order < 1) throw DomainError("zero_series_approx: order must be >= 1");
    const double phi0 = (mu - 0.5) * kPi;
    const std::size_t degree = 2 * static_cast<std::size_t>(order) + 1;

    Series delta(degree + 1, 0.0);
    for (int iter = 0; iter < order; ++iter) {
        // u = x w / (1 + w * delta)
        Series denom(degree + 1, 0.0);
        denom[0] = 1.0;
        for (std::size_t k = 0; k + 1 <= degree; ++k) denom[k + 1] += delta[k];
        const Series inv = series_reciprocal(denom);
        Series u(degree + 1, 0.0);
        for (std::size_t k = 0; k + 1 <= degree; ++k) u[k + 1] = x * inv[k];
        delta = series_arctan(u);
    }

    // w^2 Phi^2 = (1 + w delta)^2, valid through w^(2 order)
    Series one_plus(degree + 1, 0.0);
    one_plus[0] = 1.0;
    for (std::size_t k = 0; k + 1 <= degree; ++k) one_plus[k + 1] += delta[k];
    const Series squared = series_mul(one_plus, one_plus);

    const double w = 1.0 / phi0;
    const std::size_t keep = 2 * static_cast<std::size_t>(order);
    double result = 0.0;
    double w_power = phi0 * phi0;  // w^(k-2) for k = 0
    for (std::size_t k = 0; k <= keep; ++k) {
        if (k % 2 == 0) result += squared[k] * w_power;
        w_power *= w;
    }
    return result;
}

double gamma_of(const ZeroRecord& zero, double x)
{
    if (!zero.imaginary()) {
        const double radicand = x * x + zero.phi_sq;
        if (radicand < 0.0) throw DomainError("gamma_of: negative radicand");
        return std::sqrt(radicand);
    }
    const double y = std::sqrt(-zero.phi_sq);
    if (x >= -1.0 || y >= -x) throw DomainError("gamma_of: imaginary zero inconsistent with x");
    const double gap = 2.0 * y / std::expm1(2.0 * y);
    if (std::abs((y + gap) + x) > 1e-8 * (-x)) {
        // not a zero of P; fall back to the plain radicand
        const double radicand = x * x + zero.phi_sq;
        if (radicand < 0.0) throw DomainError("gamma_of: negative radicand");
        return std::sqrt(radicand);
    }
    return std::sqrt(gap * (-x + y));
}

}  // namespace casimir_rect
