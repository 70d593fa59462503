#pragma once

#include <vector>

namespace casimir_rect {

/// Temperature scaling variable x and aspect ratio rho of a rectangle,
/// together with the volume and perpendicular variants of x (d = 2, nu = 1).
class ScalingPoint {
public:
    ScalingPoint(double x, double rho);

    double x() const { return x_; }
    double rho() const { return rho_; }
    double x_volume() const;  ///< x * rho^(1/2)
    double x_perp() const;    ///< x * rho

private:
    double x_;
    double rho_;
};

/// One zero Phi_mu of the characteristic polynomial P(Phi) = cos Phi + (x/Phi) sin Phi.
///
/// The zero is stored through its square: phi_sq < 0 encodes the purely
/// imaginary first zero Phi_1 = i*y (x < -1) as -y^2. gamma is
/// Gamma_mu = sqrt(x^2 + Phi_mu^2), computed without cancellation.
struct ZeroRecord {
    int mu = 0;
    int sigma = 1;         ///< parity (-1)^(mu-1)
    double phi_sq = 0.0;
    double gamma = 0.0;

    bool imaginary() const { return phi_sq < 0.0; }
    /// |Phi_mu| (the real zero, or y for the imaginary one).
    double phi_abs() const;
};

inline int parity(int mu) { return (mu % 2 == 1) ? 1 : -1; }

/// P at Phi^2 = phi_sq, continued to imaginary Phi for phi_sq < 0 and to
/// 1 + x at phi_sq = 0. Small arguments are evaluated as (1+x) + corrections
/// so the result keeps relative accuracy near x = -1.
double eval_char_poly(double phi_sq, double x);

/// dP/dPhi for real Phi > 0.
double char_poly_derivative(double phi, double x);

inline constexpr double kDefaultRootTol = 1e-14;

/// The mu-th zero (mu >= 1). Throws NumericalError if the safeguarded
/// Newton iteration does not converge within 200 steps.
ZeroRecord find_zero(int mu, double x, double tol = kDefaultRootTol);

/// Zeros mu = 1..count, strictly increasing in phi_sq.
std::vector<ZeroRecord> find_zeros(int count, double x, double tol = kDefaultRootTol);

/// Large-mu asymptotic series for Phi_mu^2 obtained by iterating
/// Delta <- arctan(x / (Phi0 + Delta)) `order` times on truncated power
/// series in 1/Phi0, where Phi0 = (mu - 1/2) pi.
double zero_series_approx(int mu, double x, int order);

/// Gamma = sqrt(x^2 + phi_sq); throws DomainError on a negative radicand.
double gamma_of(const ZeroRecord& zero, double x);

}  // namespace casimir_rect
