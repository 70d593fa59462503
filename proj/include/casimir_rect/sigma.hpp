#pragma once

#include <string>
#include <vector>

#include "casimir_rect/parallel.hpp"
#include "casimir_rect/weights.hpp"

namespace casimir_rect {

using IndexSet = std::vector<int>;

/// One term a_s exp(-rho Gamma_s) of the subset series.
struct SubsetTerm {
    IndexSet s;  ///< strictly increasing
    int order = 0;
    double a = 0.0;
    double log_a = 0.0;
    double gamma_sum = 0.0;
};

enum class SigmaRoute { series, determinant };

std::string to_string(SigmaRoute route);

struct SigmaResult {
    double value = 1.0;
    int order = 0;  ///< N for the series, modes for the determinant
    SigmaRoute route = SigmaRoute::series;
    double error_bound = 0.0;  ///< exp(-2 pi rho (N + 1)) scale of the first omitted order
};

/// Smallest rho accepted by the series and determinant routes.
inline constexpr double kMinSigmaRho = 0.5;

/// Index sets with equally many odd and even members and sum (mu - 1/2) = 2n,
/// sorted lexicographically. |S_n| is the partition number P(n).
std::vector<IndexSet> enumerate_sets(int n);

bool is_balanced(const IndexSet& s);

/// Amplitude a_s = prod_pairs (Phi_mu^2 - Phi_nu^2)^(2 sigma_mu sigma_nu) prod v_mu.
SubsetTerm amplitude(const IndexSet& s, double x);
SubsetTerm amplitude(const IndexSet& s, const Spectrum& spectrum);

/// All terms of orders 1..N at x, in enumeration order.
std::vector<SubsetTerm> series_terms(double x, int N, Exec exec = Exec::parallel);

/// 1 + sum_{n <= N} sum_{s in S_n} a_s exp(-rho Gamma_s).
SigmaResult sigma_series(double x, double rho, int N, Exec exec = Exec::parallel);

/// det(1 + Y) truncated to `modes` even and `modes` odd indices.
SigmaResult sigma_det(double x, double rho, int modes);

/// sigma_det(x, rho, N) - sigma_series(x, rho, N) with both routes evaluated
/// in 50-digit arithmetic from the same double zeros and weights. The routes
/// agree algebraically up to the omitted orders, whose size (down to
/// exp(-2 pi rho N) ~ 1e-43) lies far below double rounding of Sigma ~ 1.
double sigma_route_difference(double x, double rho, int N);

/// -log(Sigma^(N)) / rho.
double Psi(double x, double rho, int N = 8);

/// d/drho log Sigma^(N) from the analytic derivative of each term.
double psi_strip(double x, double rho, int N = 8);

/// Both Sigma - 1 and psi from a single pass over the terms.
struct StripSeries {
    double sigma_minus_one = 0.0;
    double psi = 0.0;
};
StripSeries strip_series(double x, double rho, int N = 8);

/// d/dx Psi(x, rho) by central differences with one Richardson step.
double dPsi_dx(double x, double rho, int N = 8);

}  // namespace casimir_rect
