#include "robandit/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "robandit/error.hpp"

namespace robandit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

bool finite(double x) { return std::isfinite(x); }

// Acklam's rational approximation, polished by one Halley step against erfc.
double standard_normal_quantile(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
    const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    if (std::isfinite(u)) x = x - u / (1.0 + 0.5 * x * u);
    return x;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// Generic quantile by bracketing and bisection down to adjacent doubles.
// right == false: inf{x : F(x) >= p}; right == true: inf{x : F(x) > p}.
double bisect_quantile(const Distribution& d, double p, bool right) {
    auto hit = [&](double x) {
        const double f = cdf(d, x);
        return right ? f > p : f >= p;
    };
    constexpr double kMax = std::numeric_limits<double>::max();
    double lo = -1.0;
    double hi = 1.0;
    while (!hit(hi)) {
        lo = hi;
        if (hi >= kMax / 2) return kMax;
        hi *= 2.0;
    }
    while (hit(lo)) {
        hi = lo;
        if (lo <= -kMax / 2) return -kMax;
        lo *= 2.0;
    }
    // Invariant: !hit(lo), hit(hi).
    for (;;) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        if (hit(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

bool nearly_equal(double a, double b) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= 1e-10 * scale;
}

} // namespace

// ---------------------------------------------------------------------------
// Construction

Distribution Distribution::uniform(double lo, double hi) {
    require(finite(lo) && finite(hi) && lo < hi, "uniform requires finite lo < hi");
    return Distribution(Uniform{lo, hi});
}

Distribution Distribution::gaussian(double mu, double sigma) {
    require(finite(mu) && finite(sigma) && sigma > 0, "gaussian requires sigma > 0");
    return Distribution(Gaussian{mu, sigma});
}

Distribution Distribution::cauchy(double x0, double scale) {
    require(finite(x0) && finite(scale) && scale > 0, "cauchy requires scale > 0");
    return Distribution(Cauchy{x0, scale});
}

Distribution Distribution::bernoulli(double p) {
    require(p >= 0.0 && p <= 1.0, "bernoulli requires p in [0, 1]");
    return Distribution(Bernoulli{p});
}

Distribution Distribution::smoothed_bernoulli(double p) {
    require(p >= 0.0 && p <= 1.0, "smoothed bernoulli requires p in [0, 1]");
    return Distribution(SmoothedBernoulli{p});
}

Distribution Distribution::dirac(double x) {
    require(finite(x), "dirac requires a finite location");
    return Distribution(Dirac{x});
}

Distribution Distribution::mixture(std::vector<double> weights,
                                   std::vector<Distribution> components) {
    require(!weights.empty() && weights.size() == components.size(),
            "mixture requires matching nonempty weights and components");
    for (double w : weights) require(w >= 0.0 && finite(w), "mixture weights must be >= 0");
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    require(std::fabs(total - 1.0) <= 1e-12, "mixture weights must sum to 1");
    return Distribution(Mixture{std::move(weights), std::move(components)});
}

Distribution Distribution::affine(const Distribution& base, double scale, double shift) {
    require(finite(scale) && finite(shift) && scale != 0.0, "affine requires finite scale != 0");
    return Distribution(Affine{std::make_shared<const Distribution>(base), scale, shift});
}

Distribution Distribution::folded(const Distribution& base, double center) {
    require(finite(center), "folded requires a finite center");
    return Distribution(Folded{std::make_shared<const Distribution>(base), center});
}

std::string Distribution::describe() const {
    std::ostringstream os;
    os.precision(17);
    std::visit(Overloaded{
                   [&](const Uniform& u) { os << "Uniform(" << u.lo << ", " << u.hi << ")"; },
                   [&](const Gaussian& g) { os << "Gaussian(" << g.mu << ", " << g.sigma << ")"; },
                   [&](const Cauchy& c) { os << "Cauchy(" << c.x0 << ", " << c.scale << ")"; },
                   [&](const Bernoulli& b) { os << "Bernoulli(" << b.p << ")"; },
                   [&](const SmoothedBernoulli& s) { os << "SmoothedBernoulli(" << s.p << ")"; },
                   [&](const Dirac& d) { os << "Dirac(" << d.x << ")"; },
                   [&](const Mixture& m) {
                       os << "Mixture(";
                       for (std::size_t i = 0; i < m.weights.size(); ++i) {
                           if (i) os << ", ";
                           os << m.weights[i] << "*" << m.components[i].describe();
                       }
                       os << ")";
                   },
                   [&](const Affine& a) {
                       os << "Affine(" << a.base->describe() << ", " << a.scale << ", " << a.shift
                          << ")";
                   },
                   [&](const Folded& f) {
                       os << "Folded(" << f.base->describe() << ", " << f.center << ")";
                   },
               },
               v_);
    return os.str();
}

// ---------------------------------------------------------------------------
// cdf, left cdf, atoms

double cdf(const Distribution& d, double x) {
    return std::visit(
        Overloaded{
            [&](const Uniform& u) {
                if (x <= u.lo) return 0.0;
                if (x >= u.hi) return 1.0;
                return (x - u.lo) / (u.hi - u.lo);
            },
            [&](const Gaussian& g) { return normal_cdf((x - g.mu) / g.sigma); },
            [&](const Cauchy& c) {
                return 0.5 + std::atan((x - c.x0) / c.scale) / std::numbers::pi;
            },
            [&](const Bernoulli& b) {
                if (x < 0.0) return 0.0;
                if (x < 1.0) return 1.0 - b.p;
                return 1.0;
            },
            [&](const SmoothedBernoulli& s) {
                if (x < 0.0) return 0.0;
                if (x < 1.0) return 0.5 * (1.0 - s.p) + 0.5 * x;
                return 1.0;
            },
            [&](const Dirac& dd) { return x >= dd.x ? 1.0 : 0.0; },
            [&](const Mixture& m) {
                double acc = 0.0;
                for (std::size_t i = 0; i < m.weights.size(); ++i)
                    acc += m.weights[i] * cdf(m.components[i], x);
                return std::clamp(acc, 0.0, 1.0);
            },
            [&](const Affine& a) {
                const double y = (x - a.shift) / a.scale;
                return a.scale > 0 ? cdf(*a.base, y) : 1.0 - cdf_left(*a.base, y);
            },
            [&](const Folded& f) {
                if (x < 0.0) return 0.0;
                return std::clamp(cdf(*f.base, f.center + x) - cdf_left(*f.base, f.center - x),
                                  0.0, 1.0);
            },
        },
        d.variant());
}

double cdf_left(const Distribution& d, double x) {
    return std::visit(
        Overloaded{
            [&](const Uniform&) { return cdf(d, x); },
            [&](const Gaussian&) { return cdf(d, x); },
            [&](const Cauchy&) { return cdf(d, x); },
            [&](const Bernoulli& b) {
                if (x <= 0.0) return 0.0;
                if (x <= 1.0) return 1.0 - b.p;
                return 1.0;
            },
            [&](const SmoothedBernoulli& s) {
                if (x <= 0.0) return 0.0;
                if (x <= 1.0) return 0.5 * (1.0 - s.p) + 0.5 * x;
                return 1.0;
            },
            [&](const Dirac& dd) { return x > dd.x ? 1.0 : 0.0; },
            [&](const Mixture& m) {
                double acc = 0.0;
                for (std::size_t i = 0; i < m.weights.size(); ++i)
                    acc += m.weights[i] * cdf_left(m.components[i], x);
                return std::clamp(acc, 0.0, 1.0);
            },
            [&](const Affine& a) {
                const double y = (x - a.shift) / a.scale;
                return a.scale > 0 ? cdf_left(*a.base, y) : 1.0 - cdf(*a.base, y);
            },
            [&](const Folded& f) {
                if (x <= 0.0) return 0.0;
                return std::clamp(cdf_left(*f.base, f.center + x) - cdf(*f.base, f.center - x),
                                  0.0, 1.0);
            },
        },
        d.variant());
}

double atom(const Distribution& d, double x) {
    return std::visit(
        Overloaded{
            [&](const Uniform&) { return 0.0; },
            [&](const Gaussian&) { return 0.0; },
            [&](const Cauchy&) { return 0.0; },
            [&](const Bernoulli& b) {
                if (x == 0.0) return 1.0 - b.p;
                if (x == 1.0) return b.p;
                return 0.0;
            },
            [&](const SmoothedBernoulli& s) {
                if (x == 0.0) return 0.5 * (1.0 - s.p);
                if (x == 1.0) return 0.5 * s.p;
                return 0.0;
            },
            [&](const Dirac& dd) { return x == dd.x ? 1.0 : 0.0; },
            [&](const Mixture& m) {
                double acc = 0.0;
                for (std::size_t i = 0; i < m.weights.size(); ++i)
                    acc += m.weights[i] * atom(m.components[i], x);
                return acc;
            },
            [&](const Affine& a) { return atom(*a.base, (x - a.shift) / a.scale); },
            [&](const Folded& f) {
                if (x < 0.0) return 0.0;
                if (x == 0.0) return atom(*f.base, f.center);
                return atom(*f.base, f.center + x) + atom(*f.base, f.center - x);
            },
        },
        d.variant());
}

// ---------------------------------------------------------------------------
// Quantiles

namespace {

void require_open_probability(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw Error(ErrorCode::InvalidArgument, "quantile level must lie in (0, 1)");
}

double quantile_impl(const Distribution& d, double p, bool right) {
    return std::visit(
        Overloaded{
            [&](const Uniform& u) { return u.lo + p * (u.hi - u.lo); },
            [&](const Gaussian& g) { return g.mu + g.sigma * standard_normal_quantile(p); },
            [&](const Cauchy& c) {
                if (p < 0.5) return c.x0 - c.scale / std::tan(std::numbers::pi * p);
                if (p > 0.5) return c.x0 + c.scale / std::tan(std::numbers::pi * (1.0 - p));
                return c.x0;
            },
            [&](const Bernoulli& b) {
                const double f0 = 1.0 - b.p;
                if (right) return p < f0 ? 0.0 : 1.0;
                return p <= f0 ? 0.0 : 1.0;
            },
            [&](const SmoothedBernoulli& s) {
                const double a0 = 0.5 * (1.0 - s.p);
                if (right) {
                    if (p < a0) return 0.0;
                    if (p < a0 + 0.5) return 2.0 * (p - a0);
                    return 1.0;
                }
                if (p <= a0) return 0.0;
                if (p <= a0 + 0.5) return 2.0 * (p - a0);
                return 1.0;
            },
            [&](const Dirac& dd) { return dd.x; },
            [&](const Mixture&) { return bisect_quantile(d, p, right); },
            [&](const Affine& a) {
                if (a.scale > 0) return a.scale * quantile_impl(*a.base, p, right) + a.shift;
                return a.scale * quantile_impl(*a.base, 1.0 - p, !right) + a.shift;
            },
            [&](const Folded&) { return bisect_quantile(d, p, right); },
        },
        d.variant());
}

} // namespace

double quantile_left(const Distribution& d, double p) {
    require_open_probability(p);
    return quantile_impl(d, p, false);
}

double quantile_right(const Distribution& d, double p) {
    require_open_probability(p);
    return quantile_impl(d, p, true);
}

// ---------------------------------------------------------------------------
// Sampling

double sample(const Distribution& d, RandomStream& rng) {
    return std::visit(
        Overloaded{
            [&](const Uniform& u) { return u.lo + rng.uniform01() * (u.hi - u.lo); },
            [&](const Gaussian& g) { return g.mu + g.sigma * standard_normal_quantile(rng.uniform01()); },
            [&](const Cauchy& c) {
                return c.x0 + c.scale * std::tan(std::numbers::pi * (rng.uniform01() - 0.5));
            },
            [&](const Bernoulli& b) { return rng.uniform01() < b.p ? 1.0 : 0.0; },
            [&](const SmoothedBernoulli& s) {
                if (rng.uniform01() < 0.5) return rng.uniform01() < s.p ? 1.0 : 0.0;
                return rng.uniform01();
            },
            [&](const Dirac& dd) { return dd.x; },
            [&](const Mixture& m) {
                const double u = rng.uniform01();
                double acc = 0.0;
                std::size_t pick = m.weights.size() - 1;
                for (std::size_t i = 0; i < m.weights.size(); ++i) {
                    acc += m.weights[i];
                    if (u < acc) {
                        pick = i;
                        break;
                    }
                }
                return sample(m.components[pick], rng);
            },
            [&](const Affine& a) { return a.scale * sample(*a.base, rng) + a.shift; },
            [&](const Folded& f) { return std::fabs(sample(*f.base, rng) - f.center); },
        },
        d.variant());
}

// ---------------------------------------------------------------------------
// Robust moments

RobustMoments robust_moments(const Distribution& d) {
    RobustMoments out;
    const double ql = quantile_left(d, 0.5);
    const double qr = quantile_right(d, 0.5);
    out.m1 = ql;
    out.m1_unique = nearly_equal(ql, qr);

    const Distribution dev = Distribution::folded(d, out.m1);
    const double rl = quantile_left(dev, 0.5);
    const double rr = quantile_right(dev, 0.5);
    out.m2 = rl;
    out.m2_unique = out.m1_unique && nearly_equal(rl, rr);

    const Distribution dev2 = Distribution::folded(dev, out.m2);
    const double sl = quantile_left(dev2, 0.5);
    const double sr = quantile_right(dev2, 0.5);
    out.m4 = sl;
    out.m4_unique = out.m2_unique && nearly_equal(sl, sr);
    return out;
}

double unique_median(const Distribution& d) {
    const double ql = quantile_left(d, 0.5);
    const double qr = quantile_right(d, 0.5);
    if (!nearly_equal(ql, qr))
        throw Error(ErrorCode::NonUniqueMedian, d.describe() + " has a flat cdf at 1/2");
    return ql;
}

double unique_mad(const Distribution& d) {
    const double m1 = unique_median(d);
    const Distribution dev = Distribution::folded(d, m1);
    const double rl = quantile_left(dev, 0.5);
    const double rr = quantile_right(dev, 0.5);
    if (!nearly_equal(rl, rr))
        throw Error(ErrorCode::NonUniqueMAD, d.describe() + " has a non-unique MAD");
    return rl;
}

// ---------------------------------------------------------------------------
// Family checks

void FamilyParams::validate() const {
    if (!(t_bar > 0.0 && t_bar < 0.5))
        throw Error(ErrorCode::InvalidArgument, "t_bar must lie in (0, 1/2)");
    if (!(B > 0.0)) throw Error(ErrorCode::InvalidArgument, "B must be positive");
    if (!(m2_bar > 0.0)) throw Error(ErrorCode::InvalidArgument, "m2_bar must be positive");
    if (!(kappa >= 0.0)) throw Error(ErrorCode::InvalidArgument, "kappa must be nonnegative");
}

namespace {

// Adjacent-pair slope check on an evenly spaced grid over [lo, hi].
bool slope_check(const Distribution& d, double lo, double hi, double min_slope, int grid) {
    if (grid < 1) throw Error(ErrorCode::InvalidArgument, "grid resolution must be >= 1");
    double prev_x = lo;
    double prev_f = cdf(d, lo);
    for (int j = 1; j <= grid; ++j) {
        const double x = (j == grid) ? hi : lo + (hi - lo) * (static_cast<double>(j) / grid);
        const double f = cdf(d, x);
        const double need = (x - prev_x) * min_slope;
        if (f - prev_f < need * (1.0 - 1e-9) - 1e-15) return false;
        prev_x = x;
        prev_f = f;
    }
    return true;
}

} // namespace

bool check_family_FtB(const Distribution& d, double t_bar, double B, int grid) {
    if (!(t_bar > 0.0 && t_bar < 0.5))
        throw Error(ErrorCode::InvalidArgument, "t_bar must lie in (0, 1/2)");
    if (!(B > 0.0)) throw Error(ErrorCode::InvalidArgument, "B must be positive");
    const double m2 = unique_mad(d);
    if (!(m2 > 0.0)) throw Error(ErrorCode::ZeroMAD, d.describe() + " has zero MAD");
    const double lo = quantile_left(d, 0.5 - t_bar);
    const double hi = quantile_right(d, 0.5 + t_bar);
    return slope_check(d, lo, hi, 1.0 / (B * m2), grid);
}

bool check_family_Fmad(const Distribution& d, const FamilyParams& params, int grid) {
    params.validate();
    const RobustMoments rm = robust_moments(d);
    if (!rm.m1_unique) throw Error(ErrorCode::NonUniqueMedian, d.describe());
    if (!rm.m2_unique || !rm.m4_unique) throw Error(ErrorCode::NonUniqueMAD, d.describe());
    if (!(rm.m2 > 0.0)) throw Error(ErrorCode::ZeroMAD, d.describe() + " has zero MAD");

    const double lo = std::min(quantile_left(d, 0.5 - params.t_bar), rm.m1 - 2.0 * rm.m2);
    const double hi = std::max(quantile_right(d, 0.5 + params.t_bar), rm.m1 + 2.0 * rm.m2);
    const bool slope_ok = slope_check(d, lo, hi, 1.0 / (params.B * rm.m2), grid);
    const double tol = 1e-9 * std::max(1.0, rm.m2);
    const bool bounded = rm.m2 <= params.m2_bar + tol;
    const bool kurtosis_ok = rm.m2 <= params.kappa * rm.m4 + tol;
    return slope_ok && bounded && kurtosis_ok;
}

double median_shift_bound(const Distribution& d, double eps) {
    if (!(eps > 0.0 && eps < 0.5))
        throw Error(ErrorCode::InvalidArgument, "eps must lie in (0, 1/2)");
    const double med_lo = quantile_left(d, 0.5);
    const double med_hi = quantile_right(d, 0.5);
    const double up = quantile_right(d, 1.0 / (2.0 * (1.0 - eps))) - med_lo;
    const double down = med_hi - quantile_left(d, (1.0 - 2.0 * eps) / (2.0 * (1.0 - eps)));
    return std::max({up, down, 0.0});
}

const char* to_string(AdversaryModel model) {
    switch (model) {
        case AdversaryModel::Oblivious: return "oblivious";
        case AdversaryModel::Prescient: return "prescient";
        case AdversaryModel::Malicious: return "malicious";
    }
    return "unknown";
}

AdversaryModel adversary_model_from_string(const std::string& s) {
    if (s == "oblivious") return AdversaryModel::Oblivious;
    if (s == "prescient") return AdversaryModel::Prescient;
    if (s == "malicious") return AdversaryModel::Malicious;
    throw Error(ErrorCode::InvalidArgument, "unknown adversary model '" + s + "'");
}

double bias_U(double eps, double B, double m2, AdversaryModel model) {
    if (!(eps >= 0.0 && eps < 0.5))
        throw Error(ErrorCode::InvalidArgument, "eps must lie in [0, 1/2)");
    if (!(B >= 0.0 && m2 >= 0.0))
        throw Error(ErrorCode::InvalidArgument, "B and m2 must be nonnegative");
    if (model == AdversaryModel::Malicious) return B * m2 * eps;
    return B * m2 * eps / (2.0 * (1.0 - eps));
}

} // namespace robandit
