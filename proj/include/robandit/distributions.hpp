// distributions.hpp
//
// Closed-form distribution kernel: cdf, left/right quantiles, sampling,
// robust moments (median, MAD, second-order MAD) and family-membership checks.
#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "robandit/rng.hpp"

namespace robandit {

class Distribution;

struct Uniform {
    double lo = 0.0;
    double hi = 1.0;
};

struct Gaussian {
    double mu = 0.0;
    double sigma = 1.0;
};

struct Cauchy {
    double x0 = 0.0;
    double scale = 1.0;
};

struct Bernoulli {
    double p = 0.5;
};

// Equal-weight mixture of Bernoulli(p) and Uniform(0, 1).
struct SmoothedBernoulli {
    double p = 0.5;
};

struct Dirac {
    double x = 0.0;
};

struct Mixture {
    std::vector<double> weights;
    std::vector<Distribution> components;
};

// Law of scale * X + shift, X ~ base.
struct Affine {
    std::shared_ptr<const Distribution> base;
    double scale = 1.0;
    double shift = 0.0;
};

// Law of |X - center|, X ~ base. Used for the MAD and second-order MAD.
struct Folded {
    std::shared_ptr<const Distribution> base;
    double center = 0.0;
};

// Immutable distribution value. Construct through the factories below, which
// validate parameters and throw Error(InvalidArgument) on bad input.
class Distribution {
public:
    using Variant = std::variant<Uniform, Gaussian, Cauchy, Bernoulli, SmoothedBernoulli, Dirac,
                                 Mixture, Affine, Folded>;

    static Distribution uniform(double lo, double hi);
    static Distribution gaussian(double mu, double sigma);
    static Distribution cauchy(double x0, double scale);
    static Distribution bernoulli(double p);
    static Distribution smoothed_bernoulli(double p);
    static Distribution dirac(double x);
    static Distribution mixture(std::vector<double> weights, std::vector<Distribution> components);
    static Distribution affine(const Distribution& base, double scale, double shift);
    static Distribution folded(const Distribution& base, double center);

    const Variant& variant() const { return v_; }

    template <class T>
    const T* as() const { return std::get_if<T>(&v_); }

    std::string describe() const;

private:
    explicit Distribution(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

// P(X <= x).
double cdf(const Distribution& d, double x);
// P(X < x).
double cdf_left(const Distribution& d, double x);
// P(X = x).
double atom(const Distribution& d, double x);

// Q_L(p) = inf{x : F(x) >= p} and Q_R(p) = inf{x : F(x) > p}; p must be in (0, 1).
double quantile_left(const Distribution& d, double p);
double quantile_right(const Distribution& d, double p);

double sample(const Distribution& d, RandomStream& rng);

struct RobustMoments {
    double m1 = 0.0;   // median (left median when not unique)
    double m2 = 0.0;   // median absolute deviation
    double m4 = 0.0;   // median of ||X - m1| - m2|
    bool m1_unique = false;
    bool m2_unique = false;
    bool m4_unique = false;
};

// Flags non-uniqueness instead of throwing.
RobustMoments robust_moments(const Distribution& d);

// Throws NonUniqueMedian when the median is not unique.
double unique_median(const Distribution& d);
// Throws NonUniqueMedian / NonUniqueMAD.
double unique_mad(const Distribution& d);

struct FamilyParams {
    double t_bar = 0.4;
    double B = 4.0;
    double m2_bar = 1.0;
    double kappa = 2.0;

    void validate() const;
};

constexpr int kDefaultFamilyGrid = 10000;

// Grid check of |F(x1) - F(x2)| >= |x1 - x2| / (B m2) over
// [Q_L(1/2 - t_bar), Q_R(1/2 + t_bar)]. Necessary condition only: the grid
// cannot certify a continuum. Throws NonUniqueMedian or ZeroMAD.
bool check_family_FtB(const Distribution& d, double t_bar, double B,
                      int grid = kDefaultFamilyGrid);

// Slope condition on I_{F,t_bar} union [m1 +- 2 m2], m2 <= m2_bar and m2 <= kappa m4.
bool check_family_Fmad(const Distribution& d, const FamilyParams& params,
                       int grid = kDefaultFamilyGrid);

// Largest median displacement an eps-contamination can cause for this F.
double median_shift_bound(const Distribution& d, double eps);

enum class AdversaryModel { Oblivious, Prescient, Malicious };

const char* to_string(AdversaryModel model);
AdversaryModel adversary_model_from_string(const std::string& s);

// Unavoidable bias of the median: B m2 eps / (2(1 - eps)) for oblivious and
// prescient adversaries, B m2 eps for malicious ones.
double bias_U(double eps, double B, double m2, AdversaryModel model);

// Largest contamination level for which the median stays controlled on
// [1/2 +- t_bar]: 2 t_bar / (1 + 2 t_bar).
inline double eps_bar(double t_bar) { return 2.0 * t_bar / (1.0 + 2.0 * t_bar); }

} // namespace robandit
