#pragma once

namespace seiffert {

/// Two strictly positive finite reals. No ordering is imposed; every mean is
/// symmetric in (a, b). a == b is admitted, means take their limit value a.
class PositivePair {
public:
    PositivePair(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    /// |a - b| / (a + b), in [0, 1).
    double normalized_gap() const noexcept;

private:
    double a_;
    double b_;
};

/// Convex weight t in the closed interval [1/2, 1] together with
/// u = (2t - 1)^2.
class WeightParam {
public:
    explicit WeightParam(double t);

    double t() const noexcept { return t_; }
    double u() const noexcept { return u_; }

private:
    double t_;
    double u_;
};

/// Exponent p >= 1/2 on the contraharmonic factor.
class ExponentParam {
public:
    explicit ExponentParam(double p);

    double value() const noexcept { return p_; }

private:
    double p_;
};

double arithmetic_mean(const PositivePair& pair);

/// (a - b) / (2 arctan((a - b)/(a + b))). Below a normalized gap of 1e-4 the
/// value is A / (arctan(x)/x) with arctan(x)/x taken from its Taylor series.
double seiffert_mean(const PositivePair& pair);

double root_mean_square(const PositivePair& pair);

double contraharmonic_mean(const PositivePair& pair);

/// (t a + (1-t) b, t b + (1-t) a).
PositivePair weighted_pair(const PositivePair& pair, const WeightParam& w);

/// C(weighted_pair)^p * A^(1-p).
double q_family(const PositivePair& pair, const WeightParam& w, const ExponentParam& p);

}  // namespace seiffert
