#include "wptrelay/valuation.hpp"

#include <cmath>

namespace wptrelay {

namespace {

// Standardized log-fading coordinate at price v.
double fading_z(const ValuationModel& model, double v) {
    return std::log(hss_of_valuation(model, v)) / model.sigma_ln();
}

} // namespace

ValuationModel::ValuationModel(double p_si, double k, double sigma_ln)
    : p_si_(p_si), k_(k), sigma_ln_(sigma_ln) {
    if (!(p_si > 0.0) || !(k > 0.0) || !(sigma_ln > 0.0)) {
        throw DomainError("ValuationModel: p_si, k and sigma_ln must be positive");
    }
}

ValuationModel ValuationModel::from_link(double p_si, double gamma_th,
                                         double noise_power,
                                         double candidate_ap_path_loss,
                                         double alpha, double a_r, double h_si,
                                         double sigma_ln) {
    if (!(gamma_th > 0.0) || !(noise_power > 0.0) ||
        !(candidate_ap_path_loss > 0.0) || !(alpha > 0.0) || !(a_r > 0.0) ||
        !(h_si > 0.0)) {
        throw DomainError("ValuationModel::from_link: nonpositive link quantity");
    }
    const double k =
        gamma_th * noise_power / (candidate_ap_path_loss * alpha * a_r * h_si);
    return ValuationModel(p_si, k, sigma_ln);
}

double min_inducement_power(double p_si, double p_i, double alpha, double a_r,
                            double h_si) {
    if (!(p_si > 0.0) || !(p_i > 0.0) || !(alpha > 0.0) || alpha > 1.0 ||
        !(a_r > 0.0) || !(h_si > 0.0)) {
        throw DomainError("min_inducement_power: argument out of range");
    }
    return p_si + p_i / (alpha * a_r * h_si);
}

double hss_of_valuation(const ValuationModel& model, double v) {
    if (!(v > model.p_si())) {
        throw SupportError("hss_of_valuation: value at or below support edge");
    }
    return model.k() / (v - model.p_si());
}

double valuation_pdf(const ValuationModel& model, double v) noexcept {
    if (!(v > model.p_si())) {
        return 0.0;
    }
    const double z = fading_z(model, v);
    return std_normal_pdf(z) / (model.sigma_ln() * (v - model.p_si()));
}

double valuation_cdf(const ValuationModel& model, double v) noexcept {
    if (!(v > model.p_si())) {
        return 0.0;
    }
    return std_normal_upper_tail(fading_z(model, v));
}

double virtual_valuation(const ValuationModel& model, double v) {
    if (!(v > model.p_si())) {
        throw SupportError("virtual_valuation: value at or below support edge");
    }
    const double z = fading_z(model, v);
    return v + model.sigma_ln() * (v - model.p_si()) * mills_ratio(z);
}

double virtual_valuation_derivative(const ValuationModel& model, double v) {
    if (!(v > model.p_si())) {
        throw SupportError(
            "virtual_valuation_derivative: value at or below support edge");
    }
    const double z = fading_z(model, v);
    return 2.0 + mills_ratio(z) * (model.sigma_ln() - z);
}

double inverse_virtual_valuation(const ValuationModel& model, double target,
                                 const BisectionSpec& spec) {
    if (!(target > model.p_si())) {
        throw RangeError("inverse_virtual_valuation: target at or below p_si");
    }
    const double p_si = model.p_si();
    const double lower = p_si * (1.0 + 1e-15) + 1e-18;
    const auto c = [&model](double s) { return virtual_valuation(model, s); };
    if (c(lower) >= target) {
        // Target sits within one tolerance of the support edge.
        return lower;
    }
    double upper = p_si + model.k();
    for (int m = 0; m < 128 && c(upper) < target; ++m) {
        upper = p_si + std::ldexp(model.k(), m + 1);
    }
    return bisect(c, target, spec.with_bracket(lower, upper));
}

Valuation sample_valuation(const ValuationModel& model, RandomStream& rng) {
    const double hss = std::exp(-model.sigma_ln() * rng.normal());
    return Valuation{model.p_si() + model.k() / hss};
}

} // namespace wptrelay
