#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace chebint {

/// Sum of sinusoids: sum_i a_i * sin(w_i * x), terms are (amplitude, angular frequency).
struct HarmonicSum {
    std::vector<std::pair<double, double>> terms;
};

/// exp(-decay * x) * sin(omega * x)
struct DampedSine {
    double decay;
    double omega;
};

/// c_0 + c_1 x + c_2 x^2 + ... (ascending powers)
struct Polynomial {
    std::vector<double> coeffs;
};

struct Constant {
    double value;
};

/// A symbolic test signal: deterministic, side-effect free, evaluable at any
/// real point. The name is used in CSV/CLI output.
class SignalSpec {
public:
    using Form = std::variant<HarmonicSum, DampedSine, Polynomial, Constant>;

    SignalSpec(Form form, std::string name) : form_(std::move(form)), name_(std::move(name)) {}

    [[nodiscard]] double operator()(double x) const {
        return std::visit(
            [x](const auto& f) -> double {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, HarmonicSum>) {
                    double s = 0.0;
                    for (const auto& [a, w] : f.terms) s += a * std::sin(w * x);
                    return s;
                } else if constexpr (std::is_same_v<T, DampedSine>) {
                    return std::exp(-f.decay * x) * std::sin(f.omega * x);
                } else if constexpr (std::is_same_v<T, Polynomial>) {
                    double s = 0.0;
                    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) s = s * x + *it;
                    return s;
                } else {
                    return f.value;
                }
            },
            form_);
    }

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const Form& form() const { return form_; }

    /// sin(4x) + 0.5 sin(8x)
    static SignalSpec harmonic() { return {HarmonicSum{{{1.0, 4.0}, {0.5, 8.0}}}, "harmonic"}; }

    /// e^{-x} sin(8x)
    static SignalSpec damped() { return {DampedSine{1.0, 8.0}, "damped"}; }

    static SignalSpec constant(double v) { return {Constant{v}, "constant"}; }

    static SignalSpec polynomial(std::vector<double> coeffs) {
        return {Polynomial{std::move(coeffs)}, "polynomial"};
    }

private:
    Form form_;
    std::string name_;
};

}  // namespace chebint
