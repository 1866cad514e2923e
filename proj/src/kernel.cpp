#include "varigame/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace varigame {

OddKernel::OddKernel(Kind kind, std::string name, std::vector<double> poly)
    : kind_(kind), name_(std::move(name)), poly_(std::move(poly)) {}

OddKernel OddKernel::builtin(const std::string& name) {
    if (name == "sin") return OddKernel(Kind::Sin, "sin", {});
    if (name == "sin3") return OddKernel(Kind::Sin3, "sin3", {});
    if (name == "arctan") return OddKernel(Kind::Arctan, "arctan", {});
    throw std::invalid_argument("unknown kernel '" + name +
                                "': valid builtins are sin, sin3, arctan");
}

OddKernel OddKernel::odd_polynomial(std::vector<double> coeffs, std::string name) {
    for (std::size_t k = 0; k < coeffs.size(); k += 2) {
        if (coeffs[k] != 0.0)
            throw std::invalid_argument(
                "odd polynomial kernel has nonzero coefficient on even power x^" +
                std::to_string(k) + "; only odd powers keep phi(-x) = -phi(x)");
    }
    return OddKernel(Kind::OddPoly, std::move(name), std::move(coeffs));
}

double OddKernel::value(double x) const {
    switch (kind_) {
        case Kind::Sin: return std::sin(x);
        case Kind::Sin3: {
            double s = std::sin(x);
            return s * s * s;
        }
        case Kind::Arctan: return std::atan(x);
        case Kind::OddPoly: {
            double acc = 0.0;
            for (std::size_t k = poly_.size(); k-- > 0;) acc = acc * x + poly_[k];
            return acc;
        }
    }
    return 0.0;  // unreachable
}

double OddKernel::derivative(double x) const {
    switch (kind_) {
        case Kind::Sin: return std::cos(x);
        case Kind::Sin3: {
            double s = std::sin(x);
            return 3.0 * s * s * std::cos(x);
        }
        case Kind::Arctan: return 1.0 / (1.0 + x * x);
        case Kind::OddPoly: {
            double acc = 0.0;
            for (std::size_t k = poly_.size(); k-- > 1;)
                acc = acc * x + static_cast<double>(k) * poly_[k];
            return acc;
        }
    }
    return 0.0;  // unreachable
}

}  // namespace varigame
