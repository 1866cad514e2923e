#pragma once
#include <string>
#include <vector>

namespace varigame {

/// Odd interaction kernel phi used by the payoff functional. The game
/// integrates a*phi(f - g), and the best-response ODE needs the analytic
/// derivative phi', so both are supplied together.
class OddKernel {
public:
    enum class Kind { Sin, Sin3, Arctan, OddPoly };

    /// Builtins: "sin", "sin3" (sin^3), "arctan".
    static OddKernel builtin(const std::string& name);

    /// Custom odd polynomial: coeffs[k] multiplies x^k. A nonzero
    /// coefficient on an even power would break the antisymmetry the
    /// whole game relies on, so it is rejected up front.
    static OddKernel odd_polynomial(std::vector<double> coeffs,
                                    std::string name = "odd-poly");

    double value(double x) const;
    double derivative(double x) const;

    const std::string& name() const { return name_; }
    Kind kind() const { return kind_; }

private:
    OddKernel(Kind kind, std::string name, std::vector<double> poly);

    Kind kind_;
    std::string name_;
    std::vector<double> poly_;  // only used by Kind::OddPoly
};

}  // namespace varigame
