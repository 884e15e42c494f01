// SPDX-License-Identifier: Apache-2.0
//
// Coefficient families g^alpha_k (integer and half-integer conventions), the
// g-tilde family, and providers of heat-kernel expansion coefficients a_k.
#ifndef HK_COEFFS_HPP
#define HK_COEFFS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

// Index alpha of a Psi/Phi family, stored exactly as 2*alpha so chain
// recursions can walk it by +-1 without floating-point drift.
struct FamilyIndex {
    int twice_value = 0;

    static FamilyIndex integer(int p) { return {2 * p}; }
    static FamilyIndex half_integer(int twice) {
        if (twice % 2 == 0) throw std::invalid_argument("FamilyIndex: not a half-integer");
        return {twice};
    }
    static FamilyIndex of(double alpha); // accepts exact integers and half-integers only

    bool is_integer() const { return twice_value % 2 == 0; }
    int int_value() const { return twice_value / 2; } // valid when is_integer()
    double value() const { return 0.5 * twice_value; }
    FamilyIndex succ() const { return {twice_value + 2}; }
    FamilyIndex pred() const { return {twice_value - 2}; }
};

// Integer-convention coefficient: g^p_k = (-2)^p / Gamma(k - p + 1).
double g_int(int p, int k);

// Half-integer convention: g^p_k = (-1)^k Gamma(p - k) 2^p  (twice_p = 2p odd).
double g_half(int twice_p, int k);

// g-tilde family: Gamma(k - n) for n < k, (-1)^{n-k} H_{n-k} / (n-k)! otherwise.
double g_tilde(int k, int n);

// Supplies Seeley-DeWitt values a_k and the Van Vleck factor at an implicit
// point pair.  Flat: a_k = delta_{k0}; ConstantPotential v: a_k = v^k / k!;
// Table: listed values then zero.  a_0 = 1 always.
class CoefficientProvider {
  public:
    enum class Kind { Flat, ConstantPotential, Table };

    static CoefficientProvider flat(double vanvleck_sqrt = 1.0);
    static CoefficientProvider constant_potential(double v, double vanvleck_sqrt = 1.0);
    static CoefficientProvider table(std::vector<double> values, double vanvleck_sqrt = 1.0);

    // Parses {"a": [1.0, ...], "vanvleck_sqrt": 1.0}; validates a[0] == 1.
    static CoefficientProvider from_json(const std::string& text);
    static CoefficientProvider from_json_file(const std::string& path);

    Kind kind() const { return kind_; }
    double vanvleck_sqrt() const { return vanvleck_; }
    double potential() const { return v_; } // 0 unless ConstantPotential

    // a_k; zero for k < 0 (the expansion extends below the k=0 seed that way)
    double a(long k) const;

    // smallest K with a_k = 0 for all k >= K, or -1 if none (constant potential)
    long support_end() const;

  private:
    Kind kind_ = Kind::Flat;
    double v_ = 0.0;
    double vanvleck_ = 1.0;
    std::vector<double> table_;
};

double seeley_dewitt(const CoefficientProvider& provider, long k);

} // namespace hk

#endif
