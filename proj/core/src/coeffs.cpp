// SPDX-License-Identifier: Apache-2.0
#include "hk/coeffs.hpp"
#include "hk/specfun.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hk {

FamilyIndex FamilyIndex::of(double alpha) {
    const double twice = 2.0 * alpha;
    if (twice != std::floor(twice) || std::abs(twice) > 1e9)
        throw std::invalid_argument("FamilyIndex: index must be integer or half-integer");
    return {static_cast<int>(twice)};
}

double g_int(int p, int k) {
    // (-2)^p / Gamma(k - p + 1); the 1/Gamma pole makes g^p_k vanish for k < p
    double pw = p >= 0 ? std::pow(-2.0, p) : 1.0 / std::pow(-2.0, -p);
    return pw * recip_gamma(static_cast<double>(k - p + 1));
}

double g_half(int twice_p, int k) {
    if (twice_p % 2 == 0) throw std::invalid_argument("g_half: index must be half-integer");
    const double p = 0.5 * twice_p;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * gamma(p - k) * std::exp2(p);
}

double g_tilde(int k, int n) {
    const int j = n - k; // both branches depend on n - k only
    if (j < 0) return gamma(static_cast<double>(-j));
    if (j > 170) return 0.0; // 1/j! underflow
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return sign * harmonic(static_cast<double>(j)) * recip_gamma(j + 1.0);
}

CoefficientProvider CoefficientProvider::flat(double vanvleck_sqrt) {
    CoefficientProvider p;
    p.kind_ = Kind::Flat;
    p.vanvleck_ = vanvleck_sqrt;
    return p;
}

CoefficientProvider CoefficientProvider::constant_potential(double v, double vanvleck_sqrt) {
    CoefficientProvider p;
    p.kind_ = Kind::ConstantPotential;
    p.v_ = v;
    p.vanvleck_ = vanvleck_sqrt;
    return p;
}

CoefficientProvider CoefficientProvider::table(std::vector<double> values, double vanvleck_sqrt) {
    if (values.empty() || values[0] != 1.0)
        throw std::invalid_argument("CoefficientProvider: table must start with a_0 = 1");
    CoefficientProvider p;
    p.kind_ = Kind::Table;
    p.table_ = std::move(values);
    p.vanvleck_ = vanvleck_sqrt;
    return p;
}

CoefficientProvider CoefficientProvider::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("a") || !j["a"].is_array())
        throw std::invalid_argument("provider table: missing \"a\" array");
    std::vector<double> values = j["a"].get<std::vector<double>>();
    double vv = j.value("vanvleck_sqrt", 1.0);
    return table(std::move(values), vv);
}

CoefficientProvider CoefficientProvider::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("provider table: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

double CoefficientProvider::a(long k) const {
    if (k < 0) return 0.0;
    switch (kind_) {
        case Kind::Flat:
            return k == 0 ? 1.0 : 0.0;
        case Kind::ConstantPotential: {
            double r = 1.0;
            for (long j = 1; j <= k; ++j) r *= v_ / static_cast<double>(j);
            return r;
        }
        case Kind::Table:
            return k < static_cast<long>(table_.size()) ? table_[static_cast<std::size_t>(k)] : 0.0;
    }
    return 0.0;
}

long CoefficientProvider::support_end() const {
    switch (kind_) {
        case Kind::Flat: return 1;
        case Kind::ConstantPotential: return v_ == 0.0 ? 1 : -1;
        case Kind::Table: return static_cast<long>(table_.size());
    }
    return -1;
}

double seeley_dewitt(const CoefficientProvider& provider, long k) { return provider.a(k); }

} // namespace hk
