// SPDX-License-Identifier: Apache-2.0
#ifndef HK_SERIES_HPP
#define HK_SERIES_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

// Thrown by scalar special functions when a power series hits its hard cap.
class no_convergence : public std::runtime_error {
  public:
    explicit no_convergence(const std::string& what) : std::runtime_error(what) {}
};

// Truncation control shared by every series evaluation in the library.
struct SeriesPolicy {
    int max_terms = 60;
    double rtol = 1e-12;
    double atol = 1e-300;

    void validate() const {
        if (max_terms < 4) throw std::invalid_argument("SeriesPolicy: max_terms must be >= 4");
        if (!(rtol > 0) || !(atol >= 0)) throw std::invalid_argument("SeriesPolicy: bad tolerances");
    }
};

// Value of a truncated series together with how it was obtained.
struct SeriesValue {
    double value = 0.0;
    int terms_used = 0;
    bool converged = false;
};

namespace detail {

// Termination rule: three consecutive terms below rtol*|partial| + atol.
class TermCounter {
  public:
    explicit TermCounter(const SeriesPolicy& p) : p_(p) {}

    // feed one term; returns true once the tail test has passed three times in a row
    bool done(double term, double partial) {
        ++used_;
        if (std::abs(term) < p_.rtol * std::abs(partial) + p_.atol)
            ++small_;
        else
            small_ = 0;
        return small_ >= 3;
    }
    bool exhausted() const { return used_ >= p_.max_terms; }
    int used() const { return used_; }

  private:
    SeriesPolicy p_;
    int used_ = 0;
    int small_ = 0;
};

// Sums a buffered series smallest-terms-first (buffer holds terms in generation order).
inline double sum_descending(const std::vector<double>& terms) {
    double s = 0.0;
    for (std::size_t i = terms.size(); i-- > 0;) s += terms[i];
    return s;
}

} // namespace detail
} // namespace hk

#endif
