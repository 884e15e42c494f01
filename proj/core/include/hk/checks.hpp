// SPDX-License-Identifier: Apache-2.0
//
// Named verification suites shared by the CLI `check` command and the
// acceptance runner.  Each suite returns one report per tolerance group.
#ifndef HK_CHECKS_HPP
#define HK_CHECKS_HPP

#include "hk/series.hpp"

#include <string>
#include <vector>

namespace hk {

struct CheckReport {
    std::string check_name;
    std::vector<std::vector<double>> grid; // one input tuple per residual
    std::vector<double> residuals;
    double tolerance = 0.0;
    bool passed = false;

    double max_residual() const;
    void finalize(); // sets passed from residuals vs tolerance
};

// suite names: g19, chains, theorem-odd, theorem-even, late-time, green,
// qfuncs, appendix, dimshift, all
std::vector<CheckReport> run_check_suite(const std::string& suite,
                                         const SeriesPolicy& policy = {});

std::vector<std::string> check_suite_names();

std::string check_reports_to_json(const std::vector<CheckReport>& reports);

} // namespace hk

#endif
