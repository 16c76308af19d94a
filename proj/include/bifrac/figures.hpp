#pragma once

#include "bifrac/montecarlo.hpp"

#include <string>

namespace bifrac {

/// Static SVG panels in the style of the experiment plots. Output bytes are
/// deterministic (no timestamps).

/// Confidence intervals of both estimates versus n, with the true values as
/// horizontal lines.
void write_ci_panel_svg(const std::string& file, const ExperimentSummary& summary,
                        const std::string& title);

/// log-log |bias| and variance of both components versus n, with fitted
/// slopes annotated.
void write_rates_panel_svg(const std::string& file, const ExperimentSummary& summary,
                           const std::string& title);

/// log-log |cross covariance| versus n with the fitted slope annotated.
void write_cross_panel_svg(const std::string& file, const ExperimentSummary& summary,
                           const std::string& title);

} // namespace bifrac
