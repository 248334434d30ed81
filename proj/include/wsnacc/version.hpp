#pragma once

#include <string_view>

namespace wsnacc {

inline constexpr std::string_view kVersion = "wsnacc 1.0.0";

/// Metadata notes echoed into every report so that an output file documents
/// the modelling choices it was produced under.
inline constexpr std::string_view kLogBase = "natural";
inline constexpr std::string_view kClosedFormNote =
    "D_A expanded from E[(S-S_hat)^2]; diagonal of E[S_hat^2] contributes (m-1)*beta/m^2 and beta_ch/m^2";

}  // namespace wsnacc
