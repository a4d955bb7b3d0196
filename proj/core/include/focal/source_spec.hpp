#pragma once

#include <string_view>

#include "focal/pmf.hpp"

namespace focal {

/// Builds a source from the mini-language
///
///   uniform:K | binomial:K:P | bernoulli:P | pmf:V1,V2,... | pmf-file:PATH
///
/// optionally followed by ":q=WEIGHTS", where WEIGHTS is another source
/// spec or a bare comma list. Weights are always renormalized; `renormalize`
/// applies to pmf: and pmf-file: values.
Source parse_source_spec(std::string_view spec, bool renormalize = false);

/// The distribution part of a spec without weight handling.
Pmf parse_distribution_spec(std::string_view spec, bool renormalize = false);

} // namespace focal
