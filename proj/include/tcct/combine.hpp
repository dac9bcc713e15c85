// P-value combination methods: truncated and plain Cauchy combination,
// Fisher, Tippett, and the scaled minimum-p Cauchy statistic.
#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tcct {

enum class Method { kTcct, kCct, kFisher, kTippett, kTMin };

// Bitmask flags describing degenerate aspects of a combination.
enum CombineFlag : unsigned {
  kFlagAllTruncated = 1u,    // every p >= 0.5, truncated statistic is empty
  kFlagInfiniteStat = 2u,    // statistic overflowed to +/-inf (e.g. a p of 0)
  kFlagDegenerateInput = 4u, // input made the statistic undefined
  kFlagClamped = 8u,         // combined p clamped into [0,1]
};

struct CombinedResult {
  Method method;
  double statistic;
  double p_combined;
  unsigned flags = 0;
};

// A simultaneous exact 0 and exact 1 make the plain Cauchy sum inf - inf.
class CctIndeterminateError : public std::domain_error {
 public:
  CctIndeterminateError() : std::domain_error("cct statistic is indeterminate: input contains both p = 0 and p = 1") {}
};

// Weighted truncated Cauchy combination: statistic sums w_i * tan((0.5-p_i)pi)
// over p_i strictly below 0.5 only. Empty weights mean uniform 1/d.
CombinedResult tcct(std::span<const double> p, std::span<const double> w = {});

// Plain weighted Cauchy combination (no truncation). A p of exactly 1 drives
// the statistic to -inf; 0 and 1 together throw CctIndeterminateError.
CombinedResult cct(std::span<const double> p, std::span<const double> w = {});

// Fisher: -2 * sum(log p) against chi-square with 2d degrees of freedom.
CombinedResult fisher(std::span<const double> p);

// Tippett: combined p = 1 - (1 - min p)^d.
CombinedResult tippett(std::span<const double> p);

// Scaled minimum: statistic tan((0.5 - min p)*pi) / d with Cauchy survival.
CombinedResult t_min(std::span<const double> p);

// Dispatch by method; weights reach only the Cauchy-family methods.
CombinedResult combine(Method m, std::span<const double> p, std::span<const double> w = {});

const char* method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

// Render flags as "A|B" using their canonical names; empty string when none.
std::string flags_to_string(unsigned flags);

}  // namespace tcct
