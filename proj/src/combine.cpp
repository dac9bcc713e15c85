// P-value combination method implementations.
#include "tcct/combine.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "tcct/cauchy.hpp"
#include "tcct/special.hpp"

namespace tcct {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_pvalues(std::span<const double> p) {
  if (p.empty()) throw std::invalid_argument("p-value vector must be nonempty");
  for (double v : p) {
    if (std::isnan(v) || v < 0.0 || v > 1.0) {
      throw std::domain_error("p-values must lie in [0,1]");
    }
  }
}

void validate_weights(std::span<const double> p, std::span<const double> w) {
  if (w.empty()) return;
  if (w.size() != p.size()) throw std::invalid_argument("weights length must match p-values");
  double sum = 0.0;
  for (double v : w) {
    if (std::isnan(v) || v < 0.0) throw std::domain_error("weights must be nonnegative");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-9) throw std::domain_error("weights must sum to 1");
}

double weight_at(std::span<const double> w, size_t i, double uniform) {
  return w.empty() ? uniform : w[i];
}

// Clamp the combined p into [0,1] and finish the result record.
CombinedResult finish(Method m, double stat, double p, unsigned flags) {
  if (p < 0.0) {
    p = 0.0;
    flags |= kFlagClamped;
  } else if (p > 1.0) {
    p = 1.0;
    flags |= kFlagClamped;
  }
  if (std::isinf(stat)) flags |= kFlagInfiniteStat;
  return CombinedResult{m, stat, p, flags};
}

}  // namespace

CombinedResult tcct(std::span<const double> p, std::span<const double> w) {
  validate_pvalues(p);
  validate_weights(p, w);
  const double uniform = 1.0 / static_cast<double>(p.size());
  bool all_truncated = true;
  bool infinite = false;
  double stat = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= 0.5) continue;  // strict indicator: p = 0.5 contributes zero
    all_truncated = false;
    const double wi = weight_at(w, i, uniform);
    if (wi == 0.0) continue;
    if (p[i] == 0.0) {
      infinite = true;
      break;
    }
    stat += wi * cauchy_transform(p[i]);
  }
  if (infinite) return finish(Method::kTcct, kInf, 0.0, kFlagInfiniteStat);
  if (all_truncated) return finish(Method::kTcct, 0.0, 0.5, kFlagAllTruncated);
  return finish(Method::kTcct, stat, cauchy_survival(stat), 0);
}

CombinedResult cct(std::span<const double> p, std::span<const double> w) {
  validate_pvalues(p);
  validate_weights(p, w);
  const double uniform = 1.0 / static_cast<double>(p.size());
  bool has_zero = false;
  bool has_one = false;
  for (size_t i = 0; i < p.size(); ++i) {
    const double wi = weight_at(w, i, uniform);
    if (wi == 0.0) continue;
    if (p[i] == 0.0) has_zero = true;
    if (p[i] == 1.0) has_one = true;
  }
  if (has_zero && has_one) throw CctIndeterminateError();
  if (has_zero) return finish(Method::kCct, kInf, 0.0, kFlagInfiniteStat);
  if (has_one) return finish(Method::kCct, -kInf, 1.0, kFlagInfiniteStat);
  double stat = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    const double wi = weight_at(w, i, uniform);
    if (wi == 0.0) continue;
    stat += wi * cauchy_transform(p[i]);
  }
  return finish(Method::kCct, stat, cauchy_survival(stat), 0);
}

CombinedResult fisher(std::span<const double> p) {
  validate_pvalues(p);
  double stat = 0.0;
  for (double v : p) {
    if (v == 0.0) return finish(Method::kFisher, kInf, 0.0, kFlagInfiniteStat);
    stat += std::log(v);
  }
  stat *= -2.0;
  const int df = 2 * static_cast<int>(p.size());
  return finish(Method::kFisher, stat, chisq_even_sf(stat, df), 0);
}

CombinedResult tippett(std::span<const double> p) {
  validate_pvalues(p);
  const double mn = *std::min_element(p.begin(), p.end());
  const double d = static_cast<double>(p.size());
  // 1 - (1 - mn)^d without cancellation for tiny mn.
  const double combined = -std::expm1(d * std::log1p(-mn));
  return finish(Method::kTippett, mn, combined, 0);
}

CombinedResult t_min(std::span<const double> p) {
  validate_pvalues(p);
  const double mn = *std::min_element(p.begin(), p.end());
  const double d = static_cast<double>(p.size());
  const double stat = cauchy_transform(mn) / d;
  return finish(Method::kTMin, stat, cauchy_survival(stat), 0);
}

CombinedResult combine(Method m, std::span<const double> p, std::span<const double> w) {
  switch (m) {
    case Method::kTcct: return tcct(p, w);
    case Method::kCct: return cct(p, w);
    case Method::kFisher: return fisher(p);
    case Method::kTippett: return tippett(p);
    case Method::kTMin: return t_min(p);
  }
  throw std::logic_error("unknown method");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::kTcct: return "TCCT";
    case Method::kCct: return "CCT";
    case Method::kFisher: return "Fisher";
    case Method::kTippett: return "Tippett";
    case Method::kTMin: return "TMin";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "tcct") return Method::kTcct;
  if (lower == "cct") return Method::kCct;
  if (lower == "fisher") return Method::kFisher;
  if (lower == "tippett") return Method::kTippett;
  if (lower == "tmin" || lower == "t_min") return Method::kTMin;
  return std::nullopt;
}

std::string flags_to_string(unsigned flags) {
  std::string out;
  auto add = [&out](const char* name) {
    if (!out.empty()) out += '|';
    out += name;
  };
  if (flags & kFlagAllTruncated) add("ALL_TRUNCATED");
  if (flags & kFlagInfiniteStat) add("INFINITE_STAT");
  if (flags & kFlagDegenerateInput) add("DEGENERATE_INPUT");
  if (flags & kFlagClamped) add("CLAMPED");
  return out;
}

}  // namespace tcct
