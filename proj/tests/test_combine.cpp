// Tests for the p-value combination methods.
#include "tcct/combine.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tcct/cauchy.hpp"
#include "tcct/rng.hpp"
#include "tcct/special.hpp"

using tcct::Method;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("truncated combination of a mixed pair") {
  const std::vector<double> p{0.25, 0.75};
  const std::vector<double> w{0.5, 0.5};
  const auto r = tcct::tcct(p, w);
  CHECK(r.method == Method::kTcct);
  CHECK(std::fabs(r.statistic - 0.5) <= 1e-15);
  CHECK(std::fabs(r.p_combined - 0.352416) <= 1e-6);
  CHECK(r.flags == 0);
}

TEST_CASE("equal p-values combine to themselves") {
  const std::vector<double> p(100, 0.01);
  const auto r = tcct::tcct(p, {});
  CHECK(std::fabs(r.statistic - 31.820515953773958) <= 1e-10);
  CHECK(std::fabs(r.p_combined - 0.01) <= 1e-6);
  const auto c = tcct::cct(p, {});
  CHECK(std::fabs(c.p_combined - 0.01) <= 1e-6);
}

TEST_CASE("single p-value passes through unchanged") {
  for (double p : {1e-8, 0.01, 0.3, 0.499}) {
    const std::vector<double> one{p};
    const auto r = tcct::tcct(one, {});
    CHECK(std::fabs(r.p_combined - p) <= 1e-12);
    const auto c = tcct::cct(one, {});
    CHECK(std::fabs(c.p_combined - p) <= 1e-12);
  }
}

TEST_CASE("all p-values above one half truncate to the null result") {
  const std::vector<double> p{0.5, 0.73, 0.99, 1.0};
  const auto r = tcct::tcct(p, {});
  CHECK(r.statistic == 0.0);
  CHECK(r.p_combined == 0.5);
  CHECK((r.flags & tcct::kFlagAllTruncated) != 0);
}

TEST_CASE("zero p-value forces an infinite statistic") {
  const auto r = tcct::tcct(std::vector<double>{0.0, 0.7}, {});
  CHECK(r.statistic == kInf);
  CHECK(r.p_combined == 0.0);
  CHECK((r.flags & tcct::kFlagInfiniteStat) != 0);
  const auto c = tcct::cct(std::vector<double>{0.0, 0.7}, {});
  CHECK(c.statistic == kInf);
  CHECK(c.p_combined == 0.0);
}

TEST_CASE("unit p-value drives the untruncated statistic to minus infinity") {
  const auto c = tcct::cct(std::vector<double>{1e-5, 1.0}, {});
  CHECK(c.statistic == -kInf);
  CHECK(c.p_combined == 1.0);
  CHECK((c.flags & tcct::kFlagInfiniteStat) != 0);
  // The truncated version ignores the unit p-value instead.
  const auto r = tcct::tcct(std::vector<double>{1e-5, 1.0}, {});
  CHECK(std::isfinite(r.statistic));
  CHECK(r.p_combined < 1e-4);
}

TEST_CASE("simultaneous zero and one p-values are indeterminate for the untruncated sum") {
  CHECK_THROWS_AS((void)tcct::cct(std::vector<double>{0.0, 1.0}, {}),
                  tcct::CctIndeterminateError);
  CHECK_THROWS_AS((void)tcct::cct(std::vector<double>{0.0, 1.0}, {}), std::domain_error);
  // Zero weight on the offending entry defuses it.
  const std::vector<double> p{0.0, 1.0, 0.2};
  const std::vector<double> w{0.0, 0.0, 1.0};
  const auto c = tcct::cct(p, w);
  CHECK(std::fabs(c.p_combined - 0.2) <= 1e-12);
}

TEST_CASE("opposite transforms cancel in the untruncated sum") {
  const auto c = tcct::cct(std::vector<double>{0.25, 0.75}, {});
  CHECK(c.statistic == 0.0);
  CHECK(c.p_combined == 0.5);
}

TEST_CASE("fisher reference values") {
  const auto r = tcct::fisher(std::vector<double>{0.5, 0.5});
  CHECK(std::fabs(r.statistic - 2.772588722239781) <= 1e-12);
  CHECK(std::fabs(r.p_combined - 0.59657359027997267) <= 1e-9);
  const auto one = tcct::fisher(std::vector<double>{1.0});
  CHECK(one.statistic == 0.0);
  CHECK(one.p_combined == 1.0);
  const auto zero = tcct::fisher(std::vector<double>{0.3, 0.0});
  CHECK(zero.statistic == kInf);
  CHECK(zero.p_combined == 0.0);
  CHECK((zero.flags & tcct::kFlagInfiniteStat) != 0);
}

TEST_CASE("tippett reference values") {
  const auto r = tcct::tippett(std::vector<double>{0.1, 0.9});
  CHECK(r.statistic == 0.1);
  CHECK(std::fabs(r.p_combined - 0.19) <= 1e-15);
  const std::vector<double> tiny(100, 1e-8);
  const auto t = tcct::tippett(tiny);
  CHECK(std::fabs(t.p_combined / 1e-6 - 1.0) <= 0.01);
}

TEST_CASE("minimum-based truncated statistic") {
  const std::vector<double> p{0.2, 0.4, 0.6};
  const auto r = tcct::t_min(p);
  CHECK(r.statistic == tcct::cauchy_transform(0.2) / 3.0);
  CHECK(r.p_combined == tcct::cauchy_survival(r.statistic));
  std::vector<double> deep(100, 0.3);
  deep[42] = 1e-9;
  const auto d = tcct::t_min(deep);
  CHECK(std::fabs(d.p_combined / 1e-7 - 1.0) <= 0.01);
}

TEST_CASE("truncated statistic dominates the untruncated one") {
  tcct::RngStream rng(20240, 101);
  for (int trial = 0; trial < 10000; ++trial) {
    const int d = 1 + static_cast<int>(rng.uniform01() * 200.0);
    std::vector<double> p(d);
    for (double& v : p) v = rng.uniform01();
    const auto trunc = tcct::tcct(p, {});
    const auto full = tcct::cct(p, {});
    CHECK(trunc.statistic >= full.statistic);
    CHECK(trunc.p_combined <= full.p_combined);
  }
}

TEST_CASE("combined p-value is monotone in each input") {
  const std::vector<double> base{0.02, 0.2, 0.35, 0.6, 0.8};
  for (size_t i = 0; i < base.size(); ++i) {
    double prev = -1.0;
    for (double q = 0.001; q < 1.0; q += 0.02) {
      std::vector<double> p = base;
      p[i] = q;
      const double combined = tcct::tcct(p, {}).p_combined;
      CHECK(combined >= prev - 1e-14);
      prev = combined;
    }
  }
}

TEST_CASE("components above one half never change the truncated result") {
  const std::vector<double> a{0.3, 0.6};
  const std::vector<double> b{0.3, 0.9};
  const std::vector<double> wu{0.5, 0.5};
  const auto ra = tcct::tcct(a, wu);
  const auto rb = tcct::tcct(b, wu);
  CHECK(ra.statistic == rb.statistic);
  CHECK(ra.p_combined == rb.p_combined);
  // Splitting the truncated mass over more components is also invisible.
  const std::vector<double> c{0.3, 0.6, 0.9};
  const std::vector<double> wc{0.5, 0.25, 0.25};
  const auto rc = tcct::tcct(c, wc);
  CHECK(rc.statistic == ra.statistic);
  CHECK(rc.p_combined == ra.p_combined);
  // A zero-weight component below one half is likewise invisible.
  const std::vector<double> e{0.3, 0.01, 0.6};
  const std::vector<double> we{0.5, 0.0, 0.5};
  const auto re = tcct::tcct(e, we);
  CHECK(re.statistic == ra.statistic);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS((void)tcct::tcct(std::vector<double>{}, {}), std::invalid_argument);
  CHECK_THROWS_AS((void)tcct::tcct(std::vector<double>{-0.1}, {}), std::domain_error);
  CHECK_THROWS_AS((void)tcct::tcct(std::vector<double>{1.1}, {}), std::domain_error);
  const std::vector<double> p{0.2, 0.4};
  CHECK_THROWS_AS((void)tcct::tcct(p, std::vector<double>{0.5}), std::invalid_argument);
  CHECK_THROWS_AS((void)tcct::tcct(p, std::vector<double>{0.7, 0.7}), std::domain_error);
  CHECK_THROWS_AS((void)tcct::tcct(p, std::vector<double>{-0.5, 1.5}), std::domain_error);
}

TEST_CASE("method names and parsing") {
  CHECK(std::string(tcct::method_name(Method::kTcct)) == "TCCT");
  CHECK(std::string(tcct::method_name(Method::kCct)) == "CCT");
  CHECK(std::string(tcct::method_name(Method::kFisher)) == "Fisher");
  CHECK(std::string(tcct::method_name(Method::kTippett)) == "Tippett");
  CHECK(std::string(tcct::method_name(Method::kTMin)) == "TMin");
  CHECK(tcct::parse_method("tcct") == Method::kTcct);
  CHECK(tcct::parse_method("TCCT") == Method::kTcct);
  CHECK(tcct::parse_method("Fisher") == Method::kFisher);
  CHECK(tcct::parse_method("tmin") == Method::kTMin);
  CHECK(tcct::parse_method("t_min") == Method::kTMin);
  CHECK(!tcct::parse_method("stouffer").has_value());
}

TEST_CASE("flag rendering") {
  CHECK(tcct::flags_to_string(0).empty());
  CHECK(tcct::flags_to_string(tcct::kFlagAllTruncated) == "ALL_TRUNCATED");
  CHECK(tcct::flags_to_string(tcct::kFlagAllTruncated | tcct::kFlagClamped) ==
        "ALL_TRUNCATED|CLAMPED");
  CHECK(tcct::flags_to_string(tcct::kFlagInfiniteStat | tcct::kFlagDegenerateInput) ==
        "INFINITE_STAT|DEGENERATE_INPUT");
}

TEST_CASE("dispatcher routes every method") {
  const std::vector<double> p{0.1, 0.2, 0.8};
  for (Method m : {Method::kTcct, Method::kCct, Method::kFisher, Method::kTippett,
                   Method::kTMin}) {
    const auto r = tcct::combine(m, p, {});
    CHECK(r.method == m);
    CHECK(r.p_combined >= 0.0);
    CHECK(r.p_combined <= 1.0);
  }
}

TEST_CASE("null calibration of the truncated method at d = 100") {
  // With 100 independent two-sided normal p-values, the truncated
  // combination is slightly anti-conservative at moderate levels; the
  // rejection rates below are the frozen reference rates for this design.
  tcct::RngStream rng(20240, 555);
  const int d = 100;
  const int reps = 100000;
  std::vector<double> p(d);
  int hits_01 = 0, hits_001 = 0;
  for (int r = 0; r < reps; ++r) {
    for (int i = 0; i < d; ++i) {
      p[i] = 2.0 * tcct::normal_sf(std::fabs(rng.normal()));
    }
    const double combined = tcct::tcct(p, {}).p_combined;
    if (combined <= 0.01) ++hits_01;
    if (combined <= 0.001) ++hits_001;
  }
  const auto rate = [&](int hits) { return static_cast<double>(hits) / reps; };
  const auto se = [&](double target) { return std::sqrt(target * (1.0 - target) / reps); };
  CHECK(std::fabs(rate(hits_01) - 0.01121) <= 3.0 * se(0.01121));
  CHECK(std::fabs(rate(hits_001) - 0.00097) <= 3.0 * se(0.00097));
}

TEST_CASE("classic combiners are exact under independent uniforms") {
  tcct::RngStream rng(20240, 556);
  const int d = 50;
  const int reps = 10000;
  std::vector<double> p(d);
  std::vector<double> fisher_ps, tippett_ps;
  fisher_ps.reserve(reps);
  tippett_ps.reserve(reps);
  for (int r = 0; r < reps; ++r) {
    for (double& v : p) v = rng.uniform01();
    fisher_ps.push_back(tcct::fisher(p).p_combined);
    tippett_ps.push_back(tcct::tippett(p).p_combined);
  }
  CHECK(oracle::ks_uniform(std::move(fisher_ps)) < oracle::ks_threshold(0.01, reps));
  CHECK(oracle::ks_uniform(std::move(tippett_ps)) < oracle::ks_threshold(0.01, reps));
}

TEST_CASE("cauchy tail approximates the exact pair tail") {
  // For two independent normal scores, the exact tail of the averaged
  // truncated transform is available by quadrature; the reported combined
  // p-value is the Cauchy tail and must track it closely for large t.
  const double t100 = oracle::truncated_pair_tail(100.0);
  const double t1e3 = oracle::truncated_pair_tail(1000.0);
  const double t1e4 = oracle::truncated_pair_tail(10000.0);
  // Quadrature self-check against frozen values.
  const double pi = 3.14159265358979323846;
  CHECK(std::fabs(100.0 * pi * t100 - 1.00841) <= 2e-4);
  CHECK(std::fabs(1000.0 * pi * t1e3 - 1.00121) <= 2e-4);
  CHECK(std::fabs(10000.0 * pi * t1e4 - 1.00016) <= 2e-4);
  for (double t : {100.0, 1000.0, 10000.0}) {
    const double exact = oracle::truncated_pair_tail(t);
    const double reported = tcct::cauchy_survival(t);
    CHECK(std::fabs(reported / exact - 1.0) <= 0.05);
  }
}
