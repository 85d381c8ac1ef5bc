#include "geomul/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "geomul/errors.hpp"
#include "geomul/random.hpp"
#include "geomul/report.hpp"
#include "geomul/similarity.hpp"

namespace geomul {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 12> kSuiteNames{{
    {Suite::def1, "def1"},
    {Suite::signs, "signs"},
    {Suite::repeated, "repeated"},
    {Suite::inverse, "inverse"},
    {Suite::order, "order"},
    {Suite::euclid37, "euclid37"},
    {Suite::areas, "areas"},
    {Suite::commut, "commut"},
    {Suite::assoc, "assoc"},
    {Suite::distrib, "distrib"},
    {Suite::fractions, "fractions"},
    {Suite::similar, "similar"},
}};

using Reports = std::vector<TheoremReport>;
using Check = std::function<TheoremReport()>;

// An engine error inside a check is a failed case, not a crash.
TheoremReport guarded(const std::string& id, const std::vector<std::string>& inputs, const Check& check) {
  try {
    return check();
  } catch (const EngineError& e) {
    TheoremReport r;
    r.theorem_id = id;
    r.inputs = inputs;
    r.trace.op = id;
    r.trace.inputs = inputs;
    r.verdict = Verdict::fail;
    r.detail = e.what();
    return r;
  }
}

std::vector<std::string> strs(std::initializer_list<Rational> rs) {
  std::vector<std::string> out;
  for (const Rational& r : rs) out.push_back(r.to_string());
  return out;
}

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

Triangle tri(long ax, long ay, long bx, long by, long cx, long cy) {
  return Triangle{{ax, ay}, {bx, by}, {cx, cy}};
}

Triangle transform(const Triangle& t, const Rational& k, const RationalRotation& rot, const Point& shift) {
  auto map = [&](const Point& p) { return rot.apply(Point{k * p.x, k * p.y}) + shift; };
  return {map(t.a), map(t.b), map(t.c)};
}

// ---- per-suite case generators -------------------------------------------

void def1_case(Reports& out, const Rational& a, const Rational& b) {
  out.push_back(guarded("definition1", strs({a, b}), [&] { return check_definition1(a, b); }));
}

void signs_case(Reports& out, const Rational& a, const Rational& b) {
  out.push_back(guarded("sign_rules", strs({a, b}), [&] { return check_sign_rules(a, b); }));
}

void repeated_case(Reports& out, const Rational& a, const Rational& b) {
  out.push_back(guarded("repeated_addition", strs({a, b}), [&] { return check_repeated_addition(a, b); }));
}

void inverse_case(Reports& out, const Rational& a) {
  out.push_back(guarded("inverse", strs({a}), [&] { return check_inverse(a); }));
}

void order_case(Reports& out, const Rational& a, const Rational& b) {
  out.push_back(guarded("shrinkage", strs({a, b}), [&] { return check_shrinkage(a, b); }));
}

void euclid_case(Reports& out, const Point& a, const Point& b, const Point& c, const Point& c1) {
  out.push_back(guarded("euclid_I37", {to_string(a), to_string(b), to_string(c), to_string(c1)},
                        [&] { return check_euclid_I37(a, b, c, c1); }));
}

void areas_case(Reports& out, const Rational& a, const Rational& b, const Rational& a1, const Rational& b1) {
  out.push_back(guarded("theorem5", strs({a, b, a1, b1}), [&] { return check_theorem5(a, b, a1, b1); }));
  out.push_back(guarded("theorem6", strs({a, b, a1, b1}), [&] { return check_theorem6(a, b, a1, b1); }));
  out.push_back(guarded("area_label", strs({a, b}), [&] { return check_area_label(RightTriangle(a, b)); }));
}

void commut_case(Reports& out, const Rational& a, const Rational& b) {
  out.push_back(guarded("commutativity", strs({a, b}), [&] { return check_commutativity(a, b); }));
}

void assoc_case(Reports& out, const Rational& a, const Rational& b, const Rational& c) {
  out.push_back(guarded("associativity", strs({a, b, c}), [&] { return check_associativity(a, b, c); }));
}

void distrib_case(Reports& out, const Rational& a, const Rational& b, const Rational& c) {
  out.push_back(guarded("distributivity", strs({a, b, c}), [&] { return check_distributivity(a, b, c); }));
}

void fractions_case(Reports& out, const Rational& a1, const Rational& b1, const Rational& a2,
                    const Rational& b2, const Rational& k) {
  out.push_back(guarded("frac_mul", strs({a1, b1, a2, b2}), [&] { return check_frac_mul(a1, b1, a2, b2); }));
  out.push_back(guarded("frac_identities", strs({a1, b1, k, a2, b2}),
                        [&] { return check_frac_identities(a1, b1, k, a2, b2); }));
}

void similar_case(Reports& out, const Triangle& t1, const Triangle& t2, const std::optional<Rational>& k2) {
  out.push_back(guarded("similarity", {}, [&] { return check_similarity(t1, t2, k2); }));
}

void split_case(Reports& out, const Triangle& t) {
  out.push_back(guarded("split", {}, [&] { return check_split(t); }));
}

std::size_t fixed_cases(Suite suite, Reports& out) {
  switch (suite) {
    case Suite::def1:
      def1_case(out, 2, 4);
      def1_case(out, -2, -4);
      def1_case(out, 2, -4);
      def1_case(out, -2, 4);
      def1_case(out, q(1, 2), q(1, 3));
      return 5;
    case Suite::signs:
      signs_case(out, 2, 4);
      signs_case(out, 1, 1);
      signs_case(out, q(3, 2), q(5, 7));
      return 3;
    case Suite::repeated:
      repeated_case(out, 2, 4);
      repeated_case(out, 1, 5);
      repeated_case(out, 7, q(-3, 5));
      return 3;
    case Suite::inverse:
      inverse_case(out, 1);
      inverse_case(out, 2);
      inverse_case(out, -4);
      return 3;
    case Suite::order:
      order_case(out, q(1, 2), 10);
      order_case(out, q(9999, 10000), 1);
      order_case(out, q(1, 3), q(1, 3));
      return 3;
    case Suite::euclid37:
      euclid_case(out, {0, 0}, {5, 0}, {1, 3}, {4, 3});
      euclid_case(out, {0, 0}, {5, 0}, {1, 3}, {4, 2});
      return 2;
    case Suite::areas:
      areas_case(out, 2, 4, 1, 8);
      areas_case(out, 2, 4, 1, 7);
      areas_case(out, 2, 4, 2, 4);
      areas_case(out, 2, 4, 3, 3);
      areas_case(out, q(3, 2), q(4, 3), 1, 2);
      return 5;
    case Suite::commut:
      commut_case(out, 2, 4);
      commut_case(out, 0, 5);
      commut_case(out, q(-3, 7), q(5, 2));
      return 3;
    case Suite::assoc:
      assoc_case(out, 2, 3, 4);
      assoc_case(out, 1, 5, 7);
      assoc_case(out, -2, q(3, 5), q(-7, 3));
      return 3;
    case Suite::distrib:
      distrib_case(out, 1, 2, 3);
      distrib_case(out, 2, 1, 1);
      distrib_case(out, -2, q(5, 3), q(-1, 3));
      return 3;
    case Suite::fractions:
      fractions_case(out, 1, 2, 1, 3, 3);
      fractions_case(out, 2, 3, 3, 2, 5);
      fractions_case(out, 5, 4, -8, 15, 2);
      fractions_case(out, 2, 4, 1, 2, 3);
      fractions_case(out, 2, 4, 1, 3, 3);
      return 5;
    case Suite::similar: {
      Triangle t345 = tri(0, 0, 3, 0, 0, 4);
      similar_case(out, t345, tri(0, 0, 6, 0, 0, 8), Rational(4));
      similar_case(out, t345, t345, Rational(1));
      similar_case(out, t345, transform(t345, q(7, 2), RationalRotation::from_triple(2, 1), {0, 0}),
                   q(49, 4));
      similar_case(out, t345, tri(0, 0, 6, 0, 0, 4), std::nullopt);
      split_case(out, tri(0, 0, 4, 0, 1, 2));
      split_case(out, tri(0, 0, 4, 0, 0, 3));
      split_case(out, tri(0, 0, 2, 0, 1, 5));
      return 7;
    }
  }
  return 0;
}

void random_case(Suite suite, ScalarSampler& s, Reports& out) {
  switch (suite) {
    case Suite::def1: {
      Rational a = s.any(), b = s.any();
      def1_case(out, a, b);
      break;
    }
    case Suite::signs: {
      Rational a = s.positive(), b = s.positive();
      signs_case(out, a, b);
      break;
    }
    case Suite::repeated: {
      Rational a = s.integer(1, 50);
      Rational b = s.any();
      repeated_case(out, a, b);
      break;
    }
    case Suite::inverse:
      inverse_case(out, s.nonzero());
      break;
    case Suite::order: {
      Rational a = s.unit_interval(), b = s.positive();
      order_case(out, a, b);
      break;
    }
    case Suite::euclid37: {
      // C1 = C + t(B - A) + (h - 1)(C - A): same side as C for h > 0, parallel iff h = 1.
      Point a = s.point(), b = s.point();
      while (b == a) b = s.point();
      Point c = s.point();
      while (line_through(a, b).contains(c)) c = s.point();
      bool parallel = s.integer(0, 1) == 0;
      Rational t = s.any();
      Rational h = 1;
      if (parallel) {
        while (t.is_zero()) t = s.any();  // t = 0 would put C1 on C
      } else {
        do h = s.positive(); while (h == 1);
      }
      Point ab = b - a, ac = c - a;
      Point c1{a.x + t * ab.x + h * ac.x, a.y + t * ab.y + h * ac.y};
      euclid_case(out, a, b, c, c1);
      break;
    }
    case Suite::areas: {
      Rational a = s.positive(), b = s.positive(), a1 = s.positive();
      // Every other case shares the product, so both sides of each iff get exercised.
      Rational b1 = s.integer(0, 1) == 0 ? (a * b) / a1 : s.positive();
      areas_case(out, a, b, a1, b1);
      break;
    }
    case Suite::commut: {
      Rational a = s.any(), b = s.any();
      commut_case(out, a, b);
      break;
    }
    case Suite::assoc: {
      Rational a = s.any(), b = s.any(), c = s.any();
      assoc_case(out, a, b, c);
      break;
    }
    case Suite::distrib: {
      Rational a = s.any(), b = s.any(), c = s.any();
      distrib_case(out, a, b, c);
      break;
    }
    case Suite::fractions: {
      Rational a1 = s.any(), b1 = s.nonzero(), a2 = s.any(), b2 = s.nonzero(), k = s.nonzero();
      // Half the cases make a2/b2 equal to a1/b1.
      if (s.integer(0, 1) == 0) a2 = (a1 * b2) / b1;
      fractions_case(out, a1, b1, a2, b2, k);
      break;
    }
    case Suite::similar: {
      Triangle t = s.triangle();
      Rational k = s.positive();
      RationalRotation rot = RationalRotation::random(s);
      Point shift = s.point();
      Triangle image = transform(t, k, rot, shift);
      similar_case(out, t, image, k * k);
      Triangle bent = image;
      bent.c = bent.c + Point{s.nonzero(), s.nonzero()};
      if (!bent.is_degenerate()) similar_case(out, t, bent, std::nullopt);
      split_case(out, s.triangle());
      break;
    }
  }
}

}  // namespace

std::string_view to_string(Suite s) noexcept {
  for (const auto& [suite, name] : kSuiteNames) {
    if (suite == s) return name;
  }
  return "unknown";
}

std::optional<Suite> suite_from_string(std::string_view name) noexcept {
  for (const auto& [suite, n] : kSuiteNames) {
    if (n == name) return suite;
  }
  return std::nullopt;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> v;
    for (const auto& [suite, name] : kSuiteNames) v.push_back(suite);
    return v;
  }();
  return suites;
}

std::size_t SuiteOutcome::passed() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.passed(); }));
}

std::size_t SuiteOutcome::failed() const { return reports.size() - passed(); }

SuiteOutcome run_suite(Suite suite, std::size_t cases, std::uint64_t seed) {
  SuiteOutcome outcome;
  outcome.suite = suite;
  outcome.fixed_cases = fixed_cases(suite, outcome.reports);
  outcome.random_cases = cases;
  ScalarSampler sampler(seed, static_cast<std::uint64_t>(suite) + 1);
  for (std::size_t i = 0; i < cases; ++i) random_case(suite, sampler, outcome.reports);
  for (TheoremReport& r : outcome.reports) r.trace.seed = static_cast<std::int64_t>(seed);
  return outcome;
}

std::vector<SuiteOutcome> run_suites(const SuiteConfig& config) {
  std::vector<SuiteOutcome> out;
  out.reserve(config.suites.size());
  for (Suite s : config.suites) out.push_back(run_suite(s, config.cases, config.seed));
  return out;
}

nlohmann::json suites_to_json(const SuiteConfig& config, const std::vector<SuiteOutcome>& outcomes,
                              bool failures_only) {
  nlohmann::json suites = nlohmann::json::array();
  for (const SuiteOutcome& o : outcomes) {
    nlohmann::json reports = nlohmann::json::array();
    for (const TheoremReport& r : o.reports) {
      if (failures_only && r.passed()) continue;
      reports.push_back(report_to_json(r));
    }
    suites.push_back({{"suite", to_string(o.suite)},
                      {"fixed_cases", o.fixed_cases},
                      {"random_cases", o.random_cases},
                      {"passed", o.passed()},
                      {"failed", o.failed()},
                      {"reports", std::move(reports)}});
  }
  return {{"seed", config.seed}, {"cases", config.cases}, {"suites", std::move(suites)}};
}

}  // namespace geomul
