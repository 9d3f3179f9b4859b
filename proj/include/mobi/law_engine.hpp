#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "mobi/equality.hpp"
#include "mobi/errors.hpp"
#include "mobi/law_report.hpp"
#include "mobi/sampling.hpp"

namespace mobi {

// One evaluated instance of a law: the two sides and whether they must
// agree (equations) or must differ (contrapositive cancellation checks).
template <class Out>
struct Check {
  Out lhs;
  Out rhs;
  bool expect_equal = true;
  // Extra context for a violation (intermediate values), built only on failure.
  std::function<std::string()> explain;
};

template <class Out>
Check<Out> equation(Out lhs, Out rhs) {
  return {std::move(lhs), std::move(rhs), true, {}};
}

template <class Out>
Check<Out> distinction(Out lhs, Out rhs) {
  return {std::move(lhs), std::move(rhs), false, {}};
}

template <class Out>
Check<Out> explained(Check<Out> check, std::function<std::string()> explain) {
  check.explain = std::move(explain);
  return check;
}

// nullopt: the tuple does not meet the law's premise and is not counted.
template <class Out>
using Outcome = std::optional<Check<Out>>;

namespace detail {

template <class Tuple, std::size_t... I>
std::string render_inputs(const Tuple& t, const std::array<const char*, sizeof...(I)>& names,
                          std::index_sequence<I...>) {
  std::string out = "{";
  bool first = true;
  [[maybe_unused]] auto one = [&](const char* name, const auto& value) {
    if (!first) out.push_back(',');
    first = false;
    out += '"';
    out += name;
    out += "\":";
    append_json(out, value);
  };
  (one(names[I], std::get<I>(t)), ...);
  out.push_back('}');
  return out;
}

struct Evaluated {
  bool counted = false;
  std::optional<Violation> violation;
};

}  // namespace detail

// Evaluates `fn` on every tuple. Evaluation errors and closure failures on a
// counted tuple are violations of the law; configuration errors propagate.
template <class Out, class... Ts, class Fn>
LawReport run_law(std::string law, const std::vector<std::tuple<Ts...>>& samples,
                  const std::array<const char*, sizeof...(Ts)>& names, const Equality<Out>& eq,
                  const SampleStrategy& strategy, Fn&& fn) {
  using Tuple = std::tuple<Ts...>;
  std::vector<detail::Evaluated> results(samples.size());

  auto evaluate = [&](const Tuple& t) -> detail::Evaluated {
    detail::Evaluated r;
    auto violation = [&](std::string lhs, std::string rhs, double distance, std::string note) {
      r.counted = true;
      r.violation = Violation{detail::render_inputs(t, names, std::index_sequence_for<Ts...>{}),
                              std::move(lhs), std::move(rhs), distance, std::move(note)};
    };
    try {
      Outcome<Out> outcome = std::apply(fn, t);
      if (!outcome) return r;
      r.counted = true;
      const bool same = eq.equal(outcome->lhs, outcome->rhs);
      if (same != outcome->expect_equal) {
        violation(json_text(outcome->lhs), json_text(outcome->rhs),
                  eq.distance(outcome->lhs, outcome->rhs),
                  outcome->explain ? outcome->explain()
                  : outcome->expect_equal ? ""
                                          : "distinct inputs gave equal results");
      }
    } catch (const ClosureError& e) {
      violation(e.value_json(), "null", INFINITY, std::string("closure: ") + e.what());
    } catch (const ConfigurationError&) {
      throw;
    } catch (const Error& e) {
      violation("null", "null", INFINITY, std::string("evaluation error: ") + e.what());
    }
    return r;
  };

  const unsigned workers = std::max(1u, strategy.workers);
  if (workers == 1 || samples.size() < 2 * workers) {
    for (std::size_t i = 0; i < samples.size(); ++i) results[i] = evaluate(samples[i]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    const std::size_t chunk = (samples.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          const std::size_t end = std::min(samples.size(), (w + 1) * chunk);
          for (std::size_t i = w * chunk; i < end; ++i) results[i] = evaluate(samples[i]);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
  }

  LawReport report;
  report.law = std::move(law);
  for (auto& r : results) {
    if (!r.counted) continue;
    ++report.samples;
    if (r.violation) {
      ++report.violation_count;
      if (report.violations.size() < std::max<std::size_t>(1, strategy.max_witnesses))
        report.violations.push_back(std::move(*r.violation));
    }
  }
  return report;
}

// Wraps an operation so that results outside `carrier` raise ClosureError.
template <class Out, class Op>
auto closed(const Carrier<Out>& carrier, Op op) {
  return [&carrier, op](const auto&... args) -> Out {
    Out result = op(args...);
    if (!carrier.has(result))
      throw ClosureError("result outside '" + carrier.name + "'", json_text(result));
    return result;
  };
}

}  // namespace mobi
