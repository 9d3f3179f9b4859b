#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "mobi/carrier.hpp"
#include "mobi/errors.hpp"

namespace mobi {

struct SampleStrategy {
  std::uint64_t seed = 20240917;
  // Random tuples per law, on top of the anchor grid and degenerate tuples.
  std::size_t count = 500;
  // Anchor grid (constants, boundary points) and pairwise-equal tuples.
  bool include_constants = true;
  // Minimum distance for "distinct" premises under approximate backends.
  double separation = 1e-3;
  // Anchor grids larger than this are thinned by a fixed stride.
  std::size_t grid_limit = 4096;
  // All-finite tuple spaces up to this size are enumerated instead of sampled.
  std::size_t exhaustive_limit = 200000;
  // Violations recorded per report; the total is always counted.
  std::size_t max_witnesses = 50;
  // Worker threads used to evaluate a law; results do not depend on it.
  unsigned workers = 1;
};

// FNV-1a, stable across platforms.
inline std::uint64_t stable_hash(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace detail {

template <std::size_t N, class F, std::size_t... I>
void for_each_index_impl(F&& f, std::index_sequence<I...>) {
  (f(std::integral_constant<std::size_t, I>{}), ...);
}

template <std::size_t N, class F>
void for_each_index(F&& f) {
  for_each_index_impl<N>(std::forward<F>(f), std::make_index_sequence<N>{});
}

template <class... Ts, std::size_t... I>
std::tuple<Ts...> draw_tuple(Rng& rng, const std::tuple<const Carrier<Ts>&...>& cs,
                             std::index_sequence<I...>) {
  auto one = [&rng](const auto& c) {
    if (!c.anchors.empty() && below(rng, 5) == 0) return c.anchors[below(rng, c.anchors.size())];
    if (c.draw) return c.draw(rng);
    return c.elements[below(rng, c.elements.size())];
  };
  // Braced init keeps left-to-right evaluation order.
  return std::tuple<Ts...>{one(std::get<I>(cs))...};
}

template <class... Ts, std::size_t... I>
std::tuple<Ts...> pick_from(const std::tuple<const std::vector<Ts>&...>& lists,
                            const std::array<std::size_t, sizeof...(Ts)>& idx,
                            std::index_sequence<I...>) {
  return std::tuple<Ts...>{std::get<I>(lists)[idx[I]]...};
}

}  // namespace detail

// Deterministic tuple sampler. `salt` separates the streams of different
// laws that share one strategy.
template <class... Ts>
std::vector<std::tuple<Ts...>> sample_tuples(const SampleStrategy& s, std::string_view salt,
                                             const Carrier<Ts>&... carriers) {
  constexpr std::size_t N = sizeof...(Ts);
  using Tuple = std::tuple<Ts...>;
  const std::tuple<const Carrier<Ts>&...> cs(carriers...);
  Rng rng(s.seed ^ stable_hash(salt));
  std::vector<Tuple> out;

  auto enumerate = [&](const std::tuple<const std::vector<Ts>&...>& lists, std::size_t limit) {
    std::array<std::size_t, N> sizes{};
    std::size_t total = 1;
    detail::for_each_index<N>([&](auto I) {
      sizes[I] = std::get<I>(lists).size();
      total *= sizes[I];
    });
    if (total == 0) return;
    const std::size_t take = std::min(total, limit);
    for (std::size_t k = 0; k < take; ++k) {
      std::size_t flat = take == total ? k : static_cast<std::size_t>(
                                                  (static_cast<unsigned __int128>(k) * total) / take);
      std::array<std::size_t, N> idx{};
      for (std::size_t p = N; p-- > 0;) {
        idx[p] = flat % sizes[p];
        flat /= sizes[p];
      }
      out.push_back(detail::pick_from<Ts...>(lists, idx, std::index_sequence_for<Ts...>{}));
    }
  };

  if ((carriers.finite() && ...)) {
    const std::array<std::size_t, N> sizes{carriers.elements.size()...};
    std::size_t product = 1;
    bool small = true;
    for (std::size_t n : sizes) {
      if (n != 0 && product > s.exhaustive_limit / n) small = false;
      product *= n;
    }
    if (small && product <= s.exhaustive_limit) {
      enumerate(std::tuple<const std::vector<Ts>&...>(carriers.elements...), product);
      return out;
    }
  }

  if (s.include_constants) {
    enumerate(std::tuple<const std::vector<Ts>&...>(carriers.anchors...), s.grid_limit);

    // Pairwise-equal tuples for every pair of positions over the same carrier.
    const std::size_t per_pair = std::max<std::size_t>(4, s.count / 20);
    detail::for_each_index<N>([&](auto I) {
      detail::for_each_index<N>([&](auto J) {
        if constexpr (I < J && std::is_same_v<std::tuple_element_t<I, Tuple>,
                                              std::tuple_element_t<J, Tuple>>) {
          if (std::get<I>(cs).name != std::get<J>(cs).name) return;
          for (std::size_t k = 0; k < per_pair; ++k) {
            Tuple t = detail::draw_tuple<Ts...>(rng, cs, std::index_sequence_for<Ts...>{});
            std::get<J>(t) = std::get<I>(t);
            out.push_back(std::move(t));
          }
        }
      });
    });
  }

  for (std::size_t k = 0; k < s.count; ++k) {
    out.push_back(detail::draw_tuple<Ts...>(rng, cs, std::index_sequence_for<Ts...>{}));
  }

  for (const auto& t : out) {
    detail::for_each_index<N>([&](auto I) {
      if (!std::get<I>(cs).has(std::get<I>(t))) {
        throw ConfigurationError("sampler for carrier '" + std::get<I>(cs).name +
                                 "' produced a non-member " + json_text(std::get<I>(t)));
      }
    });
  }
  return out;
}

}  // namespace mobi
