#include "geodetic/subset_search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace geodetic {

namespace {

constexpr std::uint64_t kHuge = std::uint64_t{1} << 62;

// Binomial coefficient saturated at kHuge.
std::uint64_t comb_count(std::uint64_t p, std::uint64_t s) {
  if (s > p) return 0;
  s = std::min(s, p - s);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= s; ++i) {
    if (result > kHuge / (p - s + i)) return kHuge;
    result = result * (p - s + i) / i;
  }
  return std::min(result, kHuge);
}

// Lexicographic successor of an increasing index tuple over [0, p).
bool next_combination(std::vector<std::size_t>& c, std::size_t p) {
  const std::size_t s = c.size();
  if (s == 0) return false;
  std::size_t i = s;
  while (i-- > 0) {
    if (c[i] + (s - i) < p) {
      ++c[i];
      for (std::size_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Combination of lex rank `rank` among the s-subsets of [0, p).
std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t p,
                                            std::size_t s) {
  std::vector<std::size_t> c(s);
  std::size_t v = 0;
  for (std::size_t i = 0; i < s; ++i) {
    while (true) {
      const std::uint64_t below = comb_count(p - 1 - v, s - 1 - i);
      if (rank < below) break;
      rank -= below;
      ++v;
    }
    c[i] = v++;
  }
  return c;
}

void set_bit(std::vector<std::uint64_t>& mask, int bit) {
  mask[static_cast<std::size_t>(bit) >> 6] |=
      std::uint64_t{1} << (static_cast<std::size_t>(bit) & 63);
}

}  // namespace

MinimumExtensionSearch::MinimumExtensionSearch(const Digraph& d,
                                               std::vector<int> forced,
                                               std::vector<int> pool)
    : d_(d), forced_(std::move(forced)), pool_(std::move(pool)) {
  n_ = d_.vertex_count();
  words_ = (static_cast<std::size_t>(n_) + 63) / 64;
  std::sort(forced_.begin(), forced_.end());
  std::sort(pool_.begin(), pool_.end());

  fwd_.resize(static_cast<std::size_t>(n_));
  bwd_.resize(static_cast<std::size_t>(n_));
  field_once_ = std::make_unique<std::once_flag[]>(static_cast<std::size_t>(n_));
  add_cover_.resize(pool_.size());
  add_once_ = std::make_unique<std::once_flag[]>(pool_.size());

  base_cover_.assign(words_, 0);
  for (int u : forced_) {
    for (int v : forced_) accumulate_pair(u, v, base_cover_);
  }
}

void MinimumExtensionSearch::ensure_fields(int v) {
  std::call_once(field_once_[static_cast<std::size_t>(v)], [&] {
    auto run = [&](bool forward) {
      std::vector<std::int32_t> dist(static_cast<std::size_t>(n_), -1);
      dist[static_cast<std::size_t>(v)] = 0;
      std::vector<int> frontier{v}, next;
      std::int32_t level = 0;
      while (!frontier.empty()) {
        ++level;
        next.clear();
        for (int x : frontier) {
          const auto nbrs = forward ? d_.out_neighbors(x) : d_.in_neighbors(x);
          for (int w : nbrs) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (dw == -1) {
              dw = level;
              next.push_back(w);
            }
          }
        }
        frontier.swap(next);
      }
      return dist;
    };
    fwd_[static_cast<std::size_t>(v)] = run(true);
    bwd_[static_cast<std::size_t>(v)] = run(false);
  });
}

void MinimumExtensionSearch::accumulate_pair(int u, int v, Mask& mask) {
  ensure_fields(u);
  ensure_fields(v);
  const auto& fu = fwd_[static_cast<std::size_t>(u)];
  const auto& bv = bwd_[static_cast<std::size_t>(v)];
  const std::int32_t total = fu[static_cast<std::size_t>(v)];
  if (total < 0) return;  // v unreachable from u: empty interval
  for (int w = 0; w < n_; ++w) {
    const std::int32_t a = fu[static_cast<std::size_t>(w)];
    const std::int32_t b = bv[static_cast<std::size_t>(w)];
    if (a >= 0 && b >= 0 && a + b == total) set_bit(mask, w);
  }
}

void MinimumExtensionSearch::ensure_add_cover(std::size_t pool_index) {
  std::call_once(add_once_[pool_index], [&] {
    Mask mask(words_, 0);
    const int x = pool_[pool_index];
    accumulate_pair(x, x, mask);
    for (int f : forced_) {
      accumulate_pair(x, f, mask);
      accumulate_pair(f, x, mask);
    }
    add_cover_[pool_index] = std::move(mask);
  });
}

bool MinimumExtensionSearch::mask_full(const Mask& mask) const {
  const std::size_t full_words = static_cast<std::size_t>(n_) / 64;
  for (std::size_t i = 0; i < full_words; ++i) {
    if (mask[i] != ~std::uint64_t{0}) return false;
  }
  const std::size_t rem = static_cast<std::size_t>(n_) & 63;
  if (rem != 0) {
    const std::uint64_t want = (std::uint64_t{1} << rem) - 1;
    if ((mask[full_words] & want) != want) return false;
  }
  return true;
}

bool MinimumExtensionSearch::covers(const std::vector<std::size_t>& combo,
                                    Mask& scratch) {
  scratch = base_cover_;
  for (std::size_t idx : combo) {
    ensure_add_cover(idx);
    const Mask& add = add_cover_[idx];
    for (std::size_t w = 0; w < words_; ++w) scratch[w] |= add[w];
  }
  for (std::size_t i = 0; i < combo.size(); ++i) {
    for (std::size_t j = i + 1; j < combo.size(); ++j) {
      accumulate_pair(pool_[combo[i]], pool_[combo[j]], scratch);
      accumulate_pair(pool_[combo[j]], pool_[combo[i]], scratch);
    }
  }
  return mask_full(scratch);
}

MinimumExtensionSearch::Outcome MinimumExtensionSearch::run(int max_extra,
                                                            int threads) {
  Outcome out;
  out.cover_checks = 1;  // the forced-only baseline below
  const std::size_t p = pool_.size();
  const std::size_t limit =
      std::min<std::size_t>(p, max_extra < 0 ? p : static_cast<std::size_t>(max_extra));

  Mask scratch(words_, 0);
  if (mask_full(base_cover_)) {
    out.extension = std::vector<int>{};
    return out;
  }

  for (std::size_t s = 1; s <= limit; ++s) {
    const std::uint64_t total = comb_count(p, s);
    const int workers =
        total >= 4 && total < kHuge ? std::max(1, threads) : 1;
    if (workers == 1) {
      std::vector<std::size_t> combo(s);
      for (std::size_t i = 0; i < s; ++i) combo[i] = i;
      do {
        ++out.subsets_examined;
        ++out.cover_checks;
        if (covers(combo, scratch)) {
          std::vector<int> ext;
          ext.reserve(s);
          for (std::size_t idx : combo) ext.push_back(pool_[idx]);
          out.extension = std::move(ext);
          return out;
        }
      } while (next_combination(combo, p));
      continue;
    }

    std::atomic<std::uint64_t> best_rank{kHuge};
    std::atomic<std::uint64_t> examined{0};
    std::vector<std::thread> pool_threads;
    const std::uint64_t chunk =
        (total + static_cast<std::uint64_t>(workers) - 1) /
        static_cast<std::uint64_t>(workers);
    for (int t = 0; t < workers; ++t) {
      pool_threads.emplace_back([&, t] {
        const std::uint64_t begin = chunk * static_cast<std::uint64_t>(t);
        if (begin >= total) return;
        const std::uint64_t end = std::min(total, begin + chunk);
        std::vector<std::size_t> combo = unrank_combination(begin, p, s);
        Mask local_scratch(words_, 0);
        std::uint64_t local_examined = 0;
        for (std::uint64_t rank = begin; rank < end; ++rank) {
          if (rank >= best_rank.load(std::memory_order_relaxed)) break;
          ++local_examined;
          if (covers(combo, local_scratch)) {
            std::uint64_t seen = best_rank.load(std::memory_order_relaxed);
            while (rank < seen && !best_rank.compare_exchange_weak(
                                      seen, rank, std::memory_order_relaxed)) {
            }
            break;
          }
          if (!next_combination(combo, p)) break;
        }
        examined.fetch_add(local_examined, std::memory_order_relaxed);
      });
    }
    for (auto& th : pool_threads) th.join();
    out.subsets_examined += examined.load();
    out.cover_checks += examined.load();
    const std::uint64_t hit = best_rank.load();
    if (hit < kHuge) {
      const std::vector<std::size_t> combo = unrank_combination(hit, p, s);
      std::vector<int> ext;
      ext.reserve(s);
      for (std::size_t idx : combo) ext.push_back(pool_[idx]);
      out.extension = std::move(ext);
      return out;
    }
  }
  return out;
}

}  // namespace geodetic
