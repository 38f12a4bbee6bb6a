#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gdeutsch {

/// Largest function count (M^N) that enumeration will walk unless overridden.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// A total function f : {0..N-1} -> {0..M-1}, stored densely as f(0)..f(N-1).
class FunctionSpec {
 public:
  /// Throws InvalidArgument if values is empty, m_range is zero, or any value
  /// is >= m_range.
  FunctionSpec(std::uint32_t m_range, std::vector<std::uint32_t> values);

  std::uint32_t n_domain() const { return static_cast<std::uint32_t>(values_.size()); }
  std::uint32_t m_range() const { return m_range_; }
  std::span<const std::uint32_t> values() const { return values_; }
  std::uint32_t operator[](std::size_t n) const { return values_[n]; }

  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;

 private:
  std::uint32_t m_range_;
  std::vector<std::uint32_t> values_;
};

/// Row-occupancy classification (j_0..j_N): j_l counts rows of the function
/// matrix holding exactly l ones.
struct RowProfile {
  std::vector<std::uint32_t> counts;

  std::uint32_t n_domain() const { return static_cast<std::uint32_t>(counts.size()) - 1; }

  friend auto operator<=>(const RowProfile&, const RowProfile&) = default;
};

/// True iff profile satisfies 0 <= j_l <= M, sum l*j_l = N and sum j_l = M.
bool is_valid_profile(const RowProfile& profile, std::uint32_t n_domain, std::uint32_t m_range);

/// Canonical order: lexicographic on (j_N, ..., j_1), larger first.
bool canonical_before(const RowProfile& a, const RowProfile& b);

/// sum_l j_l * l^2, i.e. the sum of squared row sums of any function with this
/// profile.
std::uint64_t profile_square_sum(const RowProfile& profile);

FunctionSpec make_constant(std::uint32_t n_domain, std::uint32_t m_range, std::uint32_t value);

std::vector<std::uint32_t> row_sums(const FunctionSpec& f);
RowProfile row_profile(const FunctionSpec& f);
bool is_constant(const FunctionSpec& f);

std::uint64_t square_sum(std::span<const std::uint32_t> sums);

/// M^N, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> function_count(std::uint32_t n_domain, std::uint32_t m_range);

/// Throws ResourceLimit unless M^N <= cap. Returns M^N.
std::uint64_t checked_function_count(std::uint32_t n_domain, std::uint32_t m_range,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// The function whose value sequence, read as a base-M numeral with f(0)
/// most significant, equals rank.
FunctionSpec function_at(std::uint64_t rank, std::uint32_t n_domain, std::uint32_t m_range);
std::uint64_t function_rank(const FunctionSpec& f);

/// Each value drawn independently and uniformly from {0..M-1}.
template <class Rng>
FunctionSpec sample_uniform(std::uint32_t n_domain, std::uint32_t m_range, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, m_range - 1);
  std::vector<std::uint32_t> values(n_domain);
  for (auto& v : values) v = pick(rng);
  return FunctionSpec(m_range, std::move(values));
}

/// All M^N functions in lexicographic order of their value sequences.
class FunctionEnumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FunctionSpec;
    using difference_type = std::ptrdiff_t;
    using pointer = const FunctionSpec*;
    using reference = const FunctionSpec&;

    iterator() = default;
    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class FunctionEnumeration;
    explicit iterator(FunctionSpec first) : current_(std::move(first)), done_(false) {}

    std::optional<FunctionSpec> current_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return {}; }
  std::uint64_t size() const { return size_; }

 private:
  friend FunctionEnumeration enumerate_all(std::uint32_t, std::uint32_t, std::uint64_t);
  FunctionEnumeration(std::uint32_t n, std::uint32_t m, std::uint64_t size)
      : n_domain_(n), m_range_(m), size_(size) {}

  std::uint32_t n_domain_;
  std::uint32_t m_range_;
  std::uint64_t size_;
};

/// Throws ResourceLimit if M^N exceeds cap.
FunctionEnumeration enumerate_all(std::uint32_t n_domain, std::uint32_t m_range,
                                  std::uint64_t cap = kDefaultEnumerationCap);

/// Parses "0,1,0"; N is the number of fields. Rejects empty fields, signs,
/// trailing garbage and values >= m_range.
FunctionSpec parse_function_literal(std::string_view text, std::uint32_t m_range);
std::string to_literal(const FunctionSpec& f);

}  // namespace gdeutsch
