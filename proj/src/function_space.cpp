#include "gdeutsch/function_space.hpp"

#include <algorithm>
#include <charconv>

#include "gdeutsch/errors.hpp"

namespace gdeutsch {

FunctionSpec::FunctionSpec(std::uint32_t m_range, std::vector<std::uint32_t> values)
    : m_range_(m_range), values_(std::move(values)) {
  if (m_range_ == 0) throw InvalidArgument("function range size M must be positive");
  if (values_.empty()) throw InvalidArgument("function domain size N must be positive");
  for (std::size_t n = 0; n < values_.size(); ++n) {
    if (values_[n] >= m_range_) {
      throw InvalidArgument("f(" + std::to_string(n) + ") = " + std::to_string(values_[n]) +
                            " is outside {0.." + std::to_string(m_range_ - 1) + "}");
    }
  }
}

bool is_valid_profile(const RowProfile& profile, std::uint32_t n_domain, std::uint32_t m_range) {
  if (profile.counts.size() != static_cast<std::size_t>(n_domain) + 1) return false;
  std::uint64_t ones = 0;
  std::uint64_t rows = 0;
  for (std::size_t l = 0; l < profile.counts.size(); ++l) {
    if (profile.counts[l] > m_range) return false;
    ones += static_cast<std::uint64_t>(l) * profile.counts[l];
    rows += profile.counts[l];
  }
  return ones == n_domain && rows == m_range;
}

bool canonical_before(const RowProfile& a, const RowProfile& b) {
  return std::lexicographical_compare(a.counts.rbegin(), a.counts.rend() - 1, b.counts.rbegin(),
                                      b.counts.rend() - 1, std::greater<>{});
}

std::uint64_t profile_square_sum(const RowProfile& profile) {
  std::uint64_t total = 0;
  for (std::size_t l = 0; l < profile.counts.size(); ++l) {
    total += static_cast<std::uint64_t>(profile.counts[l]) * l * l;
  }
  return total;
}

FunctionSpec make_constant(std::uint32_t n_domain, std::uint32_t m_range, std::uint32_t value) {
  if (value >= m_range) {
    throw InvalidArgument("constant value " + std::to_string(value) + " is not below M = " +
                          std::to_string(m_range));
  }
  return FunctionSpec(m_range, std::vector<std::uint32_t>(n_domain, value));
}

std::vector<std::uint32_t> row_sums(const FunctionSpec& f) {
  std::vector<std::uint32_t> sums(f.m_range(), 0);
  for (auto v : f.values()) ++sums[v];
  return sums;
}

RowProfile row_profile(const FunctionSpec& f) {
  RowProfile profile{std::vector<std::uint32_t>(f.n_domain() + 1, 0)};
  for (auto s : row_sums(f)) ++profile.counts[s];
  return profile;
}

bool is_constant(const FunctionSpec& f) {
  const auto v = f.values();
  return std::all_of(v.begin(), v.end(), [&](std::uint32_t x) { return x == v.front(); });
}

std::uint64_t square_sum(std::span<const std::uint32_t> sums) {
  std::uint64_t total = 0;
  for (auto s : sums) total += static_cast<std::uint64_t>(s) * s;
  return total;
}

std::optional<std::uint64_t> function_count(std::uint32_t n_domain, std::uint32_t m_range) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n_domain; ++i) {
    if (m_range != 0 && count > UINT64_MAX / m_range) return std::nullopt;
    count *= m_range;
  }
  return count;
}

std::uint64_t checked_function_count(std::uint32_t n_domain, std::uint32_t m_range,
                                     std::uint64_t cap) {
  const auto count = function_count(n_domain, m_range);
  if (!count || *count > cap) {
    throw ResourceLimit("M^N = " + std::to_string(m_range) + "^" + std::to_string(n_domain) +
                        " exceeds the enumeration cap of " + std::to_string(cap));
  }
  return *count;
}

FunctionSpec function_at(std::uint64_t rank, std::uint32_t n_domain, std::uint32_t m_range) {
  std::vector<std::uint32_t> values(n_domain);
  for (std::uint32_t i = n_domain; i-- > 0;) {
    values[i] = static_cast<std::uint32_t>(rank % m_range);
    rank /= m_range;
  }
  if (rank != 0) throw InvalidArgument("function rank exceeds M^N");
  return FunctionSpec(m_range, std::move(values));
}

std::uint64_t function_rank(const FunctionSpec& f) {
  std::uint64_t rank = 0;
  for (auto v : f.values()) rank = rank * f.m_range() + v;
  return rank;
}

FunctionEnumeration::iterator& FunctionEnumeration::iterator::operator++() {
  std::vector<std::uint32_t> values(current_->values().begin(), current_->values().end());
  const std::uint32_t m = current_->m_range();
  std::size_t i = values.size();
  while (i > 0) {
    --i;
    if (++values[i] < m) {
      current_.emplace(m, std::move(values));
      return *this;
    }
    values[i] = 0;
  }
  current_.reset();
  done_ = true;
  return *this;
}

FunctionEnumeration::iterator FunctionEnumeration::begin() const {
  return iterator(FunctionSpec(m_range_, std::vector<std::uint32_t>(n_domain_, 0)));
}

FunctionEnumeration enumerate_all(std::uint32_t n_domain, std::uint32_t m_range, std::uint64_t cap) {
  if (n_domain == 0 || m_range == 0) throw InvalidArgument("N and M must be positive");
  return FunctionEnumeration(n_domain, m_range, checked_function_count(n_domain, m_range, cap));
}

FunctionSpec parse_function_literal(std::string_view text, std::uint32_t m_range) {
  std::vector<std::uint32_t> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::uint32_t value = 0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc{} || ptr != last) {
      throw InvalidArgument("malformed function literal '" + std::string(text) +
                            "': expected comma-separated non-negative integers");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return FunctionSpec(m_range, std::move(values));
}

std::string to_literal(const FunctionSpec& f) {
  std::string out;
  for (std::size_t n = 0; n < f.n_domain(); ++n) {
    if (n > 0) out += ',';
    out += std::to_string(f[n]);
  }
  return out;
}

}  // namespace gdeutsch
