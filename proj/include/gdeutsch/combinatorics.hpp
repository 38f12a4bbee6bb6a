#pragma once

#include <cstdint>
#include <vector>

#include "gdeutsch/function_space.hpp"
#include "gdeutsch/rational.hpp"

namespace gdeutsch {

struct ProfileMultiplicity {
  RowProfile profile;
  BigInt count;
};

/// Every (N+1)-tuple satisfying the row-profile constraints for (N, M), each
/// once, in canonical order. Generated as partitions of N into at most M parts.
std::vector<RowProfile> enumerate_profiles(std::uint32_t n_domain, std::uint32_t m_range);

/// Number of functions with the given profile:
///   N! / prod_l (l!)^{j_l}  *  M! / prod_l j_l!
/// Throws InvalidArgument if the profile violates the constraints for (N, M).
BigInt multiplicity(const RowProfile& profile, std::uint32_t n_domain, std::uint32_t m_range);

std::vector<ProfileMultiplicity> profile_multiplicities(std::uint32_t n_domain,
                                                        std::uint32_t m_range);

/// True iff the multiplicities over enumerate_profiles sum to exactly M^N.
bool check_total(std::uint32_t n_domain, std::uint32_t m_range);

/// n!, memoized for small n.
BigInt factorial(std::uint32_t n);

}  // namespace gdeutsch
