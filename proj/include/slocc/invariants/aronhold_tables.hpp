#pragma once

// Generated by tools/derive_cubic_invariants.py. Each term is
// coefficient * prod_i c_i^{exponent_i} over the ten ternary-cubic
// coefficients in TernaryCubic order.

#include <array>
#include <cstdint>

namespace slocc {

struct InvariantTerm {
  long long coefficient;
  std::array<std::uint8_t, 10> exponents;
};

inline constexpr std::array<InvariantTerm, 25> kAronholdS{{
    {144, {1, 0, 0, 1, 0, 0, 0, 1, 0, 1}},
    {-48, {1, 0, 0, 1, 0, 0, 0, 0, 2, 0}},
    {-216, {1, 0, 0, 0, 1, 0, 1, 0, 0, 1}},
    {24, {1, 0, 0, 0, 1, 0, 0, 1, 1, 0}},
    {144, {1, 0, 0, 0, 0, 1, 1, 0, 1, 0}},
    {-48, {1, 0, 0, 0, 0, 1, 0, 2, 0, 0}},
    {-48, {0, 2, 0, 0, 0, 0, 0, 1, 0, 1}},
    {16, {0, 2, 0, 0, 0, 0, 0, 0, 2, 0}},
    {144, {0, 1, 1, 0, 0, 0, 1, 0, 0, 1}},
    {-16, {0, 1, 1, 0, 0, 0, 0, 1, 1, 0}},
    {24, {0, 1, 0, 1, 1, 0, 0, 0, 0, 1}},
    {-16, {0, 1, 0, 1, 0, 1, 0, 0, 1, 0}},
    {-8, {0, 1, 0, 0, 2, 0, 0, 0, 1, 0}},
    {24, {0, 1, 0, 0, 1, 1, 0, 1, 0, 0}},
    {-48, {0, 1, 0, 0, 0, 2, 1, 0, 0, 0}},
    {-48, {0, 0, 2, 0, 0, 0, 1, 0, 1, 0}},
    {16, {0, 0, 2, 0, 0, 0, 0, 2, 0, 0}},
    {-48, {0, 0, 1, 2, 0, 0, 0, 0, 0, 1}},
    {24, {0, 0, 1, 1, 1, 0, 0, 0, 1, 0}},
    {-16, {0, 0, 1, 1, 0, 1, 0, 1, 0, 0}},
    {-8, {0, 0, 1, 0, 2, 0, 0, 1, 0, 0}},
    {24, {0, 0, 1, 0, 1, 1, 1, 0, 0, 0}},
    {16, {0, 0, 0, 2, 0, 2, 0, 0, 0, 0}},
    {-8, {0, 0, 0, 1, 2, 1, 0, 0, 0, 0}},
    {1, {0, 0, 0, 0, 4, 0, 0, 0, 0, 0}},
}};
inline constexpr std::array<InvariantTerm, 103> kAronholdT{{
    {-46656, {2, 0, 0, 0, 0, 0, 2, 0, 0, 2}},
    {31104, {2, 0, 0, 0, 0, 0, 1, 1, 1, 1}},
    {-6912, {2, 0, 0, 0, 0, 0, 1, 0, 3, 0}},
    {-6912, {2, 0, 0, 0, 0, 0, 0, 3, 0, 1}},
    {1728, {2, 0, 0, 0, 0, 0, 0, 2, 2, 0}},
    {31104, {1, 1, 0, 1, 0, 0, 1, 0, 0, 2}},
    {-10368, {1, 1, 0, 1, 0, 0, 0, 1, 1, 1}},
    {2304, {1, 1, 0, 1, 0, 0, 0, 0, 3, 0}},
    {-10368, {1, 1, 0, 0, 1, 0, 1, 0, 1, 1}},
    {6912, {1, 1, 0, 0, 1, 0, 0, 2, 0, 1}},
    {-1152, {1, 1, 0, 0, 1, 0, 0, 1, 2, 0}},
    {-10368, {1, 1, 0, 0, 0, 1, 1, 1, 0, 1}},
    {6912, {1, 1, 0, 0, 0, 1, 1, 0, 2, 0}},
    {-1152, {1, 1, 0, 0, 0, 1, 0, 2, 1, 0}},
    {-10368, {1, 0, 1, 1, 0, 0, 1, 0, 1, 1}},
    {6912, {1, 0, 1, 1, 0, 0, 0, 2, 0, 1}},
    {-1152, {1, 0, 1, 1, 0, 0, 0, 1, 2, 0}},
    {-10368, {1, 0, 1, 0, 1, 0, 1, 1, 0, 1}},
    {6912, {1, 0, 1, 0, 1, 0, 1, 0, 2, 0}},
    {-1152, {1, 0, 1, 0, 1, 0, 0, 2, 1, 0}},
    {31104, {1, 0, 1, 0, 0, 1, 2, 0, 0, 1}},
    {-10368, {1, 0, 1, 0, 0, 1, 1, 1, 1, 0}},
    {2304, {1, 0, 1, 0, 0, 1, 0, 3, 0, 0}},
    {-6912, {1, 0, 0, 3, 0, 0, 0, 0, 0, 2}},
    {6912, {1, 0, 0, 2, 1, 0, 0, 0, 1, 1}},
    {6912, {1, 0, 0, 2, 0, 1, 0, 1, 0, 1}},
    {-4608, {1, 0, 0, 2, 0, 1, 0, 0, 2, 0}},
    {-5184, {1, 0, 0, 1, 2, 0, 0, 1, 0, 1}},
    {-576, {1, 0, 0, 1, 2, 0, 0, 0, 2, 0}},
    {-10368, {1, 0, 0, 1, 1, 1, 1, 0, 0, 1}},
    {5760, {1, 0, 0, 1, 1, 1, 0, 1, 1, 0}},
    {6912, {1, 0, 0, 1, 0, 2, 1, 0, 1, 0}},
    {-4608, {1, 0, 0, 1, 0, 2, 0, 2, 0, 0}},
    {4320, {1, 0, 0, 0, 3, 0, 1, 0, 0, 1}},
    {288, {1, 0, 0, 0, 3, 0, 0, 1, 1, 0}},
    {-5184, {1, 0, 0, 0, 2, 1, 1, 0, 1, 0}},
    {-576, {1, 0, 0, 0, 2, 1, 0, 2, 0, 0}},
    {6912, {1, 0, 0, 0, 1, 2, 1, 1, 0, 0}},
    {-6912, {1, 0, 0, 0, 0, 3, 2, 0, 0, 0}},
    {-6912, {0, 3, 0, 0, 0, 0, 1, 0, 0, 2}},
    {2304, {0, 3, 0, 0, 0, 0, 0, 1, 1, 1}},
    {-512, {0, 3, 0, 0, 0, 0, 0, 0, 3, 0}},
    {6912, {0, 2, 1, 0, 0, 0, 1, 0, 1, 1}},
    {-4608, {0, 2, 1, 0, 0, 0, 0, 2, 0, 1}},
    {768, {0, 2, 1, 0, 0, 0, 0, 1, 2, 0}},
    {1728, {0, 2, 0, 2, 0, 0, 0, 0, 0, 2}},
    {-1152, {0, 2, 0, 1, 1, 0, 0, 0, 1, 1}},
    {-1152, {0, 2, 0, 1, 0, 1, 0, 1, 0, 1}},
    {768, {0, 2, 0, 1, 0, 1, 0, 0, 2, 0}},
    {-576, {0, 2, 0, 0, 2, 0, 0, 1, 0, 1}},
    {384, {0, 2, 0, 0, 2, 0, 0, 0, 2, 0}},
    {6912, {0, 2, 0, 0, 1, 1, 1, 0, 0, 1}},
    {-1152, {0, 2, 0, 0, 1, 1, 0, 1, 1, 0}},
    {-4608, {0, 2, 0, 0, 0, 2, 1, 0, 1, 0}},
    {1728, {0, 2, 0, 0, 0, 2, 0, 2, 0, 0}},
    {6912, {0, 1, 2, 0, 0, 0, 1, 1, 0, 1}},
    {-4608, {0, 1, 2, 0, 0, 0, 1, 0, 2, 0}},
    {768, {0, 1, 2, 0, 0, 0, 0, 2, 1, 0}},
    {-1152, {0, 1, 1, 2, 0, 0, 0, 0, 1, 1}},
    {5760, {0, 1, 1, 1, 1, 0, 0, 1, 0, 1}},
    {-1152, {0, 1, 1, 1, 1, 0, 0, 0, 2, 0}},
    {-10368, {0, 1, 1, 1, 0, 1, 1, 0, 0, 1}},
    {384, {0, 1, 1, 1, 0, 1, 0, 1, 1, 0}},
    {-5184, {0, 1, 1, 0, 2, 0, 1, 0, 0, 1}},
    {192, {0, 1, 1, 0, 2, 0, 0, 1, 1, 0}},
    {5760, {0, 1, 1, 0, 1, 1, 1, 0, 1, 0}},
    {-1152, {0, 1, 1, 0, 1, 1, 0, 2, 0, 0}},
    {-1152, {0, 1, 1, 0, 0, 2, 1, 1, 0, 0}},
    {-1152, {0, 1, 0, 2, 1, 1, 0, 0, 0, 1}},
    {768, {0, 1, 0, 2, 0, 2, 0, 0, 1, 0}},
    {288, {0, 1, 0, 1, 3, 0, 0, 0, 0, 1}},
    {192, {0, 1, 0, 1, 2, 1, 0, 0, 1, 0}},
    {-1152, {0, 1, 0, 1, 1, 2, 0, 1, 0, 0}},
    {2304, {0, 1, 0, 1, 0, 3, 1, 0, 0, 0}},
    {-96, {0, 1, 0, 0, 4, 0, 0, 0, 1, 0}},
    {288, {0, 1, 0, 0, 3, 1, 0, 1, 0, 0}},
    {-576, {0, 1, 0, 0, 2, 2, 1, 0, 0, 0}},
    {-6912, {0, 0, 3, 0, 0, 0, 2, 0, 0, 1}},
    {2304, {0, 0, 3, 0, 0, 0, 1, 1, 1, 0}},
    {-512, {0, 0, 3, 0, 0, 0, 0, 3, 0, 0}},
    {-4608, {0, 0, 2, 2, 0, 0, 0, 1, 0, 1}},
    {1728, {0, 0, 2, 2, 0, 0, 0, 0, 2, 0}},
    {6912, {0, 0, 2, 1, 1, 0, 1, 0, 0, 1}},
    {-1152, {0, 0, 2, 1, 1, 0, 0, 1, 1, 0}},
    {-1152, {0, 0, 2, 1, 0, 1, 1, 0, 1, 0}},
    {768, {0, 0, 2, 1, 0, 1, 0, 2, 0, 0}},
    {-576, {0, 0, 2, 0, 2, 0, 1, 0, 1, 0}},
    {384, {0, 0, 2, 0, 2, 0, 0, 2, 0, 0}},
    {-1152, {0, 0, 2, 0, 1, 1, 1, 1, 0, 0}},
    {1728, {0, 0, 2, 0, 0, 2, 2, 0, 0, 0}},
    {2304, {0, 0, 1, 3, 0, 1, 0, 0, 0, 1}},
    {-576, {0, 0, 1, 2, 2, 0, 0, 0, 0, 1}},
    {-1152, {0, 0, 1, 2, 1, 1, 0, 0, 1, 0}},
    {768, {0, 0, 1, 2, 0, 2, 0, 1, 0, 0}},
    {288, {0, 0, 1, 1, 3, 0, 0, 0, 1, 0}},
    {192, {0, 0, 1, 1, 2, 1, 0, 1, 0, 0}},
    {-1152, {0, 0, 1, 1, 1, 2, 1, 0, 0, 0}},
    {-96, {0, 0, 1, 0, 4, 0, 0, 1, 0, 0}},
    {288, {0, 0, 1, 0, 3, 1, 1, 0, 0, 0}},
    {-512, {0, 0, 0, 3, 0, 3, 0, 0, 0, 0}},
    {384, {0, 0, 0, 2, 2, 2, 0, 0, 0, 0}},
    {-96, {0, 0, 0, 1, 4, 1, 0, 0, 0, 0}},
    {8, {0, 0, 0, 0, 6, 0, 0, 0, 0, 0}},
}};

}  // namespace slocc
