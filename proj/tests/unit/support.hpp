#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include <gtrans/rational.hpp>

namespace gtrans::test {

inline rational R(std::string_view text) { return rational_from_text(text); }

inline std::vector<rational> Rs(std::initializer_list<std::string_view> texts) {
  std::vector<rational> out;
  for (auto t : texts) out.push_back(R(t));
  return out;
}

// Partial sums of (1/2)^k + (1/3)^k, k >= 0.
inline std::vector<rational> two_geometric_sums(std::size_t count) {
  std::vector<rational> out;
  rational s(0), a(1), b(1);
  const rational half = R("1/2"), third = R("1/3");
  for (std::size_t k = 0; k < count; ++k) {
    s += a + b;
    out.push_back(s);
    a *= half;
    b *= third;
  }
  return out;
}

inline std::vector<rational> differences(const std::vector<rational>& A) {
  std::vector<rational> out;
  for (std::size_t k = 0; k + 1 < A.size(); ++k) out.push_back(A[k + 1] - A[k]);
  return out;
}

}  // namespace gtrans::test
