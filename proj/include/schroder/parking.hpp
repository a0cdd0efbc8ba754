#ifndef SCHRODER_PARKING_HPP
#define SCHRODER_PARKING_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "schroder/coeff_poly.hpp"
#include "schroder/enumerators.hpp"
#include "schroder/paths.hpp"

namespace schroder {

/// A labeling of the up steps of a Schroder path by 1..n-diag. labels[i] is
/// the label of row i (bottom to top), 0 on diagonal rows. Within a riser the
/// labels increase going up.
struct ParkingFunction {
  SchroderWord shape;
  std::vector<int> labels;

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
};

bool is_valid_parking_function(const ParkingFunction& f);

/// (n-k)! / prod gamma_i!
Integer count_pf(const SchroderWord& shape);

/// Visits each parking function of the given shape once. Throws
/// ResourceLimitError once more than `cap` labelings have been produced.
std::uint64_t for_each_pf(const SchroderWord& shape,
                          const std::function<void(const ParkingFunction&)>& visit,
                          std::uint64_t cap = 10'000'000);
std::vector<ParkingFunction> enumerate_pf(const SchroderWord& shape, std::uint64_t cap = 10'000'000);

/// sum over shapes of |P(shape)| q^{area} y^{diag}.
CoeffPoly P_poly_direct(int m, int n, const EnumerationOptions& opts = {});
/// <C_{m,n}(x+y;q), sum_{d<=n} p_1^d>.
CoeffPoly P_poly_scalar(int m, int n, const EnumerationOptions& opts = {});
/// Both routes; throws TheoremCheckFailure if they disagree.
CoeffPoly P_poly(int m, int n, const EnumerationOptions& opts = {});

/// C(a,k) a^{b-k-1} for coprime (a,b).
Integer P_coprime_closed(int a, int b, int k);

/// <C_{m,n}(x;q), p_1^{n-k} h_k>.
CoeffPoly P_slice_scalar(int m, int n, int k, const EnumerationOptions& opts = {});

}  // namespace schroder

#endif  // SCHRODER_PARKING_HPP
