#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fncalc {

// Largest supported chart dimension. Index tuples are stored as bit masks and
// exponent vectors as fixed arrays of this length.
inline constexpr std::size_t kMaxDim = 8;

// A coordinate chart U ⊆ R^n with named coordinates. Cheap to copy; two charts
// are equal when their coordinate names agree.
class Chart {
 public:
  Chart() = default;
  explicit Chart(std::vector<std::string> coord_names);

  std::size_t dim() const { return names_ ? names_->size() : 0; }
  const std::vector<std::string>& coord_names() const;
  const std::string& name(std::size_t i) const { return coord_names().at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // A default-constructed chart is unbound; it only appears in zero polynomials.
  bool bound() const { return static_cast<bool>(names_); }

  friend bool operator==(const Chart& a, const Chart& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Coordinates x, y, z, w, u, v, s, t truncated to n (1 <= n <= kMaxDim).
Chart standard_chart(std::size_t n);

// Throws Error(ChartMismatch) unless the charts agree.
void require_same_chart(const Chart& a, const Chart& b, std::string_view what);

}  // namespace fncalc
