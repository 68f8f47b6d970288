#include "mgcage/bounds.hpp"

#include <algorithm>

#include "mgcage/construct.hpp"
#include "mgcage/graph.hpp"

namespace mgcage {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(errc::invalid_parameters, what);
}

// sum_{i=0}^{terms-1} (r-1)^i
long long geometric_sum(int r, int terms) {
  long long sum = 0;
  long long power = 1;
  for (int i = 0; i < terms; ++i) {
    sum += power;
    power *= r - 1;
  }
  return sum;
}

}  // namespace

int moore_bound(int r, int g) {
  require(r >= 2 && g >= 3, "moore_bound needs r >= 2 and g >= 3");
  long long value;
  if (g % 2 == 1) {
    value = 1 + r * geometric_sum(r, (g - 1) / 2);
  } else {
    value = 2 * geometric_sum(r, g / 2);
  }
  return static_cast<int>(value);
}

int lower_bound_z1(int r, int g) {
  require(r >= 2 && g >= 3, "lower_bound_z1 needs r >= 2 and g >= 3");
  // Layered count around a shortest cycle: two trees per layer of odd-girth
  // Moore graphs, plus the full Moore count once when g is odd.
  long long layers = 1;
  const int top = g % 2 == 1 ? (g - 3) / 2 : (g - 2) / 2;
  for (int i = 1; i <= top; ++i) layers += moore_bound(r, 2 * i + 1);
  long long value = 2 * layers;
  if (g % 2 == 1) value += moore_bound(r, g);
  return static_cast<int>(value);
}

int lower_bound_general(int z, int r, int g) {
  require(z >= 1, "lower_bound_general needs z >= 1");
  return moore_bound(r, g) + 2 * z;
}

int upper_bound_g5(int z, int r) {
  const int p = smallest_prime_in_window(z);
  require(r >= 1, "upper_bound_g5 needs r >= 1");
  if (r > p) {
    fail(errc::r_too_large,
         "r=" + std::to_string(r) + " exceeds p=" + std::to_string(p));
  }
  return 2 * p * r;
}

int upper_bound_gcopies(int z, int r, int g) {
  const MixedGraph base = cage_catalog(r, g);
  require(z >= 1, "upper_bound_gcopies needs z >= 1");
  if (z > base.order()) {
    fail(errc::z_too_large,
         "z=" + std::to_string(z) + " exceeds base order " + std::to_string(base.order()));
  }
  return g * base.order();
}

BoundsTable bounds_table(int z, int r, int g) {
  require(z >= 1 && r >= 2 && g >= 3, "bounds_table needs z >= 1, r >= 2, g >= 3");
  BoundsTable table;
  table.z = z;
  table.r = r;
  table.g = g;

  table.lower_bounds.push_back({moore_bound(r, g), "moore"});
  table.lower_bounds.push_back({lower_bound_general(z, r, g), "moore+2z"});
  if (z == 1) table.lower_bounds.push_back({lower_bound_z1(r, g), "z1-layers"});
  if (z == 10 && r == 3 && g == 5) table.lower_bounds.push_back({50, "projection-count"});

  if (g == 5 && z != 2) {
    const int p = smallest_prime_in_window(z);
    if (r <= p) table.upper_bounds.push_back({2 * p * r, "biaffine-amalgam"});
  }
  try {
    table.upper_bounds.push_back({upper_bound_gcopies(z, r, g), "g-copies"});
  } catch (const Error& e) {
    if (e.code() != errc::not_in_catalog && e.code() != errc::z_too_large) throw;
  }

  for (const auto& entry : table.lower_bounds) {
    if (!table.best_lower || entry.value > *table.best_lower) table.best_lower = entry.value;
  }
  for (const auto& entry : table.upper_bounds) {
    if (!table.best_upper || entry.value < *table.best_upper) table.best_upper = entry.value;
  }
  return table;
}

}  // namespace mgcage
