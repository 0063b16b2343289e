#include "apg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>

namespace apg {

namespace {

Integer dot(const Vector& x, const Vector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool proportional(const Vector& x, const Vector& y) {
  return primitive(x) == primitive(y);
}

std::string vector_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

using Mask = std::uint64_t;

struct Ray {
  Vector v;
  Mask zero = 0;  // processed rows vanishing on v
};

// Greedy independent rows in order, by exact elimination.
std::vector<std::size_t> independent_rows(const std::vector<Vector>& rows, std::size_t d) {
  std::vector<std::vector<Rational>> basis;  // echelon rows
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < rows.size() && chosen.size() < d; ++i) {
    std::vector<Rational> r(rows[i].begin(), rows[i].end());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (r[pivots[b]] == 0) continue;
      Rational f = r[pivots[b]] / basis[b][pivots[b]];
      for (std::size_t c = 0; c < d; ++c) r[c] -= f * basis[b][c];
    }
    auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
    if (it == r.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - r.begin()));
    basis.push_back(std::move(r));
    chosen.push_back(i);
  }
  return chosen;
}

// Columns of the inverse of the square matrix formed by `rows`.
std::vector<Vector> inverse_columns(const std::vector<Vector>& rows) {
  const std::size_t d = rows.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = rows[i][j];
    m[i][d + i] = 1;
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < 2 * d; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<Vector> out;
  for (std::size_t j = 0; j < d; ++j) {
    Integer den = 1;
    for (std::size_t i = 0; i < d; ++i) den = lcm(den, m[i][d + j].get_den());
    Vector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = m[i][d + j].get_num() * (den / m[i][d + j].get_den());
    out.push_back(primitive(std::move(v)));
  }
  return out;
}

}  // namespace

InequalitySystem inequality_system(const Configuration& config) {
  const std::size_t n = config.size();
  InequalitySystem sys;
  sys.dimension = n + 2;
  for (std::size_t l = 0; l < n; ++l) {
    Vector row(n + 2, 0);
    row[2 + l] = 1;
    for (std::size_t mu = 0; mu < n; ++mu) {
      if (config.is_proximate(mu, l)) row[2 + mu] -= 1;
    }
    sys.rows.push_back(std::move(row));
    sys.provenance.push_back("E[" + config.id(l) + "]");
  }
  for (std::size_t f = 0; f < config.fiber_count(); ++f) {
    Vector row(n + 2, 0);
    row[1] = 1;
    for (auto p : config.points_on_fiber(f)) {
      if (config.flagged(p, SmoothCurve::Fiber)) row[2 + p] -= 1;
    }
    sys.rows.push_back(std::move(row));
    sys.provenance.push_back("F~[" + config.fibers()[f] + "]");
  }
  Vector row(n + 2, 0);
  row[0] = 1;
  for (std::size_t p = 0; p < n; ++p) {
    if (config.flagged(p, SmoothCurve::SpecialSection)) row[2 + p] -= 1;
  }
  sys.rows.push_back(std::move(row));
  sys.provenance.push_back("M~0");
  return sys;
}

Vector primitive(Vector v) {
  Integer g = content(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

RaySet extreme_rays(const InequalitySystem& system, const DdLimits& limits) {
  const std::size_t d = system.dimension;
  if (d > limits.max_dimension) {
    throw CapExceeded("double description in dimension " + std::to_string(d) + " exceeds the cap of " +
                      std::to_string(limits.max_dimension));
  }
  if (system.rows.size() > 64) throw CapExceeded("more than 64 inequality rows");
  const auto& rows = system.rows;
  auto basis = independent_rows(rows, d);
  if (basis.size() < d) throw std::invalid_argument("cone is not pointed");

  std::vector<Vector> square;
  for (auto i : basis) square.push_back(rows[i]);
  auto initial = inverse_columns(square);

  Mask processed = 0;
  for (auto i : basis) processed |= Mask{1} << i;
  auto zero_set = [&](const Vector& v) {
    Mask z = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((processed >> i & 1) && dot(rows[i], v) == 0) z |= Mask{1} << i;
    }
    return z;
  };
  std::vector<Ray> rays;
  for (auto& v : initial) {
    auto z = zero_set(v);
    rays.push_back({std::move(v), z});
  }

  for (std::size_t h = 0; h < rows.size(); ++h) {
    if (processed >> h & 1) continue;
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(rows[h], rays[i].v);
      if (value[i] > 0) pos.push_back(i);
      if (value[i] < 0) neg.push_back(i);
    }
    const Mask bit = Mask{1} << h;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] > 0) next.push_back(rays[i]);
      if (value[i] == 0) next.push_back({rays[i].v, rays[i].zero | bit});
    }
    for (auto p : pos) {
      for (auto m : neg) {
        Mask common = rays[p].zero & rays[m].zero;
        if (static_cast<std::size_t>(std::popcount(common)) + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o != p && o != m && (rays[o].zero & common) == common) adjacent = false;
        }
        if (!adjacent) continue;
        Vector v(d);
        for (std::size_t c = 0; c < d; ++c) v[c] = value[p] * rays[m].v[c] - value[m] * rays[p].v[c];
        next.push_back({primitive(std::move(v)), common | bit});
      }
    }
    processed |= bit;
    rays = std::move(next);
  }

  RaySet out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RaySet dual_rays_dd(const Configuration& config, const DdLimits& limits) {
  return extreme_rays(inequality_system(config), limits);
}

DualConeCheck verify_dual_cone(const Configuration& config, const EnumerationLimits& limits, const DdLimits& dd) {
  auto sys = inequality_system(config);
  auto rays = extreme_rays(sys, dd);
  auto gens = generator_set(config, limits);
  DualConeCheck check;
  check.generators = gens.count();
  check.rays = rays.size();
  for (const auto& g : gens.entries) {
    auto x = g.divisor.coordinates();
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
      if (dot(sys.rows[i], x) < 0) {
        check.witness = g.name() + " violates " + sys.provenance[i];
        return check;
      }
    }
  }
  for (const auto& r : rays) {
    bool matched = false;
    for (const auto& g : gens.entries) {
      if (proportional(r, g.divisor.coordinates())) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      check.witness = "extreme ray " + vector_string(r) + " matches no generator";
      return check;
    }
  }
  for (const auto& g : gens.entries) {
    auto x = primitive(g.divisor.coordinates());
    if (std::binary_search(rays.begin(), rays.end(), x)) ++check.extreme_generators;
  }
  check.ok = true;
  return check;
}

bool in_cone(const Vector& v, const std::vector<Vector>& others) {
  // Phase I: minimize the artificial sum for A lambda = v, lambda >= 0.
  const std::size_t m = v.size();
  const std::size_t n = others.size();
  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basic(m);
  for (std::size_t i = 0; i < m; ++i) {
    int sign = v[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * others[j][i];
    t[i][n + i] = 1;
    t[i][cols] = sign * v[i];
    basic[i] = n + i;
  }
  // Reduced costs of the artificial objective.
  std::vector<Rational> cost(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= n && j < cols) continue;
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  }
  while (true) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][*enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][*enter];
      if (!leave || ratio < best || (ratio == best && basic[i] < basic[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (!leave) break;  // unbounded cannot happen in phase I
    const std::size_t r = *leave;
    Rational piv = t[r][*enter];
    for (auto& x : t[r]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][*enter] == 0) continue;
      Rational f = t[i][*enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    Rational f = cost[*enter];
    for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[r][j];
    basic[r] = *enter;
  }
  return cost[cols] == 0;
}

std::vector<bool> extremality_flags(const std::vector<PicardClass>& classes) {
  std::vector<Vector> coords;
  for (const auto& c : classes) coords.push_back(c.coordinates());
  std::vector<bool> flags;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::vector<Vector> others;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (j != i) others.push_back(coords[j]);
    }
    flags.push_back(!in_cone(coords[i], others));
  }
  return flags;
}

std::vector<bool> strict_transform_extremality(const Configuration& config, const Integer& delta) {
  if (delta < 1) throw std::invalid_argument("extremality check needs delta >= 1");
  std::vector<PicardClass> classes;
  for (const auto& s : strict_transform_classes(config).all()) classes.push_back(s.at(delta));
  return extremality_flags(classes);
}

}  // namespace apg
