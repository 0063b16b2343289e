#include "apg/lattice.hpp"

#include <stdexcept>

namespace apg {

namespace {

void require_same_size(std::size_t n1, std::size_t n2) {
  if (n1 != n2) {
    throw std::invalid_argument("classes over different configurations (" + std::to_string(n1) + " vs " +
                                std::to_string(n2) + " points)");
  }
}

Integer dot_c(const std::vector<Integer>& x, const std::vector<Integer>& y) {
  Integer s = 0;
  for (std::size_t l = 0; l < x.size(); ++l) s += x[l] * y[l];
  return s;
}

}  // namespace

std::string DeltaLinear::to_string() const {
  std::string out;
  if (slope != 0) {
    if (slope == -1) {
      out = "-δ";
    } else if (slope == 1) {
      out = "δ";
    } else {
      out = slope.get_str() + "δ";
    }
    if (constant > 0) out += " + " + constant.get_str();
    if (constant < 0) out += " - " + Integer(-constant).get_str();
    return out;
  }
  return constant.get_str();
}

PicardClass PicardClass::f_star(std::size_t n) {
  auto d = zero(n);
  d.a = 1;
  return d;
}

PicardClass PicardClass::m_star(std::size_t n) {
  auto d = zero(n);
  d.b = 1;
  return d;
}

PicardClass PicardClass::e_star(std::size_t n, std::size_t l) {
  auto d = zero(n);
  d.c.at(l) = -1;
  return d;
}

Integer PicardClass::sum_c() const {
  Integer s = 0;
  for (const auto& x : c) s += x;
  return s;
}

Integer PicardClass::sum_c_squared() const { return dot_c(c, c); }

std::vector<Integer> PicardClass::coordinates() const {
  std::vector<Integer> out;
  out.reserve(c.size() + 2);
  out.push_back(a);
  out.push_back(b);
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

PicardClass PicardClass::operator+(const PicardClass& o) const {
  require_same_size(size(), o.size());
  PicardClass r{a + o.a, b + o.b, c};
  for (std::size_t l = 0; l < c.size(); ++l) r.c[l] += o.c[l];
  return r;
}

PicardClass PicardClass::operator-(const PicardClass& o) const { return *this + o * Integer(-1); }

PicardClass PicardClass::operator*(const Integer& t) const {
  PicardClass r{a * t, b * t, c};
  for (auto& x : r.c) x *= t;
  return r;
}

std::strong_ordering PicardClass::operator<=>(const PicardClass& o) const {
  auto cmp3 = [](const Integer& x, const Integer& y) {
    int s = ::cmp(x, y);
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  };
  if (auto r = cmp3(a, o.a); r != 0) return r;
  if (auto r = cmp3(b, o.b); r != 0) return r;
  if (c.size() != o.c.size()) return c.size() <=> o.c.size();
  for (std::size_t l = 0; l < c.size(); ++l) {
    if (auto r = cmp3(c[l], o.c[l]); r != 0) return r;
  }
  return std::strong_ordering::equal;
}

DeltaLinear pairing(const PicardClass& d1, const PicardClass& d2) {
  require_same_size(d1.size(), d2.size());
  return {d1.a * d2.b + d2.a * d1.b - dot_c(d1.c, d2.c), d1.b * d2.b};
}

DeltaLinear pairing(const PicardClass& d, const SymbolicClass& s) {
  require_same_size(d.size(), s.c.size());
  // a_s = s0 + s1 delta contributes (s0 + s1 delta) * b_d.
  return {d.a * s.b + s.a.constant * d.b - dot_c(d.c, s.c), s.a.slope * d.b + d.b * s.b};
}

DeltaLinear self_intersection(const PicardClass& d) { return {2 * d.a * d.b - d.sum_c_squared(), d.b * d.b}; }

DeltaLinear anticanonical_product(const PicardClass& d) { return {2 * d.a + 2 * d.b - d.sum_c(), d.b}; }

SymbolicClass anticanonical_class(std::size_t n) { return {{2, -1}, 2, std::vector<Integer>(n, Integer(1))}; }

std::vector<SymbolicClass> StrictTransforms::all() const {
  std::vector<SymbolicClass> out = fibers;
  out.push_back(special_section);
  out.insert(out.end(), exceptional.begin(), exceptional.end());
  return out;
}

StrictTransforms strict_transform_classes(const Configuration& config) {
  const std::size_t n = config.size();
  StrictTransforms st;
  for (std::size_t l = 0; l < n; ++l) {
    SymbolicClass e{{0, 0}, 0, std::vector<Integer>(n, Integer(0))};
    e.c[l] = -1;
    for (std::size_t mu = 0; mu < n; ++mu) {
      if (config.is_proximate(mu, l)) e.c[mu] = 1;
    }
    st.exceptional.push_back(std::move(e));
  }
  for (std::size_t f = 0; f < config.fiber_count(); ++f) {
    SymbolicClass fib{{1, 0}, 0, std::vector<Integer>(n, Integer(0))};
    for (auto p : config.points_on_fiber(f)) {
      if (config.flagged(p, SmoothCurve::Fiber)) fib.c[p] = 1;
    }
    st.fibers.push_back(std::move(fib));
  }
  st.special_section = {{0, -1}, 1, std::vector<Integer>(n, Integer(0))};
  for (std::size_t p = 0; p < n; ++p) {
    if (config.flagged(p, SmoothCurve::SpecialSection)) st.special_section.c[p] = 1;
  }
  return st;
}

}  // namespace apg
