#include "apg/dual_cone.hpp"

#include "apg/multiplicities.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace apg {

namespace {

std::string position_string(const ChainPosition& p) {
  return "(" + std::to_string(p.chain + 1) + "," + std::to_string(p.k) + ")";
}

std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) {
  if (x != 0 && y > std::numeric_limits<std::uint64_t>::max() / x) return std::numeric_limits<std::uint64_t>::max();
  return x * y;
}

struct Stub {
  std::size_t point;
  PicardClass lambda;
  std::vector<ChainPosition> positions;
};

// Stubs of every fiber, ordered by their first (chain, k) spelling.
std::vector<std::vector<Stub>> collect_stubs(const Configuration& config) {
  std::vector<std::vector<Stub>> stubs(config.fiber_count());
  for (std::size_t f = 0; f < config.fiber_count(); ++f) {
    for (auto p : config.points_on_fiber(f)) {
      const auto& pos = config.positions(p);
      stubs[f].push_back({p, lambda_divisor(config, pos.front().chain, pos.front().k), pos});
    }
    std::sort(stubs[f].begin(), stubs[f].end(),
              [](const Stub& x, const Stub& y) { return x.positions.front() < y.positions.front(); });
  }
  return stubs;
}

// Cartesian product of the per-stub spellings.
std::vector<std::vector<ChainPosition>> spellings(const std::vector<const Stub*>& chosen, bool all) {
  std::vector<std::vector<ChainPosition>> out{{}};
  for (const auto* stub : chosen) {
    std::vector<std::vector<ChainPosition>> next;
    std::size_t variants = all ? stub->positions.size() : 1;
    for (const auto& prefix : out) {
      for (std::size_t v = 0; v < variants; ++v) {
        auto ext = prefix;
        ext.push_back(stub->positions[v]);
        next.push_back(std::move(ext));
      }
    }
    out = std::move(next);
  }
  return out;
}

class WEnumerator {
 public:
  WEnumerator(const Configuration& config, const EnumerationLimits& limits)
      : stubs_(collect_stubs(config)), limits_(limits) {}

  std::vector<Generator> run() {
    const std::size_t r = stubs_.size();
    for (std::size_t s = 2; s <= r; ++s) {
      std::vector<std::size_t> fibers;
      choose_fibers(0, s, fibers);
    }
    return std::move(out_);
  }

 private:
  void choose_fibers(std::size_t from, std::size_t s, std::vector<std::size_t>& fibers) {
    if (fibers.size() == s) {
      std::vector<const Stub*> chosen;
      choose_stubs(fibers, chosen);
      return;
    }
    for (std::size_t f = from; f + (s - fibers.size()) <= stubs_.size(); ++f) {
      fibers.push_back(f);
      choose_fibers(f + 1, s, fibers);
      fibers.pop_back();
    }
  }

  void choose_stubs(const std::vector<std::size_t>& fibers, std::vector<const Stub*>& chosen) {
    if (chosen.size() == fibers.size()) {
      emit(chosen);
      return;
    }
    for (const auto& stub : stubs_[fibers[chosen.size()]]) {
      chosen.push_back(&stub);
      choose_stubs(fibers, chosen);
      chosen.pop_back();
    }
  }

  void emit(const std::vector<const Stub*>& chosen) {
    std::vector<Integer> b;
    for (const auto* stub : chosen) b.push_back(stub->lambda.b);
    auto z = primitive_z(b);
    PicardClass w = PicardClass::zero(chosen.front()->lambda.size());
    for (std::size_t h = 0; h < chosen.size(); ++h) w = w + chosen[h]->lambda * z[h];
    w.b = z[0] * b[0];
    Generator g{std::move(w), {}};
    for (auto& terms : spellings(chosen, limits_.all_labels)) {
      g.labels.push_back({GeneratorLabel::Kind::W, std::move(terms), z});
    }
    out_.push_back(std::move(g));
  }

  std::vector<std::vector<Stub>> stubs_;
  EnumerationLimits limits_;
  std::vector<Generator> out_;
};

}  // namespace

std::string GeneratorLabel::to_string() const {
  switch (kind) {
    case Kind::FStar:
      return "F*";
    case Kind::MStar:
      return "M*";
    case Kind::Lambda:
      return "Λ" + position_string(terms.at(0));
    case Kind::W: {
      std::string s = "W(";
      for (std::size_t h = 0; h < terms.size(); ++h) {
        if (h) s += ",";
        s += position_string(terms[h]);
      }
      return s + ")";
    }
  }
  return {};
}

std::string Generator::name() const {
  std::string s;
  for (const auto& l : labels) {
    if (!s.empty()) s += " = ";
    s += l.to_string();
  }
  return s;
}

const Generator* GeneratorSet::find(const std::string& label) const {
  for (const auto& g : entries) {
    for (const auto& l : g.labels) {
      if (l.to_string() == label) return &g;
    }
  }
  return nullptr;
}

PicardClass lambda_divisor(const Configuration& config, std::size_t chain, std::size_t k) {
  auto m = germ_multiplicities(config, chain, k);
  auto ab = intersection_numbers(config, chain, k);
  auto d = PicardClass::zero(config.size());
  d.a = ab.a;
  d.b = ab.b;
  for (std::size_t l = 0; l < k; ++l) d.c[m.points[l]] = m.values[l];
  return d;
}

std::vector<Integer> primitive_z(std::span<const Integer> b_values) {
  if (b_values.empty()) throw std::invalid_argument("primitive_z needs at least one value");
  Integer l = 1;
  for (const auto& b : b_values) {
    if (b <= 0) throw std::invalid_argument("primitive_z needs positive values");
    l = lcm(l, b);
  }
  std::vector<Integer> z;
  for (const auto& b : b_values) z.push_back(l / b);
  return z;
}

std::uint64_t w_candidate_count(const Configuration& config) {
  std::uint64_t product = 1;
  std::uint64_t singles = 0;
  for (std::size_t f = 0; f < config.fiber_count(); ++f) {
    std::uint64_t n = config.points_on_fiber(f).size();
    product = saturating_mul(product, n + 1);
    singles += n;
  }
  if (product == std::numeric_limits<std::uint64_t>::max()) return product;
  return product - 1 - singles;
}

std::vector<Generator> enumerate_w(const Configuration& config, const EnumerationLimits& limits) {
  if (config.fiber_count() > limits.max_fibers) {
    throw CapExceeded("W enumeration over " + std::to_string(config.fiber_count()) + " fibers exceeds the cap of " +
                      std::to_string(limits.max_fibers));
  }
  if (auto n = w_candidate_count(config); n > limits.max_w) {
    throw CapExceeded(std::to_string(n) + " W candidates exceed the cap of " + std::to_string(limits.max_w));
  }
  return WEnumerator(config, limits).run();
}

GeneratorSet generator_set(const Configuration& config, const EnumerationLimits& limits) {
  const std::size_t n = config.size();
  GeneratorSet set;
  std::map<PicardClass, std::size_t> seen;
  auto add = [&](PicardClass d, std::vector<GeneratorLabel> labels) {
    auto [it, inserted] = seen.emplace(d, set.entries.size());
    if (inserted) {
      set.entries.push_back({std::move(d), std::move(labels)});
    } else if (limits.all_labels) {
      auto& dst = set.entries[it->second].labels;
      for (auto& l : labels) dst.push_back(std::move(l));
    }
  };

  add(PicardClass::f_star(n), {{GeneratorLabel::Kind::FStar, {}, {}}});
  add(PicardClass::m_star(n), {{GeneratorLabel::Kind::MStar, {}, {}}});
  for (std::size_t j = 0; j < config.chains().size(); ++j) {
    for (std::size_t k = 1; k <= config.chain(j).length(); ++k) {
      if (!limits.all_labels && config.positions(config.chain(j).points[k - 1]).front().chain != j) continue;
      add(lambda_divisor(config, j, k), {{GeneratorLabel::Kind::Lambda, {{j, k}}, {}}});
    }
  }
  set.w_candidates = config.fiber_count() > 1 ? w_candidate_count(config) : 0;
  for (auto& g : enumerate_w(config, limits)) add(std::move(g.divisor), std::move(g.labels));
  return set;
}

}  // namespace apg
