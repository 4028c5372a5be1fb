#include "ksix/grid.hpp"

#include <algorithm>

#include "ksix/error.hpp"

namespace ksix {

namespace {

const AbelianGroup* known(const DiagramSpec& spec, const std::string& id) {
  auto it = spec.nodes.find(id);
  if (it == spec.nodes.end()) throw MathError("unknown node id '" + id + "'");
  return it->second ? &*it->second : nullptr;
}

// The map from -> to when it is known, nullopt otherwise.
std::optional<GroupHom> known_map(const DiagramSpec& spec, const std::string& from, const std::string& to) {
  const AbelianGroup* a = known(spec, from);
  const AbelianGroup* b = known(spec, to);
  if (!a || !b) return std::nullopt;
  for (const auto& e : spec.edges)
    if (e.from == from && e.to == to && e.matrix) return GroupHom(*a, *b, *e.matrix);
  if (a->is_trivial() || b->is_trivial()) return GroupHom::zero(*a, *b);
  return std::nullopt;
}

}  // namespace

std::string describe(const NormalizedConstraint& c) {
  switch (c.kind) {
    case NormalizedConstraint::Kind::ShortExact:
      return c.origin + ": 0 -> " + to_string(c.sub) + " -> X -> " + to_string(c.quotient) + " -> 0";
    case NormalizedConstraint::Kind::QuotientOf:
      return c.origin + ": X is a quotient of " + to_string(c.source);
    case NormalizedConstraint::Kind::ExponentDivides:
      return c.origin + ": exponent of X divides " + c.value.get_str();
  }
  return c.origin;
}

void validate_spec(const DiagramSpec& spec) {
  std::size_t unknowns = 0;
  for (const auto& [id, g] : spec.nodes)
    if (!g) ++unknowns;
  if (unknowns != 1) throw MathError("diagram must have exactly one unknown node, found " + std::to_string(unknowns));
  auto it = spec.nodes.find(spec.unknown);
  if (it == spec.nodes.end() || it->second) throw MathError("'unknown' must name the unknown node");

  for (const auto& e : spec.edges) {
    const AbelianGroup* a = known(spec, e.from);
    const AbelianGroup* b = known(spec, e.to);
    if (!e.matrix) continue;
    if (!a || !b) throw MathError("edge " + e.from + " -> " + e.to + " touches the unknown and cannot carry a matrix");
    try {
      GroupHom(*a, *b, *e.matrix);
    } catch (const MathError& err) {
      throw MathError("edge " + e.from + " -> " + e.to + ": " + err.what());
    }
  }

  // Known squares: two known length-two routes between the same endpoints.
  for (const auto& e1 : spec.edges)
    for (const auto& e2 : spec.edges) {
      if (e1.to != e2.from) continue;
      for (const auto& e3 : spec.edges)
        for (const auto& e4 : spec.edges) {
          if (e3.from != e1.from || e4.to != e2.to || e3.to != e4.from || e3.to == e1.to) continue;
          auto f1 = known_map(spec, e1.from, e1.to), f2 = known_map(spec, e2.from, e2.to);
          auto f3 = known_map(spec, e3.from, e3.to), f4 = known_map(spec, e4.from, e4.to);
          if (!f1 || !f2 || !f3 || !f4) continue;
          if (!(compose(*f2, *f1) == compose(*f4, *f3)))
            throw MathError("square " + e1.from + " -> {" + e1.to + ", " + e3.to + "} -> " + e2.to +
                            " does not commute");
        }
    }

  for (std::size_t k = 0; k < spec.exact_paths.size(); ++k) {
    const auto& path = spec.exact_paths[k];
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      auto in = known_map(spec, path[i - 1], path[i]);
      auto out = known_map(spec, path[i], path[i + 1]);
      if (in && out && !is_exact_at(*in, *out))
        throw MathError("exact path " + std::to_string(k) + " is not exact at node '" + path[i] + "'");
    }
  }
}

std::vector<NormalizedConstraint> normalize(const DiagramSpec& spec) {
  validate_spec(spec);
  std::vector<NormalizedConstraint> out;
  for (std::size_t k = 0; k < spec.exact_paths.size(); ++k) {
    const auto& path = spec.exact_paths[k];
    const std::string origin = "path " + std::to_string(k);
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] != spec.unknown) continue;

      // 0 -> im(u) -> X -> im(v) -> 0 where u enters X and v leaves it.
      std::optional<AbelianGroup> image_in;   // known im(u)
      std::optional<AbelianGroup> quotient_of;  // im(u) is some quotient of this
      if (i >= 1) {
        const AbelianGroup* left = known(spec, path[i - 1]);
        if (left->is_trivial()) {
          image_in = AbelianGroup();
        } else if (i >= 2) {
          auto a = known_map(spec, path[i - 2], path[i - 1]);
          if (a)
            image_in = cokernel(*a).group;
          else
            quotient_of = *left;
        } else {
          quotient_of = *left;
        }
      }
      std::optional<AbelianGroup> image_out;  // known im(v)
      if (i + 1 < path.size()) {
        const AbelianGroup* right = known(spec, path[i + 1]);
        if (right->is_trivial()) {
          image_out = AbelianGroup();
        } else if (i + 2 < path.size()) {
          auto b = known_map(spec, path[i + 1], path[i + 2]);
          if (b) image_out = kernel(*b).group;
        }
      }

      NormalizedConstraint c;
      c.origin = origin;
      if (image_in && image_out) {
        c.kind = NormalizedConstraint::Kind::ShortExact;
        c.sub = *image_in;
        c.quotient = *image_out;
      } else if (quotient_of && image_out && image_out->is_trivial()) {
        c.kind = NormalizedConstraint::Kind::QuotientOf;
        c.source = *quotient_of;
      } else {
        throw MathError(origin + " cannot be reduced around the unknown node");
      }
      out.push_back(std::move(c));
    }
  }
  for (std::size_t k = 0; k < spec.constraints.size(); ++k) {
    const auto& g = spec.constraints[k];
    NormalizedConstraint c;
    c.origin = "constraint " + std::to_string(k);
    if (g.kind == GridConstraint::Kind::QuotientOf) {
      if (!g.group) throw MathError(c.origin + ": quotient_of needs a group");
      c.kind = NormalizedConstraint::Kind::QuotientOf;
      c.source = *g.group;
    } else {
      if (g.value < 1) throw MathError(c.origin + ": exponent bound must be positive");
      c.kind = NormalizedConstraint::Kind::ExponentDivides;
      c.value = g.value;
    }
    out.push_back(std::move(c));
  }
  return out;
}

GridSolution solve(const DiagramSpec& spec, std::uint64_t bound) {
  GridSolution sol;
  sol.constraints = normalize(spec);

  bool seeded = false;
  std::vector<SolvedClass> candidates;
  for (const auto& c : sol.constraints) {
    if (c.kind != NormalizedConstraint::Kind::ShortExact) continue;
    auto middles = extension_middles(c.quotient, c.sub, bound);
    if (!seeded) {
      for (auto& m : middles)
        candidates.push_back({m.middle, m.representative.middle, {m.representative}});
      seeded = true;
      continue;
    }
    std::vector<SolvedClass> kept;
    for (auto& cand : candidates) {
      auto it = std::find_if(middles.begin(), middles.end(), [&](const auto& m) { return m.middle == cand.form; });
      if (it == middles.end()) continue;
      cand.witnesses.push_back(it->representative);
      kept.push_back(std::move(cand));
    }
    candidates = std::move(kept);
  }
  if (!seeded) throw MathError("no short exact constraint around the unknown; candidates are unbounded");

  for (const auto& c : sol.constraints) {
    auto pass = [&](const SolvedClass& s) {
      switch (c.kind) {
        case NormalizedConstraint::Kind::QuotientOf:
          return exists_epimorphism(c.source, s.group);
        case NormalizedConstraint::Kind::ExponentDivides: {
          Order e = exponent(s.group);
          return e.has_value() && mpz_divisible_p(c.value.get_mpz_t(), e->get_mpz_t()) != 0;
        }
        default:
          return true;
      }
    };
    candidates.erase(std::remove_if(candidates.begin(), candidates.end(), [&](const auto& s) { return !pass(s); }),
                     candidates.end());
  }
  for (const auto& s : candidates)
    for (const auto& w : s.witnesses)
      if (!w.is_exact()) throw MathError("internal: witness extension is not exact");

  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) { return a.form < b.form; });
  sol.classes = std::move(candidates);
  return sol;
}

}  // namespace ksix
