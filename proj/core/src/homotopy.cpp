#include "tchains/homotopy.hpp"

#include <stdexcept>

#include "tchains/combing.hpp"

namespace tchains {

PointMap PointMap::identity() { return PointMap(Identity{}); }

PointMap PointMap::constant(GroupElement pt) { return PointMap(Constant{std::move(pt)}); }

PointMap PointMap::combing_stage(std::shared_ptr<const Combing> combing, long long n) {
  if (!combing) throw std::invalid_argument("combing stage requires a combing");
  if (n < 0) throw std::invalid_argument("combing stage index must be >= 0");
  return PointMap(Stage{std::move(combing), n});
}

PointMap PointMap::table(std::map<GroupElement, GroupElement> entries) {
  return PointMap(Table{std::move(entries)});
}

PointMap PointMap::compose(PointMap outer, PointMap inner) {
  return PointMap(Compose{std::make_shared<const PointMap>(std::move(outer)),
                          std::make_shared<const PointMap>(std::move(inner))});
}

GroupElement PointMap::operator()(const GroupElement& x) const {
  return std::visit(
      [&x](const auto& rule) -> GroupElement {
        using R = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<R, Identity>) {
          return x;
        } else if constexpr (std::is_same_v<R, Constant>) {
          return rule.pt;
        } else if constexpr (std::is_same_v<R, Stage>) {
          return rule.combing->apply(rule.n, x);
        } else if constexpr (std::is_same_v<R, Table>) {
          auto it = rule.entries.find(x);
          if (it == rule.entries.end()) {
            throw std::invalid_argument("point outside the domain of a table-backed map");
          }
          return it->second;
        } else {
          return (*rule.outer)((*rule.inner)(x));
        }
      },
      impl_);
}

Chain pushforward(const PointMap& f, const Chain& c) {
  Chain out(c.degree());
  for (const auto& [t, coeff] : c.terms()) {
    Tuple image;
    image.points.reserve(t.points.size());
    for (const auto& p : t.points) image.points.push_back(f(p));
    out.add(image, coeff);
  }
  return out;
}

Chain elementary_homotopy(const PointMap& f, const PointMap& fp, const Chain& c) {
  const std::size_t n1 = static_cast<std::size_t>(c.degree()) + 1;
  Chain out(c.degree() + 1);
  for (const auto& [t, coeff] : c.terms()) {
    std::vector<GroupElement> fs, fps;
    fs.reserve(n1);
    fps.reserve(n1);
    for (const auto& p : t.points) {
      fs.push_back(f(p));
      fps.push_back(fp(p));
    }
    for (std::size_t j = 0; j < n1; ++j) {
      Tuple prism;
      prism.points.reserve(n1 + 1);
      for (std::size_t i = 0; i <= j; ++i) prism.points.push_back(fs[i]);
      for (std::size_t i = j; i < n1; ++i) prism.points.push_back(fps[i]);
      out.add(prism, (j % 2 == 0) ? coeff : Rat(-coeff));
    }
  }
  return out;
}

HomotopyCheck verify_homotopy_identity(const PointMap& f, const PointMap& fp, const Chain& c) {
  Chain lhs = boundary(elementary_homotopy(f, fp, c));
  if (c.degree() >= 1) lhs += elementary_homotopy(f, fp, boundary(c));
  Chain rhs = pushforward(fp, c) - pushforward(f, c);
  Chain diff = lhs - rhs;
  return HomotopyCheck{diff.is_zero(), std::move(diff)};
}

}  // namespace tchains
