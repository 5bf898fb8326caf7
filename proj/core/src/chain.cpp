#include "tchains/chain.hpp"

#include <stdexcept>

namespace tchains {

Chain Chain::basis(Tuple t) {
  if (!t.nondegenerate()) {
    throw std::invalid_argument("basis tuple has an adjacent repetition");
  }
  Chain c(t.degree());
  c.terms_.emplace(std::move(t), Rat(1));
  return c;
}

void Chain::add(const Tuple& t, const Rat& c) {
  if (c == 0) return;
  if (t.degree() != degree_) throw std::invalid_argument("tuple degree mismatch");
  if (!t.nondegenerate()) return;  // projected to zero in the normalized complex
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Chain::coefficient(const Tuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rat(0) : it->second;
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("chain degree mismatch");
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("chain degree mismatch");
  for (const auto& [t, c] : other.terms_) add(t, -c);
  return *this;
}

Chain& Chain::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= scalar;
  return *this;
}

Chain Chain::operator-() const {
  Chain out(degree_);
  for (const auto& [t, c] : terms_) out.terms_.emplace(t, -c);
  return out;
}

NormSpec NormSpec::polynomial(long long k) {
  if (k < 0) throw std::invalid_argument("polynomial weight exponent must be >= 0");
  return NormSpec(Kind::Polynomial, k, Rat(0));
}

NormSpec NormSpec::exponential(Rat alpha) {
  if (alpha <= 1) throw std::invalid_argument("exponential weight base must be > 1");
  return NormSpec(Kind::Exponential, 0, std::move(alpha));
}

Chain boundary(const Chain& c) {
  if (c.degree() < 1) {
    throw std::invalid_argument("boundary requires degree >= 1 (degree 0 has the augmentation)");
  }
  Chain out(c.degree() - 1);
  for (const auto& [t, coeff] : c.terms()) {
    const std::size_t n1 = t.points.size();
    for (std::size_t j = 0; j < n1; ++j) {
      Tuple face;
      face.points.reserve(n1 - 1);
      for (std::size_t i = 0; i < n1; ++i) {
        if (i != j) face.points.push_back(t.points[i]);
      }
      out.add(face, (j % 2 == 0) ? coeff : Rat(-coeff));
    }
  }
  return out;
}

Rat augmentation(const Chain& c) {
  if (c.degree() != 0) throw std::invalid_argument("augmentation requires degree 0");
  Rat sum(0);
  for (const auto& [t, coeff] : c.terms()) sum += coeff;
  return sum;
}

namespace {

long long tuple_length_sum(const Group& g, const Tuple& t) {
  long long sum = 0;
  for (const auto& x : t.points) sum += g.word_length(x);
  return sum;
}

}  // namespace

Rat weighted_norm(const Group& g, const Chain& c, const NormSpec& spec) {
  Rat sum(0);
  for (const auto& [t, coeff] : c.terms()) {
    const long long lsum = tuple_length_sum(g, t);
    Rat weight = spec.kind() == NormSpec::Kind::Polynomial
                     ? rat_pow(rat_of(lsum + 1), static_cast<unsigned long>(spec.exponent()))
                     : rat_pow(spec.base(), static_cast<unsigned long>(lsum));
    sum += rat_abs(coeff) * weight;
  }
  return sum;
}

long long control_radius(const Group& g, const Chain& c) {
  long long radius = 0;
  for (const auto& [t, coeff] : c.terms()) {
    const auto& pts = t.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        radius = std::max(radius, g.distance(pts[i], pts[j]));
      }
    }
  }
  return radius;
}

Chain convolve(const Group& g, const Chain& a, const Chain& b) {
  if (a.degree() != 0 || b.degree() != 0) {
    throw std::invalid_argument("convolution requires degree-0 chains");
  }
  Chain out(0);
  for (const auto& [s, cs] : a.terms()) {
    for (const auto& [t, ct] : b.terms()) {
      out.add(Tuple{{g.multiply(s.points[0], t.points[0])}}, cs * ct);
    }
  }
  return out;
}

Chain diagonal_action(const Group& g, const GroupElement& x, const Chain& c) {
  g.validate(x);
  Chain out(c.degree());
  for (const auto& [t, coeff] : c.terms()) {
    Tuple image;
    image.points.reserve(t.points.size());
    for (const auto& p : t.points) image.points.push_back(g.multiply(x, p));
    out.add(image, coeff);
  }
  return out;
}

}  // namespace tchains
