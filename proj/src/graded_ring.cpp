#include "acsum/graded_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace acsum {

std::shared_ptr<const RingPresentation> RingPresentation::create(std::vector<Generator> generators,
                                                                 int total_dimension,
                                                                 Monomial top_monomial) {
  if (total_dimension < 2 || total_dimension % 2 != 0)
    throw std::invalid_argument("ring: total dimension must be a positive even integer");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.name.empty()) throw std::invalid_argument("ring: generator with empty name");
    if (g.degree < 2 || g.degree % 2 != 0)
      throw std::invalid_argument("ring: generator '" + g.name + "' must have even degree >= 2");
    if (g.truncation < 1)
      throw std::invalid_argument("ring: generator '" + g.name + "' must have truncation >= 1");
    for (std::size_t j = 0; j < i; ++j)
      if (generators[j].name == g.name)
        throw std::invalid_argument("ring: duplicate generator '" + g.name + "'");
  }
  if (top_monomial.size() != generators.size())
    throw std::invalid_argument("ring: top monomial has wrong number of exponents");

  auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
  ring->generators_ = std::move(generators);
  ring->total_dimension_ = total_dimension;
  ring->top_ = std::move(top_monomial);
  for (std::size_t i = 0; i < ring->top_.size(); ++i)
    if (ring->top_[i] < 0 || ring->top_[i] > ring->generators_[i].truncation)
      throw std::invalid_argument("ring: top monomial is truncated to zero");
  if (ring->degree(ring->top_) != total_dimension)
    throw std::invalid_argument("ring: top monomial degree " + std::to_string(ring->degree(ring->top_)) +
                                " differs from total dimension " + std::to_string(total_dimension));
  return ring;
}

int RingPresentation::find(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<int>(i);
  return -1;
}

int RingPresentation::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * generators_[i].degree;
  return d;
}

bool RingPresentation::representable(const Monomial& m) const {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < 0 || m[i] > generators_[i].truncation) return false;
  return degree(m) <= total_dimension_;
}

bool RingPresentation::operator==(const RingPresentation& other) const {
  return generators_ == other.generators_ && total_dimension_ == other.total_dimension_ &&
         top_ == other.top_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

void require_same(const RingElement& a, const RingElement& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("ring: presentation mismatch");
}

}  // namespace

RingElement::RingElement(RingPtr ring, Terms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw std::invalid_argument("ring: null presentation");
  normalize();
}

void RingElement::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || it->first.size() != ring_->rank() || !ring_->representable(it->first))
      it = terms_.erase(it);
    else
      ++it;
  }
}

RingElement RingElement::zero(RingPtr ring) { return RingElement(std::move(ring), {}); }

RingElement RingElement::constant(RingPtr ring, const Integer& value) {
  Monomial unit(ring ? ring->rank() : 0, 0);
  return RingElement(std::move(ring), {{unit, value}});
}

RingElement RingElement::term(RingPtr ring, Monomial m, const Integer& coefficient) {
  if (!ring || m.size() != ring->rank()) throw std::invalid_argument("ring: monomial has wrong arity");
  return RingElement(std::move(ring), {{std::move(m), coefficient}});
}

RingElement RingElement::generator(RingPtr ring, const std::string& name) {
  const int idx = ring ? ring->find(name) : -1;
  if (idx < 0) throw std::invalid_argument("ring: unknown generator '" + name + "'");
  Monomial m(ring->rank(), 0);
  m[static_cast<std::size_t>(idx)] = 1;
  return term(std::move(ring), std::move(m), 1);
}

Integer RingElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

RingElement RingElement::component(int degree) const {
  if (degree % 2 != 0) throw std::invalid_argument("ring: component degree must be even");
  if (degree < 0 || degree > ring_->total_dimension())
    throw std::invalid_argument("ring: component degree out of range");
  Terms out;
  for (const auto& [m, c] : terms_)
    if (ring_->degree(m) == degree) out.emplace(m, c);
  return RingElement(ring_, std::move(out));
}

bool RingElement::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_)
    if (ring_->degree(m) != degree) return false;
  return true;
}

RingElement RingElement::conjugate() const {
  Terms out = terms_;
  for (auto& [m, c] : out)
    if ((ring_->degree(m) / 2) % 2 != 0) c = -c;
  return RingElement(ring_, std::move(out));
}

RingElement RingElement::operator-() const {
  Terms out = terms_;
  for (auto& [m, c] : out) c = -c;
  return RingElement(ring_, std::move(out));
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  RingElement::Terms out = a.terms_;
  for (const auto& [m, c] : b.terms_) out[m] += c;
  return RingElement(a.ring_, std::move(out));
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  const auto& ring = *a.ring_;
  RingElement::Terms out;
  Monomial m(ring.rank());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      if (!ring.representable(m)) continue;
      out[m] += ca * cb;
    }
  }
  return RingElement(a.ring_, std::move(out));
}

RingElement operator*(const Integer& s, const RingElement& a) {
  RingElement::Terms out = a.terms_;
  for (auto& [m, c] : out) c *= s;
  return RingElement(a.ring_, std::move(out));
}

bool RingElement::operator==(const RingElement& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  // Ascending degree, then exponent order, so constants lead.
  std::vector<std::pair<const Monomial*, const Integer*>> ordered;
  for (const auto& [m, c] : terms_) ordered.emplace_back(&m, &c);
  std::stable_sort(ordered.begin(), ordered.end(), [this](const auto& l, const auto& r) {
    return ring_->degree(*l.first) < ring_->degree(*r.first);
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& [mp, cp] : ordered) {
    const Monomial& m = *mp;
    Integer c = *cp;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->generators()[i].name;
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty())
      os << c.str();
    else if (c == 1)
      os << mono;
    else
      os << c.str() << "*" << mono;
  }
  return os.str();
}

RingElement power(const RingElement& a, unsigned exponent) {
  RingElement result = RingElement::one(a.ring());
  RingElement base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace acsum
