#include "conesum/face_spec.hpp"

namespace conesum {

unsigned FaceSpec::dim() const {
  unsigned d = 0;
  for (const auto& p : parts) d += static_cast<unsigned>(p.blockLengths.size());
  return d;
}

namespace {

template <class Fn>
void forEachPositiveComposition(unsigned total, unsigned parts, Fn&& fn) {
  if (parts == 0) {
    if (total == 0) fn(std::vector<unsigned>{});
    return;
  }
  std::vector<unsigned> comp(parts);
  auto rec = [&](auto&& self, unsigned idx, unsigned remaining) -> void {
    if (idx + 1 == parts) {
      if (remaining >= 1) {
        comp[idx] = remaining;
        fn(comp);
      }
      return;
    }
    for (unsigned v = 1; v + (parts - idx - 1) <= remaining; ++v) {
      comp[idx] = v;
      self(self, idx + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

std::vector<FactorFace> factorFaces(const ConeFactor& f) {
  std::vector<FactorFace> out;
  if (f.family == Chamber::A) {
    for (unsigned r = 1; r <= f.size; ++r)
      forEachPositiveComposition(f.size, r, [&](const std::vector<unsigned>& comp) {
        out.push_back({comp, 0});
      });
    if (f.size == 0) out.push_back({{}, 0}); // not reachable: A sizes >= 1
  } else {
    for (unsigned s = 0; s <= f.size; ++s) {
      if (s == 0) {
        out.push_back({{}, f.size}); // the apex {0}
        continue;
      }
      for (unsigned prefix = s; prefix <= f.size; ++prefix)
        forEachPositiveComposition(prefix, s, [&](const std::vector<unsigned>& comp) {
          out.push_back({comp, f.size - prefix});
        });
    }
  }
  return out;
}

} // namespace

std::vector<FaceSpec> enumerateFaces(const ConeSpec& spec, unsigned k) {
  std::vector<std::vector<FactorFace>> perFactor;
  perFactor.reserve(spec.factors().size());
  for (const auto& f : spec.factors()) perFactor.push_back(factorFaces(f));

  std::vector<FaceSpec> out;
  std::vector<FactorFace> chosen(spec.factors().size());
  auto rec = [&](auto&& self, std::size_t idx, unsigned dimSoFar) -> void {
    if (dimSoFar > k) return;
    if (idx == perFactor.size()) {
      if (dimSoFar == k) out.push_back({spec, chosen});
      return;
    }
    for (const auto& ff : perFactor[idx]) {
      chosen[idx] = ff;
      self(self, idx + 1, dimSoFar + static_cast<unsigned>(ff.blockLengths.size()));
    }
  };
  rec(rec, 0, 0);
  return out;
}

Rational sparreAndersenWalkAngle(unsigned h) {
  return Rational::binomial(2 * static_cast<std::int64_t>(h), h) /
         Rational(4).pow(h);
}

Rational externalAngleExact(const FaceSpec& face) {
  Rational angle(1);
  for (const auto& p : face.parts) {
    for (unsigned len : p.blockLengths)
      angle /= Rational(static_cast<std::int64_t>(len));
    if (p.walkRemainder > 0) angle *= sparreAndersenWalkAngle(p.walkRemainder);
  }
  return angle;
}

} // namespace conesum
