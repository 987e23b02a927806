#include "ff/isomorphism.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ff/error.hpp"
#include "ff/factorization.hpp"

namespace ff {

namespace {

void require_same_order(const FieldSpec& a, const FieldSpec& b) {
  if (a.characteristic() != b.characteristic() || a.degree() != b.degree()) {
    throw OrderMismatch("GF(" + std::to_string(a.order()) + ") vs GF(" + std::to_string(b.order()) + ")");
  }
  if (a.order() > (1u << 12)) {
    throw ScaleLimitExceeded("isomorphism tables need q <= 4096, got " + std::to_string(a.order()));
  }
}

}  // namespace

FieldIsomorphism::FieldIsomorphism(FieldSpec source, FieldSpec target, FieldElement root_image,
                                   std::vector<FieldElement> mapping)
    : source_(std::move(source)),
      target_(std::move(target)),
      root_image_(std::move(root_image)),
      mapping_(std::move(mapping)) {
  if (mapping_.size() != source_.order()) {
    throw OrderMismatch("mapping has " + std::to_string(mapping_.size()) + " entries, source has " +
                        std::to_string(source_.order()) + " elements");
  }
  if (!(root_image_.field() == target_)) throw FieldMismatch("root image outside the target field");
  for (const auto& m : mapping_) {
    if (!(m.field() == target_)) throw FieldMismatch("mapping value outside the target field");
  }
}

FieldIsomorphism FieldIsomorphism::from_table(FieldSpec source, FieldSpec target,
                                              std::vector<FieldElement> mapping) {
  if (mapping.size() != source.order()) throw OrderMismatch("mapping size differs from source order");
  FieldElement root = mapping.at(FieldElement::variable(source).index());
  return FieldIsomorphism(std::move(source), std::move(target), std::move(root), std::move(mapping));
}

FieldElement FieldIsomorphism::operator()(const FieldElement& a) const {
  if (!(a.field() == source_)) throw FieldMismatch("element outside the source field");
  return mapping_[a.index()];
}

FieldIsomorphism isomorphism_from_root(const FieldSpec& source, const FieldSpec& target,
                                       const FieldElement& root_image) {
  require_same_order(source, target);
  if (!(root_image.field() == target)) throw FieldMismatch("root image outside the target field");
  // g(a) = sum g_i a^i is linear in the coefficients of g, so tabulate
  // c * a^i for every digit c and sum one entry per coefficient
  const std::uint32_t p = source.characteristic().value();
  const unsigned r = source.degree();
  std::vector<FieldElement> multiples;
  multiples.reserve(std::size_t{p} * r);
  FieldElement power = FieldElement::one(target);
  for (unsigned i = 0; i < r; ++i) {
    FieldElement acc = FieldElement::zero(target);
    for (std::uint32_t c = 0; c < p; ++c) {
      multiples.push_back(acc);
      acc = acc + power;
    }
    power = power * root_image;
  }
  std::vector<FieldElement> mapping;
  mapping.reserve(source.order());
  for (std::uint64_t idx = 0; idx < source.order(); ++idx) {
    FieldElement image = FieldElement::zero(target);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < r; ++i, v /= p) image = image + multiples[i * p + v % p];
    mapping.push_back(std::move(image));
  }
  return FieldIsomorphism(source, target, root_image, std::move(mapping));
}

FieldIsomorphism build_isomorphism(const FieldSpec& source, const FieldSpec& target) {
  require_same_order(source, target);
  // first root in enumeration order, i.e. roots_in_field(...).front()
  for (std::uint64_t i = 0; i < target.order(); ++i) {
    const FieldElement a = FieldElement::from_index(target, i);
    if (eval_in_field(source.modulus(), a).is_zero()) return isomorphism_from_root(source, target, a);
  }
  throw InternalError("modulus " + poly_format(source.modulus(), source.variable()) +
                      " has no root in the target field");
}

std::vector<FieldIsomorphism> enumerate_isomorphisms(const FieldSpec& source, const FieldSpec& target) {
  require_same_order(source, target);
  std::vector<FieldIsomorphism> out;
  for (const auto& a : roots_in_field(source.modulus(), target)) {
    out.push_back(isomorphism_from_root(source, target, a));
  }
  return out;
}

FieldIsomorphism compose(const FieldIsomorphism& first, const FieldIsomorphism& second) {
  if (!(first.target() == second.source())) throw FieldMismatch("maps do not compose");
  std::vector<FieldElement> mapping;
  mapping.reserve(first.mapping().size());
  for (const auto& m : first.mapping()) mapping.push_back(second(m));
  return FieldIsomorphism(first.source(), second.target(), second(first.root_image()),
                          std::move(mapping));
}

IsomorphismReport verify_isomorphism(const FieldIsomorphism& iso, std::uint64_t seed,
                                     std::uint64_t samples) {
  IsomorphismReport rep;
  const FieldSpec& src = iso.source();
  const std::uint64_t q = src.order();

  rep.root_is_root = eval_in_field(src.modulus(), iso.root_image()).is_zero();

  std::vector<bool> hit(iso.target().order(), false);
  rep.bijective = iso.target().order() == q;
  for (std::uint64_t i = 0; i < q && rep.bijective; ++i) {
    const auto idx = iso.mapping()[i].index();
    if (hit[idx]) {
      rep.bijective = false;
      const auto first = std::find(iso.mapping().begin(), iso.mapping().end(), iso.mapping()[i]);
      rep.witness = IsomorphismWitness{
          'b', FieldElement::from_index(src, static_cast<std::uint64_t>(first - iso.mapping().begin())),
          FieldElement::from_index(src, i)};
    }
    hit[idx] = true;
  }

  rep.additive = rep.multiplicative = true;
  const auto check_pair = [&](std::uint64_t i, std::uint64_t j) {
    const FieldElement u = FieldElement::from_index(src, i), v = FieldElement::from_index(src, j);
    ++rep.pairs_checked;
    if (iso(u + v) != iso(u) + iso(v)) {
      rep.additive = false;
      if (!rep.witness) rep.witness = IsomorphismWitness{'+', u, v};
    }
    if (iso(u * v) != iso(u) * iso(v)) {
      rep.multiplicative = false;
      if (!rep.witness) rep.witness = IsomorphismWitness{'*', u, v};
    }
  };

  if (q <= 64) {
    rep.exhaustive = true;
    for (std::uint64_t i = 0; i < q; ++i) {
      for (std::uint64_t j = i; j < q; ++j) check_pair(i, j);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const auto i = pick(rng);
      check_pair(i, pick(rng));
    }
  }
  // 1 must map to 1; a multiplicative bijection guarantees it, a failing map may not
  if (!iso(FieldElement::one(src)).is_one() && rep.multiplicative) {
    rep.multiplicative = false;
    if (!rep.witness) rep.witness = IsomorphismWitness{'*', FieldElement::one(src), FieldElement::one(src)};
  }
  return rep;
}

nlohmann::json isomorphism_to_json(const FieldIsomorphism& iso) {
  nlohmann::json pairs = nlohmann::json::array();
  for (std::uint64_t i = 0; i < iso.source().order(); ++i) {
    pairs.push_back({format_element(FieldElement::from_index(iso.source(), i)),
                     format_element(iso.mapping()[i])});
  }
  return {{"source_modulus", poly_format(iso.source().modulus(), iso.source().variable())},
          {"target_modulus", poly_format(iso.target().modulus(), iso.target().variable())},
          {"root_image", format_element(iso.root_image())},
          {"pairs", std::move(pairs)}};
}

std::string isomorphism_to_text(const FieldIsomorphism& iso) {
  std::vector<std::string> lhs, rhs;
  std::size_t lw = 0, rw = 0;
  for (std::uint64_t i = 0; i < iso.source().order(); ++i) {
    lhs.push_back(format_element(FieldElement::from_index(iso.source(), i)));
    rhs.push_back(format_element(iso.mapping()[i]));
    lw = std::max(lw, lhs.back().size());
    rw = std::max(rw, rhs.back().size());
  }
  const auto entry = [&](std::size_t i) {
    return std::string(lw - lhs[i].size(), ' ') + lhs[i] + " -> " + rhs[i] +
           std::string(rw - rhs[i].size(), ' ');
  };
  std::ostringstream os;
  os << "sigma: " << poly_format(iso.source().modulus(), iso.source().variable()) << " -> "
     << poly_format(iso.target().modulus(), iso.target().variable()) << ", "
     << iso.source().variable() << " -> " << format_element(iso.root_image()) << '\n';
  const std::size_t half = (lhs.size() + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    std::string line = "  " + entry(i);
    if (i + half < lhs.size()) line += "    " + entry(i + half);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace ff
