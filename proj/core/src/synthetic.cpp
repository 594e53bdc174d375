#include "fluid/synthetic.hpp"

#include <algorithm>
#include <ostream>

#include "fluid/errors.hpp"
#include "fluid/nquads.hpp"
#include "fluid/random.hpp"
#include "fluid/vocab.hpp"

namespace fluid {

std::string_view to_string(RdfsPosition position) {
  switch (position) {
    case RdfsPosition::kFirst:
      return "first";
    case RdfsPosition::kLast:
      return "last";
    case RdfsPosition::kMixed:
      return "mixed";
  }
  return "first";
}

RdfsPosition rdfs_position_from_string(std::string_view text) {
  if (text == "first") return RdfsPosition::kFirst;
  if (text == "last") return RdfsPosition::kLast;
  if (text == "mixed") return RdfsPosition::kMixed;
  throw InvalidConfig("unknown RDFS position '" + std::string(text) + "'");
}

namespace {

constexpr std::uint64_t kLiteral = ~std::uint64_t{0};

struct Keyed {
  double key;
  std::uint64_t seq;
  Quad quad;
};

class Generator {
 public:
  explicit Generator(const SyntheticOptions& o) : o_(o), rng_(o.seed) {
    if (o.instances == 0 || o.types == 0 || o.properties == 0 || o.sources == 0) {
      throw InvalidConfig("instances, types, properties and sources must be positive");
    }
  }

  std::vector<Quad> run() {
    build_profiles();
    assign_types();
    for (std::uint64_t i = 0; i < o_.instances; ++i) emit_instance(i);
    std::stable_sort(data_.begin(), data_.end(), [](const Keyed& a, const Keyed& b) {
      return a.key != b.key ? a.key < b.key : a.seq < b.seq;
    });
    std::vector<Quad> schema = schema_quads();

    std::vector<Quad> out;
    out.reserve(data_.size() + schema.size());
    if (o_.rdfs_position == RdfsPosition::kFirst) out = schema;
    for (auto& k : data_) out.push_back(std::move(k.quad));
    if (o_.rdfs_position == RdfsPosition::kLast) {
      out.insert(out.end(), schema.begin(), schema.end());
    } else if (o_.rdfs_position == RdfsPosition::kMixed) {
      for (auto& q : schema) {
        const auto at = static_cast<std::ptrdiff_t>(rng_.below(out.size() + 1));
        out.insert(out.begin() + at, std::move(q));
      }
    }
    return out;
  }

 private:
  Term type_term(std::uint64_t t) const { return Term::iri(o_.ns + "T" + std::to_string(t)); }
  Term property_term(std::uint64_t p) const {
    return Term::iri(o_.ns + "p" + std::to_string(p));
  }
  Term source_term(std::uint64_t s) const {
    return Term::iri(o_.ns + "ds/" + std::to_string(s));
  }
  Term subject_term(std::uint64_t i) const {
    if (blank_[i]) return Term::blank("b" + std::to_string(i));
    return Term::iri(o_.ns + "i/" + std::to_string(i));
  }

  // Skewed toward low indices so a few types dominate.
  std::uint64_t skewed(std::uint64_t n) {
    const double u = rng_.unit();
    return std::min<std::uint64_t>(n - 1, static_cast<std::uint64_t>(u * u * static_cast<double>(n)));
  }

  void build_profiles() {
    const std::size_t size = std::min<std::size_t>(o_.profile_size, o_.properties);
    profiles_.resize(o_.types);
    for (auto& profile : profiles_) {
      for (std::size_t p : rng_.sample(o_.properties, size)) {
        profile.emplace_back(p, rng_.chance(o_.link_rate) ? rng_.below(o_.types) : kLiteral);
      }
      std::sort(profile.begin(), profile.end());
    }
  }

  void assign_types() {
    primary_.resize(o_.instances);
    blank_.resize(o_.instances);
    by_type_.resize(o_.types);
    for (std::uint64_t i = 0; i < o_.instances; ++i) {
      primary_[i] = skewed(o_.types);
      blank_[i] = rng_.chance(o_.blank_rate);
      by_type_[primary_[i]].push_back(i);
    }
  }

  void add(std::uint64_t i, Term p, Term obj, std::uint64_t home) {
    const std::uint64_t source =
        rng_.chance(o_.extra_source_rate) ? rng_.below(o_.sources) : home;
    const double key =
        static_cast<double>(i) + rng_.unit() * static_cast<double>(o_.interleave);
    data_.push_back({key, seq_++, Quad{subject_term(i), std::move(p), std::move(obj),
                                       source_term(source)}});
  }

  Term object_for(std::uint64_t i, std::uint64_t target_type) {
    if (target_type == kLiteral) return Term::literal("v" + std::to_string(rng_.below(1000)));
    const auto& pool = by_type_[target_type];
    if (pool.empty()) return subject_term(rng_.below(o_.instances));
    auto first = pool.begin();
    auto last = pool.end();
    if (o_.link_span > 0) {
      const auto near_first = std::lower_bound(first, last, i > o_.link_span ? i - o_.link_span : 0);
      const auto near_last = std::upper_bound(near_first, last, i + o_.link_span);
      if (near_first != near_last) {
        first = near_first;
        last = near_last;
      }
    }
    return subject_term(*(first + static_cast<std::ptrdiff_t>(
                                      rng_.below(static_cast<std::uint64_t>(last - first)))));
  }

  void emit_instance(std::uint64_t i) {
    const std::uint64_t home = rng_.below(o_.sources);
    const Term type = Term::iri(std::string(vocab::kRdfType));
    if (!rng_.chance(o_.untyped_rate)) {
      add(i, type, type_term(primary_[i]), home);
      if (rng_.chance(o_.extra_type_rate)) add(i, type, type_term(rng_.below(o_.types)), home);
    }
    bool any = false;
    for (const auto& [p, target] : profiles_[primary_[i]]) {
      if (!rng_.chance(o_.property_rate)) continue;
      any = true;
      do {
        add(i, property_term(p), object_for(i, target), home);
      } while (rng_.chance(o_.fan_out_rate));
    }
    if (!any || rng_.chance(o_.extra_property_rate)) {
      const std::uint64_t target = rng_.chance(o_.link_rate) ? rng_.below(o_.types) : kLiteral;
      add(i, property_term(rng_.below(o_.properties)), object_for(i, target), home);
    }
    if (rng_.chance(o_.same_as_rate)) {
      add(i, Term::iri(std::string(vocab::kOwlSameAs)), subject_term(rng_.below(o_.instances)),
          home);
    }
  }

  std::vector<Quad> schema_quads() {
    std::vector<Quad> out;
    auto axiom = [&](Term s, std::string_view p, Term o) {
      out.push_back(Quad{std::move(s), Term::iri(std::string(p)), std::move(o),
                         source_term(rng_.below(o_.sources))});
    };
    for (std::uint64_t t = 1; t < o_.types; ++t) {
      if (rng_.chance(o_.rdfs_rate)) {
        axiom(type_term(t), vocab::kRdfsSubClassOf, type_term(rng_.below(t)));
      }
    }
    for (std::uint64_t p = 0; p < o_.properties; ++p) {
      if (!rng_.chance(o_.rdfs_rate)) continue;
      switch (rng_.below(3)) {
        case 0:
          if (p > 0) {
            axiom(property_term(p), vocab::kRdfsSubPropertyOf, property_term(rng_.below(p)));
            break;
          }
          [[fallthrough]];
        case 1:
          axiom(property_term(p), vocab::kRdfsDomain, type_term(rng_.below(o_.types)));
          break;
        default:
          axiom(property_term(p), vocab::kRdfsRange, type_term(rng_.below(o_.types)));
          break;
      }
    }
    return out;
  }

  const SyntheticOptions& o_;
  Rng rng_;
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> profiles_;
  std::vector<std::uint64_t> primary_;
  std::vector<bool> blank_;
  std::vector<std::vector<std::uint64_t>> by_type_;
  std::vector<Keyed> data_;
  std::uint64_t seq_ = 0;
};

}  // namespace

std::vector<Quad> generate_synthetic(const SyntheticOptions& options) {
  return Generator(options).run();
}

void write_nquads(std::ostream& out, std::span<const Quad> quads) {
  for (const auto& q : quads) out << to_nquads(q) << '\n';
}

}  // namespace fluid
