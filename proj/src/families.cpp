#include <cubicmw/families.hpp>

namespace cubicmw {

namespace {

struct Shape {
  const char* name;
  int p_count, q_count;
  const char* lattice;
};

const Shape& shape(Family f) {
  static const Shape shapes[] = {
      {"E8a", 4, 4, "E8"}, {"E8b", 3, 5, "E8"}, {"E7a", 2, 5, "E7v"},
      {"E7b", 3, 4, "E7v"}, {"E6a", 3, 3, "E6v"}, {"E6b", 3, 4, "E6v"},
  };
  return shapes[static_cast<int>(f)];
}

UniPoly t_power(int k) { return UniPoly::monomial(Rat(1), k); }

}  // namespace

Family parse_family(std::string_view name) {
  for (Family f : {Family::E8a, Family::E8b, Family::E7a, Family::E7b, Family::E6a, Family::E6b})
    if (name == shape(f).name) return f;
  throw Error(Error::Kind::Parse, "unknown family '" + std::string(name) + "'");
}

std::string to_string(Family f) { return shape(f).name; }

int family_arity(Family f) { return shape(f).p_count + shape(f).q_count; }

std::string family_lattice(Family f) { return shape(f).lattice; }

WeierstrassModel instantiate_family(Family f, const std::vector<Rat>& c) {
  const Shape& s = shape(f);
  if (static_cast<int>(c.size()) != family_arity(f))
    throw Error(Error::Kind::Parse, s.name + std::string(" takes ") + std::to_string(family_arity(f)) +
                                        " coefficients, got " + std::to_string(c.size()));
  const UniPoly p(std::vector<Rat>(c.begin(), c.begin() + s.p_count));
  const UniPoly q(std::vector<Rat>(c.begin() + s.p_count, c.end()));
  switch (f) {
    case Family::E8a: return WeierstrassModel::short_form(p, q + t_power(5));
    case Family::E8b: return WeierstrassModel(UniPoly(), t_power(2), UniPoly(), p, q + t_power(5));
    case Family::E7a: return WeierstrassModel::short_form(p + t_power(3), q);
    case Family::E7b: return WeierstrassModel(t_power(1), UniPoly(), UniPoly(), p, q - t_power(4));
    case Family::E6a: return WeierstrassModel(UniPoly(), UniPoly(), t_power(2), p, q);
    case Family::E6b: return WeierstrassModel(t_power(1), UniPoly(), UniPoly(), p, q);
  }
  throw domain_error("unknown family");
}

}  // namespace cubicmw
