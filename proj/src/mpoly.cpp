#include <cubicmw/mpoly.hpp>

namespace cubicmw {

HomogeneousPoly3::HomogeneousPoly3(Poly3 poly, int degree) : poly_(std::move(poly)), degree_(degree) {
  if (degree < 0) throw domain_error("negative degree");
  for (const auto& [e, c] : poly_.terms())
    if (e[0] + e[1] + e[2] != degree) throw domain_error("form is not homogeneous of degree " + std::to_string(degree));
}

HomogeneousPoly3::HomogeneousPoly3(Poly3 poly) : poly_(std::move(poly)) {
  if (poly_.is_zero()) throw domain_error("cannot infer the degree of the zero form");
  if (!poly_.is_homogeneous()) throw domain_error("form is not homogeneous");
  degree_ = poly_.total_degree();
}

HomogeneousPoly3 HomogeneousPoly3::derivative(std::size_t var) const {
  return HomogeneousPoly3(poly_.derivative(var), degree_ > 0 ? degree_ - 1 : 0);
}

}  // namespace cubicmw
