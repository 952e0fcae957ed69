#ifndef CUBICMW_REPORT_HPP
#define CUBICMW_REPORT_HPP

#include <cubicmw/delpezzo.hpp>
#include <cubicmw/families.hpp>
#include <cubicmw/fibration.hpp>
#include <cubicmw/lattices.hpp>
#include <cubicmw/plane_curves.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cubicmw {

// JSON reports. Objects use sorted keys and every rational is a "p/q" string,
// so identical inputs give byte-identical dumps.

/// {model, invariants, fibers, euler_total, rank, trivial_lattice, mw_group}.
/// mw_group is null (with mw_group_note) when the trivial lattice is not in
/// the embedded table. Throws like fiber_configuration.
nlohmann::json fibration_report(const WeierstrassModel& m);

/// Base points, general position of the simple rational base points,
/// irreducibility of the generators and singular members. With a base point,
/// adds "fibration" from cubic_to_weierstrass.
nlohmann::json pencil_report(const CubicPencil& pencil, const std::optional<ProjPoint>& base = std::nullopt);

/// Instantiates a family member. A member is degenerate when it is not a
/// rational elliptic surface or its trivial lattice differs from the generic
/// one (0, A1, A2); otherwise "matches_label" compares the identified
/// Mordell-Weil lattice with the family's.
nlohmann::json family_report(Family f, const std::vector<Rat>& coefficients);

nlohmann::json lattice_report(const LatticeName& name, const std::optional<Rat>& minimal_norm = std::nullopt,
                              bool list_vectors = false);

nlohmann::json delpezzo_report(int m, bool list_classes = false);

/// Indented "key: value" text for a report.
std::string render_summary(const nlohmann::json& report);

}  // namespace cubicmw

#endif  // CUBICMW_REPORT_HPP
