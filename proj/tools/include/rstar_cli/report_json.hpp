#pragma once

#include <nlohmann/json.hpp>

#include "rstar/classify.hpp"
#include "rstar/finite_ring.hpp"
#include "rstar/ideal.hpp"
#include "rstar/lattice.hpp"
#include "rstar/pid.hpp"
#include "rstar/star.hpp"

namespace rstar::cli {

using json = nlohmann::ordered_json;

json ideal_json(const Ideal& ideal);
json axioms_json(const AxiomReport& report);
json classification_json(const ClassificationReport& report);
json star_json(const StarCheckResult& result, const IdealLattice& lattice);
json pid_star_json(const pid::PidStarResult& result);
json pid_a2_json(const pid::PidA2Result& result);

}  // namespace rstar::cli
