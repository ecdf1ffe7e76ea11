#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "amol/approx.hpp"
#include "amol/cartoon.hpp"
#include "amol/consistency.hpp"
#include "amol/frame.hpp"
#include "amol/gramian.hpp"
#include "amol/molecule.hpp"
#include "amol/param.hpp"

namespace amol {

using Json = nlohmann::ordered_json;

// {kind, alpha, sigma, tau, angle_rule | shear_rule, truncation}
Json to_json(const Parametrization& p);
Parametrization parametrization_from_json(const Json& j);

Json to_json(const CartoonSpec& s);
CartoonSpec cartoon_from_json(const Json& j);

Json to_json(const MoleculeOrder& o);
Json to_json(const OrderCertificate& c);
Json to_json(const DecayReport& r);
Json to_json(const ConsistencyReport& r);
Json to_json(const ScaleSumFit& f);
Json to_json(const NtermCurve& c);
Json to_json(const TransferCertificate& t);
Json to_json(const CrossnormResult& r);

// Per-scale band and element counts plus every band's support box.
Json frame_summary(const Frame& f);

std::string samples_csv(const std::vector<GramianSample>& s);
std::string ladder_csv(const ConsistencyReport& r);
// One row per ladder rung; the fit is repeated on every row.
std::string curve_csv(const NtermCurve& c);
std::string weak_lp_csv(const WeakLpDiagnostic& d);

}  // namespace amol
