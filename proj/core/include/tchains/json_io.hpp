#pragma once

#include <nlohmann/json.hpp>

#include <vector>

#include "tchains/chain.hpp"
#include "tchains/combing.hpp"
#include "tchains/group.hpp"
#include "tchains/homotopy.hpp"
#include "tchains/resolutions.hpp"
#include "tchains/rips.hpp"

namespace tchains {

using Json = nlohmann::json;

// group specs: {"family":"free","rank":2} | {"family":"abelian","rank":2[,"generators":[[..],..]]}
//            | {"family":"finite","table":[[..],..],"generators":[..]}
Json group_to_json(const Group& g);
Group group_from_json(const Json& j);

// elements: signed index list (free) / integer list (abelian) / bare index (finite)
Json element_to_json(const Group& g, const GroupElement& x);
GroupElement element_from_json(const Group& g, const Json& j);

// chains: {"degree":n,"terms":[{"tuple":[elem,..],"coeff":"p/q"},..]}
Json chain_to_json(const Group& g, const Chain& c);
Chain chain_from_json(const Group& g, const Json& j);

// chain lists: {"chains":[..]} or a bare array
Json chain_list_to_json(const Group& g, const std::vector<Chain>& chains);
std::vector<Chain> chain_list_from_json(const Group& g, const Json& j);

// combings: {"kind":"free_prefix","rank":r} | {"kind":"abelian_staircase","rank":n}
//         | {"kind":"table","group":..,"entries":[..],"stab":[..],..}
Json combing_to_json(const Combing& c);
Combing combing_from_json(const Json& j);

// point maps: {"kind":"identity"|"constant"|"combing_stage"|"table"|"compose", ..}
Json point_map_to_json(const Group& g, const PointMap& m);
PointMap point_map_from_json(const Group& g, const Json& j);

// finite metric spaces: {"points":[..],"dist":[[..],..]} with exact entries
Json metric_space_to_json(const FiniteMetricSpace& space);
FiniteMetricSpace metric_space_from_json(const Json& j);

// reports
Json rat_to_json(const Rat& q);           // {"value":"p/q","decimal":"0.75"}
Rat rat_from_json(const Json& j);         // accepts "p/q" strings and integers
Json combing_report_to_json(const Combing& combing, const CombingReport& report);
Json profile_report_to_json(const Group& g, const ProfileReport& report);
Json growth_report_to_json(const Group& g, const GrowthReport& report);
Json cohomology_report_to_json(const Group& g, const std::string& method,
                               const std::vector<long long>& dims);

}  // namespace tchains
