#pragma once

#include <json.hpp>

#include "branchlift/abelian_group.hpp"
#include "branchlift/cover.hpp"
#include "branchlift/enumerate.hpp"
#include "branchlift/errors.hpp"
#include "branchlift/lifting.hpp"
#include "branchlift/superelliptic.hpp"

namespace branchlift {

inline nlohmann::json element_to_json(const GroupElement& a) {
    return nlohmann::json(a.coeffs);
}

inline nlohmann::json tuple_to_json(const std::vector<GroupElement>& tuple) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : tuple) arr.push_back(element_to_json(a));
    return arr;
}

/// {"invariant_factors":[...],"tuple":[[...],...]} — the on-disk form of a
/// cover, shared by the CLI and test fixtures.
inline nlohmann::json cover_to_json(const CoverSpec& c) {
    return nlohmann::json{
        {"invariant_factors", c.group().invariant_factors()},
        {"tuple", tuple_to_json(c.tuple())},
    };
}

inline CoverSpec cover_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("invariant_factors") || !j.contains("tuple"))
        throw Error("cover JSON needs \"invariant_factors\" and \"tuple\"");
    GroupSpec g(j.at("invariant_factors").get<std::vector<std::int64_t>>());
    std::vector<GroupElement> tuple;
    for (const auto& entry : j.at("tuple"))
        tuple.push_back(g.element(entry.get<std::vector<std::int64_t>>()));
    return CoverSpec(std::move(g), std::move(tuple));
}

inline nlohmann::json witness_to_json(const Automorphism& psi) {
    nlohmann::json images = nlohmann::json::array();
    for (const auto& img : psi.images) images.push_back(element_to_json(img));
    return nlohmann::json{{"images", images}};
}

inline nlohmann::json invariants_to_json(const SurfaceInvariants& s) {
    return nlohmann::json{
        {"euler_characteristic", s.euler_characteristic},
        {"genus", s.genus},
        {"hyperbolic", s.hyperbolic},
    };
}

inline nlohmann::json row_to_json(const CensusRow& row) {
    nlohmann::json j{
        {"invariant_factors", row.group.invariant_factors()},
        {"k", row.k},
        {"tuple", tuple_to_json(row.tuple)},
        {"orbit_size", row.orbit_size},
        {"all_lift", row.all_lift},
        {"genus", row.genus},
        {"liftable_order", row.liftable_order},
        {"smod_iso", nullptr},
    };
    if (row.group.is_cyclic()) j["smod_iso"] = smod_iso(CoverSpec(row.group, row.tuple));
    return j;
}

/// Array of class rows plus a summary object with per-cell totals.
inline nlohmann::json report_to_json(const CensusReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) rows.push_back(row_to_json(row));

    nlohmann::json blocks = nlohmann::json::array();
    std::int64_t total_classes = 0, total_all_lift = 0;
    for (const auto& t : report.totals) {
        blocks.push_back(nlohmann::json{
            {"invariant_factors", t.group.invariant_factors()},
            {"k", t.k},
            {"classes", t.classes},
            {"all_lift_classes", t.all_lift_classes},
        });
        total_classes += t.classes;
        total_all_lift += t.all_lift_classes;
    }
    return nlohmann::json{
        {"rows", rows},
        {"summary",
         {
             {"blocks", blocks},
             {"total_classes", total_classes},
             {"total_all_lift_classes", total_all_lift},
             {"unlabeled", report.unlabeled},
         }},
    };
}

}  // namespace branchlift
