#pragma once

#include "devlat/io.hpp"

namespace devlat::cli {

// JSON Schema (draft-07) documents for every file format and report the
// command-line tool reads or writes.
inline Json schemas() {
    const Json id = {{"type", "string"}};
    const Json ids = {{"type", "array"}, {"items", id}};
    const Json id_or_int = {{"type", {"string", "integer"}}};
    const Json rational = {{"type", "string"}, {"pattern", "^-?[0-9]+(/[0-9]+)?$"}};
    const Json point = {{"type", "array"}, {"items", rational}};
    const Json nullable_point = {{"oneOf", {point, {{"type", "null"}}}}};
    const Json pair = {{"type", "array"}, {"items", id}, {"minItems", 2}, {"maxItems", 2}};
    const Json id_map = {{"type", "object"}, {"additionalProperties", ids}};

    Json poset = {{"type", "object"},
                  {"required", {"elements"}},
                  {"properties",
                   {{"elements", {{"type", "array"}, {"items", id_or_int}}},
                    {"leq",
                     {{"type", "array"},
                      {"items", {{"type", "array"}, {"items", id_or_int}, {"minItems", 2}, {"maxItems", 2}}}}}}}};
    Json lattice = {{"oneOf",
                     {{{"type", "object"}, {"required", {"downsets_of"}}, {"properties", {{"downsets_of", poset}}}},
                      {{"type", "object"},
                       {"required", {"elements"}},
                       {"properties",
                        {{"elements", poset["properties"]["elements"]},
                         {"leq", poset["properties"]["leq"]},
                         {"bottom", id_or_int},
                         {"top", id_or_int}}}}}}};
    Json map = {{"type", "object"},
                {"required", {"d"}},
                {"properties", {{"d", {{"type", "object"}, {"additionalProperties", id_or_int}}}}}};
    Json witness = {{"type", "object"}, {"required", {"A", "B"}}, {"properties", {{"A", id_map}, {"B", id_map}}}};
    Json amalgam = {{"type", "object"},
                    {"required", {"carrier", "index", "family"}},
                    {"properties",
                     {{"carrier", poset},
                      {"index", poset},
                      {"family", {{"type", "object"}, {"additionalProperties", {{"type", "array"}, {"items", id_or_int}}}}},
                      {"nu", {{"type", "object"}, {"additionalProperties", id_or_int}}}}}};
    Json semilinear = {
        {"type", "object"},
        {"required", {"dimension", "cells"}},
        {"properties",
         {{"dimension", {{"type", "integer"}, {"minimum", 0}}},
          {"cells", {{"type", "array"}, {"items", {{"type", "array"}, {"items", {{"type", "string"}}}}}}}}}};

    auto report = [](Json required, Json properties) {
        return Json{{"type", "object"}, {"required", std::move(required)}, {"properties", std::move(properties)}};
    };
    const Json boolean = {{"type", "boolean"}};
    const Json integer = {{"type", "integer"}};
    const Json nullable_ids = {{"oneOf", {ids, {{"type", "null"}}}}};
    const Json properties_report =
        report({"left_isotone", "right_antitone", "monotone", "cevian"},
               {{"left_isotone", boolean},
                {"right_antitone", boolean},
                {"monotone", boolean},
                {"cevian", boolean},
                {"left_isotone_counterexample", nullable_ids},
                {"right_antitone_counterexample", nullable_ids},
                {"cevian_counterexample", nullable_ids}});
    const Json comparison = report({"holds", "witness"}, {{"holds", boolean}, {"witness", nullable_point}});

    Json s;
    s["poset"] = poset;
    s["lattice"] = lattice;
    s["map"] = map;
    s["witness"] = witness;
    s["amalgam"] = amalgam;
    s["semilinear_set"] = semilinear;
    s["error_report"] = report({"error"}, {{"error", report({"kind", "message"}, {{"kind", id}, {"message", id}})}});
    s["lattice_check_report"] = report(
        {"lattice", "size", "distributive", "completely_normal", "zero_distributive", "root_system", "prime_ideals"},
        {{"lattice", lattice},
         {"size", integer},
         {"distributive", boolean},
         {"completely_normal", boolean},
         {"counterexample", nullable_ids},
         {"zero_distributive", boolean},
         {"zero_distributive_counterexample", nullable_ids},
         {"root_system", boolean},
         {"root_system_counterexample", {{"oneOf", {{{"type", "array"}, {"items", ids}}, {{"type", "null"}}}}}},
         {"prime_ideals", {{"type", "array"}, {"items", ids}}}});
    s["deviation_check_report"] =
        report({"deviation", "violation", "properties"},
               {{"deviation", boolean},
                {"violation",
                 {{"oneOf",
                   {report({"axiom", "pair"}, {{"axiom", integer}, {"pair", pair}}), {{"type", "null"}}}}}},
                {"properties", properties_report}});
    s["deviation_search_report"] = report(
        {"found", "constraints"},
        {{"found", boolean},
         {"constraints", report({"monotone", "cevian"}, {{"monotone", boolean}, {"cevian", boolean}})},
         {"deviation", {{"oneOf", {map, {{"type", "null"}}}}}},
         {"properties", {{"oneOf", {properties_report, {{"type", "null"}}}}}},
         {"completely_normal_counterexample", nullable_ids}});
    s["deviation_enumerate_report"] =
        report({"count", "limit", "deviations"},
               {{"count", integer}, {"limit", integer}, {"deviations", {{"type", "array"}, {"items", map}}}});
    s["adjust_report"] = report(
        {"order", "d_prime", "monotone", "deviation", "cevian", "trace"},
        {{"order", ids},
         {"strategy", id},
         {"d_prime", map},
         {"monotone", boolean},
         {"deviation", boolean},
         {"cevian", boolean},
         {"trace",
          {{"type", "array"},
           {"items", report({"pair", "meetands", "joinands", "meet", "join", "value"},
                            {{"pair", pair},
                             {"meetands", {{"type", "array"}, {"items", pair}}},
                             {"joinands", {{"type", "array"}, {"items", pair}}},
                             {"meet", id},
                             {"join", id},
                             {"value", id}})}}}});
    s["poset_witness_report"] = report({"order", "witness", "valid", "order_bound"},
                                       {{"order", ids}, {"witness", witness}, {"valid", boolean}, {"order_bound", boolean}});
    s["poset_order_report"] = report(
        {"valid", "order", "blocks"},
        {{"valid", boolean},
         {"violation", {{"oneOf", {report({"kind", "pair"}, {{"kind", id}, {"pair", pair}}), {{"type", "null"}}}}}},
         {"order", nullable_ids},
         {"blocks", {{"oneOf", {{{"type", "array"}, {"items", ids}}, {{"type", "null"}}}}}}});
    s["poset_amalgam_report"] = report(
        {"strong_amalgam"},
        {{"strong_amalgam", boolean},
         {"violation",
          {{"oneOf", {report({"clause", "detail"}, {{"clause", id}, {"detail", id}}), {{"type", "null"}}}}}},
         {"witness", {{"oneOf", {witness, {{"type", "null"}}}}}},
         {"valid", boolean}});
    s["semilinear_includes_report"] = report({"includes", "witness"}, {{"includes", boolean}, {"witness", nullable_point}});
    s["semilinear_shadow_report"] =
        report({"side", "variables", "set", "empty"},
               {{"side", id}, {"variables", {{"type", "array"}, {"items", integer}}}, {"set", semilinear}, {"empty", boolean}});
    s["vlat_leq_report"] = report({"g", "h", "relative", "leq", "witness"}, {{"g", id},
                                                                             {"h", id},
                                                                             {"relative", boolean},
                                                                             {"leq", boolean},
                                                                             {"witness", nullable_point}});
    s["vlat_cevian_report"] =
        report({"terms", "relative", "cevian", "witness"},
               {{"terms", ids}, {"relative", boolean}, {"cevian", boolean}, {"witness", nullable_point}});
    const Json implication = report({"binding", "holds", "witness"},
                                    {{"binding", boolean}, {"holds", boolean}, {"witness", nullable_point}});
    s["pscom_probe_report"] =
        report({"n", "alpha", "c", "p", "q", "disjoint", "probes", "counterexamples"},
               {{"n", integer},
                {"alpha", integer},
                {"c", rational},
                {"p", id},
                {"q", id},
                {"disjoint", boolean},
                {"probes",
                 {{"type", "array"},
                  {"items", report({"term", "first", "second"}, {{"term", id}, {"first", implication}, {"second", implication}})}}},
                {"counterexamples", integer}});
    const Json ladder = report({"lower", "upper", "leq", "witness", "explicit_witness", "explicit_verified", "multiplier_refuted"},
                               {{"lower", id},
                                {"upper", id},
                                {"leq", boolean},
                                {"witness", nullable_point},
                                {"solver_witness", nullable_point},
                                {"explicit_witness", point},
                                {"explicit_verified", boolean},
                                {"multiplier_refuted", boolean}});
    s["noiso_probe_report"] =
        report({"k", "m", "n", "antitone", "isotone", "reproduced"},
               {{"k", integer}, {"m", integer}, {"n", integer}, {"antitone", ladder}, {"isotone", ladder}, {"reproduced", boolean}});
    for (auto& [name, schema] : s.items()) schema["$schema"] = "http://json-schema.org/draft-07/schema#";
    return s;
}

} // namespace devlat::cli
