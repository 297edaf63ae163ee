#pragma once

// Text and JSON encodings for the CLI.
//
// Element text: a product of factors separated by '*', each factor a letter,
// a bracketed Lyndon word or a parenthesized product, optionally raised to an
// integer power: "a^2 * b^-1 * [ab]^3". The identity is "1". Printing always
// gives the collected normal form.

#include "json.hpp"

#include "nilstab/aut.hpp"
#include "nilstab/nilgroup.hpp"
#include "nilstab/snf.hpp"
#include "nilstab/stability.hpp"

#include <string>
#include <string_view>

namespace nilstab {

std::string format_element(const GroupElement &g);
/// Throws std::invalid_argument on syntax errors, non-Lyndon words or letters
/// outside the rank.
GroupElement parse_element(std::string_view text, unsigned rank, unsigned class_bound);

nlohmann::json integer_to_json(const Integer &z);
Integer integer_from_json(const nlohmann::json &j);
nlohmann::json matrix_to_json(const IntMatrix &m);
IntMatrix matrix_from_json(const nlohmann::json &j);

nlohmann::json element_to_json(const GroupElement &g);
GroupElement element_from_json(const nlohmann::json &j);
nlohmann::json endo_to_json(const Endo &e);
Endo endo_from_json(const nlohmann::json &j);

nlohmann::json presentation_to_json(const FinAbPresentation &p);
nlohmann::json scan_report_to_json(const ScanReport &report);
/// Header: r,free_rank,invariant_factors,map_to_next_is_iso
std::string scan_report_to_csv(const ScanReport &report);

} // namespace nilstab
