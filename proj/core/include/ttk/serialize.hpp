#pragma once

// JSON / TSV / plain-text encodings of reports and knot records. JSON
// objects keep their keys in insertion order so output is byte-stable.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ttk/classify.hpp"
#include "ttk/surgery.hpp"

namespace ttk {

using Json = nlohmann::ordered_json;

Json to_json(const TtkParams& params);
TtkParams params_from_json(const Json& j);

Json to_json(const SfMatch& match);
SfMatch match_from_json(const Json& j);

Json to_json(const SfClassification& c);
SfClassification classification_from_json(const Json& j);

/// Keys: params, inside, outside, slope, flags.
Json to_json(const PsfReport& report);
PsfReport psf_report_from_json(const Json& j);

/// Array of three, or the string "connected_sum".
Json mu_to_json(const MultiplicityResult& triple);
MultiplicityResult mu_from_json(const Json& j, Int slope);

Json to_json(const NonTorusCertificate& cert);
NonTorusCertificate certificate_from_json(const Json& j);

/// Keys: family, family_params, p, q, r, m, n, slope, mu, certificates.
Json to_json(const KnotRecord& record);
KnotRecord knot_record_from_json(const Json& j);

/// Column names of the TSV export, same order as the JSON keys.
const std::vector<std::string>& tsv_columns();
std::string tsv_header();
std::string to_tsv_row(const KnotRecord& record);
KnotRecord knot_record_from_tsv(const std::string& row);

/// One line, e.g. "family 2 k=2 K(7,2,3,1,1) slope 23 mu (2,3,5) certified".
std::string to_text(const KnotRecord& record);

}  // namespace ttk
