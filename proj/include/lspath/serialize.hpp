#pragma once

#include "lspath/gallery.hpp"
#include "lspath/saturation.hpp"

#include <json.hpp>

namespace lsp {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);  // "p/q" string
Json to_json(const Covector& v);
Json to_json(const PLPath& p);
Json to_json(const LSCertificate& c);
Json to_json(const GeneralizedPath& g);
Json to_json(const RootSystem& rs, const Gallery& g);

Rational rational_from_json(const Json& j);
Covector covector_from_json(const Json& j);
PLPath path_from_json(const Json& j);

// CSV rows of (wall, step, case) for a positively folded gallery.
std::string dimension_ledger_csv(const RootSystem& rs, const Gallery& g);

Json to_json(const ScanReport& r);  // worker count left out: reports do not depend on it
Json to_json(const PipelineTrace& t);
// one row per triple; booleans as 0/1
std::string scan_csv(const ScanReport& r);

// RFC 4180 field quoting
std::string csv_field(const std::string& s);

}  // namespace lsp
