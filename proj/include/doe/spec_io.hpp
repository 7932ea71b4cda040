#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "doe/analysis.hpp"
#include "doe/double_ext.hpp"
#include "doe/report.hpp"

namespace doe {

using Json = nlohmann::ordered_json;

/// Reads a spec document. Throws MalformedDocument (and its ArityError /
/// NotScalar refinements), UnknownGenerator, SyntaxError or
/// DivisorNotInvertible. No relation checking happens here.
DoubleExtSpec parse_spec(std::string_view text);
DoubleExtSpec spec_from_json(const Json& doc);

Json spec_to_json(const DoubleExtSpec& spec);
/// Pretty-printed document with a trailing newline.
std::string emit_spec(const DoubleExtSpec& spec);

Json report_to_json(const ValidationReport& r);
std::string emit_report(const ValidationReport& r);

Json element_to_json(const ExtElement& e, const std::string& name1 = "y1",
                     const std::string& name2 = "y2");
Json presentation_to_json(const IteratedOrePresentation& p);
Json detection_to_json(const Detection& d);

/// Detections, classification, directions and presentation search.
Json analysis_to_json(const ValidatedSpec& spec);

/// Dumps with two-space indentation and a trailing newline.
std::string render(const Json& doc);

}  // namespace doe
