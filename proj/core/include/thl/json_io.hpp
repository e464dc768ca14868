#pragma once

#include <string>
#include <vector>

#include "thl/gram.hpp"
#include "thl/laurent.hpp"
#include "thl/tangle.hpp"
#include "thl/thompson.hpp"

namespace thl {

/// JSON forms used by the command line tool and by result files.  Every
/// emitter produces deterministic text, and every parser accepts exactly
/// what the matching emitter writes (plus whitespace), throwing ParseError
/// on malformed input.  Emit-parse-emit is byte-identical.

/// {"plus":"((ll)l)","minus":"(l(ll))"}
std::string element_to_json(const GroupElement& g);
GroupElement element_from_json(const std::string& text);

/// {"elements":[ ...element objects... ]}
std::string family_to_json(const std::vector<GroupElement>& family);
std::vector<GroupElement> family_from_json(const std::string& text);

/// {"terms":[{"a":-2,"z":0,"c":"2"}, ...]} ordered by (a, z)
std::string laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const std::string& text);

/// PD-style diagram record.  "crossings" lists, per crossing, the arc id on
/// each of its four anticlockwise ports and the pair of arc ids carried by
/// the over strand; "over_slots" appears only when that pair does not pin
/// down the over strand (two kink arcs on one crossing).  "orient" gives,
/// per arc, +1 when the arc runs from its lower attachment point towards the
/// higher one (ports before bottom points before top points), "closures"
/// holds one entry per crossing-free circle, and "boundary" carries the two
/// sign rows together with the arc ids entering each boundary point.  The
/// outer-face hint is derived data and is not serialised.
std::string tangle_to_json(const Tangle& t);
Tangle tangle_from_json(const std::string& text);

/// Spectrum file: verdict and flags spelled out so downstream checks do not
/// recompute policy.
struct ReportDoc {
  SpectrumReport report;
  double tol = 0.0;
  std::string verdict;             ///< "psd" | "indefinite"
  std::vector<std::string> flags;  ///< e.g. "out-of-range" when r < k + 2
};

/// Applies the verdict rule min_eig >= -tol and the parameter range flag.
ReportDoc make_report_doc(const SpectrumReport& rep, double tol);

std::string report_to_json(const ReportDoc& doc);
ReportDoc report_from_json(const std::string& text);

}  // namespace thl
