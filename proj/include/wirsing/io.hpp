#ifndef WIRSING_IO_HPP
#define WIRSING_IO_HPP

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "wirsing/configs.hpp"
#include "wirsing/exceptional.hpp"
#include "wirsing/experiments.hpp"
#include "wirsing/heights.hpp"
#include "wirsing/logval.hpp"
#include "wirsing/polynomial.hpp"
#include "wirsing/projective.hpp"
#include "wirsing/rational.hpp"

namespace wirsing::io {

using Json = nlohmann::ordered_json;

//=============================================================================
// Input and output surface shared by the command-line front end.
//
// Parsers accept plain text (no floats anywhere: thresholds and weights are
// exact rationals) and throw UsageError with a message quoting the offending
// input.  Serializers are deterministic: doubles render through
// shortest-round-trip formatting, JSON objects keep insertion order, and
// nothing depends on locale or time.
//=============================================================================

//------------------------------------------------------------------ parsing

// "inf", a rational "p/q", or homogeneous "(a:b)"
ProjPoint parse_p1_point(const std::string& s);
// "(a:b:c)" (parentheses optional), any number of rational coordinates
ProjPoint parse_proj_point(const std::string& s);
// ';'-separated projective points
std::vector<ProjPoint> parse_point_list(const std::string& s);
// ';'-separated P^1 points in the parse_p1_point syntax
std::vector<ProjPoint> parse_p1_list(const std::string& s);
// integer-coefficient polynomial in x, e.g. "x^3 - 2x + 1"
IntPoly parse_intpoly(const std::string& s);
// comma-separated P^1 points ("0,1,inf,2"), or the named shorthand
// "six-points" = 0, 1, -1, 2, -2, inf; weight one each
Divisor1 parse_divisor(const std::string& s);
// comma-separated places, e.g. "inf,2,3"
PlaceSet parse_places(const std::string& s);
// ';'-separated integer linear forms in x, y, z, e.g. "z;y;x;y-z;x-z;x-y"
LineConfig parse_lines(const std::string& s);
// rational self-map of P^1 as "num" or "num;den" (polynomials in x),
// homogenized to equal degree: "x^2" is the squaring map
Rat1Map parse_map(const std::string& s);
// configuration kind: "I", "II" or "III"
ConfigTag parse_kind(const std::string& s);

// "key = value" lines, '#' comments; returns the pairs in file order
std::vector<std::pair<std::string, std::string>> parse_config_stream(std::istream& in);

//--------------------------------------------------------------- formatting

std::string fmt_double(double x);            // shortest round-trip
std::string rat_str(const Rat& x);           // "p" or "p/q"
std::string logval_str(const LogVal& v);     // "0", "log(q)", "(1/r)*log(q)"
// minimal-polynomial string for any point: the stored polynomial for
// algebraic points, the primitive linear polynomial for finite rationals,
// "inf" for the point at infinity
std::string minpoly_str(const AlgPoint& P);

Json witness_json(const ZWitness& w);
// the record schema: {minpoly, degree, m_lo, m_hi, h_lo, h_hi, ratio_lo,
// ratio_hi, flagged, z_status, witness} (+ defect bounds on family records)
Json record_json(const ScanRecord& r);
Json plane_record_json(const PlaneRecord& r);
Json profile_json(const UnitProfile& u);

std::string record_csv_header();
std::string record_csv_row(const ScanRecord& r);

} // namespace wirsing::io

#endif
