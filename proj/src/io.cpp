#include "wirsing/io.hpp"

#include <cctype>
#include <charconv>

#include "wirsing/errors.hpp"

namespace wirsing::io {

namespace {

//=============================================================================
// Small text utilities.
//=============================================================================

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip_space(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    return t;
}

// one pass of the additive-term scanner shared by the univariate and the
// linear-form parsers: sign, optional integer, optional variable reference.
struct Term {
    Int coeff;
    int var;         // -1: constant term
    unsigned exp;    // exponent on the variable (1 when absent)
};

std::vector<Term> scan_terms(const std::string& input, const std::string& vars,
                             bool allow_exponent) {
    const std::string t = strip_space(input);
    if (t.empty()) throw UsageError("empty polynomial");
    std::vector<Term> terms;
    std::size_t i = 0;
    while (i < t.size()) {
        Int sign(1);
        if (t[i] == '+' || t[i] == '-') {
            if (t[i] == '-') sign = -1;
            ++i;
        } else if (i > 0) {
            throw UsageError("expected '+' or '-' in polynomial \"" + input + "\"");
        }
        std::string digits;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
            digits += t[i++];
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        coeff *= sign;
        int var = -1;
        unsigned exp = 1;
        if (i < t.size() && vars.find(t[i]) != std::string::npos) {
            var = static_cast<int>(vars.find(t[i]));
            ++i;
            if (i < t.size() && t[i] == '^') {
                if (!allow_exponent)
                    throw UsageError("exponent not allowed in \"" + input + "\"");
                ++i;
                std::string ed;
                while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
                    ed += t[i++];
                if (ed.empty() || ed.size() > 4)
                    throw UsageError("bad exponent in \"" + input + "\"");
                exp = static_cast<unsigned>(std::stoul(ed));
            }
        } else if (digits.empty()) {
            throw UsageError("dangling sign or bad character in \"" + input + "\"");
        }
        if (i < t.size() && t[i] != '+' && t[i] != '-')
            throw UsageError("unexpected character '" + std::string(1, t[i]) +
                             "' in \"" + input + "\"");
        terms.push_back({coeff, var, exp});
    }
    return terms;
}

Json interval_json_pair(const Interval& iv) {
    return Json::array({iv.lo(), iv.hi()});
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

//=============================================================================
// Parsers.
//=============================================================================

ProjPoint parse_p1_point(const std::string& s) {
    const std::string t = trim(s);
    if (t == "inf") return ProjPoint::p1_infinity();
    if (t.find(':') != std::string::npos) {
        ProjPoint P = parse_proj_point(t);
        if (P.size() != 2)
            throw UsageError("expected a point of the projective line: \"" + s + "\"");
        return P;
    }
    try {
        return ProjPoint::p1(parse_rat(t));
    } catch (const UsageError&) {
        throw UsageError("bad point \"" + s + "\" (want \"inf\", \"p/q\" or \"(a:b)\")");
    }
}

ProjPoint parse_proj_point(const std::string& s) {
    std::string t = strip_space(s);
    if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    if (t.empty()) throw UsageError("empty projective point");
    std::vector<Rat> coords;
    for (const std::string& part : split(t, ':')) coords.push_back(parse_rat(trim(part)));
    if (coords.size() < 2)
        throw UsageError("projective point needs at least two coordinates: \"" + s + "\"");
    return ProjPoint(coords);
}

std::vector<ProjPoint> parse_point_list(const std::string& s) {
    std::vector<ProjPoint> pts;
    for (const std::string& part : split(s, ';'))
        if (!trim(part).empty()) pts.push_back(parse_proj_point(part));
    if (pts.empty()) throw UsageError("empty point list");
    return pts;
}

std::vector<ProjPoint> parse_p1_list(const std::string& s) {
    std::vector<ProjPoint> pts;
    for (const std::string& part : split(s, ';'))
        if (!trim(part).empty()) pts.push_back(parse_p1_point(part));
    if (pts.empty()) throw UsageError("empty point list");
    return pts;
}

IntPoly parse_intpoly(const std::string& s) {
    std::vector<Int> coeffs;
    for (const Term& term : scan_terms(s, "x", true)) {
        unsigned e = term.var < 0 ? 0 : term.exp;
        if (coeffs.size() <= e) coeffs.resize(e + 1, Int(0));
        coeffs[e] += term.coeff;
    }
    IntPoly f(coeffs);
    if (f.is_zero()) throw UsageError("zero polynomial: \"" + s + "\"");
    return f;
}

Divisor1 parse_divisor(const std::string& s) {
    const std::string t = trim(s);
    if (t == "six-points") {
        std::vector<ProjPoint> pts;
        for (long a : {0L, 1L, -1L, 2L, -2L}) pts.push_back(ProjPoint::p1(Rat(a)));
        pts.push_back(ProjPoint::p1_infinity());
        return Divisor1(pts);
    }
    std::vector<ProjPoint> pts;
    for (const std::string& part : split(t, ','))
        if (!trim(part).empty()) pts.push_back(parse_p1_point(part));
    if (pts.empty()) throw UsageError("empty divisor: \"" + s + "\"");
    return Divisor1(pts);
}

PlaceSet parse_places(const std::string& s) {
    PlaceSet S;
    for (const std::string& part : split(s, ',')) {
        const std::string t = trim(part);
        if (t.empty()) continue;
        if (t == "inf") {
            S.push_back(Place::infinite());
            continue;
        }
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw UsageError("bad place \"" + t + "\" (want \"inf\" or a prime)");
        S.push_back(Place::prime(Int(t)));
    }
    if (S.empty()) throw UsageError("empty place set: \"" + s + "\"");
    return normalize_places(std::move(S));
}

LineConfig parse_lines(const std::string& s) {
    std::vector<Form> forms;
    for (const std::string& part : split(s, ';')) {
        if (trim(part).empty()) continue;
        std::vector<Int> c(3, Int(0));
        for (const Term& term : scan_terms(part, "xyz", false)) {
            if (term.var < 0)
                throw UsageError("constant term in line \"" + part + "\"");
            c[static_cast<std::size_t>(term.var)] += term.coeff;
        }
        forms.push_back(Form::linear(c));
    }
    if (forms.empty()) throw UsageError("empty line configuration: \"" + s + "\"");
    return LineConfig(forms);
}

Rat1Map parse_map(const std::string& s) {
    const std::vector<std::string> parts = split(s, ';');
    if (parts.size() > 2)
        throw UsageError("map wants \"num\" or \"num;den\": \"" + s + "\"");
    IntPoly num = parse_intpoly(parts[0]);
    IntPoly den = parts.size() == 2 ? parse_intpoly(parts[1]) : IntPoly::constant(Int(1));
    const unsigned d =
        static_cast<unsigned>(std::max(num.degree(), den.degree()));
    // a common affine factor makes the pair degenerate (one form always has
    // full degree d, so no common root at infinity is possible here)
    if (num.degree() >= 1 && den.degree() >= 1 && resultant(num, den) == 0)
        throw UsageError("map \"" + s + "\" has a common factor");
    return Rat1Map(BiForm::homogenize(num, d), BiForm::homogenize(den, d));
}

ConfigTag parse_kind(const std::string& s) {
    const std::string t = trim(s);
    if (t == "I") return ConfigTag::I;
    if (t == "II") return ConfigTag::II;
    if (t == "III") return ConfigTag::III;
    throw UsageError("bad configuration kind \"" + s + "\" (want I, II or III)");
}

std::vector<std::pair<std::string, std::string>> parse_config_stream(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(lineno) +
                             " is not \"key = value\": \"" + t + "\"");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw UsageError("config line " + std::to_string(lineno) + " has no key");
        entries.emplace_back(key, value);
    }
    return entries;
}

//=============================================================================
// Serializers.
//=============================================================================

std::string fmt_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string rat_str(const Rat& x) { return x.get_str(); }

std::string logval_str(const LogVal& v) {
    if (v.is_zero()) return "0";
    const std::string base = "log(" + rat_str(v.base()) + ")";
    if (v.root_index() == 1) return base;
    return "(1/" + std::to_string(v.root_index()) + ")*" + base;
}

std::string minpoly_str(const AlgPoint& P) {
    if (!P.is_rational()) return P.minpoly().str();
    const ProjPoint& Q = P.rational_point();
    if (Q.is_p1_infinity()) return "inf";
    IntPoly f(std::vector<Int>{-Q[0], Q[1]});
    if (f.leading() < 0) f = -f;
    return f.str();
}

Json witness_json(const ZWitness& w) {
    Json j = Json::object();
    if (w.index) {
        j["I1"] = w.index->I1;
        j["I2"] = w.index->I2;
    }
    if (w.map) j["map"] = w.map->str();
    if (w.value) j["value"] = w.value->str();
    return j;
}

Json record_json(const ScanRecord& r) {
    Json j;
    j["minpoly"] = minpoly_str(r.point);
    j["degree"] = r.point.degree();
    j["m_lo"] = r.m.lo();
    j["m_hi"] = r.m.hi();
    j["h_lo"] = r.h.lo();
    j["h_hi"] = r.h.hi();
    if (r.h.lo() > 0) {
        j["ratio_lo"] = r.ratio_lo();
        j["ratio_hi"] = r.ratio_hi();
    } else {
        j["ratio_lo"] = nullptr;
        j["ratio_hi"] = nullptr;
    }
    j["flagged"] = r.flagged;
    j["z_status"] = zstatus_str(r.z);
    j["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
    if (r.defect) {
        j["defect_lo"] = r.defect->lo();
        j["defect_hi"] = r.defect->hi();
    }
    return j;
}

Json plane_record_json(const PlaneRecord& r) {
    Json j;
    j["point"] = r.point.str();
    j["m_exact"] = logval_str(r.m_exact);
    j["h_exact"] = logval_str(r.h_exact);
    j["m_lo"] = r.m.lo();
    j["m_hi"] = r.m.hi();
    j["h_lo"] = r.h.lo();
    j["h_hi"] = r.h.hi();
    j["ratio_lo"] = r.ratio_lo();
    j["ratio_hi"] = r.ratio_hi();
    return j;
}

Json profile_json(const UnitProfile& u) {
    Json j;
    j["u"] = rat_str(u.u);
    Json places = Json::array();
    for (const Place& v : u.places) places.push_back(v.str());
    j["places"] = places;
    j["target"] = u.target;
    Json realized = Json::array();
    for (const Interval& iv : u.realized) realized.push_back(interval_json_pair(iv));
    j["realized"] = realized;
    return j;
}

std::string record_csv_header() {
    return "minpoly,degree,m_lo,m_hi,h_lo,h_hi,ratio_lo,ratio_hi,flagged,z_status,witness";
}

std::string record_csv_row(const ScanRecord& r) {
    std::string row = csv_quote(minpoly_str(r.point));
    row += ',' + std::to_string(r.point.degree());
    row += ',' + fmt_double(r.m.lo()) + ',' + fmt_double(r.m.hi());
    row += ',' + fmt_double(r.h.lo()) + ',' + fmt_double(r.h.hi());
    if (r.h.lo() > 0) {
        row += ',' + fmt_double(r.ratio_lo()) + ',' + fmt_double(r.ratio_hi());
    } else {
        row += ",,";
    }
    row += ',';
    row += (r.flagged ? "true" : "false");
    row += ',' + zstatus_str(r.z);
    row += ',';
    if (r.witness) {
        std::string w;
        if (r.witness->map) w += "map=" + r.witness->map->str();
        if (r.witness->value) {
            if (!w.empty()) w += "; ";
            w += "value=" + r.witness->value->str();
        }
        if (!w.empty()) row += csv_quote(w);
    }
    return row;
}

}  // namespace wirsing::io
