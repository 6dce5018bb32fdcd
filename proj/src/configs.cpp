#include "wirsing/configs.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "wirsing/errors.hpp"

namespace wirsing {

namespace {

// visit all k-subsets of {0,...,q-1} for k = 1..kmax; fn returns false to
// signal an overall failure, which stops the enumeration
bool all_subsets_ok(std::size_t q, std::size_t kmax,
                    const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 1; k <= kmax && k <= q; ++k) {
        idx.resize(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            if (!fn(idx)) return false;
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == q - k + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return true;
}

Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string line_str(const Vec& v) {
    static const char* names[] = {"x", "y", "z"};
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!first) os << (v[i] > 0 ? " + " : " - ");
        else if (v[i] < 0) os << "-";
        Int a = abs(v[i]);
        if (a != 1) os << a.get_str() << "*";
        os << names[i];
        first = false;
    }
    return os.str();
}

} // namespace

//----------------------------------------------------------------- LineConfig

LineConfig::LineConfig(std::vector<Vec> lines) {
    if (lines.empty()) throw UsageError("LineConfig: empty configuration");
    lines_.reserve(lines.size());
    for (auto& v : lines) {
        if (v.size() != 3)
            throw UsageError("LineConfig: lines must have three coefficients");
        lines_.push_back(primitive_vector(std::move(v)));
    }
}

LineConfig::LineConfig(const std::vector<Form>& lines) {
    if (lines.empty()) throw UsageError("LineConfig: empty configuration");
    lines_.reserve(lines.size());
    for (const auto& f : lines) {
        if (f.nvars() != 3)
            throw UsageError("LineConfig: forms must live in the projective plane");
        lines_.push_back(primitive_vector(linear_coeffs(f)));
    }
}

Form LineConfig::form(std::size_t i) const { return Form::linear(line(i)); }

std::string LineConfig::str() const {
    std::string s;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        if (i) s += "; ";
        s += line_str(lines_[i]);
    }
    return s;
}

std::string TypeTag::str() const {
    std::string name = tag == ConfigTag::I ? "I" : tag == ConfigTag::II ? "II" : "III";
    return "Type " + name + ", c = " + c.get_str();
}

//----------------------------------------------------------------- positions

Vec linear_coeffs(const Form& f) {
    if (f.degree() != 1) throw UsageError("linear_coeffs: form is not linear");
    Vec v(f.nvars(), Int(0));
    for (const auto& mono : f.monomials()) {
        for (std::size_t i = 0; i < mono.exps.size(); ++i)
            if (mono.exps[i] == 1) v[i] = mono.coeff;
    }
    return v;
}

bool subgeneral_position(const std::vector<Vec>& forms, unsigned m) {
    if (forms.empty()) throw UsageError("subgeneral_position: empty configuration");
    const std::size_t nv = forms[0].size();
    if (nv < 2) throw UsageError("subgeneral_position: ambient space too small");
    for (const auto& row : forms) {
        if (row.size() != nv)
            throw UsageError("subgeneral_position: mixed ambient spaces");
        if (std::all_of(row.begin(), row.end(), [](const Int& c) { return c == 0; }))
            throw ZeroInput("subgeneral_position: zero form");
    }
    const long n = static_cast<long>(nv) - 1;

    return all_subsets_ok(
        forms.size(), static_cast<std::size_t>(m) + 1,
        [&](const std::vector<std::size_t>& idx) {
            const long need = n - static_cast<long>(m) + static_cast<long>(idx.size());
            if (need <= 1) return true;  // nonzero rows always have rank >= 1
            if (need > static_cast<long>(std::min<std::size_t>(idx.size(), nv)))
                return false;  // rank bound makes the condition unsatisfiable
            Mat sub;
            sub.reserve(idx.size());
            for (std::size_t i : idx) sub.push_back(forms[i]);
            return bareiss_rank(std::move(sub)) >= need;
        });
}

bool subgeneral_position(const std::vector<Form>& forms, unsigned m) {
    std::vector<Vec> rows;
    rows.reserve(forms.size());
    for (const auto& f : forms) rows.push_back(linear_coeffs(f));
    return subgeneral_position(rows, m);
}

//--------------------------------------------------------------- classifiers

std::vector<ProjPoint> triple_points(const LineConfig& cfg) {
    // distinct lines only: a point must lie on three *distinct* lines
    std::vector<Vec> distinct;
    for (const auto& v : cfg.lines())
        if (std::find(distinct.begin(), distinct.end(), v) == distinct.end())
            distinct.push_back(v);

    std::set<ProjPoint> found;
    if (distinct.size() < 3) return {};
    for (std::size_t i = 0; i < distinct.size(); ++i)
        for (std::size_t j = i + 1; j < distinct.size(); ++j) {
            ProjPoint P(cross3(distinct[i], distinct[j]));
            unsigned through = 0;
            for (const auto& l : distinct)
                if (dot(l, P.coords()) == 0) ++through;
            if (through >= 3) found.insert(P);
        }
    return {found.begin(), found.end()};
}

TypeTag classify_type(const LineConfig& cfg) {
    if (!subgeneral_position(cfg.lines(), 3))
        throw NotSubgeneral("classify_type: lines are not in 3-subgeneral position");

    const std::size_t q = cfg.size();
    std::vector<ProjPoint> triples = triple_points(cfg);

    std::optional<std::pair<std::size_t, std::size_t>> repeated;
    for (std::size_t i = 0; i < q && !repeated; ++i)
        for (std::size_t j = i + 1; j < q; ++j)
            if (cfg.line(i) == cfg.line(j)) {
                repeated = {i, j};
                break;
            }

    if (q > 4 && repeated && !triples.empty())
        return TypeTag{ConfigTag::I, Rat(5), repeated, {triples.front()}};

    if (q > 4 && !repeated && triples.size() >= 3) {
        // first noncollinear triple of triple points, in canonical order
        for (std::size_t a = 0; a < triples.size(); ++a)
            for (std::size_t b = a + 1; b < triples.size(); ++b)
                for (std::size_t c = b + 1; c < triples.size(); ++c) {
                    Mat m{triples[a].coords(), triples[b].coords(),
                          triples[c].coords()};
                    if (bareiss_det(std::move(m)) != 0)
                        return TypeTag{ConfigTag::II,
                                       Rat(9, 2),
                                       std::nullopt,
                                       {triples[a], triples[b], triples[c]}};
                }
    }

    return TypeTag{ConfigTag::III, Rat(4), repeated, {}};
}

LineConfig restrict_to_plane(const std::vector<Form>& hplanes, const Form& H,
                             const std::optional<std::array<ProjPoint, 3>>& basis) {
    Vec h = linear_coeffs(H);
    if (h.size() != 4)
        throw UsageError("restrict_to_plane: the plane must live in P^3");

    std::vector<Vec> par;
    if (basis) {
        for (const auto& P : *basis) {
            if (P.size() != 4)
                throw UsageError("restrict_to_plane: basis points must live in P^3");
            if (dot(h, P.coords()) != 0)
                throw UsageError("restrict_to_plane: basis point off the plane");
            par.push_back(P.coords());
        }
        Mat m = par;
        if (bareiss_rank(std::move(m)) != 3)
            throw UsageError("restrict_to_plane: degenerate basis");
    } else {
        par = kernel_basis(Mat{h});
    }

    std::vector<Vec> lines;
    lines.reserve(hplanes.size());
    for (const auto& f : hplanes) {
        Vec w = linear_coeffs(f);
        if (w.size() != 4)
            throw UsageError("restrict_to_plane: hyperplanes must live in P^3");
        Vec r{dot(w, par[0]), dot(w, par[1]), dot(w, par[2])};
        if (r[0] == 0 && r[1] == 0 && r[2] == 0)
            throw CoincidentPlane("restrict_to_plane: hyperplane coincides with the plane");
        lines.push_back(std::move(r));
    }
    return LineConfig(std::move(lines));
}

} // namespace wirsing
