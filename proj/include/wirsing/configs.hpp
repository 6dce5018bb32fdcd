#ifndef WIRSING_CONFIGS_HPP
#define WIRSING_CONFIGS_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wirsing/linalg.hpp"
#include "wirsing/projective.hpp"
#include "wirsing/rational.hpp"

namespace wirsing {

//=============================================================================
// Line and hyperplane configurations.
//
// A family of hyperplanes in P^n is in m-subgeneral position when every
// subset I of at most m+1 of them satisfies dim(intersection) <= m - |I|,
// with dim(empty) = -1; equivalently the coefficient rank of each subset is
// at least n - m + |I|.  All ranks are computed exactly over Q.
//
// Line configurations in P^2 that are in 3-subgeneral position fall into
// three classes, each with an associated constant:
//   Type I   (c = 5):    q > 4, some line repeated, and some point lies on
//                        three distinct lines;
//   Type II  (c = 9/2):  q > 4, all lines distinct, and there are at least
//                        three noncollinear points each on three distinct
//                        lines;
//   Type III (c = 4):    everything else (in particular all q <= 4).
//=============================================================================

// configuration of lines in P^2; repetitions allowed, each line stored as a
// primitive integer coefficient triple with first nonzero entry positive
class LineConfig {
public:
    explicit LineConfig(std::vector<Vec> lines);
    explicit LineConfig(const std::vector<Form>& lines);

    std::size_t size() const { return lines_.size(); }
    const Vec& line(std::size_t i) const { return lines_.at(i); }
    const std::vector<Vec>& lines() const { return lines_; }
    Form form(std::size_t i) const;

    std::string str() const;

private:
    std::vector<Vec> lines_;
};

enum class ConfigTag { I, II, III };

// classification result: the tag, its constant, and the witnesses that
// force the tag (a repeated pair for Type I, triple points as applicable)
struct TypeTag {
    ConfigTag tag;
    Rat c;  // 5, 9/2 or 4
    std::optional<std::pair<std::size_t, std::size_t>> repeated;
    std::vector<ProjPoint> triples;

    std::string str() const;  // e.g. "Type II, c = 9/2"
};

// coefficient vector of a degree-1 form; throws UsageError otherwise
Vec linear_coeffs(const Form& f);

// exact m-subgeneral position test over all subsets of size <= m+1
bool subgeneral_position(const std::vector<Form>& forms, unsigned m);
bool subgeneral_position(const std::vector<Vec>& forms, unsigned m);

// points of P^2 lying on at least three distinct lines of the
// configuration, deduplicated and in canonical order
std::vector<ProjPoint> triple_points(const LineConfig& cfg);

// Type I / II / III classification with witnesses; requires 3-subgeneral
// position and throws NotSubgeneral otherwise
TypeTag classify_type(const LineConfig& cfg);

// restriction of hyperplanes in P^3 to the plane H = 0, expressed in the
// coordinates of a rational parametrization of H.  The parametrization is
// chosen from an integer kernel basis unless three independent rational
// points of H are supplied by the caller.  Repetitions are preserved.
// Throws CoincidentPlane when some hyperplane equals H, UsageError when a
// supplied basis point is off H or the basis is degenerate.
LineConfig restrict_to_plane(
    const std::vector<Form>& hplanes, const Form& H,
    const std::optional<std::array<ProjPoint, 3>>& basis = std::nullopt);

} // namespace wirsing

#endif
