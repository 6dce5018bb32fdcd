#ifndef WIRSING_EXPERIMENTS_HPP
#define WIRSING_EXPERIMENTS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wirsing/algebraic.hpp"
#include "wirsing/configs.hpp"
#include "wirsing/exceptional.hpp"
#include "wirsing/heights.hpp"
#include "wirsing/interval.hpp"

namespace wirsing {

//=============================================================================
// Verification harnesses: the bounded-degree ratio scan over P^1 and the
// explicit point families that realize the sharp approximation constants.
//
// Every reported quantity is a certified enclosure of an exactly represented
// number; flags are decided by exact comparison where the data is rational
// and by enclosure refinement up to a precision cap otherwise.  Undecidable
// comparisons are surfaced as Undecided, never resolved by fiat.
//=============================================================================

enum class ZStatus { None, In, Out, Unsupported, Undecided };
std::string zstatus_str(ZStatus z);

// one scanned point of P^1(Qbar): proximity and height enclosures, the flag
// ("could not certify m < t h"), and the exceptional-set status of flagged
// points
struct ScanRecord {
    AlgPoint point;
    Interval m, h;
    bool flagged = false;
    ZStatus z = ZStatus::None;
    std::optional<ZWitness> witness;  // set when z == In
    std::optional<Interval> defect;   // family runs: (n1 + n2) h - m

    // certified ratio bracket [m.lo/h.hi, m.hi/h.lo]; requires h.lo > 0
    double ratio_lo() const;
    double ratio_hi() const;
};

struct ScanOptions {
    mpfr_prec_t precision_cap = 256;
    unsigned jobs = 1;
};

//-------------------------------------------------------------- enumeration

// every point of P^1(Qbar) of degree <= d whose minimal polynomial has all
// |coefficients| <= B (for rationals: numerator and denominator bounded,
// infinity included), one representative per conjugate orbit, in a fixed
// deterministic order: by degree, then canonically within each degree
void enumerate_points(unsigned d, const Int& B,
                      const std::function<void(const AlgPoint&)>& sink);
std::vector<AlgPoint> enumerate_points(unsigned d, const Int& B);

//----------------------------------------------------------------- the scan

struct ScanSummary {
    std::vector<ScanRecord> flagged;  // flagged records, canonical scan order
    std::size_t scanned = 0;          // points with a computed record
    std::size_t skipped_support = 0;  // divisor points
    std::size_t skipped_height_zero = 0;
    std::size_t undecided = 0;        // precision cap exhausted
};

// scan all degree <= d points with coefficient bound B: flag every point
// where the enclosure cannot certify m_{D,S}(P) < t h(P), and attach the
// exceptional-set membership status to each flag.  The optional sink sees
// every record (flagged or not) in deterministic order.  Degrees above 3
// are not scanned (quartic proximity escalates past desk scale).
ScanSummary ratio_scan(const Divisor1& D, const PlaceSet& S, unsigned d,
                       const Int& B, const Rat& t, const ScanOptions& opt = {},
                       const std::function<void(const ScanRecord&)>& sink = nullptr);

//------------------------------------------------------------ point families

// one realized S-unit together with its target and certified log-norm
// vectors over the places of S (canonical order)
struct UnitProfile {
    Rat u;
    PlaceSet places;
    std::vector<double> target;
    std::vector<Interval> realized;
};

struct FamilySummary {
    std::vector<ScanRecord> records;   // in generation order
    std::vector<UnitProfile> profiles;
    std::size_t degenerate_skipped = 0;    // unit pullback meets the divisor
    std::size_t reducible_discarded = 0;   // pullback polynomial not irreducible
    std::size_t uncertified_discarded = 0; // ratio certification failed
    std::size_t member_discarded = 0;      // exceptional-set hit
    std::size_t on_divisor_skipped = 0;    // generated point on a divisor line
    std::size_t height_zero_skipped = 0;
};

// pullbacks of S-units under phi, normalized by the Moebius map sending the
// two most-covered divisor images to infinity and zero: solves
// (A o phi)(P) = u exactly for u running over powers of the smallest finite
// prime of S and reports the defect (n1 + n2) h(P) - m_{D,S}(P), where
// n1, n2 are the top two multiplicities of the pullback profile.
// Requires an archimedean place and at least one finite prime in S.
FamilySummary tbor_family(const Rat1Map& phi, const Divisor1& D, const PlaceSet& S,
                          std::size_t count, const ScanOptions& opt = {});

// rational plane point with exact proximity-sum and height data
struct PlaneRecord {
    ProjPoint point;
    LogVal m_exact, h_exact;
    Interval m, h;
    double ratio_lo() const;
    double ratio_hi() const;
};

struct SharpSummary {
    std::vector<PlaneRecord> records;  // in generation order
    std::vector<UnitProfile> profiles;
    std::size_t skipped_on_lines = 0;
};

// the Type I / II / III sharpness families in P^2.  Type II (requires
// |S| >= 3 with two finite primes p < q and the three noncollinear triple
// points at the coordinate vertices) realizes the two-unit valuation
// profile via continued-fraction exponent pairs; Types I and III (require
// an archimedean place and a finite prime) generate integral points on a
// line through a triple point.  Throws BadHypothesis when the
// configuration or place set does not match the requested kind.
SharpSummary sharp_family(ConfigTag kind, const LineConfig& cfg, const PlaceSet& S,
                          std::size_t steps, const ScanOptions& opt = {});

// certified continued-fraction exponent pairs (a, b) with a log p ~ b log q:
// the convergents of log q / log p with b <= den_cap, extended by integer
// multiples of the last convergent, `steps` pairs in ascending height
std::vector<std::pair<Int, Int>> log_ratio_pairs(const Int& p, const Int& q,
                                                 const Int& den_cap,
                                                 std::size_t steps,
                                                 mpfr_prec_t cap = 256);

// the degree-3 family: intersects the hyperplanes attached to a 6-point
// rational divisor in the three special points Q1, Q2, Q3, restricts to the
// plane through them (a Type II line configuration), runs the Type II
// family there, and pulls each plane point back to a cubic point of P^1.
// Emits only points with certified m_{D,S} > t h and membership Out against
// the whole degree-3 map family; reducible, degenerate and uncertified
// pullbacks are discarded and counted.  Requires q = 6 rational points of
// weight one, |S| >= 3 with an archimedean place, and t in (4, 9/2).
FamilySummary td3b_family(const Divisor1& D, const PlaceSet& S, const Rat& t,
                          std::size_t count, const ScanOptions& opt = {});

// true iff no nonzero homogeneous form of degree <= e vanishes on all the
// points: exact rank of the degree-e monomial evaluation matrix
bool zariski_density_check(const std::vector<ProjPoint>& points, unsigned e);

} // namespace wirsing

#endif
