#pragma once

#include "massey/cdga.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace massey {

class CohomologyRing;
class CohomologyClass;
using RingPtr = std::shared_ptr<const CohomologyRing>;

/// Cohomology of a cochain algebra in the trusted degrees 0..cap-1.
///
/// Each degree keeps the cocycle and coboundary subspaces and a canonical
/// class basis: cocycle basis vectors not already spanned, reduced modulo
/// the coboundaries.
class CohomologyRing : public std::enable_shared_from_this<CohomologyRing> {
public:
    static RingPtr compute(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    /// Highest trusted degree.
    int top_degree() const { return algebra_->cap() - 1; }

    std::size_t betti(int degree) const;
    std::vector<std::size_t> betti_numbers() const;
    const Subspace& cocycles(int degree) const { return degrees_.at(degree).cocycles; }
    const Subspace& coboundaries(int degree) const { return degrees_.at(degree).coboundaries; }
    const std::vector<Vector>& representatives(int degree) const { return degrees_.at(degree).representatives; }

    Element lift(const CohomologyClass& c) const;
    /// Class of a cocycle. Throws ValidationError when `cocycle` is not closed.
    CohomologyClass project(const Element& cocycle) const;
    std::optional<CohomologyClass> try_project(const Element& cocycle) const;

    CohomologyClass unit() const;
    CohomologyClass zero(int degree) const;
    CohomologyClass basis_class(int degree, std::size_t index) const;
    CohomologyClass from_coords(int degree, Vector coords) const;

    /// Canonical solution x of dx = target (free variables zero); nullopt
    /// when target is not exact.
    std::optional<Element> primitive(const Element& target) const;

private:
    struct Degree {
        Subspace cocycles;
        Subspace coboundaries;
        std::vector<Vector> representatives;
        Matrix reps_then_boundaries;
    };
    explicit CohomologyRing(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
    void require_trusted(int degree) const;

    AlgebraPtr algebra_;
    std::vector<Degree> degrees_;
};

inline RingPtr compute_cohomology(AlgebraPtr algebra) { return CohomologyRing::compute(std::move(algebra)); }

class CohomologyClass {
public:
    CohomologyClass(RingPtr ring, int degree, Vector coords);

    const RingPtr& ring() const { return ring_; }
    int degree() const { return degree_; }
    const Vector& coords() const { return coords_; }
    bool is_zero() const { return massey::is_zero(coords_); }
    /// Canonical representative cocycle, e.g. "x*z".
    std::string to_string() const;

    friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b);
    friend CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b);
    friend CohomologyClass operator*(const Scalar& s, const CohomologyClass& a);
    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b);

private:
    RingPtr ring_;
    int degree_;
    Vector coords_;
};

CohomologyClass cup(const CohomologyClass& u, const CohomologyClass& v);

/// Class map induced by a cochain morphism into `target_ring`.
CohomologyClass induced(const AlgebraMorphism& f, const RingPtr& target_ring, const CohomologyClass& c);

/// Degree-n piece of the ideal generated by `generators`, as a subspace of
/// the degree-n class space.
Subspace ideal_degree_piece(const RingPtr& ring, std::span<const CohomologyClass> generators, int degree);

enum class Verdict { Vanishes, DoesNotVanish };
const char* to_string(Verdict v);

struct MasseyResult {
    MasseyResult(CohomologyClass a_, CohomologyClass b_, CohomologyClass c_, int degree_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), degree(degree_) {}

    CohomologyClass a, b, c;
    int degree = 0;
    bool defined = false;
    /// Which cup product is nonzero when the product is not defined.
    std::string obstruction;
    std::optional<Element> witness_x;
    std::optional<Element> witness_y;
    std::optional<Element> representative_cochain;
    std::optional<CohomologyClass> representative;
    Subspace indeterminacy;
    /// Degree piece of the ideal ([a], [c]).
    Subspace ideal_piece;
    Verdict zero_test = Verdict::Vanishes;
    Verdict ideal_test = Verdict::Vanishes;

    AffineCoset coset() const;
    bool verdicts_agree() const { return zero_test == ideal_test; }
    bool vanishes() const { return zero_test == Verdict::Vanishes; }
};

/// <a, b, c> with canonical witnesses dx = bar(a) b and dy = bar(b) c and
/// representative [bar(a) y + bar(x) c]. Undefined products come back with
/// defined == false and an obstruction message.
MasseyResult triple_massey(const CohomologyClass& a, const CohomologyClass& b, const CohomologyClass& c);

/// Representative class for explicitly supplied witnesses; checks both
/// witness equations against the canonical lifts of a, b, c.
CohomologyClass massey_representative(const CohomologyClass& a, const CohomologyClass& b, const CohomologyClass& c,
                                      const Element& x, const Element& y);

/// Process-wide tallies over every triple_massey call, used by the
/// acceptance run to confirm verdict agreement.
struct MasseyTally {
    std::uint64_t computed = 0;
    std::uint64_t disagreements = 0;
};
MasseyTally massey_tally();

struct ContainmentReport {
    ContainmentReport(std::string law_, AffineCoset image_, AffineCoset target_, MasseyResult product)
        : law(std::move(law_)), image(std::move(image_)), target(std::move(target_)),
          target_product(std::move(product)) {}

    std::string law;
    /// Image of the source coset (canonical form).
    AffineCoset image;
    /// Coset of the target Massey product (canonical form).
    AffineCoset target;
    MasseyResult target_product;
    bool point_contained = false;
    bool direction_contained = false;
    bool holds() const { return point_contained && direction_contained; }
};

/// xi <a1,a2,a3> is contained in the product with xi multiplied into `slot`
/// (1, 2 or 3). xi must have even degree. Throws NotDefined when the scaled
/// product is undefined.
ContainmentReport check_scaling_law(const CohomologyClass& xi, const MasseyResult& r, int slot);

/// f*<a,b,c> is contained in <f*a, f*b, f*c>. Throws NotDefined when the
/// image triple is undefined.
ContainmentReport check_functoriality(const AlgebraMorphism& f, const RingPtr& target_ring, const MasseyResult& r);

/// Containment of `source` pushed through a linear class map of its degree
/// (rows: target class coordinates) inside `target`.
ContainmentReport check_class_map_containment(std::string law, const Matrix& map, const MasseyResult& source,
                                              MasseyResult target);

}  // namespace massey
