#pragma once

#include "massey/cohomology.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace massey {

/// A ⊗ R[h] for a trivial circle action together with the maps that relate
/// it to A.
class ExtendedModel {
public:
    /// Cartan model of a trivial action: the invariance condition is vacuous
    /// and the differential is d ⊗ 1, so this is tensor_polynomial_generator
    /// with a degree-2 generator named "h".
    static ExtendedModel build(const AlgebraPtr& a, int cap);
    /// Wraps an algebra produced by tensor_polynomial_generator.
    static ExtendedModel from_extension(AlgebraPtr ext);

    int cap() const { return algebra_->cap(); }
    const AlgebraPtr& base() const { return algebra_->extension_base(); }
    const AlgebraPtr& algebra() const { return algebra_; }
    const RingPtr& base_ring() const { return base_ring_; }
    const RingPtr& ring() const { return ring_; }
    const AlgebraMorphism& inclusion() const { return inclusion_; }
    const AlgebraMorphism& retraction() const { return retraction_; }

    CohomologyClass h() const { return h_power(1); }
    CohomologyClass h_power(int j) const;
    /// a ⊗ h^j. `a` may come from any cohomology ring of the base presentation;
    /// it is moved into base_ring() through its representative cocycle.
    CohomologyClass embed(const CohomologyClass& a, int j = 0) const;
    /// The same class in base_ring().
    CohomologyClass to_base(const CohomologyClass& a) const;

private:
    ExtendedModel(AlgebraPtr ext, RingPtr base_ring, RingPtr ring, AlgebraMorphism inc, AlgebraMorphism ret)
        : algebra_(std::move(ext)), base_ring_(std::move(base_ring)), ring_(std::move(ring)),
          inclusion_(std::move(inc)), retraction_(std::move(ret)) {}

    AlgebraPtr algebra_;
    RingPtr base_ring_;
    RingPtr ring_;
    AlgebraMorphism inclusion_;
    AlgebraMorphism retraction_;
};

inline ExtendedModel cartan_model_trivial(const AlgebraPtr& a, int cap) { return ExtendedModel::build(a, cap); }

/// Moves a class into another cohomology ring of the same presentation
/// (possibly built at a different cap) by re-projecting its representative.
CohomologyClass transport(const CohomologyClass& c, const RingPtr& to);

/// c = Σ_j coefficients[j] ⊗ h^j with coefficients[j] of degree n − 2j.
struct HCoefficientDecomposition {
    std::vector<CohomologyClass> coefficients;
    int degree = 0;
};

HCoefficientDecomposition h_coefficients(const ExtendedModel& model, const CohomologyClass& c);
CohomologyClass reconstruct(const ExtendedModel& model, const HCoefficientDecomposition& d);

/// One weight line bundle of the normal bundle: first Chern class and the
/// circle weight.
struct WeightedLineBundleDatum {
    CohomologyClass c1;
    long weight = 0;

    WeightedLineBundleDatum(CohomologyClass c1_, long weight_);
};

struct EulerClass {
    CohomologyClass chi;
    int m = 0;
    std::vector<WeightedLineBundleDatum> bundles;
    /// Coefficient of h^m, a degree-0 class of the base.
    std::optional<CohomologyClass> leading;

    /// Wraps an arbitrary even-degree class, with no leading-term check.
    static EulerClass synthetic(CohomologyClass chi);
};

/// χ = ∏ (c1 + k h). Throws ValidationError on zero weights or bad degrees
/// and CapOverflow when 2m exceeds the trusted range.
EulerClass euler_class(const ExtendedModel& model, const std::vector<WeightedLineBundleDatum>& bundles);

struct ZeroDivisorReport {
    bool holds = true;
    /// Degrees n with n + 2m within the trusted range.
    int checked_through = -1;
    std::optional<int> failing_degree;
    std::optional<CohomologyClass> kernel_witness;
};

/// Multiplication by χ is injective H^n → H^{n+2m} for every n ≤ top − 2m
/// (or `max_degree` when smaller).
ZeroDivisorReport verify_not_zero_divisor(const RingPtr& ring, const EulerClass& chi,
                                          std::optional<int> max_degree = std::nullopt);

/// Matrix of multiplication by `xi` from H^n to H^{n+|xi|}.
Matrix multiplication_matrix(const CohomologyClass& xi, int n);

/// The coefficient comparison: decides z = χ³x ∈ (χu, χw) and x ∈ (u, w)
/// separately, and when z lies in the ideal reproduces the derivation
/// χ²x = ua + wb and K x = u a_{2m} + w b_{2m} explicitly.
struct HCoefficientArgument {
    HCoefficientArgument(CohomologyClass x_, CohomologyClass z_) : x(std::move(x_)), z(std::move(z_)) {}

    CohomologyClass x;                 // in the base ring
    CohomologyClass z;                 // χ³x in the extended ring
    bool z_in_ext_ideal = false;
    bool x_in_base_ideal = false;
    /// Solution of z = χu·a + χw·b when one exists.
    std::optional<CohomologyClass> a, b;
    std::optional<bool> cancellation_holds;       // χ²x == ua + wb
    std::optional<HCoefficientDecomposition> a_coefficients, b_coefficients;
    std::optional<CohomologyClass> chi_squared_top;  // h^{2m} coefficient of χ²
    std::optional<bool> top_coefficient_identity;    // K x == u a_{2m} + w b_{2m}

    /// The argument concludes z ∉ (χu, χw).
    bool fires() const { return !x_in_base_ideal; }
    bool consistent() const;
};

HCoefficientArgument h_coefficient_argument(const ExtendedModel& model, const EulerClass& chi,
                                            const CohomologyClass& u, const CohomologyClass& w,
                                            const CohomologyClass& x);

/// Cap needed for <χu, χv, χw> and χ³x: 6m + |u| + |v| + |w|.
int lemma_3_2_required_cap(int m, int du, int dv, int dw);

struct Lemma32Report {
    int m = 0;
    int cap = 0;
    int required_cap = 0;
    std::optional<ExtendedModel> model;
    std::optional<EulerClass> chi;
    std::optional<ZeroDivisorReport> not_zero_divisor;
    std::optional<MasseyResult> base_product;
    /// <ιu, ιv, ιw> computed in A ⊗ R[h].
    std::optional<MasseyResult> embedded_product;
    std::optional<ContainmentReport> inclusion_containment;
    /// ρ<ιu, ιv, ιw> ⊆ <u, v, w> for the retraction h ↦ 0.
    std::optional<ContainmentReport> retraction_containment;
    /// χ<u,v,w> ⊆ <χu,v,w>, χ<χu,v,w> ⊆ <χu,χv,w>, χ<χu,χv,w> ⊆ <χu,χv,χw>.
    std::vector<ContainmentReport> scaling_chain;
    std::optional<MasseyResult> scaled_product;
    std::optional<CohomologyClass> witness;   // χ³x
    bool witness_in_product = false;
    std::optional<HCoefficientArgument> argument;
    std::optional<HCoefficientDecomposition> witness_coefficients;

    bool non_vanishing() const;
};

/// Throws PremiseViolated when <u,v,w> is undefined or vanishes in H(A) and
/// CapOverflow when `cap` is below the required cap. Without a cap the
/// required cap is used.
Lemma32Report check_lemma_3_2(const AlgebraPtr& a, const CohomologyClass& u, const CohomologyClass& v,
                              const CohomologyClass& w, const std::vector<WeightedLineBundleDatum>& bundles,
                              std::optional<int> cap = std::nullopt);

/// Transfer data on cohomology. Matrices act on class coordinates:
/// restrict[n] maps H^n(ambient) → H^n(fixed), push[n] maps
/// H^n(fixed) → H^{n+2m}(ambient).
struct HamiltonianTransferDatum {
    RingPtr ambient;
    RingPtr fixed;
    std::vector<Matrix> restrict;
    std::vector<Matrix> push;
    EulerClass chi;

    int trust_degree() const { return std::min(ambient->top_degree(), fixed->top_degree()); }
    int m() const { return chi.m; }
    CohomologyClass restrict_class(const CohomologyClass& c) const;
    CohomologyClass push_class(const CohomologyClass& c) const;
};

/// ambient = fixed, restrict = identity, push = multiplication by χ.
HamiltonianTransferDatum tautological_datum(const RingPtr& fixed, const EulerClass& chi);

struct DatumCheck {
    explicit DatumCheck(std::string name_) : name(std::move(name_)) {}

    std::string name;
    bool passed = true;
    std::string detail;
    std::optional<int> degree;
    std::optional<Vector> witness;
};

struct TransferValidation {
    DatumCheck shape{"shape"};
    DatumCheck restrict_injective{"restrict-injective"};
    DatumCheck restrict_multiplicative{"restrict-multiplicative"};
    DatumCheck projection_formula{"projection-formula"};
    DatumCheck not_zero_divisor{"euler-not-zero-divisor"};
    DatumCheck push_injective{"push-injective"};
    /// Every kernel vector x of push is explained by a failed projection
    /// formula or a zero divisor: χx = restrict(push x) = 0.
    bool corollary_consistent = true;
    std::string corollary_detail;

    std::vector<const DatumCheck*> checks() const;
    bool valid() const;
};

TransferValidation validate_transfer_datum(const HamiltonianTransferDatum& d);

enum class TransferVerdict { NonVanishing, Inconclusive };
const char* to_string(TransferVerdict v);

struct Lemma31Report {
    std::optional<MasseyResult> fixed_product;   // <u,v,w>
    std::optional<MasseyResult> scaled_product;  // <χu,χv,χw>
    std::optional<CohomologyClass> pushed[3];
    /// restrict(push u · push v) against χu·χv, and the same for (v, w).
    bool uv_pulls_back = false, vw_pulls_back = false;
    bool uv_vanishes = false, vw_vanishes = false;
    std::optional<MasseyResult> ambient_product;
    std::optional<ContainmentReport> containment;
    TransferVerdict verdict = TransferVerdict::Inconclusive;
    std::string reason;
};

/// Throws InvalidDatum when the datum fails validation and PremiseViolated
/// when <χu,χv,χw> is undefined.
Lemma31Report check_lemma_3_1(const HamiltonianTransferDatum& d, const CohomologyClass& u, const CohomologyClass& v,
                              const CohomologyClass& w);

enum class TheoremStatus { Confirmed, Inconclusive };
const char* to_string(TheoremStatus s);

struct TheoremReport {
    explicit TheoremReport(Lemma32Report l) : lemma32(std::move(l)) {}

    Lemma32Report lemma32;
    std::optional<TransferValidation> validation;
    std::optional<Lemma31Report> lemma31;
    TheoremStatus status = TheoremStatus::Inconclusive;
};

/// Builds the datum from the extended model of the lemma step; receives the
/// model and χ, so tautological data can be produced on the spot.
using DatumFactory = std::function<HamiltonianTransferDatum(const ExtendedModel&, const EulerClass&)>;

TheoremReport theorem_1_1_pipeline(const AlgebraPtr& a, const CohomologyClass& u, const CohomologyClass& v,
                                   const CohomologyClass& w, const std::vector<WeightedLineBundleDatum>& bundles,
                                   const DatumFactory& datum = nullptr, std::optional<int> cap = std::nullopt);

// ---------------------------------------------------------------------------

struct FamilyConfig {
    std::string name;
    AlgebraPtr model;
    /// Triple as cocycles of `model`.
    Element u, v, w;
    /// (c1 cocycle of `model`, weight)
    std::vector<std::pair<Element, long>> bundles;
    DatumFactory datum;
    std::optional<int> cap;
};

enum class ConfigOutcome { NoPremise, DatumInvalid, Consistent, Finding, Error };
const char* to_string(ConfigOutcome o);

struct ConfigResult {
    std::string name;
    ConfigOutcome outcome = ConfigOutcome::Error;
    std::string detail;
    std::optional<TheoremReport> report;
};

struct ScanReport {
    std::vector<ConfigResult> results;
    std::size_t total = 0;
    bool budget_exhausted = false;
    /// Massey products evaluated during the scan.
    std::uint64_t work = 0;

    std::size_t findings() const;
    std::size_t invalid_data() const;
};

/// Runs the transfer pipeline per configuration, in order. `budget` caps the
/// number of Massey products evaluated (0 means unlimited); the scan stops
/// before a configuration once the budget is spent.
ScanReport scan_families(const std::vector<FamilyConfig>& family, std::uint64_t budget = 0);

}  // namespace massey
