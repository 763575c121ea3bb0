#pragma once

#include "massey/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace massey {

struct GeneratorDecl {
    std::string name;
    int degree = 1;
};

/// coefficient * name1^e1 * name2^e2 * ...; an empty factor list is a constant.
struct PolynomialTerm {
    Scalar coefficient{1};
    std::vector<std::pair<std::string, int>> factors;
};

/// Unevaluated polynomial expression over named elements, as read from input.
struct Polynomial {
    std::vector<PolynomialTerm> terms;
    std::string to_string() const;
};

/// sum of coefficient * basis-label, used by table presentations.
using LinearCombination = std::vector<std::pair<Scalar, std::string>>;

enum class PresentationKind { Free, Table, Extension };

class CochainAlgebra;
class Element;
using AlgebraPtr = std::shared_ptr<const CochainAlgebra>;

/// Graded-commutative differential graded algebra truncated at a degree cap.
///
/// Every presentation is stored the same way: a labelled basis per degree
/// 0..cap, a structure-constant table for each degree pair p+q <= cap and a
/// differential matrix d_n : A_n -> A_{n+1} for n < cap. The differential
/// out of the cap degree is not part of the truncation.
class CochainAlgebra : public std::enable_shared_from_this<CochainAlgebra> {
public:
    int cap() const { return cap_; }
    PresentationKind kind() const { return kind_; }

    /// Zero outside 0..cap.
    std::size_t dim(int degree) const;
    std::vector<std::size_t> dims() const;
    const std::vector<std::string>& labels(int degree) const { return labels_.at(degree); }

    /// Rows indexed by i * dim(q) + j, columns by the degree p+q basis.
    const Matrix& product_table(int p, int q) const;
    Vector basis_product(int p, std::size_t i, int q, std::size_t j) const;
    /// d_n for 0 <= n < cap; rows dim(n+1), cols dim(n).
    const Matrix& differential_matrix(int n) const;

    /// Declared generators (free presentations; extensions add the
    /// polynomial generator to those of a free base).
    const std::vector<GeneratorDecl>& generators() const { return generators_; }

    /// Names usable in class expressions: generators for free presentations,
    /// basis labels for tables, base names plus the polynomial generator for
    /// extensions.
    std::vector<std::string> names() const;
    std::optional<Element> named_element(std::string_view name) const;

    /// Index of the unit basis vector in degree 0.
    Element unit() const;
    Element zero(int degree) const;
    Element basis_element(int degree, std::size_t index) const;

    /// Same algebra at another cap. Free presentations are re-enumerated,
    /// finite tables are padded with zero degrees and extensions are rebuilt
    /// from their re-capped base. Raising the cap of a truncated table throws.
    AlgebraPtr with_cap(int cap) const;

    /// Extension-only accessors.
    const AlgebraPtr& extension_base() const { return base_; }
    const std::string& extension_generator() const { return poly_generator_; }

    /// Free-only: exponent vector of each basis monomial in a degree.
    const std::vector<std::vector<int>>& monomials(int degree) const { return monomials_.at(degree); }
    const std::map<std::string, Polynomial>& generator_differentials() const { return diffs_; }

    bool truncated_table() const { return truncated_; }

    /// Same basis sizes, structure constants and differentials.
    friend bool same_structure(const CochainAlgebra& a, const CochainAlgebra& b);

    friend AlgebraPtr build_free_cdga(std::vector<GeneratorDecl>, std::map<std::string, Polynomial>, int);
    friend class TablePresentation;
    friend AlgebraPtr tensor_polynomial_generator(const AlgebraPtr&, std::string, int);

private:
    CochainAlgebra() = default;
    std::size_t table_index(int p, int q) const;

    int cap_ = 0;
    PresentationKind kind_ = PresentationKind::Free;
    std::vector<std::vector<std::string>> labels_;
    std::vector<Matrix> products_;  // packed over p <= cap, q <= cap - p
    std::vector<Matrix> differentials_;

    std::vector<GeneratorDecl> generators_;
    std::map<std::string, Polynomial> diffs_;
    std::vector<std::vector<std::vector<int>>> monomials_;
    bool truncated_ = false;
    AlgebraPtr base_;
    std::string poly_generator_;
};

/// Homogeneous element of a cochain algebra.
class Element {
public:
    Element(AlgebraPtr algebra, int degree, Vector coords);

    const AlgebraPtr& algebra() const { return algebra_; }
    int degree() const { return degree_; }
    const Vector& coords() const { return coords_; }
    bool is_zero() const { return massey::is_zero(coords_); }

    /// Linear combination of basis labels, e.g. "x*z - 1/2*y*z".
    std::string to_string() const;

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Scalar& s, const Element& a);
    Element operator-() const;
    friend bool operator==(const Element& a, const Element& b);

private:
    AlgebraPtr algebra_;
    int degree_;
    Vector coords_;
};

Element multiply(const Element& a, const Element& b);
Element differential(const Element& a);
/// (-1)^p * a for a of degree p.
Element bar(const Element& a);
Element power(const Element& a, int exponent);

/// Evaluates an expression over the algebra's named elements. Throws
/// ValidationError for unknown names or inhomogeneous input.
Element evaluate(const AlgebraPtr& algebra, const Polynomial& p);

/// Builds a free graded-commutative algebra on the generators; the
/// differential is the derivation extending `diffs` (missing entries are 0).
/// Throws ValidationError for an ill-graded differential or d^2 != 0.
AlgebraPtr build_free_cdga(std::vector<GeneratorDecl> gens, std::map<std::string, Polynomial> diffs,
                           int cap);

/// Incremental description of a finite multiplication-table algebra.
class TablePresentation {
public:
    explicit TablePresentation(int cap, bool truncated = false);

    void add_basis(std::string name, int degree);
    void set_product(std::string_view a, std::string_view b, const LinearCombination& value);
    void set_differential(std::string_view a, const LinearCombination& value);
    /// Fills products with the unit and the reverse of any one-sided product
    /// (b*a = (-1)^{|a||b|} a*b) that was not given explicitly.
    void fill_implied_products();

    int cap() const { return cap_; }
    bool has_basis(std::string_view name) const { return index_.contains(std::string(name)); }
    int degree_of(std::string_view name) const;

    /// Validates unit, graded commutativity, associativity, Leibniz and d^2 = 0.
    AlgebraPtr build() const;

private:
    using Key = std::pair<int, std::size_t>;
    Vector combination(int degree, const LinearCombination& value) const;
    Key key(std::string_view name) const;

    int cap_;
    bool truncated_;
    std::vector<std::vector<std::string>> labels_;
    std::map<std::string, Key> index_;
    std::map<std::pair<Key, Key>, Vector> products_;
    std::map<Key, Vector> differentials_;
};

/// A (x) Q[name] with the new generator in degree 2, basis of degree n
/// ordered by power j ascending then by the basis of A in degree n - 2j.
AlgebraPtr tensor_polynomial_generator(const AlgebraPtr& a, std::string name, int cap);

/// Offset of the h^j block inside degree n of an extension.
std::size_t extension_block_offset(const CochainAlgebra& ext, int degree, int power);

/// Empty when the algebra satisfies every structural law within its cap,
/// otherwise a message naming the first offending basis pair or triple.
std::optional<std::string> find_structure_violation(const CochainAlgebra& a);

/// Degree-preserving linear map given by one matrix per degree 0..top.
class AlgebraMorphism {
public:
    AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<Matrix> maps);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    int top_degree() const { return static_cast<int>(maps_.size()) - 1; }
    const Matrix& matrix(int degree) const { return maps_.at(degree); }
    Element apply(const Element& e) const;

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<Matrix> maps_;
};

/// Extends generator images multiplicatively (free sources only) and
/// verifies unit, multiplicativity and d-commutation through min(caps).
AlgebraMorphism build_morphism(const AlgebraPtr& source, const AlgebraPtr& target,
                               const std::map<std::string, Element>& generator_images);
/// Images of every basis element, indexed [degree][basis index].
AlgebraMorphism build_morphism_from_basis(const AlgebraPtr& source, const AlgebraPtr& target,
                                          const std::vector<std::vector<Element>>& images);
AlgebraMorphism identity_morphism(const AlgebraPtr& a);
/// A -> A (x) Q[h], a -> a (x) 1.
AlgebraMorphism extension_inclusion(const AlgebraPtr& ext);
/// A (x) Q[h] -> A, h -> 0.
AlgebraMorphism extension_retraction(const AlgebraPtr& ext);

}  // namespace massey
