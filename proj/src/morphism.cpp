#include "massey/cdga.hpp"

#include "massey/errors.hpp"

namespace massey {

namespace {

int common_top(const AlgebraPtr& s, const AlgebraPtr& t) { return std::min(s->cap(), t->cap()); }

// Unit, multiplicativity on basis pairs and d-commutation on basis elements.
void verify_morphism(const AlgebraMorphism& f) {
    const auto& src = f.source();
    const auto& tgt = f.target();
    const int top = f.top_degree();
    auto label = [&](int n, std::size_t i) { return src->labels(n)[i] + " (degree " + std::to_string(n) + ")"; };

    if (!(f.apply(src->unit()) == tgt->unit())) throw ValidationError("morphism does not preserve the unit");

    for (int n = 0; n + 1 <= top; ++n)
        for (std::size_t i = 0; i < src->dim(n); ++i) {
            Element b = src->basis_element(n, i);
            if (!(f.apply(differential(b)) == differential(f.apply(b))))
                throw ValidationError("morphism does not commute with d on " + label(n, i));
        }

    for (int p = 0; p <= top; ++p)
        for (int q = 0; p + q <= top; ++q)
            for (std::size_t i = 0; i < src->dim(p); ++i)
                for (std::size_t j = 0; j < src->dim(q); ++j) {
                    Element x = src->basis_element(p, i), y = src->basis_element(q, j);
                    if (!(f.apply(multiply(x, y)) == multiply(f.apply(x), f.apply(y))))
                        throw ValidationError("morphism is not multiplicative on pair " + label(p, i) + ", " +
                                              label(q, j));
                }
}

}  // namespace

AlgebraMorphism::AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<Matrix> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
    if (maps_.empty()) throw DimensionMismatch("morphism needs at least degree 0");
    for (int n = 0; n < static_cast<int>(maps_.size()); ++n)
        if (maps_[n].rows() != target_->dim(n) || maps_[n].cols() != source_->dim(n))
            throw DimensionMismatch("morphism matrix in degree " + std::to_string(n) + " has wrong shape");
}

Element AlgebraMorphism::apply(const Element& e) const {
    if (e.algebra().get() != source_.get()) throw DimensionMismatch("morphism applied to a foreign element");
    const int n = e.degree();
    if (n > top_degree())
        throw CapOverflow("morphism is defined only through degree " + std::to_string(top_degree()), n);
    if (n < 0) return Element(target_, n, Vector{});
    return Element(target_, n, maps_[n].apply(e.coords()));
}

AlgebraMorphism build_morphism(const AlgebraPtr& source, const AlgebraPtr& target,
                               const std::map<std::string, Element>& generator_images) {
    if (source->kind() != PresentationKind::Free)
        throw ValidationError("generator images define a morphism only on free presentations");
    const auto& gens = source->generators();
    std::vector<Element> images;
    for (const auto& g : gens) {
        auto it = generator_images.find(g.name);
        if (it == generator_images.end()) throw ValidationError("no image given for generator '" + g.name + "'");
        if (it->second.algebra().get() != target.get())
            throw ValidationError("image of '" + g.name + "' is not in the target algebra");
        if (it->second.degree() != g.degree)
            throw ValidationError("image of '" + g.name + "' has degree " + std::to_string(it->second.degree()) +
                                  ", expected " + std::to_string(g.degree));
        images.push_back(it->second);
    }
    for (const auto& [name, _] : generator_images) {
        bool known = std::any_of(gens.begin(), gens.end(), [&](const auto& g) { return g.name == name; });
        if (!known) throw ValidationError("image given for unknown generator '" + name + "'");
    }

    const int top = common_top(source, target);
    std::vector<Matrix> maps;
    for (int n = 0; n <= top; ++n) {
        Matrix m(target->dim(n), source->dim(n));
        const auto& monos = source->monomials(n);
        for (std::size_t col = 0; col < monos.size(); ++col) {
            Element value = target->unit();
            for (std::size_t g = 0; g < gens.size(); ++g) value = multiply(value, power(images[g], monos[col][g]));
            m.set_column(col, value.coords());
        }
        maps.push_back(std::move(m));
    }
    AlgebraMorphism f(source, target, std::move(maps));

    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].degree + 1 > top) continue;
        Element x = *source->named_element(gens[g].name);
        if (!(f.apply(differential(x)) == differential(images[g])))
            throw ValidationError("morphism does not commute with d on generator '" + gens[g].name + "': f(d " +
                                  gens[g].name + ") = " + f.apply(differential(x)).to_string() + " but d f(" +
                                  gens[g].name + ") = " + differential(images[g]).to_string());
    }
    verify_morphism(f);
    return f;
}

AlgebraMorphism build_morphism_from_basis(const AlgebraPtr& source, const AlgebraPtr& target,
                                          const std::vector<std::vector<Element>>& images) {
    const int top = common_top(source, target);
    if (static_cast<int>(images.size()) < top + 1)
        throw ValidationError("basis images needed through degree " + std::to_string(top));
    std::vector<Matrix> maps;
    for (int n = 0; n <= top; ++n) {
        if (images[n].size() != source->dim(n))
            throw ValidationError("wrong number of basis images in degree " + std::to_string(n));
        Matrix m(target->dim(n), source->dim(n));
        for (std::size_t i = 0; i < images[n].size(); ++i) {
            const Element& e = images[n][i];
            if (e.algebra().get() != target.get() || e.degree() != n)
                throw ValidationError("image of " + source->labels(n)[i] + " is not a degree-" + std::to_string(n) +
                                      " element of the target");
            m.set_column(i, e.coords());
        }
        maps.push_back(std::move(m));
    }
    AlgebraMorphism f(source, target, std::move(maps));
    verify_morphism(f);
    return f;
}

AlgebraMorphism identity_morphism(const AlgebraPtr& a) {
    std::vector<Matrix> maps;
    for (int n = 0; n <= a->cap(); ++n) maps.push_back(Matrix::identity(a->dim(n)));
    return AlgebraMorphism(a, a, std::move(maps));
}

AlgebraMorphism extension_inclusion(const AlgebraPtr& ext) {
    if (ext->kind() != PresentationKind::Extension) throw ValidationError("not a polynomial extension");
    const auto& base = ext->extension_base();
    std::vector<Matrix> maps;
    for (int n = 0; n <= ext->cap(); ++n) {
        Matrix m(ext->dim(n), base->dim(n));
        for (std::size_t i = 0; i < base->dim(n); ++i) m(i, i) = 1;
        maps.push_back(std::move(m));
    }
    return AlgebraMorphism(base, ext, std::move(maps));
}

AlgebraMorphism extension_retraction(const AlgebraPtr& ext) {
    if (ext->kind() != PresentationKind::Extension) throw ValidationError("not a polynomial extension");
    const auto& base = ext->extension_base();
    std::vector<Matrix> maps;
    for (int n = 0; n <= ext->cap(); ++n) {
        Matrix m(base->dim(n), ext->dim(n));
        for (std::size_t i = 0; i < base->dim(n); ++i) m(i, i) = 1;
        maps.push_back(std::move(m));
    }
    return AlgebraMorphism(ext, base, std::move(maps));
}

}  // namespace massey
