#include "fuzzybv/fuzzy_sequence.hpp"

#include "fuzzybv/errors.hpp"

namespace fuzzybv {

FuzzySequence::FuzzySequence(std::string family, index_t start, Generator g)
    : family_(std::move(family)), start_(start), gen_(std::make_shared<const Generator>(std::move(g))) {
    if (start < 0) throw InvalidArgument("start index must be non-negative");
}

FuzzySequence FuzzySequence::crisp(RealGenerator f, index_t start) {
    return {"crisp", start, [f = std::move(f)](index_t k) { return FuzzyNumber::crisp(f(k)); }};
}

FuzzySequence FuzzySequence::triangular(RealGenerator a, RealGenerator b, RealGenerator c, index_t start) {
    return {"triangular", start, [a = std::move(a), b = std::move(b), c = std::move(c)](index_t k) {
                return FuzzyNumber::triangular(a(k), b(k), c(k));
            }};
}

FuzzySequence FuzzySequence::constant(FuzzyNumber value, index_t start) {
    return {"constant", start, [value = std::move(value)](index_t) { return value; }};
}

FuzzySequence FuzzySequence::table(std::vector<FuzzyNumber> values, index_t start) {
    return {"table", start, [values = std::move(values), start](index_t k) {
                const index_t j = k - start;
                if (j >= static_cast<index_t>(values.size())) {
                    throw IndexError("index " + std::to_string(k) + " past the end of the table");
                }
                return values[static_cast<std::size_t>(j)];
            }};
}

FuzzySequence FuzzySequence::alternating(const FuzzySequence& odd, const FuzzySequence& even) {
    if (odd.start() != even.start()) throw ConfigError("start", "alternating branches disagree on start");
    return {"alternating", odd.start(),
            [odd, even](index_t k) { return k % 2 != 0 ? odd[k] : even[k]; }};
}

FuzzySequence FuzzySequence::perturbed(const FuzzySequence& base, const FuzzySequence& by) {
    if (base.start() != by.start()) throw ConfigError("start", "perturbation disagrees on start");
    return {"perturbed", base.start(), [base, by](index_t k) { return add(base[k], by[k]); }};
}

FuzzySequence FuzzySequence::custom(std::string family, Generator g, index_t start) {
    return {std::move(family), start, std::move(g)};
}

FuzzyNumber FuzzySequence::operator[](index_t k) const {
    if (k < start_) {
        throw IndexError("index " + std::to_string(k) + " below start " + std::to_string(start_));
    }
    return (*gen_)(k);
}

}  // namespace fuzzybv
