#pragma once

#include "fuzzybv/classify.hpp"
#include "fuzzybv/fuzzy_number.hpp"
#include "fuzzybv/weighted_mean.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace fuzzybv {

/// Lazily generated sequence (X_k), k >= start, of fuzzy numbers.
///
/// Generators are pure, so one sequence may be evaluated from several threads.
class FuzzySequence {
public:
    using Generator = std::function<FuzzyNumber(index_t)>;

    /// X_k = crisp(f(k))
    static FuzzySequence crisp(RealGenerator f, index_t start = 0);
    /// X_k = triangular(a(k), b(k), c(k))
    static FuzzySequence triangular(RealGenerator a, RealGenerator b, RealGenerator c, index_t start = 0);
    static FuzzySequence constant(FuzzyNumber value, index_t start = 0);
    /// X_k = values[k - start]
    static FuzzySequence table(std::vector<FuzzyNumber> values, index_t start = 0);
    /// odd[k] for odd k, even[k] for even k. Both must share a start index.
    static FuzzySequence alternating(const FuzzySequence& odd, const FuzzySequence& even);
    /// base[k] + by[k]. Both must share a start index.
    static FuzzySequence perturbed(const FuzzySequence& base, const FuzzySequence& by);
    static FuzzySequence custom(std::string family, Generator g, index_t start = 0);

    FuzzyNumber operator[](index_t k) const;
    index_t start() const noexcept { return start_; }
    const std::string& family() const noexcept { return family_; }

private:
    FuzzySequence(std::string family, index_t start, Generator g);

    std::string family_;
    index_t start_ = 0;
    std::shared_ptr<const Generator> gen_;
};

}  // namespace fuzzybv
