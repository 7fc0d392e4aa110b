#include "module.hpp"

#include "errors.hpp"

#include <algorithm>
#include <map>

namespace bkit {

AlexanderModule::AlexanderModule(std::vector<LaurentPoly> factors) : factors_(std::move(factors)) {
    for (auto& f : factors_) {
        if (f.is_zero()) fail(errc::invalid_module, "zero invariant factor");
        f = normalize_assoc(f);
        if (f.is_unit()) fail(errc::invalid_module, "unit invariant factor");
    }
    for (size_t i = 0; i + 1 < factors_.size(); ++i)
        if (!divides(factors_[i + 1], factors_[i]))
            fail(errc::invalid_module, "invariant factors do not form a divisibility chain");
}

const LaurentPoly& AlexanderModule::annihilator() const {
    if (factors_.empty()) fail(errc::invalid_module, "trivial module has no annihilator");
    return factors_.front();
}

LaurentPoly AlexanderModule::order() const {
    LaurentPoly r(Rational(1));
    for (const auto& f : factors_) r = r * f;
    return r;
}

int AlexanderModule::q_dimension() const {
    int d = 0;
    for (const auto& f : factors_) d += *f.span_degree();
    return d;
}

AlexanderModule module_from_matrix(const LambdaMatrix& a) {
    if (determinant(a).is_zero())
        fail(errc::singular_matrix, "singular matrix does not present a torsion module");
    auto snf = smith_normal_form(a);
    std::vector<LaurentPoly> factors;
    for (auto it = snf.diagonal.rbegin(); it != snf.diagonal.rend(); ++it)
        if (!it->is_unit()) factors.push_back(normalize_assoc(*it));
    return AlexanderModule(std::move(factors));
}

ClassifierVerdict classify(const AlexanderModule& m) {
    ClassifierVerdict v;
    std::map<int, int> odd_mult_count;
    for (size_t i = 0; i < m.rank(); ++i) {
        const LaurentPoly& d = m.factor(i);
        Rational at_one = d.evaluate_at(Rational(1));
        if (is_zero(at_one))
            v.violations.push_back(
                {ClassifierCondition::value_at_one, i, d.to_string() + " vanishes at t=1"});
        if (!associated(d, d.bar()))
            v.violations.push_back(
                {ClassifierCondition::not_symmetric, i, d.to_string() + " is not symmetric up to a unit"});
        if (!is_zero(at_one)) {
            int mult = d.multiplicity_minus_one();
            if (mult % 2 == 1) odd_mult_count[mult] += 1;
        }
    }
    for (const auto& [mult, count] : odd_mult_count) {
        if (count % 2 == 1)
            v.violations.push_back({ClassifierCondition::parity, static_cast<size_t>(mult),
                                    "odd multiplicity " + std::to_string(mult) + " of -1 occurs " +
                                        std::to_string(count) + " times"});
    }
    v.realizable = v.violations.empty();
    return v;
}

std::vector<PrimaryComponentExponents> primary_decomposition(const AlexanderModule& m) {
    // Collect prime -> exponent per invariant factor, keyed by the canonical
    // normalized prime representative.
    std::map<LaurentPoly, std::vector<int>> table;
    for (size_t i = 0; i < m.rank(); ++i) {
        auto f = factor_rational(m.factor(i));
        for (const auto& pp : f.factors) {
            auto& exps = table[pp.prime];
            exps.resize(m.rank(), 0);
            exps[i] = pp.exponent;
        }
    }
    std::vector<PrimaryComponentExponents> out;
    for (auto& [prime, exps] : table) {
        exps.resize(m.rank(), 0);
        std::vector<int> nonzero;
        for (int e : exps)
            if (e > 0) nonzero.push_back(e);
        out.push_back({PrimePower{prime, 1, classify_prime(prime)}, std::move(nonzero)});
    }
    return out;
}

InvertibilityWitness one_minus_t_invertible(const AlexanderModule& m) {
    InvertibilityWitness w;
    LaurentPoly one_minus_t = LaurentPoly(Rational(1)) - LaurentPoly::t();
    for (size_t i = 0; i < m.rank(); ++i) {
        auto [g, u, v] = gcd_ext(one_minus_t, m.factor(i));
        (void)v;
        if (!g.is_one()) {
            w.invertible = false;
            w.witnesses.clear();
            return w;
        }
        w.witnesses.push_back(divmod(u, m.factor(i)).second);
    }
    return w;
}

} // namespace bkit
