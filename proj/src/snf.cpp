#include "pfaut/snf.hpp"

namespace pfaut {

std::optional<std::vector<Int>> z_module_membership_rational(
    const std::vector<std::vector<Rational>>& generators, const std::vector<Rational>& v) {
    Int scale = 1;
    for (const auto& g : generators)
        for (const auto& e : g) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.den().get_mpz_t());
    for (const auto& e : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.den().get_mpz_t());

    auto scaled = [&](const std::vector<Rational>& xs) {
        std::vector<Int> out(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) {
            const Rational r = xs[i] * Rational(scale);
            out[i] = r.num();  // exact by choice of scale
        }
        return out;
    };
    std::vector<std::vector<Int>> gens_z;
    gens_z.reserve(generators.size());
    for (const auto& g : generators) gens_z.push_back(scaled(g));
    return module_membership<IntegerRing>(gens_z, scaled(v));
}

}  // namespace pfaut
