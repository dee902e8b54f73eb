#include "trigrearr/egyptian.hpp"

#include <cmath>

#include "trigrearr/errors.hpp"

namespace trigrearr {

EgyptianDecomposition egyptian_greedy(const Rational& alpha, int s, std::size_t bitBudget)
{
    if (alpha <= 0 || alpha > 1)
        throw DomainError("egyptian_greedy: alpha must lie in (0, 1]");
    if (s < 1)
        throw DomainError("egyptian_greedy: s must be >= 1");

    EgyptianDecomposition out;
    out.alpha = alpha;
    Rational rem = alpha;
    for (int j = 0; j < s; ++j) {
        // floor(1/rem) + 1 is the least l with rem - 1/l > 0.
        const BigInt l = numerator(rem) == 0 ? BigInt(1)
                                             : BigInt(denominator(rem) / numerator(rem)) + 1;
        const Rational next = rem - Rational(BigInt(1), l);
        if (boost::multiprecision::msb(denominator(next)) + 1 > bitBudget) {
            out.truncated = true;
            break;
        }
        out.denominators.push_back(l);
        out.remainders.push_back(next);
        rem = next;
    }
    return out;
}

Rational exact_rational(double x)
{
    if (!std::isfinite(x))
        throw DomainError("exact_rational: non-finite value");
    int exp = 0;
    const double mant = std::frexp(x, &exp);
    // mant * 2^53 is an integer.
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    Rational r{BigInt(scaled)};
    exp -= 53;
    if (exp > 0)
        r *= Rational(BigInt(1) << exp);
    else if (exp < 0)
        r /= Rational(BigInt(1) << -exp);
    return r;
}

Rational egyptian_remainder_bound(int s)
{
    if (s < 1)
        throw DomainError("egyptian_remainder_bound: s must be >= 1");
    const unsigned shift = 1u << static_cast<unsigned>(s - 1);
    return Rational(BigInt(1), BigInt(1) << shift);
}

} // namespace trigrearr
