#include "normeq/laurent.hpp"

namespace normeq {

namespace {

// u^0-anchored expansion of a polynomial at infinity: g(x) = sum g_i u^(-i).
// Exact; the precision tag only caps what later products may trust.
template <class Ring, class Promote>
SeriesT<Ring> poly_at_infinity(const Poly& g, Ring R, Promote promote, int prec) {
    SeriesT<Ring> s(R, prec);
    if (g.is_zero()) return s;
    s.off = -g.deg();
    s.c.clear();
    for (size_t i = g.c.size(); i-- > 0;) s.c.push_back(promote(g.c[i]));
    s.normalize();
    return s;
}

}  // namespace

LaurentSeries laurent_embed(const RatFunc& f, int prec) {
    PrimeRing R{f.q()};
    if (f.is_zero()) return LaurentSeries::zero(R, prec);
    auto id = [](uint32_t a) { return a; };
    int P = prec + f.num.deg() + f.den.deg() + 2;
    LaurentSeries n = poly_at_infinity(f.num, R, id, P);
    LaurentSeries d = poly_at_infinity(f.den, R, id, P);
    return (n * d.inverse()).truncated(prec);
}

ExtSeries laurent_embed_ext(const RatFunc& f, const std::shared_ptr<const ExtField>& K, int prec) {
    ExtRing R{K};
    if (f.is_zero()) return ExtSeries::zero(R, prec);
    auto pr = [&](uint32_t a) { return K->from_base(a); };
    int P = prec + f.num.deg() + f.den.deg() + 2;
    ExtSeries n = poly_at_infinity(f.num, R, pr, P);
    ExtSeries d = poly_at_infinity(f.den, R, pr, P);
    return (n * d.inverse()).truncated(prec);
}

}  // namespace normeq
