#include "cobord/chern_vector.hpp"

#include "cobord/errors.hpp"

namespace cobord {

ChernVector zero_chern_vector(const Signature& sig) {
    ChernVector v;
    v.sig = sig;
    v.values.assign(enumerate_chern_monomials(sig).size(), Rational(0));
    return v;
}

const Rational& chern_value(const ChernVector& v, const std::string& monomial) {
    auto monos = enumerate_chern_monomials(v.sig);
    for (size_t i = 0; i < monos.size(); ++i)
        if (monomial_name(v.sig, monos[i]) == monomial)
            return v.values[i];
    throw UnknownLabel("no Chern monomial '" + monomial + "' in signature " + v.sig.str());
}

namespace {

void require_same_signature(const ChernVector& a, const ChernVector& b) {
    if (!(a.sig == b.sig) || a.values.size() != b.values.size())
        throw SignatureMismatch("Chern vectors have different signatures");
}

} // namespace

ChernVector chern_add(const ChernVector& a, const ChernVector& b) {
    require_same_signature(a, b);
    ChernVector out = a;
    for (size_t i = 0; i < out.values.size(); ++i)
        out.values[i] += b.values[i];
    return out;
}

ChernVector chern_sub(const ChernVector& a, const ChernVector& b) {
    require_same_signature(a, b);
    ChernVector out = a;
    for (size_t i = 0; i < out.values.size(); ++i)
        out.values[i] -= b.values[i];
    return out;
}

} // namespace cobord
