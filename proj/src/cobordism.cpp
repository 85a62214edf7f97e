#include "cobord/cobordism.hpp"

#include <algorithm>
#include <thread>

#include "cobord/errors.hpp"

namespace cobord {

std::string BasisElement::describe() const {
    std::string out = index.lambda.empty() ? "[pt" : "[P^(" + index.lambda.str() + ")";
    for (size_t i = 0; i < divisor_classes.size(); ++i) {
        out += ", D" + std::to_string(i + 1) + "=";
        out += divisor_classes[i].is_zero() ? "0" : divisor_classes[i].str();
    }
    for (size_t j = 0; j < bundles.size(); ++j) {
        out += ", E" + std::to_string(j + 1) + "=";
        if (bundles[j].summands.empty()) {
            out += "0";
            continue;
        }
        for (size_t t = 0; t < bundles[j].summands.size(); ++t) {
            if (t)
                out += "+";
            const auto& coeffs = bundles[j].summands[t].coeffs;
            bool trivial = true;
            std::string inner;
            for (size_t g = 0; g < coeffs.size(); ++g) {
                if (coeffs[g] == 0)
                    continue;
                if (!inner.empty())
                    inner += "+";
                if (coeffs[g] != 1)
                    inner += std::to_string(coeffs[g]) + "*";
                inner += "g" + std::to_string(g + 1);
                trivial = false;
            }
            out += trivial ? "O" : "O(" + inner + ")";
        }
    }
    return out + "]";
}

BasisElement basis_element(const Signature& sig, const PartitionList& idx) {
    try {
        validate_partition_list(sig, idx);
    } catch (const Error& e) {
        throw InvalidIndex(std::string("not a valid partition list: ") + e.what());
    }

    BasisElement elem;
    elem.index = idx;
    elem.geometry = build_projective_product(idx.lambda);

    const std::vector<int>& lambda = idx.lambda.parts();
    std::vector<bool> used(lambda.size(), false);
    auto claim_factor = [&](int part) {
        for (size_t slot = 0; slot < lambda.size(); ++slot) {
            if (!used[slot] && lambda[slot] == part) {
                used[slot] = true;
                return slot;
            }
        }
        throw InvalidIndex("no free factor of size " + std::to_string(part));
    };

    for (const Partition& pi : idx.pis) {
        if (pi.empty()) {
            elem.divisor_classes.push_back(elem.geometry.zero_class());
        } else {
            size_t slot = claim_factor(pi.parts()[0]);
            elem.divisor_classes.push_back(elem.geometry.generator(slot));
        }
    }
    for (size_t j = 0; j < idx.mus.size(); ++j) {
        BundleSpec spec = trivial_bundle(sig.ranks[j] - idx.mus[j].length());
        for (int part : idx.mus[j].parts()) {
            size_t slot = claim_factor(part);
            LineBundleExpr line;
            line.coeffs.assign(slot + 1, 0);
            line.coeffs[slot] = 1;
            spec.summands.push_back(std::move(line));
        }
        elem.bundles.push_back(std::move(spec));
    }
    return elem;
}

PairingMatrix pairing_matrix(const Signature& sig) {
    check_signature_cap(sig);
    PairingMatrix m;
    m.sig = sig;
    m.basis = enumerate_partition_lists(sig);
    m.monomials = enumerate_chern_monomials(sig);
    if (m.basis.size() != m.monomials.size())
        throw Error("basis and monomial counts disagree"); // cannot happen

    size_t rows = m.basis.size();
    m.entries = RatMatrix(rows, rows);

    auto fill_rows = [&](size_t begin, size_t end) {
        for (size_t r = begin; r < end; ++r) {
            BasisElement elem = basis_element(sig, m.basis[r]);
            ChernVector row = chern_vector(elem.geometry, elem.divisor_classes, elem.bundles);
            for (size_t c = 0; c < rows; ++c)
                m.entries.at(r, c) = row.values[c];
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    size_t workers = std::min<size_t>(std::max(1u, hw), rows);
    if (workers > 1 && rows >= 8) {
        std::vector<std::thread> pool;
        size_t chunk = (rows + workers - 1) / workers;
        for (size_t w = 0; w < workers; ++w) {
            size_t begin = w * chunk, end = std::min(rows, begin + chunk);
            if (begin < end)
                pool.emplace_back(fill_rows, begin, end);
        }
        for (auto& t : pool)
            t.join();
    } else {
        fill_rows(0, rows);
    }

    m.det = determinant(m.entries);
    if (m.det == 0)
        throw SingularMatrix("pairing matrix is singular for " + sig.str());
    return m;
}

bool check_triangular(const PairingMatrix& m) {
    std::vector<ChernMonomial> row_monos;
    row_monos.reserve(m.basis.size());
    for (const PartitionList& pl : m.basis)
        row_monos.push_back(q_to_monomial(m.sig, epsilon_inverse(m.sig, pl)));
    for (size_t r = 0; r < m.basis.size(); ++r) {
        for (size_t c = 0; c < m.monomials.size(); ++c) {
            if (monomial_partial_order(m.sig, row_monos[r], m.monomials[c]) == PartialOrd::Less &&
                m.entries.at(r, c) != 0)
                return false;
        }
    }
    return true;
}

std::vector<std::pair<PartitionList, Rational>> decompose(const ChernVector& v) {
    PairingMatrix m = pairing_matrix(v.sig);
    if (v.values.size() != m.monomials.size())
        throw SignatureMismatch("Chern vector is incomplete for its signature");
    std::vector<Rational> x = solve_linear(m.entries.transpose(), v.values);
    std::vector<std::pair<PartitionList, Rational>> coords;
    coords.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        coords.emplace_back(m.basis[i], x[i]);
    return coords;
}

ChernVector recombine(const Signature& sig,
                      const std::vector<std::pair<PartitionList, Rational>>& coords) {
    ChernVector out = zero_chern_vector(sig);
    for (const auto& [pl, coeff] : coords) {
        if (coeff == 0)
            continue;
        BasisElement elem = basis_element(sig, pl);
        ChernVector row = chern_vector(elem.geometry, elem.divisor_classes, elem.bundles);
        for (size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += coeff * row.values[i];
    }
    return out;
}

bool dpr_check(const ChernVector& n0, const ChernVector& n1, const ChernVector& n2,
               const ChernVector& n3) {
    for (const ChernVector* v : {&n1, &n2, &n3})
        if (!(v->sig == n0.sig) || v->values.size() != n0.values.size())
            throw SignatureMismatch("degeneration data must share one signature");
    for (size_t i = 0; i < n0.values.size(); ++i)
        if (n0.values[i] != n1.values[i] + n2.values[i] - n3.values[i])
            return false;
    return true;
}

} // namespace cobord
