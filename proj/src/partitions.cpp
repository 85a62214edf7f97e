#include "cobord/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "cobord/errors.hpp"

namespace cobord {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidState("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidState("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
    if (parts_.empty())
        return Partition();
    std::vector<int> t(parts_.front());
    for (int col = 0; col < parts_.front(); ++col) {
        int count = 0;
        for (int p : parts_)
            if (p > col)
                ++count;
        t[col] = count;
    }
    return Partition(std::move(t));
}

Partition Partition::multiset_union(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

bool Partition::contains_submultiset(const Partition& sub) const {
    size_t i = 0;
    for (int p : sub.parts_) {
        while (i < parts_.size() && parts_[i] > p)
            ++i;
        if (i == parts_.size() || parts_[i] != p)
            return false;
        ++i;
    }
    return true;
}

Partition Partition::multiset_difference(const Partition& sub) const {
    std::vector<int> rest;
    size_t i = 0;
    for (int p : sub.parts_) {
        while (i < parts_.size() && parts_[i] > p)
            rest.push_back(parts_[i++]);
        if (i == parts_.size() || parts_[i] != p)
            throw InvalidState("multiset_difference: not a sub-multiset");
        ++i;
    }
    rest.insert(rest.end(), parts_.begin() + i, parts_.end());
    return Partition(std::move(rest));
}

std::string Partition::str() const {
    if (parts_.empty())
        return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ".";
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Partition> enumerate_partitions(int n, int max_part) {
    if (n < 0)
        throw InvalidState("cannot enumerate partitions of a negative integer");
    std::vector<Partition> result;
    std::vector<int> current;
    std::function<void(int, int)> recurse = [&](int remaining, int cap) {
        if (remaining == 0) {
            result.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            recurse(remaining - part, part);
            current.pop_back();
        }
    };
    recurse(n, max_part < 0 ? n : std::min(n, max_part));
    return result;
}

std::string Signature::str() const {
    std::string out = "n=" + std::to_string(n) + " s=" + std::to_string(s) + " ranks=[";
    for (size_t j = 0; j < ranks.size(); ++j) {
        if (j)
            out += ",";
        out += std::to_string(ranks[j]);
    }
    return out + "]";
}

void check_signature_cap(const Signature& sig, int cap) {
    if (sig.n < 0 || sig.s < 0)
        throw InvalidState("signature requires n >= 0 and s >= 0");
    for (int r : sig.ranks)
        if (r < 0)
            throw InvalidState("signature requires nonnegative ranks");
    if (sig.n > cap)
        throw CapExceeded("n=" + std::to_string(sig.n) + " exceeds cap " + std::to_string(cap));
}

std::string PartitionList::str() const {
    std::string out = "(" + lambda.str();
    auto group = [&out](const std::vector<Partition>& ps) {
        out += " |";
        for (size_t i = 0; i < ps.size(); ++i) {
            out += i ? ", " : " ";
            out += ps[i].str();
        }
        if (ps.empty())
            out += " ";
    };
    group(pis);
    group(mus);
    return out + ")";
}

namespace {

std::string array_str(const Partition& p) {
    std::string out = "[";
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(p.parts()[i]);
    }
    return out + "]";
}

std::string array_group_str(const std::vector<Partition>& ps) {
    std::string out = "[";
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i)
            out += ",";
        out += array_str(ps[i]);
    }
    return out + "]";
}

} // namespace

std::string PartitionList::machine_str() const {
    return "[" + array_str(lambda) + "," + array_group_str(pis) + "," + array_group_str(mus) + "]";
}

void validate_partition_list(const Signature& sig, const PartitionList& pl) {
    if (static_cast<int>(pl.pis.size()) != sig.s ||
        static_cast<int>(pl.mus.size()) != sig.bundle_count())
        throw SignatureMismatch("partition list has wrong number of slots for " + sig.str());
    if (pl.lambda.size() != sig.n)
        throw SignatureMismatch("lambda is not a partition of n");
    Partition used;
    for (const Partition& pi : pl.pis) {
        if (pi.length() > 1)
            throw RankViolation("divisor slot holds more than one part");
        used = Partition::multiset_union(used, pi);
    }
    for (size_t j = 0; j < pl.mus.size(); ++j) {
        if (pl.mus[j].length() > sig.ranks[j])
            throw RankViolation("bundle slot " + std::to_string(j + 1) + " exceeds its rank");
        used = Partition::multiset_union(used, pl.mus[j]);
    }
    if (!pl.lambda.contains_submultiset(used))
        throw InvalidState("slot parts do not form a sub-multiset of lambda");
}

namespace {

// Minimal parser for "[[2,1],[[2]],[[1],[]]]".
struct ArrayParser {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError("expected '" + std::string(1, c) + "' in partition list '" + text + "'");
        ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("expected integer in partition list '" + text + "'");
        return std::stoi(text.substr(start, pos - start));
    }
    Partition parse_partition() {
        expect('[');
        std::vector<int> parts;
        if (!peek(']')) {
            parts.push_back(parse_int());
            while (peek(',')) {
                ++pos;
                parts.push_back(parse_int());
            }
        }
        expect(']');
        return Partition(std::move(parts));
    }
    std::vector<Partition> parse_group() {
        expect('[');
        std::vector<Partition> ps;
        if (!peek(']')) {
            ps.push_back(parse_partition());
            while (peek(',')) {
                ++pos;
                ps.push_back(parse_partition());
            }
        }
        expect(']');
        return ps;
    }
};

} // namespace

PartitionList parse_partition_list(const std::string& text) {
    ArrayParser p{text};
    p.expect('[');
    PartitionList pl;
    pl.lambda = p.parse_partition();
    p.expect(',');
    pl.pis = p.parse_group();
    p.expect(',');
    pl.mus = p.parse_group();
    p.expect(']');
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing characters in partition list '" + text + "'");
    return pl;
}

VarTablePtr chern_symbols(const Signature& sig) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 1; i <= sig.n; ++i) {
        names.push_back("c" + std::to_string(i) + "T");
        weights.push_back(i);
    }
    for (int i = 1; i <= sig.s; ++i) {
        names.push_back("c1D" + std::to_string(i));
        weights.push_back(1);
    }
    for (int j = 0; j < sig.bundle_count(); ++j) {
        for (int i = 1; i <= sig.ranks[j]; ++i) {
            names.push_back("c" + std::to_string(i) + "E" + std::to_string(j + 1));
            weights.push_back(i);
        }
    }
    return std::make_shared<VarTable>(std::move(names), std::move(weights));
}

size_t tangent_symbol_index(const Signature& sig, int i) {
    if (i < 1 || i > sig.n)
        throw InvalidIndex("tangent Chern class index out of range");
    return static_cast<size_t>(i - 1);
}

size_t divisor_symbol_index(const Signature& sig, int i) {
    if (i < 0 || i >= sig.s)
        throw InvalidIndex("divisor slot out of range");
    return static_cast<size_t>(sig.n + i);
}

size_t bundle_symbol_index(const Signature& sig, int j, int i) {
    if (j < 0 || j >= sig.bundle_count() || i < 1 || i > sig.ranks[j])
        throw InvalidIndex("bundle Chern class index out of range");
    size_t offset = static_cast<size_t>(sig.n + sig.s);
    for (int b = 0; b < j; ++b)
        offset += static_cast<size_t>(sig.ranks[b]);
    return offset + static_cast<size_t>(i - 1);
}

std::string monomial_name(const Signature& sig, const ChernMonomial& m) {
    VarTablePtr table = chern_symbols(sig);
    std::string out;
    for (size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += table->name(i);
        if (m.exps[i] > 1)
            out += "^" + std::to_string(m.exps[i]);
    }
    return out.empty() ? "1" : out;
}

namespace {

// Exponents feeding the canonical comparisons, outermost first.
std::vector<int> block_key(const Signature& sig, const ChernMonomial& m) {
    std::vector<int> key;
    for (int j = sig.bundle_count() - 1; j >= 0; --j)
        for (int i = sig.ranks[j]; i >= 1; --i)
            key.push_back(m.exps[bundle_symbol_index(sig, j, i)]);
    for (int i = sig.s - 1; i >= 0; --i)
        key.push_back(m.exps[divisor_symbol_index(sig, i)]);
    return key;
}

std::vector<int> tangent_key(const Signature& sig, const ChernMonomial& m) {
    std::vector<int> key;
    for (int i = sig.n; i >= 1; --i)
        key.push_back(m.exps[tangent_symbol_index(sig, i)]);
    return key;
}

} // namespace

bool monomial_less(const Signature& sig, const ChernMonomial& a, const ChernMonomial& b) {
    std::vector<int> ka = block_key(sig, a), kb = block_key(sig, b);
    if (ka != kb)
        return ka < kb;
    return tangent_key(sig, a) < tangent_key(sig, b);
}

PartialOrd monomial_partial_order(const Signature& sig, const ChernMonomial& a,
                                  const ChernMonomial& b) {
    std::vector<int> ka = block_key(sig, a), kb = block_key(sig, b);
    if (ka < kb)
        return PartialOrd::Less;
    if (kb < ka)
        return PartialOrd::Greater;
    return a == b ? PartialOrd::Equal : PartialOrd::Incomparable;
}

std::vector<ChernMonomial> enumerate_chern_monomials(const Signature& sig) {
    check_signature_cap(sig);
    VarTablePtr table = chern_symbols(sig);
    std::vector<ChernMonomial> result;
    Exponents current(table->size(), 0);
    std::function<void(size_t, int)> recurse = [&](size_t var, int remaining) {
        if (var == table->size()) {
            if (remaining == 0)
                result.push_back(ChernMonomial{current});
            return;
        }
        int w = table->weight(var);
        for (int e = 0; e * w <= remaining; ++e) {
            current[var] = e;
            recurse(var + 1, remaining - e * w);
        }
        current[var] = 0;
    };
    recurse(0, sig.n);
    std::sort(result.begin(), result.end(),
              [&](const ChernMonomial& a, const ChernMonomial& b) {
                  return monomial_less(sig, a, b);
              });
    return result;
}

ChernMonomial q_to_monomial(const Signature& sig, const QElement& q) {
    VarTablePtr table = chern_symbols(sig);
    ChernMonomial m{Exponents(table->size(), 0)};
    for (int p : q.nu.parts()) {
        if (p > sig.n)
            throw SignatureMismatch("nu part exceeds n");
        m.exps[tangent_symbol_index(sig, p)] += 1;
    }
    for (int i = 0; i < sig.s; ++i) {
        const Partition& p = q.ps[i];
        if (p.largest() > 1)
            throw RankViolation("divisor exponent partition must be a column");
        m.exps[divisor_symbol_index(sig, i)] = p.length();
    }
    for (int j = 0; j < sig.bundle_count(); ++j) {
        for (int part : q.qs[j].parts()) {
            if (part > sig.ranks[j])
                throw RankViolation("bundle exponent partition part exceeds rank");
            m.exps[bundle_symbol_index(sig, j, part)] += 1;
        }
    }
    return m;
}

QElement monomial_to_q(const Signature& sig, const ChernMonomial& m) {
    QElement q;
    std::vector<int> nu_parts;
    for (int i = sig.n; i >= 1; --i)
        for (int e = 0; e < m.exps[tangent_symbol_index(sig, i)]; ++e)
            nu_parts.push_back(i);
    q.nu = Partition(std::move(nu_parts));
    for (int i = 0; i < sig.s; ++i) {
        int e = m.exps[divisor_symbol_index(sig, i)];
        q.ps.emplace_back(std::vector<int>(static_cast<size_t>(e), 1));
    }
    for (int j = 0; j < sig.bundle_count(); ++j) {
        std::vector<int> parts;
        for (int i = sig.ranks[j]; i >= 1; --i)
            for (int e = 0; e < m.exps[bundle_symbol_index(sig, j, i)]; ++e)
                parts.push_back(i);
        q.qs.emplace_back(std::move(parts));
    }
    return q;
}

PartitionList epsilon(const Signature& sig, const QElement& q) {
    if (static_cast<int>(q.ps.size()) != sig.s ||
        static_cast<int>(q.qs.size()) != sig.bundle_count())
        throw SignatureMismatch("dual element has wrong number of slots");
    int total = q.nu.size();
    PartitionList pl;
    pl.lambda = q.nu;
    for (const Partition& p : q.ps) {
        if (p.largest() > 1)
            throw RankViolation("divisor slot admits only columns");
        total += p.size();
        Partition t = p.transpose();
        pl.lambda = Partition::multiset_union(pl.lambda, t);
        pl.pis.push_back(std::move(t));
    }
    for (int j = 0; j < sig.bundle_count(); ++j) {
        if (q.qs[j].largest() > sig.ranks[j])
            throw RankViolation("part of slot " + std::to_string(j + 1) + " exceeds rank " +
                                std::to_string(sig.ranks[j]));
        total += q.qs[j].size();
        Partition t = q.qs[j].transpose();
        pl.lambda = Partition::multiset_union(pl.lambda, t);
        pl.mus.push_back(std::move(t));
    }
    if (total != sig.n)
        throw SignatureMismatch("sizes do not sum to n");
    return pl;
}

QElement epsilon_inverse(const Signature& sig, const PartitionList& pl) {
    validate_partition_list(sig, pl);
    QElement q;
    Partition used;
    for (const Partition& pi : pl.pis) {
        q.ps.push_back(pi.transpose());
        used = Partition::multiset_union(used, pi);
    }
    for (const Partition& mu : pl.mus) {
        q.qs.push_back(mu.transpose());
        used = Partition::multiset_union(used, mu);
    }
    q.nu = pl.lambda.multiset_difference(used);
    return q;
}

std::vector<PartitionList> enumerate_partition_lists(const Signature& sig) {
    check_signature_cap(sig);
    std::vector<PartitionList> result;

    // Distinct part values of lambda with multiplicities, descending.
    for (const Partition& lambda : enumerate_partitions(sig.n)) {
        std::vector<int> values;
        std::vector<int> avail;
        for (int p : lambda.parts()) {
            if (values.empty() || values.back() != p) {
                values.push_back(p);
                avail.push_back(1);
            } else {
                avail.back() += 1;
            }
        }

        int slots = sig.s + sig.bundle_count();
        PartitionList current;
        current.lambda = lambda;
        current.pis.resize(sig.s);
        current.mus.resize(sig.bundle_count());

        std::function<void(int)> assign_slot = [&](int slot) {
            if (slot == slots) {
                result.push_back(current);
                return;
            }
            bool is_divisor = slot < sig.s;
            int max_len = is_divisor ? 1 : sig.ranks[slot - sig.s];
            Partition& target = is_divisor ? current.pis[slot] : current.mus[slot - sig.s];

            // Choose a sub-multiset of the available values, at most max_len parts.
            std::vector<int> chosen;
            std::function<void(size_t, int)> pick = [&](size_t vi, int budget) {
                if (vi == values.size()) {
                    target = Partition(chosen);
                    assign_slot(slot + 1);
                    return;
                }
                int limit = std::min(avail[vi], budget);
                for (int take = 0; take <= limit; ++take) {
                    if (take > 0) {
                        avail[vi] -= take;
                        chosen.insert(chosen.end(), static_cast<size_t>(take), values[vi]);
                    }
                    pick(vi + 1, budget - take);
                    if (take > 0) {
                        avail[vi] += take;
                        chosen.resize(chosen.size() - static_cast<size_t>(take));
                    }
                }
            };
            pick(0, max_len);
        };
        assign_slot(0);
    }

    std::sort(result.begin(), result.end(), [&](const PartitionList& a, const PartitionList& b) {
        return monomial_less(sig, q_to_monomial(sig, epsilon_inverse(sig, a)),
                             q_to_monomial(sig, epsilon_inverse(sig, b)));
    });
    return result;
}

} // namespace cobord
