#include "toric/binomial_gb.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <numeric>

namespace toric {

namespace {

std::uint64_t support_mask(const ExpVector& m) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) mask |= std::uint64_t{1} << (i % 64);
    return mask;
}

bool divides(const ExpVector& a, const ExpVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExpVector lcm_of(const ExpVector& a, const ExpVector& b) {
    ExpVector l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

bool coprime(const ExpVector& a, const ExpVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

long total_degree(const ExpVector& m) {
    long s = 0;
    for (auto x : m) s += x;
    return s;
}

}  // namespace

LatticeBinomial Binomial::difference() const {
    ExpVector u(head.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = head[i] - tail[i];
    return LatticeBinomial(std::move(u));
}

std::optional<Binomial> orient(const ExpVector& a, const ExpVector& b, const TermOrder& order) {
    int c = order.compare(a, b);
    if (c == 0) return std::nullopt;
    return c > 0 ? Binomial{a, b} : Binomial{b, a};
}

std::optional<Binomial> orient(const LatticeBinomial& u, const TermOrder& order) {
    return orient(u.positive_part(), u.negative_part(), order);
}

// ---------------------------------------------------------------------------
// BinomialBasis
// ---------------------------------------------------------------------------

std::vector<LatticeBinomial> BinomialBasis::lattice_vectors() const {
    std::vector<LatticeBinomial> out;
    out.reserve(elements.size());
    for (const auto& b : elements) out.push_back(b.difference().sign_normalized());
    return out;
}

std::vector<ExpVector> BinomialBasis::leading_monomials() const {
    std::vector<ExpVector> out;
    for (const auto& b : elements) out.push_back(b.head);
    return out;
}

long BinomialBasis::max_degree() const {
    long d = 0;
    for (const auto& b : elements) d = std::max({d, total_degree(b.head), total_degree(b.tail)});
    return d;
}

ExpVector BinomialBasis::reduce(ExpVector m) const {
    for (;;) {
        bool changed = false;
        for (const auto& g : elements) {
            if (!divides(g.head, m)) continue;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += g.tail[i] - g.head[i];
            changed = true;
            break;
        }
        if (!changed) return m;
    }
}

bool BinomialBasis::reduces_to_zero(const ExpVector& a, const ExpVector& b) const {
    return reduce(a) == reduce(b);
}

bool BinomialBasis::contains(const LatticeBinomial& u) const {
    return reduces_to_zero(u.positive_part(), u.negative_part());
}

void sort_canonically(std::vector<Binomial>& v) {
    std::sort(v.begin(), v.end(), [](const Binomial& a, const Binomial& b) {
        long da = total_degree(a.head), db = total_degree(b.head);
        if (da != db) return da < db;
        if (a.head != b.head) return a.head > b.head;
        return a.tail > b.tail;
    });
}

// ---------------------------------------------------------------------------
// BinomialGroebner
// ---------------------------------------------------------------------------

bool BinomialGroebner::Pair::operator<(const Pair& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (lcm != o.lcm) return lcm > o.lcm;
    if (i != o.i) return i < o.i;
    return j < o.j;
}

BinomialGroebner::BinomialGroebner(TermOrder order, bool use_criteria)
    : order_(std::move(order)), use_criteria_(use_criteria) {}

int BinomialGroebner::find_divisor(const ExpVector& m, std::uint64_t mask) const {
    for (auto k : active_) {
        const auto& e = elements_[k];
        if ((e.head_mask & ~mask) != 0) continue;
        if (divides(e.b.head, m)) return static_cast<int>(k);
    }
    return -1;
}

ExpVector BinomialGroebner::reduce(ExpVector m) const {
    for (;;) {
        int k = find_divisor(m, support_mask(m));
        if (k < 0) return m;
        const auto& g = elements_[static_cast<std::size_t>(k)].b;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += g.tail[i] - g.head[i];
    }
}

std::optional<Binomial> BinomialGroebner::reduce(const ExpVector& a, const ExpVector& b) const {
    return orient(reduce(a), reduce(b), order_);
}

bool BinomialGroebner::add(const ExpVector& a, const ExpVector& b) {
    if (a.size() != order_.num_vars() || b.size() != order_.num_vars())
        fail(ErrorKind::dimension_mismatch, "binomial length differs from the number of variables");
    auto r = reduce(a, b);
    if (!r) return false;
    insert(std::move(*r));
    return true;
}

void BinomialGroebner::insert(Binomial h) {
    const auto k = static_cast<std::uint32_t>(elements_.size());
    Element e;
    e.head_mask = support_mask(h.head);
    e.b = std::move(h);
    elements_.push_back(std::move(e));
    const ExpVector& hk = elements_[k].b.head;

    if (!use_criteria_) {
        for (auto j : active_) {
            auto l = lcm_of(elements_[j].b.head, hk);
            pairs_.insert(Pair{order_.degree(l), std::move(l), j, k});
        }
        active_.push_back(k);
        return;
    }

    // Gebauer-Moeller update.
    struct Cand {
        std::uint32_t j;
        ExpVector lcm;
        bool coprime;
        bool alive = true;
    };
    std::vector<Cand> cands;
    for (auto j : active_) {
        const auto& hj = elements_[j].b.head;
        cands.push_back(Cand{j, lcm_of(hj, hk), coprime(hj, hk)});
    }
    // Chain criterion among the new pairs; keep one representative per lcm.
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < cands.size(); ++c) {
        bool drop = false;
        if (!cands[c].coprime) {
            for (std::size_t o = c + 1; o < cands.size() && !drop; ++o)
                if (divides(cands[o].lcm, cands[c].lcm)) drop = true;
            for (std::size_t o : kept)
                if (!drop && divides(cands[o].lcm, cands[c].lcm)) drop = true;
        }
        if (drop) {
            cands[c].alive = false;
            ++stats_.pairs_skipped;
        } else {
            kept.push_back(c);
        }
    }
    // Old pairs made redundant by the new head.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
        if (divides(hk, it->lcm) && lcm_of(elements_[it->i].b.head, hk) != it->lcm &&
            lcm_of(elements_[it->j].b.head, hk) != it->lcm) {
            it = pairs_.erase(it);
            ++stats_.pairs_skipped;
        } else {
            ++it;
        }
    }
    for (std::size_t c : kept) {
        if (cands[c].coprime) {
            ++stats_.pairs_skipped;
            continue;
        }
        auto deg = order_.degree(cands[c].lcm);
        pairs_.insert(Pair{deg, std::move(cands[c].lcm), cands[c].j, k});
    }
    std::vector<std::uint32_t> still;
    for (auto j : active_) {
        if (divides(hk, elements_[j].b.head))
            elements_[j].active = false;
        else
            still.push_back(j);
    }
    still.push_back(k);
    active_ = std::move(still);
}

void BinomialGroebner::run(std::optional<std::int64_t> max_degree) {
    while (!pairs_.empty()) {
        auto it = pairs_.begin();
        if (max_degree && it->degree > *max_degree) return;
        Pair p = *it;
        pairs_.erase(it);
        ++stats_.pairs_considered;
        const Binomial& f = elements_[p.i].b;
        const Binomial& g = elements_[p.j].b;
        ExpVector a(p.lcm.size()), b(p.lcm.size());
        for (std::size_t t = 0; t < a.size(); ++t) {
            a[t] = p.lcm[t] - f.head[t] + f.tail[t];
            b[t] = p.lcm[t] - g.head[t] + g.tail[t];
        }
        auto r = reduce(a, b);
        if (!r) {
            ++stats_.reductions_to_zero;
            continue;
        }
        insert(std::move(*r));
    }
}

BinomialBasis BinomialGroebner::reduced_basis() const {
    if (!pairs_.empty()) fail(ErrorKind::internal, "reduced basis requested with pending S-pairs");
    BinomialBasis out;
    out.order = order_;
    out.reduced = true;
    // Minimalise; with criteria on, the active set is already minimal.
    std::vector<std::uint32_t> minimal;
    for (auto k : active_) {
        bool redundant = false;
        for (auto o : active_) {
            if (o == k || !divides(elements_[o].b.head, elements_[k].b.head)) continue;
            if (elements_[o].b.head != elements_[k].b.head || o < k) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(k);
    }
    for (auto k : minimal) {
        Binomial b = elements_[k].b;
        b.tail = reduce(b.tail);
        if (order_.compare(b.head, b.tail) <= 0)
            fail(ErrorKind::internal, "tail reduction produced a non-decreasing binomial");
        out.elements.push_back(std::move(b));
    }
    sort_canonically(out.elements);
    return out;
}

BinomialBasis buchberger(std::span<const LatticeBinomial> gens, const TermOrder& order,
                         bool use_criteria) {
    BinomialGroebner gb(order, use_criteria);
    for (const auto& u : gens) gb.add(u);
    gb.run();
    return gb.reduced_basis();
}

BinomialBasis buchberger(std::span<const Binomial> gens, const TermOrder& order, bool use_criteria) {
    BinomialGroebner gb(order, use_criteria);
    for (const auto& b : gens) gb.add(b.head, b.tail);
    gb.run();
    return gb.reduced_basis();
}

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

std::string monomial_to_string(const ExpVector& m, const std::vector<std::string>& labels) {
    if (!labels.empty() && labels.size() != m.size()) fail(ErrorKind::internal, "label count does not match exponent length");
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += labels.empty() ? "x" + std::to_string(i + 1) : labels[i];
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string binomial_to_string(const ExpVector& head, const ExpVector& tail,
                               const std::vector<std::string>& labels) {
    return monomial_to_string(head, labels) + " - " + monomial_to_string(tail, labels);
}

std::string binomial_to_string(const LatticeBinomial& u, const std::vector<std::string>& labels) {
    return binomial_to_string(u.positive_part(), u.negative_part(), labels);
}

}  // namespace toric
