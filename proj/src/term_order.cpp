#include "toric/term_order.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toric {

namespace {

std::vector<std::size_t> checked_perm(std::size_t n, std::vector<std::size_t> perm) {
    if (perm.empty()) {
        perm.resize(n);
        std::iota(perm.begin(), perm.end(), 0);
        return perm;
    }
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i || sorted.size() != n)
            fail(ErrorKind::input, "tie-break is not a permutation of the variables");
    return perm;
}

}  // namespace

std::int64_t weight_of(const std::vector<std::int64_t>& w, const ExpVector& a) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(w[i]) * a[i];
    if (s > INT64_MAX || s < INT64_MIN) fail(ErrorKind::overflow, "weight of a monomial overflows");
    return static_cast<std::int64_t>(s);
}

TermOrder TermOrder::lex(std::size_t n, std::vector<std::size_t> perm) {
    TermOrder o;
    o.flavor_ = OrderFlavor::lex;
    o.n_ = n;
    o.perm_ = checked_perm(n, std::move(perm));
    return o;
}

TermOrder TermOrder::grevlex(std::size_t n, std::vector<std::size_t> perm) {
    TermOrder o;
    o.flavor_ = OrderFlavor::grevlex;
    o.n_ = n;
    o.rows_.push_back(std::vector<std::int64_t>(n, 1));
    o.perm_ = checked_perm(n, std::move(perm));
    o.revlex_ = true;
    o.positive_first_row_ = true;
    return o;
}

TermOrder TermOrder::weight(std::vector<std::int64_t> w, std::vector<std::size_t> perm) {
    if (std::any_of(w.begin(), w.end(), [](auto x) { return x < 0; }))
        fail(ErrorKind::input, "weight vector must be non-negative");
    TermOrder o;
    o.flavor_ = OrderFlavor::weight_lex;
    o.n_ = w.size();
    o.positive_first_row_ = std::all_of(w.begin(), w.end(), [](auto x) { return x > 0; });
    o.rows_.push_back(std::move(w));
    o.perm_ = checked_perm(o.n_, std::move(perm));
    return o;
}

TermOrder TermOrder::elimination(std::size_t n, const std::vector<std::size_t>& block) {
    TermOrder o;
    o.flavor_ = OrderFlavor::elimination;
    o.n_ = n;
    std::vector<std::int64_t> ind(n, 0);
    for (auto i : block) ind.at(i) = 1;
    o.rows_.push_back(std::move(ind));
    o.rows_.push_back(std::vector<std::int64_t>(n, 1));
    o.perm_ = checked_perm(n, {});
    o.revlex_ = true;
    return o;
}

TermOrder TermOrder::matrix(std::vector<std::vector<std::int64_t>> rows, std::vector<std::size_t> perm,
                            OrderFlavor flavor) {
    if (rows.empty()) fail(ErrorKind::input, "matrix order needs at least one row");
    const std::size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) fail(ErrorKind::input, "matrix order rows differ in length");
    bool first_positive = std::all_of(rows[0].begin(), rows[0].end(), [](auto x) { return x > 0; });
    bool all_nonneg = std::all_of(rows.begin(), rows.end(), [](const auto& r) {
        return std::all_of(r.begin(), r.end(), [](auto x) { return x >= 0; });
    });
    if (!first_positive && !all_nonneg) fail(ErrorKind::input, "matrix order is not a well-order");
    TermOrder o;
    o.flavor_ = flavor;
    o.n_ = n;
    o.rows_ = std::move(rows);
    o.perm_ = checked_perm(n, std::move(perm));
    o.positive_first_row_ = first_positive;
    return o;
}

int TermOrder::compare(const ExpVector& a, const ExpVector& b) const {
    for (const auto& r : rows_) {
        __int128 s = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (a[i] != b[i]) s += static_cast<__int128>(r[i]) * (a[i] - b[i]);
        if (s != 0) return s > 0 ? 1 : -1;
    }
    if (revlex_) {
        for (std::size_t k = n_; k-- > 0;) {
            auto i = perm_[k];
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }
    for (auto i : perm_)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

std::int64_t TermOrder::degree(const ExpVector& a) const {
    if (positive_first_row_) return weight_of(rows_[0], a);
    std::int64_t s = 0;
    for (auto x : a) s += x;
    return s;
}

std::string TermOrder::describe() const {
    std::ostringstream out;
    auto print_vec = [&](const auto& v) {
        out << '[';
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        out << ']';
    };
    switch (flavor_) {
        case OrderFlavor::lex: out << "lex"; break;
        case OrderFlavor::grevlex: out << "grevlex"; break;
        case OrderFlavor::weight_lex: out << "weight"; break;
        case OrderFlavor::elimination: out << "elimination"; break;
    }
    if (flavor_ == OrderFlavor::weight_lex) {
        out << ' ';
        for (const auto& r : rows_) print_vec(r);
    } else if (flavor_ == OrderFlavor::elimination) {
        out << ' ';
        print_vec(rows_[0]);
    }
    std::vector<std::size_t> one_based;
    for (auto i : perm_) one_based.push_back(i + 1);
    out << " tiebreak ";
    print_vec(one_based);
    return out.str();
}

}  // namespace toric
