#include "lrcq/locality.hpp"

#include <algorithm>
#include <functional>

#include "lrcq/error.hpp"

namespace lrcq {

namespace {

// Incremental Gaussian elimination over a LIFO stack of column vectors.
class PivotStack {
public:
    PivotStack(const Field& f, size_t height) : f_(f), h_(height) {}

    size_t rank() const { return pivots_.size(); }

    // Appends v; returns true when the rank grew.
    bool push(std::vector<uint64_t> v) {
        reduce(v);
        size_t lead = h_;
        for (size_t t = 0; t < h_; ++t)
            if (v[t] != 0) { lead = t; break; }
        grew_.push_back(lead != h_);
        if (lead == h_) return false;
        uint64_t inv = f_.inv(v[lead]);
        for (auto& x : v) x = f_.mul(x, inv);
        pivots_.push_back(std::move(v));
        leads_.push_back(lead);
        return true;
    }

    void pop() {
        if (grew_.back()) {
            pivots_.pop_back();
            leads_.pop_back();
        }
        grew_.pop_back();
    }

private:
    void reduce(std::vector<uint64_t>& v) const {
        for (size_t i = 0; i < pivots_.size(); ++i) {
            uint64_t coef = v[leads_[i]];
            if (coef == 0) continue;
            for (size_t t = 0; t < h_; ++t) v[t] = f_.sub(v[t], f_.mul(coef, pivots_[i][t]));
        }
    }

    const Field& f_;
    size_t h_;
    std::vector<std::vector<uint64_t>> pivots_;
    std::vector<size_t> leads_;
    std::vector<bool> grew_;
};

std::vector<std::vector<uint64_t>> columns_of(const Matrix& m) {
    std::vector<std::vector<uint64_t>> cols(m.cols(), std::vector<uint64_t>(m.rows()));
    for (size_t j = 0; j < m.cols(); ++j)
        for (size_t i = 0; i < m.rows(); ++i) cols[j][i] = m.at(i, j);
    return cols;
}

// Smallest dependent subset among `cols` of size <= wmax; 0 when none.
// Increments `visited` per search node against max_nodes.
size_t smallest_dependent_subset(const std::vector<std::vector<uint64_t>>& cols, size_t height,
                                 size_t wmax, const Field& f, uint64_t& visited,
                                 uint64_t max_nodes) {
    size_t n = cols.size();
    if (height == 0) return n > 0 ? 1 : 0;

    std::vector<std::vector<uint64_t>> pivots;
    std::vector<size_t> leads;

    auto reduce = [&](std::vector<uint64_t> v) {
        for (size_t i = 0; i < pivots.size(); ++i) {
            uint64_t coef = v[leads[i]];
            if (coef == 0) continue;
            for (size_t t = 0; t < height; ++t)
                v[t] = f.sub(v[t], f.mul(coef, pivots[i][t]));
        }
        return v;
    };

    std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t remaining) -> bool {
        for (size_t j = start; j + remaining <= n; ++j) {
            if (++visited > max_nodes)
                fail_budget("column-subset search exceeded max_subsets visited nodes");
            std::vector<uint64_t> v = reduce(cols[j]);
            size_t lead = height;
            for (size_t t = 0; t < height; ++t)
                if (v[t] != 0) { lead = t; break; }
            if (lead == height) {
                if (remaining == 1) return true;
                continue;
            }
            if (remaining == 1) continue;
            uint64_t inv = f.inv(v[lead]);
            for (size_t t = 0; t < height; ++t) v[t] = f.mul(v[t], inv);
            pivots.push_back(std::move(v));
            leads.push_back(lead);
            bool found = rec(j + 1, remaining - 1);
            pivots.pop_back();
            leads.pop_back();
            if (found) return true;
        }
        return false;
    };

    for (size_t w = 1; w <= wmax && w <= n; ++w)
        if (rec(0, w)) return w;
    return 0;
}

// d(C|_S) >= delta test without computing the exact distance: the punctured
// code must be nonzero and every delta-1 columns of its parity block must be
// linearly independent.
bool restriction_distance_at_least(const Matrix& G, const std::vector<size_t>& support,
                                   size_t delta, const Field& f, uint64_t& visited,
                                   uint64_t max_nodes) {
    Matrix gs = select_columns(G, support);
    Matrix par = nullspace(gs);
    size_t r = support.size() - par.rows();  // rank of the restriction
    if (r == 0) return false;                // zero code, distance 0
    if (par.rows() + 1 < delta) return false;
    auto cols = columns_of(par);
    return smallest_dependent_subset(cols, par.rows(), delta - 1, f, visited, max_nodes) == 0;
}

void validate_support(const std::vector<size_t>& support, size_t n) {
    if (support.empty()) fail_user("EmptySupport", "a repair group needs at least one coordinate");
    for (size_t j = 0; j < support.size(); ++j) {
        if (support[j] >= n) fail_user("IndexOutOfRange", "support coordinate beyond code length");
        if (j > 0 && support[j] <= support[j - 1])
            fail_user("NotStrictlyIncreasing", "support coordinates must be strictly increasing");
    }
}

size_t rank_of_columns(const Matrix& G, const std::vector<size_t>& support) {
    if (support.empty()) return 0;
    return rank(select_columns(G, support));
}

std::vector<size_t> sorted_union(const std::vector<size_t>& a, const std::vector<size_t>& b) {
    std::vector<size_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Searches supports of exactly `size` coordinates in lexicographic order,
// with `pinned` coordinates forced in.  The exclusion state prunes branches
// whose left-out columns already make a (delta-1)-dimensional shortened dual
// impossible.  Returns the first support passing the local-distance test.
bool search_support_of_size(const LinearCode& c, const std::vector<bool>& pinned,
                            size_t size, size_t delta, uint64_t& visited, uint64_t max_nodes,
                            std::vector<size_t>& out) {
    size_t n = c.n();
    const Field& f = *c.field();
    size_t excl_height = c.H().rows();
    size_t excl_cap = excl_height >= delta - 1 ? excl_height - (delta - 1) : 0;
    auto hcols = columns_of(c.H());
    PivotStack excluded(f, excl_height);
    std::vector<size_t> included;
    size_t pinned_left = static_cast<size_t>(std::count(pinned.begin(), pinned.end(), true));
    bool found = false;

    std::function<void(size_t)> rec = [&](size_t pos) {
        if (found) return;
        if (++visited > max_nodes)
            fail_budget("local-protection support search exceeded max_subsets visited nodes");
        if (included.size() == size) {
            if (pinned_left == 0 &&
                restriction_distance_at_least(c.G(), included, delta, f, visited, max_nodes)) {
                out = included;
                found = true;
            }
            return;
        }
        if (pos == n) return;
        if (included.size() + (n - pos) < size) return;
        if (pinned_left + included.size() > size) return;  // pins cannot all fit
        // Include branch first: lexicographically smallest support wins.
        included.push_back(pos);
        if (pinned[pos]) --pinned_left;
        rec(pos + 1);
        if (pinned[pos]) ++pinned_left;
        included.pop_back();
        if (found || pinned[pos]) return;  // pinned coordinates cannot be skipped
        bool viable = true;
        if (!excluded.push(hcols[pos]) || excluded.rank() <= excl_cap) {
            // rank unchanged, or still room for a (delta-1)-dim shortened dual
        } else {
            viable = false;
        }
        if (viable) rec(pos + 1);
        excluded.pop();
    };

    rec(0);
    return found;
}

}  // namespace

uint64_t singleton_like_bound(size_t n, size_t k, const LocalityParams& p) {
    if (p.r < 1 || p.delta < 2) fail_user("InvalidParams", "need r >= 1 and delta >= 2");
    if (k < 1 || k > n) fail_user("InvalidParams", "need 1 <= k <= n");
    int64_t bound = static_cast<int64_t>(n) - static_cast<int64_t>(k) + 1 -
                    static_cast<int64_t>(ceil_div(k, p.r) - 1) * static_cast<int64_t>(p.delta - 1);
    if (bound < 1)
        fail_user("InvalidParams", "the distance bound is nonpositive for these parameters");
    return static_cast<uint64_t>(bound);
}

RepairGroup verify_repair_group(const LinearCode& c, size_t i,
                                const std::vector<size_t>& support,
                                const LocalityParams& p, const DistanceBudget& budget) {
    validate_support(support, c.n());
    if (!std::binary_search(support.begin(), support.end(), i))
        fail_user("CoordinateNotInSupport", "the protected coordinate must lie in its group");
    if (support.size() > p.r + p.delta - 1)
        fail_user("TooLarge", "support exceeds r + delta - 1 coordinates");
    LinearCode punct = c.puncture(support);
    size_t d = punct.min_distance(budget);
    if (d < p.delta)
        fail_user("DistanceTooSmall", "punctured code distance " + std::to_string(d) +
                                          " is below delta = " + std::to_string(p.delta));
    return RepairGroup{support, std::move(punct), d};
}

RepairGroup find_local_protection(const LinearCode& c, size_t i, const LocalityParams& p,
                                  const DistanceBudget& budget) {
    if (p.r < 1 || p.delta < 2) fail_user("InvalidParams", "need r >= 1 and delta >= 2");
    if (i >= c.n()) fail_user("IndexOutOfRange", "coordinate beyond code length");
    size_t cap = std::min(p.r + p.delta - 1, c.n());
    std::vector<bool> pinned(c.n(), false);
    pinned[i] = true;
    uint64_t visited = 0;
    std::vector<size_t> support;
    for (size_t size = p.delta; size <= cap; ++size) {
        if (search_support_of_size(c, pinned, size, p.delta, visited, budget.max_subsets,
                                   support))
            return verify_repair_group(c, i, support, p, budget);
    }
    fail_user("NoneFound", "coordinate " + std::to_string(i) +
                               " has no repair group within r + delta - 1 coordinates");
}

LocalityCertificate certify_lrc(const LinearCode& c, const LocalityParams& p,
                                const DistanceBudget& budget,
                                const std::vector<std::vector<size_t>>* user_groups) {
    LocalityCertificate cert;
    cert.params = p;
    if (user_groups) {
        for (const auto& s : *user_groups)
            cert.groups.push_back(verify_repair_group(c, s.empty() ? 0 : s[0], s, p, budget));
    } else {
        std::vector<bool> covered(c.n(), false);
        for (size_t i = 0; i < c.n(); ++i) {
            if (covered[i]) continue;
            RepairGroup g = find_local_protection(c, i, p, budget);
            for (size_t j : g.support) covered[j] = true;
            cert.groups.push_back(std::move(g));
        }
    }
    cert.cover.assign(c.n(), cert.groups.size());
    for (size_t gi = 0; gi < cert.groups.size(); ++gi)
        for (size_t j : cert.groups[gi].support)
            if (cert.cover[j] == cert.groups.size()) cert.cover[j] = gi;
    for (size_t j = 0; j < c.n(); ++j)
        if (cert.cover[j] == cert.groups.size())
            fail_user("UncoveredCoordinate",
                      "coordinate " + std::to_string(j) + " lies in no supplied group");
    return cert;
}

OptimalityReport check_optimal_lrc(const LinearCode& c, const LocalityCertificate& cert,
                                   const DistanceBudget& budget) {
    size_t d = c.min_distance(budget);
    uint64_t bound = singleton_like_bound(c.n(), c.k(), cert.params);
    return OptimalityReport{d == bound, d, bound};
}

bool is_optimal_lrc(const LinearCode& c, const LocalityCertificate& cert,
                    const DistanceBudget& budget) {
    return check_optimal_lrc(c, cert, budget).optimal;
}

Decomposition decompose(const LinearCode& c, const LocalityCertificate& cert,
                        const DistanceBudget& budget) {
    const LocalityParams& p = cert.params;
    size_t k = c.k();
    if (k == 0) fail_user("InvalidParams", "cannot decompose the zero code");
    const Matrix& G = c.G();

    Decomposition out;
    std::vector<size_t> acc;  // accumulated coordinate set, sorted
    size_t acc_rank = 0;

    while (static_cast<int64_t>(acc_rank) <= static_cast<int64_t>(k) - 2) {
        size_t i = 0;
        while (std::binary_search(acc.begin(), acc.end(), i)) ++i;
        RepairGroup g = find_local_protection(c, i, p, budget);
        std::vector<size_t> merged = sorted_union(acc, g.support);
        size_t merged_rank = rank_of_columns(G, merged);
        if (merged_rank < k) {
            out.s_list.push_back(merged.size() - acc.size());
            out.r_list.push_back(merged_rank - acc_rank);
            out.groups.push_back(g.support);
            acc = std::move(merged);
            acc_rank = merged_rank;
        } else {
            // Terminal truncation: walk the group's new coordinates in
            // ascending order, keeping those that raise the rank, until k-1.
            std::vector<size_t> cur = acc;
            size_t cur_rank = acc_rank;
            for (size_t j : g.support) {
                if (std::binary_search(acc.begin(), acc.end(), j)) continue;
                std::vector<size_t> ext = sorted_union(cur, {j});
                size_t ext_rank = rank_of_columns(G, ext);
                if (ext_rank > cur_rank) {
                    cur = std::move(ext);
                    cur_rank = ext_rank;
                    out.terminal.push_back(j);
                }
                if (cur_rank == k - 1) break;
            }
            if (cur_rank != k - 1)
                fail_internal("TerminalTruncationFailed",
                              "greedy terminal selection missed rank k-1");
            out.s_list.push_back(out.terminal.size());
            out.r_list.push_back(out.terminal.size());
            acc = cur;
            acc_rank = cur_rank;
            out.case_id = 1;
            break;
        }
    }
    if (out.case_id == 0) out.case_id = 2;

    for (size_t j = 0; j < c.n(); ++j)
        if (!std::binary_search(acc.begin(), acc.end(), j)) out.residual.push_back(j);

    // Decomposition invariants; failure signals a non-optimal input (or a bug).
    if (out.case_id == 2 && acc_rank != k - 1)
        fail_user("InvariantViolation",
                  "Case II exit rank " + std::to_string(acc_rank) + " is not k-1" +
                      "; is the input an optimal (r,delta) code?");
    size_t t = ceil_div(k, p.r);
    if (out.groups.size() != t - 1)
        fail_user("InvariantViolation",
                  "expected " + std::to_string(t - 1) + " groups, got " +
                      std::to_string(out.groups.size()) + "; is the input an optimal (r,delta) code?");
    size_t d = c.min_distance(budget);
    if (out.residual.size() != d)
        fail_user("InvariantViolation",
                  "residual size " + std::to_string(out.residual.size()) +
                      " differs from the minimum distance " + std::to_string(d) +
                      "; is the input an optimal (r,delta) code?");
    return out;
}

DecompositionReport verify_decomposition(const LinearCode& c, const Decomposition& dec,
                                         const LocalityParams& p,
                                         const DistanceBudget& budget) {
    DecompositionReport rep{true, {}};
    auto flag = [&](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };

    size_t n = c.n(), k = c.k();
    const Matrix& G = c.G();
    size_t t = ceil_div(k, p.r);

    if (dec.case_id != 1 && dec.case_id != 2) {
        flag("case must be I or II");
        return rep;
    }
    for (const auto& s : dec.groups) {
        try {
            validate_support(s, n);
        } catch (const Error& e) {
            flag(std::string("malformed group support: ") + e.what());
            return rep;
        }
    }
    for (size_t j : dec.terminal)
        if (j >= n) {
            flag("terminal coordinate beyond code length");
            return rep;
        }
    for (size_t j : dec.residual)
        if (j >= n) {
            flag("residual coordinate beyond code length");
            return rep;
        }

    if (dec.groups.size() != t - 1)
        flag("group count " + std::to_string(dec.groups.size()) + " differs from ceil(k/r)-1 = " +
             std::to_string(t - 1));
    if (dec.case_id == 2 && !dec.terminal.empty()) flag("Case II carries a terminal list");

    // Per-group local protection shape: MDS with distance exactly delta.
    for (size_t gi = 0; gi < dec.groups.size(); ++gi) {
        const auto& s = dec.groups[gi];
        std::string tag = "group " + std::to_string(gi + 1);
        if (s.size() > p.r + p.delta - 1) {
            flag(tag + " exceeds r+delta-1 coordinates");
            continue;
        }
        LinearCode punct = c.puncture(s);
        size_t d = punct.min_distance(budget);
        if (d != p.delta)
            flag(tag + " restricted distance " + std::to_string(d) + " is not exactly delta");
        if (punct.k() != s.size() - (p.delta - 1))
            flag(tag + " restricted dimension " + std::to_string(punct.k()) +
                 " is not |S|-(delta-1) (not MDS)");
    }

    // Rank-size equations along the union chain.
    std::vector<size_t> acc;
    size_t acc_rank = 0;
    for (size_t gi = 0; gi < dec.groups.size(); ++gi) {
        std::vector<size_t> merged = sorted_union(acc, dec.groups[gi]);
        size_t merged_rank = rank_of_columns(G, merged);
        size_t s_inc = merged.size() - acc.size();
        size_t r_inc = merged_rank - acc_rank;
        if (r_inc < 1) flag("step " + std::to_string(gi + 1) + " adds no rank");
        if (r_inc != s_inc - (p.delta - 1))
            flag("step " + std::to_string(gi + 1) + " rank gain " + std::to_string(r_inc) +
                 " differs from size gain minus (delta-1) = " +
                 std::to_string(static_cast<int64_t>(s_inc) -
                                static_cast<int64_t>(p.delta - 1)));
        acc = std::move(merged);
        acc_rank = merged_rank;
    }

    if (dec.case_id == 1) {
        std::vector<size_t> term_sorted = dec.terminal;
        std::sort(term_sorted.begin(), term_sorted.end());
        std::vector<size_t> with_term = sorted_union(acc, term_sorted);
        if (with_term.size() != acc.size() + term_sorted.size())
            flag("terminal coordinates overlap the groups");
        size_t full_rank = rank_of_columns(G, with_term);
        if (full_rank != acc_rank + dec.terminal.size() || full_rank != k - 1)
            flag("terminal rank condition fails: rank(groups + terminal) = " +
                 std::to_string(full_rank) + ", expected k-1 = " + std::to_string(k - 1));
        // The terminal must extend to a repair group within the size cap.
        if (!dec.terminal.empty()) {
            std::vector<bool> pinned(n, false);
            for (size_t j : dec.terminal) pinned[j] = true;
            uint64_t visited = 0;
            std::vector<size_t> host;
            bool hosted = false;
            size_t lo = std::max<size_t>(p.delta, term_sorted.size());
            for (size_t size = lo; size <= p.r + p.delta - 1 && !hosted; ++size)
                hosted = search_support_of_size(c, pinned, size, p.delta, visited,
                                                budget.max_subsets, host);
            if (!hosted) flag("terminal coordinates extend to no repair group");
        }
        acc = with_term;
        acc_rank = full_rank;
    } else {
        if (acc_rank != k - 1)
            flag("Case II rank " + std::to_string(acc_rank) + " is not k-1");
        if (p.r >= 1 && (k - 1) % p.r != 0)
            flag("Case II requires r | (k-1), but " + std::to_string(p.r) +
                 " does not divide " + std::to_string(k - 1));
        for (size_t gi = 0; gi < dec.groups.size(); ++gi) {
            const auto& s = dec.groups[gi];
            if (s.size() != p.r + p.delta - 1)
                flag("Case II group " + std::to_string(gi + 1) + " is not full size r+delta-1");
            else if (rank_of_columns(G, s) != p.r)
                flag("Case II group " + std::to_string(gi + 1) + " rank is not r");
        }
    }

    // Residual set: disjoint, completing the cover, of size d(C).
    std::vector<size_t> res_sorted = dec.residual;
    std::sort(res_sorted.begin(), res_sorted.end());
    std::vector<size_t> everything = sorted_union(acc, res_sorted);
    if (everything.size() != acc.size() + res_sorted.size())
        flag("residual coordinates overlap the groups or terminal");
    if (everything.size() != n) flag("decomposition parts do not cover every coordinate");
    size_t d = c.min_distance(budget);
    if (res_sorted.size() != d)
        flag("residual size " + std::to_string(res_sorted.size()) +
             " differs from the minimum distance " + std::to_string(d));
    return rep;
}

bool rigidity_check(const LinearCode& c, const LocalityParams& p, const DistanceBudget& budget,
                    std::vector<std::vector<size_t>>* violations_out) {
    size_t n = c.n();
    const Field& f = *c.field();
    size_t cap = std::min(p.r + p.delta - 1, n);
    size_t excl_height = c.H().rows();
    size_t excl_cap = excl_height >= p.delta - 1 ? excl_height - (p.delta - 1) : 0;
    auto hcols = columns_of(c.H());
    PivotStack excluded(f, excl_height);
    std::vector<size_t> included;
    uint64_t visited = 0;
    bool ok = true;

    std::function<void(size_t)> rec = [&](size_t pos) {
        if (++visited > budget.max_subsets)
            fail_budget("rigidity support enumeration exceeded max_subsets visited nodes");
        if (pos == n) return;
        if (included.size() < cap) {
            included.push_back(pos);
            if (included.size() >= p.delta &&
                restriction_distance_at_least(c.G(), included, p.delta, f, visited,
                                              budget.max_subsets)) {
                // A repair-group support: its restriction must be MDS, i.e.
                // the restricted dimension must be |S| - (delta-1) (then
                // Singleton forces the distance to be exactly delta).  The
                // constraint binds only while the restriction has rank below
                // k: a support can lead a decomposition only in that regime,
                // and a full-rank restriction is already pinned by the
                // Singleton bound alone.
                size_t rk = rank_of_columns(c.G(), included);
                if (rk < c.k() && rk != included.size() - (p.delta - 1)) {
                    ok = false;
                    if (violations_out) violations_out->push_back(included);
                }
            }
            rec(pos + 1);
            included.pop_back();
        }
        bool viable = !excluded.push(hcols[pos]) || excluded.rank() <= excl_cap;
        if (viable) rec(pos + 1);
        excluded.pop();
    };

    rec(0);
    return ok;
}

bool mutual_rigidity_check(const LinearCode& c, const std::vector<std::vector<size_t>>& groups,
                           const LocalityParams& p, const DistanceBudget& budget) {
    const Matrix& G = c.G();
    for (const auto& s : groups) {
        try {
            verify_repair_group(c, s.empty() ? 0 : s[0], s, p, budget);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Budget) throw;
            fail_user("PreconditionViolated",
                      std::string("a supplied group is not a repair group: ") + e.what());
        }
    }
    std::vector<size_t> acc;
    size_t acc_rank = 0;
    std::vector<size_t> s_inc, r_inc;
    for (const auto& s : groups) {
        std::vector<size_t> merged = sorted_union(acc, s);
        size_t merged_rank = rank_of_columns(G, merged);
        s_inc.push_back(merged.size() - acc.size());
        r_inc.push_back(merged_rank - acc_rank);
        acc = std::move(merged);
        acc_rank = merged_rank;
    }
    if (acc_rank >= c.k())
        fail_user("PreconditionViolated", "the groups reach full rank k");
    for (size_t i = 1; i < groups.size(); ++i)
        if (r_inc[i] < 1)
            fail_user("PreconditionViolated",
                      "step " + std::to_string(i + 1) + " adds no rank");
    for (size_t i = 1; i < groups.size(); ++i)
        if (static_cast<int64_t>(r_inc[i]) !=
            static_cast<int64_t>(s_inc[i]) - static_cast<int64_t>(p.delta - 1))
            return false;
    return true;
}

namespace {

// Deterministic search for rows_needed rows of span(basis) forming a block in
// which every rows_needed-subset of columns is independent, i.e. a generator
// matrix of an MDS subcode of the basis row space.  Subsets of the seed rows
// are tried first (a parity check already written with such a block on top
// resolves immediately); otherwise candidate rows are enumerated as basis
// combinations by ascending message encoding, kept strictly increasing so
// each row set is visited once.  Every candidate charges budget.max_subsets.
Matrix find_mds_subblock(const Matrix& basis, const Matrix& seed, size_t rows_needed,
                         const DistanceBudget& budget) {
    const FieldPtr& fp = basis.field();
    const Field& f = *fp;
    size_t n = basis.cols();
    uint64_t visited = 0;
    auto charge = [&] {
        if (++visited > budget.max_subsets)
            fail_budget("local parity block search exceeded max_subsets candidates");
    };
    auto as_matrix = [&](const std::vector<std::vector<uint64_t>>& rows) {
        Matrix m(fp, rows.size(), n);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
        return m;
    };

    if (seed.rows() >= rows_needed && seed.cols() == n) {
        std::vector<size_t> pick(rows_needed);
        for (size_t i = 0; i < rows_needed; ++i) pick[i] = i;
        while (true) {
            charge();
            std::vector<std::vector<uint64_t>> rows(rows_needed, std::vector<uint64_t>(n));
            for (size_t i = 0; i < rows_needed; ++i)
                for (size_t j = 0; j < n; ++j) rows[i][j] = seed.at(pick[i], j);
            Matrix cand = as_matrix(rows);
            // The seed may hold rows outside span(basis); accept only inside.
            if (smallest_dependent_columns(cand, rows_needed, budget) == 0 &&
                rank(stack_vertical(basis, cand)) == basis.rows())
                return cand;
            size_t i = rows_needed;
            while (i > 0 && pick[i - 1] == seed.rows() - rows_needed + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (size_t t = i; t < rows_needed; ++t) pick[t] = pick[t - 1] + 1;
        }
    }

    uint64_t q = f.order();
    uint64_t limit = 1;
    for (size_t i = 0; i < basis.rows(); ++i) {
        if (limit > ~uint64_t{0} / q) {
            limit = ~uint64_t{0};
            break;
        }
        limit *= q;
    }
    std::vector<std::vector<uint64_t>> rows;
    std::function<bool(uint64_t)> grow = [&](uint64_t start) -> bool {
        for (uint64_t enc = start; enc < limit; ++enc) {
            charge();
            std::vector<uint64_t> row(n, 0);
            uint64_t rem = enc;
            for (size_t i = 0; i < basis.rows() && rem != 0; ++i, rem /= q) {
                uint64_t digit = rem % q;
                if (digit == 0) continue;
                for (size_t j = 0; j < n; ++j)
                    row[j] = f.add(row[j], f.mul(digit, basis.at(i, j)));
            }
            rows.push_back(std::move(row));
            if (smallest_dependent_columns(as_matrix(rows), rows.size(), budget) == 0 &&
                (rows.size() == rows_needed || grow(enc + 1)))
                return true;
            rows.pop_back();
        }
        return false;
    };
    if (grow(1)) return as_matrix(rows);
    fail_user("AssemblyFailed", "no MDS local parity block exists within the searched span");
}

}  // namespace

StructuredParityCheck extract_structured_parity(const LinearCode& c,
                                                const std::vector<std::vector<size_t>>& groups,
                                                const LocalityParams& p,
                                                const DistanceBudget& budget) {
    size_t n = c.n(), k = c.k();
    const Field& f = *c.field();
    size_t t = ceil_div(k, p.r);
    if (groups.size() != t)
        fail_user("NotMinimalDecomposition",
                  "a minimal decomposition needs exactly ceil(k/r) = " + std::to_string(t) +
                      " groups");
    for (const auto& s : groups) validate_support(s, n);

    std::vector<bool> covered(n, false);
    for (const auto& s : groups)
        for (size_t j : s) covered[j] = true;
    if (std::find(covered.begin(), covered.end(), false) != covered.end())
        fail_user("NotMinimalDecomposition", "the groups do not cover every coordinate");
    for (size_t i = 0; i < groups.size(); ++i)
        for (size_t j = i + 2; j < groups.size(); ++j) {
            std::vector<size_t> inter;
            std::set_intersection(groups[i].begin(), groups[i].end(), groups[j].begin(),
                                  groups[j].end(), std::back_inserter(inter));
            if (!inter.empty())
                fail_user("NotMinimalDecomposition",
                          "groups " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " overlap but are not adjacent");
        }
    for (const auto& s : groups)
        verify_repair_group(c, s[0], s, p, budget);  // propagate group failures

    StructuredParityCheck out;
    out.delta = p.delta;
    out.groups = groups;

    // Per-group parity block generating an MDS [n_i, delta-1, n_i-delta+2]
    // code.  With several groups the restricted generator's nullspace has
    // exactly delta-1 rows (each local code is MDS), and is the block.  A
    // single group covering a code with d > delta leaves a larger local
    // parity space; any (delta-1)-dimensional MDS subcode of it serves, and
    // one is searched for deterministically.
    for (const auto& s : groups) {
        Matrix gs = select_columns(c.G(), s);
        Matrix a = nullspace(gs);
        if (a.rows() != p.delta - 1) {
            if (groups.size() == 1 && a.rows() > p.delta - 1)
                a = find_mds_subblock(a, select_columns(c.H(), s), p.delta - 1, budget);
            else
                fail_user("AssemblyFailed",
                          "a local code is not MDS: its parity block has " +
                              std::to_string(a.rows()) + " rows, expected delta-1");
        }
        LinearCode acode = LinearCode::from_generator(a);
        if (acode.min_distance(budget) != s.size() - p.delta + 2)
            fail_user("AssemblyFailed", "a local parity block does not generate an MDS code");
        out.A.push_back(std::move(a));
    }

    out.layout = "disjoint";
    for (size_t i = 0; i + 1 < groups.size(); ++i) {
        std::vector<size_t> inter;
        std::set_intersection(groups[i].begin(), groups[i].end(), groups[i + 1].begin(),
                              groups[i + 1].end(), std::back_inserter(inter));
        if (!inter.empty()) out.layout = "interleaved";
    }

    if (n - k < t * (p.delta - 1))
        fail_user("AssemblyFailed", "parity rank is below t(delta-1)");
    out.l = (n - k) - t * (p.delta - 1);
    size_t d = c.min_distance(budget);
    if (d != p.delta + out.l)
        fail_user("AssemblyFailed", "d(C) = " + std::to_string(d) +
                                        " differs from delta + l = " +
                                        std::to_string(p.delta + out.l));

    // Staircase of the A blocks, then bottom band rows reduced out of the
    // canonical parity check.
    StructuredParityCheck staircase_only = out;
    staircase_only.l = 0;
    staircase_only.B = Matrix(c.field(), 0, n);
    Matrix stair = assemble_structured(staircase_only);
    if (rank(stair) != t * (p.delta - 1))
        fail_user("AssemblyFailed", "the stacked local parity blocks are rank-deficient");

    std::vector<std::vector<uint64_t>> band;
    {
        // Row-eliminate H rows against the staircase span to find l
        // independent band rows.
        Matrix rr = rref(stair);
        std::vector<std::vector<uint64_t>> pivots;
        std::vector<size_t> leads;
        for (size_t i = 0; i < rr.rows(); ++i) {
            std::vector<uint64_t> row(n);
            bool nonzero = false;
            size_t lead = n;
            for (size_t j = 0; j < n; ++j) {
                row[j] = rr.at(i, j);
                if (row[j] != 0 && !nonzero) {
                    nonzero = true;
                    lead = j;
                }
            }
            if (!nonzero) continue;
            pivots.push_back(std::move(row));
            leads.push_back(lead);
        }
        auto reduce = [&](std::vector<uint64_t>& v) {
            for (size_t i = 0; i < pivots.size(); ++i) {
                uint64_t coef = v[leads[i]];
                if (coef == 0) continue;
                uint64_t scale = f.div(coef, pivots[i][leads[i]]);
                for (size_t j = 0; j < n; ++j) v[j] = f.sub(v[j], f.mul(scale, pivots[i][j]));
            }
        };
        for (size_t i = 0; i < c.H().rows() && band.size() < out.l; ++i) {
            std::vector<uint64_t> row(n);
            for (size_t j = 0; j < n; ++j) row[j] = c.H().at(i, j);
            reduce(row);
            size_t lead = n;
            for (size_t j = 0; j < n; ++j)
                if (row[j] != 0) { lead = j; break; }
            if (lead == n) continue;
            uint64_t inv = f.inv(row[lead]);
            std::vector<uint64_t> norm(n);
            for (size_t j = 0; j < n; ++j) norm[j] = f.mul(row[j], inv);
            pivots.push_back(norm);
            leads.push_back(lead);
            band.push_back(std::move(norm));
        }
    }
    if (band.size() != out.l)
        fail_user("AssemblyFailed", "could not complete the bottom band to l rows");
    out.B = Matrix(c.field(), out.l, n);
    for (size_t i = 0; i < out.l; ++i)
        for (size_t j = 0; j < n; ++j) out.B.set(i, j, band[i][j]);

    Matrix assembled = assemble_structured(out);
    if (!same_row_space(assembled, c.H()))
        fail_user("AssemblyFailed", "the assembled staircase does not span the parity space");
    return out;
}

Matrix assemble_structured(const StructuredParityCheck& s) {
    if (s.A.empty()) fail_user("InvalidParams", "a structured parity check needs blocks");
    const FieldPtr& f = s.A[0].field();
    size_t n = s.B.cols();
    size_t rows = s.A.size() * (s.delta - 1) + s.l;
    Matrix out(f, rows, n);
    for (size_t i = 0; i < s.A.size(); ++i) {
        const auto& grp = s.groups[i];
        for (size_t a = 0; a < s.delta - 1; ++a)
            for (size_t j = 0; j < grp.size(); ++j)
                out.set(i * (s.delta - 1) + a, grp[j], s.A[i].at(a, j));
    }
    for (size_t b = 0; b < s.l; ++b)
        for (size_t j = 0; j < n; ++j) out.set(s.A.size() * (s.delta - 1) + b, j, s.B.at(b, j));
    return out;
}

size_t smallest_dependent_columns(const Matrix& m, size_t wmax, const DistanceBudget& budget) {
    uint64_t visited = 0;
    return smallest_dependent_subset(columns_of(m), m.rows(), wmax, *m.field(), visited,
                                     budget.max_subsets);
}

}  // namespace lrcq
