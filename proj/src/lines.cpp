#include "graphlines/lines.hpp"

#include <unordered_map>

#include "graphlines/kernels.hpp"
#include "graphlines/parallel.hpp"

namespace graphlines {

namespace {

void check_pair(int n, int a, int b) {
    if (a == b) throw UsageError("a line needs two distinct vertices");
    if (a < 0 || b < 0 || a >= n || b >= n) throw UsageError("vertex index out of range");
}

template <typename LineFn>
Bitset closure_impl(int n, int a, int b, const LineFn& line_of) {
    Bitset closed = line_of(a, b);
    // Full-pair expansion until no growth; at most n rounds.
    bool grew = true;
    while (grew) {
        grew = false;
        Bitset next = closed;
        for (int u = closed.first(); u >= 0; u = closed.next(u))
            for (int v = closed.next(u); v >= 0; v = closed.next(v))
                next |= line_of(u, v);
        if (!(next == closed)) {
            closed = std::move(next);
            grew = true;
        }
    }
    return closed;
}

template <typename MembersFn>
LineFamily family_impl(int n, int workers, const MembersFn& members_of) {
    LineFamily fam;
    fam.n = n;
    const long pairs = fam.pair_count();
    fam.pair_to_line.assign(static_cast<size_t>(pairs), -1);

    // Pair order is fixed, so computing the member sets in parallel and
    // deduplicating sequentially afterwards gives a schedule-independent
    // family: line indices follow the first generating pair.
    std::vector<Bitset> members(static_cast<size_t>(pairs));
    std::vector<std::pair<int, int>> pair_of(static_cast<size_t>(pairs));
    {
        long k = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pair_of[static_cast<size_t>(k++)] = {u, v};
    }
    parallel_chunks(pairs, workers, [&](long b, long e, int) {
        for (long k = b; k < e; ++k) {
            auto [u, v] = pair_of[static_cast<size_t>(k)];
            members[static_cast<size_t>(k)] = members_of(u, v);
        }
    });

    std::unordered_map<Bitset, int, BitsetHash> index;
    index.reserve(static_cast<size_t>(pairs));
    for (long k = 0; k < pairs; ++k) {
        auto [it, inserted] =
            index.try_emplace(members[static_cast<size_t>(k)], static_cast<int>(fam.lines.size()));
        if (inserted) {
            Line ln;
            ln.members = std::move(members[static_cast<size_t>(k)]);
            ln.member_count = ln.members.count();
            fam.lines.push_back(std::move(ln));
        }
        fam.lines[static_cast<size_t>(it->second)].generators.push_back(pair_of[static_cast<size_t>(k)]);
        fam.pair_to_line[static_cast<size_t>(k)] = it->second;
    }
    return fam;
}

}  // namespace

Bitset line_members(const DistanceMatrix& d, int a, int b) {
    check_pair(d.size(), a, b);
    Bitset out(d.size());
    kernels::active_ops().line_mask(d.row(a), d.row(b), d(a, b), d.stride(), out.words());
    out.mask_tail();
    return out;
}

Bitset line_members(const GeneralMetric& m, int a, int b) {
    check_pair(m.size(), a, b);
    Bitset out(m.size());
    const uint64_t dab = m(a, b);
    for (int c = 0; c < m.size(); ++c) {
        const uint64_t x = m(a, c), y = m(b, c);
        if (x + y == dab || x + dab == y || dab + y == x) out.set(c);
    }
    return out;
}

Bitset closure_line(const DistanceMatrix& d, int a, int b) {
    check_pair(d.size(), a, b);
    return closure_impl(d.size(), a, b, [&](int u, int v) { return line_members(d, u, v); });
}

Bitset closure_line(const GeneralMetric& m, int a, int b) {
    check_pair(m.size(), a, b);
    return closure_impl(m.size(), a, b, [&](int u, int v) { return line_members(m, u, v); });
}

LineFamily line_family(const DistanceMatrix& d, int workers) {
    return family_impl(d.size(), workers, [&](int u, int v) { return line_members(d, u, v); });
}

LineFamily line_family(const GeneralMetric& m, int workers) {
    return family_impl(m.size(), workers, [&](int u, int v) { return line_members(m, u, v); });
}

bool has_universal_line(const LineFamily& f) {
    for (const auto& ln : f.lines)
        if (ln.member_count == f.n) return true;
    return false;
}

}  // namespace graphlines
