#include "zopoly/homometry.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "zopoly/errors.hpp"

namespace zopoly {

std::string DifferenceMultiset::encode() const {
    std::string out;
    out.reserve(2 + counts.size() * 8);
    auto push = [&out](long long v) {
        while (v >= 0x80) {
            out.push_back(static_cast<char>((v & 0x7f) | 0x80));
            v >>= 7;
        }
        out.push_back(static_cast<char>(v));
    };
    push(static_cast<long long>(counts.size()));
    for (auto& [d, c] : counts) {
        push(d);
        push(c);
    }
    return out;
}

DifferenceMultiset difference_multiset(const SupportSet& A) {
    const auto& e = A.exponents();
    std::map<long long, long long> m;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[i] >= e[j])
                ++m[e[i] - e[j]];
    // the zero diagonal was counted once per element
    DifferenceMultiset out;
    out.cardinality = static_cast<long long>(e.size());
    out.counts.assign(m.begin(), m.end());
    return out;
}

IntPoly autocorrelation_poly(const SupportSet& A) {
    IntPoly f = poly_from_support(A);
    return f * reciprocal(f);
}

SupportSet mirror(const SupportSet& A) {
    long long mx = A.max_exponent();
    std::vector<long long> out;
    out.reserve(A.size());
    for (long long e : A.exponents())
        out.push_back(mx - e);
    return SupportSet(std::move(out));
}

namespace {

struct Turnpike {
    long long d;
    std::size_t target_size;
    std::vector<long long> pool;  // pool[s] = unexplained count of difference s
    long long pool_total = 0;
    std::vector<char> placed_at;
    std::vector<long long> placed;
    std::set<std::vector<long long>> found;

    bool consume(long long pos, std::vector<long long>& taken) {
        for (long long q : placed) {
            long long s = pos > q ? pos - q : q - pos;
            if (pool[s] == 0) {
                for (long long t : taken)
                    ++pool[t], ++pool_total;
                return false;
            }
            --pool[s];
            --pool_total;
            taken.push_back(s);
        }
        return true;
    }

    void restore(const std::vector<long long>& taken) {
        for (long long t : taken)
            ++pool[t], ++pool_total;
    }

    void run() {
        if (pool_total == 0) {
            if (placed.size() == target_size) {
                std::vector<long long> sol = placed;
                std::sort(sol.begin(), sol.end());
                found.insert(std::move(sol));
            }
            return;
        }
        long long y = d;
        while (y > 0 && pool[y] == 0)
            --y;
        // the largest unexplained difference forces a point at y or d-y
        long long options[2] = {y, d - y};
        for (int oi = 0; oi < 2; ++oi) {
            long long pos = options[oi];
            if (oi == 1 && options[1] == options[0])
                break;
            if (pos <= 0 || pos >= d || placed_at[pos])
                continue;
            std::vector<long long> taken;
            if (!consume(pos, taken))
                continue;
            placed_at[pos] = 1;
            placed.push_back(pos);
            run();
            placed.pop_back();
            placed_at[pos] = 0;
            restore(taken);
        }
    }
};

} // namespace

std::vector<SupportSet> solve_autocorrelation(const SupportSet& A) {
    long long d = A.max_exponent();
    if (d == 0)
        return {A};
    if (A.size() == 2)
        return {A};  // {0,d} is determined by its single positive difference
    DifferenceMultiset dm = difference_multiset(A);
    Turnpike tp;
    tp.d = d;
    tp.target_size = A.size();
    tp.pool.assign(static_cast<std::size_t>(d) + 1, 0);
    for (auto& [s, c] : dm.counts)
        if (s > 0) {
            tp.pool[s] = c;
            tp.pool_total += c;
        }
    tp.placed_at.assign(static_cast<std::size_t>(d) + 1, 0);
    // 0 and d are forced; consume their mutual difference
    tp.placed = {0, d};
    --tp.pool[d];
    --tp.pool_total;
    tp.run();
    std::vector<SupportSet> out;
    out.reserve(tp.found.size());
    for (auto& sol : tp.found)
        out.emplace_back(sol);
    return out;
}

UniquenessReport uniqueness_report(const SupportSet& A) {
    UniquenessReport rep;
    rep.solutions = solve_autocorrelation(A);
    SupportSet Am = mirror(A);
    const auto& n = A.exponents();
    int k = A.k();
    for (const SupportSet& B : rep.solutions) {
        if (B == A || B == Am)
            continue;
        rep.unique = false;
        UniquenessReport::Extra extra;
        extra.set = B;
        const auto& m = B.exponents();
        for (int i = 1; i < k; ++i) {
            long long delta = m[k] - m[i];
            bool with_top = false;
            for (int h = 0; h <= k && !with_top; ++h)
                if (n[k] - n[h] == delta)
                    with_top = true;
            if (with_top)
                continue;
            bool recorded = false;
            for (int g = k - 1; g >= 1 && !recorded; --g)
                for (int h = 0; h < g && !recorded; ++h)
                    if (n[g] - n[h] == delta) {
                        extra.witnesses.push_back({i, g, h});
                        recorded = true;
                    }
        }
        rep.extras.push_back(std::move(extra));
    }
    return rep;
}

double PhiImageCensus::ratio() const {
    return static_cast<double>(distinct) / std::ldexp(1.0, n - 1);
}

namespace {

struct Hash128 {
    std::uint64_t lo, hi;
    bool operator==(const Hash128& o) const { return lo == o.lo && hi == o.hi; }
};

struct Hash128Hasher {
    std::size_t operator()(const Hash128& h) const { return h.lo ^ (h.hi * 0x9e3779b97f4a7c15ull); }
};

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

Hash128 hash_encoding(const std::string& enc) {
    std::uint64_t h1 = 0x2545f4914f6cdd1dull, h2 = 0x8000000000000001ull;
    for (unsigned char ch : enc) {
        h1 = mix64(h1 ^ ch);
        h2 = mix64(h2 + (ch * 0x100000001b3ull));
    }
    return {h1, h2};
}

// distinct-multiset table: hash -> first-seen encoding, with exact handling
// of genuine 128-bit collisions
struct DistinctTable {
    std::unordered_map<Hash128, std::string, Hash128Hasher> first;
    std::vector<std::string> collisions;
    std::uint64_t collision_events = 0;

    void insert(const std::string& enc, Hash128 h) {
        auto [it, inserted] = first.try_emplace(h, enc);
        if (inserted || it->second == enc)
            return;
        ++collision_events;
        if (std::find(collisions.begin(), collisions.end(), enc) == collisions.end())
            collisions.push_back(enc);
    }

    void merge(DistinctTable&& o) {
        for (auto& [h, enc] : o.first)
            insert(enc, h);
        for (auto& enc : o.collisions) {
            Hash128 h = hash_encoding(enc);
            insert(enc, h);
        }
        collision_events += o.collision_events;
    }

    std::uint64_t size() const { return first.size() + collisions.size(); }
};

// Gray-code enumeration state over subsets of {1..n} (0 always in A)
struct GrayState {
    int n;
    std::uint64_t mask = 0;                // bits 0..n-1 represent elements 1..n
    std::vector<long long> counts;         // counts[s], s in 0..n
    int card = 1;                          // |A|

    explicit GrayState(int n_) : n(n_), counts(n_ + 1, 0) { counts[0] = 1; }

    std::vector<long long> elements() const {
        std::vector<long long> e{0};
        for (int b = 0; b < n; ++b)
            if (mask >> b & 1)
                e.push_back(b + 1);
        return e;
    }

    void init(std::uint64_t m) {
        mask = m;
        std::fill(counts.begin(), counts.end(), 0);
        card = 0;
        auto e = elements();
        card = static_cast<int>(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[i] >= e[j])
                    ++counts[e[i] - e[j]];
    }

    void toggle(int element) {  // element in 1..n
        std::uint64_t bit = 1ull << (element - 1);
        bool adding = !(mask & bit);
        if (adding) {
            ++counts[0];
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1)
                    ++counts[std::abs(element - (b + 1))];
            ++counts[element];  // difference to the fixed 0
            mask |= bit;
            ++card;
        } else {
            mask &= ~bit;
            --counts[0];
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1)
                    --counts[std::abs(element - (b + 1))];
            --counts[element];
            --card;
        }
    }

    bool symmetric() const {
        long long mx = 0;
        for (int b = n - 1; b >= 0; --b)
            if (mask >> b & 1) {
                mx = b + 1;
                break;
            }
        if (mx == 0)
            return true;
        // A == {mx - a}: membership check over elements including 0
        auto has = [&](long long v) {
            if (v == 0)
                return true;
            return (mask >> (v - 1) & 1) != 0;
        };
        for (long long v = 0; v <= mx; ++v)
            if (has(v) != has(mx - v))
                return false;
        return true;
    }

    std::string encode() const {
        std::string out;
        auto push = [&out](long long v) {
            while (v >= 0x80) {
                out.push_back(static_cast<char>((v & 0x7f) | 0x80));
                v >>= 7;
            }
            out.push_back(static_cast<char>(v));
        };
        long long terms = 0;
        for (int s = 0; s <= n; ++s)
            if (counts[s] > 0)
                ++terms;
        push(terms);
        for (int s = 0; s <= n; ++s)
            if (counts[s] > 0) {
                push(s);
                push(counts[s]);
            }
        return out;
    }
};

struct ChunkOut {
    DistinctTable table;
    std::uint64_t symmetric = 0;
    std::uint64_t processed = 0;
};

ChunkOut run_chunk(int n, std::uint64_t begin, std::uint64_t end) {
    ChunkOut out;
    GrayState st(n);
    st.init(begin ^ (begin >> 1));  // binary-reflected Gray code of the rank
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (idx != begin) {
            // element toggled between gray(idx-1) and gray(idx)
            int b = 0;
            std::uint64_t x = idx;
            while (!(x & 1)) {
                x >>= 1;
                ++b;
            }
            st.toggle(b + 1);
        }
        std::string enc = st.encode();
        out.table.insert(enc, hash_encoding(enc));
        if (st.symmetric())
            ++out.symmetric;
        ++out.processed;
    }
    return out;
}

} // namespace

PhiImageCensus census_phi_image(int n, int workers, int max_n_budget) {
    if (n < 1)
        throw DomainError("census_phi_image requires n >= 1");
    if (n > max_n_budget || n > 62)
        throw ResourceError("census_phi_image: n exceeds the configured budget");
    if (workers < 1)
        workers = 1;
    std::uint64_t total = 1ull << n;
    int chunk_bits = std::min(n, 6);
    std::uint64_t chunks = 1ull << chunk_bits;
    std::uint64_t per = total >> chunk_bits;

    std::vector<ChunkOut> results(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker_fn = [&]() {
        for (;;) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= chunks)
                return;
            results[c] = run_chunk(n, c * per, (c + 1) * per);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(worker_fn);
    worker_fn();
    for (auto& t : pool)
        t.join();

    PhiImageCensus out;
    out.n = n;
    DistinctTable master;
    for (auto& r : results) {
        master.merge(std::move(r.table));
        out.symmetric += r.symmetric;
        out.subsets += r.processed;
    }
    out.distinct = master.size();
    out.hash_collisions = master.collision_events;
    return out;
}

std::vector<SupportSet> exceptional_sets(int n, int max_n_budget) {
    if (n < 1)
        throw DomainError("exceptional_sets requires n >= 1");
    if (n > max_n_budget)
        throw ResourceError("exceptional_sets: n exceeds the configured budget");
    // group all sets by encoding; a group is exceptional unless it is
    // exactly {A, mirror(A)}
    std::unordered_map<std::string, std::vector<std::uint64_t>> groups;
    GrayState st(n);
    st.init(0);
    std::uint64_t total = 1ull << n;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (idx != 0) {
            int b = 0;
            std::uint64_t x = idx;
            while (!(x & 1)) {
                x >>= 1;
                ++b;
            }
            st.toggle(b + 1);
        }
        groups[st.encode()].push_back(st.mask);
    }
    auto mirror_mask = [&](std::uint64_t mask) {
        long long mx = 0;
        for (int b = n - 1; b >= 0; --b)
            if (mask >> b & 1) {
                mx = b + 1;
                break;
            }
        std::uint64_t out = 0;
        for (long long v = 0; v <= mx; ++v) {
            bool in = (v == 0) || (mask >> (v - 1) & 1);
            if (in && mx - v > 0)
                out |= 1ull << (mx - v - 1);
        }
        return out;
    };
    std::set<std::uint64_t> exceptional;
    for (auto& [enc, members] : groups) {
        bool ok;
        if (members.size() == 1) {
            ok = mirror_mask(members[0]) == members[0];
        } else if (members.size() == 2) {
            ok = mirror_mask(members[0]) == members[1] && mirror_mask(members[1]) == members[0];
        } else {
            ok = false;
        }
        if (!ok)
            for (std::uint64_t m : members)
                exceptional.insert(std::min(m, mirror_mask(m)));
    }
    std::vector<SupportSet> out;
    for (std::uint64_t mask : exceptional) {
        std::vector<long long> e{0};
        for (int b = 0; b < n; ++b)
            if (mask >> b & 1)
                e.push_back(b + 1);
        out.emplace_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace zopoly
