#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "digrid/grid.hpp"
#include "digrid/int128.hpp"
#include "digrid/io.hpp"
#include "digrid/metrics.hpp"
#include "digrid/orientations.hpp"

namespace digrid {

struct budget_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SearchOptions {
    bool use_symmetry = false;
    int worker_count = 1;
    std::uint64_t checkpoint_interval = 0;  // extra checkpoint writes every N evaluations
    std::string checkpoint_path;            // empty: no checkpointing; existing file: resume
    std::uint64_t seed = 0;                 // local search
    int restarts = 32;                      // local search
    int max_plateau_moves = 16;             // local search, equal-value moves per restart
    bool big = false;                       // lifts the exhaustive edge budget from 30 to 62
    std::size_t witness_cap = 64;
};

struct SearchWitness {
    Orientation orientation;  // canonical orbit representative
    bool strongly_connected = false;
};

struct SearchReport {
    GridDims dims;
    std::string strategy;
    int128 max_wiener = 0;
    std::vector<SearchWitness> witnesses;  // canonical, ascending, capped
    std::uint64_t optima_orbit_count = 0;  // exact count, including past the cap
    std::uint64_t evaluated_count = 0;
    std::uint64_t pruned_count = 0;
    bool proven_maximum = false;  // false: the value is only a lower bound on the maximum
    std::uint64_t seed = 0;
    int restarts = 0;
    double wall_ms = 0.0;

    // Deterministic rendering of everything except wall time; two runs with
    // the same options must produce identical strings regardless of the
    // worker count.
    std::string summary_string(bool include_wall = false) const {
        std::ostringstream out;
        out << "dims=" << dims.m << "x" << dims.n << " strategy=" << strategy
            << " max=" << to_string(max_wiener) << " orbits=" << optima_orbit_count
            << " evaluated=" << evaluated_count << " pruned=" << pruned_count
            << " proven=" << (proven_maximum ? 1 : 0) << " seed=" << seed
            << " restarts=" << restarts << " witnesses=[";
        for (std::size_t i = 0; i < witnesses.size(); ++i) {
            if (i) out << ",";
            for (bool b : witnesses[i].orientation.bits) out << (b ? '1' : '0');
            out << ":sc=" << (witnesses[i].strongly_connected ? 1 : 0);
        }
        out << "]";
        if (include_wall) out << " wall_ms=" << wall_ms;
        return out.str();
    }
};

// Packed orientation encoding: edge 0 occupies the most significant of the
// E used bits, so numeric order on masks equals lexicographic order on bit
// vectors. Usable whenever E <= 62.
inline std::uint64_t mask_of(const Orientation& o) {
    validate(o);
    const long long e = o.dims.edge_count();
    if (e > 62) throw std::invalid_argument("orientation too large for packed encoding");
    std::uint64_t x = 0;
    for (long long i = 0; i < e; ++i)
        x |= static_cast<std::uint64_t>(o.bits[static_cast<std::size_t>(i)] ? 1 : 0)
             << (e - 1 - i);
    return x;
}

inline Orientation orientation_from_mask(GridDims d, std::uint64_t mask) {
    require_valid(d);
    const long long e = d.edge_count();
    if (e > 62) throw std::invalid_argument("grid too large for packed encoding");
    Orientation o{d, std::vector<bool>(static_cast<std::size_t>(e))};
    for (long long i = 0; i < e; ++i)
        o.bits[static_cast<std::size_t>(i)] = (mask >> (e - 1 - i)) & 1u;
    return o;
}

namespace detail {

inline std::string mask_bit_string(std::uint64_t mask, int edge_count) {
    std::string s(static_cast<std::size_t>(edge_count), '0');
    for (int i = 0; i < edge_count; ++i)
        if ((mask >> (edge_count - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

inline std::uint64_t mask_from_bit_string(const std::string& s, int edge_count) {
    if (static_cast<int>(s.size()) != edge_count)
        throw std::invalid_argument("bit string has wrong length");
    std::uint64_t x = 0;
    for (int i = 0; i < edge_count; ++i) {
        if (s[static_cast<std::size_t>(i)] != '0' && s[static_cast<std::size_t>(i)] != '1')
            throw std::invalid_argument("bit string may contain only 0 and 1");
        if (s[static_cast<std::size_t>(i)] == '1') x |= std::uint64_t{1} << (edge_count - 1 - i);
    }
    return x;
}

// A grid symmetry (possibly composed with reversal) acting on packed masks:
// permute the bits, then XOR the direction flips in one go.
struct MaskTransform {
    std::vector<int> src_shift;
    std::vector<int> dst_shift;
    std::uint64_t flip_mask = 0;

    std::uint64_t apply(std::uint64_t x) const {
        std::uint64_t y = 0;
        for (std::size_t i = 0; i < src_shift.size(); ++i)
            y |= ((x >> src_shift[i]) & 1u) << dst_shift[i];
        return y ^ flip_mask;
    }
};

inline std::vector<MaskTransform> mask_transforms(GridDims d) {
    const int e = static_cast<int>(d.edge_count());
    std::vector<MaskTransform> out;
    for (const EdgeTransform& t : orbit_transforms(d)) {
        MaskTransform mt;
        mt.src_shift.resize(static_cast<std::size_t>(e));
        mt.dst_shift.resize(static_cast<std::size_t>(e));
        for (int i = 0; i < e; ++i) {
            mt.src_shift[static_cast<std::size_t>(i)] = e - 1 - i;
            mt.dst_shift[static_cast<std::size_t>(i)] =
                e - 1 - static_cast<int>(t.dst[static_cast<std::size_t>(i)]);
            if (t.flip[static_cast<std::size_t>(i)])
                mt.flip_mask |= std::uint64_t{1}
                                << (e - 1 - static_cast<int>(t.dst[static_cast<std::size_t>(i)]));
        }
        out.push_back(std::move(mt));
    }
    return out;
}

inline bool is_orbit_min(const std::vector<MaskTransform>& ts, std::uint64_t x) {
    for (const MaskTransform& t : ts)
        if (t.apply(x) < x) return false;
    return true;
}

inline std::uint64_t canonical_mask(const std::vector<MaskTransform>& ts, std::uint64_t x) {
    std::uint64_t best = x;
    for (const MaskTransform& t : ts) best = std::min(best, t.apply(x));
    return best;
}

// Reusable flat-adjacency Wiener evaluator. Rebuilding the adjacency and
// running all-pairs BFS costs O(q(q+E)) per orientation, with no
// allocations after construction.
class WienerScratch {
 public:
    explicit WienerScratch(GridDims d)
        : dims_(d),
          q_(static_cast<int>(d.vertex_count())),
          e_(static_cast<int>(d.edge_count())),
          tail_(static_cast<std::size_t>(e_)),
          head_(static_cast<std::size_t>(e_)),
          deg_(static_cast<std::size_t>(q_)),
          adj_(static_cast<std::size_t>(q_) * 4),
          dist_(static_cast<std::size_t>(q_)),
          fifo_(static_cast<std::size_t>(q_)) {
        for (const GridEdge& ge : grid_edge_list(d)) {
            tail_[static_cast<std::size_t>(ge.id)] = static_cast<int>(vertex_index(d, ge.a));
            head_[static_cast<std::size_t>(ge.id)] = static_cast<int>(vertex_index(d, ge.b));
        }
    }

    long long wiener_mask(std::uint64_t mask) {
        std::fill(deg_.begin(), deg_.end(), 0);
        for (int i = 0; i < e_; ++i) {
            const bool forward = (mask >> (e_ - 1 - i)) & 1u;
            add_arc(forward ? tail_[static_cast<std::size_t>(i)] : head_[static_cast<std::size_t>(i)],
                    forward ? head_[static_cast<std::size_t>(i)] : tail_[static_cast<std::size_t>(i)]);
        }
        return sweep();
    }

    int128 wiener_bits(const std::vector<bool>& bits) {
        std::fill(deg_.begin(), deg_.end(), 0);
        for (int i = 0; i < e_; ++i) {
            const bool forward = bits[static_cast<std::size_t>(i)];
            add_arc(forward ? tail_[static_cast<std::size_t>(i)] : head_[static_cast<std::size_t>(i)],
                    forward ? head_[static_cast<std::size_t>(i)] : tail_[static_cast<std::size_t>(i)]);
        }
        int128 total = 0;
        for (int s = 0; s < q_; ++s) total += sweep_from(s);
        return total;
    }

    GridDims dims() const { return dims_; }
    int edge_bits() const { return e_; }

 private:
    void add_arc(int u, int v) {
        adj_[static_cast<std::size_t>(u) * 4 + static_cast<std::size_t>(deg_[static_cast<std::size_t>(u)]++)] = v;
    }

    long long sweep() {
        long long total = 0;
        for (int s = 0; s < q_; ++s) total += sweep_from(s);
        return total;
    }

    long long sweep_from(int s) {
        std::fill(dist_.begin(), dist_.end(), -1);
        dist_[static_cast<std::size_t>(s)] = 0;
        fifo_[0] = s;
        int head = 0, count = 1;
        long long sum = 0;
        while (head < count) {
            const int u = fifo_[static_cast<std::size_t>(head++)];
            const int du = dist_[static_cast<std::size_t>(u)];
            const int base = u * 4;
            for (int k = 0; k < deg_[static_cast<std::size_t>(u)]; ++k) {
                const int v = adj_[static_cast<std::size_t>(base + k)];
                if (dist_[static_cast<std::size_t>(v)] < 0) {
                    dist_[static_cast<std::size_t>(v)] = du + 1;
                    sum += du + 1;
                    fifo_[static_cast<std::size_t>(count++)] = v;
                }
            }
        }
        return sum;
    }

    GridDims dims_;
    int q_, e_;
    std::vector<int> tail_, head_, deg_, adj_, dist_, fifo_;
};

}  // namespace detail

// Lexicographically smallest encoding over the grid's symmetry group
// combined with arc reversal. Idempotent and constant on orbits.
inline Orientation canonical_representative(const Orientation& o) {
    validate(o);
    Orientation best = o;
    for (const EdgeTransform& t : orbit_transforms(o.dims)) {
        Orientation candidate = apply_transform(o, t);
        if (candidate.bits < best.bits) best = std::move(candidate);
    }
    return best;
}

namespace detail {

// Accumulated outcome of a contiguous stretch of the search space.
struct Partial {
    long long best = -1;
    std::vector<std::uint64_t> canon;  // sorted, unique canonical optima
    std::uint64_t evaluated = 0;
    std::uint64_t pruned = 0;
};

inline void insert_canon(std::vector<std::uint64_t>& v, std::uint64_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

inline void merge_partial(Partial& into, const Partial& from) {
    into.evaluated += from.evaluated;
    into.pruned += from.pruned;
    if (from.best > into.best) {
        into.best = from.best;
        into.canon = from.canon;
    } else if (from.best == into.best && from.best >= 0) {
        for (std::uint64_t x : from.canon) insert_canon(into.canon, x);
    }
}

struct CheckpointFile {
    GridDims dims;
    bool symmetry = false;
    int shard_bits = 0;
    std::uint64_t shard_prefix_done = 0;
    Partial committed;
};

inline void write_checkpoint(const std::string& path, GridDims dims, bool symmetry,
                             int shard_bits, std::uint64_t prefix, const Partial& committed,
                             int edge_count) {
    nlohmann::json j;
    j["dims"] = {{"m", dims.m}, {"n", dims.n}};
    j["strategy"] = "exhaustive";
    j["symmetry"] = symmetry;
    j["shard_bits"] = shard_bits;
    j["shard_prefix_done"] = prefix;
    if (committed.best >= 0) {
        j["best_value"] = std::to_string(committed.best);
        nlohmann::json bits = nlohmann::json::array();
        for (std::uint64_t x : committed.canon) bits.push_back(mask_bit_string(x, edge_count));
        j["best_bits"] = std::move(bits);
    } else {
        j["best_value"] = nullptr;
        j["best_bits"] = nlohmann::json::array();
    }
    j["evaluated"] = committed.evaluated;
    j["pruned"] = committed.pruned;
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw io_error("cannot write checkpoint " + path);
        out << j.dump(2) << "\n";
        if (!out) throw io_error("failed writing checkpoint " + path);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw io_error("cannot replace checkpoint " + path);
}

inline CheckpointFile read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed checkpoint " + path + ": " + e.what());
    }
    CheckpointFile c;
    c.dims = GridDims{j.at("dims").at("m").get<int>(), j.at("dims").at("n").get<int>()};
    require_valid(c.dims);
    c.symmetry = j.at("symmetry").get<bool>();
    c.shard_bits = j.at("shard_bits").get<int>();
    c.shard_prefix_done = j.at("shard_prefix_done").get<std::uint64_t>();
    if (!j.at("best_value").is_null()) {
        c.committed.best = std::stoll(j.at("best_value").get<std::string>());
        for (const auto& s : j.at("best_bits"))
            c.committed.canon.push_back(mask_from_bit_string(
                s.get<std::string>(), static_cast<int>(c.dims.edge_count())));
        std::sort(c.committed.canon.begin(), c.committed.canon.end());
    }
    c.committed.evaluated = j.at("evaluated").get<std::uint64_t>();
    c.committed.pruned = j.at("pruned").get<std::uint64_t>();
    return c;
}

inline bool file_exists(const std::string& path) {
    std::ifstream in(path);
    return in.good();
}

}  // namespace detail

// Exact maximum over every orientation of the grid. Enumerates all 2^E
// packed encodings in numeric order, or only the orbit-minimal ones when
// symmetry reduction is on; either way the reported witnesses are the
// canonical optima. The space is split into shards by the top
// ceil(log2(worker_count)) bits, shards are assigned to workers statically,
// and the merge is value-based, so the report does not depend on the
// worker count.
inline SearchReport exhaustive_max(GridDims dims, const SearchOptions& opts = {}) {
    require_valid(dims);
    const auto t0 = std::chrono::steady_clock::now();
    const long long edge_count_ll = dims.edge_count();
    if (edge_count_ll > 62)
        throw budget_error("exhaustive search supports at most 62 edges, grid has " +
                           std::to_string(edge_count_ll));
    if (!opts.big && edge_count_ll > 30)
        throw budget_error("grid has " + std::to_string(edge_count_ll) +
                           " edges, over the default exhaustive budget of 30; set big to override");
    const int e = static_cast<int>(edge_count_ll);

    const int jobs = std::max(1, opts.worker_count);
    int shard_bits = 0;
    while ((1 << shard_bits) < jobs && shard_bits < e) ++shard_bits;
    const std::uint64_t shard_count = std::uint64_t{1} << shard_bits;

    const auto transforms = detail::mask_transforms(dims);

    // Resume state: shards below the stored prefix are already folded into
    // `committed` and are not re-run.
    detail::Partial committed;
    std::uint64_t prefix = 0;
    if (!opts.checkpoint_path.empty() && detail::file_exists(opts.checkpoint_path)) {
        detail::CheckpointFile c = detail::read_checkpoint(opts.checkpoint_path);
        if (!(c.dims == dims) || c.symmetry != opts.use_symmetry || c.shard_bits != shard_bits)
            throw std::invalid_argument("checkpoint " + opts.checkpoint_path +
                                        " does not match this run's dims/symmetry/sharding");
        detail::WienerScratch verify(dims);
        for (std::uint64_t x : c.committed.canon)
            if (verify.wiener_mask(x) != c.committed.best)
                throw std::runtime_error("checkpoint " + opts.checkpoint_path +
                                         " failed verification: stored optimum does not "
                                         "re-evaluate to its stored value");
        committed = std::move(c.committed);
        prefix = std::min<std::uint64_t>(c.shard_prefix_done, shard_count);
    }

    std::vector<detail::Partial> shard_results(shard_count);
    std::vector<char> shard_done(shard_count, 0);
    for (std::uint64_t s = 0; s < prefix; ++s) shard_done[s] = 1;

    std::mutex mtx;
    std::uint64_t committed_prefix = prefix;
    detail::Partial committed_state = committed;

    auto on_shard_done = [&](std::uint64_t s, detail::Partial&& p) {
        std::lock_guard<std::mutex> lock(mtx);
        shard_results[s] = std::move(p);
        shard_done[s] = 1;
        bool advanced = false;
        while (committed_prefix < shard_count && shard_done[committed_prefix]) {
            if (committed_prefix >= prefix)
                detail::merge_partial(committed_state, shard_results[committed_prefix]);
            ++committed_prefix;
            advanced = true;
        }
        if (advanced && !opts.checkpoint_path.empty())
            detail::write_checkpoint(opts.checkpoint_path, dims, opts.use_symmetry, shard_bits,
                                     committed_prefix, committed_state, e);
    };

    auto refresh_checkpoint = [&]() {
        if (opts.checkpoint_path.empty()) return;
        std::lock_guard<std::mutex> lock(mtx);
        detail::write_checkpoint(opts.checkpoint_path, dims, opts.use_symmetry, shard_bits,
                                 committed_prefix, committed_state, e);
    };

    auto run_shard = [&](detail::WienerScratch& scratch, std::uint64_t s) {
        detail::Partial p;
        const std::uint64_t lo = s << (e - shard_bits);
        const std::uint64_t hi = (s + 1) << (e - shard_bits);
        std::uint64_t since_checkpoint = 0;
        for (std::uint64_t x = lo; x < hi; ++x) {
            if (opts.use_symmetry && !detail::is_orbit_min(transforms, x)) {
                ++p.pruned;
                continue;
            }
            const long long w = scratch.wiener_mask(x);
            ++p.evaluated;
            if (w >= p.best) {
                const std::uint64_t canon =
                    opts.use_symmetry ? x : detail::canonical_mask(transforms, x);
                if (w > p.best) {
                    p.best = w;
                    p.canon.assign(1, canon);
                } else {
                    detail::insert_canon(p.canon, canon);
                }
            }
            if (opts.checkpoint_interval && ++since_checkpoint >= opts.checkpoint_interval) {
                since_checkpoint = 0;
                refresh_checkpoint();
            }
        }
        return p;
    };

    const int workers =
        static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), shard_count));
    if (workers <= 1) {
        detail::WienerScratch scratch(dims);
        for (std::uint64_t s = prefix; s < shard_count; ++s) on_shard_done(s, run_shard(scratch, s));
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    detail::WienerScratch scratch(dims);
                    for (std::uint64_t s = static_cast<std::uint64_t>(w); s < shard_count;
                         s += static_cast<std::uint64_t>(workers)) {
                        if (s < prefix) continue;
                        on_shard_done(s, run_shard(scratch, s));
                    }
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    SearchReport rep;
    rep.dims = dims;
    rep.strategy = opts.use_symmetry ? "exhaustive+symmetry" : "exhaustive";
    rep.proven_maximum = true;
    rep.max_wiener = committed_state.best;
    rep.optima_orbit_count = committed_state.canon.size();
    rep.evaluated_count = committed_state.evaluated;
    rep.pruned_count = committed_state.pruned;
    const std::size_t take = std::min(opts.witness_cap, committed_state.canon.size());
    for (std::size_t i = 0; i < take; ++i) {
        Orientation o = orientation_from_mask(dims, committed_state.canon[i]);
        const Digraph d = materialize(o);
        if (wiener_index(d) != rep.max_wiener)
            throw std::logic_error("witness failed BFS re-verification");
        rep.witnesses.push_back(SearchWitness{std::move(o), is_strongly_connected(d)});
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

namespace detail {

inline std::vector<bool> random_bits(std::size_t count, std::mt19937_64& rng) {
    std::vector<bool> bits(count);
    for (std::size_t i = 0; i < count; ++i) bits[i] = rng() & 1u;
    return bits;
}

inline std::vector<bool> local_start_bits(GridDims dims, int restart, std::mt19937_64& rng) {
    const bool grid2d = dims.m >= 2 && dims.n >= 2;
    if (restart == 0)
        return grid2d ? conjectured_orientation(dims).bits : snake_hampath_orientation(dims).bits;
    if (restart == 1 && grid2d && dims.n % 2 == 0) return comb_orientation(dims).bits;
    return random_bits(static_cast<std::size_t>(dims.edge_count()), rng);
}

}  // namespace detail

// Hill climbing in the single-arc-flip neighborhood. Restart 0 starts from
// the conjectured orientation, restart 1 from the comb orientation when it
// exists, the rest from seeded random orientations (mt19937_64, restart r
// seeded with seed+r). Strict improvements are always taken (lowest edge
// index wins ties); up to max_plateau_moves equal-value moves per restart
// escape flat regions. The result is a lower bound on the maximum, never a
// proof.
inline SearchReport local_search_max(GridDims dims, const SearchOptions& opts = {}) {
    require_valid(dims);
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t e = static_cast<std::size_t>(dims.edge_count());
    const int restarts = std::max(1, opts.restarts);

    struct RestartResult {
        int128 best = -1;
        Orientation canon;
        std::uint64_t evaluated = 0;
    };
    std::vector<RestartResult> results(static_cast<std::size_t>(restarts));

    auto run_restart = [&](detail::WienerScratch& scratch, int r) {
        RestartResult res;
        std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(r));
        std::vector<bool> bits = detail::local_start_bits(dims, r, rng);
        int128 current = scratch.wiener_bits(bits);
        ++res.evaluated;
        int plateau_left = opts.max_plateau_moves;
        while (true) {
            int128 best_w = current;
            std::size_t best_edge = e;
            std::uint64_t equal_seen = 0;
            std::size_t equal_pick = e;
            for (std::size_t i = 0; i < e; ++i) {
                bits[i] = !bits[i];
                const int128 w = scratch.wiener_bits(bits);
                ++res.evaluated;
                bits[i] = !bits[i];
                if (w > best_w) {
                    best_w = w;
                    best_edge = i;
                } else if (w == current) {
                    // Reservoir choice keeps one uniformly random equal move.
                    ++equal_seen;
                    if (rng() % equal_seen == 0) equal_pick = i;
                }
            }
            if (best_edge < e) {
                bits[best_edge] = !bits[best_edge];
                current = best_w;
            } else if (equal_pick < e && plateau_left > 0) {
                bits[equal_pick] = !bits[equal_pick];
                --plateau_left;
            } else {
                break;
            }
        }
        res.best = current;
        res.canon = canonical_representative(Orientation{dims, std::move(bits)});
        return res;
    };

    const int workers = std::max(1, std::min(opts.worker_count, restarts));
    if (workers <= 1) {
        detail::WienerScratch scratch(dims);
        for (int r = 0; r < restarts; ++r) results[static_cast<std::size_t>(r)] = run_restart(scratch, r);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    detail::WienerScratch scratch(dims);
                    for (int r = w; r < restarts; r += workers)
                        results[static_cast<std::size_t>(r)] = run_restart(scratch, r);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    SearchReport rep;
    rep.dims = dims;
    rep.strategy = "local";
    rep.proven_maximum = false;
    rep.seed = opts.seed;
    rep.restarts = restarts;
    int128 best = -1;
    for (const auto& r : results) {
        rep.evaluated_count += r.evaluated;
        best = std::max(best, r.best);
    }
    rep.max_wiener = best;
    std::vector<Orientation> canon;
    for (const auto& r : results)
        if (r.best == best) canon.push_back(r.canon);
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    rep.optima_orbit_count = canon.size();
    const std::size_t take = std::min(opts.witness_cap, canon.size());
    for (std::size_t i = 0; i < take; ++i) {
        const Digraph d = materialize(canon[i]);
        if (wiener_index(d) != rep.max_wiener)
            throw std::logic_error("witness failed BFS re-verification");
        rep.witnesses.push_back(SearchWitness{std::move(canon[i]), is_strongly_connected(d)});
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

}  // namespace digrid
