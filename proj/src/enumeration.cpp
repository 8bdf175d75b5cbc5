#include "hyp5/enumeration.hpp"

#include <algorithm>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "hyp5/f2.hpp"

namespace hyp5 {

namespace {

constexpr int kCheckpointVersion = 1;

std::uint32_t k5_orbit_stabilizer_basis(const FaceLattice& L, int f, std::vector<std::uint32_t>& basis) {
    f2::Basis b;
    const auto& verts = L.faces[f].vertices;
    for (std::uint32_t k = 1; k < 32; ++k) {
        std::vector<int> img;
        for (int v : verts) img.push_back(L.vertex_id(k5_apply({std::uint8_t(k)}, L.vertices[v])));
        std::sort(img.begin(), img.end());
        if (img == verts) b.insert(k);
    }
    basis.clear();
    for (int bit = 31; bit >= 0; --bit)
        if (b.by_lead[bit]) basis.push_back(b.by_lead[bit]);
    return static_cast<std::uint32_t>(b.rank);
}

std::uint16_t groups_of_face(const FaceLattice& L, int f) {
    std::uint16_t g = 0;
    for (int s : L.faces[f].sides) g |= std::uint16_t(1u << group_of_side(s));
    return g;
}

f2::Basis basis_from(const std::vector<std::uint32_t>& v) {
    f2::Basis b;
    for (auto x : v) b.insert(x);
    return b;
}

// Compiled form of the conditions used on the hot path.
struct Compiled {
    struct Cond {
        std::vector<int> positions;           // ascending code positions
        std::array<std::uint8_t, 32> reduced;  // digit -> reduced twist
        int target;
    };
    std::vector<Cond> conds;

    explicit Compiled(const std::vector<CycleCondition>& cs) {
        for (const auto& c : cs) {
            Cond k;
            for (int p = 0; p < 11; ++p)
                if (c.groups >> p & 1) k.positions.push_back(p);
            auto b = basis_from(c.stabilizer);
            for (int d = 0; d < 32; ++d) k.reduced[d] = static_cast<std::uint8_t>(b.reduce(d));
            k.target = c.target;
            conds.push_back(std::move(k));
        }
    }

    // Search order over code positions; `step_of[p]` is the inverse.
    std::array<int, 11> order{};
    std::array<int, 11> step_of{};
    std::array<std::vector<int>, 11> at_step;

    void set_order(const std::array<int, 11>& o) {
        order = o;
        for (int i = 0; i < 11; ++i) step_of[o[i]] = i;
        for (auto& v : at_step) v.clear();
        for (int id = 0; id < static_cast<int>(conds.size()); ++id)
            for (int p : conds[id].positions) at_step[step_of[p]].push_back(id);
    }

    // Checks every condition touching the digit placed at `step`, given
    // that the digits of steps 0..step are assigned.
    bool ok(const std::uint8_t* digits, int step) const {
        for (int id : at_step[step]) {
            const Cond& c = conds[id];
            std::uint32_t v[11];
            int n = 0, pending = 0;
            for (int q : c.positions) {
                if (step_of[q] <= step)
                    v[n++] = c.reduced[digits[q]];
                else
                    ++pending;
            }
            const int r = f2::rank(v, n);
            if (r > c.target || r + pending < c.target) return false;
        }
        return true;
    }
};

// Union of a span (as a 32-bit membership mask over F_2^5) with its
// translate by v.
inline std::uint32_t extend_span(std::uint32_t span, std::uint32_t v) {
    static constexpr std::uint32_t lo[5] = {0x55555555u, 0x33333333u, 0x0F0F0F0Fu, 0x00FF00FFu, 0x0000FFFFu};
    std::uint32_t t = span;
    for (int b = 0; b < 5; ++b)
        if (v >> b & 1) t = ((t & lo[b]) << (1 << b)) | ((t >> (1 << b)) & lo[b]);
    return span | t;
}

struct Searcher {
    const Compiled& comp;
    std::vector<std::uint8_t> alphabet;
    std::uint8_t digits[11]{};
    EnumerationStats stats;
    std::vector<std::uint64_t>* sink;
    std::vector<std::uint32_t> span;                 // per condition
    std::array<std::vector<int>, 11> pending_after;  // [step][k] for at_step[step][k]

    Searcher(const Compiled& c, std::vector<std::uint8_t> alpha, std::vector<std::uint64_t>* out)
        : comp(c), alphabet(std::move(alpha)), sink(out), span(c.conds.size(), 1u) {
        for (int st = 0; st < 11; ++st)
            for (int id : comp.at_step[st]) {
                int pend = 0;
                for (int q : comp.conds[id].positions) pend += comp.step_of[q] > st;
                pending_after[st].push_back(pend);
            }
    }

    // Seeds the spans with the digits of steps < first.
    void seed(int first) {
        for (int st = 0; st < first; ++st)
            for (int id : comp.at_step[st])
                span[id] = extend_span(span[id], comp.conds[id].reduced[digits[comp.order[st]]]);
    }

    void run(int step) {
        if (step == 11) {
            std::uint64_t v = 0;
            for (auto d : digits) v = v << 5 | d;
            sink->push_back(v);
            return;
        }
        const int p = comp.order[step];
        const auto& ids = comp.at_step[step];
        const auto& pend = pending_after[step];
        std::uint32_t saved[160];
        for (std::size_t k = 0; k < ids.size(); ++k) saved[k] = span[ids[k]];
        for (auto d : alphabet) {
            digits[p] = d;
            ++stats.nodes;
            bool ok = true;
            for (std::size_t k = 0; k < ids.size(); ++k) {
                const auto& c = comp.conds[ids[k]];
                const std::uint32_t ns = extend_span(saved[k], c.reduced[d]);
                const int r = __builtin_ctz(static_cast<unsigned>(__builtin_popcount(ns)));
                if (r > c.target || r + pend[k] < c.target) {
                    ok = false;
                    break;
                }
                span[ids[k]] = ns;
            }
            if (ok) run(step + 1);
            else ++stats.prunes;
        }
        for (std::size_t k = 0; k < ids.size(); ++k) span[ids[k]] = saved[k];
    }
};

struct Checkpoint {
    std::string prefix;
    std::size_t next = 0;
    std::uint64_t count = 0;
    std::uint64_t offset = 0;
};

void write_checkpoint(const std::string& path, const Checkpoint& c) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        os << "hyp5-enumeration-checkpoint " << kCheckpointVersion << "\n"
           << "prefix " << (c.prefix.empty() ? "-" : c.prefix) << "\n"
           << "next_subtree " << c.next << "\n"
           << "count " << c.count << "\n"
           << "offset " << c.offset << "\n";
        if (!os) throw CheckpointError("cannot write checkpoint " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

bool read_checkpoint(const std::string& path, Checkpoint& c) {
    std::ifstream is(path);
    if (!is || is.peek() == std::ifstream::traits_type::eof()) return false;
    std::string magic, key;
    int version = 0;
    if (!(is >> magic >> version) || magic != "hyp5-enumeration-checkpoint")
        throw CheckpointError("not a checkpoint file: " + path);
    if (version != kCheckpointVersion) throw CheckpointError("unsupported checkpoint version");
    std::string prefix;
    if (!(is >> key >> prefix) || key != "prefix") throw CheckpointError("corrupt checkpoint (prefix)");
    c.prefix = prefix == "-" ? "" : prefix;
    if (!(is >> key >> c.next) || key != "next_subtree") throw CheckpointError("corrupt checkpoint (next_subtree)");
    if (!(is >> key >> c.count) || key != "count") throw CheckpointError("corrupt checkpoint (count)");
    if (!(is >> key >> c.offset) || key != "offset") throw CheckpointError("corrupt checkpoint (offset)");
    if (c.offset != c.count * 12) throw CheckpointError("corrupt checkpoint (offset/count mismatch)");
    return true;
}

}  // namespace

std::vector<CycleCondition> cycle_conditions(const FaceLattice& L) {
    std::map<std::tuple<std::uint16_t, std::vector<std::uint32_t>, int>, CycleCondition> uniq;
    for (int d = 0; d <= 4; ++d)
        for (int f : L.by_dim[d]) {
            if (d == 0 && L.ideal[L.faces[f].vertices[0]]) continue;
            CycleCondition c;
            c.dim = d;
            c.type = L.faces[f].type;
            c.groups = groups_of_face(L, f);
            k5_orbit_stabilizer_basis(L, f, c.stabilizer);
            c.target = 5 - d;
            c.example_face = f;
            uniq.emplace(std::make_tuple(c.groups, c.stabilizer, c.target), c);
        }
    std::vector<CycleCondition> out;
    for (auto& [k, c] : uniq) out.push_back(std::move(c));
    return out;
}

const std::vector<FaceOrbitData>& face_orbit_data(const FaceLattice& L) {
    static std::map<const FaceLattice*, std::vector<FaceOrbitData>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto& d = cache[&L];
    if (d.empty()) {
        d.resize(L.faces.size());
        for (int f = 0; f < static_cast<int>(L.faces.size()); ++f) {
            if (L.faces[f].dim == 5) continue;
            d[f].groups = groups_of_face(L, f);
            k5_orbit_stabilizer_basis(L, f, d[f].stabilizer);
        }
    }
    return d;
}

std::vector<int> twist_orbit_cycle_sizes(const PairingCode& code, const FaceLattice& L) {
    const auto& data = face_orbit_data(L);
    std::vector<int> sizes(L.faces.size(), 0);
    for (int f = 0; f < static_cast<int>(L.faces.size()); ++f) {
        if (L.faces[f].dim == 5) continue;
        f2::Basis b = basis_from(data[f].stabilizer);
        const int s0 = b.rank;
        for (int p = 0; p < 11; ++p)
            if (data[f].groups >> p & 1) b.insert(code.digits[p]);
        sizes[f] = 1 << (b.rank - s0);
    }
    return sizes;
}

bool satisfies_cycle_conditions(const PairingCode& code, const std::vector<CycleCondition>& conds) {
    for (const auto& c : conds) {
        f2::Basis b = basis_from(c.stabilizer);
        const int s0 = b.rank;
        for (int p = 0; p < 11; ++p)
            if (c.groups >> p & 1) b.insert(code.digits[p]);
        if (b.rank - s0 != c.target) return false;
    }
    return true;
}

EnumerationResult enumerate_proper_orientable(const EnumerationOptions& opts) {
    const auto& L = q5_lattice();
    Compiled comp(cycle_conditions(L));

    std::vector<std::uint8_t> alphabet;
    for (int d = 0; d < 32; ++d)
        if (!opts.orientable_prefilter || (__builtin_popcount(d) & 1)) alphabet.push_back(std::uint8_t(d));

    std::vector<std::uint8_t> fixed;
    for (char ch : opts.prefix) fixed.push_back(k5_decode(ch).mask);
    if (fixed.size() > 11) throw std::invalid_argument("prefix longer than a code");

    // Subtree roots: valid assignments of the first max(2, |prefix|) digits.
    // Below the roots the small-side digit goes first; it meets the most
    // conditions. Each subtree is sorted afterwards to restore code order.
    const int root_len = std::max<int>(2, static_cast<int>(fixed.size()));
    {
        std::array<int, 11> order{};
        int n = 0;
        for (int p = 0; p < root_len; ++p) order[n++] = p;
        if (root_len < 11) order[n++] = 10;
        for (int p = root_len; p < 10; ++p) order[n++] = p;
        comp.set_order(order);
    }
    std::vector<std::vector<std::uint8_t>> roots;
    {
        std::vector<std::uint8_t> cur(root_len);
        std::function<void(int)> gen = [&](int p) {
            if (p == root_len) {
                roots.push_back(cur);
                return;
            }
            std::vector<std::uint8_t> opts_here;
            if (p < static_cast<int>(fixed.size()))
                opts_here = {fixed[p]};
            else
                opts_here = alphabet;
            for (auto d : opts_here) {
                cur[p] = d;
                if (comp.ok(cur.data(), p)) gen(p + 1);
            }
        };
        if (root_len <= 11) gen(0);
    }

    Checkpoint ck;
    ck.prefix = opts.prefix;
    std::ofstream out;
    if (!opts.checkpoint_path.empty() && read_checkpoint(opts.checkpoint_path, ck)) {
        if (ck.prefix != opts.prefix) throw CheckpointError("checkpoint was written for a different prefix");
        if (ck.next > roots.size()) throw CheckpointError("checkpoint frontier out of range");
        if (opts.out_path.empty()) throw CheckpointError("resuming requires the code log");
        if (!std::filesystem::exists(opts.out_path) || std::filesystem::file_size(opts.out_path) < ck.offset)
            throw CheckpointError("code log shorter than checkpoint offset");
        std::filesystem::resize_file(opts.out_path, ck.offset);
        out.open(opts.out_path, std::ios::app | std::ios::binary);
    } else {
        ck = Checkpoint{opts.prefix, 0, 0, 0};
        if (!opts.out_path.empty()) out.open(opts.out_path, std::ios::trunc | std::ios::binary);
    }

    EnumerationResult res;
    res.count = ck.count;
    if (opts.keep_codes && ck.count > 0) {
        // Earlier subtrees come from the log written before the interruption.
        out.flush();
        res.codes = read_code_log(opts.out_path);
    }

    const std::size_t total = roots.size();
    std::size_t stop = total;
    if (opts.max_subtrees > 0) stop = std::min(total, ck.next + static_cast<std::size_t>(opts.max_subtrees));

    std::vector<std::vector<std::uint64_t>> results(total);
    std::vector<EnumerationStats> stats(total);
    std::vector<char> ready(total, 0);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next_task{ck.next};

    auto worker = [&] {
        for (;;) {
            const std::size_t t = next_task.fetch_add(1);
            if (t >= stop) return;
            Searcher s(comp, alphabet, &results[t]);
            std::copy(roots[t].begin(), roots[t].end(), s.digits);
            s.seed(root_len);
            s.run(root_len);
            std::sort(results[t].begin(), results[t].end());
            {
                std::lock_guard<std::mutex> lk(mu);
                stats[t] = s.stats;
                ready[t] = 1;
            }
            cv.notify_one();
        }
    };
    const int jobs = std::max(1, opts.jobs);
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);

    // Ordered merge on the calling thread.
    for (std::size_t t = ck.next; t < stop; ++t) {
        {
            std::unique_lock<std::mutex> lk(mu);
            cv.wait(lk, [&] { return ready[t] != 0; });
        }
        auto& codes = results[t];
        if (out.is_open()) {
            std::string buf;
            buf.reserve(codes.size() * 12);
            for (auto v : codes) {
                buf += emit_code(PairingCode::unpack(v));
                buf += '\n';
            }
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            out.flush();
        }
        res.count += codes.size();
        res.stats.nodes += stats[t].nodes;
        res.stats.prunes += stats[t].prunes;
        if (opts.keep_codes) res.codes.insert(res.codes.end(), codes.begin(), codes.end());
        std::vector<std::uint64_t>().swap(codes);
        ck.next = t + 1;
        ck.count = res.count;
        ck.offset = res.count * 12;
        if (!opts.checkpoint_path.empty()) write_checkpoint(opts.checkpoint_path, ck);
        if (opts.progress) opts.progress(static_cast<int>(t + 1), static_cast<int>(total), res.count);
    }
    for (auto& th : pool) th.join();
    res.complete = stop == total;
    return res;
}

std::vector<std::uint64_t> read_code_log(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open code log " + path);
    std::vector<std::uint64_t> codes;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        codes.push_back(parse_code(line).pack());
    }
    return codes;
}

GroupingReport verify_grouping_necessity(std::uint64_t node_budget) {
    const auto& L = q5_lattice();
    const auto& Q = L.polytope;
    const int nf = static_cast<int>(L.faces.size());

    // Faces of each side, and the face map of every K5 element.
    std::vector<std::vector<int>> side_faces(72);
    for (int f = 0; f < nf; ++f)
        if (L.faces[f].dim < 5)
            for (int s : L.faces[f].sides) side_faces[s].push_back(f);
    std::vector<std::vector<int>> act(32, std::vector<int>(nf));
    for (int k = 0; k < 32; ++k)
        for (int f = 0; f < nf; ++f) {
            if (L.faces[f].dim == 5) {
                act[k][f] = f;
                continue;
            }
            std::vector<int> img;
            for (int v : L.faces[f].vertices) img.push_back(L.vertex_id(k5_apply({std::uint8_t(k)}, L.vertices[v])));
            std::sort(img.begin(), img.end());
            act[k][f] = L.find(img);
        }
    std::vector<std::vector<int>> partner_of(72, std::vector<int>(32));
    for (int s = 0; s < 72; ++s)
        for (int k = 0; k < 32; ++k) partner_of[s][k] = side_with_normal(Q, k5_apply({std::uint8_t(k)}, Q.sides[s].normal));

    // Union-find with size tracking and an undo log.
    std::vector<int> parent(nf), size(nf, 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::pair<int, int>> undo;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    auto limit = [&](int f) { return 1 << (5 - L.faces[f].dim); };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return true;
        if (size[a] < size[b]) std::swap(a, b);
        if (L.faces[a].type != L.faces[b].type) return false;
        if (size[a] + size[b] > limit(a) && !L.ideal[L.faces[a].vertices[0]]) return false;
        parent[b] = a;
        size[a] += size[b];
        undo.emplace_back(a, b);
        return true;
    };
    auto rollback = [&](std::size_t mark) {
        while (undo.size() > mark) {
            auto [a, b] = undo.back();
            undo.pop_back();
            parent[b] = b;
            size[a] -= size[b];
        }
    };

    GroupingReport rep;
    std::array<int, 72> twist;
    twist.fill(-1);
    bool budget_hit = false;

    std::function<void(int)> dfs = [&](int s) {
        if (budget_hit) return;
        while (s < 72 && twist[s] >= 0) ++s;
        if (s == 72) {
            // Class sizes must now be exact.
            std::map<int, int> cnt;
            for (int f = 0; f < nf; ++f)
                if (L.faces[f].dim < 5) ++cnt[find(f)];
            for (auto [r, c] : cnt) {
                if (L.faces[r].dim == 0 && L.ideal[L.faces[r].vertices[0]]) continue;
                if (c != limit(r)) return;
            }
            ++rep.proper_found;
            bool grouped = true;
            for (int i = 0; i < 72; ++i)
                if (twist[i] != twist[group_of_side(i) == 10 ? 40 : (i / 4) * 4]) grouped = false;
            if (!grouped) ++rep.grouping_violations;
            return;
        }
        for (int k = 1; k < 32; ++k) {
            if (!(__builtin_popcount(k) & 1)) continue;
            const int j = partner_of[s][k];
            if (twist[j] >= 0) continue;
            if (++rep.nodes > node_budget) {
                budget_hit = true;
                return;
            }
            const std::size_t mark = undo.size();
            bool ok = true;
            for (int side : {s, j}) {
                for (int f : side_faces[side])
                    if (!unite(f, act[k][f])) {
                        ok = false;
                        break;
                    }
                if (!ok || side == j) break;
            }
            if (ok) {
                twist[s] = twist[j] = k;
                dfs(s + 1);
                twist[s] = twist[j] = -1;
            }
            rollback(mark);
            if (budget_hit) return;
        }
    };
    dfs(0);
    rep.complete = !budget_hit;
    return rep;
}

}  // namespace hyp5
