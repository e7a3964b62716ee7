#include "latt/represent.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "latt/errors.hpp"

namespace latt {

const char* to_string(RepStatus s) {
    switch (s) {
        case RepStatus::Found: return "found";
        case RepStatus::NotRepresented: return "not_represented";
        default: return "unknown";
    }
}

RepSearcher::RepSearcher(GramMatrix host) : host_(std::move(host)), cached_bound_(-1) {}

void RepSearcher::ensure_bound(const Int& bound, const EnumBudget& budget) {
    if (bound <= cached_bound_) return;
    EnumStats stats;
    by_norm_.clear();
    for (auto& [v, q] : enumerate_vectors(host_, bound, budget, &stats)) {
        by_norm_[q].push_back(std::move(v));
    }
    enum_nodes_ += stats.nodes;
    cached_bound_ = bound;
}

const std::vector<LatticeVector>& RepSearcher::vectors_of_norm(const Int& q,
                                                               const EnumBudget& budget) {
    ensure_bound(q, budget);
    static const std::vector<LatticeVector> empty;
    auto it = by_norm_.find(q);
    return it == by_norm_.end() ? empty : it->second;
}

namespace {

// Column placement order: start from the largest diagonal, then repeatedly
// take the column with the most Gram constraints against already placed
// columns (ties: larger diagonal, then lower index). Keeps the search tree
// pruned from the second column on.
std::vector<int> placement_order(const GramMatrix& target) {
    int m = target.rank();
    std::vector<int> order;
    std::vector<bool> placed(m, false);
    for (int step = 0; step < m; ++step) {
        int best = -1;
        int best_links = -1;
        for (int j = 0; j < m; ++j) {
            if (placed[j]) continue;
            int links = 0;
            for (int t : order)
                if (target.at(j, t) != 0) ++links;
            if (best < 0 || links > best_links ||
                (links == best_links && target.at(j, j) > target.at(best, best))) {
                best = j;
                best_links = links;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

struct ColumnSearch {
    const GramMatrix& host;
    const GramMatrix& target;
    RepSearcher& searcher;
    const EnumBudget& budget;
    std::vector<int> order;
    std::vector<LatticeVector> placed; // images, in placement order
    std::uint64_t nodes = 0;
    std::optional<MatZ> result;

    bool tick() { return ++nodes <= budget.nodes; }

    // true = finished (either found or exhausted), false = budget ran out
    bool descend(size_t depth) {
        if (result) return true;
        int m = target.rank();
        if (static_cast<int>(depth) == m) {
            MatZ t(host.rank(), std::vector<Int>(m));
            for (int d = 0; d < m; ++d)
                for (int i = 0; i < host.rank(); ++i) t[i][order[d]] = placed[d][i];
            result = std::move(t);
            return true;
        }
        int j = order[depth];
        const Int need = target.at(j, j);
        const auto& classes = searcher.vectors_of_norm(need, budget);
        LatticeVector neg(host.rank());
        for (const auto& v : classes) {
            for (int sign = 0; sign < 2; ++sign) {
                if (!tick()) return false;
                const LatticeVector* cand = &v;
                if (sign == 1) {
                    for (int i = 0; i < host.rank(); ++i) neg[i] = -v[i];
                    cand = &neg;
                }
                bool ok = true;
                for (size_t t = 0; t < depth; ++t) {
                    if (host.inner(*cand, placed[t]) != target.at(j, order[t])) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                placed.push_back(*cand);
                bool finished = descend(depth + 1);
                placed.pop_back();
                if (!finished) return false;
                if (result) return true;
            }
        }
        return true;
    }
};

} // namespace

RepOutcome RepSearcher::find(const GramMatrix& target, const EnumBudget& budget) {
    RepOutcome out;
    if (target.rank() > host_.rank()) {
        // no injective form-preserving map into a lower-rank definite lattice
        out.status = RepStatus::NotRepresented;
        return out;
    }
    Int bound = 0;
    for (int j = 0; j < target.rank(); ++j) bound = std::max(bound, target.at(j, j));
    std::uint64_t enum_before = enum_nodes_;
    try {
        ensure_bound(bound, budget);
    } catch (const BudgetExceeded& e) {
        out.status = RepStatus::Unknown;
        out.nodes = e.nodes;
        return out;
    }
    ColumnSearch search{host_, target, *this, budget, placement_order(target), {}, 0, {}};
    bool finished = search.descend(0);
    out.nodes = search.nodes + (enum_nodes_ - enum_before);
    if (!finished) {
        out.status = RepStatus::Unknown;
        return out;
    }
    if (search.result) {
        out.status = RepStatus::Found;
        out.certificate = make_representation(std::move(*search.result), host_, target);
    } else {
        out.status = RepStatus::NotRepresented;
    }
    return out;
}

RepOutcome find_representation(const GramMatrix& target, const GramMatrix& host,
                               const EnumBudget& budget) {
    RepSearcher s(host);
    return s.find(target, budget);
}

namespace {

// ---- congruence oracle mod p^e ------------------------------------------

using i64 = long long;

struct ModContext {
    i64 p;
    int e;
    i64 mod; // p^e
    int n, m;
    std::vector<std::vector<i64>> g;  // host Gram mod p^e
    std::vector<std::vector<i64>> gt; // target Gram mod p^e
    std::uint64_t nodes = 0;
    std::uint64_t budget;

    void tick() {
        if (++nodes > budget) throw BudgetExceeded(nodes);
    }

    i64 norm_mod(i64 x, i64 q) const { return ((x % q) + q) % q; }
};

// Gaussian elimination data for the mod-p linear lifting systems attached to
// one level-0 solution: L(D) = S^t G D + D^t G S with S = T0 (mod p).
struct LiftSystem {
    int rows, cols;
    i64 p;
    std::vector<std::vector<i64>> rref; // reduced system matrix
    std::vector<int> pivot_col;         // per rref row
    std::vector<std::vector<i64>> row_ops; // applied to RHS
    std::vector<std::vector<i64>> kernel;  // basis of solution space of L(D)=0
    bool surjective = false;
};

i64 inv_mod(i64 a, i64 p) {
    i64 t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
    while (newr != 0) {
        i64 q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    return ((t % p) + p) % p;
}

LiftSystem build_lift_system(const ModContext& ctx, const std::vector<std::vector<i64>>& t0) {
    const int n = ctx.n, m = ctx.m;
    const i64 p = ctx.p;
    int rows = m * (m + 1) / 2;
    int cols = n * m;
    // precompute G * t0 columns mod p
    std::vector<std::vector<i64>> gcol(m, std::vector<i64>(n, 0));
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < n; ++i) {
            i64 acc = 0;
            for (int k = 0; k < n; ++k) acc += ctx.g[i][k] % p * (t0[k][a] % p) % p;
            gcol[a][i] = ((acc % p) + p) % p;
        }
    LiftSystem sys;
    sys.rows = rows;
    sys.cols = cols;
    sys.p = p;
    std::vector<std::vector<i64>> mat(rows, std::vector<i64>(cols, 0));
    int r = 0;
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b, ++r)
            for (int i = 0; i < n; ++i) {
                // coefficient of D[i][b] from (S^t G D)_{ab} and of D[i][a]
                // from the transpose part
                mat[r][i * m + b] = (mat[r][i * m + b] + gcol[a][i]) % p;
                mat[r][i * m + a] = (mat[r][i * m + a] + gcol[b][i]) % p;
            }
    // row-reduce, tracking row operations for RHS replay
    sys.row_ops.assign(rows, std::vector<i64>(rows, 0));
    for (int i = 0; i < rows; ++i) sys.row_ops[i][i] = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (mat[i][c] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(mat[rank], mat[piv]);
        std::swap(sys.row_ops[rank], sys.row_ops[piv]);
        i64 inv = inv_mod(mat[rank][c], p);
        for (int j = 0; j < cols; ++j) mat[rank][j] = mat[rank][j] * inv % p;
        for (int j = 0; j < rows; ++j) sys.row_ops[rank][j] = sys.row_ops[rank][j] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            i64 f = ((mat[i][c] % p) + p) % p;
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j) mat[i][j] = ((mat[i][j] - f * mat[rank][j]) % p + p) % p;
            for (int j = 0; j < rows; ++j)
                sys.row_ops[i][j] = ((sys.row_ops[i][j] - f * sys.row_ops[rank][j]) % p + p) % p;
        }
        sys.pivot_col.push_back(c);
        ++rank;
    }
    sys.rref = std::move(mat);
    sys.surjective = (rank == rows);
    // kernel basis from free columns
    std::vector<bool> is_pivot(cols, false);
    for (int c : sys.pivot_col) is_pivot[c] = true;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<i64> k(cols, 0);
        k[c] = 1;
        for (size_t i = 0; i < sys.pivot_col.size(); ++i)
            k[sys.pivot_col[i]] = ((-sys.rref[i][c]) % p + p) % p;
        sys.kernel.push_back(std::move(k));
    }
    return sys;
}

// particular solution of L(D) = rhs (mod p), or nullopt
std::optional<std::vector<i64>> solve_lift(const LiftSystem& sys, const std::vector<i64>& rhs) {
    const i64 p = sys.p;
    std::vector<i64> b(sys.rows);
    for (int i = 0; i < sys.rows; ++i) {
        i64 acc = 0;
        for (int j = 0; j < sys.rows; ++j) acc = (acc + sys.row_ops[i][j] * (rhs[j] % p)) % p;
        b[i] = ((acc % p) + p) % p;
    }
    int rank = static_cast<int>(sys.pivot_col.size());
    for (int i = rank; i < sys.rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<i64> x(sys.cols, 0);
    for (int i = 0; i < rank; ++i) x[sys.pivot_col[i]] = b[i];
    return x;
}

struct ModSearch {
    ModContext& ctx;
    const LiftSystem* sys = nullptr;

    // residue matrix of T^t G T - Gt over p^{k} -> entries / p^k mod p
    std::vector<i64> residue(const std::vector<std::vector<i64>>& s, i64 pk) const {
        const int n = ctx.n, m = ctx.m;
        std::vector<i64> r(static_cast<size_t>(m) * (m + 1) / 2);
        int idx = 0;
        i64 cap = pk * ctx.p;
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b, ++idx) {
                i64 acc = 0;
                for (int i = 0; i < n; ++i) {
                    i64 gs = 0;
                    for (int k = 0; k < n; ++k) gs = (gs + ctx.g[i][k] * s[k][b]) % cap;
                    acc = (acc + s[i][a] * gs) % cap;
                }
                i64 diff = ctx.norm_mod(ctx.gt[a][b] - acc, cap);
                // exact divisibility by p^k holds by the level invariant
                r[idx] = (diff / pk) % ctx.p;
            }
        return r;
    }

    bool lift(std::vector<std::vector<i64>>& s, int k, i64 pk) {
        ctx.tick();
        auto rhs = residue(s, pk);
        auto part = solve_lift(*sys, rhs);
        if (!part) return false;
        if (k == ctx.e - 1) return true;
        size_t kd = sys->kernel.size();
        std::vector<i64> lambda(kd, 0);
        // odometer over the kernel space, ascending
        while (true) {
            std::vector<std::vector<i64>> s2 = s;
            for (int i = 0; i < ctx.n; ++i)
                for (int j = 0; j < ctx.m; ++j) {
                    i64 d = (*part)[i * ctx.m + j];
                    for (size_t t = 0; t < kd; ++t)
                        if (lambda[t]) d += lambda[t] * sys->kernel[t][i * ctx.m + j];
                    s2[i][j] = ctx.norm_mod(s[i][j] + d % ctx.p * pk, pk * ctx.p);
                }
            if (lift(s2, k + 1, pk * ctx.p)) return true;
            size_t t = 0;
            while (t < kd && ++lambda[t] == ctx.p) lambda[t++] = 0;
            if (t == kd) break;
        }
        return false;
    }

    bool process_level0(const std::vector<std::vector<i64>>& t0) {
        if (ctx.e == 1) return true;
        LiftSystem local = build_lift_system(ctx, t0);
        if (local.surjective) return true; // Hensel: every digit system is solvable
        sys = &local;
        std::vector<std::vector<i64>> s = t0;
        return lift(s, 1, ctx.p);
    }

    // enumerate level-0 column assignments mod p
    bool columns(std::vector<std::vector<i64>>& cols, int j) {
        const int n = ctx.n, m = ctx.m;
        const i64 p = ctx.p;
        if (j == m) {
            std::vector<std::vector<i64>> t0(n, std::vector<i64>(m));
            for (int i = 0; i < n; ++i)
                for (int c = 0; c < m; ++c) t0[i][c] = cols[c][i];
            return process_level0(t0);
        }
        std::vector<i64> v(n, 0);
        while (true) {
            ctx.tick();
            bool ok = true;
            i64 q = 0;
            for (int a = 0; a < n && ok; ++a) {
                if (v[a] == 0) continue;
                i64 row = 0;
                for (int b = 0; b < n; ++b) row = (row + ctx.g[a][b] * v[b]) % p;
                q = (q + v[a] * row) % p;
            }
            if (ok && q % p != ctx.norm_mod(ctx.gt[j][j], p)) ok = false;
            for (int t = 0; t < j && ok; ++t) {
                i64 ip = 0;
                for (int a = 0; a < n; ++a) {
                    if (v[a] == 0) continue;
                    i64 row = 0;
                    for (int b = 0; b < n; ++b) row = (row + ctx.g[a][b] * cols[t][b]) % p;
                    ip = (ip + v[a] * row) % p;
                }
                if (ip != ctx.norm_mod(ctx.gt[j][t], p)) ok = false;
            }
            if (ok) {
                cols.push_back(v);
                if (columns(cols, j + 1)) return true;
                cols.pop_back();
            }
            int t = 0;
            while (t < n && ++v[t] == p) v[t++] = 0;
            if (t == n) return false;
        }
    }
};

} // namespace

bool rep_mod_pk(const GramMatrix& target, const GramMatrix& host, const Int& p, int e,
                const ModOptions& opts) {
    if (!is_prime(p) || e < 1) throw InvalidParameters("rep_mod_pk: need prime p, e >= 1");
    Int modulus = 1;
    for (int i = 0; i < e; ++i) modulus *= p;
    if (modulus > opts.max_modulus)
        throw SizeExceeded("rep_mod_pk: p^e exceeds configured size");
    Int level0 = 1;
    for (int i = 0; i < host.rank(); ++i) {
        level0 *= p;
        if (level0 > opts.max_level0)
            throw SizeExceeded("rep_mod_pk: p^rank exceeds configured size");
    }
    ModContext ctx;
    ctx.p = p.get_si();
    ctx.e = e;
    ctx.mod = modulus.get_si();
    ctx.n = host.rank();
    ctx.m = target.rank();
    ctx.budget = opts.node_budget;
    ctx.g.assign(ctx.n, std::vector<i64>(ctx.n));
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j) {
            Int r = host.at(i, j) % modulus;
            if (r < 0) r += modulus;
            ctx.g[i][j] = r.get_si();
        }
    ctx.gt.assign(ctx.m, std::vector<i64>(ctx.m));
    for (int i = 0; i < ctx.m; ++i)
        for (int j = 0; j < ctx.m; ++j) {
            Int r = target.at(i, j) % modulus;
            if (r < 0) r += modulus;
            ctx.gt[i][j] = r.get_si();
        }
    ModSearch search{ctx};
    std::vector<std::vector<i64>> cols;
    return search.columns(cols, 0);
}

// ---- root sublattice ------------------------------------------------------

const char* to_string(RootComponent::Kind k) {
    switch (k) {
        case RootComponent::Kind::I1: return "I1";
        case RootComponent::Kind::A: return "A";
        case RootComponent::Kind::D: return "D";
        default: return "E";
    }
}

RootDecomposition root_sublattice(const GramMatrix& host, const EnumBudget& budget) {
    auto short_vectors = enumerate_vectors(host, 2, budget);
    std::vector<LatticeVector> units, roots;
    for (auto& [v, q] : short_vectors) (q == 1 ? units : roots).push_back(v);

    // a norm-2 vector is decomposable iff it splits as a sum of two
    // orthogonal norm-1 vectors; those belong to I_1 + I_1 pieces
    auto decomposable = [&](const LatticeVector& w) {
        for (const auto& u : units) {
            Int b = host.inner(u, w);
            if (b != 1 && b != -1) continue;
            LatticeVector rest(w.size());
            for (size_t i = 0; i < w.size(); ++i)
                rest[i] = b == 1 ? w[i] - u[i] : w[i] + u[i];
            if (host.norm(rest) == 1) return true;
        }
        return false;
    };

    std::vector<LatticeVector> gens = units;
    for (const auto& w : roots)
        if (!decomposable(w)) gens.push_back(w);

    // connected components: edge iff nonzero inner product
    size_t k = gens.size();
    std::vector<size_t> parent(k);
    for (size_t i = 0; i < k; ++i) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            if (host.inner(gens[i], gens[j]) != 0) parent[find(i)] = find(j);

    std::map<size_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < k; ++i) groups[find(i)].push_back(i);

    // deterministic component order: by canonical order of first member
    std::vector<std::vector<size_t>> ordered;
    for (auto& [root, members] : groups) ordered.push_back(members);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    RootDecomposition out;
    for (const auto& members : ordered) {
        MatZ rows;
        for (size_t i : members) rows.push_back(gens[i]);
        MatZ basis = hnf_rows(rows);
        int r = static_cast<int>(basis.size());
        std::vector<std::vector<Int>> gram(r, std::vector<Int>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) gram[i][j] = host.inner(basis[i], basis[j]);
        Int det = det_bareiss(gram);
        std::uint64_t n1 = 0, n2 = 0;
        for (const auto& [v, q] : short_vectors)
            if (solve_left_int(basis, v)) (q == 1 ? n1 : n2) += 2;
        RootComponent comp{RootComponent::Kind::I1, r, std::move(basis), gram, n1, n2};
        bool ok = false;
        if (r == 1 && det == 1) {
            comp.kind = RootComponent::Kind::I1;
            ok = (n1 == 2);
        } else if (det == r + 1) {
            comp.kind = RootComponent::Kind::A;
            ok = (n1 == 0 && n2 == static_cast<std::uint64_t>(r) * (r + 1));
        } else if (r >= 4 && det == 4) {
            comp.kind = RootComponent::Kind::D;
            ok = (n1 == 0 && n2 == 2 * static_cast<std::uint64_t>(r) * (r - 1));
        } else if ((r == 6 && det == 3) || (r == 7 && det == 2) || (r == 8 && det == 1)) {
            comp.kind = RootComponent::Kind::E;
            ok = (n1 == 0 && n2 == (r == 6 ? 72u : r == 7 ? 126u : 240u));
        }
        if (!ok)
            throw UnclassifiableComponent("root component of rank " + std::to_string(r) +
                                          " does not match any A/D/E/I1 profile");
        out.components.push_back(std::move(comp));
    }
    return out;
}

const RootComponent& component_containing(const RootDecomposition& decomp,
                                          const std::vector<LatticeVector>& S) {
    for (const auto& comp : decomp.components) {
        bool all = true;
        for (const auto& s : S)
            if (!solve_left_int(comp.basis, s)) {
                all = false;
                break;
            }
        if (all) return comp;
    }
    throw NotInRootSublattice("no single root component contains the given vectors");
}

} // namespace latt
