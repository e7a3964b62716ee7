#include "latt/construct.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "latt/errors.hpp"
#include "latt/isometry.hpp"

namespace latt {

Rat EmbeddedLattice::ambient_inner(const VecQ& a, const VecQ& b) const {
    Rat acc(0);
    for (int i = 0; i < ambient_dim; ++i)
        if (a[i] != 0 && b[i] != 0) acc += weights[i] * a[i] * b[i];
    return acc;
}

namespace {

EmbeddedLattice from_basis(int dim, VecQ weights, MatQ basis) {
    EmbeddedLattice out;
    out.ambient_dim = dim;
    out.weights = std::move(weights);
    out.basis = std::move(basis);
    size_t r = out.basis.size();
    out.gram_rows.assign(r, std::vector<Int>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i; j < r; ++j) {
            Rat v = out.ambient_inner(out.basis[i], out.basis[j]);
            if (v.get_den() != 1)
                throw NonIntegralGlue("lattice inner products are not integral");
            out.gram_rows[i][j] = v.get_num();
            out.gram_rows[j][i] = v.get_num();
        }
    return out;
}

MatQ a_basis(int n) {
    MatQ b(n, VecQ(n + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
        b[i][i] = 1;
        b[i][i + 1] = -1;
    }
    return b;
}

MatQ d_basis(int n) {
    MatQ b(n, VecQ(n, Rat(0)));
    for (int i = 0; i + 1 < n; ++i) {
        b[i][i] = 1;
        b[i][i + 1] = -1;
    }
    b[n - 1][n - 2] = 1;
    b[n - 1][n - 1] = 1;
    return b;
}

} // namespace

GlueVector glue_vector(char kind, int n, int i) {
    GlueVector g;
    if (kind == 'A') {
        if (n < 1) throw UnsupportedRank("A_n needs n >= 1");
        if (i < 0 || i > n) throw InvalidGlueIndex("A_n glue index out of range");
        int j = n + 1 - i;
        g.coords.assign(n + 1, Rat(0));
        for (int t = 0; t < j; ++t) g.coords[t] = Rat(i, n + 1);
        for (int t = j; t < n + 1; ++t) g.coords[t] = Rat(-j, n + 1);
        g.norm = Rat(Int(i) * j, n + 1);
        return g;
    }
    if (kind == 'D') {
        if (n < 4) throw UnsupportedRank("D_n needs n >= 4");
        if (i < 0 || i > 3) throw InvalidGlueIndex("D_n glue index out of range");
        g.coords.assign(n, Rat(0));
        switch (i) {
            case 0: g.norm = 0; break;
            case 1:
                for (int t = 0; t < n; ++t) g.coords[t] = Rat(1, 2);
                g.norm = Rat(n, 4);
                break;
            case 2:
                g.coords[n - 1] = 1;
                g.norm = 1;
                break;
            default:
                for (int t = 0; t + 1 < n; ++t) g.coords[t] = Rat(1, 2);
                g.coords[n - 1] = Rat(-1, 2);
                g.norm = Rat(n, 4);
                break;
        }
        return g;
    }
    if (kind == 'E') {
        if (i != 0) throw InvalidGlueIndex("E components take no glue");
        g.coords.assign(root_lattice('E', n).ambient_dim, Rat(0));
        g.norm = 0;
        return g;
    }
    throw UnsupportedRank("unknown root kind");
}

EmbeddedLattice root_lattice(char kind, int n) {
    if (kind == 'A') {
        if (n < 1) throw UnsupportedRank("A_n needs n >= 1");
        return from_basis(n + 1, VecQ(n + 1, Rat(1)), a_basis(n));
    }
    if (kind == 'D') {
        if (n < 4) throw UnsupportedRank("D_n needs n >= 4");
        return from_basis(n, VecQ(n, Rat(1)), d_basis(n));
    }
    if (kind == 'E') {
        // standard glued models: E8 = D8[1], E7 = A7[4], E6 = A5 A1[3 1]
        switch (n) {
            case 8: return build_glue(parse_glue("D8[1]"));
            case 7: return build_glue(parse_glue("A7[4]"));
            case 6: return build_glue(parse_glue("A5 A1[3 1]"));
            default: throw UnsupportedRank("E_n needs n in {6,7,8}");
        }
    }
    throw UnsupportedRank("unknown root kind");
}

std::string GlueSpec::render() const {
    std::ostringstream os;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) os << ' ';
        if (components[i].scalar)
            os << components[i].a;
        else
            os << components[i].kind << components[i].n;
    }
    os << '[';
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) os << ' ';
        if (tokens[i].fraction)
            os << "1/" << tokens[i].d;
        else
            os << tokens[i].index;
    }
    os << ']';
    return os.str();
}

GlueSpec parse_glue(const std::string& raw) {
    std::string text = raw;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.erase(0, 1);
    auto lb = text.find('[');
    auto rb = text.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb || rb + 1 != text.size())
        throw ParseError("glue notation needs trailing [tokens]: " + text);
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::istringstream is(s);
        std::string w;
        while (is >> w) parts.push_back(w);
        return parts;
    };
    GlueSpec spec;
    for (const auto& w : split(text.substr(0, lb))) {
        GlueSpec::Component c{};
        if (w[0] == 'A' || w[0] == 'D' || w[0] == 'E') {
            c.scalar = false;
            c.kind = w[0];
            try {
                size_t used = 0;
                c.n = std::stoi(w.substr(1), &used);
                if (used + 1 != w.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("bad root component: " + w);
            }
        } else {
            c.scalar = true;
            try {
                c.a = Int(w);
            } catch (const std::exception&) {
                throw ParseError("bad scalar component: " + w);
            }
            if (c.a < 1) throw ParseError("scalar component must be positive: " + w);
        }
        spec.components.push_back(c);
    }
    for (const auto& w : split(text.substr(lb + 1, rb - lb - 1))) {
        GlueSpec::Token t{};
        auto slash = w.find('/');
        if (slash == std::string::npos) {
            t.fraction = false;
            try {
                size_t used = 0;
                t.index = std::stoi(w, &used);
                if (used != w.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("bad glue token: " + w);
            }
        } else {
            t.fraction = true;
            if (w.substr(0, slash) != "1")
                throw ParseError("scalar glue tokens must be unit fractions: " + w);
            try {
                t.d = Int(w.substr(slash + 1));
            } catch (const std::exception&) {
                throw ParseError("bad glue token: " + w);
            }
            if (t.d < 1) throw ParseError("bad glue token: " + w);
        }
        spec.tokens.push_back(t);
    }
    if (spec.components.empty() || spec.components.size() != spec.tokens.size())
        throw ParseError("component and token counts differ");
    for (size_t i = 0; i < spec.components.size(); ++i) {
        const auto& c = spec.components[i];
        const auto& t = spec.tokens[i];
        if (c.scalar != t.fraction)
            throw ParseError("token kind does not match component kind at position " +
                             std::to_string(i));
        if (!c.scalar) glue_vector(c.kind, c.n, t.index); // validates range
    }
    return spec;
}

Int glue_order(const GlueSpec& spec) {
    Int order = 1;
    for (size_t i = 0; i < spec.components.size(); ++i) {
        const auto& c = spec.components[i];
        const auto& t = spec.tokens[i];
        Int o = 1;
        if (c.scalar) {
            o = t.d;
        } else if (c.kind == 'A') {
            o = Int(c.n + 1) / gcd(Int(c.n + 1), Int(t.index));
        } else if (c.kind == 'D') {
            if (t.index == 0)
                o = 1;
            else if (t.index == 2)
                o = 2;
            else
                o = c.n % 2 == 0 ? 2 : 4;
        }
        order = lcm(order, o);
    }
    return order;
}

EmbeddedLattice build_glue(const GlueSpec& spec) {
    // assemble component ambients side by side
    std::vector<EmbeddedLattice> parts;
    for (const auto& c : spec.components) {
        if (c.scalar) {
            EmbeddedLattice s;
            s.ambient_dim = 1;
            s.weights = {Rat(c.a)};
            s.basis = {{Rat(1)}};
            s.gram_rows = {{c.a}};
            parts.push_back(std::move(s));
        } else {
            parts.push_back(root_lattice(c.kind, c.n));
        }
    }
    int dim = 0;
    for (const auto& p : parts) dim += p.ambient_dim;
    VecQ weights;
    for (const auto& p : parts) weights.insert(weights.end(), p.weights.begin(), p.weights.end());

    MatQ gens;
    VecQ glue(dim, Rat(0));
    Rat glue_norm(0);
    int off = 0;
    for (size_t ci = 0; ci < parts.size(); ++ci) {
        const auto& part = parts[ci];
        for (const auto& row : part.basis) {
            VecQ v(dim, Rat(0));
            for (int j = 0; j < part.ambient_dim; ++j) v[off + j] = row[j];
            gens.push_back(std::move(v));
        }
        const auto& c = spec.components[ci];
        const auto& t = spec.tokens[ci];
        if (c.scalar) {
            if (c.a % t.d != 0)
                throw NonIntegralGlue("scalar glue part z/" + t.d.get_str() +
                                      " is not in the dual of <" + c.a.get_str() + ">");
            glue[off] = Rat(1) / Rat(t.d);
            glue_norm += Rat(c.a) / Rat(t.d * t.d);
        } else {
            GlueVector gv = glue_vector(c.kind, c.n, t.index);
            for (int j = 0; j < part.ambient_dim; ++j) glue[off + j] = gv.coords[j];
            glue_norm += gv.norm;
        }
        off += part.ambient_dim;
    }
    if (glue_norm.get_den() != 1)
        throw NonIntegralGlue("glue vector has non-integral norm " + glue_norm.get_str());

    // Prefer a basis that keeps the component vectors intact: drop one
    // generator that the rest together with the glue vector still span
    // (scanned from the last component vector backwards). When no single
    // generator is redundant, fall back to the HNF basis of everything.
    Int den = 1;
    for (const auto& g : gens)
        for (const auto& q : g) den = lcm(den, q.get_den());
    for (const auto& q : glue) den = lcm(den, q.get_den());
    auto scaled = [&](const VecQ& v) {
        std::vector<Int> z(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            Rat s = v[i] * Rat(den);
            z[i] = s.get_num();
        }
        return z;
    };
    MatZ all_scaled;
    for (const auto& g : gens) all_scaled.push_back(scaled(g));
    std::vector<Int> glue_scaled = scaled(glue);

    for (int drop = static_cast<int>(gens.size()) - 1; drop >= 0; --drop) {
        MatZ rest;
        for (int i = 0; i < static_cast<int>(gens.size()); ++i)
            if (i != drop) rest.push_back(all_scaled[i]);
        rest.push_back(glue_scaled);
        if (solve_left_int(hnf_rows(rest), all_scaled[drop])) {
            MatQ basis;
            for (int i = 0; i < static_cast<int>(gens.size()); ++i)
                if (i != drop) basis.push_back(gens[i]);
            basis.push_back(glue);
            return from_basis(dim, std::move(weights), std::move(basis));
        }
    }
    MatZ all = all_scaled;
    all.push_back(glue_scaled);
    MatZ h = hnf_rows(all);
    MatQ basis;
    for (const auto& row : h) {
        VecQ v(dim);
        for (int j = 0; j < dim; ++j) v[j] = Rat(row[j]) / Rat(den);
        basis.push_back(std::move(v));
    }
    return from_basis(dim, std::move(weights), std::move(basis));
}

GramMatrix index_p_sublattice(int n, const Int& p, const std::vector<Int>& u) {
    if (n < 1 || !is_prime(p)) throw InvalidParameters("index_p_sublattice: need n >= 1, p prime");
    if (static_cast<int>(u.size()) != n - 1)
        throw InvalidParameters("index_p_sublattice: need n-1 shift entries");
    for (const auto& ui : u)
        if (ui < 0 || ui >= p) throw InvalidParameters("index_p_sublattice: shifts must lie in [0, p)");
    std::vector<std::vector<Int>> g(n, std::vector<Int>(n));
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) g[i][j] = (i == j ? 1 : 0) + u[i] * u[j];
    for (int i = 0; i + 1 < n; ++i) {
        g[i][n - 1] = p * u[i];
        g[n - 1][i] = p * u[i];
    }
    g[n - 1][n - 1] = p * p;
    return GramMatrix(std::move(g));
}

std::vector<GramMatrix> enumerate_index_p_sublattices(int n, const Int& p,
                                                      const EnumBudget& budget) {
    if (n < 1 || !is_prime(p)) throw InvalidParameters("need n >= 1 and p prime");
    Int half = p / 2;
    std::vector<GramMatrix> classes;
    std::vector<Int> u(n - 1, 0);
    while (true) {
        GramMatrix g = index_p_sublattice(n, p, u);
        bool fresh = true;
        for (const auto& c : classes)
            if (isometry_test(c, g, budget)) {
                fresh = false;
                break;
            }
        if (fresh) classes.push_back(std::move(g));
        // next nondecreasing tuple with entries <= p/2
        int i = n - 2;
        while (i >= 0 && u[i] == half) --i;
        if (i < 0) break;
        ++u[i];
        for (int j = i + 1; j < n - 1; ++j) u[j] = u[i];
    }
    return classes;
}

GramMatrix ternary_Iabp(const Int& a, const Int& b, const Int& p) {
    if (!is_prime(p) || a < 0 || a > b || 2 * b > p)
        throw InvalidParameters("ternary_Iabp: need 0 <= a <= b <= p/2, p prime");
    return GramMatrix({{1 + a * a, a * b, a * p}, {a * b, 1 + b * b, b * p}, {a * p, b * p, p * p}});
}

EmbeddedLattice Ank(int n, int k) {
    if (!(1 < k && k <= n - 1)) throw InvalidParameters("Ank: need 1 < k <= n-1");
    MatQ basis(n, VecQ(n, Rat(0)));
    for (int i = 0; i + 1 < n; ++i) {
        basis[i][i] = -1;
        basis[i][i + 1] = 1;
    }
    for (int j = n - k; j < n; ++j) basis[n - 1][j] = -1;
    return from_basis(n, VecQ(n, Rat(1)), std::move(basis));
}

namespace {

GramMatrix build_remark_l29() {
    // A_27 glued with [3] + x/28 and [5] + y/28, where the plane Zx + Zy has
    // Gram ((28*9, -28*13), (-28*13, 28*25)). The plane is realized on two
    // extra ambient axes via its exact rational Cholesky.
    const int dim = 30;
    VecQ weights(dim, Rat(1));
    weights[28] = Rat(252);
    weights[29] = Rat(1568, 9); // 700 - 364^2/252
    VecQ x(dim, Rat(0)), y(dim, Rat(0));
    x[28] = 1;
    y[28] = Rat(-13, 9);
    y[29] = 1;
    MatQ basis = a_basis(27);
    for (auto& row : basis) row.resize(dim, Rat(0));
    GlueVector g3 = glue_vector('A', 27, 3);
    GlueVector g5 = glue_vector('A', 27, 5);
    VecQ r1(dim, Rat(0)), r2(dim, Rat(0));
    for (int j = 0; j < 28; ++j) {
        r1[j] = g3.coords[j];
        r2[j] = g5.coords[j];
    }
    for (int j = 28; j < 30; ++j) {
        r1[j] = x[j] / 28;
        r2[j] = y[j] / 28;
    }
    basis.push_back(std::move(r1));
    basis.push_back(std::move(r2));
    return from_basis(dim, std::move(weights), std::move(basis)).gram();
}

} // namespace

GramMatrix named_lattice(const std::string& name) {
    if (name == "iso1_ternary") return GramMatrix::diagonal({2, 2, 5});
    if (name == "iso2_quinary")
        return orthogonal_sum(
            {GramMatrix::diagonal({1, 2}), build_glue(parse_glue("A2 21[1 1/3]")).gram()});
    if (name == "iso2_quinary_alt")
        return orthogonal_sum({GramMatrix::identity(1), root_lattice('A', 3).gram(),
                               GramMatrix::diagonal({3})});
    if (name == "iso3_senary")
        return orthogonal_sum({GramMatrix::identity(2), root_lattice('A', 3).gram(),
                               GramMatrix::diagonal({3})});
    if (name == "remark_L29") return build_remark_l29();
    throw UnknownName("no catalog lattice named " + name);
}

std::vector<std::string> named_lattice_catalog() {
    return {"iso1_ternary", "iso2_quinary", "iso2_quinary_alt", "iso3_senary", "remark_L29"};
}

} // namespace latt
